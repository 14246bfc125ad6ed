"""Finite category theory engine for Hopf adjunctions and Hopf monads."""
__version__ = "0.1.0"
