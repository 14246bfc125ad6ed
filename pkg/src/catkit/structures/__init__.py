"""Adjunctions, monads and Eilenberg-Moore categories."""
from catkit.structures.adjunction import (Adjunction, identity_adjunction,
                                          product_adjunction, validate_adjunction)
from catkit.structures.eilenberg_moore import (EMBundle, EMCat, algebra_id,
                                               algebra_mor_id, comparison_functor,
                                               em_category, enumerate_algebras,
                                               is_algebra, reflects_isomorphisms)
from catkit.structures.monad import (Monad, identity_monad, monad_from_adjunction,
                                     product_monad, validate_monad)
from catkit.structures.search import find_right_adjoint
