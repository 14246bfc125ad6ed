"""Monads and the monad induced by an adjunction."""
from catkit.core import (NatTrans, ValidationReport, compose_functors,
                         functor_product, identity_functor, identity_nat,
                         nat_product, validate_functor, validate_nat_trans)


class Monad:
    def __init__(self, name, base, endo, mult, unit, factors=None):
        self.name = name
        self.base = base
        self.endo = endo
        self.mult = mult
        self.unit = unit
        self.factors = factors

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Monad):
            return NotImplemented
        return (self.base == other.base and self.endo == other.endo
                and self.mult == other.mult and self.unit == other.unit)

    __hash__ = object.__hash__

    def __repr__(self):
        return f"Monad({self.name!r} on {self.base.name})"


def validate_monad(m):
    rep = ValidationReport(f"monad {m.name}")
    S, C = m.endo, m.base
    if not (S.dom == C and S.cod == C):
        rep.add("endofunctor", (S.name,), structural=True)
        return rep
    rep.violations += validate_functor(S).violations
    if rep.violations:
        return rep
    SS = compose_functors(S, S)
    if not (m.mult.source.same_maps(SS) and m.mult.target.same_maps(S)):
        rep.add("mult-shape", (m.mult.name,), structural=True)
    if not (m.unit.source.same_maps(identity_functor(C)) and m.unit.target.same_maps(S)):
        rep.add("unit-shape", (m.unit.name,), structural=True)
    if rep.violations:
        return rep
    for t in (m.mult, m.unit):
        rep.violations += validate_nat_trans(t).violations
    if rep.violations:
        return rep
    mu, eta = m.mult, m.unit
    for x in C.objects:
        sx = S.ob(x)
        if C.compose(mu[x], S.ar(mu[x])) != C.compose(mu[x], mu[sx]):
            rep.add("associativity", (x,))
        if C.compose(mu[x], S.ar(eta[x])) != C.id(sx):
            rep.add("unit-left", (x,))
        if C.compose(mu[x], eta[sx]) != C.id(sx):
            rep.add("unit-right", (x,))
    return rep


def identity_monad(cat):
    one = identity_functor(cat)
    i = identity_nat(one)
    return Monad(f"1_{cat.name}", cat, one, i, i)


def product_monad(a, b):
    S = functor_product(a.endo, b.endo)
    mult = nat_product(a.mult, b.mult)
    unit = nat_product(a.unit, b.unit)
    mult = NatTrans(mult.name, compose_functors(S, S), S, mult.components)
    unit = NatTrans(unit.name, identity_functor(S.dom), S, unit.components)
    return Monad(f"({a.name}x{b.name})", S.dom, S, mult, unit, factors=(a, b))


def monad_from_adjunction(adj):
    """``(C, R L, R eps L, eta)``."""
    L, R = adj.left, adj.right
    S = compose_functors(R, L)
    mult = R * adj.counit * L
    mult = NatTrans(f"{R.name}{adj.counit.name}{L.name}", compose_functors(S, S), S,
                    mult.components)
    unit = NatTrans(adj.unit.name, identity_functor(L.dom), S, adj.unit.components)
    factors = None
    if adj.factors:
        factors = tuple(monad_from_adjunction(a) for a in adj.factors)
    return Monad(f"{R.name}{L.name}", L.dom, S, mult, unit, factors=factors)
