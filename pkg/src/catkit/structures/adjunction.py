"""Adjunctions given by unit and counit."""
from catkit.errors import StructuralError
from catkit.core import (ValidationReport, compose_functors, identity_functor,
                         identity_nat, nat_product, functor_product,
                         validate_functor, validate_nat_trans)


class Adjunction:
    """``left: C -> X`` left adjoint to ``right: X -> C``."""

    def __init__(self, name, left, right, unit, counit, factors=None):
        self.name = name
        self.left = left
        self.right = right
        self.unit = unit
        self.counit = counit
        # (first, second) when this is a product of two adjunctions
        self.factors = factors
        # the monad whose free/forgetful adjunction this is, if any
        self.em_of = None

    @property
    def C(self):
        return self.left.dom

    @property
    def X(self):
        return self.left.cod

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Adjunction):
            return NotImplemented
        return (self.left == other.left and self.right == other.right
                and self.unit == other.unit and self.counit == other.counit)

    __hash__ = object.__hash__

    def __repr__(self):
        return f"Adjunction({self.name!r}: {self.left.name} -| {self.right.name})"


def validate_adjunction(adj):
    rep = ValidationReport(f"adjunction {adj.name}")
    L, R, eta, eps = adj.left, adj.right, adj.unit, adj.counit
    if not (L.cod == R.dom and R.cod == L.dom):
        rep.add("adjoint-shapes", (L.name, R.name), structural=True)
        return rep
    for f in (L, R):
        sub = validate_functor(f)
        rep.violations += sub.violations
    if rep.violations:
        return rep
    C, X = L.dom, L.cod
    RL, LR = compose_functors(R, L), compose_functors(L, R)
    if not (eta.source.same_maps(identity_functor(C)) and eta.target.same_maps(RL)):
        rep.add("unit-shape", (eta.name,), structural=True)
    if not (eps.source.same_maps(LR) and eps.target.same_maps(identity_functor(X))):
        rep.add("counit-shape", (eps.name,), structural=True)
    if rep.violations:
        return rep
    for t in (eta, eps):
        sub = validate_nat_trans(t)
        rep.violations += sub.violations
    if rep.violations:
        return rep
    for c in C.objects:
        lc = L.ob(c)
        if X.compose(eps[lc], L.ar(eta[c])) != X.id(lc):
            rep.add("triangle-left", (c,))
    for x in X.objects:
        rx = R.ob(x)
        if C.compose(R.ar(eps[x]), eta[rx]) != C.id(rx):
            rep.add("triangle-right", (x,))
    return rep


def identity_adjunction(cat):
    one = identity_functor(cat)
    i = identity_nat(one)
    return Adjunction(f"1_{cat.name}", one, one, i, i)


def product_adjunction(a, b):
    L = functor_product(a.left, b.left)
    R = functor_product(a.right, b.right)
    unit = nat_product(a.unit, b.unit)
    counit = nat_product(a.counit, b.counit)
    # re-type the components against the composite functors
    from catkit.core import NatTrans
    unit = NatTrans(f"({a.unit.name}x{b.unit.name})", identity_functor(L.dom),
                    compose_functors(R, L), unit.components)
    counit = NatTrans(f"({a.counit.name}x{b.counit.name})", compose_functors(L, R),
                      identity_functor(L.cod), counit.components)
    return Adjunction(f"({a.name}x{b.name})", L, R, unit, counit, factors=(a, b))


def require_valid(rep):
    if rep.structural:
        raise StructuralError(str(rep.violations[0]))
    return rep.raise_if_failed()
