"""Adjunctions with a parameter: ``F(-, P) -| G(P, -)`` for every ``P``."""
from catkit.errors import StructuralError
from catkit.core import (Functor, NatTrans, ProductCat, ValidationReport,
                         fix_left, fix_right, functor_product, identity_functor,
                         op_category, op_functor, product_category, validate_functor)
from catkit.structures import validate_adjunction


class ParametricAdjunction:
    """``left: C x P -> D`` and ``right: P^op x D -> C`` with one adjunction per ``P``."""

    def __init__(self, name, left, right, adjunctions):
        if not isinstance(left.dom, ProductCat) or not isinstance(right.dom, ProductCat):
            raise StructuralError(f"{name}: both functors must leave a product")
        self.name = name
        self.left = left
        self.right = right
        self.adjunctions = dict(adjunctions)

    @property
    def param(self):
        return self.left.dom.right

    @property
    def C(self):
        return self.left.dom.left

    @property
    def D(self):
        return self.left.cod

    def left_at(self, p):
        return fix_right(self.left, p)

    def right_at(self, p):
        return fix_left(self.right, p)

    def adjunction(self, p):
        try:
            return self.adjunctions[p]
        except KeyError:
            raise StructuralError(f"{self.name} has no adjunction at {p!r}") from None

    def conjugate(self, p):
        """The family ``G(P', -) => G(P, -)`` induced by ``p: P -> P'``."""
        P = self.param
        a, b = P.dom(p), P.cod(p)
        adj_a, adj_b = self.adjunction(a), self.adjunction(b)
        Ga, Gb = adj_a.right, adj_b.right
        C = self.C
        prod = self.left.dom
        comps = {}
        for d in self.D.objects:
            gb = Gb.ob(d)
            comps[d] = C.compose_all(
                Ga.ar(adj_b.counit[d]),
                Ga.ar(self.left.ar(prod.pair_mor(C.id(gb), p))),
                adj_a.unit[gb])
        return NatTrans(f"conj({p})", Gb, Ga, comps)


def validate_parametric_adjunction(pa):
    rep = ValidationReport(f"parametric adjunction {pa.name}")
    F, G = pa.left, pa.right
    P = pa.param
    if not (G.dom.left == op_category(P) and G.dom.right == F.cod and G.cod == F.dom.left):
        rep.add("parametric-shape", (F.name, G.name), structural=True)
        return rep
    for f in (F, G):
        rep.violations += validate_functor(f).violations
    for p in P.objects:
        if p not in pa.adjunctions:
            rep.add("missing-adjunction", (p,), structural=True)
            continue
        adj = pa.adjunctions[p]
        if not adj.left.same_maps(pa.left_at(p)) or not adj.right.same_maps(pa.right_at(p)):
            rep.add("adjunction-mismatch", (p,), structural=True)
    if rep.violations:
        return rep
    for p in P.objects:
        for v in validate_adjunction(pa.adjunctions[p]).violations:
            rep.add(v.law, (p,) + v.witness, v.detail)
    if rep.violations:
        return rep
    gdom = G.dom
    for m in P.morphisms:
        conj = pa.conjugate(m.id)
        for d in pa.D.objects:
            if G.ar(gdom.pair_mor(m.id, pa.D.id(d))) != conj[d]:
                rep.add("conjugate", (m.id, d))
    return rep


def parametric_right_adjoint(left, adjunctions, name=None):
    """Assemble the unique right adjoint functor from per-parameter adjunctions."""
    prod = left.dom
    C, P, D = prod.left, prod.right, left.cod
    dom = product_category(op_category(P), D)
    probe = ParametricAdjunction("probe", left, Functor("G", dom, C, {}, {}), adjunctions)
    obj = {}
    for p in P.objects:
        R = adjunctions[p].right
        for d in D.objects:
            obj[dom.pair_obj(p, d)] = R.ob(d)
    conj = {m.id: probe.conjugate(m.id) for m in P.morphisms}
    mor = {}
    for m in P.morphisms:
        # in P^op the arrow m runs from m.cod to m.dom
        Ra = adjunctions[m.dom].right
        for d in D.morphisms:
            mor[dom.pair_mor(m.id, d.id)] = C.compose(Ra.ar(d.id), conj[m.id][d.dom])
    G = Functor(name or f"{left.name}^R", dom, C, obj, mor)
    return G


def reindex(pa, along, name=None):
    """Pull a parametric adjunction back along ``along: Q -> P``."""
    C, D = pa.C, pa.D
    left = pa.left * functor_product(identity_functor(C), along)
    right = pa.right * functor_product(op_functor(along), identity_functor(D))
    adjs = {q: pa.adjunction(along.ob(q)) for q in along.dom.objects}
    return ParametricAdjunction(name or f"{pa.name}.{along.name}", left, right, adjs)
