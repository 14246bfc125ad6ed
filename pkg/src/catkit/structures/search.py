"""Exhaustive search for adjoints (a harness utility, not used by the theorems)."""
from catkit.core import Functor, NatTrans, compose_functors, identity_functor
from catkit.structures.adjunction import Adjunction, validate_adjunction


def _universal_arrow(F, y):
    """A terminal object of the comma category ``F / y``, first in canonical order."""
    C, X = F.dom, F.cod
    for c in C.objects:
        for e in X.hom(F.ob(c), y):
            if all(_unique_factor(F, c, e, c2, f) is not None
                   for c2 in C.objects for f in X.hom(F.ob(c2), y)):
                return c, e
    return None


def _unique_factor(F, c, e, c2, f):
    """The unique ``g: c2 -> c`` with ``e . F g = f`` or None."""
    C, X = F.dom, F.cod
    hits = [g for g in C.hom(c2, c) if X.compose(e, F.ar(g)) == f]
    return hits[0] if len(hits) == 1 else None


def find_right_adjoint(F, name=None):
    """Right adjoint of ``F`` with unit and counit, or None if there is none."""
    C, X = F.dom, F.cod
    arrows = {}
    for y in X.objects:
        u = _universal_arrow(F, y)
        if u is None:
            return None
        arrows[y] = u
    G_obj = {y: arrows[y][0] for y in X.objects}
    eps = {y: arrows[y][1] for y in X.objects}
    G_mor = {}
    for m in X.morphisms:
        target = X.compose(m.id, eps[m.dom])
        G_mor[m.id] = _unique_factor(F, G_obj[m.cod], eps[m.cod], G_obj[m.dom], target)
    G = Functor(name or f"{F.name}^R", X, C, G_obj, G_mor)
    unit = {c: _unique_factor(F, G_obj[F.ob(c)], eps[F.ob(c)], c, X.id(F.ob(c)))
            for c in C.objects}
    adj = Adjunction(f"{F.name}-|{G.name}", F, G,
                     NatTrans("eta", identity_functor(C), compose_functors(G, F), unit),
                     NatTrans("eps", compose_functors(F, G), identity_functor(X), eps))
    validate_adjunction(adj).raise_if_failed()
    return adj
