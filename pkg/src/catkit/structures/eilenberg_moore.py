"""Eilenberg-Moore categories of algebras, free/forgetful adjunction, comparison."""
from dataclasses import dataclass

from catkit.errors import ConstructionError, StructuralError
from catkit.core import FinCat, Functor, Morphism, NatTrans, compose_functors, identity_functor
from catkit.core.limits import check_size
from catkit.structures.adjunction import Adjunction, validate_adjunction
from catkit.structures.monad import validate_monad


def algebra_id(carrier, structure):
    return f"({carrier}|{structure})"


def algebra_mor_id(m, src, tgt):
    return f"[{m}:{src}->{tgt}]"


class EMCat(FinCat):
    """Category of algebras; each identifier remembers its underlying data."""

    def __init__(self, name, objects, morphisms, identities, composition, algebras, underlying):
        super().__init__(name, objects, morphisms, identities, composition)
        self.algebras = algebras      # object id -> (carrier, structure map)
        self.underlying = underlying  # morphism id -> base morphism id
        self._by_data = {v: k for k, v in algebras.items()}
        self._mor_by_data = {(underlying[m.id], m.dom, m.cod): m.id for m in self.morphisms}

    def obj(self, carrier, structure):
        try:
            return self._by_data[(carrier, structure)]
        except KeyError:
            raise ConstructionError(
                f"({carrier}, {structure}) is not an algebra in {self.name}",
                (carrier, structure)) from None

    def lift(self, m, src, tgt):
        try:
            return self._mor_by_data[(m, src, tgt)]
        except KeyError:
            raise ConstructionError(
                f"{m} is not an algebra morphism {src} -> {tgt}", (m, src, tgt)) from None


def is_algebra(monad, carrier, k):
    C, S = monad.base, monad.endo
    if C.dom(k) != S.ob(carrier) or C.cod(k) != carrier:
        return False
    if C.compose(k, monad.unit[carrier]) != C.id(carrier):
        return False
    return C.compose(k, monad.mult[carrier]) == C.compose(k, S.ar(k))


def enumerate_algebras(monad):
    """Every algebra structure, in canonical order (carrier, then structure map)."""
    C, S = monad.base, monad.endo
    out = []
    for x in C.objects:
        for k in C.hom(S.ob(x), x):
            if is_algebra(monad, x, k):
                out.append((x, k))
    return out


@dataclass
class EMBundle:
    monad: object
    category: EMCat
    free: Functor
    forget: Functor
    adjunction: Adjunction

    @property
    def em_adjunction(self):
        return self.adjunction


def em_category(monad, validate=True):
    if validate:
        rep = validate_monad(monad)
        if not rep.ok:
            raise StructuralError(f"{monad.name} is not a monad: {rep.violations[0]}")
    C, S = monad.base, monad.endo
    algebras = enumerate_algebras(monad)
    objects, alg = [], {}
    for x, k in algebras:
        a = algebra_id(x, k)
        objects.append(a)
        alg[a] = (x, k)
    morphisms, under = [], {}
    ident = {}
    for a in objects:
        x, k = alg[a]
        for b in objects:
            y, l = alg[b]
            for m in C.hom(x, y):
                # l . S(m) = m . k
                if C.compose(l, S.ar(m)) == C.compose(m, k):
                    mid = algebra_mor_id(m, a, b)
                    morphisms.append(Morphism(mid, a, b))
                    under[mid] = m
                    if a == b and m == C.id(x):
                        ident[a] = mid
    check_size(len(morphisms), f"algebras of {monad.name}")
    by_data = {(under[m.id], m.dom, m.cod): m.id for m in morphisms}
    comp = {}
    by_dom = {}
    for m in morphisms:
        by_dom.setdefault(m.dom, []).append(m)
    for f in morphisms:
        for g in by_dom.get(f.cod, ()):
            comp[(g.id, f.id)] = by_data[(C.compose(under[g.id], under[f.id]), f.dom, g.cod)]
    E = EMCat(f"{C.name}^{monad.name}", objects, morphisms, ident, comp, alg, under)

    free_obj = {x: E.obj(S.ob(x), monad.mult[x]) for x in C.objects}
    free_mor = {m.id: E.lift(S.ar(m.id), free_obj[m.dom], free_obj[m.cod])
                for m in C.morphisms}
    free = Functor(f"F^{monad.name}", C, E, free_obj, free_mor)
    forget = Functor(f"U^{monad.name}", E, C, {a: alg[a][0] for a in objects}, under)
    unit = NatTrans(monad.unit.name, identity_functor(C), compose_functors(forget, free),
                    monad.unit.components)
    counit = NatTrans(f"eps^{monad.name}", compose_functors(free, forget),
                      identity_functor(E),
                      {a: E.lift(alg[a][1], free_obj[alg[a][0]], a) for a in objects})
    adj = Adjunction(f"F^{monad.name}-|U^{monad.name}", free, forget, unit, counit)
    adj.em_of = monad
    if validate:
        rep = validate_adjunction(adj)
        rep.raise_if_failed()
    return EMBundle(monad, E, free, forget, adj)


def comparison_functor(adj, bundle=None):
    """``D -> C^{RL}``: ``D`` goes to ``(R D | R eps_D)``, ``d`` to ``R d``."""
    from catkit.structures.monad import monad_from_adjunction
    if bundle is None:
        bundle = em_category(monad_from_adjunction(adj))
    E = bundle.category
    R, eps = adj.right, adj.counit
    X = adj.left.cod
    obj = {x: E.obj(R.ob(x), R.ar(eps[x])) for x in X.objects}
    mor = {m.id: E.lift(R.ar(m.id), obj[m.dom], obj[m.cod]) for m in X.morphisms}
    return Functor(f"K_{adj.name}", X, E, obj, mor)


def reflects_isomorphisms(f):
    """Exhaustive: every morphism with invertible image is itself invertible."""
    for m in f.dom.morphisms:
        if f.cod.is_iso(f.ar(m.id)) and not f.dom.is_iso(m.id):
            return False, m.id
    return True, None
