"""Brute-force reference computations, independent of the engine's own algorithms."""
import itertools


def algebras_by_brute_force(monad):
    """Every (carrier, structure map) pair, searching all morphisms of the base."""
    C, S = monad.base, monad.endo
    found = []
    for x in C.objects:
        for k in C.morphisms:
            if k.dom != S.ob(x) or k.cod != x:
                continue
            unit_law = C.composition[(k.id, monad.unit[x])] == C.identities[x]
            assoc = (C.composition[(k.id, S.ar(k.id))]
                     == C.composition[(k.id, monad.mult[x])])
            if unit_law and assoc:
                found.append((x, k.id))
    return found


def composable_pairs(C):
    for f in C.morphisms:
        for g in C.morphisms:
            if f.cod == g.dom:
                yield g, f


def is_functor(F):
    A, B = F.dom, F.cod
    for x in A.objects:
        if F.mor_map[A.identities[x]] != B.identities[F.obj_map[x]]:
            return False
    for g, f in composable_pairs(A):
        lhs = F.mor_map[A.composition[(g.id, f.id)]]
        if lhs != B.composition.get((F.mor_map[g.id], F.mor_map[f.id])):
            return False
    return True


def inverse_components(t):
    """All families of two-sided inverses, by trying every morphism at every object."""
    C = t.cod
    options = []
    for x in t.dom.objects:
        f = C.mor(t[x])
        cands = [g.id for g in C.morphisms if g.dom == f.cod and g.cod == f.dom
                 and C.composition[(g.id, f.id)] == C.identities[f.dom]
                 and C.composition[(f.id, g.id)] == C.identities[f.cod]]
        options.append(cands)
    return [dict(zip(t.dom.objects, combo)) for combo in itertools.product(*options)]
