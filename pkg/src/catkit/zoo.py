"""Small concrete categories, lattices and monads used throughout."""
from catkit.core import (FinCat, Functor, Morphism, NatTrans, compose_functors, fix_left,
                         fix_right, identity_functor, op_category, product_category)
from catkit.structures import (Adjunction, Monad, em_category, identity_monad,
                               product_adjunction, product_monad)
from catkit.twocat import MndOneCell, psi_one_cell
from catkit.hopf import ParametricAdjunction

BOOL4 = ("0", "a", "b", "1")
_BOOL4_BITS = {"0": 0, "a": 1, "b": 2, "1": 3}
_BITS_BOOL4 = {v: k for k, v in _BOOL4_BITS.items()}


def poset_category(name, elements, leq, arrow_names=None):
    """Thin category of a finite poset; ``arrow_names`` may rename strict arrows."""
    arrow_names = arrow_names or {}
    objects = tuple(elements)
    mors, ident, arrow = [], {}, {}
    for x in objects:
        for y in objects:
            if leq(x, y):
                mid = f"id{x}" if x == y else arrow_names.get((x, y), f"{x}<{y}")
                mors.append(Morphism(mid, x, y))
                arrow[(x, y)] = mid
                if x == y:
                    ident[x] = mid
    comp = {}
    for (x, y), f in arrow.items():
        for (y2, z), g in arrow.items():
            if y2 == y:
                comp[(g, f)] = arrow[(x, z)]
    return FinCat(name, objects, mors, ident, comp)


def one():
    return FinCat("One", ("*",), [Morphism("id*", "*", "*")], {"*": "id*"},
                  {("id*", "id*"): "id*"})


def two():
    return poset_category("Two", ("0", "1"), lambda x, y: x <= y, {("0", "1"): "u"})


def bool4_leq(x, y):
    bx, by = _BOOL4_BITS[x], _BOOL4_BITS[y]
    return bx & by == bx


def bool4():
    return poset_category("Bool4", BOOL4, bool4_leq)


def meet4(x, y):
    return _BITS_BOOL4[_BOOL4_BITS[x] & _BOOL4_BITS[y]]


def join4(x, y):
    return _BITS_BOOL4[_BOOL4_BITS[x] | _BOOL4_BITS[y]]


def implies4(x, y):
    return _BITS_BOOL4[(3 & ~_BOOL4_BITS[x]) | _BOOL4_BITS[y]]


def z2():
    """The group of order two as a one-object category."""
    comp = {("e", "e"): "e", ("e", "s"): "s", ("s", "e"): "s", ("s", "s"): "e"}
    return FinCat("Z2", ("*",), [Morphism("e", "*", "*"), Morphism("s", "*", "*")],
                  {"*": "e"}, comp)


def z2_torsor():
    """Two objects; Z/2 acts on ``0`` and freely on the two arrows ``0 -> 1``."""
    mors = [Morphism("id0", "0", "0"), Morphism("s", "0", "0"),
            Morphism("id1", "1", "1"), Morphism("u", "0", "1"), Morphism("v", "0", "1")]
    comp = {("id0", "id0"): "id0", ("id0", "s"): "s", ("s", "id0"): "s", ("s", "s"): "id0",
            ("id1", "id1"): "id1", ("u", "id0"): "u", ("v", "id0"): "v",
            ("u", "s"): "v", ("v", "s"): "u", ("id1", "u"): "u", ("id1", "v"): "v"}
    return FinCat("Z2Torsor", ("0", "1"), mors, {"0": "id0", "1": "id1"}, comp)


# thin helpers

def arrow(cat, x, y):
    hom = cat.hom(x, y)
    if len(hom) != 1:
        raise ValueError(f"no unique arrow {x} -> {y} in {cat.name}")
    return hom[0]


def monotone(name, dom, cod, fn):
    """Functor into a thin category, determined by its object map."""
    obj = {x: fn(x) for x in dom.objects}
    mor = {m.id: arrow(cod, obj[m.dom], obj[m.cod]) for m in dom.morphisms}
    return Functor(name, dom, cod, obj, mor)


def binary(name, dom, cod, fn):
    """Functor out of a product into a thin category from a two-argument map."""
    return monotone(name, dom, cod, lambda p: fn(*dom.split_obj(p)))


def thin_nat(name, source, target):
    C = source.cod
    return NatTrans(name, source, target,
                    {x: arrow(C, source.ob(x), target.ob(x)) for x in source.dom.objects})


def closure_monad(name, cat, fn):
    S = monotone(name, cat, cat, fn)
    return Monad(name, cat, S, thin_nat("mu", compose_functors(S, S), S),
                 thin_nat("eta", identity_functor(cat), S))


def thin_adjunction(name, left, right):
    C, X = left.dom, left.cod
    return Adjunction(name, left, right,
                      thin_nat("eta", identity_functor(C), compose_functors(right, left)),
                      thin_nat("eps", compose_functors(left, right), identity_functor(X)))


def closure1():
    """The closure on Two sending both objects to the top."""
    return closure_monad("j1", two(), lambda x: "1")


def bool4_nucleus():
    """``x`` goes to ``x or a`` on Bool4."""
    return closure_monad("j", bool4(), lambda x: join4(x, "a"))


def bool4_meet():
    B = bool4()
    return binary("meet", product_category(B, B), B, meet4)


def bool4_implication():
    B = bool4()
    return binary("imp", product_category(op_category(B), B), B, implies4)


def heyting_adjunction(p):
    """``- and p`` left adjoint to ``p implies -`` on Bool4."""
    B = bool4()
    L = monotone(f"meet_{p}", B, B, lambda x: meet4(x, p))
    R = monotone(f"imp_{p}", B, B, lambda x: implies4(p, x))
    return thin_adjunction(f"meet_{p}-|imp_{p}", L, R)


# the two meet cells

def nucleus_meet_cell():
    """Meet on Bool4 as a cell from the nucleus squared to the nucleus (Hopf)."""
    j = bool4_nucleus()
    J = bool4_meet()
    SE = product_monad(j, j)
    return MndOneCell(SE, j, J, thin_nat("psi", j.endo * J, J * SE.endo), name="meet")


def meet_implication():
    """``- and p -| p implies -`` on Bool4, parametrised by ``p``."""
    return ParametricAdjunction("meet-imp", bool4_meet(), bool4_implication(),
                                {p: heyting_adjunction(p) for p in BOOL4})


def two_meet():
    T = two()
    return binary("meet", product_category(T, T), T, min)


def closure_meet_cell():
    """Meet on Two out of Closure1 x 1 into 1: not Hopf."""
    T = two()
    idT = identity_monad(T)
    src = product_monad(closure1(), idT)
    J = two_meet()
    return MndOneCell(src, idT, J, thin_nat("psi", idT.endo * J, J * src.endo), name="meetcell")


def two_meet_implication():
    T = two()
    J = two_meet()
    K = binary("imp", product_category(op_category(T), T), T,
               lambda p, d: "1" if p <= d else d)
    return ParametricAdjunction("min-imp", J, K, {
        p: thin_adjunction(p, fix_right(J, p), fix_left(K, p)) for p in T.objects})


def lift_to_algebras(cell):
    """Lift a monad cell out of ``S x E`` along the product of the algebra adjunctions."""
    a, b = cell.source.factors
    return psi_one_cell(cell, source_adj=product_adjunction(em_category(a).adjunction,
                                                            em_category(b).adjunction))
