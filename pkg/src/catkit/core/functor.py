"""Functors as explicit object and morphism tables."""
from catkit.errors import StructuralError
from catkit.core.category import ProductCat, product_category, op_category
from catkit.core.report import ValidationReport


class Functor:
    def __init__(self, name, dom, cod, obj_map, mor_map):
        self.name = name
        self.dom = dom
        self.cod = cod
        self.obj_map = dict(obj_map)
        self.mor_map = dict(mor_map)

    def ob(self, x):
        try:
            return self.obj_map[x]
        except KeyError:
            raise StructuralError(f"{self.name} has no image for object {x!r}") from None

    def ar(self, f):
        try:
            return self.mor_map[f]
        except KeyError:
            raise StructuralError(f"{self.name} has no image for morphism {f!r}") from None

    def __mul__(self, other):
        # F * G is composition, F * t is left whiskering
        from catkit.core.transformation import NatTrans, whisker_left
        if isinstance(other, Functor):
            return compose_functors(self, other)
        if isinstance(other, NatTrans):
            return whisker_left(self, other)
        return NotImplemented

    def same_maps(self, other):
        return self.obj_map == other.obj_map and self.mor_map == other.mor_map

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Functor):
            return NotImplemented
        return (self.same_maps(other) and self.dom == other.dom
                and self.cod == other.cod)

    __hash__ = object.__hash__

    def __repr__(self):
        return f"Functor({self.name!r}: {self.dom.name} -> {self.cod.name})"


def identity_functor(cat):
    return Functor(f"1_{cat.name}", cat, cat,
                   {x: x for x in cat.objects}, {m.id: m.id for m in cat.morphisms})


def compose_functors(g, f):
    """``g`` after ``f``."""
    if not (f.cod is g.dom or f.cod == g.dom):
        raise StructuralError(f"cannot compose {g.name} after {f.name}: "
                              f"{f.cod.name} != {g.dom.name}")
    return Functor(f"{g.name}{f.name}", f.dom, g.cod,
                   {x: g.obj_map[y] for x, y in f.obj_map.items()},
                   {m: g.mor_map[n] for m, n in f.mor_map.items()})


def constant_functor(dom, cod, obj):
    i = cod.id(obj)
    return Functor(f"const_{obj}", dom, cod,
                   {x: obj for x in dom.objects}, {m.id: i for m in dom.morphisms})


def op_functor(f):
    return Functor(f"{f.name}^op", op_category(f.dom), op_category(f.cod),
                   f.obj_map, f.mor_map)


def _require_product(cat, who):
    if not isinstance(cat, ProductCat):
        raise StructuralError(f"{who} needs a product category, got {cat.name}")
    return cat


def functor_product(f, g):
    dom = product_category(f.dom, g.dom)
    cod = product_category(f.cod, g.cod)
    return Functor(f"({f.name}x{g.name})", dom, cod,
                   {p: cod.pair_obj(f.ob(x), g.ob(y)) for p, (x, y) in dom.obj_pairs.items()},
                   {p: cod.pair_mor(f.ar(a), g.ar(b)) for p, (a, b) in dom.mor_pairs.items()})


def pairing(f, g):
    """The functor X -> A x B with components ``f`` and ``g``."""
    if not (f.dom is g.dom or f.dom == g.dom):
        raise StructuralError("pairing needs functors with a common domain")
    cod = product_category(f.cod, g.cod)
    return Functor(f"<{f.name},{g.name}>", f.dom, cod,
                   {x: cod.pair_obj(f.ob(x), g.ob(x)) for x in f.dom.objects},
                   {m.id: cod.pair_mor(f.ar(m.id), g.ar(m.id)) for m in f.dom.morphisms})


def projection(cat, side):
    cat = _require_product(cat, "projection")
    k = 0 if side == "left" else 1
    target = cat.left if k == 0 else cat.right
    return Functor(f"pi{k}", cat, target,
                   {p: xy[k] for p, xy in cat.obj_pairs.items()},
                   {p: ab[k] for p, ab in cat.mor_pairs.items()})


def fix_right(f, obj):
    """``f(-, obj)`` for a functor out of a product."""
    dom = _require_product(f.dom, "fix_right")
    i = dom.right.id(obj)
    return Functor(f"{f.name}(-,{obj})", dom.left, f.cod,
                   {x: f.ob(dom.pair_obj(x, obj)) for x in dom.left.objects},
                   {m.id: f.ar(dom.pair_mor(m.id, i)) for m in dom.left.morphisms})


def fix_left(f, obj):
    """``f(obj, -)`` for a functor out of a product."""
    dom = _require_product(f.dom, "fix_left")
    i = dom.left.id(obj)
    return Functor(f"{f.name}({obj},-)", dom.right, f.cod,
                   {y: f.ob(dom.pair_obj(obj, y)) for y in dom.right.objects},
                   {m.id: f.ar(dom.pair_mor(i, m.id)) for m in dom.right.morphisms})


def validate_functor(f):
    rep = ValidationReport(f"functor {f.name}")
    A, B = f.dom, f.cod
    for x in A.objects:
        y = f.obj_map.get(x)
        if y is None:
            rep.add("missing-object-image", (x,), structural=True)
        elif not B.has_object(y):
            rep.add("dangling-object-image", (x, y), structural=True)
    for m in A.morphisms:
        n = f.mor_map.get(m.id)
        if n is None:
            rep.add("missing-morphism-image", (m.id,), structural=True)
        elif not B.has_morphism(n):
            rep.add("dangling-morphism-image", (m.id, n), structural=True)
    if rep.violations:
        return rep
    for m in A.morphisms:
        n = B.mor(f.mor_map[m.id])
        if n.dom != f.obj_map[m.dom] or n.cod != f.obj_map[m.cod]:
            rep.add("dom-cod", (m.id,), f"image {n.id}: {n.dom} -> {n.cod}")
    for x in A.objects:
        if f.mor_map[A.id(x)] != B.identities[f.obj_map[x]]:
            rep.add("identity", (A.id(x),))
    if rep.violations:
        return rep
    for (g, h), gh in A.composition.items():
        if f.mor_map[gh] != B.compose(f.mor_map[g], f.mor_map[h]):
            rep.add("composition", (g, h))
    return rep
