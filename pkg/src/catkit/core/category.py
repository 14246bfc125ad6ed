"""Finite categories given by explicit identifier tables.

Composition is keyed by the pair ``(g, f)`` and means "g after f"; this is the
only place the orientation convention is fixed.
"""
from dataclasses import dataclass
from functools import lru_cache

from catkit.errors import StructuralError
from catkit.core.limits import check_size
from catkit.core.report import ValidationReport


@dataclass(frozen=True)
class Morphism:
    id: str
    dom: str
    cod: str


def _op_name(name):
    return name[:-3] if name.endswith("^op") else name + "^op"


class FinCat:
    """A finite category with string identifiers for objects and morphisms."""

    def __init__(self, name, objects, morphisms, identities, composition):
        self.name = name
        self.objects = tuple(objects)
        self.morphisms = tuple(m if isinstance(m, Morphism) else Morphism(*m)
                               for m in morphisms)
        self.identities = dict(identities)
        self.composition = dict(composition)
        check_size(len(self.morphisms), f"category {name}")
        self._mor = {m.id: m for m in self.morphisms}
        self._objset = frozenset(self.objects)
        self._hom = None
        self._obj_index = None
        self._hash = None

    # lookups
    def mor(self, f):
        try:
            return self._mor[f]
        except KeyError:
            raise StructuralError(f"{f!r} is not a morphism of {self.name}") from None

    def has_object(self, x):
        return x in self._objset

    def has_morphism(self, f):
        return f in self._mor

    def dom(self, f):
        return self.mor(f).dom

    def cod(self, f):
        return self.mor(f).cod

    def id(self, x):
        try:
            return self.identities[x]
        except KeyError:
            raise StructuralError(f"{x!r} is not an object of {self.name}") from None

    def compose(self, g, f):
        """Return ``g`` after ``f``."""
        try:
            return self.composition[(g, f)]
        except KeyError:
            raise StructuralError(
                f"{g} after {f} is not defined in {self.name}") from None

    def compose_all(self, *fs):
        """Compose right to left: ``compose_all(h, g, f)`` is h after g after f."""
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.compose(g, out)
        return out

    def hom(self, a, b):
        if self._hom is None:
            hom = {}
            for m in self.morphisms:
                hom.setdefault((m.dom, m.cod), []).append(m.id)
            self._hom = {k: tuple(v) for k, v in hom.items()}
        return self._hom.get((a, b), ())

    def obj_index(self, x):
        if self._obj_index is None:
            self._obj_index = {o: i for i, o in enumerate(self.objects)}
        return self._obj_index[x]

    def inverse(self, f):
        """The two-sided inverse of ``f`` or None."""
        a, b = self.dom(f), self.cod(f)
        for g in self.hom(b, a):
            if self.compose(g, f) == self.id(a) and self.compose(f, g) == self.id(b):
                return g
        return None

    def is_iso(self, f):
        return self.inverse(f) is not None

    @property
    def is_thin(self):
        return all(len(self.hom(a, b)) <= 1 for a in self.objects for b in self.objects)

    def __len__(self):
        return len(self.morphisms)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinCat):
            return NotImplemented
        return (self.objects == other.objects and self.morphisms == other.morphisms
                and self.identities == other.identities
                and self.composition == other.composition)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.objects, self.morphisms))
        return self._hash

    def __repr__(self):
        return f"FinCat({self.name!r}, {len(self.objects)} objects, {len(self.morphisms)} morphisms)"


def pair_id(x, y):
    return f"({x},{y})"


class ProductCat(FinCat):
    """Binary product remembering how its identifiers split into components."""

    def __init__(self, left, right, name=None):
        check_size(len(left.morphisms) * len(right.morphisms),
                   f"product {left.name} x {right.name}")
        objects, obj_pairs = [], {}
        for x in left.objects:
            for y in right.objects:
                p = pair_id(x, y)
                objects.append(p)
                obj_pairs[p] = (x, y)
        morphisms, mor_pairs = [], {}
        for f in left.morphisms:
            for g in right.morphisms:
                p = pair_id(f.id, g.id)
                morphisms.append(Morphism(p, pair_id(f.dom, g.dom), pair_id(f.cod, g.cod)))
                mor_pairs[p] = (f.id, g.id)
        identities = {pair_id(x, y): pair_id(left.id(x), right.id(y))
                      for x in left.objects for y in right.objects}
        composition = {}
        for (g1, f1), h1 in left.composition.items():
            for (g2, f2), h2 in right.composition.items():
                composition[(pair_id(g1, g2), pair_id(f1, f2))] = pair_id(h1, h2)
        super().__init__(name or f"{left.name}x{right.name}", objects, morphisms,
                         identities, composition)
        self.left = left
        self.right = right
        self.obj_pairs = obj_pairs
        self.mor_pairs = mor_pairs
        self._pair_obj = {v: k for k, v in obj_pairs.items()}
        self._pair_mor = {v: k for k, v in mor_pairs.items()}

    def pair_obj(self, x, y):
        try:
            return self._pair_obj[(x, y)]
        except KeyError:
            raise StructuralError(f"({x}, {y}) is not an object of {self.name}") from None

    def pair_mor(self, f, g):
        try:
            return self._pair_mor[(f, g)]
        except KeyError:
            raise StructuralError(f"({f}, {g}) is not a morphism of {self.name}") from None

    def split_obj(self, p):
        return self.obj_pairs[p]

    def split_mor(self, p):
        return self.mor_pairs[p]


@lru_cache(maxsize=256)
def _product_cached(left, right):
    return ProductCat(left, right)


def product_category(left, right):
    check_size(len(left.morphisms) * len(right.morphisms),
               f"product {left.name} x {right.name}")
    return _product_cached(left, right)


def op_category(cat):
    """Same identifiers, swapped endpoints, reversed composition."""
    comp = {(f, g): h for (g, f), h in cat.composition.items()}
    return FinCat(_op_name(cat.name), cat.objects,
                  [Morphism(m.id, m.cod, m.dom) for m in cat.morphisms],
                  cat.identities, comp)


def validate_category(cat):
    rep = ValidationReport(f"category {cat.name}")
    objs = set()
    for x in cat.objects:
        if x in objs:
            rep.add("duplicate-object", (x,), structural=True)
        objs.add(x)
    ids = set()
    for m in cat.morphisms:
        if m.id in ids:
            rep.add("duplicate-morphism", (m.id,), structural=True)
        ids.add(m.id)
        for end in (m.dom, m.cod):
            if end not in objs:
                rep.add("dangling-object", (m.id, end), structural=True)
    for x in cat.objects:
        if x not in cat.identities:
            rep.add("missing-identity", (x,), structural=True)
    for x, i in cat.identities.items():
        if x not in objs or i not in ids:
            rep.add("dangling-identity", (x, i), structural=True)
    for (g, f), h in cat.composition.items():
        for k in (g, f, h):
            if k not in ids:
                rep.add("dangling-composite", (g, f, k), structural=True)
    if rep.violations:
        return rep

    for x in cat.objects:
        i = cat.identities[x]
        if cat.dom(i) != x or cat.cod(i) != x:
            rep.add("identity-typing", (x, i))
    comp = cat.composition
    for (g, f), h in comp.items():
        if cat.dom(g) != cat.cod(f):
            rep.add("composite-of-noncomposable", (g, f))
        elif cat.dom(h) != cat.dom(f) or cat.cod(h) != cat.cod(g):
            rep.add("composite-typing", (g, f), f"gives {h}")
    for f in cat.morphisms:
        for g in cat.morphisms:
            if g.dom == f.cod and (g.id, f.id) not in comp:
                rep.add("composition-total", (g.id, f.id))
    if rep.violations:
        # laws below assume a total, well-typed table, except the identity laws
        for f in cat.morphisms:
            _identity_laws(cat, f, rep)
        return rep
    for f in cat.morphisms:
        _identity_laws(cat, f, rep)
    by_dom = {}
    for m in cat.morphisms:
        by_dom.setdefault(m.dom, []).append(m)
    for f in cat.morphisms:
        for g in by_dom.get(f.cod, ()):
            gf = comp[(g.id, f.id)]
            for h in by_dom.get(g.cod, ()):
                if comp[(h.id, gf)] != comp[(comp[(h.id, g.id)], f.id)]:
                    rep.add("associativity", (h.id, g.id, f.id))
    return rep


def _identity_laws(cat, f, rep):
    comp = cat.composition
    i_dom = cat.identities.get(f.dom)
    i_cod = cat.identities.get(f.cod)
    if comp.get((f.id, i_dom), f.id) != f.id:
        rep.add("identity-law", (f.id, i_dom), "right unit")
    if comp.get((i_cod, f.id), f.id) != f.id:
        rep.add("identity-law", (i_cod, f.id), "left unit")
