"""Natural transformations, their composites and invertibility."""
import itertools
from dataclasses import dataclass

from catkit.errors import StructuralError
from catkit.core.category import product_category
from catkit.core.functor import Functor, identity_functor, functor_product, op_functor
from catkit.core.report import ValidationReport


class NatTrans:
    """A family of components ``source(x) -> target(x)`` indexed by objects."""

    def __init__(self, name, source, target, components):
        self.name = name
        self.source = source
        self.target = target
        self.components = dict(components)

    @property
    def dom(self):
        return self.source.dom

    @property
    def cod(self):
        return self.source.cod

    def __getitem__(self, x):
        try:
            return self.components[x]
        except KeyError:
            raise StructuralError(f"{self.name} has no component at {x!r}") from None

    def __mul__(self, other):
        if isinstance(other, Functor):
            return whisker_right(self, other)
        return NotImplemented

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, NatTrans):
            return NotImplemented
        return (self.components == other.components and self.source == other.source
                and self.target == other.target)

    __hash__ = object.__hash__

    def __repr__(self):
        return f"NatTrans({self.name!r}: {self.source.name} => {self.target.name})"


def identity_nat(f):
    return NatTrans(f"1_{f.name}", f, f, {x: f.cod.id(f.ob(x)) for x in f.dom.objects})


def as_nat(t):
    return identity_nat(t) if isinstance(t, Functor) else t


def vcompose(s, t):
    """``s`` after ``t`` for ``t: F => G`` and ``s: G => H``."""
    if not t.target.same_maps(s.source):
        raise StructuralError(f"cannot compose {s.name} after {t.name}: "
                              f"{t.target.name} != {s.source.name}")
    C = t.cod
    return NatTrans(f"{s.name}.{t.name}", t.source, s.target,
                    {x: C.compose(s[x], t[x]) for x in t.dom.objects})


def vcomp(*ts):
    """Vertical composite read right to left, like function composition."""
    out = ts[-1]
    for s in reversed(ts[:-1]):
        out = vcompose(s, out)
    return out


def whisker_left(f, t):
    """``f t``: apply ``f`` to every component of ``t``."""
    return NatTrans(f"{f.name}{t.name}", f * t.source, f * t.target,
                    {x: f.ar(c) for x, c in t.components.items()})


def whisker_right(t, f):
    """``t f``: reindex ``t`` along ``f``."""
    return NatTrans(f"{t.name}{f.name}", t.source * f, t.target * f,
                    {x: t[f.ob(x)] for x in f.dom.objects})


def nat_product(s, t):
    """Componentwise product; a functor stands for its identity transformation."""
    s, t = as_nat(s), as_nat(t)
    dom = product_category(s.dom, t.dom)
    cod = product_category(s.cod, t.cod)
    return NatTrans(f"({s.name}x{t.name})", functor_product(s.source, t.source),
                    functor_product(s.target, t.target),
                    {p: cod.pair_mor(s[x], t[y]) for p, (x, y) in dom.obj_pairs.items()})


def op_nat(t):
    """``t: F => G`` read as ``G^op => F^op``."""
    return NatTrans(f"{t.name}^op", op_functor(t.target), op_functor(t.source),
                    t.components)


def nat_diff(s, t):
    """First object (in canonical order) where two families disagree, or None."""
    for x in s.dom.objects:
        if s.components.get(x) != t.components.get(x):
            return x
    return None


@dataclass
class Invertibility:
    invertible: bool
    inverse: object = None
    witness: object = None

    def __bool__(self):
        return self.invertible


def is_invertible(t):
    """Search each hom-set for a two-sided inverse component."""
    C = t.cod
    comps = {}
    for x in t.dom.objects:
        g = C.inverse(t[x])
        if g is None:
            return Invertibility(False, None, x)
        comps[x] = g
    inv = NatTrans(f"{t.name}^-1", t.target, t.source, comps)
    rep = validate_nat_trans(inv)
    if not rep.ok:
        return Invertibility(False, None, rep.violations[0].witness)
    return Invertibility(True, inv, None)


def validate_nat_trans(t):
    rep = ValidationReport(f"transformation {t.name}")
    F, G = t.source, t.target
    if not (F.dom == G.dom and F.cod == G.cod):
        rep.add("parallel-functors", (F.name, G.name), structural=True)
        return rep
    C = F.cod
    for x in F.dom.objects:
        c = t.components.get(x)
        if c is None:
            rep.add("missing-component", (x,), structural=True)
        elif not C.has_morphism(c):
            rep.add("dangling-component", (x, c), structural=True)
        elif C.dom(c) != F.ob(x) or C.cod(c) != G.ob(x):
            rep.add("component-typing", (x,),
                    f"{c}: {C.dom(c)} -> {C.cod(c)}, wanted {F.ob(x)} -> {G.ob(x)}",
                    structural=True)
    if rep.violations:
        return rep
    for m in F.dom.morphisms:
        if C.compose(t[m.cod], F.ar(m.id)) != C.compose(G.ar(m.id), t[m.dom]):
            rep.add("naturality", (m.id,))
    return rep


def brute_force_inverses(t, cap=100000):
    """Every natural family inverse to ``t``, by exhaustive enumeration (test oracle)."""
    C = t.cod
    objs = t.dom.objects
    choices = [C.hom(t.target.ob(x), t.source.ob(x)) for x in objs]
    total = 1
    for c in choices:
        total *= len(c)
    if total > cap:
        raise ValueError("too many candidate families")
    found = []
    for combo in itertools.product(*choices):
        cand = NatTrans("cand", t.target, t.source, dict(zip(objs, combo)))
        if not validate_nat_trans(cand).ok:
            continue
        if all(C.compose(combo[i], t[x]) == C.id(t.source.ob(x))
               and C.compose(t[x], combo[i]) == C.id(t.target.ob(x))
               for i, x in enumerate(objs)):
            found.append(cand)
    return found


def identity_on(cat):
    return identity_nat(identity_functor(cat))
