"""Families indexed by a parameter of mixed variance.

A parametrised family ``t(Q, D): S(Q, D) -> T(Q, D)`` lives on the product of the
opposite of a parameter category with an argument category.  Its coherence
condition is the six-arrow square attached to every pair ``(q^op, d)``.
"""
from dataclasses import dataclass

from catkit.errors import StructuralError
from catkit.core.category import ProductCat, op_category
from catkit.core.transformation import NatTrans, validate_nat_trans


@dataclass
class ParamTrans:
    trans: NatTrans
    param: object
    arg: object

    def __post_init__(self):
        dom = self.trans.dom
        if not (isinstance(dom, ProductCat) and dom.left == op_category(self.param)
                and dom.right == self.arg):
            raise StructuralError(
                f"{self.trans.name} is not indexed by {self.param.name}^op x {self.arg.name}")

    @property
    def name(self):
        return self.trans.name

    def at(self, q, d):
        return self.trans[self.trans.dom.pair_obj(q, d)]


def validate_param_trans(pt):
    """Check the square for every ``q: Q -> Q'`` in the parameter and ``d: D -> D'``."""
    t = pt.trans
    rep = validate_nat_trans(t)
    rep.subject = f"parametrised family {t.name}"
    if rep.structural:
        return rep
    rep.violations = [v for v in rep.violations if v.law != "naturality"]
    S, T = t.source, t.target
    dom = t.dom
    X = t.cod
    P, D = pt.param, pt.arg
    for q in P.morphisms:
        for d in D.morphisms:
            q1, q2 = q.dom, q.cod
            d1, d2 = d.dom, d.cod
            top = X.compose_all(
                T.ar(dom.pair_mor(q.id, D.id(d2))),
                t[dom.pair_obj(q2, d2)],
                S.ar(dom.pair_mor(P.id(q2), d.id)))
            bottom = X.compose_all(
                T.ar(dom.pair_mor(P.id(q1), d.id)),
                t[dom.pair_obj(q1, d1)],
                S.ar(dom.pair_mor(q.id, D.id(d1))))
            if top != bottom:
                rep.add("dinatural-square", (q.id, d.id))
    return rep
