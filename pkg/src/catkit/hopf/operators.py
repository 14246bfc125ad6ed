"""Hopf and fusion operators on cells whose source is a product."""
from dataclasses import dataclass

from catkit.errors import PreconditionError
from catkit.core import (NatTrans, functor_product, identity_functor, is_invertible)
from catkit.structures import (em_category, identity_adjunction, identity_monad,
                               product_adjunction, product_monad)
from catkit.twocat import (AdjOneCell, MndOneCell, validate_adj_one_cell,
                           validate_mnd_one_cell)
from catkit.twocat.transport import _check_induces


@dataclass
class OperatorResult:
    """An operator, the 1-cell it forms, and whether it is invertible."""
    operator: NatTrans
    cell: object
    invertible: bool
    inverse: object = None
    witness: object = None
    cell_report: object = None
    parameter_adj: object = None

    def witness_parts(self):
        if self.witness is None:
            return None
        return self.operator.dom.split_obj(self.witness)


def _finish(op, cell, report, parameter_adj=None):
    inv = is_invertible(op)
    w = inv.witness
    if isinstance(w, tuple):
        w = w[0] if w else None
    return OperatorResult(op, cell, inv.invertible, inv.inverse, w, report, parameter_adj)


def _factors(adj_or_monad, what):
    if not adj_or_monad.factors:
        raise PreconditionError(f"{what} needs a cell whose source is a binary product")
    return adj_or_monad.factors


def hopf_operator_adj(c):
    """``V(L x eps~) . lam(C x R~)`` for a cell out of ``L x L~ -| R x R~``."""
    a, at = _factors(c.source, "the Hopf operator")
    J, V, lam = c.top, c.bottom, c.lam
    C = a.left.dom
    Q = at.left.cod
    Rt, epst = at.right, at.counit
    JR = J * functor_product(identity_functor(C), Rt)
    src = product_adjunction(a, identity_adjunction(Q))
    Lb = c.target.left
    dom, Y = src.left.dom, V.cod
    jdom, vdom = J.dom, V.dom
    comps = {}
    for p, (x, q) in dom.obj_pairs.items():
        comps[p] = Y.compose(
            V.ar(vdom.pair_mor(a.left.cod.id(a.left.ob(x)), epst[q])),
            lam[jdom.pair_obj(x, Rt.ob(q))])
    op = NatTrans(f"H({lam.name})", Lb * JR, V * src.left, comps)
    cell = AdjOneCell(src, c.target, JR, V, op, name=f"H({c.name})", check=False)
    return _finish(op, cell, validate_adj_one_cell(cell))


def hopf_operator_mnd(c, parameter_adj=None):
    """``J(S x R~ eps~) . psi(C x R~)``; ``R~`` defaults to the forgetful functor
    of the parameter monad."""
    S, E = _factors(c.source, "the Hopf operator")
    if parameter_adj is None:
        parameter_adj = em_category(E).adjunction
    else:
        _check_induces(parameter_adj, E)
    J, psi = c.carrier, c.psi
    C, D = S.base, J.cod
    Rt, epst = parameter_adj.right, parameter_adj.counit
    Q = Rt.dom
    JR = J * functor_product(identity_functor(C), Rt)
    src = product_monad(S, identity_monad(Q))
    jdom = J.dom
    comps = {}
    for p, (x, q) in src.base.obj_pairs.items():
        comps[p] = D.compose(
            J.ar(jdom.pair_mor(C.id(S.endo.ob(x)), Rt.ar(epst[q]))),
            psi[jdom.pair_obj(x, Rt.ob(q))])
    op = NatTrans(f"H({psi.name})", c.target.endo * JR, JR * src.endo, comps)
    cell = MndOneCell(src, c.target, JR, op, name=f"H({c.name})", check=False)
    return _finish(op, cell, validate_mnd_one_cell(cell), parameter_adj)


def fusion_operator_mnd(c):
    """``J(S x mu) . psi(C x E)``."""
    S, E = _factors(c.source, "the fusion operator")
    J, psi = c.carrier, c.psi
    C, P, D = S.base, E.base, J.cod
    JE = J * functor_product(identity_functor(C), E.endo)
    src = product_monad(S, identity_monad(P))
    jdom = J.dom
    comps = {}
    for p, (x, y) in jdom.obj_pairs.items():
        comps[p] = D.compose(
            J.ar(jdom.pair_mor(C.id(S.endo.ob(x)), E.mult[y])),
            psi[jdom.pair_obj(x, E.endo.ob(y))])
    op = NatTrans(f"F({psi.name})", c.target.endo * JE, JE * src.endo, comps)
    cell = MndOneCell(src, c.target, JE, op, name=f"F({c.name})", check=False)
    return _finish(op, cell, validate_mnd_one_cell(cell))


def restrict_adj(result, q):
    """The ordinary 1-cell obtained by fixing the parameter object ``q``."""
    from catkit.core import fix_right
    cell = result.cell
    a = cell.source.factors[0]
    top, bottom = fix_right(cell.top, q), fix_right(cell.bottom, q)
    dom = cell.top.dom
    lam = NatTrans(f"{result.operator.name}@{q}", cell.target.left * top, bottom * a.left,
                   {x: result.operator[dom.pair_obj(x, q)] for x in a.left.dom.objects})
    return AdjOneCell(a, cell.target, top, bottom, lam, name=f"{cell.name}@{q}")


def restrict_mnd(result, q):
    from catkit.core import fix_right
    cell = result.cell
    S = cell.source.factors[0]
    top = fix_right(cell.carrier, q)
    dom = cell.carrier.dom
    psi = NatTrans(f"{result.operator.name}@{q}", cell.target.endo * top, top * S.endo,
                   {x: result.operator[dom.pair_obj(x, q)] for x in S.base.objects})
    return MndOneCell(S, cell.target, top, psi, name=f"{cell.name}@{q}")
