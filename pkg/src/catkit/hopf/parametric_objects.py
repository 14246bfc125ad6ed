"""Right adjoints of Hopf cells with respect to a parametric adjunction.

Per-parameter adjoint objects are computed one at a time and then glued into a
single family indexed by ``Q^op x D``; the gluing is only accepted if the
mixed-variance square commutes everywhere.
"""
from dataclasses import dataclass, field

from catkit.errors import ConstructionError, PreconditionError
from catkit.core import (CheckLog, NatTrans, ParamTrans, functor_product,
                         identity_functor, nat_diff, op_category,
                         validate_param_trans)
from catkit.structures import (identity_adjunction, identity_monad,
                               product_adjunction, product_monad)
from catkit.twocat import AdjOneCell, MndOneCell, validate_adj_one_cell, validate_mnd_one_cell
from catkit.hopf.adjoint import adjoint_object_adj, adjoint_object_mnd
from catkit.hopf.operators import (hopf_operator_adj, hopf_operator_mnd, restrict_adj,
                                   restrict_mnd)
from catkit.hopf.parametric import reindex


def _require_square(pt, what):
    rep = validate_param_trans(pt)
    if not rep.ok:
        v = rep.violations[0]
        raise ConstructionError(f"{what}: {v.law} fails at {v.witness}", v.witness)
    return rep


def _require_hopf(result):
    if not result.invertible:
        raise PreconditionError(f"{result.operator.name} is not invertible",
                                (result.witness,))


@dataclass
class AdjHopfAdjointObject:
    hopf: object
    reindexed: object
    pieces: dict
    lam: ParamTrans
    varrho: ParamTrans
    right_cell: AdjOneCell
    checks: CheckLog = field(default_factory=CheckLog)


def hopf_adjoint_object_adj(cell, pa_j, pa_v):
    """Right adjoint, parametrised over ``Q``, of a Hopf cell ``(J, V, lam)``.

    ``pa_j`` is ``J -| K`` with parameter ``P``; ``pa_v`` is ``V -| W`` with
    parameter ``Q`` (the codomain of the parameter adjunction).
    """
    hop = hopf_operator_adj(cell)
    _require_hopf(hop)
    a, at = cell.source.factors
    Rt = at.right
    Q = at.left.cod
    pa_r = reindex(pa_j, Rt)
    log = CheckLog()
    pieces = {}
    for q in Q.objects:
        restricted = restrict_adj(hop, q)
        piece = adjoint_object_adj(restricted, pa_r.adjunction(q), pa_v.adjunction(q))
        log.extend(piece.checks, prefix=f"{q}:")
        pieces[q] = piece
    Lb, Rb = cell.target.left, cell.target.right
    L, R = a.left, a.right
    Kp, W = pa_r.right, pa_v.right
    D, Y = Lb.dom, Lb.cod
    opQ = op_category(Q)
    dom = Kp.dom
    lam = NatTrans("lam^KWR", L * Kp, W * functor_product(identity_functor(opQ), Lb),
                   {dom.pair_obj(q, d): pieces[q].lam_kw[d]
                    for q in Q.objects for d in D.objects})
    lam_pt = ParamTrans(lam, Q, D)
    _require_square(lam_pt, "extended lambda")
    log.record("lambda-square", True)
    wdom = W.dom
    varrho = NatTrans("varrho^KWR", R * W, Kp * functor_product(identity_functor(opQ), Rb),
                      {wdom.pair_obj(q, y): pieces[q].delta_kw[y]
                       for q in Q.objects for y in Y.objects})
    varrho_pt = ParamTrans(varrho, Q, Y)
    _require_square(varrho_pt, "extended varrho")
    log.record("varrho-square", True)
    src = product_adjunction(identity_adjunction(opQ), cell.target)
    right = AdjOneCell(src, a, Kp, W, lam, name="(K(R~ x D),W)", check=False)
    rep = validate_adj_one_cell(right)
    log.record("right-cell", rep.ok, rep.violations[0].witness if rep.violations else ())
    if rep.ok:
        w = nat_diff(right.rho_inv, varrho)
        log.record("varrho-is-inverse-mate", w is None, () if w is None else (w,))
    return AdjHopfAdjointObject(hop, pa_r, pieces, lam_pt, varrho_pt, right, log)


@dataclass
class MndHopfAdjointObject:
    hopf: object
    reindexed: object
    pieces: dict
    psi: ParamTrans
    right_cell: MndOneCell
    parameter_adj: object
    checks: CheckLog = field(default_factory=CheckLog)


def hopf_adjoint_object_mnd(cell, pa_j, parameter_adj=None):
    """Right adjoint, parametrised over algebras of ``E``, of a Hopf ``(J, psi)``."""
    hop = hopf_operator_mnd(cell, parameter_adj)
    _require_hopf(hop)
    padj = hop.parameter_adj
    S, _E = cell.source.factors
    T = cell.target
    Q = padj.left.cod
    pa_r = reindex(pa_j, padj.right)
    log = CheckLog()
    pieces = {}
    for q in Q.objects:
        restricted = restrict_mnd(hop, q)
        piece = adjoint_object_mnd(restricted, pa_r.adjunction(q))
        log.extend(piece.checks, prefix=f"{q}:")
        pieces[q] = piece
    Kp = pa_r.right
    opQ = op_category(Q)
    dom = Kp.dom
    D = T.base
    psi = NatTrans("psi^KUE", S.endo * Kp,
                   Kp * functor_product(identity_functor(opQ), T.endo),
                   {dom.pair_obj(q, d): pieces[q].psi_k[d]
                    for q in Q.objects for d in D.objects})
    psi_pt = ParamTrans(psi, Q, D)
    _require_square(psi_pt, "extended psi")
    log.record("psi-square", True)
    src = product_monad(identity_monad(opQ), T)
    right = MndOneCell(src, S, Kp, psi, name="(K(U x D),psi^KUE)", check=False)
    rep = validate_mnd_one_cell(right)
    log.record("right-cell", rep.ok, rep.violations[0].witness if rep.violations else ())
    return MndHopfAdjointObject(hop, pa_r, pieces, psi_pt, right, padj, log)
