"""How Hopf and fusion operators move between adjunctions and monads."""
from dataclasses import dataclass, field

from catkit.core import (CheckLog, NatTrans, fix_left, functor_product,
                         identity_functor, is_invertible, nat_diff, nat_product,
                         vcomp)
from catkit.structures import reflects_isomorphisms
from catkit.twocat import phi_one_cell
from catkit.hopf.operators import fusion_operator_mnd, hopf_operator_adj, hopf_operator_mnd


def _agree(log, name, s, t):
    w = nat_diff(s, t)
    return log.record(name, w is None, () if w is None else (w,))


@dataclass
class Comparison:
    checks: CheckLog
    decisions: dict = field(default_factory=dict)


def compare_hopf_phi(c):
    """Hopf operator of the transported cell against the transport of the Hopf cell."""
    a, at = c.source.factors
    log = CheckLog()
    h_adj = hopf_operator_adj(c)
    phi_c = phi_one_cell(c)
    h_mnd = hopf_operator_mnd(phi_c, parameter_adj=at)
    phi_h = phi_one_cell(h_adj.cell)
    _agree(log, "hopf-of-transport-equals-transport-of-hopf", h_mnd.operator, phi_h.psi)
    _agree(log, "mate-unchanged-by-hopf", h_adj.cell.rho, c.rho)
    Rb = c.target.right
    Q = at.left.cod
    ok, w = reflects_isomorphisms(Rb)
    decisions = {"adj": h_adj.invertible, "mnd": h_mnd.invertible,
                 "reflects_isos": ok}
    if h_adj.invertible:
        log.record("adj-invertible-implies-mnd-invertible", h_mnd.invertible)
        if h_mnd.invertible:
            rhs = vcomp(Rb * h_adj.inverse,
                        h_adj.cell.rho * functor_product(a.left, identity_functor(Q)))
            _agree(log, "inverse-relation", h_mnd.inverse, rhs)
    if ok:
        log.record("decisions-agree", h_adj.invertible == h_mnd.invertible)
    return Comparison(log, decisions)


def split_fork_inverse(alpha, A, B, param_adj):
    """Invert ``alpha: A R~ => B R~`` using an inverse of ``alpha L~``.

    Returns ``(inverse_or_None, witness)``.
    """
    Lt, Rt = param_adj.left, param_adj.right
    Z = A.cod
    whisk = NatTrans(f"{alpha.name}L~", A * Rt * Lt, B * Rt * Lt,
                     {p: alpha[Lt.ob(p)] for p in Lt.dom.objects})
    inv = is_invertible(whisk)
    if not inv:
        return None, inv.witness
    comps = {}
    for q in Rt.dom.objects:
        rq = Rt.ob(q)
        comps[q] = Z.compose_all(A.ar(Rt.ar(param_adj.counit[q])),
                                 inv.inverse[rq],
                                 B.ar(param_adj.unit[rq]))
    return NatTrans(f"{alpha.name}^-1", B * Rt, A * Rt, comps), None


def fusion_hopf_equivalence(c):
    """Fusion operator of the transported cell against the transported Hopf cell."""
    a, at = c.source.factors
    Lt, Rt = at.left, at.right
    C, Q = a.left.dom, Lt.cod
    log = CheckLog()
    phi_c = phi_one_cell(c)
    fus = fusion_operator_mnd(phi_c)
    h_adj = hopf_operator_adj(c)
    phi_h = phi_one_cell(h_adj.cell)
    whisk = phi_h.psi * functor_product(identity_functor(C), Lt)
    _agree(log, "fusion-equals-whiskered-hopf", fus.operator, whisk)
    # split-fork inverse at each fixed object of C
    J, Lb, Rb = c.top, c.target.left, c.target.right
    S = phi_c.source.factors[0].endo
    lemma_ok, lemma_w = True, ()
    alpha_invertible = True
    for x in C.objects:
        A = Rb * Lb * fix_left(J, x)
        B = fix_left(J, S.ob(x))
        dom = phi_h.psi.dom
        alpha = NatTrans(f"alpha_{x}", A * Rt, B * Rt,
                         {q: phi_h.psi[dom.pair_obj(x, q)] for q in Q.objects})
        formula, _w = split_fork_inverse(alpha, A, B, at)
        brute = is_invertible(alpha)
        alpha_invertible &= brute.invertible
        if formula is None:
            continue
        if not brute or nat_diff(formula, brute.inverse) is not None:
            lemma_ok, lemma_w = False, (x,)
    log.record("split-fork-inverse-equals-brute-force", lemma_ok, lemma_w)
    ok, w = reflects_isomorphisms(Rb)
    decisions = {"fusion": fus.invertible, "hopf": h_adj.invertible, "reflects_isos": ok}
    if fus.invertible:
        log.record("fusion-invertible-implies-transported-hopf-invertible", alpha_invertible)
    if ok:
        log.record("decisions-agree", fus.invertible == h_adj.invertible)
    if fus.invertible and h_adj.invertible:
        L, R = a.left, a.right
        one_c = identity_functor(C)
        lhs = vcomp(Rb * h_adj.inverse,
                    h_adj.cell.rho * functor_product(L, identity_functor(Q)))
        rhs = vcomp(Rb * Lb * J * nat_product(one_c, Rt * at.counit),
                    fus.inverse * functor_product(one_c, Rt),
                    J * nat_product(R * L, at.unit * Rt))
        _agree(log, "inverse-via-fusion", lhs, rhs)
    return Comparison(log, decisions)
