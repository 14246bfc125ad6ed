"""Adjoint objects in the 2-categories of adjunctions and of monads.

Given a cell whose structure transformation is invertible, and adjunctions
``J -| K`` (and ``V -| W`` on the adjunction side), the right adjoint cell is
built from explicit formulas; every formula is cross-checked against
brute-force inverses.
"""
from dataclasses import dataclass, field
import itertools

from catkit.errors import PreconditionError, StructuralError
from catkit.core import (CheckLog, NatTrans, identity_functor, is_invertible,
                         nat_diff, vcomp)
from catkit.structures import find_right_adjoint, validate_adjunction
from catkit.twocat import (AdjOneCell, AdjTwoCell, MndOneCell, MndTwoCell,
                           compose_adj_cells, compose_mnd_cells, identity_adj_cell,
                           identity_mnd_cell, psi_one_cell, retype,
                           validate_adj_one_cell, validate_adj_two_cell,
                           validate_mnd_one_cell, validate_mnd_two_cell)


def _agree(log, name, s, t):
    w = nat_diff(s, t)
    return log.record(name, w is None, () if w is None else (w,))


@dataclass
class MndAdjointObject:
    cell: MndOneCell
    right_cell: MndOneCell
    adjunction: object
    zeta: NatTrans
    unit_cell: object = None
    counit_cell: object = None
    checks: CheckLog = field(default_factory=CheckLog)

    @property
    def psi_k(self):
        return self.right_cell.psi


def adjoint_object_mnd(cell, jk):
    """Right adjoint of ``(J, psi)`` along ``J -| K`` when ``psi`` is invertible."""
    J, psi = cell.carrier, cell.psi
    if not jk.left.same_maps(J):
        raise StructuralError(f"{jk.name} is not an adjunction on {J.name}")
    inv = is_invertible(psi)
    if not inv:
        raise PreconditionError(f"{psi.name} is not invertible", (inv.witness,))
    zeta = inv.inverse
    K, eta, eps = jk.right, jk.unit, jk.counit
    S, T = cell.source.endo, cell.target.endo
    psi_k = retype(vcomp(K * T * eps, K * zeta * K, eta * S * K),
                   f"psi^{K.name}", S * K, K * T)
    right = MndOneCell(cell.target, cell.source, K, psi_k, name=f"({K.name},psi^K)",
                       check=False)
    log = CheckLog()
    log.record("adjunction", validate_adjunction(jk).ok)
    rep = validate_mnd_one_cell(right)
    log.record("right-cell", rep.ok, rep.violations[0].witness if rep.violations else ())
    zeta_formula = vcomp(eps * T * J, J * psi_k * J, J * S * eta)
    _agree(log, "zeta-formula-equals-inverse", zeta_formula, zeta)
    # Kleisli-dual law: zeta . J mu = mu J . T zeta . zeta S
    D = J.cod
    muS, muT = cell.source.mult, cell.target.mult
    bad = [x for x in J.dom.objects
           if D.compose(zeta[x], J.ar(muS[x])) !=
           D.compose_all(muT[J.ob(x)], T.ar(zeta[x]), zeta[S.ob(x)])]
    log.record("zeta-multiplication", not bad, bad[:1])
    out = MndAdjointObject(cell, right, jk, zeta, checks=log)
    if rep.ok:
        kj = compose_mnd_cells(right, cell, check=False)
        jk_cell = compose_mnd_cells(cell, right, check=False)
        unit = MndTwoCell(identity_mnd_cell(cell.source), kj,
                          retype(eta, "eta", identity_functor(J.dom), kj.carrier),
                          name="unit", check=False)
        counit = MndTwoCell(jk_cell, identity_mnd_cell(cell.target),
                            retype(eps, "eps", jk_cell.carrier, identity_functor(J.cod)),
                            name="counit", check=False)
        for nm, t in (("unit-two-cell", unit), ("counit-two-cell", counit)):
            r = validate_mnd_two_cell(t)
            log.record(nm, r.ok, r.violations[0].witness if r.violations else ())
        out.unit_cell, out.counit_cell = unit, counit
    return out


@dataclass
class AdjAdjointObject:
    cell: AdjOneCell
    right_cell: AdjOneCell
    jk: object
    vw: object
    gamma: NatTrans
    rho_kw: NatTrans
    delta_kw: NatTrans
    unit_cell: object = None
    counit_cell: object = None
    checks: CheckLog = field(default_factory=CheckLog)

    @property
    def lam_kw(self):
        return self.right_cell.lam


def adjoint_object_adj(cell, jk, vw):
    """Right adjoint of ``(J, V, lam)`` along ``J -| K`` and ``V -| W``."""
    J, V, lam = cell.top, cell.bottom, cell.lam
    if not jk.left.same_maps(J) or not vw.left.same_maps(V):
        raise StructuralError("supplied adjunctions do not sit on the cell's functors")
    inv = is_invertible(lam)
    if not inv:
        raise PreconditionError(f"{lam.name} is not invertible", (inv.witness,))
    gamma = inv.inverse
    K, W = jk.right, vw.right
    eta_kj, eps_jk = jk.unit, jk.counit
    eta_wv, eps_vw = vw.unit, vw.counit
    L, R = cell.source.left, cell.source.right
    Lb, Rb = cell.target.left, cell.target.right
    eta_rl, eps_lr = cell.source.unit, cell.source.counit
    etab, epsb = cell.target.unit, cell.target.counit

    lam_kw = retype(vcomp(W * Lb * eps_jk, W * gamma * K, eta_wv * L * K),
                    f"lam^{K.name}{W.name}", L * K, W * Lb)
    right = AdjOneCell(cell.target, cell.source, K, W, lam_kw,
                       name=f"({K.name},{W.name})", check=False)
    rho_kw = retype(vcomp(R * W * epsb,
                          R * W * Lb * eps_jk * Rb,
                          R * W * gamma * K * Rb,
                          R * eta_wv * L * K * Rb,
                          eta_rl * K * Rb),
                    "rho^KW", K * Rb, R * W)
    delta_kw = retype(vcomp(K * Rb * eps_vw,
                            K * Rb * V * eps_lr * W,
                            K * Rb * lam * R * W,
                            K * etab * J * R * W,
                            eta_kj * R * W),
                      "delta^KW", R * W, K * Rb)
    log = CheckLog()
    log.record("adjunction-JK", validate_adjunction(jk).ok)
    log.record("adjunction-VW", validate_adjunction(vw).ok)
    _agree(log, "rho-formula-equals-mate", rho_kw, right.rho)
    C, X = J.dom, V.dom
    bad = [y for y in Rb.dom.objects
           if C.compose(rho_kw[y], delta_kw[y]) != C.id(R.ob(W.ob(y)))
           or C.compose(delta_kw[y], rho_kw[y]) != C.id(K.ob(Rb.ob(y)))]
    log.record("rho-delta-inverse", not bad, bad[:1])
    gamma_formula = vcomp(eps_vw * Lb * J, V * lam_kw * J, V * L * eta_kj)
    _agree(log, "gamma-formula-equals-inverse", gamma_formula, gamma)
    rep = validate_adj_one_cell(right)
    log.record("right-cell", rep.ok, rep.violations[0].witness if rep.violations else ())
    out = AdjAdjointObject(cell, right, jk, vw, gamma, rho_kw, delta_kw, checks=log)
    if rep.ok:
        kj = compose_adj_cells(right, cell, check=False)
        jk_cell = compose_adj_cells(cell, right, check=False)
        unit = AdjTwoCell(identity_adj_cell(cell.source), kj,
                          retype(eta_kj, "eta^KJ", identity_functor(C), kj.top),
                          retype(eta_wv, "eta^WV", identity_functor(X), kj.bottom),
                          name="unit", check=False)
        counit = AdjTwoCell(jk_cell, identity_adj_cell(cell.target),
                            retype(eps_jk, "eps^JK", jk_cell.top, identity_functor(J.cod)),
                            retype(eps_vw, "eps^VW", jk_cell.bottom, identity_functor(V.cod)),
                            name="counit", check=False)
        for nm, t in (("unit-two-cell", unit), ("counit-two-cell", counit)):
            r = validate_adj_two_cell(t)
            log.record(nm, r.ok, r.violations[0].witness if r.violations else ())
        out.unit_cell, out.counit_cell = unit, counit
    return out


# exhaustive decision procedures for the equivalence of the four conditions

def _families(target_cat, homs, cap):
    total = 1
    for h in homs:
        total *= len(h)
    if total > cap:
        from catkit.errors import ResourceLimitError
        raise ResourceLimitError(f"{total} candidate families exceed the search cap {cap}")
    return itertools.product(*homs)


def search_mnd_right_adjoint(cell, jk, cap=100000):
    """Some ``psi^K`` making ``(K, psi^K)`` a right adjoint of ``cell``, or None."""
    K, S, T = jk.right, cell.source.endo, cell.target.endo
    C = K.cod
    objs = K.dom.objects
    homs = [C.hom(S.ob(K.ob(d)), K.ob(T.ob(d))) for d in objs]
    for combo in _families(C, homs, cap):
        psi_k = NatTrans("cand", S * K, K * T, dict(zip(objs, combo)))
        right = MndOneCell(cell.target, cell.source, K, psi_k, check=False)
        if not validate_mnd_one_cell(right).ok:
            continue
        kj = compose_mnd_cells(right, cell, check=False)
        jkc = compose_mnd_cells(cell, right, check=False)
        unit = MndTwoCell(identity_mnd_cell(cell.source), kj,
                          retype(jk.unit, "eta", identity_functor(K.cod), kj.carrier), check=False)
        counit = MndTwoCell(jkc, identity_mnd_cell(cell.target),
                            retype(jk.counit, "eps", jkc.carrier, identity_functor(K.dom)),
                            check=False)
        if validate_mnd_two_cell(unit).ok and validate_mnd_two_cell(counit).ok:
            return right
    return None


def search_adj_right_adjoint(cell, jk, vw=None, cap=100000):
    """Some ``(K, W, lam^KW)`` right adjoint to ``cell``, or None.

    ``W`` is found by exhaustive search when not supplied.
    """
    if vw is None:
        vw = find_right_adjoint(cell.bottom)
        if vw is None:
            return None
    K, W = jk.right, vw.right
    L, Lb = cell.source.left, cell.target.left
    X = L.cod
    objs = K.dom.objects
    homs = [X.hom(L.ob(K.ob(d)), W.ob(Lb.ob(d))) for d in objs]
    for combo in _families(X, homs, cap):
        lam = NatTrans("cand", L * K, W * Lb, dict(zip(objs, combo)))
        right = AdjOneCell(cell.target, cell.source, K, W, lam, check=False)
        if not validate_adj_one_cell(right).ok:
            continue
        kj = compose_adj_cells(right, cell, check=False)
        jkc = compose_adj_cells(cell, right, check=False)
        unit = AdjTwoCell(identity_adj_cell(cell.source), kj,
                          retype(jk.unit, "eta", identity_functor(K.cod), kj.top),
                          retype(vw.unit, "eta", identity_functor(W.cod), kj.bottom),
                          check=False)
        counit = AdjTwoCell(jkc, identity_adj_cell(cell.target),
                            retype(jk.counit, "eps", jkc.top, identity_functor(K.dom)),
                            retype(vw.counit, "eps", jkc.bottom, identity_functor(W.dom)),
                            check=False)
        if validate_adj_two_cell(unit).ok and validate_adj_two_cell(counit).ok:
            return right
    return None


@dataclass
class Equivalence:
    mnd_adjoint: bool
    adj_adjoint: bool
    psi_invertible: bool
    lam_invertible: bool

    @property
    def agree(self):
        return len({self.mnd_adjoint, self.adj_adjoint, self.psi_invertible,
                    self.lam_invertible}) == 1

    def as_dict(self):
        return {"mnd_adjoint_object": self.mnd_adjoint,
                "adj_adjoint_object": self.adj_adjoint,
                "psi_invertible": self.psi_invertible,
                "lambda_invertible": self.lam_invertible,
                "agree": self.agree}


def adjoint_equivalence(cell, jk, cap=100000):
    """Decide the four conditions on a monad 1-cell independently of each other."""
    lifted = psi_one_cell(cell)
    return Equivalence(
        mnd_adjoint=search_mnd_right_adjoint(cell, jk, cap) is not None,
        adj_adjoint=search_adj_right_adjoint(lifted, jk, cap=cap) is not None,
        psi_invertible=is_invertible(cell.psi).invertible,
        lam_invertible=is_invertible(lifted.lam).invertible)
