"""Antipodes: the right-adjoint structure re-expressed on free parameters.

On the monad side ``sigma(P, D) = K(eta_P^op, T D) . psi((E P | mu_P), D)`` and,
back again, ``psi((M | k), D) = sigma(M, D) . S K(k^op, D)``.  The adjunction
side uses the same shape with an arbitrary parameter adjunction in place of the
free/forgetful one.
"""
from dataclasses import dataclass, field

from catkit.core import (CheckLog, NatTrans, ParamTrans, functor_product,
                         identity_functor, nat_diff, op_category, op_functor,
                         validate_param_trans)
from catkit.structures import em_category


@dataclass
class Antipode:
    sigma: ParamTrans
    iota: NatTrans
    checks: CheckLog = field(default_factory=CheckLog)


def _agree(log, name, s, t):
    w = nat_diff(s, t)
    return log.record(name, w is None, () if w is None else (w,))


def sigma_from_psi_mnd(K, S, T, E, bundle, psi):
    """``psi`` indexed by algebras to ``sigma`` indexed by parameters."""
    C, P, D = K.cod, E.base, T.base
    kdom = K.dom
    pdom = psi.dom
    free = bundle.free
    comps = {}
    for p in P.objects:
        for d in D.objects:
            comps[kdom.pair_obj(p, d)] = C.compose(
                K.ar(kdom.pair_mor(E.unit[p], D.id(T.endo.ob(d)))),
                psi[pdom.pair_obj(free.ob(p), d)])
    Eop = op_functor(E.endo)
    one_d = identity_functor(D)
    return NatTrans("sigma", S.endo * K * functor_product(Eop, one_d),
                    K * functor_product(identity_functor(op_category(P)), T.endo), comps)


def psi_from_sigma_mnd(K, S, T, E, bundle, sigma, like):
    """Inverse passage: ``psi((M|k), D) = sigma(M, D) . S K(k^op, D)``."""
    C, D = K.cod, T.base
    kdom = K.dom
    alg = bundle.category.algebras
    comps = {}
    for x in like.dom.obj_pairs:
        a, d = like.dom.split_obj(x)
        m, k = alg[a]
        comps[x] = C.compose(sigma[kdom.pair_obj(m, d)],
                             S.endo.ar(K.ar(kdom.pair_mor(k, D.id(d)))))
    return NatTrans("iota", like.source, like.target, comps)


def antipode_mnd(obj, pa_j, S, T, E):
    """From a monad-side parametric adjoint object built with the free parameters."""
    K = pa_j.right
    bundle = em_category(E)
    psi = obj.psi.trans
    sigma = sigma_from_psi_mnd(K, S, T, E, bundle, psi)
    iota = psi_from_sigma_mnd(K, S, T, E, bundle, sigma, psi)
    log = CheckLog()
    _agree(log, "iota-equals-psi", iota, psi)
    _agree(log, "sigma-roundtrip", sigma_from_psi_mnd(K, S, T, E, bundle, iota), sigma)
    pt = ParamTrans(sigma, E.base, T.base)
    rep = validate_param_trans(pt)
    log.record("sigma-square", rep.ok, rep.violations[0].witness if rep.violations else ())
    C, P, D = K.cod, E.base, T.base
    kdom = K.dom
    SE, TE = S.endo, T.endo
    bad1, bad2 = [], []
    for p in P.objects:
        ep = E.endo.ob(p)
        for d in D.objects:
            x = kdom.pair_obj(p, d)
            base = K.ob(kdom.pair_obj(ep, d))
            lhs = C.compose(sigma[x], S.mult[base])
            rhs = C.compose_all(
                K.ar(kdom.pair_mor(P.id(p), T.mult[d])),
                sigma[kdom.pair_obj(p, TE.ob(d))],
                SE.ar(sigma[kdom.pair_obj(ep, d)]),
                SE.ar(SE.ar(K.ar(kdom.pair_mor(E.mult[p], D.id(d))))))
            if lhs != rhs:
                bad1.append(x)
            if C.compose(sigma[x], S.unit[base]) != K.ar(kdom.pair_mor(E.unit[p], T.unit[d])):
                bad2.append(x)
    log.record("sigma-multiplication", not bad1, bad1[:1])
    log.record("sigma-unit", not bad2, bad2[:1])
    return Antipode(pt, iota, log)


def antipode_adj(obj, pa_j, param_adj):
    """Adjunction-side antipode for a parametric adjoint object over ``L~ -| R~``."""
    cell = obj.right_cell
    a = obj.hopf.cell.source.factors[0]
    L, R = a.left, a.right
    target = obj.hopf.cell.target
    Lb, Rb = target.left, target.right
    K = pa_j.right
    Kp = obj.reindexed.right
    Lt, Rt = param_adj.left, param_adj.right
    etat, epst = param_adj.unit, param_adj.counit
    lam, varrho = obj.lam.trans, obj.varrho.trans
    C, D = K.cod, Lb.dom
    P, Q = Lt.dom, Lt.cod
    qdom, wdom, kdom = lam.dom, varrho.dom, K.dom
    RbLb = Rb * Lb
    # psi^KR(Q, D) = varrho(Q, Lb D) . R lam(Q, D)
    psi_comps = {qdom.pair_obj(q, d): C.compose(varrho[wdom.pair_obj(q, Lb.ob(d))],
                                                R.ar(lam[qdom.pair_obj(q, d)]))
                 for q in Q.objects for d in D.objects}
    psi = NatTrans("psi^KR", R * L * Kp,
                   Kp * functor_product(identity_functor(op_category(Q)), RbLb), psi_comps)

    def sigma_of(fam):
        comps = {}
        for p in P.objects:
            for d in D.objects:
                comps[kdom.pair_obj(p, d)] = C.compose(
                    K.ar(kdom.pair_mor(etat[p], D.id(RbLb.ob(d)))),
                    fam[qdom.pair_obj(Lt.ob(p), d)])
        RtLt = op_functor(Rt * Lt)
        return NatTrans("sigma^KR", R * L * K * functor_product(RtLt, identity_functor(D)),
                        K * functor_product(identity_functor(op_category(P)), RbLb), comps)

    def iota_of(sig):
        comps = {}
        for q in Q.objects:
            rq = Rt.ob(q)
            k = Rt.ar(epst[q])
            for d in D.objects:
                comps[qdom.pair_obj(q, d)] = C.compose(
                    sig[kdom.pair_obj(rq, d)],
                    R.ar(L.ar(K.ar(kdom.pair_mor(k, D.id(d))))))
        return NatTrans("iota^KR", psi.source, psi.target, comps)

    sigma = sigma_of(psi)
    iota = iota_of(sigma)
    log = CheckLog()
    rep = validate_param_trans(ParamTrans(psi, Q, D))
    log.record("psi-square", rep.ok, rep.violations[0].witness if rep.violations else ())
    pt = ParamTrans(sigma, P, D)
    rep = validate_param_trans(pt)
    log.record("sigma-square", rep.ok, rep.violations[0].witness if rep.violations else ())
    _agree(log, "iota-equals-psi", iota, psi)
    _agree(log, "sigma-roundtrip", sigma_of(iota), sigma)
    from catkit.twocat import phi_one_cell
    _agree(log, "psi-is-transport-of-right-cell", phi_one_cell(cell).psi, psi)
    out = Antipode(pt, iota, log)
    out.psi = psi
    return out
