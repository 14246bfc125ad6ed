"""Lifting a parametric adjunction to categories of algebras along a Hopf cell."""
from dataclasses import dataclass, field

from catkit.errors import PreconditionError
from catkit.core import (CheckLog, NatTrans, fix_left, fix_right, functor_product,
                         identity_functor, nat_diff, op_category, op_functor)
from catkit.structures import (Adjunction, comparison_functor, em_category,
                               identity_adjunction, identity_monad, product_adjunction)
from catkit.twocat import AdjOneCell, left_mate, phi_one_cell, psi_one_cell
from catkit.hopf.operators import fusion_operator_mnd, hopf_operator_adj, hopf_operator_mnd
from catkit.hopf.parametric import ParametricAdjunction, validate_parametric_adjunction
from catkit.hopf.parametric_objects import hopf_adjoint_object_mnd


@dataclass
class Lifting:
    left: object
    right: object
    parametric: ParametricAdjunction
    left_cell: AdjOneCell
    right_cell: AdjOneCell
    adjoint_object: object
    checks: CheckLog = field(default_factory=CheckLog)


def _same(log, name, f, g):
    ok = f.same_maps(g)
    w = ()
    if not ok:
        w = next((x for x in f.obj_map if f.obj_map[x] != g.obj_map.get(x)), None)
        w = (w,) if w is not None else ("morphism map",)
    return log.record(name, ok, w)


def _recover(cell, src, tgt, top, bottom):
    """The adjunction cell whose mate is the identity, as for a strict lifting."""
    D = top.cod
    rho = NatTrans("1", top * src.right, tgt.right * bottom,
                   {x: D.id((top * src.right).ob(x)) for x in src.right.dom.objects})
    lam = left_mate(rho, src, tgt, top, bottom)
    return AdjOneCell(src, tgt, top, bottom, lam, name=f"recovered {cell.name}")


def lift_parametric_adjunction(cell, pa):
    """Lift ``J -| K`` (parameter ``P``) along a Hopf cell ``(J, psi)`` out of ``S x E``."""
    S, E = cell.source.factors
    T = cell.target
    log = CheckLog()
    hop = hopf_operator_mnd(cell)
    if not hop.invertible:
        raise PreconditionError(f"{cell.name} is not Hopf", (hop.witness,))
    log.record("hopf-cell-valid", hop.cell_report.ok)
    fus = fusion_operator_mnd(cell)
    log.record("fusion-agrees-with-hopf", fus.invertible == hop.invertible)
    obj = hopf_adjoint_object_mnd(cell, pa)
    log.extend(obj.checks, prefix="adjoint-object:")

    emS, emE, emT = em_category(S), em_category(E), em_category(T)
    PE = emE.category
    opPE = op_category(PE)
    src = product_adjunction(emS.adjunction, emE.adjunction)
    jcell = psi_one_cell(cell, source_adj=src, target_bundle=emT)
    Jhat = jcell.bottom
    ksrc = product_adjunction(identity_adjunction(opPE), emT.adjunction)
    kcell = psi_one_cell(obj.right_cell, source_adj=ksrc, target_bundle=emS)
    Khat = kcell.bottom

    # the two squares through the comparison functors and the canonical isos
    one_pe = em_category(identity_monad(PE))
    one_op = em_category(identity_monad(opPE))
    iso = comparison_functor(identity_adjunction(PE), one_pe)
    iso_op = comparison_functor(identity_adjunction(opPE), one_op)
    kS = comparison_functor(emS.adjunction, emS)
    kT = comparison_functor(emT.adjunction, emT)
    _same(log, "comparison-on-algebras-is-identity-S", kS, identity_functor(emS.category))
    _same(log, "comparison-on-algebras-is-identity-T", kT, identity_functor(emT.category))
    hlift = psi_one_cell(hop.cell, source_adj=product_adjunction(emS.adjunction,
                                                                 one_pe.adjunction),
                         target_bundle=emT)
    _same(log, "square-left", hlift.bottom * functor_product(kS, iso), kT * Jhat)
    klift = psi_one_cell(obj.right_cell,
                         source_adj=product_adjunction(one_op.adjunction, emT.adjunction),
                         target_bundle=emS)
    _same(log, "square-right", klift.bottom * functor_product(iso_op, kT), kS * Khat)

    # per-algebra lifted adjunctions
    CS, DT = emS.category, emT.category
    US, UT = emS.forget, emT.forget
    adjs = {}
    for q in PE.objects:
        m = emE.forget.ob(q)
        base = pa.adjunction(m)
        Jq, Kq = fix_right(Jhat, q), fix_left(Khat, q)
        unit = {n: CS.lift(base.unit[US.ob(n)], n, Kq.ob(Jq.ob(n))) for n in CS.objects}
        counit = {y: DT.lift(base.counit[UT.ob(y)], Jq.ob(Kq.ob(y)), y) for y in DT.objects}
        adjs[q] = Adjunction(f"lift@{q}", Jq, Kq,
                             NatTrans("eta^", identity_functor(CS), Kq * Jq, unit),
                             NatTrans("eps^", Jq * Kq, identity_functor(DT), counit))
    lifted = ParametricAdjunction("lifted", Jhat, Khat, adjs)
    rep = validate_parametric_adjunction(lifted)
    log.record("lifted-parametric-adjunction", rep.ok,
               rep.violations[0].witness if rep.violations else ())

    J, K = cell.carrier, pa.right
    _same(log, "forget-left", UT * Jhat, J * functor_product(US, emE.forget))
    _same(log, "forget-right", US * Khat, K * functor_product(op_functor(emE.forget), UT))

    # lifting then recovering, and recovering then lifting
    rec_j = _recover(jcell, src, emT.adjunction, J, Jhat)
    log.record("recovered-left-lambda", nat_diff(rec_j.lam, jcell.lam) is None)
    log.record("left-roundtrip-lift-recover", nat_diff(phi_one_cell(rec_j).psi, cell.psi) is None)
    again = psi_one_cell(phi_one_cell(jcell), source_adj=src, target_bundle=emT)
    log.record("left-roundtrip-recover-lift", again == jcell)
    rec_k = _recover(kcell, ksrc, emS.adjunction, obj.right_cell.carrier, Khat)
    log.record("recovered-right-lambda", nat_diff(rec_k.lam, kcell.lam) is None)
    log.record("right-roundtrip-lift-recover",
               nat_diff(phi_one_cell(rec_k).psi, obj.psi.trans) is None)
    again = psi_one_cell(phi_one_cell(kcell), source_adj=ksrc, target_bundle=emS)
    log.record("right-roundtrip-recover-lift", again == kcell)
    log.record("lifted-cell-is-hopf", hopf_operator_adj(jcell).invertible)
    return Lifting(Jhat, Khat, lifted, jcell, kcell, obj, log)
