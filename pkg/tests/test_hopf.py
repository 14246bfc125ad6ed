import pytest

from catkit import zoo
from catkit.errors import PreconditionError
from catkit.core import (Functor, NatTrans, fix_left, fix_right, identity_functor,
                         op_category, product_category, projection, validate_functor)
from catkit.core.transformation import brute_force_inverses
from catkit.structures import Adjunction, em_category, product_adjunction
from catkit.twocat import AdjOneCell, phi_one_cell
from catkit.hopf import (ParametricAdjunction, adjoint_equivalence, adjoint_object_adj,
                         adjoint_object_mnd, antipode_adj, antipode_mnd, compare_hopf_phi,
                         fusion_hopf_equivalence, fusion_operator_mnd,
                         hopf_adjoint_object_adj, hopf_adjoint_object_mnd, hopf_operator_adj,
                         hopf_operator_mnd, lift_parametric_adjunction,
                         parametric_right_adjoint, reindex, restrict_adj, restrict_mnd,
                         search_mnd_right_adjoint, validate_parametric_adjunction)

from conftest import lift_cell


def failed(log):
    return [(c.name, c.witness) for c in log.checks if not c.ok]


def test_nucleus_parametric_adjunction(npa):
    assert validate_parametric_adjunction(npa).ok
    found = parametric_right_adjoint(npa.left, npa.adjunctions)
    assert found.same_maps(npa.right)


def test_twisted_parametric_adjunction_fails_conjugation():
    T, Z = zoo.two(), zoo.z2()
    F = projection(product_category(Z, T), "left")
    dom = product_category(op_category(T), Z)
    G = Functor("G", dom, Z, {x: "*" for x in dom.objects},
                {m.id: Z.compose("s", dom.split_mor(m.id)[1])
                 if dom.split_mor(m.id)[0] == "u" else dom.split_mor(m.id)[1]
                 for m in dom.morphisms})
    assert validate_functor(G).ok
    adjs = {}
    for p in T.objects:
        L, R = fix_right(F, p), fix_left(G, p)
        adjs[p] = Adjunction(p, L, R, NatTrans("eta", identity_functor(Z), R * L, {"*": "e"}),
                             NatTrans("eps", L * R, identity_functor(Z), {"*": "e"}))
    rep = validate_parametric_adjunction(ParametricAdjunction("twisted", F, G, adjs))
    assert rep.first("conjugate").witness == ("u", "*")


def test_hopf_operators_on_nucleus(ncell):
    h = hopf_operator_mnd(ncell)
    assert h.invertible and h.cell_report.ok
    assert [t.components for t in brute_force_inverses(h.operator)] == [h.inverse.components]
    f = fusion_operator_mnd(ncell)
    assert f.invertible
    ha = hopf_operator_adj(lift_cell(ncell))
    assert ha.invertible


def test_meetcell_is_not_hopf(mcell):
    h = hopf_operator_mnd(mcell)
    assert not h.invertible
    assert h.witness_parts() == ("0", "(1|id1)")
    assert brute_force_inverses(h.operator) == []
    assert not fusion_operator_mnd(mcell).invertible
    assert not hopf_operator_adj(lift_cell(mcell)).invertible


def test_hopf_requires_product_source():
    from catkit.twocat import identity_mnd_cell
    with pytest.raises(PreconditionError):
        hopf_operator_mnd(identity_mnd_cell(zoo.bool4_nucleus()))


def test_adjoint_objects_at_each_algebra(ncell, npa, nlift):
    h = hopf_operator_mnd(ncell)
    ha = hopf_operator_adj(nlift.left_cell)
    emE = em_category(ncell.source.factors[1])
    for q in emE.category.objects:
        jk = npa.adjunction(emE.forget.ob(q))
        r = restrict_mnd(h, q)
        obj = adjoint_object_mnd(r, jk)
        assert obj.checks.ok, failed(obj.checks)
        assert search_mnd_right_adjoint(r, jk) is not None
        objA = adjoint_object_adj(restrict_adj(ha, q), jk, nlift.parametric.adjunction(q))
        assert objA.checks.ok, failed(objA.checks)
        assert adjoint_equivalence(r, jk).as_dict() == {
            "mnd_adjoint_object": True, "adj_adjoint_object": True, "psi_invertible": True,
            "lambda_invertible": True, "agree": True}


def test_meetcell_restriction_has_no_adjoint(mcell, mpa):
    h = hopf_operator_mnd(mcell)
    r = restrict_mnd(h, "(1|id1)")
    eq = adjoint_equivalence(r, mpa.adjunction("1"))
    assert eq.agree and not eq.mnd_adjoint


def test_parametric_adjoint_objects(ncell, npa, nlift):
    obj = hopf_adjoint_object_mnd(ncell, npa)
    assert obj.checks.ok, failed(obj.checks)
    objA = hopf_adjoint_object_adj(nlift.left_cell, npa, nlift.parametric)
    assert objA.checks.ok, failed(objA.checks)


def test_parametric_adjoint_object_needs_hopf(mcell, mpa):
    with pytest.raises(PreconditionError):
        hopf_adjoint_object_mnd(mcell, mpa)


def test_antipodes(ncell, npa, nlift):
    j = ncell.target
    obj = hopf_adjoint_object_mnd(ncell, npa)
    ap = antipode_mnd(obj, npa, j, j, j)
    assert ap.checks.ok, failed(ap.checks)
    objA = hopf_adjoint_object_adj(nlift.left_cell, npa, nlift.parametric)
    apA = antipode_adj(objA, npa, em_category(j).adjunction)
    assert apA.checks.ok, failed(apA.checks)


def test_transport_comparisons(ncell, mcell):
    for c in (lift_cell(ncell), lift_cell(mcell)):
        cmp = compare_hopf_phi(c)
        assert cmp.checks.ok, failed(cmp.checks)
        assert cmp.decisions["reflects_isos"]
        fh = fusion_hopf_equivalence(c)
        assert fh.checks.ok, failed(fh.checks)
        assert fh.decisions["fusion"] == fh.decisions["hopf"]


def test_heyting_product_cell_without_reflection():
    hb = zoo.heyting_adjunction("b")
    J = zoo.bool4_meet()
    src = product_adjunction(hb, hb)
    c = AdjOneCell(src, hb, J, J, zoo.thin_nat("lam", hb.left * J, J * src.left))
    cmp = compare_hopf_phi(c)
    assert cmp.checks.ok and cmp.decisions["reflects_isos"] is False
    assert "decisions-agree" not in [k.name for k in cmp.checks.checks]
    assert fusion_hopf_equivalence(c).checks.ok
    assert phi_one_cell(c).source.factors is not None


def test_lifting(nlift):
    assert nlift.checks.ok, failed(nlift.checks)
    assert validate_parametric_adjunction(nlift.parametric).ok
    alg = nlift.right.cod.algebras
    carriers = {x: alg[y][0] for x, y in nlift.right.obj_map.items()}
    assert sorted(carriers.values()) == ["1", "1", "1", "a"]


def test_lifting_needs_hopf(mcell, mpa):
    with pytest.raises(PreconditionError):
        lift_parametric_adjunction(mcell, mpa)


def test_reindexing_along_forgetful(npa):
    emE = em_category(zoo.bool4_nucleus())
    r = reindex(npa, emE.forget)
    assert validate_parametric_adjunction(r).ok
    assert len(r.adjunctions) == 2
