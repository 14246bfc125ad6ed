"""Acceptance criteria, one test each; the run prints a PASS/FAIL line per criterion."""
import subprocess
import sys

import pytest

from catkit import zoo
from catkit.core import (FinCat, Functor, NatTrans, ParamTrans, constant_functor,
                         fix_left, fix_right, identity_functor, identity_nat, op_category,
                         product_category, projection, validate_category, validate_functor,
                         validate_nat_trans, validate_param_trans)
from catkit.core.transformation import brute_force_inverses
from catkit.structures import (Adjunction, Monad, em_category, enumerate_algebras,
                               identity_monad, monad_from_adjunction, product_adjunction,
                               reflects_isomorphisms, validate_adjunction, validate_monad)
from catkit.twocat import AdjOneCell, MndOneCell, validate_mnd_one_cell
from catkit.hopf import (ParametricAdjunction, adjoint_equivalence, adjoint_object_adj,
                         adjoint_object_mnd, antipode_mnd, compare_hopf_phi,
                         fusion_hopf_equivalence, hopf_adjoint_object_mnd, hopf_operator_adj,
                         hopf_operator_mnd, restrict_adj, restrict_mnd,
                         search_adj_right_adjoint, search_mnd_right_adjoint,
                         validate_parametric_adjunction)
from catkit.harness import FIXTURE_NAMES, generate_fixture, validate_all

from conftest import lift_cell, meet_cell, meet_parametric, nucleus_cell, nucleus_parametric
from oracles import algebras_by_brute_force


def _perturbations():
    """(description, report, law, witness) for every documented mutation."""
    T, Z, ZT = zoo.two(), zoo.z2(), zoo.z2_torsor()
    out = []
    bad = FinCat("Two'", T.objects, T.morphisms, T.identities,
                 {**T.composition, ("u", "id0"): "id1"})
    out.append(("identity law", validate_category(bad), "identity-law", ("u", "id0")))
    swap = Functor("swap", T, T, {"0": "1", "1": "0"}, {"id0": "id1", "id1": "id0", "u": "u"})
    out.append(("swap functor", validate_functor(swap), "dom-cod", ("u",)))
    one = identity_functor(Z)
    tw = Adjunction("twisted", one, one, NatTrans("eta", one, one * one, {"*": "e"}),
                    NatTrans("eps", one * one, one, {"*": "s"}))
    out.append(("twisted counit", validate_adjunction(tw), "triangle-left", ("*",)))
    S = constant_functor(T, T, "0")
    j0 = Monad("j0", T, S, NatTrans("mu", S * S, S, {"0": "id0", "1": "id0"}),
               NatTrans("eta", identity_functor(T), S, {"0": "id0", "1": "id0"}))
    out.append(("constant monad", validate_monad(j0), "component-typing", ("1",)))
    P = projection(product_category(op_category(T), Z), "right")
    comps = dict(identity_nat(P).components)
    comps[P.dom.pair_obj("0", "*")] = "s"
    out.append(("param square", validate_param_trans(ParamTrans(NatTrans("bad", P, P, comps), T, Z)),
                "dinatural-square", None))
    F = projection(product_category(Z, T), "left")
    dom = product_category(op_category(T), Z)
    G = Functor("G", dom, Z, {x: "*" for x in dom.objects},
                {m.id: Z.compose("s", dom.split_mor(m.id)[1])
                 if dom.split_mor(m.id)[0] == "u" else dom.split_mor(m.id)[1]
                 for m in dom.morphisms})
    adjs = {}
    for p in T.objects:
        L, R = fix_right(F, p), fix_left(G, p)
        adjs[p] = Adjunction(p, L, R, NatTrans("eta", identity_functor(Z), R * L, {"*": "e"}),
                             NatTrans("eps", L * R, identity_functor(Z), {"*": "e"}))
    out.append(("twisted parametric adjunction",
                validate_parametric_adjunction(ParametricAdjunction("tw", F, G, adjs)),
                "conjugate", ("u", "*")))
    m = identity_monad(Z)
    c = MndOneCell(m, m, one, NatTrans("psi", one, one, {"*": "s"}), check=False)
    out.append(("twisted monad cell", validate_mnd_one_cell(c), "psi-unit", ("*",)))
    oneT = identity_functor(ZT)
    out.append(("torsor transformation",
                validate_nat_trans(NatTrans("t", oneT, oneT, {"0": "s", "1": "id1"})),
                "naturality", ("u",)))
    return out


def test_criterion_01_law_suites_pass_on_fixtures_and_fail_on_perturbations():
    names = [n for n in FIXTURE_NAMES if n != "id-monad(C)"] + [
        f"id-monad({c})" for c in ("one", "two", "bool4", "z2")]
    for n in names:
        assert validate_all(generate_fixture(n)).outcome == "pass", n
    for make in (zoo.one, zoo.two, zoo.bool4, zoo.z2, zoo.z2_torsor):
        assert validate_category(make()).ok
    for p in zoo.BOOL4:
        assert validate_adjunction(zoo.heyting_adjunction(p)).ok
    for what, rep, law, witness in _perturbations():
        v = rep.first(law)
        assert v is not None, what
        if witness is not None:
            assert v.witness == witness, what


MONADS = {"id-on-Two": lambda: identity_monad(zoo.two()), "Closure1": zoo.closure1,
          "bool4-nucleus": zoo.bool4_nucleus}


def test_criterion_02_induced_monad_of_algebras_is_the_monad():
    for name, make in MONADS.items():
        m = make()
        back = monad_from_adjunction(em_category(m).em_adjunction)
        assert back.endo.same_maps(m.endo), name
        assert back.mult.components == m.mult.components, name
        assert back.unit.components == m.unit.components, name


def test_criterion_03_algebra_counts_match_brute_force():
    expected = {"id-on-Two": 2, "Closure1": 1, "bool4-nucleus": 2}
    for name, make in MONADS.items():
        m = make()
        oracle = algebras_by_brute_force(m)
        assert len(oracle) == expected[name]
        assert sorted(oracle) == sorted(enumerate_algebras(m))
        assert len(em_category(m).category.objects) == expected[name]


@pytest.fixture(scope="module")
def nucleus():
    from catkit.hopf import lift_parametric_adjunction
    c, pa = nucleus_cell(), nucleus_parametric()
    return c, pa, lift_parametric_adjunction(c, pa)


def test_criterion_04_constructed_inverses_and_adjoint_objects(nucleus):
    c, pa, lift = nucleus
    h, ha = hopf_operator_mnd(c), hopf_operator_adj(lift.left_cell)
    emE = em_category(c.source.factors[1])
    for q in emE.category.objects:
        jk = pa.adjunction(emE.forget.ob(q))
        r = restrict_mnd(h, q)
        mo = adjoint_object_mnd(r, jk)
        assert mo.checks.get("zeta-formula-equals-inverse").ok
        assert [t.components for t in brute_force_inverses(r.psi)] == [mo.zeta.components]
        assert mo.checks.ok, mo.checks.failed()
        ao = adjoint_object_adj(restrict_adj(ha, q), jk, lift.parametric.adjunction(q))
        assert ao.checks.get("gamma-formula-equals-inverse").ok
        lam = restrict_adj(ha, q).lam
        assert [t.components for t in brute_force_inverses(lam)] == [ao.gamma.components]
        assert search_adj_right_adjoint(restrict_adj(ha, q), jk) is not None
        assert ao.checks.ok, ao.checks.failed()


def test_criterion_05_four_statements_agree():
    c, pa = nucleus_cell(), nucleus_parametric()
    h = hopf_operator_mnd(c)
    emE = em_category(c.source.factors[1])
    for q in emE.category.objects:
        eq = adjoint_equivalence(restrict_mnd(h, q), pa.adjunction(emE.forget.ob(q)))
        assert eq.agree and eq.mnd_adjoint
    m, mpa = meet_cell(), meet_parametric()
    hm = hopf_operator_mnd(m)
    bad = hm.witness_parts()[1]
    eq = adjoint_equivalence(restrict_mnd(hm, bad), mpa.adjunction("1"))
    assert eq.agree and not eq.mnd_adjoint
    assert search_mnd_right_adjoint(restrict_mnd(hm, bad), mpa.adjunction("1")) is None


def _product_cells():
    hb = zoo.heyting_adjunction("b")
    J = zoo.bool4_meet()
    src = product_adjunction(hb, hb)
    heyting = AdjOneCell(src, hb, J, J, zoo.thin_nat("lam", hb.left * J, J * src.left))
    return {"bool4-nucleus": lift_cell(nucleus_cell()), "meetcell": lift_cell(meet_cell()),
            "heyting-meet": heyting}


def test_criterion_06_hopf_operator_commutes_with_transport():
    for name, c in _product_cells().items():
        cmp = compare_hopf_phi(c)
        assert cmp.checks.get("hopf-of-transport-equals-transport-of-hopf").ok, name
        assert cmp.checks.ok, (name, cmp.checks.failed())
        if cmp.decisions["adj"] and cmp.decisions["mnd"]:
            assert cmp.checks.get("inverse-relation").ok
        if c.target.em_of is not None:
            ok, _ = reflects_isomorphisms(c.target.right)
            assert ok and cmp.checks.get("decisions-agree").ok


def test_criterion_07_fusion_and_hopf():
    decided = {}
    for name, c in _product_cells().items():
        fh = fusion_hopf_equivalence(c)
        assert fh.checks.get("fusion-equals-whiskered-hopf").ok, name
        assert fh.checks.get("split-fork-inverse-equals-brute-force").ok, name
        assert fh.checks.ok, (name, fh.checks.failed())
        decided[name] = (fh.decisions["fusion"], fh.decisions["hopf"])
    assert decided["bool4-nucleus"] == (True, True)
    assert decided["meetcell"] == (False, False)


def test_criterion_08_antipode_round_trips(nucleus):
    c, pa, _ = nucleus
    j = c.target
    ap = antipode_mnd(hopf_adjoint_object_mnd(c, pa), pa, j, j, j)
    for name in ("iota-equals-psi", "sigma-roundtrip", "sigma-square",
                 "sigma-multiplication", "sigma-unit"):
        assert ap.checks.get(name).ok, name


def test_criterion_09_lifted_parametric_adjunction(nucleus):
    _, _, lift = nucleus
    assert validate_parametric_adjunction(lift.parametric).ok
    assert len(lift.parametric.adjunctions) == 2
    for name in ("square-left", "square-right", "forget-left", "forget-right",
                 "left-roundtrip-lift-recover", "left-roundtrip-recover-lift",
                 "right-roundtrip-lift-recover", "right-roundtrip-recover-lift"):
        assert lift.checks.get(name).ok, name
    assert lift.checks.ok, lift.checks.failed()


def test_criterion_10_reports_are_byte_identical(tmp_path):
    spec = tmp_path / "bool4-nucleus.json"
    cli = [sys.executable, "-m", "catkit.harness.cli"]
    subprocess.run(cli + ["fixture", "--name", "bool4-nucleus", "--out", str(spec)], check=True)
    runs = [subprocess.run(cli + ["run", str(spec)], capture_output=True) for _ in range(2)]
    assert [r.returncode for r in runs] == [0, 0]
    assert runs[0].stdout == runs[1].stdout and runs[0].stdout
