import pytest
from hypothesis import given, settings, strategies as st

from catkit import zoo
from catkit.errors import ResourceLimitError
from catkit.core import (FinCat, Functor, NatTrans, ParamTrans,
                         compose_functors, constant_functor, fix_left, fix_right,
                         functor_product, identity_functor, identity_nat, is_invertible,
                         morphism_limit, op_category, op_functor, pairing, product_category,
                         projection, validate_category, validate_functor,
                         validate_nat_trans, validate_param_trans, vcomp)
from catkit.core.transformation import brute_force_inverses

from oracles import inverse_components, is_functor

CATS = [zoo.one, zoo.two, zoo.bool4, zoo.z2, zoo.z2_torsor]


@pytest.mark.parametrize("make", CATS)
def test_fixture_categories_validate(make):
    assert validate_category(make()).ok


def test_two_has_two_objects_three_morphisms():
    T = zoo.two()
    assert (len(T.objects), len(T.morphisms)) == (2, 3)


def test_composition_key_is_g_after_f():
    B = zoo.bool4()
    assert B.compose("a<1", "0<a") == "0<1"
    assert B.compose_all("a<1", "0<a", "id0") == "0<1"


def test_broken_identity_law_reports_pair():
    T = zoo.two()
    bad = FinCat("Two'", T.objects, T.morphisms, T.identities,
                 {**T.composition, ("u", "id0"): "id1"})
    rep = validate_category(bad)
    assert rep.first("identity-law").witness == ("u", "id0")


def test_missing_composite_breaks_totality():
    T = zoo.two()
    comp = dict(T.composition)
    del comp[("u", "id0")]
    rep = validate_category(FinCat("Two-", T.objects, T.morphisms, T.identities, comp))
    assert rep.first("composition-total").witness == ("u", "id0")


def test_swap_is_not_a_functor():
    T = zoo.two()
    swap = Functor("swap", T, T, {"0": "1", "1": "0"}, {"id0": "id1", "id1": "id0", "u": "u"})
    rep = validate_functor(swap)
    assert rep.first().law == "dom-cod" and rep.first().witness == ("u",)
    assert not is_functor(swap)


def test_naturality_failure_on_torsor():
    C = zoo.z2_torsor()
    one = identity_functor(C)
    rep = validate_nat_trans(NatTrans("t", one, one, {"0": "s", "1": "id1"}))
    assert rep.first("naturality").witness == ("u",)


def test_invertibility_agrees_with_brute_force():
    C = zoo.z2_torsor()
    one = identity_functor(C)
    t = NatTrans("t", one, one, {"0": "s", "1": "id1"})
    inv = is_invertible(identity_nat(one))
    assert inv.invertible and inv.inverse == identity_nat(one)
    # componentwise inverses exist for t even though t is not natural
    assert inverse_components(t) == [{"0": "s", "1": "id1"}]
    assert len(brute_force_inverses(identity_nat(one))) == 1


def test_non_invertible_witness():
    T = zoo.two()
    t = NatTrans("t", constant_functor(T, T, "0"), constant_functor(T, T, "1"),
                 {"0": "u", "1": "u"})
    inv = is_invertible(t)
    assert not inv.invertible and inv.witness


def test_product_remembers_factors():
    B = zoo.bool4()
    P = product_category(B, op_category(B))
    x = P.pair_obj("a", "b")
    assert P.split_obj(x) == ("a", "b")
    assert validate_category(P).ok
    assert len(P.morphisms) == len(B.morphisms) ** 2


def test_projection_pairing():
    B, T = zoo.bool4(), zoo.two()
    P = product_category(B, T)
    p1, p2 = projection(P, "left"), projection(P, "right")
    assert pairing(p1, p2).same_maps(identity_functor(P))


def test_fix_arguments():
    J = zoo.bool4_meet()
    assert fix_right(J, "a").ob("1") == "a"
    assert fix_left(J, "b").ob("1") == "b"
    assert validate_functor(fix_right(J, "a")).ok


def test_size_guard():
    B = zoo.bool4()
    with morphism_limit(10):
        with pytest.raises(ResourceLimitError):
            product_category(B, B)


def test_param_trans_square_perturbation():
    T, Z = zoo.two(), zoo.z2()
    P = projection(product_category(op_category(T), Z), "right")
    good = identity_nat(P)
    assert validate_param_trans(ParamTrans(good, T, Z)).ok
    comps = dict(good.components)
    key = P.dom.pair_obj("0", "*")
    comps[key] = "s"
    rep = validate_param_trans(ParamTrans(NatTrans("bad", P, P, comps), T, Z))
    assert rep.first("dinatural-square") is not None


# property tests over random finite posets and groups

@st.composite
def posets(draw):
    n = draw(st.integers(1, 4))
    rel = {(i, j) for i in range(n) for j in range(n)
           if i == j or (i < j and draw(st.booleans()))}
    changed = True
    while changed:  # transitive closure
        changed = False
        for (a, b) in list(rel):
            for (c, d) in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    names = [f"p{i}" for i in range(n)]
    return zoo.poset_category(f"P{n}", names,
                              lambda x, y: (names.index(x), names.index(y)) in rel)


def cyclic(n):
    objs = ("*",)
    mors = [(f"g{i}", "*", "*") for i in range(n)]
    comp = {(f"g{i}", f"g{j}"): f"g{(i + j) % n}" for i in range(n) for j in range(n)}
    return FinCat(f"Z{n}", objs, mors, {"*": "g0"}, comp)


cats = st.one_of(posets(), st.integers(1, 4).map(cyclic))


@settings(max_examples=40, deadline=None)
@given(cats)
def test_random_categories_validate(C):
    assert validate_category(C).ok


@settings(max_examples=40, deadline=None)
@given(cats)
def test_op_is_involution(C):
    assert op_category(op_category(C)) == C
    assert validate_category(op_category(C)).ok


@settings(max_examples=25, deadline=None)
@given(cats, cats)
def test_products_validate_and_project(A, B):
    P = product_category(A, B)
    assert validate_category(P).ok
    assert is_functor(projection(P, "left")) and is_functor(projection(P, "right"))


@settings(max_examples=30, deadline=None)
@given(posets(), st.data())
def test_constant_and_composite_functors(C, data):
    x = data.draw(st.sampled_from(C.objects))
    K = constant_functor(C, C, x)
    F = compose_functors(K, identity_functor(C))
    assert validate_functor(F).ok and is_functor(F)
    assert compose_functors(F, F).same_maps(K)
    assert op_functor(op_functor(K)).same_maps(K)
    assert validate_functor(functor_product(K, identity_functor(C))).ok


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5))
def test_group_automorphisms(n):
    G = cyclic(n)
    for k in range(n):
        mult = Functor("m", G, G, {"*": "*"}, {f"g{i}": f"g{(i * k) % n}" for i in range(n)})
        assert validate_functor(mult).ok == is_functor(mult)


def test_vertical_composition_of_identities():
    B = zoo.bool4()
    one = identity_functor(B)
    assert vcomp(identity_nat(one), identity_nat(one)) == identity_nat(one)
