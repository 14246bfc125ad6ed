import pytest

from catkit import zoo
from catkit.core import NatTrans, constant_functor, identity_functor, validate_category
from catkit.structures import (Adjunction, Monad, comparison_functor, em_category,
                               enumerate_algebras, find_right_adjoint, identity_adjunction,
                               identity_monad, monad_from_adjunction, product_adjunction,
                               product_monad, reflects_isomorphisms, validate_adjunction,
                               validate_monad)

from oracles import algebras_by_brute_force, is_functor

MONADS = {
    "id-two": lambda: identity_monad(zoo.two()),
    "closure1": zoo.closure1,
    "nucleus": zoo.bool4_nucleus,
    "id-z2": lambda: identity_monad(zoo.z2()),
}


@pytest.mark.parametrize("name", sorted(MONADS))
def test_monads_validate(name):
    assert validate_monad(MONADS[name]()).ok


@pytest.mark.parametrize("name,count", [("id-two", 2), ("closure1", 1), ("nucleus", 2),
                                        ("id-z2", 1)])
def test_algebra_counts_match_brute_force(name, count):
    m = MONADS[name]()
    found = algebras_by_brute_force(m)
    assert len(found) == count
    assert sorted(found) == sorted(enumerate_algebras(m))
    assert len(em_category(m).category.objects) == count


def test_nucleus_algebras_are_fixed_points():
    b = em_category(zoo.bool4_nucleus())
    assert sorted(b.forget.ob(x) for x in b.category.objects) == ["1", "a"]


@pytest.mark.parametrize("name", sorted(MONADS))
def test_induced_monad_of_em_adjunction_is_exact(name):
    m = MONADS[name]()
    b = em_category(m)
    assert validate_category(b.category).ok
    assert validate_adjunction(b.adjunction).ok
    back = monad_from_adjunction(b.adjunction)
    assert back.endo.same_maps(m.endo) and back.mult == m.mult and back.unit == m.unit


@pytest.mark.parametrize("name", sorted(MONADS))
def test_forgetful_functors_reflect_isos(name):
    ok, _ = reflects_isomorphisms(em_category(MONADS[name]()).forget)
    assert ok


@pytest.mark.parametrize("p", zoo.BOOL4)
def test_heyting_adjunctions(p):
    a = zoo.heyting_adjunction(p)
    assert validate_adjunction(a).ok
    found = find_right_adjoint(a.left)
    assert found.right.same_maps(a.right) and validate_adjunction(found).ok


def test_comparison_functor_of_em_adjunction_is_identity():
    b = em_category(zoo.bool4_nucleus())
    K = comparison_functor(b.adjunction, b)
    assert K.same_maps(identity_functor(b.category))


def test_comparison_functor_of_heyting_adjunction():
    a = zoo.heyting_adjunction("b")
    K = comparison_functor(a)
    assert is_functor(K)


def test_product_structures():
    a = zoo.heyting_adjunction("a")
    assert validate_adjunction(product_adjunction(a, a)).ok
    j = zoo.bool4_nucleus()
    pm = product_monad(j, j)
    assert validate_monad(pm).ok and pm.factors == (j, j)
    assert monad_from_adjunction(product_adjunction(a, a)).factors is not None


def test_identity_adjunction_counit_twist_fails_triangles():
    Z = zoo.z2()
    one = identity_functor(Z)
    bad = Adjunction("twisted", one, one, NatTrans("eta", one, one * one, {"*": "e"}),
                     NatTrans("eps", one * one, one, {"*": "s"}))
    rep = validate_adjunction(bad)
    assert rep.first("triangle-left").witness == ("*",)
    assert validate_adjunction(identity_adjunction(Z)).ok


def test_constant_monad_has_ill_typed_unit():
    T = zoo.two()
    S = constant_functor(T, T, "0")
    m = Monad("j0", T, S, NatTrans("mu", S * S, S, {"0": "id0", "1": "id0"}),
              NatTrans("eta", identity_functor(T), S, {"0": "id0", "1": "id0"}))
    rep = validate_monad(m)
    assert rep.structural
    assert rep.first().law == "component-typing" and rep.first().witness == ("1",)


def test_reflects_isos_can_fail():
    # meet with b collapses a and 0 without being invertible there
    ok, w = reflects_isomorphisms(zoo.heyting_adjunction("b").left)
    assert not ok and w
