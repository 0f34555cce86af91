import pytest

from constella import fixtures
from constella.constellation import pseudo_product
from constella.functor import build_C, build_G, roundtrip_check


def test_build_C_ex6_5_keeps_all_pairs():
    s = fixtures.ex6_5()
    c = build_C(s)
    assert c.table.defined == s.table.defined
    assert c.table.comp == s.table.comp


def test_build_C_ex6_3_composable_pairs():
    c = build_C(fixtures.ex6_3())
    expected = {(x, x) for x in c.carrier} | {("0", "e"), ("0", "f")}
    assert c.table.defined == frozenset(expected)
    assert all(c.table.comp[p] == p[0] for p in expected)


def test_build_C_singleton_is_identical():
    s = fixtures.singleton()
    c = build_C(s)
    assert c.table == s.table and c.plus == s.plus


@pytest.mark.parametrize("name", ["ex6_3", "ex6_6", "singleton"])
def test_build_G_recovers_the_table(name):
    s = fixtures.all_fixtures()[name]
    assert build_G(build_C(s)) == s


@pytest.mark.parametrize("name", sorted(fixtures.all_fixtures()))
def test_roundtrips_are_literal(name):
    s = fixtures.all_fixtures()[name]
    assert roundtrip_check(s).equal
    assert roundtrip_check(build_C(s)).equal


@pytest.mark.parametrize("name", sorted(fixtures.all_fixtures()))
def test_pseudo_product_agrees_with_composition(name):
    s = fixtures.all_fixtures()[name]
    c = build_C(s)
    for (a, b) in s.table.defined:
        assert pseudo_product(c, a, b) == s.table.comp[(a, b)]


def test_roundtrip_report_shape():
    r = roundtrip_check(fixtures.ex6_4())
    assert r.equal and r.mismatches == ()
    with pytest.raises(TypeError):
        roundtrip_check("not a structure")
