import pytest

from constella import fixtures
from constella.constellation import OrderedConstellation
from constella.core import LeftRestrictionSemigroupoid
from constella.functor import build_C
from constella.io import (
    ParseError,
    element_labels,
    parse_morphism_text,
    parse_structure,
    render_report,
    serialize_morphism,
    serialize_structure,
)
from constella.szendrei import expand_semigroupoid


@pytest.mark.parametrize("name", sorted(fixtures.all_fixtures()))
def test_serialize_parse_roundtrip_semigroupoid(name):
    s = fixtures.all_fixtures()[name]
    text = serialize_structure(s)
    assert parse_structure(text) == s
    assert serialize_structure(parse_structure(text)) == text


@pytest.mark.parametrize("name", sorted(fixtures.all_fixtures()))
def test_serialize_parse_roundtrip_constellation(name):
    t = build_C(fixtures.all_fixtures()[name])
    text = serialize_structure(t)
    assert parse_structure(text) == t
    assert serialize_structure(parse_structure(text)) == text


def test_fixture_files_match_builders(fixture_dir):
    for name, s in fixtures.all_fixtures().items():
        text = (fixture_dir / f"{name}.sgpd").read_text()
        assert parse_structure(text) == s, name


def test_singleton_serialization_is_byte_exact():
    expected = "kind semigroupoid\nelements e\nplus e e\ncomp e e e\n"
    assert serialize_structure(fixtures.singleton()) == expected


def test_constellation_serialization_emits_derived_order():
    text = serialize_structure(build_C(fixtures.ex6_3()))
    assert "order 0 e" in text and "order 0 f" in text


def test_comments_and_blank_lines_are_ignored():
    text = "# header\nkind semigroupoid\n\nelements e  # trailing\nplus e e\ncomp e e e\n"
    s = parse_structure(text)
    assert isinstance(s, LeftRestrictionSemigroupoid)
    assert s.carrier == ("e",)


def test_order_lines_build_the_closure():
    text = (
        "kind constellation\nelements a b c\n"
        "plus a a\nplus b b\nplus c c\n"
        "comp a a a\ncomp b b b\ncomp c c c\n"
        "order a b\norder b c\n"
    )
    t = parse_structure(text)
    assert isinstance(t, OrderedConstellation)
    assert ("a", "c") in t.order
    assert ("a", "a") in t.order


def test_serializer_emits_transitive_reduction():
    text = (
        "kind constellation\nelements a b c\n"
        "plus a a\nplus b b\nplus c c\n"
        "comp a a a\ncomp b b b\ncomp c c c\n"
        "order a b\norder b c\n"
    )
    out = serialize_structure(parse_structure(text))
    assert "order a b" in out and "order b c" in out
    assert "order a c" not in out and "order a a" not in out


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "empty file"),
        ("kind widget\n", "kind"),
        ("kind semigroupoid\nelements\n", "empty elements"),
        ("kind semigroupoid\nelements a a\nplus a a\n", "repeated"),
        ("kind semigroupoid\nelements a^b\nplus a^b a^b\n", "bad element id"),
        ("kind semigroupoid\nelements a\nplus a a\ncomp a a a\ncomp a a a\n",
         "duplicate comp"),
        ("kind semigroupoid\nelements a\nplus a a\norder a a\n",
         "not allowed"),
        ("kind semigroupoid\nelements a\nplus a a\nplus a a\n",
         "duplicate plus"),
        ("kind semigroupoid\nelements a\n", "missing plus"),
        ("kind semigroupoid\nelements a\nplus a b\n", "unknown element"),
        ("kind semigroupoid\nelements a\nplus a a\nwidget a\n", "unknown directive"),
        ("kind constellation\nelements a b\nplus a a\nplus b b\n"
         "comp a a a\ncomp b b b\norder a b\norder b a\n", "not a partial order"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_structure(text)
    assert fragment in str(err.value)


def test_parse_error_carries_line_numbers():
    text = "kind semigroupoid\nelements a\nplus a a\ncomp a a b\n"
    with pytest.raises(ParseError) as err:
        parse_structure(text)
    assert err.value.line == 4


def test_expansion_labels_are_valid_ids():
    sz = expand_semigroupoid(fixtures.ex6_5())
    labels = element_labels(sz.carrier)
    text = serialize_structure(sz)
    reparsed = parse_structure(text)
    assert len(reparsed.carrier) == len(sz.carrier)
    assert sorted(labels.values()) == list(reparsed.carrier)


def test_morphism_parse_and_serialize():
    fx = fixtures.all_fixtures()
    structures = {"a.sgpd": fx["singleton"], "b.sgpd": fx["pair_split_plus"]}
    text = "source a.sgpd\ntarget b.sgpd\nmap e f\n"
    src_path, tgt_path, src, tgt, mapping = parse_morphism_text(
        text, structures.__getitem__
    )
    assert (src_path, tgt_path) == ("a.sgpd", "b.sgpd")
    assert mapping == {"e": "f"}
    out = serialize_morphism(src_path, tgt_path, mapping, src.carrier)
    assert out == text


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("target b.sgpd\nmap e e\n", "source and target"),
        ("source a.sgpd\ntarget b.sgpd\n", "not total"),
        ("source a.sgpd\ntarget b.sgpd\nmap e e\nmap e f\n", "duplicate map"),
        ("source a.sgpd\ntarget b.sgpd\nmap e zz\n", "not in target"),
        ("source a.sgpd\ntarget b.sgpd\nmap zz e\nmap e e\n", "not in source"),
    ],
)
def test_morphism_parse_errors(text, fragment):
    fx = fixtures.all_fixtures()
    structures = {"a.sgpd": fx["singleton"], "b.sgpd": fx["pair_split_plus"]}
    with pytest.raises(ParseError) as err:
        parse_morphism_text(text, structures.__getitem__)
    assert fragment in str(err.value)


def test_report_rendering_is_stable():
    from constella.core import Violation

    doc = render_report(
        valid=False,
        violations=[Violation("lr2", ("b", "a")), Violation("lr1", ("a",))],
        counts={"size": 2},
    )
    assert doc.index('"lr1"') < doc.index('"lr2"')
    assert doc == render_report(
        valid=False,
        violations=[Violation("lr1", ("a",)), Violation("lr2", ("b", "a"))],
        counts={"size": 2},
    )
