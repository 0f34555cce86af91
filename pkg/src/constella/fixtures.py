"""Small named structures used across the test-suite and the CLI fixtures.

Each builder returns a fresh LeftRestrictionSemigroupoid.  Ids follow the
fixture files shipped under fixtures/.
"""

from .core import LeftRestrictionSemigroupoid, PartialTable

__all__ = [
    "singleton",
    "pair_split_plus",
    "pair_constant_plus",
    "ex6_3",
    "ex6_4",
    "ex6_5",
    "ex6_6",
    "ex6_7",
    "z2",
    "discrete2",
    "all_fixtures",
    "lr_fixtures",
]


def _lrs(carrier, comp, plus):
    return LeftRestrictionSemigroupoid(PartialTable(carrier, comp), plus)


def singleton():
    """One idempotent element."""
    return _lrs(["e"], {("e", "e"): "e"}, {"e": "e"})


def _pair_comp():
    return {
        ("e", "e"): "e",
        ("f", "f"): "f",
        ("e", "f"): "e",
        ("f", "e"): "e",
    }


def pair_split_plus():
    """Two idempotents, ef = fe = e; plus fixes each element."""
    return _lrs(["e", "f"], _pair_comp(), {"e": "e", "f": "f"})


def pair_constant_plus():
    """Same table as pair_split_plus but plus sends everything to f."""
    return _lrs(["e", "f"], _pair_comp(), {"e": "f", "f": "f"})


def ex6_3():
    """Three-element meet-semilattice with bottom 0; plus is the identity."""
    comp = {}
    for x in ("e", "f", "0"):
        comp[(x, x)] = x
    for a, b in (("e", "f"), ("f", "e"), ("0", "e"), ("e", "0"),
                 ("f", "0"), ("0", "f")):
        comp[(a, b)] = "0"
    return _lrs(["0", "e", "f"], comp, {"0": "0", "e": "e", "f": "f"})


def ex6_4():
    """ex6_3 with one extra element s that nothing follows: ts = s, s+ = 0."""
    base = ex6_3()
    comp = dict(base.table.comp)
    for x in ("e", "f", "0"):
        comp[(x, "s")] = "s"
    plus = dict(base.plus)
    plus["s"] = "0"
    return _lrs(["0", "e", "f", "s"], comp, plus)


def ex6_5():
    """Two elements x+ and x where only x+ composes on the left."""
    comp = {("x+", "x+"): "x+", ("x+", "x"): "x"}
    return _lrs(["x", "x+"], comp, {"x": "x+", "x+": "x+"})


def ex6_6():
    """Five elements with two idempotent layers; e acts only on itself."""
    comp = {
        ("e", "e"): "e",
        ("x", "e"): "y",
        ("y", "e"): "y",
        ("x+", "x"): "x",
        ("x+", "y"): "y",
        ("x+", "x+"): "x+",
        ("x+", "y+"): "y+",
        ("y+", "x"): "y",
        ("y+", "y"): "y",
        ("y+", "x+"): "y+",
        ("y+", "y+"): "y+",
    }
    plus = {"e": "e", "x": "x+", "y": "y+", "x+": "x+", "y+": "y+"}
    return _lrs(["e", "x", "x+", "y", "y+"], comp, plus)


def ex6_7():
    """ex6_6 with an extra element s below the x+/y+ component.

    s composes with nothing on the right, so the associated constellation
    is locally complete but neither non-degenerate nor unitary.
    """
    base = ex6_6()
    comp = dict(base.table.comp)
    comp[("x+", "s")] = "s"
    comp[("y+", "s")] = "s"
    plus = dict(base.plus)
    plus["s"] = "y+"
    return _lrs(["e", "s", "x", "x+", "y", "y+"], comp, plus)


def z2():
    """The two-element group as a one-object structure; plus is constant 1."""
    comp = {
        ("1", "1"): "1",
        ("1", "g"): "g",
        ("g", "1"): "g",
        ("g", "g"): "1",
    }
    return _lrs(["1", "g"], comp, {"1": "1", "g": "1"})


def discrete2():
    """Two objects and nothing else: only the identity compositions."""
    comp = {("1a", "1a"): "1a", ("1b", "1b"): "1b"}
    return _lrs(["1a", "1b"], comp, {"1a": "1a", "1b": "1b"})


def all_fixtures():
    """Every named fixture, keyed by id."""
    return {
        "singleton": singleton(),
        "pair_split_plus": pair_split_plus(),
        "pair_constant_plus": pair_constant_plus(),
        "ex6_3": ex6_3(),
        "ex6_4": ex6_4(),
        "ex6_5": ex6_5(),
        "ex6_6": ex6_6(),
        "ex6_7": ex6_7(),
        "z2": z2(),
        "discrete2": discrete2(),
    }


def lr_fixtures():
    """The seven structures exercised by the validation gate."""
    keys = ("pair_split_plus", "pair_constant_plus",
            "ex6_3", "ex6_4", "ex6_5", "ex6_6", "ex6_7")
    fx = all_fixtures()
    return {k: fx[k] for k in keys}
