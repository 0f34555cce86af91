"""Total maps between structures and the four morphism classes.

Every checker tests its axioms independently (nothing assumes the map
already belongs to a smaller class), so single-image mutations produce
meaningful named violations.  Violations are produced lazily; enumeration
over candidate-map spaces stops at the first one.
"""

import os
from itertools import product

from .constellation import OrderedConstellation, corestriction, pseudo_product
from .core import LeftRestrictionSemigroupoid, Violation, ValidationReport
from .functor import build_C, build_G

__all__ = [
    "MorphismMap",
    "CapExceededError",
    "is_restriction_morphism",
    "is_premorphism",
    "is_inductive_radiant",
    "is_inductive_preradiant",
    "enumerate_morphisms",
    "transport",
    "compose",
    "identity_morphism",
    "DEFAULT_MAP_CAP",
]

DEFAULT_MAP_CAP = 10**7


class CapExceededError(RuntimeError):
    pass


class MorphismMap:
    """A total function between the carriers of two fixed structures.

    The source and target structures are part of the identity: the same
    function may be a morphism for one plus-structure and not another.
    """

    __slots__ = ("source", "target", "mapping")

    def __init__(self, source, target, mapping):
        mapping = dict(mapping)
        if set(mapping) != set(source.carrier):
            raise ValueError("mapping must be total on the source carrier")
        if not set(mapping.values()) <= set(target.carrier):
            raise ValueError("mapping image leaves the target carrier")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "mapping", mapping)

    def __setattr__(self, name, value):
        raise AttributeError("MorphismMap is immutable")

    def __call__(self, x):
        return self.mapping[x]

    def as_function(self):
        return frozenset(self.mapping.items())

    def __eq__(self, other):
        return (
            isinstance(other, MorphismMap)
            and self.source == other.source
            and self.target == other.target
            and self.mapping == other.mapping
        )

    def __hash__(self):
        return hash((self.source, self.target, frozenset(self.mapping.items())))

    def __repr__(self):
        return f"MorphismMap({self.mapping!r})"


def identity_morphism(s):
    return MorphismMap(s, s, {x: x for x in s.carrier})


def _require(m, cls):
    if not (isinstance(m.source, cls) and isinstance(m.target, cls)):
        raise TypeError(f"morphism endpoints must be {cls.__name__}")


def _rm_violations(m):
    S, T, f = m.source, m.target, m.mapping
    comp_t = T.table.comp
    for (a, b) in sorted(S.table.defined, key=repr):
        img = comp_t.get((f[a], f[b]))
        if img is None or img != f[S.table.comp[(a, b)]]:
            yield Violation("rm1", (a, b))
    for a in S.carrier:
        if f[S.plus[a]] != T.plus[f[a]]:
            yield Violation("rm2", (a,))


def _leq_semigroupoid(T, a, b):
    return T.table.comp.get((T.plus[a], b)) == a


def _pm_violations(m):
    S, T, f = m.source, m.target, m.mapping
    comp_t = T.table.comp
    for (a, b) in sorted(S.table.defined, key=repr):
        lhs = comp_t.get((f[a], f[b]))
        rhs = comp_t.get((T.plus[f[a]], f[S.table.comp[(a, b)]]))
        if lhs is None or rhs is None or lhs != rhs:
            yield Violation("pm1", (a, b))
    for a in S.carrier:
        if not _leq_semigroupoid(T, T.plus[f[a]], f[S.plus[a]]):
            yield Violation("pm2", (a,))


def _ir_violations(m):
    T, L, f = m.source, m.target, m.mapping
    comp_l = L.table.comp
    l_plus_image = set(L.plus.values())
    for (a, b) in sorted(T.table.defined, key=repr):
        img = comp_l.get((f[a], f[b]))
        if img is None or img != f[T.table.comp[(a, b)]]:
            yield Violation("ir1", (a, b))
    for a in T.carrier:
        if L.plus[f[a]] != f[T.plus[a]]:
            yield Violation("ir2", (a,))
    for (a, b) in sorted(T.order, key=repr):
        if (f[a], f[b]) not in L.order:
            yield Violation("ir3", (a, b))
    for e in T.plus_image():
        for x in T.carrier:
            c = corestriction(T, x, e)
            if not c.exists:
                continue
            if f[e] not in l_plus_image:
                yield Violation("ir4", (x, e))
                continue
            c_img = corestriction(L, f[x], f[e])
            if not c_img.exists or c_img.value != f[c.value]:
                yield Violation("ir4", (x, e))


def _ip_violations(m):
    T, L, f = m.source, m.target, m.mapping
    l_plus_image = set(L.plus.values())

    for (a, b) in sorted(T.table.defined, key=repr):
        ab = T.table.comp[(a, b)]
        lhs = pseudo_product(L, f[a], f[b])
        rhs = pseudo_product(L, L.plus[f[a]], f[ab])
        if lhs is None or rhs is None or lhs != rhs:
            yield Violation("ip1", (a, b))

    for a in T.carrier:
        if (L.plus[f[a]], f[T.plus[a]]) not in L.order:
            yield Violation("ip2", (a,))

    for (a, b) in sorted(T.order, key=repr):
        if (f[a], f[b]) not in L.order:
            yield Violation("ip3", (a, b))

    for e in T.plus_image():
        for x in T.carrier:
            c = corestriction(T, x, e)
            if not c.exists:
                continue
            if f[e] not in l_plus_image:
                yield Violation("ip4", (x, e))
                continue
            c_img = corestriction(L, f[x], f[e])
            if not c_img.exists or c_img.value != f[c.value]:
                yield Violation("ip4", (x, e))

    for e in T.plus_image():
        for x in T.carrier:
            if (e, T.plus[x]) not in T.order:
                continue
            found = [y for y in T.carrier
                     if (y, x) in T.order and T.plus[y] == e]
            if len(found) != 1:
                continue
            if f[e] not in l_plus_image:
                yield Violation("ip5", (e, x))
                continue
            c_img = corestriction(L, f[e], L.plus[f[x]])
            if not c_img.exists or c_img.value != L.plus[f[found[0]]]:
                yield Violation("ip5", (e, x))

    # derived requirement: plus-elements land on plus-elements
    for e in T.plus_image():
        if f[e] not in l_plus_image:
            yield Violation("plus-image", (e,))


def is_restriction_morphism(m):
    """rm1: maps defined products to defined products, preserving them.
    rm2: commutes with plus."""
    _require(m, LeftRestrictionSemigroupoid)
    return ValidationReport(tuple(_rm_violations(m)))


def is_premorphism(m):
    """pm1: f(s)f(t) = f(s)+ f(st) with both sides defined, when st is.
    pm2: f(s)+ <= f(s+) in the target's natural order."""
    _require(m, LeftRestrictionSemigroupoid)
    return ValidationReport(tuple(_pm_violations(m)))


def is_inductive_radiant(m):
    """ir1: preserves composition; ir2: commutes with plus;
    ir3: preserves order; ir4: preserves corestrictions."""
    _require(m, OrderedConstellation)
    return ValidationReport(tuple(_ir_violations(m)))


def is_inductive_preradiant(m):
    """ip1-ip5, plus the derived requirement that plus-elements map into
    the target's plus-elements (reported as 'plus-image')."""
    _require(m, OrderedConstellation)
    return ValidationReport(tuple(_ip_violations(m)))


_GENERATORS = {
    "rm": (_rm_violations, LeftRestrictionSemigroupoid),
    "pm": (_pm_violations, LeftRestrictionSemigroupoid),
    "ir": (_ir_violations, OrderedConstellation),
    "ip": (_ip_violations, OrderedConstellation),
}

_KIND_ALIASES = {
    "restriction": "rm",
    "premorphism": "pm",
    "radiant": "ir",
    "preradiant": "ip",
}


def _map_cap_from_env(default=DEFAULT_MAP_CAP):
    """CONSTELLA_CAP values above 8 act as the candidate-count cap."""
    raw = os.environ.get("CONSTELLA_CAP")
    if raw:
        value = int(raw)
        if value > 8:
            return value
    return default


def enumerate_morphisms(kind, source, target, cap=None):
    """All total maps source -> target passing the named checker.

    kind is one of rm, pm, ir, ip, or "any" for every total map.  The
    candidate space |target| ** |source| must stay within cap.
    """
    if cap is None:
        cap = _map_cap_from_env()
    kind = _KIND_ALIASES.get(kind, kind)
    n, k = len(target.carrier), len(source.carrier)
    if n**k > cap:
        raise CapExceededError(f"{n}^{k} candidate maps exceed cap {cap}")
    if kind != "any" and kind not in _GENERATORS:
        raise ValueError(f"unknown morphism kind {kind!r}")
    found = []
    for images in product(target.carrier, repeat=k):
        m = MorphismMap(source, target, dict(zip(source.carrier, images)))
        if kind == "any":
            found.append(m)
            continue
        gen, cls = _GENERATORS[kind]
        _require(m, cls)
        if next(gen(m), None) is None:
            found.append(m)
    return tuple(found)


def transport(m, direction):
    """Rebase a morphism along the object constructions.

    direction "C": semigroupoid morphism -> constellation morphism;
    direction "G": the other way.  The underlying function is unchanged.
    """
    if direction == "C":
        _require(m, LeftRestrictionSemigroupoid)
        return MorphismMap(build_C(m.source), build_C(m.target), m.mapping)
    if direction == "G":
        _require(m, OrderedConstellation)
        return MorphismMap(build_G(m.source), build_G(m.target), m.mapping)
    raise ValueError(f"direction must be 'C' or 'G', got {direction!r}")


def compose(m2, m1):
    """Function composition m2 after m1; requires matching middle structure."""
    if m1.target != m2.source:
        raise ValueError("target of the first morphism must equal source of the second")
    return MorphismMap(
        m1.source, m2.target, {x: m2.mapping[m1.mapping[x]] for x in m1.source.carrier}
    )
