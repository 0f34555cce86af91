"""Left constellations and the locally inductive axioms.

An OrderedConstellation carries a partial table (its composition), a total
plus map and an explicit partial order.  Restriction is computed by scan
with a uniqueness assertion; corestriction is computed as the maximum of an
explicit candidate set, so a missing maximum is a first-class diagnostic
rather than an exception during enumeration filtering.
"""

from itertools import product

from .core import Violation, ValidationReport, _check_partial_order

__all__ = [
    "OrderedConstellation",
    "CorestrictionResult",
    "NotApplicableError",
    "NonUniqueError",
    "check_constellation",
    "check_locally_inductive",
    "restriction",
    "corestriction",
    "corestriction_candidates",
    "pseudo_product",
    "plus_components",
    "meet",
]


class NotApplicableError(ValueError):
    """Arguments outside the operation's precondition."""


class NonUniqueError(Exception):
    """The wo3 scan found zero or several candidates on a bad structure."""


class CorestrictionResult:
    """Outcome of a corestriction: a value, empty, or no-maximum.

    ``NoMaximum`` carries the nonempty candidate set as a witness; it never
    occurs on a structure that passed wo4.
    """

    __slots__ = ("kind", "value", "candidates")

    def __init__(self, kind, value=None, candidates=None):
        self.kind = kind
        self.value = value
        self.candidates = candidates

    @classmethod
    def of(cls, value):
        return cls("value", value=value)

    @classmethod
    def empty(cls):
        return cls("empty")

    @classmethod
    def no_maximum(cls, candidates):
        return cls("no_maximum", candidates=frozenset(candidates))

    @property
    def exists(self):
        return self.kind == "value"

    def __eq__(self, other):
        return (
            isinstance(other, CorestrictionResult)
            and (self.kind, self.value, self.candidates)
            == (other.kind, other.value, other.candidates)
        )

    def __hash__(self):
        return hash((self.kind, self.value, self.candidates))

    def __repr__(self):
        if self.kind == "value":
            return f"CorestrictionResult.of({self.value!r})"
        if self.kind == "empty":
            return "CorestrictionResult.empty()"
        return f"CorestrictionResult.no_maximum({set(self.candidates)!r})"


class OrderedConstellation:
    """Partial table + plus map + partial order on one carrier.

    The constructor validates shape and that ``order`` is a partial order;
    the constellation and locally-inductive axioms are separate checks.
    """

    __slots__ = ("table", "plus", "order", "_hash")

    def __init__(self, table, plus, order):
        plus = dict(plus)
        members = set(table.carrier)
        if set(plus) != members:
            raise ValueError("plus must be total on the carrier")
        if not set(plus.values()) <= members:
            raise ValueError("plus image leaves the carrier")
        order = frozenset(order)
        for a, b in order:
            if a not in members or b not in members:
                raise ValueError(f"order pair {(a, b)!r} leaves the carrier")
        problem = _check_partial_order(order, table.carrier)
        if problem is not None:
            raise ValueError(f"order is not a partial order: {problem}")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("OrderedConstellation is immutable")

    @property
    def carrier(self):
        return self.table.carrier

    def plus_image(self):
        image = set(self.plus.values())
        return tuple(x for x in self.carrier if x in image)

    def leq(self, a, b):
        return (a, b) in self.order

    def validate(self):
        return check_constellation(self).merged(check_locally_inductive(self))

    def __eq__(self, other):
        return (
            isinstance(other, OrderedConstellation)
            and self.table == other.table
            and self.plus == other.plus
            and self.order == other.order
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.table, frozenset(self.plus.items()), self.order))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"OrderedConstellation({list(self.carrier)!r})"


def check_constellation(t):
    """Check c1-c4.

    c1: xy and yz are both defined iff yz and x(yz) are.
    c2: if xy and yz are defined then (xy)z is, and x(yz) = (xy)z.
    c3: for e in T+: ex defined with ex = x iff e = x+.
    c4: for e in T+: xe defined implies xe = x.
    """
    D = t.table.defined
    comp = t.table.comp
    image = t.plus_image()
    violations = []

    for x, y, z in product(t.carrier, repeat=3):
        xy = comp.get((x, y))
        yz = comp.get((y, z))
        lhs = xy is not None and yz is not None
        rhs = yz is not None and (x, yz) in D
        if lhs != rhs:
            violations.append(Violation("c1", (x, y, z)))
        if lhs:
            left = comp.get((xy, z))
            right = comp.get((x, yz))
            if left is None or right is None or left != right:
                violations.append(Violation("c2", (x, y, z)))

    for e in image:
        for x in t.carrier:
            acts = comp.get((e, x)) == x
            if acts != (e == t.plus[x]):
                violations.append(Violation("c3", (e, x)))

    for e in image:
        for x in t.carrier:
            if (x, e) in D and comp[(x, e)] != x:
                violations.append(Violation("c4", (x, e)))

    return ValidationReport(violations)


def corestriction_candidates(t, x, e):
    """The set { y : y <= x and ye is defined }, in carrier order."""
    return tuple(
        y for y in t.carrier if (y, x) in t.order and (y, e) in t.table.defined
    )


def _maximum(t, elements):
    for m in elements:
        if all((y, m) in t.order for y in elements):
            return m
    return None


def corestriction(t, x, e):
    """Corestriction x|e: the maximum element below x composable with e."""
    if e not in set(t.plus.values()):
        raise NotApplicableError(f"{e!r} is not in T+")
    cands = corestriction_candidates(t, x, e)
    if not cands:
        return CorestrictionResult.empty()
    m = _maximum(t, cands)
    if m is None:
        return CorestrictionResult.no_maximum(cands)
    return CorestrictionResult.of(m)


def restriction(t, e, x):
    """Restriction e|x: the unique y <= x with y+ = e.

    Found by scan so the closed form (e|x = ex) stays a testable theorem.
    """
    image = set(t.plus.values())
    if e not in image or (e, t.plus[x]) not in t.order:
        raise NotApplicableError(f"restriction of {x!r} to {e!r} not applicable")
    found = [y for y in t.carrier if (y, x) in t.order and t.plus[y] == e]
    if len(found) != 1:
        raise NonUniqueError(f"{len(found)} candidates for {e!r}|{x!r}")
    return found[0]


def pseudo_product(t, a, b):
    """(a|b+) b, or None when the corestriction or the pair is missing."""
    c = corestriction(t, a, t.plus[b])
    if not c.exists:
        return None
    return t.table.comp.get((c.value, b))


def plus_components(t):
    """Partition of T+ under the zig-zag closure of the order."""
    image = list(t.plus_image())
    parent = {e: e for e in image}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in t.order:
        if a in parent and b in parent:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra
    groups = {}
    for e in image:
        groups.setdefault(find(e), []).append(e)
    ordered = sorted(groups.values(), key=lambda g: t.carrier.index(g[0]))
    return tuple(tuple(g) for g in ordered)


def same_component(t, e, f):
    for group in plus_components(t):
        if e in group:
            return f in group
    return False


def meet(t, e, f):
    """Meet of two plus-elements via corestriction; None across components."""
    image = set(t.plus.values())
    if e not in image or f not in image:
        raise NotApplicableError("meet is defined on T+ only")
    if not same_component(t, e, f):
        return None
    c = corestriction(t, e, f)
    return c.value if c.exists else None


def check_locally_inductive(t):
    """Check wo1-wo9 for an ordered constellation.

    Existence guards (the "x|e is nonempty" side conditions) are tested on
    the candidate sets, so each axiom is decided independently of wo4.
    """
    D = t.table.defined
    comp = t.table.comp
    order = t.order
    carrier = t.carrier
    plus = t.plus
    image = t.plus_image()
    violations = []

    def nonempty(x, e):
        return any((y, x) in order and (y, e) in D for y in carrier)

    def co_max(x, e):
        cands = corestriction_candidates(t, x, e)
        if not cands:
            return None
        return _maximum(t, cands)

    pairs = sorted(order, key=repr)

    for (x, y) in pairs:
        for (x2, y2) in pairs:
            if (x, x2) in D and (y, y2) in D:
                if (comp[(x, x2)], comp[(y, y2)]) not in order:
                    violations.append(Violation("wo1", (x, y, x2, y2)))

    for (x, y) in pairs:
        if (plus[x], plus[y]) not in order:
            violations.append(Violation("wo2", (x, y)))

    for e in image:
        for x in carrier:
            if (e, plus[x]) not in order:
                continue
            found = [y for y in carrier if (y, x) in order and plus[y] == e]
            if len(found) != 1:
                violations.append(Violation("wo3", (e, x)))

    for x in carrier:
        for e in image:
            cands = corestriction_candidates(t, x, e)
            if cands and _maximum(t, cands) is None:
                violations.append(Violation("wo4", (x, e)))

    for e in image:
        for (x, y) in sorted(D, key=repr):
            if nonempty(comp[(x, y)], e) != nonempty(y, e):
                violations.append(Violation("wo5", (x, y, e)))

    for e in image:
        for f in image:
            if (f, e) not in order:
                continue
            for x in carrier:
                if nonempty(x, e) != nonempty(x, f):
                    violations.append(Violation("wo6", (x, e, f)))

    for e in image:
        for (x, y) in sorted(D, key=repr):
            xy = comp[(x, y)]
            if not nonempty(xy, e):
                continue
            m_xy = co_max(xy, e)
            m_y = co_max(y, e)
            m_x = None if m_y is None else co_max(x, plus[m_y])
            if m_xy is None or m_y is None or m_x is None \
                    or plus[m_xy] != plus[m_x]:
                violations.append(Violation("wo7", (x, y, e)))

    for e in image:
        for f in image:
            if (e, f) not in order:
                continue
            found = [y for y in carrier if (y, f) in order and plus[y] == e]
            m = co_max(e, f)
            if len(found) != 1 or m is None or found[0] != m:
                violations.append(Violation("wo8", (e, f)))

    # wo9: the corestriction restricted to T+ is exactly the partial meet
    # of the local semilattice: within a component it is the meet, across
    # components it must not exist.
    groups = plus_components(t)
    component = {}
    for i, group in enumerate(groups):
        for e in group:
            component[e] = i
    for e in image:
        for f in image:
            if component[e] != component[f]:
                if nonempty(e, f):
                    violations.append(Violation("wo9", (e, f)))
                continue
            m = co_max(e, f)
            ok = (
                m is not None
                and m in component
                and component[m] == component[e]
                and (m, e) in order
                and (m, f) in order
                and all(
                    (g, m) in order
                    for g in image
                    if (g, e) in order and (g, f) in order
                )
            )
            if not ok:
                violations.append(Violation("wo9", (e, f)))

    return ValidationReport(violations)
