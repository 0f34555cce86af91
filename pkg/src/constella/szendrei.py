"""Szendrei expansions, the embedding into them, and the universal extension.

Elements of an expansion are pairs (A, a): A a finite subset of the carrier
whose members share one plus-value e with e in A, and a in A.  Expansions of
semigroupoids and of constellations are built over the same canonical
carrier so the two composite constructions agree literally.
"""

from itertools import combinations

from .constellation import OrderedConstellation, corestriction
from .core import LeftRestrictionSemigroupoid, PartialTable
from .morphism import MorphismMap

__all__ = [
    "SzendreiElement",
    "MeetUndefinedError",
    "expand_semigroupoid",
    "expand_constellation",
    "iota",
    "generation_decomposition",
    "evaluate_term",
    "extend",
    "Term",
    "Leaf",
    "Plus",
    "Corestrict",
    "Compose",
]


class MeetUndefinedError(RuntimeError):
    """The corestriction fold in the extension failed; the input preradiant
    or a structure is invalid."""


class SzendreiElement:
    """Pair (subset, anchor) with anchor inside the subset."""

    __slots__ = ("subset", "anchor", "_hash")

    def __init__(self, subset, anchor):
        subset = frozenset(subset)
        if anchor not in subset:
            raise ValueError("anchor must belong to the subset")
        object.__setattr__(self, "subset", subset)
        object.__setattr__(self, "anchor", anchor)
        object.__setattr__(self, "_hash", hash((subset, anchor)))

    def __setattr__(self, name, value):
        raise AttributeError("SzendreiElement is immutable")

    def sort_key(self):
        return (len(self.subset), tuple(sorted(self.subset)), self.anchor)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __eq__(self, other):
        return (
            isinstance(other, SzendreiElement)
            and self.subset == other.subset
            and self.anchor == other.anchor
        )

    def __hash__(self):
        return self._hash

    def __str__(self):
        return "_".join(sorted(self.subset)) + "'" + self.anchor

    def __repr__(self):
        return f"SzendreiElement({sorted(self.subset)!r}, {self.anchor!r})"


def _sz_carrier(carrier, plus):
    """All (A, a) over the plus-classes, in one canonical order."""
    classes = {}
    for x in carrier:
        classes.setdefault(plus[x], []).append(x)
    elements = []
    for e, members in classes.items():
        rest = [x for x in members if x != e]
        for k in range(len(rest) + 1):
            for combo in combinations(sorted(rest), k):
                subset = frozenset(combo) | {e}
                for a in subset:
                    elements.append(SzendreiElement(subset, a))
    return tuple(sorted(elements))


def expand_semigroupoid(s):
    """Expansion of a left restriction semigroupoid.

    (A,a)(B,b) = ((ab)+ A ∪ aB, ab) when ab is defined; plus keeps the
    subset and applies the base plus to the anchor.
    """
    comp = s.table.comp
    carrier = _sz_carrier(s.carrier, s.plus)
    sz_comp = {}
    for p in carrier:
        for q in carrier:
            ab = comp.get((p.anchor, q.anchor))
            if ab is None:
                continue
            ab_plus = s.plus[ab]
            subset = {comp[(ab_plus, x)] for x in p.subset}
            subset |= {comp[(p.anchor, y)] for y in q.subset}
            sz_comp[(p, q)] = SzendreiElement(subset, ab)
    plus = {p: SzendreiElement(p.subset, s.plus[p.anchor]) for p in carrier}
    return LeftRestrictionSemigroupoid(PartialTable(carrier, sz_comp), plus)


def expand_constellation(t):
    """Expansion of an ordered constellation.

    (A,a)(B,b) = (A, ab) when ab is defined and aB ⊆ A; the order is
    (A,a) <= (B,b) iff a <= b and a+ B ⊆ A, products taken in t.
    """
    comp = t.table.comp
    carrier = _sz_carrier(t.carrier, t.plus)
    sz_comp = {}
    for p in carrier:
        for q in carrier:
            ab = comp.get((p.anchor, q.anchor))
            if ab is None:
                continue
            images = [comp.get((p.anchor, y)) for y in q.subset]
            if any(img is None or img not in p.subset for img in images):
                continue
            sz_comp[(p, q)] = SzendreiElement(p.subset, ab)
    plus = {p: SzendreiElement(p.subset, t.plus[p.anchor]) for p in carrier}
    order = set()
    for p in carrier:
        for q in carrier:
            if (p.anchor, q.anchor) not in t.order:
                continue
            a_plus = t.plus[p.anchor]
            images = [comp.get((a_plus, y)) for y in q.subset]
            if any(img is None or img not in p.subset for img in images):
                continue
            order.add((p, q))
    return OrderedConstellation(PartialTable(carrier, sz_comp), plus, order)


def iota(t, expansion=None):
    """The embedding x -> ({x+, x}, x) into the expansion of t."""
    if expansion is None:
        expansion = expand_constellation(t)
    mapping = {
        x: SzendreiElement({t.plus[x], x}, x) for x in t.carrier
    }
    return MorphismMap(t, expansion, mapping)


class Term:
    """Expression over the generators of an expansion."""

    __slots__ = ()


class Leaf(Term):
    __slots__ = ("element",)

    def __init__(self, element):
        object.__setattr__(self, "element", element)

    def __repr__(self):
        return f"iota({self.element!r})"


class Plus(Term):
    __slots__ = ("inner",)

    def __init__(self, inner):
        object.__setattr__(self, "inner", inner)

    def __repr__(self):
        return f"({self.inner!r})+"


class Corestrict(Term):
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def __repr__(self):
        return f"({self.left!r}|{self.right!r})"


class Compose(Term):
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def __repr__(self):
        return f"({self.left!r} {self.right!r})"


def generation_decomposition(sz, el):
    """A term over iota-images, plus and corestriction evaluating to el.

    Follows the shape (A,a) = (iota(a1)+ | ... | iota(an)+) iota(a) where
    a1..an run over A minus the shared plus-element.
    """
    if el not in set(sz.carrier):
        raise ValueError(f"{el!r} is not in the expansion")
    anchor_plus = sz.plus[el].anchor
    if el.subset == frozenset({anchor_plus, el.anchor}):
        return Leaf(el.anchor)
    rest = sorted(x for x in el.subset if x != anchor_plus)
    folded = Plus(Leaf(rest[0]))
    for x in rest[1:]:
        folded = Corestrict(folded, Plus(Leaf(x)))
    if el.anchor == anchor_plus:
        return folded
    return Compose(folded, Leaf(el.anchor))


def evaluate_term(term, base, sz):
    """Evaluate a term inside the expansion sz of the constellation base."""
    if isinstance(term, Leaf):
        x = term.element
        return SzendreiElement({base.plus[x], x}, x)
    if isinstance(term, Plus):
        return sz.plus[evaluate_term(term.inner, base, sz)]
    if isinstance(term, Corestrict):
        left = evaluate_term(term.left, base, sz)
        right = evaluate_term(term.right, base, sz)
        c = corestriction(sz, left, right)
        if not c.exists:
            raise MeetUndefinedError(f"corestriction missing for {term!r}")
        return c.value
    if isinstance(term, Compose):
        left = evaluate_term(term.left, base, sz)
        right = evaluate_term(term.right, base, sz)
        value = sz.table.comp.get((left, right))
        if value is None:
            raise MeetUndefinedError(f"composition missing for {term!r}")
        return value
    raise TypeError(f"unknown term {term!r}")


def _meet_fold(target, elements):
    """Left fold of the corestriction over plus-elements of the target."""
    acc = elements[0]
    for e in elements[1:]:
        c = corestriction(target, acc, e)
        if not c.exists:
            raise MeetUndefinedError(f"no meet of {acc!r} and {e!r}")
        acc = c.value
    return acc


def extend(phi, expansion=None):
    """The unique radiant on the expansion agreeing with phi through iota.

    phi must be an inductive preradiant T -> L; the result maps (A, x) to
    (meet of phi(a)+ over a in A) phi(x), with the meet folded over the
    canonical subset order.
    """
    t, target, f = phi.source, phi.target, phi.mapping
    if expansion is None:
        expansion = expand_constellation(t)
    mapping = {}
    for el in expansion.carrier:
        plusses = [target.plus[f[a]] for a in sorted(el.subset)]
        m = _meet_fold(target, plusses)
        value = target.table.comp.get((m, f[el.anchor]))
        if value is None:
            raise MeetUndefinedError(
                f"{m!r} does not compose with {f[el.anchor]!r}"
            )
        mapping[el] = value
    return MorphismMap(expansion, target, mapping)
