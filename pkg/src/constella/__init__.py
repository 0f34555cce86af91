"""Workbench for finite left restriction semigroupoids and constellations."""

from .classify import classify_constellation, classify_semigroupoid
from .constellation import (
    OrderedConstellation,
    check_constellation,
    check_locally_inductive,
    corestriction,
    meet,
    plus_components,
    restriction,
)
from .core import (
    LeftRestrictionSemigroupoid,
    PartialTable,
    ValidationReport,
    Violation,
    check_left_restriction,
    check_semigroupoid,
    idempotents,
    identity_kind,
    natural_order,
)
from .enumerate import (
    are_isomorphic,
    enumerate_li_constellations,
    enumerate_lr_semigroupoids,
    enumerate_semigroupoids,
)
from .functor import build_C, build_G, roundtrip_check
from .io import parse_structure, serialize_structure
from .morphism import (
    MorphismMap,
    compose,
    enumerate_morphisms,
    is_inductive_preradiant,
    is_inductive_radiant,
    is_premorphism,
    is_restriction_morphism,
    transport,
)
from .szendrei import (
    SzendreiElement,
    expand_constellation,
    expand_semigroupoid,
    extend,
    generation_decomposition,
    iota,
)

__all__ = [
    "PartialTable",
    "LeftRestrictionSemigroupoid",
    "OrderedConstellation",
    "SzendreiElement",
    "MorphismMap",
    "ValidationReport",
    "Violation",
    "check_semigroupoid",
    "check_left_restriction",
    "check_constellation",
    "check_locally_inductive",
    "natural_order",
    "idempotents",
    "identity_kind",
    "restriction",
    "corestriction",
    "meet",
    "plus_components",
    "build_C",
    "build_G",
    "roundtrip_check",
    "is_restriction_morphism",
    "is_premorphism",
    "is_inductive_radiant",
    "is_inductive_preradiant",
    "enumerate_morphisms",
    "transport",
    "compose",
    "expand_semigroupoid",
    "expand_constellation",
    "iota",
    "generation_decomposition",
    "extend",
    "classify_semigroupoid",
    "classify_constellation",
    "enumerate_semigroupoids",
    "enumerate_lr_semigroupoids",
    "enumerate_li_constellations",
    "are_isomorphic",
    "parse_structure",
    "serialize_structure",
]
