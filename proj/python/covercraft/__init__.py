"""Exact-arithmetic classification toolkit for quadruple Galois canonical
covers of smooth surfaces of minimal degree."""

from ._core import (
    ClassificationCase,
    CohomologyDims,
    CoverCandidate,
    CovercraftError,
    DivisorClass,
    GaloisGroup,
    Surface,
    check_simple_cyclic_nonexistence,
    classify_p2,
    classify_scroll,
    classify_veronese,
    cover_canonical_class,
    diff_report,
    geometric_genus,
    invariant_set,
    irregularity,
    make_candidate,
    parse_group,
    pushforward_summands,
    render_json,
    section_count_oracle,
    selfcheck,
    z4_no_simple_cyclic_property,
)

__version__ = "1.0.0"

__all__ = [
    "ClassificationCase",
    "CohomologyDims",
    "CoverCandidate",
    "CovercraftError",
    "DivisorClass",
    "GaloisGroup",
    "Surface",
    "check_simple_cyclic_nonexistence",
    "classify_p2",
    "classify_scroll",
    "classify_veronese",
    "cover_canonical_class",
    "diff_report",
    "geometric_genus",
    "invariant_set",
    "irregularity",
    "make_candidate",
    "parse_group",
    "pushforward_summands",
    "render_json",
    "section_count_oracle",
    "selfcheck",
    "z4_no_simple_cyclic_property",
]
