"""Integral-distance graphs over finite affine spaces and their automorphism groups."""

from ._intaut import (
    Error,
    SphereCounts,
    Classification,
    field_info,
    sphere_counts_formula,
    sphere_counts_enumerated,
    semiaffine_order,
    orthogonal_count,
    automorphism_order,
    verify_classification,
    m_orbit_sizes,
    recognize,
    export_graph,
)

__all__ = [
    "Error",
    "SphereCounts",
    "Classification",
    "field_info",
    "sphere_counts_formula",
    "sphere_counts_enumerated",
    "semiaffine_order",
    "orthogonal_count",
    "automorphism_order",
    "verify_classification",
    "m_orbit_sizes",
    "recognize",
    "export_graph",
]
