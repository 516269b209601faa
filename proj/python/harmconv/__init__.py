"""Harmonic map convolution toolkit.

Thin re-export of the compiled extension. Maps are pairs of truncated power
series (analytic and co-analytic part); the module builds the canonical
half-plane, strip and F-family members, convolves and rotates them, and runs
the grid diagnostics and scenario reproductions exposed by the CLI.
"""

from ._core import (
    Map,
    Series,
    build_map,
    convex_combination,
    convolution_dilatation_f_a0,
    convolve,
    count_zeros_in_disk,
    direction_convexity,
    halfplane_membership,
    local_univalence,
    render_csv,
    render_svg,
    right_halfplane_f0,
    rotate,
    run_scenario,
    rz_search,
    scenario_ids,
    serialize,
    slanted_halfplane_canonical,
    strip_membership,
    theorem43_cubic,
)

__version__ = "0.1.0"

__all__ = [
    "Map",
    "Series",
    "build_map",
    "convex_combination",
    "convolution_dilatation_f_a0",
    "convolve",
    "count_zeros_in_disk",
    "direction_convexity",
    "halfplane_membership",
    "local_univalence",
    "render_csv",
    "render_svg",
    "right_halfplane_f0",
    "rotate",
    "run_scenario",
    "rz_search",
    "scenario_ids",
    "serialize",
    "slanted_halfplane_canonical",
    "strip_membership",
    "theorem43_cubic",
]
