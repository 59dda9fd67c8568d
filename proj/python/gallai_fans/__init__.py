"""Gallai colorings without monochromatic fans."""

from ._core import (
    ColoredCompleteGraph,
    FormatError,
    GflError,
    LengthError,
    PaletteError,
    ParamError,
    bound_table,
    check_claim_f1,
    check_claim_f2k8,
    check_fact_k7,
    construct,
    count_useful_colors,
    embeds_in_c4_c5_2k3,
    expected_order,
    find_gallai_partition,
    find_mono_fan,
    find_rainbow_triangle,
    is_fan_free_gallai,
    max_fan_order,
    pentagon_coloring,
    ramsey2_decide,
)

__all__ = [
    "ColoredCompleteGraph",
    "FormatError",
    "GflError",
    "LengthError",
    "PaletteError",
    "ParamError",
    "bound_table",
    "check_claim_f1",
    "check_claim_f2k8",
    "check_fact_k7",
    "construct",
    "count_useful_colors",
    "embeds_in_c4_c5_2k3",
    "expected_order",
    "find_gallai_partition",
    "find_mono_fan",
    "find_rainbow_triangle",
    "is_fan_free_gallai",
    "max_fan_order",
    "pentagon_coloring",
    "ramsey2_decide",
]
