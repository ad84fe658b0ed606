"""Exact algebraic entropy toolkit.

Thin Python face over the C++ core: Mahler measures with certified error
bounds, entropy of rational matrix endomorphisms, exact cyclotomic detection,
Lehmer sequences, small-measure searches, and the brute-force trajectory
oracle. All heavy lifting happens in the compiled extension.
"""

from ._algent import (
    EntropyValue,
    GrowthEstimate,
    MahlerResult,
    TrajectoryRecord,
    entropy,
    is_cyclotomic,
    lehmer_delta,
    mahler_measure,
    search_small_measures,
    set_ladder_start_bits,
    trajectory,
)

__all__ = [
    "EntropyValue",
    "GrowthEstimate",
    "MahlerResult",
    "TrajectoryRecord",
    "entropy",
    "is_cyclotomic",
    "lehmer_delta",
    "mahler_measure",
    "search_small_measures",
    "set_ladder_start_bits",
    "trajectory",
]
