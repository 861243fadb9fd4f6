"""
This module contains the optical elements (beam splitters, filters, mirrors
and detectors) and their action on beam states.
"""
from ._elements import (
    BeamSplitter, LinearFilter, Mirror, Detector,
    apply_beamsplitter, apply_filter, apply_mirror, detect, is_subunitary,
    symmetric_beamsplitter, polarizer, rank_one_filter, scalar_filter,
    phase_shift, identity_filter, absorber,
    BEAMSPLITTER, FILTER, MIRROR, DETECTOR,
)

__all__ = [
    "BeamSplitter", "LinearFilter", "Mirror", "Detector",
    "apply_beamsplitter", "apply_filter", "apply_mirror", "detect",
    "is_subunitary", "symmetric_beamsplitter", "polarizer",
    "rank_one_filter", "scalar_filter", "phase_shift", "identity_filter",
    "absorber", "BEAMSPLITTER", "FILTER", "MIRROR", "DETECTOR",
]
