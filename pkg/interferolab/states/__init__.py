"""
This module contains the beam state value types: Jones vectors, two beam
states and density matrices.
"""
from ._jones import JonesVector, TwoBeamState, presence_probability
from ._density import (
    DensityMatrix, DensityCheck, pure_density, unpolarized, validate_density
)

__all__ = [
    "JonesVector", "TwoBeamState", "presence_probability",
    "DensityMatrix", "DensityCheck", "pure_density", "unpolarized",
    "validate_density",
]
