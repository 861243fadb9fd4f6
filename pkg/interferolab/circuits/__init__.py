"""
This module contains the netlist description of optical arrangements and the
engine propagating beam states through them.
"""
from ._netlist import Netlist, Placement, NBeamState
from .engine import evolve, evolve_batch, detection_probabilities

__all__ = [
    "Netlist", "Placement", "NBeamState",
    "evolve", "evolve_batch", "detection_probabilities",
]
