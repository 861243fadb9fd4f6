"""
This module contains the compiler of unitary and subunitary operators into
cascades of beam splitters, phases and attenuators.
"""
from .reck import (
    TargetOperator, MixerStage, PhaseStage, AttenuationStage,
    CompiledCircuit, VerificationReport, decompose_unitary,
    decompose_subunitary, compile_operator, verify, check_stages, to_netlist,
    UNITARY, SUBUNITARY
)

__all__ = [
    "TargetOperator", "MixerStage", "PhaseStage", "AttenuationStage",
    "CompiledCircuit", "VerificationReport", "decompose_unitary",
    "decompose_subunitary", "compile_operator", "verify", "check_stages",
    "to_netlist", "UNITARY", "SUBUNITARY",
]
