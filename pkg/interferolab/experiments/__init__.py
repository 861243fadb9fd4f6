"""
This module contains the two-splitter interference experiment: quantum and
hidden variable predictions of the interference witness Delta, their Monte
Carlo photon counting estimators, the preparation and detection stages and
the inference of the input density matrix.
"""
from ._config import ExperimentConfig
from .quantum import (
    DeltaResult, detector_amplitude, p_quantum, p_quantum_mixed,
    delta_quantum, delta_quantum_mixed, interference_netlist, p_circuit,
    delta_circuit
)
from .hidden_variables import (
    HVModel, malus_model, random_hv_model, delta_hv, expected_delta_hv
)
from .sampling import MonteCarloEstimate, mc_hv, mc_quantum, mc_delta_quantum
from .preparation import (
    prepare_entangled, preparation_netlist, measurement_probability,
    measurement_netlist
)
from .tomography import (
    PAULI_BASIS, default_design, DensityTomography, infer_density
)

__all__ = [
    "ExperimentConfig", "DeltaResult", "detector_amplitude", "p_quantum",
    "p_quantum_mixed", "delta_quantum", "delta_quantum_mixed",
    "interference_netlist", "p_circuit", "delta_circuit",
    "HVModel", "malus_model", "random_hv_model", "delta_hv",
    "expected_delta_hv", "MonteCarloEstimate", "mc_hv", "mc_quantum",
    "mc_delta_quantum", "prepare_entangled", "preparation_netlist",
    "measurement_probability", "measurement_netlist", "PAULI_BASIS",
    "default_design", "DensityTomography", "infer_density",
]
