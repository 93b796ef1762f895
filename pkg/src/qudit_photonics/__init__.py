"""Encoding qutrits and ququads on two-photon polarization states.

A target two-qubit state is produced from a non-maximally entangled seed
``x|HH> + sqrt(1 - x^2)|VV>`` by two local unitaries obtained from the SVD of
its amplitude matrix; the unitaries are then realized with phase plates and
wave plates.
"""

from .encoder import (
    EncodingPlan,
    canonicalize,
    encode,
    fidelity,
    qutrit_embed,
    state_to_matrix,
    matrix_to_state,
    two_qubit_state,
    xi_closed_form,
    xi_matrix,
)
from .mub import (
    Basis,
    MubReport,
    QkdOutcome,
    bell_check,
    ququad_mub_family,
    qutrit_mub_family,
    simulate_two_basis_qkd,
    verify_mub,
)
from .optics import (
    Branch,
    ElementSequence,
    HalfWavePlate,
    PhasePlate,
    PumpSetting,
    QuarterWavePlate,
    Rotator,
    UnitaryFactorization,
    element_jones,
    factorize_unitary,
    pump_for_seed,
    seed_from_pump,
    realize_unitary,
    synthesize_sequence,
    to_waveplates,
)
from .qmath import Svd2Result, is_unitary, schmidt_coefficients, svd2, tensor_apply

__version__ = "0.1.0"
