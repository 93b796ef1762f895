"""Seed-state encoding of qutrits and ququads on two polarization qubits.

A target ``alpha|HH> + beta|VV> + gamma|HV> + delta|VH>`` is written as
``(u (x) w)(x|HH> + sqrt(1 - x^2)|VV>)``: the SVD of the amplitude matrix
gives the seed amplitude ``x`` (largest singular value) and the two local
unitaries.
"""

from dataclasses import dataclass

import numpy as np

from .qmath import (
    TOL,
    amplitude_matrix,
    as_four_vector,
    from_amplitude_matrix,
    is_unitary,
    svd2,
    tensor_apply,
)

SQRT2 = np.sqrt(2.0)
NORM_TOL = 1e-10
PLAN_FIDELITY = 1 - 1e-10


def _check_normalized(s, what="state"):
    n = np.linalg.norm(s)
    if n == 0:
        raise ValueError(f"{what} is the zero vector")
    if abs(n - 1.0) > NORM_TOL:
        raise ValueError(f"{what} is not normalized (norm {n!r})")


def two_qubit_state(alpha=0, beta=0, gamma=0, delta=0) -> np.ndarray:
    """Carrier vector for ``alpha|HH> + beta|VV> + gamma|HV> + delta|VH>``."""
    return np.array([alpha, beta, gamma, delta], dtype=complex)


def canonicalize(s) -> np.ndarray:
    """Remove the global phase: first non-negligible amplitude made real positive."""
    s = as_four_vector(s)
    for z in s:
        if abs(z) > TOL:
            return s * (abs(z) / z)
    raise ValueError("cannot canonicalize the zero vector")


def qutrit_embed(q) -> np.ndarray:
    """Lift qutrit amplitudes over ``(|HH>, |VV>, |psi+>)`` to the carrier."""
    q = np.array(q, dtype=complex).reshape(-1)
    if q.shape != (3,):
        raise ValueError(f"expected 3 qutrit amplitudes, got {q.size}")
    return np.array([q[0], q[1], q[2] / SQRT2, q[2] / SQRT2])


def qutrit_project(s, tol: float = 1e-10) -> np.ndarray:
    """Inverse of :func:`qutrit_embed`; rejects states with a singlet component."""
    s = as_four_vector(s)
    if abs(s[2] - s[3]) > tol:
        raise ValueError("state has a |psi-> component; not in the symmetric qutrit space")
    return np.array([s[0], s[1], (s[2] + s[3]) / SQRT2])


def state_to_matrix(s) -> np.ndarray:
    """``[[alpha, gamma], [delta, beta]]``; inverse is :func:`matrix_to_state`."""
    return amplitude_matrix(s)


def matrix_to_state(m) -> np.ndarray:
    return from_amplitude_matrix(m)


def seed_state(x: float) -> np.ndarray:
    return two_qubit_state(x, np.sqrt(max(0.0, 1.0 - x * x)))


@dataclass(frozen=True)
class EncodingPlan:
    """Seed amplitude ``x`` and local unitaries ``u`` (photon 1), ``w`` (photon 2)."""

    x: float
    u: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        if not 0.0 <= self.x <= 1.0:
            raise ValueError(f"seed amplitude {self.x} outside [0, 1]")
        for name in ("u", "w"):
            if not is_unitary(getattr(self, name), 1e-10):
                raise ValueError(f"{name} is not unitary")

    @property
    def seed(self) -> np.ndarray:
        return seed_state(self.x)

    def state(self) -> np.ndarray:
        return tensor_apply(self.u, self.w, self.seed)


def fidelity(a, b) -> float:
    """``|<a|b>|^2`` for normalized states."""
    return float(abs(np.vdot(as_four_vector(a), as_four_vector(b))) ** 2)


def encode(s) -> EncodingPlan:
    """Seed amplitude and local unitaries producing ``s`` (up to global phase)."""
    s = as_four_vector(s)
    _check_normalized(s)
    r = svd2(state_to_matrix(canonicalize(s)))
    return EncodingPlan(min(r.d1, 1.0), r.u, r.w)


def xi_matrix(psi: float, phi: float) -> np.ndarray:
    """Amplitude matrix of ``(|HH> + e^{i psi}|VV> + e^{i phi}|psi+>)/sqrt(3)``."""
    off = np.exp(1j * phi) / SQRT2
    return np.array([[1.0, off], [off, np.exp(1j * psi)]]) / np.sqrt(3.0)


def xi_closed_form(psi: float, phi: float):
    """Explicit ``(u, d, w)`` with ``u @ diag(d) @ w.T == xi_matrix(psi, phi)``.

    ``d`` is returned in formula order, so for ``cos(psi/2 - phi) < 0`` the
    first entry is the smaller singular value.
    """
    h = psi / 2
    z = np.exp(1j * (phi - h))
    u = np.array([
        [np.exp(1j * np.angle(SQRT2 + z)), np.exp(1j * np.angle(SQRT2 - z))],
        [np.exp(1j * np.angle(np.exp(1j * phi) + SQRT2 * np.exp(1j * h))),
         np.exp(1j * np.angle(np.exp(1j * phi) - SQRT2 * np.exp(1j * h)))],
    ]) / SQRT2
    w = np.array([[1.0, 1.0], [np.exp(1j * h), -np.exp(1j * h)]]) / SQRT2
    c = SQRT2 / 3 * np.cos(h - phi)
    d = (float(np.sqrt(0.5 + c)), float(np.sqrt(0.5 - c)))
    return u, d, w
