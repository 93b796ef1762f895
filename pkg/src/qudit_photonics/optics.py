"""Jones-calculus realization of single-photon polarization unitaries.

Any 2x2 unitary factors as phase shift, rotation, phase shift::

    U = diag(e^{i b}, e^{i(b+g-a)}) @ R(theta) @ diag(e^{i(a-b)}, 1)

with ``R(theta) = [[cos, sin], [-sin, cos]]``.  Phase plates use the
convention ``diag(1, e^{-i delta})`` (``delta`` is the delay of V relative
to H); a half-wave plate at ``pi/8`` is the Hadamard matrix.
"""

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .qmath import TOL, as_matrix2, unitarity_deviation

UNITARY_TOL = 1e-10


def wrap_phase(phi: float) -> float:
    """Map an angle to ``(-pi, pi]``."""
    r = math.remainder(float(phi), 2 * math.pi)
    return math.pi if r <= -math.pi else r


def rotation(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, s], [-s, c]], dtype=complex)


def _retarder(delta: float, axis: float) -> np.ndarray:
    return rotation(-axis) @ np.diag([1.0, np.exp(-1j * delta)]) @ rotation(axis)


@dataclass(frozen=True)
class PhasePlate:
    delta: float

    def jones(self) -> np.ndarray:
        return np.diag([1.0, np.exp(-1j * self.delta)])


@dataclass(frozen=True)
class Rotator:
    theta: float

    def jones(self) -> np.ndarray:
        return rotation(self.theta)


@dataclass(frozen=True)
class HalfWavePlate:
    axis_angle: float

    def jones(self) -> np.ndarray:
        c, s = math.cos(2 * self.axis_angle), math.sin(2 * self.axis_angle)
        return np.array([[c, s], [s, -c]], dtype=complex)


@dataclass(frozen=True)
class QuarterWavePlate:
    axis_angle: float

    def jones(self) -> np.ndarray:
        return _retarder(math.pi / 2, self.axis_angle)


ELEMENT_KINDS = {cls.__name__: cls for cls in (PhasePlate, Rotator, HalfWavePlate, QuarterWavePlate)}


def element_jones(e) -> np.ndarray:
    return e.jones()


def element_to_dict(e) -> dict:
    (name, value), = vars(e).items()
    return {"kind": type(e).__name__, name: value}


def element_from_dict(d: dict):
    d = dict(d)
    cls = ELEMENT_KINDS[d.pop("kind")]
    return cls(**{k: float(v) for k, v in d.items()})


@dataclass(frozen=True)
class ElementSequence:
    """Elements in the order light meets them, plus an unobservable global phase."""

    elements: tuple
    global_phase: float = 0.0

    def jones(self) -> np.ndarray:
        m = np.eye(2, dtype=complex)
        for e in self.elements:
            m = e.jones() @ m
        return m

    def unitary(self) -> np.ndarray:
        return np.exp(1j * self.global_phase) * self.jones()

    def residual(self, target) -> float:
        return float(np.max(np.abs(self.unitary() - as_matrix2(target))))

    def to_dict(self) -> dict:
        return {
            "elements": [element_to_dict(e) for e in self.elements],
            "global_phase": self.global_phase,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ElementSequence":
        return cls(tuple(element_from_dict(e) for e in d["elements"]), float(d["global_phase"]))


@dataclass(frozen=True)
class UnitaryFactorization:
    alpha: float
    beta: float
    gamma: float
    theta: float

    def matrix(self) -> np.ndarray:
        a, b, g = self.alpha, self.beta, self.gamma
        c, s = math.cos(self.theta), math.sin(self.theta)
        return np.array([
            [np.exp(1j * a) * c, np.exp(1j * b) * s],
            [-np.exp(1j * g) * s, np.exp(1j * (b + g - a)) * c],
        ])


def factorize_unitary(u) -> UnitaryFactorization:
    """Phases ``alpha, beta, gamma`` and angle ``theta`` of a 2x2 unitary.

    Phases multiplying a vanishing entry are set to zero and the remaining
    phases absorb the matrix arguments.
    """
    u = as_matrix2(u)
    dev = unitarity_deviation(u)
    if dev > UNITARY_TOL:
        raise ValueError(f"matrix is not unitary (deviation {dev:.3e})")
    theta = math.atan2(abs(u[0, 1]), abs(u[0, 0]))
    has_cos = abs(u[0, 0]) > TOL
    has_sin = abs(u[0, 1]) > TOL
    alpha = np.angle(u[0, 0]) if has_cos else 0.0
    if has_sin:
        beta = np.angle(u[0, 1])
        gamma = np.angle(-u[1, 0])
    else:
        beta = 0.0
        gamma = np.angle(u[1, 1]) + alpha
    return UnitaryFactorization(wrap_phase(alpha), wrap_phase(beta), wrap_phase(gamma), theta)


def synthesize_sequence(f: UnitaryFactorization) -> ElementSequence:
    """Phase plate, rotator, phase plate realizing ``f.matrix()``.

    ``diag(e^{i(a-b)}, 1) = e^{i(a-b)} PhasePlate(a-b)`` and
    ``diag(e^{ib}, e^{i(b+g-a)}) = e^{ib} PhasePlate(a-g)``.
    """
    elements = (
        PhasePlate(wrap_phase(f.alpha - f.beta)),
        Rotator(f.theta),
        PhasePlate(wrap_phase(f.alpha - f.gamma)),
    )
    return ElementSequence(elements, wrap_phase(f.alpha))


def to_waveplates(seq: ElementSequence) -> ElementSequence:
    """Replace each rotator by a half-wave plate and a compensating phase plate.

    Uses ``Rotator(t) = PhasePlate(pi) @ HalfWavePlate(t/2)``; adjacent phase
    plates are merged and zero-delay plates dropped.
    """
    out = []
    for e in seq.elements:
        if isinstance(e, Rotator):
            if abs(e.theta) > TOL:
                out += [HalfWavePlate(e.theta / 2), PhasePlate(math.pi)]
        else:
            out.append(e)
    merged = []
    for e in out:
        if merged and isinstance(e, PhasePlate) and isinstance(merged[-1], PhasePlate):
            merged[-1] = PhasePlate(wrap_phase(merged[-1].delta + e.delta))
        else:
            merged.append(e)
    kept = tuple(e for e in merged if not (isinstance(e, PhasePlate) and abs(e.delta) <= TOL))
    return ElementSequence(kept, seq.global_phase)


def realize_unitary(u, waveplates: bool = False) -> ElementSequence:
    seq = synthesize_sequence(factorize_unitary(u))
    return to_waveplates(seq) if waveplates else seq


class Branch(enum.Enum):
    """Which seed amplitude the pump waveplate attenuates."""

    LOWER_HH = "LowerHH"
    LOWER_VV = "LowerVV"


@dataclass(frozen=True)
class PumpSetting:
    branch: Branch
    theta_p: float = field(default=0.0)


def seed_from_pump(p: PumpSetting) -> float:
    """Seed amplitude ``x`` of ``x|HH> + sqrt(1-x^2)|VV>`` for a pump setting.

    The attenuated amplitude scales with ``cos(2 theta_p)`` relative to the
    other one; the pair is then normalized.
    """
    if not 0.0 <= p.theta_p <= math.pi / 4 + 1e-15:
        raise ValueError(f"pump angle {p.theta_p} outside [0, pi/4]")
    c = math.cos(2 * p.theta_p)
    n = math.sqrt(1 + c * c)
    return c / n if p.branch is Branch.LOWER_HH else 1 / n


def pump_for_seed(x: float) -> PumpSetting:
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"seed amplitude {x} outside [0, 1]")
    y = math.sqrt(1 - x * x)
    gap = 2 * x * x - 1
    if abs(gap) <= 4 * np.finfo(float).eps:
        return PumpSetting(Branch.LOWER_VV, 0.0)
    # cos(2 theta_p) is the ratio of the attenuated amplitude to the other
    if gap < 0:
        return PumpSetting(Branch.LOWER_HH, 0.5 * math.atan2(math.sqrt(-gap), x))
    return PumpSetting(Branch.LOWER_VV, 0.5 * math.atan2(math.sqrt(gap), y))
