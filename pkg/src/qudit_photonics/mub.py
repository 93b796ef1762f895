"""Mutually unbiased bases for the qutrit and ququad carriers, and a
two-basis ququad key exchange built on the two Bell bases.

Qutrit basis states are 3-vectors over ``(|HH>, |VV>, |psi+>)``; ququad
states are carrier 4-vectors ``(|HH>, |VV>, |HV>, |VH>)``.
"""

from dataclasses import dataclass

import numpy as np

from .encoder import qutrit_embed
from .qmath import carrier_to_kron, kron_to_carrier, schmidt_coefficients

OMEGA = np.exp(2j * np.pi / 3)

# (a, b) exponents of (|HH> + w^a |VV> + w^b |psi+>)/sqrt(3)
QUTRIT_PHASE_TRIPLES = (
    ((0, 0), (1, 2), (2, 1)),
    ((0, 1), (1, 0), (2, 2)),
    ((0, 2), (2, 0), (1, 1)),
)


@dataclass(frozen=True)
class Basis:
    label: str
    states: np.ndarray  # one state per row

    @property
    def dimension(self) -> int:
        return self.states.shape[1]

    def __len__(self):
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def gram(self) -> np.ndarray:
        return self.states.conj() @ self.states.T

    def carrier_states(self) -> np.ndarray:
        """States as two-qubit carrier vectors (qutrits are embedded)."""
        if self.dimension == 3:
            return np.array([qutrit_embed(s) for s in self.states])
        return self.states


def qutrit_mub_family() -> list:
    """Computational basis ``{|HH>, |VV>, |psi+>}`` plus three Fourier-phase bases."""
    bases = [Basis("u", np.eye(3, dtype=complex))]
    for label, triple in zip(("v", "xi1", "xi2"), QUTRIT_PHASE_TRIPLES):
        states = [np.array([1, OMEGA**a, OMEGA**b]) / np.sqrt(3) for a, b in triple]
        bases.append(Basis(label, np.array(states)))
    return bases


def qutrit_phases(a: int, b: int):
    """``(psi, phi)`` such that the state ``(a, b)`` equals ``xi(psi, phi)``."""
    return 2 * np.pi * a / 3, 2 * np.pi * b / 3


def _ket(s: str) -> np.ndarray:
    return {"0": np.array([1, 0]), "1": np.array([0, 1]),
            "+": np.array([1, 1]), "-": np.array([1, -1]),
            "+i": np.array([1, 1j]), "-i": np.array([1, -1j])}[s].astype(complex)


def _prod(a: str, b: str) -> np.ndarray:
    return np.kron(_ket(a), _ket(b))


def _ququad_kron_bases() -> dict:
    half = 0.5
    bases = {
        "I": [_prod("0", "0"), _prod("0", "1"), _prod("1", "0"), _prod("1", "1")],
        "II": [half * _prod(a, b) for a in "+-" for b in "+-"],
        "III": [half * _prod(a, b) for a in ("+i", "-i") for b in ("+i", "-i")],
        "IV": [half * (_prod(a, "0") + sign * _prod(b, "1"))
               for a, b in (("+i", "-i"), ("-i", "+i")) for sign in (1, -1)],
        "V": [half * (_prod("0", a) + sign * _prod("1", b))
              for a, b in (("+i", "-i"), ("-i", "+i")) for sign in (1, -1)],
    }
    return bases


def ququad_mub_family() -> list:
    """Three product bases (I-III) and two Bell bases (IV, V), normalized."""
    return [Basis(label, np.array([kron_to_carrier(k) for k in kets]))
            for label, kets in _ququad_kron_bases().items()]


def bell_check(b: Basis, tol: float = 1e-12) -> bool:
    """True when every state of a ququad basis is maximally entangled."""
    if b.dimension != 4:
        raise ValueError(f"Bell check needs a ququad basis, got dimension {b.dimension}")
    target = 1 / np.sqrt(2)
    return all(max(abs(s - target) for s in schmidt_coefficients(v)) <= tol for v in b)


@dataclass(frozen=True)
class MubReport:
    dimension: int
    labels: tuple
    orthonormality: tuple  # max |G - I| per basis
    overlap_deviation: float  # max | |<a|b>|^2 - 1/d | over cross pairs
    tol: float

    @property
    def orthonormality_deviation(self) -> float:
        return max(self.orthonormality, default=0.0)

    @property
    def passed(self) -> bool:
        return self.orthonormality_deviation <= self.tol and self.overlap_deviation <= self.tol


def verify_mub(bases, tol: float = 1e-10) -> MubReport:
    dims = {b.dimension for b in bases}
    if len(dims) > 1:
        raise ValueError(f"bases have mixed dimensions {sorted(dims)}")
    d = dims.pop() if dims else 0
    ortho = tuple(float(np.max(np.abs(b.gram() - np.eye(len(b))))) for b in bases)
    overlap = 0.0
    for i, a in enumerate(bases):
        for b in bases[i + 1:]:
            probs = np.abs(a.states.conj() @ b.states.T) ** 2
            overlap = max(overlap, float(np.max(np.abs(probs - 1 / d))))
    return MubReport(d, tuple(b.label for b in bases), ortho, overlap, tol)


PAULI = {
    "z": np.diag([1, -1]).astype(complex),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]]),
}


def correlation_eigenvalues(b: Basis, axis: str, tol: float = 1e-12):
    """Eigenvalues of ``sigma (x) sigma`` on each state of a product basis.

    Returns ``None`` if some state is not an eigenvector within ``tol``.
    """
    op = np.kron(PAULI[axis], PAULI[axis])
    values = []
    for v in b.states:
        k = carrier_to_kron(v)
        ok = op @ k
        lam = np.vdot(k, ok)
        if np.max(np.abs(ok - lam * k)) > tol or abs(abs(lam) - 1) > tol:
            return None
        values.append(float(lam.real))
    return values


# Key exchange over bases IV and V.  Round r consumes the uniform doubles
# 6r .. 6r+5 of a PCG64 stream seeded with rng_seed, in the order: sender
# basis, sender state, interceptor basis, interceptor outcome, receiver
# basis, receiver outcome.  Any block of rounds can be replayed by advancing
# the bit generator, so block-wise (or parallel) runs add up identically.
QKD_BASES = ("IV", "V")
DRAWS_PER_ROUND = 6
_BLOCK = 1 << 16


@dataclass(frozen=True)
class QkdOutcome:
    rounds: int
    sifted: int
    errors: int
    sift_rate: float
    qber: float
    rng_seed: int

    @classmethod
    def from_counts(cls, rounds, sifted, errors, rng_seed):
        return cls(rounds, sifted, errors,
                   sifted / rounds if rounds else 0.0,
                   errors / sifted if sifted else 0.0,
                   rng_seed)

    def record(self) -> str:
        return (f"rounds={self.rounds} sifted={self.sifted} errors={self.errors} "
                f"sift_rate={self.sift_rate:#.17g} qber={self.qber:#.17g} rng_seed={self.rng_seed}")


def transition_table(bases) -> np.ndarray:
    """``T[a, k, b, j] = |<b_j|a_k>|^2`` with rounding noise removed."""
    states = np.array([b.states for b in bases])
    amp = np.einsum("bjx,akx->akbj", states.conj(), states)
    t = np.abs(amp) ** 2
    t[t < 1e-12] = 0.0
    return t / t.sum(axis=-1, keepdims=True)


def _measure(table_rows: np.ndarray, u: np.ndarray) -> np.ndarray:
    cum = np.cumsum(table_rows, axis=-1)[:, :-1]
    return np.sum(u[:, None] >= cum, axis=1)


def _block_draws(rng_seed: int, start: int, n: int) -> np.ndarray:
    bg = np.random.PCG64(rng_seed)
    bg.advance(DRAWS_PER_ROUND * start)
    return np.random.Generator(bg).random((n, DRAWS_PER_ROUND))


def _run_block(draws, eve, table):
    nb, nd = table.shape[0], table.shape[1]
    a_basis = (draws[:, 0] * nb).astype(int)
    a_state = (draws[:, 1] * nd).astype(int)
    b_basis = (draws[:, 4] * nb).astype(int)
    basis, state = a_basis, a_state
    if eve:
        e_basis = (draws[:, 2] * nb).astype(int)
        state = _measure(table[basis, state, e_basis], draws[:, 3])
        basis = e_basis
    outcome = _measure(table[basis, state, b_basis], draws[:, 5])
    keep = a_basis == b_basis
    return int(keep.sum()), int(np.sum(keep & (outcome != a_state)))


def simulate_two_basis_qkd(rounds: int, eve: bool = False, rng_seed: int = 0,
                           block_size: int = _BLOCK) -> QkdOutcome:
    """Prepare-and-measure key exchange with the Bell bases IV and V.

    With ``eve`` set, every signal is intercepted, measured in a random one
    of the two bases and resent in the collapsed state.
    """
    if rounds < 0:
        raise ValueError("rounds must be non-negative")
    family = {b.label: b for b in ququad_mub_family()}
    table = transition_table([family[k] for k in QKD_BASES])
    sifted = errors = 0
    for start in range(0, rounds, block_size):
        n = min(block_size, rounds - start)
        s, e = _run_block(_block_draws(rng_seed, start, n), eve, table)
        sifted += s
        errors += e
    return QkdOutcome.from_counts(rounds, sifted, errors, rng_seed)
