"""Small complex linear algebra for two-qubit polarization states.

Two-qubit states are stored as length-4 complex arrays in the carrier order
``(|00>, |11>, |01>, |10>)``, i.e. the amplitudes ``(alpha, beta, gamma,
delta)``.  The matching 2x2 amplitude matrix ``M`` has ``M[i, j]`` equal to
the amplitude of ``|i>|j>``, so that ``(U (x) W)|psi>`` has matrix
``U @ M @ W.T``.

The SVD here uses the transpose form ``A = U @ diag(d1, d2) @ W.T``; ``W`` is
the entrywise conjugate of the right factor of the textbook ``A = U S V^H``.
"""

from dataclasses import dataclass

import numpy as np

TOL = 1e-12

# gather indices: kron[i] = carrier[_CARRIER_INDEX[i]] and the inverse
_CARRIER_INDEX = np.array([0, 2, 3, 1])
_KRON_INDEX = np.array([0, 3, 1, 2])

_EPS = np.finfo(float).eps


def as_matrix2(a) -> np.ndarray:
    """Return ``a`` as a finite 2x2 complex array, or raise ``ValueError``."""
    m = np.array(a, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def as_four_vector(v) -> np.ndarray:
    s = np.array(v, dtype=complex).reshape(-1)
    if s.shape != (4,):
        raise ValueError(f"expected 4 amplitudes, got {s.size}")
    if not np.all(np.isfinite(s)):
        raise ValueError("state has non-finite amplitudes")
    return s


def carrier_to_kron(v) -> np.ndarray:
    """Reorder carrier amplitudes into the ``(|00>, |01>, |10>, |11>)`` order."""
    return as_four_vector(v)[_CARRIER_INDEX]


def kron_to_carrier(k) -> np.ndarray:
    return as_four_vector(k)[_KRON_INDEX]


def amplitude_matrix(v) -> np.ndarray:
    """2x2 amplitude matrix of a carrier-ordered two-qubit vector."""
    return carrier_to_kron(v).reshape(2, 2)


def from_amplitude_matrix(m) -> np.ndarray:
    return kron_to_carrier(as_matrix2(m).reshape(4))


@dataclass(frozen=True)
class Svd2Result:
    u: np.ndarray
    d1: float
    d2: float
    w: np.ndarray

    @property
    def d(self):
        return np.array([self.d1, self.d2])

    def reconstruct(self) -> np.ndarray:
        return self.u @ np.diag(self.d) @ self.w.T


def _complement(c: np.ndarray) -> np.ndarray:
    # unit vector orthogonal to the unit vector c
    return np.array([-np.conj(c[1]), np.conj(c[0])])


def _first_significant(col: np.ndarray) -> complex:
    for z in col:
        if abs(z) > TOL:
            return z
    return 1.0


def _phase_of(z: complex) -> complex:
    return z / abs(z) if z != 0 else 1.0


def _gram_schmidt_complete(first: np.ndarray) -> np.ndarray:
    # Second basis vector from the standard basis: whichever of e0, e1 keeps
    # the larger residual against `first` (ties go to e0).
    basis = np.eye(2, dtype=complex)
    residuals = [e - first * np.vdot(first, e) for e in basis]
    norms = [np.linalg.norm(r) for r in residuals]
    k = 0 if norms[0] >= norms[1] else 1
    return residuals[k] / norms[k]


def svd2(a) -> Svd2Result:
    """Closed-form SVD of a 2x2 complex matrix in the transpose convention.

    Returns ``u, d1 >= d2 >= 0, w`` with ``a = u @ diag(d1, d2) @ w.T``.
    Output is canonical: the first non-negligible entry of each column of
    ``u`` is real positive, degenerate inputs use the standard basis for the
    right singular vectors, and a free second column of ``w`` (rank <= 1) is
    completed by Gram-Schmidt from the standard basis.
    """
    a = as_matrix2(a)
    size = float(np.max(np.abs(a)))
    if size == 0.0:
        return Svd2Result(np.eye(2, dtype=complex), 0.0, 0.0, np.eye(2, dtype=complex))
    # work on a / size so a^H a neither underflows nor overflows
    a = a / size
    h = a.conj().T @ a
    p, q, b = h[0, 0].real, h[1, 1].real, h[0, 1]
    scale = p + q

    # dominant eigenvector of a^H a, built from the row that avoids cancellation
    half_gap = 0.5 * (p - q)
    disc = np.hypot(half_gap, abs(b))
    if disc <= 8 * _EPS * scale:
        v1 = np.array([1.0, 0.0], dtype=complex)
    elif half_gap >= 0:
        v1 = np.array([half_gap + disc, np.conj(b)], dtype=complex)
    else:
        v1 = np.array([b, disc - half_gap], dtype=complex)
    v1 /= np.linalg.norm(v1)
    v2 = _complement(v1)

    av1 = a @ v1
    d1 = float(np.linalg.norm(av1))
    u1 = av1 / d1
    u2 = _complement(u1)
    c = np.vdot(u2, a @ v2)
    d2 = float(abs(c))
    if d2 <= 8 * _EPS * d1:
        # rank one: the second right vector is free
        w1 = np.conj(v1)
        w2 = _gram_schmidt_complete(w1)
    else:
        u2 = u2 * _phase_of(c)
        w1, w2 = np.conj(v1), np.conj(v2)
    d2 = min(d2, d1)
    d1, d2 = d1 * size, d2 * size

    u = np.column_stack([u1, u2])
    w = np.column_stack([w1, w2])
    for k in range(2):
        ph = _phase_of(_first_significant(u[:, k]))
        u[:, k] /= ph
        w[:, k] *= ph
    return Svd2Result(u, d1, d2, w)


def is_unitary(a, tol: float = TOL) -> bool:
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = as_matrix2(a)
    return unitarity_deviation(a) <= tol


def unitarity_deviation(a) -> float:
    a = np.asarray(a, dtype=complex)
    return float(np.max(np.abs(a.conj().T @ a - np.eye(a.shape[0]))))


def tensor_apply(u, w, v) -> np.ndarray:
    """``(u (x) w) v`` for a carrier-ordered two-qubit vector ``v``."""
    m = amplitude_matrix(v)
    return from_amplitude_matrix(as_matrix2(u) @ m @ as_matrix2(w).T)


def schmidt_coefficients(v, tol: float = 1e-10) -> tuple:
    """Descending Schmidt coefficients ``(s1, s2)`` of a normalized two-qubit state."""
    v = as_four_vector(v)
    norm = np.linalg.norm(v)
    if abs(norm - 1.0) > tol:
        raise ValueError(f"state is not normalized (norm {norm!r})")
    r = svd2(amplitude_matrix(v))
    return r.d1, r.d2
