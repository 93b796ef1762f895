import numpy as np
import pytest

ACCEPTANCE_LINES = []

SQ2, SQ3, SQ6 = np.sqrt(2), np.sqrt(3), np.sqrt(6)
OMEGA = np.exp(2j * np.pi / 3)

# unitaries and qutrit states as printed in the source, typed in by hand
U_I = np.array([[1, 1], [1, -1]]) / SQ2
U_II = np.array([[1, 1], [np.exp(-2j * np.pi / 3), np.exp(1j * np.pi / 3)]]) / SQ2
U_III = np.array([[1, 1], [np.exp(2j * np.pi / 3), np.exp(-1j * np.pi / 3)]]) / SQ2
V_QUTRITS = [
    np.array([1, 1, 1]) / SQ3,
    np.array([1, np.exp(2j * np.pi / 3), np.exp(-2j * np.pi / 3)]) / SQ3,
    np.array([1, np.exp(-2j * np.pi / 3), np.exp(2j * np.pi / 3)]) / SQ3,
]
SEED_V = (SQ2 + 1) / SQ6
SEED_XI = np.sqrt((3 + SQ2) / 6)


def random_state(rng, n=4):
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    return v / np.linalg.norm(v)


def haar_unitary(rng, n=2):
    z = (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def disc_matrix(rng):
    """2x2 matrix with entries uniform in the complex unit disc."""
    r = np.sqrt(rng.uniform(size=(2, 2)))
    return r * np.exp(2j * np.pi * rng.uniform(size=(2, 2)))


def kron_state(v):
    """Carrier (|00>, |11>, |01>, |10>) -> kron (|00>, |01>, |10>, |11>), by hand."""
    return np.array([v[0], v[2], v[3], v[1]])


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
