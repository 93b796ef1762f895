import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qudit_photonics.optics import (
    Branch,
    ElementSequence,
    HalfWavePlate,
    PhasePlate,
    PumpSetting,
    QuarterWavePlate,
    Rotator,
    element_jones,
    factorize_unitary,
    pump_for_seed,
    realize_unitary,
    seed_from_pump,
    synthesize_sequence,
    to_waveplates,
    wrap_phase,
)
from qudit_photonics.qmath import svd2, unitarity_deviation

from conftest import SEED_V, U_I, U_II, U_III, disc_matrix, haar_unitary

PI = math.pi


def test_wrap_phase():
    assert wrap_phase(-PI) == PI
    assert wrap_phase(3 * PI) == pytest.approx(PI)
    assert wrap_phase(0.5) == 0.5
    assert wrap_phase(2 * PI - 0.1) == pytest.approx(-0.1)


def test_factorize_identity():
    f = factorize_unitary(np.eye(2))
    assert (f.alpha, f.beta, f.gamma, f.theta) == (0.0, 0.0, 0.0, 0.0)


def test_factorize_hadamard():
    # entry equations: cos = sin = 1/sqrt2, e^{ia} = e^{ib} = 1, -e^{ig} = 1
    f = factorize_unitary(U_I)
    assert (f.alpha, f.beta, f.gamma, f.theta) == pytest.approx((0, 0, PI, PI / 4), abs=1e-15)
    np.testing.assert_allclose(f.matrix(), U_I, atol=1e-12)


def test_factorize_u_second():
    f = factorize_unitary(U_II)
    assert f.theta == pytest.approx(PI / 4, abs=1e-15)
    assert (f.alpha, f.beta) == pytest.approx((0, 0), abs=1e-15)
    assert -np.exp(1j * f.gamma) == pytest.approx(np.exp(-2j * PI / 3), abs=1e-15)
    assert np.max(np.abs(f.matrix() - U_II)) <= 1e-12


@pytest.mark.parametrize("u", [
    np.diag([np.exp(0.3j), np.exp(-1.2j)]),
    np.array([[0, np.exp(0.7j)], [np.exp(2.9j), 0]]),
    -np.eye(2),
])
def test_factorize_degenerate_angles(u):
    f = factorize_unitary(u)
    assert f.theta in (0.0, PI / 2)
    np.testing.assert_allclose(f.matrix(), u, atol=1e-12)
    if f.theta == 0.0:
        assert f.beta == 0.0
    else:
        assert f.alpha == 0.0


def test_factorize_rejects_non_unitary():
    with pytest.raises(ValueError, match="deviation"):
        factorize_unitary(np.diag([1, 2]))


def test_synthesize_identity():
    seq = synthesize_sequence(factorize_unitary(np.eye(2)))
    assert seq.global_phase == 0.0
    assert [vars(e) for e in seq.elements] == [{"delta": 0.0}, {"theta": 0.0}, {"delta": 0.0}]
    assert seq.residual(np.eye(2)) == 0.0
    assert to_waveplates(seq).elements == ()


def test_synthesize_hadamard():
    seq = synthesize_sequence(factorize_unitary(U_I))
    kinds = [type(e) for e in seq.elements]
    assert kinds == [PhasePlate, Rotator, PhasePlate]
    assert seq.elements[1].theta == pytest.approx(PI / 4)
    product = seq.elements[2].jones() @ seq.elements[1].jones() @ seq.elements[0].jones()
    np.testing.assert_allclose(np.exp(1j * seq.global_phase) * product, U_I, atol=1e-12)


def test_hadamard_is_half_wave_at_pi_over_8():
    plates = realize_unitary(U_I, waveplates=True)
    assert plates.elements == (HalfWavePlate(PI / 8),)
    assert plates.residual(U_I) <= 1e-12


@pytest.mark.parametrize("u, phase", [(U_I, 0.0), (U_II, 2 * PI / 3), (U_III, -2 * PI / 3)])
def test_printed_unitaries_are_waveplate_plus_delay(u, phase):
    f = factorize_unitary(u)
    assert f.theta == pytest.approx(PI / 4, abs=1e-15)
    seq = synthesize_sequence(f)
    assert seq.elements[0].delta == pytest.approx(0.0, abs=1e-15)  # right phase shift is trivial
    target = PhasePlate(phase).jones() @ HalfWavePlate(PI / 8).jones()
    np.testing.assert_allclose(seq.unitary(), target, atol=1e-12)
    plates = to_waveplates(seq)
    assert isinstance(plates.elements[0], HalfWavePlate)
    assert plates.elements[0].axis_angle == pytest.approx(PI / 8)
    if phase:
        assert plates.elements[1].delta == pytest.approx(phase, abs=1e-12)
    assert plates.residual(u) <= 1e-12


def test_element_jones_examples():
    np.testing.assert_array_equal(element_jones(PhasePlate(0.0)), np.eye(2))
    np.testing.assert_allclose(element_jones(HalfWavePlate(PI / 8)), U_I, atol=1e-15)
    u2 = element_jones(PhasePlate(2 * PI / 3)) @ element_jones(HalfWavePlate(PI / 8))
    assert np.max(np.abs(u2 - U_II)) <= 1e-12
    u3 = element_jones(PhasePlate(-2 * PI / 3)) @ element_jones(HalfWavePlate(PI / 8))
    assert np.max(np.abs(u3 - U_III)) <= 1e-12


def test_quarter_wave_plate():
    np.testing.assert_allclose(element_jones(QuarterWavePlate(0.0)), np.diag([1, -1j]), atol=1e-15)
    expected = np.array([[1 - 1j, 1 + 1j], [1 + 1j, 1 - 1j]]) / 2
    np.testing.assert_allclose(element_jones(QuarterWavePlate(PI / 4)), expected, atol=1e-15)
    # two quarter-wave plates on the same axis make a half-wave plate
    q = element_jones(QuarterWavePlate(0.4))
    np.testing.assert_allclose(q @ q, element_jones(HalfWavePlate(0.4)), atol=1e-15)


@settings(max_examples=200, deadline=None)
@given(st.floats(-10, 10), st.floats(-10, 10))
def test_element_properties(a, b):
    for e in (PhasePlate(a), Rotator(a), HalfWavePlate(a), QuarterWavePlate(a)):
        assert unitarity_deviation(element_jones(e)) <= 1e-12
    np.testing.assert_allclose(Rotator(a).jones() @ Rotator(b).jones(), Rotator(a + b).jones(), atol=1e-12)
    h = HalfWavePlate(a).jones()
    np.testing.assert_allclose(h @ h, np.eye(2), atol=1e-12)


def test_random_unitaries_factorize_and_synthesize(rng):
    worst_f = worst_s = 0.0
    unitaries = [svd2(disc_matrix(rng)).u for _ in range(500)] + [haar_unitary(rng) for _ in range(500)]
    for u in unitaries:
        f = factorize_unitary(u)
        assert 0 <= f.theta <= PI / 2
        assert all(-PI < p <= PI for p in (f.alpha, f.beta, f.gamma))
        worst_f = max(worst_f, np.max(np.abs(f.matrix() - u)))
        worst_s = max(worst_s, synthesize_sequence(f).residual(u), realize_unitary(u, True).residual(u))
    assert worst_f <= 1e-12
    assert worst_s <= 1e-12


def test_sequence_serialization_roundtrip(rng):
    seq = realize_unitary(haar_unitary(rng))
    assert ElementSequence.from_dict(seq.to_dict()) == seq
    plates = ElementSequence((QuarterWavePlate(0.1), HalfWavePlate(0.2), Rotator(0.3)), 0.5)
    assert ElementSequence.from_dict(plates.to_dict()) == plates


def test_seed_from_pump_examples():
    for branch in Branch:
        assert seed_from_pump(PumpSetting(branch, 0.0)) == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    assert seed_from_pump(PumpSetting(Branch.LOWER_HH, PI / 4)) == pytest.approx(0.0, abs=1e-15)
    # target seed (sqrt2+1)/sqrt6: cos(2 theta_p) = sqrt(1-x^2)/x
    theta = 0.5 * math.acos(math.sqrt(1 - SEED_V**2) / SEED_V)
    assert seed_from_pump(PumpSetting(Branch.LOWER_VV, theta)) == pytest.approx(SEED_V, abs=1e-12)
    assert pump_for_seed(SEED_V).theta_p == pytest.approx(theta, abs=1e-12)


def test_seed_from_pump_rejects_range():
    with pytest.raises(ValueError):
        seed_from_pump(PumpSetting(Branch.LOWER_HH, 1.0))
    with pytest.raises(ValueError):
        seed_from_pump(PumpSetting(Branch.LOWER_VV, -0.1))


def test_pump_for_seed_examples():
    assert pump_for_seed(1 / math.sqrt(2)) == PumpSetting(Branch.LOWER_VV, 0.0)
    p = pump_for_seed(0.0)
    assert p.branch is Branch.LOWER_HH and p.theta_p == pytest.approx(PI / 4, abs=1e-15)
    p = pump_for_seed(0.986)
    assert p.branch is Branch.LOWER_VV
    assert p.theta_p == pytest.approx(0.5 * math.acos(math.sqrt(1 - 0.986**2) / 0.986), abs=1e-12)
    assert seed_from_pump(p) == pytest.approx(0.986, abs=1e-12)
    with pytest.raises(ValueError):
        pump_for_seed(1.2)


def test_pump_round_trips():
    for x in np.linspace(0, 1, 101):
        p = pump_for_seed(x)
        assert (p.branch is Branch.LOWER_HH) == (x < 1 / math.sqrt(2))
        assert abs(seed_from_pump(p) - x) <= 1e-12
    for branch in Branch:
        for theta in np.linspace(PI / 40, PI / 4, 10):
            x = seed_from_pump(PumpSetting(branch, theta))
            back = pump_for_seed(x)
            assert back.branch is branch
            assert back.theta_p == pytest.approx(theta, abs=1e-12)


def test_pump_monotone():
    thetas = np.linspace(0, PI / 4, 200)
    hh = [seed_from_pump(PumpSetting(Branch.LOWER_HH, t)) for t in thetas]
    vv = [seed_from_pump(PumpSetting(Branch.LOWER_VV, t)) for t in thetas]
    assert np.all(np.diff(hh) <= 0) and hh[-1] == pytest.approx(0, abs=1e-15)
    assert np.all(np.diff(vv) >= 0) and vv[-1] == pytest.approx(1, abs=1e-15)
    assert max(hh) <= 1 / math.sqrt(2) + 1e-15 <= min(vv) + 2e-15
