import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from capillary_plates.errors import BracketError, DomainError
from capillary_plates.numerics import OdeState, Quadrant, quad_singular, shoot, solve_monotone


def test_quad_singular_inverse_sqrt():
    assert quad_singular(lambda t: 1.0 / math.sqrt(t), (0.0, 1.0, "lo")) == pytest.approx(2.0, abs=1e-10)


def test_quad_singular_smooth():
    assert quad_singular(math.cos, (0.0, math.pi / 2, "none")) == pytest.approx(1.0, abs=1e-10)


def test_quad_singular_singular_at_hi():
    val = quad_singular(lambda t: 1.0 / math.sqrt(1.0 - t), (0.0, 1.0, "hi"))
    assert val == pytest.approx(2.0, abs=1e-10)


def _midpoint_substituted(c_psi, hi, panels):
    # integral of cos(psi)/sqrt(cos(c) - cos(psi)) over [c, hi] with psi = c + t^2
    t_hi = math.sqrt(hi - c_psi)
    h = t_hi / panels
    t = (np.arange(panels) + 0.5) * h
    psi = c_psi + t * t
    gap = 2.0 * np.sin(0.5 * (psi + c_psi)) * np.sin(0.5 * t * t)
    return float(np.sum(2.0 * t * np.cos(psi) / np.sqrt(gap)) * h)


def _kernel(c):
    def f(psi):
        return math.cos(psi) / math.sqrt(2.0 * math.sin(0.5 * (psi + c)) * math.sin(0.5 * (psi - c)))

    return f


def test_quad_singular_b0_integral_matches_midpoint_oracle():
    psi2 = math.pi / 4
    ours = quad_singular(_kernel(psi2), (psi2, math.pi / 2, "lo"), abs_tol=1e-12)
    ref = _midpoint_substituted(psi2, math.pi / 2, 10_000_000)
    assert ours == pytest.approx(ref, abs=2e-10)
    assert ours == pytest.approx(0.9946004509035762, abs=1e-12)


def test_quad_singular_randomized_against_midpoint():
    rng = np.random.default_rng(20261015)
    worst = 0.0
    for _ in range(100):
        c = rng.uniform(0.05, 1.4)
        hi = rng.uniform(c + 0.01, math.pi / 2)
        ours = quad_singular(_kernel(c), (c, hi, "lo"), abs_tol=1e-10)
        ref = _midpoint_substituted(c, hi, 200_000)
        worst = max(worst, abs(ours - ref))
    assert worst <= 2e-10


def test_quad_singular_rejects_non_integrable():
    with pytest.raises(DomainError):
        quad_singular(lambda t: 1.0 / t, (0.0, 1.0, "lo"))


@pytest.mark.parametrize("rng", [(1.0, 0.0, "lo"), (0.0, 4.0, "none"), (0.0, 1.0, "middle"), (math.nan, 1.0, "lo")])
def test_quadrant_validation(rng):
    with pytest.raises(DomainError):
        Quadrant(*rng)


def test_solve_monotone_examples():
    assert solve_monotone(lambda x: x - 0.5, 0.0, 1.0) == pytest.approx(0.5, abs=1e-12)
    assert solve_monotone(math.cos, 0.0, math.pi) == pytest.approx(math.pi / 2, abs=1e-12)


def test_solve_monotone_errors():
    with pytest.raises(BracketError):
        solve_monotone(lambda x: x + 1.0, 0.0, 1.0)
    with pytest.raises(BracketError):
        solve_monotone(lambda x: x, 1.0, 0.0)
    assert issubclass(BracketError, DomainError)


def test_solve_monotone_deterministic():
    g = lambda x: x**3 - 2.0
    assert solve_monotone(g, 0.0, 2.0) == solve_monotone(g, 0.0, 2.0)


def test_shoot_equilibrium():
    c = shoot(0.7, OdeState(0.0, 0.0, 0.0), 1.0)
    assert c.status == "complete"
    assert np.all(c.U == 0.0) and np.all(c.psi == 0.0)


def test_shoot_convex_rise():
    c = shoot(0.5, (0.0, 0.3, 0.0), 1.0)
    assert c.status == "complete"
    assert np.all(np.diff(c.U) > 0)
    assert np.all(np.diff(c.psi) > 0)


def test_shoot_vertical_and_divergence_flags():
    c = shoot(5.0, (0.0, 2.0, 0.5), 10.0)
    assert c.status == "vertical"
    assert abs(c.psi[-1]) == pytest.approx(math.pi / 2, abs=1e-8)


def test_shoot_preconditions():
    with pytest.raises(DomainError):
        shoot(0.0, (0, 0.1, 0.1), 1.0)
    with pytest.raises(DomainError):
        shoot(1.0, (0, 0.1, math.pi / 2), 1.0)
    with pytest.raises(DomainError):
        shoot(1.0, (0, 0.1, 0.1), 0.0)


def test_shoot_along_barrier_I_matches_closed_form():
    from capillary_plates.barriers import closed_form_I

    g2 = math.pi / 3
    psi2 = math.pi / 2 - g2
    u2 = 2.0 * math.sin(psi2 / 2)
    c = shoot(1.0, (0.0, u2, psi2), -6.0)
    assert c.status == "complete"
    x, u = closed_form_I(g2, c.psi)
    assert np.max(np.abs(x - c.xi)) <= 1e-6
    assert np.max(np.abs(u - c.U)) <= 1e-6
    assert c.U[0] < 0.05 and c.psi[0] < 0.05


@settings(max_examples=60, deadline=None)
@given(
    B=st.floats(1e-3, 20.0),
    U0=st.floats(-3.0, 3.0),
    psi0=st.floats(-1.4, 1.4),
    xi_end=st.sampled_from([-2.0, 2.0]),
)
def test_shoot_first_integral_drift(B, U0, psi0, xi_end):
    tol = 1e-9
    c = shoot(B, (0.0, U0, psi0), xi_end, step_tol=tol)
    assert np.max(np.abs(c.first_integral_residual())) <= 10 * tol


@settings(max_examples=30, deadline=None)
@given(B=st.floats(1e-2, 10.0), U0=st.floats(-2.0, 2.0), psi0=st.floats(-1.3, 1.3))
def test_shoot_reflection_equivariance(B, U0, psi0):
    a = shoot(B, (0.0, U0, psi0), 1.5)
    b = shoot(B, (0.0, -U0, -psi0), 1.5)
    assert a.status == b.status
    np.testing.assert_array_equal(a.xi, b.xi)
    np.testing.assert_allclose(a.U, -b.U, atol=1e-14)
    np.testing.assert_allclose(a.psi, -b.psi, atol=1e-14)
