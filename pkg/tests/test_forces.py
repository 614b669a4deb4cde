import io
import math

import numpy as np
import pytest

from capillary_plates import barriers, forces
from capillary_plates.errors import DomainError
from capillary_plates.forces import NeighborClass, SweepClass
from capillary_plates.profile import PhysicalParams, PlateConfig, height_at, solve_join

PI = math.pi


def test_force_crossing_examples():
    assert forces.force_crossing(0.0) == 0.0
    assert forces.force_crossing(PI / 3) == pytest.approx(-1.0, abs=1e-15)


@pytest.mark.parametrize("g2, expected", [(PI / 2, 0.0), (PI / 6, -1.0), (PI / 4, -2 * (1 - math.sqrt(2) / 2))])
def test_symmetric_force_limit(g2, expected):
    assert forces.symmetric_force_limit(g2) == pytest.approx(expected, abs=1e-15)


def test_force_physical():
    water = PhysicalParams(rho=1000.0, g=9.81, sigma=0.072)
    assert forces.force_physical(0.0, water) == 0.0
    assert forces.force_physical(-1.0, water) == pytest.approx(-0.072, rel=1e-15)


def test_force_of_curve_on_crossing_curve_matches_crossing_angle():
    c = solve_join(PlateConfig(2.6, 0.5, 0.3), 64)
    assert c.crossing is not None
    assert forces.force_of_curve(c).normalized == pytest.approx(forces.force_crossing(c.crossing[1]), abs=1e-14)


def test_force_of_curve_on_one_signed_curve_is_B_U0_squared():
    # attracting curve above the axis: the extended curve is horizontal at U0
    B = 0.01
    c = solve_join(PlateConfig(PI / 3, PI / 6, B), 64)
    assert np.all(c.U > 0)
    U0 = height_at(B, c.C, 0.0)
    F = forces.force_of_curve(c).normalized
    assert F > 0
    assert F == pytest.approx(B * U0 * U0, rel=1e-12)


def test_right_height_route_and_physical_route_agree():
    water = PhysicalParams(rho=998.0, g=9.81, sigma=0.0728)
    rng = np.random.default_rng(3)
    for _ in range(20):
        cfg = PlateConfig(rng.uniform(0.1, PI - 0.1), rng.uniform(0.05, 1.4), 10 ** rng.uniform(-2, 0.5))
        c = solve_join(cfg, 16)
        fv = forces.force_of_curve(c, params=water)
        F2 = forces.force_from_right_height(cfg.B, c.U[-1], cfg.gamma2)
        assert fv.normalized == pytest.approx(F2, abs=1e-10)
        # sigma kappa u2^2 - 2 sigma (1 - sin gamma2) with u2 = a U2, kappa a^2 = B
        a = math.sqrt(cfg.B / water.kappa)
        u2 = a * c.U[-1]
        physical = water.sigma * water.kappa * u2 * u2 - 2 * water.sigma * (1 - math.sin(cfg.gamma2))
        assert fv.physical == pytest.approx(physical, abs=1e-11)
        assert fv.physical == pytest.approx(water.sigma * fv.normalized, rel=1e-15)


def test_force_of_curve_rejects_partial_curves():
    g2 = PI / 4
    B0, _ = barriers.critical_separations(g2)
    truncated = barriers.barrier("IV0", 2 * B0, g2, 32)
    with pytest.raises(DomainError):
        forces.force_of_curve(truncated)
    c = solve_join(PlateConfig(2.0, 0.5, 0.3), 16)
    with pytest.raises(DomainError):
        forces.force_of_curve(c, B=0.4)


def test_admissible_ranges_conventions():
    g2 = PI / 6
    psi2 = PI / 2 - g2
    B0, _ = barriers.critical_separations(g2)
    wide = forces.admissible_ranges(2 * B0, g2)
    assert wide.lower.hi == PI / 2 and wide.lower.hi_closed
    assert PI / 2 in wide.lower and psi2 not in wide.lower
    at = forces.admissible_ranges(B0, g2)
    assert at.lower.hi == pytest.approx(PI / 2, abs=1e-12)
    narrow = forces.admissible_ranges(0.5 * B0, g2)
    assert psi2 < narrow.lower.hi < PI / 2 and not narrow.lower.hi_closed
    assert narrow.upper.hi == pytest.approx(psi2) and narrow.upper.lo > 0


def test_upper_band_widens_with_separation():
    g2 = PI / 6
    widths = [r.upper.hi - r.upper.lo for r in (forces.admissible_ranges(B, g2) for B in np.geomspace(0.01, 0.1, 12))]
    assert np.all(np.diff(widths) > 0)


def test_extremal_position_limits_and_errors():
    g2 = PI / 6
    psi2 = PI / 2 - g2
    B = 0.3
    assert forces.extremal_position(NeighborClass("Upper", psi2 - 1e-7), g2, B) < 1e-2
    assert forces.extremal_position(NeighborClass("Lower", psi2 + 1e-9), g2, B) < 1e-3
    with pytest.raises(DomainError):
        forces.extremal_position(NeighborClass("Upper", 0.1), g2, B)
    with pytest.raises(DomainError):
        forces.extremal_position(NeighborClass("Lower", psi2 - 0.1), g2, B)


def test_extremal_position_upper_matches_sweep_minimum():
    g2, B_start = PI / 6, 0.3
    cfg = PlateConfig.from_inclinations(PI / 4, PI / 3, B_start)
    sw = forces.sweep_force(cfg, B_start, 1e-4, 120)
    assert sw.classification is SweepClass.UPPER
    pos = forces.extremal_position(NeighborClass("Upper", PI / 4), g2, B_start)
    assert sw.extremum.xi_star == pytest.approx(pos, abs=1e-4)
    assert sw.extremum.F_star == pytest.approx(-2 * (1 - math.cos(PI / 4)), abs=1e-6)


def test_sweep_is_unimodal_around_the_extremum():
    cfg = PlateConfig.from_inclinations(PI / 4, PI / 3, 0.3)
    sw = forces.sweep_force(cfg, 0.3, 1e-4, 120)
    k = int(np.argmin(sw.F))
    assert 0 < k < sw.F.size - 1
    # B ascends along the grid: force falls towards the minimum from the
    # small-B side and rises again beyond it
    assert np.all(np.diff(sw.F[: k + 1]) < 0)
    assert np.all(np.diff(sw.F[k:]) > 0)


def test_lower_class_minima_are_independent_of_the_left_angle():
    g2 = PI / 6
    psi2 = PI / 2 - g2
    mins = []
    for x in np.linspace(psi2, PI / 2, 5, endpoint=False)[1:]:
        sw = forces.sweep_force(PlateConfig.from_inclinations(x, psi2, 0.3), 0.3, 1e-4, 60)
        assert sw.classification is SweepClass.LOWER
        mins.append(sw.extremum.F_star)
        assert sw.extremum.xi_star == pytest.approx(
            forces.extremal_position(NeighborClass("Lower", x), g2, 0.3), abs=1e-4)
    assert np.ptp(mins) <= 1e-6
    assert mins[0] == pytest.approx(forces.symmetric_force_limit(g2), abs=1e-6)


def test_extremal_forces_and_positions_along_upper_sequence():
    # left angles approaching psi2 from below: the extremal repulsion grows
    # towards the symmetric limit while the extremal separation shrinks
    g2, B_start = PI / 6, 0.3
    psi2 = PI / 2 - g2
    lo = forces.admissible_ranges(B_start, g2).upper.lo
    xs = psi2 - (psi2 - lo) * np.geomspace(0.9, 1e-4, 12)
    F = np.array([forces.force_crossing(x) for x in xs])
    sep = np.array([forces.extremal_position(NeighborClass("Upper", x), g2, B_start) for x in xs])
    assert np.all(np.diff(F) < 0) and np.all(F > forces.symmetric_force_limit(g2))
    assert F[-1] == pytest.approx(forces.symmetric_force_limit(g2), abs=1e-3)
    assert np.all(np.diff(sep) < 0)
    # the crossing piece has width ~ sqrt(psi2 - psi1), so the separation
    # closes like the square root of the angle gap
    ratio = sep / np.sqrt(psi2 - xs)
    assert abs(ratio[-1] / ratio[-2] - 1) < 0.05
    # the sweep agrees with the formula for one member of the sequence
    sw = forces.sweep_force(PlateConfig.from_inclinations(xs[3], psi2, B_start), B_start, 1e-4, 80)
    assert sw.extremum.F_star == pytest.approx(F[3], abs=1e-6)


def test_symmetric_sweep_is_monotone_and_bounded():
    g2 = PI / 6
    sw = forces.sweep_force(PlateConfig(PI - g2, g2, 1.0), 1.0, 1e-4, 40)
    assert sw.classification is SweepClass.SYMMETRIC
    assert np.all(np.diff(sw.F) > 0)
    assert np.all(sw.F > -1.0)
    assert sw.extremum is None


def test_classify_sweep_generic():
    assert forces.classify_sweep(PlateConfig(PI / 3, PI / 6, 0.1), 0.1) is SweepClass.GENERIC


def test_repulsion_bounded_by_inclination_on_sweep_curves():
    g2 = PI / 4
    for B in np.geomspace(1e-3, 1.0, 6):
        for g1 in (PI - g2, PI - g2 + 0.2, PI - g2 - 0.05):
            c = solve_join(PlateConfig(g1, g2, float(B)), 64)
            F = forces.force_of_curve(c).normalized
            if F >= 0:
                continue
            gap = 2 * (1 - np.cos(c.psi)) - abs(F)
            assert np.all(gap >= -1e-9)


def test_sweep_csv_format():
    cfg = PlateConfig.from_inclinations(PI / 4, PI / 3, 0.3)
    sw = forces.sweep_force(cfg, 0.3, 1e-3, 10)
    buf = io.StringIO()
    text = sw.to_csv(buf)
    lines = text.splitlines()
    assert lines[0] == "B,F"
    assert lines[-1].startswith("# B_star=") and " F_star=" in lines[-1]
    assert len(lines) == 12 and buf.getvalue() == text
    b, f = lines[1].split(",")
    assert float(b) == sw.B[0] and float(f) == sw.F[0]


def test_sweep_rejects_bad_ranges():
    cfg = PlateConfig(2.0, 0.5, 0.3)
    with pytest.raises(DomainError):
        forces.sweep_force(cfg, 0.1, 0.2)
    with pytest.raises(DomainError):
        forces.sweep_force(cfg, 0.3, 0.1, n=2)
