"""Plate forces, neighbor classes and force-separation sweeps.

The normalized horizontal force of a curve joining the plates is
``F = 2 (C - 1)``.  For a curve crossing the axis at inclination ``psi0``
this is ``-2 (1 - cos psi0)``; for a curve of one sign it equals ``B U0**2``
with ``U0`` the height where the extended curve is horizontal, and also
``B U2**2 - 2 (1 - sin gamma2)`` in terms of the right-plate height.
Negative values are repelling.
"""

from __future__ import annotations

import enum
import io
import math
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np
from scipy import optimize

from .barriers import critical_separations, psi10, psi1_zero
from .curve import ProfileCurve
from .errors import DomainError, NumericalError
from .profile import HALF_PI, ForceValue, PhysicalParams, PlateConfig, _join, crossing_integral

SUPPLEMENTARY_TOL = 1e-12


class NeighborKind(str, enum.Enum):
    UPPER = "Upper"
    LOWER = "Lower"


@dataclass(frozen=True)
class NeighborClass:
    """Neighbor of the symmetric curve, identified by its left-plate
    inclination ``psi1``."""

    kind: NeighborKind
    psi1: float

    def __post_init__(self):
        object.__setattr__(self, "kind", NeighborKind(self.kind))


class SweepClass(str, enum.Enum):
    UPPER = "UpperClass"
    LOWER = "LowerClass"
    SYMMETRIC = "Symmetric"
    GENERIC = "Generic"


class Interval(NamedTuple):
    lo: float
    hi: float
    lo_closed: bool = False
    hi_closed: bool = False

    def __contains__(self, x) -> bool:
        above = x >= self.lo if self.lo_closed else x > self.lo
        below = x <= self.hi if self.hi_closed else x < self.hi
        return above and below


class Extremum(NamedTuple):
    B_star: float
    F_star: float
    xi_star: float


@dataclass(frozen=True)
class ForceSweep:
    """Forces along a plate approach with fixed contact angles.

    ``B`` is ascending.  ``xi_star`` of the extremum is the separation at
    the extremum in units of the starting half-separation, i.e.
    ``2 sqrt(B_star / B_start)`` with ``B_start`` the largest ``B``.
    """

    config: PlateConfig
    B: np.ndarray
    F: np.ndarray
    classification: SweepClass
    extremum: Extremum | None
    truncated: bool = False

    @property
    def points(self) -> list[tuple[float, float]]:
        return list(zip(self.B.tolist(), self.F.tolist()))

    def to_csv(self, target=None) -> str:
        buf = io.StringIO()
        buf.write("B,F\n")
        for b, f in zip(self.B, self.F):
            buf.write(f"{b:.17g},{f:.17g}\n")
        if self.extremum is not None:
            buf.write(f"# B_star={self.extremum.B_star:.17g} F_star={self.extremum.F_star:.17g}\n")
        text = buf.getvalue()
        if isinstance(target, (str, Path)):
            Path(target).write_text(text)
        elif target is not None:
            target.write(text)
        return text


def force_of_curve(curve: ProfileCurve, B: float | None = None, gamma2: float | None = None,
                   params: PhysicalParams | None = None) -> ForceValue:
    """Normalized (and optionally physical) force of a joining curve.

    Raises:
        DomainError: the curve does not span both plates.
    """
    if not curve.reaches(-1.0, 1.0) or curve.status != "complete":
        raise DomainError("force is defined only for curves joining both plates")
    if B is not None and not math.isclose(B, curve.B, rel_tol=1e-12):
        raise DomainError("B does not match the curve")
    F = 2.0 * curve.c_minus_one
    if params is None:
        return ForceValue(F)
    return ForceValue(F, force_physical(F, params), params.sigma)


def force_crossing(psi0: float) -> float:
    """``-2 (1 - cos psi0)``, evaluated as ``-4 sin(psi0/2)**2``."""
    return -4.0 * math.sin(0.5 * psi0) ** 2


def force_from_right_height(B: float, U2: float, gamma2: float) -> float:
    """``B U2**2 - 2 (1 - sin gamma2)`` from the height at the right plate."""
    return B * U2 * U2 - 2.0 * (1.0 - math.sin(gamma2))


def symmetric_force_limit(gamma2: float) -> float:
    """Limit ``-2 (1 - sin gamma2)`` of the symmetric force as the plates
    close; the same for ``gamma1 = pi - gamma2`` since the sines agree."""
    if not 0.0 <= gamma2 <= HALF_PI:
        raise DomainError("gamma2 must lie in [0, pi/2]")
    f2 = -2.0 * (1.0 - math.sin(gamma2))
    f1 = -2.0 * (1.0 - math.sin(math.pi - gamma2))
    if not math.isclose(f1, f2, rel_tol=1e-12, abs_tol=1e-15):
        raise NumericalError("inconsistent supplementary limit")
    return f2


def force_physical(F_normalized: float, params: PhysicalParams) -> float:
    """Force per unit contact-line length, ``sigma * F``."""
    return params.sigma * F_normalized


class AdmissibleRanges(NamedTuple):
    upper: Interval
    lower: Interval


def admissible_ranges(B: float, gamma2: float) -> AdmissibleRanges:
    """Left-plate inclinations of the upper and lower neighbor classes.

    Upper: ``(psi1_zero, psi2)``.  Lower: ``(psi2, pi/2]`` when ``B > B0``,
    else ``(psi2, psi10)``.
    """
    psi2 = HALF_PI - gamma2
    upper = Interval(psi1_zero(B, gamma2), psi2)
    B0, _ = critical_separations(gamma2)
    if B > B0:
        lower = Interval(psi2, HALF_PI, hi_closed=True)
    else:
        lower = Interval(psi2, psi10(B, gamma2).value)
    return AdmissibleRanges(upper, lower)


def classify_sweep(config: PlateConfig, B_start: float) -> SweepClass:
    psi1 = config.psi1
    if abs(config.gamma1 + config.gamma2 - math.pi) <= SUPPLEMENTARY_TOL:
        return SweepClass.SYMMETRIC
    ranges = admissible_ranges(B_start, config.gamma2)
    if psi1 in ranges.upper:
        return SweepClass.UPPER
    if psi1 in ranges.lower:
        return SweepClass.LOWER
    return SweepClass.GENERIC


def _force(config: PlateConfig, B: float) -> float:
    return _join(PlateConfig(config.gamma1, config.gamma2, B)).force


def sweep_force(config: PlateConfig, B_hi: float, B_lo: float, n: int = 200,
                refine_tol: float = 1e-8) -> ForceSweep:
    """Force on a log-spaced grid of ``n`` separations from ``B_hi`` down
    to ``B_lo`` with the contact angles of ``config`` held fixed.

    An interior grid minimum is refined by golden-section search to the
    relative width ``refine_tol`` in ``B``.
    """
    if not B_hi > B_lo > 0:
        raise DomainError("need B_hi > B_lo > 0")
    if n < 3:
        raise DomainError("need at least 3 grid points")
    grid = np.geomspace(B_lo, B_hi, n)
    F = []
    truncated = False
    # evaluate in the order of the physical motion (decreasing B)
    for b in grid[::-1]:
        try:
            F.append(_force(config, float(b)))
        except (DomainError, NumericalError):
            truncated = True
            break
    F = np.array(F[::-1])
    grid = grid[n - F.size:]
    cls = classify_sweep(config, B_hi)
    extremum = None
    if F.size >= 3:
        k = int(np.argmin(F))
        if 0 < k < F.size - 1:
            f = lambda b: _force(config, b)
            res = optimize.minimize_scalar(
                f, bracket=(grid[k - 1], grid[k], grid[k + 1]), method="golden", tol=refine_tol
            )
            b_star = float(res.x)
            extremum = Extremum(b_star, float(res.fun), 2.0 * math.sqrt(b_star / B_hi))
    return ForceSweep(config, grid, F, cls, extremum, truncated)


def extremal_position(neighbor: NeighborClass, gamma2: float, B_start: float) -> float:
    """Separation, in units of the starting half-separation, at which the
    extremal repelling force of a neighbor class is attained.

    Upper class: the curve crossing the axis at the moved left plate with
    inclination ``psi1``; eliminating ``B`` between that curve and ``II``
    at the start gives ``2 J(psi1; psi2) / J(psi1_zero; psi2)``.
    Lower class: the piece of ``IV0`` between ``psi2`` and ``psi1``, of
    width ``J(psi2; psi1) / sqrt(2 B_start)``.
    """
    ranges = admissible_ranges(B_start, gamma2)
    psi2 = HALF_PI - gamma2
    x = neighbor.psi1
    if neighbor.kind is NeighborKind.UPPER:
        if x not in ranges.upper:
            raise DomainError(f"psi1={x} outside the upper range {ranges.upper[:2]}")
        return 2.0 * crossing_integral(x, psi2) / crossing_integral(ranges.upper.lo, psi2)
    if x not in ranges.lower:
        raise DomainError(f"psi1={x} outside the lower range {ranges.lower[:2]}")
    return crossing_integral(psi2, x) / math.sqrt(2.0 * B_start)
