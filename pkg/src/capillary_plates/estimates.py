"""Meniscus height and narrow-channel force estimates, exposed as bounds
with reported margins.

With ``lambda = sin(psi2) - sin(psi1)`` the estimates for a curve of one
sign are

* ``U_m**2 > lambda**2 / (4 B**2) - (2/B)(1 - sin gamma2)``,
* ``B (U_M**2 - U_m**2) = 2 (cos psi_m - sin gamma2) <= 2 (1 - sin gamma2)``,
* ``U_M - U_m < 2 / (B U_m)`` once ``B < lambda**2 / (8 (1 - sin gamma2))``,
* ``B U_m**2 > lambda**2 / (8 B)`` once ``B < lambda**2 / 32``,

where ``U_m`` and ``U_M`` are the least and greatest height between the
plates.  They assume the greatest height is on the right plate, which
holds when ``psi1 >= -psi2``.  For ``lambda < 0`` the configuration is
mapped to ``lambda > 0`` by the point reflection ``U(xi) -> -U(-xi)``,
i.e. ``(gamma1, gamma2) -> (pi - gamma2, pi - gamma1)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError
from .profile import HALF_PI, JoinSolution, PlateConfig, _join, crossing_angle_symmetric, crossing_integral


class Side(str, enum.Enum):
    ABOVE = "Above"
    BELOW = "Below"


class BoundCheck(NamedTuple):
    """One inequality evaluated on a solution.

    ``margin`` is positive when the inequality holds with room to spare;
    ``applicable`` is False outside the regime where it is claimed.
    """

    name: str
    bound: float
    attained: float
    margin: float
    holds: bool
    applicable: bool = True


def _check(name, bound, attained, margin, applicable, strict):
    # a non-strict bound may be met with equality up to rounding
    slack = 0.0 if strict else -1e-12 * max(1.0, abs(bound))
    holds = margin > 0 if strict else margin >= slack
    return BoundCheck(name, bound, attained, margin, holds, applicable)


def _lower(name, bound, attained, applicable=True, strict=True):
    return _check(name, bound, attained, attained - bound, applicable, strict)


def _upper(name, bound, attained, applicable=True, strict=True):
    return _check(name, bound, attained, bound - attained, applicable, strict)


def datum_mismatch(gamma1: float, gamma2: float) -> float:
    """``lambda = sin(psi2) - sin(psi1) = cos(gamma2) + cos(gamma1)``."""
    return math.cos(gamma2) + math.cos(gamma1)


def symmetric_height_bound(B: float, gamma2: float) -> float:
    """Upper bound ``sqrt((2/B)(cos psi0 - sin gamma2))`` for the height of
    the symmetric curve on the right half of the channel."""
    if not B > 0:
        raise DomainError("B must be positive")
    psi2 = HALF_PI - gamma2
    psi0 = crossing_angle_symmetric(B, gamma2)
    gap = 2.0 * math.sin(0.5 * (psi2 + psi0)) * math.sin(0.5 * (psi2 - psi0))
    return math.sqrt(2.0 * max(gap, 0.0) / B)


def symmetric_chain(B: float, gamma2: float) -> list[BoundCheck]:
    """The chain ``sqrt(2B) > integral cos/sqrt(1 - cos) > ln(sin psi2 /
    sin psi0)`` over ``[psi0, psi2]`` for the symmetric crossing angle."""
    psi2 = HALF_PI - gamma2
    psi0 = crossing_angle_symmetric(B, gamma2)
    lhs = math.sqrt(2.0 * B)
    g = lambda x: math.log(math.tan(0.25 * x)) + 2.0 * math.cos(0.5 * x)
    middle = math.sqrt(2.0) * (g(psi2) - g(psi0))
    log_ratio = math.log(math.sin(psi2) / math.sin(psi0))
    half = crossing_integral(psi0, psi2)
    return [
        BoundCheck("width identity", lhs, half, lhs - half, math.isclose(lhs, half, rel_tol=1e-9)),
        _upper("flat-level comparison", lhs, middle),
        _upper("log comparison", middle, log_ratio),
    ]


@dataclass(frozen=True)
class HeightBounds:
    """Bounds for a non-symmetric configuration.

    ``U_m_sq_lower`` bounds the squared least height from below;
    ``oscillation_upper`` bounds ``U_M - U_m`` using that lower bound and is
    infinite when the lower bound is not positive.  ``side`` tells whether
    the meniscus ends up above or below the axis for small ``B``.
    """

    lambda_: float
    U_m_sq_lower: float
    oscillation_upper: float
    side: Side
    gamma2_effective: float
    valid: bool
    oscillation_applicable: bool
    narrow_applicable: bool
    narrow_lower: float
    printed_chain_lower: float


def _reflect(gamma1: float, gamma2: float) -> tuple[float, float]:
    return math.pi - gamma2, math.pi - gamma1


def height_bounds_generic(B: float, gamma1: float, gamma2: float) -> HeightBounds:
    """Height bounds for ``gamma1 + gamma2 != pi``.

    Raises:
        DomainError: ``lambda == 0`` (the symmetric case has its own
            estimates) or invalid data.
    """
    if not B > 0:
        raise DomainError("B must be positive")
    lam = datum_mismatch(gamma1, gamma2)
    if abs(lam) < 1e-14:
        raise DomainError("lambda = 0: use the symmetric estimates")
    side = Side.ABOVE
    g1, g2 = gamma1, gamma2
    if lam < 0:
        g1, g2 = _reflect(gamma1, gamma2)
        lam = -lam
        side = Side.BELOW
    psi1, psi2 = g1 - HALF_PI, HALF_PI - g2
    drop = 1.0 - math.sin(g2)
    lower = lam * lam / (4.0 * B * B) - 2.0 * drop / B
    osc = 2.0 / (B * math.sqrt(lower)) if lower > 0 else math.inf
    return HeightBounds(
        lambda_=lam,
        U_m_sq_lower=lower,
        oscillation_upper=osc,
        side=side,
        gamma2_effective=g2,
        valid=psi1 >= -psi2,
        oscillation_applicable=B < attraction_threshold_raw(lam, g2),
        narrow_applicable=B < lam * lam / 32.0,
        narrow_lower=lam * lam / (8.0 * B * B),
        printed_chain_lower=(lam * lam / 4.0 - 4.0 * B) / (B * B),
    )


def extreme_heights(sol: JoinSolution) -> tuple[float, float, float]:
    """``(U_m, U_M, psi_m)``: least and greatest ``|U|`` between the plates
    for a curve of one sign, and the inclination where ``|U|`` is least."""
    c = sol.config
    if sol.case == "crossing":
        return 0.0, max(abs(sol.U2), abs(sol.U1)), sol.level.psi0
    lo, hi = sorted((c.psi1, c.psi2))
    psi_m = 0.0 if lo <= 0.0 <= hi else (lo if abs(lo) < abs(hi) else hi)
    sign = 1 if sol.case == "positive" else -1
    U_m = abs(sol.height(psi_m, sign))
    U_M = max(abs(sol.U1), abs(sol.U2))
    return U_m, U_M, psi_m


def check_height_bounds(B: float, gamma1: float, gamma2: float) -> list[BoundCheck]:
    """Evaluate every height estimate on the joining curve of the data."""
    hb = height_bounds_generic(B, gamma1, gamma2)
    g1, g2 = (gamma1, gamma2) if hb.side is Side.ABOVE else _reflect(gamma1, gamma2)
    sol = _join(PlateConfig(g1, g2, B))
    one_sign = sol.case != "crossing"
    U_m, U_M, psi_m = extreme_heights(sol)
    drop = 1.0 - math.sin(g2)
    checks = [
        _lower("least height squared", hb.U_m_sq_lower, U_m * U_m, hb.valid),
    ]
    if one_sign:
        spread = B * (U_M * U_M - U_m * U_m)
        # equality when the least height sits at an interior horizontal point
        checks.append(_upper("height spread", 2.0 * drop, spread, hb.valid, strict=g1 - HALF_PI > 0))
        checks.append(_upper("oscillation", 2.0 / (B * U_m) if U_m > 0 else math.inf, U_M - U_m,
                             hb.valid and hb.oscillation_applicable))
    checks.append(_lower("narrow-channel height", hb.narrow_lower, U_m * U_m, hb.valid and hb.narrow_applicable))
    checks.append(_lower("printed intermediate chain", hb.printed_chain_lower, U_m * U_m, hb.valid))
    return checks


def attraction_threshold_raw(lam: float, gamma2: float) -> float:
    drop = 1.0 - math.sin(gamma2)
    if drop <= 0.0:
        return math.inf
    return lam * lam / (8.0 * drop)


def attraction_threshold(gamma1: float, gamma2: float) -> float:
    """``B* = lambda**2 / (8 (1 - sin gamma2))``: for ``B < B*`` the joining
    curve lies above ``I`` at the right plate and the plates attract.

    Returns ``inf`` when ``gamma2 = pi/2``.

    Raises:
        DomainError: ``lambda < 0`` (the meniscus then falls below the axis).
    """
    lam = datum_mismatch(gamma1, gamma2)
    if lam < -1e-15:
        raise DomainError("attraction threshold needs lambda >= 0; reflect the configuration")
    return attraction_threshold_raw(max(lam, 0.0), gamma2)


def height_jump(gamma2: float) -> float:
    """``sqrt(2 (1 - sin gamma2))``: height of ``I`` at its plate in units
    of the capillary length."""
    if not 0.0 <= gamma2 <= HALF_PI:
        raise DomainError("gamma2 must lie in [0, pi/2]")
    return math.sqrt(2.0 * (1.0 - math.sin(gamma2)))


def right_height_of_I(B: float, gamma2: float) -> float:
    """Height of ``I`` at the right plate, ``sqrt((2/B)(1 - sin gamma2))``."""
    return height_jump(gamma2) / math.sqrt(B)


__all__ = [
    "BoundCheck",
    "HeightBounds",
    "Side",
    "attraction_threshold",
    "check_height_bounds",
    "datum_mismatch",
    "extreme_heights",
    "height_bounds_generic",
    "height_jump",
    "right_height_of_I",
    "symmetric_chain",
    "symmetric_height_bound",
]
