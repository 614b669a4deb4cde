"""Barrier solutions, critical separations and the barrier angles on the
left plate.

For a fixed right-plate angle ``gamma2`` and separation ``B`` eight
reference curves partition the joining solutions:

* ``T``, ``G``, ``III``, ``IV``: the joining curves with ``gamma1`` equal to
  ``0``, ``pi/2``, ``pi - gamma2`` and ``pi``;
* ``I``: the level ``C = 1`` above the axis, attached to the right plate;
* ``II``: the joining curve through the foot of the left plate;
* ``IV0``: the curve leaving the axis at the right plate, below the axis;
* ``V``: the level ``C = 1`` below the axis, attached to the right plate.

``IV0`` reaches the left plate only when ``B <= B0`` and ``V`` only when
``B <= B00``; otherwise they turn vertical inside the channel and are
returned truncated.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .curve import Branch, ProfileCurve
from .errors import DomainError
from .numerics import quad_singular, solve_monotone
from .profile import (
    DEFAULT_SAMPLES,
    HALF_PI,
    JoinSolution,
    Level,
    PlateConfig,
    _branch,
    _grow,
    assemble,
    solve_join,
    width,
)


class BarrierKind(str, enum.Enum):
    T = "T"
    G = "G"
    I = "I"  # noqa: E741
    II = "II"
    III = "III"
    IV = "IV"
    IV0 = "IV0"
    V = "V"


class Regime(str, enum.Enum):
    WIDE = "Wide"
    INTERMEDIATE = "Intermediate"
    NARROW = "Narrow"


class Psi10(NamedTuple):
    """Left-plate inclination of ``IV0``; ``wide`` marks the convention
    ``psi10 = pi/2`` used when ``IV0`` does not reach the left plate."""

    value: float
    wide: bool


def _check_gamma2(gamma2: float, allow_zero: bool = True):
    if not (0.0 <= gamma2 < HALF_PI) or (gamma2 == 0.0 and not allow_zero):
        raise DomainError(f"gamma2 must lie in [0, pi/2), got {gamma2}")


def _check_B(B: float):
    if not (B > 0 and math.isfinite(B)):
        raise DomainError(f"B must be positive and finite, got {B}")


def _g_closed(psi: float) -> float:
    # antiderivative of cos(psi) / (2 sin(psi/2))
    return math.log(math.tan(0.25 * psi)) + 2.0 * math.cos(0.5 * psi)


def b0_integral(gamma2: float) -> float:
    """``integral_{psi2}^{pi/2} cos(psi) / sqrt(sin(gamma2) - cos(psi)) dpsi``."""
    psi2 = HALF_PI - gamma2
    if psi2 >= HALF_PI:
        return 0.0

    def f(psi):
        # sin(gamma2) - cos(psi) = cos(psi2) - cos(psi), factored
        gap = 2.0 * math.sin(0.5 * (psi + psi2)) * math.sin(0.5 * (psi - psi2))
        return math.cos(psi) / math.sqrt(gap)

    return quad_singular(f, (psi2, HALF_PI, "lo"), abs_tol=1e-13)


def b00_integral(gamma2: float, closed_form: bool = True) -> float:
    """``integral_{psi2}^{pi/2} cos(psi) / sqrt(1 - cos(psi)) dpsi``."""
    psi2 = HALF_PI - gamma2
    if psi2 >= HALF_PI:
        return 0.0
    if closed_form:
        return math.sqrt(2.0) * (_g_closed(HALF_PI) - _g_closed(psi2))
    f = lambda psi: math.cos(psi) / (math.sqrt(2.0) * math.sin(0.5 * psi))
    return quad_singular(f, (psi2, HALF_PI, "none"), abs_tol=1e-13)


@lru_cache(maxsize=1024)
def critical_separations(gamma2: float) -> tuple[float, float]:
    """Critical separation parameters ``(B0, B00)``.

    ``B0`` is the separation at which ``IV0`` becomes vertical exactly at the
    left plate, ``sqrt(2 B0) = (1/2) integral cos/sqrt(sin(gamma2) - cos)``.
    ``B00`` is the separation at which ``V`` does so, where ``IV`` and ``V``
    coincide: ``sqrt(B00) = (1/(2 sqrt 2)) integral cos/sqrt(1 - cos)``.
    """
    _check_gamma2(gamma2)
    if gamma2 == 0.0:
        return 0.0, 0.0
    j0 = b0_integral(gamma2)
    j00 = b00_integral(gamma2)
    return j0 * j0 / 8.0, j00 * j00 / 8.0


def b00_printed(gamma2: float) -> float:
    """``B00`` evaluated with the alternative prefactor ``1/4`` in place of
    ``1/(2 sqrt 2)``; kept only to document the discrepancy, which is a
    factor of exactly one half in ``B``."""
    j = b00_integral(gamma2)
    return (j / 4.0) ** 2


def regime(B: float, gamma2: float) -> Regime:
    """Wide for ``B > B0``, Intermediate for ``B00 < B <= B0``, Narrow for
    ``B <= B00``."""
    _check_B(B)
    B0, B00 = critical_separations(gamma2)
    if B > B0:
        return Regime.WIDE
    if B > B00:
        return Regime.INTERMEDIATE
    return Regime.NARROW


def _log_root(residual, hi: float) -> float:
    """Root in ``(0, hi)`` of a residual positive near 0 and negative at
    ``hi``, solved in ``log`` of the unknown."""
    lo = _grow(residual, hi, 0.25, 500, want_negative=False)
    return math.exp(solve_monotone(lambda t: residual(math.exp(t)), math.log(lo), math.log(hi), tol=1e-15))


@lru_cache(maxsize=65536)
def psi1_zero(B: float, gamma2: float) -> float:
    """Left-plate inclination of ``II``: the curve leaving the axis at the
    left plate with inclination ``psi`` and reaching ``psi2`` after width 2.

    The root lies in ``(0, psi2)``; the width decreases strictly in ``psi``
    and sweeps ``(0, inf)``, so it exists and is unique for every ``B``.
    """
    _check_B(B)
    _check_gamma2(gamma2)
    psi2 = HALF_PI - gamma2
    return _log_root(lambda x: width(Level.crossing(x), B, x, psi2) - 2.0, psi2)


@lru_cache(maxsize=65536)
def psi10(B: float, gamma2: float) -> Psi10:
    """Left-plate inclination of ``IV0``, or ``(pi/2, wide=True)`` when it
    does not reach the left plate (``B > B0``)."""
    _check_B(B)
    _check_gamma2(gamma2)
    psi2 = HALF_PI - gamma2
    B0, _ = critical_separations(gamma2)
    if B >= B0:
        return Psi10(HALF_PI, B > B0)
    lev = Level.crossing(psi2)
    x = solve_monotone(lambda x: width(lev, B, psi2, x) - 2.0, psi2, HALF_PI, tol=1e-15)
    return Psi10(x, False)


@lru_cache(maxsize=65536)
def psi_I(B: float, gamma2: float) -> float:
    """Left-plate inclination of barrier ``I``."""
    _check_B(B)
    _check_gamma2(gamma2)
    psi2 = HALF_PI - gamma2
    lev = Level(0.0)
    return _log_root(lambda x: width(lev, B, x, psi2) - 2.0, psi2)


@lru_cache(maxsize=65536)
def psi_V(B: float, gamma2: float) -> float | None:
    """Left-plate inclination of barrier ``V``, None when ``B > B00``."""
    _check_B(B)
    _check_gamma2(gamma2)
    psi2 = HALF_PI - gamma2
    _, B00 = critical_separations(gamma2)
    if B > B00:
        return None
    if B == B00:
        return HALF_PI
    lev = Level(0.0)
    return solve_monotone(lambda x: width(lev, B, psi2, x) - 2.0, psi2, HALF_PI, tol=1e-15)


def left_angles(B: float, gamma2: float) -> dict:
    """Left-plate inclination of every barrier that joins the plates."""
    out = {
        BarrierKind.T: -HALF_PI,
        BarrierKind.G: 0.0,
        BarrierKind.I: psi_I(B, gamma2),
        BarrierKind.II: psi1_zero(B, gamma2),
        BarrierKind.III: HALF_PI - gamma2,
        BarrierKind.IV: HALF_PI,
    }
    p10 = psi10(B, gamma2)
    if not p10.wide:
        out[BarrierKind.IV0] = p10.value
    pv = psi_V(B, gamma2)
    if pv is not None:
        out[BarrierKind.V] = pv
    return out


def closed_form_I(gamma2: float, psi):
    """Explicit parametrization of barrier ``I`` for ``kappa = 1``.

    Returns ``(x - x2, u)`` with ``u = 2 sin(psi/2)`` and

        x - x2 = log(tan(psi/4) / tan(psi2/4))
                 - 4 sin((psi + psi2)/4) sin((psi - psi2)/4),

    valid for ``0 < psi <= psi2``.  For separation ``B`` the normalized
    coordinates are ``xi - 1 = (x - x2)/sqrt(B)`` and ``U = u/sqrt(B)``.
    """
    _check_gamma2(gamma2)
    psi2 = HALF_PI - gamma2
    psi = np.asarray(psi, dtype=float)
    if np.any(psi <= 0) or np.any(psi > psi2 + 1e-15):
        raise DomainError("closed form of I needs 0 < psi <= psi2")
    x = np.log(np.tan(0.25 * psi) / np.tan(0.25 * psi2)) - 4.0 * np.sin(0.25 * (psi + psi2)) * np.sin(
        0.25 * (psi - psi2)
    )
    u = 2.0 * np.sin(0.5 * psi)
    if x.ndim == 0:
        return float(x), float(u)
    return x, u


def _attached(level: Level, B: float, psi2: float, psi_end: float, sign: int, n: int, kind, reaches: bool):
    """Branch attached to the right plate, running left to ``psi_end``."""
    dxi, U, psi = _branch(level, B, psi2, psi_end, sign, n)
    xi = 1.0 - dxi
    xi, U, psi = xi[::-1], U[::-1], psi[::-1]
    keep = np.concatenate([[True], np.diff(xi) > 0])
    xi, U, psi = xi[keep], U[keep], psi[keep]
    if reaches:
        xi[0] = -1.0
    return ProfileCurve(
        xi, U, psi, B=B, C=level.C, c_minus_one=level.c_minus_one,
        branches=(Branch(0, xi.size - 1, sign),),
        crossing=(1.0, psi2) if level.p < 0 else None,
        status="complete" if reaches else "truncated",
        meta={"kind": kind.value, "reaches": reaches},
    )


def barrier(kind, B: float, gamma2: float, n_samples: int = DEFAULT_SAMPLES) -> ProfileCurve:
    """The barrier curve of the given kind between the plates.

    ``IV0`` and ``V`` are returned up to their vertical point, with
    ``status == "truncated"`` and ``meta["reaches"] == False``, when they
    do not reach the left plate.
    """
    kind = BarrierKind(kind)
    _check_B(B)
    _check_gamma2(gamma2)
    psi2 = HALF_PI - gamma2
    gamma1 = {
        BarrierKind.T: 0.0,
        BarrierKind.G: HALF_PI,
        BarrierKind.III: math.pi - gamma2,
        BarrierKind.IV: math.pi,
    }
    if kind in gamma1:
        curve = solve_join(PlateConfig(gamma1[kind], gamma2, B), n_samples)
    elif kind is BarrierKind.II:
        x = psi1_zero(B, gamma2)
        sol = JoinSolution(PlateConfig.from_inclinations(x, psi2, B), Level.crossing(x), "crossing", "II")
        curve = assemble(sol, n_samples)
    elif kind is BarrierKind.I:
        curve = _attached(Level(0.0), B, psi2, psi_I(B, gamma2), 1, n_samples, kind, True)
    elif kind is BarrierKind.IV0:
        p10 = psi10(B, gamma2)
        return _attached(Level.crossing(psi2), B, psi2, p10.value, -1, n_samples, kind, not p10.wide)
    else:
        pv = psi_V(B, gamma2)
        end = HALF_PI if pv is None else pv
        return _attached(Level(0.0), B, psi2, end, -1, n_samples, kind, pv is not None)
    meta = dict(curve.meta, kind=kind.value, reaches=True)
    object.__setattr__(curve, "meta", meta)
    return curve


def barrier_csv(curve: ProfileCurve, kind, gamma2: float, target=None) -> str:
    """CSV of a barrier curve with its ``# kind=... B=... gamma2=... C=...``
    header line."""
    kind = BarrierKind(kind)
    comment = f"kind={kind.value} B={curve.B:.17g} gamma2={gamma2:.17g} C={curve.C:.17g}"
    if curve.status == "truncated":
        comment += " reaches=false"
    return curve.to_csv(target, comment=comment)


@dataclass(frozen=True)
class BarrierAtlas:
    """All barrier curves and derived quantities for one ``(gamma2, B)``."""

    gamma2: float
    B: float
    curves: dict
    psi1_zero: float
    psi10: float | None
    B0: float
    B00: float
    regime: Regime
    angles: dict = field(default_factory=dict)

    def right_heights(self) -> dict:
        """Height of every barrier at the right plate."""
        return {k: float(c.U[-1]) for k, c in self.curves.items()}


def atlas(B: float, gamma2: float, n_samples: int = DEFAULT_SAMPLES) -> BarrierAtlas:
    """Build every barrier for ``(gamma2, B)``."""
    B0, B00 = critical_separations(gamma2)
    curves = {k: barrier(k, B, gamma2, n_samples) for k in BarrierKind}
    p10 = psi10(B, gamma2)
    return BarrierAtlas(
        gamma2=gamma2,
        B=B,
        curves=curves,
        psi1_zero=psi1_zero(B, gamma2),
        psi10=None if p10.wide else p10.value,
        B0=B0,
        B00=B00,
        regime=regime(B, gamma2),
        angles=left_angles(B, gamma2),
    )
