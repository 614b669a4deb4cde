"""Solution curves of the planar capillarity system between two plates.

The plates sit at ``xi = -1`` (left plate) and ``xi = +1`` (right plate).
Contact angles ``gamma1``, ``gamma2`` translate into inclination data
``psi1 = gamma1 - pi/2`` and ``psi2 = pi/2 - gamma2``.

Curves are built from the first integral ``(B/2) U**2 + cos(psi) = C``,
using ``psi`` as the parameter on each branch where ``U`` keeps one sign.
The abscissa along a branch is

    xi(psi) = +/- integral cos(t) / (B U(t)) dt,

whose integrand has an inverse-square-root singularity where the curve
meets the axis.  Writing ``w = sin(psi/2)`` and ``(C - cos psi)/2 =
p|p| + w**2`` for a signed level parameter ``p``, the substitutions

    p > 0:  w = p sinh(u),   p < 0:  w = s0 cosh(u),   p = 0:  w = exp(u)

all give ``dxi/du = (1 - 2 w**2) / (sqrt(B) sqrt(1 - w**2))``, which is
smooth and bounded, so the singular end point disappears analytically and
no cancellation occurs in ``C - cos psi`` for nearly flat curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .curve import Branch, ProfileCurve
from .errors import BranchSplitError, DomainError, NoJoiningSolution, NumericalError
from .numerics import ROOT_TOL, quad_smooth, solve_monotone

HALF_PI = 0.5 * math.pi
CLAMP_TOL = 1e-12
CONTINUITY_TOL = 1e-10
DEFAULT_SAMPLES = 512

# Gauss-Legendre rule for the per-interval sample integrals
_GL_X, _GL_W = np.polynomial.legendre.leggauss(10)


@dataclass(frozen=True)
class PlateConfig:
    """Contact angles on the two plates and the separation parameter.

    ``B = kappa a**2`` where ``2a`` is the plate separation.
    """

    gamma1: float
    gamma2: float
    B: float

    def __post_init__(self):
        if not (self.B > 0 and math.isfinite(self.B)):
            raise DomainError(f"B must be positive and finite, got {self.B}")
        if not 0.0 <= self.gamma1 <= math.pi:
            raise DomainError(f"gamma1 must lie in [0, pi], got {self.gamma1}")
        if not 0.0 <= self.gamma2 < HALF_PI:
            raise DomainError(
                f"gamma2 must lie in [0, pi/2), got {self.gamma2}; "
                "larger angles are handled by reflecting both angles"
            )

    @property
    def psi1(self) -> float:
        return self.gamma1 - HALF_PI

    @property
    def psi2(self) -> float:
        return HALF_PI - self.gamma2

    @classmethod
    def from_inclinations(cls, psi1: float, psi2: float, B: float) -> "PlateConfig":
        return cls(psi1 + HALF_PI, HALF_PI - psi2, B)


@dataclass(frozen=True)
class PhysicalParams:
    """Density difference, gravity and surface tension in consistent units."""

    rho: float
    g: float
    sigma: float

    def __post_init__(self):
        for name in ("rho", "g", "sigma"):
            v = getattr(self, name)
            if not (v > 0 and math.isfinite(v)):
                raise DomainError(f"{name} must be positive, got {v}")

    @property
    def kappa(self) -> float:
        return self.rho * self.g / self.sigma


@dataclass(frozen=True)
class ForceValue:
    """Normalized force ``F/sigma`` (negative means repelling) and, when
    physical parameters are supplied, the force per unit length."""

    normalized: float
    physical: float | None = None
    sigma: float | None = None


@dataclass(frozen=True)
class Level:
    """Level set of the first integral in cancellation-free form.

    ``C - 1 = 2 p |p|``.  For ``p < 0`` the curve meets the axis at the
    inclinations ``+/- psi0`` with ``sin(psi0/2) = -p``.

    A crossing level may also carry ``psi0 = anchor - offset`` with the
    offset kept exactly, so that a level crossing within rounding of a plate
    inclination stays resolvable at that inclination.
    """

    p: float
    psi0: float = 0.0
    anchor: float | None = None
    offset: float = 0.0

    @classmethod
    def from_p(cls, p: float) -> "Level":
        if p < 0:
            if p < -math.sin(0.5 * HALF_PI) - 1e-15:
                raise DomainError("level below the vertical crossing")
            return cls(p, 2.0 * math.asin(min(-p, 1.0)))
        return cls(float(p), 0.0)

    @classmethod
    def crossing(cls, psi0: float) -> "Level":
        """Level of a curve meeting the axis at inclination ``psi0``."""
        psi0 = abs(psi0)
        if psi0 == 0.0:
            return cls(0.0, 0.0)
        return cls(-math.sin(0.5 * psi0), psi0)

    @classmethod
    def near(cls, anchor: float, offset: float) -> "Level":
        """Crossing level at ``anchor - offset`` for ``0 <= offset < anchor``;
        beyond that the level ``p = offset - anchor``, continuing
        monotonically in ``offset``."""
        if offset >= anchor:
            return cls.from_p(offset - anchor)
        psi0 = anchor - offset
        return cls(-math.sin(0.5 * psi0), psi0, anchor, offset)

    @classmethod
    def from_C(cls, C: float) -> "Level":
        if C > 1.0:
            return cls(math.sqrt(0.5 * (C - 1.0)))
        if C == 1.0:
            return cls(0.0)
        if C < 0.0:
            raise DomainError("C < 0 gives no graph solution")
        return cls.crossing(math.acos(C))

    @property
    def c_minus_one(self) -> float:
        return 2.0 * self.p * abs(self.p)

    @property
    def C(self) -> float:
        return 1.0 + self.c_minus_one

    def half_gap(self, psi: float) -> float:
        """``(C - cos psi) / 2`` without cancellation."""
        w = math.sin(0.5 * psi)
        if self.p > 0:
            return self.p * self.p + w * w
        if self.p == 0:
            return w * w
        d = self._excess(psi)
        return d * (abs(w) - self.p)

    def _excess(self, psi: float) -> float:
        # |sin(psi/2)| - sin(psi0/2)
        a = abs(psi)
        if self.anchor is None:
            diff = a - self.psi0
        elif a == self.anchor:
            diff = self.offset
        elif a == self.psi0:
            diff = 0.0
        else:
            diff = (a - self.anchor) + self.offset
        return 2.0 * math.cos(0.25 * (a + self.psi0)) * math.sin(0.25 * diff)

    def width_from_axis(self, psi: float) -> float:
        """Unit width from the axis crossing to inclination ``psi`` for a
        crossing level, from the exact substitution range."""
        if self.p >= 0:
            raise DomainError("level does not cross the axis")
        return quad_smooth(self._scalar_integrand(), 0.0, self.u_of(psi))

    def u_of(self, psi: float) -> float:
        """Substitution variable at inclination ``psi`` (``|psi|`` for
        ``p <= 0``)."""
        w = math.sin(0.5 * psi)
        if self.p > 0:
            return math.asinh(w / self.p)
        if self.p == 0:
            if w == 0.0:
                return -math.inf
            return math.log(abs(w))
        d = self._excess(psi)
        if d < 0:
            if d < -CLAMP_TOL:
                raise BranchSplitError(f"inclination {psi} lies inside the crossing gap")
            d = 0.0
        return 2.0 * math.asinh(math.sqrt(0.5 * d / -self.p))

    def w_of_u(self, u):
        if self.p > 0:
            return self.p * np.sinh(u)
        if self.p == 0:
            return np.exp(u)
        return -self.p * np.cosh(u)

    def integrand(self, u):
        """``cos(psi) / cos(psi/2)`` as a function of ``u``."""
        w = self.w_of_u(u)
        w2 = w * w
        return (1.0 - 2.0 * w2) / np.sqrt(1.0 - w2)

    def _scalar_integrand(self):
        p = self.p
        if p > 0:
            def f(u):
                w = p * math.sinh(u)
                return (1.0 - 2.0 * w * w) / math.sqrt(1.0 - w * w)
        elif p == 0:
            def f(u):
                w2 = math.exp(2.0 * u)
                return (1.0 - 2.0 * w2) / math.sqrt(1.0 - w2)
        else:
            s0 = -p

            def f(u):
                w = s0 * math.cosh(u)
                return (1.0 - 2.0 * w * w) / math.sqrt(1.0 - w * w)
        return f

    def u_range(self, a: float, b: float) -> tuple[float, float]:
        """Range of ``u`` covering the inclination interval ``[a, b]``."""
        if self.p > 0:
            return self.u_of(a), self.u_of(b)
        if a < 0 < b:
            raise BranchSplitError(
                f"inclination interval [{a}, {b}] contains an axis crossing; split it"
            )
        if b <= 0:
            a, b = -b, -a
        return self.u_of(a), self.u_of(b)

    def unit_width(self, a: float, b: float) -> float:
        """``integral_a^b cos(psi) / (2 sqrt((C - cos psi)/2)) dpsi`` for
        ``a <= b``, i.e. the width of the branch at ``B = 1``."""
        if a == b:
            return 0.0
        ua, ub = self.u_range(a, b)
        if math.isinf(ua) or math.isinf(ub):
            return math.inf
        return quad_smooth(self._scalar_integrand(), ua, ub)


def width(level: Level, B: float, a: float, b: float) -> float:
    """Horizontal extent of the branch of ``level`` between inclinations
    ``a`` and ``b`` (any order)."""
    if a > b:
        a, b = b, a
    return level.unit_width(a, b) / math.sqrt(B)


def crossing_integral(psi_a: float, psi_b: float) -> float:
    """``integral_{psi_a}^{psi_b} cos(psi) / sqrt(cos(psi_a) - cos(psi)) dpsi``
    for ``0 <= psi_a <= psi_b <= pi/2``.

    This is ``sqrt(2B)`` times the width of a curve leaving the axis at
    inclination ``psi_a`` and reaching inclination ``psi_b``.
    """
    if not 0.0 <= psi_a <= psi_b <= HALF_PI + 1e-15:
        raise DomainError("need 0 <= psi_a <= psi_b <= pi/2")
    if psi_a == 0.0:
        return math.inf if psi_b > 0 else 0.0
    return math.sqrt(2.0) * Level.crossing(psi_a).unit_width(psi_a, psi_b)


def first_integral(B: float, U, psi):
    """``C = (B/2) U**2 + cos(psi)``."""
    if not B > 0:
        raise DomainError("B must be positive")
    return 0.5 * B * np.square(U) + np.cos(psi)


def height_at(B: float, C: float, psi: float, sign: int = 1, tol: float = CLAMP_TOL) -> float:
    """Height ``sign * sqrt((2/B)(C - cos psi))`` on the level ``C``."""
    if not B > 0:
        raise DomainError("B must be positive")
    gap = C - math.cos(psi)
    if gap < 0:
        if gap < -tol:
            raise DomainError(f"C - cos(psi) = {gap:.3g} < 0: no curve point at this inclination")
        gap = 0.0
    return math.copysign(math.sqrt(2.0 * gap / B), sign)


def _height(level: Level, B: float, psi: float, sign: int) -> float:
    hg = level.half_gap(psi)
    if hg < 0:
        if hg < -CLAMP_TOL:
            raise BranchSplitError(f"inclination {psi} lies inside the crossing gap")
        return 0.0
    return math.copysign(2.0 * math.sqrt(hg / B), sign)


def _cumulative_unit_width(level: Level, psis: np.ndarray, to_axis: bool = False) -> np.ndarray:
    """Unsigned cumulative width (at ``B = 1``) along monotone ``psis``.

    With ``to_axis`` the last sample is the axis crossing itself (``u = 0``),
    which need not be distinguishable from the others in floating point.
    """
    n = psis.size
    out = np.zeros(n)
    if n < 2:
        return out
    a, b = (psis[0], psis[-1]) if psis[0] <= psis[-1] else (psis[-1], psis[0])
    negative = level.p <= 0 and b <= 0
    us = np.array([level.u_of(-x if negative else x) for x in psis])
    if to_axis:
        us[-1] = 0.0
    if np.isinf(us).any():
        raise DomainError("branch reaches the zero-inclination asymptote; width is infinite")
    lo, hi = us[:-1], us[1:]
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    nodes = mid[:, None] + half[:, None] * _GL_X[None, :]
    pieces = np.abs(half * (level.integrand(nodes) @ _GL_W))
    cum = np.concatenate([[0.0], np.cumsum(pieces)])
    # compare the composite rule with adaptive quadrature of the whole branch
    total = level.width_from_axis(psis[0]) if to_axis else level.unit_width(a, b)
    if abs(cum[-1] - total) > 1e-11 * max(1.0, total):
        f = level._scalar_integrand()
        pieces = np.abs([quad_smooth(f, x, y) for x, y in zip(lo, hi)])
        cum = np.concatenate([[0.0], np.cumsum(pieces)])
        if abs(cum[-1] - total) > 1e-10 * max(1.0, total):
            raise NumericalError("branch width quadrature is inconsistent", best_estimate=total)
    return cum


def _nodes(psi_from: float, psi_to: float, n: int) -> np.ndarray:
    span = abs(psi_to - psi_from)
    if span == 0.0:
        return np.array([psi_from])
    n = max(2, min(n, int(span / 1e-12) + 1))
    return np.linspace(psi_from, psi_to, n)


def _branch(level: Level, B: float, psi_from: float, psi_to: float, sign: int, n: int, to_axis: bool = False):
    """Samples of one branch as arrays ``(dxi, U, psi)`` with ``dxi``
    measured from the first sample and increasing along the branch."""
    psis = _nodes(psi_from, psi_to, n)
    dxi = _cumulative_unit_width(level, psis, to_axis) / math.sqrt(B)
    U = np.array([_height(level, B, x, sign) for x in psis])
    if to_axis:
        U[-1] = 0.0
    return dxi, U, psis


def _crossing_branch(level: Level, B: float, psi_plate: float, sign: int, n: int):
    """Branch from a plate inclination to the axis crossing of ``level``,
    as in :func:`_branch`."""
    psi0 = level.psi0
    if abs(psi_plate - psi0) > CLAMP_TOL:
        return _branch(level, B, psi_plate, psi0, sign, n, to_axis=True)
    if level.anchor == psi_plate:
        # the crossing lies within rounding of the plate inclination but the
        # exact offset still fixes the width of the short piece between them
        w = level.width_from_axis(psi_plate) / math.sqrt(B)
        return np.array([0.0, w]), np.array([_height(level, B, psi_plate, sign), 0.0]), np.array([psi_plate, psi0])
    # a plate angle equal to psi0 up to rounding would otherwise leave a
    # sliver of width ~ sqrt(rounding) at the crossing
    return np.zeros(1), np.zeros(1), np.array([psi0])


def _as_level(C) -> Level:
    return C if isinstance(C, Level) else Level.from_C(float(C))


def arc(
    B: float,
    C,
    psi_from: float,
    psi_to: float,
    sign: int,
    anchor_xi: float = 0.0,
    n_samples: int = DEFAULT_SAMPLES,
) -> ProfileCurve:
    """Single-branch curve on the level ``C`` between two inclinations.

    Args:
        B: separation parameter.
        C: first-integral constant, or a :class:`Level`.
        psi_from, psi_to: end inclinations; ``C - cos(psi)`` may vanish only
            at these ends.
        sign: sign of ``U`` on the branch.
        anchor_xi: abscissa of the ``psi_from`` sample.
        n_samples: number of inclination-equispaced samples.

    Raises:
        BranchSplitError: the branch contains an interior axis crossing.
    """
    if not B > 0:
        raise DomainError("B must be positive")
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    level = _as_level(C)
    lo, hi = min(psi_from, psi_to), max(psi_from, psi_to)
    if level.p <= 0 and lo < 0 < hi:
        raise BranchSplitError("the inclination range crosses the axis; split the branch at the crossing")
    for x in (lo, hi):
        if level.half_gap(x) < -CLAMP_TOL:
            raise DomainError(f"inclination {x} is not attained on this level")
    interior = np.linspace(lo, hi, 7)[1:-1]
    if hi > lo and any(level.half_gap(x) <= 0 for x in interior):
        raise BranchSplitError("C - cos(psi) vanishes inside the branch")
    dxi, U, psis = _branch(level, B, psi_from, psi_to, sign, n_samples)
    # dxi/dpsi has the sign of U
    direction = sign * (1 if psi_to >= psi_from else -1)
    xi = anchor_xi + direction * dxi
    if direction < 0:
        xi, U, psis = xi[::-1], U[::-1], psis[::-1]
    xi, U, psis = _strict(xi, U, psis)
    return ProfileCurve(
        xi, U, psis, B=B, C=level.C, c_minus_one=level.c_minus_one,
        branches=(Branch(0, xi.size - 1, sign),),
        meta={"p": level.p, "psi0": level.psi0},
    )


def _strict(xi, U, psi):
    keep = np.concatenate([[True], np.diff(xi) > 0])
    return xi[keep], U[keep], psi[keep]


class JoinSolution(NamedTuple):
    """Level of the curve joining the plates, without samples.

    ``case`` is ``"positive"`` (``U > 0`` throughout), ``"negative"``
    (``U < 0`` throughout) or ``"crossing"`` (meets the axis between the
    plates at inclination ``psi0``).
    """

    config: PlateConfig
    level: Level
    case: str
    on_barrier: str | None = None

    @property
    def c_minus_one(self) -> float:
        return self.level.c_minus_one

    @property
    def force(self) -> float:
        return 2.0 * self.level.c_minus_one

    @property
    def psi0(self) -> float | None:
        return self.level.psi0 if self.case == "crossing" else None

    def height(self, psi: float, sign: int) -> float:
        return _height(self.level, self.config.B, psi, sign)

    @property
    def U1(self) -> float:
        return self.height(self.config.psi1, self._sign1)

    @property
    def U2(self) -> float:
        return self.height(self.config.psi2, -1 if self.case == "negative" else 1)

    @property
    def _sign1(self) -> int:
        return 1 if self.case == "positive" else -1


def _grow(g, x, factor, limit, want_negative: bool):
    """Step ``x`` geometrically until ``g`` has the wanted sign."""
    for _ in range(limit):
        v = g(x)
        if (v < 0) == want_negative and v != 0:
            return x
        x *= factor
    raise NumericalError("could not bracket the width equation")


def _solve_level(widthfn, lo, hi, tol=ROOT_TOL):
    """Root of the decreasing residual ``widthfn - 2`` on ``[lo, hi]``."""
    g = lambda t: widthfn(t) - 2.0
    return solve_monotone(g, lo, hi, tol=tol)


def _join(config: PlateConfig) -> JoinSolution:
    """Level of the unique curve joining the plates for ``config``."""
    B, psi1, psi2 = config.B, config.psi1, config.psi2
    if psi1 <= 0.0:
        return _positive_join(config, None)
    if psi1 < psi2:
        D = width(Level.crossing(psi1), B, psi1, psi2)
        if abs(D - 2.0) <= 1e-13:
            return JoinSolution(config, Level.crossing(psi1), "crossing", on_barrier="II")
        if D > 2.0:
            return _positive_join(config, Level.crossing(psi1).p)
        return _crossing_join(config, psi1)
    if psi1 == psi2:
        return _crossing_join(config, psi2)
    D = width(Level.crossing(psi2), B, psi2, psi1)
    if abs(D - 2.0) <= 1e-13:
        return JoinSolution(config, Level.crossing(psi2), "negative", on_barrier="IV0")
    if D < 2.0:
        return _crossing_join(config, psi2)
    return _negative_join(config)


def _positive_join(config: PlateConfig, p_min: float | None) -> JoinSolution:
    B, psi1, psi2 = config.B, config.psi1, config.psi2

    def W(p):
        return width(Level.from_p(p), B, psi1, psi2)

    if p_min is None:
        p_hi = _grow(lambda p: W(p) - 2.0, 1.0, 2.0, 2000, want_negative=True)
        # the width diverges logarithmically as p -> 0+, so solve in log p
        t_lo = math.log(_grow(lambda p: W(p) - 2.0, p_hi, 1e-3, 300, want_negative=False))
        t = _solve_level(lambda t: W(math.exp(t)), t_lo, math.log(p_hi), tol=1e-15)
        p = math.exp(t)
        return JoinSolution(config, Level.from_p(p), "positive")
    # p_min is the crossing level at psi1; measure from it exactly
    x = _solve_offset(lambda x: width(Level.near(psi1, x), B, psi1, psi2))
    return JoinSolution(config, Level.near(psi1, x), "positive")


def _negative_join(config: PlateConfig) -> JoinSolution:
    B, psi1, psi2 = config.B, config.psi1, config.psi2

    x = _solve_offset(lambda x: width(Level.near(psi2, x), B, psi2, psi1))
    return JoinSolution(config, Level.near(psi2, x), "negative")


def _crossing_join(config: PlateConfig, psi0_max: float) -> JoinSolution:
    B, psi1, psi2 = config.B, config.psi1, config.psi2

    def total(lev):
        return (lev.width_from_axis(psi1) + lev.width_from_axis(psi2)) / math.sqrt(B)

    half = 0.5 * psi0_max
    if total(Level.crossing(half)) > 2.0:
        # root close to psi0_max: solve in the offset below it
        x = _solve_offset(lambda x: total(Level.near(psi0_max, x)), hi=half, increasing=True)
        return JoinSolution(config, Level.near(psi0_max, x), "crossing")
    # root towards small psi0, where the width diverges logarithmically
    W = lambda t: total(Level.crossing(math.exp(t)))
    lo = _grow(lambda x: W(math.log(x)) - 2.0, half, 0.25, 500, want_negative=False)
    t = _solve_level(W, math.log(lo), math.log(half), tol=1e-15)
    return JoinSolution(config, Level.crossing(math.exp(t)), "crossing")


def _solve_offset(W, hi: float | None = None, increasing: bool = False) -> float:
    """Root ``x >= 0`` of ``W(x) = 2`` solved in ``log x``.

    ``W(0) - 2`` has the sign opposite to ``W(hi) - 2``; ``W`` decreases in
    ``x`` unless ``increasing``.  Returns 0 when the root is below the
    smallest positive double.
    """
    s = 1.0 if increasing else -1.0
    g = lambda x: s * (W(x) - 2.0)
    if hi is None:
        hi = _grow(g, 1.0, 2.0, 2000, want_negative=False)
    lo = hi
    while g(lo) > 0:
        lo *= 1e-4
        if lo == 0.0:
            return 0.0
    if g(lo) == 0:
        return lo
    t = solve_monotone(lambda t: g(math.exp(t)), math.log(lo), math.log(hi), tol=1e-15)
    return math.exp(t)


def solve_join(config: PlateConfig, n_samples: int = DEFAULT_SAMPLES) -> ProfileCurve:
    """The curve meeting the left plate at ``psi1`` and the right plate at
    ``psi2`` with total width exactly 2.

    Curves crossing the axis are assembled from a lower branch (``U < 0``,
    inclination decreasing from ``psi1`` to ``psi0``) and an upper branch
    (``U > 0``, inclination increasing from ``psi0`` to ``psi2``).

    Raises:
        NoJoiningSolution: the width equation has no root.
    """
    try:
        sol = _join(config)
    except (DomainError, NumericalError) as exc:
        raise NoJoiningSolution(
            f"no curve joins the plates for gamma1={config.gamma1}, gamma2={config.gamma2}, "
            f"B={config.B}: {exc}"
        ) from exc
    return assemble(sol, n_samples)


def assemble(sol: JoinSolution, n_samples: int = DEFAULT_SAMPLES) -> ProfileCurve:
    """Sample the curve described by a :class:`JoinSolution`."""
    c, lev = sol.config, sol.level
    B, psi1, psi2 = c.B, c.psi1, c.psi2
    meta = {"case": sol.case, "p": lev.p, "psi0": lev.psi0, "on_barrier": sol.on_barrier}
    if sol.case == "crossing":
        psi0 = lev.psi0
        d1, U1, s1 = _crossing_branch(lev, B, psi1, -1, n_samples)
        d2, U2, s2 = _crossing_branch(lev, B, psi2, 1, n_samples)
        d2, U2, s2 = d2[-1] - d2[::-1], U2[::-1], s2[::-1]
        total = d1[-1] + d2[-1]
        if abs(total - 2.0) > CONTINUITY_TOL:
            raise NumericalError(f"branches do not meet at the crossing (gap {total - 2.0:.3g})")
        x0 = float(-1.0 + 2.0 * d1[-1] / total)
        xi1 = -1.0 + 2.0 * d1 / total
        xi2 = 1.0 - 2.0 * (d2[-1] - d2) / total
        xi2[0] = x0
        xi = np.concatenate([xi1[:-1], xi2])
        U = np.concatenate([U1[:-1], U2])
        psi = np.concatenate([s1[:-1], s2])
        xi, U, psi = _strict(xi, U, psi)
        k = int(np.searchsorted(xi, x0))
        branches = (Branch(0, k, -1), Branch(k, xi.size - 1, 1)) if k > 0 else (Branch(0, xi.size - 1, 1),)
        crossing = (x0, psi0)
    else:
        sign = 1 if sol.case == "positive" else -1
        d, U, psi = _branch(lev, B, psi1, psi2, sign, n_samples)
        if d[-1] > 0 and abs(d[-1] - 2.0) > CONTINUITY_TOL:
            raise NumericalError(f"curve width {d[-1]!r} differs from 2")
        xi = -1.0 + 2.0 * d / d[-1] if d[-1] > 0 else np.array([-1.0])
        xi, U, psi = _strict(xi, U, psi)
        branches = (Branch(0, xi.size - 1, sign),)
        crossing = None
        if sol.on_barrier == "IV0":
            crossing = (1.0, psi2)
    return ProfileCurve(
        xi, U, psi, B=B, C=lev.C, c_minus_one=lev.c_minus_one,
        branches=branches, crossing=crossing, meta=meta,
    )


def crossing_angle_symmetric(B: float, gamma2: float) -> float:
    """Inclination ``psi0`` at which the symmetric curve (``gamma1 = pi -
    gamma2``) crosses the axis at the midpoint."""
    if not B > 0:
        raise DomainError("B must be positive")
    if not 0.0 <= gamma2 <= HALF_PI:
        raise DomainError("gamma2 must lie in [0, pi/2]")
    psi2 = HALF_PI - gamma2
    if psi2 == 0.0:
        return 0.0

    def W(t):
        psi0 = math.exp(t)
        return width(Level.crossing(psi0), B, psi0, psi2) - 1.0

    lo = _grow(lambda x: W(math.log(x)), psi2, 0.25, 500, want_negative=False)
    return math.exp(solve_monotone(W, math.log(lo), math.log(psi2), tol=1e-15))


def check_noncrossing(a: ProfileCurve, b: ProfileCurve, tol: float = 1e-12) -> bool:
    """True when the height ordering of two curves at a point of equal
    inclination persists over their whole common interval.

    Identical curves count as non-crossing.

    Raises:
        DomainError: the curves share no interval.
    """
    lo, hi = max(a.xi[0], b.xi[0]), min(a.xi[-1], b.xi[-1])
    if not hi > lo:
        raise DomainError("curves have no common interval")
    xs = np.union1d(a.xi, b.xi)
    xs = xs[(xs >= lo) & (xs <= hi)]
    xs = np.union1d(xs, np.linspace(lo, hi, 257))
    d = a.height_at_xi(xs) - b.height_at_xi(xs)
    dpsi = a.inclination_at_xi(xs) - b.inclination_at_xi(xs)
    scale = tol * max(1.0, float(np.max(np.abs(a.U))), float(np.max(np.abs(b.U))))
    if np.all(np.abs(d) <= scale):
        return True
    # ordering is read off where the inclinations agree
    k = int(np.argmin(np.abs(dpsi)))
    ref = np.sign(d[k])
    if ref == 0:
        ref = np.sign(d[np.argmax(np.abs(d))])
    return bool(np.all(ref * d > -scale))
