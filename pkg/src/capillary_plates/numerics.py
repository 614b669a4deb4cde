"""Numerical kernels: endpoint-singular quadrature, bracketed root finding and
an adaptive initial-value integrator used as an independent oracle.

The shooting integrator is a self-contained Dormand-Prince 5(4) pair written
on plain Python floats.  It integrates the capillarity system in arc length
``s``::

    dxi/ds = cos(psi),   dU/ds = sin(psi),   dpsi/ds = B U,

which is regular through vertical tangents, so a vertical point can be
located precisely instead of being approached through ``tan(psi)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np
from scipy import integrate, optimize

from .curve import ProfileCurve
from .errors import BracketError, DomainError, NumericalError

QUAD_TOL = 1e-10
ROOT_TOL = 1e-12
ODE_TOL = 1e-9
VERTICAL_GUARD = 1e-9
DIVERGENCE_LIMIT = 1e8

_SINGULAR_ENDS = ("lo", "hi", "none")


@dataclass(frozen=True)
class Quadrant:
    """Integration range with an optional inverse-square-root endpoint."""

    lo: float
    hi: float
    singular_end: str = "none"

    def __post_init__(self):
        if self.singular_end not in _SINGULAR_ENDS:
            raise DomainError(f"singular_end must be one of {_SINGULAR_ENDS}")
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise DomainError("integration limits must be finite")
        if not self.lo < self.hi:
            raise DomainError(f"empty or reversed range [{self.lo}, {self.hi}]")
        if max(abs(self.lo), abs(self.hi)) > math.pi:
            raise DomainError("integration limits must lie in [-pi, pi]")


class OdeState(NamedTuple):
    xi: float
    U: float
    psi: float


def _as_quadrant(rng) -> Quadrant:
    if isinstance(rng, Quadrant):
        return rng
    lo, hi, *rest = rng
    return Quadrant(float(lo), float(hi), rest[0] if rest else "none")


def quad_singular(
    integrand: Callable[[float], float],
    rng,
    abs_tol: float = QUAD_TOL,
    rel_tol: float = 1e-13,
    limit: int = 200,
) -> float:
    """Integrate a function with at most an inverse-square-root endpoint
    singularity.

    The singular endpoint ``e`` is removed by ``x = e +/- t**2``, which turns
    ``f(x) dx`` into the bounded integrand ``2 t f(e +/- t**2) dt``; the
    result is handed to adaptive Gauss-Kronrod quadrature.

    Args:
        integrand: scalar function of one variable.
        rng: a :class:`Quadrant` or a ``(lo, hi[, singular_end])`` tuple.
        abs_tol: absolute error target.
        rel_tol: relative error target.
        limit: subinterval cap of the adaptive routine.

    Raises:
        DomainError: the integrand grows faster than an inverse square root
            at the declared endpoint.
        NumericalError: the tolerance was not met; ``best_estimate`` holds
            the last value.
    """
    if abs_tol <= 0:
        raise DomainError("abs_tol must be positive")
    q = _as_quadrant(rng)
    if q.singular_end == "none":
        g, a, b = integrand, q.lo, q.hi
    else:
        end, sgn = (q.lo, 1.0) if q.singular_end == "lo" else (q.hi, -1.0)

        def g(t):
            return 2.0 * t * integrand(end + sgn * t * t)

        a, b = 0.0, math.sqrt(q.hi - q.lo)
        _probe_integrability(g, b)
    value, err, info = _quad(g, a, b, abs_tol, rel_tol, limit)
    if info is not None:
        raise NumericalError(
            f"quadrature did not reach tolerance {abs_tol:g}: {info}",
            best_estimate=value,
            error_estimate=err,
        )
    return value


def _quad(g, a, b, abs_tol, rel_tol, limit):
    out = integrate.quad(g, a, b, epsabs=abs_tol, epsrel=rel_tol, limit=limit, full_output=1)
    value, err = out[0], out[1]
    if len(out) > 3 and err > max(abs_tol, rel_tol * abs(value)):
        return value, err, out[3]
    return value, err, None


def _probe_integrability(g, width):
    # After substitution the integrand must stay bounded near t = 0; estimate
    # its growth exponent from two probes close to the endpoint.
    t1, t2 = 1e-6 * width, 1e-4 * width
    g1, g2 = abs(g(t1)), abs(g(t2))
    if not (math.isfinite(g1) and math.isfinite(g2)):
        raise DomainError("integrand not finite near the singular endpoint")
    if g1 == 0.0 or g2 == 0.0:
        return
    exponent = math.log(g1 / g2) / math.log(t2 / t1)
    if exponent > 0.25:
        raise DomainError(
            "integrand is not integrable with an inverse-square-root "
            f"singularity (growth exponent {exponent:.3f} after substitution)"
        )


def solve_monotone(
    g: Callable[[float], float],
    bracket_lo: float,
    bracket_hi: float,
    tol: float = ROOT_TOL,
) -> float:
    """Root of a continuous monotone function on a sign-changing bracket.

    Uses Brent's method, whose bisection fallback guarantees convergence.

    Raises:
        BracketError: invalid bracket or no sign change.
    """
    lo, hi = float(bracket_lo), float(bracket_hi)
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise BracketError(f"invalid bracket [{lo}, {hi}]")
    glo, ghi = g(lo), g(hi)
    if glo == 0.0:
        return lo
    if ghi == 0.0:
        return hi
    if not (math.isfinite(glo) and math.isfinite(ghi)):
        raise BracketError("function is not finite at the bracket ends")
    if (glo > 0) == (ghi > 0):
        raise BracketError(f"no sign change on [{lo}, {hi}]: g = {glo:.3g}, {ghi:.3g}")
    return optimize.brentq(g, lo, hi, xtol=tol, rtol=4 * np.finfo(float).eps, maxiter=500)


# Dormand-Prince 5(4) tableau.
_C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_E = (71 / 57600, 0.0, -71 / 16695, 71 / 1920, -17253 / 339200, 22 / 525, -1 / 40)


def _rhs(B, y):
    return (math.cos(y[2]), math.sin(y[2]), B * y[1])


def _dp5_step(B, y, h):
    """One Dormand-Prince step; returns (y_new, error_vector)."""
    k = [_rhs(B, y)]
    for i in range(1, 7):
        row = _A[i]
        yi = tuple(y[j] + h * sum(row[m] * k[m][j] for m in range(i)) for j in range(3))
        k.append(_rhs(B, yi))
    # the seventh stage is evaluated at the fifth-order solution (FSAL)
    y_new = yi
    err = tuple(h * sum(_E[m] * k[m][j] for m in range(7)) for j in range(3))
    return y_new, err


Event = tuple[str, Callable[[tuple], float]]


def _integrate(
    B: float,
    y0: Sequence[float],
    direction: float,
    events: Sequence[Event],
    rtol: float = ODE_TOL,
    atol: float | None = None,
    max_step: float = 0.05,
    max_steps: int = 200_000,
):
    """Integrate in arc length until one of ``events`` changes sign.

    Each event function must be positive at ``y0``; integration stops at
    the first state where one of them reaches zero, located by root finding
    on the step length.

    Returns the list of accepted states and the name of the stopping event
    (``"truncated"`` if the step budget ran out).
    """
    atol = rtol * 1e-2 if atol is None else atol
    y = tuple(float(v) for v in y0)
    states = [y]
    h = direction * min(max_step, 1e-3)
    for _ in range(max_steps):
        y_new, err = _dp5_step(B, y, h)
        scale = [atol + rtol * max(abs(a), abs(b)) for a, b in zip(y, y_new)]
        ratio = max(abs(e) / s for e, s in zip(err, scale))
        if ratio > 1.0 or not all(math.isfinite(v) for v in y_new):
            shrink = 0.2 if not math.isfinite(ratio) else max(0.2, 0.9 * ratio**-0.2)
            h *= shrink
            if abs(h) < 1e-15:
                raise NumericalError("step size underflow in shooting integrator", best_estimate=y)
            continue
        fired = [(name, fn) for name, fn in events if fn(y_new) <= 0.0]
        if fired:
            # shortest step length at which one of the fired events is reached
            best = None
            for name, fn in fired:
                hx = optimize.brentq(
                    lambda t, fn=fn: fn(_dp5_step(B, y, direction * t)[0]),
                    0.0, abs(h), xtol=1e-15, rtol=1e-15,
                )
                if best is None or hx < best[0]:
                    best = (hx, name)
            states.append(_dp5_step(B, y, direction * best[0])[0])
            return states, best[1]
        states.append(y_new)
        y = y_new
        factor = 5.0 if ratio == 0.0 else min(5.0, 0.9 * ratio**-0.2)
        h = direction * min(max_step, abs(h) * factor)
    return states, "truncated"


def _curve_from_states(B, states, status, C=None, c_minus_one=None) -> ProfileCurve:
    arr = np.array(states, dtype=float)
    if arr[-1, 0] < arr[0, 0]:
        arr = arr[::-1]
    keep = np.concatenate([[True], np.diff(arr[:, 0]) > 0])
    arr = arr[keep]
    y0 = states[0]
    if C is None:
        C = 0.5 * B * y0[1] ** 2 + math.cos(y0[2])
        c_minus_one = 0.5 * B * y0[1] ** 2 - 2.0 * math.sin(0.5 * y0[2]) ** 2
    crossing = None
    U = arr[:, 1]
    idx = np.nonzero(np.sign(U[:-1]) * np.sign(U[1:]) < 0)[0]
    if idx.size:
        i = idx[0]
        w = U[i] / (U[i] - U[i + 1])
        crossing = (
            float(arr[i, 0] + w * (arr[i + 1, 0] - arr[i, 0])),
            float(arr[i, 2] + w * (arr[i + 1, 2] - arr[i, 2])),
        )
    return ProfileCurve(
        arr[:, 0], arr[:, 1], arr[:, 2], B=B, C=C, c_minus_one=c_minus_one,
        crossing=crossing, status=status,
    )


def shoot(
    B: float,
    start,
    xi_end: float,
    step_tol: float = ODE_TOL,
    abs_tol: float | None = None,
    max_step: float | None = None,
) -> ProfileCurve:
    """Integrate the capillarity system from ``start`` to ``xi_end``.

    Args:
        B: separation parameter, positive.
        start: initial :class:`OdeState` or ``(xi, U, psi)`` triple.
        xi_end: abscissa to integrate to (either side of ``start.xi``).
        step_tol: relative local error tolerance.
        abs_tol: absolute local error tolerance, ``step_tol / 100`` if None.
        max_step: largest arc-length step, a hundredth of the span if None.

    Returns:
        A :class:`ProfileCurve` with one sample per accepted step, ordered
        by increasing ``xi``.  ``status`` is ``"complete"`` when ``xi_end``
        was reached, ``"vertical"`` when ``|psi|`` reached the vertical
        guard first and ``"divergence"`` when ``|U|`` blew up.
    """
    xi0, U0, psi0 = (float(v) for v in start)
    if not B > 0:
        raise DomainError("B must be positive")
    if not abs(psi0) < math.pi / 2:
        raise DomainError("start inclination must satisfy |psi| < pi/2")
    if xi_end == xi0:
        raise DomainError("xi_end must differ from the start abscissa")
    direction = 1.0 if xi_end > xi0 else -1.0
    span = abs(xi_end - xi0)
    max_step = span / 100 if max_step is None else max_step
    limit = math.pi / 2 - VERTICAL_GUARD
    events = [
        ("complete", lambda y: direction * (xi_end - y[0])),
        ("vertical", lambda y: limit - abs(y[2])),
        ("divergence", lambda y: DIVERGENCE_LIMIT - abs(y[1])),
    ]
    if U0 == 0.0 and psi0 == 0.0:
        return _curve_from_states(B, [(xi0, 0.0, 0.0), (xi_end, 0.0, 0.0)], "complete")
    states, status = _integrate(B, (xi0, U0, psi0), direction, events, step_tol, abs_tol, max_step)
    if status == "complete":
        states[-1] = (xi_end, states[-1][1], states[-1][2])
    return _curve_from_states(B, states, status)


def quad_smooth(
    integrand: Callable[[float], float],
    lo: float,
    hi: float,
    abs_tol: float = 1e-15,
    rel_tol: float = 1e-13,
    limit: int = 200,
) -> float:
    """Adaptive quadrature of an integrand that is already smooth on
    ``[lo, hi]``; raises :class:`NumericalError` on failure."""
    if lo == hi:
        return 0.0
    value, err, info = _quad(integrand, lo, hi, abs_tol, rel_tol, limit)
    if info is not None:
        raise NumericalError(f"quadrature did not converge: {info}", best_estimate=value, error_estimate=err)
    return value
