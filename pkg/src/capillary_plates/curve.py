"""Sampled solution curves of the planar capillarity system.

A :class:`ProfileCurve` is an immutable record of ``(xi, U, psi)`` samples,
ordered by increasing ``xi``, together with the constant ``C`` of the first
integral ``(B/2) U**2 + cos(psi) = C``.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DomainError

CSV_HEADER = "xi,U,psi"


@dataclass(frozen=True)
class Branch:
    """Index range ``[start, stop]`` (inclusive) on which ``U`` keeps one sign.

    ``orientation`` is the sign of ``dpsi/dxi``, which equals the sign of ``U``.
    """

    start: int
    stop: int
    orientation: int


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class ProfileCurve:
    """A sampled solution curve.

    Attributes
    ----------
    xi, U, psi : numpy.ndarray
        Abscissa, height and inclination, ``xi`` strictly increasing.
    B : float
        Separation parameter the curve was computed for.
    C : float
        First-integral constant.
    c_minus_one : float
        ``C - 1`` computed without cancellation; the normalized force of a
        curve joining the plates is ``2 * c_minus_one``.
    branches : tuple of Branch
        Monotone-``psi`` pieces with their orientation.
    crossing : (xi0, psi0) or None
        Point where the sampled curve meets the axis ``U = 0``.
    status : str
        ``"complete"``, ``"vertical"`` (a vertical tangent was reached before
        the requested end), ``"divergence"`` or ``"truncated"``.
    """

    xi: np.ndarray
    U: np.ndarray
    psi: np.ndarray
    B: float
    C: float
    c_minus_one: float = float("nan")
    branches: tuple = ()
    crossing: tuple | None = None
    status: str = "complete"
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        xi, U, psi = _frozen(self.xi), _frozen(self.U), _frozen(self.psi)
        if not (xi.shape == U.shape == psi.shape) or xi.ndim != 1 or xi.size == 0:
            raise DomainError("xi, U and psi must be equal-length non-empty 1-D arrays")
        if xi.size > 1 and np.any(np.diff(xi) <= 0):
            raise DomainError("xi must be strictly increasing")
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "U", U)
        object.__setattr__(self, "psi", psi)
        if np.isnan(self.c_minus_one):
            object.__setattr__(self, "c_minus_one", float(self.C) - 1.0)
        if not self.branches:
            object.__setattr__(self, "branches", split_branches(U))

    def __len__(self):
        return self.xi.size

    @property
    def samples(self) -> np.ndarray:
        """``(n, 3)`` array of ``(xi, U, psi)`` rows."""
        return np.column_stack([self.xi, self.U, self.psi])

    @property
    def span(self) -> tuple[float, float]:
        return float(self.xi[0]), float(self.xi[-1])

    def reaches(self, lo: float = -1.0, hi: float = 1.0, tol: float = 1e-9) -> bool:
        """True if the samples cover ``[lo, hi]`` up to ``tol``."""
        return self.xi[0] <= lo + tol and self.xi[-1] >= hi - tol

    def first_integral_residual(self) -> np.ndarray:
        """``(B/2) U**2 + cos(psi) - C`` at every sample."""
        return 0.5 * self.B * self.U**2 + np.cos(self.psi) - self.C

    def height_at_xi(self, xi) -> np.ndarray:
        """Cubic Hermite interpolation of ``U`` using ``dU/dxi = tan(psi)``.

        Near a vertical tangent ``tan(psi)`` is unbounded, so node slopes are
        capped at three times a neighbouring secant of the same sign; that
        keeps each monotone piece monotone and leaves well-resolved slopes
        untouched.
        """
        from scipy.interpolate import CubicHermiteSpline

        if len(self) == 1:
            return np.full_like(np.asarray(xi, dtype=float), self.U[0])
        spline = CubicHermiteSpline(self.xi, self.U, _capped_slopes(self.xi, self.U, np.tan(self.psi)))
        return spline(xi)

    def inclination_at_xi(self, xi) -> np.ndarray:
        return np.interp(xi, self.xi, self.psi)

    def to_csv(self, target=None, comment: str | None = None) -> str:
        """Write ``xi,U,psi`` rows with 17 significant digits.

        ``target`` may be a path or a text stream; the CSV text is returned
        in every case.
        """
        buf = io.StringIO()
        if comment:
            buf.write(f"# {comment}\n")
        buf.write(CSV_HEADER + "\n")
        for x, u, p in zip(self.xi, self.U, self.psi):
            buf.write(f"{x:.17g},{u:.17g},{p:.17g}\n")
        text = buf.getvalue()
        if isinstance(target, (str, Path)):
            Path(target).write_text(text)
        elif target is not None:
            target.write(text)
        return text


def _capped_slopes(xi, U, m) -> np.ndarray:
    s = np.diff(U) / np.diff(xi)
    # only intervals whose end slopes agree in sign with the secant are
    # monotone; an interval holding an extremum is left alone
    mono = (m[:-1] * s > 0) & (m[1:] * s > 0)
    bound = np.where(mono, 3.0 * np.abs(s), np.inf)
    cap = np.minimum(np.r_[np.inf, bound], np.r_[bound, np.inf])
    return np.sign(m) * np.minimum(np.abs(m), cap)


def split_branches(U) -> tuple:
    """Split a sample list into maximal runs of constant sign of ``U``.

    A sample with ``U == 0`` is shared by the branches on either side.
    """
    U = np.asarray(U, dtype=float)
    n = U.size
    if n == 0:
        return ()
    sign = np.sign(U)
    branches = []
    start = 0
    current = 0
    for i in range(n):
        s = int(sign[i])
        if s == 0:
            continue
        if current == 0:
            current = s
        elif s != current:
            stop = i - 1
            branches.append(Branch(start, stop, current))
            start = i - 1 if sign[i - 1] == 0 else i
            current = s
    branches.append(Branch(start, n - 1, current))
    return tuple(branches)


def read_csv(source) -> tuple[np.ndarray, dict]:
    """Read a curve CSV; returns the ``(n, 3)`` sample array and the
    ``key=value`` pairs of a leading comment line, if any."""
    if isinstance(source, (str, Path)) and Path(source).exists():
        text = Path(source).read_text()
    elif isinstance(source, str):
        text = source
    else:
        text = source.read()
    meta = {}
    rows = []
    for line in text.splitlines():
        if line.startswith("#"):
            for token in line[1:].split():
                if "=" in token:
                    k, v = token.split("=", 1)
                    meta[k] = v
            continue
        if line.strip() == CSV_HEADER or not line.strip():
            continue
        rows.append([float(v) for v in line.split(",")])
    return np.array(rows, dtype=float).reshape(-1, 3), meta
