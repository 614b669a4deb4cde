"""Separation regimes, barrier-delimited regions and the region map.

A configuration is placed by comparing its left-plate inclination
``psi1 = gamma1 - pi/2`` with the left-plate inclinations of the barriers,
which increase in the order

    T (-pi/2) < G (0) < I < II < III (psi2) < IV0 < V < IV (pi/2).

``IV0`` joins the plates only for ``B <= B0`` and ``V`` only for
``B <= B00``, so the regions available depend on the regime.  Data within
``1e-10`` of a barrier angle are labelled as lying on that barrier.
"""

from __future__ import annotations

import enum
import io
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .barriers import BarrierKind, Regime, critical_separations, left_angles, regime
from .errors import DomainError
from .profile import HALF_PI, JoinSolution, PlateConfig, _join

TIE_TOL = 1e-10


class Region(str, enum.Enum):
    OnT = "OnT"
    R_TG = "R_TG"
    OnG = "OnG"
    R_GI = "R_GI"
    OnI = "OnI"
    R_I_II = "R_I_II"
    OnII = "OnII"
    R_II_III = "R_II_III"
    OnIII = "OnIII"
    R_III_IV0 = "R_III_IV0"
    OnIV0 = "OnIV0"
    R_IV0_V = "R_IV0_V"
    OnV = "OnV"
    R_V_IV = "R_V_IV"
    OnIV = "OnIV"
    # wide and intermediate separations, where IV0 or V stay off the left plate
    R_III_IV = "R_III_IV"
    R_IV0_IV = "R_IV0_IV"


class ForceSign(str, enum.Enum):
    ATTRACTING = "Attracting"
    REPELLING = "Repelling"
    ZERO = "Zero"


class Menisci(str, enum.Enum):
    LIKE = "Like"
    UNLIKE = "Unlike"


class Crossing(str, enum.Enum):
    BETWEEN = "BetweenPlates"
    LEFT = "LeftOfPlates"
    RIGHT = "RightOfPi2"
    NONE = "NoCrossing"


_ON = {
    BarrierKind.T: Region.OnT,
    BarrierKind.G: Region.OnG,
    BarrierKind.I: Region.OnI,
    BarrierKind.II: Region.OnII,
    BarrierKind.III: Region.OnIII,
    BarrierKind.IV0: Region.OnIV0,
    BarrierKind.V: Region.OnV,
    BarrierKind.IV: Region.OnIV,
}

_BETWEEN = {
    (BarrierKind.T, BarrierKind.G): Region.R_TG,
    (BarrierKind.G, BarrierKind.I): Region.R_GI,
    (BarrierKind.I, BarrierKind.II): Region.R_I_II,
    (BarrierKind.II, BarrierKind.III): Region.R_II_III,
    (BarrierKind.III, BarrierKind.IV0): Region.R_III_IV0,
    (BarrierKind.IV0, BarrierKind.V): Region.R_IV0_V,
    (BarrierKind.V, BarrierKind.IV): Region.R_V_IV,
    (BarrierKind.III, BarrierKind.IV): Region.R_III_IV,
    (BarrierKind.IV0, BarrierKind.IV): Region.R_IV0_IV,
}

# when two barrier angles coincide (IV0 or V tangent at the left plate)
# the more specific barrier names the point
_PRIORITY = [
    BarrierKind.V, BarrierKind.IV0, BarrierKind.T, BarrierKind.G, BarrierKind.I,
    BarrierKind.II, BarrierKind.III, BarrierKind.IV,
]


@dataclass(frozen=True)
class RegionReport:
    """Classification of one configuration.

    ``reflected`` is True when ``gamma2 > pi/2`` was handled through the
    reflection ``(gamma1, gamma2) -> (pi - gamma1, pi - gamma2)``; region
    names then refer to the barriers of the reflected configuration.
    """

    gamma1: float
    gamma2: float
    B: float
    region: Region
    regime: Regime
    force: float
    force_sign: ForceSign
    menisci: Menisci
    crossing: Crossing
    attracting_set_components: int
    reflected: bool = False

    def as_dict(self) -> dict:
        return {
            "gamma1": self.gamma1,
            "gamma2": self.gamma2,
            "B": self.B,
            "region": self.region.value,
            "regime": self.regime.value,
            "force": self.force,
            "force_sign": self.force_sign.value,
            "menisci": self.menisci.value,
            "crossing": self.crossing.value,
            "components": self.attracting_set_components,
            "reflected": self.reflected,
        }


def connectivity(B: float, gamma2: float) -> int:
    """Number of components of the attracting set: 2 when ``B < B00``."""
    if not B > 0:
        raise DomainError("B must be positive")
    _, B00 = critical_separations(gamma2)
    return 2 if B < B00 else 1


def region_of(psi1: float, angles: dict) -> Region:
    """Region for a left-plate inclination given the barrier angles."""
    for kind in _PRIORITY:
        if kind in angles and abs(psi1 - angles[kind]) <= TIE_TOL:
            return _ON[kind]
    ordered = sorted(angles.items(), key=lambda kv: kv[1])
    for (ka, a), (kb, b) in zip(ordered, ordered[1:]):
        if a < psi1 < b:
            return _BETWEEN[(ka, kb)]
    raise DomainError(f"psi1={psi1} outside the span of the barriers; no joining solution")


def menisci(gamma1: float, gamma2: float) -> Menisci:
    return Menisci.LIKE if (HALF_PI - gamma1) * (HALF_PI - gamma2) > 0 else Menisci.UNLIKE


def crossing_location(sol: JoinSolution) -> Crossing:
    if sol.case == "crossing" or sol.on_barrier in ("II", "IV0"):
        return Crossing.BETWEEN
    if sol.level.p >= 0:
        return Crossing.NONE
    return Crossing.LEFT if sol.case == "positive" else Crossing.RIGHT


def _force_sign(region: Region, force: float) -> ForceSign:
    if region in (Region.OnI, Region.OnV):
        return ForceSign.ZERO
    return ForceSign.ATTRACTING if force > 0 else ForceSign.REPELLING if force < 0 else ForceSign.ZERO


def _report(gamma1, gamma2, B, angles, reg, components, reflected=False, g_in=None) -> RegionReport:
    region = region_of(gamma1 - HALF_PI, angles)
    sol = _join(PlateConfig(gamma1, gamma2, B))
    force = sol.force
    g1, g2 = g_in if g_in else (gamma1, gamma2)
    return RegionReport(
        gamma1=g1, gamma2=g2, B=B, region=region, regime=reg, force=force,
        force_sign=_force_sign(region, force), menisci=menisci(g1, g2),
        crossing=crossing_location(sol), attracting_set_components=components,
        reflected=reflected,
    )


def classify_solution(gamma1: float, gamma2: float, B: float) -> RegionReport:
    """Region, regime, force sign, meniscus likeness and crossing location
    of the curve joining the plates."""
    if not B > 0:
        raise DomainError("B must be positive")
    if not 0.0 <= gamma1 <= math.pi:
        raise DomainError("gamma1 must lie in [0, pi]")
    if not 0.0 <= gamma2 <= math.pi or gamma2 == HALF_PI:
        raise DomainError("gamma2 must lie in [0, pi] and differ from pi/2")
    if gamma2 > HALF_PI:
        g1, g2 = math.pi - gamma1, math.pi - gamma2
        return _report(g1, g2, B, left_angles(B, g2), regime(B, g2), connectivity(B, g2),
                       reflected=True, g_in=(gamma1, gamma2))
    return _report(gamma1, gamma2, B, left_angles(B, gamma2), regime(B, gamma2), connectivity(B, gamma2))


@dataclass(frozen=True)
class RegionMap:
    """Reports on a ``(B, gamma1)`` grid; ``reports[i][j]`` belongs to
    ``B_grid[i]`` and ``gamma1_grid[j]``."""

    gamma2: float
    gamma1_grid: np.ndarray
    B_grid: np.ndarray
    reports: list

    def labels(self) -> np.ndarray:
        return np.array([[r.region.value for r in row] for row in self.reports])

    def forces(self) -> np.ndarray:
        return np.array([[r.force for r in row] for row in self.reports])

    def attracting_components(self) -> list[int]:
        """Number of runs of attracting cells along ``gamma1`` per row."""
        out = []
        for row in self.reports:
            att = np.array([r.force_sign is ForceSign.ATTRACTING for r in row], dtype=int)
            out.append(int(att[0] + np.count_nonzero(np.diff(att) == 1)))
        return out

    def to_csv(self, target=None) -> str:
        buf = io.StringIO()
        buf.write("gamma1,B,region,force_sign,menisci,components\n")
        for row in self.reports:
            for r in row:
                buf.write(
                    f"{r.gamma1:.17g},{r.B:.17g},{r.region.value},{r.force_sign.value},"
                    f"{r.menisci.value},{r.attracting_set_components}\n"
                )
        text = buf.getvalue()
        if isinstance(target, (str, Path)):
            Path(target).write_text(text)
        elif target is not None:
            target.write(text)
        return text


def default_B_grid(gamma2: float, m: int = 200) -> np.ndarray:
    """Log-spaced separations spanning all three regimes."""
    B0, B00 = critical_separations(gamma2)
    return np.geomspace(B00 / 20.0, 20.0 * B0, m)


def region_map(gamma2: float, gamma1_grid=200, B_grid=200) -> RegionMap:
    """Classify every cell of a ``(B, gamma1)`` grid.

    Integer arguments request that many points: ``gamma1`` equispaced on
    ``[0, pi]`` and ``B`` log-spaced across the three regimes.
    """
    if np.isscalar(gamma1_grid):
        gamma1_grid = np.linspace(0.0, math.pi, int(gamma1_grid))
    if np.isscalar(B_grid):
        B_grid = default_B_grid(gamma2, int(B_grid))
    gamma1_grid = np.asarray(gamma1_grid, dtype=float)
    B_grid = np.asarray(B_grid, dtype=float)
    if gamma1_grid.size == 0 or B_grid.size == 0:
        raise DomainError("grids must be non-empty")
    if not 0.0 <= gamma2 < HALF_PI:
        raise DomainError("region maps need gamma2 in [0, pi/2)")
    rows = []
    for B in B_grid:
        B = float(B)
        angles = left_angles(B, gamma2)
        reg = regime(B, gamma2)
        comp = connectivity(B, gamma2)
        rows.append([_report(float(g), gamma2, B, angles, reg, comp) for g in gamma1_grid])
    return RegionMap(gamma2, gamma1_grid, B_grid, rows)


__all__ = [
    "Crossing",
    "ForceSign",
    "Menisci",
    "Region",
    "RegionMap",
    "RegionReport",
    "Regime",
    "classify_solution",
    "connectivity",
    "crossing_location",
    "default_B_grid",
    "menisci",
    "regime",
    "region_map",
    "region_of",
]
