"""How the force between the plates changes as they are brought together.

Three stories: supplementary angles approach a finite repulsion, upper and
lower neighbours of that case pass through a deepest repulsion at a
predictable separation, and generic angles attract like ``1/B``.

Run with ``python3 demos/force_sweeps.py [--plot out.png]``.
"""

import argparse
import math

import numpy as np

from capillary_plates import estimates, forces
from capillary_plates.forces import NeighborClass
from capillary_plates.profile import PlateConfig, _join

PI = math.pi


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--plot", help="write force curves (needs matplotlib)")
    args = ap.parse_args()
    g2, B_start = PI / 6, 0.3
    psi2 = PI / 2 - g2

    sym = forces.sweep_force(PlateConfig(PI - g2, g2, 1.0), 1.0, 1e-6, 60)
    print("supplementary angles, gamma2 = pi/6")
    print(f"  F(B=1) = {sym.F[-1]:.6f}, F(B=1e-6) = {sym.F[0]:.6f}, limit {forces.symmetric_force_limit(g2):.6f}")

    ranges = forces.admissible_ranges(B_start, g2)
    print(f"\nneighbours starting at B = {B_start}")
    print(f"  upper class psi1 in ({ranges.upper.lo:.4f}, {ranges.upper.hi:.4f})")
    print(f"  lower class psi1 in ({ranges.lower.lo:.4f}, {ranges.lower.hi:.4f}]")
    sweeps = []
    for kind, x in (("Upper", 0.5 * (ranges.upper.lo + psi2)), ("Lower", 0.5 * (psi2 + ranges.lower.hi))):
        sw = forces.sweep_force(PlateConfig.from_inclinations(x, psi2, B_start), B_start, 1e-4, 120)
        ext = sw.extremum
        pred = forces.extremal_position(NeighborClass(kind, x), g2, B_start)
        print(f"  {kind.lower()} psi1={x:.4f}: deepest F={ext.F_star:.8f} at xi*={ext.xi_star:.6f} "
              f"(predicted {pred:.6f})")
        sweeps.append((f"{kind.lower()} psi1={x:.3f}", sw))
    print(f"  an upper neighbour bottoms out at -2(1 - cos psi1); every lower one at "
          f"{forces.symmetric_force_limit(g2):.3f}")

    g1 = PI / 3
    t = estimates.attraction_threshold(g1, g2)
    print(f"\ngeneric angles gamma1 = pi/3: attraction guaranteed below B = {t:.4g}")
    for B in (1e-3, 1e-4, 1e-5):
        F = _join(PlateConfig(g1, g2, B)).force
        print(f"  B={B:.0e}: F={F:.6g}, F*B={F * B:.6f}")

    if args.plot:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(6, 4))
        ax.semilogx(sym.B, sym.F, label="supplementary")
        for label, sw in sweeps:
            ax.semilogx(sw.B, sw.F, label=label)
        ax.axhline(forces.symmetric_force_limit(g2), color="k", lw=0.5)
        ax.set_xlabel("B")
        ax.set_ylabel("F")
        ax.legend(fontsize=8)
        fig.tight_layout()
        fig.savefig(args.plot, dpi=120)
        print(f"\nwrote {args.plot}")


if __name__ == "__main__":
    main()
