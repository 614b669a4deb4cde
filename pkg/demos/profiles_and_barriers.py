"""Menisci between two plates, the barrier curves that bound them, and the
two separations at which the lower barriers change character.

Run with ``python3 demos/profiles_and_barriers.py [--plot out.png]``.
"""

import argparse
import math

import numpy as np

from capillary_plates import barriers, solve_join
from capillary_plates.barriers import BarrierKind
from capillary_plates.numerics import shoot
from capillary_plates.profile import PlateConfig

PI = math.pi


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--gamma2", type=float, default=PI / 4)
    ap.add_argument("--plot", help="write a figure of the barrier atlas (needs matplotlib)")
    args = ap.parse_args()
    g2 = args.gamma2

    B0, B00 = barriers.critical_separations(g2)
    print(f"gamma2 = {g2:.6f}")
    print(f"  IV0 reaches the left plate for B <= B0  = {B0:.10g}")
    print(f"  V reaches the left plate for B <= B00 = {B00:.10g}")
    print(f"  the printed B00 constant is {barriers.b00_printed(g2) / B00:.3f} of the re-derived one\n")

    # one separation per regime; the right-plate heights order the barriers
    cases = {"wide": 4 * B0, "intermediate": math.sqrt(B0 * B00), "narrow": 0.5 * B00}
    for name, B in cases.items():
        at = barriers.atlas(B, g2, 64)
        heights = sorted(at.right_heights().items(), key=lambda kv: -kv[1])
        order = " > ".join(k.value for k, _ in heights)
        print(f"{name:>12s} B={B:.4g}: right heights {order}")

    # a joining curve, rebuilt independently by shooting from the right plate
    cfg = PlateConfig(2.2, g2, 0.3)
    c = solve_join(cfg, 128)
    s = shoot(cfg.B, (1.0, c.U[-1], c.psi[-1]), -1.0, step_tol=1e-11)
    print(f"\njoining curve gamma1={cfg.gamma1}, B={cfg.B}: case {c.meta['case']}, C={c.C:.12f}")
    print(f"  left height by quadrature {c.U[0]:.10f}, by shooting {s.U[0]:.10f}")
    print(f"  first-integral residual {np.max(np.abs(c.first_integral_residual())):.1e}")

    if args.plot:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, axes = plt.subplots(1, 3, figsize=(12, 4), sharey=False)
        for ax, (name, B) in zip(axes, cases.items()):
            for kind in BarrierKind:
                b = barriers.barrier(kind, B, g2, 128)
                ax.plot(b.xi, b.U, label=kind.value)
            ax.set_title(f"{name}, B={B:.3g}")
            ax.set_xlabel("xi")
        axes[0].set_ylabel("U")
        axes[-1].legend(fontsize=7)
        fig.tight_layout()
        fig.savefig(args.plot, dpi=120)
        print(f"\nwrote {args.plot}")


if __name__ == "__main__":
    main()
