"""Which configurations attract and which repel, drawn as a coarse map over
separation and left contact angle.

Run with ``python3 demos/region_map.py [--steps 40]``.
"""

import argparse
import math

from capillary_plates import barriers, classify

# one letter per open region; barrier cells are drawn as "|"
GLYPH = {"R_TG": "a", "R_GI": "b", "R_I_II": "c", "R_II_III": "d", "R_III_IV": "e", "R_III_IV0": "e",
         "R_IV0_IV": "f", "R_IV0_V": "f", "R_V_IV": "g"}


def glyph(r):
    ch = GLYPH.get(r.region.value, "|")
    # attracting cells in upper case
    return ch.upper() if r.force_sign is classify.ForceSign.ATTRACTING else ch


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--gamma2", type=float, default=math.pi / 4)
    ap.add_argument("--steps", type=int, default=40)
    args = ap.parse_args()
    g2, n = args.gamma2, args.steps

    B0, B00 = barriers.critical_separations(g2)
    m = classify.region_map(g2, 2 * n, n)
    comps = m.attracting_components()
    print(f"gamma1 from 0 (left) to pi (right), B decreasing downwards; B0={B0:.4g}, B00={B00:.4g}")
    for B, row, k in zip(m.B_grid[::-1], m.reports[::-1], comps[::-1]):
        mark = "*" if B < B00 else " "
        print(f"{B:9.3e} {mark} " + "".join(glyph(r) for r in row) + f"  {k}")
    print("\nupper case attracts, lower case repels; * marks rows with two attracting sets")

    for g1 in (0.3, 1.2, math.pi - g2, 2.9):
        r = classify.classify_solution(g1, g2, 0.5 * B00)
        print(f"gamma1={g1:.4f}: {r.region.value:>9s} {r.force_sign.value:>10s} F={r.force:+.5f} "
              f"menisci {r.menisci.value}")


if __name__ == "__main__":
    main()
