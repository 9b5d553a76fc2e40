#!/usr/bin/env python3
"""Walk through the two main identity families at one admissible point.

The left-hand sides sum cubed-central-binomial series with harmonic weights
at the modular rate alpha4(z)(1-alpha4(z))/16; the right-hand sides assemble
Epstein zeta values and Eichler integrals.  At an admissible z the two agree
to working precision even though no step is shared between them.

Run:  python demos/02_theorem_walkthrough.py [re] [im] [digits]
      (defaults: z = 1.3i at 50 digits; try 0.5 0.9 for the vertical line)
"""

import sys

import mpmath as mp
from mpmath import mpc

from modzeta import PrecisionCtx, alpha4, h3_linear, h3_ratios, q_ratios, r_linear


def show(title, pairs, ctx):
    print("-" * 68)
    print(title)
    with ctx.working():
        for label, lhs, rhs in pairs:
            print("  %-4s series  = %s" % (label, mp.nstr(lhs, 30)))
            print("  %-4s modular = %s" % ("", mp.nstr(rhs, 30)))
            print("  %-4s |diff|  = %s" % ("", mp.nstr(abs(lhs - rhs), 4)))


def main() -> None:
    re = sys.argv[1] if len(sys.argv) > 1 else "0"
    im = sys.argv[2] if len(sys.argv) > 2 else "1.3"
    digits = int(sys.argv[3]) if len(sys.argv) > 3 else 50
    ctx = PrecisionCtx(digits)
    with ctx.working():
        z = mpc(mp.mpf(re), mp.mpf(im))
        a4 = alpha4(z, ctx)
        print("z = %s   alpha4(z) = %s" % (mp.nstr(z, 12), mp.nstr(a4, 12)))
        print("series rate 64x = %s" % mp.nstr(4 * a4 * (1 - a4), 12))

    q = q_ratios(z, ctx)
    show("weight-2 ratio identities",
         [("Q1", q["q1_lhs"], q["q1_rhs"]), ("Q2", q["q2_lhs"], q["q2_rhs"])], ctx)
    r = r_linear(z, ctx)
    show("weight-2 linear-factor identities",
         [("R1", r["r1_lhs"], r["r1_rhs"]), ("R2", r["r2_lhs"], r["r2_rhs"])], ctx)
    h = h3_ratios(z, ctx)
    show("weight-3 ratio identities",
         [("H1", h["lhs1"], h["rhs1"]), ("H2", h["lhs2"], h["rhs2"])], ctx)
    g = h3_linear(z, ctx)
    show("weight-3 linear-factor identities",
         [("G1", g["lhs1"], g["rhs1"]), ("G2", g["lhs2"], g["rhs2"])], ctx)


if __name__ == "__main__":
    main()
