#!/usr/bin/env python3
"""Recompute both special-value tables from first principles.

Every cell is computed twice: once through the modular machinery (eta
quotients, Lambert q-series, Eichler integrals, central-binomial harmonic
series) and once through its closed form (Dirichlet L-values, zeta values,
rational multiples of powers of pi).  The two routes share no constants.

Run:  python demos/01_reproduce_tables.py [digits]
"""

import sys

from modzeta import PrecisionCtx, run_suite


def main() -> None:
    digits = int(sys.argv[1]) if len(sys.argv) > 1 else 40
    ctx = PrecisionCtx(digits)
    for suite in ("table-h2", "table-h3"):
        print("=" * 72)
        print("%s at %d digits" % (suite, digits))
        print("=" * 72)
        report = run_suite(suite, ctx)
        for row in report.rows:
            print("%-14s %-5s  %s" % (row["id"],
                                      "ok" if row["pass"] else "FAIL",
                                      row["description"]))
            print("    computed  %s" % row["lhs"])
            print("    closed    %s" % row["rhs"])
            print("    residual  %s" % row["abs_residual"])
        s = report.summary
        print("-> %d/%d cells matched (largest residual %s)\n"
              % (s["passed"], s["total"], s["max_residual"]))


if __name__ == "__main__":
    main()
