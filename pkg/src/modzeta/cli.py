"""Command-line front end: `modzeta verify|eval|table`.

Exit codes: 0 all-pass, 1 any identity failed, 2 usage/configuration error.
High-precision values are printed as decimal strings only.  The default digit
count comes from --digits, then the MODZETA_DIGITS environment variable, then
an optional flat key=value config file (flags override the file).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import mpmath as mp
from mpmath import mpc, mpf

from . import verify
from .arith import dirichlet_l, epstein2, epstein3
from .eichler import eichler4, eichler6
from .modular import eisenstein, eta, lambda_fn
from .mpcore import DomainError, PrecisionCtx, const_catalan, const_zeta
from .series import LinearFactor, W_ONE, binom2_series, binom3_series, ell_k
from .verify import run_suite, s_r, t_r, u_check

__all__ = ["main"]


class UsageError(Exception):
    pass


def _parse_number(text: str):
    """Exact rational ('3', '-1/64') or decimal complex ('0.5+0.75i', '2i')."""
    text = text.strip()
    try:
        fr = Fraction(text)
        return mpf(fr.numerator) / fr.denominator
    except (ValueError, ZeroDivisionError):
        pass
    s = text.replace(" ", "")
    if s.endswith(("i", "j")):
        body = s[:-1]
        # split into real and imaginary pieces at the last +/- sign
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "eE":
                re_part, im_part = body[:k], body[k:]
                break
        else:
            re_part, im_part = "0", body or "1"
        if im_part in ("+", "-"):
            im_part += "1"
        try:
            return mpc(mpf(re_part), mpf(im_part))
        except ValueError as exc:
            raise UsageError("cannot parse complex number %r" % (text,)) from exc
    try:
        return mpf(s)
    except ValueError as exc:
        raise UsageError("cannot parse number %r" % (text,)) from exc


def _load_config(path: str | None) -> dict:
    cfg = {}
    if path:
        if not os.path.exists(path):
            raise UsageError("config file not found: %s" % path)
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise UsageError("bad config line (want key=value): %r" % line)
                k, v = line.split("=", 1)
                if k.strip() not in ("digits", "suite", "jobs", "format", "out", "seed"):
                    raise UsageError("unknown config key %r" % k.strip())
                cfg[k.strip()] = v.strip()
    return cfg


def _resolve_digits(args, cfg) -> int:
    if args.digits is not None:
        digits = args.digits
    elif os.environ.get("MODZETA_DIGITS"):
        digits = int(os.environ["MODZETA_DIGITS"])
    elif "digits" in cfg:
        digits = int(cfg["digits"])
    else:
        digits = 50
    if not 10 <= digits <= 1000:
        raise UsageError("digits must lie in [10, 1000], got %d" % digits)
    return digits


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    cfg = _load_config(args.config)
    digits = _resolve_digits(args, cfg)
    suite = args.suite or cfg.get("suite", "all")
    if suite not in verify.all_suites():
        raise UsageError("unknown suite %r; choose from: %s"
                         % (suite, ", ".join(verify.all_suites())))
    jobs = args.jobs if args.jobs is not None else int(cfg.get("jobs", os.cpu_count() or 1))
    seed = args.seed if args.seed is not None else int(cfg.get("seed", verify.DEFAULT_SEED))
    fmt = args.format or cfg.get("format", "text")
    ctx = PrecisionCtx(digits)
    report = run_suite(suite, ctx, jobs=jobs, seed=seed)
    _emit(report.to_json() if fmt == "json" else report.to_text(),
          args.out or cfg.get("out"))
    return 0 if report.all_pass else 1


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def _eval_dispatch(name: str, argv: list, ctx: PrecisionCtx):
    def want(n):
        if len(argv) != n:
            raise UsageError("%s expects %d argument(s), got %d" % (name, n, len(argv)))

    with ctx.working():
        if name == "L":
            want(2)
            return dirichlet_l(int(argv[0]), int(argv[1]), ctx)
        if name == "zeta":
            want(1)
            return const_zeta(int(argv[0]), ctx)
        if name == "G":
            want(0)
            return const_catalan(ctx)
        if name == "E":
            want(2)
            z = _parse_number(argv[0])
            s = int(argv[1])
            if s == 2:
                return epstein2(z, ctx)
            if s == 3:
                return epstein3(z, ctx)
            raise UsageError("E supports s in {2, 3}")
        if name == "eichler4":
            want(2)
            return eichler4(_parse_number(argv[0]), int(argv[1]), ctx)
        if name == "eichler6":
            want(2)
            return eichler6(_parse_number(argv[0]), int(argv[1]), ctx)
        if name == "lambda":
            want(1)
            return lambda_fn(_parse_number(argv[0]), ctx)
        if name == "eta":
            want(1)
            return eta(_parse_number(argv[0]), ctx)
        if name in ("E2", "E4", "E6"):
            want(1)
            return eisenstein(_parse_number(argv[0]), int(name[1]), ctx)
        if name == "K":
            want(1)
            return ell_k(_parse_number(argv[0]), ctx)
        if name == "binom3":
            want(3)
            x = _parse_number(argv[0])
            a = _parse_number(argv[1])
            b = _parse_number(argv[2])
            boundary = abs(abs(64 * mpc(x)) - 1) < mpf(10) ** (-(ctx.workdps - 10))
            return binom3_series(x, LinearFactor(a, b), W_ONE, ctx,
                                 accelerate=boundary)
        if name == "binom2":
            want(1)
            return binom2_series(_parse_number(argv[0]), W_ONE, ctx)
        if name == "Srz":
            want(2)
            return s_r(_parse_number(argv[0]), Fraction(argv[1]), ctx)
        if name == "Trz":
            want(2)
            return t_r(_parse_number(argv[0]), Fraction(argv[1]), ctx)
        if name == "Urz":
            want(2)
            return u_check(_parse_number(argv[0]), Fraction(argv[1]), ctx)
    raise UsageError("unknown function %r" % (name,))


_EVAL_NAMES = ("L", "zeta", "G", "E", "eichler4", "eichler6", "lambda", "eta",
               "E2", "E4", "E6", "K", "binom3", "binom2", "Srz", "Trz", "Urz")


def _format_value(v, digits: int) -> str:
    if isinstance(v, mpc):
        if v.imag == 0:
            v = v.real
        else:
            return mp.nstr(v, digits, strip_zeros=False)
    return mp.nstr(v, digits, strip_zeros=False)


def cmd_eval(args) -> int:
    cfg = _load_config(args.config)
    digits = _resolve_digits(args, cfg)
    if args.function not in _EVAL_NAMES:
        raise UsageError("unknown function %r; choose from: %s"
                         % (args.function, ", ".join(_EVAL_NAMES)))
    ctx = PrecisionCtx(digits)
    try:
        value = _eval_dispatch(args.function, args.args, ctx)
    except (DomainError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    with ctx.working():
        _emit(_format_value(value, digits), args.out or cfg.get("out"))
    return 0


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def cmd_table(args) -> int:
    cfg = _load_config(args.config)
    digits = _resolve_digits(args, cfg)
    fmt = args.format or cfg.get("format", "text")
    suite = "table-h2" if args.which == "h2" else "table-h3"
    ctx = PrecisionCtx(digits)
    jobs = args.jobs if args.jobs is not None else int(cfg.get("jobs", os.cpu_count() or 1))
    report = run_suite(suite, ctx, jobs=jobs)
    if fmt == "json":
        _emit(report.to_json(), args.out or cfg.get("out"))
    else:
        lines = ["%s: every cell recomputed from first principles vs closed form"
                 % suite]
        for r in report.rows:
            lines.append("%-14s %-6s  computed=%s" % (
                r["id"], "pass" if r["pass"] else "FAIL", r["lhs"]))
            lines.append("%-14s %-6s    closed=%s  (residual %s)" % (
                "", "", r["rhs"], r["abs_residual"]))
        s = report.summary
        lines.append("%d/%d cells matched at digits=%d" % (s["passed"], s["total"], digits))
        _emit("\n".join(lines), args.out or cfg.get("out"))
    return 0 if report.all_pass else 1


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="modzeta",
        description="verify modular / zeta / L-function series identities "
                    "to arbitrary precision")
    sub = ap.add_subparsers(dest="command")

    def common(p):
        p.add_argument("--digits", type=int, default=None,
                       help="decimal digits (default 50; env MODZETA_DIGITS)")
        p.add_argument("--config", default=None, help="flat key=value config file")
        p.add_argument("--out", default=None, help="write output to a file")

    pv = sub.add_parser("verify", help="run an identity suite")
    common(pv)
    pv.add_argument("--suite", default=None,
                    help="suite name (default all); see --list-suites")
    pv.add_argument("--jobs", type=int, default=None,
                    help="parallel workers (default: cpu count)")
    pv.add_argument("--seed", type=int, default=None,
                    help="seed for the random-z suites")
    pv.add_argument("--format", choices=("text", "json"), default=None)
    pv.add_argument("--list-suites", action="store_true")
    pv.set_defaults(func=cmd_verify)

    pe = sub.add_parser("eval", help="evaluate a single quantity")
    common(pe)
    pe.add_argument("function", help="one of: %s" % ", ".join(_EVAL_NAMES))
    pe.add_argument("args", nargs="*",
                    help="arguments (exact rationals or decimal complexes like 0.5+0.75i)")
    pe.set_defaults(func=cmd_eval)

    pt = sub.add_parser("table", help="recompute a special-value table")
    common(pt)
    pt.add_argument("which", choices=("h2", "h3"))
    pt.add_argument("--jobs", type=int, default=None)
    pt.add_argument("--format", choices=("text", "json"), default=None)
    pt.set_defaults(func=cmd_table)

    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    if args.command is None:
        ap.print_help()
        return 2
    if getattr(args, "list_suites", False):
        print("\n".join(verify.all_suites()))
        return 0
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
