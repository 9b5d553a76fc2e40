"""Registry integrity, runner behavior, report serialization."""

import json

import mpmath as mp
import pytest
from mpmath import mpf

from modzeta import (DomainError, PrecisionCtx, all_suites, get_records,
                     q_ratios, run_suite, s_r, t_r, u_check)
from modzeta.verify import DEFAULT_SEED, SUITES


def test_registry_ids_unique():
    recs = get_records("all")
    ids = [r.id for r in recs]
    assert len(ids) == len(set(ids))
    assert all(r.suite in SUITES for r in recs)


def test_all_suites_nonempty():
    for suite in SUITES:
        assert get_records(suite), suite


def test_unknown_suite():
    with pytest.raises(DomainError):
        get_records("nope")


def test_run_small_suite_passes(ctx50):
    rep = run_suite("ramanujan-classical", ctx50)
    assert rep.all_pass
    assert rep.summary["total"] == 4
    for row in rep.rows:
        assert mpf(row["abs_residual"]) < mpf(10) ** -45


def test_report_json_round_trip(ctx50):
    rep = run_suite("h2-variants", ctx50)
    blob = json.loads(rep.to_json())
    assert blob["summary"]["passed"] == 4
    for row in blob["identities"]:
        # residual exponents survive the round trip as decimal strings
        assert mpf(row["abs_residual"]) < mpf(10) ** -40
        assert isinstance(row["lhs"], str) and isinstance(row["rhs"], str)


def test_report_text_format(ctx50):
    rep = run_suite("ramanujan-classical", ctx50)
    text = rep.to_text()
    assert "rama4" in text
    assert "4/4 passed" in text


def test_empty_report_shape():
    from modzeta.verify.runner import Report
    rep = Report(suite="x", digits=50, seed=0, rows=[])
    assert rep.all_pass
    assert rep.summary["total"] == 0


def test_parallel_matches_serial(ctx50):
    serial = run_suite("sun-h2", ctx50, jobs=1)
    parallel = run_suite("sun-h2", ctx50, jobs=2)
    assert [r["id"] for r in serial.rows] == [r["id"] for r in parallel.rows]
    for a, b in zip(serial.rows, parallel.rows):
        assert a["lhs"] == b["lhs"]
        assert a["pass"] and b["pass"]


def test_seeded_registry_reproducible():
    a = [r.id for r in get_records("sum-rules", seed=123)]
    b = [r.id for r in get_records("sum-rules", seed=123)]
    assert a == b


def test_residual_monotonicity_in_digits():
    # doubling digits must not increase any residual's leading exponent
    lo = run_suite("ramanujan-classical", PrecisionCtx(25))
    hi = run_suite("ramanujan-classical", PrecisionCtx(50))
    for a, b in zip(lo.rows, hi.rows):
        ra, rb = mpf(a["abs_residual"]), mpf(b["abs_residual"])
        assert rb <= ra * mpf(10) ** 2 + mpf(10) ** -46


def test_q_ratios_requires_admissible(ctx30):
    with pytest.raises(DomainError):
        q_ratios(mp.mpc("0.3", "1.0"), ctx30)
    with pytest.raises(DomainError):
        q_ratios(mp.mpc("0.5", "0.6"), ctx30)


def test_q_ratios_independent_sides(ctx40):
    out = q_ratios(mp.mpc(0, "1.3"), ctx40)
    with ctx40.working():
        assert abs(out["q1_lhs"] - out["q1_rhs"]) < ctx40.tolerance()
        assert abs(out["q2_lhs"] - out["q2_rhs"]) < ctx40.tolerance()


def test_s_t_u_values(ctx40):
    from fractions import Fraction
    with ctx40.working():
        z = mp.sqrt(3) * mp.mpc(0, 1) / 2
        assert abs(s_r(z, Fraction(1, 16), ctx40)
                   - 11 * mp.pi ** 2 / 96) < ctx40.tolerance()
        assert abs(t_r(z, Fraction(1, 16), ctx40) - mp.pi / 36) < ctx40.tolerance()
        z3 = mp.zeta(3)
        assert abs(u_check(z, Fraction(1, 64), ctx40)
                   - 25 * z3 / (24 * mp.pi)) < ctx40.tolerance()


def test_boundary_records_flagged():
    recs = {r.id: r for r in get_records("all", seed=DEFAULT_SEED)}
    assert recs["rama1"].boundary
    assert recs["sun1"].boundary
    assert not recs["rama4"].boundary
    assert recs["rama1"].tol_exponent(50) == 30
    assert recs["rama4"].tol_exponent(50) == 45
