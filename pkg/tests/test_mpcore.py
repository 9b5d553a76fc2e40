"""Constants, Bernoulli numbers, and the Euler-Maclaurin engine."""

from fractions import Fraction

import mpmath as mp
import pytest
from mpmath import mpf

from modzeta import (DomainError, PrecisionCtx, bernoulli, const_catalan,
                     const_euler_gamma, const_pi, const_zeta)
from modzeta.mpcore import hurwitz_zeta_raw

# 30-digit published value of pi (cross-check for the backend constant)
PI_30 = "3.14159265358979323846264338328"
# Catalan / Euler-Mascheroni reference prefixes (20 digits)
G_20 = "0.91596559417721901505"
GAMMA_20 = "0.57721566490153286061"
# zeta(3) by direct summation with an Euler-Maclaurin tail (frozen oracle)
ZETA3_20 = "1.2020569031595942854"


def close(a, b, exp10):
    return abs(mpf(a) - mpf(b)) < mpf(10) ** exp10


def test_precision_ctx_validation():
    with pytest.raises(DomainError):
        PrecisionCtx(9)
    with pytest.raises(DomainError):
        PrecisionCtx(20, -1)
    assert PrecisionCtx(12).workdps == 27


def test_const_pi_30_digits():
    ctx = PrecisionCtx(30)
    with ctx.working():
        assert close(const_pi(ctx), mpf(PI_30), -29)


def test_const_pi_round_trip():
    ctx = PrecisionCtx(10)
    with ctx.working():
        assert const_pi(ctx) / const_pi(ctx) == 1


def test_zeta_euler_identities():
    ctx = PrecisionCtx(40)
    with ctx.working():
        pi = const_pi(ctx)
        assert close(const_zeta(2, ctx), pi ** 2 / 6, -(ctx.workdps - 3))
        assert close(const_zeta(4, ctx), pi ** 4 / 90, -(ctx.workdps - 3))


def test_zeta3_value():
    ctx = PrecisionCtx(30)
    with ctx.working():
        assert close(const_zeta(3, ctx), mpf(ZETA3_20), -19)
        # independent oracle: mpmath's own zeta implementation
        assert close(const_zeta(3, ctx), mp.zeta(3), -(ctx.workdps - 2))


def test_zeta_domain():
    ctx = PrecisionCtx(20)
    with pytest.raises(DomainError):
        const_zeta(1, ctx)


def test_catalan():
    ctx = PrecisionCtx(30)
    with ctx.working():
        assert close(const_catalan(ctx), mpf(G_20), -19)
        # defining alternating series, brute partial sums + bracket bound
        n = 200000
        partial = mp.fsum(mpf(-1) ** k / (2 * k + 1) ** 2 for k in range(n))
        assert abs(const_catalan(ctx) - partial) < mpf(1) / (2 * n) ** 2


def test_euler_gamma():
    ctx = PrecisionCtx(30)
    with ctx.working():
        g = const_euler_gamma(ctx)
        assert close(g, mpf(GAMMA_20), -19)
        assert close(mp.log(mp.exp(g)), g, -(ctx.workdps - 2))


@pytest.mark.parametrize("n,expect", [
    (0, Fraction(1)),
    (2, Fraction(1, 6)),
    (4, Fraction(-1, 30)),
    (12, Fraction(-691, 2730)),
])
def test_bernoulli_values(n, expect):
    assert bernoulli(n) == expect


def test_bernoulli_recurrence():
    # sum_{k<=n} C(n+1,k) B_k = 0 for n >= 1, the defining recurrence
    from math import comb
    for n in (2, 6, 13, 20):
        acc = sum(Fraction(comb(n + 1, k)) * bernoulli(k) for k in range(n + 1))
        assert acc == 0


def test_bernoulli_cap():
    with pytest.raises(DomainError):
        bernoulli(514)


def test_hurwitz_engine_matches_reference():
    with mp.workdps(45):
        for s, a in ((mpf(2), mpf(1)), (mpf(3), mpf("0.25")), (mpf("2.5"), mpf("0.7"))):
            assert abs(hurwitz_zeta_raw(s, a) - mp.zeta(s, a)) < mpf(10) ** -42


@pytest.mark.parametrize("op", [const_pi, const_catalan, const_euler_gamma,
                                lambda c: const_zeta(3, c)])
def test_precision_monotonicity(op):
    # the 40-digit result truncated to 20 digits equals the 20-digit result
    lo, hi = PrecisionCtx(20, 5), PrecisionCtx(40, 5)
    with hi.working():
        assert abs(op(lo) - op(hi)) < mpf(10) ** -20
