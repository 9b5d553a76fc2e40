"""Series engines: binomial sums, CVZ, AGM, hyperbolic kernels, ELi."""

from fractions import Fraction
from math import comb

import mpmath as mp
import pytest
from mpmath import mpc, mpf

from modzeta import (DomainError, HypKernel, LinearFactor, PrecisionCtx,
                     WeightSpec, binom2_series, binom3_series, cvz_alt_sum,
                     eli, ell_k, ell_k_comp, gamma_one_plus, hyp_lambert,
                     inv_binom2_series, legendre_dnu2, legendre_p_def)
from modzeta.mpcore import const_euler_gamma
from modzeta.series import W_ONE

I = mpc(0, 1)

# K(sqrt(1/2)) frozen from 2F1(1/2,1/2;1;1/2) partial sums (30 digits)
K_HALF_30 = "1.85407467730137191843385034720"
# direct-summation oracle for the inverse-square binomial sum at t=1/2
INV_SQR_HALF_30 = "2.67457640729806918701575056705"

W_H2DIFF = WeightSpec.combo({"H2_2K": 1, "H2_K": Fraction(-1, 4)})


# ---------------------------------------------------------------------------
# binom3_series
# ---------------------------------------------------------------------------

def test_binom3_rama4(ctx50):
    with ctx50.working():
        v = binom3_series(mpf(1) / 4096, LinearFactor(42, 5), W_ONE, ctx50)
        assert abs(v - 16 / mp.pi) < ctx50.tolerance()


def test_binom3_weighted_4096(ctx50):
    with ctx50.working():
        w = WeightSpec.combo({"H2_2K": 1, "H2_K": Fraction(-25, 92)})
        v = binom3_series(mpf(1) / 4096, LinearFactor(42, 5), w, ctx50)
        assert abs(v - 2 * mp.pi / 69) < ctx50.tolerance()


def test_binom3_at_zero(ctx30):
    with ctx30.working():
        assert binom3_series(0, LinearFactor(7, 3), W_ONE, ctx30) == 3
        assert binom3_series(0, LinearFactor(7, 3),
                             WeightSpec.combo({"H2_K": 1}), ctx30) == 0


def test_binom3_boundary_accelerated(ctx50):
    with ctx50.working():
        v = binom3_series(mpf(-1) / 64, LinearFactor(4, 1), W_ONE, ctx50,
                          accelerate=True)
        assert abs(v - 2 / mp.pi) < mpf(10) ** -45


def test_binom3_errors(ctx30):
    with pytest.raises(DomainError):
        binom3_series(mpf("0.02"), LinearFactor(0, 1), W_ONE, ctx30)
    with pytest.raises(DomainError):  # positive boundary is unsupported
        binom3_series(mpf(1) / 64, LinearFactor(0, 1), W_ONE, ctx30, accelerate=True)
    with pytest.raises(DomainError):  # boundary without accelerated mode
        binom3_series(mpf(-1) / 64, LinearFactor(0, 1), W_ONE, ctx30)


def test_binom3_kk_identity(ctx40):
    # sum C^3 (t(1-t)/16)^k = (2K(sqrt t)/pi)^2 at t = 0.3
    with ctx40.working():
        t = mpf("0.3")
        lhs = binom3_series(t * (1 - t) / 16, LinearFactor(0, 1), W_ONE, ctx40)
        assert abs(lhs - (2 * ell_k(t, ctx40) / mp.pi) ** 2) < ctx40.tolerance()


@pytest.mark.parametrize("k", [1, 7, 19])
def test_incremental_terms_match_scratch(k, ctx30):
    # term k built from the incremental binomial/harmonic tracker equals the
    # same term recomputed from scratch factorials and harmonic sums
    from modzeta.series import _Harmonics
    with ctx30.working():
        x = mpf(1) / 300
        w = WeightSpec.combo({"H3_2K": 1, "H2_K": Fraction(-1, 3), "INVSQ_2K1": 2})
        a, b = mpf(3), mpf(2)

        def scratch(j):
            h32k = mp.fsum(mpf(1) / n ** 3 for n in range(1, 2 * j + 1))
            h2k = mp.fsum(mpf(1) / n ** 2 for n in range(1, j + 1))
            wt = h32k - h2k / 3 + 2 / mpf(2 * j + 1) ** 2
            return mpf(comb(2 * j, j)) ** 3 * (a * j + b) * wt * x ** j

        har = _Harmonics()
        term_base = mpf(1)
        for j in range(k):
            term_base *= mpf(2 * (2 * j + 1)) ** 3 / mpf(j + 1) ** 3 * x
            har.advance()
        incremental = term_base * (a * k + b) * har.weight(w)
        assert abs(incremental - scratch(k)) < abs(scratch(k)) * ctx30.tiny() * 100
        # and the summed series agrees with a long scratch partial sum
        full = binom3_series(x, LinearFactor(a, b), w, ctx30)
        partial = mp.fsum(scratch(j) for j in range(60))
        assert abs(full - partial) < abs(scratch(59)) / (1 - 64 * x) + ctx30.tiny()


# ---------------------------------------------------------------------------
# binom2 / inverse-square series
# ---------------------------------------------------------------------------

def test_binom2_trivial(ctx30):
    with ctx30.working():
        assert binom2_series(0, W_ONE, ctx30) == 1


def test_binom2_is_k(ctx40):
    with ctx40.working():
        t = mpf("0.37")
        lhs = binom2_series(t / 16, W_ONE, ctx40)
        assert abs(lhs - 2 * ell_k(t, ctx40) / mp.pi) < ctx40.tolerance()


def test_binom2_divergence(ctx30):
    with pytest.raises(DomainError):
        binom2_series(mpf("0.07"), W_ONE, ctx30)


def test_inv_binom2_leading_term(ctx30):
    with ctx30.working():
        t = mpf(10) ** -12
        v = inv_binom2_series(t, ctx30)
        assert abs(v - 4 * t) < 20 * t ** 2


def test_inv_binom2_frozen_value(ctx30):
    with ctx30.working():
        v = inv_binom2_series(mpf(1) / 2, ctx30)
        assert abs(v - mpf(INV_SQR_HALF_30)) < mpf(10) ** -28
        # independent scratch oracle with exact binomials
        direct = mp.fsum(mpf(8) ** k / (k ** 2 * mpf(comb(2 * k, k)) ** 2)
                         for k in range(1, 120))
        assert abs(v - direct) < mpf(10) ** -28


def test_inv_binom2_domain(ctx30):
    with pytest.raises(DomainError):
        inv_binom2_series(mpf("1.0"), ctx30)


# ---------------------------------------------------------------------------
# CVZ acceleration
# ---------------------------------------------------------------------------

def test_cvz_log2(ctx50):
    with ctx50.working():
        terms = [mpf(-1) ** k / (k + 1) for k in range(80)]
        assert abs(cvz_alt_sum(terms, ctx50) - mp.log(2)) < mpf(10) ** -50


def test_cvz_rama1(ctx50):
    with ctx50.working():
        terms = []
        t = mpf(1)
        for k in range(80):
            terms.append(t * (4 * k + 1))
            t *= mpf(2 * (2 * k + 1)) ** 3 / mpf(k + 1) ** 3 * mpf(-1) / 64
        assert abs(cvz_alt_sum(terms, ctx50) - 2 / mp.pi) < mpf(10) ** -45


def test_cvz_single_term(ctx30):
    with ctx30.working():
        assert cvz_alt_sum([mpf(5), mpf(0), mpf(0)], ctx30) == 5


def test_cvz_burn_in(ctx40):
    # a corrupted head must be summed directly, not fed to the accelerator
    with ctx40.working():
        terms = [mpf(3), mpf(3)] + [mpf(-1) ** k / (k + 1) for k in range(70)]
        assert abs(cvz_alt_sum(terms, ctx40) - (6 + mp.log(2))) < mpf(10) ** -38


def test_cvz_refuses_non_alternating(ctx30):
    with pytest.raises(DomainError):
        cvz_alt_sum([mpf(1) / (k + 1) for k in range(40)], ctx30)


# ---------------------------------------------------------------------------
# elliptic integrals
# ---------------------------------------------------------------------------

def test_ell_k_zero(ctx30):
    with ctx30.working():
        assert abs(ell_k(0, ctx30) - mp.pi / 2) < ctx30.tiny() * 10


def test_ell_k_half_vs_2f1(ctx30):
    with ctx30.working():
        v = ell_k(mpf(1) / 2, ctx30)
        assert abs(v - mpf(K_HALF_30)) < mpf(10) ** -28
        # 2F1 partial-sum oracle
        acc, c = mpf(0), mpf(1)
        for n in range(250):
            acc += c
            c *= (mpf(2 * n + 1) / (2 * n + 2)) ** 2 / 2
        assert abs(v - mp.pi / 2 * acc) < mpf(10) ** -28


def test_ell_k_branch_cut(ctx30):
    with pytest.raises(DomainError):
        ell_k(mpf("1.5"), ctx30)
    with pytest.raises(DomainError):
        ell_k_comp(mpf("-0.5"), ctx30)


def test_ell_k_comp_consistency(ctx40):
    with ctx40.working():
        t = mpf("0.3")
        assert abs(ell_k_comp(t, ctx40) - ell_k(1 - t, ctx40)) < ctx40.tiny() * 100
        tiny_t = mpf(10) ** -30
        # the stable form keeps working where 1-t rounds to 1
        v = ell_k_comp(tiny_t, ctx40)
        assert abs(v - (mp.log(4) - mp.log(mp.sqrt(tiny_t)))) < mpf(10) ** -25


def test_zkratio(ctx40):
    from modzeta import lambda_fn
    with ctx40.working():
        z = mpc("0.21", "1.37")
        lam = lambda_fn(z, ctx40)
        rhs = I * ell_k(1 - lam, ctx40) / ell_k(lam, ctx40)
        assert abs(z - rhs) < ctx40.tolerance()


# ---------------------------------------------------------------------------
# hyperbolic Lambert sums (oracle: direct cosh/sinh partial sums)
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("kind,parity,a", [
    ("EXPM1", "ALL", 3), ("COSH_SQ", "ODD", 2), ("SINH_SQ", "ALL", 2),
    ("COSH_1", "ALL", 2), ("TANH_OVER_COSH_SQ", "ODD", 1),
    ("COTH_OVER_SINH_SQ", "ODD", 1), ("EXPM1_ALT", "ODD", 2),
    ("HALF_ODD_COSH", "ODD", 2),
])
def test_hyp_lambert_against_bruteforce(ctx30, kind, parity, a):
    with ctx30.working():
        z = mpc("0.13", "0.81")
        got = hyp_lambert(z, HypKernel(kind, parity, a), ctx30)

        def summand(idx, wt_idx, sign):
            th = idx * mp.pi * z / I
            if kind == "EXPM1":
                v = 1 / (mp.exp(th) - 1)
            elif kind == "EXPM1_ALT":
                v = sign / (mp.exp(th) - 1)
            elif kind == "COSH_SQ":
                v = 1 / mp.cosh(th) ** 2
            elif kind == "SINH_SQ":
                v = 1 / mp.sinh(th) ** 2
            elif kind == "COSH_1":
                v = 1 / mp.cosh(th)
            elif kind == "TANH_OVER_COSH_SQ":
                v = mp.tanh(th) / mp.cosh(th) ** 2
            elif kind == "COTH_OVER_SINH_SQ":
                v = mp.coth(th) / mp.sinh(th) ** 2
            else:  # HALF_ODD_COSH
                v = 1 / (2 * mp.cosh(th))
            return v / mpf(wt_idx) ** a

        if parity == "ALL":
            brute = mp.fsum(summand(2 * n, n, 1) for n in range(1, 60))
        else:
            brute = mp.fsum(summand(2 * n + 1, 2 * n + 1, (-1) ** n) for n in range(60))
        assert abs(got - brute) < ctx30.tolerance()


def test_hyp_lambert_decay(ctx30):
    with ctx30.working():
        v = hyp_lambert(mpc(0, 60), HypKernel("COSH_SQ", "ODD", 2), ctx30)
        assert abs(v) < mpf(10) ** -100


def test_hyp_lambert_validation(ctx30):
    with pytest.raises(DomainError):
        HypKernel("NOPE", "ODD", 2)
    with pytest.raises(DomainError):
        HypKernel("EXPM1", "EVEN", 2)
    with pytest.raises(DomainError):
        hyp_lambert(I, HypKernel("EXPM1_ALT", "ALL", 2), ctx30)


# ---------------------------------------------------------------------------
# elliptic polylogarithm
# ---------------------------------------------------------------------------

def test_eli_zero_cases(ctx30):
    with ctx30.working():
        assert eli(1, 2, 0, 1, mpf("0.3"), ctx30) == 0
        assert eli(1, 2, 1, 1, 0, ctx30) == 0


def test_eli_lambert_form(ctx40):
    with ctx40.working():
        q = mp.exp(-2 * mp.pi)
        got = eli(0, 2, 1, 1, q, ctx40)
        brute = mp.fsum(q ** k / (k ** 2 * (1 - q ** k)) for k in range(1, 80))
        assert abs(got - brute) < ctx40.tolerance()


def test_eli_domain(ctx30):
    with pytest.raises(DomainError):
        eli(0, 2, 3, 1, mpf("0.5"), ctx30)  # |xq| >= 1
    with pytest.raises(DomainError):
        eli(-1, 2, 1, 1, mpf("0.5"), ctx30)


# ---------------------------------------------------------------------------
# deformed Legendre functions
# ---------------------------------------------------------------------------

def test_legendre_at_one(ctx30):
    with ctx30.working():
        assert abs(legendre_p_def(mpf("0.37"), 0, 0, ctx30) - 1) == 0


def test_legendre_is_k(ctx40):
    with ctx40.working():
        t = mpf("0.2")
        lhs = legendre_p_def(mpf(-1) / 2, 0, t, ctx40)
        assert abs(lhs - 2 * ell_k(t, ctx40) / mp.pi) < ctx40.tolerance()


def test_gamma_one_plus(ctx40):
    with ctx40.working():
        for e in ("0.3", "-0.13", "0.49"):
            assert abs(gamma_one_plus(mpf(e), ctx40)
                       - mp.gamma(1 + mpf(e))) < ctx40.tiny() * 1000


def test_gamma_domain(ctx30):
    with pytest.raises(DomainError):
        gamma_one_plus(mpf("0.5"), ctx30)


def test_legendre_eps_derivative_identity():
    # d/deps P^{+eps}_{-1/2}(1-2t) at eps=0 equals
    # K(sqrt(1-t)) - (2K(sqrt t)/pi)(gamma0 + 2 log 2); the exponent of the
    # implementation's P^{-eps} flips the finite-difference sign
    digits = 40
    ctx = PrecisionCtx(digits)
    ctx2 = PrecisionCtx(2 * digits)
    t = mpf("0.3")
    with ctx2.working():
        h = mpf(10) ** (-(digits // 2))
        fd = (legendre_p_def(mpf(-1) / 2, -h, t, ctx2)
              - legendre_p_def(mpf(-1) / 2, h, t, ctx2)) / (2 * h)
    with ctx.working():
        target = (ell_k_comp(t, ctx) - 2 * ell_k(t, ctx) / mp.pi
                  * (const_euler_gamma(ctx) + 2 * mp.log(2)))
        assert abs(fd - target) < mpf(10) ** (-(digits - 8))


@pytest.mark.parametrize("t", ["0.1", "0.3"])
def test_dnu2_series_vs_finite_difference(t):
    digits = 40
    ctx = PrecisionCtx(digits)
    ctx2 = PrecisionCtx(2 * digits)
    t = mpf(t)
    with ctx2.working():
        h = mpf(10) ** (-(digits // 2))
        fd = (legendre_p_def(mpf(-1) / 2 + h, 0, t, ctx2)
              - 2 * legendre_p_def(mpf(-1) / 2, 0, t, ctx2)
              + legendre_p_def(mpf(-1) / 2 - h, 0, t, ctx2)) / h ** 2
    with ctx.working():
        assert abs(fd - legendre_dnu2(t, ctx)) < mpf(10) ** (-(digits // 2))


@pytest.mark.parametrize("t", ["0.1", "0.3"])
def test_clausen_type_second_nu_derivative(t):
    # the 3F2 of Clausen's type equals P_nu^2, so its second nu-derivative at
    # nu=-1/2 (finite differences) matches -8 x the weighted cubed series
    digits = 40
    ctx = PrecisionCtx(digits)
    ctx2 = PrecisionCtx(2 * digits)
    t = mpf(t)
    with ctx2.working():
        h = mpf(10) ** (-(digits // 2))

        def p2(nu):
            return legendre_p_def(nu, 0, t, ctx2) ** 2
        fd = (p2(mpf(-1) / 2 + h) - 2 * p2(mpf(-1) / 2) + p2(mpf(-1) / 2 - h)) / h ** 2
    with ctx.working():
        series = -8 * binom3_series(t * (1 - t) / 16, LinearFactor(0, 1),
                                    W_H2DIFF, ctx)
        assert abs(fd / 2 - series / 2) < mpf(10) ** (-(digits // 2))


def test_legendre_eps_domain(ctx30):
    with pytest.raises(DomainError):
        legendre_p_def(mpf(-1) / 2, mpf("0.6"), mpf("0.2"), ctx30)


def test_weight_spec_validation():
    with pytest.raises(DomainError):
        WeightSpec(((Fraction(1), "NOT_A_BASIS"),))

def test_binom2_h2_weight_at_half_alpha(ctx40):
    # x = 1/32 is the squared-binomial rate where alpha4 = 1/2 (z = i/2);
    # the weighted ratio must match the hyperbolic-sum representation there
    with ctx40.working():
        z = mpc(0, "0.5")
        den = binom2_series(mpf(1) / 32, W_ONE, ctx40)
        num = binom2_series(mpf(1) / 32, WeightSpec.combo({"H2_K": 1}), ctx40)
        rhs = (2 * hyp_lambert(z, HypKernel("COSH_1", "ALL", 2), ctx40)
               - hyp_lambert(z, HypKernel("COSH_SQ", "ALL", 2), ctx40))
        assert abs(num / den - rhs) < ctx40.tolerance()
