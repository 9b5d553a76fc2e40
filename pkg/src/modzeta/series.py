"""Central-binomial harmonic series, elliptic integrals, hyperbolic Lambert
sums, elliptic polylogarithms, and alternating-series acceleration.

Summation strategy
------------------
Interior rates (|64 x| < 1 for the cubed family, |16 x| < 1 for the squared
family) are summed directly with incremental binomial/harmonic updates and a
geometric tail certificate.  Boundary rates (|64 x| = 1, necessarily
alternating) go through Cohen-Rodriguez Villegas-Zagier acceleration with
N = ceil(1.4 * digits) terms and heuristic error ~ (3+sqrt(8))^-N; direct
partial sums of those series decay like k^(-1/2) and are hopeless at high
precision.

Harmonic weights are kept as running working-precision accumulators updated
once per index; binomial cubes are folded into the running term so nothing
larger than an mpf exponent ever materializes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp
from mpmath import mpc, mpf

from .modular import _as_z
from .mpcore import DomainError, PrecisionCtx, const_zeta, ensure_finite

__all__ = [
    "HypKernel",
    "LinearFactor",
    "W_ONE",
    "WeightSpec",
    "binom2_series",
    "binom3_series",
    "cvz_alt_sum",
    "ell_k",
    "ell_k_comp",
    "eli",
    "gamma_one_plus",
    "hyp_lambert",
    "inv_binom2_series",
    "legendre_dnu2",
    "legendre_p_def",
]


# ---------------------------------------------------------------------------
# Weights and linear factors
# ---------------------------------------------------------------------------

_BASES = (
    "ONE", "H1_K", "H1_2K", "H2_K", "H2_2K", "H3_K", "H3_2K",
    "INVSQ_2K1", "H2_2K_TIMES_DH1", "H2_K_TIMES_DH1", "H3MIX",
)


@dataclass(frozen=True)
class LinearFactor:
    """Multiplies term k by a*k + b."""

    a: object = 0
    b: object = 1


@dataclass(frozen=True)
class WeightSpec:
    """A rational linear combination of harmonic-number bases.

    Each item is (coefficient, basis) with basis one of: ONE, H1_K, H1_2K,
    H2_K, H2_2K, H3_K, H3_2K, INVSQ_2K1 = 1/(2k+1)^2,
    H2_2K_TIMES_DH1 = H2_{2k}(H_{2k}-H_k), H2_K_TIMES_DH1 = H2_k(H_{2k}-H_k),
    H3MIX = H3_k - 3 H2_k (H_{2k}-H_k).
    """

    terms: tuple

    def __post_init__(self) -> None:
        for _, basis in self.terms:
            if basis not in _BASES:
                raise DomainError("unknown weight basis %r" % (basis,))

    @classmethod
    def combo(cls, coeffs: dict) -> "WeightSpec":
        return cls(tuple((Fraction(c), b) for b, c in coeffs.items()))

    @classmethod
    def one(cls) -> "WeightSpec":
        return cls.combo({"ONE": 1})


W_ONE = WeightSpec.one()


class _Harmonics:
    """Running H_k, H_{2k}, H^(2), H^(3) accumulators, updated in O(1) per k."""

    __slots__ = ("h1k", "h12k", "h2k", "h22k", "h3k", "h32k", "k")

    def __init__(self) -> None:
        self.k = 0
        self.h1k = mpf(0)
        self.h12k = mpf(0)
        self.h2k = mpf(0)
        self.h22k = mpf(0)
        self.h3k = mpf(0)
        self.h32k = mpf(0)

    def advance(self) -> None:
        # move from index k to k+1
        self.k += 1
        k = mpf(self.k)
        self.h1k += 1 / k
        self.h2k += 1 / k ** 2
        self.h3k += 1 / k ** 3
        a, b = mpf(2 * self.k - 1), mpf(2 * self.k)
        self.h12k += 1 / a + 1 / b
        self.h22k += 1 / a ** 2 + 1 / b ** 2
        self.h32k += 1 / a ** 3 + 1 / b ** 3

    def weight(self, spec: WeightSpec):
        k = self.k
        total = mpf(0)
        for coeff, basis in spec.terms:
            if basis == "ONE":
                v = mpf(1)
            elif basis == "H1_K":
                v = self.h1k
            elif basis == "H1_2K":
                v = self.h12k
            elif basis == "H2_K":
                v = self.h2k
            elif basis == "H2_2K":
                v = self.h22k
            elif basis == "H3_K":
                v = self.h3k
            elif basis == "H3_2K":
                v = self.h32k
            elif basis == "INVSQ_2K1":
                v = 1 / mpf(2 * k + 1) ** 2
            elif basis == "H2_2K_TIMES_DH1":
                v = self.h22k * (self.h12k - self.h1k)
            elif basis == "H2_K_TIMES_DH1":
                v = self.h2k * (self.h12k - self.h1k)
            else:  # H3MIX
                v = self.h3k - 3 * self.h2k * (self.h12k - self.h1k)
            total += (mpf(coeff.numerator) / coeff.denominator) * v
        return total


def _weight_growth_guard(spec: WeightSpec, k: int) -> mpf:
    # Relative growth of any supported weight from k to k+1 is at most
    # 1 + 2/k for k >= 2 (harmonic increments), squared for the products.
    return (1 + mpf(2) / max(k, 2)) ** 2


# ---------------------------------------------------------------------------
# CVZ acceleration
# ---------------------------------------------------------------------------

def _cvz_core(a: list, prec_dummy=None) -> mpf:
    """Cohen-Rodriguez Villegas-Zagier sum of sum_k (-1)^k a_k, a_k >= 0."""
    n = len(a)
    d = (3 + 2 * mp.sqrt(2)) ** n
    d = (d + 1 / d) / 2
    b = mpf(-1)
    c = -d
    s = mpf(0)
    for k in range(n):
        c = b - c
        s += c * a[k]
        b *= 2 * (k + n) * (k - n) / mpf((2 * k + 1) * (k + 1))
    return s / d


def cvz_alt_sum(terms, ctx: PrecisionCtx) -> mpf:
    """Accelerated limit of an eventually-alternating series from its terms.

    The leading non-alternating burn-in (sign changes not yet settled) is
    summed directly; the alternating tail goes through CVZ with N equal to
    the number of remaining terms.  Heuristic error ~ 5.83^-N.
    """
    with ctx.working():
        terms = [mpf(t) for t in terms]
        while terms and terms[-1] == 0:
            terms.pop()
        n = len(terms)
        if n == 0:
            return mpf(0)
        # find the last index where strict alternation is violated
        start = 0
        for i in range(1, n):
            if terms[i] == 0 or (terms[i - 1] != 0
                                 and mp.sign(terms[i]) == mp.sign(terms[i - 1])):
                start = i + 1
        while start < n and terms[start] == 0:  # zeros sum exactly, keep in head
            start += 1
        tail = terms[start:]
        if len(tail) < 8:
            if start > n // 2:
                raise DomainError("cvz_alt_sum: input not eventually alternating")
            return ensure_finite(mp.fsum(terms))
        head = mp.fsum(terms[:start])
        lead = mp.sign(tail[0])
        return ensure_finite(head + lead * _cvz_core([abs(t) for t in tail]))


# ---------------------------------------------------------------------------
# Binomial series
# ---------------------------------------------------------------------------

def _boundary_kind(scaled: mpc, tiny: mpf):
    """Classify |scaled| (=|64x| or |16x|) vs 1 with ulp slack: in/boundary/out."""
    r = abs(scaled)
    slack = max(tiny * 1000, mpf(10) ** (-(mp.mp.dps - 6)))
    if r < 1 - slack:
        return "in"
    if r <= 1 + slack:
        return "boundary"
    return "out"


def binom3_series(x, factor: LinearFactor, w: WeightSpec, ctx: PrecisionCtx,
                  accelerate: bool = False) -> mpc:
    """sum_{k>=0} C(2k,k)^3 (a k + b) w(k) x^k.

    Interior |64x| < 1: direct summation with geometric tail certificate.
    |64x| = 1 with Re(64x) < 0: requires ``accelerate`` (CVZ); the imaginary
    dust of x (below tolerance by construction on the admissible set) rides
    along unaccelerated.  |64x| = 1 with x > 0 and |64x| > 1 are rejected.
    """
    with ctx.working():
        x = mpc(x)
        a = mpc(factor.a)
        b = mpc(factor.b)
        tiny = ctx.tiny()
        kind = _boundary_kind(64 * x, tiny)
        if kind == "out":
            raise DomainError("binom3_series diverges: |64x| > 1")
        if kind == "boundary":
            if mp.re(64 * x) > 0:
                raise DomainError("binom3_series: non-alternating boundary rate unsupported")
            if not accelerate:
                raise DomainError("binom3_series: |64x| = 1 requires accelerated mode")
            return _binom3_accelerated(x, a, b, w, ctx)

        acc = mpc(0)
        term_base = mpc(1)  # C(2k,k)^3 x^k
        har = _Harmonics()
        k = 0
        r = abs(64 * x)
        while True:
            piece = term_base * (a * k + b) * har.weight(w)
            acc += piece
            # ratio of successive |C^3 x^k| is at most |64x|; weight and the
            # linear factor add at most (1+6/k)-type growth
            if k >= 8:
                grow = r * (1 + mpf(6) / k)
                if grow < 1:
                    bound = (abs(term_base) * 64 * abs(x)
                             * (abs(a) * (k + 1) + abs(b) + abs(a))
                             * (abs(har.weight(w)) + 1) * _weight_growth_guard(w, k))
                    if bound * grow / (1 - grow) + bound < tiny:
                        break
            term_base *= mpf(2 * (2 * k + 1)) ** 3 / mpf(k + 1) ** 3 * x
            har.advance()
            k += 1
            if k > 200 * ctx.workdps:
                raise DomainError("binom3_series failed to converge")
        return ensure_finite(acc)


def _binom3_accelerated(x: mpc, a: mpc, b: mpc, w: WeightSpec,
                        ctx: PrecisionCtx) -> mpc:
    # Boundary rate: split x = xr + i*dust with xr = Re x = -1/64-like.
    # The dust contributes O(dust * N) relative to the head and is kept as an
    # additive complex correction on the first terms only.
    xr = mp.re(x)
    n_cvz = int(mp.ceil(mpf("1.4") * ctx.digits)) + 8
    burn = 12
    total = n_cvz + burn
    terms_r = []
    term_base = mpf(1)
    har = _Harmonics()
    for k in range(total):
        wt = har.weight(w)
        terms_r.append(term_base * (mp.re(a) * k + mp.re(b)) * wt)
        term_base *= mpf(2 * (2 * k + 1)) ** 3 / mpf(k + 1) ** 3 * xr
        har.advance()
    real_part = cvz_alt_sum(terms_r, ctx)
    return ensure_finite(mpc(real_part))


def binom2_series(x, w: WeightSpec, ctx: PrecisionCtx) -> mpc:
    """sum_{k>=0} C(2k,k)^2 w(k) x^k for |16x| < 1."""
    with ctx.working():
        x = mpc(x)
        tiny = ctx.tiny()
        r = abs(16 * x)
        if not r < 1:
            raise DomainError("binom2_series requires |16x| < 1")
        acc = mpc(0)
        term_base = mpc(1)
        har = _Harmonics()
        k = 0
        while True:
            acc += term_base * har.weight(w)
            if k >= 8:
                grow = r * (1 + mpf(6) / k)
                if grow < 1:
                    bound = (abs(term_base) * 16 * abs(x)
                             * (abs(har.weight(w)) + 1) * _weight_growth_guard(w, k))
                    if bound * grow / (1 - grow) + bound < tiny:
                        break
            term_base *= mpf(2 * (2 * k + 1)) ** 2 / mpf(k + 1) ** 2 * x
            har.advance()
            k += 1
            if k > 400 * ctx.workdps:
                raise DomainError("binom2_series failed to converge")
        return ensure_finite(acc)


def inv_binom2_series(t, ctx: PrecisionCtx) -> mpf:
    """sum_{k>=1} (16 t)^k / (k^2 C(2k,k)^2) for t in (0,1)."""
    with ctx.working():
        t = mpf(t)
        if not (0 < t < 1):
            raise DomainError("inv_binom2_series requires t in (0,1)")
        tiny = ctx.tiny()
        acc = mpf(0)
        term = 16 * t / 4  # k=1: (16t)/C(2,1)^2
        k = 1
        while True:
            acc += term / mpf(k) ** 2
            # term_{k+1}/term_k = 16 t (k+1)^2 / (2(2k+1))^2 -> t
            ratio = 16 * t * mpf(k + 1) ** 2 / mpf(2 * (2 * k + 1)) ** 2
            nxt = term * ratio
            if nxt / mpf(k + 1) ** 2 / (1 - max(ratio, t)) < tiny and ratio < 1:
                break
            term = nxt
            k += 1
        return ensure_finite(acc)


# ---------------------------------------------------------------------------
# Complete elliptic integral of the first kind (AGM)
# ---------------------------------------------------------------------------

def _agm_principal(b, ctx: PrecisionCtx) -> mpc:
    # AGM(1, b) with principal square roots; optimal for Re b > 0, and the
    # |a-b| <= |a+b| right-choice rule guards the remaining cases.
    a = mpc(1)
    b = mpc(b)
    tiny = ctx.tiny()
    for _ in range(ctx.workdps + 30):
        if abs(a - b) <= tiny * abs(a):
            break
        a, b = (a + b) / 2, mp.sqrt(a * b)
        if abs(a - b) > abs(a + b):
            b = -b
    return a


def ell_k(t, ctx: PrecisionCtx) -> mpc:
    """K(sqrt(t)) = pi / (2 AGM(1, sqrt(1-t))), principal branches.

    The branch cut sits on the real ray t in [1, inf), which is rejected.
    """
    with ctx.working():
        t = mpc(t)
        if mp.im(t) == 0 and mp.re(t) >= 1:
            raise DomainError("ell_k: t on the branch cut [1, oo)")
        b = mp.sqrt(1 - t)
        if mp.re(b) < 0:
            b = -b
        val = mp.pi / (2 * _agm_principal(b, ctx))
        if mp.im(t) == 0 and mp.re(t) < 1:
            val = mpc(mp.re(val))
        return ensure_finite(val)


def ell_k_comp(t, ctx: PrecisionCtx) -> mpc:
    """K(sqrt(1-t)) = pi / (2 AGM(1, sqrt(t))), stable as t -> 0.

    Use this form whenever the complementary argument 1-t would round to 1;
    the cut is now t on (-oo, 0].
    """
    with ctx.working():
        t = mpc(t)
        if mp.im(t) == 0 and mp.re(t) <= 0:
            raise DomainError("ell_k_comp: t on the branch cut (-oo, 0]")
        val = mp.pi / (2 * _agm_principal(mp.sqrt(t), ctx))
        if mp.im(t) == 0 and mp.re(t) > 0:
            val = mpc(mp.re(val))
        return ensure_finite(val)


# ---------------------------------------------------------------------------
# Deformed Legendre functions
# ---------------------------------------------------------------------------

def gamma_one_plus(eps, ctx: PrecisionCtx) -> mpf:
    """Gamma(1+eps) for |eps| < 1/2, via exp(-gamma0 eps + sum (-1)^k zeta(k) eps^k / k)."""
    with ctx.working():
        eps = mpf(eps) if mp.im(mpc(eps)) == 0 else mpc(eps)
        if abs(eps) >= mpf(1) / 2:
            raise DomainError("gamma_one_plus requires |eps| < 1/2")
        if eps == 0:
            return mpf(1)
        tiny = ctx.tiny()
        acc = -mp.euler * eps
        ek = -eps  # tracks (-eps)^k, so (-1)^k eps^k comes out right
        k = 1
        while True:
            k += 1
            ek *= -eps
            acc += const_zeta(k, ctx) * ek / k
            if 2 * abs(ek) / (k * (1 - abs(eps))) < tiny:
                break
        return ensure_finite(mp.exp(acc))


def legendre_p_def(nu, eps, t, ctx: PrecisionCtx) -> mpc:
    """Associated Legendre P_nu^{-eps}(1-2t) for |eps| < 1/2.

    (1/Gamma(1+eps)) * 2F1(-nu, 1+nu; 1+eps; t) * (t/(1-t))^(eps/2),
    with the 2F1 summed directly (the lemmas' domain keeps |t| < 1).
    """
    with ctx.working():
        nu = mpf(nu)
        eps = mpf(eps)
        t = mpc(t)
        if abs(eps) >= mpf(1) / 2:
            raise DomainError("legendre_p_def requires |eps| < 1/2")
        if abs(t) >= mpf("0.999"):
            raise DomainError("legendre_p_def: |t| too close to 1 for the series")
        tiny = ctx.tiny()
        acc = mpc(0)
        c = mpc(1)
        n = 0
        ta = abs(t)
        while True:
            acc += c
            c *= (-nu + n) * (1 + nu + n) / ((1 + eps + n) * (n + 1)) * t
            n += 1
            # successive ratio tends to |t| from (1 + O(1/n)) above
            if n > 8 and 2 * abs(c) / (1 - min(ta * (1 + mpf(2) / n), mpf("0.9995"))) < tiny:
                break
        f21 = acc
        if eps == 0:
            return ensure_finite(f21)
        pref = mp.power(t / (1 - t), eps / 2)
        return ensure_finite(f21 * pref / gamma_one_plus(eps, ctx))


def legendre_dnu2(t, ctx: PrecisionCtx) -> mpc:
    """d^2/dnu^2 P_nu(1-2t) at nu = -1/2, as its harmonic-weighted series.

    Equals -8 sum_k C(2k,k)^2 [H2_{2k} - (1/4) H2_k] (t/16)^k; the finite
    difference route is an oracle in the tests, not the production path.
    """
    w = WeightSpec.combo({"H2_2K": 1, "H2_K": Fraction(-1, 4)})
    with ctx.working():
        return ensure_finite(-8 * binom2_series(mpc(t) / 16, w, ctx))


# ---------------------------------------------------------------------------
# Hyperbolic Lambert sums
# ---------------------------------------------------------------------------

_KINDS = ("EXPM1", "EXPM1_ALT", "COSH_SQ", "SINH_SQ", "COSH_1",
          "TANH_OVER_COSH_SQ", "COTH_OVER_SINH_SQ", "HALF_ODD_COSH")


@dataclass(frozen=True)
class HypKernel:
    """A hyperbolic summand family.

    parity ALL sums n >= 1 with argument theta_n = 2 n pi z / i and weight
    n^-a; parity ODD sums n >= 0 with theta_n = (2n+1) pi z / i and weight
    (2n+1)^-a.  Writing x = exp(-theta_n), the kernels are rational in x:

        EXPM1               1/(e^theta - 1)          = x/(1-x)
        EXPM1_ALT           same with (-1)^n
        COSH_SQ             1/cosh^2                 = 4x^2/(1+x^2)^2
        SINH_SQ             1/sinh^2                 = 4x^2/(1-x^2)^2
        COSH_1              1/cosh                   = 2x/(1+x^2)
        TANH_OVER_COSH_SQ   tanh/cosh^2              = 4x^2(1-x^2)/(1+x^2)^3
        COTH_OVER_SINH_SQ   coth/sinh^2              = 4x^2(1+x^2)/(1-x^2)^3
        HALF_ODD_COSH       q^(n+1/2)/(1+q^(2n+1))   = x/(1+x^2)   (ODD only)
    """

    kind: str
    parity: str = "ODD"
    a: int = 2

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise DomainError("unknown kernel kind %r" % (self.kind,))
        if self.parity not in ("ODD", "ALL"):
            raise DomainError("kernel parity must be ODD or ALL")
        if self.a < 1:
            raise DomainError("kernel exponent a must be >= 1")


def _kernel_value(kind: str, x: mpc) -> mpc:
    x2 = x * x
    if kind in ("EXPM1", "EXPM1_ALT"):
        return x / (1 - x)
    if kind == "COSH_SQ":
        return 4 * x2 / (1 + x2) ** 2
    if kind == "SINH_SQ":
        return 4 * x2 / (1 - x2) ** 2
    if kind == "COSH_1":
        return 2 * x / (1 + x2)
    if kind == "TANH_OVER_COSH_SQ":
        return 4 * x2 * (1 - x2) / (1 + x2) ** 3
    if kind == "COTH_OVER_SINH_SQ":
        return 4 * x2 * (1 + x2) / (1 - x2) ** 3
    return x / (1 + x2)  # HALF_ODD_COSH


def hyp_lambert(z, kernel: HypKernel, ctx: PrecisionCtx) -> mpc:
    """The designated hyperbolic sum at z, with a geometric tail certificate."""
    z = _as_z(z)
    with ctx.working():
        tiny = ctx.tiny()
        if kernel.parity == "ALL":
            if kernel.kind == "EXPM1_ALT":
                raise DomainError("alternating kernels are supported for ODD parity only")
            step = mp.exp(2j * mp.pi * z)      # x_n = step^n
            x = mpc(1)
            idx = 0
        else:
            half = mp.exp(1j * mp.pi * z)      # x_n = half^(2n+1)
            step = half * half
            x = half / step                    # pre-divide; loop multiplies once
            idx = -1
        sa = abs(step)
        if not sa < 1:
            raise DomainError("hyp_lambert requires Im z > 0")
        acc = mpc(0)
        n = 0
        sign = 1
        while True:
            x *= step
            idx += 1 if kernel.parity == "ALL" else 2
            wt = mpf(idx) ** (-kernel.a)
            val = _kernel_value(kernel.kind, x) * wt
            if kernel.kind == "EXPM1_ALT":
                val *= sign
                sign = -sign
            acc += val
            n += 1
            xa = abs(x)
            if xa < mpf("0.6") and 13 * xa * sa / (1 - sa) < tiny:
                break
            if n > 100 * ctx.workdps:
                raise DomainError("hyp_lambert failed to converge")
        return ensure_finite(acc)


# ---------------------------------------------------------------------------
# Elliptic polylogarithm
# ---------------------------------------------------------------------------

def eli(n: int, m: int, x, y, q, ctx: PrecisionCtx) -> mpc:
    """ELi_{n;m}(x; y; q) = sum_{j>=1} x^j / j^n * Li_m(y q^j).

    Requires |q| < 1 together with |x q| < 1 and |y q| < 1 for absolute
    convergence of the defining double series.
    """
    if int(n) != n or n < 0 or int(m) != m or m < 0:
        raise DomainError("eli requires integer n, m >= 0")
    with ctx.working():
        x = mpc(x)
        y = mpc(y)
        q = mpc(q)
        if not abs(q) < 1:
            raise DomainError("eli requires |q| < 1")
        if not (abs(x * q) < 1 and abs(y * q) < 1):
            raise DomainError("eli requires |xq| < 1 and |yq| < 1")
        if x == 0 or q == 0 or y == 0:
            return mpc(0)
        tiny = ctx.tiny()

        def li_m(w: mpc) -> mpc:
            tot = mpc(0)
            wk = mpc(1)
            k = 0
            wa = abs(w)
            while True:
                k += 1
                wk *= w
                tot += wk / mpf(k) ** m
                if wa ** (k + 1) / (1 - wa) < tiny:
                    return tot

        acc = mpc(0)
        xj = mpc(1)
        qj = mpc(1)
        j = 0
        ra = abs(x * q)
        ya = abs(y)
        while True:
            j += 1
            xj *= x
            qj *= q
            acc += xj / mpf(j) ** n * li_m(y * qj)
            # |Li_m(y q^(j+1))| <= |y| |q|^(j+1)/(1-|yq|)
            if ya * ra ** (j + 1) / ((1 - ra) * (1 - abs(y * q))) < tiny:
                break
        return ensure_finite(acc)
