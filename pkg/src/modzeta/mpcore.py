"""Precision contexts, fundamental constants, and the Euler-Maclaurin zeta engine.

Every public operation in this package takes a :class:`PrecisionCtx` and
returns values accurate to at least ``ctx.digits`` decimal digits.  Internally
all arithmetic runs at ``digits + guard`` decimal digits of working precision,
and every infinite series or product is truncated only once a stated tail
bound (geometric, polynomial-geometric, or monotone-alternating) certifies the
remainder below ``10**-(digits+guard)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp
from mpmath import mpc, mpf

__all__ = [
    "DomainError",
    "MPComplex",
    "MPReal",
    "PrecisionCtx",
    "bernoulli",
    "const_catalan",
    "const_euler_gamma",
    "const_pi",
    "const_zeta",
    "ensure_finite",
    "hurwitz_zeta_raw",
    "tail_poly_geom",
]

MPReal = mpf
MPComplex = mpc

BERNOULLI_CAP = 512


class DomainError(ValueError):
    """An argument violated an operation's stated precondition."""


@dataclass(frozen=True)
class PrecisionCtx:
    """Requested decimal digits plus guard-digit policy.

    ``digits`` is what callers may rely on; ``guard`` extra digits absorb
    rounding across composite expressions.  Working precision is
    ``digits + guard`` decimal digits (converted to binary by mpmath).
    """

    digits: int = 50
    guard: int = 15

    def __post_init__(self) -> None:
        if self.digits < 10:
            raise DomainError("digits must be >= 10, got %r" % (self.digits,))
        if self.guard < 0:
            raise DomainError("guard must be >= 0, got %r" % (self.guard,))

    @property
    def workdps(self) -> int:
        return self.digits + self.guard

    def working(self):
        """Context manager switching mpmath to this context's working precision."""
        return mp.workdps(self.workdps)

    def tiny(self) -> mpf:
        """Series truncation threshold: 10**-(digits+guard)."""
        return mpf(10) ** (-self.workdps)

    def tolerance(self) -> mpf:
        """Default residual tolerance for identity checks: 10**-(digits-5)."""
        return mpf(10) ** (-(self.digits - 5))

    def to_str(self, x) -> str:
        """Decimal string of ``x`` at the requested number of digits."""
        with self.working():
            return mp.nstr(x, self.digits, strip_zeros=False)


def ensure_finite(x):
    """Reject NaN/infinite results; those indicate a domain violation upstream."""
    if isinstance(x, mpc):
        if not (mp.isfinite(x.real) and mp.isfinite(x.imag)):
            raise DomainError("non-finite complex value produced")
        return x
    if not mp.isfinite(x):
        raise DomainError("non-finite value produced")
    return x


def tail_poly_geom(xabs: mpf, n_last: int, deg: int) -> mpf:
    """Safe overestimate of sum_{n>n_last} n^deg * xabs^n for 0 <= xabs < 1.

    Uses n^deg <= (n_last+1)^deg * deg! * C(j+deg, deg) for n = n_last+1+j,
    giving a closed geometric-series bound with a crude deg! <= 6^deg factor.
    """
    if xabs >= 1:
        raise DomainError("tail bound requires |x| < 1")
    bound = mpf(n_last + 1) ** deg * xabs ** (n_last + 1) / (1 - xabs) ** (deg + 1)
    return bound * (6 ** deg if deg else 1)


# ---------------------------------------------------------------------------
# Fundamental constants
# ---------------------------------------------------------------------------

def const_pi(ctx: PrecisionCtx) -> mpf:
    """pi at working precision."""
    with ctx.working():
        return +mp.pi


def const_catalan(ctx: PrecisionCtx) -> mpf:
    """Catalan's constant G = sum (-1)^n/(2n+1)^2."""
    with ctx.working():
        return +mp.catalan


def const_euler_gamma(ctx: PrecisionCtx) -> mpf:
    """Euler-Mascheroni constant gamma_0."""
    with ctx.working():
        return +mp.euler


def const_zeta(n: int, ctx: PrecisionCtx) -> mpf:
    """Riemann zeta at an integer point n >= 2, by Euler-Maclaurin."""
    if int(n) != n or n < 2:
        raise DomainError("const_zeta requires an integer n >= 2, got %r" % (n,))
    with ctx.working():
        return hurwitz_zeta_raw(mpf(int(n)), mpf(1))


# ---------------------------------------------------------------------------
# Bernoulli numbers (exact rationals, via tangent numbers)
# ---------------------------------------------------------------------------

_tangent_cache: list[int] = []


def _tangent_numbers(m: int) -> list[int]:
    # Knuth-Buckholtz triangle; integer-only, cached incrementally.
    global _tangent_cache
    if len(_tangent_cache) >= m:
        return _tangent_cache
    t = [0] * (m + 1)
    t[1] = 1
    for k in range(2, m + 1):
        t[k] = (k - 1) * t[k - 1]
    for k in range(2, m + 1):
        for j in range(k, m + 1):
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j]
    _tangent_cache = t[1:]
    return _tangent_cache


def bernoulli(n: int, cap: int = BERNOULLI_CAP) -> Fraction:
    """Bernoulli number B_n as an exact rational, for even n >= 0 (and n=1)."""
    if int(n) != n or n < 0:
        raise DomainError("bernoulli requires an integer n >= 0")
    if n > cap:
        raise DomainError("bernoulli cap exceeded: n=%d > %d" % (n, cap))
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    half = n // 2
    t = _tangent_numbers(half)[half - 1]
    sign = 1 if half % 2 == 1 else -1
    return Fraction(sign * n * t, (4 ** half) * (4 ** half - 1))


# ---------------------------------------------------------------------------
# Hurwitz zeta by Euler-Maclaurin (the engine behind const_zeta and L_d)
# ---------------------------------------------------------------------------

def hurwitz_zeta_raw(s: mpf, a: mpf) -> mpf:
    """zeta(s, a) for real s > 1, a > 0, at the current mpmath precision.

    Euler-Maclaurin with exact Bernoulli numbers; the correction series is
    truncated once a term falls below the working threshold, and the classic
    remainder bound (a constant multiple of the first omitted term for real
    s > 0) keeps the result within guard digits.
    """
    s = mpf(s)
    a = mpf(a)
    if not s > 1:
        raise DomainError("hurwitz zeta requires s > 1")
    if not a > 0:
        raise DomainError("hurwitz zeta requires a > 0")
    prec_goal = mpf(10) ** (-(mp.mp.dps + 2))
    n_direct = max(10, int(0.6 * mp.mp.dps) + 2)
    while True:
        acc = mpf(0)
        for k in range(n_direct):
            acc += (a + k) ** (-s)
        big = a + n_direct
        acc += big ** (1 - s) / (s - 1)
        acc += big ** (-s) / 2
        # Correction terms: B_{2j}/(2j)! * (s)_{2j-1} * big^(-s-2j+1)
        rising = s  # (s)_1
        fact = mpf(2)  # (2j)! at j=1
        scale = big ** (-s - 1)
        big2 = big * big
        prev = mp.inf
        ok = False
        for j in range(1, BERNOULLI_CAP // 2):
            b2j = bernoulli(2 * j)
            term = mpf(b2j.numerator) / b2j.denominator / fact * rising * scale
            acc += term
            at = abs(term)
            if at < prec_goal * max(mpf(1), abs(acc)):
                ok = True
                break
            if at > prev:
                break  # asymptotic divergence reached before target: enlarge M
            prev = at
            rising *= (s + 2 * j - 1) * (s + 2 * j)
            fact *= (2 * j + 1) * (2 * j + 2)
            scale /= big2
        if ok:
            return ensure_finite(acc)
        n_direct = int(n_direct * 1.8) + 4
