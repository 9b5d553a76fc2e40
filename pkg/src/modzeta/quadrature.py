"""Tanh-sinh quadrature and the K-product integral representations.

The double-exponential rule is the oracle for the variation-of-parameters
integral representations (Lemmas on harmonic-weighted series) and for the
zeta(5) / zeta(7) / L_{-4}(4) integral identities.  It is chosen over
Gauss-Legendre because K(sqrt(1-t)) carries a logarithmic singularity at the
endpoint, which double-exponential nodes absorb without splitting.

Nodes are generated as (delta, weight) pairs with delta the distance from the
interval endpoint (1 - |x| computed stably), so integrands may be evaluated
accurately arbitrarily close to a singular endpoint.  Straight complex paths
are supported through the same affine map.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp
from mpmath import mpc, mpf

from .mpcore import DomainError, PrecisionCtx, const_catalan, const_zeta, ensure_finite
from .series import ell_k, ell_k_comp

__all__ = [
    "QuadResult",
    "h3mix2_tail_integral",
    "lemma_integral",
    "lminus4_4_integral",
    "tanh_sinh",
    "zeta5_integral",
    "zeta7_integral",
]

MAX_LEVEL = 12


@dataclass(frozen=True)
class QuadResult:
    value: object  # mpf or mpc
    err_estimate: mpf
    levels_used: int
    converged: bool


_node_cache: dict = {}


def _tmax(dps: int) -> mpf:
    return mp.log(2 * (dps + 20) * mp.log(10) / mp.pi) + mpf("0.5")


def _nodes(level: int, dps: int):
    """(delta, weight) pairs for refinement level ``level`` at ``dps`` digits.

    Level 0 holds all integer multiples of h=1 (including t=0); level L > 0
    holds the odd multiples of h = 2^-L.  delta = 1 - tanh((pi/2) sinh t).
    """
    key = (dps, level)
    hit = _node_cache.get(key)
    if hit is not None:
        return hit
    with mp.workdps(dps + 10):
        tmax = _tmax(dps)
        h = mpf(1) / (1 << level)
        out = []
        k = 0 if level == 0 else 1
        step = 1 if level == 0 else 2
        while True:
            t = k * h
            if t > tmax:
                break
            u = mp.pi / 2 * mp.sinh(t)
            delta = 2 / (mp.exp(2 * u) + 1)
            w = mp.pi / 2 * mp.cosh(t) / mp.cosh(u) ** 2
            out.append((delta, w))
            k += step
    _node_cache[key] = out
    return out


def tanh_sinh(f, a, b, ctx: PrecisionCtx, max_level: int = MAX_LEVEL) -> QuadResult:
    """Integrate f over the straight segment [a, b] by tanh-sinh doubling.

    ``f`` is called with points a + (b-a)*delta/2 and b - (b-a)*delta/2, so
    endpoint distances remain accurate down to ~10^(-1.5*dps); integrable
    endpoint singularities (logarithmic or algebraic) are fine.  Refinement
    stops once two successive levels agree to the working tolerance, or at
    ``max_level`` with ``converged=False``.
    """
    with ctx.working():
        a = mpc(a)
        b = mpc(b)
        scale = (b - a) / 2
        if scale == 0:
            return QuadResult(mpf(0), mpf(0), 0, True)
        target = mpf(10) ** (-(ctx.workdps - 8))

        def eval_nodes(nodes):
            tot = mpc(0)
            for delta, w in nodes:
                tot += w * f(a + scale * delta)
                if delta != 1:  # the t=0 node sits at the midpoint, count once
                    tot += w * f(b - scale * delta)
            return tot

        prev = eval_nodes(_nodes(0, ctx.workdps))  # h = 1 at level 0
        err = mp.inf
        level = 0
        converged = False
        for level in range(1, max_level + 1):
            h = mpf(1) / (1 << level)
            s_new = prev / 2 + h * eval_nodes(_nodes(level, ctx.workdps))
            err = abs(s_new - prev)
            prev = s_new
            if level >= 3 and err < target * max(mpf(1), abs(prev)):
                converged = True
                break
        val = ensure_finite(prev * scale)
        if isinstance(val, mpc) and val.imag == 0:
            val = val.real
        return QuadResult(val, err * abs(scale), level, converged)


# ---------------------------------------------------------------------------
# Lemma integral representations (quadrature side of the series identities)
# ---------------------------------------------------------------------------

_LEMMAS = ("NU2", "EPS2", "H3INT1", "H3INT2")


def _ksq_minus_quarter_pi_sq(s, ctx: PrecisionCtx):
    """K(sqrt(s))^2 - (pi/2)^2, stable for small |s| via the squared 2F1 series."""
    if abs(s) > mpf("1e-6"):
        k = ell_k(s, ctx)
        return k * k - mp.pi ** 2 / 4
    # (2K/pi)^2 = (sum a_k s^k)^2 with a_k = ((1/2)_k / k!)^2
    nterms = 14
    a = [mpf(1)]
    for k in range(1, nterms):
        a.append(a[-1] * (mpf(2 * k - 1) / (2 * k)) ** 2)
    acc = mpc(0)
    sk = mpc(1)
    for k in range(1, nterms):
        sk *= s
        b_k = mp.fsum(a[j] * a[k - j] for j in range(k + 1))
        acc += b_k * sk
    return mp.pi ** 2 / 4 * acc


def lemma_integral(which: str, t, ctx: PrecisionCtx) -> mpc:
    """Full right-hand side of the named integral representation at t.

    NU2 / EPS2 are the weight-2 harmonic representations, H3INT1 / H3INT2 the
    weight-3 ones; EPS2 includes its non-integral trailing terms (with
    Catalan's constant).  Paths are straight segments from the stated base
    point (0 or 1/2) to t.
    """
    if which not in _LEMMAS:
        raise DomainError("unknown lemma integral %r" % (which,))
    with ctx.working():
        t = mpc(t)
        if t == 0 and which != "EPS2":
            return mpc(0)  # empty range; the harmonic weights vanish at k=0
        kt = ell_k(t, ctx)
        k1t = ell_k_comp(t, ctx)

        if which == "NU2":
            def f(s):
                ks = ell_k(s, ctx)
                return ks * (ell_k_comp(s, ctx) * kt - ks * k1t)
            res = tanh_sinh(f, mpf(0), t, ctx)
            return ensure_finite((2 / mp.pi) ** 3 * kt * res.value)

        if which == "EPS2":
            def f(s):
                ks = ell_k(s, ctx)
                return ks * (ell_k_comp(s, ctx) * kt - ks * k1t) / (s * (1 - s))
            res = tanh_sinh(f, mpf(1) / 2, t, ctx)
            g = const_catalan(ctx)
            return ensure_finite((2 / mp.pi) ** 3 * kt * res.value
                                 - kt ** 2 / 3 - k1t ** 2
                                 + 16 * kt * k1t * g / mp.pi ** 2)

        if which == "H3INT1":
            def f(s):
                ks = ell_k(s, ctx)
                return (1 - 2 * s) * ks ** 2 * (ell_k_comp(s, ctx) * kt - ks * k1t) ** 2
            res = tanh_sinh(f, mpf(0), t, ctx)
            return ensure_finite((2 / mp.pi) ** 4 * res.value)

        def f(s):
            ks = ell_k(s, ctx)
            bracket = ell_k_comp(s, ctx) * kt - ks * k1t
            return (2 * (1 - 2 * s) / (s * (1 - s))
                    * _ksq_minus_quarter_pi_sq(s, ctx) * bracket ** 2)
        res = tanh_sinh(f, mpf(0), t, ctx)
        return ensure_finite((2 / mp.pi) ** 4 * res.value)


def h3mix2_tail_integral(t, ctx: PrecisionCtx) -> mpc:
    """-(2/pi)^2 * int_t^oo 4(1-2s)/(s(1-s)) [K(sqrt(1-s))K(sqrt(t)) - K(sqrt(s))K(sqrt(1-t))]^2 ds.

    Taken along the horizontal path Im s = Im t (the integrand is analytic off
    the real rays s <= 0 and s >= 1), with the half-line mapped to [0,1) by
    s = t + v/(1-v); the leftover v=1 endpoint carries only a log^2 blowup.
    """
    with ctx.working():
        t = mpc(t)
        kt = ell_k(t, ctx)
        k1t = ell_k_comp(t, ctx)

        def f(u):
            # u -> s = t + (1-u)/u maps (0,1] onto [t, oo) with the far end
            # at u = 0, where mpf points keep full relative accuracy
            s = t + (1 - u) / u
            ks = ell_k(s, ctx)
            bracket = ell_k_comp(s, ctx) * kt - ks * k1t
            return 4 * (1 - 2 * s) / (s * (1 - s)) * bracket ** 2 / u ** 2
        res = tanh_sinh(f, mpf(0), mpf(1), ctx)
        return ensure_finite(-(2 / mp.pi) ** 2 * res.value)


# ---------------------------------------------------------------------------
# Integral identities for zeta(5), zeta(7), L_{-4}(4)
# ---------------------------------------------------------------------------

def zeta5_integral(ctx: PrecisionCtx) -> QuadResult:
    """zeta(5) as (8/93) * int_0^1 (1-2t) K(sqrt(1-t))^4 dt."""
    with ctx.working():
        def f(t):
            return (1 - 2 * t) * ell_k_comp(t, ctx) ** 4
        res = tanh_sinh(f, mpf(0), mpf(1), ctx)
        return QuadResult(ensure_finite(mpf(8) / 93 * res.value),
                          res.err_estimate, res.levels_used, res.converged)


def zeta7_integral(ctx: PrecisionCtx) -> QuadResult:
    """zeta(7) as (32/5715) * int_0^1 [2-17t(1-t)] K(sqrt(1-t))^6 dt."""
    with ctx.working():
        def f(t):
            return (2 - 17 * t * (1 - t)) * ell_k_comp(t, ctx) ** 6
        res = tanh_sinh(f, mpf(0), mpf(1), ctx)
        return QuadResult(ensure_finite(mpf(32) / 5715 * res.value),
                          res.err_estimate, res.levels_used, res.converged)


def lminus4_4_integral(ctx: PrecisionCtx) -> QuadResult:
    """L_{-4}(4) implied by its K^6 integral identity.

    105 L_{-4}(4) / (136 pi^4) = 200025 zeta(7)/(2176 pi^7)
        - (70/(136 pi^7)) int_0^{1/2} [2-17t(1-t)] K(sqrt(t))^6
                                       {(K(sqrt(1-t))/K(sqrt(t)))^2 - 1}^3 dt.
    The integrand's bracket vanishes cubically at t = 1/2, so the endpoint is
    regular; the t -> 0 end has only log^6 growth.
    """
    with ctx.working():
        def f(t):
            kt = ell_k(t, ctx)
            ratio2 = (ell_k_comp(t, ctx) / kt) ** 2 - 1
            return (2 - 17 * t * (1 - t)) * kt ** 6 * ratio2 ** 3
        res = tanh_sinh(f, mpf(0), mpf(1) / 2, ctx)
        z7 = const_zeta(7, ctx)
        rhs = (mpf(200025) * z7 / (2176 * mp.pi ** 7)
               - mpf(70) / (136 * mp.pi ** 7) * res.value)
        val = rhs * 136 * mp.pi ** 4 / 105
        return QuadResult(ensure_finite(val), res.err_estimate,
                          res.levels_used, res.converged)
