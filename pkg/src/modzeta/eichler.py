"""Eichler integrals of weights 4 and 6 and their z-derivatives.

Production path is termwise differentiation of the Lambert-Ramanujan series

    E4-integral(z) = (60 i / pi^3) * sum_{n>=1} q^n / (n^3 (1-q^n)),
    E6-integral(z) = (378 i / pi^5) * sum_{n>=1} q^n / (n^5 (1-q^n)),

with q = exp(2*pi*i*z); each derivative in z multiplies a term by 2*pi*i*n and
turns the rational kernel in q^n into the next one in the chain
u/(1-u) -> u/(1-u)^2 -> u(1+u)/(1-u)^3 -> u(1+4u+u^2)/(1-u)^4.
Finite differences are deliberately not used here (they live in the tests).
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp
from mpmath import mpc, mpf

from .mpcore import DomainError, PrecisionCtx, ensure_finite
from .modular import UhpPoint, _as_z

__all__ = ["EichlerValue", "eichler4", "eichler6"]


@dataclass(frozen=True)
class EichlerValue:
    family: str  # "E4" or "E6"
    order: int
    at: mpc
    value: mpc


def _lambert_chain(q: mpc, weight: int, order: int, tiny: mpf) -> mpc:
    """sum over n of n^(order-weight+1) * K_order(q^n) at full working precision.

    K_0(u) = u/(1-u), K_1(u) = u/(1-u)^2, K_2(u) = u(1+u)/(1-u)^3,
    K_3(u) = u(1+4u+u^2)/(1-u)^4; the n-exponent is -(weight-1)+order.
    """
    qa = abs(q)
    p = order - (weight - 1)  # exponent of n in each term
    acc = mpc(0)
    qn = mpc(1)
    n = 0
    # crude kernel bound for |u| <= |q|: |K(u)| <= 6|u|/(1-|q|)^4
    kb = 6 / (1 - qa) ** 4
    while True:
        n += 1
        qn *= q
        u = qn
        if order == 0:
            ker = u / (1 - u)
        elif order == 1:
            ker = u / (1 - u) ** 2
        elif order == 2:
            ker = u * (1 + u) / (1 - u) ** 3
        else:
            ker = u * (1 + 4 * u + u * u) / (1 - u) ** 4
        acc += mpf(n) ** p * ker
        # tail: sum_{m>n} m^p |q|^m * kb; p <= 0 here beyond order-weight cases
        if mpf(max(n + 1, 1)) ** max(p, 0) * qa ** (n + 1) / (1 - qa) * kb < tiny:
            break
    return acc


_E4_PREF = {0: lambda: mpc(0, 60) / mp.pi ** 3,
            1: lambda: mpf(-120) / mp.pi ** 2,
            2: lambda: mpc(0, -240) / mp.pi}
_E6_PREF = {0: lambda: mpc(0, 378) / mp.pi ** 5,
            1: lambda: mpf(-756) / mp.pi ** 4,
            2: lambda: mpc(0, -1512) / mp.pi ** 3,
            3: lambda: mpf(3024) / mp.pi ** 2}

_cache: dict = {}


def _eichler(z, weight: int, order: int, ctx: PrecisionCtx) -> mpc:
    z = _as_z(z)
    key = (weight, order, z, ctx.workdps)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    with ctx.working():
        q = mp.exp(2j * mp.pi * z)
        s = _lambert_chain(q, weight, order, ctx.tiny())
        pref = (_E4_PREF if weight == 4 else _E6_PREF)[order]()
        val = ensure_finite(pref * s)
    if len(_cache) > 4096:
        _cache.clear()
    _cache[key] = val
    return val


def eichler4(z, order: int, ctx: PrecisionCtx) -> mpc:
    """Order-th z-derivative of the weight-4 Eichler integral (order 0..2)."""
    if order not in (0, 1, 2):
        raise DomainError("eichler4 order must be 0, 1 or 2")
    return _eichler(z, 4, order, ctx)


def eichler6(z, order: int, ctx: PrecisionCtx) -> mpc:
    """Order-th z-derivative of the weight-6 Eichler integral (order 0..3)."""
    if order not in (0, 1, 2, 3):
        raise DomainError("eichler6 order must be 0, 1, 2 or 3")
    return _eichler(z, 6, order, ctx)
