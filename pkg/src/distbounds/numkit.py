"""Exact and floating-point primitives shared by the bound computations.

Primes, exact binomials, binary-entropy rates, ``sum a ln a`` and a robust
one-dimensional positive-root finder for generalized polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import brentq

__all__ = [
    "PrimeWitness",
    "is_prime",
    "next_prime_above",
    "binomial",
    "binom_exponent",
    "find_positive_root",
    "entropy",
    "xlogx",
    "NoPositiveRootError",
]

# Deterministic for every n < 3.3e24, in particular all 64-bit integers.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class NoPositiveRootError(ArithmeticError):
    """Raised when no sign change is found on (0, inf)."""


@dataclass(frozen=True)
class PrimeWitness:
    p: int
    predicate_tag: str

    def __int__(self) -> int:
        return self.p


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test."""
    n = int(n)
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime_above(x: float) -> PrimeWitness:
    """Smallest prime strictly greater than ``x``."""
    if x < 0 or math.isnan(x):
        raise ValueError(f"x must be >= 0, got {x}")
    p = math.floor(x) + 1
    while not is_prime(p):
        p += 1
    return PrimeWitness(p, f"min prime > {x!r}")


def binomial(n: int, k: int) -> int:
    """Exact C(n, k) by the multiplicative recurrence on Python integers."""
    n, k = int(n), int(k)
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if k > n:
        raise ValueError(f"binomial domain error: k={k} > n={n}")
    k = min(k, n - k)
    c = 1
    for i in range(1, k + 1):
        # exact: c * (n - k + i) is divisible by i at every step
        c = c * (n - k + i) // i
    return c


def xlogx(x):
    """``x ln x`` with the convention ``0 ln 0 = 0``; works on arrays."""
    x = np.asarray(x, dtype=float)
    safe = np.where(x > 0, x, 1.0)
    out = np.where(x > 0, x * np.log(safe), 0.0)
    return float(out) if out.ndim == 0 else out


def binom_exponent(beta: float) -> float:
    """Exponential rate of C(n, beta n): ``-beta ln beta - (1-beta) ln(1-beta)``."""
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"beta must lie in [0, 1], got {beta}")
    return -(xlogx(beta) + xlogx(1.0 - beta))


def entropy(a: Sequence[float]) -> float:
    """``sum a_i ln a_i`` (nonpositive on the simplex)."""
    a = np.asarray(a, dtype=float)
    if np.any(a < 0):
        raise ValueError("entropy argument has a negative component")
    return float(np.sum(xlogx(a)))


def _gpoly(coeffs: list[float], exps: list[float], z: float) -> float:
    # plain floats: faster than numpy for the handful of terms used here
    try:
        return sum([c * z**e for c, e in zip(coeffs, exps)])
    except OverflowError:
        return math.copysign(math.inf, coeffs[max(range(len(exps)), key=exps.__getitem__)])


def find_positive_root(coeffs: Sequence[float], exponents: Sequence[int]) -> float:
    """Positive root of ``sum c_i z^{e_i}`` (caller guarantees it is unique).

    The bracket grows geometrically from z = 1 in both directions, Brent's
    bracketing iteration shrinks it to a relative width of 1e-14, and one
    Newton step polishes.
    """
    c = [float(x) for x in coeffs]
    e = [float(x) for x in exponents]
    if len(c) != len(e) or not c:
        raise ValueError("coeffs and exponents must be nonempty and aligned")
    if any(x < 0 for x in e):
        raise ValueError("exponents must be nonnegative")

    def f(z):
        return _gpoly(c, e, z)

    f1 = f(1.0)
    if f1 == 0.0:
        return 1.0
    lo = hi = 1.0
    for _ in range(1100):
        hi *= 2.0
        if f(hi) * f1 < 0:
            lo = hi / 2.0
            break
        lo /= 2.0
        if lo > 0 and f(lo) * f1 < 0:
            hi = lo * 2.0
            break
    else:
        raise NoPositiveRootError("no sign change found on (0, inf)")

    z = brentq(f, lo, hi, xtol=1e-300, rtol=1e-14, maxiter=500)
    fz = f(z)
    if fz != 0.0:
        deriv = sum([ci * ei * z ** (ei - 1.0) for ci, ei in zip(c, e) if ei > 0])
        if deriv != 0.0:
            znew = z - fz / deriv
            if lo <= znew <= hi and abs(f(znew)) <= abs(fz):
                z = znew
    return z
