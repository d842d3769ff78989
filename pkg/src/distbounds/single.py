"""Closed-form chromatic bounds for one forbidden distance.

Every function returns a :class:`BoundResult` whose ``value`` is the base
``zeta`` of an exponential lower bound ``chi >= (zeta + o(1))^n``.  Invalid
parameter choices never raise from the ``*_bound`` helpers that have a
validity flag; they return the trivial bound ``value == 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from scipy.optimize import minimize, minimize_scalar

from .numkit import binom_exponent, xlogx

__all__ = [
    "BoundResult",
    "T4Params",
    "T6Params",
    "T7Params",
    "theorem3_bound",
    "theorem4_bound",
    "theorem4_valid",
    "theorem4_optimize",
    "theorem6_params",
    "theorem6_bound",
    "theorem6_optimize",
    "theorem7_params",
    "theorem7_bound",
    "theorem7_optimize",
    "theorem9_bound",
    "infimum_c",
    "infimum_c_scan",
    "in_set_C",
    "ceil_tol",
]

# Ratios within this relative distance of an integer are treated as that
# integer before taking a ceiling (table parameters are decimal, floats are
# not, and b^2 - a loses digits to cancellation).
CEIL_TOL = 1e-9


@dataclass(frozen=True)
class BoundResult:
    value: float
    method: str
    params: dict[str, Any] = field(default_factory=dict)
    valid: bool = True

    def __post_init__(self):
        if not self.valid and self.value != 1.0:
            raise ValueError("an invalid bound must carry the trivial value 1")
        if not self.value > 0:
            raise ValueError("bound value must be positive")

    def as_dict(self) -> dict[str, Any]:
        return {"method": self.method, "params": dict(self.params),
                "value": self.value, "valid": self.valid}


def _trivial(method: str, **params) -> BoundResult:
    return BoundResult(1.0, method, params, valid=False)


def ceil_tol(x: float) -> int:
    return math.ceil(x - CEIL_TOL * max(1.0, abs(x)))


# ----------------------------------------------------------------------------
# Triangle-free and odd-girth constructions

def theorem3_bound() -> BoundResult:
    """Triangle-free distance graphs: ``2 (1/3)^(1/3) (2/3)^(2/3)``."""
    value = 2.0 * (1 / 3) ** (1 / 3) * (2 / 3) ** (2 / 3)
    return BoundResult(value, "T3", {"k": 3})


def theorem9_bound(k: int) -> BoundResult:
    """Bound for graphs with no odd cycle of length <= 2k+1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    lo, hi = k / (2 * k + 1), (k + 1) / (2 * k + 1)
    value = 2.0 * lo**lo * hi**hi
    return BoundResult(value, "T9", {"k": k, "odd_girth_gt": 2 * k + 1})


# ----------------------------------------------------------------------------
# Johnson-type coding bound

@dataclass(frozen=True)
class T4Params:
    a: float
    b: float
    k: int


def theorem4_valid(a: float, b: float, k: int) -> bool:
    if not (0 < a < 1 and 0 < b < 1 and b > 2 * a and b * b > a and k >= 3):
        return False
    return ceil_tol((b - a) / (b * b - a)) < k


def _t4_log_value(a, b):
    return xlogx(b - a) + xlogx(1 - b + a) - xlogx(b) - xlogx(1 - b)


def theorem4_bound(p: T4Params) -> BoundResult:
    params = {"k": p.k, "b": p.b, "a": p.a}
    if not theorem4_valid(p.a, p.b, p.k):
        return _trivial("T4", **params)
    value = math.exp(float(_t4_log_value(p.a, p.b)))
    return BoundResult(value, "T4", params) if value > 1.0 else _trivial("T4", **params)


def _t4_feasible_grid(A, B, k):
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = (B - A) / (B * B - A)
        ok = (B > 2 * A) & (B * B > A)
        r = np.where(ok, ratio, np.inf)
        ok &= np.ceil(r - CEIL_TOL * np.maximum(1.0, np.abs(r))) < k
    return ok


def theorem4_optimize(k: int, step: float = 1e-3, fine: float = 1e-6) -> BoundResult:
    """Grid search over (a, b) at ``step`` followed by nested local grids to ``fine``."""
    if k < 3:
        return _trivial("T4", k=k)
    g = np.arange(1, round(1 / step)) * step
    A, B = np.meshgrid(g, g, indexing="ij")
    ok = _t4_feasible_grid(A, B, k)
    if not ok.any():
        return _trivial("T4", k=k)
    L = np.where(ok, _t4_log_value(A, B), -np.inf)
    i = np.unravel_index(int(np.argmax(L)), L.shape)
    a, b, best = float(A[i]), float(B[i]), float(L[i])

    # The optimum sits on the curved boundary ceil(ratio) = k-1, so refine
    # with shrinking windows around the incumbent.
    h = step
    while h > fine:
        h_new = h / 10
        offs = np.arange(-20, 21) * h_new
        A2, B2 = np.meshgrid(a + offs, b + offs, indexing="ij")
        inside = (A2 > 0) & (A2 < 1) & (B2 > 0) & (B2 < 1)
        ok2 = inside & _t4_feasible_grid(A2, B2, k)
        if ok2.any():
            L2 = np.where(ok2, _t4_log_value(np.clip(A2, 0, 1), np.clip(B2, 0, 1)), -np.inf)
            j = np.unravel_index(int(np.argmax(L2)), L2.shape)
            if L2[j] > best:
                a, b, best = float(A2[j]), float(B2[j]), float(L2[j])
        h = h_new
    grid_best = theorem4_bound(T4Params(a, b, k))
    line_best = _t4_boundary_search(k)
    if line_best is not None and line_best.value > grid_best.value:
        return line_best
    return grid_best


def _t4_boundary_search(k: int) -> BoundResult | None:
    # For fixed b the value grows with a, so the optimum sits on the curve
    # (b - a)/(b^2 - a) = k - 1, i.e. a = ((k-1) b^2 - b)/(k - 2), where
    # a > 0 and b > 2a hold for 1/(k-1) < b < k/(2(k-1)).
    if k < 4:
        return None

    def a_of(b):
        return ((k - 1) * b * b - b) / (k - 2)

    lo, hi = 1 / (k - 1), min(1.0, k / (2 * (k - 1)))
    bs = np.linspace(lo, hi, 2002)[1:-1]
    vals = _t4_log_value(a_of(bs), bs)
    i = int(np.argmax(vals))
    res = minimize_scalar(lambda b: -float(_t4_log_value(a_of(b), b)),
                          bounds=(bs[max(i - 1, 0)], bs[min(i + 1, len(bs) - 1)]),
                          method="bounded", options={"xatol": 1e-12})
    b = float(res.x) if -res.fun >= vals[i] else float(bs[i])
    a = a_of(b)
    # float rounding can land just outside the closed constraint
    for _ in range(60):
        if theorem4_valid(a, b, k):
            out = theorem4_bound(T4Params(a, b, k))
            return out if out.valid else None
        a *= 1 - 1e-12
    return None


# ----------------------------------------------------------------------------
# Random-subgraph bounds and the infimum c of the set C

def in_set_C(cprime: float, base0: float, base1: float, k: int) -> bool:
    """Membership of ``cprime`` in C = {c' in [base0, base1]: k >= ceil(2 ln base1 / ln(c'/base0))}."""
    if not base0 <= cprime <= base1:
        return False
    den = math.log(cprime) - math.log(base0)
    if den <= 0:
        return False
    return k >= math.ceil(2 * math.log(base1) / den)


def infimum_c(base0: float, base1: float, k: int) -> float:
    """inf C in closed form: ``min(base1, base0 * base1^(2/k))``.

    For integer k, ``k >= ceil(x)`` iff ``x <= k``, which solves to
    ``c' >= base0 * base1^(2/k)``; an empty C falls back to ``base1``.
    """
    return min(base1, base0 * base1 ** (2.0 / k))


def infimum_c_scan(base0: float, base1: float, k: int, resolution: float = 1e-7) -> float:
    """inf C by scanning the defining predicate (coarse grid, then ``resolution``)."""
    span = base1 - base0
    coarse = max(resolution * 1000, span / 1e4)
    grid = base0 + np.arange(0, math.floor(span / coarse) + 1) * coarse
    grid = np.append(grid, base1)
    hit = None
    for idx, c in enumerate(grid):
        if in_set_C(float(c), base0, base1, k):
            hit = idx
            break
    if hit is None:
        return base1
    if hit == 0:
        return float(grid[0])
    lo = float(grid[hit - 1])
    fine_grid = lo + np.arange(1, math.ceil((grid[hit] - lo) / resolution) + 1) * resolution
    for c in fine_grid:
        if c <= grid[hit] and in_set_C(float(c), base0, base1, k):
            return float(c)
    return float(grid[hit])


@dataclass(frozen=True)
class T6Params:
    b0: float
    k: int
    tau0: float
    tau1: float
    c: float


def theorem6_params(b0: float, k: int) -> T6Params:
    if not 0 < b0 < 0.5:
        raise ValueError(f"b0 must lie in (0, 1/2), got {b0}")
    if k < 5:
        raise ValueError("the (0,1) random-subgraph bound needs k >= 5")
    tau0 = math.exp(binom_exponent(b0 / 2))
    tau1 = math.exp(binom_exponent(b0))
    return T6Params(b0, k, tau0, tau1, infimum_c(tau0, tau1, k))


def theorem6_bound(b0: float, k: int) -> BoundResult:
    p = theorem6_params(b0, k)
    assert p.tau0 < p.tau1
    value = p.tau1 / p.c
    params = {"k": k, "b0": b0, "tau0": p.tau0, "tau1": p.tau1, "c": p.c}
    # c == tau1 means C is empty or {tau1}: trivial bound
    return BoundResult(value, "T6", params) if value > 1.0 else _trivial("T6", **params)


def _t6_log(b0: float, k: int) -> float:
    # ln(tau1 / c) when C is nonempty: (1 - 2/k) ln tau1 - ln tau0
    return max(0.0, (1 - 2 / k) * binom_exponent(b0) - binom_exponent(b0 / 2))


def theorem6_optimize(k: int) -> BoundResult:
    """Maximize tau1/c over b0: coarse scan at 1e-4 then bounded Brent/golden search."""
    if k < 5:
        raise ValueError("the (0,1) random-subgraph bound needs k >= 5")
    grid = np.arange(1, 5000) * 1e-4
    vals = np.array([_t6_log(b, k) for b in grid])
    i = int(np.argmax(vals))
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, len(grid) - 1)]
    res = minimize_scalar(lambda b: -_t6_log(b, k), bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-11})
    b0 = float(res.x) if -res.fun >= vals[i] else float(grid[i])
    return theorem6_bound(b0, k)


@dataclass(frozen=True)
class T7Params:
    b_neg: float
    b_pos: float
    k: int
    A: float
    B: float
    C: float
    rho0: float
    rho1: float
    c: float


def _t7_domain(b_neg: float, b_pos: float) -> bool:
    return 0 < b_neg < 1 and 0 < b_pos < 1 and b_neg + b_pos <= 0.5 and b_neg <= b_pos


def _t7_abc(b_neg: float, b_pos: float) -> tuple[float, float, float]:
    s = 3 * b_neg + b_pos
    d = 2 + 9 * b_neg + 3 * b_pos
    disc = d * d - 12 * s * s
    if disc < 0:
        raise ValueError("negative discriminant in the (-1,0,1) bound")
    A = (d - math.sqrt(disc)) / 12
    B = s / 2 - 2 * A
    C = 1 + A - s / 2
    return A, B, C


def theorem7_params(b_neg: float, b_pos: float, k: int) -> T7Params:
    if not _t7_domain(b_neg, b_pos):
        raise ValueError(f"(b_neg, b_pos) = ({b_neg}, {b_pos}) outside the (-1,0,1) bound's domain")
    if k < 5:
        raise ValueError("the (-1,0,1) random-subgraph bound needs k >= 5")
    A, B, C = _t7_abc(b_neg, b_pos)
    rho0 = math.exp(-float(xlogx(A) + xlogx(B) + xlogx(C)))
    rho1 = math.exp(-float(xlogx(b_neg) + xlogx(b_pos) + xlogx(1 - b_neg - b_pos)))
    return T7Params(b_neg, b_pos, k, A, B, C, rho0, rho1, infimum_c(rho0, rho1, k))


def theorem7_bound(b_neg: float, b_pos: float, k: int) -> BoundResult:
    p = theorem7_params(b_neg, b_pos, k)
    assert min(p.A, p.B, p.C) >= 0 and abs(p.A + p.B + p.C - 1) < 1e-12
    params = {"k": k, "b_neg": b_neg, "b_pos": b_pos, "A": p.A, "B": p.B, "C": p.C,
              "rho0": p.rho0, "rho1": p.rho1, "c": p.c}
    value = p.rho1 / p.c
    return BoundResult(value, "T7", params) if value > 1.0 else _trivial("T7", **params)


def _t7_log(x, k):
    b_neg, b_pos = float(x[0]), float(x[1])
    if not _t7_domain(b_neg, b_pos):
        return -1.0
    A, B, C = _t7_abc(b_neg, b_pos)
    ln_rho0 = -float(xlogx(A) + xlogx(B) + xlogx(C))
    ln_rho1 = -float(xlogx(b_neg) + xlogx(b_pos) + xlogx(1 - b_neg - b_pos))
    return max(0.0, (1 - 2 / k) * ln_rho1 - ln_rho0)


def theorem7_optimize(k: int, starts: int = 24, seed: int = 0) -> BoundResult:
    """Multi-start Nelder-Mead over the triangle b_neg <= b_pos, b_neg + b_pos <= 1/2."""
    if k < 5:
        raise ValueError("the (-1,0,1) random-subgraph bound needs k >= 5")
    rng = np.random.default_rng(seed)
    pts = []
    for _ in range(starts):
        u, w = sorted(rng.uniform(0, 0.5, size=2))
        if u + w > 0.5:
            u, w = 0.5 - w, 0.5 - u
        pts.append((u * 0.5, w))
    best_x, best_f = None, -np.inf
    for x0 in pts:
        res = minimize(lambda x: -_t7_log(x, k), np.array(x0), method="Nelder-Mead",
                       options={"xatol": 1e-11, "fatol": 1e-15, "maxiter": 4000})
        f = -float(res.fun)
        if f > best_f + 1e-12 or (abs(f - best_f) <= 1e-12 and tuple(res.x) < tuple(best_x)):
            best_x, best_f = res.x, f
    return theorem7_bound(float(best_x[0]), float(best_x[1]), k)
