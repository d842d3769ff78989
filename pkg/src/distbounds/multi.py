"""Chromatic bounds for ``m`` forbidden distances via composition vectors.

A composition ``v = (v_0, ..., v_r)`` on the simplex describes vectors whose
coordinates take value ``j`` on a ``v_j`` fraction of positions.  Its step
profile ``g(t, v)`` gives the extreme inner products ``s_bar' n`` (a vector
with itself) and ``s_under' n`` (sorted against reverse-sorted), and

    rho(v) = min_{eta in H'} f(eta) - (k - 2)/k * f(v),   f(a) = sum a ln a,

where ``H'`` is the simplex cut by ``(eta, (0..r)) <= (s_bar' - s_under')/(m+1)``.
The bound is ``zeta_clique(k, m) >= exp(rho(v))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import minimize

from .numkit import find_positive_root

__all__ = [
    "CompositionVector",
    "StepProfile",
    "EntropyMinResult",
    "MultiBoundResult",
    "as_composition",
    "step_profile",
    "integrate_profile",
    "min_entropy_constrained",
    "rho_of_v",
    "optimize_over_simplex",
    "best_bound",
]


@dataclass(frozen=True)
class CompositionVector:
    v: tuple[float, ...]

    def __post_init__(self):
        if len(self.v) < 2:
            raise ValueError("a composition needs r >= 1, i.e. at least two levels")
        if any(not (-1e-15 <= x <= 1 + 1e-15) for x in self.v):
            raise ValueError("composition entries must lie in [0, 1]")
        if abs(math.fsum(self.v) - 1.0) > 1e-12:
            raise ValueError(f"composition must sum to 1, got {math.fsum(self.v)!r}")

    @property
    def r(self) -> int:
        return len(self.v) - 1

    def __len__(self):
        return len(self.v)

    def __iter__(self):
        return iter(self.v)


def as_composition(v) -> CompositionVector:
    if isinstance(v, CompositionVector):
        return v
    return CompositionVector(tuple(float(x) for x in v))


@dataclass(frozen=True)
class StepProfile:
    """Breakpoints ``c_i = v_0 + ... + v_{i-1}``; ``g = i`` on ``[c_i, c_{i+1})``."""

    breakpoints: tuple[float, ...]
    s_bar: float
    s_under: float

    @property
    def r(self) -> int:
        return len(self.breakpoints) - 2

    def g(self, t):
        """Level of the profile at ``t`` (vectorized)."""
        c = np.asarray(self.breakpoints[1:-1])
        return np.searchsorted(c, np.asarray(t, dtype=float), side="right")


def _breakpoints(v: Sequence[float]) -> list[float]:
    c = [0.0]
    acc = 0.0
    for x in v:
        acc += x
        c.append(min(acc, 1.0))  # rounding may overshoot before trailing zeros
    c[-1] = 1.0
    return c


def _s_under_from_breakpoints(c: list[float]) -> float:
    # Merge the breakpoints of g(t) (rising at c_1..c_r) with those of
    # g(1-t) (falling at 1-c_r..1-c_1) and integrate the product exactly.
    r = len(c) - 2
    up = c[1:r + 1]
    down = [1.0 - x for x in reversed(c[1:r + 1])]
    i_up = i_down = 0
    level_t, level_rev = 0, r
    t_prev, total = 0.0, 0.0
    while i_up < r or i_down < r:
        if i_down >= r or (i_up < r and up[i_up] <= down[i_down]):
            t_next = up[i_up]
            total += level_t * level_rev * (t_next - t_prev)
            level_t += 1
            i_up += 1
        else:
            t_next = down[i_down]
            total += level_t * level_rev * (t_next - t_prev)
            level_rev -= 1
            i_down += 1
        t_prev = t_next
    total += level_t * level_rev * (1.0 - t_prev)
    return total


def step_profile(v) -> StepProfile:
    v = as_composition(v)
    c = _breakpoints(v.v)
    s_bar = math.fsum(i * i * x for i, x in enumerate(v.v))
    return StepProfile(tuple(c), s_bar, _s_under_from_breakpoints(c))


def integrate_profile(profile: StepProfile) -> tuple[float, float]:
    """Independent piecewise integration of ``g^2`` and ``g(t) g(1-t)``.

    Sums over all level pairs (i, j) the overlap length of
    ``[c_i, c_{i+1}) ∩ (1 - c_{j+1}, 1 - c_j]``; used to cross-check the
    closed form and the merge in :func:`step_profile`.
    """
    c = profile.breakpoints
    r = profile.r
    sq = math.fsum(i * i * (c[i + 1] - c[i]) for i in range(r + 1))
    prod = 0.0
    for i in range(r + 1):
        for j in range(r + 1):
            lo = max(c[i], 1.0 - c[j + 1])
            hi = min(c[i + 1], 1.0 - c[j])
            if hi > lo:
                prod += i * j * (hi - lo)
    return sq, prod


@dataclass(frozen=True)
class EntropyMinResult:
    eta: tuple[float, ...]
    value: float
    active: bool
    lam: float | None = None


def min_entropy_constrained(r: int, T: float) -> EntropyMinResult:
    """Minimize ``sum eta ln eta`` over the simplex with ``sum i eta_i <= T``.

    The uniform point is optimal when ``r/2 <= T``; otherwise the constraint
    is tight and the minimizer is geometric, ``eta_i ∝ lam^i`` with ``lam``
    the positive root of ``sum_{i=0}^r (i - T) z^i``.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if not 0.0 <= T <= r:
        raise ValueError(f"T must lie in [0, r] = [0, {r}], got {T}")
    if T >= r / 2:
        eta = tuple([1.0 / (r + 1)] * (r + 1))
        return EntropyMinResult(eta, -math.log(r + 1), active=False)
    if T == 0.0:
        eta = (1.0,) + (0.0,) * r
        return EntropyMinResult(eta, 0.0, active=True, lam=0.0)
    lam = find_positive_root([i - T for i in range(r + 1)], list(range(r + 1)))
    w = [lam**i for i in range(r + 1)]
    z = math.fsum(w)
    eta = tuple(x / z for x in w)
    value = math.fsum(x * math.log(x) for x in eta if x > 0)
    return EntropyMinResult(eta, value, active=True, lam=lam)


def _rho(v: Sequence[float], k: int, m: int) -> float:
    r = len(v) - 1
    c = _breakpoints(v)
    s_bar = math.fsum(i * i * x for i, x in enumerate(v))
    T = (s_bar - _s_under_from_breakpoints(c)) / (m + 1)
    T = min(max(T, 0.0), float(r))
    inner = min_entropy_constrained(r, T).value
    f_v = math.fsum(x * math.log(x) for x in v if x > 0)
    return inner - (k - 2) / k * f_v


def rho_of_v(v, k: int, m: int) -> float:
    if k < 2 or m < 1:
        raise ValueError("need k >= 2 and m >= 1")
    return _rho(as_composition(v).v, k, m)


@dataclass(frozen=True)
class MultiBoundResult:
    k: int
    m: int
    r: int
    v_star: tuple[float, ...]
    rho: float

    @property
    def value(self) -> float:
        return math.exp(self.rho) if self.rho > 0 else 1.0

    @property
    def valid(self) -> bool:
        return self.rho > 0

    def as_dict(self) -> dict:
        return {"method": "T10", "params": {"k": self.k, "m": self.m, "r": self.r,
                                             "v": list(self.v_star)},
                "value": self.value, "valid": self.valid, "rho": self.rho}


def _project(x) -> tuple[float, ...] | None:
    # free coordinates v_1..v_r; v_0 is the remainder
    xs = x.tolist() if isinstance(x, np.ndarray) else list(x)
    if min(xs) < 0 or max(xs) > 1:
        return None
    rest = 1.0 - math.fsum(xs)
    if rest < 0:
        return None
    return (rest, *xs)


def _objective(k, m):
    def neg_rho(x):
        v = _project(x)
        if v is None:
            return 1e3 + float(np.sum(np.clip(-x, 0, None)) + max(0.0, float(np.sum(x)) - 1))
        return -_rho(v, k, m)
    return neg_rho


def _pairwise_polish(v: list[float], k: int, m: int, tol: float = 1e-9) -> tuple[list[float], float]:
    """Coordinate descent along mass transfers e_i - e_j down to step ``tol``."""
    best = _rho(v, k, m)
    n = len(v)
    step = 1e-3
    while step >= tol:
        improved = True
        while improved:
            improved = False
            for i in range(n):
                for j in range(n):
                    if i == j:
                        continue
                    d = min(step, v[j])
                    if d <= 0:
                        continue
                    trial = list(v)
                    trial[i] += d
                    trial[j] -= d
                    val = _rho(trial, k, m)
                    if val > best + 1e-15:
                        v, best, improved = trial, val, True
        step /= 4
    return v, best


def _starts(r: int, count: int, rng: np.random.Generator, warm=None) -> list[np.ndarray]:
    u = np.full(r + 1, 1.0 / (r + 1))
    pts = [u]
    if warm is not None:
        pts.append(np.asarray(warm, dtype=float))
    for i in range(r + 1):
        e = np.zeros(r + 1)
        e[i] = 1.0
        pts.append(0.8 * e + 0.2 * u)
    while len(pts) < count:
        pts.append(rng.dirichlet(np.full(r + 1, 0.7)))
    return pts


def optimize_over_simplex(r: int, k: int, m: int, starts: int = 50, seed: int = 0,
                          warm_start=None, polish: int = 3) -> MultiBoundResult:
    """Maximize ``rho`` over the (r+1)-level simplex.

    Every start runs a short Nelder-Mead; the ``polish`` best end points rerun
    it to tight tolerance and finish with pairwise coordinate descent.
    """
    if not 1 <= r <= 10:
        raise ValueError("r must lie in [1, 10]")
    if k < 3 or m < 1:
        raise ValueError("need k >= 3 and m >= 1")
    rng = np.random.default_rng([seed, r, k, m])
    obj = _objective(k, m)

    coarse = []
    for idx, v0 in enumerate(_starts(r, starts, rng, warm_start)):
        res = minimize(obj, v0[1:], method="Nelder-Mead",
                       options={"xatol": 1e-5, "fatol": 1e-9, "maxiter": 40 * r})
        coarse.append((float(res.fun), idx, res.x))
    coarse.sort(key=lambda t: (t[0], t[1]))

    best_v, best_rho = None, -math.inf
    for _, _, x in coarse[:polish]:
        res = minimize(obj, x, method="Nelder-Mead",
                       options={"xatol": 1e-10, "fatol": 1e-14, "maxiter": 600 * r,
                                "adaptive": r > 3})
        v = _project(res.x) or _project(np.clip(x, 0, 1))
        if v is None:
            continue
        v, val = _pairwise_polish(list(v), k, m)
        if val > best_rho + 1e-12 or (abs(val - best_rho) <= 1e-12 and tuple(v) < tuple(best_v)):
            best_v, best_rho = v, val
    s = math.fsum(best_v)
    v_star = tuple(x / s for x in best_v)
    return MultiBoundResult(k, m, r, v_star, _rho(v_star, k, m))


def best_bound(k: int, m: int, r_max: int = 10, starts: int = 50, seed: int = 0) -> MultiBoundResult:
    """Best composition bound over ``r = 1..r_max``; ``r = 0`` reports the trivial bound."""
    if k < 3 or m < 1:
        raise ValueError("need k >= 3 and m >= 1")
    best = MultiBoundResult(k, m, 0, (1.0,), 0.0)
    warm = None
    for r in range(1, r_max + 1):
        res = optimize_over_simplex(r, k, m, starts=starts, seed=seed, warm_start=warm)
        warm = (*res.v_star, 0.0)
        if res.rho > max(best.rho, 0.0) + 1e-12:
            best = res
    return best
