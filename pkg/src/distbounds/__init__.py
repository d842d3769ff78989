"""Exponential lower bounds on chromatic numbers of distance graphs in R^n.

``numkit`` holds the shared primitives, ``single`` the one-distance bounds,
``multi`` the composition-vector bound for several distances and
``graphlab`` the small-n constructions with brute-force checks.
"""

from .multi import MultiBoundResult, best_bound, optimize_over_simplex, rho_of_v, step_profile
from .single import (
    BoundResult,
    theorem3_bound,
    theorem4_bound,
    theorem4_optimize,
    theorem6_bound,
    theorem6_optimize,
    theorem7_bound,
    theorem7_optimize,
    theorem9_bound,
)

__version__ = "0.1.0"
