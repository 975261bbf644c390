"""q-ary entropy and the Gilbert-Varshamov quantities built on it."""

import math
from typing import Callable, Optional

import numpy as np
from scipy.special import xlogy

from .constants import BISECTION_MAX_ITERATIONS, BISECTION_TOLERANCE, DOMAIN_SLACK
from .exceptions import DomainError


def _check_alphabet(q: int) -> None:
    if int(q) < 2:
        raise DomainError(f"alphabet size {q} must be at least 2")


def _check_unit(name: str, x: float) -> float:
    if not (-DOMAIN_SLACK <= x <= 1 + DOMAIN_SLACK):
        raise DomainError(f"{name}={x} outside [0, 1]")
    return min(max(float(x), 0.0), 1.0)


def entropy_q(q: int, x: float) -> float:
    """h_q(x) = x log_q(q-1) - x log_q(x) - (1-x) log_q(1-x)."""
    _check_alphabet(q)
    x = _check_unit("x", x)
    nats = xlogy(x, q - 1) - xlogy(x, x) - xlogy(1 - x, 1 - x)
    return float(nats / math.log(q))


def bisect(function: Callable[[float], float], target: float, lo: float, hi: float, increasing: bool) -> float:
    """Solve function(x) = target on [lo, hi] for a monotone function."""
    for _ in range(BISECTION_MAX_ITERATIONS):
        if hi - lo <= BISECTION_TOLERANCE:
            break
        mid = 0.5 * (lo + hi)
        below = function(mid) < target
        if below == increasing:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def entropy_q_inv(q: int, y: float) -> float:
    """Inverse of h_q restricted to [0, (q-1)/q]."""
    _check_alphabet(q)
    y = _check_unit("y", y)
    top = (q - 1) / q
    if y >= 1.0:
        return top
    if y <= 0.0:
        return 0.0
    return bisect(lambda x: entropy_q(q, x), y, 0.0, top, increasing=True)


def delta_min(q: int, rate: float) -> float:
    """Relative Gilbert-Varshamov distance h_q^{-1}(1 - R)."""
    rate = _check_unit("R", rate)
    return entropy_q_inv(q, 1.0 - rate)


def delta_max(q: int, rate: float) -> Optional[float]:
    """Solution of h_q(x) = R on [(q-1)/q, 1], or None where no solution exists.

    h_q decreases from 1 to log_q(q-1) on that interval, so rates below
    log_q(q-1) (possible only for q > 2) have no solution.
    """
    _check_alphabet(q)
    rate = _check_unit("R", rate)
    top = (q - 1) / q
    floor = math.log(q - 1) / math.log(q)
    if rate < floor - BISECTION_TOLERANCE:
        return None
    if rate >= 1.0:
        return top
    if rate <= floor:
        return 1.0
    return bisect(lambda x: entropy_q(q, x), rate, top, 1.0, increasing=False)


def delta_max_or_one(q: int, rate: float) -> float:
    """delta_max with an undefined value replaced by 1 (sums truncate at t = n)."""
    value = delta_max(q, rate)
    return 1.0 if value is None else value


def hoeffding_tail(n: int, gap: float) -> float:
    """exp(-2 gap^2 n): bound on Pr[|mean of n Bernoulli - p| >= gap] per side."""
    return float(np.exp(-2.0 * gap * gap * n))
