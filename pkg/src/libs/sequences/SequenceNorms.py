#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# SequenceNorms.py
"""
Description: Certified l^p norm brackets of GrandSequence values, the sup norm and entrywise domination.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import math

from functools import lru_cache
from typing import Tuple

import numpy as np
from mpmath import mp
from scipy.special import logsumexp

from src.libs.common.Config.Configuration import SequenceConfig
from src.libs.common.Errors.Errors import DomainError, InvariantError
from src.libs.common.Logger.Logger import Logger
from src.libs.sequences.GrandSequence import GrandSequence, NormBracket, PowerLogTail

# region Global params
HORIZON_LADDER: Tuple[int, ...] = (1_000, 10_000, 100_000, 1_000_000)
EXPONENT_SLACK: float = 1e-14
DOMINATION_SCAN_LIMIT: int = 10_000_000
# endregion Global params


@lru_cache(maxsize=64)
def _tail_logs(start: int, stop: int) -> Tuple[np.ndarray, np.ndarray]:
    n = np.arange(start, stop, dtype=float)
    return np.log(n), np.log(np.log1p(n))


@lru_cache(maxsize=65536)
def _log_upper_gamma(order: float, start: float) -> float:
    """ln Gamma(order, start) for start > 0 and any real order."""
    return float(mp.log(mp.gammainc(order, a=start)))


def _log_tail_integral(n: int, s: float, c: float) -> Tuple[float, float]:
    """
    Bounds of ln of the integral from n to infinity of x^(-s) (ln(x+1))^(-c) dx.

    *Notes*:
    - Upper uses ln(x+1) >= ln x; lower uses ln(x+1) <= ln x + 1/n on [n, inf).
    - Only called for convergent exponents: s > 1, or s == 1 and c > 1.
    """
    log_n = math.log(n)
    shift = 1.0 / n
    if s - 1.0 > EXPONENT_SLACK:
        excess = s - 1.0
        closed_form = -c * math.log(math.log1p(n)) + (1.0 - s) * log_n - math.log(excess)
        gamma_form = (c - 1.0) * math.log(excess) + _log_upper_gamma(1.0 - c, excess * log_n)
        upper = min(closed_form, gamma_form)
        lower = excess * shift + (c - 1.0) * math.log(excess) \
            + _log_upper_gamma(1.0 - c, excess * (log_n + shift))
        return lower, max(lower, upper)
    upper = (1.0 - c) * math.log(log_n) - math.log(c - 1.0)
    lower = (1.0 - c) * math.log(log_n + shift) - math.log(c - 1.0)
    return lower, max(lower, upper)


def tail_diverges(tail: PowerLogTail, p: float) -> bool:
    """True when the sum of x_n^p over the tail is infinite."""
    s = p * tail.a
    c = p * tail.b
    if s < 1.0 - EXPONENT_SLACK:
        return True
    if abs(s - 1.0) <= EXPONENT_SLACK:
        return c <= 1.0
    return False


class SequenceNorms:
    """
    Norm brackets of GrandSequence values.

    *Attributes*:
    - logger --> Logger : Instance of the Logger class to log messages.
    - config --> SequenceConfig : Horizon and early-stop width of series brackets.

    *Methods*:
    - lp_norm(x, p) --> NormBracket of ||x||_p.
    - log_lp_bounds(x, p_values) --> Arrays of ln ||x||_p lower/upper bounds for many exponents.
    - linf_norm(x) --> sup |x_n|.
    - pointwise_dominates(x, y) --> Whether 0 <= y <= x entrywise.
    - tail_power_sum(tail, p, log_scale) --> ln bounds of the scaled tail sum.
    """

    def __init__(self, logger: Logger, config: SequenceConfig = None) -> None:
        """
        Initializes the SequenceNorms instance.

        *Arguments*:
        - logger --> Logger : Instance of the Logger class for logging messages.
        - config --> SequenceConfig : Series settings; defaults when None.

        *Returns*:
        - None

        *Examples*:
        - norms = SequenceNorms(logger)
        """
        self.logger = logger
        self.config = config if config is not None else SequenceConfig()
        self.logger.write_info("SequenceNorms initialized.")

    def tail_power_sum(self, tail: PowerLogTail, p: float, log_scale: float = 0.0) -> Tuple[float, float]:
        """
        Bounds of ln sum_{n >= n0} (x_n / scale)^p.

        *Arguments*:
        - tail --> PowerLogTail : The analytic tail.
        - p --> float : Exponent >= 1.
        - log_scale --> float : ln of the scale the terms are divided by.

        *Returns*:
        - tuple : (lower, upper) natural logs; upper is inf for divergent sums.

        *Notes*:
        - Partial sums grow through horizons 1e3, 1e4, ... up to the configured horizon and stop once
          the log-width is below relative_width.
        - Remainder: integral <= sum_{n >= N} f(n) <= f(N) + integral.
        """
        diverges = tail_diverges(tail, p)
        horizons = [h for h in HORIZON_LADDER if h < self.config.horizon] + [self.config.horizon]

        log_partial = -math.inf
        done = tail.n0
        lower = upper = -math.inf
        for horizon in horizons:
            stop = tail.n0 + horizon
            log_n, log_log = _tail_logs(done, stop)
            chunk = p * (-tail.a * log_n - tail.b * log_log) - p * log_scale
            log_partial = float(np.logaddexp(log_partial, logsumexp(chunk)))
            done = stop
            if diverges:
                continue
            int_lower, int_upper = _log_tail_integral(stop, p * tail.a, p * tail.b)
            first_left_out = p * (tail.log_terms(np.array([stop]))[0] - log_scale)
            lower = float(np.logaddexp(log_partial, int_lower - p * log_scale))
            upper = float(np.logaddexp(log_partial,
                                       np.logaddexp(first_left_out, int_upper - p * log_scale)))
            if upper - lower <= self.config.relative_width:
                break

        if diverges:
            return log_partial, math.inf
        return lower, max(lower, upper)

    def log_lp_bounds(self, x: GrandSequence, p_values) -> Tuple[np.ndarray, np.ndarray]:
        """
        Natural-log bounds of ||x||_p for an array of exponents.

        *Arguments*:
        - x --> GrandSequence : Nonzero sequence.
        - p_values --> array-like : Exponents >= 1 (inf allowed).

        *Returns*:
        - tuple : (lower, upper) arrays; -inf entries for the zero sequence, +inf upper for divergence.

        *Notes*:
        - Terms are divided by sup |x_n| before exponentiation, so large exponents do not overflow.
        """
        p_values = np.atleast_1d(np.asarray(p_values, dtype=float))
        if np.any(p_values < 1.0) or np.any(np.isnan(p_values)):
            raise DomainError("l^p norms need p >= 1")
        if x.is_zero:
            empty = np.full(p_values.shape, -math.inf)
            return empty, empty.copy()

        scale = x.linf
        if not math.isfinite(scale):
            # increasing tail: every sum diverges, lower ends come from partial sums
            scale = max(1.0, max((abs(v) for _, v in x.entries), default=1.0))
        log_scale = math.log(scale)

        lower = np.empty(p_values.shape)
        upper = np.empty(p_values.shape)
        finite_p = np.isfinite(p_values)
        lower[~finite_p] = log_scale
        upper[~finite_p] = log_scale

        if np.any(finite_p):
            p_fin = p_values[finite_p]
            if x.entries:
                log_abs = np.log(np.abs(x.values)) - log_scale
                finite_sum = logsumexp(p_fin[:, None] * log_abs[None, :], axis=1)
            else:
                finite_sum = np.full(p_fin.shape, -math.inf)
            sum_lower = finite_sum.copy()
            sum_upper = finite_sum.copy()
            if x.tail is not None:
                for i, p in enumerate(p_fin):
                    t_lo, t_hi = self.tail_power_sum(x.tail, float(p), log_scale)
                    sum_lower[i] = np.logaddexp(finite_sum[i], t_lo)
                    sum_upper[i] = math.inf if math.isinf(t_hi) else np.logaddexp(finite_sum[i], t_hi)
            lower[finite_p] = log_scale + sum_lower / p_fin
            upper[finite_p] = log_scale + sum_upper / p_fin
        if not math.isfinite(x.linf):
            upper[:] = math.inf
        return lower, np.maximum(lower, upper)

    def lp_norm(self, x: GrandSequence, p: float) -> NormBracket:
        """
        Certified bracket of ||x||_p = (sum |x_n|^p)^(1/p).

        *Arguments*:
        - x --> GrandSequence : The sequence.
        - p --> float : Exponent >= 1.

        *Returns*:
        - NormBracket : Exact up to rounding for finite sequences, upper = inf for divergent tails.

        *Examples*:
        - lp_norm(GrandSequence.from_values([1, 1]), 2) --> [1.41421..., 1.41421...]
        - lp_norm(GrandSequence.power_log(2.0), 1) --> bracket around pi^2/6
        """
        if p < 1.0:
            raise DomainError(f"l^p norm needs p >= 1, got {p}")
        if x.is_zero:
            return NormBracket.zero()
        lower, upper = self.log_lp_bounds(x, [p])
        return NormBracket(math.exp(lower[0]), math.exp(upper[0]))

    def linf_norm(self, x: GrandSequence) -> float:
        """
        sup_n |x_n|.

        *Examples*:
        - linf_norm(GrandSequence.from_values([3, -5, 2])) --> 5.0
        """
        return x.linf

    def pointwise_dominates(self, x: GrandSequence, y: GrandSequence) -> bool:
        """
        Whether y_k <= x_k for every index.

        *Arguments*:
        - x --> GrandSequence : The dominating candidate, entrywise nonnegative.
        - y --> GrandSequence : The dominated candidate, entrywise nonnegative.

        *Returns*:
        - bool

        *Notes*:
        - Tails are compared through their exponents; where the ratio y_n / x_n is not yet monotone
          the indices are scanned up to the point from which it provably decreases.
        """
        if x.index_set is not y.index_set:
            raise DomainError("sequences live on different index sets")
        if not (x.is_nonnegative and y.is_nonnegative):
            raise InvariantError("pointwise_dominates needs nonnegative sequences")

        indices = {k for k, _ in x.entries} | {k for k, _ in y.entries}
        for k in indices:
            if y.value_at(k) > x.value_at(k):
                return False

        if y.tail is None:
            return True
        if x.tail is None:
            return False

        start = max(x.tail.n0, y.tail.n0)
        # y tail indices before x's tail begin face x's finite entries
        for k in range(y.tail.n0, start):
            if y.tail.term(k) > x.value_at(k):
                return False
        return self._tail_dominates(x.tail, y.tail, start)

    def _tail_dominates(self, big: PowerLogTail, small: PowerLogTail, start: int) -> bool:
        da = small.a - big.a
        db = small.b - big.b
        if da < 0.0 or (da == 0.0 and db < 0.0):
            return False
        if db >= 0.0:
            # ratio small/big is nonincreasing from the start
            return small.term(start) <= big.term(start)
        # ratio decreases once ln(n+1) >= -db / da
        monotone_from = int(math.ceil(math.exp(-db / da))) if -db / da < math.log(DOMINATION_SCAN_LIMIT) \
            else DOMINATION_SCAN_LIMIT
        stop = max(start, monotone_from) + 1
        if stop - start > DOMINATION_SCAN_LIMIT:
            raise DomainError("tail comparison needs a scan beyond the supported horizon")
        n = np.arange(start, stop, dtype=float)
        return bool(np.all(small.log_terms(n) <= big.log_terms(n) + 1e-15))
