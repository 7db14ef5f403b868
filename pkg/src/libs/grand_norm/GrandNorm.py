#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# GrandNorm.py
"""
Description: The grand Lebesgue sequence norm sup_{eps>0} eps^(theta/(q(1+eps))) ||x||_{q(1+eps)}, its
truncated and sub-range variants, the truncation sandwich, power-log membership and the vanishing functional.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import math

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import gammaln, logsumexp

from src.libs.common.Config.Configuration import OptimizerConfig, SequenceConfig
from src.libs.common.Errors.Errors import DomainError
from src.libs.common.Logger.Logger import Logger
from src.libs.optimizer.LogGridSearch import LogGridSearch, log_psi_t
from src.libs.sequences.GrandSequence import GrandSequence, NormBracket, PowerLogTail
from src.libs.sequences.SequenceNorms import SequenceNorms
from src.libs.special_functions.SpecialFunctions import c_eps0, log_psi, psi_argmax, psi_max
from src.libs.verifier.Report import CaseRecord, VerificationReport

# region Global params
CRITICAL_EXPONENT_SLACK: float = 1e-12
MEMBERSHIP_LADDER: Tuple[float, ...] = tuple(10.0 ** -k for k in range(1, 9))
VANISHING_LADDER: Tuple[float, ...] = tuple(10.0 ** -k for k in range(1, 13))
VANISHING_TOLERANCE: float = 1e-3
VANISHING_WINDOW: int = 5
DIRECT_SUM_LIMIT: int = 10_000_000
# endregion Global params


@dataclass(frozen=True)
class GrandParams:
    """Exponent q >= 1 and weight theta > 0 of the grand norm."""
    q: float
    theta: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.q) and math.isfinite(self.theta)):
            raise DomainError("q and theta must be finite")
        if self.q < 1.0:
            raise DomainError(f"q must be >= 1, got {self.q}")
        if self.theta <= 0.0:
            raise DomainError(f"theta must be > 0, got {self.theta}")
        object.__setattr__(self, 'q', float(self.q))
        object.__setattr__(self, 'theta', float(self.theta))

    @property
    def weight(self) -> float:
        return self.theta / self.q

    def to_record(self) -> dict:
        return {'q': self.q, 'theta': self.theta}


@dataclass(frozen=True)
class MembershipReport:
    """
    Verdict and numeric evidence for x_n = n^(-1/q) (ln(n+1))^(-a).

    *Attributes*:
    - verdict --> str : 'member' or 'nonmember' by (1-theta)/q <= a <= 1/q.
    - norm --> NormBracket : Grand norm bracket of the family (None when a < 0).
    - ladder --> tuple : (eps, objective lower) rows on a shrinking eps ladder.
    - monotone_growth --> bool : Objective strictly increases along the ladder.
    - threshold_crossed --> bool : Some ladder value exceeds the threshold.
    - growth_exponent --> float : Slope of ln(objective) against ln(eps).
    - evidence_agrees --> bool : Numeric evidence points the same way as the verdict.
    """
    q: float
    theta: float
    a: float
    log_case: bool
    verdict: str
    lower_boundary: float
    upper_boundary: float
    norm: Optional[NormBracket]
    ladder: Tuple[Tuple[float, float], ...]
    monotone_growth: bool
    threshold_crossed: bool
    growth_exponent: float
    evidence_agrees: bool

    def to_record(self) -> dict:
        return {
            'family': 'powerlog', 'q': self.q, 'theta': self.theta, 'a': self.a,
            'log_case': self.log_case, 'verdict': self.verdict,
            'criterion': [self.lower_boundary, self.upper_boundary],
            'norm': self.norm.to_record() if self.norm is not None else None,
            'ladder': [list(row) for row in self.ladder],
            'monotone_growth': self.monotone_growth, 'threshold_crossed': self.threshold_crossed,
            'growth_exponent': self.growth_exponent, 'evidence_agrees': self.evidence_agrees,
        }


@dataclass(frozen=True)
class VanishingReport:
    """Samples of L(eps) = eps^theta * sum s_n^(q(1+eps)) with the vanishing verdict."""
    eps: Tuple[float, ...]
    lower: Tuple[float, ...]
    upper: Tuple[float, ...]
    final: float
    decreasing: bool
    diverges: bool
    vanishing: bool

    @property
    def verdict(self) -> str:
        return 'vanishing' if self.vanishing else 'not vanishing'

    def to_record(self) -> dict:
        return {
            'eps': list(self.eps), 'lower': list(self.lower), 'upper': list(self.upper),
            'final': self.final, 'decreasing': self.decreasing, 'diverges': self.diverges,
            'verdict': self.verdict,
        }


class GrandNormCalculator:
    """
    Certified brackets of the grand Lebesgue sequence norm.

    *Attributes*:
    - logger --> Logger : Instance of the Logger class to log messages.
    - optimizer --> OptimizerConfig : Default search settings.
    - norms --> SequenceNorms : l^p brackets of the sequences.

    *Methods*:
    - grand_norm(x, params) --> sup over eps > 0.
    - grand_norm_truncated(x, params, eps0) --> sup over 0 < eps <= eps0.
    - grand_norm_range(x, params, eps_lo, eps_hi) --> sup over a sub-range.
    - check_equivalence(x, params, eps0) --> truncated <= full <= c(eps0)^(theta/q) truncated.
    - powerlog_membership(params, a) --> Closed-form verdict plus numeric evidence.
    - vanishing_limit(local_norms, params) --> Trend of eps^theta sum s_n^(q(1+eps)) as eps -> 0.
    - objective_table(x, params, eps_values) --> Objective rows for plotting.
    - alternative_norm_partials(x, q, theta, eps0, horizons) --> Partial sums of the classical-range norm.
    """

    def __init__(self, logger: Logger, optimizer: OptimizerConfig = None, sequence: SequenceConfig = None) -> None:
        """
        Initializes the GrandNormCalculator instance.

        *Arguments*:
        - logger --> Logger : Instance of the Logger class for logging messages.
        - optimizer --> OptimizerConfig : Search settings; defaults when None.
        - sequence --> SequenceConfig : Series settings; defaults when None.

        *Returns*:
        - None

        *Examples*:
        - calculator = GrandNormCalculator(logger)
        """
        self.logger = logger
        self.optimizer = optimizer if optimizer is not None else OptimizerConfig()
        self.norms = SequenceNorms(logger, sequence)
        self.logger.write_info("GrandNormCalculator initialized.")

    def log_norm_function(self, x: GrandSequence, q: float):
        """t -> bracket of ln ||x||_{q(1+e^t)}."""
        def log_norm(t: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
            return self.norms.log_lp_bounds(x, q * (1.0 + np.exp(t)))
        return log_norm

    # region Norms
    def grand_norm(self, x: GrandSequence, params: GrandParams, cfg: OptimizerConfig = None) -> NormBracket:
        """
        Bracket of sup_{eps>0} psi(eps)^(theta/q) ||x||_{q(1+eps)}.

        *Arguments*:
        - x --> GrandSequence : The sequence.
        - params --> GrandParams : q and theta.
        - cfg --> OptimizerConfig : Search settings; the calculator default when None.

        *Returns*:
        - NormBracket : upper = inf when the left end of the range cannot be bounded.

        *Examples*:
        - grand_norm(GrandSequence.spike(), GrandParams(1, 1)) --> [1.32111..., 1.32111...]
        """
        return self.grand_norm_range(x, params, 0.0, math.inf, cfg)

    def grand_norm_truncated(self, x: GrandSequence, params: GrandParams, eps0: float,
                             cfg: OptimizerConfig = None) -> NormBracket:
        """
        Bracket of sup_{0<eps<=eps0} psi(eps)^(theta/q) ||x||_{q(1+eps)}.

        *Examples*:
        - grand_norm_truncated(GrandSequence.spike(), GrandParams(1, 1), 1.0) --> [1, 1]
        """
        if not (math.isfinite(eps0) and eps0 > 0.0):
            raise DomainError(f"eps0 must be positive and finite, got {eps0}")
        return self.grand_norm_range(x, params, 0.0, eps0, cfg)

    def grand_norm_range(self, x: GrandSequence, params: GrandParams, eps_lo: float = 0.0,
                         eps_hi: float = math.inf, cfg: OptimizerConfig = None) -> NormBracket:
        """
        Bracket of the sup of the grand-norm objective over eps_lo < eps <= eps_hi.

        *Arguments*:
        - x --> GrandSequence : The sequence.
        - params --> GrandParams : q and theta.
        - eps_lo --> float : Left end, 0 for an open range reaching 0.
        - eps_hi --> float : Right end, inf for an unbounded range.
        - cfg --> OptimizerConfig : Search settings.

        *Returns*:
        - NormBracket

        *Notes*:
        - Ends outside [eps_min, eps_max] are covered by certified caps, see _left_cap and _right_cap.
        """
        if not (eps_lo >= 0.0 and eps_hi > eps_lo) or math.isinf(eps_lo):
            raise DomainError(f"need 0 <= eps_lo < eps_hi, got {eps_lo}, {eps_hi}")
        if x.is_zero:
            return NormBracket.zero()
        cfg = cfg if cfg is not None else self.optimizer

        grid_lo, left_cap = eps_lo, -math.inf
        if eps_lo == 0.0:
            grid_lo = cfg.eps_min if math.isinf(eps_hi) else min(cfg.eps_min, eps_hi / 10.0)
            left_cap = self._left_cap(x, params, grid_lo)
        grid_hi, right_cap = eps_hi, -math.inf
        if math.isinf(eps_hi):
            grid_hi = max(cfg.eps_max, 10.0 * grid_lo)
            right_cap = self._right_cap(x, params, grid_hi)

        outcome = LogGridSearch(self.logger, cfg).supremum(
            params.weight, params.q, self.log_norm_function(x, params.q), grid_lo, grid_hi, left_cap, right_cap
        )
        bracket = NormBracket(outcome.lower, outcome.upper)
        self.logger.write_debug(
            f"grand norm over ({eps_lo:g}, {eps_hi:g}] with q={params.q:g}, theta={params.theta:g}: "
            f"[{bracket.lower:.12g}, {bracket.upper:.12g}]"
        )
        return bracket

    def _right_cap(self, x: GrandSequence, params: GrandParams, eps_edge: float) -> float:
        # psi decreases past its argmax and the norm is nonincreasing in eps
        log_factor = log_psi(eps_edge) if eps_edge >= psi_argmax() else math.log(psi_max())
        _, upper = self.norms.log_lp_bounds(x, [params.q * (1.0 + eps_edge)])
        return params.weight * log_factor + float(upper[0])

    def _left_cap(self, x: GrandSequence, params: GrandParams, eps_edge: float) -> float:
        log_factor = log_psi(min(eps_edge, psi_argmax()))
        _, upper = self.norms.log_lp_bounds(x, [params.q])
        if math.isfinite(upper[0]):
            return params.weight * log_factor + float(upper[0])
        tail = x.tail
        if tail is None or abs(tail.a * params.q - 1.0) > CRITICAL_EXPONENT_SLACK or eps_edge > 1.0:
            return math.inf
        return self._critical_tail_cap(x, tail, params, eps_edge)

    def _critical_tail_cap(self, x: GrandSequence, tail: PowerLogTail, params: GrandParams,
                           eps_edge: float) -> float:
        """
        ln-bound of the objective on (0, eps_edge] for a tail with a*q = 1.

        *Notes*:
        - With c = min(b q, 1 - min(theta, 1)/2), every eps <= eps_edge <= 1 gives
          eps^theta sum x_n^(q(1+eps)) <= eps_edge^theta (head terms) + Gamma(1-c) eps_edge^(theta+c-1),
          finite exactly when theta + c >= 1.
        """
        q, theta = params.q, params.theta
        bq = tail.b * q
        c = min(bq, 1.0 - min(theta, 1.0) / 2.0)
        if theta + c - 1.0 < 0.0:
            return math.inf
        log_edge = math.log(eps_edge)

        head_terms: List[np.ndarray] = []
        if x.entries:
            log_abs = np.log(np.abs(x.values))
            head_terms.append(np.maximum(q * log_abs, q * (1.0 + eps_edge) * log_abs))
        n = np.arange(tail.n0, max(tail.n0, 3) + 1, dtype=float)
        log_log = np.log(np.log1p(n))
        head_terms.append(-np.log(n) + np.maximum(-bq * log_log, -bq * (1.0 + eps_edge) * log_log))
        log_head = float(logsumexp(np.concatenate(head_terms)))

        log_k = float(np.logaddexp(theta * log_edge + log_head,
                                   (theta + c - 1.0) * log_edge + gammaln(1.0 - c)))
        return max(log_k / q, log_k / (q * (1.0 + eps_edge)))
    # endregion Norms

    def check_equivalence(self, x: GrandSequence, params: GrandParams, eps0: float,
                          cfg: OptimizerConfig = None, tolerance: float = 1e-9) -> VerificationReport:
        """
        Checks truncated <= full <= c(eps0)^(theta/q) * truncated.

        *Arguments*:
        - x --> GrandSequence : Sequence with finite grand norm.
        - params --> GrandParams : q and theta.
        - eps0 --> float : Truncation point.
        - cfg --> OptimizerConfig : Search settings.
        - tolerance --> float : Absolute slack of both comparisons.

        *Returns*:
        - VerificationReport : Two records, one per inequality; notes carry the constant and the brackets.

        *Notes*:
        - The full bracket comes from grand_norm on its own, so neither side is derived from the other.
        """
        truncated = self.grand_norm_truncated(x, params, eps0, cfg)
        full = self.grand_norm(x, params, cfg)
        constant = c_eps0(eps0) ** params.weight

        inputs = {'x': x.to_record(), 'q': params.q, 'theta': params.theta, 'eps0': eps0}
        notes = {'c_eps0': c_eps0(eps0), 'constant': constant}
        report = VerificationReport('equivalence', tolerance)
        report.add(CaseRecord.compare(0, 'truncated <= full', inputs, truncated, full, tolerance, notes))
        report.add(CaseRecord.compare(1, 'full <= c(eps0)^(theta/q) truncated', inputs, full,
                                      truncated.scaled(constant), tolerance, notes))
        return report

    def powerlog_membership(self, params: GrandParams, a: float, b_is_zero_log_case: bool = False,
                            cfg: OptimizerConfig = None, threshold: float = 1e6) -> MembershipReport:
        """
        Membership of x_n = n^(-1/q) (ln(n+1))^(-a) in the grand sequence space.

        *Arguments*:
        - params --> GrandParams : q and theta.
        - a --> float : Logarithmic exponent; ignored when b_is_zero_log_case.
        - b_is_zero_log_case --> bool : Use x_n = n^(-1/q), member iff theta >= 1.
        - cfg --> OptimizerConfig : Search settings of the evidence.
        - threshold --> float : Divergence threshold of the ladder.

        *Returns*:
        - MembershipReport

        *Examples*:
        - powerlog_membership(GrandParams(2, 1), 0.0).verdict --> 'member'
        - powerlog_membership(GrandParams(2, 0.5), 0.1).verdict --> 'nonmember'

        *Notes*:
        - The verdict follows the closed-form criterion. For a > 1/q the family lies in l^q, so the
          numeric evidence is finite there and evidence_agrees is False.
        """
        a = 0.0 if b_is_zero_log_case else float(a)
        q, theta = params.q, params.theta
        lower_boundary = (1.0 - theta) / q
        upper_boundary = 1.0 / q
        member = lower_boundary <= a <= upper_boundary
        verdict = 'member' if member else 'nonmember'

        norm: Optional[NormBracket] = None
        ladder: Tuple[Tuple[float, float], ...] = ()
        monotone = crossed = False
        exponent = math.nan
        agrees = True
        if a >= 0.0:
            x = GrandSequence.power_log(1.0 / q, a)
            norm = self.grand_norm(x, params, cfg)
            eps = np.array(MEMBERSHIP_LADDER)
            lower, _ = self.norms.log_lp_bounds(x, q * (1.0 + eps))
            values = params.weight * log_psi_t(np.log(eps)) + lower
            ladder = tuple((float(e), float(math.exp(v))) for e, v in zip(eps, values))
            monotone = bool(np.all(np.diff(values) > 0.0))
            crossed = bool(np.any(values > math.log(threshold)))
            exponent = float(np.polyfit(np.log(eps), values, 1)[0])
            evidence_member = norm.is_finite and not crossed
            agrees = evidence_member == member

        report = MembershipReport(q, theta, a, b_is_zero_log_case, verdict, lower_boundary, upper_boundary,
                                  norm, ladder, monotone, crossed, exponent, agrees)
        self.logger.write_debug(f"powerlog membership q={q:g} theta={theta:g} a={a:g}: {verdict}")
        return report

    def vanishing_limit(self, local_norms: GrandSequence, params: GrandParams,
                        eps_sequence: Optional[Sequence[float]] = None,
                        tolerance: float = VANISHING_TOLERANCE) -> VanishingReport:
        """
        Samples L(eps) = eps^theta * sum s_n^(q(1+eps)) along a decreasing eps sequence.

        *Arguments*:
        - local_norms --> GrandSequence : The sequence s_n.
        - params --> GrandParams : q and theta.
        - eps_sequence --> list : Strictly decreasing positive values; 1e-1 ... 1e-12 when None.
        - tolerance --> float : Threshold of the final value.

        *Returns*:
        - VanishingReport : 'vanishing' when the last upper value is below tolerance and the last five
          samples decrease.
        """
        eps = np.array(eps_sequence if eps_sequence is not None else VANISHING_LADDER, dtype=float)
        if eps.size == 0 or np.any(eps <= 0.0) or np.any(np.diff(eps) >= 0.0):
            raise DomainError("eps_sequence must be positive and strictly decreasing")
        if local_norms.is_zero:
            zeros = tuple(0.0 for _ in eps)
            return VanishingReport(tuple(eps.tolist()), zeros, zeros, 0.0, True, False, True)

        r = params.q * (1.0 + eps)
        lower, upper = self.norms.log_lp_bounds(local_norms, r)
        log_lower = params.theta * np.log(eps) + r * lower
        log_upper = params.theta * np.log(eps) + r * upper
        values_upper = np.exp(log_upper)
        diverges = bool(np.any(np.isinf(values_upper)))
        window = values_upper[-VANISHING_WINDOW:]
        decreasing = bool(np.all(np.diff(window) < 0.0)) if window.size > 1 else True
        final = float(values_upper[-1])
        vanishing = not diverges and final < tolerance and decreasing
        self.logger.write_debug(f"vanishing limit: final={final:.6g}, decreasing={decreasing}, diverges={diverges}")
        return VanishingReport(tuple(eps.tolist()), tuple(np.exp(log_lower).tolist()), tuple(values_upper.tolist()),
                               final, decreasing, diverges, vanishing)

    def objective_table(self, x: GrandSequence, params: GrandParams,
                        eps_values: Iterable[float]) -> List[Tuple[float, float, float]]:
        """
        Rows (eps, lower, upper) of psi(eps)^(theta/q) ||x||_{q(1+eps)}.

        *Examples*:
        - objective_table(GrandSequence.spike(), GrandParams(1, 1), [1.0]) --> [(1.0, 1.0, 1.0)]
        """
        eps = np.array(list(eps_values), dtype=float)
        if eps.size == 0:
            return []
        if np.any(eps <= 0.0):
            raise DomainError("objective_table needs positive eps values")
        if x.is_zero:
            return [(float(e), 0.0, 0.0) for e in eps]
        lower, upper = self.norms.log_lp_bounds(x, params.q * (1.0 + eps))
        factor = params.weight * log_psi_t(np.log(eps))
        return [(float(e), float(math.exp(f + lo)), float(math.exp(f + hi)))
                for e, f, lo, hi in zip(eps, factor, lower, upper)]

    def alternative_norm_partials(self, x: GrandSequence, q: float, theta: float, eps0: float,
                                  horizons: Iterable[int]) -> List[Tuple[int, float, bool]]:
        """
        Partial values of eps0^(theta/(q-eps0)) (sum_{n<=H} |x_n|^(q-eps0))^(1/(q-eps0)).

        *Arguments*:
        - x --> GrandSequence : One-sided sequence, tail with b = 0 when horizons exceed the direct limit.
        - q, theta --> float : Parameters of the classical-range norm, 0 < eps0 <= q - 1.
        - eps0 --> float : The evaluated epsilon.
        - horizons --> iterable : Increasing horizons H.

        *Returns*:
        - list : (H, lower bound of the partial value, exact) rows. Horizons beyond the direct limit use
          the integral lower bound of the tail partial sum.
        """
        r = q - eps0
        if not (0.0 < eps0 <= q - 1.0):
            raise DomainError(f"need 0 < eps0 <= q - 1, got eps0={eps0}, q={q}")
        factor = theta / r * math.log(eps0)
        head = float(np.sum(np.abs(x.values) ** r)) if x.entries else 0.0
        rows: List[Tuple[int, float, bool]] = []
        for horizon in horizons:
            horizon = int(horizon)
            total = head
            exact = True
            tail = x.tail
            if tail is not None and horizon >= tail.n0:
                count = horizon - tail.n0 + 1
                if count <= DIRECT_SUM_LIMIT:
                    n = np.arange(tail.n0, horizon + 1, dtype=float)
                    total += float(np.sum(np.exp(r * tail.log_terms(n))))
                else:
                    if tail.b != 0.0:
                        raise DomainError("large horizons need a pure power tail")
                    total += self._power_sum_lower(tail.n0, horizon, r * tail.a)
                    exact = False
            value = math.exp(factor + math.log(total) / r) if total > 0.0 else 0.0
            rows.append((horizon, value, exact))
        self.logger.write_debug(f"alternative norm partials at eps0={eps0:g}: {len(rows)} horizons")
        return rows

    @staticmethod
    def _power_sum_lower(n0: int, horizon: int, s: float) -> float:
        """Integral lower bound of sum_{n=n0}^{H} n^(-s) for s >= 0."""
        if abs(s - 1.0) < 1e-15:
            return math.log((horizon + 1) / n0)
        return ((horizon + 1) ** (1.0 - s) - n0 ** (1.0 - s)) / (1.0 - s)
