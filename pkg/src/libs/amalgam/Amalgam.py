#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Amalgam.py
"""
Description: Grand amalgam norms of step functions, factorized through their local L^p norms, with the
integral inequalities, embeddings and counterexample families built on them.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import math

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import logsumexp

from src.libs.common.Config.Configuration import OptimizerConfig, SearchConfig, SequenceConfig
from src.libs.common.Errors.Errors import DomainError
from src.libs.common.Logger.Logger import Logger
from src.libs.amalgam.StepFunction import AnalyticFamily, StepFunction
from src.libs.grand_norm.GrandNorm import GrandParams
from src.libs.sequences.GrandSequence import GrandSequence, NormBracket
from src.libs.small_norm.SmallNorm import SmallNormCalculator, SmallNormEstimate
from src.libs.special_functions.SpecialFunctions import dual_exponent, psi_argmax, psi_max
from src.libs.verifier.Report import CaseRecord, VerificationReport

# region Global params
DIRECT_GRID_POINTS: int = 2000
SET_INTEGRAL_HORIZONS: Tuple[float, ...] = tuple(10.0 ** (3 * k) for k in range(1, 21))
# endregion Global params


@dataclass(frozen=True)
class AmalgamParams:
    """Local exponent p in [1, inf], global exponent q >= 1 and weight theta > 0."""
    p: float
    q: float
    theta: float

    def __post_init__(self) -> None:
        if math.isnan(self.p) or self.p < 1.0:
            raise DomainError(f"p must be >= 1, got {self.p}")
        object.__setattr__(self, 'p', float(self.p))
        GrandParams(self.q, self.theta)

    @property
    def grand(self) -> GrandParams:
        return GrandParams(self.q, self.theta)

    def with_p(self, p: float) -> 'AmalgamParams':
        return AmalgamParams(p, self.q, self.theta)

    def to_record(self) -> dict:
        return {'p': self.p if math.isfinite(self.p) else 'inf', 'q': self.q, 'theta': self.theta}


@dataclass(frozen=True)
class SetIntegralEvidence:
    """
    Counterexample with finite grand amalgam norm and divergent integral over an unbounded set.

    *Attributes*:
    - family --> AnalyticFamily : The shrinking-support function g.
    - norm --> NormBracket : Grand amalgam norm of g.
    - horizons, partial_lower --> tuple : Lower bounds of the integral of |g| over E up to each horizon.
    - threshold_crossed, monotone_growth --> bool : Evidence flags.
    """
    family: AnalyticFamily
    params: AmalgamParams
    norm: NormBracket
    horizons: Tuple[float, ...]
    partial_lower: Tuple[float, ...]
    threshold: float
    threshold_crossed: bool
    monotone_growth: bool

    def to_record(self) -> dict:
        return {
            'family': self.family.to_record(), 'params': self.params.to_record(), 'norm': self.norm.to_record(),
            'horizons': list(self.horizons), 'partial_lower': list(self.partial_lower),
            'threshold': self.threshold, 'threshold_crossed': self.threshold_crossed,
            'monotone_growth': self.monotone_growth,
        }


class AmalgamCalculator:
    """
    Norms of step functions in the grand amalgam space and its small counterpart.

    *Attributes*:
    - logger --> Logger : Instance of the Logger class to log messages.
    - small --> SmallNormCalculator : Small norms; its grand calculator serves the grand norms.

    *Methods*:
    - local_lp(g, p) --> Sequence of ||g chi_{I_k}||_p.
    - amalgam_grand_norm(g, params) / amalgam_small_norm(f, params) --> Factorized norms.
    - amalgam_grand_norm_direct(g, params) --> Defining expression on a fixed eps grid.
    - classical_amalgam_norm(g, p, q) --> ||g||_{l^q(L^p)}.
    - char_fn_norm_bound(M, params) --> (2M)^(1/q) psi_max^(theta/q).
    - holder_integral_check / integral_over_set_bound / product_composition_check --> Reports.
    - embedding_* --> Records of the embedding inequalities with explicit constants.
    - set_integral_counterexample(p, q) --> SetIntegralEvidence.
    """

    def __init__(self, logger: Logger, optimizer: OptimizerConfig = None, search: SearchConfig = None,
                 sequence: SequenceConfig = None) -> None:
        """
        Initializes the AmalgamCalculator instance.

        *Arguments*:
        - logger --> Logger : Instance of the Logger class for logging messages.
        - optimizer, search, sequence --> Config sections; defaults when None.

        *Returns*:
        - None
        """
        self.logger = logger
        self.small = SmallNormCalculator(logger, optimizer, search, sequence)
        self.grand = self.small.grand
        self.logger.write_info("AmalgamCalculator initialized.")

    # region Norms
    def local_lp(self, g: StepFunction, p: float) -> GrandSequence:
        """
        Local norms s_k = ||g chi_{I_k}||_p.

        *Arguments*:
        - g --> StepFunction : The function.
        - p --> float : Local exponent in [1, inf].

        *Returns*:
        - GrandSequence : Finite entries from the pieces, a tail from the analytic family.

        *Examples*:
        - local_lp(StepFunction.indicator([0]), 2) --> {0: 1.0}
        - local_lp(StepFunction.from_cells({0: [(0.25, 2), (0.75, 0)]}), 1) --> {0: 0.5}
        """
        if math.isnan(p) or p < 1.0:
            raise DomainError(f"local exponent must be >= 1, got {p}")
        entries = []
        for k, cells in g.pieces:
            widths = np.array([w for w, _ in cells])
            values = np.abs(np.array([v for _, v in cells]))
            if math.isinf(p):
                norm = float(values.max())
            else:
                positive = values > 0.0
                norm = float(np.exp(logsumexp(np.log(widths[positive]) + p * np.log(values[positive])) / p))
            entries.append((k, norm))
        tail = g.family.local_tail(p) if g.family is not None else None
        return GrandSequence(g.index_set, tuple(entries), tail)

    def amalgam_grand_norm(self, g: StepFunction, params: AmalgamParams, cfg: OptimizerConfig = None) -> NormBracket:
        """
        ||g||_{p,q),theta} = grand_norm(local_lp(g, p); q, theta).

        *Examples*:
        - amalgam_grand_norm(StepFunction.indicator([0]), AmalgamParams(2, 1, 1)) --> [1.32111..., 1.32111...]
        """
        return self.grand.grand_norm(self.local_lp(g, params.p), params.grand, cfg)

    def amalgam_small_norm(self, f: StepFunction, params: AmalgamParams, budget: Optional[int] = None,
                           cfg: OptimizerConfig = None) -> SmallNormEstimate:
        """small_norm_upper(local_lp(f, p); q, theta) for f with finitely many pieces."""
        if not f.is_finite:
            raise DomainError("the small amalgam norm needs finitely many pieces")
        return self.small.small_norm_upper(self.local_lp(f, params.p), params.grand, budget, cfg)

    def amalgam_grand_norm_direct(self, g: StepFunction, params: AmalgamParams,
                                  eps_values: Optional[Sequence[float]] = None) -> float:
        """
        Maximum over a fixed eps grid of (eps^theta sum_k (int_{I_k} |g|^p)^(q(1+eps)/p))^(1/(q(1+eps))).

        *Returns*:
        - float : A lower bound of the grand amalgam norm evaluated from the cells, without local_lp.
        """
        if not g.is_finite:
            raise DomainError("the direct evaluation needs finitely many pieces")
        if g.is_zero:
            return 0.0
        if math.isinf(params.p):
            raise DomainError("the direct evaluation needs a finite p")
        eps = np.array(eps_values, dtype=float) if eps_values is not None else \
            np.unique(np.append(np.geomspace(1e-8, 1e4, DIRECT_GRID_POINTS), psi_argmax()))
        log_integrals = np.array([
            float(logsumexp([math.log(w) + params.p * math.log(abs(v)) for w, v in cells if v != 0.0]))
            for _, cells in g.pieces
        ])
        r = params.q * (1.0 + eps)
        log_sums = logsumexp((r / params.p)[:, None] * log_integrals[None, :], axis=1)
        log_values = (params.theta * np.log(eps) + log_sums) / r
        return float(np.exp(log_values.max()))

    def classical_amalgam_norm(self, g: StepFunction, p: float, q: float) -> NormBracket:
        """||g||_{l^q(L^p)} = ||local_lp(g, p)||_q."""
        return self.grand.norms.lp_norm(self.local_lp(g, p), q)

    @staticmethod
    def char_fn_norm_bound(M: int, params: AmalgamParams) -> float:
        """
        Bound (2M)^(1/q) psi_max^(theta/q) of the grand amalgam norm of chi_E for E in [-M, M].

        *Examples*:
        - char_fn_norm_bound(1, AmalgamParams(2, 1, 1)) --> 2.64222...
        """
        if int(M) != M or M < 1:
            raise DomainError(f"M must be a positive integer, got {M}")
        return (2.0 * M) ** (1.0 / params.q) * psi_max() ** (params.theta / params.q)
    # endregion Norms

    # region Inequalities
    def _small_bracket(self, f: StepFunction, params: AmalgamParams, budget: Optional[int],
                       cfg: OptimizerConfig) -> NormBracket:
        if f.is_zero:
            return NormBracket.zero()
        return self.amalgam_small_norm(f, params, budget, cfg).bracket

    def holder_integral_check(self, g: StepFunction, f: StepFunction, params: AmalgamParams,
                              budget: Optional[int] = None, cfg: OptimizerConfig = None,
                              tolerance: float = 1e-9, case: int = 0) -> VerificationReport:
        """
        Checks int |g f| <= ||g||_{p,q),theta} ||f||_{p',q)',theta}.

        *Arguments*:
        - g, f --> StepFunction : Functions with finitely many pieces.
        - params --> AmalgamParams : p, q and theta of g; f is measured with p' = p / (p - 1).
        - budget --> int : Decomposition search budget of the small norm.
        - cfg --> OptimizerConfig : Search settings over eps.
        - tolerance --> float : Absolute slack.
        - case --> int : Case index of the record.

        *Returns*:
        - VerificationReport
        """
        lhs = NormBracket.exact(g.integral_abs_product(f))
        grand = self.amalgam_grand_norm(g, params, cfg)
        small = self._small_bracket(f, params.with_p(dual_exponent(params.p)), budget, cfg)
        report = VerificationReport('holder_integral', tolerance)
        inputs = {'g': g.to_record(), 'f': f.to_record(), **params.to_record()}
        report.add(CaseRecord.compare(case, 'int|gf| <= grand(g) small(f)', inputs, lhs, grand.times(small),
                                      tolerance, {'grand': grand, 'small': small}))
        return report

    def integral_over_set_bound(self, g: StepFunction, E: StepFunction, M: int, params: AmalgamParams,
                                budget: Optional[int] = None, cfg: OptimizerConfig = None,
                                tolerance: float = 1e-9, case: int = 0) -> VerificationReport:
        """
        Checks int_E |g| <= ||chi_E||_{p',q)',theta} ||g||_{p,q),theta} for an indicator E inside [-M, M].

        *Returns*:
        - VerificationReport : One record; notes carry c_E, the small norm of chi_E.
        """
        if not E.is_finite or any(v not in (0.0, 1.0) for _, cells in E.pieces for _, v in cells):
            raise DomainError("E must be given as a finite indicator")
        if any(k < -M or k >= M for k in E.intervals):
            raise DomainError(f"E is not contained in [-{M}, {M}]")
        lhs = NormBracket.exact(g.integral_abs_product(E))
        c_e = self._small_bracket(E, params.with_p(dual_exponent(params.p)), budget, cfg)
        grand = self.amalgam_grand_norm(g, params, cfg)
        report = VerificationReport('integral_over_set', tolerance)
        inputs = {'g': g.to_record(), 'E': E.to_record(), 'M': M, **params.to_record()}
        report.add(CaseRecord.compare(case, 'int_E|g| <= c_E grand(g)', inputs, lhs, c_e.times(grand),
                                      tolerance, {'c_E': c_e}))
        return report

    def product_composition_check(self, f: StepFunction, g: StepFunction,
                                  triple: Sequence[Tuple[float, float]], theta: float,
                                  c: Optional[float] = None, C: float = 1.0, cfg: OptimizerConfig = None,
                                  tolerance: float = 1e-9, case: int = 0) -> VerificationReport:
        """
        Checks ||fg||_{p3,q3),theta} <= c C ||f||_{p1,q1),theta} ||g||_{p2,q2),theta}.

        *Arguments*:
        - f, g --> StepFunction : Functions with finitely many pieces.
        - triple --> sequence : ((p1, q1), (p2, q2), (p3, q3)).
        - theta --> float : Common weight.
        - c --> float : Sequence-level constant; measured from the inputs when None.
        - C --> float : Local constant, 1 for the Holder relation 1/p3 = 1/p1 + 1/p2.
        - cfg --> OptimizerConfig : Search settings over eps.
        - tolerance --> float : Absolute slack.
        - case --> int : Case index of the records.

        *Returns*:
        - VerificationReport : hypothesis_failure records when the local or the sequence-level premise
          fails on the inputs, else the composed inequality with residuals in the notes.
        """
        (p1, q1), (p2, q2), (p3, q3) = triple
        a = self.local_lp(f, p1)
        b = self.local_lp(g, p2)
        product = self.local_lp(f.multiply(g), p3)
        inputs = {'f': f.to_record(), 'g': g.to_record(), 'triple': [list(t) for t in triple], 'theta': theta}
        report = VerificationReport('product_composition', tolerance)

        local_residual = max((product.value_at(k) - C * a.value_at(k) * b.value_at(k) for k in product.indices.tolist()),
                             default=-math.inf)
        ab = GrandSequence.from_mapping({k: a.value_at(k) * b.value_at(k) for k in a.indices.tolist()}, a.index_set)
        norm_a = self.grand.grand_norm(a, GrandParams(q1, theta), cfg)
        norm_b = self.grand.grand_norm(b, GrandParams(q2, theta), cfg)
        norm_ab = self.grand.grand_norm(ab, GrandParams(q3, theta), cfg)
        denominator = norm_a.lower * norm_b.lower
        measured = norm_ab.upper / denominator if denominator > 0.0 else 1.0
        c = measured if c is None else float(c)
        sequence_residual = norm_ab.lower - c * norm_a.upper * norm_b.upper
        notes = {'local_residual': local_residual, 'sequence_residual': sequence_residual,
                 'c': c, 'C': C, 'measured_c': measured}

        if local_residual > tolerance:
            report.add(CaseRecord.hypothesis_failure(case, 'local Holder premise', inputs, notes))
            return report
        if sequence_residual > tolerance:
            report.add(CaseRecord.hypothesis_failure(case, 'sequence premise', inputs, notes))
            return report
        lhs = self.grand.grand_norm(product, GrandParams(q3, theta), cfg)
        rhs = norm_a.times(norm_b).scaled(c * C)
        report.add(CaseRecord.compare(case, '||fg|| <= cC ||f|| ||g||', inputs, lhs, rhs, tolerance, notes))
        return report
    # endregion Inequalities

    # region Embeddings
    def embedding_q(self, g: StepFunction, params: AmalgamParams, q2: float, cfg: OptimizerConfig = None,
                    tolerance: float = 1e-9, case: int = 0) -> CaseRecord:
        """||g||_{p,q2),theta} <= ||g||_{p,q1),(q1/q2) theta} for q1 <= q2, constant 1."""
        if q2 < params.q:
            raise DomainError("embedding in q needs q2 >= q")
        s = self.local_lp(g, params.p)
        lhs = self.grand.grand_norm(s, GrandParams(q2, params.theta), cfg)
        rhs = self.grand.grand_norm(s, GrandParams(params.q, params.theta * params.q / q2), cfg)
        inputs = {'g': g.to_record(), **params.to_record(), 'q2': q2}
        return CaseRecord.compare(case, 'q-embedding', inputs, lhs, rhs, tolerance, {'constant': 1.0})

    def embedding_theta(self, g: StepFunction, params: AmalgamParams, theta2: float, cfg: OptimizerConfig = None,
                        tolerance: float = 1e-9, case: int = 0) -> CaseRecord:
        """||g||_{p,q),theta2} <= psi_max^((theta2-theta1)/q) ||g||_{p,q),theta1} for theta1 <= theta2."""
        if theta2 < params.theta:
            raise DomainError("embedding in theta needs theta2 >= theta")
        s = self.local_lp(g, params.p)
        constant = psi_max() ** ((theta2 - params.theta) / params.q)
        lhs = self.grand.grand_norm(s, GrandParams(params.q, theta2), cfg)
        rhs = self.grand.grand_norm(s, params.grand, cfg)
        inputs = {'g': g.to_record(), **params.to_record(), 'theta2': theta2}
        notes = {'constant': constant, 'ratio': lhs.upper / rhs.lower if rhs.lower > 0.0 else 0.0}
        return CaseRecord.compare(case, 'theta-embedding', inputs, lhs, rhs.scaled(constant), tolerance, notes)

    def embedding_p(self, g: StepFunction, params: AmalgamParams, p2: float, theta2: float,
                    cfg: OptimizerConfig = None, tolerance: float = 1e-9, case: int = 0) -> List[CaseRecord]:
        """
        Local monotonicity ||g chi_{I_k}||_p <= ||g chi_{I_k}||_{p2} for p <= p2, and
        ||g||_{p,q),theta2} <= psi_max^((theta2-theta)/q) ||g||_{p2,q),theta}.
        """
        if p2 < params.p or theta2 < params.theta:
            raise DomainError("embedding in p needs p2 >= p and theta2 >= theta")
        small_p = self.local_lp(g, params.p)
        large_p = self.local_lp(g, p2)
        ratio = max((small_p.value_at(k) / large_p.value_at(k) for k in small_p.indices.tolist()), default=0.0)
        inputs = {'g': g.to_record(), **params.to_record(), 'p2': p2, 'theta2': theta2}
        records = [CaseRecord.compare(case, 'local p-monotonicity', inputs, NormBracket.exact(ratio),
                                      NormBracket.exact(1.0), tolerance, {'max_ratio': ratio})]
        constant = psi_max() ** ((theta2 - params.theta) / params.q)
        lhs = self.grand.grand_norm(small_p, GrandParams(params.q, theta2), cfg)
        rhs = self.grand.grand_norm(large_p, params.grand, cfg).scaled(constant)
        records.append(CaseRecord.compare(case, 'p-embedding', inputs, lhs, rhs, tolerance, {'constant': constant}))
        return records

    def embedding_classical(self, g: StepFunction, params: AmalgamParams, cfg: OptimizerConfig = None,
                            tolerance: float = 1e-9, case: int = 0) -> CaseRecord:
        """||g||_{p,q),theta} <= psi_max^(theta/q) ||g||_{l^q(L^p)}."""
        constant = psi_max() ** params.grand.weight
        lhs = self.amalgam_grand_norm(g, params, cfg)
        rhs = self.classical_amalgam_norm(g, params.p, params.q).scaled(constant)
        inputs = {'g': g.to_record(), **params.to_record()}
        return CaseRecord.compare(case, 'classical embedding', inputs, lhs, rhs, tolerance, {'constant': constant})

    def embedding_sandwich(self, g: StepFunction, params: AmalgamParams, delta: float, sigma: float,
                           cfg: OptimizerConfig = None, tolerance: float = 1e-9, case: int = 0) -> List[CaseRecord]:
        """
        ||g||_{l^{q(1+delta)}(L^p)} <= delta^(-theta/(q(1+delta))) ||g||_{p,q),theta} and
        ||g||_{p,q),theta} <= psi_max^(theta/q) ||g||_{l^{q(1-sigma)}(L^p)} for 0 < sigma < 1/q'.

        *Notes*:
        - For q = 1 no sigma is admissible and only the first inequality is recorded.
        """
        if delta <= 0.0:
            raise DomainError("delta must be positive")
        q = params.q
        s = self.local_lp(g, params.p)
        norm = self.amalgam_grand_norm(g, params, cfg)
        inputs = {'g': g.to_record(), **params.to_record(), 'delta': delta, 'sigma': sigma}
        low_constant = delta ** (-params.theta / (q * (1.0 + delta)))
        records = [CaseRecord.compare(case, 'sandwich lower', inputs,
                                      self.grand.norms.lp_norm(s, q * (1.0 + delta)), norm.scaled(low_constant),
                                      tolerance, {'constant': low_constant})]
        if q > 1.0:
            if not 0.0 < sigma < 1.0 - 1.0 / q:
                raise DomainError(f"sigma must lie in (0, 1/q'), got {sigma}")
            high_constant = psi_max() ** params.grand.weight
            records.append(CaseRecord.compare(case, 'sandwich upper', inputs, norm,
                                              self.grand.norms.lp_norm(s, q * (1.0 - sigma)).scaled(high_constant),
                                              tolerance, {'constant': high_constant}))
        return records
    # endregion Embeddings

    def set_integral_counterexample(self, p: float, q: float, threshold: float = 1e6,
                                    horizons: Iterable[float] = SET_INTEGRAL_HORIZONS,
                                    cfg: OptimizerConfig = None) -> SetIntegralEvidence:
        """
        g = sum n^((beta-alpha)/p) chi_[n, n+n^(-beta)] with alpha = p/q, beta = (q-alpha)/(q-1), theta = 2.

        *Arguments*:
        - p, q --> float : Exponents with 1 <= p < q.
        - threshold --> float : Level the integral partials must exceed.
        - horizons --> iterable : Horizons H of the partial integrals.
        - cfg --> OptimizerConfig : Search settings of the norm.

        *Returns*:
        - SetIntegralEvidence : Finite norm, integral partials growing past the threshold.

        *Notes*:
        - Partial integrals sum_{n<=H} n^(-s), s = beta - (beta-alpha)/p < 1, are bounded below by
          ((H+1)^(1-s) - 1)/(1-s), which is evaluated in logs for huge H.
        """
        if not 1.0 <= p < q:
            raise DomainError(f"the counterexample needs 1 <= p < q, got p={p}, q={q}")
        alpha = p / q
        beta = (q - alpha) / (q - 1.0)
        family = AnalyticFamily.shrinking_support(gamma=beta, coefficient=(beta - alpha) / p)
        params = AmalgamParams(p, q, 2.0)
        norm = self.amalgam_grand_norm(StepFunction.from_family(family), params, cfg)

        s, _ = family.integral_exponent()
        horizons = tuple(float(h) for h in horizons)
        partial = []
        for horizon in horizons:
            log_growth = (1.0 - s) * math.log1p(horizon)
            partial.append(math.expm1(log_growth) / (1.0 - s) if log_growth < 700.0 else math.inf)
        crossed = any(v > threshold for v in partial)
        monotone = all(b > a for a, b in zip(partial, partial[1:]))
        self.logger.write_debug(f"set integral counterexample p={p:g} q={q:g}: norm upper {norm.upper:.6g}")
        return SetIntegralEvidence(family, params, norm, horizons, tuple(partial), threshold, crossed, monotone)


def plateau_sequence_family(q: float, a: float) -> StepFunction:
    """Step function n^(-1/q) (ln(n+1))^(-a) on I_n for n >= 1."""
    return StepFunction.from_family(AnalyticFamily.powerlog_plateau(1.0 / q, a))


