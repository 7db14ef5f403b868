#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# MultiplicationOperator.py
"""
Description: The multiplication operator f -> fg on the grand amalgam space for compactly supported step
multipliers g: application, operator-norm brackets from level-set trials, the isometry criterion, the bound
into L^1 and the truncation ladder of unbounded multipliers.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import math

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from src.libs.common.Config.Configuration import OperatorConfig, OptimizerConfig
from src.libs.common.Errors.Errors import DomainError
from src.libs.common.Logger.Logger import Logger
from src.libs.amalgam.Amalgam import AmalgamCalculator, AmalgamParams
from src.libs.amalgam.StepFunction import StepFunction
from src.libs.sequences.GrandSequence import NormBracket
from src.libs.special_functions.SpecialFunctions import dual_exponent
from src.libs.verifier.Report import CaseRecord, VerificationReport

# region Global params
UNIT_TOLERANCE: float = 1e-12
UNBOUNDEDNESS_LEVELS: Tuple[float, ...] = (2.0, 10.0, 100.0, 1000.0)
# endregion Global params


@dataclass(frozen=True)
class Multiplier:
    """Compactly supported step multiplier g."""
    g: StepFunction

    def __post_init__(self) -> None:
        if not self.g.is_finite:
            raise DomainError("a multiplier needs compact support (finitely many pieces)")

    @property
    def ess_sup(self) -> float:
        return self.g.ess_sup()

    @property
    def is_unimodular(self) -> bool:
        """Whether |g| = 1 on every nonzero cell."""
        return all(v == 0.0 or abs(abs(v) - 1.0) <= UNIT_TOLERANCE
                   for _, cells in self.g.pieces for _, v in cells)

    def support_indicator(self) -> StepFunction:
        return self.g.level_set_indicator(0.0)

    def to_record(self) -> dict:
        return {'g': self.g.to_record()}


@dataclass(frozen=True)
class OperatorNormEstimate:
    """
    Bracket of the operator norm of M_g.

    *Attributes*:
    - lower --> float : Best certified quotient ||fg|| / ||f|| over the trials.
    - upper --> float : ess_sup(g).
    - witness --> StepFunction : Trial attaining the lower value.
    - ladder --> tuple : (delta, running lower) pairs of the level-set trials.
    """
    lower: float
    upper: float
    witness: Optional[StepFunction]
    ladder: Tuple[Tuple[float, float], ...] = ()

    def to_record(self) -> dict:
        return {
            'lower': self.lower, 'upper': self.upper,
            'witness': self.witness.to_record() if self.witness is not None else None,
            'ladder': [list(step) for step in self.ladder],
        }


class MultiplicationOperator:
    """
    Estimates and checks for M_g f = fg.

    *Attributes*:
    - logger --> Logger : Instance of the Logger class to log messages.
    - amalgam --> AmalgamCalculator : Grand and small amalgam norms.
    - config --> OperatorConfig : Level-set ladder.

    *Methods*:
    - apply(m, f) --> StepFunction fg.
    - op_norm_estimate(m, params, trials) --> OperatorNormEstimate.
    - isometry_check(m, params, trials) --> VerificationReport.
    - l1_bound_check(m, params, trials) --> VerificationReport.
    - unboundedness_ladder(params, levels) --> VerificationReport.
    """

    def __init__(self, logger: Logger, amalgam: AmalgamCalculator, config: OperatorConfig = None) -> None:
        """
        Initializes the MultiplicationOperator instance.

        *Arguments*:
        - logger --> Logger : Instance of the Logger class for logging messages.
        - amalgam --> AmalgamCalculator : Shared norm calculator.
        - config --> OperatorConfig : Defaults when None.

        *Returns*:
        - None
        """
        self.logger = logger
        self.amalgam = amalgam
        self.config = config if config is not None else OperatorConfig()
        self.logger.write_info("MultiplicationOperator initialized.")

    @staticmethod
    def apply(m: Multiplier, f: StepFunction) -> StepFunction:
        """
        Exact product fg on the common cell refinement.

        *Examples*:
        - apply(Multiplier(StepFunction.constant([0, 1, 2], 2)), StepFunction.indicator([0])) --> 2 chi_[0,1)
        """
        return f.multiply(m.g)

    def _quotient(self, m: Multiplier, f: StepFunction, params: AmalgamParams,
                  cfg: OptimizerConfig) -> Tuple[float, NormBracket, NormBracket]:
        """Certified lower quotient ||fg|| / ||f|| with both brackets."""
        image = self.amalgam.amalgam_grand_norm(self.apply(m, f), params, cfg)
        source = self.amalgam.amalgam_grand_norm(f, params, cfg)
        if source.upper == 0.0 or math.isinf(source.upper):
            return 0.0, image, source
        return image.lower / source.upper, image, source

    def level_set_trials(self, m: Multiplier) -> List[Tuple[float, StepFunction]]:
        """Indicators of {|g| > ess_sup - delta} for the delta ladder, largest delta first."""
        top = m.ess_sup
        trials = []
        for delta in sorted(self.config.delta_ladder, reverse=True):
            trials.append((delta, m.g.level_set_indicator(max(top - delta, 0.0))))
        return trials

    def op_norm_estimate(self, m: Multiplier, params: AmalgamParams, trials: Sequence[StepFunction] = (),
                         cfg: OptimizerConfig = None) -> OperatorNormEstimate:
        """
        Bracket of ||M_g|| on the grand amalgam space.

        *Arguments*:
        - m --> Multiplier : The multiplier.
        - params --> AmalgamParams : p, q and theta.
        - trials --> sequence : Extra nonzero trial functions.
        - cfg --> OptimizerConfig : Search settings over eps.

        *Returns*:
        - OperatorNormEstimate : lower from the best trial quotient, upper = ess_sup(g).

        *Examples*:
        - op_norm_estimate(Multiplier(StepFunction.constant([0, 1, 2], 2)), AmalgamParams(2, 1, 1)) --> [2.0, 2.0]

        *Notes*:
        - The level-set indicators of the delta ladder are always tried, so the lower value is within the
          smallest delta of ess_sup(g) up to bracket widths.
        """
        upper = m.ess_sup
        if upper == 0.0:
            return OperatorNormEstimate(0.0, 0.0, None, ())
        best, witness = 0.0, None
        for f in trials:
            if f.is_zero:
                raise DomainError("operator-norm trials must be nonzero")
            quotient, _, _ = self._quotient(m, f, params, cfg)
            if quotient > best:
                best, witness = quotient, f
        ladder = []
        for delta, f in self.level_set_trials(m):
            quotient, _, _ = self._quotient(m, f, params, cfg)
            if quotient > best:
                best, witness = quotient, f
            ladder.append((delta, best))
        self.logger.write_debug(f"operator norm bracket [{best:.10g}, {upper:.10g}]")
        return OperatorNormEstimate(min(best, upper), upper, witness, tuple(ladder))

    def _violation_witness(self, m: Multiplier) -> Tuple[StepFunction, float, bool]:
        """Indicator of the cells where |g| is farthest from 1, its extreme value and whether it is below 1."""
        below = [(k, [(w, 1.0 if v != 0.0 and abs(v) < 1.0 - UNIT_TOLERANCE else 0.0) for w, v in cells])
                 for k, cells in m.g.pieces]
        low_values = [abs(v) for _, cells in m.g.pieces for _, v in cells if v != 0.0 and abs(v) < 1.0 - UNIT_TOLERANCE]
        if low_values:
            return StepFunction(m.g.index_set, tuple((k, tuple(c)) for k, c in below)), max(low_values), True
        above = [(k, [(w, 1.0 if abs(v) > 1.0 + UNIT_TOLERANCE else 0.0) for w, v in cells])
                 for k, cells in m.g.pieces]
        high_values = [abs(v) for _, cells in m.g.pieces for _, v in cells if abs(v) > 1.0 + UNIT_TOLERANCE]
        return StepFunction(m.g.index_set, tuple((k, tuple(c)) for k, c in above)), min(high_values), False

    def isometry_check(self, m: Multiplier, params: AmalgamParams, trials: Sequence[StepFunction] = (),
                       cfg: OptimizerConfig = None, tolerance: float = 1e-9, case: int = 0) -> VerificationReport:
        """
        Isometry criterion: ||fg|| = ||f|| for every f supported in supp(g) iff |g| = 1 on supp(g).

        *Arguments*:
        - m --> Multiplier : The multiplier, nonzero.
        - params --> AmalgamParams : p, q and theta.
        - trials --> sequence : Trial functions supported inside supp(g); others are skipped with a warning.
        - cfg --> OptimizerConfig : Search settings over eps.
        - tolerance --> float : Absolute slack.
        - case --> int : Case index of the records.

        *Returns*:
        - VerificationReport : Two-sided equality records when |g| = 1, otherwise one record certifying that
          the level-set witness moves the norm away from 1 by half the gap of |g| to 1. meta['unimodular']
          holds the criterion.
        """
        if m.g.is_zero:
            raise DomainError("the isometry criterion needs a nonzero multiplier")
        report = VerificationReport('isometry', tolerance, meta={'unimodular': m.is_unimodular})
        inputs = {**m.to_record(), **params.to_record()}
        if m.is_unimodular:
            support = m.support_indicator()
            for f in [support, *trials]:
                if not f.support_within(support):
                    self.logger.write_warning("isometry trial outside the support of g skipped")
                    continue
                _, image, source = self._quotient(m, f, params, cfg)
                record_inputs = {**inputs, 'f': f.to_record()}
                report.add(CaseRecord.compare(case, '||fg|| <= ||f||', record_inputs, image, source, tolerance))
                report.add(CaseRecord.compare(case, '||f|| <= ||fg||', record_inputs, source, image, tolerance))
            return report

        witness, extreme, shrinks = self._violation_witness(m)
        _, image, source = self._quotient(m, witness, params, cfg)
        lower = image.lower / source.upper if source.upper > 0.0 else 0.0
        upper = image.upper / source.lower if source.lower > 0.0 else math.inf
        ratio = NormBracket(min(lower, upper), upper)
        gap = abs(1.0 - extreme) / 2.0
        record_inputs = {**inputs, 'f': witness.to_record()}
        notes = {'extreme_value': extreme, 'delta': gap}
        if shrinks:
            report.add(CaseRecord.compare(case, 'ratio <= 1 - delta', record_inputs, ratio,
                                          NormBracket.exact(1.0 - gap), tolerance, notes))
        else:
            report.add(CaseRecord.compare(case, '1 + delta <= ratio', record_inputs,
                                          NormBracket.exact(1.0 + gap), ratio, tolerance, notes))
        return report

    def l1_bound_check(self, m: Multiplier, params: AmalgamParams, trials: Sequence[StepFunction],
                       budget: Optional[int] = None, cfg: OptimizerConfig = None, tolerance: float = 1e-9,
                       case: int = 0) -> VerificationReport:
        """
        Checks ||fg||_1 <= ||g||_{p',q)',theta} ||f||_{p,q),theta} for every trial f.

        *Examples*:
        - f = g = chi_[0,1), p=2, q=1, theta=1 --> 1 <= 0.75694 * 1.32111
        """
        report = VerificationReport('l1_bound', tolerance)
        if m.g.is_zero:
            small = NormBracket.zero()
        else:
            small = self.amalgam.amalgam_small_norm(m.g, params.with_p(dual_exponent(params.p)), budget, cfg).bracket
        for f in trials:
            lhs = NormBracket.exact(f.integral_abs_product(m.g))
            grand = self.amalgam.amalgam_grand_norm(f, params, cfg)
            inputs = {**m.to_record(), 'f': f.to_record(), **params.to_record()}
            report.add(CaseRecord.compare(case, '||fg||_1 <= small(g) grand(f)', inputs, lhs, small.times(grand),
                                          tolerance, {'small': small, 'grand': grand}))
        return report

    def unboundedness_ladder(self, params: AmalgamParams, levels: Sequence[float] = UNBOUNDEDNESS_LEVELS,
                             cfg: OptimizerConfig = None, tolerance: float = 1e-9) -> VerificationReport:
        """
        Truncations g_m = 1 on [0, 1 - 1/m) and m on K_m = [1 - 1/m, 1) with ||M_{g_m} chi_K|| >= m ||chi_K||.

        *Notes*:
        - Growing m models an unbounded g: no single bound on ||M_g|| survives the ladder.
        """
        report = VerificationReport('unboundedness', tolerance)
        for case, level in enumerate(levels):
            if level <= 1.0:
                raise DomainError(f"ladder levels must exceed 1, got {level}")
            g = StepFunction.from_cells({0: [(1.0 - 1.0 / level, 1.0), (1.0 / level, level)]})
            plateau = StepFunction.from_cells({0: [(1.0 - 1.0 / level, 0.0), (1.0 / level, 1.0)]})
            _, image, source = self._quotient(Multiplier(g), plateau, params, cfg)
            ratio = NormBracket(min(image.lower / source.upper, image.upper / source.lower),
                                image.upper / source.lower)
            report.add(CaseRecord.compare(case, 'm <= ||g_m chi_K|| / ||chi_K||', {'m': level, **params.to_record()},
                                          NormBracket.exact(level), ratio, tolerance))
        return report
