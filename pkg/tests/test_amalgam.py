#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# test_amalgam.py
"""
Description: Tests of AmalgamCalculator: local norms, factorized and direct norms, the integral
inequalities, the embeddings and the set-integral counterexample.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import math

import pytest

from src.libs.amalgam.Amalgam import AmalgamCalculator, AmalgamParams, plateau_sequence_family
from src.libs.amalgam.StepFunction import AnalyticFamily, StepFunction
from src.libs.common.Errors.Errors import DomainError
from src.libs.special_functions.SpecialFunctions import psi_max
from src.libs.verifier.Report import Status

BASIC = AmalgamParams(2, 1, 1)


def _mixed() -> StepFunction:
    return StepFunction.from_cells({0: [(0.5, 2.0), (0.5, 1.0)], -1: [(1.0, 3.0)]})


class TestAmalgamParams:

    @pytest.mark.parametrize('p, q, theta', [
        (0.5, 1.0, 1.0), (math.nan, 1.0, 1.0), (2.0, 0.5, 1.0), (2.0, 1.0, 0.0),
    ])
    def test_rejects(self, p, q, theta):
        """p >= 1 plus the grand-norm conditions on q and theta."""
        with pytest.raises(DomainError):
            AmalgamParams(p, q, theta)

    def test_infinite_p_record(self):
        """p = inf is allowed and serialised as text."""
        assert AmalgamParams(math.inf, 2, 1).to_record()['p'] == 'inf'


class TestLocalNorms:

    def test_indicator(self, amalgam):
        """A full interval has local norm 1 for every p."""
        s = amalgam.local_lp(StepFunction.indicator([0]), 2.0)
        assert s.entries == ((0, 1.0),)

    def test_partial_cell(self, amalgam):
        """Value 2 on a quarter interval has L^1 norm 0.5 and L^inf norm 2."""
        g = StepFunction.from_cells({0: [(0.25, 2.0), (0.75, 0.0)]})
        assert amalgam.local_lp(g, 1.0).value_at(0) == pytest.approx(0.5)
        assert amalgam.local_lp(g, math.inf).value_at(0) == 2.0

    def test_family_tail(self, amalgam):
        """A plateau family gives a power-log tail."""
        s = amalgam.local_lp(plateau_sequence_family(2.0, 0.6), 3.0)
        assert (s.tail.a, s.tail.b) == (0.5, 0.6)

    def test_rejects_small_p(self, amalgam):
        """p < 1 is outside the domain."""
        with pytest.raises(DomainError):
            amalgam.local_lp(StepFunction.indicator([0]), 0.5)


class TestNorms:

    def test_indicator_grand_norm(self, amalgam):
        """chi_[0,1) has grand amalgam norm psi_max^(theta/q)."""
        bracket = amalgam.amalgam_grand_norm(StepFunction.indicator([0]), BASIC)
        assert bracket.contains(psi_max(), tol=1e-10)

    def test_direct_matches_factorized(self, amalgam):
        """The cell-level evaluation agrees with the local-norm route."""
        g = _mixed()
        direct = amalgam.amalgam_grand_norm_direct(g, BASIC)
        bracket = amalgam.amalgam_grand_norm(g, BASIC)
        assert direct <= bracket.upper + 1e-9
        assert direct == pytest.approx(bracket.lower, rel=1e-3)

    def test_direct_rejects_families(self, amalgam):
        """The direct route needs finitely many pieces."""
        with pytest.raises(DomainError):
            amalgam.amalgam_grand_norm_direct(plateau_sequence_family(2.0, 1.0), BASIC)

    def test_classical(self, amalgam):
        """Four unit intervals have l^2(L^2) norm 2."""
        bracket = amalgam.classical_amalgam_norm(StepFunction.indicator(range(4)), 2.0, 2.0)
        assert bracket.contains(2.0, tol=1e-12)

    def test_small_norm_needs_finite_pieces(self, amalgam):
        """Families have no small norm here."""
        with pytest.raises(DomainError):
            amalgam.amalgam_small_norm(plateau_sequence_family(2.0, 1.0), BASIC)

    def test_char_fn_bound(self):
        """(2M)^(1/q) psi_max^(theta/q) at M = 1, q = theta = 1."""
        assert AmalgamCalculator.char_fn_norm_bound(1, BASIC) == pytest.approx(2.64222, abs=1e-5)

    def test_char_fn_bound_dominates_indicators(self, amalgam):
        """Every indicator inside [-1, 1] stays below the bound."""
        E = StepFunction.from_cells({-1: [(0.5, 1.0), (0.5, 0.0)], 0: [(1.0, 1.0)]})
        assert amalgam.amalgam_grand_norm(E, BASIC).upper <= AmalgamCalculator.char_fn_norm_bound(1, BASIC)

    def test_char_fn_rejects(self):
        """M is a positive integer."""
        with pytest.raises(DomainError):
            AmalgamCalculator.char_fn_norm_bound(0, BASIC)


class TestInequalities:

    def test_holder_integral(self, amalgam):
        """int |g f| <= grand(g) small(f) for two step functions."""
        f = StepFunction.from_cells({0: [(0.5, 1.0), (0.5, 4.0)]})
        report = amalgam.holder_integral_check(_mixed(), f, BASIC, budget=4)
        assert report.passed

    def test_integral_over_set(self, amalgam):
        """int_E |g| <= c_E grand(g) with E = [0, 1)."""
        report = amalgam.integral_over_set_bound(_mixed(), StepFunction.indicator([0]), 1, BASIC, budget=4)
        assert report.passed
        assert report.records[0].lhs.upper == pytest.approx(1.5)

    def test_integral_over_set_rejects_weights(self, amalgam):
        """E must be an indicator."""
        with pytest.raises(DomainError):
            amalgam.integral_over_set_bound(_mixed(), StepFunction.constant([0], 2.0), 1, BASIC)

    def test_integral_over_set_rejects_far_set(self, amalgam):
        """E must lie in [-M, M]."""
        with pytest.raises(DomainError):
            amalgam.integral_over_set_bound(_mixed(), StepFunction.indicator([5]), 1, BASIC)

    def test_product_composition(self, amalgam):
        """The Hoelder triple (2, 2, 1) composes for indicators."""
        f = StepFunction.indicator([0, 1])
        report = amalgam.product_composition_check(f, f, ((2.0, 1.0), (2.0, 1.0), (1.0, 1.0)), 1.0)
        assert [r.status for r in report.records] == [Status.PASS]

    def test_product_local_premise(self, amalgam):
        """||fg||_1 <= ||f||_1 ||g||_1 fails for tall half cells, so the premise is reported."""
        f = StepFunction.from_cells({0: [(0.5, 2.0), (0.5, 0.0)]})
        report = amalgam.product_composition_check(f, f, ((1.0, 1.0), (1.0, 1.0), (1.0, 1.0)), 1.0)
        assert report.records[0].status is Status.HYPOTHESIS_FAILURE
        assert report.records[0].notes['local_residual'] == pytest.approx(1.0)


class TestEmbeddings:

    def test_q(self, amalgam):
        """q-embedding with constant 1."""
        assert amalgam.embedding_q(StepFunction.indicator([0, 1]), BASIC, 2.0).status is Status.PASS

    def test_q_rejects(self, amalgam):
        """q2 below q is not an embedding."""
        with pytest.raises(DomainError):
            amalgam.embedding_q(StepFunction.indicator([0]), AmalgamParams(2, 2, 1), 1.0)

    def test_theta(self, amalgam):
        """theta-embedding with constant psi_max^((theta2-theta)/q)."""
        record = amalgam.embedding_theta(_mixed(), BASIC, 2.0)
        assert record.status is Status.PASS
        assert record.notes['constant'] == pytest.approx(psi_max())

    def test_p(self, amalgam):
        """Local monotonicity in p and the p-embedding."""
        records = amalgam.embedding_p(_mixed(), BASIC, 4.0, 1.0)
        assert [r.status for r in records] == [Status.PASS, Status.PASS]
        assert records[0].notes['max_ratio'] <= 1.0 + 1e-12

    def test_classical(self, amalgam):
        """grand <= psi_max^(theta/q) classical."""
        assert amalgam.embedding_classical(_mixed(), AmalgamParams(2, 2, 1)).status is Status.PASS

    def test_sandwich(self, amalgam):
        """Both sides of the sandwich for q = 2."""
        records = amalgam.embedding_sandwich(_mixed(), AmalgamParams(2, 2, 1), 0.5, 0.25)
        assert [r.status for r in records] == [Status.PASS, Status.PASS]

    def test_sandwich_q_one(self, amalgam):
        """q = 1 records only the lower side."""
        assert len(amalgam.embedding_sandwich(_mixed(), BASIC, 0.5, 0.25)) == 1

    def test_sandwich_rejects_sigma(self, amalgam):
        """sigma must lie below 1/q'."""
        with pytest.raises(DomainError):
            amalgam.embedding_sandwich(_mixed(), AmalgamParams(2, 2, 1), 0.5, 0.75)


class TestSetIntegral:

    def test_counterexample(self, amalgam):
        """Finite norm, integral over the support set growing past 1e6."""
        evidence = amalgam.set_integral_counterexample(1.5, 3.0)
        assert evidence.norm.is_finite
        assert evidence.threshold_crossed
        assert evidence.monotone_growth
        assert evidence.family == AnalyticFamily.shrinking_support(1.25, 0.5)

    def test_rejects_p_not_below_q(self, amalgam):
        """p must be below q."""
        with pytest.raises(DomainError):
            amalgam.set_integral_counterexample(3.0, 3.0)
