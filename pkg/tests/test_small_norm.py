#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# test_small_norm.py
"""
Description: Tests of decompositions, inner infima, the decomposition search, duality bounds and the
lattice, subadditivity and Hoelder checks of SmallNormCalculator.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import numpy as np
import pytest

from src.libs.common.Errors.Errors import DomainError, InvariantError
from src.libs.grand_norm.GrandNorm import GrandParams
from src.libs.sequences.GrandSequence import GrandSequence, NormBracket
from src.libs.small_norm.SmallNorm import Decomposition, SmallNormEstimate
from src.libs.special_functions.SpecialFunctions import psi_min_reciprocal
from src.libs.verifier.Report import Status

UNIT = GrandParams(1, 1)


class TestDecomposition:

    def test_constructors(self):
        """trivial has one part, per_index one per index, from_labels one per label."""
        base = GrandSequence.from_values([1.0, 2.0, 3.0])
        assert Decomposition.trivial(base).n_parts == 1
        assert Decomposition.per_index(base).n_parts == 3
        assert Decomposition.from_labels(base, [0, 0, 1]).n_parts == 2

    def test_proportional_rows_sum_to_base(self):
        """The last part absorbs rounding."""
        base = GrandSequence.from_values([0.1, 0.7])
        d = Decomposition.proportional(base, [1.0, 2.0, 3.0])
        assert np.allclose(d.parts.sum(axis=0), base.values, rtol=0.0, atol=1e-15)

    def test_zero_rows_are_dropped(self):
        """Empty parts do not count."""
        base = GrandSequence.from_values([1.0, 2.0])
        assert Decomposition(base, np.array([[1.0, 2.0], [0.0, 0.0]])).n_parts == 1

    def test_row_sum_mismatch(self):
        """Parts must add up to the base."""
        with pytest.raises(InvariantError):
            Decomposition(GrandSequence.from_values([1.0, 2.0]), np.array([[1.0, 1.0]]))

    def test_negative_part(self):
        """Parts are nonnegative."""
        with pytest.raises(InvariantError):
            Decomposition(GrandSequence.from_values([1.0]), np.array([[2.0], [-1.0]]))

    def test_negative_base(self):
        """The base is |y|, never signed."""
        with pytest.raises(InvariantError):
            Decomposition.trivial(GrandSequence.from_values([1.0, -1.0]))

    def test_concat(self):
        """Concatenation stacks parts over the union support."""
        first = Decomposition.trivial(GrandSequence.from_mapping({0: 1.0}))
        second = Decomposition.per_index(GrandSequence.from_mapping({0: 1.0, 2: 2.0}))
        joined = first.concat(second)
        assert joined.n_parts == 3
        assert joined.base.entries == ((0, 2.0), (2, 2.0))

    def test_proportional_rejects_bad_weights(self):
        """Weights need a positive sum."""
        with pytest.raises(DomainError):
            Decomposition.proportional(GrandSequence.from_values([1.0]), [0.0, 0.0])


class TestInnerInf:

    def test_spike(self, small):
        """inf psi(eps)^-1 = e W(1/e) for a unit spike."""
        bracket = small.inner_inf(GrandSequence.spike(), UNIT)
        assert bracket.contains(psi_min_reciprocal(), tol=1e-10)
        assert bracket.width <= 1e-8

    def test_empty(self, small):
        """An empty part costs nothing."""
        assert small.inner_inf(GrandSequence.zero(), UNIT).upper == 0.0

    def test_rejects_signed(self, small):
        """Parts are nonnegative."""
        with pytest.raises(DomainError):
            small.inner_inf(GrandSequence.spike(0, -1.0), UNIT)

    def test_never_above_l1(self, small):
        """The eps -> inf limit ||part||_1 bounds the infimum."""
        part = GrandSequence.from_values([1.0, 1.0, 1.0, 1.0])
        assert small.inner_inf(part, GrandParams(2, 4)).upper <= 4.0 * (1 + 1e-12)

    def test_pair_matches_dense_grid(self, small):
        """For {1, 1} at q = theta = 1 the objective is eps^(-1/(1+eps)) 2^(eps/(1+eps))."""
        eps = np.geomspace(1e-3, 1e3, 400_001)
        dense = float(np.min(np.exp((eps * np.log(2.0) - np.log(eps)) / (1.0 + eps))))
        bracket = small.inner_inf(GrandSequence.from_values([1.0, 1.0]), UNIT)
        assert bracket.contains(dense, tol=1e-8)
        assert bracket.upper == pytest.approx(1.2587153876, rel=1e-8)

    def test_grid_value_bounds_certified_value(self, small):
        """The fixed-grid value never undercuts the certified upper end."""
        d = Decomposition.from_labels(GrandSequence.from_values([1.0, 0.5, 0.25]), [0, 0, 1])
        assert small.decomposition_value(d, UNIT).upper <= small.decomposition_grid_value(d, UNIT) * (1 + 1e-12)

    def test_bounds_bracket(self, small):
        """decomposition_bounds keeps lower <= upper."""
        d = Decomposition.per_index(GrandSequence.from_values([2.0, 1.0]))
        bracket = small.decomposition_bounds(d, GrandParams(2, 1))
        assert bracket.lower <= bracket.upper


class TestDecompositionValue:

    def test_trivial_spike(self, small):
        """A single spike costs e W(1/e)^(theta/q)."""
        params = GrandParams(2, 0.7)
        value = small.decomposition_value(Decomposition.trivial(GrandSequence.spike()), params)
        assert value.contains(psi_min_reciprocal() ** params.weight, tol=1e-9)

    def test_proportional_split_costs_the_same(self, small):
        """Each part objective is homogeneous, so splitting a spike 1:3 keeps the value."""
        params = GrandParams(2, 0.7)
        trivial = small.decomposition_value(Decomposition.trivial(GrandSequence.spike()), params)
        split = small.decomposition_value(Decomposition.proportional(GrandSequence.spike(), [1.0, 3.0]), params)
        assert split.upper == pytest.approx(trivial.upper, rel=1e-8)
        assert split.lower == pytest.approx(trivial.lower, rel=1e-8)
        assert split.upper == pytest.approx(0.90713627692, rel=1e-8)

    def test_empty_decomposition(self, small):
        d = Decomposition.trivial(GrandSequence.zero())
        assert small.decomposition_value(d, UNIT).upper == 0.0


class TestSmallNormUpper:

    def test_spike(self, small):
        """The small norm of a unit spike is e W(1/e)."""
        estimate = small.small_norm_upper(GrandSequence.spike(), UNIT, budget=8)
        assert estimate.upper == pytest.approx(psi_min_reciprocal(), rel=1e-12)
        assert estimate.lower == pytest.approx(psi_min_reciprocal(), rel=1e-9)

    def test_zero(self, small):
        """The zero sequence has small norm 0."""
        estimate = small.small_norm_upper(GrandSequence.zero(), UNIT)
        assert (estimate.lower, estimate.upper) == (0.0, 0.0)

    def test_budget_zero_keeps_trivial(self, small):
        """Budget 0 evaluates only the trivial decomposition."""
        estimate = small.small_norm_upper(GrandSequence.from_values([1.0, 2.0]), UNIT, budget=0)
        assert estimate.evaluations == 1
        assert estimate.witness_decomposition.n_parts == 1

    def test_search_beats_structured_candidates(self, small):
        """The best value is at most that of every structured candidate."""
        y = GrandSequence.from_values([1.0, 1.0, 0.5, 0.25])
        estimate = small.small_norm_upper(y, UNIT, budget=40)
        for candidate in estimate.explored:
            assert estimate.upper <= small.decomposition_grid_value(candidate, UNIT) + 1e-12
        assert 0.0 < estimate.lower <= estimate.upper
        assert estimate.upper <= estimate.refined.upper

    def test_indicator_of_three_points(self, small):
        """The indicator of {-1, 0, 1} costs at most three spikes."""
        y = GrandSequence.from_values([1.0, 1.0, 1.0], start=-1)
        estimate = small.small_norm_upper(y, UNIT, budget=8)
        assert estimate.upper <= 3.0 * psi_min_reciprocal() * (1 + 1e-12)
        assert estimate.upper <= 2.2708
        assert 0.0 < estimate.lower <= estimate.upper

    def test_upper_takes_the_certified_value(self, small):
        """upper is the smaller of the grid value and the certified value of the witness."""
        y = GrandSequence.from_values([2.0, 1.0, 0.5])
        estimate = small.small_norm_upper(y, GrandParams(2, 1), budget=20)
        grid = small.decomposition_grid_value(estimate.witness_decomposition, GrandParams(2, 1))
        assert estimate.upper <= estimate.refined.upper
        assert estimate.upper <= grid * (1 + 1e-12)
        assert estimate.upper == pytest.approx(min(grid, estimate.refined.upper), rel=1e-12)

    def test_search_is_deterministic(self, small):
        """A fixed seed repeats the annealing path."""
        y = GrandSequence.from_values([3.0, 1.0, 2.0, 0.5, 1.5])
        first = small.small_norm_upper(y, GrandParams(2, 1), budget=30)
        second = small.small_norm_upper(y, GrandParams(2, 1), budget=30)
        assert first.upper == second.upper

    def test_sign_is_ignored(self, small):
        """Only |y| enters the decomposition."""
        plus = small.small_norm_upper(GrandSequence.from_values([1.0, 2.0]), UNIT, budget=0)
        minus = small.small_norm_upper(GrandSequence.from_values([-1.0, 2.0]), UNIT, budget=0)
        assert plus.upper == minus.upper

    def test_rejects_infinite_support(self, small):
        """Tails cannot be decomposed."""
        with pytest.raises(DomainError):
            small.small_norm_upper(GrandSequence.power_log(2.0), UNIT)

    def test_seed_with_other_base(self, small):
        """A seed must decompose |y|."""
        seed = Decomposition.trivial(GrandSequence.from_values([5.0]))
        with pytest.raises(InvariantError):
            small.small_norm_upper(GrandSequence.from_values([1.0]), UNIT, budget=0, seeds=[seed])

    def test_estimate_rejects_inverted_bounds(self):
        """lower above upper is an invariant violation."""
        with pytest.raises(InvariantError):
            SmallNormEstimate(1.0, 2.0, None, None, NormBracket.zero())


class TestDuality:

    def test_spike(self, small):
        """The spike candidate gives 1 / psi_max."""
        bound, witness = small.dual_lower_bound(GrandSequence.spike(), UNIT)
        assert bound == pytest.approx(psi_min_reciprocal(), rel=1e-9)
        assert witness is not None

    def test_zero(self, small):
        """No bound for the zero sequence."""
        assert small.dual_lower_bound(GrandSequence.zero(), UNIT) == (0.0, None)

    def test_default_candidates(self, small):
        """Spikes, block indicators, |y| and the profile."""
        y = GrandSequence.from_values([1.0, -2.0, 3.0, 4.0])
        candidates = small.default_candidates(y, UNIT)
        assert len(candidates) == 4 + 2 + 1 + 1 + 1


class TestTransfer:

    def test_split_index(self, small):
        """Parts (1, 2) at one index transfer to (1, 1) for y = 2."""
        d = Decomposition(GrandSequence.from_mapping({0: 3.0}), np.array([[1.0], [2.0]]))
        transferred = small.transfer_decomposition(d, GrandSequence.from_mapping({0: 2.0}))
        assert transferred.parts.tolist() == [[1.0], [1.0]]

    def test_drops_vanishing_indices(self, small):
        """Indices where y is zero leave the support."""
        d = Decomposition.trivial(GrandSequence.from_mapping({0: 1.0, 1: 1.0}))
        transferred = small.transfer_decomposition(d, GrandSequence.from_mapping({1: 0.5}))
        assert transferred.base.entries == ((1, 0.5),)

    def test_rejects_undominated(self, small):
        """y above x at an index breaks the transfer."""
        d = Decomposition.trivial(GrandSequence.from_mapping({0: 1.0}))
        with pytest.raises(InvariantError):
            small.transfer_decomposition(d, GrandSequence.from_mapping({0: 2.0}))


class TestChecks:

    def test_lattice(self, small):
        """y <= x gives small(y) <= small(x), record by record."""
        x = GrandSequence.from_values([2.0, 1.0, 1.0])
        y = GrandSequence.from_values([1.0, 1.0, 0.5])
        report = small.lattice_compare(x, y, UNIT, budget=12)
        assert report.passed

    def test_lattice_rejects_undominated(self, small):
        """The premise y <= x is checked."""
        with pytest.raises(InvariantError):
            small.lattice_compare(GrandSequence.from_values([1.0]), GrandSequence.from_values([2.0]), UNIT)

    def test_subadditivity(self, small):
        """The seeded search never loses to the sum of the parts."""
        y1 = GrandSequence.from_values([1.0, 0.5])
        y2 = GrandSequence.from_values([0.5, 0.0, 2.0])
        record = small.subadditivity_check(y1, y2, GrandParams(2, 1), budget=12)
        assert record.status is Status.PASS

    def test_holder_spike(self, small):
        """1 <= psi_max * e W(1/e) holds with equality up to rounding."""
        record = small.holder_check(GrandSequence.spike(), GrandSequence.spike(), UNIT, budget=4)
        assert record.status is Status.PASS
        assert record.rhs.upper == pytest.approx(1.0, rel=1e-8)

    def test_holder_pair(self, small):
        """A two-point pairing stays below the product of norms."""
        x = GrandSequence.from_values([1.0, 2.0])
        y = GrandSequence.from_values([3.0, -1.0])
        assert small.holder_check(x, y, GrandParams(2, 1), budget=8).status is Status.PASS
