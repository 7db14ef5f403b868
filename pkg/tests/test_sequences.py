#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# test_sequences.py
"""
Description: Tests of GrandSequence, PowerLogTail, NormBracket and the l^p brackets of SequenceNorms.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import math

from pathlib import Path

import numpy as np
import pytest
from scipy.special import zeta

from src.libs.common.Errors.Errors import DomainError, FormatError, InvariantError
from src.libs.sequences.GrandSequence import GrandSequence, IndexSet, NormBracket, PowerLogTail

SAMPLES = Path(__file__).resolve().parent.parent / 'samples'


class TestNormBracket:

    def test_exact_and_zero(self):
        """Zero-width constructors."""
        assert NormBracket.exact(2.5).width == 0.0
        assert NormBracket.zero().upper == 0.0

    def test_rejects_inverted(self):
        """lower above upper beyond rounding is an invariant violation."""
        with pytest.raises(InvariantError):
            NormBracket(2.0, 1.0)

    def test_rejects_negative_lower(self):
        """Brackets enclose nonnegative quantities."""
        with pytest.raises(InvariantError):
            NormBracket(-1.0, 1.0)

    def test_infinite_upper(self):
        """An infinite upper end is allowed and serialised as 'inf'."""
        bracket = NormBracket(1.0, math.inf)
        assert not bracket.is_finite
        assert bracket.to_record() == {'lower': 1.0, 'upper': 'inf'}

    def test_arithmetic(self):
        """plus, scaled and times act on both ends."""
        a, b = NormBracket(1.0, 2.0), NormBracket(3.0, 5.0)
        assert (a.plus(b).lower, a.plus(b).upper) == (4.0, 7.0)
        assert (a.scaled(2.0).lower, a.scaled(2.0).upper) == (2.0, 4.0)
        assert (a.times(b).lower, a.times(b).upper) == (3.0, 10.0)
        assert a.times(NormBracket.zero()).upper == 0.0

    def test_contains(self):
        """contains honours the tolerance."""
        bracket = NormBracket(1.0, 2.0)
        assert bracket.contains(1.5)
        assert not bracket.contains(2.1)
        assert bracket.contains(2.1, tol=0.2)


class TestGrandSequence:

    def test_entries_are_sorted_and_zeros_dropped(self):
        """Zero values leave the support."""
        x = GrandSequence.from_mapping({3: 1.0, -2: 0.0, 1: -4.0})
        assert x.entries == ((1, -4.0), (3, 1.0))
        assert x.support_size == 2

    def test_duplicate_index(self):
        """Two values at one index are a format error."""
        with pytest.raises(FormatError):
            GrandSequence(IndexSet.INTEGERS, ((0, 1.0), (0, 2.0)))

    def test_index_outside_set(self):
        """Index 0 is not in N."""
        with pytest.raises(DomainError):
            GrandSequence.spike(0, 1.0, IndexSet.NATURALS)

    def test_tail_only_on_one_sided_sets(self):
        """Z has no tail direction."""
        with pytest.raises(DomainError):
            GrandSequence(IndexSet.INTEGERS, (), PowerLogTail(1, 1.0))

    def test_tail_must_follow_entries(self):
        """The tail starts after the last finite entry."""
        with pytest.raises(InvariantError):
            GrandSequence(IndexSet.NATURALS, ((5, 1.0),), PowerLogTail(3, 1.0))

    def test_linf_and_value_at(self):
        """sup norm covers entries and the tail head."""
        x = GrandSequence(IndexSet.NATURALS, ((1, -0.5),), PowerLogTail(2, 1.0))
        assert x.linf == pytest.approx(0.5)
        assert x.value_at(4) == pytest.approx(0.25)
        assert x.value_at(1) == -0.5

    def test_increasing_tail_has_infinite_linf(self):
        """A negative power exponent grows without bound."""
        assert GrandSequence.power_log(-0.5).linf == math.inf

    def test_plus_and_scaled(self):
        """Finite arithmetic merges supports."""
        x = GrandSequence.from_mapping({0: 1.0, 1: 2.0})
        y = GrandSequence.from_mapping({1: -2.0, 2: 3.0})
        assert x.plus(y).entries == ((0, 1.0), (2, 3.0))
        assert x.scaled(-2.0).entries == ((0, -2.0), (1, -4.0))

    def test_tail_arithmetic_rejected(self):
        """Sums with a tail are not represented."""
        with pytest.raises(DomainError):
            GrandSequence.power_log(1.0).plus(GrandSequence.zero(IndexSet.NATURALS))

    def test_record_parsing(self):
        """Decimal strings are accepted as numbers."""
        x = GrandSequence.from_record({'index_set': 'N', 'entries': [[1, '0.5']], 'tail': {'n0': 2, 'a': '1'}})
        assert x.entries == ((1, 0.5),)
        assert x.tail == PowerLogTail(2, 1.0, 0.0)

    def test_malformed_record(self):
        """A bad index set is a format error."""
        with pytest.raises(FormatError):
            GrandSequence.from_record({'index_set': 'Q', 'entries': []})

    def test_malformed_json(self):
        """Invalid JSON text is a format error."""
        with pytest.raises(FormatError):
            GrandSequence.from_json('{entries')

    @pytest.mark.parametrize('name', ['spike.seq.json', 'pair.seq.json', 'example1.seq.json'])
    def test_sample_files_reserialise_identically(self, name):
        """Sample inputs parse and print back byte for byte."""
        text = (SAMPLES / name).read_text()
        assert GrandSequence.from_json(text).to_json() == text


class TestSequenceNorms:

    def test_finite_lp(self, norms):
        """||(3, 4)||_2 = 5 and ||.||_1 = 7."""
        x = GrandSequence.from_values([3.0, -4.0])
        assert norms.lp_norm(x, 2.0).contains(5.0, tol=1e-12)
        assert norms.lp_norm(x, 1.0).contains(7.0, tol=1e-12)

    def test_large_exponent_does_not_overflow(self, norms):
        """Scaling by the sup norm keeps p = 1e6 finite."""
        x = GrandSequence.from_values([1e200, 1e199])
        bracket = norms.lp_norm(x, 1e6)
        assert bracket.is_finite
        assert bracket.upper == pytest.approx(1e200, rel=1e-9)

    def test_infinite_exponent(self, norms):
        """p = inf gives the sup norm."""
        lower, upper = norms.log_lp_bounds(GrandSequence.from_values([2.0, -5.0]), [math.inf])
        assert math.exp(upper[0]) == pytest.approx(5.0)
        assert lower[0] == upper[0]

    def test_zeta_tail(self, norms):
        """sum n^-2 = pi^2/6 lies in the bracket of ||n^-1||_2^2."""
        bracket = norms.lp_norm(GrandSequence.power_log(1.0), 2.0)
        assert bracket.lower ** 2 <= math.pi ** 2 / 6.0 + 1e-12
        assert bracket.upper ** 2 >= math.pi ** 2 / 6.0 - 1e-12
        assert bracket.width < 1e-6

    @pytest.mark.parametrize('s', [1.5, 3.0, 5.0])
    def test_zeta_tails_at_other_exponents(self, norms, s):
        """sum n^-s = zeta(s) is enclosed."""
        bracket = norms.lp_norm(GrandSequence.power_log(s), 1.0)
        assert bracket.contains(float(zeta(s)), tol=1e-10)

    def test_log_tail_bracket(self, norms):
        """A convergent log tail (a = 1, b = 2) has a finite bracket."""
        bracket = norms.lp_norm(GrandSequence.power_log(1.0, 2.0), 1.0)
        assert bracket.is_finite
        assert bracket.lower > 1.0 / math.log(2.0) ** 2

    @pytest.mark.parametrize('a, b, p', [(1.0, 0.0, 1.0), (0.5, 0.0, 2.0), (1.0, 1.0, 1.0), (0.25, 3.0, 2.0)])
    def test_divergent_tails(self, norms, a, b, p):
        """Sums at or below the critical exponent diverge."""
        bracket = norms.lp_norm(GrandSequence.power_log(a, b), p)
        assert not bracket.is_finite
        assert bracket.lower > 0.0

    def test_rejects_small_exponent(self, norms):
        """p < 1 is outside the domain."""
        with pytest.raises(DomainError):
            norms.lp_norm(GrandSequence.spike(), 0.5)

    def test_monotone_in_p(self, norms):
        """||x||_p is nonincreasing in p."""
        rng = np.random.default_rng(7)
        x = GrandSequence.from_values(rng.uniform(0.1, 3.0, 20).tolist())
        lower, upper = norms.log_lp_bounds(x, np.array([1.0, 1.5, 2.0, 4.0, 10.0]))
        assert np.all(np.diff(upper) <= 1e-12)

    def test_pointwise_dominates_finite(self, norms):
        """Entrywise comparison of finite sequences."""
        x = GrandSequence.from_mapping({0: 2.0, 1: 1.0})
        assert norms.pointwise_dominates(x, GrandSequence.from_mapping({0: 1.0, 1: 1.0}))
        assert not norms.pointwise_dominates(x, GrandSequence.from_mapping({2: 0.1}))

    def test_pointwise_dominates_tails(self, norms):
        """n^-2 <= n^-1 on N; the reverse fails."""
        big, little = GrandSequence.power_log(1.0), GrandSequence.power_log(2.0)
        assert norms.pointwise_dominates(big, little)
        assert not norms.pointwise_dominates(little, big)

    def test_pointwise_dominates_log_correction(self, norms):
        """n^-1.5 against n^-1 (ln(n+1))^-1 is settled by a finite scan."""
        big = GrandSequence.power_log(1.0, 1.0)
        little = GrandSequence.power_log(1.5, 0.0)
        assert norms.pointwise_dominates(big, little) == all(
            little.value_at(n) <= big.value_at(n) for n in range(1, 200))

    def test_pointwise_dominates_needs_nonnegative(self, norms):
        """Negative entries break the precondition."""
        with pytest.raises(InvariantError):
            norms.pointwise_dominates(GrandSequence.spike(0, -1.0), GrandSequence.zero())
