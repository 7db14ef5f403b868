#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# test_report.py
"""
Description: Tests of the status rule, case records and the line-delimited report format.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import json
import math

import pytest

from src.libs.sequences.GrandSequence import NormBracket
from src.libs.verifier.Report import CaseRecord, Status, VerificationReport, classify, digest, plain


class TestClassify:

    @pytest.mark.parametrize('lhs, rhs, expected', [
        ((1.0, 1.0), (2.0, 2.0), Status.PASS),
        ((1.0, 2.0), (1.5, 2.0), Status.PASS),
        ((3.0, 3.0), (1.0, 2.0), Status.FAIL),
        ((1.0, 3.0), (1.5, 2.0), Status.INCONCLUSIVE),
        ((1.0, math.inf), (1.0, math.inf), Status.PASS),
        ((1.0, 2.0), (0.5, math.inf), Status.PASS),
    ])
    def test_status_rule(self, lhs, rhs, expected):
        """FAIL needs a certified violation; PASS needs ordered upper ends."""
        assert classify(NormBracket(*lhs), NormBracket(*rhs), 1e-9) is expected

    def test_tolerance(self):
        """A violation within the slack is not a failure."""
        assert classify(NormBracket.exact(1.0 + 1e-10), NormBracket.exact(1.0), 1e-9) is Status.PASS


class TestCaseRecord:

    def test_certified(self):
        """Certified when lhs.upper <= rhs.lower."""
        record = CaseRecord.compare(0, 'a <= b', {}, NormBracket(1.0, 1.5), NormBracket(2.0, 3.0), 0.0)
        assert record.certified
        assert record.slack == 1.5

    def test_pass_without_certificate(self):
        """Overlapping brackets pass but are not certified."""
        record = CaseRecord.compare(0, 'a <= b', {}, NormBracket(1.0, 2.0), NormBracket(1.5, 2.5), 0.0)
        assert record.status is Status.PASS
        assert not record.certified

    def test_infinite_slack(self):
        """Two infinite upper ends give zero slack."""
        record = CaseRecord.compare(0, 'a <= b', {}, NormBracket(1.0, math.inf), NormBracket(1.0, math.inf), 0.0)
        assert record.slack == 0.0

    def test_check_otherwise(self):
        """Missing evidence can be recorded as inconclusive."""
        assert CaseRecord.check(0, 'e', {}, False).status is Status.FAIL
        assert CaseRecord.check(0, 'e', {}, False, otherwise=Status.INCONCLUSIVE).status is Status.INCONCLUSIVE
        assert CaseRecord.check(0, 'e', {}, True).status is Status.PASS

    def test_hypothesis_failure(self):
        """Premise failures carry their own status."""
        assert CaseRecord.hypothesis_failure(0, 'p', {}).status is Status.HYPOTHESIS_FAILURE

    def test_record_is_json_safe(self):
        """Infinite values and nested brackets serialise."""
        record = CaseRecord.compare(3, 'a <= b', {'x': (1.0, math.inf)}, NormBracket(1.0, 2.0),
                                    NormBracket(1.0, math.inf), 0.0, {'bracket': NormBracket(0.0, 1.0)})
        data = json.loads(json.dumps(record.to_record()))
        assert data['rhs']['upper'] == 'inf'
        assert data['inputs']['x'] == [1.0, 'inf']
        assert data['notes']['bracket'] == {'lower': 0.0, 'upper': 1.0}


class TestHelpers:

    def test_plain(self):
        """nan and -inf become strings, enums their value."""
        assert plain({'a': math.nan, 'b': -math.inf, 's': Status.PASS}) == {'a': 'nan', 'b': '-inf', 's': 'pass'}

    def test_digest_is_order_independent(self):
        """Key order does not change the digest."""
        assert digest({'a': 1, 'b': 2.0}) == digest({'b': 2.0, 'a': 1})
        assert len(digest({'a': 1})) == 16


class TestVerificationReport:

    @staticmethod
    def _report() -> VerificationReport:
        report = VerificationReport('demo', 1e-9)
        report.add(CaseRecord.compare(0, 'a <= b', {'i': 0}, NormBracket.exact(1.0), NormBracket.exact(2.0), 1e-9))
        report.add(CaseRecord.compare(1, 'a <= b', {'i': 1}, NormBracket(1.0, 3.0), NormBracket(1.5, 2.0), 1e-9))
        return report

    def test_counts(self):
        """One pass, one inconclusive."""
        report = self._report()
        assert report.counts() == {'pass': 1, 'fail': 0, 'inconclusive': 1, 'hypothesis_failure': 0}
        assert not report.failed
        assert not report.passed
        assert [r.case for r in report.inconclusive()] == [1]

    def test_empty_report_has_not_passed(self):
        """No records is not a pass."""
        assert not VerificationReport('empty', 0.0).passed

    def test_lines(self):
        """One JSON object per record plus a trailing summary."""
        lines = self._report().to_lines().splitlines()
        assert len(lines) == 3
        assert json.loads(lines[0])['suite'] == 'demo'
        assert json.loads(lines[-1])['summary'] == 'demo'
        assert json.loads(lines[-1])['cases'] == 2

    def test_human(self):
        """Aligned text names the suite and the totals."""
        text = self._report().to_human()
        assert text.startswith('suite demo\n')
        assert '2 cases: pass=1' in text
