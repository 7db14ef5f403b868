#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Report.py
"""
Description: Verification records comparing two certified brackets, and the line-delimited report that
collects them.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import hashlib
import json
import math

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional

from src.libs.sequences.GrandSequence import NormBracket


class Status(Enum):
    PASS = 'pass'
    FAIL = 'fail'
    INCONCLUSIVE = 'inconclusive'
    HYPOTHESIS_FAILURE = 'hypothesis_failure'


def plain(value: Any) -> Any:
    """JSON-safe copy: non-finite floats become strings, tuples become lists."""
    if isinstance(value, float):
        if math.isnan(value):
            return 'nan'
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        return value
    if isinstance(value, NormBracket):
        return value.to_record()
    if isinstance(value, Mapping):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if hasattr(value, 'to_record'):
        return value.to_record()
    if isinstance(value, Enum):
        return value.value
    return value


def digest(inputs: Mapping[str, Any]) -> str:
    """Short stable hash of a case's inputs."""
    text = json.dumps(plain(inputs), sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(text.encode('utf-8')).hexdigest()[:16]


def classify(lhs: NormBracket, rhs: NormBracket, tolerance: float) -> Status:
    """
    Status of the claim lhs <= rhs from two certified brackets.

    *Arguments*:
    - lhs, rhs --> NormBracket : Enclosures of both sides.
    - tolerance --> float : Absolute slack.

    *Returns*:
    - Status : FAIL only for a certified violation, PASS when the upper ends are ordered.
    """
    if lhs.lower > rhs.upper + tolerance:
        return Status.FAIL
    if lhs.upper <= rhs.upper + tolerance:
        return Status.PASS
    return Status.INCONCLUSIVE


@dataclass(frozen=True)
class CaseRecord:
    """
    One checked inequality lhs <= rhs.

    *Attributes*:
    - case --> int : Case index inside its suite.
    - relation --> str : Human-readable name of the inequality.
    - inputs --> dict : Parameters needed to replay the case.
    - lhs, rhs --> NormBracket : Enclosures of both sides.
    - status --> Status : Outcome of the status rule.
    - certified --> bool : Whether lhs.upper <= rhs.lower + tolerance.
    - slack --> float : rhs.upper - lhs.upper.
    - notes --> dict : Measured extras (ratios, residuals, fitted exponents).
    """
    case: int
    relation: str
    inputs: Dict[str, Any]
    lhs: NormBracket
    rhs: NormBracket
    status: Status
    certified: bool
    slack: float
    notes: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def compare(cls, case: int, relation: str, inputs: Mapping[str, Any], lhs: NormBracket,
                rhs: NormBracket, tolerance: float, notes: Optional[Mapping[str, Any]] = None) -> 'CaseRecord':
        status = classify(lhs, rhs, tolerance)
        certified = status is Status.PASS and lhs.upper <= rhs.lower + tolerance
        if math.isinf(rhs.upper) and math.isinf(lhs.upper):
            slack = 0.0
        else:
            slack = rhs.upper - lhs.upper
        return cls(case, relation, dict(inputs), lhs, rhs, status, certified, slack, dict(notes or {}))

    @classmethod
    def hypothesis_failure(cls, case: int, relation: str, inputs: Mapping[str, Any],
                           notes: Optional[Mapping[str, Any]] = None) -> 'CaseRecord':
        """Record for an instance on which a premise of the inequality does not hold."""
        zero = NormBracket.zero()
        return cls(case, relation, dict(inputs), zero, zero, Status.HYPOTHESIS_FAILURE, False, 0.0,
                   dict(notes or {}))

    @classmethod
    def check(cls, case: int, relation: str, inputs: Mapping[str, Any], holds: bool,
              notes: Optional[Mapping[str, Any]] = None, otherwise: Status = Status.FAIL) -> 'CaseRecord':
        """
        Record of a yes/no property such as a closed-form verdict or a piece of numeric evidence.

        *Notes*:
        - Evidence that is not a proof passes otherwise=Status.INCONCLUSIVE, so a miss never reads as a
          counterexample.
        """
        zero = NormBracket.zero()
        status = Status.PASS if holds else otherwise
        return cls(case, relation, dict(inputs), zero, zero, status, bool(holds), 0.0, dict(notes or {}))

    def to_record(self) -> Dict[str, Any]:
        return {
            'case': self.case,
            'relation': self.relation,
            'digest': digest(self.inputs),
            'status': self.status.value,
            'certified': self.certified,
            'lhs': self.lhs.to_record(),
            'rhs': self.rhs.to_record(),
            'slack': plain(self.slack),
            'inputs': plain(self.inputs),
            'notes': plain(self.notes),
        }


@dataclass
class VerificationReport:
    """
    Records of one suite in case order, plus a summary.

    *Methods*:
    - add(record) --> Appends a record.
    - counts() --> Number of records per status.
    - failed / passed --> Aggregated outcomes.
    - to_lines() --> Line-delimited JSON with a trailing summary record.
    - to_human() --> Aligned text.
    """
    suite: str
    tolerance: float
    records: List[CaseRecord] = field(default_factory=list)
    meta: Dict[str, Any] = field(default_factory=dict)

    def add(self, record: CaseRecord) -> None:
        self.records.append(record)

    def extend(self, records) -> None:
        for record in records:
            self.add(record)

    def counts(self) -> Dict[str, int]:
        totals = {status.value: 0 for status in Status}
        for record in self.records:
            totals[record.status.value] += 1
        return totals

    @property
    def failed(self) -> bool:
        return any(r.status is Status.FAIL for r in self.records)

    @property
    def passed(self) -> bool:
        return bool(self.records) and all(r.status is Status.PASS for r in self.records)

    def inconclusive(self) -> List[CaseRecord]:
        return [r for r in self.records if r.status is Status.INCONCLUSIVE]

    def summary(self) -> Dict[str, Any]:
        return {
            'summary': self.suite,
            'cases': len(self.records),
            **self.counts(),
            'tolerance': self.tolerance,
            'meta': plain(self.meta),
        }

    def to_lines(self) -> str:
        lines = [json.dumps({'suite': self.suite, **r.to_record()}, separators=(',', ':'))
                 for r in self.records]
        lines.append(json.dumps(self.summary(), separators=(',', ':')))
        return '\n'.join(lines) + '\n'

    def to_human(self) -> str:
        lines = [f"suite {self.suite}"]
        for r in self.records:
            lhs = r.lhs.to_record()
            rhs = r.rhs.to_record()
            lines.append(
                f"  #{r.case:<5d} {r.status.value:<18s} {r.relation:<40s} "
                f"lhs=[{lhs['lower']:.10g}, {_fmt(lhs['upper'])}] rhs=[{rhs['lower']:.10g}, {_fmt(rhs['upper'])}]"
            )
        totals = self.counts()
        lines.append(
            f"  {len(self.records)} cases: " + ', '.join(f"{k}={v}" for k, v in totals.items())
        )
        return '\n'.join(lines) + '\n'


def _fmt(value: Any) -> str:
    return value if isinstance(value, str) else f"{value:.10g}"
