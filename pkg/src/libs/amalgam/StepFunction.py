#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# StepFunction.py
"""
Description: Piecewise constant functions on the unit intervals I_k = [k, k+1), each interval split into
cells, plus the analytic families used for unbounded examples.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import json
import math

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from src.libs.common.Errors.Errors import DomainError, FormatError, InvariantError
from src.libs.sequences.GrandSequence import IndexSet, PowerLogTail

Cells = Tuple[Tuple[float, float], ...]

# region Global params
WIDTH_TOLERANCE: float = 1e-12
# endregion Global params


class FamilyKind(Enum):
    POWERLOG_PLATEAU = 'powerlog_plateau'
    SHRINKING_SUPPORT = 'shrinking_support'


@dataclass(frozen=True)
class AnalyticFamily:
    """
    Nonnegative function given in closed form on I_n for every n >= n0.

    *Attributes*:
    - kind --> FamilyKind : POWERLOG_PLATEAU is n^(-a) (ln(n+1))^(-b) on all of I_n; SHRINKING_SUPPORT is
      n^coefficient on [n, n + n^(-gamma)] and 0 on the rest of I_n.
    - a, b --> float : Exponents of the plateau family.
    - gamma --> float : Support exponent of the shrinking family, gamma >= 0.
    - coefficient --> float : Value exponent of the shrinking family.
    - n0 --> int : First interval index, at least 1.
    """
    kind: FamilyKind
    a: float = 0.0
    b: float = 0.0
    gamma: float = 0.0
    coefficient: float = 0.0
    n0: int = 1

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.a, self.b, self.gamma, self.coefficient)):
            raise DomainError("family parameters must be finite")
        if int(self.n0) != self.n0 or self.n0 < 1:
            raise DomainError(f"family start n0 must be an integer >= 1, got {self.n0}")
        if self.kind is FamilyKind.POWERLOG_PLATEAU and self.b < 0.0:
            raise DomainError("plateau log exponent b must be >= 0")
        if self.kind is FamilyKind.SHRINKING_SUPPORT and self.gamma < 0.0:
            raise DomainError("support exponent gamma must be >= 0 so each support fits in its interval")

    @classmethod
    def powerlog_plateau(cls, a: float, b: float = 0.0, n0: int = 1) -> 'AnalyticFamily':
        return cls(FamilyKind.POWERLOG_PLATEAU, a=a, b=b, n0=n0)

    @classmethod
    def shrinking_support(cls, gamma: float, coefficient: float = 0.0, n0: int = 1) -> 'AnalyticFamily':
        return cls(FamilyKind.SHRINKING_SUPPORT, gamma=gamma, coefficient=coefficient, n0=n0)

    def local_tail(self, p: float) -> PowerLogTail:
        """Local L^p norms of the family as a tail, ||g chi_{I_n}||_p = n^(-a') (ln(n+1))^(-b')."""
        if self.kind is FamilyKind.POWERLOG_PLATEAU:
            return PowerLogTail(self.n0, self.a, self.b)
        if math.isinf(p):
            return PowerLogTail(self.n0, -self.coefficient, 0.0)
        return PowerLogTail(self.n0, self.gamma / p - self.coefficient, 0.0)

    def integral_exponent(self) -> Tuple[float, float]:
        """(s, c) with integral of g over I_n equal to n^(-s) (ln(n+1))^(-c)."""
        if self.kind is FamilyKind.POWERLOG_PLATEAU:
            return self.a, self.b
        return self.gamma - self.coefficient, 0.0

    def to_record(self) -> Dict[str, Any]:
        params = {'a': self.a, 'b': self.b} if self.kind is FamilyKind.POWERLOG_PLATEAU \
            else {'gamma': self.gamma, 'coefficient': self.coefficient}
        return {'kind': self.kind.value, 'params': {**params, 'n0': self.n0}}

    @classmethod
    def from_record(cls, record: Mapping[str, Any]) -> 'AnalyticFamily':
        kind = FamilyKind(record['kind'])
        params = {k: float(v) for k, v in record.get('params', {}).items() if k != 'n0'}
        n0 = int(record.get('params', {}).get('n0', 1))
        return cls(kind, n0=n0, **params)


def _common_cells(first: Cells, second: Cells) -> List[Tuple[float, float, float]]:
    """(width, first value, second value) on the common refinement of two cell lists of one interval."""
    cut_a = np.cumsum([w for w, _ in first])
    cut_b = np.cumsum([w for w, _ in second])
    cut_a[-1] = cut_b[-1] = 1.0
    cuts = np.union1d(np.concatenate([[0.0], cut_a]), cut_b)
    widths = np.diff(cuts)
    mids = cuts[:-1] + widths / 2.0
    index_a = np.minimum(np.searchsorted(cut_a, mids, side='right'), len(first) - 1)
    index_b = np.minimum(np.searchsorted(cut_b, mids, side='right'), len(second) - 1)
    return [(float(w), first[i][1], second[j][1])
            for w, i, j in zip(widths, index_a, index_b) if w > 0.0]


@dataclass(frozen=True)
class StepFunction:
    """
    Step function on the unit intervals of an index set.

    *Attributes*:
    - index_set --> IndexSet : Which k are allowed.
    - pieces --> tuple : Sorted (k, cells) pairs; cells are (width, value) pairs whose widths sum to 1.
    - family --> AnalyticFamily : Optional closed-form part beyond every piece, one-sided sets only.

    *Methods*:
    - indicator / constant / from_cells / zero --> Constructors.
    - cells(k) --> Cells of an interval, the single zero cell when absent.
    - multiply(other), scaled(alpha), absolute() --> Pointwise arithmetic on finite functions.
    - integral_abs(), integral_abs_product(other) --> Exact integrals.
    - ess_sup() --> max |value| over cells.
    - from_record / to_record / load --> Textual format.
    """
    index_set: IndexSet = IndexSet.INTEGERS
    pieces: Tuple[Tuple[int, Cells], ...] = ()
    family: Optional[AnalyticFamily] = None

    def __post_init__(self) -> None:
        cleaned: Dict[int, Cells] = {}
        for k, cells in self.pieces:
            if int(k) != k:
                raise FormatError(f"interval index {k} is not an integer")
            k = int(k)
            if k in cleaned:
                raise FormatError(f"duplicate interval {k}")
            if not self.index_set.contains(k):
                raise DomainError(f"interval {k} outside {self.index_set.value}")
            cells = tuple((float(w), float(v)) for w, v in cells)
            if not cells:
                raise InvariantError(f"interval {k} has no cells")
            if any(w <= 0.0 or not math.isfinite(w) or not math.isfinite(v) for w, v in cells):
                raise InvariantError(f"interval {k} has a non-positive width or a non-finite value")
            if abs(sum(w for w, _ in cells) - 1.0) > WIDTH_TOLERANCE:
                raise InvariantError(f"cell widths of interval {k} do not sum to 1")
            if any(v != 0.0 for _, v in cells):
                cleaned[k] = cells
        object.__setattr__(self, 'pieces', tuple(sorted(cleaned.items())))
        if self.family is not None:
            if not self.index_set.one_sided:
                raise DomainError("analytic families are only supported on N and N0")
            if self.pieces and self.pieces[-1][0] >= self.family.n0:
                raise InvariantError("family must start beyond every piece")

    # region Constructors
    @classmethod
    def zero(cls, index_set: IndexSet = IndexSet.INTEGERS) -> 'StepFunction':
        return cls(index_set)

    @classmethod
    def from_cells(cls, mapping: Mapping[int, Sequence[Tuple[float, float]]],
                   index_set: IndexSet = IndexSet.INTEGERS) -> 'StepFunction':
        return cls(index_set, tuple((k, tuple(cells)) for k, cells in mapping.items()))

    @classmethod
    def constant(cls, intervals: Iterable[int], value: float = 1.0,
                 index_set: IndexSet = IndexSet.INTEGERS) -> 'StepFunction':
        """value on the whole of every listed interval."""
        return cls(index_set, tuple((k, ((1.0, value),)) for k in sorted(set(intervals))))

    @classmethod
    def indicator(cls, intervals: Iterable[int], index_set: IndexSet = IndexSet.INTEGERS) -> 'StepFunction':
        return cls.constant(intervals, 1.0, index_set)

    @classmethod
    def from_family(cls, family: AnalyticFamily, index_set: IndexSet = IndexSet.NATURALS) -> 'StepFunction':
        return cls(index_set, (), family)
    # endregion Constructors

    @property
    def is_finite(self) -> bool:
        return self.family is None

    @property
    def is_zero(self) -> bool:
        return not self.pieces and self.family is None

    @property
    def intervals(self) -> List[int]:
        return [k for k, _ in self.pieces]

    def cells(self, k: int) -> Cells:
        for index, cells in self.pieces:
            if index == k:
                return cells
        return ((1.0, 0.0),)

    def _require_finite(self, operation: str) -> None:
        if self.family is not None:
            raise DomainError(f"{operation} is only defined here for finitely many pieces")

    def scaled(self, alpha: float) -> 'StepFunction':
        self._require_finite('scaling')
        return StepFunction(self.index_set, tuple((k, tuple((w, alpha * v) for w, v in c)) for k, c in self.pieces))

    def absolute(self) -> 'StepFunction':
        self._require_finite('absolute value')
        return StepFunction(self.index_set, tuple((k, tuple((w, abs(v)) for w, v in c)) for k, c in self.pieces))

    def multiply(self, other: 'StepFunction') -> 'StepFunction':
        """Exact pointwise product on the common refinement of cells."""
        self._require_finite('multiplication')
        other._require_finite('multiplication')
        shared = sorted(set(self.intervals) & set(other.intervals))
        pieces = []
        for k in shared:
            pieces.append((k, tuple((w, a * b) for w, a, b in _common_cells(self.cells(k), other.cells(k)))))
        index_set = self.index_set if self.index_set is other.index_set else IndexSet.INTEGERS
        return StepFunction(index_set, tuple(pieces))

    def integral_abs(self) -> float:
        self._require_finite('integration')
        return float(sum(w * abs(v) for _, cells in self.pieces for w, v in cells))

    def integral_abs_product(self, other: 'StepFunction') -> float:
        """Integral of |self * other| on the common refinement."""
        self._require_finite('integration')
        other._require_finite('integration')
        total = 0.0
        for k in sorted(set(self.intervals) & set(other.intervals)):
            total += sum(w * abs(a * b) for w, a, b in _common_cells(self.cells(k), other.cells(k)))
        return float(total)

    def ess_sup(self) -> float:
        """max |value| over cells, every cell having positive width."""
        if self.family is not None:
            tail = self.family.local_tail(math.inf)
            if not tail.nonincreasing:
                return math.inf
            head = max((abs(v) for _, cells in self.pieces for _, v in cells), default=0.0)
            return max(head, tail.term(tail.n0))
        return max((abs(v) for _, cells in self.pieces for _, v in cells), default=0.0)

    def level_set_indicator(self, level: float) -> 'StepFunction':
        """Indicator of {|self| > level} on its cells."""
        self._require_finite('level sets')
        pieces = []
        for k, cells in self.pieces:
            mask = tuple((w, 1.0 if abs(v) > level else 0.0) for w, v in cells)
            pieces.append((k, mask))
        return StepFunction(self.index_set, tuple(pieces))

    def support_within(self, other: 'StepFunction') -> bool:
        """Whether self vanishes wherever other does."""
        self._require_finite('support comparison')
        for k, cells in self.pieces:
            for _, a, b in _common_cells(cells, other.cells(k)):
                if a != 0.0 and b == 0.0:
                    return False
        return True

    # region Textual format
    @classmethod
    def from_record(cls, record: Mapping[str, Any]) -> 'StepFunction':
        """
        Parses the step-function record format.

        *Arguments*:
        - record --> dict : {"index_set": ..., "pieces": [{"k": int, "cells": [{"width": w, "value": v}]}],
          "family": {"kind": ..., "params": {...}}} with pieces or family optional.

        *Returns*:
        - StepFunction
        """
        try:
            index_set = IndexSet(record.get('index_set', 'Z'))
            pieces = tuple(
                (int(piece['k']), tuple((float(c['width']), float(c['value'])) for c in piece['cells']))
                for piece in record.get('pieces', [])
            )
            family_record = record.get('family')
            family = AnalyticFamily.from_record(family_record) if family_record is not None else None
        except (KeyError, TypeError, ValueError) as e:
            raise FormatError(f"malformed step function record: {str(e)}") from e
        return cls(index_set, pieces, family)

    def to_record(self) -> Dict[str, Any]:
        record: Dict[str, Any] = {
            'index_set': self.index_set.value,
            'pieces': [{'k': k, 'cells': [{'width': w, 'value': v} for w, v in cells]}
                       for k, cells in self.pieces],
        }
        if self.family is not None:
            record['family'] = self.family.to_record()
        return record

    def to_json(self) -> str:
        return json.dumps(self.to_record(), indent=2) + '\n'

    @classmethod
    def from_json(cls, text: str) -> 'StepFunction':
        try:
            return cls.from_record(json.loads(text))
        except json.JSONDecodeError as e:
            raise FormatError(f"step function file is not valid JSON: {str(e)}") from e

    @classmethod
    def load(cls, path: str) -> 'StepFunction':
        with open(path, 'r') as handle:
            return cls.from_json(handle.read())
    # endregion Textual format

