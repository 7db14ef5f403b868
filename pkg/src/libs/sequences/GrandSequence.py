#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# GrandSequence.py
"""
Description: Sequences over N, N0 or Z made of a finitely supported part and an optional power-log tail,
together with the certified norm brackets they are measured with.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import json
import math

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, Mapping, Optional, Tuple

import numpy as np

from src.libs.common.Errors.Errors import DomainError, FormatError, InvariantError

# region Global params
ROUNDING_SLACK: float = 1e-12
# endregion Global params


class IndexSet(Enum):
    """Index set X of a sequence."""
    NATURALS = 'N'
    NATURALS_WITH_ZERO = 'N0'
    INTEGERS = 'Z'

    @property
    def lowest(self) -> Optional[int]:
        return {'N': 1, 'N0': 0, 'Z': None}[self.value]

    @property
    def one_sided(self) -> bool:
        return self is not IndexSet.INTEGERS

    def contains(self, index: int) -> bool:
        return self.lowest is None or index >= self.lowest


@dataclass(frozen=True)
class PowerLogTail:
    """
    Analytic tail x_n = n^(-a) * (ln(n+1))^(-b) for n >= n0.

    *Attributes*:
    - n0 --> int : First index of the tail, at least 1.
    - a --> float : Power exponent.
    - b --> float : Nonnegative logarithmic exponent.
    """
    n0: int
    a: float
    b: float = 0.0

    def __post_init__(self) -> None:
        if int(self.n0) != self.n0 or self.n0 < 1:
            raise DomainError(f"tail start n0 must be an integer >= 1, got {self.n0}")
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError("tail exponents must be finite")
        if self.b < 0.0:
            raise DomainError(f"tail log exponent b must be >= 0, got {self.b}")
        object.__setattr__(self, 'n0', int(self.n0))
        object.__setattr__(self, 'a', float(self.a))
        object.__setattr__(self, 'b', float(self.b))

    def log_terms(self, n: np.ndarray) -> np.ndarray:
        n = np.asarray(n, dtype=float)
        return -self.a * np.log(n) - self.b * np.log(np.log1p(n))

    def term(self, n: int) -> float:
        return float(np.exp(self.log_terms(np.array([n]))[0]))

    @property
    def nonincreasing(self) -> bool:
        return self.a >= 0.0

    def to_record(self) -> Dict[str, Any]:
        return {'n0': self.n0, 'a': self.a, 'b': self.b}


@dataclass(frozen=True)
class NormBracket:
    """
    Certified enclosure [lower, upper] of a nonnegative quantity, upper possibly +inf.

    *Methods*:
    - exact(value) / zero() --> Zero-width brackets.
    - width, is_finite, contains(value, tol) --> Queries.
    - plus(other), scaled(c), times(other) --> Interval arithmetic on nonnegative brackets.
    """
    lower: float
    upper: float

    def __post_init__(self) -> None:
        lower = float(self.lower)
        upper = float(self.upper)
        if not math.isfinite(lower) or math.isnan(upper):
            raise InvariantError(f"bracket needs a finite lower end, got [{lower}, {upper}]")
        if lower < 0.0:
            if lower < -ROUNDING_SLACK:
                raise InvariantError(f"bracket of a nonnegative quantity has lower {lower}")
            lower = 0.0
        if upper < lower:
            if lower - upper > ROUNDING_SLACK * max(1.0, lower):
                raise InvariantError(f"bracket with lower {lower} above upper {upper}")
            upper = lower
        object.__setattr__(self, 'lower', lower)
        object.__setattr__(self, 'upper', upper)

    @classmethod
    def exact(cls, value: float) -> 'NormBracket':
        return cls(value, value)

    @classmethod
    def zero(cls) -> 'NormBracket':
        return cls(0.0, 0.0)

    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.upper)

    def contains(self, value: float, tol: float = 0.0) -> bool:
        return self.lower - tol <= value <= self.upper + tol

    def plus(self, other: 'NormBracket') -> 'NormBracket':
        return NormBracket(self.lower + other.lower, self.upper + other.upper)

    def scaled(self, factor: float) -> 'NormBracket':
        factor = abs(float(factor))
        if factor == 0.0:
            return NormBracket.zero()
        return NormBracket(self.lower * factor, self.upper * factor)

    def times(self, other: 'NormBracket') -> 'NormBracket':
        if self.upper == 0.0 or other.upper == 0.0:
            return NormBracket.zero()
        return NormBracket(self.lower * other.lower, self.upper * other.upper)

    def to_record(self) -> Dict[str, Any]:
        return {'lower': self.lower, 'upper': self.upper if self.is_finite else 'inf'}


@dataclass(frozen=True)
class GrandSequence:
    """
    Real sequence over an index set: finitely supported entries plus an optional PowerLogTail.

    *Attributes*:
    - index_set --> IndexSet : N, N0 or Z.
    - entries --> tuple : Sorted (index, value) pairs with nonzero values.
    - tail --> PowerLogTail : Optional analytic tail beyond every entry, one-sided sets only.

    *Methods*:
    - from_values / from_mapping / spike / zero --> Constructors.
    - indices, values, linf --> Array views and the sup norm.
    - scaled, absolute, plus --> Finite arithmetic.
    - from_record / to_record / load --> Textual format.
    """
    index_set: IndexSet = IndexSet.INTEGERS
    entries: Tuple[Tuple[int, float], ...] = ()
    tail: Optional[PowerLogTail] = None

    def __post_init__(self) -> None:
        cleaned: Dict[int, float] = {}
        for index, value in self.entries:
            if int(index) != index:
                raise FormatError(f"index {index} is not an integer")
            index = int(index)
            value = float(value)
            if not math.isfinite(value):
                raise DomainError(f"entry at index {index} is not finite")
            if index in cleaned:
                raise FormatError(f"duplicate index {index}")
            if not self.index_set.contains(index):
                raise DomainError(f"index {index} outside {self.index_set.value}")
            cleaned[index] = value
        object.__setattr__(
            self, 'entries', tuple(sorted((k, v) for k, v in cleaned.items() if v != 0.0))
        )
        if self.tail is not None:
            if not self.index_set.one_sided:
                raise DomainError("tails are only supported on N and N0")
            if self.entries and self.entries[-1][0] >= self.tail.n0:
                raise InvariantError("tail must start beyond every finite entry")

    # region Constructors
    @classmethod
    def from_values(cls, values: Iterable[float], start: int = 0,
                    index_set: IndexSet = IndexSet.INTEGERS) -> 'GrandSequence':
        return cls(index_set, tuple((start + i, float(v)) for i, v in enumerate(values)))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, float],
                     index_set: IndexSet = IndexSet.INTEGERS) -> 'GrandSequence':
        return cls(index_set, tuple(mapping.items()))

    @classmethod
    def spike(cls, index: int = 0, value: float = 1.0,
              index_set: IndexSet = IndexSet.INTEGERS) -> 'GrandSequence':
        return cls(index_set, ((index, value),))

    @classmethod
    def zero(cls, index_set: IndexSet = IndexSet.INTEGERS) -> 'GrandSequence':
        return cls(index_set, ())

    @classmethod
    def power_log(cls, a: float, b: float = 0.0, n0: int = 1,
                  index_set: IndexSet = IndexSet.NATURALS) -> 'GrandSequence':
        """x_n = n^(-a) (ln(n+1))^(-b) for every n >= n0."""
        return cls(index_set, (), PowerLogTail(n0, a, b))
    # endregion Constructors

    @property
    def indices(self) -> np.ndarray:
        return np.array([k for k, _ in self.entries], dtype=np.int64)

    @property
    def values(self) -> np.ndarray:
        return np.array([v for _, v in self.entries], dtype=float)

    @property
    def support_size(self) -> int:
        return len(self.entries)

    @property
    def is_finite_support(self) -> bool:
        return self.tail is None

    @property
    def is_zero(self) -> bool:
        return not self.entries and self.tail is None

    @property
    def is_nonnegative(self) -> bool:
        return all(v >= 0.0 for _, v in self.entries)

    @property
    def linf(self) -> float:
        """sup |x_n|; tails with a >= 0 are nonincreasing, so their first term is their sup."""
        best = max((abs(v) for _, v in self.entries), default=0.0)
        if self.tail is not None:
            if not self.tail.nonincreasing:
                return math.inf
            best = max(best, self.tail.term(self.tail.n0))
        return best

    def value_at(self, index: int) -> float:
        for k, v in self.entries:
            if k == index:
                return v
        if self.tail is not None and index >= self.tail.n0:
            return self.tail.term(index)
        return 0.0

    def scaled(self, alpha: float) -> 'GrandSequence':
        if self.tail is not None:
            raise DomainError("scaling is only defined here for finitely supported sequences")
        return GrandSequence(self.index_set, tuple((k, alpha * v) for k, v in self.entries))

    def absolute(self) -> 'GrandSequence':
        return GrandSequence(self.index_set, tuple((k, abs(v)) for k, v in self.entries), self.tail)

    def plus(self, other: 'GrandSequence') -> 'GrandSequence':
        if self.tail is not None or other.tail is not None:
            raise DomainError("sums are only defined here for finitely supported sequences")
        if self.index_set is not other.index_set:
            raise DomainError("sequences live on different index sets")
        total: Dict[int, float] = dict(self.entries)
        for k, v in other.entries:
            total[k] = total.get(k, 0.0) + v
        return GrandSequence(self.index_set, tuple(total.items()))

    # region Textual format
    @classmethod
    def from_record(cls, record: Mapping[str, Any]) -> 'GrandSequence':
        """
        Parses the sequence record format.

        *Arguments*:
        - record --> dict : {"index_set": "N"|"N0"|"Z", "entries": [[index, value], ...],
          "tail": {"n0": int, "a": number, "b": number}} with the tail optional.

        *Returns*:
        - GrandSequence

        *Examples*:
        - GrandSequence.from_record({"index_set": "Z", "entries": [[0, "1"]]})
        """
        try:
            index_set = IndexSet(record.get('index_set', 'Z'))
            entries = tuple((int(k), float(v)) for k, v in record.get('entries', []))
            tail_record = record.get('tail')
            tail = None
            if tail_record is not None:
                tail = PowerLogTail(int(tail_record['n0']), float(tail_record['a']),
                                    float(tail_record.get('b', 0.0)))
        except (KeyError, TypeError, ValueError) as e:
            raise FormatError(f"malformed sequence record: {str(e)}") from e
        return cls(index_set, entries, tail)

    def to_record(self) -> Dict[str, Any]:
        record: Dict[str, Any] = {
            'index_set': self.index_set.value,
            'entries': [[k, v] for k, v in self.entries],
        }
        if self.tail is not None:
            record['tail'] = self.tail.to_record()
        return record

    def to_json(self) -> str:
        return json.dumps(self.to_record(), indent=2) + '\n'

    @classmethod
    def from_json(cls, text: str) -> 'GrandSequence':
        try:
            return cls.from_record(json.loads(text))
        except json.JSONDecodeError as e:
            raise FormatError(f"sequence file is not valid JSON: {str(e)}") from e

    @classmethod
    def load(cls, path: str) -> 'GrandSequence':
        with open(path, 'r') as handle:
            return cls.from_json(handle.read())
    # endregion Textual format
