#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Generators.py
"""
Description: Deterministic pseudo-random instances for the verification suites: sequences, dominated pairs,
step functions, bounded sets, multipliers and parameters, each case seeded from (seed, suite, case index).
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import hashlib
import math

from typing import Tuple

import numpy as np

from src.libs.common.Config.Configuration import SuiteConfig
from src.libs.amalgam.StepFunction import StepFunction
from src.libs.sequences.GrandSequence import GrandSequence, IndexSet

# region Global params
MAX_SUPPORT: int = 32
MAX_INTERVALS: int = 16
MAX_CELLS: int = 4
CELL_GRID: int = 16
VALUE_RANGE: Tuple[float, float] = (1e-3, 1e3)
INDEX_SPAN: int = 64
# endregion Global params


def suite_key(name: str) -> int:
    """Stable 64-bit integer of a suite name."""
    return int.from_bytes(hashlib.sha256(name.encode('utf-8')).digest()[:8], 'big')


def case_rng(seed: int, suite: str, case: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, suite_key(suite), case]))


class InstanceGenerator:
    """
    Draws suite instances from a numpy Generator.

    *Methods*:
    - rng(suite, case) --> Generator of one case.
    - sequence(rng) / dominated_pair(rng) --> Finite sequences.
    - step_function(rng) / bounded_set(rng, M) / multiplier_function(rng) --> Step functions.
    - q / p / theta / eps0 / delta / sigma --> Parameters inside the configured ranges.
    """

    def __init__(self, config: SuiteConfig) -> None:
        self.config = config

    def rng(self, suite: str, case: int) -> np.random.Generator:
        return case_rng(self.config.seed, suite, case)

    # region Values
    @staticmethod
    def magnitudes(rng: np.random.Generator, size: int) -> np.ndarray:
        """Log-uniform values in [1e-3, 1e3]."""
        low, high = VALUE_RANGE
        return np.exp(rng.uniform(math.log(low), math.log(high), size))

    @staticmethod
    def signs(rng: np.random.Generator, size: int) -> np.ndarray:
        return rng.choice(np.array([-1.0, 1.0]), size)

    @staticmethod
    def _uniform(rng: np.random.Generator, bounds: Tuple[float, float]) -> float:
        low, high = bounds
        return float(rng.uniform(low, high)) if high > low else float(low)

    def q(self, rng: np.random.Generator) -> float:
        return self._uniform(rng, self.config.q_range)

    def p(self, rng: np.random.Generator) -> float:
        return self._uniform(rng, self.config.p_range)

    def theta(self, rng: np.random.Generator) -> float:
        return self._uniform(rng, self.config.theta_range)

    def eps0(self, rng: np.random.Generator) -> float:
        low, high = self.config.eps0_range
        return float(math.exp(rng.uniform(math.log(low), math.log(high))))

    def delta(self, rng: np.random.Generator) -> float:
        low, high = self.config.delta_range
        return float(math.exp(rng.uniform(math.log(low), math.log(high))))

    def sigma(self, rng: np.random.Generator, q: float) -> float:
        """sigma strictly inside (0, 1/q'); 0 when q = 1 leaves no room."""
        if q <= 1.0:
            return 0.0
        return self._uniform(rng, self.config.sigma_fraction) * (1.0 - 1.0 / q)
    # endregion Values

    # region Sequences
    def sequence(self, rng: np.random.Generator, signed: bool = True, max_support: int = MAX_SUPPORT,
                 index_set: IndexSet = IndexSet.INTEGERS) -> GrandSequence:
        """Finite sequence with 1..max_support entries at distinct indices."""
        size = int(rng.integers(1, max_support + 1))
        lowest = index_set.lowest if index_set.lowest is not None else -INDEX_SPAN // 2
        indices = np.sort(rng.choice(np.arange(lowest, lowest + INDEX_SPAN), size, replace=False))
        values = self.magnitudes(rng, size)
        if signed:
            values = values * self.signs(rng, size)
        return GrandSequence(index_set, tuple(zip(indices.tolist(), values.tolist())))

    def dominated_pair(self, rng: np.random.Generator) -> Tuple[GrandSequence, GrandSequence]:
        """Nonnegative x and y with 0 <= y <= x, y zero on a random subset of supp(x)."""
        x = self.sequence(rng, signed=False)
        factors = rng.uniform(0.0, 1.0, x.support_size)
        factors[rng.random(x.support_size) < 0.2] = 0.0
        factors[rng.random(x.support_size) < 0.1] = 1.0
        y = GrandSequence(x.index_set, tuple(zip(x.indices.tolist(), (x.values * factors).tolist())))
        return x, y
    # endregion Sequences

    # region Step functions
    @staticmethod
    def cell_widths(rng: np.random.Generator) -> np.ndarray:
        """1..4 widths that are multiples of 1/16, so they sum to 1 exactly."""
        count = int(rng.integers(1, MAX_CELLS + 1))
        cuts = np.sort(rng.choice(np.arange(1, CELL_GRID), count - 1, replace=False))
        edges = np.concatenate(([0], cuts, [CELL_GRID]))
        return np.diff(edges) / CELL_GRID

    def step_function(self, rng: np.random.Generator, signed: bool = True, max_intervals: int = MAX_INTERVALS,
                      zero_cells: bool = True) -> StepFunction:
        """Step function on 1..max_intervals unit intervals with 1..4 cells each."""
        count = int(rng.integers(1, max_intervals + 1))
        intervals = np.sort(rng.choice(np.arange(-INDEX_SPAN // 2, INDEX_SPAN // 2), count, replace=False))
        pieces = []
        for k in intervals.tolist():
            widths = self.cell_widths(rng)
            values = self.magnitudes(rng, widths.size)
            if signed:
                values = values * self.signs(rng, widths.size)
            if zero_cells and widths.size > 1:
                values[rng.random(widths.size) < 0.2] = 0.0
            if not np.any(values):
                values[0] = self.magnitudes(rng, 1)[0]
            pieces.append((k, tuple(zip(widths.tolist(), values.tolist()))))
        return StepFunction(IndexSet.INTEGERS, tuple(pieces))

    def bounded_set(self, rng: np.random.Generator, M: int) -> StepFunction:
        """Indicator of a nonempty union of cells inside [-M, M)."""
        intervals = np.arange(-M, M)
        chosen = rng.choice(intervals, int(rng.integers(1, intervals.size + 1)), replace=False)
        pieces = []
        for k in np.sort(chosen).tolist():
            widths = self.cell_widths(rng)
            mask = (rng.random(widths.size) < 0.6).astype(float)
            if not np.any(mask):
                mask[int(rng.integers(widths.size))] = 1.0
            pieces.append((k, tuple(zip(widths.tolist(), mask.tolist()))))
        return StepFunction(IndexSet.INTEGERS, tuple(pieces))

    def multiplier_function(self, rng: np.random.Generator, unimodular: bool) -> StepFunction:
        """Multiplier with |g| = 1 on its support, or one with at least one cell where |g| != 1."""
        g = self.step_function(rng, signed=True, max_intervals=8)
        if unimodular:
            return StepFunction(g.index_set, tuple(
                (k, tuple((w, math.copysign(1.0, v) if v != 0.0 else 0.0) for w, v in cells)) for k, cells in g.pieces
            ))
        pieces = [list(cells) for _, cells in g.pieces]
        head = pieces[0]
        index = next(i for i, (_, v) in enumerate(head) if v != 0.0)
        width, value = head[index]
        # keep the perturbed cell away from modulus 1
        if abs(abs(value) - 1.0) < 0.05:
            head[index] = (width, 2.0 * value)
        return StepFunction(g.index_set, tuple((k, tuple(cells)) for (k, _), cells in zip(g.pieces, pieces)))
    # endregion Step functions
