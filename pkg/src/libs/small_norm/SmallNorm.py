#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# SmallNorm.py
"""
Description: The small Lebesgue sequence norm, an infimum over decompositions |y_k| = sum_j y_kj of
sum_j inf_{eps>0} eps^(-theta/(q(1+eps))) ||y_.j||_{(q(1+eps))'}: decompositions, inner infima, the upper-bound
search, duality lower bounds, the transfer to dominated sequences and the lattice and subadditivity checks.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import math

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import logsumexp

from src.libs.common.Config.Configuration import OptimizerConfig, SearchConfig, SequenceConfig
from src.libs.common.Errors.Errors import DomainError, InvariantError
from src.libs.common.Logger.Logger import Logger
from src.libs.grand_norm.GrandNorm import GrandNormCalculator, GrandParams
from src.libs.optimizer.LogGridSearch import LogGridSearch, log_psi_t
from src.libs.sequences.GrandSequence import GrandSequence, NormBracket
from src.libs.special_functions.SpecialFunctions import psi_argmax, psi_max
from src.libs.verifier.Report import CaseRecord, VerificationReport

# region Global params
ROW_SUM_TOLERANCE: float = 1e-12
PARTS_PER_INDEX: int = 4
# endregion Global params


@dataclass(frozen=True, eq=False)
class Decomposition:
    """
    Nonnegative parts y_kj of a nonnegative finitely supported base, sum_j y_kj = base_k.

    *Attributes*:
    - base --> GrandSequence : Entrywise nonnegative, finite support.
    - parts --> np.ndarray : Matrix (parts x support), columns aligned with base.indices.

    *Methods*:
    - trivial / per_index / from_labels / proportional --> Constructors.
    - part_sequences() --> Parts as GrandSequence values.
    - concat(other) --> Parts of both decompositions over the union support.
    """
    base: GrandSequence
    parts: np.ndarray

    def __post_init__(self) -> None:
        if not self.base.is_finite_support or not self.base.is_nonnegative:
            raise InvariantError("decomposition base must be nonnegative with finite support")
        parts = np.atleast_2d(np.asarray(self.parts, dtype=float)).copy()
        width = self.base.support_size
        if width == 0:
            parts = np.zeros((0, 0))
        elif parts.shape[1] != width:
            raise InvariantError(f"parts have {parts.shape[1]} columns for a support of {width}")
        if np.any(parts < -ROW_SUM_TOLERANCE) or not np.all(np.isfinite(parts)):
            raise InvariantError("decomposition parts must be finite and nonnegative")
        parts = np.maximum(parts, 0.0)
        if width:
            residual = np.abs(parts.sum(axis=0) - self.base.values)
            if np.any(residual > ROW_SUM_TOLERANCE * np.maximum(1.0, self.base.values)):
                raise InvariantError(f"row sums miss the base by up to {float(residual.max()):.3g}")
            parts = parts[np.any(parts > 0.0, axis=1)]
        parts.setflags(write=False)
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def trivial(cls, base: GrandSequence) -> 'Decomposition':
        return cls(base, base.values[None, :] if base.support_size else np.zeros((0, 0)))

    @classmethod
    def per_index(cls, base: GrandSequence) -> 'Decomposition':
        return cls(base, np.diag(base.values) if base.support_size else np.zeros((0, 0)))

    @classmethod
    def from_labels(cls, base: GrandSequence, labels: Sequence[int]) -> 'Decomposition':
        """One part per distinct label; labels[i] names the block of the i-th support index."""
        labels = np.asarray(labels)
        blocks = np.unique(labels)
        parts = (labels[None, :] == blocks[:, None]) * base.values[None, :]
        return cls(base, parts)

    @classmethod
    def proportional(cls, base: GrandSequence, weights: Sequence[float]) -> 'Decomposition':
        weights = np.asarray(weights, dtype=float)
        if np.any(weights < 0.0) or weights.sum() <= 0.0:
            raise DomainError("proportional split needs nonnegative weights with a positive sum")
        weights = weights / weights.sum()
        parts = weights[:, None] * base.values[None, :]
        # last part absorbs the rounding of the split
        parts[-1] = base.values - parts[:-1].sum(axis=0)
        return cls(base, parts)

    @property
    def n_parts(self) -> int:
        return int(self.parts.shape[0])

    def part_sequences(self) -> List[GrandSequence]:
        indices = self.base.indices
        return [GrandSequence(self.base.index_set, tuple(zip(indices.tolist(), row.tolist())))
                for row in self.parts]

    def concat(self, other: 'Decomposition') -> 'Decomposition':
        if self.base.index_set is not other.base.index_set:
            raise DomainError("decompositions live on different index sets")
        union = sorted(set(self.base.indices.tolist()) | set(other.base.indices.tolist()))
        column = {k: i for i, k in enumerate(union)}
        rows = np.zeros((self.n_parts + other.n_parts, len(union)))
        for offset, d in ((0, self), (self.n_parts, other)):
            cols = [column[k] for k in d.base.indices.tolist()]
            rows[offset:offset + d.n_parts, cols] = d.parts
        base = GrandSequence(self.base.index_set, tuple(zip(union, rows.sum(axis=0).tolist())))
        return Decomposition(base, rows)

    def to_record(self) -> dict:
        return {
            'base': self.base.to_record(),
            'parts': [[[k, v] for k, v in zip(self.base.indices.tolist(), row.tolist()) if v > 0.0]
                      for row in self.parts],
        }


@dataclass(frozen=True, eq=False)
class SmallNormEstimate:
    """
    Upper and lower bounds of the small norm with their witnesses.

    *Attributes*:
    - upper --> float : Smaller of the fixed-grid value and the certified upper bound of the best decomposition
      found.
    - lower --> float : Best duality lower bound.
    - witness_decomposition --> Decomposition : Decomposition realizing upper.
    - witness_dual --> GrandSequence : Candidate realizing lower.
    - refined --> NormBracket : Certified inner infima of the witness decomposition.
    - explored --> tuple : Decompositions evaluated by the structured strategies.
    - evaluations --> int : Decomposition evaluations spent.
    """
    upper: float
    lower: float
    witness_decomposition: Optional[Decomposition]
    witness_dual: Optional[GrandSequence]
    refined: NormBracket
    explored: Tuple[Decomposition, ...] = ()
    evaluations: int = 0

    def __post_init__(self) -> None:
        if self.lower < 0.0 or self.upper < 0.0 or self.lower > self.upper + 1e-9 * max(1.0, self.upper):
            raise InvariantError(f"small norm estimate with lower {self.lower} and upper {self.upper}")

    @property
    def bracket(self) -> NormBracket:
        return NormBracket(min(self.lower, self.upper), self.upper)

    def to_record(self) -> dict:
        return {
            'lower': self.lower,
            'upper': self.upper,
            'refined': self.refined.to_record(),
            'evaluations': self.evaluations,
            'witness_decomposition': self.witness_decomposition.to_record()
            if self.witness_decomposition is not None else None,
            'witness_dual': self.witness_dual.to_record() if self.witness_dual is not None else None,
        }


class SmallNormCalculator:
    """
    Bounds of the small Lebesgue sequence norm of finitely supported sequences.

    *Attributes*:
    - logger --> Logger : Instance of the Logger class to log messages.
    - optimizer --> OptimizerConfig : Search settings over eps.
    - search --> SearchConfig : Budget and annealing schedule over decompositions.
    - grand --> GrandNormCalculator : Grand norms of the duality candidates.

    *Methods*:
    - inner_inf(part, params) --> Certified inf over eps of the part objective.
    - decomposition_value(d, params) --> Sum of inner_inf brackets.
    - decomposition_grid_value(d, params) --> Sum of part minima over the fixed eps set.
    - small_norm_upper(y, params) --> SmallNormEstimate.
    - dual_lower_bound(y, params, candidates) --> sum |x_k y_k| / grand_norm(x).upper, maximized.
    - transfer_decomposition(x_decomp, y) --> Decomposition of a dominated sequence.
    - lattice_compare(x, y, params) / subadditivity_check(y1, y2, params) --> Reports.

    *Notes*:
    - The decomposition search ranks candidates by their fixed-grid value: the minimum of each part
      objective over the grid nodes (always holding eps = 1/W(1/e)) and the eps -> inf limit ||part||_1.
      That value is an upper bound, and it is monotone under entrywise domination of parts.
    """

    def __init__(self, logger: Logger, optimizer: OptimizerConfig = None, search: SearchConfig = None,
                 sequence: SequenceConfig = None) -> None:
        """
        Initializes the SmallNormCalculator instance.

        *Arguments*:
        - logger --> Logger : Instance of the Logger class for logging messages.
        - optimizer --> OptimizerConfig : Search settings over eps; defaults when None.
        - search --> SearchConfig : Decomposition search settings; defaults when None.
        - sequence --> SequenceConfig : Series settings of the grand norms; defaults when None.

        *Returns*:
        - None
        """
        self.logger = logger
        self.optimizer = optimizer if optimizer is not None else OptimizerConfig()
        self.search = search if search is not None else SearchConfig()
        self.grand = GrandNormCalculator(logger, self.optimizer, sequence)
        self._grand_cache: Dict[Tuple[float, float, Tuple[float, ...]], NormBracket] = {}
        self.logger.write_info("SmallNormCalculator initialized.")

    # region Inner infimum
    @staticmethod
    def _log_conjugate_norms(log_values: np.ndarray, t: np.ndarray, q: float) -> np.ndarray:
        """ln ||v||_{(q(1+e^t))'} for rows of ln v (shape parts x support) at every t; result (t x parts)."""
        r = q * (1.0 + np.exp(t))
        conj = r / (r - 1.0)
        scaled = conj[:, None, None] * log_values[None, :, :]
        return logsumexp(scaled, axis=2) / conj[:, None]

    def _check_part(self, part: GrandSequence) -> np.ndarray:
        if not part.is_finite_support:
            raise DomainError("parts must be finitely supported")
        if not part.is_nonnegative:
            raise DomainError("parts must be nonnegative")
        return part.values

    def inner_inf(self, part: GrandSequence, params: GrandParams, cfg: OptimizerConfig = None) -> NormBracket:
        """
        Bracket of inf_{eps>0} psi(eps)^(-theta/q) ||part||_{(q(1+eps))'}.

        *Arguments*:
        - part --> GrandSequence : Finite nonnegative sequence.
        - params --> GrandParams : q and theta.
        - cfg --> OptimizerConfig : Search settings.

        *Returns*:
        - NormBracket : Includes the eps -> inf limit ||part||_1 among the upper candidates.

        *Examples*:
        - inner_inf(GrandSequence.spike(), GrandParams(1, 1)) --> [0.75694..., 0.75694...]
        """
        values = self._check_part(part)
        if values.size == 0:
            return NormBracket.zero()
        cfg = cfg if cfg is not None else self.optimizer
        log_values = np.log(values)[None, :]
        q, weight = params.q, params.weight

        def log_norm(t: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
            exact = self._log_conjugate_norms(log_values, np.asarray(t, dtype=float), q)[:, 0]
            return exact, exact

        t_lo, t_hi = math.log(cfg.eps_min), math.log(cfg.eps_max)
        t_star = math.log(psi_argmax())
        log_peak = math.log(psi_max())
        left_factor = log_psi_t(np.array([t_lo]))[0] if t_lo <= t_star else log_peak
        right_factor = log_psi_t(np.array([t_hi]))[0] if t_hi >= t_star else log_peak
        left_floor = -weight * left_factor + float(log_values.max())
        right_floor = -weight * right_factor + float(log_norm(np.array([t_hi]))[0][0])
        limit = float(np.log(values.sum()))

        outcome = LogGridSearch(self.logger, cfg).infimum(weight, q, log_norm, cfg.eps_min, cfg.eps_max,
                                                          left_floor, right_floor, limit)
        return NormBracket(outcome.lower, outcome.upper)

    def decomposition_value(self, d: Decomposition, params: GrandParams, cfg: OptimizerConfig = None) -> NormBracket:
        """Interval sum of inner_inf over the parts of d."""
        total = NormBracket.zero()
        for part in d.part_sequences():
            total = total.plus(self.inner_inf(part, params, cfg))
        return total

    def _fixed_grid(self, cfg: OptimizerConfig) -> np.ndarray:
        return LogGridSearch(self.logger, cfg).grid(cfg.eps_min, cfg.eps_max)

    def _grid_part_values(self, rows: np.ndarray, params: GrandParams, t: np.ndarray) -> np.ndarray:
        """Fixed-grid value of each nonzero row."""
        if rows.shape[0] == 0:
            return np.zeros(0)
        with np.errstate(divide='ignore'):
            log_rows = np.log(rows)
        log_norms = self._log_conjugate_norms(log_rows, t, params.q)
        objective = -params.weight * log_psi_t(t)[:, None] + log_norms
        best = np.exp(objective.min(axis=0))
        return np.minimum(best, rows.sum(axis=1))

    def decomposition_grid_value(self, d: Decomposition, params: GrandParams, cfg: OptimizerConfig = None) -> float:
        """
        Sum over parts of the minimum of the part objective over the fixed eps set.

        *Returns*:
        - float : An upper bound of sum_j inf_eps, never below decomposition_value(d).upper.
        """
        cfg = cfg if cfg is not None else self.optimizer
        return float(np.sum(self._grid_part_values(d.parts, params, self._fixed_grid(cfg))))

    def decomposition_bounds(self, d: Decomposition, params: GrandParams, cfg: OptimizerConfig = None) -> NormBracket:
        """
        Cheap bracket of the decomposition value: psi_max^(-theta/q) sum_j ||part_j||_inf below, the fixed-grid
        value above.
        """
        upper = self.decomposition_grid_value(d, params, cfg)
        lower = psi_max() ** -params.weight * float(np.sum(d.parts.max(axis=1))) if d.n_parts else 0.0
        return NormBracket(min(lower, upper), upper)
    # endregion Inner infimum

    # region Search
    def small_norm_upper(self, y: GrandSequence, params: GrandParams, budget: Optional[int] = None,
                         cfg: OptimizerConfig = None, seeds: Iterable[Decomposition] = (),
                         search: SearchConfig = None) -> SmallNormEstimate:
        """
        Upper bound of the small norm by searching decompositions, with a duality lower bound.

        *Arguments*:
        - y --> GrandSequence : Finitely supported sequence.
        - params --> GrandParams : q and theta.
        - budget --> int : Decomposition evaluations; the search config budget when None, 0 keeps only the
          trivial decomposition and the seeds.
        - cfg --> OptimizerConfig : Search settings over eps.
        - seeds --> iterable : Extra decompositions of |y| to start from.
        - search --> SearchConfig : Annealing schedule; the calculator default when None.

        *Returns*:
        - SmallNormEstimate

        *Notes*:
        - Strategy order: trivial, one part per index, contiguous blocks of sizes 2^i, then simulated
          annealing over set partitions that moves one index to another or a new block.
        - Parts are capped at 4 |support| except for seeds.
        """
        if not y.is_finite_support:
            raise DomainError("small_norm_upper needs a finitely supported sequence")
        cfg = cfg if cfg is not None else self.optimizer
        search = search if search is not None else self.search
        budget = search.budget if budget is None else int(budget)
        base = y.absolute()
        if base.is_zero:
            return SmallNormEstimate(0.0, 0.0, Decomposition.trivial(base), None, NormBracket.zero())

        t = self._fixed_grid(cfg)
        size = base.support_size
        candidates: List[Decomposition] = [Decomposition.trivial(base)]
        if budget > 0:
            candidates.append(Decomposition.per_index(base))
            width = 2
            while width < size:
                candidates.append(Decomposition.from_labels(base, np.arange(size) // width))
                width *= 2
        for seed in seeds:
            if not np.array_equal(seed.base.indices, base.indices) or \
                    not np.allclose(seed.base.values, base.values, rtol=0.0, atol=ROW_SUM_TOLERANCE):
                raise InvariantError("seed decomposition has a different base")
            candidates.append(seed)

        values = [float(np.sum(self._grid_part_values(c.parts, params, t))) for c in candidates]
        evaluations = len(candidates)
        best = int(np.argmin(values))
        best_value, best_decomposition = values[best], candidates[best]

        steps = max(0, budget - evaluations)
        if steps > 0 and size > 1:
            annealed, annealed_value = self._anneal(base, params, t, values, candidates, steps, search)
            evaluations += steps
            if annealed_value < best_value:
                best_value, best_decomposition = annealed_value, annealed

        lower, dual = self.dual_lower_bound(y, params, cfg=cfg)
        refined = self.decomposition_value(best_decomposition, params, cfg)
        upper = min(best_value, refined.upper)
        estimate = SmallNormEstimate(upper, min(lower, upper), best_decomposition, dual,
                                     refined, tuple(candidates), evaluations)
        self.logger.write_debug(
            f"small norm of a support of {size}: [{estimate.lower:.12g}, {estimate.upper:.12g}] "
            f"with {best_decomposition.n_parts} parts after {evaluations} evaluations"
        )
        return estimate

    def _anneal(self, base: GrandSequence, params: GrandParams, t: np.ndarray, values: List[float],
                candidates: List[Decomposition], steps: int, search: SearchConfig) -> Tuple[Decomposition, float]:
        """Simulated annealing over set partitions of the support, started from the best partition candidate."""
        rng = np.random.default_rng(np.random.SeedSequence([search.seed, base.support_size]))
        size = base.support_size
        max_blocks = PARTS_PER_INDEX * size

        partition_starts = [i for i, c in enumerate(candidates)
                            if c.n_parts <= max_blocks and np.all(np.count_nonzero(c.parts, axis=0) <= 1)]
        start = min(partition_starts, key=lambda i: values[i]) if partition_starts else 0
        labels = np.argmax(candidates[start].parts > 0.0, axis=0) if partition_starts else np.zeros(size, dtype=int)

        cache: Dict[FrozenSet[int], float] = {}

        def block_value(members: FrozenSet[int]) -> float:
            if members not in cache:
                row = np.zeros((1, size))
                index = list(members)
                row[0, index] = base.values[index]
                cache[members] = float(self._grid_part_values(row, params, t)[0])
            return cache[members]

        def blocks_of(current: np.ndarray) -> Dict[int, FrozenSet[int]]:
            return {int(b): frozenset(np.flatnonzero(current == b).tolist()) for b in np.unique(current)}

        labels = labels.copy()
        value = sum(block_value(m) for m in blocks_of(labels).values())
        best_labels, best_value = labels.copy(), value
        temperature = search.temperature
        for _ in range(steps):
            index = int(rng.integers(size))
            blocks = blocks_of(labels)
            old_block = int(labels[index])
            choices = [b for b in blocks if b != old_block]
            if len(blocks) < max_blocks:
                choices.append(max(blocks) + 1)
            target = int(choices[int(rng.integers(len(choices)))])

            old_members = blocks[old_block]
            new_members = blocks.get(target, frozenset())
            before = block_value(old_members) + (block_value(new_members) if new_members else 0.0)
            shrunk = old_members - {index}
            after = (block_value(shrunk) if shrunk else 0.0) + block_value(new_members | {index})
            delta = (after - before) / max(value, 1e-300)
            if delta < 0.0 or rng.random() < math.exp(-delta / temperature):
                labels[index] = target
                value += after - before
                if value < best_value:
                    best_labels, best_value = labels.copy(), value
            temperature *= search.alpha

        best = Decomposition.from_labels(base, best_labels)
        # recompute from scratch, the running sum drifts by rounding
        return best, float(np.sum(self._grid_part_values(best.parts, params, t)))
    # endregion Search

    # region Duality
    def _grand_upper(self, x: GrandSequence, params: GrandParams, cfg: OptimizerConfig) -> NormBracket:
        key = (params.q, params.theta, tuple(sorted(np.abs(x.values).tolist())))
        if key not in self._grand_cache:
            self._grand_cache[key] = self.grand.grand_norm(x, params, cfg)
        return self._grand_cache[key]

    def default_candidates(self, y: GrandSequence, params: GrandParams) -> List[GrandSequence]:
        """Spikes on the support, contiguous block indicators, |y| and the profile (|k|+1)^(-1/q)."""
        indices = y.indices.tolist()
        candidates = [GrandSequence.spike(k, 1.0, y.index_set) for k in indices]
        width = 2
        while width <= len(indices):
            for start in range(0, len(indices), width):
                block = indices[start:start + width]
                candidates.append(GrandSequence.from_mapping({k: 1.0 for k in block}, y.index_set))
            width *= 2
        candidates.append(y.absolute())
        candidates.append(GrandSequence.from_mapping(
            {k: (abs(k) + 1.0) ** (-1.0 / params.q) for k in indices}, y.index_set))
        return candidates

    def dual_lower_bound(self, y: GrandSequence, params: GrandParams,
                         candidates: Optional[Sequence[GrandSequence]] = None,
                         cfg: OptimizerConfig = None) -> Tuple[float, Optional[GrandSequence]]:
        """
        Lower bound max_x sum |x_k y_k| / grand_norm(x).upper of the small norm.

        *Arguments*:
        - y --> GrandSequence : Finitely supported sequence.
        - params --> GrandParams : q and theta.
        - candidates --> list : Finite candidates; default_candidates(y) when None.
        - cfg --> OptimizerConfig : Search settings of the grand norms.

        *Returns*:
        - tuple : (bound, best candidate or None).

        *Examples*:
        - dual_lower_bound(GrandSequence.spike(), GrandParams(1, 1))[0] --> 0.75694...
        """
        if y.is_zero:
            return 0.0, None
        cfg = cfg if cfg is not None else self.optimizer
        candidates = candidates if candidates is not None else self.default_candidates(y, params)
        best, witness = 0.0, None
        for x in candidates:
            if x.is_zero or not x.is_finite_support:
                continue
            pairing = sum(abs(v * y.value_at(k)) for k, v in x.entries)
            if pairing == 0.0:
                continue
            norm = self._grand_upper(x, params, cfg)
            if norm.upper <= 0.0 or math.isinf(norm.upper):
                continue
            value = pairing / norm.upper
            if value > best:
                best, witness = value, x
        return best, witness
    # endregion Duality

    # region Lattice
    def transfer_decomposition(self, x_decomp: Decomposition, y: GrandSequence) -> Decomposition:
        """
        Decomposition of y built from a decomposition of a dominating x.

        *Arguments*:
        - x_decomp --> Decomposition : Parts x_kj of x.
        - y --> GrandSequence : 0 <= y <= x entrywise.

        *Returns*:
        - Decomposition : Parts x_kj - z_kj with z_kj = x_kj - max(y_k - sum_{i<j} x_ki, 0) when
          sum_{i<=j} x_ki > y_k, else 0.

        *Examples*:
        - parts (1, 2) at one index, y = 2 --> parts (1, 1)
        """
        z, target = self.transfer_reductions(x_decomp, y)
        base = x_decomp.base
        parts = x_decomp.parts
        transferred = np.clip(parts - z, 0.0, parts)

        keep = target > 0.0
        y_base = GrandSequence(base.index_set, tuple(zip(base.indices[keep].tolist(), target[keep].tolist())))
        columns = transferred[:, keep]
        return Decomposition(y_base, columns if y_base.support_size else np.zeros((0, 0)))

    @staticmethod
    def transfer_reductions(x_decomp: Decomposition, y: GrandSequence) -> Tuple[np.ndarray, np.ndarray]:
        """Reductions z_kj of the transfer and the target y aligned with the columns of x_decomp."""
        base = x_decomp.base
        if y.index_set is not base.index_set:
            raise DomainError("sequences live on different index sets")
        if not y.is_finite_support or not y.is_nonnegative:
            raise InvariantError("transfer needs a finite nonnegative y")
        position = {k: i for i, k in enumerate(base.indices.tolist())}
        target = np.zeros(base.support_size)
        for k, v in y.entries:
            if k not in position or v > base.values[position[k]] * (1.0 + ROW_SUM_TOLERANCE) + ROW_SUM_TOLERANCE:
                raise InvariantError(f"y is not dominated by the decomposed sequence at index {k}")
            target[position[k]] = min(v, base.values[position[k]])

        parts = x_decomp.parts
        cumulative = np.cumsum(parts, axis=0)
        previous = cumulative - parts
        z = np.where(cumulative > target[None, :], parts - np.maximum(target[None, :] - previous, 0.0), 0.0)
        return z, target

    def lattice_compare(self, x: GrandSequence, y: GrandSequence, params: GrandParams, budget: Optional[int] = None,
                        cfg: OptimizerConfig = None, tolerance: float = 1e-9, case: int = 0) -> VerificationReport:
        """
        Checks ||y|| <= ||x|| in the small norm for 0 <= y <= x.

        *Arguments*:
        - x, y --> GrandSequence : Finite nonnegative sequences with y <= x entrywise.
        - params --> GrandParams : q and theta.
        - budget --> int : Decomposition search budget.
        - cfg --> OptimizerConfig : Search settings over eps.
        - tolerance --> float : Absolute slack.
        - case --> int : Case index of the records.

        *Returns*:
        - VerificationReport : One record per explored decomposition of x comparing its transfer, and a
          final record comparing the two searches.
        """
        if not (x.is_finite_support and y.is_finite_support and x.is_nonnegative and y.is_nonnegative):
            raise InvariantError("lattice comparison needs finite nonnegative sequences")
        if not self.grand.norms.pointwise_dominates(x, y):
            raise InvariantError("lattice comparison needs y <= x entrywise")

        cfg = cfg if cfg is not None else self.optimizer
        inputs = {'x': x.to_record(), 'y': y.to_record(), 'q': params.q, 'theta': params.theta}
        report = VerificationReport('lattice', tolerance)
        estimate_x = self.small_norm_upper(x, params, budget, cfg)
        explored = list(estimate_x.explored)
        if estimate_x.witness_decomposition is not None and estimate_x.witness_decomposition not in explored:
            explored.append(estimate_x.witness_decomposition)
        for d in explored:
            transferred = self.transfer_decomposition(d, y)
            report.add(CaseRecord.compare(
                case, 'transfer(d) <= d', inputs, self.decomposition_bounds(transferred, params, cfg),
                self.decomposition_bounds(d, params, cfg), tolerance, {'parts': d.n_parts}
            ))

        seeds = [self.transfer_decomposition(estimate_x.witness_decomposition, y)] if not y.is_zero else []
        estimate_y = self.small_norm_upper(y, params, budget, cfg, seeds)
        report.add(CaseRecord.compare(case, 'small(y) <= small(x)', inputs, estimate_y.bracket,
                                      estimate_x.bracket, tolerance))
        return report

    def subadditivity_check(self, y1: GrandSequence, y2: GrandSequence, params: GrandParams,
                            budget: Optional[int] = None, cfg: OptimizerConfig = None,
                            tolerance: float = 1e-9, case: int = 0) -> CaseRecord:
        """
        Checks small(y1 + y2) <= small(y1) + small(y2).

        *Notes*:
        - The search for y1 + y2 is seeded with the transfer of the concatenated witnesses to |y1 + y2|.
        """
        cfg = cfg if cfg is not None else self.optimizer
        first = self.small_norm_upper(y1, params, budget, cfg)
        second = self.small_norm_upper(y2, params, budget, cfg)
        total = y1.plus(y2)
        seeds: List[Decomposition] = []
        if not total.is_zero and first.witness_decomposition.n_parts and second.witness_decomposition.n_parts:
            joined = first.witness_decomposition.concat(second.witness_decomposition)
            seeds.append(self.transfer_decomposition(joined, total.absolute()))
        combined = self.small_norm_upper(total, params, budget, cfg, seeds)
        inputs = {'y1': y1.to_record(), 'y2': y2.to_record(), 'q': params.q, 'theta': params.theta}
        return CaseRecord.compare(case, 'small(y1+y2) <= small(y1)+small(y2)', inputs, combined.bracket,
                                  first.bracket.plus(second.bracket), tolerance)
    # endregion Lattice

    # region Hoelder
    def holder_check(self, x: GrandSequence, y: GrandSequence, params: GrandParams, budget: Optional[int] = None,
                     cfg: OptimizerConfig = None, tolerance: float = 1e-9, case: int = 0) -> CaseRecord:
        """
        Checks sum |x_k y_k| <= ||x||_{q),theta} ||y||_{q)',theta} for finitely supported y.

        *Examples*:
        - holder_check(spike, spike, GrandParams(1, 1)) --> 1 <= 1.32111 * 0.75694
        """
        pairing = float(sum(abs(v * x.value_at(k)) for k, v in y.entries))
        grand = self.grand.grand_norm(x, params, cfg)
        small = self.small_norm_upper(y, params, budget, cfg).bracket
        inputs = {'x': x.to_record(), 'y': y.to_record(), 'q': params.q, 'theta': params.theta}
        return CaseRecord.compare(case, 'sum|xy| <= grand(x) small(y)', inputs, NormBracket.exact(pairing),
                                  grand.times(small), tolerance, {'grand': grand, 'small': small})
    # endregion Hoelder
