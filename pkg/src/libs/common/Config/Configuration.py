#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Configuration.py
"""
Description: Typed configuration sections read from config.json.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import json
import math
import os

from dataclasses import dataclass, field, replace
from typing import Tuple

from src.libs.common.Errors.Errors import ConfigError

# region Global params
CONFIG_ENV_VAR: str = 'GRAND_NORMS_CONFIG'
DEFAULT_CONFIG_PATH: str = './config.json'
# endregion Global params


@dataclass(frozen=True)
class OptimizerConfig:
    """
    Settings of the certified search over epsilon.

    *Attributes*:
    - eps_min --> float : Smallest grid epsilon.
    - eps_max --> float : Largest grid epsilon.
    - grid_points --> int : Number of log-spaced grid nodes.
    - refine_tol --> float : Relative gap at which refinement stops.
    - refine_max_iter --> int : Maximum refinement rounds.
    - max_evaluations --> int : Evaluation budget of the refinement.
    """
    eps_min: float = 1e-8
    eps_max: float = 1e4
    grid_points: int = 400
    refine_tol: float = 1e-10
    refine_max_iter: int = 200
    max_evaluations: int = 20000

    def __post_init__(self) -> None:
        if not (math.isfinite(self.eps_min) and math.isfinite(self.eps_max)):
            raise ConfigError("eps_min and eps_max must be finite")
        if not 0.0 < self.eps_min < self.eps_max:
            raise ConfigError(f"need 0 < eps_min < eps_max, got {self.eps_min}, {self.eps_max}")
        if self.grid_points < 3:
            raise ConfigError(f"grid_points must be at least 3, got {self.grid_points}")
        if self.refine_tol <= 0.0:
            raise ConfigError("refine_tol must be positive")
        if self.refine_max_iter < 0 or self.max_evaluations < 0:
            raise ConfigError("refinement limits must be nonnegative")

    def tightened(self) -> 'OptimizerConfig':
        """Finer grid and larger budget, used once before a verdict is left inconclusive."""
        return replace(
            self,
            grid_points=self.grid_points * 2,
            refine_max_iter=self.refine_max_iter * 2,
            max_evaluations=self.max_evaluations * 4,
        )


@dataclass(frozen=True)
class SequenceConfig:
    """Truncation horizon and early-stop width for series brackets."""
    horizon: int = 1_000_000
    relative_width: float = 1e-8

    def __post_init__(self) -> None:
        if self.horizon < 10:
            raise ConfigError(f"horizon must be at least 10, got {self.horizon}")
        if self.relative_width <= 0.0:
            raise ConfigError("relative_width must be positive")

    def tightened(self) -> 'SequenceConfig':
        return replace(self, horizon=self.horizon * 10, relative_width=self.relative_width / 10)


@dataclass(frozen=True)
class SearchConfig:
    """Budget and annealing schedule of the decomposition search."""
    budget: int = 200
    seed: int = 0
    temperature: float = 0.25
    alpha: float = 0.99

    def __post_init__(self) -> None:
        if self.budget < 0:
            raise ConfigError("budget must be nonnegative")
        if self.temperature <= 0.0 or not 0.0 < self.alpha < 1.0:
            raise ConfigError("need temperature > 0 and 0 < alpha < 1")


@dataclass(frozen=True)
class SuiteConfig:
    """
    Settings shared by the verification suites.

    *Attributes*:
    - seed --> int : 64-bit seed of the instance generators.
    - cases --> int : Cases per suite.
    - tolerance --> float : Absolute slack of every inequality.
    - divergence_threshold --> float : Threshold of the divergence evidence.
    - q_range, p_range, theta_range, eps0_range, delta_range --> tuple : Sampling ranges.
    - sigma_fraction --> tuple : Range of sigma as a fraction of 1/q'.
    """
    seed: int = 42
    cases: int = 100
    tolerance: float = 1e-9
    divergence_threshold: float = 1e6
    q_range: Tuple[float, float] = (1.0, 4.0)
    p_range: Tuple[float, float] = (1.0, 4.0)
    theta_range: Tuple[float, float] = (0.1, 3.0)
    eps0_range: Tuple[float, float] = (0.05, 10.0)
    delta_range: Tuple[float, float] = (0.01, 5.0)
    sigma_fraction: Tuple[float, float] = (0.05, 0.95)

    def __post_init__(self) -> None:
        if self.cases < 1:
            raise ConfigError(f"cases must be at least 1, got {self.cases}")
        if self.tolerance < 0.0:
            raise ConfigError("tolerance must be nonnegative")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError("seed must fit in 64 bits")
        for name, lower_limit in (('q_range', 1.0), ('p_range', 1.0)):
            low, high = getattr(self, name)
            if low < lower_limit or high < low:
                raise ConfigError(f"{name} must satisfy {lower_limit} <= low <= high")
        for name in ('theta_range', 'eps0_range', 'delta_range'):
            low, high = getattr(self, name)
            if low <= 0.0 or high < low:
                raise ConfigError(f"{name} must satisfy 0 < low <= high")
        low, high = self.sigma_fraction
        if not 0.0 < low <= high < 1.0:
            raise ConfigError("sigma_fraction must lie inside (0, 1)")


@dataclass(frozen=True)
class OperatorConfig:
    """Level-set ladder used by the operator-norm estimate."""
    delta_ladder: Tuple[float, ...] = (0.5, 0.1, 0.01, 0.001)

    def __post_init__(self) -> None:
        if not self.delta_ladder or any(d <= 0.0 for d in self.delta_ladder):
            raise ConfigError("delta_ladder must hold positive values")


@dataclass(frozen=True)
class Configuration:
    """
    All configuration sections of config.json.

    *Methods*:
    - load(path) --> Reads config.json, falling back to defaults.
    - default_path() --> Path from GRAND_NORMS_CONFIG or ./config.json.
    """
    optimizer: OptimizerConfig = field(default_factory=OptimizerConfig)
    sequence: SequenceConfig = field(default_factory=SequenceConfig)
    search: SearchConfig = field(default_factory=SearchConfig)
    suite: SuiteConfig = field(default_factory=SuiteConfig)
    operator: OperatorConfig = field(default_factory=OperatorConfig)
    source: str = ''

    @staticmethod
    def default_path() -> str:
        return os.environ.get(CONFIG_ENV_VAR, DEFAULT_CONFIG_PATH)

    @classmethod
    def load(cls, config_path: str = None) -> 'Configuration':
        """
        Loads every configuration section from a JSON file.

        *Arguments*:
        - config_path --> str : Path to config.json. None selects default_path().

        *Returns*:
        - Configuration : The parsed sections. Missing keys keep their defaults.

        *Examples*:
        - config = Configuration.load('./config.json')

        *Notes*:
        - A missing or unreadable file yields the defaults, as Logger.load_configuration does.
        - Values that break a section invariant raise ConfigError.
        """
        path = config_path if config_path is not None else cls.default_path()
        try:
            with open(path, 'r') as config_file:
                raw = json.load(config_file)
        except (FileNotFoundError, json.JSONDecodeError):
            return cls(source='')

        try:
            opt = raw.get("optimizerConfig", {})
            seq = raw.get("sequenceConfig", {})
            search = raw.get("searchConfig", {})
            suite = raw.get("suiteConfig", {})
            operator = raw.get("operatorConfig", {})
            base_suite = SuiteConfig()
            return cls(
                optimizer=OptimizerConfig(
                    eps_min=float(opt.get("epsMin", 1e-8)),
                    eps_max=float(opt.get("epsMax", 1e4)),
                    grid_points=int(opt.get("gridPoints", 400)),
                    refine_tol=float(opt.get("refineTol", 1e-10)),
                    refine_max_iter=int(opt.get("refineMaxIter", 200)),
                    max_evaluations=int(opt.get("maxEvaluations", 20000)),
                ),
                sequence=SequenceConfig(
                    horizon=int(seq.get("horizon", 1_000_000)),
                    relative_width=float(seq.get("relativeWidth", 1e-8)),
                ),
                search=SearchConfig(
                    budget=int(search.get("budget", 200)),
                    seed=int(search.get("seed", 0)),
                    temperature=float(search.get("temperature", 0.25)),
                    alpha=float(search.get("alpha", 0.99)),
                ),
                suite=replace(
                    base_suite,
                    seed=int(suite.get("seed", base_suite.seed)),
                    cases=int(suite.get("cases", base_suite.cases)),
                    tolerance=float(suite.get("tolerance", base_suite.tolerance)),
                    divergence_threshold=float(
                        suite.get("divergenceThreshold", base_suite.divergence_threshold)
                    ),
                ),
                operator=OperatorConfig(
                    delta_ladder=tuple(float(d) for d in operator.get("deltaLadder", (0.5, 0.1, 0.01, 0.001)))
                ),
                source=path,
            )
        except (TypeError, ValueError, AttributeError) as e:
            raise ConfigError(f"Invalid configuration in {path}: {str(e)}") from e
