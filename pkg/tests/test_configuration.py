#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# test_configuration.py
"""
Description: Tests of config.json loading and the Logger levels.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import json

import pytest

from src.libs.common.Config.Configuration import (CONFIG_ENV_VAR, Configuration, OperatorConfig, OptimizerConfig,
                                                  SearchConfig, SequenceConfig, SuiteConfig)
from src.libs.common.Errors.Errors import ConfigError
from src.libs.common.Logger.Logger import Logger, LoggerLevel


def _write(tmp_path, data) -> str:
    path = tmp_path / 'config.json'
    path.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return str(path)


class TestConfiguration:

    def test_missing_file_gives_defaults(self, tmp_path):
        config = Configuration.load(str(tmp_path / 'absent.json'))
        assert config == Configuration()
        assert config.source == ''

    def test_broken_json_gives_defaults(self, tmp_path):
        assert Configuration.load(_write(tmp_path, '{')) == Configuration()

    def test_overrides(self, tmp_path):
        """Given keys replace defaults, others keep them."""
        path = _write(tmp_path, {
            'optimizerConfig': {'gridPoints': 50},
            'suiteConfig': {'cases': 7, 'seed': 3},
            'operatorConfig': {'deltaLadder': [0.25]},
        })
        config = Configuration.load(path)
        assert config.optimizer.grid_points == 50
        assert config.optimizer.eps_max == 1e4
        assert (config.suite.cases, config.suite.seed) == (7, 3)
        assert config.suite.q_range == SuiteConfig().q_range
        assert config.operator.delta_ladder == (0.25,)
        assert config.source == path

    def test_fixture_file(self, configuration):
        assert configuration.suite.cases == 3

    def test_environment_variable(self, tmp_path, monkeypatch):
        path = _write(tmp_path, {'searchConfig': {'budget': 12}})
        monkeypatch.setenv(CONFIG_ENV_VAR, path)
        assert Configuration.default_path() == path
        assert Configuration.load().search.budget == 12

    @pytest.mark.parametrize('data', [
        {'suiteConfig': {'cases': 0}},
        {'optimizerConfig': {'gridPoints': 'many'}},
        {'optimizerConfig': {'epsMin': 10.0, 'epsMax': 1.0}},
        {'searchConfig': {'alpha': 1.5}},
        {'operatorConfig': {'deltaLadder': []}},
        {'sequenceConfig': {'horizon': 5}},
    ])
    def test_invalid_values(self, tmp_path, data):
        with pytest.raises(ConfigError):
            Configuration.load(_write(tmp_path, data))


class TestSections:

    def test_tightened_optimizer(self):
        tight = OptimizerConfig().tightened()
        assert (tight.grid_points, tight.refine_max_iter, tight.max_evaluations) == (800, 400, 80000)

    def test_tightened_sequence(self):
        tight = SequenceConfig().tightened()
        assert tight.horizon == 10_000_000
        assert tight.relative_width == pytest.approx(1e-9)

    def test_suite_ranges(self):
        with pytest.raises(ConfigError):
            SuiteConfig(q_range=(0.5, 2.0))
        with pytest.raises(ConfigError):
            SuiteConfig(sigma_fraction=(0.5, 1.0))

    def test_search_budget(self):
        with pytest.raises(ConfigError):
            SearchConfig(budget=-1)

    def test_operator_ladder(self):
        with pytest.raises(ConfigError):
            OperatorConfig(delta_ladder=(0.1, 0.0))


class TestLogger:

    def test_levels_from_config(self, logger):
        """The fixture file sets DEBUG for the file and CRITICAL for the console."""
        assert Logger.get_debug_level() == LoggerLevel.DEBUG.value
        assert Logger.console_level == LoggerLevel.CRITICAL.value

    def test_writes_to_file(self, logger, tmp_path):
        logger.write_info('bracket [1, 2]')
        text = (tmp_path / 'logs' / 'test.log').read_text()
        assert 'INFO' in text
        assert 'bracket [1, 2]' in text

    def test_level_gate(self, tmp_path):
        """Messages below debugLevel are dropped."""
        path = _write(tmp_path, {'debugConfig': {'debugLevel': 40, 'consoleLevel': 50}})
        target = tmp_path / 'gated.log'
        log = Logger(log_file=str(target), config_json=path)
        log.write_info('hidden')
        log.write_error('shown')
        text = target.read_text()
        assert 'hidden' not in text
        assert 'shown' in text

    def test_missing_config_warns(self, tmp_path, capsys):
        target = tmp_path / 'default.log'
        Logger(log_file=str(target), config_json=str(tmp_path / 'absent.json'))
        assert Logger.get_debug_level() == LoggerLevel.DEBUG.value
        assert 'Could not read' in target.read_text()
        assert 'Could not read' in capsys.readouterr().err

    def test_handlers_shared(self, logger, tmp_path, config_file):
        """A second instance on the same file adds no handler."""
        Logger(log_file=str(tmp_path / 'logs' / 'test.log'), config_json=str(config_file))
        assert len(logger._logger.handlers) == 2

    @pytest.mark.parametrize('level', ['debug', 'info', 'warning', 'error', 'critical'])
    def test_every_writer_reaches_the_file(self, logger, tmp_path, level):
        """The fixture file logs from DEBUG up, so every writer is kept with its level name."""
        getattr(logger, f'write_{level}')(f'{level} record')
        text = (tmp_path / 'logs' / 'test.log').read_text()
        assert f'{level} record' in text
        assert level.upper() in text
