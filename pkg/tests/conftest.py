#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# conftest.py
"""
Description: Shared pytest fixtures: a Logger writing into a temporary directory and one instance of every
calculator built from default settings.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import json
import logging

import pytest

from src.libs.amalgam.Amalgam import AmalgamCalculator
from src.libs.common.Config.Configuration import Configuration
from src.libs.common.Logger.Logger import Logger
from src.libs.grand_norm.GrandNorm import GrandNormCalculator
from src.libs.operators.MultiplicationOperator import MultiplicationOperator
from src.libs.sequences.SequenceNorms import SequenceNorms
from src.libs.small_norm.SmallNorm import SmallNormCalculator
from src.libs.verifier.Verifier import Verifier


@pytest.fixture
def config_file(tmp_path):
    """config.json with a log file inside tmp_path and quiet console output."""
    path = tmp_path / 'config.json'
    path.write_text(json.dumps({
        'debugConfig': {
            'logFilePath': str(tmp_path / 'logs' / 'test.log'),
            'debugLevel': 10,
            'consoleLevel': 50,
        },
        'suiteConfig': {'seed': 42, 'cases': 3, 'tolerance': 1e-9, 'divergenceThreshold': 1e6},
    }))
    return path


@pytest.fixture(autouse=True)
def close_log_handlers():
    """Drops the handlers each test installs on the shared grand_norms logger."""
    yield
    shared = logging.getLogger(Logger.LOGGER_NAME)
    for handler in list(shared.handlers):
        shared.removeHandler(handler)
        handler.close()


@pytest.fixture
def logger(tmp_path, config_file):
    return Logger(log_file=str(tmp_path / 'logs' / 'test.log'), config_json=str(config_file))


@pytest.fixture
def configuration(config_file):
    return Configuration.load(str(config_file))


@pytest.fixture
def norms(logger):
    return SequenceNorms(logger)


@pytest.fixture
def grand(logger):
    return GrandNormCalculator(logger)


@pytest.fixture
def small(logger):
    return SmallNormCalculator(logger)


@pytest.fixture
def amalgam(logger):
    return AmalgamCalculator(logger)


@pytest.fixture
def operator(logger, amalgam):
    return MultiplicationOperator(logger, amalgam)


@pytest.fixture
def verifier(logger, configuration):
    return Verifier(logger, configuration)
