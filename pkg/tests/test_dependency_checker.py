#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# test_dependency_checker.py
"""
Description: Tests of DependencyChecker with pip and imports replaced by fakes.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import subprocess

from types import SimpleNamespace

import pytest

from src.libs.dependency_checker import DependencyChecker as checker_module
from src.libs.dependency_checker.DependencyChecker import REQUIRED_PACKAGES, DependencyChecker


class FakeImports:
    """import_module stand-in: names in `present` import, others raise ImportError."""

    def __init__(self, present):
        self.present = set(present)

    def __call__(self, name):
        if name not in self.present:
            raise ImportError(name)
        return object()


def _fake_imports(monkeypatch, imports):
    fake = SimpleNamespace(import_module=imports, invalidate_caches=lambda: None)
    monkeypatch.setattr(checker_module, 'importlib', fake)


@pytest.fixture
def pip_calls(monkeypatch):
    calls = []

    def fake_run(command, check):
        calls.append(command)
        return subprocess.CompletedProcess(command, 0)

    monkeypatch.setattr(checker_module.subprocess, 'run', fake_run)
    return calls


class TestDependencyChecker:

    def test_default_packages(self, logger):
        assert set(DependencyChecker(logger).packages) == set(REQUIRED_PACKAGES)

    @pytest.mark.parametrize('version, expected', [((3, 8), False), ((3, 9), True), ((3, 12, 1), True)])
    def test_python_version(self, logger, version, expected):
        assert DependencyChecker(logger).check_python_version(version) is expected

    def test_nothing_missing(self, logger, monkeypatch, pip_calls):
        _fake_imports(monkeypatch, FakeImports(REQUIRED_PACKAGES.values()))
        assert DependencyChecker(logger).check_dependencies() == []
        assert pip_calls == []

    def test_installs_each_missing_package(self, logger, monkeypatch, pip_calls):
        imports = FakeImports({'numpy', 'scipy', 'pytest'})
        _fake_imports(monkeypatch, imports)

        def fake_run(command, check):
            pip_calls.append(command)
            imports.present.add(command[-1])
            return subprocess.CompletedProcess(command, 0)

        monkeypatch.setattr(checker_module.subprocess, 'run', fake_run)
        assert DependencyChecker(logger).check_dependencies() == []
        assert [c[-1] for c in pip_calls] == ['mpmath']

    def test_requirements_file(self, logger, monkeypatch, pip_calls, tmp_path):
        """A requirements file is installed as a whole; failures are reported back."""
        requirements = tmp_path / 'requirements.txt'
        requirements.write_text('mpmath>=1.2\n')
        _fake_imports(monkeypatch, FakeImports({'numpy', 'scipy', 'pytest'}))
        missing = DependencyChecker(logger, str(requirements)).check_dependencies()
        assert missing == ['mpmath']
        assert pip_calls[0][-2:] == ['-r', str(requirements)]

    def test_missing_requirements_file(self, logger, monkeypatch, pip_calls, tmp_path):
        _fake_imports(monkeypatch, FakeImports(set()))
        checker = DependencyChecker(logger, str(tmp_path / 'absent.txt'), packages={'numpy': 'numpy'})
        assert checker.check_dependencies() == ['numpy']
        assert pip_calls == []

    def test_failed_install_is_logged(self, logger, monkeypatch, tmp_path):
        def failing_run(command, check):
            raise subprocess.CalledProcessError(1, command)

        monkeypatch.setattr(checker_module.subprocess, 'run', failing_run)
        assert not DependencyChecker(logger).install_dependency('mpmath')
        assert 'pip install mpmath failed' in (tmp_path / 'logs' / 'test.log').read_text()
