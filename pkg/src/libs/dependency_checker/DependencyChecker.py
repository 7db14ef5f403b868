#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# DependencyChecker.py
"""
Description: Class to check if the numerical packages of the toolkit are importable and install the missing ones.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import importlib
import os
import subprocess
import sys

from typing import Dict, List, Tuple

from src.libs.common.Logger.Logger import Logger

# region Global params
MINIMUM_PYTHON: Tuple[int, int] = (3, 9)
# distribution name -> import name
REQUIRED_PACKAGES: Dict[str, str] = {
    'numpy': 'numpy',
    'scipy': 'scipy',
    'mpmath': 'mpmath',
    'pytest': 'pytest',
}
# endregion Global params


class DependencyChecker:
    """
    Class to check if the necessary Python packages (numpy, scipy, mpmath, pytest) are installed.

    *Attributes*:
    - logger --> Logger : Instance of the Logger class to log messages.
    - requirements_path --> str : Path to the requirements.txt file (optional).
    - packages --> dict : Distribution name to import name of every checked package.

    *Methods*:
    - check_python_version() --> Whether the running interpreter is recent enough.
    - check_dependencies() --> Checks every package, installing the missing ones. Returns those still missing.
    - install_dependency(dependency_name: str) --> Installs a package with pip, returning whether pip succeeded.
    - _install_requirements() --> Installs the requirements file with pip.
    - _check_dependency(dependency_name: str) --> Verifies if a specific package can be imported.
    """

    def __init__(self, logger: Logger, requirements_path: str = None, packages: Dict[str, str] = None) -> None:
        """
        Initializes the DependencyChecker instance.

        *Arguments*:
        - logger --> Logger : Instance of the Logger class for logging messages.
        - requirements_path --> str : Path to the requirements.txt file (optional).
        - packages --> dict : Packages to check; REQUIRED_PACKAGES when None.

        *Returns*:
        - None

        *Examples*:
        - checker = DependencyChecker(logger, './requirements.txt')
        """
        self.logger = logger
        self.requirements_path = requirements_path
        self.packages = dict(packages) if packages is not None else dict(REQUIRED_PACKAGES)
        self.logger.write_info("DependencyChecker initialized.")

    def check_python_version(self, version: Tuple[int, ...] = None) -> bool:
        """
        Checks the interpreter version against MINIMUM_PYTHON.

        *Arguments*:
        - version --> tuple : Version to check; sys.version_info when None.

        *Returns*:
        - bool : True if the version is supported.
        """
        version = tuple(version if version is not None else sys.version_info[:2])
        if version[:2] < MINIMUM_PYTHON:
            self.logger.write_error(
                f"Python {'.'.join(map(str, MINIMUM_PYTHON))} or newer is required, "
                f"found {'.'.join(map(str, version[:2]))}."
            )
            return False
        return True

    def check_dependencies(self) -> List[str]:
        """
        Verifies that every package is importable.

        If a requirements file path is provided and something is missing, installs the requirements file,
        otherwise installs each missing package on its own.

        *Arguments*:
        - None

        *Returns*:
        - list : Packages that are still missing afterwards.

        *Examples*:
        - checker.check_dependencies() --> []
        """
        missing = [name for name in self.packages if not self._check_dependency(name)]
        if not missing:
            return []

        if self.requirements_path:
            self._install_requirements()
        else:
            for name in missing:
                self.install_dependency(name)

        importlib.invalidate_caches()
        still_missing = [name for name in missing if not self._check_dependency(name)]
        for name in still_missing:
            self.logger.write_error(f"{name} is still not importable.")
        return still_missing

    def _check_dependency(self, dependency_name: str) -> bool:
        """
        Verifies if a specific package can be imported.

        *Arguments*:
        - dependency_name --> str : Distribution name of the package.

        *Returns*:
        - bool : True if the import succeeds.

        *Examples*:
        - checker._check_dependency('numpy')
        """
        module = self.packages.get(dependency_name, dependency_name)
        try:
            importlib.import_module(module)
            self.logger.write_info(f"{dependency_name} is already installed.")
            return True
        except ImportError:
            self.logger.write_warning(f"{dependency_name} is not installed.")
            return False

    def _pip(self, *arguments: str) -> bool:
        """Runs `python -m pip install <arguments>`; False when pip exits with an error."""
        try:
            subprocess.run([sys.executable, '-m', 'pip', 'install', *arguments], check=True)
            return True
        except subprocess.CalledProcessError as e:
            self.logger.write_error(f"pip install {' '.join(arguments)} failed: {e}")
            return False

    def install_dependency(self, dependency_name: str) -> bool:
        """
        Installs a single package with pip.

        *Arguments*:
        - dependency_name --> str : Distribution name of the package.

        *Returns*:
        - bool : Whether pip succeeded.

        *Examples*:
        - checker.install_dependency('mpmath') --> True
        """
        self.logger.write_info(f"Installing {dependency_name}")
        installed = self._pip(dependency_name)
        if installed:
            self.logger.write_info(f"{dependency_name} installed")
        return installed

    def _install_requirements(self) -> bool:
        """Installs the requirements file as a whole; a missing file is logged and skipped."""
        if not os.path.isfile(self.requirements_path):
            self.logger.write_error(f"Requirements file {self.requirements_path} not found.")
            return False
        self.logger.write_info(f"Installing the packages listed in {self.requirements_path}")
        return self._pip('-r', self.requirements_path)
