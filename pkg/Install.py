#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Install.py
"""
Description: Script to check and install the Python packages the GrandNorms toolkit needs.

Dependencies checked:
- numpy: Vector arithmetic for norms, grids and generators.
- scipy: logsumexp, gamma and Lambert W special functions.
- mpmath: Incomplete gamma tail bounds and the high-precision constant oracle.
- pytest: Test runner.

Usage:
- python3 Install.py
- No administrative privileges are needed: only pip packages are installed.

Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import sys

from src.libs.common.Logger.Logger import Logger
from src.libs.dependency_checker.DependencyChecker import DependencyChecker


def install_dependencies(checker: DependencyChecker) -> bool:
    """
    Checks if the necessary packages are installed and installs them if missing.

    *Arguments*:
    - checker --> DependencyChecker : Checker bound to the requirements file.

    *Returns*:
    - bool : True when every package is importable afterwards.

    *Examples*:
    - install_dependencies(DependencyChecker(logger, './requirements.txt'))
    """
    print("Starting dependency check and installation...")
    return not checker.check_dependencies()


def main() -> int:
    """
    Main execution block to check the Python version and install dependencies.

    *Arguments*:
    - None

    *Returns*:
    - int : Process exit code.
    """
    log = Logger(config_json='./config.json')
    checker = DependencyChecker(log, requirements_path='./requirements.txt')
    if not checker.check_python_version():
        print("Error: unsupported Python version, see the log for details.")
        return 1
    if not install_dependencies(checker):
        print("Error: some dependencies could not be installed, see the log for details.")
        return 1
    print("All dependencies have been successfully installed.")
    return 0


if __name__ == "__main__":
    sys.exit(main())
