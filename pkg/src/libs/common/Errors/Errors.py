#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Errors.py
"""
Description: Exception hierarchy shared by the norm calculators, the verifier and the CLI.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""


class GrandNormsError(Exception):
    """Base class for every error raised by the toolkit."""


class DomainError(GrandNormsError, ValueError):
    """
    A parameter lies outside the domain of the operation.

    *Examples*:
    - lambert_w0(-1.0)
    - conjugate_exponent(1.0)
    - lp_norm(x, 0.5)
    """


class ConfigError(GrandNormsError):
    """Invalid optimizer, search or suite configuration."""


class InvariantError(GrandNormsError):
    """
    A structural invariant does not hold.

    *Notes*:
    - Raised for decomposition row sums, step-function cell widths, negative entries
      where nonnegative sequences are required and broken domination preconditions.
    """


class FormatError(GrandNormsError):
    """Malformed sequence, step-function or report record."""


class DivergenceError(GrandNormsError):
    """A finite value was required but the computed upper bound is infinite."""


class UnknownSuiteError(GrandNormsError, KeyError):
    """The requested verification suite is not registered."""
