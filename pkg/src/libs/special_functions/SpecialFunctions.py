#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# SpecialFunctions.py
"""
Description: Scalar special functions behind every norm constant: the principal Lambert W branch,
the scaling function psi(eps) = eps^(1/(1+eps)), conjugate exponents and the truncation constant c(eps0).
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import math

from functools import lru_cache
from typing import Dict

from mpmath import mp

from src.libs.common.Errors.Errors import DomainError

# region Global params
HALLEY_TOLERANCE: float = 1e-14
HALLEY_MAX_ITER: int = 50
ORACLE_DIGITS: int = 50
# endregion Global params


def _check_epsilon(eps: float, name: str = 'eps') -> float:
    eps = float(eps)
    if not math.isfinite(eps) or eps <= 0.0:
        raise DomainError(f"{name} must be positive and finite, got {eps}")
    return eps


def lambert_w0(x: float) -> float:
    """
    Principal branch W0 of the Lambert function on [0, inf).

    *Arguments*:
    - x --> float : Nonnegative finite argument.

    *Returns*:
    - float : w >= 0 with w * exp(w) = x.

    *Examples*:
    - lambert_w0(0.0) --> 0.0
    - lambert_w0(math.e) --> 1.0

    *Notes*:
    - Halley iteration started at ln(1 + x), residual target 1e-14 * max(1, x), at most 50 steps.
    """
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise DomainError(f"lambert_w0 needs a finite x >= 0, got {x}")
    if x == 0.0:
        return 0.0

    w = math.log1p(x)
    target = HALLEY_TOLERANCE * max(1.0, x)
    for _ in range(HALLEY_MAX_ITER):
        ew = math.exp(w)
        f = w * ew - x
        if abs(f) <= target:
            break
        wp1 = w + 1.0
        step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w -= step
        if abs(step) <= 1e-16 * max(1.0, w):
            break
    return max(w, 0.0)


@lru_cache(maxsize=None)
def psi_argmax() -> float:
    """Location 1/W(1/e) of the maximum of psi."""
    return 1.0 / lambert_w0(math.exp(-1.0))


@lru_cache(maxsize=None)
def psi_max() -> float:
    """Maximum value 1/(e W(1/e)) of psi."""
    return 1.0 / (math.e * lambert_w0(math.exp(-1.0)))


@lru_cache(maxsize=None)
def psi_min_reciprocal() -> float:
    """e W(1/e), the infimum of eps^(-1/(1+eps))."""
    return math.e * lambert_w0(math.exp(-1.0))


def log_psi(eps: float) -> float:
    """ln psi(eps) = ln(eps) / (1 + eps)."""
    eps = _check_epsilon(eps)
    return math.log(eps) / (1.0 + eps)


def psi(eps: float) -> float:
    """
    Scaling function psi(eps) = eps^(1/(1+eps)).

    *Arguments*:
    - eps --> float : Positive epsilon.

    *Returns*:
    - float : psi(eps), evaluated as exp(ln(eps)/(1+eps)).

    *Examples*:
    - psi(1.0) --> 1.0
    - psi(psi_argmax()) --> 1.32111...
    """
    return math.exp(log_psi(eps))


def conjugate_exponent(r: float) -> float:
    """
    Conjugate exponent r' = r / (r - 1).

    *Arguments*:
    - r --> float : Exponent strictly greater than 1.

    *Returns*:
    - float : r' with 1/r + 1/r' = 1.

    *Examples*:
    - conjugate_exponent(2.0) --> 2.0
    - conjugate_exponent(4.0 / 3.0) --> 4.0
    """
    r = float(r)
    if math.isnan(r) or r <= 1.0:
        raise DomainError(f"conjugate_exponent needs r > 1, got {r}")
    if math.isinf(r):
        return 1.0
    return r / (r - 1.0)


def dual_exponent(p: float) -> float:
    """Conjugate of a local exponent, extended by 1' = inf and inf' = 1."""
    p = float(p)
    if p == 1.0:
        return math.inf
    return conjugate_exponent(p)


def c_eps0(eps0: float) -> float:
    """
    Constant c(eps0) = (1/(e W(1/e))) * eps0^(-1/(1+eps0)) of the truncated-range equivalence.

    *Arguments*:
    - eps0 --> float : Positive truncation point.

    *Returns*:
    - float : c(eps0) >= 1, equal to 1 at eps0 = 1/W(1/e).

    *Examples*:
    - c_eps0(1.0) --> 1.32111...
    - c_eps0(0.01) --> 126.2...
    """
    eps0 = _check_epsilon(eps0, 'eps0')
    return max(1.0, psi_max() / psi(eps0))


def reference_constants(digits: int = ORACLE_DIGITS) -> Dict[str, str]:
    """
    High-precision values of the Lambert constants.

    *Arguments*:
    - digits --> int : Decimal digits of working precision.

    *Returns*:
    - dict : 'w' = W(1/e), 'argmax' = 1/W(1/e), 'max' = 1/(e W(1/e)), 'min_reciprocal' = e W(1/e),
      as decimal strings.

    *Examples*:
    - reference_constants()['argmax'][:6] --> '3.5911'
    """
    with mp.workdps(digits):
        w = mp.lambertw(mp.exp(-1)).real
        return {
            'w': mp.nstr(w, digits),
            'argmax': mp.nstr(1 / w, digits),
            'max': mp.nstr(1 / (mp.e * w), digits),
            'min_reciprocal': mp.nstr(mp.e * w, digits),
        }
