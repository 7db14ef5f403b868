#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# test_special_functions.py
"""
Description: Tests of the Lambert W branch, the scaling function psi and the derived constants.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import math

import numpy as np
import pytest
from scipy.special import lambertw

from src.libs.common.Errors.Errors import DomainError
from src.libs.special_functions.SpecialFunctions import (c_eps0, conjugate_exponent, dual_exponent, lambert_w0,
                                                         log_psi, psi, psi_argmax, psi_max, psi_min_reciprocal,
                                                         reference_constants)


class TestLambertW:

    def test_fixed_points(self):
        """W(0) = 0 and W(e) = 1."""
        assert lambert_w0(0.0) == 0.0
        assert lambert_w0(math.e) == pytest.approx(1.0, abs=1e-14)

    @pytest.mark.parametrize('x', [1e-12, 1e-3, 0.1, math.exp(-1.0), 1.0, 10.0, 1e3, 1e8])
    def test_matches_scipy(self, x):
        """Agrees with scipy.special.lambertw on the principal branch."""
        assert lambert_w0(x) == pytest.approx(float(lambertw(x).real), rel=1e-13, abs=1e-15)

    def test_defining_identity(self):
        """w e^w = x on a log-spaced sweep."""
        for x in np.geomspace(1e-6, 1e6, 25):
            w = lambert_w0(float(x))
            assert w * math.exp(w) == pytest.approx(float(x), rel=1e-13)

    @pytest.mark.parametrize('x', [-1e-9, -1.0, math.inf, math.nan])
    def test_rejects_outside_domain(self, x):
        """Negative and non-finite arguments raise DomainError."""
        with pytest.raises(DomainError):
            lambert_w0(x)


class TestConstants:

    def test_ranges(self):
        """1/W(1/e) is about 3.59 and 1/(eW(1/e)) about 1.32."""
        assert 3.58 <= psi_argmax() <= 3.60
        assert 1.31 <= psi_max() <= 1.33

    def test_against_high_precision_oracle(self):
        """Every double constant matches the 50-digit values to 1e-12."""
        oracle = reference_constants()
        assert psi_argmax() == pytest.approx(float(oracle['argmax']), abs=1e-12)
        assert psi_max() == pytest.approx(float(oracle['max']), abs=1e-12)
        assert psi_min_reciprocal() == pytest.approx(float(oracle['min_reciprocal']), abs=1e-12)
        assert lambert_w0(math.exp(-1.0)) == pytest.approx(float(oracle['w']), abs=1e-12)

    def test_oracle_digits(self):
        """The oracle strings carry the requested precision."""
        oracle = reference_constants(30)
        assert oracle['argmax'].startswith('3.5911')
        assert len(oracle['max'].replace('.', '')) >= 25

    def test_max_and_min_reciprocal_are_inverse(self):
        """psi_max * e W(1/e) = 1."""
        assert psi_max() * psi_min_reciprocal() == pytest.approx(1.0, abs=1e-15)


class TestPsi:

    def test_value_at_argmax(self):
        """psi attains psi_max at 1/W(1/e)."""
        assert psi(psi_argmax()) == pytest.approx(psi_max(), rel=1e-14)

    def test_is_maximum_on_sweep(self):
        """No sampled psi value exceeds psi_max."""
        values = [psi(float(e)) for e in np.geomspace(1e-8, 1e8, 2001)]
        assert max(values) <= psi_max() * (1.0 + 1e-14)

    def test_simple_values(self):
        """psi(1) = 1, psi(eps) -> 0 at 0 and -> 1 at infinity."""
        assert psi(1.0) == 1.0
        assert psi(1e-12) < 1e-11
        assert psi(1e12) == pytest.approx(1.0, abs=1e-9)

    def test_log_psi(self):
        """ln psi(eps) = ln(eps)/(1+eps)."""
        assert log_psi(2.0) == pytest.approx(math.log(2.0) / 3.0)

    @pytest.mark.parametrize('eps', [0.0, -1.0, math.inf])
    def test_rejects_nonpositive(self, eps):
        """Only positive finite eps are accepted."""
        with pytest.raises(DomainError):
            psi(eps)


class TestExponents:

    @pytest.mark.parametrize('r, expected', [(2.0, 2.0), (4.0 / 3.0, 4.0), (3.0, 1.5), (math.inf, 1.0)])
    def test_conjugate_exponent(self, r, expected):
        """1/r + 1/r' = 1."""
        assert conjugate_exponent(r) == pytest.approx(expected)

    @pytest.mark.parametrize('r', [1.0, 0.5, math.nan])
    def test_conjugate_rejects(self, r):
        """r <= 1 has no finite conjugate."""
        with pytest.raises(DomainError):
            conjugate_exponent(r)

    def test_dual_exponent_extends_to_one(self):
        """1' = inf and inf' = 1."""
        assert dual_exponent(1.0) == math.inf
        assert dual_exponent(math.inf) == 1.0
        assert dual_exponent(2.0) == 2.0


class TestTruncationConstant:

    def test_one_at_argmax(self):
        """c(eps0) = 1 at eps0 = 1/W(1/e)."""
        assert c_eps0(psi_argmax()) == pytest.approx(1.0, abs=1e-12)

    def test_values(self):
        """c(1) = psi_max and c(0.01) = psi_max / 0.01^(1/1.01)."""
        assert c_eps0(1.0) == pytest.approx(psi_max())
        assert c_eps0(0.01) == pytest.approx(psi_max() / 0.01 ** (1.0 / 1.01), rel=1e-12)

    def test_never_below_one(self):
        """c(eps0) >= 1 everywhere."""
        assert all(c_eps0(float(e)) >= 1.0 for e in np.geomspace(1e-6, 1e6, 101))

    def test_rejects_nonpositive(self):
        """eps0 must be positive."""
        with pytest.raises(DomainError):
            c_eps0(0.0)
