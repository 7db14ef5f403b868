#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# LogGridSearch.py
"""
Description: Certified one-dimensional search over eps > 0 in the variable t = ln(eps) for objectives of
the form psi(eps)^(+-w) * N(eps), where N is a monotone l^r norm of the exponent r(eps).
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2024-11-06
"""

import math

from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np
from scipy.special import expit

from src.libs.common.Config.Configuration import OptimizerConfig
from src.libs.common.Logger.Logger import Logger
from src.libs.special_functions.SpecialFunctions import psi_argmax

LogNormBounds = Callable[[np.ndarray], Tuple[np.ndarray, np.ndarray]]

# region Global params
INV_PHI: float = (math.sqrt(5.0) - 1.0) / 2.0
INV_PHI_SQ: float = (3.0 - math.sqrt(5.0)) / 2.0
MIN_CHORD_SPAN: float = 1e-13
# endregion Global params


@dataclass(frozen=True)
class SearchOutcome:
    """
    Result of a certified search.

    *Attributes*:
    - lower, upper --> float : Enclosure of the sup (or inf) value.
    - best_eps --> float : Epsilon of the best evaluation.
    - evaluations --> int : Objective evaluations spent.
    - converged --> bool : Whether the relative gap reached refine_tol.
    """
    lower: float
    upper: float
    best_eps: float
    evaluations: int
    converged: bool


def log_psi_t(t: np.ndarray) -> np.ndarray:
    """ln psi(e^t) = t / (1 + e^t)."""
    t = np.asarray(t, dtype=float)
    return t * expit(-t)


def _curvature_factor(ta: np.ndarray, tb: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Bounds of sigma(1 - sigma) and of |t| over each interval, sigma the logistic function."""
    abs_max = np.maximum(np.abs(ta), np.abs(tb))
    abs_min = np.where((ta <= 0.0) & (tb >= 0.0), 0.0, np.minimum(np.abs(ta), np.abs(tb)))
    return np.minimum(0.25, np.exp(-abs_min)), abs_max


def golden_section_max(objective: Callable[[float], float], a: float, b: float,
                       tol: float, max_iter: int) -> Tuple[float, float, int]:
    """
    Golden section search for a maximum of a one-dimensional function on [a, b].

    *Arguments*:
    - objective --> callable : Function of one float.
    - a, b --> float : Bracket ends.
    - tol --> float : Bracket length at which to stop.
    - max_iter --> int : Iteration cap.

    *Returns*:
    - tuple : (best argument, best value, evaluations) among all evaluated points.

    *Notes*:
    - Every evaluated point is a candidate, so the returned value is a valid lower bound of the maximum
      whether or not the function is unimodal on [a, b].
    """
    dist = b - a
    c = a + INV_PHI_SQ * dist
    d = a + INV_PHI * dist
    yc = objective(c)
    yd = objective(d)
    evaluations = 2
    best_x, best_y = (c, yc) if yc >= yd else (d, yd)
    for _ in range(max_iter):
        if dist <= tol:
            break
        if yc > yd:
            b, d, yd = d, c, yc
            dist = INV_PHI * dist
            c = a + INV_PHI_SQ * dist
            yc = objective(c)
            if yc > best_y:
                best_x, best_y = c, yc
        else:
            a, c, yc = c, d, yd
            dist = INV_PHI * dist
            d = a + INV_PHI * dist
            yd = objective(d)
            if yd > best_y:
                best_x, best_y = d, yd
        evaluations += 1
    return best_x, best_y, evaluations


class LogGridSearch:
    """
    Certified sup/inf of psi(eps)^(+-w) * N(eps) over an epsilon range.

    *Attributes*:
    - logger --> Logger : Instance of the Logger class to log messages.
    - config --> OptimizerConfig : Grid and refinement settings.

    *Methods*:
    - grid(eps_lo, eps_hi) --> Log grid in t, always holding ln(1/W(1/e)) when it is in range.
    - supremum(...) --> Enclosure of sup for N nonincreasing and ln N convex in 1/r.
    - infimum(...) --> Enclosure of inf for N nondecreasing.

    *Notes*:
    - Between nodes the supremum is bounded by the smaller of a monotone bound and a chord bound: ln N lies
      below its chord in u = 1/(q(1+eps)), and the remaining error is controlled by explicit bounds on the
      second derivatives of t/(1+e^t) and u(t).
    """

    def __init__(self, logger: Logger, config: OptimizerConfig = None) -> None:
        self.logger = logger
        self.config = config if config is not None else OptimizerConfig()

    def grid(self, eps_lo: float, eps_hi: float) -> np.ndarray:
        t_lo = math.log(eps_lo)
        t_hi = math.log(eps_hi)
        if t_hi <= t_lo:
            return np.array([t_hi])
        nodes = np.linspace(t_lo, t_hi, self.config.grid_points)
        t_star = math.log(psi_argmax())
        if t_lo < t_star < t_hi:
            nodes = np.unique(np.append(nodes, t_star))
        return nodes

    def supremum(self, weight: float, q: float, log_norm: LogNormBounds, eps_lo: float, eps_hi: float,
                 left_cap: float = -math.inf, right_cap: float = -math.inf) -> SearchOutcome:
        """
        Enclosure of sup over [eps_lo, eps_hi] of exp(weight * ln psi(eps) + ln N(eps)).

        *Arguments*:
        - weight --> float : theta / q.
        - q --> float : Base exponent, N(eps) = ||x||_{q(1+eps)}.
        - log_norm --> callable : t array -> (ln N lower, ln N upper) arrays.
        - eps_lo, eps_hi --> float : Search range.
        - left_cap, right_cap --> float : Certified ln-bounds of the objective outside the range.

        *Returns*:
        - SearchOutcome
        """
        cfg = self.config
        t_nodes = self.grid(eps_lo, eps_hi)
        n_lo, n_hi = log_norm(t_nodes)
        base = weight * log_psi_t(t_nodes)
        values_lo = base + n_lo
        evaluations = len(t_nodes)

        best_index = int(np.argmax(values_lo))
        best_lower = float(values_lo[best_index])
        best_t = float(t_nodes[best_index])

        def lower_at(t: float) -> float:
            lo, _ = log_norm(np.array([t]))
            return float(weight * log_psi_t(np.array([t]))[0] + lo[0])

        if len(t_nodes) > 1 and math.isfinite(best_lower):
            a = float(t_nodes[max(best_index - 1, 0)])
            b = float(t_nodes[min(best_index + 1, len(t_nodes) - 1)])
            arg, value, spent = golden_section_max(lower_at, a, b, cfg.refine_tol, cfg.refine_max_iter)
            evaluations += spent
            if value > best_lower:
                best_lower, best_t = value, arg

        caps = max(left_cap, right_cap, float(np.max(weight * log_psi_t(t_nodes) + n_hi)))
        if len(t_nodes) == 1 or not math.isfinite(caps):
            upper = caps
            return self._outcome(best_lower, max(upper, best_lower), best_t, evaluations, False)

        ta, tb = t_nodes[:-1], t_nodes[1:]
        ha, hb = n_hi[:-1], n_hi[1:]
        settled = -math.inf
        converged = False
        for _ in range(cfg.refine_max_iter + 1):
            bounds = self._interval_upper(weight, q, ta, tb, ha, hb)
            current = max(caps, settled, float(np.max(bounds)) if bounds.size else -math.inf)
            if not math.isfinite(current):
                break
            if current - best_lower <= cfg.refine_tol:
                converged = True
                break
            active = bounds > best_lower + cfg.refine_tol
            settled = max(settled, float(np.max(bounds[~active])) if np.any(~active) else -math.inf)
            count = int(np.count_nonzero(active))
            if count == 0 or evaluations + count > cfg.max_evaluations:
                ta, tb, ha, hb = ta[active], tb[active], ha[active], hb[active]
                break
            ta, tb, ha, hb = ta[active], tb[active], ha[active], hb[active]
            mids = 0.5 * (ta + tb)
            m_lo, m_hi = log_norm(mids)
            evaluations += count
            mid_values = weight * log_psi_t(mids) + m_lo
            k = int(np.argmax(mid_values))
            if mid_values[k] > best_lower:
                best_lower, best_t = float(mid_values[k]), float(mids[k])
            ta, tb = np.concatenate([ta, mids]), np.concatenate([mids, tb])
            ha, hb = np.concatenate([ha, m_hi]), np.concatenate([m_hi, hb])

        remaining = self._interval_upper(weight, q, ta, tb, ha, hb)
        upper = max(caps, settled, best_lower, float(np.max(remaining)) if remaining.size else -math.inf)
        return self._outcome(best_lower, upper, best_t, evaluations, converged)

    def infimum(self, weight: float, q: float, log_norm: LogNormBounds, eps_lo: float, eps_hi: float,
                left_floor: float, right_floor: float, limit_upper: float = math.inf) -> SearchOutcome:
        """
        Enclosure of inf over eps > 0 of exp(-weight * ln psi(eps) + ln M(eps)), M nondecreasing in eps.

        *Arguments*:
        - weight --> float : theta / q.
        - q --> float : Base exponent.
        - log_norm --> callable : t array -> (ln M lower, ln M upper) arrays.
        - eps_lo, eps_hi --> float : Grid range.
        - left_floor, right_floor --> float : Certified ln lower bounds outside the grid range.
        - limit_upper --> float : ln of a limit value that is itself an upper bound of the infimum.

        *Returns*:
        - SearchOutcome
        """
        cfg = self.config
        t_nodes = self.grid(eps_lo, eps_hi)
        m_lo, m_hi = log_norm(t_nodes)
        base = -weight * log_psi_t(t_nodes)
        values_hi = base + m_hi
        evaluations = len(t_nodes)

        best_index = int(np.argmin(values_hi))
        best_upper = float(values_hi[best_index])
        best_t = float(t_nodes[best_index])

        def negated_upper_at(t: float) -> float:
            _, hi = log_norm(np.array([t]))
            return -float(-weight * log_psi_t(np.array([t]))[0] + hi[0])

        if len(t_nodes) > 1:
            a = float(t_nodes[max(best_index - 1, 0)])
            b = float(t_nodes[min(best_index + 1, len(t_nodes) - 1)])
            arg, value, spent = golden_section_max(negated_upper_at, a, b, cfg.refine_tol, cfg.refine_max_iter)
            evaluations += spent
            if -value < best_upper:
                best_upper, best_t = -value, arg
        if limit_upper < best_upper:
            best_upper, best_t = limit_upper, math.inf

        floors = min(left_floor, right_floor, float(np.min(base + m_lo)))
        if len(t_nodes) == 1:
            return self._outcome(min(floors, best_upper), best_upper, best_t, evaluations, False)

        ta, tb = t_nodes[:-1], t_nodes[1:]
        la = m_lo[:-1]
        settled = math.inf
        converged = False
        for _ in range(cfg.refine_max_iter + 1):
            bounds = self._interval_lower(weight, ta, tb, la)
            current = min(floors, settled, float(np.min(bounds)) if bounds.size else math.inf)
            if best_upper - current <= cfg.refine_tol:
                converged = True
                break
            active = bounds < best_upper - cfg.refine_tol
            settled = min(settled, float(np.min(bounds[~active])) if np.any(~active) else math.inf)
            count = int(np.count_nonzero(active))
            ta, tb, la = ta[active], tb[active], la[active]
            if count == 0 or evaluations + count > cfg.max_evaluations:
                break
            mids = 0.5 * (ta + tb)
            mid_lo, mid_hi = log_norm(mids)
            evaluations += count
            mid_values = -weight * log_psi_t(mids) + mid_hi
            k = int(np.argmin(mid_values))
            if mid_values[k] < best_upper:
                best_upper, best_t = float(mid_values[k]), float(mids[k])
            ta, tb = np.concatenate([ta, mids]), np.concatenate([mids, tb])
            la = np.concatenate([la, mid_lo])

        remaining = self._interval_lower(weight, ta, tb, la)
        lower = min(floors, settled, best_upper, float(np.min(remaining)) if remaining.size else math.inf)
        return self._outcome(lower, best_upper, best_t, evaluations, converged)

    @staticmethod
    def _interval_upper(weight: float, q: float, ta: np.ndarray, tb: np.ndarray,
                        ha: np.ndarray, hb: np.ndarray) -> np.ndarray:
        if ta.size == 0:
            return np.empty(0)
        delta = tb - ta
        sig, abs_max = _curvature_factor(ta, tb)
        psi_curv = sig * (2.0 + abs_max)
        wa = weight * log_psi_t(ta)
        wb = weight * log_psi_t(tb)
        monotone = np.maximum(wa, wb) + weight * psi_curv * delta ** 2 / 8.0 + ha

        ua = expit(-ta) / q
        ub = expit(-tb) / q
        span = ub - ua
        with np.errstate(divide='ignore', invalid='ignore'):
            slope = np.where(np.abs(span) > MIN_CHORD_SPAN, (hb - ha) / span, np.nan)
        chord_curv = weight * psi_curv + np.abs(slope) * sig / q
        chord = np.maximum(wa + ha, wb + hb) + chord_curv * delta ** 2 / 8.0
        chord = np.where(np.isfinite(chord), chord, np.inf)
        bound = np.minimum(monotone, chord)
        return np.where(np.isfinite(ha) & np.isfinite(hb), bound, np.inf)

    @staticmethod
    def _interval_lower(weight: float, ta: np.ndarray, tb: np.ndarray, la: np.ndarray) -> np.ndarray:
        if ta.size == 0:
            return np.empty(0)
        delta = tb - ta
        sig, abs_max = _curvature_factor(ta, tb)
        wa = -weight * log_psi_t(ta)
        wb = -weight * log_psi_t(tb)
        return np.minimum(wa, wb) - weight * sig * (2.0 + abs_max) * delta ** 2 / 8.0 + la

    def _outcome(self, log_lower: float, log_upper: float, best_t: float, evaluations: int,
                 converged: bool) -> SearchOutcome:
        lower = math.exp(log_lower) if log_lower > -math.inf else 0.0
        upper = math.exp(log_upper) if log_upper < math.inf else math.inf
        best_eps = math.exp(best_t) if math.isfinite(best_t) else math.inf
        self.logger.write_debug(
            f"search finished: [{lower:.12g}, {upper:.12g}] at eps={best_eps:.6g} "
            f"after {evaluations} evaluations (converged={converged})"
        )
        return SearchOutcome(lower, max(upper, lower), best_eps, evaluations, converged)
