"""Hausdorff dimension of the set of limit-disc sequences.

Sequences are measured with the base-|F| ultrametric.  Two regimes are
solved exactly: every gamma below one (dimension from the spectral radius of
the tangency graph) and complete tangency graphs (a one-dimensional convex
minimisation).  Anything else gets the smaller of the two upper bounds.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .classify import BORDERLINE_TOL
from .errors import (
    ConstructionFailed,
    GraphNotComplete,
    HypothesisViolated,
    InputError,
    LogBaseDegenerate,
    NoInteriorMinimum,
)
from .mobius import MobiusMap, compose, make_mobius, unit_halfplane_map
from .tangency import GeneratorSet, TangencyGraph, has_cycle, is_complete, spectral_radius, tangency_data


class Method(str, enum.Enum):
    THEOREM3 = "Theorem3"
    THEOREM4 = "Theorem4"
    UPPER_BOUND = "UpperBoundOnly"


@dataclass(frozen=True)
class DimensionReport:
    value: float
    method: Method
    s_star: Optional[float] = None
    details: str = ""
    gammas: list = field(default_factory=list)


class Minimum(NamedTuple):
    s_star: float
    g_value: float


def log_q(s, log_gammas) -> float:
    """g(s) = log sum_i gamma_i^{-s}, evaluated as a log-sum-exp."""
    x = -s * np.asarray(log_gammas, dtype=float)
    m = x.max()
    return float(m + np.log(np.exp(x - m).sum()))


def dlog_q(s, log_gammas) -> float:
    """g'(s) = -sum_i w_i log gamma_i with weights w_i proportional to gamma_i^{-s}."""
    lg = np.asarray(log_gammas, dtype=float)
    x = -s * lg
    w = np.exp(x - x.max())
    return float(-(w * lg).sum() / w.sum())


def minimize_g(gammas: Sequence[float], tol: float = 1e-12) -> Minimum:
    """Minimise g(s) = log sum gamma_i^{-s} over s >= 0.

    g' is strictly increasing, so its root s0 is found by bisection on a
    bracket grown geometrically from [-1, 1].  Returns (max(s0, 0), g there).
    """
    g = np.asarray(gammas, dtype=float)
    if g.size == 0 or (g <= 0).any():
        raise InputError("gammas must be positive")
    if not ((g > 1).any() and (g < 1).any()):
        raise NoInteriorMinimum("need at least one gamma above 1 and one below 1")
    lg = np.log(g)
    lo, hi = -1.0, 1.0
    while dlog_q(lo, lg) >= 0:
        lo *= 2.0
    while dlog_q(hi, lg) <= 0:
        hi *= 2.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if dlog_q(mid, lg) > 0:
            hi = mid
        else:
            lo = mid
    s = max(0.5 * (lo + hi), 0.0)
    return Minimum(s, log_q(s, lg))


def snap_gammas(gammas) -> np.ndarray:
    """Gammas within BORDERLINE_TOL of 1 become exactly 1.

    The dimension jumps at gamma = 1, so a rounding error of one ulp must not
    decide which side a parabolic generator falls on.
    """
    g = np.asarray(gammas, dtype=float)
    return np.where(np.abs(g - 1.0) <= BORDERLINE_TOL, 1.0, g)


def _log_base(F: GeneratorSet) -> float:
    if F.b < 2:
        raise LogBaseDegenerate("the sequence-space metric has base |F|; need at least two generators")
    return math.log(F.b)


def dim_theorem3(F: GeneratorSet, G: TangencyGraph) -> DimensionReport:
    """All gamma < 1: dim = log rho / log |F| if the graph has a cycle, else 0."""
    logb = _log_base(F)
    offenders = [n for n, _, d in F if d.tangent and snap_gammas([d.gamma])[0] >= 1.0]
    if offenders:
        raise HypothesisViolated(f"gamma >= 1 for {offenders}", offenders)
    gammas = F.gammas
    if not has_cycle(G):
        return DimensionReport(0.0, Method.THEOREM3, None, "tangency graph is acyclic", gammas)
    rho = spectral_radius(G)
    return DimensionReport(
        math.log(rho) / logb, Method.THEOREM3, None, f"log(rho)/log(b) with rho={rho!r}, b={F.b}", gammas
    )


def dim_theorem4(F: GeneratorSet, G: TangencyGraph) -> DimensionReport:
    """Complete tangency graph: dispatch on the gammas."""
    logb = _log_base(F)
    if not is_complete(G, F):
        raise GraphNotComplete("tangency graph is not complete")
    gammas = F.gammas
    g = snap_gammas(gammas)
    if (g >= 1).all():
        return DimensionReport(0.0, Method.THEOREM4, None, "all gamma >= 1: no limit-disc sequences", gammas)
    if (g < 1).all():
        return DimensionReport(1.0, Method.THEOREM4, None, "all gamma < 1: every sequence is limit-disc", gammas)
    if not (g > 1).any():
        # gammas in (0, 1] only: g(s) increases on s >= 0, minimum at 0
        return DimensionReport(1.0, Method.THEOREM4, 0.0, "mixed gammas without gamma > 1: minimum at s = 0", gammas)
    s, val = minimize_g(g)
    return DimensionReport(val / logb, Method.THEOREM4, s, "min over s >= 0 of log(sum gamma^-s)/log b", gammas)


def _gamma_bound(gammas, logb) -> float:
    g = snap_gammas(gammas)
    if g.size == 0 or (g >= 1).all():
        return 0.0
    if not (g > 1).any():
        return math.log(g.size) / logb
    return minimize_g(g).g_value / logb


def dim_upper_bound(F: GeneratorSet, G: TangencyGraph) -> DimensionReport:
    """Exact value when a theorem applies, otherwise min of the two bounds.

    Limit-disc words are eventually paths in the graph, bounding the
    dimension by log rho / log b; they also satisfy the series condition
    over the tangent letters, bounding it by the minimisation formula.
    """
    logb = _log_base(F)
    tangent = [d.gamma for d in F.data if d.tangent]
    if (snap_gammas(tangent) < 1.0).all():
        return dim_theorem3(F, G)
    if is_complete(G, F):
        return dim_theorem4(F, G)
    path_bound = math.log(spectral_radius(G)) / logb if has_cycle(G) else 0.0
    series_bound = _gamma_bound(tangent, logb)
    value = min(path_bound, series_bound)
    details = f"min(path bound {path_bound!r}, series bound {series_bound!r}); exact value open"
    return DimensionReport(max(value, 0.0), Method.UPPER_BOUND, None, details, F.gammas)


def make_tangent_generator(gamma: float, offset: complex, p: complex, tol: float = 1e-9) -> MobiusMap:
    """A map of M(D) fixing the circle point p with gamma_f = gamma.

    Built as phi_p^{-1} o (w -> gamma w + offset) o phi_p, where phi_p sends
    the unit disc to the right half-plane and p to infinity.
    """
    offset = complex(offset)
    if not (gamma > 0 and offset.real > 0 and abs(abs(p) - 1.0) <= tol):
        raise InputError("need gamma > 0, Re(offset) > 0 and |p| = 1")
    phi = unit_halfplane_map(p)
    f = compose(phi.inverse(), compose(make_mobius(gamma, offset, 0, 1), phi))
    d = tangency_data(f)
    if not (
        d.tangent
        and abs(d.alpha - p) <= tol
        and abs(d.beta - p) <= tol
        and abs(d.gamma - gamma) <= tol * max(1.0, gamma)
    ):
        raise ConstructionFailed(f"constructed map has tangency data {d}")
    return f
