"""Simulation of composition sequences F_n = f_1 ... f_n.

Multiplying the matrices of F_n directly is useless for limit-disc words:
F_n has singular values ~exp(+-rho/2), and the disc F_n(D) is decided by
the small one, which rounding destroys once rho exceeds ~37.  Tangency of
the generators is only exact up to rounding as well, and a defect of eps
collapses the limit disc after ~50 steps.

:class:`Composition` therefore stores

    F_n = M o phi_s^{-1} o (w -> A w + B) o phi_n,

where the affine part is the current maximal run of tangent letters
(consecutive letters joined by tangency-graph edges), conjugated to the
right half-plane, and M is everything before the run.  A run is folded into
M only when a non-edge follows it; from then on M is only ever applied to
discs bounded away from its repelling point, which is well conditioned.
M is kept projectively with a separate log-scale so long contracting
products never overflow.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .classify import (
    Verdict,
    WordSpec,
    classify_word,
    halfplane_conjugates,
    halfplane_disc,
    halfplane_point,
    limit_disc_exact,
)
from .errors import InputError, OrbitUnstable, PointOutsideClosedDisc, TraceTooShort
from .mobius import INF, Disc, H3Point, chordal_metric, hyp_dist_from_j, make_mobius
from .tangency import GeneratorSet, build_tangency_graph

SNAP_TOL = 1e-9
CONVERGENCE_TOL = 1e-7
WINDOW = 10


def _mul(m, n):
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _rescale(m):
    nu = max(abs(x) for x in m)
    if not (nu > 0 and math.isfinite(nu)):
        raise OrbitUnstable(f"orbit matrix degenerated: {m}")
    return tuple(x / nu for x in m), math.log(nu)


def _phi(p):
    return (1 + 0j, p, -1 + 0j, p)


def _phi_inv(p):
    return (p, -p, 1 + 0j, 1 + 0j)


def _moeb(m, z):
    a, b, c, d = m
    if z is INF:
        return INF if c == 0 else a / c
    den = c * z + d
    if den == 0:
        return INF
    w = (a * z + b) / den
    return w if math.isfinite(abs(w)) else INF


class Composition:
    """Running composition F_n = f_1 ... f_n in run-factored form."""

    def __init__(self, F: GeneratorSet):
        self.F = F
        self.graph = build_tangency_graph(F, F.tol)
        self.conj = halfplane_conjugates(F)
        self.M = (1 + 0j, 0j, 0j, 1 + 0j)
        self.log_scale = 0.0
        self.run = None  # [z_start, A, B, log A]
        self.last = None
        self.n = 0

    @property
    def z_current(self):
        """alpha of the last letter while a tangent run is open."""
        return self.F.data[self.last].alpha if self.run is not None else None

    def _run_matrix(self):
        zs, A, B, logA = self.run
        raw = _mul(_phi_inv(zs), _mul((A + 0j, B, 0j, 1 + 0j), _phi(self.z_current)))
        # |det raw| = 4A
        return raw, -(math.log(4.0) + logA) / 2.0

    def _fold(self):
        if self.run is None:
            return
        raw, shift = self._run_matrix()
        self.M, lg = _rescale(_mul(self.M, raw))
        self.log_scale += lg + shift
        self.run = None

    def push(self, k: int) -> None:
        data = self.F.data[k]
        if self.run is not None and self.graph.has_edge(self.last, k):
            h = self.conj[k]
            zs, A, B, logA = self.run
            self.run = [zs, A * h.a, B + A * h.b, logA + math.log(h.a)]
        else:
            self._fold()
            if data.tangent:
                h = self.conj[k]
                self.run = [data.beta, h.a, h.b, math.log(h.a)]
            else:
                f = self.F.maps[k]
                self.M, lg = _rescale(_mul(self.M, (f.a, f.b, f.c, f.d)))
                self.log_scale += lg
        self.last = k
        self.n += 1

    def full_matrix(self):
        """(M, log_scale) with F_n = exp(log_scale) * M projectively."""
        if self.run is None:
            return self.M, self.log_scale
        raw, shift = self._run_matrix()
        m, lg = _rescale(_mul(self.M, raw))
        return m, self.log_scale + lg + shift

    def disc(self) -> Disc:
        """F_n(D)."""
        if self.run is None:
            D = Disc(0j, 1.0)
        else:
            D = halfplane_disc(self.run[0], self.run[2].real)
        a, b, c, d = self.M
        w = c * D.center + d
        den = abs(w) ** 2 - abs(c) ** 2 * D.radius**2
        if not den > 0:
            raise OrbitUnstable(f"pole of the prefix map reached the disc at n={self.n}")
        center = ((a * D.center + b) * w.conjugate() - a * c.conjugate() * D.radius**2) / den
        radius = D.radius * math.exp(-2.0 * self.log_scale) / den
        return Disc(center, radius)

    def apply(self, x):
        """F_n(x) for x in the closed unit disc."""
        if self.run is not None:
            zs, A, B, _ = self.run
            zc = self.z_current
            if x is INF or chordal_metric(x, zc) <= SNAP_TOL:
                y = zs
            else:
                u = (x + zc) / (zc - x)
                y = halfplane_point(zs, A * u + B)
            return _moeb(self.M, y)
        return _moeb(self.M, x)

    def escape(self):
        """(rho(j, F_n(j)), log h(F_n(j)), shadow of F_n(j))."""
        m, ell = self.full_matrix()
        a, b, c, d = m
        norm2 = abs(a) ** 2 + abs(b) ** 2 + abs(c) ** 2 + abs(d) ** 2
        low2 = abs(c) ** 2 + abs(d) ** 2
        log_n = 2.0 * ell + math.log(norm2)
        if log_n < 8.0:
            s = math.exp(ell)
            rho = hyp_dist_from_j(make_mobius(*(s * x for x in m)))
        elif log_n < 40.0:
            rho = math.acosh(math.exp(log_n) / 2.0)
        else:
            rho = log_n + math.log1p(math.sqrt(1.0 - 4.0 * math.exp(-2.0 * log_n))) - math.log(2.0)
        log_h = -2.0 * ell - math.log(low2)
        shadow = (b * d.conjugate() + a * c.conjugate()) / low2
        return rho, log_h, shadow


@dataclass
class OrbitTrace:
    """Per-step data of F_n for n = 1..N (index n-1 in every array)."""

    discs: list
    dist_j: np.ndarray
    log_heights: np.ndarray
    escape_partial_sums: np.ndarray
    ideal_points: np.ndarray  # complex shadows of F_n(j); heights are separate
    letters: list = field(default_factory=list)

    def __len__(self):
        return len(self.discs)

    @property
    def heights(self) -> np.ndarray:
        return np.exp(self.log_heights)

    @property
    def radii(self) -> np.ndarray:
        return np.array([D.radius for D in self.discs])

    @property
    def centers(self) -> np.ndarray:
        return np.array([D.center for D in self.discs])

    def ideal_point(self, n: int) -> H3Point:
        z = self.ideal_points[n - 1]
        return H3Point(z.real, z.imag, float(self.heights[n - 1]))

    def rows(self):
        for n, (D, rho, h, s) in enumerate(
            zip(self.discs, self.dist_j, self.heights, self.escape_partial_sums), start=1
        ):
            yield n, D.radius, D.center.real, D.center.imag, rho, h, s

    def to_csv(self) -> str:
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["n", "radius", "center_re", "center_im", "dist_j", "height", "partial_sum"])
        for row in self.rows():
            wr.writerow([row[0]] + [repr(float(v)) for v in row[1:]])
        return buf.getvalue()


def iterate_orbit(F: GeneratorSet, w: WordSpec, N: int) -> OrbitTrace:
    if N < 1:
        raise InputError("N must be at least 1")
    w.validate(F.b, need_period=False)
    if w.length() < N:
        raise InputError(f"finite word has only {len(w.prefix)} letters, {N} requested")
    comp = Composition(F)
    discs, rhos, log_hs, shadows = [], [], [], []
    letters = w.letters(N)
    for k in letters:
        comp.push(k)
        discs.append(comp.disc())
        rho, log_h, shadow = comp.escape()
        rhos.append(rho)
        log_hs.append(log_h)
        shadows.append(shadow)
    rhos = np.array(rhos)
    if not np.isfinite(rhos).all():
        raise OrbitUnstable("non-finite hyperbolic distances")
    sums = np.cumsum(np.exp(-rhos))
    return OrbitTrace(discs, rhos, np.array(log_hs), sums, np.array(shadows), letters)


@dataclass(frozen=True)
class EscapeReport:
    is_cauchy_at_tail: bool
    tail_sum_estimate: float
    tail_increment: float
    height_inequality: bool


def rapid_escape_report(trace: OrbitTrace, tol: float = 1e-8) -> EscapeReport:
    """Checks that sum exp(-rho(j, F_n(j))) has settled and that exp(-rho) <= h."""
    N = len(trace)
    if N < 20:
        raise TraceTooShort(f"need at least 20 steps, got {N}")
    q = N // 4
    S = trace.escape_partial_sums
    increment = float(S[-1] - S[-q - 1])
    log_terms = -trace.dist_j[-q:]
    ratio = math.exp(float(np.mean(np.diff(log_terms))))
    last = math.exp(float(log_terms[-1]))
    tail = last * ratio / (1.0 - ratio) if ratio < 1.0 else math.inf
    heights_ok = bool(np.all(np.exp(-trace.dist_j) <= trace.heights + 1e-12))
    return EscapeReport(increment < tol, tail, increment, heights_ok)


@dataclass(frozen=True)
class IdealLimit:
    q: complex
    resid: float
    converged: bool


def _diameter(points) -> float:
    pts = list(points)
    return max((chordal_metric(p, r) for i, p in enumerate(pts) for r in pts[i + 1 :]), default=0.0)


def ideal_limit(trace: OrbitTrace, tol: float = CONVERGENCE_TOL) -> IdealLimit:
    """Boundary shadow of F_N(j) and the chordal spread of the last shadows."""
    if len(trace) < 20:
        raise TraceTooShort(f"need at least 20 steps, got {len(trace)}")
    last = trace.ideal_points[-WINDOW:]
    resid = _diameter(complex(z) for z in last)
    q = complex(last[-1])
    return IdealLimit(q, resid, bool(resid <= tol and trace.heights[-1] < tol))


@dataclass(frozen=True)
class PointReport:
    point: object
    converged: bool
    limit: object
    diameter: float
    distance_to_q: float
    in_exceptional_set: bool
    witness: list = field(default_factory=list)


@dataclass(frozen=True)
class ConvergenceReport:
    q: complex
    q_resid: float
    verdict: Verdict
    per_point: list
    exceptional_set: list
    z0: Optional[complex] = None


def exceptional_set(F: GeneratorSet, w: WordSpec) -> list:
    """alpha_f for every tangent letter occurring infinitely often (the period letters)."""
    out = []
    for k in sorted(set(w.period)):
        d = F.data[k]
        if d.tangent and all(chordal_metric(d.alpha, x) > F.tol for x in out):
            out.append(d.alpha)
    return out


def pointwise_convergence(
    F: GeneratorSet, w: WordSpec, N: int, sample_points: Sequence, tol: float = CONVERGENCE_TOL
) -> ConvergenceReport:
    """Follow F_n(x) for each sample point and compare the limits with q.

    For x in the exceptional set of a limit-disc word the report lists the
    steps n at which F_n(x) sits on the common boundary point z0.
    """
    if N < 50:
        raise InputError("pointwise convergence needs N >= 50")
    points = []
    for x in sample_points:
        if x is not INF:
            x = complex(x)
        if x is INF or abs(x) > 1.0 + 1e-9:
            raise PointOutsideClosedDisc(f"{x!r} is outside the closed unit disc")
        points.append(x)
    cls = classify_word(F, w)
    X = exceptional_set(F, w)
    z0 = limit_disc_exact(F, w).full_z0 if cls.verdict is Verdict.LIMIT_DISC else None

    comp = Composition(F)
    values = [[] for _ in points]
    shadows = []
    for k in w.letters(N):
        comp.push(k)
        for vals, x in zip(values, points):
            vals.append(comp.apply(x))
        shadows.append(comp.escape()[2])
    q = shadows[-1]
    q_resid = _diameter(shadows[-WINDOW:])

    reports = []
    for x, vals in zip(points, values):
        diam = _diameter(vals[-WINDOW:])
        in_x = any(chordal_metric(x, a) <= F.tol for a in X)
        witness = []
        if in_x and z0 is not None:
            witness = [n for n, v in enumerate(vals, start=1) if chordal_metric(v, z0) <= SNAP_TOL]
        reports.append(PointReport(x, diam < tol, vals[-1], diam, chordal_metric(vals[-1], q), in_x, witness))
    return ConvergenceReport(q, q_resid, cls.verdict, reports, X, z0)


def tangency_chain_check(discs: Sequence[Disc], tol: float = 1e-9):
    """Whether D_n is internally tangent to D_{n+2} from some index on.

    Tangency is |c_n - c_{n+2}| + r_{n+2} = r_n up to tol * r_n.  Returns
    ``(eventually_tangent, witness_index)`` with the first index after which
    every pair passes, or -1.  On finite data this can only be a heuristic,
    and it cannot resolve discs smaller than the rounding of their centres.
    """
    last_fail = -1
    npairs = max(len(discs) - 2, 0)
    for n in range(npairs):
        D, E = discs[n], discs[n + 2]
        slack = D.radius - abs(D.center - E.center) - E.radius
        if not abs(slack) <= tol * D.radius:
            last_fail = n
    witness = last_fail + 1
    if witness >= npairs:
        return False, -1
    return True, witness
