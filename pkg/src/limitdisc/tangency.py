"""Tangency invariants of generators and the tangency graph.

A map f in M(D) either sends the unit disc to a disc internally tangent to
the unit circle at one point, or to a disc whose closure misses the circle.
In the first case ``alpha`` and ``beta`` are the circle points with
f(alpha) = beta and ``gamma`` is 1/|f'(alpha)|; otherwise alpha = 0,
beta = INF and gamma is undefined.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import InputError, NoConvergence, NotInMD, UnknownName
from .mobius import (
    INF,
    Disc,
    ExtComplex,
    MobiusMap,
    apply,
    chordal_metric,
    derivative_modulus,
    in_class_MD,
)

TANGENCY_TOL = 1e-9


@dataclass(frozen=True)
class TangencyData:
    tangent: bool
    alpha: ExtComplex
    beta: ExtComplex
    gamma: Optional[float]
    image: Disc


def tangency_data(f: MobiusMap, tol: float = TANGENCY_TOL) -> TangencyData:
    ok, E = in_class_MD(f)
    if not ok:
        raise NotInMD(f"{f!r} does not map the unit disc strictly inside itself", [f])
    gap = 1.0 - (abs(E.center) + E.radius)
    if gap > tol:
        return TangencyData(False, 0j, INF, None, E)
    # |center| > 0 here: a tangent proper sub-disc cannot be centred at 0
    beta = E.center / abs(E.center)
    alpha = apply(f.inverse(), beta)
    alpha = alpha / abs(alpha)
    gamma = 1.0 / derivative_modulus(f, alpha)
    return TangencyData(True, alpha, beta, gamma, E)


class GeneratorSet:
    """An ordered, named finite subset of M(D).

    The order fixes the alphabet indices 0..b-1 used by words and by the
    adjacency matrix.
    """

    def __init__(self, items: Sequence[tuple], tol: float = TANGENCY_TOL):
        if not items:
            raise InputError("a generator set needs at least one map")
        names = [name for name, _ in items]
        if len(set(names)) != len(names):
            raise InputError(f"generator names must be unique: {names}")
        offenders = [name for name, f in items if not in_class_MD(f)[0]]
        if offenders:
            raise NotInMD(f"not in M(D): {', '.join(offenders)}", offenders)
        self.tol = tol
        self.names = tuple(names)
        self.maps = tuple(f for _, f in items)
        self.data = tuple(tangency_data(f, tol) for f in self.maps)
        self._index = {name: i for i, name in enumerate(self.names)}

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(zip(self.names, self.maps, self.data))

    def __repr__(self):
        return f"GeneratorSet({list(self.names)})"

    @property
    def b(self) -> int:
        return len(self.names)

    @property
    def gammas(self) -> list:
        return [d.gamma for d in self.data]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownName(f"unknown generator {name!r}; known: {list(self.names)}") from None

    def reordered(self, order: Sequence[int]) -> "GeneratorSet":
        return GeneratorSet([(self.names[i], self.maps[i]) for i in order], self.tol)


@dataclass(frozen=True)
class TangencyGraph:
    names: tuple
    adjacency: np.ndarray = field(repr=False)
    tol: float = TANGENCY_TOL

    @property
    def b(self) -> int:
        return self.adjacency.shape[0]

    def edges(self) -> list:
        n = self.b
        return [(self.names[i], self.names[j]) for i in range(n) for j in range(n) if self.adjacency[i, j]]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i, j])


def graph_from_adjacency(adjacency, names=None) -> TangencyGraph:
    A = np.asarray(adjacency, dtype=np.int64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise InputError("adjacency must be a square matrix")
    if names is None:
        names = tuple(str(i) for i in range(A.shape[0]))
    return TangencyGraph(tuple(names), A)


def build_tangency_graph(F: GeneratorSet, tol: float = TANGENCY_TOL) -> TangencyGraph:
    """Edge i -> j iff alpha_i = beta_j (chordal distance at most tol).

    Non-tangent generators carry (0, INF), which is at chordal distance
    at least sqrt(2) from every circle point, so they stay isolated.
    """
    if not tol > 0:
        raise InputError("tol must be positive")
    b = len(F)
    A = np.zeros((b, b), dtype=np.int64)
    for i, di in enumerate(F.data):
        if not di.tangent:
            continue
        for j, dj in enumerate(F.data):
            if dj.tangent and chordal_metric(di.alpha, dj.beta) <= tol:
                A[i, j] = 1
    return TangencyGraph(F.names, A, tol)


def has_cycle(G: TangencyGraph) -> bool:
    """Directed cycle detection by depth-first search with three colours."""
    n = G.b
    WHITE, GREY, BLACK = 0, 1, 2
    color = [WHITE] * n
    succ = [np.flatnonzero(G.adjacency[i]).tolist() for i in range(n)]
    for root in range(n):
        if color[root] != WHITE:
            continue
        color[root] = GREY
        stack = [(root, iter(succ[root]))]
        while stack:
            v, it = stack[-1]
            for u in it:
                if color[u] == GREY:
                    return True
                if color[u] == WHITE:
                    color[u] = GREY
                    stack.append((u, iter(succ[u])))
                    break
            else:
                color[v] = BLACK
                stack.pop()
    return False


def spectral_radius(G, tol: float = 1e-14, max_iter: int = 200) -> float:
    """Perron root of a nonnegative adjacency matrix.

    Works with B = A + I, whose Perron root rho(A) + 1 strictly dominates
    every other eigenvalue in modulus.  C = B^(2^m) is formed by repeated
    squaring with renormalisation (no cancellation for nonnegative
    matrices), and the root is read off as ||B C|| / ||C||.  That ratio
    converges geometrically in general and like 2^-m on Jordan blocks.
    Nilpotent matrices (acyclic graphs) are detected exactly and give 0.
    """
    A = G.adjacency if isinstance(G, TangencyGraph) else np.asarray(G)
    A = np.asarray(A, dtype=float)
    if A.size == 0 or not A.any():
        return 0.0
    if (A < 0).any():
        raise InputError("spectral_radius expects a nonnegative matrix")
    n = A.shape[0]
    if not np.linalg.matrix_power(A, n).any():
        return 0.0
    B = A + np.eye(n)
    norm = lambda M: np.abs(M).sum(axis=1).max()  # noqa: E731
    C = B / norm(B)
    prev, stable = None, 0
    for _ in range(max_iter):
        C = C @ C
        C /= norm(C)
        est = norm(B @ C)
        if prev is not None and abs(est - prev) <= tol * est:
            stable += 1
            if stable >= 2:
                return float(max(est - 1.0, 0.0))
        else:
            stable = 0
        prev = est
    raise NoConvergence(f"spectral radius did not settle within {max_iter} squarings")


def is_complete(G: TangencyGraph, F: Optional[GeneratorSet] = None) -> bool:
    """Every ordered pair (self-pairs included) is an edge.

    With ``F`` supplied, a complete graph is cross-checked against the
    equivalent condition that all generators fix one common circle point.
    """
    if G.b < 1:
        raise InputError("tangency graph needs at least one vertex")
    complete = bool(G.adjacency.all())
    if complete and F is not None:
        p = F.data[0].alpha
        for name, f, d in F:
            if not (
                chordal_metric(d.alpha, p) <= G.tol
                and chordal_metric(d.beta, p) <= G.tol
                and chordal_metric(apply(f, p), p) <= G.tol
            ):
                warnings.warn(f"complete tangency graph but {name} does not fix the common point {p}")
    return complete
