"""Limit-point / limit-disc classification of eventually periodic words.

A word f_1 f_2 ... is given by a finite prefix followed by a period repeated
forever.  It is of limit-disc type exactly when, from some point on, each
consecutive pair (f_n, f_{n+1}) is an edge of the tangency graph and the
series sum_n gamma_{f_1}...gamma_{f_n} converges.  Along such a tail every
generator conjugates to an affine map w -> a w + b of the right half-plane,
which gives the limit disc in closed form.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import (
    EmptyPrefix,
    InputError,
    MissingGamma,
    NotAffine,
    NotLimitDisc,
    NotTangentPair,
    SeriesDiverges,
)
from .mobius import (
    IDENTITY,
    Disc,
    MobiusMap,
    apply,
    chordal_metric,
    compose,
    image_disc,
    unit_halfplane_map,
)
from .tangency import GeneratorSet, TangencyGraph, build_tangency_graph

BORDERLINE_TOL = 1e-12


@dataclass(frozen=True)
class WordSpec:
    """Letters f_1 f_2 ... = prefix, then period repeated (indices into F)."""

    prefix: tuple = ()
    period: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(int(i) for i in self.prefix))
        object.__setattr__(self, "period", tuple(int(i) for i in self.period))

    @classmethod
    def from_names(cls, F: GeneratorSet, prefix: Sequence[str] = (), period: Sequence[str] = ()) -> "WordSpec":
        return cls(tuple(F.index(n) for n in prefix), tuple(F.index(n) for n in period))

    def validate(self, b: int, need_period: bool = True) -> None:
        bad = [i for i in self.prefix + self.period if not 0 <= i < b]
        if bad:
            raise InputError(f"letter indices {bad} out of range for {b} generators")
        if need_period and not self.period:
            raise InputError("an infinite word needs a nonempty period")

    def letter(self, n: int) -> int:
        """The n-th letter, counting from zero."""
        if n < len(self.prefix):
            return self.prefix[n]
        if not self.period:
            raise IndexError("finite word exhausted")
        return self.period[(n - len(self.prefix)) % len(self.period)]

    def letters(self, n: int) -> list:
        return [self.letter(i) for i in range(n)]

    def length(self) -> float:
        return math.inf if self.period else len(self.prefix)

    def names(self, F: GeneratorSet) -> dict:
        return {"prefix": [F.names[i] for i in self.prefix], "period": [F.names[i] for i in self.period]}


@dataclass(frozen=True)
class AffineMap:
    """w -> a w + b with a > 0 and Re(b) >= 0: a self-map of the right half-plane."""

    a: float
    b: complex

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError(f"affine coefficient must be positive, got {self.a!r}")
        if self.b.real < -1e-9:
            raise ValueError(f"translation must have Re(b) >= 0, got {self.b!r}")

    def __call__(self, w: complex) -> complex:
        return self.a * w + self.b

    def then(self, other: "AffineMap") -> "AffineMap":
        """self o other."""
        return AffineMap(self.a * other.a, self.a * other.b + self.b)


class Verdict(str, enum.Enum):
    LIMIT_POINT = "limit-point"
    LIMIT_DISC = "limit-disc"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    limit_tangent: bool
    tail_start: int
    gamma_period_product: Optional[float]
    borderline: bool = False


@dataclass(frozen=True)
class GammaSeries:
    converges: bool
    period_product: float
    borderline: bool


def _graph(F: GeneratorSet, G: Optional[TangencyGraph]) -> TangencyGraph:
    return G if G is not None else build_tangency_graph(F, F.tol)


def is_limit_tangent(F: GeneratorSet, w: WordSpec, G: Optional[TangencyGraph] = None):
    """Tangency half of the test: consecutive letters are eventually graph edges f_n -> f_{n+1}.

    Returns ``(flag, tail_start)``.  ``tail_start`` is the number of leading
    letters to drop so the chain holds from the first remaining letter
    (-1 when the word is not of limit-tangent type).
    """
    w.validate(F.b)
    G = _graph(F, G)
    per = w.period
    for i in range(len(per)):
        if not G.has_edge(per[i], per[(i + 1) % len(per)]):
            return False, -1
    word = w.prefix + per[:1]
    tail = 0
    for i in range(len(word) - 1):
        if not G.has_edge(word[i], word[i + 1]):
            tail = i + 1
    return True, tail


def gamma_series_test(F: GeneratorSet, w: WordSpec) -> GammaSeries:
    """Series half of the test for an eventually periodic word.

    The terms grow by the period product P of the gammas every period, so
    the series converges iff P < 1; P = 1 (constant terms) diverges.
    """
    w.validate(F.b)
    missing = sorted({F.names[i] for i in w.period if not F.data[i].tangent})
    if missing:
        raise MissingGamma(f"non-tangent generators in the period have no gamma: {missing}")
    P = math.prod(F.data[i].gamma for i in w.period)
    return GammaSeries(P < 1.0 - BORDERLINE_TOL, P, abs(P - 1.0) <= BORDERLINE_TOL)


def classify_word(F: GeneratorSet, w: WordSpec, G: Optional[TangencyGraph] = None) -> Classification:
    tangent, tail = is_limit_tangent(F, w, G)
    if not tangent:
        product = None
        if all(F.data[i].tangent for i in w.period):
            product = math.prod(F.data[i].gamma for i in w.period)
        return Classification(Verdict.LIMIT_POINT, False, tail, product)
    series = gamma_series_test(F, w)
    verdict = Verdict.LIMIT_DISC if series.converges else Verdict.LIMIT_POINT
    result = Classification(verdict, True, tail, series.period_product, series.borderline)
    assert not (result.verdict is Verdict.LIMIT_DISC and not result.limit_tangent)
    return result


def conjugate_to_halfplane(f: MobiusMap, z_in: complex, z_out: complex, tol: float = 1e-9) -> AffineMap:
    """phi_out o f o phi_in^{-1} as an affine self-map of the right half-plane.

    Here phi_p(z) = (z + p)/(-z + p) sends the unit disc to the right
    half-plane and p to infinity, so the conjugate fixes infinity.  Its
    linear coefficient is 1/|f'(z_in)|.
    """
    if abs(abs(z_in) - 1.0) > tol or abs(abs(z_out) - 1.0) > tol:
        raise NotTangentPair(f"{z_in!r}, {z_out!r} must lie on the unit circle")
    if chordal_metric(apply(f, z_in), z_out) > tol:
        raise NotTangentPair(f"f({z_in!r}) = {apply(f, z_in)!r} differs from {z_out!r}")
    h = compose(unit_halfplane_map(z_out), compose(f, unit_halfplane_map(z_in).inverse()))
    size = math.sqrt(abs(h.a) ** 2 + abs(h.b) ** 2 + abs(h.c) ** 2 + abs(h.d) ** 2)
    if abs(h.c) > tol * size:
        raise NotAffine(f"conjugate has c-entry {h.c!r}; inputs are inconsistent")
    a = h.a / h.d
    if a.real <= 0 or abs(a.imag) > tol * abs(a):
        raise NotAffine(f"conjugate slope {a!r} is not a positive real")
    b = h.b / h.d
    return AffineMap(abs(a), complex(max(b.real, 0.0), b.imag))


@lru_cache(maxsize=None)
def halfplane_conjugates(F: GeneratorSet) -> tuple:
    """Per-generator affine conjugate taken at (alpha_f, beta_f); None if not tangent."""
    return tuple(
        conjugate_to_halfplane(f, d.alpha, d.beta) if d.tangent else None for f, d in zip(F.maps, F.data)
    )


def halfplane_disc(p: complex, t: float) -> Disc:
    """phi_p^{-1}(t + K): the disc internally tangent to the unit circle at p."""
    return Disc(p * (t / (1.0 + t)), 1.0 / (1.0 + t))


def halfplane_point(p: complex, u: complex) -> complex:
    """phi_p^{-1}(u) = p (u - 1)/(u + 1)."""
    return p * (u - 1.0) / (u + 1.0)


@dataclass(frozen=True)
class LimitDiscResult:
    disc: Disc
    t_inf: float
    dropped: int
    z0: complex
    full_disc: Disc
    full_z0: complex
    ideal_limit: complex


def _tail_sums(conj, rest, period):
    """Closed-form t_inf = sum a_1...a_{k-1} Re(b_k) and the complex analogue.

    ``rest`` is the finite part before periodicity; the periodic tail is a
    geometric series of blocks with ratio prod(a over the period).
    """
    A, t, q = 1.0, 0.0, 0j
    for k in rest:
        t += A * conj[k].b.real
        q += A * conj[k].b
        A *= conj[k].a
    P, T, Q = 1.0, 0.0, 0j
    for k in period:
        T += P * conj[k].b.real
        Q += P * conj[k].b
        P *= conj[k].a
    if not P < 1.0 - BORDERLINE_TOL:
        raise SeriesDiverges(f"period product of slopes is {P!r} >= 1")
    return t + A * T / (1.0 - P), q + A * Q / (1.0 - P)


def limit_disc_exact(F: GeneratorSet, w: WordSpec, G: Optional[TangencyGraph] = None) -> LimitDiscResult:
    """Exact limit disc of a word of limit-disc type.

    A non-conforming prefix of length ``dropped`` is removed first; ``disc``
    belongs to the truncated word and ``full_disc`` is its image under the
    dropped prefix, i.e. the limit disc of the whole word.
    """
    cls = classify_word(F, w, G)
    if cls.verdict is not Verdict.LIMIT_DISC:
        raise NotLimitDisc(f"word is of limit-point type ({cls})")
    conj = halfplane_conjugates(F)
    m = cls.tail_start
    rest = w.prefix[m:]
    first = rest[0] if rest else w.period[0]
    z0 = F.data[first].beta
    t_inf, q_inf = _tail_sums(conj, rest, w.period)
    if not t_inf > 0:
        raise NotLimitDisc("degenerate half-plane translation; generators must map D strictly inside")
    disc = halfplane_disc(z0, t_inf)
    ideal = halfplane_point(z0, q_inf)
    P = IDENTITY
    for k in w.prefix[:m]:
        P = compose(P, F.maps[k])
    full = image_disc(P, disc) if m else disc
    return LimitDiscResult(disc, t_inf, m, z0, full, apply(P, z0), apply(P, ideal))


def q_statistic(log_gammas: Sequence[float]) -> float:
    """Running mean of log gamma over a prefix; negative limsup implies convergence."""
    if len(log_gammas) == 0:
        raise EmptyPrefix("q_statistic needs at least one letter")
    return math.fsum(log_gammas) / len(log_gammas)
