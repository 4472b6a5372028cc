"""Möbius transformations acting on the extended plane, on discs and on
upper half-space.

Maps are stored as 2x2 complex matrices normalised to determinant one.
Points of the extended plane are plain ``complex`` numbers together with the
singleton :data:`INF` for the point at infinity.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DegenerateMap, PoleDerivative, PoleInsideDisc

DET_TOL = 1e-14
POINT_TOL = 1e-9


class _Infinity:
    """The point at infinity of the extended complex plane."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

ExtComplex = Union[complex, _Infinity]


def is_inf(z) -> bool:
    return z is INF


def as_point(z) -> ExtComplex:
    """Coerce numbers (and infinite floats) to an extended-plane point."""
    if z is INF:
        return INF
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        return INF
    return z


def chordal_metric(z, w) -> float:
    """Chordal distance through the unit sphere; values lie in [0, 2]."""
    if z is INF and w is INF:
        return 0.0
    if z is INF:
        return 2.0 / math.sqrt(1.0 + abs(w) ** 2)
    if w is INF:
        return 2.0 / math.sqrt(1.0 + abs(z) ** 2)
    return 2.0 * abs(z - w) / math.sqrt((1.0 + abs(z) ** 2) * (1.0 + abs(w) ** 2))


def points_close(z, w, tol: float = POINT_TOL) -> bool:
    return chordal_metric(z, w) <= tol


@dataclass(frozen=True)
class MobiusMap:
    """z -> (az + b)/(cz + d) with ad - bc = 1.

    Build instances with :func:`make_mobius`; the raw constructor does not
    normalise.
    """

    a: complex
    b: complex
    c: complex
    d: complex

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def pole(self) -> ExtComplex:
        if self.c == 0:
            return INF
        return -self.d / self.c

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def __call__(self, z):
        return apply(self, z)

    def __matmul__(self, other: "MobiusMap") -> "MobiusMap":
        return compose(self, other)

    def __repr__(self):
        return f"MobiusMap(a={self.a:.6g}, b={self.b:.6g}, c={self.c:.6g}, d={self.d:.6g})"


IDENTITY = MobiusMap(1 + 0j, 0j, 0j, 1 + 0j)


def make_mobius(a, b, c, d) -> MobiusMap:
    """Normalise (a, b, c, d) so the determinant is one.

    The square root of the determinant is the principal branch, so the
    scaling is deterministic and re-normalising is a no-op up to sign.
    """
    a, b, c, d = complex(a), complex(b), complex(c), complex(d)
    det = a * d - b * c
    if not abs(det) > DET_TOL:
        raise DegenerateMap(f"determinant {det!r} is (numerically) zero")
    if abs(det - 1.0) <= 1e-15:
        # already normalised; skipping the division keeps this idempotent
        return MobiusMap(a, b, c, d)
    s = cmath.sqrt(det)
    return MobiusMap(a / s, b / s, c / s, d / s)


def from_matrix(m) -> MobiusMap:
    m = np.asarray(m, dtype=complex)
    return make_mobius(m[0, 0], m[0, 1], m[1, 0], m[1, 1])


def compose(f: MobiusMap, g: MobiusMap) -> MobiusMap:
    """The map z -> f(g(z)).

    The product of two det-one matrices already has det one.  It is not
    renormalised: for large entries ad - bc cancels catastrophically, and
    dividing by its square root would inject that error into every entry.
    """
    return MobiusMap(
        f.a * g.a + f.b * g.c,
        f.a * g.b + f.b * g.d,
        f.c * g.a + f.d * g.c,
        f.c * g.b + f.d * g.d,
    )


def apply(f: MobiusMap, z) -> ExtComplex:
    if z is INF:
        if f.c == 0:
            return INF
        return f.a / f.c
    z = complex(z)
    den = f.c * z + f.d
    if den == 0:
        return INF
    return as_point((f.a * z + f.b) / den)


def derivative_modulus(f: MobiusMap, z) -> float:
    """|f'(z)| = |ad - bc| / |cz + d|^2."""
    den = abs(f.c * complex(z) + f.d)
    if den < DET_TOL:
        raise PoleDerivative(f"{z!r} is (numerically) the pole of the map")
    return abs(f.det) / den**2


def chordal_derivative(f: MobiusMap, z) -> float:
    """Derivative of f measured in the chordal metric.

    Uses (1+|z|^2)/(|az+b|^2 + |cz+d|^2), which is finite at the pole and
    whose limit at infinity is 1/(|a|^2 + |c|^2).
    """
    scale = abs(f.det)
    if z is INF:
        return scale / (abs(f.a) ** 2 + abs(f.c) ** 2)
    z = complex(z)
    return scale * (1.0 + abs(z) ** 2) / (abs(f.a * z + f.b) ** 2 + abs(f.c * z + f.d) ** 2)


@dataclass(frozen=True)
class Disc:
    """Open Euclidean disc; radius 0 only appears through underflow."""

    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if not (self.radius >= 0.0 and math.isfinite(self.radius)):
            raise ValueError(f"invalid disc radius {self.radius!r}")

    def contains_disc(self, other: "Disc", slack: float = 1e-12) -> bool:
        return abs(other.center - self.center) + other.radius <= self.radius + slack

    def in_unit_disc(self, slack: float = 1e-12) -> bool:
        return abs(self.center) + self.radius <= 1.0 + slack

    def boundary_distance(self, z: complex) -> float:
        """Euclidean distance from z to the boundary circle."""
        return abs(abs(complex(z) - self.center) - self.radius)

    def boundary_point(self, theta: float) -> complex:
        return self.center + self.radius * cmath.exp(1j * theta)


UNIT_DISC = Disc(0j, 1.0)


def image_disc(f: MobiusMap, D: Disc, margin: float = 1e-12) -> Disc:
    """Euclidean disc f(D), assuming the pole of f lies outside closure(D).

    The centre is f applied to the reflection of the pole in the boundary
    circle; the closed form below is that construction expanded, and the
    radius formula avoids differencing two nearby image points.
    """
    z0, r = D.center, D.radius
    w = f.c * z0 + f.d
    if f.c != 0 and abs(w) <= abs(f.c) * (r + margin):
        raise PoleInsideDisc(f"pole {f.pole!r} is not outside {D!r}")
    den = abs(w) ** 2 - abs(f.c) ** 2 * r * r
    center = ((f.a * z0 + f.b) * w.conjugate() - f.a * f.c.conjugate() * r * r) / den
    radius = r * abs(f.det) / den
    return Disc(center, radius)


def in_class_MD(f: MobiusMap, tol: float = 1e-12):
    """Whether f maps the unit disc strictly inside itself.

    Returns ``(flag, image)``; ``image`` is ``None`` when the pole lies in the
    closed unit disc, since the image is then not a bounded disc.
    """
    try:
        E = image_disc(f, UNIT_DISC)
    except PoleInsideDisc:
        return False, None
    inside = abs(E.center) + E.radius <= 1.0 + tol
    proper = E.radius < 1.0 - tol or abs(E.center) > tol
    return bool(inside and proper), E


@dataclass(frozen=True)
class H3Point:
    """Point (x, y, t) of upper half-space, t > 0."""

    x: float
    y: float
    t: float

    def __post_init__(self):
        if not self.t > 0:
            raise ValueError(f"height must be positive, got {self.t!r}")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)


J = H3Point(0.0, 0.0, 1.0)


def apply_h3(f: MobiusMap, P: H3Point) -> H3Point:
    """Poincaré extension of f to upper half-space (closed form, det = 1)."""
    z, t = P.z, P.t
    w = f.c * z + f.d
    den = abs(w) ** 2 + abs(f.c) ** 2 * t * t
    zz = ((f.a * z + f.b) * w.conjugate() + f.a * f.c.conjugate() * t * t) / den
    return H3Point(zz.real, zz.imag, t / den)


def h3_distance(P: H3Point, Q: H3Point) -> float:
    """Hyperbolic distance in upper half-space."""
    chord = math.sqrt(abs(P.z - Q.z) ** 2 + (P.t - Q.t) ** 2)
    return 2.0 * math.asinh(chord / (2.0 * math.sqrt(P.t * Q.t)))


def hyp_dist_from_j(f: MobiusMap) -> float:
    """rho(j, f(j)).

    For det one, cosh rho = (|a|^2+|b|^2+|c|^2+|d|^2)/2, equivalently
    4 sinh^2(rho/2) = |a - conj d|^2 + |b + conj c|^2; the second form keeps
    full precision near the identity.
    """
    s = abs(f.a - f.d.conjugate()) ** 2 + abs(f.b + f.c.conjugate()) ** 2
    return 2.0 * math.asinh(0.5 * math.sqrt(s))


def unit_halfplane_map(p: complex) -> MobiusMap:
    """phi_p(z) = (z + p)/(-z + p): unit disc -> right half-plane, p -> inf, j fixed."""
    return make_mobius(1, p, -1, p)
