"""Reference computations that share no code with the package.

Each oracle solves the same problem by a different route: exact rational
arithmetic, elementary geometry, symbolic algebra or brute-force search.
"""

from fractions import Fraction

import numpy as np
import sympy

# integer matrices of z -> 1/(3 + 2z), 1/(-3 + 2z), -1/(-3 + 2z)
GHK_INT = {
    "g": ((0, 1), (2, 3)),
    "h": ((0, 1), (2, -3)),
    "k": ((0, -1), (2, -3)),
}


def _matmul(m, n):
    return (
        (m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]),
        (m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]),
    )


def _real_mobius(m, x):
    return Fraction(m[0][0] * x + m[0][1], m[1][0] * x + m[1][1])


def exact_orbit_discs(letters, alphabet=GHK_INT):
    """F_n(D) for real integer maps as exact (center, radius) Fractions.

    A real map preserves the real axis, so the image of the unit disc is the
    disc whose diameter joins the images of -1 and 1 (pole outside D assumed).
    """
    m = ((1, 0), (0, 1))
    out = []
    for name in letters:
        m = _matmul(m, alphabet[name])
        lo, hi = _real_mobius(m, -1), _real_mobius(m, 1)
        out.append(((lo + hi) / 2, abs(hi - lo) / 2))
    return out


def exact_escape(letters, alphabet=GHK_INT):
    """(cosh rho(j, F_n j), height, shadow) of F_n(j) as exact Fractions, n = 1, 2, ...

    For an unnormalised real matrix m with determinant D, F_n(j) has height
    |D|/(c^2 + d^2), shadow (bd + ac)/(c^2 + d^2), and
    cosh rho = (a^2 + b^2 + c^2 + d^2)/(2|D|).
    """
    m = ((1, 0), (0, 1))
    out = []
    for name in letters:
        m = _matmul(m, alphabet[name])
        (a, b), (c, d) = m
        det = abs(a * d - b * c)
        low = c * c + d * d
        out.append((Fraction(a * a + b * b + low, 2 * det), Fraction(det, low), Fraction(b * d + a * c, low)))
    return out


def circumcircle(p1, p2, p3):
    """Center and radius of the circle through three complex points."""
    ax, ay, bx, by, cx, cy = p1.real, p1.imag, p2.real, p2.imag, p3.real, p3.imag
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    ux = ((ax**2 + ay**2) * (by - cy) + (bx**2 + by**2) * (cy - ay) + (cx**2 + cy**2) * (ay - by)) / d
    uy = ((ax**2 + ay**2) * (cx - bx) + (bx**2 + by**2) * (ax - cx) + (cx**2 + cy**2) * (bx - ax)) / d
    center = complex(ux, uy)
    return center, abs(p1 - center)


def mobius_value(a, b, c, d, z):
    return (a * z + b) / (c * z + d)


def image_circle_by_points(a, b, c, d, center, radius):
    pts = [mobius_value(a, b, c, d, center + radius * np.exp(2j * np.pi * k / 3)) for k in range(3)]
    return circumcircle(*pts)


def charpoly_spectral_radius(adjacency):
    """Largest real root of det(xI - A) by exact rational root isolation.

    For a nonnegative matrix the spectral radius is itself an eigenvalue,
    so it is the largest real root of the characteristic polynomial.
    """
    x = sympy.Symbol("x")
    poly = sympy.Poly(sympy.Matrix(adjacency).charpoly(x).as_expr(), x)
    intervals = poly.intervals(eps=sympy.Rational(1, 10**30))
    return float(max((lo + hi) / 2 for (lo, hi), _ in intervals))


def grid_minimum(gammas, lo=0.0, hi=20.0, n=200001):
    """min over a fine s-grid of log sum gamma^-s, refined once around the best node."""
    lg = np.log(np.asarray(gammas, dtype=float))

    def g(s):
        x = -np.outer(s, lg)
        m = x.max(axis=1, keepdims=True)
        return (m + np.log(np.exp(x - m).sum(axis=1, keepdims=True))).ravel()

    s = np.linspace(lo, hi, n)
    i = int(np.argmin(g(s)))
    step = s[1] - s[0]
    s2 = np.linspace(max(lo, s[i] - step), min(hi, s[i] + step), n)
    j = int(np.argmin(g(s2)))
    return float(s2[j]), float(g(s2[j:j + 1])[0])


def two_gamma_dimension(p, q):
    """Closed form for gammas {2^p, 2^-q} (p, q > 0) over a two-letter alphabet.

    g(s) = log(2^(-ps) + 2^(qs)); g'(s) = 0 gives 2^((p+q)s) = p/q, so
    s* = log2(p/q)/(p+q) when p > q, and the dimension is g(s*)/log 2.
    """
    import math

    s = max(math.log2(p / q) / (p + q), 0.0)
    return s, math.log2(2 ** (-p * s) + 2 ** (q * s))
