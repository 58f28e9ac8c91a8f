"""Point-evaluation oracle: exact values of forms at rational points.

This module is deliberately independent of the symbolic quotient machinery
in :mod:`feecsphere.spaces`.  A form restricts to zero on a manifold iff it
vanishes on every tangent vector at every point, so evaluating at a handful
of generic rational points gives an independent (probabilistic in the choice
of points, exact in the arithmetic) zero test.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Sequence

from .forms import Form

DEFAULT_POINTS = 16


def _det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    a = [list(r) for r in rows]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return det


def evaluate(alpha: Form, point: Sequence, vectors: Sequence[Sequence]) -> Fraction:
    """``alpha_point(vectors[0], ..., vectors[k-1])`` exactly."""
    if len(vectors) != alpha.degree:
        raise ValueError(f"a {alpha.degree}-form needs {alpha.degree} vectors")
    total = Fraction(0)
    for I, p in alpha.items():
        c = p.eval(point)
        if not c:
            continue
        if I:
            c *= _det([[Fraction(v[i]) for i in I] for v in vectors])
        total += c
    return total


def vanishes_at(alpha: Form, point: Sequence, tangents: Sequence[Sequence]) -> bool:
    """True when ``alpha`` is zero on every k-subset of ``tangents`` at ``point``."""
    for combo in itertools.combinations(tangents, alpha.degree):
        if evaluate(alpha, point, combo):
            return False
    return True


def _rng(seed: int) -> random.Random:
    return random.Random(seed)


def _small_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 7))


def sphere_points(n: int, count: int = DEFAULT_POINTS, seed: int = 0) -> list[tuple]:
    """Rational points on S^n by inverse stereographic projection, with random sign flips."""
    rng = _rng(seed)
    pts = []
    while len(pts) < count:
        t = [_small_rational(rng) for _ in range(n)]
        q = sum(v * v for v in t)
        u = [2 * v / (q + 1) for v in t] + [(q - 1) / (q + 1)]
        u = [(-v if rng.random() < 0.5 else v) for v in u]
        pts.append(tuple(u))
    return pts


def sphere_tangents(u: Sequence[Fraction]) -> list[list[Fraction]]:
    """Projections e_j - u_j u of the standard basis; they span T_u S^n."""
    dim = len(u)
    return [[(1 if i == j else 0) - u[j] * u[i] for i in range(dim)] for j in range(dim)]


def sphere_hyperplane_points(n: int, i: int, count: int = 8, seed: int = 1) -> list[tuple]:
    """Rational points of S^n with u_i = 0."""
    if n == 1:
        base = [(Fraction(1),), (Fraction(-1),)]
    else:
        base = sphere_points(n - 1, count, seed)
    out = []
    for p in base:
        q = list(p)
        q.insert(i, Fraction(0))
        out.append(tuple(q))
    return out


def simplex_points(dim: int, active: Sequence[int] | None = None, count: int = DEFAULT_POINTS, seed: int = 0) -> list[tuple]:
    """Rational points with positive barycentric coordinates on the (face of the) simplex."""
    rng = _rng(seed)
    active = list(range(dim)) if active is None else list(active)
    pts = []
    while len(pts) < count:
        w = {i: Fraction(rng.randint(1, 12)) for i in active}
        s = sum(w.values())
        pts.append(tuple(w[i] / s if i in w else Fraction(0) for i in range(dim)))
    return pts


def simplex_tangents(dim: int, active: Sequence[int] | None = None) -> list[list[int]]:
    active = list(range(dim)) if active is None else list(active)
    last = active[-1]
    return [[(1 if j == i else 0) - (1 if j == last else 0) for j in range(dim)] for i in active[:-1]]


def ambient_points(dim: int, count: int = DEFAULT_POINTS, seed: int = 0) -> list[tuple]:
    rng = _rng(seed)
    return [tuple(_small_rational(rng) for _ in range(dim)) for _ in range(count)]


def is_zero_pointwise(alpha: Form, kind: str, active: Sequence[int] | None = None, count: int = DEFAULT_POINTS) -> bool:
    """Oracle zero test; ``kind`` is "ambient", "sphere" or "simplex"."""
    dim = alpha.dim
    if alpha.is_zero():
        return True
    if kind == "ambient":
        basis = [[1 if i == j else 0 for i in range(dim)] for j in range(dim)]
        return all(vanishes_at(alpha, p, basis) for p in ambient_points(dim, count))
    if kind == "sphere":
        if alpha.degree > dim - 1:
            return True
        return all(vanishes_at(alpha, p, sphere_tangents(p)) for p in sphere_points(dim - 1, count))
    if kind == "simplex":
        act = list(range(dim)) if active is None else list(active)
        if alpha.degree > len(act) - 1:
            return True
        tangents = simplex_tangents(dim, act)
        return all(vanishes_at(alpha, p, tangents) for p in simplex_points(dim, act, count))
    raise ValueError(f"unknown context kind {kind!r}")


def vanishes_on_hyperplanes_pointwise(alpha: Form, count: int = 8) -> bool:
    """Full-tensor vanishing at rational points of S^n with some u_i = 0 (tangent directions only).

    For a sphere form only tangent vectors matter, so the tangent space of S^n
    at those points is used.
    """
    n = alpha.dim - 1
    for i in range(alpha.dim):
        for p in sphere_hyperplane_points(n, i, count):
            if not vanishes_at(alpha, p, sphere_tangents(p)):
                return False
    return True


def orthonormal_frame(u: Sequence[Fraction]) -> list[list[Fraction]]:
    """Rational orthonormal basis of T_u S^n, oriented so that (u, frame) is positive.

    Uses the Householder reflection swapping u and the last basis vector.
    """
    dim = len(u)
    w = [Fraction(v) for v in u]
    w[-1] -= 1
    ww = sum(v * v for v in w)
    if ww == 0:
        raise ValueError("frame construction needs u different from the last basis vector")
    H = [[(1 if i == j else 0) - 2 * w[i] * w[j] / ww for j in range(dim)] for i in range(dim)]
    frame = [[H[i][j] for i in range(dim)] for j in range(dim - 1)]
    if _det([list(u)] + frame) < 0:
        frame[0] = [-v for v in frame[0]]
    return frame
