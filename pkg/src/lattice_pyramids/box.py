"""Lattice points of the half-open parallelepiped of a simplex.

For a simplex with vertices ``v_0 .. v_n`` sitting at height one in
``Z^(n+1)`` (some primitive integral functional is 1 on every vertex), the
box ``{Σ λ_i v_i : 0 <= λ_i < 1}`` contains exactly ``|det V|`` lattice
points, one per coset of ``Z^(n+1) / <v_0, .., v_n>``.  Counting them by
height gives the h*-polynomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Sequence

from . import linalg
from .ehrhart import HStarPolynomial
from .polytope import LatticePolytope, Point


def frac(x: Fraction) -> Fraction:
    return x - floor(x)


@dataclass(frozen=True)
class BoxPoint:
    point: Point
    lambdas: tuple[Fraction, ...]
    height: int
    support: frozenset[int]

    @property
    def sort_key(self):
        return (self.height, self.point)

    def to_json(self) -> dict:
        return {
            "point": list(self.point),
            "lambda": [f"{x.numerator}/{x.denominator}" for x in self.lambdas],
            "height": self.height,
            "support": sorted(self.support),
        }


class EmbeddedSimplex:
    """A lattice simplex as a nonsingular vertex matrix at height one.

    ``vertices`` are the rows ``v_0 .. v_n`` in ``Z^(n+1)``.  The height
    functional (the unique rational ``h`` with ``h·v_i = 1``) must be
    integral; then the normalized volume of the simplex is ``|det V|``.
    """

    def __init__(self, vertices: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in v) for v in vertices)
        n1 = len(rows)
        if n1 == 0 or any(len(r) != n1 for r in rows):
            raise ValueError("embedded simplex needs n+1 vertices in Z^(n+1)")
        det = linalg.determinant(rows)
        if det == 0:
            raise linalg.SingularMatrixError("degenerate simplex: vertex matrix is singular")
        height = linalg.solve_rational(rows, (1,) * n1)
        if any(h.denominator != 1 for h in height):
            raise ValueError("vertices do not lie at lattice height one")
        self.vertices = rows
        self.height_form = tuple(int(h) for h in height)
        self.determinant = det
        self.volume = abs(det)
        self.dim = n1 - 1
        self._inverse = linalg.inverse_rational(rows)

    @classmethod
    def from_polytope(cls, p: LatticePolytope) -> "EmbeddedSimplex":
        """Embed a simplex, keeping ambient coordinates when they already sit at height one."""
        if not p.is_simplex:
            raise ValueError("polytope is not a simplex")
        if p.ambient_dim == p.dim + 1:
            try:
                return cls(p.vertices)
            except (ValueError, ArithmeticError):
                pass
        return cls([y + (1,) for y in p.intrinsic_vertices])

    def barycentric(self, x: Sequence[int]) -> tuple[Fraction, ...]:
        """``λ`` with ``Σ λ_i v_i = x``."""
        n1 = self.dim + 1
        return tuple(sum(x[i] * self._inverse[i][j] for i in range(n1)) for j in range(n1))

    def combine(self, lambdas: Sequence[Fraction]) -> Point:
        n1 = self.dim + 1
        out = [Fraction(0)] * n1
        for lam, v in zip(lambdas, self.vertices):
            if lam:
                for j in range(n1):
                    out[j] += lam * v[j]
        if any(c.denominator != 1 for c in out):
            raise ArithmeticError("combination is not a lattice point")
        return tuple(int(c) for c in out)

    def box_point(self, x: Sequence[int]) -> BoxPoint:
        """Translate a lattice point into the half-open box."""
        lambdas = tuple(frac(lam) for lam in self.barycentric(x))
        return self._from_lambdas(lambdas)

    def _from_lambdas(self, lambdas) -> BoxPoint:
        height = sum(lambdas)
        if height.denominator != 1:
            raise ArithmeticError("box point height is not integral")
        return BoxPoint(
            self.combine(lambdas),
            tuple(lambdas),
            int(height),
            frozenset(i for i, lam in enumerate(lambdas) if lam),
        )

    def __repr__(self):
        return f"EmbeddedSimplex(vertices={[list(v) for v in self.vertices]})"


def enumerate_box_points(s: EmbeddedSimplex) -> list[BoxPoint]:
    """All lattice points of the half-open box, sorted by (height, point).

    With ``U V W = diag(d)`` (Smith form) the vectors ``y W^-1`` for
    ``0 <= y_i < d_i`` run over the cosets of the vertex lattice exactly once.
    """
    snf = linalg.smith_normal_form(s.vertices)
    w_inv = tuple(tuple(int(x) for x in row) for row in linalg.inverse_rational(snf.right))
    pts = []
    for y in itertools.product(*(range(d) for d in snf.diagonal)):
        x = [0] * (s.dim + 1)
        for coef, row in zip(y, w_inv):
            if coef:
                for j, wj in enumerate(row):
                    x[j] += coef * wj
        pts.append(s.box_point(x))
    if len(pts) != s.volume:
        raise ArithmeticError("coset enumeration size differs from |det|")
    return sorted(pts, key=lambda b: b.sort_key)


def hstar_from_box(s: EmbeddedSimplex, points: Sequence[BoxPoint] | None = None) -> HStarPolynomial:
    pts = enumerate_box_points(s) if points is None else points
    coeffs = [0] * (s.dim + 1)
    for b in pts:
        coeffs[b.height] += 1
    return HStarPolynomial(tuple(coeffs))


def simplex_support(s: EmbeddedSimplex, points: Sequence[BoxPoint] | None = None) -> frozenset[int]:
    pts = enumerate_box_points(s) if points is None else points
    out: set[int] = set()
    for b in pts:
        out |= b.support
    return frozenset(out)


def fold_box_points(a: BoxPoint, b: BoxPoint, s: EmbeddedSimplex) -> BoxPoint:
    """Box point with coordinates ``{λ_i + μ_i}``: the group sum in the box."""
    return s._from_lambdas(tuple(frac(x + y) for x, y in zip(a.lambdas, b.lambdas)))
