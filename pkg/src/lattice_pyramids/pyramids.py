"""Lattice pyramids: construction, apex detection and decomposition."""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .box import EmbeddedSimplex, simplex_support
from .polytope import LatticePolytope, Point, PolytopeInputError


@dataclass(frozen=True)
class PyramidDecomposition:
    """``P`` is the ``fold_count``-fold lattice pyramid over ``base``.

    ``apexes`` lists the stripped vertices in stripping order.
    """

    base: LatticePolytope
    apexes: tuple[Point, ...]

    @property
    def fold_count(self) -> int:
        return len(self.apexes)

    def to_json(self) -> dict:
        return {
            "fold_count": self.fold_count,
            "apexes": [list(a) for a in self.apexes],
            "base_vertices": [list(v) for v in self.base.vertices],
            "base_dim": self.base.dim,
        }


def standard_pyramid(b: LatticePolytope, folds: int = 1) -> LatticePolytope:
    """``conv(0, B × {1})`` iterated ``folds`` times."""
    if folds < 0:
        raise ValueError("folds must be non-negative")
    p = b
    for _ in range(folds):
        pts = [(0,) * (p.ambient_dim + 1)] + [v + (1,) for v in p.vertices]
        p = LatticePolytope(pts)
    return p


def is_apex_simplex(s: EmbeddedSimplex, i: int, support=None) -> bool:
    """Vertex ``i`` is an apex iff it lies outside the support of the box points."""
    if not 0 <= i <= s.dim:
        raise IndexError(f"vertex index {i} out of range for a {s.dim}-simplex")
    if support is None:
        support = simplex_support(s)
    return i not in support


def apex_distance(p: LatticePolytope, i: int) -> int | None:
    """Lattice distance of vertex ``i`` from the hull of the others.

    ``None`` when the remaining vertices still span the full dimension.
    """
    coords = p.intrinsic_vertices
    rest = [c for j, c in enumerate(coords) if j != i]
    diffs = [tuple(x - y for x, y in zip(r, rest[0])) for r in rest[1:]]
    if linalg.rank(diffs) != p.dim - 1:
        return None
    (normal,) = linalg.nullspace(diffs, p.dim)
    return abs(linalg.dot(normal, coords[i]) - linalg.dot(normal, rest[0]))


def is_apex_general(p: LatticePolytope, v) -> bool:
    """``v`` is an apex iff the other vertices span a facet at lattice distance one."""
    i = p.vertex_index(v) if not isinstance(v, int) else v
    if not 0 <= i < p.n_vertices:
        raise PolytopeInputError(f"vertex index {i} out of range")
    if p.dim < 1:
        return False
    return apex_distance(p, i) == 1


def apexes(p: LatticePolytope) -> list[int]:
    return [i for i in range(p.n_vertices) if is_apex_general(p, i)]


def decompose(p: LatticePolytope) -> PyramidDecomposition:
    """Strip apexes (first in vertex order each round) until none is left."""
    stripped = []
    current = p
    while current.dim >= 1:
        i = next((j for j in range(current.n_vertices) if is_apex_general(current, j)), None)
        if i is None:
            break
        stripped.append(current.vertices[i])
        current = current.subpolytope(j for j in range(current.n_vertices) if j != i)
    return PyramidDecomposition(current, tuple(stripped))
