"""Lattice polytopes given by their vertices.

All geometry is done in intrinsic coordinates: a lattice basis of
``aff(P) ∩ M`` (translated to the first vertex) turns every polytope into
a full-dimensional one in ``Z^dim``.  Lower-dimensional polytopes therefore
need no special handling anywhere downstream.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from operator import mul
from typing import Iterable, Iterator, Sequence

from . import linalg

Point = tuple[int, ...]


class PolytopeInputError(ValueError):
    """Invalid vertex data (empty, ragged, non-integral, or redundant)."""


@dataclass(frozen=True)
class HRepresentation:
    """``a·x <= b`` for each facet inequality, ``e·x == f`` for each equation."""

    inequalities: tuple[tuple[Point, int], ...]
    equations: tuple[tuple[Point, int], ...]

    def contains(self, x: Sequence[int], dilation: int = 1) -> bool:
        return all(linalg.dot(e, x) == dilation * f for e, f in self.equations) and all(
            linalg.dot(a, x) <= dilation * b for a, b in self.inequalities
        )


def _hyperplane_normal(pts: Sequence[Point]) -> Point | None:
    """Primitive normal of the hyperplane through ``dim`` points in ``Z^dim``."""
    base = pts[0]
    diffs = [tuple(p - q for p, q in zip(pt, base)) for pt in pts[1:]]
    dim = len(base)
    if dim == 1:
        return (1,)
    ker = linalg.nullspace(diffs, dim)
    if len(ker) != 1:
        return None
    return ker[0]


def full_dim_facets(points: Sequence[Point]) -> list[tuple[Point, int]]:
    """Facet inequalities of a full-dimensional point configuration in ``Z^dim``.

    Exhaustive: every ``dim``-subset of points spanning a hyperplane with all
    points weakly on one side contributes that hyperplane.
    """
    if not points:
        return []
    dim = len(points[0])
    if dim == 0:
        return []
    facets = set()
    for subset in itertools.combinations(points, dim):
        a = _hyperplane_normal(subset)
        if a is None:
            continue
        b = linalg.dot(a, subset[0])
        vals = [linalg.dot(a, p) for p in points]
        if all(v <= b for v in vals):
            facets.add((a, b))
        elif all(v >= b for v in vals):
            facets.add((tuple(-x for x in a), -b))
    return sorted(facets)


def _vertex_mask(points: Sequence[Point], facets) -> list[bool]:
    dim = len(points[0])
    out = []
    for p in points:
        tight = [a for a, b in facets if linalg.dot(a, p) == b]
        out.append(linalg.rank(tight) == dim if tight else dim == 0)
    return out


class LatticePolytope:
    """Convex hull of lattice points, stored by its vertex list.

    Parameters
    ----------
    points : iterable of integer sequences
        Candidate vertices.  With ``strict=True`` (the default) every point
        must be a vertex; with ``strict=False`` duplicates and non-extreme
        points are silently dropped.

    Vertices are sorted lexicographically.  Everything else (dimension,
    intrinsic lattice, facets) is computed here and never mutated.
    """

    def __init__(self, points: Iterable[Sequence[int]], strict: bool = True):
        pts = [_as_point(p) for p in points]
        if not pts:
            raise PolytopeInputError("a polytope needs at least one point")
        ambient = len(pts[0])
        if any(len(p) != ambient for p in pts):
            raise PolytopeInputError("points have mixed ambient dimensions")
        uniq = sorted(set(pts))
        if strict and len(uniq) != len(pts):
            raise PolytopeInputError("duplicate vertices")

        origin = uniq[0]
        diffs = [tuple(x - o for x, o in zip(p, origin)) for p in uniq[1:]]
        dim = linalg.rank(diffs)
        basis = linalg.saturation(diffs, ambient) if dim < ambient else linalg.identity(ambient)
        coords = [_intrinsic(p, origin, basis) for p in uniq]
        facets = full_dim_facets(coords)
        mask = _vertex_mask(coords, facets)
        if strict and not all(mask):
            bad = [p for p, m in zip(uniq, mask) if not m]
            raise PolytopeInputError(f"not a vertex: {list(bad[0])}")

        self.ambient_dim = ambient
        self.dim = dim
        self.vertices: tuple[Point, ...] = tuple(p for p, m in zip(uniq, mask) if m)
        self._origin = origin
        self._basis = basis
        self._coords = tuple(c for c, m in zip(coords, mask) if m)
        self._facets = tuple(facets)
        self.hrep = self._ambient_hrep()

    def _ambient_hrep(self) -> HRepresentation:
        n, origin = self.ambient_dim, self._origin
        if self.dim == n:
            ineqs = tuple((a, b + linalg.dot(a, origin)) for a, b in self._facets)
            return HRepresentation(ineqs, ())
        eqs = tuple(
            (e, linalg.dot(e, origin)) for e in linalg.integer_kernel(self._basis, n)
        )
        if self.dim == 0:
            return HRepresentation((), eqs)
        c = linalg.right_inverse(self._basis)
        ineqs = []
        for a, b in self._facets:
            lifted = linalg.matvec(c, a)
            ineqs.append((lifted, b + linalg.dot(lifted, origin)))
        return HRepresentation(tuple(ineqs), eqs)

    # ------------------------------------------------------------------
    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def is_simplex(self) -> bool:
        return self.n_vertices == self.dim + 1

    def intrinsic_coordinates(self, x: Sequence[int], dilation: int = 1) -> Point:
        """Coordinates of a lattice point of ``aff(kP)`` in the intrinsic lattice basis."""
        shifted = tuple(a - dilation * o for a, o in zip(x, self._origin))
        return _intrinsic(shifted, (0,) * self.ambient_dim, self._basis)

    def from_intrinsic(self, y: Sequence[int], dilation: int = 1) -> Point:
        x = [dilation * o for o in self._origin]
        for coef, row in zip(y, self._basis):
            if coef:
                for j, b in enumerate(row):
                    x[j] += coef * b
        return tuple(x)

    @property
    def intrinsic_vertices(self) -> tuple[Point, ...]:
        return self._coords

    @property
    def intrinsic_facets(self) -> tuple[tuple[Point, int], ...]:
        return self._facets

    def vertex_index(self, v: Sequence[int]) -> int:
        try:
            return self.vertices.index(tuple(v))
        except ValueError:
            raise PolytopeInputError(f"{list(v)} is not a vertex") from None

    def contains(self, x: Sequence[int], dilation: int = 1) -> bool:
        return self.hrep.contains(x, dilation)

    def face_vertices(self) -> list[frozenset[int]]:
        """Vertex-index sets of the facets, in intrinsic facet order."""
        return [
            frozenset(i for i, y in enumerate(self._coords) if linalg.dot(a, y) == b)
            for a, b in self._facets
        ]

    def subpolytope(self, indices: Iterable[int]) -> "LatticePolytope":
        return LatticePolytope([self.vertices[i] for i in sorted(indices)])

    def __eq__(self, other):
        return isinstance(other, LatticePolytope) and (
            self.ambient_dim,
            self.vertices,
        ) == (other.ambient_dim, other.vertices)

    def __hash__(self):
        return hash((self.ambient_dim, self.vertices))

    def __repr__(self):
        return (
            f"LatticePolytope(dim={self.dim}, ambient_dim={self.ambient_dim}, "
            f"vertices={[list(v) for v in self.vertices]})"
        )


def _as_point(p) -> Point:
    out = []
    for x in p:
        if isinstance(x, bool) or not isinstance(x, int):
            if isinstance(x, Fraction) and x.denominator == 1:
                x = int(x)
            else:
                raise PolytopeInputError(f"non-integer coordinate {x!r}")
        out.append(int(x))
    return tuple(out)


def _intrinsic(p: Point, origin: Point, basis) -> Point:
    shifted = tuple(x - o for x, o in zip(p, origin))
    if not basis:
        return ()
    if len(basis) == len(shifted) and all(
        basis[i][j] == (i == j) for i in range(len(basis)) for j in range(len(basis))
    ):
        return shifted
    sol = linalg.solve_rational(linalg.transpose(basis), shifted)
    if sol is None or any(s.denominator != 1 for s in sol):
        raise PolytopeInputError("point is not in the affine lattice of the polytope")
    return tuple(int(s) for s in sol)


def make_polytope(points: Iterable[Sequence[int]]) -> LatticePolytope:
    """Hull of a point set: duplicates and non-extreme points are dropped."""
    return LatticePolytope(points, strict=False)


def dimension(p: LatticePolytope) -> int:
    return p.dim


def hrep(p: LatticePolytope) -> HRepresentation:
    return p.hrep


def reduced_frame(coords: Sequence[Point]) -> tuple[linalg.Matrix, linalg.Matrix]:
    """Unimodular ``U`` (and its inverse) making the columns of ``coords @ U`` short.

    Greedy pairwise size reduction: subtract the nearest-integer multiple of
    one column from another while that shortens it, then sort columns by
    length.  Not a full lattice reduction, but it makes thin polytopes thin
    along the first coordinates, which is what the fiber scan needs.
    """
    dim = len(coords[0]) if coords else 0
    base = coords[0] if coords else ()
    cols = [[c[j] - base[j] for c in coords] for j in range(dim)]
    u = [[int(i == j) for j in range(dim)] for i in range(dim)]  # u[j] is column j of U
    norms = [sum(x * x for x in c) for c in cols]
    changed = True
    while changed:
        changed = False
        for i in range(dim):
            for j in range(dim):
                if i == j or norms[j] == 0:
                    continue
                ip = sum(x * y for x, y in zip(cols[i], cols[j]))
                q = (2 * ip + norms[j]) // (2 * norms[j])
                if q == 0:
                    continue
                cand = [x - q * y for x, y in zip(cols[i], cols[j])]
                n2 = sum(x * x for x in cand)
                if n2 < norms[i]:
                    cols[i], norms[i] = cand, n2
                    u[i] = [x - q * y for x, y in zip(u[i], u[j])]
                    changed = True
    order = sorted(range(dim), key=lambda j: (norms[j], j))
    umat = linalg.transpose([u[j] for j in order], dim)
    uinv = tuple(tuple(int(x) for x in row) for row in linalg.inverse_rational(umat)) if dim else ()
    return umat, uinv


class _FiberScanner:
    """Enumerates lattice points of dilates of a full-dimensional polytope.

    Coordinates are fixed one at a time; the admissible range for the next
    coordinate comes from the facets of the projection onto the coordinates
    fixed so far.  Only prefixes of genuine points of the projections are
    visited, so the cost tracks the point count rather than a bounding box.
    The scan runs in a size-reduced unimodular frame.
    """

    def __init__(self, coords: Sequence[Point]):
        self.dim = len(coords[0]) if coords else 0
        self.frame, self.frame_inv = reduced_frame(coords)
        coords = [linalg.matvec(linalg.transpose(self.frame, self.dim), c) for c in coords] if self.dim else coords
        self.levels = []
        for j in range(1, self.dim + 1):
            proj = sorted({c[:j] for c in coords})
            facets = full_dim_facets(proj)
            self.levels.append([(a[:-1], a[-1], b) for a, b in facets])

    def _range(self, level, prefix, k, strict):
        lo = hi = None
        shift = 1 if strict else 0
        for head, last, b in level:
            rest = k * b - shift - sum(map(mul, head, prefix))
            if last > 0:
                t = rest // last
                if hi is None or t < hi:
                    hi = t
            elif last < 0:
                t = -(rest // -last)
                if lo is None or t > lo:
                    lo = t
            elif rest < 0:
                return 1, 0
        return lo, hi

    def points(self, k: int, strict: bool = False) -> Iterator[Point]:
        if self.dim == 0:
            yield ()
            return
        last = self.dim - 1

        def rec(j, prefix):
            lo, hi = self._range(self.levels[j], prefix, k, strict and j == last)
            for t in range(lo, hi + 1):
                if j == last:
                    yield prefix + (t,)
                else:
                    yield from rec(j + 1, prefix + (t,))

        inv = self.frame_inv
        for z in rec(0, ()):
            yield tuple(sum(map(mul, z, col)) for col in zip(*inv))

    def count(self, k: int, strict: bool = False) -> int:
        if self.dim == 0:
            return 1
        last = self.dim - 1

        def rec(j, prefix):
            lo, hi = self._range(self.levels[j], prefix, k, strict and j == last)
            if j == last:
                return max(0, hi - lo + 1)
            return sum(rec(j + 1, prefix + (t,)) for t in range(lo, hi + 1))

        return rec(0, ())


def scanner(p: LatticePolytope) -> _FiberScanner:
    return _FiberScanner(p.intrinsic_vertices)


def lattice_points(p: LatticePolytope, k: int = 1) -> list[Point]:
    """All lattice points of ``k·P`` in ambient coordinates, sorted."""
    if k < 0:
        raise ValueError("dilation must be non-negative")
    return sorted(p.from_intrinsic(y, k) for y in scanner(p).points(k))


def interior_lattice_points(p: LatticePolytope, k: int = 1) -> list[Point]:
    """Lattice points in the relative interior of ``k·P``, sorted."""
    if k < 1:
        raise ValueError("dilation must be at least 1")
    return sorted(p.from_intrinsic(y, k) for y in scanner(p).points(k, strict=True))
