"""Evaluate the dimension bounds and h* inequalities on concrete polytopes.

Each check returns a :class:`BoundReport`.  Theorem checks are one-way:
when the hypothesis holds the conclusion (an apex exists) is verified,
otherwise the report says the check does not apply.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Any

from . import linalg
from .ehrhart import HStarPolynomial, hstar
from .errors import InvariantError
from .polytope import LatticePolytope, lattice_points
from .pyramids import apexes


@dataclass(frozen=True)
class BoundReport:
    name: str
    hypothesis: dict[str, Any]
    hypothesis_satisfied: bool
    conclusion_holds: bool | None  # None: not applicable
    witness: Any = None

    @property
    def violated(self) -> bool:
        return self.hypothesis_satisfied and self.conclusion_holds is False

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "hypothesis": self.hypothesis,
            "hypothesis_satisfied": self.hypothesis_satisfied,
            "conclusion_holds": self.conclusion_holds,
            "witness": self.witness,
        }


def main_theorem_threshold(c: int, d: int) -> int:
    return c * (2 * d + 1) + 4 * d - 1


def vol_proposition_threshold(volume: int, d: int) -> int:
    return (volume - 1) * (2 * d + 1)


def batyrev_threshold(volume: int, d: int) -> int:
    return 4 * d * comb(2 * d + volume - 1, 2 * d)


def _apex_conclusion(name, p, values, threshold) -> BoundReport:
    values = dict(values, threshold=threshold)
    n = p.dim
    satisfied = n >= 1 and n >= threshold
    if not satisfied:
        return BoundReport(name, values, False, None)
    found = apexes(p)
    return BoundReport(name, values, True, bool(found), found[0] if found else None)


def check_main_theorem(p: LatticePolytope, h: HStarPolynomial | None = None) -> BoundReport:
    """Few vertices and small degree in high dimension force an apex."""
    h = hstar(p) if h is None else h
    c = p.n_vertices - p.dim - 1
    d = h.degree
    return _apex_conclusion(
        "main_theorem", p, {"n": p.dim, "c": c, "d": d}, main_theorem_threshold(c, d)
    )


def check_vol_proposition(p: LatticePolytope, h: HStarPolynomial | None = None) -> BoundReport:
    h = hstar(p) if h is None else h
    d, vol = h.degree, h.volume
    return _apex_conclusion(
        "vol_proposition", p, {"n": p.dim, "V": vol, "d": d}, vol_proposition_threshold(vol, d)
    )


def check_batyrev_theorem(p: LatticePolytope, h: HStarPolynomial | None = None) -> BoundReport:
    h = hstar(p) if h is None else h
    d, vol = h.degree, h.volume
    return _apex_conclusion(
        "batyrev_theorem", p, {"n": p.dim, "V": vol, "d": d}, batyrev_threshold(vol, d)
    )


def check_stanley_inequality(p: LatticePolytope, h: HStarPolynomial | None = None) -> BoundReport:
    """``1 + h*_1 <= h*_(d-1) + h*_d`` for degree ``d >= 1``."""
    h = hstar(p) if h is None else h
    d = h.degree
    values = {"d": d, "hstar": h.trimmed()}
    if d < 1:
        return BoundReport("stanley_inequality", values, False, None)
    lhs, rhs = 1 + h[1], h[d - 1] + h[d]
    ok = lhs <= rhs
    return BoundReport("stanley_inequality", values, True, ok, None if ok else [lhs, rhs])


def triangulation_volume(p: LatticePolytope) -> int:
    """Normalized volume as a sum over a pulling triangulation.

    Each face is coned from its first vertex over the facets of the face
    that avoid it; simplices are measured by |det| in intrinsic coordinates.
    """
    if p.dim == 0:
        return 1
    coords = p.intrinsic_vertices
    facets = p.face_vertices()

    def face_dim(idx):
        base = coords[idx[0]]
        return linalg.rank([tuple(x - y for x, y in zip(coords[i], base)) for i in idx[1:]])

    def triangulate(face: tuple[int, ...], k: int):
        if len(face) == k + 1:
            return [face]
        apex = face[0]
        subfaces = set()
        for f in facets:
            sub = tuple(sorted(set(face) & f))
            if apex not in sub and len(sub) >= k and face_dim(sub) == k - 1:
                subfaces.add(sub)
        return [(apex,) + simp for sub in sorted(subfaces) for simp in triangulate(sub, k - 1)]

    total = 0
    for simp in triangulate(tuple(range(p.n_vertices)), p.dim):
        base = coords[simp[0]]
        total += abs(linalg.determinant([tuple(x - y for x, y in zip(coords[i], base)) for i in simp[1:]]))
    return total


def independent_volume(p: LatticePolytope) -> int:
    if p.is_simplex:
        from .box import EmbeddedSimplex

        return EmbeddedSimplex.from_polytope(p).volume
    return triangulation_volume(p)


def check_basic_identities(p: LatticePolytope, h: HStarPolynomial | None = None) -> BoundReport:
    """``h*_0 = 1``, ``h*_1 = |P ∩ M| - n - 1`` and ``Σ h*_i = Vol(P)``."""
    h = hstar(p) if h is None else h
    n_points = len(lattice_points(p, 1))
    vol = independent_volume(p)
    values = {
        "hstar": h.trimmed(),
        "lattice_points": n_points,
        "n": p.dim,
        "volume": vol,
    }
    failed = []
    if h[0] != 1:
        failed.append("h*_0 != 1")
    if p.dim >= 1 and h[1] != n_points - p.dim - 1:
        failed.append("h*_1 != |P∩M| - n - 1")
    if h.volume != vol:
        failed.append("sum h* != Vol")
    return BoundReport("basic_identities", values, True, not failed, failed or None)


def check_hibi_fulldim(p: LatticePolytope, h: HStarPolynomial | None = None) -> BoundReport:
    """``h*_1 <= h*_i`` for ``1 < i < d``, checked only when ``deg(P) = dim(P)``."""
    h = hstar(p) if h is None else h
    d = h.degree
    values = {"n": p.dim, "d": d, "hstar": h.trimmed()}
    if d != p.dim or d == 0:
        return BoundReport("hibi_fulldim", values, False, None)
    bad = [i for i in range(2, d) if h[1] > h[i]]
    return BoundReport("hibi_fulldim", values, True, not bad, bad or None)


ALL_CHECKS = (
    check_basic_identities,
    check_stanley_inequality,
    check_hibi_fulldim,
    check_batyrev_theorem,
    check_vol_proposition,
    check_main_theorem,
)


def check_all(p: LatticePolytope, h: HStarPolynomial | None = None, strict: bool = False) -> list[BoundReport]:
    """Run every check; with ``strict`` a violated report raises :class:`InvariantError`."""
    h = hstar(p) if h is None else h
    reports = [check(p, h) for check in ALL_CHECKS]
    if strict:
        for r in reports:
            if r.violated:
                raise InvariantError(f"{r.name} violated: {r.hypothesis} witness={r.witness}")
    return reports
