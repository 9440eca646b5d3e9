"""h*-polynomials, degree, codegree and normalized volume."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import InvariantError
from .polytope import LatticePolytope, scanner


@dataclass(frozen=True)
class HStarPolynomial:
    """Coefficients ``h*_0 .. h*_n`` where ``n`` is the dimension of the polytope."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if not self.coefficients:
            raise ValueError("h*-polynomial needs at least h*_0")

    @property
    def dim(self) -> int:
        return len(self.coefficients) - 1

    @property
    def degree(self) -> int:
        return max(i for i, c in enumerate(self.coefficients) if c != 0)

    @property
    def codegree(self) -> int:
        return self.dim + 1 - self.degree

    @property
    def volume(self) -> int:
        return sum(self.coefficients)

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def trimmed(self) -> list[int]:
        """Coefficients up to the degree (trailing zeros dropped)."""
        return list(self.coefficients[: self.degree + 1])

    def padded(self, length: int) -> tuple[int, ...]:
        return self.coefficients + (0,) * (length - len(self.coefficients))

    def equivalent(self, other: "HStarPolynomial") -> bool:
        """Equal after zero-padding to a common length."""
        n = max(len(self.coefficients), len(other.coefficients))
        return self.padded(n) == other.padded(n)

    def dominated_by(self, other: "HStarPolynomial") -> bool:
        n = max(len(self.coefficients), len(other.coefficients))
        return all(a <= b for a, b in zip(self.padded(n), other.padded(n)))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coefficients):
            if c:
                mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                terms.append(f"{c}{mono}" if c != 1 or i == 0 else mono)
        return " + ".join(terms)


def ehrhart_counts(p: LatticePolytope, upto: int) -> list[int]:
    """``|kP ∩ M|`` for ``k = 0 .. upto``."""
    sc = scanner(p)
    return [sc.count(k) for k in range(upto + 1)]


def hstar_from_counts(counts: Sequence[int], n: int) -> HStarPolynomial:
    """Invert ``Σ L(k) t^k = h*(t) / (1-t)^(n+1)`` using ``L(0..n)``."""
    coeffs = []
    for j in range(n + 1):
        h = sum((-1) ** (j - i) * comb(n + 1, j - i) * counts[i] for i in range(j + 1))
        if h < 0:
            raise InvariantError(f"negative h*_{j} = {h}: lattice point counts are inconsistent")
        coeffs.append(h)
    return HStarPolynomial(tuple(coeffs))


def hstar_via_interpolation(p: LatticePolytope) -> HStarPolynomial:
    return hstar_from_counts(ehrhart_counts(p, p.dim), p.dim)


def hstar(p: LatticePolytope) -> HStarPolynomial:
    """h* by the cheapest exact route: box points for simplices, interpolation otherwise."""
    if p.is_simplex:
        from .box import EmbeddedSimplex, hstar_from_box

        return hstar_from_box(EmbeddedSimplex.from_polytope(p))
    return hstar_via_interpolation(p)


def degree(h: HStarPolynomial) -> int:
    return h.degree


def codegree(p: LatticePolytope, h: HStarPolynomial | None = None) -> int:
    h = hstar(p) if h is None else h
    return p.dim + 1 - h.degree


def codegree_by_interior(p: LatticePolytope) -> int:
    """Smallest ``k >= 1`` such that ``kP`` has a relative-interior lattice point."""
    sc = scanner(p)
    for k in range(1, p.dim + 2):
        if next(sc.points(k, strict=True), None) is not None:
            return k
    raise InvariantError(f"{p.dim + 1}·P has no interior lattice point")


def normalized_volume(p: LatticePolytope) -> int:
    return hstar(p).volume
