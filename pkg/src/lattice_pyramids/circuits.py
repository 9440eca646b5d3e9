"""Circuits: minimal affinely dependent subsets of the vertex set."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import linalg
from .polytope import LatticePolytope


@dataclass(frozen=True)
class Circuit:
    """Vertex indices with the relation ``Σ_{C1} z_v v = Σ_{C2} z_w w``.

    ``coefficients[i]`` belongs to ``members[i]``; it is positive for members
    of ``positive`` and negative for members of ``negative``.  Since both
    sides are taken at height one, the positive and negative parts balance.
    """

    members: tuple[int, ...]
    coefficients: tuple[int, ...]

    @property
    def positive(self) -> tuple[int, ...]:
        return tuple(m for m, z in zip(self.members, self.coefficients) if z > 0)

    @property
    def negative(self) -> tuple[int, ...]:
        return tuple(m for m, z in zip(self.members, self.coefficients) if z < 0)

    @property
    def size(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        return {
            "members": list(self.members),
            "positive": list(self.positive),
            "negative": list(self.negative),
            "z": [abs(z) for z in self.coefficients],
        }


def _lifted(p: LatticePolytope):
    return [y + (1,) for y in p.intrinsic_vertices]


def affinely_independent(points) -> bool:
    return linalg.rank([tuple(p) + (1,) for p in points]) == len(points)


def enumerate_circuits(p: LatticePolytope) -> list[Circuit]:
    """All circuits, sorted by member tuple.

    A subset is a circuit iff its height-one lifts have a one-dimensional
    linear relation whose coefficients are all nonzero.
    """
    lifted = _lifted(p)
    out = []
    for size in range(2, min(p.n_vertices, p.dim + 2) + 1):
        for subset in itertools.combinations(range(p.n_vertices), size):
            rows = [lifted[i] for i in subset]
            # relation z with Σ z_i row_i = 0, i.e. kernel of the transpose
            cols = linalg.transpose(rows)
            if linalg.rank(cols) != size - 1:
                continue
            (z,) = linalg.nullspace(cols, size)
            if any(c == 0 for c in z):
                continue
            if z[0] < 0:
                z = tuple(-c for c in z)
            out.append(Circuit(subset, z))
    out.sort(key=lambda c: c.members)
    return out


def combinatorial_pyramid_apexes(p: LatticePolytope, circuits=None) -> frozenset[int]:
    """Vertices contained in no circuit."""
    circuits = enumerate_circuits(p) if circuits is None else circuits
    covered = set()
    for c in circuits:
        covered.update(c.members)
    return frozenset(range(p.n_vertices)) - covered


@dataclass(frozen=True)
class CircuitBoundVerdict:
    passed: bool
    degree: int
    bound: int
    max_size: int
    n_circuits: int
    witness: Circuit | None = field(default=None)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "bound": self.bound,
            "max_size": self.max_size,
            "count": self.n_circuits,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def check_circuit_bound(p: LatticePolytope, degree: int | None = None, circuits=None) -> CircuitBoundVerdict:
    """Every circuit has at most ``2·deg(P) + 2`` members."""
    if degree is None:
        from .ehrhart import hstar

        degree = hstar(p).degree
    circuits = enumerate_circuits(p) if circuits is None else circuits
    bound = 2 * degree + 2
    worst = max(circuits, key=lambda c: c.size, default=None)
    witness = next((c for c in circuits if c.size > bound), None)
    return CircuitBoundVerdict(
        passed=witness is None,
        degree=degree,
        bound=bound,
        max_size=0 if worst is None else worst.size,
        n_circuits=len(circuits),
        witness=witness,
    )
