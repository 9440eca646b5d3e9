"""Example families and seeded random corpora.

Random corpora use SplitMix64 so they can be reproduced bit-for-bit outside
Python.  The sampling protocol, given ``CorpusSpec`` fields, is:

* ``next()``: ``state += 0x9E3779B97F4A7C15``; ``z = state``;
  ``z = (z ^ z>>30) * 0xBF58476D1CE4E5B9``; ``z = (z ^ z>>27) * 0x94D049BB133111EB``;
  return ``z ^ z>>31`` (all arithmetic mod 2^64; the initial state is the seed).
* ``below(m)``: draw ``x = next()`` until ``x < 2^64 - (2^64 mod m)``; return ``x mod m``.
* ``integer(lo, hi) = lo + below(hi - lo + 1)``.
* per polytope: ``dim = integer(dim_min, dim_max)``; then

  - simplex: draw ``dim + 1`` points (coordinates ``integer(-bound, bound)``,
    point by point, coordinate by coordinate) until the points are affinely
    independent and, when ``max_volume`` is set, ``|det| <= max_volume``;
  - general: ``k = dim + 2 + below(4)`` points drawn the same way; the
    polytope is their convex hull, kept even if lower-dimensional.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import linalg
from .polytope import LatticePolytope, make_polytope

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        if m <= 0:
            raise ValueError("range must be positive")
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            x = self.next()
            if x < limit:
                return x % m

    def integer(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)


@dataclass(frozen=True)
class CorpusSpec:
    seed: int
    dim_min: int = 1
    dim_max: int = 3
    bound: int = 3
    count: int = 10
    shape: str = "simplex"
    max_volume: Optional[int] = None

    def __post_init__(self):
        if self.shape not in ("simplex", "general"):
            raise ValueError(f"unknown shape {self.shape!r}")
        if not 0 <= self.dim_min <= self.dim_max:
            raise ValueError("need 0 <= dim_min <= dim_max")
        if self.bound < 0 or self.count < 0:
            raise ValueError("bound and count must be non-negative")
        if self.shape == "simplex" and self.bound == 0 and self.dim_max > 0:
            raise ValueError("bound 0 cannot produce simplices of positive dimension")


def _point(rng: SplitMix64, dim: int, bound: int) -> tuple[int, ...]:
    return tuple(rng.integer(-bound, bound) for _ in range(dim))


def _random_simplex(rng, dim, bound, max_volume) -> LatticePolytope:
    while True:
        pts = [_point(rng, dim, bound) for _ in range(dim + 1)]
        vol = abs(linalg.determinant([p + (1,) for p in pts]))
        if vol and (max_volume is None or vol <= max_volume):
            return LatticePolytope(pts)


def random_corpus(spec: CorpusSpec) -> list[LatticePolytope]:
    rng = SplitMix64(spec.seed)
    out = []
    for _ in range(spec.count):
        dim = rng.integer(spec.dim_min, spec.dim_max)
        if spec.shape == "simplex":
            out.append(_random_simplex(rng, dim, spec.bound, spec.max_volume))
        else:
            k = dim + 2 + rng.below(4)
            out.append(make_polytope([_point(rng, dim, spec.bound) for _ in range(k)]))
    return out


def paper_example(d: int) -> LatticePolytope:
    """Non-pyramidal simplex of dimension ``2d - 1``, volume 2 and h* = 1 + t^d.

    Vertices ``e_i - e_n`` (``i < n``) and ``e_0 + ... + e_(n-1) + (3 - 2d) e_n``
    in ``Z^(n+1)``.
    """
    if d < 2:
        raise ValueError("the example family starts at degree 2")
    n = 2 * d - 1
    verts = []
    for i in range(n):
        v = [0] * (n + 1)
        v[i], v[n] = 1, -1
        verts.append(v)
    verts.append([1] * n + [3 - 2 * d])
    return LatticePolytope(verts)


def standard_simplex(n: int) -> LatticePolytope:
    """``conv(0, e_1, ..., e_n)`` in ``Z^n``."""
    if n < 0:
        raise ValueError("dimension must be non-negative")
    verts = [(0,) * n] + [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return LatticePolytope(verts)


def unit_cube(n: int) -> LatticePolytope:
    verts = [tuple((m >> j) & 1 for j in range(n)) for m in range(2**n)]
    return LatticePolytope(verts)
