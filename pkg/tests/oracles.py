"""Slow, independent reference computations used only by the tests."""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
import sympy


def cofactor_det(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            total += (-1) ** j * m[0][j] * cofactor_det([list(r) for r in minor])
    return total


def _short_columns(v):
    """Unimodular U with short columns of v @ U (pairwise reduction), as numpy object arrays."""
    n = len(v)
    w = sympy.Matrix(v)
    u = sympy.eye(n)
    changed = True
    while changed:
        changed = False
        for i, j in itertools.permutations(range(n), 2):
            cj = w[:, j]
            nj = (cj.T * cj)[0]
            if nj == 0:
                continue
            q = sympy.floor(sympy.Rational((w[:, i].T * cj)[0], nj) + sympy.Rational(1, 2))
            if q == 0:
                continue
            cand = w[:, i] - q * cj
            if (cand.T * cand)[0] < (w[:, i].T * w[:, i])[0]:
                w[:, i] = cand
                u[:, i] = u[:, i] - q * u[:, j]
                changed = True
    return w, u


def box_points_bruteforce(vertices, chunk=200_000):
    """Lattice points of {Σ λ_i v_i : 0 <= λ_i < 1} by scanning a bounding box.

    The box is taken in a unimodular frame where the vertex matrix has short
    columns, which keeps the scan small for thin simplices.
    """
    w, u = _short_columns(vertices)
    det = w.det()
    adj = w.adjugate()
    if det < 0:
        adj, det = -adj, -det
    n = w.shape[0]
    lo = [sum(min(0, w[i, j]) for i in range(n)) for j in range(n)]
    hi = [sum(max(0, w[i, j]) for i in range(n)) for j in range(n)]
    adj_np = np.array(adj.tolist(), dtype=np.int64)
    u_inv = np.array(u.inv().tolist(), dtype=np.int64)
    ranges = [np.arange(a, b + 1, dtype=np.int64) for a, b in zip(lo, hi)]
    grid_size = int(np.prod([len(r) for r in ranges]))
    found = []
    # enumerate the box in chunks over the leading coordinate blocks
    mesh = np.stack(np.meshgrid(*ranges, indexing="ij"), axis=-1).reshape(-1, n) if grid_size <= 5_000_000 else None
    if mesh is None:
        raise RuntimeError(f"bounding box too large for brute force: {grid_size}")
    for start in range(0, len(mesh), chunk):
        block = mesh[start : start + chunk]
        lam = block @ adj_np
        ok = np.all((lam >= 0) & (lam < int(det)), axis=1)
        found.append(block[ok] @ u_inv)
    pts = np.concatenate(found) if found else np.zeros((0, n), dtype=np.int64)
    return sorted(tuple(int(x) for x in row) for row in pts), grid_size


def dilate_count_bruteforce(vertices, k):
    """|k·conv(vertices) ∩ Z^n| for a full-dimensional simplex, scanning its bounding box."""
    n = len(vertices[0])
    inv = sympy.Matrix([list(p) + [1] for p in vertices]).inv()
    inv = [[Fraction(int(e.p), int(e.q)) for e in inv.row(i)] for i in range(n + 1)]
    lo = [k * min(p[j] for p in vertices) for j in range(n)]
    hi = [k * max(p[j] for p in vertices) for j in range(n)]
    count = 0
    for x in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        row = list(x) + [k]
        if all(sum(row[i] * inv[i][j] for i in range(n + 1)) >= 0 for j in range(n + 1)):
            count += 1
    return count


def binomial_hstar(counts, n):
    from math import comb

    return [sum((-1) ** (j - i) * comb(n + 1, j - i) * counts[i] for i in range(j + 1)) for j in range(n + 1)]

