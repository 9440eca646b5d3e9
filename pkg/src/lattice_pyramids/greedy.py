"""Greedy covering of a simplex's support by box points.

Box points are picked one at a time so that each new pick adds as many
not-yet-covered vertex indices as possible.  The newly covered set at
step ``k`` has at most ``2d / 2^k`` elements, which caps the total support
below ``4d``.  :func:`verify_greedy_claim` checks that bound together with
the two counting inequalities behind it on a concrete trace.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .box import BoxPoint, EmbeddedSimplex, enumerate_box_points, fold_box_points

SMALLEST_FIRST = "smallest"
LARGEST_FIRST = "largest"


@dataclass(frozen=True)
class GreedyStep:
    point: BoxPoint
    new: frozenset[int]
    overlap: frozenset[int] | None  # None at step 0

    def to_json(self) -> dict:
        out = self.point.to_json()
        out["I"] = sorted(self.new)
        out["J"] = None if self.overlap is None else sorted(self.overlap)
        return out


@dataclass(frozen=True)
class GreedyTrace:
    simplex: EmbeddedSimplex
    steps: tuple[GreedyStep, ...]
    covered: frozenset[int]
    candidates: tuple[BoxPoint, ...] = field(repr=False)

    def to_json(self) -> dict:
        return {"steps": [s.to_json() for s in self.steps], "covered": sorted(self.covered)}


def greedy_trace(s: EmbeddedSimplex, tie_break: str = SMALLEST_FIRST, points=None) -> GreedyTrace:
    """Run the greedy selection until no box point adds a new index.

    Among maximizers the point with the smallest (height, point) key wins;
    ``tie_break="largest"`` takes the largest instead.
    """
    pts = tuple(enumerate_box_points(s) if points is None else points)
    if tie_break == SMALLEST_FIRST:
        order = pts
    elif tie_break == LARGEST_FIRST:
        order = tuple(reversed(pts))
    else:
        raise ValueError(f"unknown tie-break {tie_break!r}")
    covered: frozenset[int] = frozenset()
    steps = []
    prev_new = None
    while True:
        best, best_new = None, frozenset()
        for b in order:
            new = b.support - covered
            if len(new) > len(best_new):
                best, best_new = b, new
        if best is None:
            break
        overlap = None if prev_new is None else prev_new & best.support
        steps.append(GreedyStep(best, best_new, overlap))
        covered |= best.support
        prev_new = best_new
    return GreedyTrace(s, tuple(steps), covered, pts)


@dataclass
class Verdict:
    passed: bool = True
    failures: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.passed = False
        self.failures.append(msg)


def verify_greedy_claim(t: GreedyTrace, d: int) -> Verdict:
    """Check ``|I_k|·2^k <= 2d``, the two counting inequalities, and the fold step.

    For ``k >= 1`` the folded point of ``m_{k-1}`` and ``m_k`` must be a box
    point whose support, outside the indices covered before step ``k-1``,
    contains ``(I_{k-1} \\ J_k) ⊔ I_k``; greedy maximality at step ``k-1``
    is rechecked against both ``m_k`` and the folded point directly.
    """
    v = Verdict()
    before = frozenset()  # union of supports of m_0 .. m_{k-2}
    for k, step in enumerate(t.steps):
        size = len(step.new)
        if size * 2**k > 2 * d:
            v.fail(f"step {k}: |I_k|={size} exceeds 2d/2^k with d={d}")
        if k == 0:
            continue
        prev = t.steps[k - 1]
        j_size = len(step.overlap)
        outside_mk = step.point.support - before
        if not (step.overlap | step.new) <= outside_mk or step.overlap & step.new:
            v.fail(f"step {k}: J_k and I_k are not disjoint parts of supp(m_k) minus old cover")
        if j_size + size > len(prev.new):
            v.fail(f"step {k}: |J_k|+|I_k| = {j_size + size} > |I_(k-1)| = {len(prev.new)}")
        folded = fold_box_points(prev.point, step.point, t.simplex)
        if folded not in t.candidates:
            v.fail(f"step {k}: folded point {folded.point} is not a box point")
        outside_m = folded.support - before
        if not ((prev.new - step.overlap) | step.new) <= outside_m:
            v.fail(f"step {k}: folded support misses (I_(k-1) minus J_k) ∪ I_k")
        if len(outside_m) > len(prev.new):
            v.fail(f"step {k}: folded point beats the greedy choice at step {k - 1}")
        if size > j_size:
            v.fail(f"step {k}: |I_k| = {size} > |J_k| = {j_size}")
        before = before | prev.point.support
    return v
