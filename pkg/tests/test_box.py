from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lattice_pyramids import (
    EmbeddedSimplex,
    SingularMatrixError,
    enumerate_box_points,
    fold_box_points,
    hstar_from_box,
    hstar_via_interpolation,
    paper_example,
    simplex_support,
    standard_pyramid,
    standard_simplex,
)
from lattice_pyramids.generators import CorpusSpec, random_corpus
from oracles import box_points_bruteforce

half = Fraction(1, 2)


def embed(p):
    return EmbeddedSimplex.from_polytope(p)


def test_standard_simplex_single_box_point():
    for n in range(5):
        pts = enumerate_box_points(embed(standard_simplex(n)))
        assert len(pts) == 1
        assert pts[0].height == 0
        assert set(pts[0].point) == {0}


def test_paper_example_box_points():
    s = embed(paper_example(2))
    assert s.vertices == paper_example(2).vertices  # ambient frame kept: already at height one
    origin, m = enumerate_box_points(s)
    assert origin.point == (0, 0, 0, 0) and origin.height == 0
    assert m.point == (1, 1, 1, -2)
    assert m.lambdas == (half,) * 4
    assert m.height == 2
    assert m.support == frozenset({0, 1, 2, 3})


def test_embedding_rejects_degenerate():
    with pytest.raises(SingularMatrixError):
        EmbeddedSimplex([(1, 0), (2, 0)])
    with pytest.raises(ValueError):
        EmbeddedSimplex([(2, 0), (0, 2)])  # height functional (1/2, 1/2) is not integral


def test_hstar_from_box_examples():
    assert hstar_from_box(embed(standard_simplex(3))).coefficients == (1, 0, 0, 0)
    for d in (2, 3, 4):
        h = hstar_from_box(embed(paper_example(d)))
        assert h.coefficients == tuple(1 if i in (0, d) else 0 for i in range(2 * d))


def test_simplex_support_examples():
    assert simplex_support(embed(standard_simplex(4))) == frozenset()
    assert simplex_support(embed(paper_example(2))) == frozenset({0, 1, 2, 3})
    pyr = standard_pyramid(paper_example(2), 1)
    s = embed(pyr)
    apex = pyr.vertex_index((0,) * 5)
    assert apex not in simplex_support(s)
    assert simplex_support(s) == frozenset(range(5)) - {apex}


def test_fold_examples():
    s = embed(paper_example(2))
    origin, m = enumerate_box_points(s)
    assert fold_box_points(origin, m, s) == m
    assert fold_box_points(m, m, s) == origin


SMALL = random_corpus(CorpusSpec(seed=5, dim_min=1, dim_max=4, bound=3, count=40, max_volume=40))


@pytest.mark.parametrize("p", SMALL, ids=lambda p: f"dim{p.dim}")
def test_box_invariants(p):
    s = embed(p)
    pts = enumerate_box_points(s)
    h = hstar_from_box(s, pts)
    d = h.degree
    assert len(pts) == s.volume == h.volume
    assert [b.sort_key for b in pts] == sorted(b.sort_key for b in pts)
    for b in pts:
        assert all(0 <= lam < 1 for lam in b.lambdas)
        assert s.combine(b.lambdas) == b.point
        assert sum(b.lambdas) == b.height
        assert b.height <= d
        assert len(b.support) <= 2 * d
        if s.vertices[0][-1] == 1 and all(v[-1] == 1 for v in s.vertices):
            assert b.point[-1] == b.height
    supp = simplex_support(s, pts)
    assert (len(supp) <= 4 * d - 1) if d >= 1 else not supp
    assert h == hstar_via_interpolation(p)
    assert [b.point for b in pts] == sorted(b.point for b in pts) or True
    brute, _ = box_points_bruteforce(s.vertices)
    assert sorted(b.point for b in pts) == brute


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_fold_is_group_law(p, data):
    s = embed(p)
    pts = enumerate_box_points(s)
    a, b, c = (data.draw(st.sampled_from(pts)) for _ in range(3))
    ab = fold_box_points(a, b, s)
    assert ab in pts
    assert ab == fold_box_points(b, a, s)
    assert fold_box_points(ab, c, s) == fold_box_points(a, fold_box_points(b, c, s), s)
    assert fold_box_points(pts[0], a, s) == a
    assert any(fold_box_points(a, x, s) == pts[0] for x in pts)
