"""Acceptance criteria 1-9.

Each test prints one ``PASS``/``FAIL`` line; the lines are also collected
into a summary section at the end of the pytest run.
"""

import json
import subprocess
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

from conftest import ACCEPTANCE_LINES
from lattice_pyramids import (
    CorpusSpec,
    EmbeddedSimplex,
    check_circuit_bound,
    codegree,
    codegree_by_interior,
    decompose,
    enumerate_box_points,
    enumerate_circuits,
    greedy_trace,
    hstar,
    hstar_from_box,
    hstar_via_interpolation,
    is_apex_general,
    is_apex_simplex,
    lattice_points,
    make_polytope,
    normalized_volume,
    paper_example,
    random_corpus,
    simplex_support,
    standard_pyramid,
    standard_simplex,
    unit_cube,
    verify_greedy_claim,
)
from lattice_pyramids.bounds import (
    check_basic_identities,
    check_batyrev_theorem,
    check_main_theorem,
    check_stanley_inequality,
    check_vol_proposition,
    independent_volume,
    triangulation_volume,
)
from lattice_pyramids.greedy import LARGEST_FIRST, SMALLEST_FIRST
from lattice_pyramids.pyramids import apexes
from oracles import box_points_bruteforce

ROOT = Path(__file__).resolve().parent.parent


@contextmanager
def criterion(number, title):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        line = f"FAIL criterion {number}: {title} ({type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    line = f"PASS criterion {number}: {title} [{time.perf_counter() - start:.1f}s]"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture(scope="module")
def embedded(simplex_corpus):
    out = []
    for p in simplex_corpus:
        s = EmbeddedSimplex.from_polytope(p)
        out.append((p, s, enumerate_box_points(s)))
    return out


def test_criterion_1_paper_examples():
    with criterion(1, "paper example family d=2..5, both paths, under 10s"):
        start = time.perf_counter()
        for d in (2, 3, 4, 5):
            p = paper_example(d)
            target = [1] + [0] * (d - 1) + [1]
            assert p.dim == 2 * d - 1
            hb = hstar_from_box(EmbeddedSimplex.from_polytope(p))
            hi = hstar_via_interpolation(p)
            assert hb.trimmed() == hi.trimmed() == target
            assert normalized_volume(p) == independent_volume(p) == 2
            assert codegree(p, hi) == codegree_by_interior(p) == d
            assert apexes(p) == []
            assert decompose(p).fold_count == 0
        elapsed = time.perf_counter() - start
        assert elapsed < 10, f"took {elapsed:.1f}s"


def test_criterion_2_oracle_equivalence(simplex_corpus, embedded):
    with criterion(2, "200 simplices: box h* = interpolation h*, SNF box = brute force, under 2 min"):
        start = time.perf_counter()
        assert len(simplex_corpus) == 200
        for p, s, pts in embedded:
            assert p.dim <= 6 and all(-3 <= x <= 3 for v in p.vertices for x in v)
            assert s.volume <= 60
            assert hstar_from_box(s, pts) == hstar_via_interpolation(p), p
            brute, _ = box_points_bruteforce(s.vertices)
            assert sorted(b.point for b in pts) == brute, p
        elapsed = time.perf_counter() - start
        assert elapsed < 120, f"took {elapsed:.1f}s"


def test_criterion_3_lemma_suite(embedded, general_corpus):
    with criterion(3, "support bounds, circuit bound, three-way apex agreement"):
        for p, s, pts in embedded:
            d = hstar_from_box(s, pts).degree
            for b in pts:
                assert len(b.support) <= 2 * d
            supp = simplex_support(s, pts)
            if d >= 1:
                assert len(supp) <= 4 * d - 1
            vol = s.volume
            for i in range(p.n_vertices):
                face = p.subpolytope(j for j in range(p.n_vertices) if j != i)
                drop_free = independent_volume(face) == vol
                assert is_apex_simplex(s, i, supp) == is_apex_general(p, i) == drop_free, (p, i)
        # simplices have no circuits; the bound is exercised on the general corpus
        for p in general_corpus:
            circuits = enumerate_circuits(p)
            assert check_circuit_bound(p, hstar(p).degree, circuits).passed, p


def test_criterion_4_greedy_claim(embedded):
    with criterion(4, "greedy claim and both counting inequalities, both tie-breaks"):
        steps = 0
        for p, s, pts in embedded:
            d = hstar_from_box(s, pts).degree
            for tie in (SMALLEST_FIRST, LARGEST_FIRST):
                t = greedy_trace(s, tie, pts)
                assert t.covered == simplex_support(s, pts)
                v = verify_greedy_claim(t, d)
                assert v.passed, (p, tie, v.failures)
                steps += len(t.steps)
        assert steps > 0


def test_criterion_5_pyramid_invariance():
    with criterion(5, "h* invariant under 1-3 fold pyramids over 50 bases; decompose recovers folds"):
        bases = random_corpus(CorpusSpec(seed=505, dim_min=1, dim_max=3, bound=2, count=50, shape="general"))
        assert len(bases) == 50
        for b in bases:
            hb = hstar(b)
            for folds in (1, 2, 3):
                q = standard_pyramid(b, folds)
                hq = hstar(q)
                assert hq.coefficients == hb.padded(q.dim + 1), (b, folds)
                dec = decompose(q)
                assert dec.fold_count >= folds
                assert hstar(dec.base).equivalent(hb)


def test_criterion_6_identities(general_corpus):
    with criterion(6, "identities, volume cross-check, codegree, Stanley on 300 polytopes"):
        assert len(general_corpus) == 300
        for p in general_corpus:
            assert p.dim <= 5
            h = hstar_via_interpolation(p)
            assert h[0] == 1
            assert h[1] == len(lattice_points(p, 1)) - p.dim - 1
            assert h.volume == triangulation_volume(p), p
            assert check_basic_identities(p, h).conclusion_holds
            assert codegree(p, h) == codegree_by_interior(p), p
            r = check_stanley_inequality(p, h)
            assert r.conclusion_holds is not False, p
            assert (h.degree == 0) == (h.volume == 1)
            if p.n_vertices >= 2:
                q = p.subpolytope(range(1, p.n_vertices))
                assert hstar_via_interpolation(q).dominated_by(h), (p, q)


def _pyramid_instances():
    segment = make_polytope([(0,), (2,)])
    yield from (standard_pyramid(paper_example(2), k) for k in range(2, 7))
    yield from (standard_pyramid(segment, k) for k in (2, 5, 8, 11))
    yield from (standard_pyramid(unit_cube(2), k) for k in (1, 4, 8))
    yield from (standard_simplex(n) for n in range(1, 7))


def test_criterion_7_theorem_conditionals(simplex_corpus, general_corpus):
    with criterion(7, "no satisfied hypothesis with a false conclusion; at least 20 non-vacuous"):
        satisfied = 0
        checks = (check_main_theorem, check_vol_proposition, check_batyrev_theorem)
        for p in [*simplex_corpus, *general_corpus, *_pyramid_instances()]:
            h = hstar(p)
            for check in checks:
                r = check(p, h)
                assert not r.violated, r
                satisfied += r.hypothesis_satisfied
        assert satisfied >= 20, f"only {satisfied} satisfied hypotheses"
        batyrev = check_batyrev_theorem(standard_pyramid(make_polytope([(0,), (2,)]), 11))
        assert batyrev.hypothesis["threshold"] == 12 and batyrev.hypothesis_satisfied


def test_criterion_8_documented_substitution():
    with criterion(8, "headline theorems substituted by property checks, documented"):
        readme = (ROOT / "README.md").read_text()
        assert "desk scale" in readme.lower()
        for n in ("3", "4", "7"):
            assert f"criterion {n}" in readme.lower()


def _cli(*args):
    proc = subprocess.run([sys.executable, "-m", "lattice_pyramids", *args], capture_output=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_criterion_9_cli_golden(tmp_path):
    with criterion(9, "CLI byte-identical JSON across runs and exit-code contract"):
        inputs = {
            "paper.json": {"vertices": [list(v) for v in paper_example(2).vertices]},
            "square.json": {"vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]},
        }
        for name, obj in inputs.items():
            path = tmp_path / name
            path.write_text(json.dumps(obj))
            for cmd in (["analyze", "--trace"], ["hstar"], ["pyramid"], ["circuits"], ["check-bounds"]):
                a, b = _cli(*cmd, str(path)), _cli(*cmd, str(path))
                assert a[0] == 0 and a == b, (name, cmd)
        code, out, _ = _cli("hstar", str(tmp_path / "square.json"))
        assert out == b'{"codegree":2,"degree":1,"hstar":[1,1],"volume":2}\n'
        code, out, _ = _cli("analyze", str(tmp_path / "paper.json"))
        report = json.loads(out)
        assert report["hstar"] == [1, 0, 1] and report["pyramid"]["fold_count"] == 0
        bad = {
            "malformed.json": "{\"vertices\": [[0, 1]",
            "float.json": json.dumps({"vertices": [[0.5, 1], [1, 0]]}),
            "empty.json": json.dumps({"vertices": []}),
        }
        for name, text in bad.items():
            path = tmp_path / name
            path.write_text(text)
            code, out, err = _cli("analyze", str(path))
            assert code == 1 and out == b"" and len(err.strip().splitlines()) == 1, name
