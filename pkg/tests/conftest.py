import sys
from pathlib import Path

import pytest

from lattice_pyramids import CorpusSpec, LatticePolytope, random_corpus

sys.path.insert(0, str(Path(__file__).parent))

# Criterion corpora: 200 simplices (dim <= 6, coordinates in [-3, 3], |det| <= 60)
# and 300 general polytopes (dim <= 5).
SIMPLEX_SPEC = CorpusSpec(seed=2026, dim_min=1, dim_max=6, bound=3, count=200, max_volume=60)
GENERAL_SPEC = CorpusSpec(seed=11, dim_min=1, dim_max=5, bound=2, count=300, shape="general")


@pytest.fixture(scope="session")
def simplex_corpus():
    return random_corpus(SIMPLEX_SPEC)


@pytest.fixture(scope="session")
def general_corpus():
    return random_corpus(GENERAL_SPEC)


@pytest.fixture
def unit_square():
    return LatticePolytope([(0, 0), (1, 0), (0, 1), (1, 1)])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
