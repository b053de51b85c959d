import random

import pytest
from hypothesis import strategies as st

from mpx.digraph import make_digraph
from mpx.simplicial import SimplicialComplex

ACCEPTANCE_LINES: list[str] = []


@st.composite
def digraphs(draw, max_vertices=6, max_edges=12):
    n = draw(st.integers(1, max_vertices))
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges)) if pairs else []
    return make_digraph(n, chosen)


@st.composite
def acyclic_digraphs(draw, max_vertices=6, max_edges=8):
    n = draw(st.integers(1, max_vertices))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges)) if pairs else []
    perm = draw(st.permutations(range(n)))
    return make_digraph(n, [(perm[a], perm[b]) for a, b in chosen])


@st.composite
def complexes(draw, max_vertices=7, max_facets=6):
    n = draw(st.integers(1, max_vertices))
    facets = draw(st.lists(
        st.lists(st.integers(0, n - 1), min_size=1, max_size=4, unique=True),
        min_size=1, max_size=max_facets))
    return SimplicialComplex.from_facets(facets)


def random_digraph(rng: random.Random, max_vertices=6, max_edges=12, acyclic=False):
    n = rng.randint(1, max_vertices)
    if acyclic:
        order = list(range(n))
        rng.shuffle(order)
        pairs = [(order[a], order[b]) for a in range(n) for b in range(a + 1, n)]
    else:
        pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    k = rng.randint(0, min(max_edges, len(pairs)))
    return make_digraph(n, rng.sample(pairs, k))


def random_complex(rng: random.Random, max_vertices=7, max_facets=6, max_size=4):
    n = rng.randint(1, max_vertices)
    facets = [rng.sample(range(n), rng.randint(1, min(max_size, n)))
              for _ in range(rng.randint(1, max_facets))]
    return SimplicialComplex.from_facets(facets)


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
