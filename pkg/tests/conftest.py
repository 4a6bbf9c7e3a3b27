from functools import lru_cache
from itertools import product

import pytest

from nzgraph import SpaceParams, build_graph


@lru_cache(maxsize=None)
def graph(n, q):
    return build_graph(SpaceParams(n, q))


def naive_vectors(n, q):
    """Nonzero digit tuples straight from itertools, no library code."""
    return [d for d in product(range(q), repeat=n) if any(d)]


def naive_support(d):
    return frozenset(i for i, c in enumerate(d) if c)


def naive_edges(n, q):
    vs = [naive_support(d) for d in naive_vectors(n, q)]
    return sum(1 for i in range(len(vs)) for j in range(i + 1, len(vs)) if vs[i] & vs[j])


def pos(g, digits):
    return g.position_of_digits(digits)


def bits_of(g, *digit_tuples):
    out = 0
    for d in digit_tuples:
        out |= 1 << pos(g, d)
    return out


@pytest.fixture
def G():
    return graph


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
