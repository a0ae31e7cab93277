import random
from pathlib import Path

import pytest
import sympy

from graphs import Graph, complete_graph, cycle_graph, path_graph, star_graph

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


@pytest.fixture
def samples():
    return SAMPLES


@pytest.fixture
def k2():
    return complete_graph(2)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def k13():
    return star_graph(3)


@pytest.fixture
def c4_pendants():
    """4-cycle with two pendant vertices hanging off vertex 1; largest matching has 2 edges."""
    return Graph(6, ((1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (1, 6)))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return Graph(n, tuple(edges))


def to_sympy(p):
    """Polynomial -> sympy expression over symbols named like the table."""
    symbols = [sympy.Symbol(name) for name in p.table.names]
    expr = sympy.Integer(0)
    for mono, coeff in p.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for var, exp in mono:
            term *= symbols[var] ** exp
        expr += term
    return expr
