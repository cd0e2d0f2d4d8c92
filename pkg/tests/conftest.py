import random

import pytest

from cvckit import Graph, connected_components


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if g.m >= 1 and len(connected_components(g)) == 1:
            return g


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int, center: int = 0) -> Graph:
    others = [v for v in range(leaves + 1) if v != center]
    return Graph(leaves + 1, [(center, v) for v in others])


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def p4():
    return path(4)


@pytest.fixture
def c4():
    return cycle(4)
