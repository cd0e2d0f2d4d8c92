import random

import pytest

from cvckit import Graph, approx_cvc, brute_force, is_connected_subset, is_vertex_cover
from cvckit.oracle import enumerate_connected_graphs

from conftest import path, random_graph, star


def test_k2_returns_root():
    assert approx_cvc(Graph(2, [(0, 1)])) == {0}


def test_p3_from_endpoint_has_ratio_two():
    got = approx_cvc(path(3))
    assert got == {0, 1}
    assert brute_force(path(3))[0] == 1


def test_star_rooted_at_leaf():
    g = star(3, center=1)  # vertex 0 is a leaf, DFS roots there
    assert approx_cvc(g) == {0, 1}
    assert brute_force(g)[0] == 1


def test_star_rooted_at_center():
    assert approx_cvc(star(3, center=0)) == {0}


def test_single_vertex_is_empty_cover():
    assert approx_cvc(Graph(1)) == set()


def test_disconnected_rejected():
    with pytest.raises(ValueError):
        approx_cvc(Graph(4, [(0, 1), (2, 3)]))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_guarantee_exhaustive(n):
    for g in enumerate_connected_graphs(n):
        got = approx_cvc(g)
        assert is_vertex_cover(g, got)
        assert is_connected_subset(g, got)
        assert len(got) <= 2 * brute_force(g)[0]


def test_guarantee_random():
    rng = random.Random(21)
    checked = 0
    while checked < 60:
        g = random_graph(rng, rng.randint(2, 10), 0.4)
        from cvckit import connected_components

        if g.m == 0 or len(connected_components(g)) != 1:
            continue
        got = approx_cvc(g)
        assert is_vertex_cover(g, got) and is_connected_subset(g, got)
        assert len(got) <= 2 * brute_force(g)[0]
        checked += 1
