import math
import random

import pytest

from cvckit import (
    CompressionInstance,
    Graph,
    approx_cvc,
    brute_force,
    build_steiner_subinstance,
    connected_components,
    count_solutions,
    solve_weighted,
    validate_split,
)
from cvckit.compression import (
    REASON_OK,
    REASON_V1_VERTEX_SWALLOWED,
    REASON_Z0_NOT_INDEPENDENT,
)
from cvckit.oracle import enumerate_connected_graphs

from conftest import cycle, path, random_connected_graph


def make(g, z, k, weights=None):
    return CompressionInstance(g, weights or [1.0] * g.n, k, z)


class TestInstanceValidation:
    def test_rejects_non_cover(self):
        with pytest.raises(ValueError):
            make(path(4), {0, 1}, 2)

    def test_rejects_disconnected_cover(self):
        with pytest.raises(ValueError):
            make(path(4), {0, 2, 3}, 3)

    def test_rejects_disconnected_graph(self):
        with pytest.raises(ValueError):
            make(Graph(4, [(0, 1), (2, 3)]), {0, 2}, 2)

    def test_rejects_edgeless_graph(self):
        with pytest.raises(ValueError):
            make(Graph(2), set(), 1)

    def test_rejects_negative_weight(self):
        with pytest.raises(ValueError):
            make(path(3), {1}, 2, weights=[1.0, -1.0, 1.0])


class TestValidateSplit:
    def test_p3_keep_center(self, p3):
        inst = make(p3, {0, 1}, 2)
        split = validate_split(inst, {1})
        assert split.valid and split.reason == REASON_OK
        assert split.z0 == {0} and split.v1 == set() and split.v0 == {2}

    def test_p3_keep_endpoint_swallows_leaf(self, p3):
        inst = make(p3, {0, 1}, 2)
        split = validate_split(inst, {0})
        assert not split.valid and split.reason == REASON_V1_VERTEX_SWALLOWED
        assert split.v1 == {2}

    def test_p4_empty_guess_has_edge_inside_z0(self, p4):
        inst = make(p4, {1, 2}, 2)
        split = validate_split(inst, set())
        assert not split.valid and split.reason == REASON_Z0_NOT_INDEPENDENT

    def test_rejects_z1_outside_z(self, p3):
        inst = make(p3, {0, 1}, 2)
        with pytest.raises(ValueError):
            validate_split(inst, {2})

    def test_partition_fields(self):
        rng = random.Random(3)
        for _ in range(30):
            g = random_connected_graph(rng, rng.randint(2, 8))
            z = approx_cvc(g)
            inst = make(g, z, g.n)
            bits = sorted(z)
            z1 = {v for v in bits if rng.random() < 0.5}
            split = validate_split(inst, z1)
            assert split.z1 | split.z0 == z and not split.z1 & split.z0
            outside = set(range(g.n)) - z
            assert split.v1 | split.v0 == outside and not split.v1 & split.v0
            assert split.v1 == {u for u in outside if set(g.adj[u]) & split.z0}
            if split.valid:
                from cvckit import is_vertex_cover

                assert is_vertex_cover(g, split.z1 | split.v1)
                for u in split.v1:
                    assert set(g.adj[u]) & split.z1


class TestBuildSteinerSubinstance:
    def test_p3_single_terminal(self, p3):
        inst = make(p3, {0, 1}, 2)
        sub, cmap = build_steiner_subinstance(inst, validate_split(inst, {1}))
        assert sub.num_terminals == 1
        assert cmap.preimage[0] == {1}
        assert sub.nonterminals == (2,)

    def test_p4_whole_cover(self, p4):
        inst = make(p4, {1, 2}, 2)
        split = validate_split(inst, {1, 2})
        assert split.v1 == set() and split.v0 == {0, 3}
        sub, cmap = build_steiner_subinstance(inst, split)
        assert sub.num_terminals == 1
        assert cmap.preimage[0] == {1, 2}
        assert sub.nonterminals == (0, 3)  # endpoints hang off the lone terminal

    def test_c4_two_terminals_bridged(self, c4):
        inst = make(c4, {0, 1, 2}, 3)
        split = validate_split(inst, {0, 2})
        assert split.valid and split.v1 == set() and split.v0 == {3}
        sub, cmap = build_steiner_subinstance(inst, split)
        assert sub.num_terminals == 2
        assert cmap.preimage[0] == {0} and cmap.preimage[1] == {2}
        assert sub.u_masks == (0b11,)

    def test_requires_valid_nonempty_split(self, p3):
        inst = make(p3, {0, 1}, 2)
        with pytest.raises(ValueError):
            build_steiner_subinstance(inst, validate_split(inst, {0}))


class TestSolveWeighted:
    def test_p3_uniform(self, p3):
        res = solve_weighted(make(p3, {0, 1}, 1))
        assert res.solution == {1} and res.weight == 1.0

    def test_p3_heavy_center_still_needed(self, p3):
        res = solve_weighted(make(p3, {0, 1}, 2, weights=[1.0, 5.0, 1.0]))
        assert res.solution == {1} and res.weight == 5.0

    def test_p4_budget_one_is_infeasible(self, p4):
        res = solve_weighted(make(p4, {1, 2}, 1))
        assert res.solution is None and res.weight is None

    def test_empty_guess_candidate_wins_when_cheap(self):
        g = Graph(2, [(0, 1)])
        res = solve_weighted(make(g, {0}, 1, weights=[5.0, 1.0]))
        assert res.solution == {1} and res.weight == 1.0

    def test_ledger_counts(self, p3):
        res = solve_weighted(make(p3, {0, 1}, 2))
        led = res.ledger
        assert led.z_size == 2
        assert led.enumerated == 4
        assert led.steiner_weight_sum <= led.bound == 6

    def test_deterministic_tie_break_prefers_small_lex(self):
        # two symmetric optimal covers; the lexicographically smaller set wins
        g = cycle(4)
        res = solve_weighted(make(g, {0, 1, 2}, 3))
        brute_min = brute_force(g, k=3)[0]
        assert len(res.solution) == brute_min == 3
        assert res.solution == {0, 1, 2}

    def test_matches_brute_force_exhaustively(self):
        for n in range(2, 6):
            for g in enumerate_connected_graphs(n):
                z = approx_cvc(g)
                for k in range(0, n + 1):
                    res = solve_weighted(make(g, z, k))
                    min_size, _, count = brute_force(g, k=k)
                    if count == 0:
                        assert res.solution is None
                    else:
                        assert res.solution is not None
                        assert len(res.solution) == min_size
                    assert res.ledger.within_bound()
                    assert res.ledger.enumerated == 2 ** len(z)

    def test_weighted_matches_brute_force_randomly(self):
        rng = random.Random(13)
        for _ in range(60):
            g = random_connected_graph(rng, rng.randint(2, 8))
            z = approx_cvc(g)
            w = [round(rng.uniform(0, 10), 2) for _ in range(g.n)]
            k = rng.randint(0, g.n)
            res = solve_weighted(make(g, z, k, weights=w))
            _, min_weight, count = brute_force(g, w, k)
            if count == 0:
                assert res.solution is None
            else:
                assert math.isclose(res.weight, min_weight, abs_tol=1e-9)
                assert sum(w[v] for v in res.solution) == res.weight

    def test_parallel_mode_is_equivalent(self):
        rng = random.Random(29)
        for _ in range(20):
            g = random_connected_graph(rng, rng.randint(3, 9))
            z = approx_cvc(g)
            w = [round(rng.uniform(0, 10), 2) for _ in range(g.n)]
            inst = make(g, z, rng.randint(0, g.n), weights=w)
            serial = solve_weighted(inst)
            par = solve_weighted(inst, parallel=True)
            assert serial.solution == par.solution
            assert serial.weight == par.weight
            assert serial.ledger == par.ledger


class TestCountSolutions:
    def test_p3(self, p3):
        count, _ = count_solutions(make(p3, {0, 1}, 2))
        assert count == 3  # {1}, {0,1}, {1,2}

    def test_k2(self):
        g = Graph(2, [(0, 1)])
        count, _ = count_solutions(make(g, {0, 1}, 2))
        assert count == 3

    def test_p4(self, p4):
        count, _ = count_solutions(make(p4, {1, 2}, 3))
        assert count == 3  # {1,2}, {0,1,2}, {1,2,3}

    def test_each_cover_counted_once_vs_brute_force(self):
        # the split of a cover S is z1 = S & z, which determines v1 and X
        for n in range(2, 6):
            for g in enumerate_connected_graphs(n):
                z = approx_cvc(g)
                for k in range(0, n + 1):
                    count, ledger = count_solutions(make(g, z, k))
                    assert count == brute_force(g, k=k)[2]
                    assert ledger.within_bound()

    def test_ledger_matches_weighted_path(self, p4):
        inst = make(p4, {1, 2}, 3)
        _, led_count = count_solutions(inst)
        led_solve = solve_weighted(inst).ledger
        assert led_count == led_solve
