import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from tough_cycles.graph import (
    Cycle, Graph, complete_bipartite, complete_graph, cycle_graph,
    path_graph, petersen,
)
from tough_cycles.invariants import (
    all_longest_paths_outside, circumference, circumference_oracle,
    connectivity, connectivity_oracle, enumerate_longest_cycles,
    invariant_report, is_dominating_cycle, is_hamiltonian, is_t_tough,
    longest_path_outside, min_degree, toughness, toughness_oracle,
)
from tough_cycles.rational import ExactRational


def random_connected(rng, n, p=0.45):
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p]
        g = Graph(n, edges)
        from tough_cycles.graph import is_connected
        if is_connected(g):
            return g


class TestKnownValues:
    def test_cycles(self):
        for n in range(4, 11):
            g = cycle_graph(n)
            tau, cut = toughness(g)
            assert tau == ExactRational(1)
            assert connectivity(g) == 2
            assert circumference(g)[0] == n
            assert min_degree(g) == 2

    def test_complete(self):
        g = complete_graph(5)
        tau, cut = toughness(g)
        assert tau.is_infinite and cut is None
        assert connectivity(g) == 4
        assert is_hamiltonian(g)

    def test_bipartite(self):
        g = complete_bipartite(2, 3)
        tau, cut = toughness(g)
        assert tau == ExactRational(2, 3)
        assert sorted(cut) == [0, 1]
        assert connectivity(g) == 2
        assert circumference(g)[0] == 4

    def test_petersen_vector(self):
        rep = invariant_report(petersen())
        assert (rep.n, rep.delta, rep.kappa, rep.circumference) == (10, 3, 3, 9)
        assert rep.toughness == ExactRational(4, 3)
        assert not rep.hamiltonian

    def test_disconnected(self):
        g = Graph(4, [(0, 1), (2, 3)])
        tau, cut = toughness(g)
        assert tau == ExactRational(0) and cut == []
        assert connectivity(g) == 0

    def test_is_t_tough(self):
        assert is_t_tough(cycle_graph(5), ExactRational(1))
        assert not is_t_tough(cycle_graph(5), ExactRational(4, 3))
        with pytest.raises(ValueError):
            is_t_tough(cycle_graph(5), ExactRational.infinity())


class TestOracles:
    def test_toughness_matches_oracle_corpus(self, corpus_n6):
        for g in corpus_n6:
            assert toughness(g)[0] == toughness_oracle(g)

    def test_connectivity_matches_oracle_corpus(self, corpus_n6):
        for g in corpus_n6:
            assert connectivity(g) == connectivity_oracle(g)

    def test_circumference_matches_dp_corpus(self, corpus_n6):
        for g in corpus_n6:
            assert circumference(g)[0] == circumference_oracle(g)

    def test_random_larger(self):
        rng = random.Random(3)
        for _ in range(40):
            g = random_connected(rng, rng.randint(7, 11))
            assert circumference(g)[0] == circumference_oracle(g)
            assert toughness(g)[0] == toughness_oracle(g)


class TestWitnesses:
    def test_toughness_witness_achieves_ratio(self):
        rng = random.Random(4)
        from tough_cycles.graph import component_count, delete_vertices
        for _ in range(50):
            g = random_connected(rng, rng.randint(4, 8))
            tau, cut = toughness(g)
            if tau.is_infinite:
                continue
            sub, _ = delete_vertices(g, cut)
            comps = component_count(sub)
            assert comps > 1
            assert tau == ExactRational(len(cut), comps)

    def test_circumference_witness_length(self):
        rng = random.Random(5)
        for _ in range(50):
            g = random_connected(rng, rng.randint(4, 9))
            ln, cyc = circumference(g)
            # Cycle construction already validates adjacency
            assert len(cyc) == ln

    @settings(max_examples=40, deadline=None)
    @given(st.integers(4, 8), st.randoms(use_true_random=False))
    def test_relabel_invariance(self, n, rng):
        g = random_connected(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert toughness(g)[0] == toughness(h)[0]
        assert circumference(g)[0] == circumference(h)[0]
        assert connectivity(g) == connectivity(h)


class TestCycleEnumeration:
    def test_petersen_longest_cycles(self):
        cycles, truncated = enumerate_longest_cycles(petersen())
        assert len(cycles) == 20 and not truncated
        assert all(len(c) == 9 for c in cycles)

    def test_cn_unique(self):
        cycles, _ = enumerate_longest_cycles(cycle_graph(7))
        assert len(cycles) == 1

    def test_cap(self):
        cycles, truncated = enumerate_longest_cycles(complete_graph(8), cap=10)
        assert truncated and len(cycles) == 10


class TestOutsideStructure:
    def test_dominating(self):
        g = petersen()
        _, c = circumference(g)
        assert is_dominating_cycle(g, c)
        h = Graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5)])
        assert not is_dominating_cycle(h, Cycle(h, (0, 1, 2)))

    def test_longest_path_outside(self):
        g = petersen()
        _, c = circumference(g)
        p = longest_path_outside(g, c)
        assert len(p) == 0              # single leftover vertex
        paths, truncated = all_longest_paths_outside(g, c)
        assert len(paths) == 1 and not truncated
        assert paths[0] == p

    def test_spanning_cycle_has_no_outside(self):
        g = cycle_graph(5)
        _, c = circumference(g)
        assert longest_path_outside(g, c) is None


def test_report_json_round_trip():
    rep = invariant_report(petersen())
    blob = json.loads(rep.to_json_str())
    assert blob["n"] == 10
    assert blob["toughness"] == {"num": 4, "den": 3, "infinite": False}
    assert blob["circumference"] == 9
    assert len(blob["circumference_witness"]) == 9


def test_hamiltonian_requires_three_vertices():
    with pytest.raises(ValueError):
        is_hamiltonian(Graph(2, [(0, 1)]))
