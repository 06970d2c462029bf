import pytest

from tough_cycles.graph import Cycle, Graph, Path, complete_graph, petersen
from tough_cycles.invariants import (
    enumerate_longest_cycles, invariant_report, longest_path_outside,
)
from tough_cycles.structure import (
    DecompositionError, IntermediatePath, VossPreconditionError,
    check_claims_1_2, check_claims_3_4, check_lemma1, check_lemma2,
    check_lemma3, check_voss, decompose, extreme_pairs, has_independent_pair,
    intermediate_paths, upsilon,
)


@pytest.fixture(scope="module")
def petersen_pair():
    g = petersen()
    cycles, _ = enumerate_longest_cycles(g)
    c = cycles[0]
    p = longest_path_outside(g, c)
    return g, c, p


class TestDecompose:
    def test_petersen(self, petersen_pair):
        g, c, p = petersen_pair
        d = decompose(g, c, p)
        assert d.s == 3
        assert d.p_bar == 0
        assert d.nc_equal()
        assert [d.segment_length(i) for i in range(3)] == [3, 3, 3]
        assert all(len(inter) == 2 for inter in d.interiors)
        # attachments are exactly the leftover vertex's neighbors
        leftover = p.start
        assert set(d.xi) == set(g.neighbors(leftover))

    def test_single_attachment(self):
        g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6)])
        c = Cycle(g, (0, 1, 2, 3, 4, 5))
        d = decompose(g, c, Path(g, (6,)))
        assert d.s == 1
        assert d.segment_length(0) == 6
        assert d.interiors[0] == (1, 2, 3, 4, 5)

    def test_rejects_intersecting_path(self):
        g = complete_graph(5)
        c = Cycle(g, (0, 1, 2))
        with pytest.raises(DecompositionError):
            decompose(g, c, Path(g, (2, 3)))

    def test_rejects_detached_path(self):
        g = Graph(5, [(0, 1), (1, 2), (2, 0), (3, 4)])
        with pytest.raises(DecompositionError):
            decompose(g, Cycle(g, (0, 1, 2)), Path(g, (3, 4)))


class TestIntermediatePaths:
    def test_petersen_edges(self, petersen_pair):
        g, c, p = petersen_pair
        d = decompose(g, c, p)
        for a in range(3):
            for b in range(a + 1, 3):
                ups = upsilon(g, d, a, b)
                assert len(ups) == 1
                assert ups[0].is_edge()

    def test_internal_vertex_path(self):
        # 4-cycle with a pendant (the outside path) and a two-hop
        # intermediate connection through vertex 6
        g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                      (5, 0), (5, 2),          # attachments of outside vertex
                      (1, 6), (6, 3)])         # intermediate path 1-6-3
        c = Cycle(g, (0, 1, 2, 3, 4))
        d = decompose(g, c, Path(g, (5,)))
        assert d.s == 2 and d.xi == (0, 2)
        none_found = intermediate_paths(g, d, 0, 1, max_internal=0)
        assert none_found == []
        found = intermediate_paths(g, d, 0, 1, max_internal=1)
        assert [L.path.vertices for L in found] == [(1, 6, 3)]
        assert len(found[0]) == 2

    def test_bad_indices(self, petersen_pair):
        g, c, p = petersen_pair
        d = decompose(g, c, p)
        with pytest.raises(IndexError):
            intermediate_paths(g, d, 0, 5)
        with pytest.raises(ValueError):
            intermediate_paths(g, d, 1, 1)


def test_has_independent_pair():
    g = Graph(6, [(0, 1), (2, 3), (0, 3)])
    e = lambda u, v: IntermediatePath(Path(g, (u, v)), 0, 1)
    assert has_independent_pair([e(0, 1), e(2, 3)])
    assert not has_independent_pair([e(0, 1), e(0, 3)])
    with pytest.raises(ValueError):
        has_independent_pair([IntermediatePath(Path(g, (2,)), 0, 1)])


class TestLemmaCheckers:
    def test_lemma1_vacuous_on_petersen(self, petersen_pair):
        g, c, p = petersen_pair
        v = check_lemma1(g, c, p)
        assert not v.hypothesis_met and v.holds

    def test_lemma2_tight_on_petersen(self, petersen_pair):
        g, c, p = petersen_pair
        verdicts = check_lemma2(g, c, p)
        a2 = [v for v in verdicts if v.lemma == "lemma2a2"]
        assert len(a2) == 3
        for v in a2:
            assert v.hypothesis_met and v.holds
            assert v.bound_required == 6 and v.bound_observed == 6

    def test_lemma3_petersen_second_branch(self):
        v = check_lemma3(petersen())
        # 9 < kappa * (delta + 1) = 12, so the attachment branch carries it
        assert v.hypothesis_met and v.holds
        assert v.bound_required == 12 and v.bound_observed == 9

    def test_lemma3_vacuous_when_hamiltonian(self):
        assert not check_lemma3(complete_graph(5)).hypothesis_met

    def test_claims_1_2_petersen(self, petersen_pair):
        g, c, p = petersen_pair
        d = decompose(g, c, p)
        c1, c2 = check_claims_1_2(g, d)
        assert c1.lemma == "claim1" and c1.holds
        assert c1.bound_required == c1.bound_observed == 12
        assert c2.lemma == "claim2" and c2.holds
        assert c2.bound_required == c2.bound_observed == 6

    def test_claims_3_4_petersen(self, petersen_pair):
        g, c, p = petersen_pair
        d = decompose(g, c, p)
        rep = invariant_report(g)
        verdicts = check_claims_3_4(rep, d)
        by_name = {v.lemma: v for v in verdicts}
        # p_bar = 0, s = 3 = delta, tau = 4/3 > 1, c = 9 = 2*delta + 3:
        # the first battery is live, the second is vacuous
        assert by_name["claim3.1"].hypothesis_met and by_name["claim3.1"].holds
        assert by_name["claim3.5"].bound_observed == 3   # all segments length 3
        assert not by_name["claim4"].hypothesis_met

    def test_verdict_json(self, petersen_pair):
        g, c, p = petersen_pair
        v = check_lemma1(g, c, p)
        blob = v.to_json("I?LRCecq?")
        assert set(blob) == {"lemma", "graph6", "hypothesis_met",
                             "bound_required", "bound_observed", "holds",
                             "witness"}


class TestVoss:
    def test_k5(self):
        assert check_voss(complete_graph(5), 4, [0, 1, 2, 3])

    def test_preconditions(self):
        g = complete_graph(5)
        with pytest.raises(VossPreconditionError):
            check_voss(g, 4, [0, 1, 2])          # wrong witness count
        with pytest.raises(VossPreconditionError):
            check_voss(g, 5, [0, 1, 2, 3, 4])    # degrees too small
        h = Graph(4, [(0, 1), (1, 2), (2, 3)])
        with pytest.raises(VossPreconditionError):
            check_voss(h, 1, [1])                # not hamiltonian


def test_extreme_pairs_petersen():
    pairs, sampled = extreme_pairs(petersen())
    assert len(pairs) == 20 and not sampled
    for c, p in pairs:
        assert len(c) == 9 and len(p) == 0


def test_extreme_pairs_hamiltonian_empty():
    pairs, sampled = extreme_pairs(complete_graph(6))
    assert pairs == [] and not sampled
