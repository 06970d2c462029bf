import random

import pytest
from hypothesis import given, settings, strategies as st

from tough_cycles.graph import (
    Cycle, Graph, Graph6CharacterError, Graph6Error, Graph6LengthError,
    Graph6SizeError, Graph6TrailingBitsError, ISO_MAX_VERTICES, Path,
    canonical_relabel, complete_bipartite, complete_graph, component_count,
    cycle_graph, cycle_step, delete_vertices, is_connected, is_isomorphic,
    parse_edge_list, parse_graph6, path_graph, petersen, write_graph6,
)


def random_graph(rng, n, p=0.5):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


class TestGraph:
    def test_basic(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        assert g.degree(1) == 2
        assert g.neighbors(1) == (0, 2)
        assert g.has_edge(0, 1) and not g.has_edge(0, 2)
        assert g.edge_count() == 3
        assert g.edges() == [(0, 1), (1, 2), (2, 3)]

    def test_immutable_and_hashable(self):
        g = Graph(3, [(0, 1)])
        with pytest.raises(AttributeError):
            g.n = 5
        assert g == Graph(3, [(0, 1)])
        assert hash(g) == hash(Graph(3, [(0, 1)]))

    def test_invalid_edges(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 0)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])
        with pytest.raises(ValueError):
            Graph(40)

    def test_relabel(self):
        g = Graph(3, [(0, 1)])
        h = g.relabel([2, 0, 1])       # old 0 -> new 2, old 1 -> new 0
        assert h.has_edge(2, 0)
        assert h.edge_count() == 1


class TestGraph6:
    def test_known_encodings(self):
        assert write_graph6(Graph(1)) == "@"
        assert write_graph6(complete_graph(4)) == "C~"
        assert parse_graph6("@").n == 1
        assert parse_graph6("C~") == complete_graph(4)

    def test_round_trip_random(self):
        rng = random.Random(1)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 12))
            assert parse_graph6(write_graph6(g)) == g

    def test_error_classes_distinct(self):
        with pytest.raises(Graph6LengthError):
            parse_graph6("")
        with pytest.raises(Graph6LengthError):
            parse_graph6("D?")          # too short for n = 5
        with pytest.raises(Graph6CharacterError):
            parse_graph6("%")
        with pytest.raises(Graph6TrailingBitsError):
            parse_graph6("A~")          # n = 2 with nonzero padding
        with pytest.raises(Graph6SizeError):
            parse_graph6("~" + "?" * 10)  # multi-byte n over the cap
        assert issubclass(Graph6LengthError, Graph6Error)

    def test_rejects_other_formats(self):
        with pytest.raises(Graph6Error):
            parse_graph6(":Fa@x^")      # sparse6
        with pytest.raises(Graph6Error):
            parse_graph6("&B?G")        # digraph6


def test_parse_edge_list():
    g = parse_edge_list("0 1\n1 2  # comment\n\n# full line comment\n2 3")
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    with pytest.raises(ValueError):
        parse_edge_list("0 zero")


class TestGenerators:
    def test_petersen(self):
        g = petersen()
        assert g.n == 10
        assert all(g.degree(v) == 3 for v in range(10))
        assert g.edge_count() == 15
        # girth 5: no triangles or 4-cycles
        for u, v in g.edges():
            assert not set(g.neighbors(u)) & set(g.neighbors(v))
        for u in range(10):
            for v in range(u + 1, 10):
                if not g.has_edge(u, v):
                    assert len(set(g.neighbors(u)) & set(g.neighbors(v))) <= 1

    def test_families(self):
        assert cycle_graph(5).edge_count() == 5
        assert complete_graph(5).edge_count() == 10
        assert path_graph(4).edge_count() == 3
        assert complete_bipartite(2, 3).edge_count() == 6


class TestComponents:
    def test_counts(self):
        g = Graph(5, [(0, 1), (2, 3)])
        assert component_count(g) == 3
        assert not is_connected(g)
        assert is_connected(cycle_graph(4))

    def test_delete_vertices(self):
        g = cycle_graph(5)
        sub, old_to_new = delete_vertices(g, [0])
        assert sub.n == 4
        assert component_count(sub) == 1
        assert sub.edge_count() == 3
        assert set(old_to_new) == {1, 2, 3, 4}


class TestIsomorphism:
    def test_relabel_invariance(self):
        rng = random.Random(2)
        for _ in range(100):
            n = rng.randint(1, 9)
            g = random_graph(rng, n)
            perm = list(range(n))
            rng.shuffle(perm)
            assert is_isomorphic(g, g.relabel(perm))
            assert canonical_relabel(g) == canonical_relabel(g.relabel(perm))

    def test_non_isomorphic(self):
        assert not is_isomorphic(cycle_graph(6), path_graph(6))
        assert not is_isomorphic(complete_bipartite(3, 3),
                                 complete_graph(4))
        # same degree sequence, different structure
        assert not is_isomorphic(cycle_graph(6),
                                 Graph(6, [(0, 1), (1, 2), (2, 0),
                                           (3, 4), (4, 5), (5, 3)]))

    def test_size_cap(self):
        big = Graph(ISO_MAX_VERTICES + 1)
        with pytest.raises(ValueError):
            is_isomorphic(big, big)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 8), st.randoms(use_true_random=False))
    def test_canonical_form_is_invariant(self, n, rng):
        g = random_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_relabel(g) == canonical_relabel(g.relabel(perm))


class TestCycleAndPath:
    def test_cycle_validation(self):
        g = cycle_graph(5)
        c = Cycle(g, (0, 1, 2, 3, 4))
        assert len(c) == 5
        with pytest.raises(ValueError):
            Cycle(g, (0, 2, 4, 1, 3))   # chords absent
        with pytest.raises(ValueError):
            Cycle(g, (0, 1, 2))         # 2-0 not an edge

    def test_step_and_arc(self):
        g = cycle_graph(6)
        c = Cycle(g, (0, 1, 2, 3, 4, 5))
        assert c.step(0, 1) == 1
        assert c.step(0, -1) == 5
        assert cycle_step(c, 5, 2) == 1
        assert c.arc(4, 1) == [4, 5, 0, 1]
        assert c.arc_length(4, 1) == 3
        assert c.arc_length(1, 1) == 0

    def test_canonical_rotation_reflection(self):
        g = cycle_graph(5)
        c1 = Cycle(g, (2, 3, 4, 0, 1)).canonical()
        c2 = Cycle(g, (1, 0, 4, 3, 2)).canonical()
        assert c1 == c2
        assert c1.vertices[0] == 0

    def test_degenerate_cycles(self):
        g = Graph(2, [(0, 1)])
        assert len(Cycle(g, (0,))) == 1
        assert len(Cycle(g, (0, 1))) == 2

    def test_path(self):
        g = path_graph(4)
        p = Path(g, (0, 1, 2, 3))
        assert len(p) == 3              # length is the edge count
        assert p.start == 0 and p.end == 3
        assert p.reversed(g).vertices == (3, 2, 1, 0)
        with pytest.raises(ValueError):
            Path(g, (0, 2))
        assert len(Path(g, (2,))) == 0
