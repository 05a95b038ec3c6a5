import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planacyclic import (Digraph, OrientedGraph, UndirectedGraph, construct,
                         digirth, is_acyclic, orientations, read_edge_list,
                         read_undirected_edge_list, reverse, write_edge_list)
from planacyclic.errors import InvalidInputError, ParseError

from conftest import (complete_graph, dfs_has_directed_cycle,
                      per_arc_bfs_digirth, random_digraph)


def directed_cycle(g: int) -> Digraph:
    return Digraph(g, [(i, (i + 1) % g) for i in range(g)])


@st.composite
def small_digraphs(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.lists(st.sampled_from(pairs), max_size=2 * n, unique=True)) if pairs else []
    return Digraph(n, arcs)


class TestTypes:
    def test_loop_rejected(self):
        with pytest.raises(InvalidInputError):
            Digraph(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(InvalidInputError):
            Digraph(3, [(0, 3)])

    def test_duplicates_collapse(self):
        d = Digraph(3, [(0, 1), (0, 1), (1, 2)])
        assert d.m == 2

    def test_digon_rejected_for_oriented(self):
        OrientedGraph(3, [(0, 1), (1, 2)])
        with pytest.raises(InvalidInputError):
            OrientedGraph(3, [(0, 1), (1, 0)])

    def test_digon_fine_for_digraph(self):
        assert Digraph(2, [(0, 1), (1, 0)]).m == 2

    def test_undirected_normalizes(self):
        g = UndirectedGraph(3, [(2, 0), (0, 2), (0, 1)])
        assert g.edges == ((0, 1), (0, 2))

    def test_empty_graph_is_valid(self):
        d = Digraph(0)
        assert is_acyclic(d, []) and digirth(d) is None

    def test_immutability(self):
        d = Digraph(2, [(0, 1)])
        with pytest.raises(AttributeError):
            d.n = 5


class TestIsAcyclic:
    def test_full_directed_triangle(self):
        assert not is_acyclic(directed_cycle(3), [0, 1, 2])

    def test_two_vertices_of_triangle(self):
        d = directed_cycle(3)
        for pair in ([0, 1], [1, 2], [0, 2]):
            assert is_acyclic(d, pair)

    def test_constructed_instance_not_acyclic(self):
        d = construct(3, 2).digraph
        assert not is_acyclic(d, range(d.n))
        assert dfs_has_directed_cycle(d, range(d.n))

    def test_out_of_range_vertex(self):
        with pytest.raises(InvalidInputError):
            is_acyclic(directed_cycle(3), [0, 3])

    @given(small_digraphs(), st.randoms(use_true_random=False))
    @settings(max_examples=150, deadline=None)
    def test_matches_dfs_oracle_and_downward_closed(self, d, rnd):
        subset = [v for v in range(d.n) if rnd.random() < 0.7]
        acyclic = is_acyclic(d, subset)
        assert acyclic == (not dfs_has_directed_cycle(d, subset))
        if acyclic:
            smaller = [v for v in subset if rnd.random() < 0.6]
            assert is_acyclic(d, smaller)


class TestDigirth:
    @pytest.mark.parametrize("g", range(2, 9))
    def test_directed_cycle(self, g):
        assert digirth(directed_cycle(g)) == g

    def test_dag_is_none(self):
        assert digirth(Digraph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])) is None

    def test_constructed_instance(self):
        d = construct(4, 3).digraph
        assert digirth(d) == 4 == per_arc_bfs_digirth(d)

    def test_acyclic_iff_no_digirth(self, rng):
        for _ in range(60):
            d = random_digraph(rng, max_n=9)
            assert (digirth(d) is None) == is_acyclic(d, range(d.n))

    def test_matches_per_arc_oracle_on_random(self, rng):
        for _ in range(100):
            d = random_digraph(rng)
            assert digirth(d) == per_arc_bfs_digirth(d)


class TestReverse:
    def test_triangle(self):
        assert reverse(directed_cycle(3)).arcs == ((0, 2), (1, 0), (2, 1))

    def test_involution_and_digirth_invariance(self, rng):
        for _ in range(100):
            d = random_digraph(rng)
            assert reverse(reverse(d)) == d
            assert digirth(reverse(d)) == digirth(d)

    def test_preserves_type(self):
        assert isinstance(reverse(OrientedGraph(2, [(0, 1)])), OrientedGraph)


class TestOrientations:
    def test_single_edge(self):
        g = UndirectedGraph(2, [(0, 1)])
        assert len(list(orientations(g))) == 2
        assert len(list(orientations(g, dedup_reversal=True))) == 1

    def test_triangle(self):
        g = complete_graph(3)
        full = list(orientations(g))
        half = list(orientations(g, dedup_reversal=True))
        assert len(full) == 8 and len(half) == 4

    def test_k4(self):
        g = complete_graph(4)
        assert sum(1 for _ in orientations(g)) == 64
        assert sum(1 for _ in orientations(g, dedup_reversal=True)) == 32

    def test_each_orientation_once(self):
        g = complete_graph(3)
        full = list(orientations(g))
        assert len({d.arcs for d in full}) == 8

    def test_dedup_keeps_one_per_reversal_pair(self):
        g = complete_graph(3)
        half = {d.arcs for d in orientations(g, dedup_reversal=True)}
        for d in orientations(g):
            assert (d.arcs in half) != (reverse(d).arcs in half)

    def test_no_edges(self):
        g = UndirectedGraph(3)
        assert len(list(orientations(g, dedup_reversal=True))) == 1

    @given(st.integers(min_value=1, max_value=12))
    @settings(deadline=None)
    def test_stream_length(self, m):
        g = UndirectedGraph(m + 1, [(i, i + 1) for i in range(m)])
        assert sum(1 for _ in orientations(g)) == 2 ** m
        assert sum(1 for _ in orientations(g, dedup_reversal=True)) == 2 ** (m - 1)

    def test_stream_length_m16(self):
        g = UndirectedGraph(17, [(i, i + 1) for i in range(16)])
        assert sum(1 for _ in orientations(g, dedup_reversal=True)) == 2 ** 15


class TestEdgeList:
    def test_round_trip(self):
        d = construct(3, 3).digraph
        assert read_edge_list(write_edge_list(d)) == d

    def test_undirected_read(self):
        g = read_undirected_edge_list("3 2\n0 1\n2 1\n")
        assert g.edges == ((0, 1), (1, 2))

    def test_bad_header(self):
        with pytest.raises(ParseError):
            read_edge_list("nope\n")

    def test_missing_lines_reports_offset(self):
        with pytest.raises(ParseError) as err:
            read_edge_list("3 2\n0 1\n")
        assert err.value.offset == 2

    def test_out_of_range_endpoint(self):
        with pytest.raises(ParseError) as err:
            read_edge_list("2 1\n0 5\n")
        assert err.value.offset == 2

    def test_comments_ignored(self):
        d = read_edge_list("# a digraph\n2 1\n0 1\n")
        assert d.arcs == ((0, 1),)
