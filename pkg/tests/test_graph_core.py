"""Graph parsing, enumeration and counting."""
import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from helpers.processors.geodesic_counter import GeodesicCounter
from helpers.processors.graph_inspector import GraphInspector
from helpers.processors.spanning_tree_counter import SpanningTreeCounter
from helpers.processors.subtree_enumerator import SubtreeEnumerator
from models.graph import Graph
from services.graph_loader import GraphLoaderService
from strategies import bridge_edges, connected_graphs, to_nx
from utils.errors import GraphFormatError, GraphValidationError, LimitExceededError


def brute_force_subtrees(graph: Graph):
    found = []
    for size in range(1, graph.edge_count + 1):
        for subset in itertools.combinations(range(graph.edge_count), size):
            sub = nx.Graph([graph.edges[i] for i in subset])
            if nx.is_tree(sub):
                found.append(subset)
    return sorted(found, key=lambda s: (len(s), s))


class TestParseGraph:
    def test_path(self, graph_loader, p3):
        assert graph_loader.parse_graph("3 2\n0 1\n1 2") == p3

    def test_triangle(self, graph_loader, c3):
        assert graph_loader.parse_graph("3 3\n0 1\n1 2\n0 2") == c3
        assert c3.edges == ((0, 1), (0, 2), (1, 2))

    def test_comments_and_blank_lines(self, graph_loader, p3):
        text = "# path\n3 2   # header\n\n1 0\n2 1 # reversed endpoints\n"
        assert graph_loader.parse_graph(text) == p3

    def test_self_loop_reports_line(self, graph_loader):
        with pytest.raises(GraphFormatError) as info:
            graph_loader.parse_graph("2 1\n0 0", source="loop.g")
        assert info.value.line == 2
        assert str(info.value).startswith("loop.g:2:")
        assert "self-loop" in str(info.value)

    @pytest.mark.parametrize("text, line", [
        ("3 2\n0 1", 1),
        ("3 2\n0 1\n1 x", 3),
        ("3 2\n0 1\n1 2 3", 3),
        ("3 2\n0 1\n1 5", 3),
        ("3 2\n0 1\n1 0", 3),
        ("1 0", 1),
    ])
    def test_malformed(self, graph_loader, text, line):
        with pytest.raises(GraphFormatError) as info:
            graph_loader.parse_graph(text)
        assert info.value.line == line

    def test_disconnected(self, graph_loader):
        with pytest.raises(GraphFormatError, match="disconnected"):
            graph_loader.parse_graph("4 2\n0 1\n2 3")

    def test_empty(self, graph_loader):
        with pytest.raises(GraphFormatError, match="header"):
            graph_loader.parse_graph("# nothing here\n")

    def test_load_graph_from_file(self, graph_loader, tmp_path, k4):
        path = tmp_path / "k4.g"
        path.write_text(graph_loader.serialize_graph(k4))
        assert graph_loader.load_graph(path) == k4

    @given(connected_graphs())
    def test_serialize_round_trip(self, graph):
        loader = GraphLoaderService()
        text = loader.serialize_graph(graph)
        assert loader.parse_graph(text) == graph
        assert loader.serialize_graph(loader.parse_graph(text)) == text


class TestGraphModel:
    def test_edge_index_is_lexicographic(self, k4):
        assert list(k4.edge_index) == sorted(k4.edges)
        assert k4.index_of(3, 2) == k4.index_of(2, 3) == 5

    def test_index_of_non_edge(self, p3):
        with pytest.raises(KeyError):
            p3.index_of(0, 2)

    def test_direct_construction_rejects_unsorted(self):
        with pytest.raises(GraphValidationError):
            Graph(3, ((1, 2), (0, 1)))

    def test_duplicate_edges(self):
        with pytest.raises(GraphValidationError, match="duplicate"):
            Graph.from_edges(3, [(0, 1), (1, 0), (1, 2)])


class TestEnumeration:
    def test_path_subtrees(self, p3):
        assert SubtreeEnumerator.enumerate_subtrees(p3) == [(0,), (1,), (0, 1)]

    def test_triangle_subtrees(self, c3):
        subtrees = SubtreeEnumerator.enumerate_subtrees(c3)
        assert len(subtrees) == 6
        assert sum(1 for s in subtrees if len(s) == 2) == 3

    def test_k4_subtrees_match_brute_force(self, k4):
        assert SubtreeEnumerator.enumerate_subtrees(k4) == brute_force_subtrees(k4)

    def test_limit(self, k4):
        with pytest.raises(LimitExceededError):
            SubtreeEnumerator.enumerate_subtrees(k4, limit=10)
        with pytest.raises(LimitExceededError):
            SubtreeEnumerator.enumerate_spanning_trees(k4, limit=10)

    @settings(max_examples=30, deadline=None)
    @given(connected_graphs(max_nodes=5))
    def test_subtrees_match_brute_force(self, graph):
        subtrees = SubtreeEnumerator.enumerate_subtrees(graph)
        assert subtrees == brute_force_subtrees(graph)
        assert all(GraphInspector.is_subtree(graph, s) for s in subtrees)

    def test_spanning_trees(self, p3, c3, k4):
        assert SubtreeEnumerator.enumerate_spanning_trees(p3) == [(0, 1)]
        assert len(SubtreeEnumerator.enumerate_spanning_trees(c3)) == 3
        assert len(SubtreeEnumerator.enumerate_spanning_trees(k4)) == 16


class TestSpanningTreeCounts:
    def test_examples(self, p3, c3, k4):
        assert SpanningTreeCounter.count_spanning_trees(p3) == 1
        assert SpanningTreeCounter.count_spanning_trees(c3) == 3
        assert SpanningTreeCounter.count_spanning_trees(k4) == 16

    def test_with_edge(self, p3, c3, k4):
        assert SpanningTreeCounter.count_spanning_trees_with_edge(p3, 0) == 1
        assert all(SpanningTreeCounter.count_spanning_trees_with_edge(c3, e) == 2 for e in range(3))
        assert all(SpanningTreeCounter.count_spanning_trees_with_edge(k4, e) == 8 for e in range(6))

    def test_cayley(self):
        k7 = Graph.from_edges(7, itertools.combinations(range(7), 2))
        assert SpanningTreeCounter.count_spanning_trees(k7) == 7 ** 5

    def test_bareiss_determinant(self):
        assert SpanningTreeCounter.bareiss_determinant([[2, -1], [-1, 2]]) == 3
        assert SpanningTreeCounter.bareiss_determinant([[0, 1], [1, 0]]) == -1
        assert SpanningTreeCounter.bareiss_determinant([[1, 2], [2, 4]]) == 0

    def test_edge_out_of_range(self, p3):
        with pytest.raises(IndexError):
            SpanningTreeCounter.count_spanning_trees_with_edge(p3, 2)

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_nodes=6))
    def test_enumeration_agrees_with_determinant(self, graph):
        total = SpanningTreeCounter.count_spanning_trees(graph)
        assert len(SubtreeEnumerator.enumerate_spanning_trees(graph)) == total

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_nodes=6))
    def test_deletion_contraction(self, graph):
        total = SpanningTreeCounter.count_spanning_trees(graph)
        bridges = bridge_edges(graph)
        for edge in range(graph.edge_count):
            with_edge = SpanningTreeCounter.count_spanning_trees_with_edge(graph, edge)
            without = SpanningTreeCounter.count_spanning_trees_without_edge(graph, edge)
            assert with_edge + without == total
            if edge in bridges:
                assert with_edge == total
                assert without == 0


class TestGeodesics:
    def test_triangle(self, c3):
        counts = GeodesicCounter.geodesic_counts(c3)
        for (s, t), pair in counts.pairs.items():
            assert pair.sigma == 1
            direct = c3.index_of(s, t)
            assert pair.through == tuple(1 if e == direct else 0 for e in range(3))

    def test_path(self, p3):
        counts = GeodesicCounter.geodesic_counts(p3)
        assert counts.sigma(0, 2) == 1
        assert counts.sigma_e(2, 0, 0) == counts.sigma_e(0, 2, 1) == 1

    def test_square_opposite_pair(self, c4):
        counts = GeodesicCounter.geodesic_counts(c4)
        assert counts.sigma(0, 2) == 2
        assert all(counts.sigma_e(0, 2, e) == 1 for e in range(4))
        assert len(GeodesicCounter.enumerate_geodesics(c4, 0, 2)) == 2

    @settings(max_examples=30, deadline=None)
    @given(connected_graphs(max_nodes=6))
    def test_sigma_matches_networkx(self, graph):
        counts = GeodesicCounter.geodesic_counts(graph)
        g = to_nx(graph)
        for (s, t), pair in counts.pairs.items():
            assert pair.sigma == len(list(nx.all_shortest_paths(g, s, t)))
            assert pair.sigma == len(GeodesicCounter.enumerate_geodesics(graph, s, t))

    @settings(max_examples=30, deadline=None)
    @given(connected_graphs(max_nodes=6))
    def test_sigma_sums_over_predecessors(self, graph):
        for s in range(graph.node_count):
            layers = GeodesicCounter.bfs_from(graph, s)
            for t in range(graph.node_count):
                if t != s:
                    assert layers.sigma[t] == sum(layers.sigma[p] for p in layers.predecessors[t])


class TestInspector:
    def test_is_tree(self, p3, c3):
        assert GraphInspector.is_tree(p3)
        assert not GraphInspector.is_tree(c3)
        with pytest.raises(GraphValidationError):
            GraphInspector.require_tree(c3)

    def test_is_subtree(self, c3):
        assert GraphInspector.is_subtree(c3, (0, 1))
        assert not GraphInspector.is_subtree(c3, (0, 1, 2))
        assert not GraphInspector.is_subtree(c3, ())

    def test_subtree_as_graph_relabels(self, k4):
        subset = (k4.index_of(1, 3), k4.index_of(2, 3))
        tree, nodes = GraphInspector.subtree_as_graph(k4, subset)
        assert nodes == [1, 2, 3]
        assert tree.edges == ((0, 2), (1, 2))
