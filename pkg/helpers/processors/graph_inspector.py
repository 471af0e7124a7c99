"""Structural queries on graphs and edge subsets."""
from typing import Dict, List, Sequence, Tuple

from models.graph import Graph
from utils.errors import GraphValidationError


class GraphInspector:
    """Connectivity, acyclicity and subtree helpers."""

    @staticmethod
    def nodes_of(graph: Graph, subset: Sequence[int]) -> List[int]:
        """Sorted node set touched by an edge subset."""
        nodes = set()
        for idx in subset:
            i, j = graph.edges[idx]
            nodes.add(i)
            nodes.add(j)
        return sorted(nodes)

    @staticmethod
    def is_subtree(graph: Graph, subset: Sequence[int]) -> bool:
        """True when the edge subset is nonempty, connected and acyclic."""
        if not subset:
            return False
        if any(not 0 <= idx < graph.edge_count for idx in subset):
            return False
        if len(set(subset)) != len(subset):
            return False
        nodes = GraphInspector.nodes_of(graph, subset)
        # A connected graph on k nodes with k - 1 edges is a tree.
        if len(subset) != len(nodes) - 1:
            return False
        parent: Dict[int, int] = {v: v for v in nodes}

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for idx in subset:
            i, j = graph.edges[idx]
            ri, rj = find(i), find(j)
            if ri == rj:
                return False
            parent[ri] = rj
        return True

    @staticmethod
    def is_tree(graph: Graph) -> bool:
        return graph.edge_count == graph.node_count - 1

    @staticmethod
    def require_tree(graph: Graph) -> None:
        if not GraphInspector.is_tree(graph):
            raise GraphValidationError(
                f"expected a tree, got {graph.node_count} nodes and {graph.edge_count} edges")

    @staticmethod
    def subtree_as_graph(graph: Graph, subset: Sequence[int]) -> Tuple[Graph, List[int]]:
        """Relabel a subtree's nodes to 0..k-1 (ascending original labels).

        Returns the relabelled tree and the original node list, so that
        ``marginals.restrict(nodes)`` lines up with the tree's nodes.
        """
        if not GraphInspector.is_subtree(graph, subset):
            raise GraphValidationError(f"edge subset {tuple(subset)} is not a subtree")
        nodes = GraphInspector.nodes_of(graph, subset)
        relabel = {v: k for k, v in enumerate(nodes)}
        edges = [(relabel[graph.edges[idx][0]], relabel[graph.edges[idx][1]]) for idx in subset]
        return Graph.from_edges(len(nodes), edges), nodes
