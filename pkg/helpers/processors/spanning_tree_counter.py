"""Exact spanning-tree counts through the matrix-tree theorem."""
from typing import List, Sequence, Tuple

from models.graph import Graph


class SpanningTreeCounter:
    """Fraction-free (Bareiss) determinants of reduced Laplacians.

    Counts are Python integers, so there is no overflow ceiling; the cost grows
    as O(n^3) big-integer operations.
    """

    @staticmethod
    def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
        """Determinant of an integer matrix without leaving the integers."""
        size = len(matrix)
        if size == 0:
            return 1
        work = [list(row) for row in matrix]
        sign = 1
        previous = 1
        for k in range(size - 1):
            if work[k][k] == 0:
                pivot_row = next((r for r in range(k + 1, size) if work[r][k] != 0), None)
                if pivot_row is None:
                    return 0
                work[k], work[pivot_row] = work[pivot_row], work[k]
                sign = -sign
            pivot = work[k][k]
            for i in range(k + 1, size):
                for j in range(k + 1, size):
                    # Exact division is guaranteed by Sylvester's identity.
                    work[i][j] = (work[i][j] * pivot - work[i][k] * work[k][j]) // previous
            previous = pivot
        return sign * work[size - 1][size - 1]

    @staticmethod
    def count_multigraph(node_count: int, edges: Sequence[Tuple[int, int]]) -> int:
        """Spanning trees of a loopless multigraph; parallel edges count with multiplicity.

        Disconnected inputs give 0.
        """
        if node_count <= 1:
            return 1
        laplacian: List[List[int]] = [[0] * node_count for _ in range(node_count)]
        for i, j in edges:
            if i == j:
                continue
            laplacian[i][i] += 1
            laplacian[j][j] += 1
            laplacian[i][j] -= 1
            laplacian[j][i] -= 1
        reduced = [row[1:] for row in laplacian[1:]]
        return SpanningTreeCounter.bareiss_determinant(reduced)

    @staticmethod
    def count_spanning_trees(graph: Graph) -> int:
        return SpanningTreeCounter.count_multigraph(graph.node_count, graph.edges)

    @staticmethod
    def count_spanning_trees_with_edge(graph: Graph, edge: int) -> int:
        """Spanning trees containing ``edge``: the count of the contraction G/e."""
        if not 0 <= edge < graph.edge_count:
            raise IndexError(f"edge index {edge} out of range [0, {graph.edge_count})")
        keep, drop = graph.edges[edge]
        # Merge ``drop`` into ``keep`` and shift labels above ``drop`` down by one.
        relabel = [v if v < drop else v - 1 for v in range(graph.node_count)]
        relabel[drop] = relabel[keep]
        contracted = [(relabel[i], relabel[j]) for idx, (i, j) in enumerate(graph.edges) if idx != edge]
        return SpanningTreeCounter.count_multigraph(graph.node_count - 1, contracted)

    @staticmethod
    def count_spanning_trees_without_edge(graph: Graph, edge: int) -> int:
        """Spanning trees of G - e (zero when e is a bridge)."""
        if not 0 <= edge < graph.edge_count:
            raise IndexError(f"edge index {edge} out of range [0, {graph.edge_count})")
        remaining = [e for idx, e in enumerate(graph.edges) if idx != edge]
        return SpanningTreeCounter.count_multigraph(graph.node_count, remaining)
