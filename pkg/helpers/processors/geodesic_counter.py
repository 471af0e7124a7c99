"""Shortest-path (geodesic) counting by breadth-first search."""
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Tuple

from models.graph import EdgeSubset, GeodesicCounts, Graph, PairGeodesics
from utils.parallel import ordered_map


@dataclass(frozen=True)
class BfsLayers:
    """Distances, path counts and BFS predecessors from one source."""
    source: int
    distance: Tuple[int, ...]
    sigma: Tuple[int, ...]
    predecessors: Tuple[Tuple[int, ...], ...]


class GeodesicCounter:
    """Per-pair and per-edge geodesic counts for unweighted graphs."""

    @staticmethod
    def bfs_from(graph: Graph, source: int) -> BfsLayers:
        distance = [-1] * graph.node_count
        sigma = [0] * graph.node_count
        predecessors: List[List[int]] = [[] for _ in range(graph.node_count)]
        distance[source] = 0
        sigma[source] = 1
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for w in graph.adjacency[v]:
                # Path discovery
                if distance[w] < 0:
                    queue.append(w)
                    distance[w] = distance[v] + 1
                # Path counting
                if distance[w] == distance[v] + 1:
                    sigma[w] += sigma[v]
                    predecessors[w].append(v)
        return BfsLayers(source, tuple(distance), tuple(sigma), tuple(tuple(p) for p in predecessors))

    @staticmethod
    def geodesic_counts(graph: Graph) -> GeodesicCounts:
        """Geodesics per unordered pair, and how many of them cross each edge.

        An edge {a, b} lies on sigma_s(a) * sigma_t(b) geodesics from s to t when
        d(s, a) + 1 + d(b, t) = d(s, t); both orientations are checked.
        """
        layers = ordered_map(lambda s: GeodesicCounter.bfs_from(graph, s), range(graph.node_count))
        pairs: Dict[Tuple[int, int], PairGeodesics] = {}
        for s in range(graph.node_count):
            from_s = layers[s]
            for t in range(s + 1, graph.node_count):
                from_t = layers[t]
                length = from_s.distance[t]
                through = []
                for a, b in graph.edges:
                    count = 0
                    if from_s.distance[a] + 1 + from_t.distance[b] == length:
                        count += from_s.sigma[a] * from_t.sigma[b]
                    if from_s.distance[b] + 1 + from_t.distance[a] == length:
                        count += from_s.sigma[b] * from_t.sigma[a]
                    through.append(count)
                pairs[(s, t)] = PairGeodesics(sigma=from_s.sigma[t], through=tuple(through))
        return GeodesicCounts(node_count=graph.node_count, pairs=pairs)

    @staticmethod
    def enumerate_geodesics(graph: Graph, source: int, target: int) -> List[EdgeSubset]:
        """Every shortest path from source to target, as sorted edge-index tuples."""
        layers = GeodesicCounter.bfs_from(graph, source)
        paths: List[EdgeSubset] = []

        def walk_back(node: int, edges: List[int]) -> None:
            if node == source:
                paths.append(tuple(sorted(edges)))
                return
            for pred in layers.predecessors[node]:
                edges.append(graph.index_of(pred, node))
                walk_back(pred, edges)
                edges.pop()

        walk_back(target, [])
        return sorted(paths)
