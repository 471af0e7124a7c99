"""Graph, edge vectors and geodesic counts."""
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from utils.errors import GraphValidationError

Edge = Tuple[int, int]
EdgeSubset = Tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Finite, connected, simple, unweighted graph with canonical edge order.

    Edges are stored as (i, j) with i < j, sorted lexicographically; the position of
    an edge in ``edges`` is its edge index.
    """
    node_count: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if self.node_count < 2:
            raise GraphValidationError(f"graph needs at least 2 nodes, got {self.node_count}")
        seen = set()
        for i, j in self.edges:
            if i == j:
                raise GraphValidationError(f"self-loop at node {i}")
            if not (0 <= i < self.node_count and 0 <= j < self.node_count):
                raise GraphValidationError(f"edge ({i}, {j}) references a node outside 0..{self.node_count - 1}")
            if i > j:
                raise GraphValidationError(f"edge ({i}, {j}) is not canonical (i < j)")
            if (i, j) in seen:
                raise GraphValidationError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
        if list(self.edges) != sorted(self.edges):
            raise GraphValidationError("edges are not in lexicographic order")
        if not self._is_connected():
            raise GraphValidationError("graph is disconnected")

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[Sequence[int]]) -> 'Graph':
        """Canonicalise endpoints and order, then validate."""
        canonical = []
        for edge in edges:
            i, j = int(edge[0]), int(edge[1])
            if i == j:
                raise GraphValidationError(f"self-loop at node {i}")
            canonical.append((min(i, j), max(i, j)))
        if len(set(canonical)) != len(canonical):
            duplicates = sorted({e for e in canonical if canonical.count(e) > 1})
            raise GraphValidationError(f"duplicate edge {duplicates[0]}")
        return cls(node_count=node_count, edges=tuple(sorted(canonical)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        return {edge: idx for idx, edge in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        neighbours: List[List[int]] = [[] for _ in range(self.node_count)]
        for i, j in self.edges:
            neighbours[i].append(j)
            neighbours[j].append(i)
        return tuple(tuple(sorted(ns)) for ns in neighbours)

    def index_of(self, i: int, j: int) -> int:
        """Edge index of the unordered pair {i, j}."""
        key = (min(i, j), max(i, j))
        if key not in self.edge_index:
            raise KeyError(f"({i}, {j}) is not an edge")
        return self.edge_index[key]

    def _is_connected(self) -> bool:
        neighbours: List[List[int]] = [[] for _ in range(self.node_count)]
        for i, j in self.edges:
            neighbours[i].append(j)
            neighbours[j].append(i)
        visited = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in neighbours[v]:
                if w not in visited:
                    visited.add(w)
                    queue.append(w)
        return len(visited) == self.node_count


@dataclass(frozen=True)
class EdgeVector:
    """One finite real per edge, in canonical edge order."""
    values: Tuple[float, ...]

    def __post_init__(self):
        if not all(np.isfinite(v) for v in self.values):
            raise ValueError("edge vector entries must be finite")

    @classmethod
    def for_graph(cls, graph: Graph, values: Sequence[float]) -> 'EdgeVector':
        if len(values) != graph.edge_count:
            raise ValueError(f"expected {graph.edge_count} edge values, got {len(values)}")
        return cls(tuple(float(v) for v in values))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, idx: int) -> float:
        return self.values[idx]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def dot(self, other: 'EdgeVector') -> float:
        if len(other) != len(self):
            raise ValueError(f"dimension mismatch: {len(self)} vs {len(other)}")
        # Index-ordered accumulation keeps the sum reproducible.
        total = 0.0
        for a, b in zip(self.values, other.values):
            total += a * b
        return total


@dataclass(frozen=True)
class PairGeodesics:
    """Shortest-path counts for one unordered node pair."""
    sigma: int
    through: Tuple[int, ...]


@dataclass(frozen=True)
class GeodesicCounts:
    """Geodesic counts for every unordered pair {s, t}, s < t."""
    node_count: int
    pairs: Dict[Tuple[int, int], PairGeodesics] = field(default_factory=dict)

    @property
    def pair_count(self) -> int:
        return self.node_count * (self.node_count - 1) // 2

    def sigma(self, s: int, t: int) -> int:
        return self.pairs[(min(s, t), max(s, t))].sigma

    def sigma_e(self, s: int, t: int, edge: int) -> int:
        return self.pairs[(min(s, t), max(s, t))].through[edge]
