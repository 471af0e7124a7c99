"""Enumeration of subtrees and spanning trees."""
import logging
from typing import FrozenSet, Iterator, List, Set

import humanize

from config.settings import DEFAULT_ENUMERATION_LIMIT
from models.graph import EdgeSubset, Graph
from utils.errors import LimitExceededError

logger = logging.getLogger(__name__)


class SubtreeEnumerator:
    """Exhaustive subtree and spanning-tree enumeration with explicit limits."""

    @staticmethod
    def enumerate_subtrees(graph: Graph, limit: int = DEFAULT_ENUMERATION_LIMIT) -> List[EdgeSubset]:
        """All connected acyclic edge subsets with at least one edge.

        Trees grow from single edges by attaching an edge with exactly one endpoint
        in the current node set; every subtree is reached this way and the visited
        set removes repeats. Output is sorted by (size, edge indices).
        """
        if limit < 1:
            raise ValueError("limit must be positive")
        visited: Set[FrozenSet[int]] = set()
        stack: List[FrozenSet[int]] = []
        for idx in range(graph.edge_count):
            start = frozenset([idx])
            visited.add(start)
            stack.append(start)
        if len(visited) > limit:
            raise LimitExceededError(f"more than {limit} subtrees")

        while stack:
            current = stack.pop()
            for grown in SubtreeEnumerator._grow(graph, current):
                if grown in visited:
                    continue
                visited.add(grown)
                if len(visited) > limit:
                    raise LimitExceededError(
                        f"more than {humanize.intcomma(limit)} subtrees; instance too large for enumeration")
                stack.append(grown)

        subtrees = sorted((tuple(sorted(s)) for s in visited), key=lambda s: (len(s), s))
        logger.info(f"Enumerated {humanize.intcomma(len(subtrees))} subtrees "
                    f"(n={graph.node_count}, m={graph.edge_count})")
        return subtrees

    @staticmethod
    def _grow(graph: Graph, subtree: FrozenSet[int]) -> Iterator[FrozenSet[int]]:
        nodes = set()
        for idx in subtree:
            nodes.update(graph.edges[idx])
        for idx, (i, j) in enumerate(graph.edges):
            if idx in subtree:
                continue
            # Exactly one endpoint inside keeps the result connected and acyclic.
            if (i in nodes) != (j in nodes):
                yield subtree | {idx}

    @staticmethod
    def enumerate_spanning_trees(graph: Graph, limit: int = DEFAULT_ENUMERATION_LIMIT) -> List[EdgeSubset]:
        """All spanning trees, as sorted edge-index tuples in lexicographic order."""
        if limit < 1:
            raise ValueError("limit must be positive")
        n, m = graph.node_count, graph.edge_count
        needed = n - 1
        found: List[EdgeSubset] = []

        def find(parent: List[int], v: int) -> int:
            while parent[v] != v:
                v = parent[v]
            return v

        def extend(start: int, chosen: List[int], parent: List[int]) -> None:
            if len(chosen) == needed:
                found.append(tuple(chosen))
                if len(found) > limit:
                    raise LimitExceededError(
                        f"more than {humanize.intcomma(limit)} spanning trees; instance too large for enumeration")
                return
            for idx in range(start, m):
                if m - idx < needed - len(chosen):
                    break
                i, j = graph.edges[idx]
                ri, rj = find(parent, i), find(parent, j)
                if ri == rj:
                    continue
                merged = list(parent)
                merged[ri] = rj
                chosen.append(idx)
                extend(idx + 1, chosen, merged)
                chosen.pop()

        extend(0, [], list(range(n)))
        logger.info(f"Enumerated {humanize.intcomma(len(found))} spanning trees "
                    f"(n={n}, m={m})")
        return found
