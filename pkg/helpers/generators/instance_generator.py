"""Seeded random graphs, marginals and subtree distributions."""
import logging
from typing import List, Optional

import numpy as np

from config.settings import DEFAULT_ENUMERATION_LIMIT, GEN_CONNECT_RETRIES, VERIFY_ETA_MAX_ATOMS
from helpers.processors.subtree_enumerator import SubtreeEnumerator
from helpers.validators.distribution_validator import DistributionValidator
from models.centrality import SubtreeDistribution
from models.graph import Edge, Graph
from models.marginal import (
    DiscreteMarginal,
    EmpiricalMarginal,
    GaussianMarginal,
    MarginalKind,
    MarginalSet,
)
from utils.errors import GraphValidationError

logger = logging.getLogger(__name__)

GRAPH_FAMILIES = ("path", "cycle", "complete", "erdos-renyi")


class InstanceGenerator:
    """All draws come from one numpy Generator, so a seed fixes the whole instance."""

    def __init__(self, seed: Optional[int] = None, rng: Optional[np.random.Generator] = None):
        self.rng = rng if rng is not None else np.random.default_rng(seed)

    @staticmethod
    def path_graph(n: int) -> Graph:
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @staticmethod
    def cycle_graph(n: int) -> Graph:
        if n < 3:
            raise GraphValidationError(f"a simple cycle needs at least 3 nodes, got {n}")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])

    @staticmethod
    def complete_graph(n: int) -> Graph:
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    def erdos_renyi_graph(self, n: int, p: float, retries: int = GEN_CONNECT_RETRIES) -> Graph:
        """G(n, p), redrawn until connected."""
        if not 0.0 < p <= 1.0:
            raise ValueError(f"edge probability must lie in (0, 1], got {p}")
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for attempt in range(1, retries + 1):
            keep = self.rng.random(len(pairs)) < p
            edges = [pair for pair, chosen in zip(pairs, keep) if chosen]
            try:
                graph = Graph.from_edges(n, edges)
            except GraphValidationError:
                logger.debug(f"Erdos-Renyi draw {attempt} is disconnected")
                continue
            logger.info(f"Connected G({n}, {p}) after {attempt} draw(s)")
            return graph
        raise GraphValidationError(f"no connected G({n}, {p}) within {retries} draws")

    def graph(self, family: str, n: int, p: float = 0.5) -> Graph:
        if family == "path":
            return self.path_graph(n)
        if family == "cycle":
            return self.cycle_graph(n)
        if family == "complete":
            return self.complete_graph(n)
        if family == "erdos-renyi":
            return self.erdos_renyi_graph(n, p)
        raise ValueError(f"unknown graph family {family!r}; expected one of {', '.join(GRAPH_FAMILIES)}")

    def random_tree(self, n: int) -> Graph:
        """Uniform labelled tree from a random Pruefer sequence."""
        if n < 2:
            raise GraphValidationError(f"a tree needs at least 2 nodes, got {n}")
        if n == 2:
            return Graph.from_edges(2, [(0, 1)])
        sequence = [int(v) for v in self.rng.integers(0, n, size=n - 2)]
        degree = [1] * n
        for v in sequence:
            degree[v] += 1
        edges: List[Edge] = []
        for v in sequence:
            leaf = min(u for u in range(n) if degree[u] == 1)
            edges.append((leaf, v))
            degree[leaf] -= 1
            degree[v] -= 1
        u, w = [x for x in range(n) if degree[x] == 1]
        edges.append((u, w))
        return Graph.from_edges(n, edges)

    def gaussian_marginals(self, n: int) -> MarginalSet:
        means = self.rng.normal(0.0, 1.0, size=n)
        stds = self.rng.uniform(0.0, 1.0, size=n)
        return MarginalSet(MarginalKind.GAUSSIAN,
                           tuple(GaussianMarginal(float(m), float(s)) for m, s in zip(means, stds)))

    def empirical_marginals(self, n: int, samples: int) -> MarginalSet:
        if samples < 1:
            raise ValueError("sample count must be positive")
        draws = self.rng.normal(0.0, 1.0, size=(n, samples))
        return MarginalSet(MarginalKind.EMPIRICAL,
                           tuple(EmpiricalMarginal.from_samples(row.tolist()) for row in draws))

    def discrete_marginals(self, n: int, support: int) -> MarginalSet:
        """Dirichlet(1, ..., 1) weights over labels s1..sN."""
        if support < 1:
            raise ValueError("support size must be positive")
        weights = self.rng.dirichlet(np.ones(support), size=n)
        labels = tuple(f"s{k + 1}" for k in range(support))
        return MarginalSet(MarginalKind.DISCRETE,
                           tuple(DiscreteMarginal(tuple(float(w) for w in row)) for row in weights),
                           support=labels)

    def marginals(self, kind: MarginalKind, n: int, support: int = 2, samples: int = 4) -> MarginalSet:
        if kind is MarginalKind.GAUSSIAN:
            return self.gaussian_marginals(n)
        if kind is MarginalKind.EMPIRICAL:
            return self.empirical_marginals(n, samples)
        return self.discrete_marginals(n, support)

    def random_eta(self, graph: Graph, max_atoms: int = VERIFY_ETA_MAX_ATOMS,
                   limit: int = DEFAULT_ENUMERATION_LIMIT) -> SubtreeDistribution:
        """Explicit eta on a few subtrees drawn without replacement, Dirichlet weights."""
        subtrees = SubtreeEnumerator.enumerate_subtrees(graph, limit)
        count = int(self.rng.integers(1, min(max_atoms, len(subtrees)) + 1))
        chosen = sorted(int(k) for k in self.rng.choice(len(subtrees), size=count, replace=False))
        probs = self.rng.dirichlet(np.ones(count))
        # Rescale so the floating total stays inside the validator's simplex tolerance.
        probs = probs / probs.sum()
        atoms = [(subtrees[k], float(p)) for k, p in zip(chosen, probs)]
        return DistributionValidator.validate_subtree_distribution(graph, atoms, source="random eta")
