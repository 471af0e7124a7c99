"""Validation of subtree distributions against a graph."""
import logging
import math
from collections import OrderedDict
from typing import Dict, Iterable, Sequence, Tuple

from config.settings import SIMPLEX_TOLERANCE
from helpers.processors.graph_inspector import GraphInspector
from models.centrality import SubtreeDistribution
from models.graph import EdgeSubset, Graph
from utils.errors import DistributionValidationError

logger = logging.getLogger(__name__)


class DistributionValidator:
    @staticmethod
    def build_explicit(graph: Graph, atoms: Iterable[Tuple[Sequence[Sequence[int]], float]],
                       source: str = "<eta>") -> SubtreeDistribution:
        """Turn (node-pair list, probability) atoms into a validated distribution.

        Edgeless atoms are dropped with a warning: single-node subtrees add nothing
        to the total variation or to any centrality entry.
        """
        indexed = []
        for position, (pairs, prob) in enumerate(atoms):
            try:
                subset = tuple(sorted(graph.index_of(int(i), int(j)) for i, j in pairs))
            except KeyError as e:
                raise DistributionValidationError(f"{source}: atom {position}: {e.args[0]}") from e
            indexed.append((subset, prob))
        return DistributionValidator.validate_subtree_distribution(graph, indexed, source)

    @staticmethod
    def validate_subtree_distribution(graph: Graph, atoms: Iterable[Tuple[Sequence[int], float]],
                                      source: str = "<eta>") -> SubtreeDistribution:
        merged: Dict[EdgeSubset, float] = OrderedDict()
        dropped_mass = 0.0
        total = []
        for position, (subset, prob) in enumerate(atoms):
            prob = float(prob)
            if not math.isfinite(prob) or prob < 0:
                raise DistributionValidationError(f"{source}: atom {position}: probability {prob} is invalid")
            total.append(prob)
            subset = tuple(sorted(subset))
            if not subset:
                logger.warning(f"{source}: atom {position} is an edgeless subtree and is ignored")
                dropped_mass += prob
                continue
            if not GraphInspector.is_subtree(graph, subset):
                raise DistributionValidationError(
                    f"{source}: atom {position}: edges {[graph.edges[i] for i in subset]} do not form a subtree")
            merged[subset] = merged.get(subset, 0.0) + prob

        mass = math.fsum(total)
        if abs(mass - 1.0) > SIMPLEX_TOLERANCE:
            raise DistributionValidationError(f"{source}: probabilities sum to {mass!r}, not 1")
        if not merged:
            raise DistributionValidationError(f"{source}: no atom carries an edge")
        if dropped_mass:
            logger.info(f"{source}: {dropped_mass!r} probability mass sits on edgeless subtrees")
        return SubtreeDistribution(atoms=tuple(merged.items()))
