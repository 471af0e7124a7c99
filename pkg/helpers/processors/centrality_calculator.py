"""Edge centralities as images of subtree distributions."""
import logging
import math
from collections import OrderedDict
from fractions import Fraction
from typing import Dict, List

import humanize

from config.settings import DEFAULT_ENUMERATION_LIMIT
from helpers.processors.geodesic_counter import GeodesicCounter
from helpers.processors.graph_inspector import GraphInspector
from helpers.processors.spanning_tree_counter import SpanningTreeCounter
from helpers.processors.subtree_enumerator import SubtreeEnumerator
from helpers.validators.distribution_validator import DistributionValidator
from models.centrality import EdgeCentrality, SubtreeDistribution, SubtreeFamily
from models.graph import EdgeSubset, Graph
from utils.errors import DistributionValidationError, LimitExceededError

logger = logging.getLogger(__name__)


class CentralityCalculator:
    """C_eta(e) = P_{T ~ eta}(e in T), in closed form for the named families."""

    @staticmethod
    def constant_centrality(graph: Graph) -> EdgeCentrality:
        return EdgeCentrality.for_graph(graph, [1.0 / graph.edge_count] * graph.edge_count)

    @staticmethod
    def betweenness_centrality(graph: Graph) -> EdgeCentrality:
        """Average over unordered pairs of the fraction of geodesics crossing each edge."""
        counts = GeodesicCounter.geodesic_counts(graph)
        totals = [Fraction(0)] * graph.edge_count
        for (s, t), pair in counts.pairs.items():
            for edge, through in enumerate(pair.through):
                if through:
                    totals[edge] += Fraction(through, pair.sigma)
        c = counts.pair_count
        return EdgeCentrality.for_graph(graph, [float(total / c) for total in totals])

    @staticmethod
    def spanning_tree_centrality(graph: Graph) -> EdgeCentrality:
        """Share of spanning trees containing each edge, from exact determinant counts."""
        total = SpanningTreeCounter.count_spanning_trees(graph)
        values = [
            float(Fraction(SpanningTreeCounter.count_spanning_trees_with_edge(graph, edge), total))
            for edge in range(graph.edge_count)
        ]
        logger.info(f"Spanning-tree centrality over {humanize.intcomma(total)} spanning trees")
        return EdgeCentrality.for_graph(graph, values)

    @staticmethod
    def family_centrality(graph: Graph, family: SubtreeFamily) -> EdgeCentrality:
        """Closed-form centrality of a named family."""
        if family is SubtreeFamily.SINGLE_EDGE_UNIFORM:
            return CentralityCalculator.constant_centrality(graph)
        if family is SubtreeFamily.GEODESIC_PAIRS:
            return CentralityCalculator.betweenness_centrality(graph)
        return CentralityCalculator.spanning_tree_centrality(graph)

    @staticmethod
    def centrality_from_eta(graph: Graph, eta: SubtreeDistribution) -> EdgeCentrality:
        """The map phi_G: sum of the probabilities of the subtrees containing each edge."""
        if not eta.is_explicit:
            raise DistributionValidationError("centrality_from_eta needs an explicit distribution")
        columns: List[List[float]] = [[] for _ in range(graph.edge_count)]
        for subset, prob in eta.atoms:
            if not GraphInspector.is_subtree(graph, subset):
                raise DistributionValidationError(f"atom {subset} is not a subtree of the graph")
            for edge in subset:
                columns[edge].append(prob)
        values = [min(1.0, math.fsum(col)) for col in columns]
        return EdgeCentrality.for_graph(graph, values)

    @staticmethod
    def eta_for_family(graph: Graph, family: SubtreeFamily,
                       limit: int = DEFAULT_ENUMERATION_LIMIT) -> SubtreeDistribution:
        """Materialise a named family as explicit atoms."""
        atoms: Dict[EdgeSubset, float] = OrderedDict()
        if family is SubtreeFamily.SINGLE_EDGE_UNIFORM:
            for edge in range(graph.edge_count):
                atoms[(edge,)] = 1.0 / graph.edge_count
        elif family is SubtreeFamily.GEODESIC_PAIRS:
            # Two-step sampling: uniform unordered pair, then uniform geodesic of that pair.
            c = graph.node_count * (graph.node_count - 1) // 2
            count = 0
            for s in range(graph.node_count):
                for t in range(s + 1, graph.node_count):
                    paths = GeodesicCounter.enumerate_geodesics(graph, s, t)
                    count += len(paths)
                    if count > limit:
                        raise LimitExceededError(f"more than {humanize.intcomma(limit)} geodesic paths")
                    for path in paths:
                        atoms[path] = atoms.get(path, 0.0) + 1.0 / (c * len(paths))
        else:
            trees = SubtreeEnumerator.enumerate_spanning_trees(graph, limit)
            for tree in trees:
                atoms[tree] = 1.0 / len(trees)
        return DistributionValidator.validate_subtree_distribution(
            graph, atoms.items(), source=family.value)
