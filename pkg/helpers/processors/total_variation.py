"""Total-variation functionals for signals, joints, trees and subtree distributions."""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Mapping, Sequence, Tuple, Union

from config.settings import DEFAULT_LP_GUARD, IDENTITY_TOLERANCE
from helpers.oracles.multimarginal_oracle import MultimarginalOracle
from helpers.processors.centrality_calculator import CentralityCalculator
from helpers.processors.graph_inspector import GraphInspector
from helpers.processors.wasserstein_calculator import WassersteinCalculator
from models.centrality import EdgeCentrality, SubtreeDistribution
from models.graph import Edge, Graph
from models.joint_distribution import JointDistribution
from models.marginal import MarginalKind, MarginalSet
from utils.errors import DistributionValidationError, MarginalValidationError
from utils.parallel import ordered_map

logger = logging.getLogger(__name__)

CostTable = Sequence[Sequence[float]]


@dataclass(frozen=True)
class EdgeContribution:
    edge: Edge
    centrality: float
    wasserstein: float

    @property
    def contribution(self) -> float:
        return self.centrality * self.wasserstein


class TotalVariation:
    """Eq.-level functionals; everything here is a pure function of its inputs."""

    @staticmethod
    def tv_signal(graph: Graph, signal: Sequence[float]) -> float:
        """Sum over edges of squared endpoint differences."""
        if len(signal) != graph.node_count:
            raise ValueError(f"signal has length {len(signal)}, graph has {graph.node_count} nodes")
        return math.fsum((signal[i] - signal[j]) ** 2 for i, j in graph.edges)

    @staticmethod
    def discrete_metric_tables(graph: Graph, support_size: int) -> Mapping[Edge, CostTable]:
        """0/1 squared distances on a shared finite support, for every edge."""
        table = [[0.0 if a == b else 1.0 for b in range(support_size)] for a in range(support_size)]
        return {edge: table for edge in graph.edges}

    @staticmethod
    def tv_joint_discrete(graph: Graph, joint: JointDistribution,
                          metric: Mapping[Edge, CostTable]) -> float:
        """Expected signal total variation under a finite joint: sum of mass x edge costs."""
        if tuple(joint.nodes) != tuple(range(graph.node_count)):
            raise DistributionValidationError(
                f"joint is defined on nodes {joint.nodes}, expected all {graph.node_count} nodes")
        for i, j in graph.edges:
            table = metric.get((i, j))
            if table is None:
                raise DistributionValidationError(f"no squared-distance table for edge ({i}, {j})")
            if len(table) != joint.support_sizes[i] or any(len(r) != joint.support_sizes[j] for r in table):
                raise DistributionValidationError(f"squared-distance table for edge ({i}, {j}) has the wrong shape")
        terms = []
        for key in sorted(joint.masses):
            mass = float(joint.masses[key])
            if mass == 0.0:
                continue
            terms.append(mass * math.fsum(metric[(i, j)][key[i]][key[j]] for i, j in graph.edges))
        return math.fsum(terms)

    @staticmethod
    def tv_tree_marginals(tree: Graph, marginals: MarginalSet, exact: bool = False) -> Union[float, Fraction]:
        """Tree total variation: the sum of W^2 over tree edges.

        ``exact=True`` returns a Fraction for discrete marginals.
        """
        GraphInspector.require_tree(tree)
        if marginals.node_count != tree.node_count:
            raise MarginalValidationError(
                f"tree has {tree.node_count} nodes but {marginals.node_count} marginals were given")
        if exact:
            if marginals.kind is not MarginalKind.DISCRETE:
                raise MarginalValidationError("exact tree total variation needs discrete marginals")
            return sum((WassersteinCalculator.w2_discrete_exact(marginals[i], marginals[j])
                        for i, j in tree.edges), Fraction(0))
        return math.fsum(WassersteinCalculator.w2(marginals[i], marginals[j]) for i, j in tree.edges)

    @staticmethod
    def tv_decomposition(graph: Graph, centrality: EdgeCentrality,
                         marginals: MarginalSet) -> List[EdgeContribution]:
        if len(centrality) != graph.edge_count:
            raise ValueError(f"centrality has {len(centrality)} entries, graph has {graph.edge_count} edges")
        w = WassersteinCalculator.wasserstein_edge_vector(graph, marginals)
        return [EdgeContribution(edge, centrality[idx], w[idx]) for idx, edge in enumerate(graph.edges)]

    @staticmethod
    def tv_eta(graph: Graph, centrality: EdgeCentrality, marginals: MarginalSet) -> float:
        """Inner product of a centrality with the Wasserstein edge vector."""
        if len(centrality) != graph.edge_count:
            raise ValueError(f"centrality has {len(centrality)} entries, graph has {graph.edge_count} edges")
        return centrality.dot(WassersteinCalculator.wasserstein_edge_vector(graph, marginals))

    @staticmethod
    def tv_eta_direct(graph: Graph, eta: SubtreeDistribution, marginals: MarginalSet,
                      use_lp_oracle: bool = False, guard: int = DEFAULT_LP_GUARD) -> float:
        """Expectation over subtrees of the tree total variation of the restricted marginals.

        With ``use_lp_oracle`` each subtree term is the exact multimarginal LP
        minimum instead of the closed form (discrete marginals only).
        """
        if not eta.is_explicit:
            raise DistributionValidationError("tv_eta_direct needs an explicit distribution")
        if marginals.node_count != graph.node_count:
            raise MarginalValidationError(
                f"graph has {graph.node_count} nodes but {marginals.node_count} marginals were given")
        if use_lp_oracle and marginals.kind is not MarginalKind.DISCRETE:
            raise MarginalValidationError("the LP oracle handles discrete marginals only")

        def subtree_term(atom: Tuple[Tuple[int, ...], float]) -> float:
            subset, prob = atom
            tree, nodes = GraphInspector.subtree_as_graph(graph, subset)
            restricted = marginals.restrict(nodes)
            if use_lp_oracle:
                value, _ = MultimarginalOracle.lp_min_tv_marginals(tree, restricted, guard)
                return prob * float(value)
            return prob * TotalVariation.tv_tree_marginals(tree, restricted)

        # Index-ordered reduction keeps the result independent of the thread count.
        return math.fsum(ordered_map(subtree_term, eta.atoms))

    @staticmethod
    def identity_gap(graph: Graph, eta: SubtreeDistribution, marginals: MarginalSet) -> float:
        """|<phi_G(eta), W_N> - E_eta T_T(N)|; zero up to rounding for every eta and N."""
        centrality = CentralityCalculator.centrality_from_eta(graph, eta)
        gap = abs(TotalVariation.tv_eta(graph, centrality, marginals)
                  - TotalVariation.tv_eta_direct(graph, eta, marginals))
        if gap > IDENTITY_TOLERANCE:
            logger.warning(f"Inner-product identity off by {gap:.3e}")
        return gap
