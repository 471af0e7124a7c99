"""Exact minimum total variation over all joints with prescribed discrete marginals."""
import itertools
import logging
from fractions import Fraction
from typing import List, Tuple

import humanize

from config.settings import DEFAULT_LP_GUARD
from helpers.oracles.rational_simplex import RationalSimplex
from models.graph import Graph
from models.joint_distribution import JointDistribution
from models.lp_instance import LpInstance
from models.marginal import MarginalKind, MarginalSet
from utils.errors import LimitExceededError, MarginalValidationError, OracleError
from utils.rational import rational_weights

logger = logging.getLogger(__name__)


class MultimarginalOracle:
    """The coupling-polytope LP behind the definition of T_G(N), for tiny instances."""

    @staticmethod
    def build_instance(graph: Graph, marginals: MarginalSet,
                       guard: int = DEFAULT_LP_GUARD) -> LpInstance:
        if marginals.kind is not MarginalKind.DISCRETE:
            raise MarginalValidationError("the multimarginal LP needs discrete marginals")
        if marginals.node_count != graph.node_count:
            raise MarginalValidationError(
                f"graph has {graph.node_count} nodes but {marginals.node_count} marginals were given")
        size = marginals.size
        variable_count = size ** graph.node_count
        if variable_count > guard:
            raise LimitExceededError(
                f"product support has {humanize.intcomma(variable_count)} atoms, guard is {humanize.intcomma(guard)}")

        tuples: List[Tuple[int, ...]] = list(itertools.product(range(size), repeat=graph.node_count))
        objective = [Fraction(sum(1 for i, j in graph.edges if key[i] != key[j])) for key in tuples]
        weights = [rational_weights(m.weights) for m in marginals.marginals]

        constraints: List[List[Fraction]] = []
        rhs: List[Fraction] = []
        for node in range(graph.node_count):
            # Each node's atoms sum to the total mass; after the first node one row is implied.
            atoms = range(size) if node == 0 else range(size - 1)
            for atom in atoms:
                constraints.append([Fraction(1) if key[node] == atom else Fraction(0) for key in tuples])
                rhs.append(weights[node][atom])
        return LpInstance(objective=objective, constraints=constraints, rhs=rhs, labels=tuples)

    @staticmethod
    def lp_min_tv_marginals(graph: Graph, marginals: MarginalSet,
                            guard: int = DEFAULT_LP_GUARD) -> Tuple[Fraction, JointDistribution]:
        """Exact optimum of the expected edge cost over Gamma(N), and an optimal joint."""
        instance = MultimarginalOracle.build_instance(graph, marginals, guard)
        solution = RationalSimplex().solve(instance)
        if not solution.is_optimal:
            raise OracleError(f"multimarginal LP returned status {solution.status} for valid marginals")
        masses = {key: mass for key, mass in zip(instance.labels, solution.x) if mass != 0}
        joint = JointDistribution(
            nodes=tuple(range(graph.node_count)),
            support_sizes=(marginals.size,) * graph.node_count,
            masses=masses,
        )
        logger.debug(f"Multimarginal LP: {instance.variable_count} variables, "
                     f"{solution.pivots} pivots, value {solution.value}")
        return solution.value, joint
