"""Joint distribution on a tree that realises every edge's optimal coupling at once."""
import logging
from collections import deque
from fractions import Fraction
from typing import Dict, List, Tuple

from config.settings import TREE_COUPLING_MAX_SUPPORT
from helpers.oracles.transport_oracle import TransportOracle
from helpers.processors.graph_inspector import GraphInspector
from models.graph import Graph
from models.joint_distribution import JointDistribution
from models.marginal import MarginalKind, MarginalSet, PairwiseCoupling
from utils.errors import LimitExceededError, MarginalValidationError
from utils.rational import rational_weights

logger = logging.getLogger(__name__)


class TreeCouplingBuilder:
    """Bayesian-network composition of child-given-parent conditionals along a rooted tree."""

    @staticmethod
    def orient(tree: Graph, root: int) -> List[Tuple[int, int]]:
        """(parent, child) pairs in BFS order from ``root``."""
        TreeCouplingBuilder.require_root(tree, root)
        seen = {root}
        order: List[Tuple[int, int]] = []
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in tree.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    order.append((v, w))
                    queue.append(w)
        return order

    @staticmethod
    def require_root(tree: Graph, root: int) -> None:
        if not 0 <= root < tree.node_count:
            raise ValueError(f"root {root} is not a node of the tree")

    @staticmethod
    def conditional(coupling: PairwiseCoupling, parent_weights: List[Fraction],
                    child_weights: List[Fraction]) -> List[List[Fraction]]:
        """Rows P(child | parent); a zero-mass parent atom falls back to the child's marginal."""
        rows = []
        for atom, row in enumerate(coupling.weights):
            mass = parent_weights[atom]
            if mass == 0:
                rows.append(list(child_weights))
            else:
                rows.append([Fraction(w) / mass for w in row])
        return rows

    @staticmethod
    def tree_coupling(tree: Graph, root: int, marginals: MarginalSet) -> JointDistribution:
        GraphInspector.require_tree(tree)
        TreeCouplingBuilder.require_root(tree, root)
        if marginals.kind is not MarginalKind.DISCRETE:
            raise MarginalValidationError("tree coupling needs discrete marginals")
        if marginals.node_count != tree.node_count:
            raise MarginalValidationError(
                f"tree has {tree.node_count} nodes but {marginals.node_count} marginals were given")
        size = marginals.size
        if size > TREE_COUPLING_MAX_SUPPORT:
            raise LimitExceededError(
                f"tree coupling supports at most {TREE_COUPLING_MAX_SUPPORT} atoms, got {size}")

        weights = [rational_weights(m.weights) for m in marginals.marginals]
        costs = TransportOracle.discrete_metric_costs(size)
        # Partial assignments keyed by (node, atom) pairs in the order nodes were attached.
        partial: Dict[Tuple[int, ...], Fraction] = {(atom,): w for atom, w in enumerate(weights[root]) if w != 0}
        attached = [root]
        for parent, child in TreeCouplingBuilder.orient(tree, root):
            _, coupling = TransportOracle.w2_oracle(
                marginals[parent].weights, marginals[child].weights, costs)
            rows = TreeCouplingBuilder.conditional(coupling, weights[parent], weights[child])
            slot = attached.index(parent)
            grown: Dict[Tuple[int, ...], Fraction] = {}
            for key, mass in partial.items():
                for atom, prob in enumerate(rows[key[slot]]):
                    if prob != 0:
                        grown[key + (atom,)] = mass * prob
            partial = grown
            attached.append(child)

        position = {node: slot for slot, node in enumerate(attached)}
        masses = {
            tuple(key[position[node]] for node in range(tree.node_count)): mass
            for key, mass in partial.items()
        }
        logger.debug(f"Tree coupling rooted at {root}: {len(masses)} atoms with positive mass")
        return JointDistribution(
            nodes=tuple(range(tree.node_count)),
            support_sizes=(size,) * tree.node_count,
            masses=masses,
        )
