"""Exact optimal transport between two finite-support marginals."""
import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from config.settings import W2_ORACLE_MAX_SUPPORT
from helpers.oracles.rational_simplex import RationalSimplex
from models.lp_instance import LpInstance
from models.marginal import PairwiseCoupling
from utils.errors import LimitExceededError, OracleError
from utils.rational import rational_weights, rationalize

logger = logging.getLogger(__name__)


class TransportOracle:
    """min over couplings of sum cost[a][b] * pi[a][b], solved as an exact LP."""

    @staticmethod
    def w2_oracle(a: Sequence[float], b: Sequence[float],
                  cost: Sequence[Sequence[float]]) -> Tuple[Fraction, PairwiseCoupling]:
        """Optimal cost and an optimal coupling.

        ``cost`` holds squared distances between the supports (rows follow ``a``).
        Weights are rationalised and renormalised, so the returned coupling's
        row and column sums equal those rational weights exactly.
        """
        rows, cols = len(a), len(b)
        if rows > W2_ORACLE_MAX_SUPPORT or cols > W2_ORACLE_MAX_SUPPORT:
            raise LimitExceededError(
                f"transport oracle supports at most {W2_ORACLE_MAX_SUPPORT} atoms per side, got {rows}x{cols}")
        if len(cost) != rows or any(len(row) != cols for row in cost):
            raise ValueError(f"cost matrix must be {rows}x{cols}")

        p = rational_weights(a)
        q = rational_weights(b)
        variables = [(i, j) for i in range(rows) for j in range(cols)]
        objective = [rationalize(cost[i][j]) for i, j in variables]

        constraints: List[List[Fraction]] = []
        rhs: List[Fraction] = []
        for i in range(rows):
            constraints.append([Fraction(1) if vi == i else Fraction(0) for vi, _ in variables])
            rhs.append(p[i])
        # The last column constraint is implied by the others and total mass 1.
        for j in range(cols - 1):
            constraints.append([Fraction(1) if vj == j else Fraction(0) for _, vj in variables])
            rhs.append(q[j])

        solution = RationalSimplex().solve(LpInstance(objective, constraints, rhs, labels=variables))
        if not solution.is_optimal:
            raise OracleError(f"transport LP returned status {solution.status}")

        plan = [[Fraction(0)] * cols for _ in range(rows)]
        for (i, j), mass in zip(variables, solution.x):
            plan[i][j] = mass
        return solution.value, PairwiseCoupling(tuple(tuple(row) for row in plan))

    @staticmethod
    def discrete_metric_costs(size: int) -> List[List[int]]:
        """Squared 0/1 metric on a finite label set."""
        return [[0 if i == j else 1 for j in range(size)] for i in range(size)]

    @staticmethod
    def squared_euclidean_costs(xs: Sequence[float], ys: Sequence[float]) -> List[List[float]]:
        return [[(x - y) ** 2 for y in ys] for x in xs]
