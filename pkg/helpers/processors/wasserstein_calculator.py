"""Closed-form squared 2-Wasserstein distances between node marginals."""
import math
from fractions import Fraction

import numpy as np
from scipy.stats import norm

from models.graph import EdgeVector, Graph
from models.marginal import (
    DiscreteMarginal,
    EmpiricalMarginal,
    GaussianMarginal,
    Marginal,
    MarginalSet,
)
from utils.errors import MarginalValidationError
from utils.rational import rational_weights


class WassersteinCalculator:
    """W(mu_i, mu_j)^2 for 1-D gaussians, sorted empiricals and discrete-metric pmfs."""

    @staticmethod
    def w2_gaussian(a: GaussianMarginal, b: GaussianMarginal) -> float:
        return (a.mean - b.mean) ** 2 + (a.std - b.std) ** 2

    @staticmethod
    def w2_empirical(a: EmpiricalMarginal, b: EmpiricalMarginal) -> float:
        """Mean squared difference of index-aligned sorted samples (monotone coupling)."""
        if a.size != b.size:
            raise MarginalValidationError(f"empirical marginals need equal N, got {a.size} and {b.size}")
        diff = np.asarray(a.samples) - np.asarray(b.samples)
        return float(np.dot(diff, diff) / a.size)

    @staticmethod
    def w2_discrete(a: DiscreteMarginal, b: DiscreteMarginal) -> float:
        """Half the l1 distance of the weight vectors (0/1 metric, so d^2 = d)."""
        if a.size != b.size:
            raise MarginalValidationError(f"discrete marginals need a shared support, got sizes {a.size} and {b.size}")
        return 0.5 * math.fsum(abs(p - q) for p, q in zip(a.weights, b.weights))

    @staticmethod
    def w2_discrete_exact(a: DiscreteMarginal, b: DiscreteMarginal) -> Fraction:
        if a.size != b.size:
            raise MarginalValidationError(f"discrete marginals need a shared support, got sizes {a.size} and {b.size}")
        p, q = rational_weights(a.weights), rational_weights(b.weights)
        return sum((abs(x - y) for x, y in zip(p, q)), Fraction(0)) / 2

    @staticmethod
    def w2(a: Marginal, b: Marginal) -> float:
        """Dispatch on the marginal kind; mixing kinds is an error."""
        if isinstance(a, GaussianMarginal) and isinstance(b, GaussianMarginal):
            return WassersteinCalculator.w2_gaussian(a, b)
        if isinstance(a, EmpiricalMarginal) and isinstance(b, EmpiricalMarginal):
            return WassersteinCalculator.w2_empirical(a, b)
        if isinstance(a, DiscreteMarginal) and isinstance(b, DiscreteMarginal):
            return WassersteinCalculator.w2_discrete(a, b)
        raise MarginalValidationError(
            f"no closed form between {type(a).__name__} and {type(b).__name__}")

    @staticmethod
    def wasserstein_edge_vector(graph: Graph, marginals: MarginalSet) -> EdgeVector:
        """W_N(e) = W(mu_i, mu_j)^2 for every edge e = (i, j), in canonical order."""
        if marginals.node_count != graph.node_count:
            raise MarginalValidationError(
                f"graph has {graph.node_count} nodes but {marginals.node_count} marginals were given")
        values = [WassersteinCalculator.w2(marginals[i], marginals[j]) for i, j in graph.edges]
        return EdgeVector.for_graph(graph, values)

    @staticmethod
    def gaussian_quantile_marginal(mean: float, std: float, size: int) -> EmpiricalMarginal:
        """N-point discretisation of N(mean, std) at the quantiles (k - 1/2) / N."""
        if size < 1:
            raise ValueError("size must be positive")
        levels = (np.arange(size) + 0.5) / size
        samples = mean + std * norm.ppf(levels)
        return EmpiricalMarginal(tuple(float(x) for x in np.sort(samples)))
