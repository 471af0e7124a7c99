# services/theorem_verifier.py
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

import humanize
from tqdm import tqdm

from config.settings import (
    DEFAULT_ENUMERATION_LIMIT,
    DEFAULT_LP_GUARD,
    FAMILY_TOLERANCE,
    IDENTITY_TOLERANCE,
    SIMPLEX_TOLERANCE,
    TREE_CLAIM_MAX_NODES,
    TREE_CLAIM_MAX_SUPPORT,
    VERIFY_MAX_NODES,
)
from helpers.generators.instance_generator import InstanceGenerator
from helpers.oracles.assignment_oracle import AssignmentOracle
from helpers.oracles.multimarginal_oracle import MultimarginalOracle
from helpers.oracles.transport_oracle import TransportOracle
from helpers.processors.centrality_calculator import CentralityCalculator
from helpers.processors.total_variation import TotalVariation
from helpers.processors.tree_coupling import TreeCouplingBuilder
from helpers.processors.wasserstein_calculator import WassersteinCalculator
from models.centrality import SubtreeFamily
from models.graph import Graph
from models.marginal import GaussianMarginal, MarginalSet
from services.base_service import BaseService
from utils.errors import LimitExceededError

QUANTILE_CHECK_SIZE = 10**4
QUANTILE_RELATIVE_TOLERANCE = 2e-2


@dataclass
class VerificationReport:
    """Largest deviation seen by a suite and every check that broke its tolerance."""
    suite: str
    tolerance: float
    checks: int = 0
    max_deviation: float = 0.0
    failures: List[str] = field(default_factory=list)

    def record(self, label: str, deviation: float, tolerance: Optional[float] = None) -> None:
        limit = self.tolerance if tolerance is None else tolerance
        self.checks += 1
        self.max_deviation = max(self.max_deviation, deviation)
        if not deviation <= limit:
            self.failures.append(f"{label}: deviation {deviation:.3e} > {limit:.1e}")

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def describe(self) -> str:
        mantissa, exponent = f"{self.max_deviation:.1e}".split("e")
        return f"{self.suite}: {self.checks} checks, max deviation {mantissa}e{int(exponent)} {self.status}"

    def summary_line(self) -> str:
        return (f"suite={self.suite} checks={self.checks} max_deviation={self.max_deviation!r} "
                f"tolerance={self.tolerance!r} status={self.status}")


@dataclass(frozen=True)
class ProxyRow:
    name: str
    value: float


class VerifierService(BaseService):
    """Randomised consistency suites backed by the brute-force oracles."""

    def __init__(self, show_progress: bool = False):
        super().__init__()
        self.show_progress = show_progress

    def initialize(self) -> None:
        """No initialization needed for the verifier."""
        pass

    def _trials(self, trials: int, desc: str):
        return tqdm(range(trials), desc=desc, disable=not self.show_progress, leave=False)

    def verify_theorem1(self, graph: Graph, trials: int, seed: int,
                        tolerance: float = IDENTITY_TOLERANCE, support: int = 2,
                        use_lp: bool = True, limit: int = DEFAULT_ENUMERATION_LIMIT,
                        guard: int = DEFAULT_LP_GUARD) -> VerificationReport:
        """Compare <phi(eta), W> with the subtree expectation on random (eta, N) pairs."""
        if graph.node_count > VERIFY_MAX_NODES:
            raise LimitExceededError(
                f"identity checks enumerate subtrees and need n <= {VERIFY_MAX_NODES}, got {graph.node_count}")
        report = VerificationReport("identity", tolerance)
        generator = InstanceGenerator(seed)
        try:
            for family in SubtreeFamily:
                eta = CentralityCalculator.eta_for_family(graph, family, limit)
                closed = CentralityCalculator.family_centrality(graph, family)
                induced = CentralityCalculator.centrality_from_eta(graph, eta)
                gap = max(abs(a - b) for a, b in zip(closed.values, induced.values))
                report.record(f"family {family.value} centrality", gap, FAMILY_TOLERANCE)
                marginals = generator.discrete_marginals(graph.node_count, support)
                report.record(f"family {family.value} identity",
                              TotalVariation.identity_gap(graph, eta, marginals))

            for trial in self._trials(trials, "identity"):
                eta = generator.random_eta(graph, limit=limit)
                marginals = generator.discrete_marginals(graph.node_count, support)
                centrality = CentralityCalculator.centrality_from_eta(graph, eta)
                lhs = TotalVariation.tv_eta(graph, centrality, marginals)
                rhs = TotalVariation.tv_eta_direct(graph, eta, marginals)
                report.record(f"trial {trial} closed form", abs(lhs - rhs))
                if use_lp:
                    lp = TotalVariation.tv_eta_direct(graph, eta, marginals, use_lp_oracle=True, guard=guard)
                    report.record(f"trial {trial} multimarginal LP", abs(lhs - lp))
        except Exception as e:
            self.handle_error(e, {"suite": report.suite, "seed": seed})
            raise
        self.logger.info(report.describe())
        return report

    def verify_tree_claim(self, trials: int, seed: int, max_nodes: int = TREE_CLAIM_MAX_NODES,
                          max_support: int = TREE_CLAIM_MAX_SUPPORT,
                          tolerance: float = IDENTITY_TOLERANCE) -> VerificationReport:
        """On random trees the LP optimum equals the sum of edge W^2 and the coupling attains it.

        Each trial also checks the all-edges lower bound on a cycle.
        """
        if max_nodes > TREE_CLAIM_MAX_NODES or max_support > TREE_CLAIM_MAX_SUPPORT:
            raise LimitExceededError(
                f"tree-claim suite needs n <= {TREE_CLAIM_MAX_NODES} and N <= {TREE_CLAIM_MAX_SUPPORT}")
        report = VerificationReport("tree-claim", tolerance)
        generator = InstanceGenerator(seed)
        rng = generator.rng
        try:
            for trial in self._trials(trials, "tree claim"):
                n = int(rng.integers(2, max_nodes + 1))
                size = int(rng.integers(2, max_support + 1))
                tree = generator.random_tree(n)
                marginals = generator.discrete_marginals(n, size)

                exact = TotalVariation.tv_tree_marginals(tree, marginals, exact=True)
                lp_value, lp_joint = MultimarginalOracle.lp_min_tv_marginals(tree, marginals)
                # Both sides are rationals; any difference at all is a failure.
                report.record(f"trial {trial} LP vs edge sum", abs(float(lp_value - exact)), 0.0)
                report.record(f"trial {trial} LP joint marginals", self._marginal_gap(lp_joint, marginals),
                              SIMPLEX_TOLERANCE)

                root = int(rng.integers(0, n))
                joint = TreeCouplingBuilder.tree_coupling(tree, root, marginals)
                tables = TotalVariation.discrete_metric_tables(tree, size)
                attained = TotalVariation.tv_joint_discrete(tree, joint, tables)
                report.record(f"trial {trial} coupling value", abs(attained - float(exact)))
                report.record(f"trial {trial} coupling marginals", self._marginal_gap(joint, marginals),
                              SIMPLEX_TOLERANCE)

                cycle = generator.cycle_graph(max(3, n))
                cycle_marginals = generator.discrete_marginals(cycle.node_count, size)
                edge_sum = math.fsum(WassersteinCalculator.wasserstein_edge_vector(cycle, cycle_marginals).values)
                cycle_value, _ = MultimarginalOracle.lp_min_tv_marginals(cycle, cycle_marginals)
                report.record(f"trial {trial} cycle lower bound", max(0.0, edge_sum - float(cycle_value)),
                              SIMPLEX_TOLERANCE)
        except Exception as e:
            self.handle_error(e, {"suite": report.suite, "seed": seed})
            raise
        self.logger.info(report.describe())
        return report

    def verify_wasserstein_oracles(self, trials: int, seed: int, max_samples: int = 6,
                                   max_support: int = 4,
                                   tolerance: float = IDENTITY_TOLERANCE) -> VerificationReport:
        """Closed forms against the permutation and transport-LP oracles."""
        report = VerificationReport("wasserstein", tolerance)
        generator = InstanceGenerator(seed)
        rng = generator.rng
        try:
            for trial in self._trials(trials, "wasserstein"):
                size = int(rng.integers(1, max_samples + 1))
                pair = generator.empirical_marginals(2, size)
                closed = WassersteinCalculator.w2_empirical(pair[0], pair[1])
                brute = AssignmentOracle.assignment_oracle_empirical(pair[0].samples, pair[1].samples)
                report.record(f"trial {trial} empirical", abs(closed - brute))

                support = int(rng.integers(2, max_support + 1))
                pmfs = generator.discrete_marginals(2, support)
                closed = WassersteinCalculator.w2_discrete(pmfs[0], pmfs[1])
                value, _ = TransportOracle.w2_oracle(pmfs[0].weights, pmfs[1].weights,
                                                     TransportOracle.discrete_metric_costs(support))
                report.record(f"trial {trial} discrete", abs(closed - float(value)))
        except Exception as e:
            self.handle_error(e, {"suite": report.suite, "seed": seed})
            raise
        self.logger.info(report.describe())
        return report

    def verify_gaussian_quantile(self, seed: int, size: int = QUANTILE_CHECK_SIZE,
                                 tolerance: float = QUANTILE_RELATIVE_TOLERANCE) -> VerificationReport:
        """Relative error of W2^2 between two quantile-discretised Gaussians and the closed form."""
        report = VerificationReport("gaussian-quantile", tolerance)
        rng = InstanceGenerator(seed).rng
        try:
            means = rng.normal(0.0, 1.0, size=2)
            stds = rng.uniform(0.5, 1.5, size=2)
            a, b = (GaussianMarginal(float(m), float(s)) for m, s in zip(means, stds))
            exact = WassersteinCalculator.w2_gaussian(a, b)
            approx = WassersteinCalculator.w2_empirical(
                WassersteinCalculator.gaussian_quantile_marginal(a.mean, a.std, size),
                WassersteinCalculator.gaussian_quantile_marginal(b.mean, b.std, size))
            relative = abs(approx - exact) / exact if exact > 0 else abs(approx)
            report.record("gaussian quantile discretisation", relative)
        except Exception as e:
            self.handle_error(e, {"suite": report.suite, "seed": seed})
            raise
        self.logger.info(report.describe())
        return report

    def proxy_report(self, graph: Graph, marginals: MarginalSet) -> List[ProxyRow]:
        """T_G by the multimarginal LP next to T_eta of each named family. Nothing is asserted."""
        value, _ = MultimarginalOracle.lp_min_tv_marginals(graph, marginals)
        rows = [ProxyRow("multimarginal-lp", float(value))]
        for family in SubtreeFamily:
            centrality = CentralityCalculator.family_centrality(graph, family)
            rows.append(ProxyRow(family.value, TotalVariation.tv_eta(graph, centrality, marginals)))
        self.logger.info(f"Proxy report over {humanize.intcomma(marginals.size ** graph.node_count)} joint atoms")
        return rows

    @staticmethod
    def _marginal_gap(joint, marginals: MarginalSet) -> float:
        gap = 0.0
        for position, node in enumerate(joint.nodes):
            for got, want in zip(joint.marginal(position), marginals[node].weights):
                gap = max(gap, abs(float(Fraction(got)) - want))
        return gap
