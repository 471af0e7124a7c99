"""Probe signals that pin down the centrality map, and recovery from probe values."""
import logging
from typing import List, Sequence

import numpy as np

from config.settings import IDENTITY_TOLERANCE, PROBE_RCOND_THRESHOLD, PROBE_RETRY_BUDGET
from helpers.processors.total_variation import TotalVariation
from models.centrality import EdgeCentrality
from models.graph import Graph
from models.marginal import dirac_marginals
from models.probe_system import ProbeStatus, ProbeSystem
from utils.errors import ProbeDegeneracyError

logger = logging.getLogger(__name__)


class ProbeSolver:
    """Builds Y with rows ((x_k - x_l)^2)_{(k,l) in E} and solves Y C = t."""

    @staticmethod
    def probe_rows(graph: Graph, signals: np.ndarray) -> np.ndarray:
        heads = np.array([i for i, _ in graph.edges], dtype=int)
        tails = np.array([j for _, j in graph.edges], dtype=int)
        return (signals[:, heads] - signals[:, tails]) ** 2

    @staticmethod
    def _reciprocal_condition(matrix: np.ndarray) -> float:
        if not np.all(np.any(matrix != 0, axis=1)):
            return 0.0
        with np.errstate(all="ignore"):
            cond = np.linalg.cond(matrix)
        if not np.isfinite(cond) or cond == 0:
            return 0.0
        return float(1.0 / cond)

    @staticmethod
    def probe_system_from_signals(graph: Graph, signals: Sequence[Sequence[float]]) -> ProbeSystem:
        """Probe system for caller-supplied signals (one per row, m rows)."""
        x = np.asarray(signals, dtype=float)
        if x.shape != (graph.edge_count, graph.node_count):
            raise ValueError(f"expected {graph.edge_count} probes of length {graph.node_count}, got shape {x.shape}")
        y = ProbeSolver.probe_rows(graph, x)
        rcond = ProbeSolver._reciprocal_condition(y)
        status = ProbeStatus.INVERTIBLE if rcond > PROBE_RCOND_THRESHOLD else ProbeStatus.SINGULAR
        return ProbeSystem(signals=x, matrix=y, status=status, rcond=rcond)

    @staticmethod
    def probe_matrix(graph: Graph, seed: int, retries: int = PROBE_RETRY_BUDGET) -> ProbeSystem:
        """Draw m uniform [0, 1) probes until Y is well conditioned."""
        rng = np.random.default_rng(seed)
        m, n = graph.edge_count, graph.node_count
        for attempt in range(1, retries + 1):
            x = rng.random((m, n))
            system = ProbeSolver.probe_system_from_signals(graph, x)
            if system.is_invertible:
                logger.info(f"Probe system accepted on attempt {attempt} (rcond={system.rcond:.3e})")
                return ProbeSystem(x, system.matrix, system.status, system.rcond, attempts=attempt)
            logger.warning(f"Probe draw {attempt} rejected (rcond={system.rcond:.3e})")
        raise ProbeDegeneracyError(f"no well-conditioned probe system after {retries} draws")

    @staticmethod
    def probe_tv_values(graph: Graph, probes: ProbeSystem, centrality: EdgeCentrality) -> List[float]:
        """T_eta at the Dirac signal of every probe, through the inner-product identity."""
        return [TotalVariation.tv_eta(graph, centrality, dirac_marginals(x)) for x in probes.signals]

    @staticmethod
    def recover_centrality(graph: Graph, probes: ProbeSystem, tv_values: Sequence[float]) -> EdgeCentrality:
        if not probes.is_invertible:
            raise ProbeDegeneracyError(f"probe matrix is singular (rcond={probes.rcond:.3e})")
        t = np.asarray(tv_values, dtype=float)
        if t.shape != (graph.edge_count,):
            raise ValueError(f"expected {graph.edge_count} total-variation values, got {t.shape}")
        try:
            solution = np.linalg.solve(probes.matrix, t)
        except np.linalg.LinAlgError as e:
            raise ProbeDegeneracyError(f"probe matrix could not be inverted: {e}") from e
        if np.any(solution < -IDENTITY_TOLERANCE):
            raise ValueError("total-variation values do not come from a nonnegative centrality")
        return EdgeCentrality.for_graph(graph, np.clip(solution, 0.0, None).tolist())
