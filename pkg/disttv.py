"""Command-line entry point for distributional-signal total variation on graphs."""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

import pandas as pd
from pydantic import ValidationError

from config.settings import (
    DEFAULT_ENUMERATION_LIMIT,
    DEFAULT_LP_GUARD,
    EXIT_GUARD,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    IDENTITY_TOLERANCE,
    OUTPUT_FORMATS,
    load_env_vars,
)
from helpers.formatters.table_formatter import TableFormatter
from helpers.generators.instance_generator import GRAPH_FAMILIES, InstanceGenerator
from helpers.processors.centrality_calculator import CentralityCalculator
from helpers.processors.total_variation import TotalVariation
from helpers.processors.wasserstein_calculator import WassersteinCalculator
from models.centrality import EdgeCentrality
from models.graph import Graph
from models.marginal import MarginalKind
from models.run_config import CLI_FAMILIES, RunConfig
from services.base_service import BaseService
from services.graph_loader import GraphLoaderService
from services.marginal_loader import MarginalLoaderService
from services.theorem_verifier import VerifierService
from utils.errors import DistTvError, LimitExceededError
from utils.logging_config import setup_logging


class DistTvCli(BaseService):
    def __init__(self, config: RunConfig):
        super().__init__()
        self.config = config
        self.initialize()

    def initialize(self) -> None:
        """Initialize loaders and the output formatter."""
        self.graph_loader = GraphLoaderService()
        self.marginal_loader = MarginalLoaderService()
        self.formatter = TableFormatter(self.config.output_format)

    def run(self) -> int:
        handler = getattr(self, f"cmd_{self.config.command}")
        return handler()

    def _graph(self) -> Graph:
        return self.graph_loader.load_graph(self.config.graph)

    def _centrality(self, graph: Graph) -> EdgeCentrality:
        cfg = self.config
        if cfg.subtree_family is not None:
            return CentralityCalculator.family_centrality(graph, cfg.subtree_family)
        if cfg.eta is not None:
            eta = self.marginal_loader.load_eta(cfg.eta, graph)
            return CentralityCalculator.centrality_from_eta(graph, eta)
        return self.marginal_loader.load_centrality(cfg.centrality, graph)

    def _emit(self, text: str) -> None:
        sys.stdout.write(text)

    def cmd_centrality(self) -> int:
        graph = self._graph()
        centrality = self._centrality(graph)
        frame = pd.DataFrame({
            "i": [i for i, _ in graph.edges],
            "j": [j for _, j in graph.edges],
            "centrality": list(centrality.values),
        })
        self._emit(self.formatter.frame(frame))
        return EXIT_OK

    def cmd_wasserstein(self) -> int:
        graph = self._graph()
        marginals = self.marginal_loader.load_marginals(self.config.marginals)
        w = WassersteinCalculator.wasserstein_edge_vector(graph, marginals)
        frame = pd.DataFrame({
            "i": [i for i, _ in graph.edges],
            "j": [j for _, j in graph.edges],
            "wasserstein": list(w.values),
        })
        self._emit(self.formatter.frame(frame))
        return EXIT_OK

    def cmd_tv(self) -> int:
        graph = self._graph()
        marginals = self.marginal_loader.load_marginals(self.config.marginals)
        centrality = self._centrality(graph)
        rows = TotalVariation.tv_decomposition(graph, centrality, marginals)
        frame = pd.DataFrame({
            "i": [row.edge[0] for row in rows],
            "j": [row.edge[1] for row in rows],
            "centrality": [row.centrality for row in rows],
            "wasserstein": [row.wasserstein for row in rows],
            "contribution": [row.contribution for row in rows],
        })
        self._emit(self.formatter.scalar("tv", TotalVariation.tv_eta(graph, centrality, marginals)))
        self._emit(self.formatter.frame(frame))
        return EXIT_OK

    def cmd_verify(self) -> int:
        cfg = self.config
        graph = self._graph()
        verifier = VerifierService(show_progress=sys.stderr.isatty())
        reports = [
            verifier.verify_theorem1(graph, cfg.trials, cfg.seed, cfg.tolerance, cfg.support,
                                     cfg.use_lp, cfg.limit, cfg.guard),
            verifier.verify_tree_claim(cfg.trials, cfg.seed, tolerance=cfg.tolerance),
            verifier.verify_wasserstein_oracles(cfg.trials, cfg.seed, tolerance=cfg.tolerance),
            verifier.verify_gaussian_quantile(cfg.seed),
        ]
        if cfg.output_format == "table":
            self._emit("".join(report.describe() + "\n" for report in reports))
            self._emit("".join(report.summary_line() + "\n" for report in reports))
        else:
            self._emit(self.formatter.records([
                {"suite": r.suite, "checks": r.checks, "max_deviation": r.max_deviation,
                 "tolerance": r.tolerance, "status": r.status}
                for r in reports
            ]))

        if cfg.marginals is not None:
            marginals = self.marginal_loader.load_marginals(cfg.marginals)
            if marginals.kind is MarginalKind.DISCRETE:
                rows = verifier.proxy_report(graph, marginals)
                self._emit(self.formatter.records([{"proxy": row.name, "value": row.value} for row in rows]))
            else:
                self.logger.warning("Proxy report needs discrete marginals; skipped")

        failed = [report for report in reports if not report.passed]
        for report in failed:
            for failure in report.failures:
                self.logger.error(f"{report.suite}: {failure}")
        return EXIT_VERIFICATION_FAILED if failed else EXIT_OK

    def cmd_gen(self) -> int:
        cfg = self.config
        generator = InstanceGenerator(cfg.seed)
        node_count = cfg.n
        if cfg.graph_family is not None:
            graph = generator.graph(cfg.graph_family, cfg.n, cfg.p)
            self._write(cfg.out_graph, GraphLoaderService.serialize_graph(graph))
            node_count = graph.node_count
        if cfg.marginal_kind is not None:
            marginals = generator.marginals(cfg.marginal_kind, node_count, cfg.support, cfg.samples)
            self._write(cfg.out_marginals, MarginalLoaderService.serialize_marginals(marginals))
        return EXIT_OK

    def _write(self, path: Optional[Path], text: str) -> None:
        if path is None:
            self._emit(text)
            return
        path.write_text(text)
        self.logger.info(f"Wrote {path}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, default="table")
    common.add_argument("--log-level", default=None, help="overrides DISTTV_LOG_LEVEL")
    common.add_argument("--limit", type=int, default=DEFAULT_ENUMERATION_LIMIT, help="enumeration limit")
    common.add_argument("--guard", type=int, default=DEFAULT_LP_GUARD, help="multimarginal LP variable guard")

    parser = argparse.ArgumentParser(prog="disttv", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    families = sorted(CLI_FAMILIES)

    p = sub.add_parser("centrality", parents=[common], help="per-edge centrality of a subtree distribution")
    p.add_argument("--graph", type=Path, required=True)
    p.add_argument("--family", choices=families)
    p.add_argument("--eta", type=Path)

    p = sub.add_parser("wasserstein", parents=[common], help="per-edge squared Wasserstein distances")
    p.add_argument("--graph", type=Path, required=True)
    p.add_argument("--marginals", type=Path, required=True)

    p = sub.add_parser("tv", parents=[common], help="total variation and its per-edge decomposition")
    p.add_argument("--graph", type=Path, required=True)
    p.add_argument("--marginals", type=Path, required=True)
    p.add_argument("--family", choices=families)
    p.add_argument("--eta", type=Path)
    p.add_argument("--centrality", type=Path)

    p = sub.add_parser("verify", parents=[common], help="randomised identity and oracle checks")
    p.add_argument("--graph", type=Path, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float, default=IDENTITY_TOLERANCE)
    p.add_argument("--support", type=int, default=2)
    p.add_argument("--no-lp", dest="use_lp", action="store_false")
    p.add_argument("--marginals", type=Path, help="discrete marginals for the proxy report")

    p = sub.add_parser("gen", parents=[common], help="seeded random graph and marginal files")
    p.add_argument("--family", dest="graph_family", choices=GRAPH_FAMILIES)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--marginals", dest="marginal_kind", choices=[k.value for k in MarginalKind])
    p.add_argument("--support", type=int, default=2)
    p.add_argument("--samples", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-graph", type=Path)
    p.add_argument("--out-marginals", type=Path)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    load_env_vars()
    args = vars(build_parser().parse_args(argv))
    logger = setup_logging(args.pop("log_level"))
    try:
        config = RunConfig(**args)
    except ValidationError as e:
        for error in e.errors():
            logger.error(f"usage: {error['msg']}")
        return EXIT_USAGE
    try:
        return DistTvCli(config).run()
    except LimitExceededError as e:
        logger.error(f"guard exceeded: {e}")
        return EXIT_GUARD
    except (ValueError, OSError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except DistTvError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_VERIFICATION_FAILED


if __name__ == "__main__":
    sys.exit(main())
