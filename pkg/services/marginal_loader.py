# services/marginal_loader.py
import json
from pathlib import Path
from typing import Any, Dict, Union

import pandas as pd
from pydantic import ValidationError

from helpers.validators.distribution_validator import DistributionValidator
from models.centrality import EdgeCentrality, SubtreeDistribution
from models.file_schemas import EtaFileSchema, MarginalFileSchema
from models.graph import Graph
from models.marginal import (
    DiscreteMarginal,
    EmpiricalMarginal,
    GaussianMarginal,
    MarginalKind,
    MarginalSet,
)
from services.base_service import BaseService
from utils.errors import DistributionValidationError, MarginalValidationError


class MarginalLoaderService(BaseService):
    """Reads marginal-set, subtree-distribution and centrality files."""

    def __init__(self):
        super().__init__()

    def initialize(self) -> None:
        """No initialization needed for the loader."""
        pass

    def parse_marginals(self, text: str, source: str = "<marginals>") -> MarginalSet:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise MarginalValidationError(f"{source}:{e.lineno}: invalid JSON: {e.msg}") from e
        if not isinstance(data, dict) or not self.validate_input(data, ["kind"]):
            raise MarginalValidationError(f"{source}: expected a JSON object with a 'kind' field")
        try:
            schema = MarginalFileSchema.model_validate(data)
        except ValidationError as e:
            raise MarginalValidationError(f"{source}: {self._first_error(e)}") from e

        kind = MarginalKind(schema.kind)
        try:
            if kind is MarginalKind.GAUSSIAN:
                marginals = tuple(GaussianMarginal(g.mean, g.std) for g in schema.marginals)
                result = MarginalSet(kind, marginals)
            elif kind is MarginalKind.EMPIRICAL:
                result = MarginalSet(kind, tuple(EmpiricalMarginal.from_samples(s) for s in schema.samples))
            else:
                result = MarginalSet(kind, tuple(DiscreteMarginal(tuple(w)) for w in schema.weights),
                                     support=tuple(schema.support))
        except MarginalValidationError as e:
            raise MarginalValidationError(f"{source}: {e}") from e
        self.logger.info(f"Loaded {len(result)} {kind.value} marginals from {source}")
        return result

    def load_marginals(self, path: Union[str, Path]) -> MarginalSet:
        path = Path(path)
        try:
            text = path.read_text()
        except OSError as e:
            self.handle_error(e, {"path": str(path)})
            raise
        return self.parse_marginals(text, source=str(path))

    @staticmethod
    def marginals_to_dict(marginals: MarginalSet) -> Dict[str, Any]:
        if marginals.kind is MarginalKind.GAUSSIAN:
            return {"kind": "gaussian",
                    "marginals": [{"mean": m.mean, "std": m.std} for m in marginals.marginals]}
        if marginals.kind is MarginalKind.EMPIRICAL:
            return {"kind": "empirical", "samples": [list(m.samples) for m in marginals.marginals]}
        return {"kind": "discrete", "support": list(marginals.support),
                "weights": [list(m.weights) for m in marginals.marginals]}

    @staticmethod
    def serialize_marginals(marginals: MarginalSet) -> str:
        """Canonical JSON: sorted keys, 2-space indent, trailing newline."""
        return json.dumps(MarginalLoaderService.marginals_to_dict(marginals), indent=2, sort_keys=True) + "\n"

    def load_eta(self, path: Union[str, Path], graph: Graph) -> SubtreeDistribution:
        """Explicit subtree distribution from a JSON atom list."""
        path = Path(path)
        try:
            raw = json.loads(path.read_text())
            schema = EtaFileSchema.model_validate(raw)
        except OSError as e:
            self.handle_error(e, {"path": str(path)})
            raise
        except json.JSONDecodeError as e:
            raise DistributionValidationError(f"{path}:{e.lineno}: invalid JSON: {e.msg}") from e
        except ValidationError as e:
            raise DistributionValidationError(f"{path}: {self._first_error(e)}") from e
        eta = DistributionValidator.build_explicit(
            graph, [(atom.edges, atom.p) for atom in schema.root], source=str(path))
        self.logger.info(f"Loaded subtree distribution with {eta.support_size} atoms from {path}")
        return eta

    def load_centrality(self, path: Union[str, Path], graph: Graph) -> EdgeCentrality:
        """Centrality CSV with columns i, j, centrality (the csv output of `centrality`)."""
        path = Path(path)
        try:
            frame = pd.read_csv(path)
        except OSError as e:
            self.handle_error(e, {"path": str(path)})
            raise
        except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
            raise DistributionValidationError(f"{path}: unreadable centrality CSV: {e}") from e
        missing = {"i", "j", "centrality"} - set(frame.columns)
        if missing:
            raise DistributionValidationError(f"{path}: missing columns {sorted(missing)}")
        values = [None] * graph.edge_count
        for row_no, row in enumerate(frame.itertuples(index=False), start=2):
            try:
                idx = graph.index_of(int(row.i), int(row.j))
            except KeyError as e:
                raise DistributionValidationError(f"{path}:{row_no}: {e.args[0]}") from e
            if values[idx] is not None:
                raise DistributionValidationError(f"{path}:{row_no}: edge ({row.i}, {row.j}) listed twice")
            values[idx] = float(row.centrality)
        absent = [graph.edges[k] for k, v in enumerate(values) if v is None]
        if absent:
            raise DistributionValidationError(f"{path}: no centrality for edges {absent}")
        try:
            return EdgeCentrality.for_graph(graph, values)
        except ValueError as e:
            raise DistributionValidationError(f"{path}: {e}") from e

    @staticmethod
    def _first_error(error: ValidationError) -> str:
        first = error.errors()[0]
        location = ".".join(str(part) for part in first.get("loc", ())) or "document"
        return f"{location}: {first.get('msg')}"
