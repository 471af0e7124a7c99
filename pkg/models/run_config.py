"""Validated command-line arguments."""
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, PositiveInt, model_validator

from config.settings import DEFAULT_ENUMERATION_LIMIT, DEFAULT_LP_GUARD
from models.centrality import SubtreeFamily
from models.marginal import MarginalKind

# CLI spellings of the named subtree families.
CLI_FAMILIES = {
    "constant": SubtreeFamily.SINGLE_EDGE_UNIFORM,
    "betweenness": SubtreeFamily.GEODESIC_PAIRS,
    "spanning-tree": SubtreeFamily.SPANNING_TREE_UNIFORM,
}

Command = Literal["centrality", "wasserstein", "tv", "verify", "gen"]
OutputFormat = Literal["table", "csv", "json-lines"]
GraphFamily = Literal["path", "cycle", "complete", "erdos-renyi"]


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Command
    graph: Optional[Path] = None
    marginals: Optional[Path] = None
    eta: Optional[Path] = None
    centrality: Optional[Path] = None
    family: Optional[Literal["constant", "betweenness", "spanning-tree"]] = None

    seed: int = 0
    trials: PositiveInt = 100
    tolerance: PositiveFloat = 1e-9
    support: PositiveInt = 2
    use_lp: bool = True
    limit: PositiveInt = DEFAULT_ENUMERATION_LIMIT
    guard: PositiveInt = DEFAULT_LP_GUARD
    output_format: OutputFormat = "table"

    graph_family: Optional[GraphFamily] = None
    n: int = Field(default=4, ge=2)
    p: float = Field(default=0.5, gt=0.0, le=1.0)
    marginal_kind: Optional[MarginalKind] = None
    samples: PositiveInt = 4
    out_graph: Optional[Path] = None
    out_marginals: Optional[Path] = None

    @model_validator(mode="after")
    def check_sources(self) -> "RunConfig":
        for name in ("graph", "marginals", "eta", "centrality"):
            path = getattr(self, name)
            if path is not None and not path.is_file():
                raise ValueError(f"--{name}: no such file: {path}")

        sources = [name for name in ("family", "eta", "centrality") if getattr(self, name) is not None]
        if len(sources) > 1:
            raise ValueError(f"centrality sources are mutually exclusive, got {', '.join('--' + s for s in sources)}")

        if self.command in ("centrality", "wasserstein", "tv", "verify") and self.graph is None:
            raise ValueError(f"{self.command} needs --graph")
        if self.command in ("wasserstein", "tv") and self.marginals is None:
            raise ValueError(f"{self.command} needs --marginals")
        if self.command == "centrality":
            if self.centrality is not None:
                raise ValueError("centrality takes --family or --eta")
            if not sources:
                raise ValueError("centrality needs --family or --eta")
        if self.command == "tv" and not sources:
            raise ValueError("tv needs one of --family, --eta or --centrality")
        if self.command == "gen" and self.graph_family is None and self.marginal_kind is None:
            raise ValueError("gen needs --family and/or --marginals")
        return self

    @property
    def subtree_family(self) -> Optional[SubtreeFamily]:
        return CLI_FAMILIES[self.family] if self.family else None
