"""Pydantic schemas for the JSON input files."""
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, RootModel, model_validator


class GaussianSchema(BaseModel):
    model_config = ConfigDict(extra="forbid")

    mean: float
    std: float = Field(ge=0)


class MarginalFileSchema(BaseModel):
    """Marginal-set document.

    gaussian:  {"kind": "gaussian", "marginals": [{"mean": m, "std": s}, ...]}
    empirical: {"kind": "empirical", "samples": [[x, ...], ...]}
    discrete:  {"kind": "discrete", "support": [label, ...], "weights": [[p, ...], ...]}
    """
    model_config = ConfigDict(extra="forbid")

    kind: Literal["gaussian", "empirical", "discrete"]
    marginals: Optional[List[GaussianSchema]] = None
    samples: Optional[List[List[float]]] = None
    support: Optional[List[str]] = None
    weights: Optional[List[List[float]]] = None

    @model_validator(mode="after")
    def check_kind_fields(self) -> 'MarginalFileSchema':
        required = {
            "gaussian": ("marginals",),
            "empirical": ("samples",),
            "discrete": ("support", "weights"),
        }[self.kind]
        for name in ("marginals", "samples", "support", "weights"):
            present = getattr(self, name) is not None
            if name in required and not present:
                raise ValueError(f"'{self.kind}' marginal files need a '{name}' field")
            if name not in required and present:
                raise ValueError(f"'{name}' is not allowed for kind '{self.kind}'")
        rows = getattr(self, required[-1])
        if not rows:
            raise ValueError("marginal file lists no nodes")
        return self


class EtaAtomSchema(BaseModel):
    model_config = ConfigDict(extra="forbid")

    edges: List[Tuple[int, int]]
    p: float = Field(ge=0)


class EtaFileSchema(RootModel[List[EtaAtomSchema]]):
    """Explicit subtree distribution: [{"edges": [[i, j], ...], "p": prob}, ...]."""
