"""Edge centralities and subtree distributions."""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from models.graph import EdgeSubset, EdgeVector


@dataclass(frozen=True)
class EdgeCentrality(EdgeVector):
    """Nonnegative edge vector; entries lie in [0, 1] when produced from a subtree distribution."""

    def __post_init__(self):
        super().__post_init__()
        if any(v < 0 for v in self.values):
            raise ValueError(f"centrality entries must be nonnegative: {self.values}")


class SubtreeFamily(str, Enum):
    SINGLE_EDGE_UNIFORM = "single-edge-uniform"
    GEODESIC_PAIRS = "geodesic-pairs"
    SPANNING_TREE_UNIFORM = "spanning-tree-uniform"


@dataclass(frozen=True)
class SubtreeDistribution:
    """Distribution over subtrees of a graph: explicit atoms or a named family.

    Explicit atoms are (sorted edge indices, probability) pairs; use
    DistributionValidator.validate_subtree_distribution before trusting them.
    """
    atoms: Tuple[Tuple[EdgeSubset, float], ...] = ()
    family: Optional[SubtreeFamily] = None

    def __post_init__(self):
        if self.family is not None and self.atoms:
            raise ValueError("a subtree distribution is either explicit or a named family, not both")
        if self.family is None and not self.atoms:
            raise ValueError("explicit subtree distribution has no atoms")

    @property
    def is_explicit(self) -> bool:
        return self.family is None

    @property
    def support_size(self) -> int:
        return len(self.atoms)
