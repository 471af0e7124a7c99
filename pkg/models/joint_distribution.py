"""Finite joint distributions over product supports."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple, Union

from config.settings import SIMPLEX_TOLERANCE
from utils.errors import DistributionValidationError

Mass = Union[float, Fraction]


@dataclass(frozen=True)
class JointDistribution:
    """Sparse pmf on the product of per-node finite supports.

    Keys of ``masses`` are tuples of support indices, one entry per node in ``nodes``.
    """
    nodes: Tuple[int, ...]
    support_sizes: Tuple[int, ...]
    masses: Dict[Tuple[int, ...], Mass] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.nodes) != len(self.support_sizes):
            raise DistributionValidationError("one support size per node is required")
        total = Fraction(0)
        for key, mass in self.masses.items():
            if len(key) != len(self.nodes):
                raise DistributionValidationError(f"support tuple {key} has the wrong length")
            if any(not 0 <= k < size for k, size in zip(key, self.support_sizes)):
                raise DistributionValidationError(f"support tuple {key} is out of range")
            if mass < 0:
                raise DistributionValidationError(f"negative mass {mass} at {key}")
            total += Fraction(mass)
        if abs(total - 1) > SIMPLEX_TOLERANCE:
            raise DistributionValidationError(f"masses sum to {float(total)!r}, not 1")

    def marginal(self, position: int) -> List[Mass]:
        """Marginal pmf of the node at ``position`` in ``nodes``."""
        weights: List[Mass] = [0] * self.support_sizes[position]
        for key, mass in self.masses.items():
            weights[key[position]] += mass
        return weights

    def pair_marginal(self, first: int, second: int) -> List[List[Mass]]:
        """Joint pmf of two node positions."""
        table: List[List[Mass]] = [[0] * self.support_sizes[second] for _ in range(self.support_sizes[first])]
        for key, mass in self.masses.items():
            table[key[first]][key[second]] += mass
        return table
