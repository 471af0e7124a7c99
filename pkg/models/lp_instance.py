"""Equality-form linear programs solved by the exact simplex oracle."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple


@dataclass
class LpInstance:
    """min c.x subject to A x = b, x >= 0, with exact rational data."""
    objective: List[Fraction]
    constraints: List[List[Fraction]]
    rhs: List[Fraction]
    labels: List[Tuple[int, ...]] = field(default_factory=list)

    @property
    def variable_count(self) -> int:
        return len(self.objective)

    @property
    def constraint_count(self) -> int:
        return len(self.constraints)


@dataclass
class LpSolution:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Optional[Fraction] = None
    x: List[Fraction] = field(default_factory=list)
    pivots: int = 0

    @property
    def is_optimal(self) -> bool:
        return self.status == "optimal"
