"""Probe signals used to certify uniqueness of the centrality map."""
from dataclasses import dataclass
from enum import Enum

import numpy as np


class ProbeStatus(str, Enum):
    INVERTIBLE = "invertible"
    SINGULAR = "singular"


@dataclass(frozen=True)
class ProbeSystem:
    # signals: m x n, one probe per row; matrix: m x m with rows ((x_k - x_l)^2) over edges
    signals: np.ndarray
    matrix: np.ndarray
    status: ProbeStatus
    rcond: float
    attempts: int = 1

    @property
    def is_invertible(self) -> bool:
        return self.status is ProbeStatus.INVERTIBLE
