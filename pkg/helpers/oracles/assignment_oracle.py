"""Permutation brute force for equal-size empirical marginals."""
import itertools
import math
from typing import Sequence

from config.settings import ASSIGNMENT_MAX_N
from utils.errors import LimitExceededError, MarginalValidationError


class AssignmentOracle:
    @staticmethod
    def assignment_oracle_empirical(a: Sequence[float], b: Sequence[float]) -> float:
        """min over permutations s of (1/N) sum (a_k - b_s(k))^2."""
        if len(a) != len(b):
            raise MarginalValidationError(f"sample lists need equal N, got {len(a)} and {len(b)}")
        if len(a) > ASSIGNMENT_MAX_N:
            raise LimitExceededError(f"assignment oracle handles N <= {ASSIGNMENT_MAX_N}, got {len(a)}")
        if not a:
            raise MarginalValidationError("sample lists are empty")
        best = math.inf
        for perm in itertools.permutations(range(len(b))):
            cost = math.fsum((x - b[k]) ** 2 for x, k in zip(a, perm))
            best = min(best, cost)
        return best / len(a)
