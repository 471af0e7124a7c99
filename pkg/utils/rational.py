"""Exact rational views of float inputs."""
from fractions import Fraction
from typing import List, Sequence

from config.settings import RATIONAL_MAX_DENOMINATOR


def rationalize(value: float) -> Fraction:
    """Closest fraction with denominator at most RATIONAL_MAX_DENOMINATOR."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value).limit_denominator(RATIONAL_MAX_DENOMINATOR)


def rational_weights(weights: Sequence[float]) -> List[Fraction]:
    """Rationalise a pmf and renormalise it so the entries sum to exactly 1."""
    rational = [rationalize(w) for w in weights]
    total = sum(rational, Fraction(0))
    if total <= 0:
        raise ValueError("weights must have positive total mass")
    return [w / total for w in rational]
