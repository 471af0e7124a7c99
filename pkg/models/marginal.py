"""Per-node marginal distributions and pairwise couplings."""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple, Union

from config.settings import SIMPLEX_RENORMALIZE_FLOOR, SIMPLEX_TOLERANCE
from utils.errors import MarginalValidationError

logger = logging.getLogger(__name__)


class MarginalKind(str, Enum):
    GAUSSIAN = "gaussian"
    EMPIRICAL = "empirical"
    DISCRETE = "discrete"


@dataclass(frozen=True)
class GaussianMarginal:
    """1-D normal distribution N(mean, std); std = 0 is a Dirac mass."""
    mean: float
    std: float

    def __post_init__(self):
        if not (math.isfinite(self.mean) and math.isfinite(self.std)):
            raise MarginalValidationError("gaussian parameters must be finite")
        if self.std < 0:
            raise MarginalValidationError(f"std must be nonnegative, got {self.std}")


@dataclass(frozen=True)
class EmpiricalMarginal:
    """Uniform empirical distribution on N samples, stored ascending."""
    samples: Tuple[float, ...]

    def __post_init__(self):
        if not self.samples:
            raise MarginalValidationError("empirical marginal needs at least one sample")
        if not all(math.isfinite(x) for x in self.samples):
            raise MarginalValidationError("samples must be finite")
        if any(a > b for a, b in zip(self.samples, self.samples[1:])):
            raise MarginalValidationError("samples must be sorted ascending")

    @classmethod
    def from_samples(cls, samples: Sequence[float]) -> 'EmpiricalMarginal':
        return cls(tuple(sorted(float(x) for x in samples)))

    @property
    def size(self) -> int:
        return len(self.samples)


@dataclass(frozen=True)
class DiscreteMarginal:
    """Probability weights over the support shared by the owning MarginalSet.

    Weights within SIMPLEX_TOLERANCE of the simplex are rescaled to sum to one.
    """
    weights: Tuple[float, ...]

    def __post_init__(self):
        if not self.weights:
            raise MarginalValidationError("discrete marginal needs at least one weight")
        if any(not math.isfinite(w) or w < 0 for w in self.weights):
            raise MarginalValidationError(f"weights must be finite and nonnegative: {self.weights}")
        total = math.fsum(self.weights)
        if abs(total - 1.0) > SIMPLEX_TOLERANCE:
            raise MarginalValidationError(f"weights sum to {total!r}, not 1")
        if abs(total - 1.0) > SIMPLEX_RENORMALIZE_FLOOR:
            logger.warning(f"Renormalising discrete weights that sum to {total!r}")
            object.__setattr__(self, "weights", tuple(w / total for w in self.weights))

    @property
    def size(self) -> int:
        return len(self.weights)


Marginal = Union[GaussianMarginal, EmpiricalMarginal, DiscreteMarginal]

_KIND_TYPES = {
    MarginalKind.GAUSSIAN: GaussianMarginal,
    MarginalKind.EMPIRICAL: EmpiricalMarginal,
    MarginalKind.DISCRETE: DiscreteMarginal,
}


@dataclass(frozen=True)
class MarginalSet:
    """One marginal per node, all of the same kind.

    Empirical and discrete sets share one N; discrete sets also carry the shared,
    ordered support labels.
    """
    kind: MarginalKind
    marginals: Tuple[Marginal, ...]
    support: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if not self.marginals:
            raise MarginalValidationError("marginal set is empty")
        expected = _KIND_TYPES[self.kind]
        for idx, marginal in enumerate(self.marginals):
            if not isinstance(marginal, expected):
                raise MarginalValidationError(
                    f"node {idx}: expected {self.kind.value} marginal, got {type(marginal).__name__}")
        if self.kind is MarginalKind.GAUSSIAN:
            if self.support is not None:
                raise MarginalValidationError("gaussian marginals carry no support")
            return
        sizes = {m.size for m in self.marginals}
        if len(sizes) != 1:
            raise MarginalValidationError(f"all marginals must share one N, got sizes {sorted(sizes)}")
        if self.kind is MarginalKind.DISCRETE:
            if self.support is None:
                raise MarginalValidationError("discrete marginals need a shared support")
            if len(self.support) != self.size:
                raise MarginalValidationError(
                    f"support has {len(self.support)} labels but weights have {self.size} entries")
            if len(set(self.support)) != len(self.support):
                raise MarginalValidationError("support labels must be distinct")

    def __len__(self) -> int:
        return len(self.marginals)

    def __getitem__(self, node: int) -> Marginal:
        return self.marginals[node]

    @property
    def node_count(self) -> int:
        return len(self.marginals)

    @property
    def size(self) -> Optional[int]:
        """Shared N for empirical/discrete sets, None for gaussian."""
        if self.kind is MarginalKind.GAUSSIAN:
            return None
        return self.marginals[0].size

    def restrict(self, nodes: Sequence[int]) -> 'MarginalSet':
        """Projection onto the given nodes, in the given order."""
        return MarginalSet(self.kind, tuple(self.marginals[v] for v in nodes), self.support)


def dirac_marginals(signal: Sequence[float]) -> MarginalSet:
    """Point masses at an ordinary signal, as degenerate gaussians."""
    return MarginalSet(
        MarginalKind.GAUSSIAN,
        tuple(GaussianMarginal(float(x), 0.0) for x in signal)
    )


@dataclass(frozen=True)
class PairwiseCoupling:
    """Joint weights over support_a x support_b; rows follow a, columns follow b."""
    weights: Tuple[Tuple[object, ...], ...]

    @property
    def row_sums(self) -> Tuple[object, ...]:
        return tuple(sum(row) for row in self.weights)

    @property
    def column_sums(self) -> Tuple[object, ...]:
        return tuple(sum(col) for col in zip(*self.weights))

    def check_marginals(self, a: Sequence[float], b: Sequence[float],
                        tolerance: float = SIMPLEX_TOLERANCE) -> bool:
        if any(w < 0 for row in self.weights for w in row):
            return False
        rows_ok = all(abs(float(r) - float(p)) <= tolerance for r, p in zip(self.row_sums, a))
        cols_ok = all(abs(float(c) - float(q)) <= tolerance for c, q in zip(self.column_sums, b))
        return rows_ok and cols_ok
