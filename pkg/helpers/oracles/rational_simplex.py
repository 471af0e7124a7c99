"""Two-phase tableau simplex over exact rationals with Bland's rule."""
import logging
from fractions import Fraction
from typing import List, Optional

from models.lp_instance import LpInstance, LpSolution
from utils.errors import OracleError

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


class RationalSimplex:
    """Solves min c.x s.t. A x = b, x >= 0 exactly.

    Phase one minimises the sum of artificial variables from the all-artificial
    basis; artificials left basic at zero are pivoted out, or their rows dropped
    as redundant. Bland's rule (lowest index entering, lowest basic index on
    ratio ties) rules out cycling.
    """

    def __init__(self, max_pivots: int = 1_000_000):
        self.max_pivots = max_pivots

    def solve(self, instance: LpInstance) -> LpSolution:
        n = instance.variable_count
        rows: List[List[Fraction]] = []
        for coeffs, rhs in zip(instance.constraints, instance.rhs):
            if len(coeffs) != n:
                raise OracleError(f"constraint has {len(coeffs)} coefficients, expected {n}")
            row = [Fraction(c) for c in coeffs] + [Fraction(rhs)]
            if row[-1] < 0:
                row = [-v for v in row]
            rows.append(row)
        m = len(rows)

        # Columns: 0..n-1 structural, n..n+m-1 artificial, last column rhs.
        tableau = [row[:n] + [ONE if k == r else ZERO for k in range(m)] + [row[-1]]
                   for r, row in enumerate(rows)]
        basis = [n + r for r in range(m)]
        pivots = 0

        phase_one_cost = [ZERO] * n + [ONE] * m
        pivots += self._optimise(tableau, basis, phase_one_cost, allowed=n + m)
        infeasibility = sum((phase_one_cost[b] * tableau[r][-1] for r, b in enumerate(basis)), ZERO)
        if infeasibility != 0:
            logger.debug(f"Phase one ended with infeasibility {infeasibility}")
            return LpSolution(status="infeasible", pivots=pivots)

        tableau, basis, extra = self._drive_out_artificials(tableau, basis, n)
        pivots += extra
        # Artificial columns are no longer eligible to enter.
        cost = [Fraction(c) for c in instance.objective] + [ZERO] * m
        try:
            pivots += self._optimise(tableau, basis, cost, allowed=n)
        except _Unbounded:
            return LpSolution(status="unbounded", pivots=pivots)

        x = [ZERO] * n
        for r, b in enumerate(basis):
            if b < n:
                x[b] = tableau[r][-1]
        value = sum((c * v for c, v in zip(cost, x)), ZERO)
        logger.debug(f"Simplex finished after {pivots} pivots, value {value}")
        return LpSolution(status="optimal", value=value, x=x, pivots=pivots)

    def _optimise(self, tableau: List[List[Fraction]], basis: List[int],
                  cost: List[Fraction], allowed: int) -> int:
        pivots = 0
        while True:
            entering = self._entering_column(tableau, basis, cost, allowed)
            if entering is None:
                return pivots
            leaving = self._leaving_row(tableau, basis, entering)
            if leaving is None:
                raise _Unbounded()
            self._pivot(tableau, basis, leaving, entering)
            pivots += 1
            if pivots > self.max_pivots:
                raise OracleError(f"simplex exceeded {self.max_pivots} pivots")

    @staticmethod
    def _entering_column(tableau, basis, cost, allowed) -> Optional[int]:
        basic = set(basis)
        for j in range(allowed):
            if j in basic:
                continue
            reduced = cost[j] - sum((cost[b] * tableau[r][j] for r, b in enumerate(basis) if tableau[r][j]), ZERO)
            if reduced < 0:
                return j
        return None

    @staticmethod
    def _leaving_row(tableau, basis, entering) -> Optional[int]:
        best_row = None
        best_ratio = None
        for r, row in enumerate(tableau):
            coeff = row[entering]
            if coeff <= 0:
                continue
            ratio = row[-1] / coeff
            if (best_ratio is None or ratio < best_ratio
                    or (ratio == best_ratio and basis[r] < basis[best_row])):
                best_row, best_ratio = r, ratio
        return best_row

    @staticmethod
    def _pivot(tableau, basis, row_idx, col_idx) -> None:
        pivot_row = tableau[row_idx]
        factor = pivot_row[col_idx]
        if factor != 1:
            pivot_row[:] = [v / factor for v in pivot_row]
        for r, row in enumerate(tableau):
            if r == row_idx:
                continue
            coeff = row[col_idx]
            if coeff:
                row[:] = [a - coeff * b for a, b in zip(row, pivot_row)]
        basis[row_idx] = col_idx

    def _drive_out_artificials(self, tableau, basis, n):
        pivots = 0
        keep_rows = []
        for r in range(len(tableau)):
            if basis[r] < n:
                keep_rows.append(r)
                continue
            column = next((j for j in range(n) if tableau[r][j] != 0), None)
            if column is None:
                # Redundant constraint: every structural coefficient is zero.
                continue
            self._pivot(tableau, basis, r, column)
            pivots += 1
            keep_rows.append(r)
        return [tableau[r] for r in keep_rows], [basis[r] for r in keep_rows], pivots


class _Unbounded(Exception):
    pass
