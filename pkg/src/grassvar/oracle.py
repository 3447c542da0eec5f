"""Brute-force ground truth.

Nothing here touches chirotopes, cocircuits or perturbations: covectors are
decided one candidate sign vector at a time by exact feasibility, so these
functions can be used to check the combinatorial code paths.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exact import ExactMatrix, Subset, Subspace, determinant, kernel, primitive_integer_vector, rank, subsets
from .fm import sign_solution
from .signs import SignVector, sign, var, varbar


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 8

    @property
    def max_signvectors(self) -> int:
        return 3 ** self.max_n

    def check(self, n: int) -> None:
        if n > self.max_n:
            raise BudgetExceeded(f"ambient dimension {n} exceeds the oracle budget {self.max_n}")


DEFAULT_BUDGET = OracleBudget()


def covectors_of_subspace(v: Subspace, budget: OracleBudget = DEFAULT_BUDGET) -> frozenset[SignVector]:
    """Sign vectors of all vectors in ``v``.

    Depth-first over coordinates; a prefix is extended only if it is itself
    realized by some vector of ``v``.
    """
    budget.check(v.n)
    # columns rescaled to primitive integers: same signs, cheaper arithmetic
    cols = [primitive_integer_vector(v.basis.column(j)) for j in range(v.n)]
    out: set[SignVector] = set()

    def extend(prefix: tuple[int, ...], coeffs) -> None:
        if len(prefix) == v.n:
            out.add(prefix)
            return
        col = cols[len(prefix)]
        # the witness for the prefix already realizes one sign at the next coordinate
        free = sign(sum(a * b for a, b in zip(coeffs, col)))
        for s in (-1, 0, 1):
            cand = prefix + (s,)
            found = coeffs if s == free else sign_solution(cols[: len(cand)], cand)
            if found is not None:
                extend(cand, found)

    extend((), [0] * v.k)
    return frozenset(out)


def realizing_vector(v: Subspace, x: SignVector):
    """A vector of ``v`` with sign vector ``x``, or None."""
    cols = [v.basis.column(j) for j in range(v.n)]
    c = sign_solution(cols, x)
    return None if c is None else v.vector(c)


def max_var_brute(v: Subspace, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    return max(var(x) for x in covectors_of_subspace(v, budget))


def max_varbar_brute(v: Subspace, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Max of varbar over nonzero covectors; -1 for the zero subspace."""
    return max((varbar(x) for x in covectors_of_subspace(v, budget) if any(x)), default=-1)


def min_var_brute(v: Subspace, budget: OracleBudget = DEFAULT_BUDGET) -> int | None:
    """Min of var over nonzero covectors; None for the zero subspace."""
    return min((var(x) for x in covectors_of_subspace(v, budget) if any(x)), default=None)


def min_varbar_brute(v: Subspace, budget: OracleBudget = DEFAULT_BUDGET) -> int | None:
    return min((varbar(x) for x in covectors_of_subspace(v, budget) if any(x)), default=None)


def matroid_brute(m: ExactMatrix) -> list[Subset]:
    """Column sets I with rank(m[:, I]) = rank(m), read off raw minors of ``m``.

    I qualifies iff some choice of ``rank(m)`` rows gives a nonzero minor on I.
    """
    k = rank(m)
    row_sets = list(combinations(range(m.rows), k))
    found = []
    for I in subsets(m.cols, k):
        if any(determinant([[m.entries[r][i - 1] for i in I] for r in rs]) for rs in row_sets):
            found.append(I)
    return found


def amplituhedron_brute(z: ExactMatrix, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Every nonzero vector of ker Z changes sign at least k times."""
    low = min_var_brute(kernel(z), budget)
    return low is None or low >= k


def amplituhedron_tp_brute(z: ExactMatrix, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Every nonzero vector of ker Z has varbar at least k."""
    low = min_varbar_brute(kernel(z), budget)
    return low is None or low >= k
