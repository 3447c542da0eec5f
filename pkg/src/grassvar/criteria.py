"""Bounds on sign variation read off chirotope sequences, plus TNN/TP tests."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .chirotope import Chirotope, chirotope_of
from .exact import Subset, Subspace, subsets
from .signs import SignVector, var, varbar


@dataclass(frozen=True)
class CriterionReport:
    holds: bool
    bound_checked: int
    witness: tuple[Subset, SignVector] | None = None


def chirotope_sequences(c: Chirotope) -> Iterator[tuple[Subset, SignVector]]:
    """``(I, (chi(I + i))_{i not in I})`` for each (k-1)-subset I in lexicographic order."""
    if c.k == 0:
        return
    for I in subsets(c.n, c.k - 1):
        rest = [i for i in range(1, c.n + 1) if i not in I]
        yield I, tuple(c[I + (i,)] for i in rest)


def _check_m(c: Chirotope, m: int) -> None:
    if m < c.k - 1:
        raise ValueError(f"bound m={m} is below k-1={c.k - 1}")


def _scan(c: Chirotope, m: int, stat: Callable, skip_zero: bool) -> CriterionReport:
    _check_m(c, m)
    limit = m - c.k + 1
    for I, seq in chirotope_sequences(c):
        if skip_zero and not any(seq):
            continue
        if stat(seq) > limit:
            return CriterionReport(False, m, (I, seq))
    return CriterionReport(True, m)


def var_bound_necessary(c: Chirotope, m: int) -> CriterionReport:
    """Every chirotope sequence changes sign at most m-k+1 times.

    Necessary for ``var(X) <= m`` on all covectors; sufficient when ``c`` is uniform.
    """
    return _scan(c, m, var, skip_zero=False)


def varbar_bound_iff(c: Chirotope, m: int, require_basis: bool = True) -> CriterionReport:
    """``varbar(X) <= m`` for every nonzero covector X, decided on chirotope sequences.

    Sequences that vanish identically (I extends to no basis) are skipped; passing
    ``require_basis=False`` drops that rule, which makes the test unsound.
    """
    return _scan(c, m, varbar, skip_zero=require_basis)


def is_positively_oriented(c: Chirotope) -> bool:
    return all(v >= 0 for _, v in c.items())


def is_alternating(c: Chirotope) -> bool:
    return all(v > 0 for _, v in c.items())


def is_tnn(v: Subspace) -> bool:
    return is_positively_oriented(chirotope_of(v))


def is_tp(v: Subspace) -> bool:
    return is_alternating(chirotope_of(v))
