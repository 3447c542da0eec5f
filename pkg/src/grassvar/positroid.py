"""Positroid data of totally nonnegative subspaces recovered from sign vectors."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .chirotope import chirotope_of, covectors_of_chirotope, restrict
from .criteria import is_tnn
from .exact import ExactMatrix, Subset, Subspace, cyclic_shift, orthogonal_complement, row_reduce, subsets
from .signs import GaleOrder, SignVector, gale_leq


@dataclass(frozen=True)
class GrassmannNecklace:
    n: int
    k: int
    entries: tuple[Subset, ...]

    def __post_init__(self):
        if len(self.entries) != self.n:
            raise ValueError(f"a necklace on [{self.n}] has {self.n} entries, got {len(self.entries)}")
        for I in self.entries:
            if len(I) != self.k or any(not 1 <= i <= self.n for i in I):
                raise ValueError(f"necklace entry {I} is not a {self.k}-subset of [{self.n}]")


@dataclass(frozen=True)
class Positroid:
    n: int
    k: int
    bases: tuple[Subset, ...]


def _require_tnn(v: Subspace) -> None:
    if not is_tnn(v):
        raise ValueError("this construction is only valid for totally nonnegative subspaces")


def matroid_of(v: Subspace) -> list[Subset]:
    return chirotope_of(v).bases()


def alternates(x: Sequence[int]) -> bool:
    """No zeros and consecutive entries of opposite sign."""
    return all(x) and all(a != b for a, b in zip(x, x[1:]))


def alternating_sets(v: Subspace) -> list[Subset]:
    """k-subsets on which some covector of V alternates."""
    covectors = covectors_of_chirotope(chirotope_of(v))
    return [I for I in subsets(v.n, v.k) if any(alternates([x[i - 1] for i in I]) for x in covectors)]


def alternates_with_break(x: Sequence[int], J: Subset, j: int) -> bool:
    """x alternates on J except exactly between max(J before j) and min(J from j on)."""
    before = [e for e in J if e < j]
    after = [e for e in J if e >= j]
    vals = [x[e - 1] for e in J]
    if not all(vals):
        return False
    if not before or not after:
        return alternates(vals)
    cut = len(before)
    return alternates(vals[:cut]) and alternates(vals[cut:]) and vals[cut - 1] == vals[cut]


def gale_min_of(sets: Iterable[Subset], order: GaleOrder | None = None) -> Subset | None:
    family = [tuple(s) for s in sets]
    for cand in family:
        if all(gale_leq(cand, s, order) for s in family):
            return tuple(sorted(cand))
    return None


def schubert_from_signs(v: Subspace) -> Subset:
    """Gale minimum of the alternating sets; it is the lex-first basis for TNN input."""
    _require_tnn(v)
    found = gale_min_of(alternating_sets(v), GaleOrder(v.n, 1))
    if found is None:  # ruled out for TNN subspaces
        raise ArithmeticError("alternating sets of a TNN subspace have no Gale minimum")
    return found


def necklace_of(v: Subspace) -> GrassmannNecklace:
    bases = matroid_of(v)
    entries = []
    for j in range(1, v.n + 1):
        order = GaleOrder(v.n, j)
        entries.append(min(bases, key=order.lex_key))
    return GrassmannNecklace(v.n, v.k, tuple(entries))


def necklace_from_signs(v: Subspace) -> GrassmannNecklace:
    """Necklace entry j from the Schubert cell of the cyclically shifted subspace."""
    _require_tnn(v)
    n = v.n
    entries = []
    for j in range(1, n + 1):
        shifted = schubert_from_signs(cyclic_shift(v, j))
        entries.append(tuple(sorted((i + j - 2) % n + 1 for i in shifted)))
    return GrassmannNecklace(n, v.k, tuple(entries))


def necklace_from_breaks(v: Subspace) -> GrassmannNecklace:
    """Same necklace read directly off the covectors of V, without shifting."""
    _require_tnn(v)
    covectors = covectors_of_chirotope(chirotope_of(v))
    entries = []
    for j in range(1, v.n + 1):
        family = [J for J in subsets(v.n, v.k) if any(alternates_with_break(x, J, j) for x in covectors)]
        found = gale_min_of(family, GaleOrder(v.n, j))
        if found is None:
            raise ArithmeticError(f"no {j}-Gale minimum among the broken alternating sets")
        entries.append(found)
    return GrassmannNecklace(v.n, v.k, tuple(entries))


def positroid_from_necklace(neck: GrassmannNecklace) -> Positroid:
    orders = [GaleOrder(neck.n, j) for j in range(1, neck.n + 1)]
    bases = tuple(
        J for J in subsets(neck.n, neck.k)
        if all(gale_leq(I, J, o) for I, o in zip(neck.entries, orders))
    )
    return Positroid(neck.n, neck.k, bases)


def realized_patterns(v: Subspace, coords: Sequence[int]) -> frozenset[SignVector]:
    """Sign patterns of vectors of V restricted to ``coords`` (in increasing order)."""
    f = sorted(set(coords))
    return covectors_of_chirotope(restrict(chirotope_of(v), f)) if f else frozenset({()})


def realizes(v: Subspace, coords: Sequence[int], pattern: Sequence[int]) -> bool:
    f = sorted(set(coords))
    if len(pattern) != len(f):
        raise ValueError("one sign per coordinate is required")
    return tuple(pattern) in realized_patterns(v, f)


def basis_test_patterns(k: int) -> list[SignVector]:
    """The k patterns starting with + that alternate with at most one break."""
    base = tuple((-1) ** t for t in range(k))
    out = [base]
    for t in range(1, k):
        out.append(base[:t] + tuple(-s for s in base[t:]))
    return out


def basis_test_signs(v: Subspace, J: Sequence[int]) -> bool:
    _require_tnn(v)
    J = tuple(sorted(J))
    if len(J) != v.k:
        raise ValueError(f"the basis test needs a {v.k}-subset, got {J}")
    patterns = realized_patterns(v, J)
    return all(p in patterns for p in basis_test_patterns(v.k))


def all_but_one_construction(n: int, J: Sequence[int], vec: Sequence) -> Subspace:
    """A k-subspace that realizes every +/- pattern on J except the two signs of ``vec``.

    Its projection to J is the hyperplane orthogonal to ``vec``, and one extra
    coordinate vector outside J supplies the missing dimension.
    """
    J = tuple(sorted(J))
    k = len(J)
    if n <= k:
        raise ValueError(f"need n > k, got n={n}, k={k}")
    if len(vec) != k or not all(vec):
        raise ValueError("vec must be a nowhere-zero vector with one entry per element of J")
    hyper = orthogonal_complement(row_reduce(ExactMatrix.from_rows([list(vec)], k)))
    rows = []
    for row in hyper.basis.entries:
        full = [0] * n
        for e, x in zip(J, row):
            full[e - 1] = x
        rows.append(full)
    extra = next(c for c in range(1, n + 1) if c not in J)
    rows.append([int(c == extra) for c in range(1, n + 1)])
    return row_reduce(ExactMatrix.from_rows(rows, n))
