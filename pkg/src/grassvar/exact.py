"""Exact rational matrices, canonical subspaces and their Plücker coordinates.

Everything here works over :class:`fractions.Fraction`; there is no tolerance
parameter anywhere.  Ground-set elements (column labels, subsets, pivots) are
1-based, matching the usual ``[n] = {1, ..., n}`` convention; Python-side row
and column positions inside a matrix are 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

Subset = tuple[int, ...]
PluckerMap = dict[Subset, Fraction]


def to_fraction(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: silently accepting them would smuggle rounding in.
    """
    if isinstance(x, bool):
        raise TypeError(f"not an exact rational: {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError:
            raise ValueError(f"not an exact rational: {x!r}") from None
    raise TypeError(f"not an exact rational: {x!r}")


def subsets(n: int, k: int) -> Iterable[Subset]:
    """k-subsets of ``[n]`` in lexicographic order."""
    return combinations(range(1, n + 1), k)


@dataclass(frozen=True)
class ExactMatrix:
    entries: tuple[tuple[Fraction, ...], ...]
    cols: int

    def __post_init__(self):
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> ExactMatrix:
        entries = tuple(tuple(to_fraction(x) for x in row) for row in rows)
        if cols is None:
            if not entries:
                raise ValueError("column count is required for a matrix with no rows")
            cols = len(entries[0])
        return cls(entries, cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ExactMatrix:
        return cls(tuple((Fraction(0),) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def column(self, j: int) -> tuple[Fraction, ...]:
        """Column at 0-based position ``j``."""
        return tuple(row[j] for row in self.entries)

    def select_columns(self, cols: Sequence[int]) -> ExactMatrix:
        """Submatrix on the given 0-based column positions, in the given order."""
        return ExactMatrix(tuple(tuple(row[j] for j in cols) for row in self.entries), len(cols))

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(tuple(self.column(j) for j in range(self.cols)), self.rows)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = [other.column(j) for j in range(other.cols)]
        return ExactMatrix(
            tuple(tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in ocols)
                  for row in self.entries),
            other.cols,
        )

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self.entries]


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Fraction-free (Bareiss) determinant of a square matrix."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    m = [list(r) for r in rows]
    sign = 1
    prev = Fraction(1)
    for p in range(n - 1):
        if m[p][p] == 0:
            for r in range(p + 1, n):
                if m[r][p] != 0:
                    m[p], m[r] = m[r], m[p]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        piv = m[p][p]
        for i in range(p + 1, n):
            mip = m[i][p]
            row_i, row_p = m[i], m[p]
            for j in range(p + 1, n):
                row_i[j] = (row_i[j] * piv - mip * row_p[j]) / prev
        prev = piv
    return sign * m[-1][-1]


def _rref(rows: Sequence[Sequence[Fraction]], cols: int) -> tuple[list[list[Fraction]], list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(m: ExactMatrix) -> int:
    return len(_rref(m.entries, m.cols)[1])


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n, stored by its reduced row echelon basis.

    The RREF is unique, so dataclass equality is subspace equality.
    """

    basis: ExactMatrix
    pivots: Subset

    @property
    def n(self) -> int:
        return self.basis.cols

    @property
    def k(self) -> int:
        return self.basis.rows

    @property
    def dim(self) -> int:
        return self.basis.rows

    @classmethod
    def span(cls, vectors: Sequence[Sequence], n: int | None = None) -> Subspace:
        return row_reduce(ExactMatrix.from_rows(vectors, n))

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(ExactMatrix((), n), ())

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(ExactMatrix.identity(n), tuple(range(1, n + 1)))

    def rows(self) -> list[tuple[Fraction, ...]]:
        return list(self.basis.entries)

    def reduce(self, v: Sequence) -> tuple[Fraction, ...]:
        """Residue of ``v`` after subtracting its RREF expansion."""
        res = [to_fraction(x) for x in v]
        if len(res) != self.n:
            raise ValueError(f"vector of length {len(res)} in ambient dimension {self.n}")
        for row, p in zip(self.basis.entries, self.pivots):
            f = res[p - 1]
            if f:
                res = [a - f * b for a, b in zip(res, row)]
        return tuple(res)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v: Sequence) -> tuple[Fraction, ...]:
        """Coefficients of ``v`` in the RREF basis; raises if ``v`` is not in the subspace."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(to_fraction(v[p - 1]) for p in self.pivots)

    def vector(self, coeffs: Sequence) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * self.n
        for c, row in zip(coeffs, self.basis.entries):
            c = to_fraction(c)
            if c:
                out = [a + c * b for a, b in zip(out, row)]
        return tuple(out)

    def restrict(self, coords: Sequence[int]) -> Subspace:
        """Projection V|_F onto the 1-based coordinates ``coords`` (kept in increasing order)."""
        cols = sorted(coords)
        return row_reduce(self.basis.select_columns([c - 1 for c in cols]))


def row_reduce(m: ExactMatrix) -> Subspace:
    rows, pivots = _rref(m.entries, m.cols)
    return Subspace(ExactMatrix(tuple(tuple(r) for r in rows), m.cols), tuple(p + 1 for p in pivots))


def minors(m: ExactMatrix, k: int | None = None) -> PluckerMap:
    """Maximal (or k x k from the first k rows) column minors of ``m``, lexicographic in I."""
    k = m.rows if k is None else k
    rows = m.entries[:k]
    return {I: determinant([[row[i - 1] for i in I] for row in rows]) for I in subsets(m.cols, k)}


def maximal_minors(v: Subspace) -> PluckerMap:
    """Plücker coordinates of ``v`` computed from its RREF basis.

    The zero subspace gets the single coordinate ``{(): 1}``.
    """
    return minors(v.basis)


def orthogonal_complement(v: Subspace) -> Subspace:
    n = v.n
    piv = [p - 1 for p in v.pivots]
    free = [c for c in range(n) if c not in set(piv)]
    vecs = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(v.basis.entries, piv):
            x[p] = -row[f]
        vecs.append(x)
    return row_reduce(ExactMatrix(tuple(tuple(x) for x in vecs), n))


def kernel(z: ExactMatrix) -> Subspace:
    return orthogonal_complement(row_reduce(z))


def scale_columns(v: Subspace, factors: Sequence) -> Subspace:
    fs = [to_fraction(f) for f in factors]
    if len(fs) != v.n:
        raise ValueError("one factor per coordinate is required")
    return row_reduce(ExactMatrix(tuple(tuple(a * f for a, f in zip(row, fs)) for row in v.basis.entries), v.n))


def alt_twist(v: Subspace) -> Subspace:
    """Image of ``v`` under negation of the even-indexed coordinates."""
    return scale_columns(v, [(-1) ** e for e in range(v.n)])


def cyclic_shift(v: Subspace, j: int) -> Subspace:
    """Row span of ``[x_j | ... | x_n | s*x_1 | ... | s*x_{j-1}]`` with ``s = (-1)^(k-1)``."""
    n, k = v.n, v.k
    if not 1 <= j <= max(n, 1):
        raise ValueError(f"shift index {j} outside [1, {n}]")
    s = (-1) ** (k - 1) if k else 1
    order = list(range(j - 1, n)) + list(range(j - 1))
    rows = []
    for row in v.basis.entries:
        rows.append(tuple(row[c] if c >= j - 1 else s * row[c] for c in order))
    return row_reduce(ExactMatrix(tuple(rows), n))


def image_dim(z: ExactMatrix, v: Subspace) -> int:
    """dim Z(V) = rank of Z times the transposed basis of V."""
    if v.k == 0:
        return 0
    return rank(z @ v.basis.transpose())


def vandermonde(k: int, n: int, nodes: Sequence | None = None) -> Subspace:
    """Row span of the k x n Vandermonde matrix; totally positive for increasing nodes."""
    ts = [to_fraction(t) for t in (nodes if nodes is not None else range(1, n + 1))]
    return row_reduce(ExactMatrix.from_rows([[t ** p for t in ts] for p in range(k)], n))


def primitive_integer_vector(v: Sequence) -> tuple[int, ...]:
    """Positive multiple of ``v`` with coprime integer entries."""
    fs = [to_fraction(x) for x in v]
    den = lcm(*(f.denominator for f in fs)) if fs else 1
    ints = [int(f * den) for f in fs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)
