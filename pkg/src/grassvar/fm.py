"""Exact feasibility of homogeneous sign systems by Fourier-Motzkin elimination.

The systems that arise here all have the form ``E x = 0, A x > 0`` over the
rationals.  Equalities are removed first by passing to a null-space basis, then
the strict inequalities are eliminated variable by variable.  A rational
witness is recovered by back-substitution.
"""
from __future__ import annotations

from fractions import Fraction
from math import ceil, floor, gcd
from typing import Sequence

from .exact import ExactMatrix, orthogonal_complement, row_reduce, to_fraction

Row = tuple[int, ...]


def _primitive(row: Sequence) -> Row:
    if all(type(x) is int for x in row):
        g = 0
        for x in row:
            g = gcd(g, x)
        return tuple(x // g for x in row) if g else tuple(row)
    den = 1
    for x in row:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


def _eliminate(rows: set[Row], p: int) -> set[Row] | None:
    """Eliminate variable ``p`` from ``rows . x > 0``; None if a row became ``0 > 0``."""
    pos = [r for r in rows if r[p] > 0]
    neg = [r for r in rows if r[p] < 0]
    out = {r for r in rows if r[p] == 0}
    for a in pos:
        for b in neg:
            ca, cb = -b[p], a[p]
            combo = tuple(ca * x + cb * y for x, y in zip(a, b))
            g = 0
            for x in combo:
                g = gcd(g, x)
            if g == 0:
                return None
            out.add(tuple(x // g for x in combo))
    if any(not any(r) for r in out):
        return None
    return out


def _pick(lo: Fraction | None, hi: Fraction | None) -> Fraction:
    """A simple rational strictly between the bounds (either may be missing)."""
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return Fraction(min(0, ceil(hi) - 1))
    if hi is None:
        return Fraction(max(0, floor(lo) + 1))
    cand = [Fraction(z) for z in (0, floor(lo) + 1, ceil(hi) - 1) if lo < z < hi]
    if cand:
        return min(cand, key=abs)
    return (lo + hi) / 2


def strict_solution(rows: Sequence[Sequence], nvars: int) -> tuple[Fraction, ...] | None:
    """A rational ``x`` with ``r . x > 0`` for every row, or None if none exists."""
    current = {_primitive([a if type(a) is int else to_fraction(a) for a in r]) for r in rows}
    if any(not any(r) for r in current):
        return None
    levels = [current]
    for p in range(nvars - 1, -1, -1):
        current = _eliminate(current, p)
        if current is None:
            return None
        levels.append(current)
    if current:
        return None
    # levels[nvars - p] still involves variables 0..p
    x: list[Fraction] = []
    for p in range(nvars):
        lo = hi = None
        for r in levels[nvars - p - 1]:
            a = r[p]
            if a == 0:
                continue
            c = sum((r[q] * x[q] for q in range(p)), Fraction(0))
            bound = -c / a
            if a > 0:
                lo = bound if lo is None or bound > lo else lo
            else:
                hi = bound if hi is None or bound < hi else hi
        x.append(_pick(lo, hi))
    return tuple(x)


def sign_solution(columns: Sequence[Sequence], signs: Sequence[int]) -> tuple[Fraction, ...] | None:
    """Find ``c`` with ``sign(c . columns[e]) == signs[e]`` for every listed e.

    ``columns`` are vectors in Q^d.  Returns the coefficient vector or None.
    """
    # positive rescaling of a column or of a basis vector changes no sign, so
    # the whole computation can run on primitive integer vectors
    cols = [_primitive([a if type(a) is int else to_fraction(a) for a in col]) for col in columns]
    if len(cols) != len(signs):
        raise ValueError("one sign per column is required")
    d = len(cols[0]) if cols else 0
    zero_cols = [col for col, s in zip(cols, signs) if s == 0]
    if zero_cols:
        null = orthogonal_complement(row_reduce(ExactMatrix.from_rows(zero_cols, d)))
        basis = [_primitive(r) for r in null.basis.entries]
    else:
        basis = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    # substitute c = t . basis
    rows = []
    for col, s in zip(cols, signs):
        if s:
            rows.append(tuple(s * sum(b * x for b, x in zip(bvec, col)) for bvec in basis))
    t = strict_solution(rows, len(basis))
    if t is None:
        return None
    return tuple(sum((ti * bvec[j] for ti, bvec in zip(t, basis)), Fraction(0)) for j in range(d))
