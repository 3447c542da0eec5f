"""When does a linear map Z keep every TNN (or TP) k-subspace k-dimensional?

The nonnegative case is decided on maximal minors of the row span W of Z:
each (d+1)-subset I of columns gives the deletion sequence
``(Delta_{I - i}(W))_{i in I}``.  The positive case goes through the dual
statement about ``alt(ker Z)`` and the exact ``max_var``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chirotope import chirotope_of, covectors_of_chirotope
from .criteria import chirotope_sequences
from .exact import (
    ExactMatrix,
    Subset,
    Subspace,
    alt_twist,
    kernel,
    minors,
    primitive_integer_vector,
    rank,
    row_reduce,
    scale_columns,
    subsets,
    to_fraction,
    vandermonde,
)
from .fm import sign_solution
from .perturbation import make_schedule, max_var, uniformize
from .signs import sign_vector, var, varbar


@dataclass(frozen=True)
class AmplituhedronVerdict:
    well_defined: bool
    k: int
    n: int
    r: int
    d: int
    witness: tuple[tuple[int, ...], Subspace] | None = None
    criterion_trace: list = field(default_factory=list)


def _check_sizes(z: ExactMatrix, k: int) -> None:
    if k < 0 or k > z.cols:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={z.cols}")
    if z.rows > z.cols:
        raise ValueError(f"need r <= n, got r={z.rows}, n={z.cols}")


def row_span_minors(z: ExactMatrix) -> tuple[int, dict[Subset, Fraction]]:
    """``(d, Delta(W))``: Z's own d x d minors when Z has full row rank, else the RREF's."""
    w = row_reduce(z)
    d = w.k
    source = z if d == z.rows else w.basis
    return d, minors(source, d)


def deletion_sequences(z: ExactMatrix) -> list[tuple[Subset, tuple[Fraction, ...]]]:
    """For each (d+1)-subset I, ``(Delta_{I - i}(W))`` over i in I in increasing order."""
    d, delta = row_span_minors(z)
    out = []
    for I in subsets(z.cols, d + 1):
        seq = tuple(delta[tuple(e for e in I if e != i)] for i in I)
        out.append((I, seq))
    return out


def well_defined_tnn(z: ExactMatrix, k: int, witness: bool = True) -> AmplituhedronVerdict:
    _check_sizes(z, k)
    d = rank(z)
    trace = []
    ok = True
    for I, seq in deletion_sequences(z):
        if not any(seq):
            continue  # W restricted to I has dimension below d
        vb = varbar(seq)
        trace.append((I, seq, vb))
        if vb > d - k:
            ok = False
    wit = None
    if not ok and witness:
        v = bad_kernel_vector(z, k)
        wit = (v, extend_nonneg(v, k))
    return AmplituhedronVerdict(ok, k, z.cols, z.rows, d, wit, trace)


def well_defined_tp(z: ExactMatrix, k: int, witness: bool = True) -> AmplituhedronVerdict:
    """Every nonzero kernel vector has varbar >= k, i.e. ``max_var(alt ker Z) <= n-k-1``."""
    _check_sizes(z, k)
    n = z.cols
    d = rank(z)
    twisted = alt_twist(kernel(z))
    trace = []
    if twisted.k == 0:
        ok = True
    else:
        u = uniformize(chirotope_of(twisted), make_schedule("sweep-k", n, twisted.k))
        trace = [(J, seq, var(seq)) for J, seq in chirotope_sequences(u)]
        ok = max_var(u) <= n - k - 1
    wit = None
    if not ok and witness:
        v = bad_kernel_vector(z, k, statistic=varbar)
        wit = (v, extend_pos(v, k))
    return AmplituhedronVerdict(ok, k, n, z.rows, d, wit, trace)


def _order_key(x: Sequence[int]):
    # smallest support, then lexicographically first support, then the sign
    # representative whose first nonzero entry is positive
    supp = tuple(i for i, s in enumerate(x) if s)
    first = next((s for s in x if s), 0)
    return (len(supp), supp, first < 0)


def bad_kernel_vector(z: ExactMatrix, k: int, statistic=var) -> tuple[int, ...]:
    """A primitive integer vector of ker Z minimizing ``statistic``, if that is below k.

    The sign pattern is chosen on the covectors of the kernel's oriented matroid;
    ties go to the smallest support, then the lexicographically first support,
    then the representative with a positive leading entry.
    """
    ker = kernel(z)
    if ker.k == 0:
        raise ValueError("the kernel is zero, so no vector can collapse")
    nonzero = [x for x in covectors_of_chirotope(chirotope_of(ker)) if any(x)]
    best = min(nonzero, key=lambda x: (statistic(x), _order_key(x)))
    if statistic(best) > k - 1:
        raise ValueError(f"every nonzero kernel vector has {statistic.__name__} >= {k}")
    cols = [ker.basis.column(j) for j in range(ker.n)]
    coeffs = sign_solution(cols, best)
    return primitive_integer_vector(ker.vector(coeffs))


def counterexample_subspace(z: ExactMatrix, k: int) -> Subspace:
    """A TNN k-subspace V with ``dim Z(V) < k``; only exists when the map is ill-defined."""
    _check_sizes(z, k)
    return extend_nonneg(bad_kernel_vector(z, k), k)


def _intervals(signs: Sequence[int], k: int) -> list[list[int]]:
    """Split ``[0, n)`` into k intervals on which ``signs`` is weakly constant."""
    runs: list[list[int]] = []
    current = None
    for p, s in enumerate(signs):
        if not runs or (s and current is not None and s != current):
            runs.append([])
        if s:
            current = s
        runs[-1].append(p)
    while len(runs) < k:
        runs = _split_once(runs, signs)
    return runs


def _split_once(runs: list[list[int]], signs: Sequence[int]) -> list[list[int]]:
    # trailing zero blocks first, scanning from the right
    for idx in range(len(runs) - 1, -1, -1):
        run = runs[idx]
        last_nz = max((p for p in run if signs[p]), default=None)
        if last_nz is not None and last_nz != run[-1]:
            cut = run.index(last_nz) + 1
            return runs[:idx] + [run[:cut], run[cut:]] + runs[idx + 1:]
    first = runs[0]
    first_nz = next((p for p in first if signs[p]), None)
    if first_nz is not None and first_nz != first[0]:
        cut = first.index(first_nz)
        return [first[:cut], first[cut:]] + runs[1:]
    for idx, run in enumerate(runs):
        if len(run) >= 2:
            return runs[:idx] + [run[:-1], run[-1:]] + runs[idx + 1:]
    raise ValueError("cannot split further")  # only reachable if k > n


def extend_nonneg(v: Sequence, k: int) -> Subspace:
    """A totally nonnegative k-subspace containing v, built from interval rows."""
    vec = [to_fraction(x) for x in v]
    n = len(vec)
    if not any(vec):
        raise ValueError("the zero vector has no extension")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if var(vec) > k - 1:
        raise ValueError(f"var(v) = {var(vec)} > k-1 = {k - 1}, so no TNN subspace of dimension {k} contains v")
    rows = []
    for interval in _intervals(sign_vector(vec), k):
        row = [Fraction(0)] * n
        nonzero = any(vec[p] for p in interval)
        for p in interval:
            row[p] = vec[p] if nonzero else Fraction(1)
        rows.append(row)
    return row_reduce(ExactMatrix.from_rows(rows, n))


def extend_pos(v: Sequence, k: int) -> Subspace:
    """A totally positive k-subspace containing v: a rescaled Vandermonde subspace."""
    vec = [to_fraction(x) for x in v]
    n = len(vec)
    if not any(vec):
        raise ValueError("the zero vector has no extension")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if varbar(vec) > k - 1:
        raise ValueError(f"varbar(v) = {varbar(vec)} > k-1 = {k - 1}, so no TP subspace of dimension {k} contains v")
    base = vandermonde(k, n)
    cols = [base.basis.column(j) for j in range(n)]
    coeffs = sign_solution(cols, sign_vector(vec))
    if coeffs is None:  # impossible when varbar(v) <= k-1
        raise ArithmeticError("no Vandermonde vector with the sign pattern of v")
    w = base.vector(coeffs)
    factors = [a / b if b else Fraction(1) for a, b in zip(vec, w)]
    return scale_columns(base, factors)
