import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from generators import random_matrix
from grassvar.exact import (
    ExactMatrix,
    Subspace,
    alt_twist,
    cyclic_shift,
    determinant,
    image_dim,
    kernel,
    maximal_minors,
    minors,
    orthogonal_complement,
    primitive_integer_vector,
    rank,
    row_reduce,
    scale_columns,
    subsets,
    to_fraction,
    vandermonde,
)

F = Fraction
small = st.integers(-3, 3)


def matrices(max_rows=3, max_cols=5):
    return st.integers(1, max_cols).flatmap(
        lambda n: st.integers(0, max_rows).flatmap(
            lambda k: st.lists(st.lists(small, min_size=n, max_size=n), min_size=k, max_size=k).map(
                lambda rows: ExactMatrix.from_rows(rows, n))))


@pytest.mark.parametrize("raw, expected", [(3, F(3)), ("-5/10", F(-1, 2)), (F(2, 4), F(1, 2)), ("7", F(7))])
def test_to_fraction_accepts_exact_inputs(raw, expected):
    assert to_fraction(raw) == expected


@pytest.mark.parametrize("bad", [0.5, True, None, "x"])
def test_to_fraction_rejects_inexact_or_junk(bad):
    with pytest.raises((TypeError, ValueError)):
        to_fraction(bad)


def test_subsets_are_lexicographic_and_one_based():
    assert list(subsets(4, 2)) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert list(subsets(3, 0)) == [()]


def test_ragged_rows_are_rejected():
    with pytest.raises(ValueError):
        ExactMatrix.from_rows([[1, 2], [3]])


@pytest.mark.parametrize("rows, det", [
    ([[2, -1], [1, 2]], 5),
    ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 0),
    ([[0, 1], [1, 0]], -1),
    ([], 1),
    ([[F(1, 2), 1], [1, 4]], 1),
])
def test_determinant_small_cases(rows, det):
    assert determinant([[to_fraction(x) for x in r] for r in rows]) == det


def _leibniz(rows):
    n = len(rows)
    total = F(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = F((-1) ** inversions)
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += term
    return total


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_leibniz(rows):
    rows = [[F(x) for x in r] for r in rows]
    assert determinant(rows) == _leibniz(rows)


def test_plucker_example_from_spanning_matrix_and_canonical_form():
    m = ExactMatrix.from_rows([[1, 0, -2, 3], [0, 2, 1, 4]])
    raw = minors(m)
    assert [raw[I] for I in subsets(4, 2)] == [2, 1, 4, 4, -6, -11]
    canon = maximal_minors(row_reduce(m))
    assert all(canon[I] == raw[I] / 2 for I in raw)


def test_nongeneric_plucker_example():
    delta = maximal_minors(Subspace.span([[1, 3, 0], [0, 0, 1]]))
    assert delta == {(1, 2): 0, (1, 3): 1, (2, 3): 3}


@settings(max_examples=60)
@given(matrices())
def test_subspace_equality_is_rref_equality(m):
    v = row_reduce(m)
    rng = random.Random(v.k * 31 + v.n)
    # an invertible recombination of the rows spans the same subspace
    if v.k:
        while True:
            g = random_matrix(rng, v.k, v.k, -2, 2)
            if rank(g) == v.k:
                break
        assert row_reduce(g @ v.basis) == v
    assert v.k == rank(m)


@settings(max_examples=60)
@given(matrices())
def test_plucker_coordinates_scale_with_the_spanning_matrix(m):
    v = row_reduce(m)
    if v.k != m.rows:
        return
    raw, canon = minors(m), maximal_minors(v)
    ratios = {raw[I] / canon[I] for I in canon if canon[I]}
    assert len(ratios) == 1 and 0 not in ratios
    assert all(raw[I] == 0 for I in canon if canon[I] == 0)


@settings(max_examples=60)
@given(matrices())
def test_complement_and_kernel(m):
    v = row_reduce(m)
    perp = orthogonal_complement(v)
    assert perp.k == v.n - v.k
    for a in v.rows():
        for b in perp.rows():
            assert sum(x * y for x, y in zip(a, b)) == 0
    assert orthogonal_complement(perp) == v
    assert kernel(m) == perp


@settings(max_examples=40)
@given(matrices())
def test_alt_twist_is_an_involution(m):
    v = row_reduce(m)
    assert alt_twist(alt_twist(v)) == v


def test_cyclic_shift_moves_first_column_to_the_end_with_sign():
    v = Subspace.span([[1, 2, 3], [0, 1, 1]])
    w = cyclic_shift(v, 2)
    # for k = 2 the wrapped column picks up the factor (-1)^(k-1) = -1
    assert w == Subspace.span([[2, 3, -1], [1, 1, 0]])
    assert cyclic_shift(v, 1) == v


@settings(max_examples=40)
@given(matrices())
def test_cyclic_shift_full_turn_is_identity(m):
    v = row_reduce(m)
    if v.n < 2:
        return
    w = v
    for _ in range(v.n):
        w = cyclic_shift(w, 2)
    assert w == v


def test_subspace_helpers():
    v = Subspace.span([[1, 0, 2], [0, 1, -1]])
    assert v.contains((2, 3, 1)) and not v.contains((1, 1, 0))
    assert v.coordinates((2, 3, 1)) == (2, 3)
    assert v.vector((2, 3)) == (2, 3, 1)
    assert v.restrict([1, 3]) == Subspace.full(2)
    assert Subspace.zero(3).k == 0 and Subspace.full(3).k == 3


def test_scale_columns_multiplies_pluckers_by_the_product():
    v = Subspace.span([[1, 0, 2], [0, 1, -1]])
    w = scale_columns(v, [2, 3, 5])
    dv, dw = maximal_minors(v), maximal_minors(w)
    factors = {(1, 2): 6, (1, 3): 10, (2, 3): 15}
    ratio = {dw[I] / (dv[I] * factors[I]) for I in dv}
    assert len(ratio) == 1


def test_image_dimension_and_vandermonde_positivity():
    z = ExactMatrix.from_rows([[2, -1, 1, 1], [1, 2, -1, 3]])
    assert image_dim(z, Subspace.span([[1, 0, 0, 0], [0, -3, -5, 0]])) == 1
    assert all(x > 0 for x in maximal_minors(vandermonde(3, 6)).values())


@pytest.mark.parametrize("vec, expected", [
    ((F(1, 2), F(-3, 4)), (2, -3)),
    ((0, 0), (0, 0)),
    ((6, -9, 3), (2, -3, 1)),
])
def test_primitive_integer_vector(vec, expected):
    assert primitive_integer_vector(vec) == expected
