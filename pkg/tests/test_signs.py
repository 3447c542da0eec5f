from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grassvar.signs import (
    GaleOrder,
    alt,
    compose,
    conformal,
    format_signs,
    gale_leq,
    negate,
    parse_signs,
    restrict,
    sv_leq,
    var,
    varbar,
)

signvecs = st.lists(st.sampled_from((-1, 0, 1)), min_size=1, max_size=9).map(tuple)


def varbar_by_filling(x):
    zeros = [p for p, s in enumerate(x) if s == 0]
    best = -1
    for fill in product((1, -1), repeat=len(zeros)):
        y = list(x)
        for p, f in zip(zeros, fill):
            y[p] = f
        best = max(best, var(y))
    return best


@pytest.mark.parametrize("text, v, vb", [
    ("+-0-", 1, 3),
    ("0000", -1, 3),
    ("+", 0, 0),
    ("+0+", 0, 2),
    ("-++0-", 2, 2),
    ("", -1, -1),
])
def test_var_and_varbar_values(text, v, vb):
    x = parse_signs(text)
    assert var(x) == v
    assert varbar(x) == vb


def test_parse_and_format_round_trip():
    assert parse_signs("+-0") == (1, -1, 0)
    assert format_signs((1, -1, 0)) == "+-0"
    with pytest.raises(ValueError):
        parse_signs("+x")


@given(signvecs)
def test_varbar_dp_equals_brute_filling(x):
    assert varbar(x) == varbar_by_filling(x)


@given(signvecs)
def test_var_at_most_varbar(x):
    assert var(x) <= varbar(x) <= len(x) - 1


@given(signvecs)
def test_var_plus_varbar_of_alt_is_n_minus_one(x):
    if any(x):
        assert var(x) + varbar(alt(x)) == len(x) - 1


@given(signvecs)
def test_statistics_ignore_reversal_and_negation(x):
    assert var(x[::-1]) == var(x) == var(negate(x))
    assert varbar(x[::-1]) == varbar(x)


def test_alt_flips_even_positions():
    assert alt((1, 1, 1, 1)) == (1, -1, 1, -1)
    assert alt((3, -2, 0)) == (3, 2, 0)


@given(signvecs, signvecs)
def test_composition_rules(x, y):
    if len(x) != len(y):
        return
    xy = compose(x, y)
    assert all(a == (b if b else c) for a, b, c in zip(xy, x, y))
    assert sv_leq(x, xy)
    if conformal(x, y):
        assert xy == compose(y, x)


def test_composition_rejects_length_mismatch():
    with pytest.raises(ValueError):
        compose((1, 0), (1,))


def test_restrict_is_one_based():
    assert restrict((5, 6, 7, 8), [2, 4]) == (6, 8)


@pytest.mark.parametrize("i, j, start, expected", [
    ((1, 3), (2, 3), 1, True),
    ((2, 3), (1, 3), 1, False),
    ((1, 2, 5), (1, 3, 4), 1, False),
    ((1, 3, 4), (1, 2, 5), 1, False),
    ((4, 1), (2, 3), 4, True),  # 4 < 1 < 2 < 3 in the rotated order
])
def test_gale_order(i, j, start, expected):
    assert gale_leq(i, j, GaleOrder(max(i + j), start)) is expected


def test_gale_order_validates_start():
    with pytest.raises(ValueError):
        GaleOrder(3, 4)
    assert GaleOrder(5, 3).sort([1, 4, 3, 5]) == (3, 4, 5, 1)
