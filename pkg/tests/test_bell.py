import random
from fractions import Fraction

import pytest

from nodal_atlas.bell import (
    SparsePoly,
    bell_transform,
    complete_bell,
    eval_complete_bell,
    partial_bell,
)
from nodal_atlas.partitions import bell_number, enumerate_partitions


def _poly(arity, terms):
    return SparsePoly(arity, {e: Fraction(c) for e, c in terms.items()})


def test_first_four_complete_polynomials():
    assert complete_bell(1) == _poly(1, {(1,): 1})
    assert complete_bell(2) == _poly(2, {(2, 0): 1, (0, 1): 1})
    assert complete_bell(3) == _poly(3, {(3, 0, 0): 1, (1, 1, 0): 3, (0, 0, 1): 1})
    assert complete_bell(4) == _poly(
        4,
        {(4, 0, 0, 0): 1, (2, 1, 0, 0): 6, (1, 0, 1, 0): 4, (0, 2, 0, 0): 3, (0, 0, 0, 1): 1},
    )


def test_complete_is_sum_of_partials():
    for r in range(1, 16):
        total = SparsePoly(r)
        for l in range(1, r + 1):
            part = partial_bell(r, l)
            padded = SparsePoly(
                r, {e + (0,) * (r - len(e)): c for e, c in part.terms.items()}
            )
            total = total + padded
        assert total == complete_bell(r)


def test_partial_bell_values():
    # number of ways to split a 6-set into 3 blocks
    assert partial_bell(6, 3).evaluate([1] * 6) == 90
    assert partial_bell(4, 2) == _poly(4, {(1, 0, 1, 0): 4, (0, 2, 0, 0): 3})


def test_partial_bell_bad_blocks():
    with pytest.raises(ValueError):
        partial_bell(4, 0)
    with pytest.raises(ValueError):
        partial_bell(4, 5)
    with pytest.raises(ValueError):
        complete_bell(16)


def test_coefficients_count_set_partitions():
    for r in range(1, 9):
        counted = {}
        for pi in enumerate_partitions(r):
            sig = pi.signature()
            expo = tuple(sig.get(i, 0) for i in range(1, r + 1))
            counted[expo] = counted.get(expo, 0) + 1
        assert {e: int(c) for e, c in complete_bell(r).terms.items()} == counted


def test_all_ones_gives_bell_numbers():
    for r in range(1, 16):
        assert eval_complete_bell(r, [1] * r) == bell_number(r)


def test_dual_path_evaluation_random():
    # eval_complete_bell raises internally if its two routes disagree
    rng = random.Random(99)
    for _ in range(200):
        r = rng.randint(1, 10)
        values = [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(r)]
        direct = complete_bell(r).evaluate(values)
        assert eval_complete_bell(r, values) == direct


def test_eval_r_zero():
    assert eval_complete_bell(0, []) == 1


def test_bell_transform_is_exp():
    # b_r built from log coefficients must match the series exponential
    from nodal_atlas.qseries import PowerSeries, series_exp

    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 10)
        log_coeffs = [Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(n)]
        out = bell_transform(log_coeffs)
        series = series_exp(PowerSeries([0] + log_coeffs, n))
        assert out == series.coeffs
