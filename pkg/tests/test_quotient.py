import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mertens_matrices.errors import DomainError
from mertens_matrices.quotient import (
    bar,
    below_proved_gap_bound,
    build_quotient,
    cardinality_formula,
    class_rep,
    gap_ratio_max,
)
from oracles import classes_brute, gap_ratio_brute, reps_brute

C_PROVED = 4 + 2 * math.sqrt(2)


@pytest.mark.parametrize(
    "n, reps",
    [(16, [1, 2, 3, 4, 5, 8, 16]), (1, [1]), (20, [1, 2, 3, 4, 5, 6, 10, 20]), (2, [1, 2]), (3, [1, 3])],
)
def test_reps(n, reps):
    qs = build_quotient(n)
    assert qs.reps.tolist() == reps
    assert qs.s == len(reps)


def test_reps_match_brute_force():
    for n in range(1, 1500):
        assert build_quotient(n).reps.tolist() == reps_brute(n), n


def test_reps_are_largest_class_elements():
    for n in (16, 37, 100, 361, 362):
        assert build_quotient(n).reps.tolist() == sorted(classes_brute(n))


@given(st.integers(1, 10**9))
def test_structure_invariants(n):
    qs = build_quotient(n)
    reps = qs.reps
    assert reps[0] == 1 and reps[-1] == n
    assert np.all(np.diff(reps) > 0)
    r = math.isqrt(n)
    assert reps[:r].tolist() == list(range(1, r + 1))
    assert np.array_equal(n // reps, reps[::-1])
    assert qs.s == cardinality_formula(n)
    # class sizes telescope to n
    assert int(np.diff(reps, prepend=0).sum()) == n


@given(st.integers(1, 10**12))
def test_position_matches_index(n):
    qs = build_quotient(min(n, 10**8))
    for k in qs.reps[:: max(1, qs.s // 50)].tolist():
        assert qs.position(k) == qs.index_of[k]


@pytest.mark.parametrize("n, k, expected", [(16, 2, 8), (16, 16, 1), (16, 5, 3), (16, 3, 5), (16, 1, 16)])
def test_bar(n, k, expected):
    qs = build_quotient(n)
    assert bar(qs, k) == expected
    assert bar(qs, bar(qs, k)) == k


def test_bar_outside_reps():
    qs = build_quotient(16)
    for k in (6, 7, 17, 0):
        with pytest.raises(DomainError):
            bar(qs, k)


@pytest.mark.parametrize("m, expected", [(7, 8), (6, 8), (8, 8), (9, 16), (16, 16), (5, 5), (17, None), (1000, None)])
def test_class_rep(m, expected):
    assert class_rep(build_quotient(16), m) == expected


def test_class_rep_agrees_with_classes():
    n = 250
    qs = build_quotient(n)
    for top, members in classes_brute(n).items():
        assert all(class_rep(qs, m) == top for m in members)


@pytest.mark.parametrize("n, expected", [(16, 7), (1, 1), (20, 8), (2, 2), (6, 4), (5, 3)])
def test_cardinality_formula(n, expected):
    assert cardinality_formula(n) == expected


def test_cardinality_formula_matches_case_split():
    # 2r - 1 if n < r^2 + r else 2r
    for n in range(1, 20_000):
        r = math.isqrt(n)
        assert cardinality_formula(n) == (2 * r - 1 if n < r * r + r else 2 * r)


@pytest.mark.parametrize("r", [10**3, 10**9, 10**15])
def test_cardinality_near_squares(r):
    # exact integer evaluation stays right where floats would misround
    for n, expected in ((r * r - 1, 2 * r - 2), (r * r, 2 * r - 1), (r * r + r - 1, 2 * r - 1), (r * r + r, 2 * r)):
        assert cardinality_formula(n) == expected


@pytest.mark.parametrize("n, expected", [(16, Fraction(2)), (2, Fraction(2)), (3, Fraction(3))])
def test_gap_ratio(n, expected):
    assert gap_ratio_max(build_quotient(n)) == expected


def test_gap_ratio_matches_brute():
    for n in range(2, 800):
        assert gap_ratio_max(build_quotient(n)) == gap_ratio_brute(n)


def test_gap_ratio_needs_two_reps():
    with pytest.raises(DomainError):
        gap_ratio_max(build_quotient(1))


def test_proved_gap_bound_predicate():
    assert below_proved_gap_bound(Fraction(3))
    assert below_proved_gap_bound(Fraction(6828, 1000))
    assert not below_proved_gap_bound(Fraction(6829, 1000))
    assert C_PROVED == pytest.approx(6.828427)


def test_floor_composition():
    from mertens_matrices.harness.verify import floor_pairs

    for n in range(1, 2001):
        i, j = floor_pairs(n)
        assert len(i) == sum(n // k for k in range(1, n + 1))
        assert np.array_equal((n // i) // j, n // (i * j)), n


def test_build_rejects_nonpositive():
    with pytest.raises(DomainError):
        build_quotient(0)
