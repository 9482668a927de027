"""Exact-arithmetic substrate: solve/rank behavior and exactness oracles."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypdiv import exactlin
from hypdiv.exactlin import (
    Inconsistent,
    LinearSystem,
    StructuralError,
    Underdetermined,
    Unique,
    rank,
    solve,
)


def test_symmetric_two_by_two():
    sys = LinearSystem(("x", "y"))
    sys.add_row({"x": 1, "y": 1}, 2)
    sys.add_row({"x": 1, "y": -1}, 0)
    result = solve(sys)
    assert isinstance(result, Unique)
    assert result.assignment == {"x": Fraction(1), "y": Fraction(1)}


def test_weierstrass_subsystem_reduction():
    # hand-reduced g=2 subsystem: eliminating the shared eta unknown from
    # the horizontal/diagonal pair leaves 2a = 24c, with c pinned to -1/10
    sys = LinearSystem(("a", "c"))
    sys.add_row({"a": 2, "c": -24}, 0)
    sys.add_row({"c": 1}, Fraction(-1, 10))
    result = solve(sys)
    assert isinstance(result, Unique)
    assert result.assignment == {"a": Fraction(-6, 5), "c": Fraction(-1, 10)}


def test_inconsistent_with_certificate():
    sys = LinearSystem(("x",))
    sys.add_row({"x": 1}, 1)
    sys.add_row({"x": 1}, 2)
    result = solve(sys)
    assert isinstance(result, Inconsistent)
    assert result.residual != 0
    # the certificate really combines the original rows into 0 = nonzero
    lhs = Fraction(0)
    rhs = Fraction(0)
    for r, mult in result.certificate.items():
        coeffs, row_rhs = sys.rows[r]
        lhs += mult * coeffs.get(0, Fraction(0))
        rhs += mult * row_rhs
    assert lhs == 0 and rhs == result.residual


def test_underdetermined_reports_free_variables():
    sys = LinearSystem(("x", "y", "z"))
    sys.add_row({"x": 1, "y": 1}, 3)
    result = solve(sys)
    assert isinstance(result, Underdetermined)
    assert set(result.free) == {"y", "z"}
    assert result.particular["x"] == 3


def test_rank_examples():
    zero = LinearSystem.from_dense(("a", "b", "c"), [([0, 0, 0], 0)] * 3)
    assert rank(zero) == 0

    identity = LinearSystem.from_dense(
        ("a", "b", "c", "d"),
        [([1 if i == j else 0 for j in range(4)], 1) for i in range(4)],
    )
    assert rank(identity) == 4

    proportional = LinearSystem.from_dense(("x", "y"), [([1, 2], 0), ([2, 4], 0)])
    assert rank(proportional) == 1


def test_row_length_mismatch_is_structural_error():
    sys = LinearSystem(("x", "y"))
    with pytest.raises(StructuralError):
        sys.add_dense_row([1, 2, 3], 0)
    with pytest.raises(StructuralError):
        sys.add_row({"w": 1}, 0)


small_fraction = st.fractions(
    min_value=-8, max_value=8, max_denominator=6
)


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=1, max_value=5),
    st.integers(min_value=1, max_value=6),
    st.data(),
)
def test_planted_solution_recovered(n_vars, n_rows, data):
    names = tuple(f"x{j}" for j in range(n_vars))
    planted = [data.draw(small_fraction) for _ in range(n_vars)]
    sys = LinearSystem(names)
    for _ in range(n_rows):
        row = [data.draw(st.integers(min_value=-5, max_value=5)) for _ in range(n_vars)]
        rhs = sum(c * x for c, x in zip(row, planted))
        sys.add_dense_row(row, rhs)
    result = solve(sys)
    assert not isinstance(result, Inconsistent)
    assignment = result.assignment if isinstance(result, Unique) else result.particular
    assert all(v == 0 for v in exactlin.residual(sys, assignment))
    if isinstance(result, Unique):
        assert [result.assignment[v] for v in names] == planted


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=5), st.data())
def test_unique_iff_full_rank_agreement(n_vars, n_rows, data):
    names = tuple(f"x{j}" for j in range(n_vars))
    sys = LinearSystem(names)
    augmented = LinearSystem(names + ("__rhs__",))
    for _ in range(n_rows):
        row = [data.draw(st.integers(min_value=-4, max_value=4)) for _ in range(n_vars)]
        rhs = data.draw(st.integers(min_value=-4, max_value=4))
        sys.add_dense_row(row, rhs)
        augmented.add_dense_row(row + [rhs], 0)
    rank_a = rank(sys)
    rank_ab = rank(augmented)
    result = solve(sys)
    assert isinstance(result, Unique) == (rank_a == rank_ab == n_vars)
    assert isinstance(result, Inconsistent) == (rank_ab > rank_a)
    if not isinstance(result, Inconsistent):
        assert result.rank == rank_a


@settings(max_examples=100, deadline=None)
@given(
    st.integers(min_value=-10**6, max_value=10**6),
    st.integers(min_value=1, max_value=10**6),
    st.integers(min_value=-10**6, max_value=10**6),
    st.integers(min_value=1, max_value=10**6),
)
def test_addition_matches_cross_multiplication_oracle(a, b, c, d):
    # independent oracle: cross-multiply, then reduce with gcd by hand
    total = Fraction(a, b) + Fraction(c, d)
    num, den = a * d + c * b, b * d
    common = gcd(abs(num), den)
    num, den = num // common, den // common
    assert (total.numerator, total.denominator) == (num, den)
