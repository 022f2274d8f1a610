from fractions import Fraction
from math import gcd

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from liecas.exact import (
    DimensionError,
    Polynomial,
    bareiss_rank,
    charpoly,
    monomials_of_degree,
    nullspace,
    poly_arith,
    poly_diff,
    poly_eval,
    rank,
    rational_roots,
    rref,
    to_rational,
)

from conftest import matrices, polynomials, small_rationals

F = Fraction
x1, x2, x3 = (Polynomial.var(3, j) for j in range(3))


def naive_rank(rows):
    """Plain Gaussian elimination over Fractions (oracle for Bareiss)."""
    m = [[F(v) for v in r] for r in rows]
    rk = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rk, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for r in range(len(m)):
            if r != rk and m[r][c] != 0:
                f = m[r][c] / m[rk][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rk])]
        rk += 1
    return rk


# --- poly_arith ------------------------------------------------------------

def test_add_cancels():
    assert (x1 + x2) + (-x1) == x2
    assert poly_arith(x1 + x2, -x1, "add") == x2


def test_mul_square():
    assert poly_arith(x1, x1, "mul") == Polynomial(3, {(2, 0, 0): 1})


def test_scale_half():
    assert poly_arith(x1 * x2, None, "scale", F(1, 2)) == Polynomial(3, {(1, 1, 0): F(1, 2)})


def test_no_zero_terms_stored():
    p = (x1 + x2) - x2 - x1
    assert p.is_zero() and p.terms == {}


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        x1 + Polynomial.var(2, 0)


def test_floats_rejected():
    with pytest.raises(TypeError):
        to_rational(0.5)


# --- poly_diff -------------------------------------------------------------

def test_diff_examples():
    assert poly_diff(x2 * x2, 1) == x2.scale(2)
    assert poly_diff(x2, 0).is_zero()
    assert poly_diff(x3 * x3 + 4 * x1 * x2, 2) == x3.scale(2)


def test_diff_index_out_of_range():
    with pytest.raises(IndexError):
        x1.diff(3)


# --- poly_eval -------------------------------------------------------------

def test_eval_examples():
    assert poly_eval(Polynomial.var(1, 0) ** 2, [3]) == 9
    assert poly_eval(x3 * x3 + 4 * x1 * x2, [1, 1, 2]) == 8
    assert poly_eval(Polynomial.zero(3), [5, 6, 7]) == 0


def test_eval_dimension_mismatch():
    with pytest.raises(DimensionError):
        x1.eval([1, 2])


def test_grlex_iteration_order():
    p = x3 + x1 * x2 + x1 + x3 * x3
    assert [m for m, _ in p.items()] == [(1, 1, 0), (0, 0, 2), (1, 0, 0), (0, 0, 1)]
    assert monomials_of_degree(2, 2) == [(2, 0), (1, 1), (0, 2)]


def test_format():
    assert (x3 * x3 + 4 * x1 * x2).format(["e", "f", "h"]) == "4*e*f + h^2"
    assert (x1 - x2.scale(F(1, 2))).format() == "x1 - 1/2*x2"


@given(polynomials(), polynomials(), polynomials())
def test_distributive(a, b, c):
    assert (a + b) * c == a * c + b * c


@given(polynomials(), polynomials(), st.integers(0, 2))
def test_leibniz(p, q, j):
    assert (p * q).diff(j) == p.diff(j) * q + p * q.diff(j)


@given(polynomials(), polynomials())
def test_exact_division_roundtrip(p, q):
    if q.is_zero():
        return
    assert (p * q).exact_div(q) == p


@given(small_rationals, small_rationals)
def test_rationals_reduced(a, b):
    for v in (a + b, a * b, a - b):
        assert v.denominator > 0 and gcd(abs(v.numerator), v.denominator) == 1


# --- rank / nullspace ------------------------------------------------------

def test_rank_examples():
    assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]) == 2


def test_nullspace_examples():
    assert nullspace([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []
    assert len(nullspace([[0, 0, 0], [0, 0, 0]])) == 3
    assert nullspace([[1, 1]]) == [[1, -1]]


def test_nullspace_needs_ncols_without_rows():
    assert nullspace([], 2) == [[1, 0], [0, 1]]
    with pytest.raises(ValueError):
        nullspace([])


@given(matrices())
def test_rank_nullity(m):
    ker = nullspace(m)
    assert rank(m) + len(ker) == len(m[0])
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
        assert next(x for x in v if x) == 1


@given(matrices())
def test_bareiss_matches_naive_elimination(m):
    assert rank(m) == naive_rank(m)


@given(matrices())
def test_rref_rows_have_leading_one(m):
    for row in rref(m):
        assert next(x for x in row if x) == 1


def test_bareiss_over_polynomial_ring():
    # rank of A(x) for the Heisenberg algebra is 2
    A = [[0 * x1, x3, 0 * x1], [-x3, 0 * x1, 0 * x1], [0 * x1, 0 * x1, 0 * x1]]
    r = bareiss_rank(A, divide=lambda a, b: a.exact_div(b), is_zero=lambda p: p.is_zero())
    assert r == 2


# --- roots / charpoly ------------------------------------------------------

def test_rational_roots_examples():
    assert rational_roots([1, 0, -1]) == [-1, 1]
    assert rational_roots([1, 0, 1]) == []
    assert rational_roots([1, -2, 1]) == [1, 1]


def test_rational_roots_fractions_and_zero():
    # (2t - 1)(t + 3) t^2 = 2t^4 + 5t^3 - 3t^2
    assert rational_roots([2, 5, -3, 0, 0]) == [-3, 0, 0, F(1, 2)]
    assert rational_roots([F(1, 3), F(-1, 6)]) == [F(1, 2)]


def test_rational_roots_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        rational_roots([0, 0])


@settings(max_examples=60)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_charpoly_matches_sympy(m):
    t = sp.Symbol("t")
    expected = [F(int(sp.fraction(c)[0]), int(sp.fraction(c)[1])) for c in sp.Matrix(m).charpoly(t).all_coeffs()]
    assert charpoly(m) == expected
