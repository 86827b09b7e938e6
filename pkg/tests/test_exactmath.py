from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given, strategies as st

from oracles import nested_fraction
from p2stable.exactmath import (
    DomainError,
    hj_eval,
    hj_expand,
    is_negative_definite,
    mod_inverse,
    rational_str,
    solve_exact,
    to_rational,
)


@pytest.mark.parametrize("r,a,expected", [(2, 1, [2]), (4, 1, [4]), (25, 4, [7, 2, 2, 2]), (5, 2, [3, 2])])
def test_hj_expand_examples(r, a, expected):
    assert hj_expand(r, a) == expected
    assert nested_fraction(expected) == Fraction(r, a)


def test_hj_expand_smooth_is_empty():
    assert hj_expand(1, 1) == []


@pytest.mark.parametrize("r,a", [(4, 2), (5, 5), (5, 0), (3, 7)])
def test_hj_expand_rejects(r, a):
    with pytest.raises(DomainError):
        hj_expand(r, a)


@pytest.mark.parametrize("coeffs,expected", [([2], (2, 1)), ([3, 2], (5, 2)), ([7, 2, 2, 2], (25, 4))])
def test_hj_eval_examples(coeffs, expected):
    assert hj_eval(coeffs) == expected


def test_hj_eval_rejects_small_entries():
    with pytest.raises(DomainError):
        hj_eval([3, 1])
    with pytest.raises(DomainError):
        hj_eval([])


def test_hj_roundtrip_exhaustive():
    for r in range(2, 201):
        for a in range(1, r):
            if gcd(r, a) == 1:
                coeffs = hj_expand(r, a)
                assert all(b >= 2 for b in coeffs)
                assert hj_eval(coeffs) == (r, a)
                assert nested_fraction(coeffs) == Fraction(r, a)


def test_dual_fraction_identity_exhaustive():
    for r in range(2, 201):
        for a in range(1, r):
            if gcd(r, a) == 1:
                b, c = hj_expand(r, a), hj_expand(r, r - a)
                k, l = len(b), len(c)
                assert sum(x - 1 for x in b) == sum(x - 1 for x in c) == k + l - 1


@pytest.mark.parametrize("a,r,expected", [(1, 5, 1), (4, 25, 19), (2, 5, 3)])
def test_mod_inverse_examples(a, r, expected):
    assert mod_inverse(a, r) == expected


def test_mod_inverse_rejects():
    with pytest.raises(DomainError):
        mod_inverse(2, 4)
    with pytest.raises(DomainError):
        mod_inverse(1, 1)


@given(st.integers(2, 500), st.integers(1, 499))
def test_mod_inverse_property(r, a):
    a %= r
    if a == 0 or gcd(a, r) != 1:
        return
    inv = mod_inverse(a, r)
    assert 1 <= inv < r and (a * inv) % r == 1


@given(st.fractions(), st.fractions(), st.fractions())
def test_rational_exactness(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert to_rational(rational_str(x)) == x


@pytest.mark.parametrize("bad", ["0.5", "1e3", "", "x", 0.5, True, "1/0"])
def test_to_rational_rejects_inexact(bad):
    with pytest.raises(DomainError):
        to_rational(bad)


def test_rational_str_forms():
    assert rational_str(Fraction(-18)) == "-18"
    assert rational_str(Fraction(8, 3)) == "8/3"
    assert rational_str(Fraction(4, -6)) == "-2/3"


@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(st.integers(-9, 9), min_size=3, max_size=3))
def test_solve_exact_matches_sympy(rows, rhs):
    m = sympy.Matrix(rows)
    if m.det() == 0:
        with pytest.raises(DomainError):
            solve_exact(rows, rhs)
        return
    expected = m.LUsolve(sympy.Matrix(rhs))
    got = solve_exact(rows, rhs)
    assert got == [Fraction(str(v)) for v in expected]


def test_negative_definite():
    assert is_negative_definite([[-2, 1], [1, -2]])
    assert not is_negative_definite([[-2, 1, 1], [1, -2, 1], [1, 1, -2]])
    assert not is_negative_definite([[1]])
