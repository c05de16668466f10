from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vortexcoh.exactnum import DomainError, factorial, pochhammer
from vortexcoh.hyper import (
    DegenerateParameterError,
    HyperSpec,
    f32_reduce_check,
    f32_unit_closed_form,
    f43_reduce_check,
    gauss_regularized,
    gauss_unit,
    hyp,
    legendre_2f1_check,
    pfq,
    rational_sqrt,
)

POINTS = [F(1), F(1, 2), F(-1), F(1, 3)]


def test_spec_validation():
    with pytest.raises(DomainError):
        HyperSpec([F(1, 2), 2], [3], 1)
    with pytest.raises(DegenerateParameterError):
        HyperSpec([-5, 1], [-2], 1)
    # a bottom that vanishes only after the series has stopped is harmless
    assert HyperSpec([-2, 1], [-4], 1).length == 2
    assert pfq(HyperSpec([0, 7], [3], 5)) == 1


@given(st.integers(0, 10), st.fractions(min_value=-5, max_value=5, max_denominator=7), st.integers(1, 9))
def test_chu_vandermonde(n, b, c):
    assert hyp([-n, b], [c], 1) == pochhammer(c - b, n) / pochhammer(c, n)


@pytest.mark.parametrize("a,b", [(a, b) for a in range(6) for b in range(6)])
def test_gauss_unit(a, b):
    assert gauss_unit(a, b) == F(1, comb(a + b, a))


@given(st.integers(0, 9), st.integers(0, 9), st.integers(1, 8), st.sampled_from([F(-1), F(1, 2), F(3)]))
def test_regularized_matches_literal(a, b, c, z):
    assert gauss_regularized(-a, -b, c, z) == hyp([-a, -b], [c], z) / factorial(c - 1)


def test_regularized_nonpositive_bottom_matches_limit():
    # 2F1(a, b; c; z)/Gamma(c) at c = 1 - j equals (a)_j (b)_j z^j / j! * 2F1(a+j, b+j; j+1; z)
    a, b, z = -6, -4, F(-1)
    for j in range(1, 5):
        limit = pochhammer(a, j) * pochhammer(b, j) * z**j / factorial(j) * hyp([a + j, b + j], [j + 1], z)
        assert gauss_regularized(a, b, 1 - j, z) == limit
    assert gauss_regularized(-2, -3, -5, 1) == 0
    assert gauss_regularized(F(-3), F(1, 2), -1, F(1, 2)) == gauss_regularized(-3, F(1, 2), -1, F(1, 2))
    with pytest.raises(DomainError):
        gauss_regularized(F(1, 2), 3, 1, 1)


@pytest.mark.parametrize("n", range(1, 16))
@pytest.mark.parametrize("z", POINTS)
def test_reductions(n, z):
    assert f32_reduce_check(n, z).passed
    assert f43_reduce_check(n, z).passed


@pytest.mark.parametrize("n", range(1, 16))
def test_unit_closed_form(n):
    report = f32_unit_closed_form(n)
    assert report.passed and report.identity_id == "z32"


def test_unit_closed_form_n1():
    # 3F2(2, 3/2, 0; ...) = 1 and the closed form gives 1 * 1 * 1
    assert f32_unit_closed_form(1).lhs == "1/1"


@pytest.mark.parametrize("z", [F(1), F(4), F(1, 4), F(9)])
def test_legendre_2f1(z):
    for n in range(0, 12):
        assert legendre_2f1_check(n, z).passed


def test_legendre_2f1_needs_square():
    assert rational_sqrt(F(9, 4)) == F(3, 2)
    with pytest.raises(DomainError):
        legendre_2f1_check(3, 2)
    with pytest.raises(DomainError):
        legendre_2f1_check(3, 0)
    with pytest.raises(DomainError):
        f32_reduce_check(0, 1)
