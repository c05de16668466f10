from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vortexcoh.exactnum import DomainError, binomial
from vortexcoh.orthopoly import (
    PolyQ,
    assoc_legendre_zero,
    assoc_legendre_zero_from_derivatives,
    gegenbauer,
    gegenbauer_zero,
    hermite,
    jacobi,
    jacobi_shifted_at,
    jacobi_shifted_zero,
    laguerre,
    legendre,
    polys_equal,
    product_coefficients,
)

points = st.fractions(min_value=-3, max_value=3, max_denominator=11)


def test_polyq_basics():
    x = PolyQ.x()
    p = (x + 1) ** 3
    assert p.coefficients == (1, 3, 3, 1)
    assert p.derivative(2) == PolyQ([6, 6])
    assert p.compose(x - 1) == x**3
    assert (p - p) == 0 and PolyQ().degree == -1
    assert polys_equal([1, 2, 0], PolyQ([1, 2]))


def test_low_degree_families():
    assert hermite(3) == PolyQ([0, -12, 0, 8])
    assert hermite(4) == PolyQ([12, 0, -48, 0, 16])
    assert legendre(2) == PolyQ([F(-1, 2), 0, F(3, 2)])
    assert laguerre(2, 0) == PolyQ([1, -2, F(1, 2)])
    assert jacobi(1, 2, 3) == PolyQ([F(-1, 2), F(7, 2)])


@pytest.mark.parametrize("n", range(0, 8))
def test_hermite_recurrence_and_parity(n):
    h = hermite(n + 2)
    assert h == PolyQ([0, 2]) * hermite(n + 1) - 2 * (n + 1) * hermite(n)
    assert h(-2) == (-1) ** n * h(2)


@given(st.integers(0, 6), points, points)
def test_jacobi_degree_one_and_endpoint(n, a, b):
    p = jacobi(n, a, b)
    # P_n(1) = binom(n + alpha, n)
    assert p(1) == binomial(n + a, n)
    if n == 1:
        assert p == PolyQ([(a - b) / 2, (a + b + 2) / 2])


@pytest.mark.parametrize("n", range(0, 10))
def test_gegenbauer_half_is_legendre(n):
    assert gegenbauer(n, F(1, 2)) == legendre(n)


@given(st.integers(0, 12), points)
def test_gegenbauer_zero_matches_recurrence(n, lam):
    assert gegenbauer(n, lam)(0) == gegenbauer_zero(n, lam)


def test_product_coefficients():
    assert product_coefficients(1, 1) == (1, 0, -1)
    assert product_coefficients(2, 0) == (1, -2, 1)
    with pytest.raises(DomainError):
        product_coefficients(-1, 0)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(5) for m in range(5)])
def test_shifted_jacobi_matches_explicit_sum(n, m):
    for k in range(n + m + 1):
        assert jacobi_shifted_zero(k, n, m) == jacobi(k, n - k, m - k)(0)
        for x in (F(1, 3), F(-2, 7)):
            assert jacobi_shifted_at(k, n, m, x) == jacobi(k, n - k, m - k)(x)


def test_shifted_jacobi_pole_and_range():
    with pytest.raises(DomainError):
        jacobi_shifted_at(3, 1, 4, 1)
    assert jacobi_shifted_zero(9, 2, 3) == 0
    with pytest.raises(DomainError):
        jacobi_shifted_zero(-1, 2, 3)


def test_assoc_legendre_n1_values():
    assert [assoc_legendre_zero(1, mu) for mu in (1, 0, -1)] == [-1, 0, F(1, 2)]
    assert assoc_legendre_zero(1, -2) == F(1, 3)
    assert assoc_legendre_zero(1, -3) == F(1, 8)
    with pytest.raises(DomainError):
        assoc_legendre_zero(1, -4)


@pytest.mark.parametrize("n", range(0, 13))
def test_assoc_legendre_closed_form_vs_derivatives(n):
    for mu in range(-n, n + 1):
        assert assoc_legendre_zero(n, mu) == assoc_legendre_zero_from_derivatives(n, mu)
