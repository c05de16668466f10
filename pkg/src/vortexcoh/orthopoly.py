"""Exact orthogonal polynomials over the rationals.

Polynomials are dense coefficient tuples (``PolyQ``).  The Jacobi values with
shifted, possibly negative, parameters ``P_k^{(n-k, m-k)}`` are defined only
through the Rodrigues form, i.e. by differentiating the honest polynomial
``(1-x)^n (1+x)^m``; the hypergeometric representation breaks down there.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from vortexcoh.exactnum import (
    DomainError,
    RatLike,
    binomial,
    double_factorial,
    factorial,
    gamma_half,
    neg_one_pow,
    pochhammer,
    rat,
)


class PolyQ:
    """Polynomial with rational coefficients, index = power of x."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[RatLike] = ()):
        coeffs = [rat(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def x(cls) -> PolyQ:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: RatLike) -> Fraction:
        x = rat(x)
        out = Fraction(0)
        for c in reversed(self.coefficients):
            out = out * x + c
        return out

    def __add__(self, other) -> PolyQ:
        other = _as_poly(other)
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        a = a + (Fraction(0),) * (n - len(a))
        b = b + (Fraction(0),) * (n - len(b))
        return PolyQ(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> PolyQ:
        return PolyQ(-c for c in self.coefficients)

    def __sub__(self, other) -> PolyQ:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> PolyQ:
        return _as_poly(other) - self

    def __mul__(self, other) -> PolyQ:
        other = _as_poly(other)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return PolyQ()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> PolyQ:
        out = PolyQ([1])
        for _ in range(k):
            out = out * self
        return out

    def derivative(self, times: int = 1) -> PolyQ:
        c = list(self.coefficients)
        for _ in range(times):
            c = [j * c[j] for j in range(1, len(c))]
        return PolyQ(c)

    def compose(self, inner: PolyQ) -> PolyQ:
        out = PolyQ()
        for c in reversed(self.coefficients):
            out = out * inner + c
        return out

    def to_floats(self) -> list[float]:
        return [float(c) for c in self.coefficients]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyQ([other])
        if isinstance(other, PolyQ):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"PolyQ({[str(c) for c in self.coefficients]})"


def _as_poly(p) -> PolyQ:
    return p if isinstance(p, PolyQ) else PolyQ([p])


@lru_cache(maxsize=None)
def hermite(n: int) -> PolyQ:
    """Physicists' Hermite polynomial, H_{n+1} = 2x H_n - 2n H_{n-1}."""
    if n < 0:
        raise DomainError(f"Hermite degree must be nonnegative, got {n}")
    if n == 0:
        return PolyQ([1])
    prev, cur = PolyQ([1]), PolyQ([0, 2])
    for j in range(1, n):
        prev, cur = cur, PolyQ([0, 2]) * cur - 2 * j * prev
    return cur


def laguerre(n: int, alpha: RatLike) -> PolyQ:
    """Generalized Laguerre L_n^alpha(x) = sum_j (-1)^j C(n+alpha, n-j) x^j / j!."""
    if n < 0:
        raise DomainError(f"Laguerre degree must be nonnegative, got {n}")
    alpha = rat(alpha)
    return PolyQ((-1) ** j * binomial(n + alpha, n - j) / factorial(j) for j in range(n + 1))


def jacobi(n: int, alpha: RatLike, beta: RatLike) -> PolyQ:
    """Jacobi P_n^(alpha,beta)(x) from the explicit finite sum (valid for all parameters)."""
    if n < 0:
        raise DomainError(f"Jacobi degree must be nonnegative, got {n}")
    alpha, beta = rat(alpha), rat(beta)
    xm = PolyQ([Fraction(-1, 2), Fraction(1, 2)])
    xp = PolyQ([Fraction(1, 2), Fraction(1, 2)])
    out = PolyQ()
    for s in range(n + 1):
        c = binomial(n + alpha, n - s) * binomial(n + beta, s)
        if c:
            out = out + c * xm**s * xp ** (n - s)
    return out


@lru_cache(maxsize=None)
def legendre(n: int) -> PolyQ:
    """Legendre P_n by Bonnet's recurrence."""
    if n < 0:
        raise DomainError(f"Legendre degree must be nonnegative, got {n}")
    prev, cur = PolyQ([1]), PolyQ([0, 1])
    if n == 0:
        return prev
    for j in range(1, n):
        prev, cur = cur, (PolyQ([0, 2 * j + 1]) * cur - j * prev) * Fraction(1, j + 1)
    return cur


@lru_cache(maxsize=4096)
def product_coefficients(n: int, m: int) -> tuple[int, ...]:
    """Coefficients of (1-t)^n (1+t)^m, index = power of t."""
    if n < 0 or m < 0:
        raise DomainError("mode orders must be nonnegative")
    return tuple(
        sum((-1) ** l * comb(n, l) * comb(m, k - l) for l in range(max(0, k - m), min(k, n) + 1))
        for k in range(n + m + 1)
    )


def jacobi_shifted_zero(k: int, n: int, m: int) -> Fraction:
    """P_k^{(n-k, m-k)}(0) = (-1)^k 2^{-k} [t^k] (1-t)^n (1+t)^m."""
    if k < 0:
        raise DomainError("degree must be nonnegative")
    if k > n + m:
        return Fraction(0)
    return Fraction((-1) ** k * product_coefficients(n, m)[k], 2**k)


def jacobi_shifted_at(k: int, n: int, m: int, x: RatLike) -> Fraction:
    """P_k^{(n-k, m-k)}(x) by exact Rodrigues differentiation."""
    if k < 0 or n < 0 or m < 0:
        raise DomainError("degree and mode orders must be nonnegative")
    x = rat(x)
    if (x == 1 and k > n) or (x == -1 and k > m):
        raise DomainError(f"P_{k}^({n - k},{m - k}) has a pole at x={x}")
    if k > n + m:
        return Fraction(0)
    base = PolyQ([1, -1]) ** n * PolyQ([1, 1]) ** m
    d = base.derivative(k)(x)
    if d == 0:
        return Fraction(0)
    return Fraction((-1) ** k, 2**k) / factorial(k) * (1 - x) ** (k - n) * (1 + x) ** (k - m) * d


def gegenbauer_zero(n: int, lam: RatLike) -> Fraction:
    """C_n^lambda(0): zero for odd n, (-1)^{n/2} (lambda)_{n/2} / (n/2)! otherwise."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if n % 2:
        return Fraction(0)
    h = n // 2
    return (-1) ** h * pochhammer(lam, h) / factorial(h)


def gegenbauer(n: int, lam: RatLike) -> PolyQ:
    """C_n^lambda(x) from the three-term recurrence (defined for every lambda)."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    lam = rat(lam)
    prev, cur = PolyQ([1]), PolyQ([0, 2 * lam])
    if n == 0:
        return prev
    for j in range(2, n + 1):
        prev, cur = cur, (PolyQ([0, 2 * (j + lam - 1)]) * cur - (j + 2 * lam - 2) * prev) * Fraction(1, j)
    return cur


def assoc_legendre_zero(n: int, mu: int) -> Fraction:
    """P_n^mu(0) for -(n+2) <= mu <= n (Condon-Shortley phase).

    Closed form with k = n - mu:
    2^{n-k} / sqrt(pi) * cos((2n-k) pi/2) * Gamma((2n-k+1)/2) / Gamma(k/2 + 1).
    For odd 2n-k the cosine vanishes; at k = 2n+1 the Gamma factor hits a pole
    and the product is taken in the limit, giving 1/(2n+1)!!.
    """
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if not -(n + 2) <= mu <= n:
        raise DomainError(f"order {mu} outside supported range [-{n + 2}, {n}]")
    k = n - mu
    j = 2 * n - k
    if j % 2:
        if k == 2 * n + 1:
            return 1 / double_factorial(2 * n + 1)
        return Fraction(0)
    cos_sign = neg_one_pow(j // 2)
    value = Fraction(2) ** (n - k) * cos_sign * gamma_half(j // 2) / factorial(k // 2)
    # the sqrt(pi) of the half-integer Gamma cancels the 1/sqrt(pi) prefactor
    return (value / gamma_half(0)).to_rat()


def assoc_legendre_zero_from_derivatives(n: int, mu: int) -> Fraction:
    """P_n^mu(0) for |mu| <= n from derivatives of the recurrence-built Legendre polynomial."""
    if abs(mu) > n:
        raise DomainError(f"|mu| must not exceed n={n}")
    if mu < 0:
        return (-1) ** (-mu) * factorial(n + mu) / factorial(n - mu) * assoc_legendre_zero_from_derivatives(n, -mu)
    return (-1) ** mu * legendre(n).derivative(mu)(0)


def polys_equal(a: Sequence[RatLike] | PolyQ, b: Sequence[RatLike] | PolyQ) -> bool:
    return _to_poly(a) == _to_poly(b)


def _to_poly(p) -> PolyQ:
    return p if isinstance(p, PolyQ) else PolyQ(p)
