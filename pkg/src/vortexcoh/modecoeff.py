"""LG -> HG connection coefficients b(n, m, k) and their probability distribution.

Three independent constructions of b are provided:

* the derivative route, from the k-th Taylor coefficient of (1-t)^n (1+t)^m
  (canonical, always defined, integer arithmetic only);
* the hypergeometric route, a Gauss function at -1 (Gamma-regularized once
  both literal forms hit a nonpositive bottom parameter, k > max(n, m));
* the Jacobi route, through P_k^{(n-k, m-k)}(0).

The i^k phase of the LG synthesis is *not* part of b; see ``beamfield``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from vortexcoh.exactnum import DomainError, InvariantError, SqrtRat, factorial, neg_one_pow, rat_str
from vortexcoh.hyper import gauss_regularized, hyp
from vortexcoh.orthopoly import jacobi_shifted_zero, product_coefficients


@dataclass(frozen=True, order=True)
class ModeIndex:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise DomainError(f"mode orders must be nonnegative, got ({self.n}, {self.m})")

    @property
    def total(self) -> int:
        return self.n + self.m


@dataclass(frozen=True)
class BCoeff:
    value: SqrtRat
    squared: Fraction

    def __post_init__(self):
        if self.value.square() != self.squared:
            raise InvariantError("BCoeff.squared must equal value.square()")

    @classmethod
    def from_value(cls, value: SqrtRat) -> BCoeff:
        return cls(value, value.square())

    def __float__(self) -> float:
        return float(self.value)


def poly_coeff(n: int, m: int, k: int) -> Fraction:
    """[t^k] (1-t)^n (1+t)^m, zero outside 0..n+m."""
    if n < 0 or m < 0:
        raise DomainError("mode orders must be nonnegative")
    if k < 0 or k > n + m:
        return Fraction(0)
    return Fraction(product_coefficients(n, m)[k])


def _check_k(n: int, m: int, k: int) -> None:
    if n < 0 or m < 0:
        raise DomainError("mode orders must be nonnegative")
    if not 0 <= k <= n + m:
        raise DomainError(f"k={k} outside 0..{n + m}")


def _weight(n: int, m: int, k: int) -> Fraction:
    # (n+m-k)! k! / (2^{n+m} n! m!)
    return factorial(n + m - k) * factorial(k) / (2 ** (n + m) * factorial(n) * factorial(m))


def _signed(scale: Fraction, radicand: Fraction) -> SqrtRat:
    """scale * sqrt(radicand) as a SqrtRat."""
    return SqrtRat.from_rat(scale) * SqrtRat.signed_sqrt(1, radicand)


def b_derivative_route(n: int, m: int, k: int) -> BCoeff:
    _check_k(n, m, k)
    return BCoeff.from_value(_signed(poly_coeff(n, m, k), _weight(n, m, k)))


def b_hyper_route(n: int, m: int, k: int) -> BCoeff:
    """b via a terminating Gauss function at -1."""
    _check_k(n, m, k)
    if k <= n:
        # (-1)^k / (n-k)! 2F1(-k, -m; n-k+1; -1) under sqrt[(n+m-k)! n! / (2^{n+m} k! m!)]
        radicand = factorial(n + m - k) * factorial(n) / (2 ** (n + m) * factorial(k) * factorial(m))
        scale = Fraction((-1) ** k) / factorial(n - k) * hyp([-k, -m], [n - k + 1], -1)
        return BCoeff.from_value(_signed(scale, radicand))
    if k <= m:
        # k-th derivative at 0 equals m!/(m-k)! 2F1(-k, -n; m-k+1; -1)
        deriv = factorial(m) / factorial(m - k) * hyp([-k, -n], [m - k + 1], -1)
        return BCoeff.from_value(_signed(deriv / factorial(k), _weight(n, m, k)))
    # both bottoms are nonpositive: 2F1(-k, -m; c; -1)/Gamma(c) stays finite
    radicand = factorial(n + m - k) * factorial(n) / (2 ** (n + m) * factorial(k) * factorial(m))
    scale = neg_one_pow(k) * gauss_regularized(-k, -m, n - k + 1, -1)
    return BCoeff.from_value(_signed(scale, radicand))


def b_jacobi_route(n: int, m: int, k: int) -> BCoeff:
    _check_k(n, m, k)
    scale = 2**k * (-1) ** k * jacobi_shifted_zero(k, n, m)
    return BCoeff.from_value(_signed(scale, _weight(n, m, k)))


def b_squared(n: int, m: int, k: int) -> Fraction:
    """b^2(n, m, k); zero outside 0..n+m."""
    if not 0 <= k <= n + m:
        return Fraction(0)
    c = product_coefficients(n, m)[k]
    return c * c * _weight(n, m, k)


@dataclass(frozen=True)
class CoeffDist:
    """p_k = b^2(n, m, k), k = 0..n+m, validated on construction."""

    index: ModeIndex
    probs: tuple[Fraction, ...]

    def __post_init__(self):
        n, m = self.index.n, self.index.m
        p = self.probs
        if len(p) != n + m + 1:
            raise InvariantError("distribution length must be n+m+1")
        if any(q < 0 for q in p):
            raise InvariantError("negative probability")
        if sum(p) != 1:
            raise InvariantError(f"b^2({n},{m},k) sums to {sum(p)}, not 1")
        if any(p[k] != p[n + m - k] for k in range(len(p))):
            raise InvariantError("distribution is not symmetric under k -> n+m-k")
        if n == m and any(p[k] for k in range(1, len(p), 2)):
            raise InvariantError("odd-k probabilities must vanish when n = m")

    @property
    def n(self) -> int:
        return self.index.n

    @property
    def m(self) -> int:
        return self.index.m

    def __len__(self) -> int:
        return len(self.probs)

    def floats(self) -> list[float]:
        return [float(q) for q in self.probs]

    def to_json_obj(self) -> dict:
        return {"n": self.n, "m": self.m, "probs": [rat_str(q) for q in self.probs]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "b2_exact", "b2_float"])
        for k, q in enumerate(self.probs):
            w.writerow([k, rat_str(q), repr(float(q))])
        return buf.getvalue()


@lru_cache(maxsize=2048)
def _distribution(n: int, m: int) -> CoeffDist:
    index = ModeIndex(n, m)
    return CoeffDist(index, tuple(b_squared(n, m, k) for k in range(n + m + 1)))


def distribution(index: ModeIndex | tuple[int, int]) -> CoeffDist:
    if not isinstance(index, ModeIndex):
        index = ModeIndex(*index)
    return _distribution(index.n, index.m)


def normalization_jacobi_form(n: int, m: int) -> Fraction:
    """(2^{n+m} n! m!)^{-1} sum_k (n+m-k)! k! 4^k [P_k^{(n-k,m-k)}(0)]^2."""
    s = sum(
        (factorial(n + m - k) * factorial(k) * 4**k * jacobi_shifted_zero(k, n, m) ** 2 for k in range(n + m + 1)),
        Fraction(0),
    )
    return s / (2 ** (n + m) * factorial(n) * factorial(m))


def normalization_genfun_form(n: int, m: int) -> Fraction:
    """2^{-(n+m)} C(n+m, m) sum_k k! (-1)^k 4^k / (-m-n)_k [P_k^{(n-k,m-k)}(0)]^2."""
    N = n + m
    s, ratio = Fraction(0), Fraction(1)  # ratio = k! (-4)^k / (-N)_k
    for k in range(N + 1):
        s += ratio * jacobi_shifted_zero(k, n, m) ** 2
        if k < N:
            ratio = ratio * (k + 1) * -4 / (k - N)
    return Fraction(comb(N, m), 2**N) * s
