"""Terminating generalized hypergeometric series in exact arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from math import factorial as _fact_int
from typing import Sequence

from vortexcoh.exactnum import (
    DomainError,
    InvariantError,
    RatLike,
    factorial,
    gamma_half,
    pochhammer,
    rat,
)
from vortexcoh.orthopoly import legendre
from vortexcoh.reports import VerifyReport, exact_report


class DegenerateParameterError(DomainError):
    """A lower parameter's Pochhammer symbol vanishes before the series terminates."""


def _nonpositive_int(q: Fraction) -> bool:
    return q.denominator == 1 and q <= 0


@dataclass(frozen=True)
class HyperSpec:
    """pFq(tops; bottoms; argument) that terminates through a nonpositive-integer top."""

    tops: tuple[Fraction, ...]
    bottoms: tuple[Fraction, ...]
    argument: Fraction

    def __init__(self, tops: Sequence[RatLike], bottoms: Sequence[RatLike], argument: RatLike):
        object.__setattr__(self, "tops", tuple(rat(a) for a in tops))
        object.__setattr__(self, "bottoms", tuple(rat(b) for b in bottoms))
        object.__setattr__(self, "argument", rat(argument))
        terminators = [-int(a) for a in self.tops if _nonpositive_int(a)]
        if not terminators:
            raise DomainError(f"series with tops {self.tops} does not terminate")
        for b in self.bottoms:
            if _nonpositive_int(b) and -int(b) < self.length:
                raise DegenerateParameterError(
                    f"lower parameter {b} vanishes before truncation at k={self.length}"
                )

    @property
    def length(self) -> int:
        """Index of the last (possibly) nonzero term."""
        return min(-int(a) for a in self.tops if _nonpositive_int(a))


def pfq(spec: HyperSpec) -> Fraction:
    """Sum of the terminating series, term ratios applied exactly."""
    z = spec.argument
    term = Fraction(1)
    total = Fraction(1)
    for j in range(spec.length):
        num = Fraction(1)
        for a in spec.tops:
            num *= a + j
        if num == 0:
            break
        den = Fraction(j + 1)
        for b in spec.bottoms:
            den *= b + j
        term = term * num * z / den
        total += term
    return total


def hyp(tops: Sequence[RatLike], bottoms: Sequence[RatLike], z: RatLike) -> Fraction:
    return pfq(HyperSpec(tops, bottoms, z))


def gauss_regularized(a: RatLike, b: RatLike, c: int, z: RatLike) -> Fraction:
    """2F1(a, b; c; z) / Gamma(c) for integer c, including c <= 0.

    Terms whose Gamma(c + j) sits on a pole drop out; ``a`` or ``b`` must be a
    nonpositive integer.
    """
    a, b, z = rat(a), rat(b), rat(z)
    stops = [-int(p) for p in (a, b) if _nonpositive_int(p)]
    if not stops:
        raise DomainError("regularized series needs a nonpositive-integer upper parameter")
    last = min(stops)
    first = max(0, 1 - c)  # Gamma(c + j) is infinite below this index
    if first > last:
        return Fraction(0)
    if a.denominator == b.denominator == z.denominator == 1:
        return _gauss_regularized_int(int(a), int(b), c, int(z), first, last)
    term = pochhammer(a, first) * pochhammer(b, first) / (factorial(c + first - 1) * factorial(first)) * z**first
    total = term
    for j in range(first, last):
        term = term * (a + j) * (b + j) * z / ((c + j) * (j + 1))
        total += term
    return total


def _gauss_regularized_int(a: int, b: int, c: int, z: int, first: int, last: int) -> Fraction:
    # every term over the common denominator (c+last-1)! last!, kept in integers
    tops = [1] * (last + 1)  # (a)_j (b)_j z^j
    for j in range(last):
        tops[j + 1] = tops[j] * (a + j) * (b + j) * z
    total, tail = 0, 1  # tail = (c+last-1)!/(c+j-1)! * last!/j!
    for j in range(last, first - 1, -1):
        total += tops[j] * tail
        tail *= (c + j - 1) * j
    return Fraction(total, _fact_int(c + last - 1) * _fact_int(last))


def gauss_unit(a: int, b: int) -> Fraction:
    """2F1(-a, -b; -a-b; 1), which equals 1 / C(a+b, a)."""
    if a < 0 or b < 0:
        raise DomainError("gauss_unit needs nonnegative integers")
    value = hyp([-a, -b], [-a - b], 1)
    if value != Fraction(1, comb(a + b, a)):
        raise InvariantError(f"2F1(-{a},-{b};-{a + b};1) = {value} != 1/C({a + b},{a})")
    return value


def _shifted_terms(n: int, z: Fraction, weights: Sequence[Fraction]) -> Fraction:
    # sum_i w_i * z^i * [(n-1)...(n-i)] / [(n-3/2)...(n-1/2-i)] * 2F1(3/2+i, 1+i-n; 3/2+i-n; z)
    total = Fraction(0)
    ratio = Fraction(1)
    for i, w in enumerate(weights):
        if i:
            ratio *= Fraction(n - i) / (n - Fraction(1, 2) - i)
        if ratio == 0:
            break
        half = Fraction(3, 2) + i
        total += w * ratio * z**i * hyp([half, 1 + i - n], [half - n], z)
    return total


def f32_reduce_check(n: int, z: RatLike) -> VerifyReport:
    """3F2(2, 3/2, 1-n; 1, 3/2-n; z) as two Gauss functions."""
    if n < 1:
        raise DomainError("n must be positive")
    z = rat(z)
    lhs = hyp([2, Fraction(3, 2), 1 - n], [1, Fraction(3, 2) - n], z)
    rhs = _shifted_terms(n, z, [Fraction(1), Fraction(3, 2)])
    return exact_report("r32", {"n": n, "z": z}, lhs, rhs)


def f43_reduce_check(n: int, z: RatLike) -> VerifyReport:
    """4F3(2, 2, 3/2, 1-n; 1, 1, 3/2-n; z) as three Gauss functions."""
    if n < 1:
        raise DomainError("n must be positive")
    z = rat(z)
    lhs = hyp([2, 2, Fraction(3, 2), 1 - n], [1, 1, Fraction(3, 2) - n], z)
    rhs = _shifted_terms(n, z, [Fraction(1), Fraction(9, 2), Fraction(15, 4)])
    return exact_report("r43", {"n": n, "z": z}, lhs, rhs)


def f32_unit_closed_form(n: int) -> VerifyReport:
    """3F2(2, 3/2, 1-n; 1, 3/2-n; 1) = n!/sqrt(pi) (-1)^(n-1) (3n+1)/4 Gamma(3/2-n)."""
    if n < 1:
        raise DomainError("n must be positive")
    lhs = hyp([2, Fraction(3, 2), 1 - n], [1, Fraction(3, 2) - n], 1)
    rhs = factorial(n) * (-1) ** (n - 1) * Fraction(3 * n + 1, 4) * gamma_half(1 - n) / gamma_half(0)
    return exact_report("z32", {"n": n}, lhs, rhs.to_rat())


def rational_sqrt(z: RatLike) -> Fraction:
    z = rat(z)
    if z < 0:
        raise DomainError(f"{z} has no real square root")
    p, q = isqrt(z.numerator), isqrt(z.denominator)
    if p * p != z.numerator or q * q != z.denominator:
        raise DomainError(f"{z} is not the square of a rational")
    return Fraction(p, q)


def legendre_2f1_check(n: int, z: RatLike) -> VerifyReport:
    """2F1(1/2, -n; 1/2-n; z) = n! z^(n/2) / (1/2)_n * P_n((1+z) / (2 sqrt z))."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    z = rat(z)
    root = rational_sqrt(z)
    if root == 0:
        raise DomainError("z must be positive")
    lhs = hyp([Fraction(1, 2), -n], [Fraction(1, 2) - n], z)
    rhs = factorial(n) * root**n / pochhammer(Fraction(1, 2), n) * legendre(n)((1 + z) / (2 * root))
    return exact_report("leg2f1", {"n": n, "z": z}, lhs, rhs)
