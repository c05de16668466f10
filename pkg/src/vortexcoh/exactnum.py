"""Exact scalar types and truncated power series.

Every identity check in the package reduces to equality of these values, so
nothing here ever touches floating point except the explicit ``__float__``
conversions used for reporting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rat = Fraction
RatLike = Union[int, Fraction]


class DomainError(ValueError):
    """Argument outside the domain of an exact operation."""


class InvariantError(ArithmeticError):
    """A value violated a property that holds as a theorem (implementation bug)."""


def rat(value: RatLike | str) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def rat_str(value: RatLike) -> str:
    """Canonical ``num/den`` form, integers included (``"3/1"``)."""
    q = rat(value)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(text: str) -> Fraction:
    return Fraction(text.strip())


def rat_log(value: RatLike) -> float:
    """Natural log of a positive rational, accurate for huge numerators/denominators."""
    q = rat(value)
    if q <= 0:
        raise DomainError(f"log of non-positive rational {q}")
    # math.log accepts arbitrary ints without overflow
    return math.log(q.numerator) - math.log(q.denominator)


def neg_one_pow(k: int) -> int:
    """(-1)**k as an int for any integer k (the builtin gives a float for k < 0)."""
    return -1 if k % 2 else 1


@lru_cache(maxsize=None)
def _fact(n: int) -> int:
    return math.factorial(n)


def factorial(n: int) -> Fraction:
    if n < 0:
        raise DomainError(f"factorial of negative integer {n}")
    return Fraction(_fact(n))


def double_factorial(n: int) -> Fraction:
    """n!! with (-1)!! = 0!! = 1."""
    if n < -1:
        raise DomainError(f"double factorial undefined for {n}")
    out = 1
    for j in range(n, 0, -2):
        out *= j
    return Fraction(out)


def binomial(top: RatLike, k: int) -> Fraction:
    """Generalized binomial coefficient C(top, k) for rational ``top``."""
    if k < 0:
        return Fraction(0)
    top = rat(top)
    if top.denominator == 1 and top >= 0:
        t = int(top)
        return Fraction(math.comb(t, k)) if k <= t else Fraction(0)
    return pochhammer(top - k + 1, k) / _fact(k)


def pochhammer(z: RatLike, n: int) -> Fraction:
    """Rising factorial z(z+1)...(z+n-1); (z)_0 = 1."""
    if n < 0:
        raise DomainError(f"Pochhammer length must be nonnegative, got {n}")
    z = rat(z)
    if z.denominator == 1:
        a = int(z)
        if a <= 0 < a + n:
            return Fraction(0)
        if a > 0:
            return Fraction(_fact(a + n - 1) // _fact(a - 1))
    out = Fraction(1)
    for j in range(n):
        out *= z + j
    return out


@dataclass(frozen=True)
class SqrtRat:
    """sign * sqrt(radicand), radicand a nonnegative rational."""

    sign: int
    radicand: Fraction

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        object.__setattr__(self, "radicand", rat(self.radicand))
        if self.radicand < 0:
            raise ValueError("radicand must be nonnegative")
        if (self.sign == 0) != (self.radicand == 0):
            raise ValueError("sign is 0 exactly when the radicand is 0")

    @classmethod
    def from_rat(cls, q: RatLike) -> SqrtRat:
        q = rat(q)
        return cls((q > 0) - (q < 0), q * q)

    @classmethod
    def signed_sqrt(cls, sign: int, radicand: RatLike) -> SqrtRat:
        radicand = rat(radicand)
        return cls(sign if radicand else 0, radicand if sign else Fraction(0))

    def square(self) -> Fraction:
        return self.radicand

    def __mul__(self, other: SqrtRat | RatLike) -> SqrtRat:
        if not isinstance(other, SqrtRat):
            other = SqrtRat.from_rat(other)
        return SqrtRat(self.sign * other.sign, self.radicand * other.radicand)

    __rmul__ = __mul__

    def __truediv__(self, other: SqrtRat | RatLike) -> SqrtRat:
        if not isinstance(other, SqrtRat):
            other = SqrtRat.from_rat(other)
        if other.sign == 0:
            raise ZeroDivisionError("division by zero SqrtRat")
        return SqrtRat(self.sign * other.sign, self.radicand / other.radicand)

    def __neg__(self) -> SqrtRat:
        return SqrtRat(-self.sign, self.radicand)

    def __add__(self, other: SqrtRat) -> SqrtRat:
        if not isinstance(other, SqrtRat):
            return NotImplemented
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        if self.radicand != other.radicand:
            raise DomainError("cannot add square roots of different radicands")
        total = self.sign + other.sign
        return SqrtRat.signed_sqrt((total > 0) - (total < 0), total * total * self.radicand)

    def __sub__(self, other: SqrtRat) -> SqrtRat:
        return self + (-other)

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.sqrt(float(self.radicand))

    def __str__(self) -> str:
        s = "-" if self.sign < 0 else ""
        return f"{s}sqrt({rat_str(self.radicand)})"


@dataclass(frozen=True)
class PiRadical:
    """coeff * pi**pi_power * sqrt(pi)**pi_half_power.

    Only the combined exponent of sqrt(pi) matters; construction normalizes
    it so that pi_half_power is 0 or 1, and a zero coefficient drops the pi
    content altogether.
    """

    coeff: Fraction
    pi_half_power: int = 0
    pi_power: int = 0

    def __post_init__(self):
        coeff = rat(self.coeff)
        half = 2 * self.pi_power + self.pi_half_power
        if coeff == 0:
            half = 0
        pi_power, pi_half = divmod(half, 2)
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "pi_half_power", pi_half)
        object.__setattr__(self, "pi_power", pi_power)

    @classmethod
    def sqrt_pi(cls) -> PiRadical:
        return cls(Fraction(1), 1)

    @property
    def half_exponent(self) -> int:
        """Total power of sqrt(pi)."""
        return 2 * self.pi_power + self.pi_half_power

    def _lift(self, other) -> PiRadical:
        return other if isinstance(other, PiRadical) else PiRadical(rat(other))

    def __mul__(self, other) -> PiRadical:
        other = self._lift(other)
        return PiRadical(self.coeff * other.coeff, self.half_exponent + other.half_exponent)

    __rmul__ = __mul__

    def __truediv__(self, other) -> PiRadical:
        other = self._lift(other)
        if other.coeff == 0:
            raise ZeroDivisionError("division by zero PiRadical")
        return PiRadical(self.coeff / other.coeff, self.half_exponent - other.half_exponent)

    def __rtruediv__(self, other) -> PiRadical:
        return self._lift(other) / self

    def __pow__(self, k: int) -> PiRadical:
        if k < 0:
            return PiRadical(1) / self ** (-k)
        return PiRadical(self.coeff**k, self.half_exponent * k)

    def __neg__(self) -> PiRadical:
        return PiRadical(-self.coeff, self.half_exponent)

    def __add__(self, other) -> PiRadical:
        other = self._lift(other)
        if self.coeff == 0:
            return other
        if other.coeff == 0:
            return self
        if self.half_exponent != other.half_exponent:
            raise DomainError("cannot add terms with different powers of pi")
        return PiRadical(self.coeff + other.coeff, self.half_exponent)

    __radd__ = __add__

    def __sub__(self, other) -> PiRadical:
        return self + (-self._lift(other))

    def is_rational(self) -> bool:
        return self.half_exponent == 0

    def to_rat(self) -> Fraction:
        if not self.is_rational():
            raise DomainError(f"{self} carries a factor of pi")
        return self.coeff

    def __float__(self) -> float:
        return float(self.coeff) * math.pi ** (self.half_exponent / 2)

    def __str__(self) -> str:
        h = self.half_exponent
        if h == 0:
            return rat_str(self.coeff)
        return f"{rat_str(self.coeff)}*pi^({h}/2)"


def gamma_half(k: int) -> PiRadical:
    """Gamma(k + 1/2) as an exact multiple of sqrt(pi), any integer k."""
    if k >= 0:
        return PiRadical(double_factorial(2 * k - 1) / 2**k, 1)
    # reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z), sin(pi (k+1/2)) = (-1)^k
    partner = gamma_half(-k)
    return PiRadical(neg_one_pow(k) / partner.coeff, 1)


class FSeries:
    """Power series in t with exact coefficients, truncated below t**order."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[RatLike], order: int | None = None):
        coeffs = [rat(c) for c in coefficients]
        if order is None:
            order = len(coeffs)
        if order < 0:
            raise DomainError("series order must be nonnegative")
        coeffs = coeffs[:order] + [Fraction(0)] * (order - len(coeffs))
        self.coefficients: tuple[Fraction, ...] = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coefficients)

    @classmethod
    def constant(cls, c: RatLike, order: int) -> FSeries:
        return cls([c], order)

    @classmethod
    def variable(cls, order: int) -> FSeries:
        return cls([0, 1], order)

    @classmethod
    def polynomial(cls, coeffs: Sequence[RatLike], order: int) -> FSeries:
        return cls(coeffs, order)

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k < self.order:
            raise IndexError(f"coefficient {k} outside truncation order {self.order}")
        return self.coefficients[k]

    def _coerce(self, other) -> FSeries:
        if isinstance(other, FSeries):
            return other
        return FSeries.constant(other, self.order)

    def _common(self, other) -> tuple[FSeries, FSeries]:
        other = self._coerce(other)
        n = min(self.order, other.order)
        return FSeries(self.coefficients, n), FSeries(other.coefficients, n)

    def __add__(self, other) -> FSeries:
        a, b = self._common(other)
        return FSeries([x + y for x, y in zip(a.coefficients, b.coefficients)])

    __radd__ = __add__

    def __neg__(self) -> FSeries:
        return FSeries([-c for c in self.coefficients])

    def __sub__(self, other) -> FSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> FSeries:
        return (-self) + other

    def scalar_mul(self, c: RatLike) -> FSeries:
        c = rat(c)
        return FSeries([c * a for a in self.coefficients])

    def __mul__(self, other) -> FSeries:
        if not isinstance(other, FSeries):
            return self.scalar_mul(other)
        a, b = self._common(other)
        n = a.order
        ac, bc = a.coefficients, b.coefficients
        out = [Fraction(0)] * n
        for i, x in enumerate(ac):
            if x:
                for j in range(n - i):
                    if bc[j]:
                        out[i + j] += x * bc[j]
        return FSeries(out)

    __rmul__ = __mul__

    def inverse(self) -> FSeries:
        """Multiplicative inverse; needs a nonzero constant term."""
        c = self.coefficients
        if not c:
            return FSeries([])
        if c[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = [Fraction(0)] * self.order
        inv[0] = 1 / c[0]
        for k in range(1, self.order):
            s = sum((c[j] * inv[k - j] for j in range(1, k + 1)), Fraction(0))
            inv[k] = -s * inv[0]
        return FSeries(inv)

    def __truediv__(self, other) -> FSeries:
        if not isinstance(other, FSeries):
            return self.scalar_mul(1 / rat(other))
        return self * self._coerce(other).inverse()

    def __pow__(self, k: int) -> FSeries:
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = FSeries.constant(1, self.order)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    int_pow = __pow__

    def derivative(self) -> FSeries:
        """Term-wise derivative; the result loses one order of accuracy."""
        c = self.coefficients
        return FSeries([k * c[k] for k in range(1, len(c))], max(self.order - 1, 0))

    def compose(self, inner: FSeries) -> FSeries:
        """self(inner(t)); inner must have zero constant term."""
        if inner.order and inner.coefficients[0] != 0:
            raise DomainError("composition needs an inner series with zero constant term")
        inner = self._coerce(inner)
        result = FSeries.constant(0, self.order)
        for c in reversed(self.coefficients):
            result = result * inner + c
        return result

    def evaluate(self, t: RatLike) -> Fraction:
        t = rat(t)
        out = Fraction(0)
        for c in reversed(self.coefficients):
            out = out * t + c
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, FSeries):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"FSeries([{', '.join(rat_str(c) for c in self.coefficients)}])"
