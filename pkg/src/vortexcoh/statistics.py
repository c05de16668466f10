"""Moments, entropies and purity of the connection-coefficient distribution."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from vortexcoh.exactnum import DomainError, InvariantError, factorial, rat_log
from vortexcoh.modecoeff import CoeffDist, ModeIndex, distribution
from vortexcoh.orthopoly import jacobi_shifted_zero
from vortexcoh.reports import VerifyReport, exact_report, float_report

MAX_MOMENT = 6
F = Fraction


@dataclass(frozen=True)
class MomentTable:
    index: ModeIndex
    raw: tuple[Fraction, ...]
    central: tuple[Fraction, ...]

    def __post_init__(self):
        if self.raw[0] != 1 or (len(self.central) > 1 and self.central[1] != 0):
            raise InvariantError("inconsistent moment table")

    @property
    def mean(self) -> Fraction:
        return self.raw[1]

    @property
    def variance(self) -> Fraction:
        return self.central[2]


def _as_dist(d: CoeffDist | ModeIndex | tuple[int, int]) -> CoeffDist:
    return d if isinstance(d, CoeffDist) else distribution(d)


def moments_direct(dist: CoeffDist, max_order: int = MAX_MOMENT) -> MomentTable:
    """Raw moments sum_k p_k k^j and central moments, j = 0..max_order."""
    dist = _as_dist(dist)
    if not 0 <= max_order <= MAX_MOMENT:
        raise DomainError(f"max_order must lie in 0..{MAX_MOMENT}")
    raw = _raw_moments(dist.n, dist.m)[: max_order + 1]
    mu = raw[1] if max_order >= 1 else F(0)
    central = []
    for j in range(max_order + 1):
        central.append(sum((math.comb(j, i) * raw[i] * (-mu) ** (j - i) for i in range(j + 1)), F(0)))
    return MomentTable(dist.index, tuple(raw), tuple(central))


@lru_cache(maxsize=4096)
def _raw_moments(n: int, m: int) -> tuple[Fraction, ...]:
    probs = distribution((n, m)).probs
    # shared denominator keeps the power sums in integer arithmetic
    den = math.lcm(*(p.denominator for p in probs))
    nums = [p.numerator * (den // p.denominator) for p in probs]
    return tuple(F(sum(c * k**j for k, c in enumerate(nums) if c), den) for j in range(MAX_MOMENT + 1))


# Printed right-hand sides for sum_k p_k k^j, j = 1..6, paired with the factor
# multiplying that sum on the printed left-hand side.
def _rhs1(n, m):
    return (m + n) * F(1, 2), 1


def _rhs2(n, m):
    return F(1, 2) * (m**2 + n**2) + 2 * m * n + F(1, 2) * (m + n), 2


def _rhs3(n, m):
    return F(1, 2) * (m**3 + n**3 + 9 * m**2 * n + 9 * m * n**2) + F(3, 2) * (m**2 + n**2) + 3 * m * n, 4


def _rhs4(n, m):
    return (
        F(1, 8) * (m**4 + n**4)
        + 2 * (m**3 * n + m * n**3)
        + F(9, 2) * m**2 * n**2
        + F(3, 4) * (m**3 + n**3)
        + 3 * (m**2 * n + m * n**2)
        + F(3, 8) * (m**2 + n**2)
        - F(1, 2) * m * n
        - F(1, 4) * (m + n)
    ), 2


def _rhs5(n, m, last=F(5, 2)):
    return (
        F(1, 8) * (m**5 + n**5)
        + F(25, 8) * (m**4 * n + m * n**4)
        + F(25, 2) * (m**3 * n**2 + m**2 * n**3)
        + F(5, 4) * (m**4 + n**4)
        + F(35, 4) * (m**3 * n + m * n**3)
        + 15 * m**2 * n**2
        + F(15, 8) * (m**3 + n**3)
        - F(5, 8) * (m**2 * n + m * n**2)
        - F(5, 4) * (m**2 + n**2)
        + last * m * n
    ), 4


def _rhs6(n, m):
    return (
        F(1, 16) * (m**6 + n**6)
        + F(9, 4) * (m**5 * n + m * n**5)
        + F(225, 16) * (m**4 * n**2 + m**2 * n**4)
        + 25 * m**3 * n**3
        + F(225, 8) * (m**3 * n**2 + m**2 * n**3)
        + F(15, 16) * (m**5 + n**5)
        + F(165, 16) * (m**4 * n + m * n**4)
        + F(45, 16) * (m**4 + n**4)
        + F(35, 8) * (m**3 * n + m * n**3)
        - F(45, 8) * m**2 * n**2
        - F(15, 16) * (m**3 + n**3)
        - F(135, 16) * (m**2 * n + m * n**2)
        - F(15, 8) * (m**2 + n**2)
        + F(13, 4) * m * n
        + m
        + n
    ), 4


_PRINTED = {1: _rhs1, 2: _rhs2, 3: _rhs3, 4: _rhs4, 5: _rhs5, 6: _rhs6}


def moment_closed_form(index: ModeIndex | tuple[int, int], j: int, corrected: bool = False) -> Fraction:
    """<k^j> from the printed closed form (right side over left-side factor).

    The j = 5 form is reproduced as printed; ``corrected=True`` flips the
    sign of its final mn term, which is the version that matches direct
    summation.
    """
    if j not in _PRINTED:
        raise DomainError(f"closed forms exist for j = 1..6, got {j}")
    n, m = (index.n, index.m) if isinstance(index, ModeIndex) else index
    if j == 5 and corrected:
        rhs, factor = _rhs5(n, m, last=F(-5, 2))
    else:
        rhs, factor = _PRINTED[j](n, m)
    return F(rhs) / factor


def variance(index: ModeIndex | tuple[int, int]) -> Fraction:
    """(2mn + m + n)/4, cross-checked against the direct second central moment."""
    dist = _as_dist(index)
    n, m = dist.n, dist.m
    closed = F(2 * m * n + m + n, 4)
    direct = moments_direct(dist, 2).variance
    if closed != direct:
        raise InvariantError(f"variance mismatch at ({n},{m}): {closed} vs {direct}")
    return closed


def skewness(index: ModeIndex | tuple[int, int]) -> Fraction:
    """Third central moment <k^3> - 3<k^2><k> + 2<k>^3 (unnormalized)."""
    raw = moments_direct(_as_dist(index), 3).raw
    return raw[3] - 3 * raw[2] * raw[1] + 2 * raw[1] ** 3


def shannon_entropy(dist: CoeffDist) -> float:
    """-sum p ln p in nats, 0 ln 0 = 0."""
    dist = _as_dist(dist)
    return -math.fsum(float(p) * rat_log(p) for p in dist.probs if p)


def renyi_entropy(dist: CoeffDist, alpha: float | int | Fraction) -> float:
    """ln(sum p^alpha) / (1 - alpha); the inner sum is exact for integer alpha."""
    dist = _as_dist(dist)
    if alpha <= 0 or alpha == 1:
        raise DomainError(f"Renyi order must be positive and != 1, got {alpha}")
    if float(alpha).is_integer():
        a = int(alpha)
        return rat_log(sum((p**a for p in dist.probs), F(0))) / (1 - a)
    a = float(alpha)
    s = math.fsum(math.exp(a * rat_log(p)) for p in dist.probs if p)
    return math.log(s) / (1 - a)


def purity(dist: CoeffDist) -> Fraction:
    """sum p_k^2; 1 exactly for a point mass."""
    dist = _as_dist(dist)
    return sum((p * p for p in dist.probs), F(0))


def entropy_expansion(index: ModeIndex | tuple[int, int]) -> float:
    """Entropy rebuilt from the Jacobi form of b^2, log of each factor taken separately."""
    dist = _as_dist(index)
    n, m = dist.n, dist.m
    N = n + m
    head = N * math.log(2) + math.lgamma(n + 1) + math.lgamma(m + 1)
    tail = []
    for k, p in enumerate(dist.probs):
        if p:
            x = factorial(N - k) * factorial(k) * 4**k * jacobi_shifted_zero(k, n, m) ** 2
            tail.append(float(p) * rat_log(x))
    return head - math.fsum(tail)


def log_factorial_sums(index: ModeIndex | tuple[int, int]) -> tuple[float, float]:
    """(sum p_k ln (n+m-k)!, sum p_k ln k!)."""
    dist = _as_dist(index)
    N = dist.n + dist.m
    upper = math.fsum(float(p) * math.lgamma(N - k + 1) for k, p in enumerate(dist.probs) if p)
    lower = math.fsum(float(p) * math.lgamma(k + 1) for k, p in enumerate(dist.probs) if p)
    return upper, lower


def entropy_decomposition_check(index: ModeIndex | tuple[int, int], tol: float = 1e-12) -> list[VerifyReport]:
    """Three reports: expansion vs entropy (eq17), exact mean (eq18), log-factorial balance (eq19)."""
    dist = _as_dist(index)
    params = {"n": dist.n, "m": dist.m}
    upper, lower = log_factorial_sums(dist)
    return [
        float_report("eq17", params, entropy_expansion(dist), shannon_entropy(dist), tol),
        exact_report("eq18", params, moments_direct(dist, 1).mean, F(dist.n + dist.m, 2)),
        float_report("eq19", params, upper, lower, tol),
    ]
