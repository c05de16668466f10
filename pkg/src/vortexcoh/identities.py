"""Catalog of summation identities, each checked in exact arithmetic.

Every check returns a :class:`VerifyReport` whose residual is ``lhs - rhs``.
Printed closed forms are evaluated as printed; when one disagrees with the
brute-force value the residual is reported, and :func:`run_suite` tries to
fit it with a low-degree polynomial in the sweep parameters (``errata``).
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Iterator, Sequence

from vortexcoh import statistics as st
from vortexcoh.exactnum import (
    FSeries,
    PiRadical,
    binomial,
    double_factorial,
    factorial,
    gamma_half,
    neg_one_pow,
    pochhammer,
    rat,
    rat_str,
)
from vortexcoh.hyper import (
    f32_reduce_check,
    f32_unit_closed_form,
    f43_reduce_check,
    gauss_regularized,
    hyp,
    legendre_2f1_check,
)
from vortexcoh.modecoeff import (
    b_derivative_route,
    b_hyper_route,
    b_jacobi_route,
    b_squared,
    distribution,
    normalization_genfun_form,
    normalization_jacobi_form,
    poly_coeff,
)
from vortexcoh.orthopoly import (
    PolyQ,
    assoc_legendre_zero,
    assoc_legendre_zero_from_derivatives,
    gegenbauer,
    gegenbauer_zero,
    jacobi_shifted_at,
    jacobi_shifted_zero,
)
from vortexcoh.reports import FAIL, PASS, SuiteResult, VerifyReport, exact_report

F = Fraction
SQRT_PI = gamma_half(0)
PI = SQRT_PI * SQRT_PI

HYPER_POINTS = (F(1), F(1, 2), F(-1), F(1, 3))
LEGENDRE_POINTS = (F(1), F(4), F(1, 4), F(9))
GENFUN_POINTS = ((F(0), F(0)), (F(1, 3), F(-1, 5)), (F(1, 2), F(1, 2)))
GENFUN_MAX = 8  # series-expansion checks grow fast; the sweep caps a, b here
FAMILY_ORDERS = range(1, 7)


def vector_report(identity_id: str, params: dict, lhs: Sequence[Fraction], rhs: Sequence[Fraction]) -> VerifyReport:
    """Componentwise equality; the residual is the l1 distance."""
    lhs, rhs = [rat(v) for v in lhs], [rat(v) for v in rhs]
    residual = sum((abs(a - b) for a, b in zip(lhs, rhs)), F(0)) + abs(len(lhs) - len(rhs))
    fmt = lambda vs: "[" + ", ".join(rat_str(v) for v in vs) + "]"
    return VerifyReport(identity_id, dict(params), PASS if residual == 0 else FAIL, fmt(lhs), fmt(rhs), residual)


def _nm(n, m):
    return {"n": n, "m": m}


# --- normalization -----------------------------------------------------------


def _derivative_sum(n: int, m: int) -> Fraction:
    return sum((b_derivative_route(n, m, k).squared for k in range(n + m + 1)), F(0))


def check_eq6(n: int, m: int) -> VerifyReport:
    return exact_report("eq6", _nm(n, m), _derivative_sum(n, m), 1)


def _eq12_bracket(n: int, m: int, j: int) -> Fraction:
    # 2F1(j-m-n, -n; j-n+1; -1) / (j-n)!, which for j < n is the Gamma-regularized limit
    return gauss_regularized(j - m - n, -n, j - n + 1, -1)


def _gauss_sum(n: int, m: int) -> Fraction:
    s = sum(
        (factorial(j) / factorial(m + n - j) * _eq12_bracket(n, m, j) ** 2 for j in range(n + m + 1)),
        F(0),
    )
    return factorial(m) / (2 ** (n + m) * factorial(n)) * s


def check_eq12(n: int, m: int) -> VerifyReport:
    return exact_report("eq12", _nm(n, m), _gauss_sum(n, m), 1)


def check_eq15(n: int, m: int) -> VerifyReport:
    return exact_report("eq15", _nm(n, m), normalization_jacobi_form(n, m), 1)


def check_eq36(n: int, m: int) -> VerifyReport:
    return exact_report("eq36", _nm(n, m), normalization_genfun_form(n, m), 1)


def verify_normalization(n: int, m: int) -> VerifyReport:
    """Sum of b^2 equals 1 by the derivative, Gauss, Jacobi and generating-function forms at once.

    The report is a vector check over the four sums; the suite also runs each
    form under its own id.
    """
    forms = (_derivative_sum, _gauss_sum, normalization_jacobi_form, normalization_genfun_form)
    return vector_report("norm", _nm(n, m), [f(n, m) for f in forms], [1] * len(forms))


# --- coefficient routes --------------------------------------------------------


def _signed_square(b) -> Fraction:
    return b.value.sign * b.value.radicand


def check_eq9(n: int, m: int) -> VerifyReport:
    """k-th derivative of (1-t)^n (1+t)^m at 0 against m!/(m-k)! 2F1(-k,-n;m-k+1;-1), k <= m."""
    lhs = [factorial(k) * poly_coeff(n, m, k) for k in range(m + 1)]
    rhs = [factorial(m) / factorial(m - k) * hyp([-k, -n], [m - k + 1], -1) for k in range(m + 1)]
    return vector_report("eq9", _nm(n, m), lhs, rhs)


def check_routes(n: int, m: int) -> VerifyReport:
    """The three b(n, m, k) routes agree as SqrtRat values for every k.

    Reported as sign * b^2 of the Jacobi and Gauss routes against the
    derivative route; a mismatch between the SqrtRat values is also forced
    into the residual.
    """
    ks = range(n + m + 1)
    ref = [b_derivative_route(n, m, k) for k in ks]
    jac = [b_jacobi_route(n, m, k) for k in ks]
    gau = [b_hyper_route(n, m, k) for k in ks]
    report = vector_report("eq14", _nm(n, m), [_signed_square(b) for b in jac + gau], [_signed_square(b) for b in ref + ref])
    if report.passed and any(a.value != r.value or b.value != r.value for a, b, r in zip(jac, gau, ref)):
        raise AssertionError(f"route values disagree at ({n},{m}) despite equal squares")
    return report


# --- moments -------------------------------------------------------------------

_MOMENT_IDS = {1: "eq18", 2: "eq20", 3: "eq21", 4: "eq22", 5: "eq23", 6: "eq24"}


def verify_moments(n: int, m: int, j: int, corrected: bool = False) -> VerifyReport:
    """Printed closed form for <k^j> minus the directly summed moment."""
    identity = _MOMENT_IDS[j] + ("c" if corrected else "")
    printed = st.moment_closed_form((n, m), j, corrected=corrected)
    direct = st.moments_direct(distribution((n, m))).raw[j]
    return exact_report(identity, _nm(n, m), printed, direct)


def check_variance(n: int, m: int) -> VerifyReport:
    direct = st.moments_direct(distribution((n, m)), 2).variance
    return exact_report("var", _nm(n, m), direct, F(2 * m * n + m + n, 4))


def check_skewness(n: int, m: int) -> VerifyReport:
    return exact_report("skew", _nm(n, m), st.skewness((n, m)), 0)


def check_eq17(n: int, m: int) -> VerifyReport:
    return st.entropy_decomposition_check((n, m))[0]


def check_eq19(n: int, m: int) -> VerifyReport:
    return st.entropy_decomposition_check((n, m))[2]


# --- n = m forms: Gegenbauer, Gamma, associated Legendre -------------------------


def _factorial_ratio(n: int, k: int) -> Fraction:
    """(2n-2k)!/(n-k)!, continued to k > n through 4^{n-k} Gamma(n-k+1/2)/sqrt(pi)."""
    if k <= n:
        return factorial(2 * n - 2 * k) / factorial(n - k)
    return (F(4) ** (n - k) * gamma_half(n - k) / SQRT_PI).to_rat()


def _c_half(n: int, k: int) -> Fraction:
    """C_k^{n-k+1/2}(0)."""
    return gegenbauer_zero(k, F(2 * n - 2 * k + 1, 2))


def check_eq26(n: int) -> VerifyReport:
    ks = range(n + 1)
    lhs = [jacobi_shifted_zero(k, n, n) for k in ks]
    rhs = [factorial(n) / factorial(n - k) * factorial(2 * n - 2 * k) / factorial(2 * n - k) * _c_half(n, k) for k in ks]
    mid = [pochhammer(n - k + 1, k) / pochhammer(2 * n - 2 * k + 1, k) * _c_half(n, k) for k in ks]
    return vector_report("eq26", {"n": n}, lhs + lhs, rhs + mid)


def check_eq27(n: int) -> VerifyReport:
    s = sum(
        (
            F(4) ** (k - n) * k * k * factorial(k) / factorial(2 * n - k) * _factorial_ratio(n, k) ** 2 * _c_half(n, k) ** 2
            for k in range(1, 2 * n + 1)
        ),
        F(0),
    )
    return exact_report("eq27", {"n": n}, 2 * s, (3 * n + 1) * n)


def check_eq28(n: int) -> VerifyReport:
    lhs = PiRadical(factorial(2 * n) / factorial(n))
    return exact_report("eq28", {"n": n}, lhs, F(4) ** n * gamma_half(n) / SQRT_PI)


def check_eq29(n: int) -> VerifyReport:
    total = PiRadical(0)
    for k in range(1, 2 * n + 1):
        c = _c_half(n, k)
        if c:
            total += F(4) ** (n - k) * k * k * factorial(k) / factorial(2 * n - k) * gamma_half(n - k) ** 2 * c * c
    return exact_report("eq29", {"n": n}, 2 * total / PI, (3 * n + 1) * n)


def _eq31_gegenbauer(n: int, z: Fraction = F(1)) -> PiRadical:
    total = PiRadical(0)
    for m in range(1, n + 1):
        c = gegenbauer_zero(2 * m, F(2 * n - 4 * m + 1, 2))
        total += F(4) ** (n - 2 * m) * m * m * factorial(2 * m) / factorial(2 * n - 2 * m) * gamma_half(n - 2 * m) ** 2 * c * c * z**m
    return 8 * total / PI


def _eq32_lhs(n: int, z: Fraction) -> PiRadical:
    total = PiRadical(0)
    for m in range(1, n + 1):
        c = binomial(F(4 * m - 2 * n - 1, 2), m)
        total += F(4) ** (n - 2 * m) * m * m * factorial(2 * m) / factorial(2 * n - 2 * m) * gamma_half(n - 2 * m) ** 2 * c * c * z**m
    return 8 * total / PI


def _eq31_reduced(n: int) -> PiRadical:
    total = PiRadical(0)
    for m in range(1, n + 1):
        total += neg_one_pow(m) * m * gamma_half(m) / (factorial(m - 1) * factorial(n - m) * gamma_half(m - n))
    return neg_one_pow(n) * 8 * total


def check_eq31(n: int) -> VerifyReport:
    return exact_report("eq31", {"n": n}, _eq31_gegenbauer(n), (3 * n + 1) * n)


def check_eq31b(n: int) -> VerifyReport:
    return exact_report("eq31b", {"n": n}, _eq32_lhs(n, F(1)), (3 * n + 1) * n)


def check_eq31c(n: int) -> VerifyReport:
    return exact_report("eq31c", {"n": n}, _eq31_reduced(n), (3 * n + 1) * n)


def verify_gegenbauer_forms(n: int) -> list[VerifyReport]:
    return [check_eq27(n), check_eq29(n), check_eq31(n), check_eq31b(n), check_eq31c(n)]


def _family_prefactor(n: int, z: Fraction) -> PiRadical:
    return 4 * z * gamma_half(n - 1) / (SQRT_PI * factorial(n - 1))


def _family_lhs(n: int, order: int, z: Fraction) -> PiRadical:
    total = PiRadical(0)
    for m in range(1, n + 1):
        total += (
            F(m) ** order * factorial(2 * m) * F(4) ** (n - 2 * m) / (factorial(2 * n - 2 * m) * factorial(m) ** 2)
            * gamma_half(n - m) ** 2 * z**m
        )
    return 8 * total / PI


def _family_rhs(n: int, order: int, z: Fraction) -> PiRadical:
    tops = [F(3, 2), 1 - n] + [2] * (order - 1)
    bottoms = [F(3, 2) - n] + [1] * (order - 1)
    return _family_prefactor(n, z) * hyp(tops, bottoms, z)


def check_eq32(n: int, z) -> VerifyReport:
    z = rat(z)
    return exact_report("eq32", {"n": n, "z": z}, _eq32_lhs(n, z), _family_rhs(n, 2, z))


def check_family(n: int, order: int, z) -> VerifyReport:
    z = rat(z)
    return exact_report("fam", {"n": n, "k": order, "z": z}, _family_lhs(n, order, z), _family_rhs(n, order, z))


def check_family_cross(n: int, z) -> VerifyReport:
    """Both printed left-hand sides at second order agree."""
    z = rat(z)
    return exact_report("famx", {"n": n, "z": z}, _family_lhs(n, 2, z), _eq32_lhs(n, z))


def verify_family(n: int, k_order: int, z) -> list[VerifyReport]:
    reports = [check_family(n, k_order, z)]
    if k_order == 2:
        reports += [check_eq32(n, z), check_family_cross(n, z)]
    return reports


def check_eq33(n: int) -> VerifyReport:
    """C_{n-m}^{m+1/2}(0) = (-1)^m 2^m m!/(2m)! P_n^m(0), 0 <= m <= n."""
    ms = range(n + 1)
    lhs = [gegenbauer(n - m, F(2 * m + 1, 2))(0) for m in ms]
    rhs = [neg_one_pow(m) * 2**m * factorial(m) / factorial(2 * m) * assoc_legendre_zero(n, m) for m in ms]
    return vector_report("eq33", {"n": n}, lhs, rhs)


def check_eq34(n: int) -> VerifyReport:
    s = sum((k * k * factorial(k) / factorial(2 * n - k) * assoc_legendre_zero(n, n - k) ** 2 for k in range(1, 2 * n + 1)), F(0))
    return exact_report("eq34", {"n": n}, 2 * s, (3 * n + 1) * n)


def check_a1(n: int) -> VerifyReport:
    s = sum((factorial(k) / factorial(2 * n - k) * assoc_legendre_zero(n, n - k) ** 2 for k in range(2 * n + 1)), F(0))
    return exact_report("A1", {"n": n}, s, 1)


def check_a3a(n: int) -> VerifyReport:
    s = sum(
        (factorial(k) * assoc_legendre_zero(n, n - k) ** 2 / (factorial(2 * n - k) * (2 * n - k + 2)) for k in range(2 * n + 1)),
        F(0),
    )
    return exact_report("A3a", {"n": n}, s, factorial(2 * n + 2) * assoc_legendre_zero(n, -n - 2) ** 2)


def check_a3b(n: int) -> VerifyReport:
    lhs = factorial(2 * n + 2) * assoc_legendre_zero(n, -n - 2) ** 2
    return exact_report("A3b", {"n": n}, lhs, F(comb(2 * n + 2, n + 1), 4 ** (n + 1)))


def check_a4(n: int) -> VerifyReport:
    """Closed-form P_n^{n-k}(0) against Legendre-derivative values, 0 <= k <= 2n."""
    ks = range(2 * n + 1)
    lhs = [assoc_legendre_zero(n, n - k) for k in ks]
    rhs = [assoc_legendre_zero_from_derivatives(n, n - k) for k in ks]
    return vector_report("A4", {"n": n}, lhs, rhs)


def check_a_special(n: int) -> VerifyReport:
    """P_n^n(0), P_n^{-n-1}(0), P_n^{-n-2}(0) against their listed values."""
    lhs = [assoc_legendre_zero(n, n), assoc_legendre_zero(n, -n - 1), assoc_legendre_zero(n, -n - 2)]
    rhs = [neg_one_pow(n) * double_factorial(2 * n - 1), 1 / double_factorial(2 * n + 1), F(1, 2 ** (n + 1)) / factorial(n + 1)]
    return vector_report("Asp", {"n": n}, lhs, rhs)


def verify_assoc_legendre(n: int) -> list[VerifyReport]:
    return [check_eq34(n), check_a1(n), check_a3a(n), check_a3b(n)]


# --- bilinear generating function -------------------------------------------------


def check_eq37(a: int, b: int) -> VerifyReport:
    N = a + b
    s, ratio = F(0), F(1)  # ratio = k! (-4)^k / (-N)_k
    for k in range(N + 1):
        s += ratio * jacobi_shifted_zero(k, a, b) ** 2
        if k < N:
            ratio = ratio * (k + 1) * -4 / (k - N)
    return exact_report("eq37", {"a": a, "b": b}, s, F(2**N, comb(N, a)))


verify_genfun_t4 = check_eq37


@lru_cache(maxsize=256)
def _rodrigues_base(a: int, b: int) -> PolyQ:
    return PolyQ([1, -1]) ** a * PolyQ([1, 1]) ** b


def _gauss_poly_coeffs(a: int, b: int) -> list[Fraction]:
    """Coefficients of the terminating 2F1(-a, -b; -a-b; u) in u."""
    out, term = [F(1)], F(1)
    for j in range(min(a, b)):
        term = term * (-a + j) * (-b + j) / ((-a - b + j) * (j + 1))
        out.append(term)
    return out


def genfun_series(a: int, b: int, x, y) -> tuple[FSeries, FSeries]:
    """(left, right) sides of the bilinear generating function through t^{a+b}."""
    x, y = rat(x), rat(y)
    order = a + b + 1
    left = FSeries(
        [factorial(k) / pochhammer(-a - b, k) * jacobi_shifted_at(k, a, b, x) * jacobi_shifted_at(k, a, b, y) for k in range(order)],
        order,
    )
    A = FSeries([1, -(x + 1) * (y + 1) / 4], order)
    B = FSeries([1, -(x - 1) * (y - 1) / 4], order)
    inner = -FSeries.variable(order) * A.int_pow(-1) * B.int_pow(-1)
    gauss = FSeries(_gauss_poly_coeffs(a, b), order).compose(inner)
    right = A.int_pow(a) * B.int_pow(b) * gauss
    return left, right


def verify_genfun_series(a: int, b: int, x, y) -> VerifyReport:
    left, right = genfun_series(a, b, x, y)
    return vector_report("eq35", {"a": a, "b": b, "x": rat(x), "y": rat(y)}, left.coefficients, right.coefficients)


def _first_moment_parts(a: int, b: int) -> tuple[Fraction, Fraction]:
    """(f'(-4) from the finite sum, f'(-4) from the closed-form side), f as at x = y = 0."""
    N = a + b
    t = F(-4)
    lhs = sum(
        (k * neg_one_pow(k) * t ** (k - 1) / comb(N, k) * jacobi_shifted_zero(k, a, b) ** 2 for k in range(1, N + 1)),
        F(0),
    )
    # closed form is the polynomial sum_j g_j (-t)^j (1 - t/4)^{N-2j}
    poly = PolyQ()
    quarter = PolyQ([1, F(-1, 4)])
    for j, g in enumerate(_gauss_poly_coeffs(a, b)):
        poly = poly + g * PolyQ([0, -1]) ** j * quarter ** (N - 2 * j)
    return lhs, poly.derivative()(t)


def verify_first_moment_route(a: int, b: int) -> VerifyReport:
    """Mean of b^2(a,b,k) obtained from f'(-4) equals (a+b)/2."""
    N = a + b
    deriv, _ = _first_moment_parts(a, b)
    mean = F(comb(N, a), 2**N) * (-4) * deriv
    return exact_report("eq38", {"a": a, "b": b}, mean, F(N, 2))


def check_eq39(a: int, b: int) -> VerifyReport:
    """f'(-4) of the closed-form side against -(a+b) 2^{a+b-1} / (4 C(a+b, a))."""
    N = a + b
    _, closed = _first_moment_parts(a, b)
    return exact_report("eq39", {"a": a, "b": b}, closed, -F(N) * F(2) ** (N - 1) / (4 * comb(N, a)))


# --- suite -------------------------------------------------------------------------

NM_CHECKS: dict[str, Callable[[int, int], VerifyReport]] = {
    "eq6": check_eq6,
    "eq9": check_eq9,
    "eq12": check_eq12,
    "eq14": check_routes,
    "eq15": check_eq15,
    "eq17": check_eq17,
    "eq18": lambda n, m: verify_moments(n, m, 1),
    "eq19": check_eq19,
    "eq20": lambda n, m: verify_moments(n, m, 2),
    "eq21": lambda n, m: verify_moments(n, m, 3),
    "eq22": lambda n, m: verify_moments(n, m, 4),
    "eq23": lambda n, m: verify_moments(n, m, 5),
    "eq23c": lambda n, m: verify_moments(n, m, 5, corrected=True),
    "eq24": lambda n, m: verify_moments(n, m, 6),
    "eq36": check_eq36,
    "norm": verify_normalization,
    "var": check_variance,
    "skew": check_skewness,
}
AB_CHECKS: dict[str, Callable[[int, int], VerifyReport]] = {
    "eq37": check_eq37,
    "eq38": verify_first_moment_route,
    "eq39": check_eq39,
}
N_CHECKS: dict[str, Callable[[int], VerifyReport]] = {
    "eq26": check_eq26,
    "eq27": check_eq27,
    "eq28": check_eq28,
    "eq29": check_eq29,
    "eq31": check_eq31,
    "eq31b": check_eq31b,
    "eq31c": check_eq31c,
    "eq33": check_eq33,
    "eq34": check_eq34,
    "A1": check_a1,
    "A3a": check_a3a,
    "A3b": check_a3b,
    "A4": check_a4,
    "Asp": check_a_special,
    "z32": f32_unit_closed_form,
}
NZ_CHECKS: dict[str, Callable[[int, Fraction], VerifyReport]] = {
    "r32": f32_reduce_check,
    "r43": f43_reduce_check,
    "eq32": check_eq32,
    "famx": check_family_cross,
}
IDENTITY_IDS: tuple[str, ...] = tuple(
    sorted([*NM_CHECKS, *AB_CHECKS, *N_CHECKS, *NZ_CHECKS, "fam", "leg2f1", "eq35"])
)


def _tasks(identity_id: str, max_nm: int) -> Iterator[tuple]:
    pairs = itertools.product(range(max_nm + 1), repeat=2)
    ns = range(1, max_nm + 1)
    if identity_id in NM_CHECKS:
        yield from ((identity_id, n, m) for n, m in pairs)
    elif identity_id in AB_CHECKS:
        skip_zero = identity_id in ("eq38", "eq39")
        yield from ((identity_id, a, b) for a, b in pairs if a + b or not skip_zero)
    elif identity_id in N_CHECKS:
        yield from ((identity_id, n) for n in ns)
    elif identity_id in NZ_CHECKS:
        yield from ((identity_id, n, z) for n in ns for z in HYPER_POINTS)
    elif identity_id == "fam":
        yield from (("fam", n, k, z) for n in ns for k in FAMILY_ORDERS for z in HYPER_POINTS)
    elif identity_id == "leg2f1":
        yield from (("leg2f1", n, z) for n in ns for z in LEGENDRE_POINTS)
    elif identity_id == "eq35":
        cap = min(max_nm, GENFUN_MAX)
        yield from (
            ("eq35", a, b, x, y) for a, b in itertools.product(range(cap + 1), repeat=2) for x, y in GENFUN_POINTS
        )
    else:
        raise KeyError(f"unknown identity id {identity_id!r}")


def run_task(task: tuple) -> VerifyReport:
    identity_id, *args = task
    if identity_id in NM_CHECKS:
        return NM_CHECKS[identity_id](*args)
    if identity_id in AB_CHECKS:
        return AB_CHECKS[identity_id](*args)
    if identity_id in N_CHECKS:
        return N_CHECKS[identity_id](*args)
    if identity_id in NZ_CHECKS:
        return NZ_CHECKS[identity_id](*args)
    if identity_id == "fam":
        return check_family(*args)
    if identity_id == "leg2f1":
        return legendre_2f1_check(*args)
    if identity_id == "eq35":
        return verify_genfun_series(*args)
    raise KeyError(f"unknown identity id {identity_id!r}")


def resolve_selection(selection: Iterable[str] | None) -> list[str]:
    if selection is None:
        return list(IDENTITY_IDS)
    chosen = set()
    for item in selection:
        if item == "all":
            chosen.update(IDENTITY_IDS)
        elif item in IDENTITY_IDS:
            chosen.add(item)
        else:
            raise KeyError(f"unknown identity id {item!r}")
    return sorted(chosen)


def run_suite(max_nm: int, selection: Iterable[str] | None = None, jobs: int = 1) -> SuiteResult:
    """Run the selected checks over 0 <= n, m <= max_nm (1 <= n <= max_nm for n-only ones).

    ``selection=None`` means every identity; an empty selection gives an empty result.
    """
    if max_nm < 0:
        raise ValueError("max_nm must be nonnegative")
    ids = resolve_selection(selection)
    tasks = [t for i in ids for t in _tasks(i, max_nm)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_task, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    else:
        reports = [run_task(t) for t in tasks]
    reports.sort(key=VerifyReport.sort_key)
    result = SuiteResult(reports)
    for identity_id in ids:
        fit = fit_residual(result.by_id(identity_id))
        if fit is not None:
            result.errata.append(identity_id)
            result.errata_fits[identity_id] = fit
    return result


# --- erratum detection ---------------------------------------------------------------


def _monomials(names: Sequence[str], degree: int) -> list[tuple[int, ...]]:
    out = []
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(len(names)), d):
            exps = [0] * len(names)
            for i in combo:
                exps[i] += 1
            out.append(tuple(exps))
    return out


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Exact solution of an overdetermined consistent system, or None."""
    ncols = len(rows[0])
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if p is None:
            return None  # rank deficient: the sweep cannot pin this fit down
        aug[r], aug[p] = aug[p], aug[r]
        piv = aug[r][c]
        aug[r] = [v / piv for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] != 0 for row in aug[r:]):
        return None
    return [aug[i][-1] for i in range(ncols)]


def _format_poly(names: Sequence[str], monos: Sequence[tuple[int, ...]], coeffs: Sequence[Fraction]) -> str:
    terms = []
    for exps, c in zip(monos, coeffs):
        if c == 0:
            continue
        variables = [name for name, e in zip(names, exps) for _ in range(e)]
        if variables and abs(c) == 1:
            terms.append(("-" if c < 0 else "") + "*".join(variables))
        else:
            terms.append("*".join([str(c)] + variables))
    return " + ".join(terms).replace("+ -", "- ") or "0"


def fit_residual(reports: Sequence[VerifyReport], max_degree: int = 3) -> str | None:
    """Polynomial in the integer parameters reproducing every exact residual, if one exists.

    Only identities with at least three failing parameter points qualify, and
    the fit must be overdetermined so that it is actually tested by the data.
    """
    usable = [r for r in reports if isinstance(r.residual, Fraction) and all(isinstance(v, int) for v in r.params.values())]
    failing = {tuple(r.params.values()) for r in usable if r.residual != 0}
    if len(failing) < 3:
        return None
    names = list(usable[0].params)
    points = [tuple(r.params.values()) for r in usable]
    values = [r.residual for r in usable]
    for degree in range(max_degree + 1):
        monos = _monomials(names, degree)
        if len(points) <= len(monos):
            break
        rows = [[F(_prod(p, e)) for e in monos] for p in points]
        coeffs = _solve_exact(rows, values)
        if coeffs is not None:
            return _format_poly(names, monos, coeffs)
    return None


def _prod(point: Sequence[int], exps: Sequence[int]) -> int:
    out = 1
    for v, e in zip(point, exps):
        out *= v**e
    return out
