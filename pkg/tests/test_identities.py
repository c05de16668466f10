from fractions import Fraction as F

import pytest

from vortexcoh import identities as ids
from vortexcoh.exactnum import PiRadical
from vortexcoh.reports import VerifyReport, exact_report


def test_normalization_examples():
    for n, m in [(0, 0), (25, 25), (7, 25)]:
        report = ids.verify_normalization(n, m)
        assert report.passed and report.residual == 0


def test_moment_examples():
    assert ids.verify_moments(1, 1, 1).residual == 0
    r = ids.verify_moments(2, 1, 5)
    assert r.residual == F(10, 4) and r.lhs == "391/4" and r.rhs == "381/4" and not r.passed
    assert ids.verify_moments(2, 1, 5, corrected=True).passed
    assert ids.verify_moments(3, 4, 6).residual == 0


def test_gegenbauer_examples():
    for n, total in [(1, 4), (2, 14), (10, 310)]:
        reports = ids.verify_gegenbauer_forms(n)
        assert [r.identity_id for r in reports] == ["eq27", "eq29", "eq31", "eq31b", "eq31c"]
        assert all(r.passed and r.rhs == f"{total}/1" for r in reports)


def test_family_examples():
    assert all(r.passed and r.lhs == "4/1" for r in ids.verify_family(1, 2, 1))
    assert all(r.passed and r.lhs == "14/1" for r in ids.verify_family(2, 2, 1))
    reports = ids.verify_family(2, 2, F(1, 3))
    assert [r.identity_id for r in reports] == ["fam", "eq32", "famx"] and all(r.passed for r in reports)
    for k in range(1, 7):
        assert ids.verify_family(5, k, F(-1))[0].passed


def test_assoc_legendre_examples():
    eq34, a1, a3a, a3b = ids.verify_assoc_legendre(1)
    assert a1.passed and a3a.passed and a3b.passed
    assert a3a.rhs == "3/8" and a3b.rhs == "3/8"
    assert ids.verify_assoc_legendre(8)[0].lhs == "200/1"
    assert ids.check_a4(6).passed and ids.check_a_special(4).passed


def test_genfun_examples():
    assert ids.verify_genfun_t4(0, 0).lhs == "1/1"
    assert ids.verify_genfun_t4(1, 1).lhs == "2/1"
    assert ids.verify_genfun_t4(12, 5).passed
    assert ids.verify_genfun_series(0, 0, 0, 0).passed
    assert ids.verify_genfun_series(1, 1, 0, 0).passed
    assert ids.verify_genfun_series(3, 2, F(1, 3), F(-1, 5)).passed


def test_genfun_series_sides():
    left, right = ids.genfun_series(1, 1, 0, 0)
    assert left.coefficients == right.coefficients
    assert left.order == 3


def test_first_moment_examples():
    for (a, b), mean in [((1, 0), F(1, 2)), ((1, 1), F(1)), ((4, 9), F(13, 2))]:
        report = ids.verify_first_moment_route(a, b)
        assert report.passed and report.lhs == f"{mean.numerator}/{mean.denominator}"
        assert ids.check_eq39(a, b).passed


def test_run_suite_examples():
    r = ids.run_suite(5, {"eq6"})
    assert r.summary == {"pass": 36, "fail": 0}
    r = ids.run_suite(3, {"eq23"})
    assert r.errata == ["eq23"] and r.errata_fits["eq23"] == "5/4*n*m"
    empty = ids.run_suite(4, set())
    assert empty.reports == [] and empty.summary == {"pass": 0, "fail": 0}
    with pytest.raises(KeyError):
        ids.run_suite(1, {"nope"})
    with pytest.raises(ValueError):
        ids.run_suite(-1, {"eq6"})


def test_suite_ordering_and_parallel_merge():
    serial = ids.run_suite(3, ["eq20", "A1", "fam", "eq35"])
    parallel = ids.run_suite(3, ["eq20", "A1", "fam", "eq35"], jobs=2)
    assert serial.to_json() == parallel.to_json()
    keys = [r.sort_key() for r in serial.reports]
    assert keys == sorted(keys)


def test_all_small_sweep_has_only_eq23_failures():
    r = ids.run_suite(4)
    failing = {x.identity_id for x in r.reports if not x.passed}
    assert failing == {"eq23"} and r.errata == ["eq23"]


@pytest.mark.parametrize("identity_id", ["eq6", "eq23", "eq27", "A3a", "fam", "eq29", "eq31c"])
def test_residual_recomputes(identity_id):
    for report in ids.run_suite(3, [identity_id]).reports:
        lhs, rhs = F(report.lhs), F(report.rhs)
        assert lhs - rhs == report.residual


def test_pi_content_reports():
    sp = PiRadical.sqrt_pi()
    assert exact_report("x", {}, sp * 2, sp + sp).passed
    r = exact_report("x", {}, sp, 1)
    assert not r.passed and r.lhs == "1/1*pi^(1/2)"


def test_fit_residual():
    def reports(f):
        return [
            VerifyReport("t", {"n": n, "m": m}, "fail", "", "", F(f(n, m)))
            for n in range(4)
            for m in range(4)
        ]

    assert ids.fit_residual(reports(lambda n, m: F(5, 4) * n * m)) == "5/4*n*m"
    assert ids.fit_residual(reports(lambda n, m: n * n - 3 * m + 2)) == "2 - 3*m + n*n"
    assert ids.fit_residual(reports(lambda n, m: 0)) is None
    # fewer than three failing points never count as systematic
    assert ids.fit_residual(reports(lambda n, m: int(n == m == 3))) is None
    # not polynomial of low degree
    assert ids.fit_residual(reports(lambda n, m: 2**n * 3**m)) is None
