import math

import numpy as np
import pytest

from vortexcoh import beamfield as bf
from vortexcoh.exactnum import DomainError
from vortexcoh.statistics import purity

SQRT_2_OVER_PI = math.sqrt(2 / math.pi)


def test_frame():
    frame = bf.WaistFrame(2.0)
    assert frame.to_u(2.0) == pytest.approx(math.sqrt(2))
    assert frame.to_x(frame.to_u(0.7)) == pytest.approx(0.7)
    for bad in (0.0, -1.0, float("nan")):
        with pytest.raises(DomainError):
            bf.WaistFrame(bad)


@pytest.mark.parametrize("count", [1, 2, 5, 12, 30])
def test_gauss_hermite_rule(count):
    rule = bf.gauss_hermite(count)
    assert rule.count == count
    assert np.array_equal(rule.nodes, -rule.nodes[::-1])
    for j in range(0, 2 * count, 2):
        assert rule.moment(j) == pytest.approx(bf.gaussian_moment(j), rel=1e-12)
    assert rule.moment(1) == 0.0


def test_phi_at_origin():
    assert bf.phi(0, 0.0) ** 2 == pytest.approx(SQRT_2_OVER_PI, rel=1e-15)
    assert bf.phi(1, 0.0) == 0.0
    assert bf.phi(0, 0.0, bf.WaistFrame(4.0)) ** 2 == pytest.approx(SQRT_2_OVER_PI / 4)
    assert bf.phi(3, np.array([0.1, 0.2])).shape == (2,)


@pytest.mark.parametrize("w", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("n,m", [(0, 0), (3, 3), (4, 6), (12, 12), (15, 14)])
def test_orthonormality(n, m, w):
    assert bf.orthonormality_check(n, m, bf.WaistFrame(w)).passed


def test_u_lg_origin():
    # n = m carries no net vortex, so the field need not vanish at the centre
    assert bf.u_lg((1, 1), 0.0, 0.0) == pytest.approx(-SQRT_2_OVER_PI)
    assert abs(bf.u_lg((1, 0), 0.0, 0.0)) < 1e-16
    assert abs(bf.u_lg((2, 5), 0.0, 0.0)) < 1e-15


def test_u_lg_vortex_phase():
    # an l = 1 vortex picks up a phase factor i on a quarter turn
    r = 0.6
    a = bf.u_lg((1, 0), r, 0.0)
    b = bf.u_lg((1, 0), 0.0, r)
    assert abs(abs(a) - abs(b)) < 1e-14
    assert abs(b / a - 1j) < 1e-12 or abs(b / a + 1j) < 1e-12


@pytest.mark.parametrize("index", [(0, 0), (1, 1), (2, 3), (4, 4)])
def test_field_normalization(index):
    assert bf.lg_norm_integral(index) == pytest.approx(1.0, abs=1e-12)
    assert bf.trace_integral(index) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("index", [(1, 1), (0, 3), (3, 2)])
def test_correlation_routes(index):
    for x, xp in [(0.0, 0.0), (0.3, -0.2), (1.1, 0.4)]:
        direct = bf.gamma_direct(index, x, xp)
        assert abs(direct - bf.gamma_mercer(index, x, xp)) < 1e-12
        assert abs(direct.imag) < 1e-14


def test_correlation_grid_and_hermitian():
    grid = bf.correlation_grid((2, 1), [0.0, 0.5], [-0.5])
    assert [(x, xp) for x, xp, _ in grid] == [(0.0, -0.5), (0.5, -0.5)]
    g1 = bf.gamma_direct((2, 1), 0.5, -0.5)
    g2 = bf.gamma_direct((2, 1), -0.5, 0.5)
    assert abs(g1 - g2.conjugate()) < 1e-14


@pytest.mark.parametrize("index", [(0, 0), (1, 2), (3, 3), (5, 4)])
def test_purity_integral(index):
    assert bf.purity_integral(index) == pytest.approx(float(purity(index)), abs=1e-12)
    assert bf.purity_integral(index, bf.WaistFrame(3.0)) == pytest.approx(float(purity(index)), abs=1e-12)
