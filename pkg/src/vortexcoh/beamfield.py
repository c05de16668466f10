"""Waist-plane HG modes, LG synthesis and the two-point correlation function.

Double precision starts here: exact Hermite coefficients and exact b values
are rounded once, then everything is evaluated in floats.  All integrals are
Gauss-Hermite after the substitution u = sqrt(2) x / w, under which every
integrand is a polynomial times exp(-u^2) and the rule is exact up to
rounding once its node count covers the degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial import hermite as _npherm

from vortexcoh.exactnum import DomainError, double_factorial
from vortexcoh.modecoeff import ModeIndex, b_derivative_route, distribution
from vortexcoh.orthopoly import hermite
from vortexcoh.reports import VerifyReport, float_report

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class WaistFrame:
    w: float = 1.0

    def __post_init__(self):
        if not self.w > 0:
            raise DomainError(f"beam waist must be positive, got {self.w}")

    def to_u(self, x):
        return SQRT2 * np.asarray(x, dtype=float) / self.w

    def to_x(self, u):
        return self.w * np.asarray(u, dtype=float) / SQRT2

    @property
    def jacobian(self) -> float:
        """dx/du."""
        return self.w / SQRT2


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray

    @property
    def count(self) -> int:
        return len(self.nodes)

    def integrate(self, values) -> float:
        """sum_i w_i f(u_i) for samples f(u_i) of the non-Gaussian factor."""
        return math.fsum(self.weights * np.asarray(values))

    def moment(self, j: int) -> float:
        return math.fsum(self.weights * self.nodes**j)


def gaussian_moment(j: int) -> float:
    """Integral of u^j exp(-u^2) over the real line."""
    if j % 2:
        return 0.0
    return float(double_factorial(j - 1) / 2 ** (j // 2)) * math.sqrt(math.pi)


@lru_cache(maxsize=None)
def gauss_hermite(count: int) -> QuadratureRule:
    """Gauss-Hermite rule for weight exp(-u^2) with ``count`` nodes."""
    if count < 1:
        raise DomainError("quadrature needs at least one node")
    nodes, weights = _npherm.hermgauss(count)
    # exact symmetry; hermgauss leaves ~1e-16 asymmetry
    nodes = 0.5 * (nodes - nodes[::-1])
    weights = 0.5 * (weights + weights[::-1])
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(nodes, weights)


@lru_cache(maxsize=None)
def _hermite_desc(n: int) -> np.ndarray:
    return np.array(hermite(n).to_floats()[::-1])


@lru_cache(maxsize=None)
def _norm_sq_unit(n: int) -> float:
    # sqrt(2) / (sqrt(pi) 2^n n!) at w = 1
    return math.sqrt(2.0 / math.pi) / float(2**n * math.factorial(n))


def mode_poly(n: int, u, frame: WaistFrame):
    """Phi_n with the Gaussian factor exp(-u^2/2) stripped off."""
    if n < 0:
        raise DomainError("mode order must be nonnegative")
    norm = math.sqrt(_norm_sq_unit(n) / frame.w)
    return norm * np.polyval(_hermite_desc(n), u)


def phi(n: int, x, frame: WaistFrame = WaistFrame()):
    """Normalized waist-plane HG profile Phi_n(x); scalar in, scalar out."""
    u = frame.to_u(x)
    out = mode_poly(n, u, frame) * np.exp(-0.5 * u * u)
    return float(out) if np.ndim(out) == 0 else out


def _mode_matrix(N: int, u: np.ndarray, frame: WaistFrame) -> np.ndarray:
    """Row j = mode_poly(j, u)."""
    return np.array([mode_poly(j, u, frame) for j in range(N + 1)])


def orthonormality_check(n: int, m: int, frame: WaistFrame = WaistFrame(), tol: float = 1e-12) -> VerifyReport:
    rule = gauss_hermite(n + m + 2)
    u = rule.nodes
    value = frame.jacobian * rule.integrate(mode_poly(n, u, frame) * mode_poly(m, u, frame))
    return float_report("eq3", {"n": n, "m": m}, value, float(n == m), tol)


def _as_index(index) -> ModeIndex:
    return index if isinstance(index, ModeIndex) else ModeIndex(*index)


@lru_cache(maxsize=1024)
def _b_floats(n: int, m: int) -> np.ndarray:
    return np.array([float(b_derivative_route(n, m, k)) for k in range(n + m + 1)])


_PHASES = (1, 1j, -1, -1j)


def _lg_weights(index: ModeIndex, x: float, frame: WaistFrame) -> np.ndarray:
    """c_k(x) = i^k b(n,m,k) Phi_{n+m-k}(x), the y-mode expansion of u_LG at fixed x."""
    N = index.total
    b = _b_floats(index.n, index.m)
    return np.array([_PHASES[k % 4] * b[k] * phi(N - k, x, frame) for k in range(N + 1)])


def u_lg(index, x: float, y: float, frame: WaistFrame = WaistFrame()) -> complex:
    """u^LG_{n,m}(x, y) = sum_k i^k b(n,m,k) Phi_{n+m-k}(x) Phi_k(y)."""
    index = _as_index(index)
    c = _lg_weights(index, x, frame)
    ys = np.array([phi(k, y, frame) for k in range(index.total + 1)])
    return complex(np.sum(c * ys))


def gamma_mercer(index, x: float, xp: float, frame: WaistFrame = WaistFrame()) -> float:
    """sum_j b^2(n,m,n+m-j) Phi_j(x) Phi_j(x')."""
    index = _as_index(index)
    N = index.total
    p = distribution(index).floats()
    return math.fsum(p[N - j] * phi(j, x, frame) * phi(j, xp, frame) for j in range(N + 1))


def gamma_direct(index, x: float, xp: float, frame: WaistFrame = WaistFrame(), count: int | None = None) -> complex:
    """Integral over y of conj(u_LG(x, y)) u_LG(x', y) by Gauss-Hermite quadrature."""
    index = _as_index(index)
    N = index.total
    rule = gauss_hermite(count or 2 * N + 2)
    modes = _mode_matrix(N, rule.nodes, frame)
    a = _lg_weights(index, x, frame) @ modes
    b = _lg_weights(index, xp, frame) @ modes
    integrand = np.conj(a) * b
    re = rule.integrate(integrand.real)
    im = rule.integrate(integrand.imag)
    return complex(frame.jacobian * re, frame.jacobian * im)


def purity_integral(index, frame: WaistFrame = WaistFrame(), count: int | None = None) -> float:
    """Double integral of |Gamma|^2 over the squared trace of Gamma."""
    index = _as_index(index)
    N = index.total
    rule = gauss_hermite(count or N + 2)
    modes = _mode_matrix(N, rule.nodes, frame)
    p = np.array(distribution(index).floats()[::-1])  # p[j] = b^2(n,m,N-j)
    kernel = modes.T @ (p[:, None] * modes)  # Gamma without its Gaussian factors
    w = rule.weights
    numerator = frame.jacobian**2 * math.fsum((w[:, None] * w[None, :] * kernel**2).ravel())
    trace = frame.jacobian * rule.integrate(np.diag(kernel))
    return numerator / trace**2


def trace_integral(index, frame: WaistFrame = WaistFrame()) -> float:
    """Integral of Gamma(x, x) over x."""
    index = _as_index(index)
    N = index.total
    rule = gauss_hermite(N + 2)
    modes = _mode_matrix(N, rule.nodes, frame)
    p = np.array(distribution(index).floats()[::-1])
    return frame.jacobian * rule.integrate(np.sum(p[:, None] * modes**2, axis=0))


def lg_norm_integral(index, frame: WaistFrame = WaistFrame()) -> float:
    """Integral of |u_LG|^2 over the plane by tensor Gauss-Hermite quadrature."""
    index = _as_index(index)
    N = index.total
    rule = gauss_hermite(N + 2)
    modes = _mode_matrix(N, rule.nodes, frame)
    b = _b_floats(index.n, index.m)
    phases = np.array([_PHASES[k % 4] for k in range(N + 1)])
    # field without Gaussians: sum_k i^k b_k P_{N-k}(u) P_k(v)
    field = np.einsum("k,ki,kj->ij", phases * b, modes[::-1], modes)
    w = rule.weights
    return frame.jacobian**2 * math.fsum((w[:, None] * w[None, :] * np.abs(field) ** 2).ravel())


def correlation_grid(index, xs, xps, frame: WaistFrame = WaistFrame()) -> list[tuple[float, float, complex]]:
    return [(float(x), float(xp), gamma_direct(index, x, xp, frame)) for x in xs for xp in xps]
