"""Finite-test Carleson machinery for measures |b'(z)|^2 dA with polynomial b.

For polynomial b the Gram matrix of the embedding quadratic form
int |f|^2 |b'|^2 dA over the monomial basis has exact entries

    G[j, k] = sum_{a - e = k - j} c_a conj(c_e) / (j + a + 1),

where c are the Taylor coefficients of b' (from the disk orthogonality
int z^p conj(z)^q dA = delta_pq / (p+1); dA is normalized).  The finite-test
Carleson norm is the largest generalized Rayleigh quotient of G against the
exact Dirichlet weights, i.e. the top eigenvalue of D^(-1/2) G D^(-1/2); it
is a lower-bound estimator of the true squared Carleson constant and is
nondecreasing in the test degree, so verdicts derived from it are labelled
heuristic and always reported together with the full degree sweep.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _accel
from .coeffspace import TaylorPoly, weight_sequence
from .criteria import ClassReport, ProfilePoint
from .operators import default_max_iter, top_singular_value


@dataclass(frozen=True)
class GramMatrix:
    entries: np.ndarray
    exact: bool = True

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class CarlesonConfig:
    # the x-norm of a borderline-unbounded symbol grows additively in log N,
    # so consecutive-doubling ratios tend to 1; growth is judged over the
    # whole sweep, saturation at its end
    growth_ratio: float = 1.25  # last/first >= this => unbounded (heuristic)
    saturation_ratio: float = 1.15  # last/previous <= this => saturated
    vanish_fraction: float = 0.1  # restricted/full below this => vanishing
    vanish_delta: float = 2.0**-6
    delta_schedule: tuple = tuple(2.0**-j for j in range(3, 9))


def _disk_power_weights(count: int, delta: float | None = None) -> np.ndarray:
    """Moments int_{annulus} |z|^(2p) dA = w_p for p = 0..count-1.

    delta = None means the full disk (w_p = 1/(p+1)); otherwise the annulus
    1 - delta < |z| < 1 (w_p = (1 - (1-delta)^(2p+2)) / (p+1)).
    """
    p = np.arange(count, dtype=np.float64)
    w = 1.0 / (p + 1.0)
    if delta is not None:
        rho = 1.0 - delta
        w = w * (1.0 - rho ** (2.0 * p + 2.0))
    return w


def _gram_entries(b: TaylorPoly, n: int, delta: float | None = None) -> np.ndarray:
    c = b.derivative().coeffs
    if not np.any(c):
        return np.zeros((n + 1, n + 1))
    if np.all(c.imag == 0.0):
        c = c.real.astype(np.float64)
    w = _disk_power_weights(n + c.shape[0], delta)
    g = _accel.gram(c, n, w)
    return 0.5 * (g + g.conj().T)  # exact formula is Hermitian; kill rounding skew


def symbol_gram(b: TaylorPoly, n: int) -> GramMatrix:
    """Exact Gram matrix of int z^j conj(z)^k |b'|^2 dA, j,k = 0..n."""
    return GramMatrix(_gram_entries(b, n), exact=True)


def _rayleigh_top(g: np.ndarray, tol: float, max_iter: int | None):
    d = weight_sequence("dirichlet-exact", g.shape[0] - 1)
    scale = 1.0 / np.sqrt(d)
    a = g * scale[:, None] * scale[None, :]
    if max_iter is None:
        max_iter = 4 * default_max_iter(a.shape[0])
    sigma, _ = top_singular_value(a, tol=tol, max_iter=max_iter)
    return float(sigma)


def finite_test_carleson_norm(b: TaylorPoly, n: int, tol: float = 1e-12) -> float:
    """Largest Rayleigh quotient of the embedding form over degree-<=n tests.

    Equals the square of the best Carleson constant restricted to polynomial
    test functions of degree <= n; nondecreasing in n.
    """
    return _rayleigh_top(_gram_entries(b, n), tol, None)


def x_norm(b: TaylorPoly, n: int, tol: float = 1e-12) -> float:
    """|b(0)|^2 + finite-test Carleson norm of |b'|^2 dA."""
    return float(abs(b.coeffs[0]) ** 2) + finite_test_carleson_norm(b, n, tol)


def restricted_carleson_norm(b: TaylorPoly, n: int, delta: float, tol: float = 1e-12) -> float:
    """Finite-test norm with the Gram restricted to the annulus 1-delta < |z| < 1.

    Tends to the full-disk value as delta -> 1; its decay as delta -> 0
    (jointly with growing n) is the vanishing-Carleson diagnostic.
    """
    if not 0.0 < delta < 1.0:
        raise ValueError("annulus width delta must lie in (0, 1)")
    return _rayleigh_top(_gram_entries(b, n, delta=delta), tol, None)


def mixed_norm(
    phi: TaylorPoly,
    p: float,
    radial_nodes: int = 64,
    angular_nodes: int | None = None,
) -> float:
    """int_0^1 M_p(phi', r)^2 dr with M_p the circle mean of order p.

    Gauss-Legendre in r; uniform angular grid (exact for the trigonometric
    polynomials arising from integer p, spectrally accurate otherwise).
    p = inf takes the angular maximum with a local refinement pass around
    the grid argmax.  Requires p > 2.
    """
    if not (p == np.inf or p > 2.0):
        raise ValueError("mixed norm requires p > 2 (or p = inf)")
    c = phi.derivative().coeffs
    deg = c.shape[0] - 1
    if angular_nodes is None:
        angular_nodes = max(256, 4 * deg + 8)
    m = int(angular_nodes)
    nodes, weights = np.polynomial.legendre.leggauss(int(radial_nodes))
    r = 0.5 * (nodes + 1.0)
    w = 0.5 * weights
    powers = np.arange(deg + 1)
    total = 0.0
    for ri, wi in zip(r, w):
        x = c * ri**powers
        vals = m * np.fft.ifft(x, m)
        mod = np.abs(vals)
        if p == np.inf:
            mp = _refined_max(x, mod)
        else:
            mp = float(np.mean(mod**p)) ** (1.0 / p)
        total += wi * mp * mp
    return float(total)


def _refined_max(x: np.ndarray, grid_mod: np.ndarray) -> float:
    """Max modulus on the circle: grid max plus a fine pass near the argmax."""
    m = grid_mod.shape[0]
    j = int(np.argmax(grid_mod))
    theta = 2.0 * np.pi * (j + np.linspace(-1.0, 1.0, 65)) / m
    z = np.exp(1j * theta)
    acc = np.zeros_like(z)
    for a in x[::-1]:
        acc = acc * z + a
    return float(max(np.max(np.abs(acc)), grid_mod[j]))


def classify_hankel_general(
    b: TaylorPoly,
    n_grid,
    cfg: CarlesonConfig | None = None,
    tol: float = 1e-12,
) -> ClassReport:
    """Heuristic verdict for a general symbol via the Carleson route.

    b is the truncation of the series with coefficients conj(lambda_n).  The
    x-norm sweep over n_grid decides growth vs saturation; saturation is
    promoted to compact when the annulus-restricted norm at the smallest
    delta has decayed below the configured fraction of the full norm.
    """
    cfg = cfg or CarlesonConfig()
    n_grid = [int(n) for n in n_grid]
    if any(x2 <= x1 for x1, x2 in zip(n_grid, n_grid[1:])) or not n_grid:
        raise ValueError("degree grid must be nonempty and strictly increasing")
    values = [x_norm(b.truncate(n), n, tol) for n in n_grid]
    profile = [ProfilePoint(n, v, v) for n, v in zip(n_grid, values)]
    notes = ["finite-test Carleson norms are lower-bound estimators; verdicts heuristic"]
    if values[-1] == 0.0:
        notes.append("zero symbol: zero operator")
        return ClassReport("compact", "heuristic", profile, notes)
    r_full = values[-1] / values[0] if values[0] > 0.0 else np.inf
    r_last = values[-1] / values[-2] if len(values) >= 2 and values[-2] > 0.0 else np.inf
    n_top = n_grid[-1]
    restricted = restricted_carleson_norm(b.truncate(n_top), n_top, cfg.vanish_delta, tol)
    vanish = restricted / values[-1]
    notes.append(
        f"x-norm sweep ratio {r_full:.4g}, end ratio {r_last:.4g}; "
        f"boundary fraction {vanish:.4g}"
    )
    if r_full >= cfg.growth_ratio:
        return ClassReport("unbounded", "heuristic", profile, notes)
    if r_last <= cfg.saturation_ratio:
        if vanish <= cfg.vanish_fraction:
            return ClassReport("compact", "heuristic", profile, notes)
        return ClassReport("bounded", "heuristic", profile, notes)
    return ClassReport("inconclusive", "heuristic", profile, notes)
