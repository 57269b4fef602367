"""Quantitative phase-space diagnostics: half-plane probabilities, the
probability-backflow extremum, tangent geometry and spreading laws,
quantile widths, and long-time asymptotic profiles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np

from .errors import DomainError, MonotoneCaseError, NormalizationError, ShapeError
from .grids import Grid1D, PhysContext
from .states import GaussianParams
from .wigner import Density1D, WignerField, square_wave_wigner


@dataclass(frozen=True)
class HalfPlaneQuery:
    """Oriented line through (q1, 0) at angle theta with the q-axis.

    theta is normalized to [0, 2 pi); theta = pi/2 makes the right side
    the half-plane q > q1.
    """

    q1: float
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta) % (2 * np.pi))


@dataclass(frozen=True)
class WidthReport:
    t: float
    width: float
    method: Literal["stddev", "half_iqr"]

    def __post_init__(self):
        if self.width < 0:
            raise ValueError(f"width must be nonnegative, got {self.width}")


def half_plane_prob(w: WignerField, query: HalfPlaneQuery) -> float:
    """Integral of W over the half-plane right of the oriented line.

    The indicator is replaced by a one-cell linear ramp across the
    boundary (fractional coverage), which keeps the estimate first-order
    accurate and makes f(theta) + f(theta + pi) equal the total integral
    exactly.
    """
    sin_t, cos_t = np.sin(query.theta), np.cos(query.theta)
    q = w.qgrid.points()[:, None]
    p = w.pgrid.points()[None, :]
    signed = (q - query.q1) * sin_t - p * cos_t
    ramp = abs(sin_t) * w.qgrid.spacing + abs(cos_t) * w.pgrid.spacing
    coverage = np.clip(signed / ramp + 0.5, 0.0, 1.0)
    wq = w.qgrid.trapezoid_weights()[:, None]
    wp = w.pgrid.trapezoid_weights()[None, :]
    return float(np.sum(w.values * coverage * wq * wp))


def shear_angle(t: float, m: float) -> float:
    """Angle of the line that q = q1 shears back to after free evolution.

    Slope dp/dq = -m/t; vertical (pi/2) at t = 0, rotating toward pi as
    t -> +inf and toward 0 as t -> -inf.
    """
    return float(np.arctan2(1.0, -t / m) % (2 * np.pi))


def prob_right_of(w0: WignerField, q1: float, t: float, m: float) -> float:
    """Pr(q > q1 | t) for free evolution, evaluated on the t = 0 field by
    integrating to the right of the sheared line through (q1, 0)."""
    return half_plane_prob(w0, HalfPlaneQuery(q1, shear_angle(t, m)))


def extremum_time(
    params: GaussianParams, q1: float, m: float, ctx: PhysContext = PhysContext()
) -> float:
    """Time at which Pr(q > q1 | t) has its extremum for a Gaussian packet:
    t = -m p0 sigma_q^2 / ((q1 - q0) sigma_p^2)."""
    if q1 == params.q0:
        raise MonotoneCaseError(
            "q1 = q0: the probability curve is strictly monotonic, no extremum"
        )
    sp = params.sigma_p(ctx)
    return -m * params.p0 * params.sigma_q**2 / ((q1 - params.q0) * sp**2)


def gaussian_tangent_point(
    params: GaussianParams, m: float, t: float, ctx: PhysContext = PhysContext()
) -> tuple[float, float]:
    """Point where the sheared one-sigma interval touches the one-sigma
    ellipse: (sigma_q, sigma_p |r|) / sqrt(1 + r^2) with r = sigma_p t / (sigma_q m)."""
    sq = params.sigma_q
    sp = params.sigma_p(ctx)
    r = sp * t / (sq * m)
    scale = np.sqrt(1.0 + r * r)
    return float(sq / scale), float(sp * abs(r) / scale)


def gaussian_width(
    params: GaussianParams, m: float, t: float, ctx: PhysContext = PhysContext()
) -> float:
    """Endpoint of the projected one-sigma interval:
    sqrt(sigma_q^2 + (hbar t / 2 m sigma_q)^2)."""
    sq = params.sigma_q
    return float(np.hypot(sq, ctx.hbar * t / (2 * m * sq)))


def half_iqr(rho: Density1D) -> float:
    """Half-interquartile range q_75% - q_50% of a normalized density."""
    total = rho.total()
    if abs(total - 1.0) > 1e-3:
        raise NormalizationError(f"density integrates to {total}, expected 1")
    return rho.quantile(0.75) - rho.quantile(0.5)


def width_law_hg(sigma_q0: float, omega: float, t: float) -> float:
    """Free-propagation width of a Hermite-Gauss state:
    sigma_q(t) = sigma_q(0) sqrt(1 + (omega t)^2)."""
    if not sigma_q0 > 0:
        raise ValueError(f"sigma_q0 must be positive, got {sigma_q0}")
    if not omega > 0:
        raise ValueError(f"omega must be positive, got {omega}")
    return float(sigma_q0 * np.hypot(1.0, omega * t))


def hg_energy_ratio(
    n: int, omega: float, m: float, ctx: PhysContext = PhysContext(), grid_n: int = 1025
) -> float:
    """Measured sigma_p(0) / sigma_q(0) of the n-th oscillator eigenstate,
    using half-interquartile widths of the numeric Wigner marginals.

    Equals m omega (the classical energy-conservation ratio) within ~1%.
    The grid spans twice the turning-point window: the conjugate momentum
    spacing scales inversely with the position span, and the p-quantiles
    need a few cells of resolution.
    """
    from .states import hermite_gauss
    from .wigner import marginal_p, marginal_q, wigner_momentum_grid, wigner_transform

    ctx_m = PhysContext(hbar=ctx.hbar, mass=m)
    sigma0 = np.sqrt(ctx.hbar / (2 * m * omega))
    span = 2.5 * (np.sqrt((2 * n + 1) * ctx.hbar / (m * omega)) + 6 * sigma0)
    grid = Grid1D(-span, span, grid_n)
    psi = hermite_gauss(n, omega, grid, ctx_m)
    w = wigner_transform(psi, wigner_momentum_grid(grid, ctx_m))
    return half_iqr(marginal_p(w)) / half_iqr(marginal_q(w))


def asymptotic_profile(rho_p: Density1D, m: float, t: float) -> Density1D:
    """Long-time position density (m/t) rho_p(m q / t) on the stretched grid."""
    if not t > 0:
        raise DomainError(f"asymptotic profile needs t > 0, got {t}")
    scale = t / m
    grid = Grid1D(rho_p.grid.min * scale, rho_p.grid.max * scale, rho_p.grid.n)
    return Density1D(grid, rho_p.values * (m / t))


def monotonicity_verdict(
    samples, tol: float = 1e-9
) -> Literal["increasing", "decreasing", "non-monotonic"]:
    """Classify a sampled curve, ignoring successive differences below tol."""
    s = np.asarray(samples, dtype=float)
    if s.size < 3:
        raise ShapeError(f"need at least 3 samples, got {s.size}")
    d = np.diff(s)
    if np.all(d >= -tol):
        return "increasing"
    if np.all(d <= tol):
        return "decreasing"
    return "non-monotonic"


def square_wave_evolved_marginal(
    a: float, t: float, grid: Grid1D, ctx: PhysContext = PhysContext(), m: float = 1.0, order: int = 300
) -> Density1D:
    """Exact free-evolved position density of the square wave.

    Integrates the closed-form initial Wigner function along the shear
    characteristic, rho(t, q) = integral W0(q - p t / m, p) dp.  For each
    q the integrand is supported on p in [(q - a/2) m/t, (q + a/2) m/t];
    Gauss-Legendre quadrature is applied on each side of the kink at
    p = q m / t.
    """
    if not t > 0:
        raise DomainError(f"needs t > 0, got {t}")
    w0 = square_wave_wigner(a, ctx)
    q = grid.points()
    lo = (q - a / 2) * m / t
    hi = (q + a / 2) * m / t
    mid = q * m / t
    nodes, weights = np.polynomial.legendre.leggauss(order)
    vals = np.zeros(grid.n)
    for left, right in ((lo, mid), (mid, hi)):
        half = 0.5 * (right - left)
        center = 0.5 * (right + left)
        p = center[:, None] + half[:, None] * nodes[None, :]
        vals += half * (w0(q[:, None] - p * t / m, p) @ weights)
    return Density1D(grid, np.maximum(vals, 0.0))


def locate_extremum(
    fn: Callable[[float], float],
    t_lo: float,
    t_hi: float,
    n_scan: int = 64,
    tol: float = 1e-4,
) -> float:
    """Brute-force argmin of fn on [t_lo, t_hi]: uniform scan followed by
    golden-section refinement to the requested tolerance."""
    ts = np.linspace(t_lo, t_hi, n_scan)
    vals = np.array([fn(t) for t in ts])
    i = int(np.argmin(vals))
    lo = ts[max(i - 1, 0)]
    hi = ts[min(i + 1, n_scan - 1)]
    inv_phi = (np.sqrt(5.0) - 1) / 2
    c = hi - inv_phi * (hi - lo)
    d = lo + inv_phi * (hi - lo)
    fc, fd = fn(c), fn(d)
    while hi - lo > tol:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - inv_phi * (hi - lo)
            fc = fn(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + inv_phi * (hi - lo)
            fd = fn(d)
    return float(0.5 * (lo + hi))


def l1_distance(rho_a: Density1D, rho_b: Density1D) -> float:
    """Integral of |rho_a - rho_b| over their common grid."""
    if rho_a.grid != rho_b.grid:
        raise ShapeError("densities must share a grid")
    return float(np.trapezoid(np.abs(rho_a.values - rho_b.values), dx=rho_a.grid.spacing))
