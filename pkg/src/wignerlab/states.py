"""Initial states: Gaussian, Hermite-Gauss, square wave, sinc wave, and
construction of a state from a target long-time profile.

Constructors renormalize on the grid after sampling, so grid truncation
shows up as a tail-mass precondition failure rather than a silently
broken norm.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import eval_hermite, gammaln

from .errors import NormalizationError, ShapeError, TailMassError, WeightError
from .fourier import to_position
from .grids import Field2D, Grid1D, PhysContext, integrate
from .wigner import Density1D, WignerField


@dataclass(frozen=True)
class Wavefunction:
    """Complex position-space samples on a uniform grid."""

    grid: Grid1D
    amps: np.ndarray = field(repr=False)
    ctx: PhysContext = PhysContext()

    def __post_init__(self):
        a = np.asarray(self.amps, dtype=complex)
        if a.shape != (self.grid.n,):
            raise ShapeError(f"{a.shape[0]} amplitudes on a grid of {self.grid.n} points")
        object.__setattr__(self, "amps", a)

    def density(self) -> np.ndarray:
        return np.abs(self.amps) ** 2

    def norm_sq(self) -> float:
        return integrate(self.density(), self.grid)


@dataclass(frozen=True)
class GaussianParams:
    """Minimal-uncertainty Gaussian packet: peak q0, group momentum p0,
    position width sigma_q at the time of minimal spread."""

    q0: float = 0.0
    p0: float = 0.0
    sigma_q: float = 1.0

    def __post_init__(self):
        if not self.sigma_q > 0:
            raise ValueError(f"sigma_q must be positive, got {self.sigma_q}")

    def sigma_p(self, ctx: PhysContext) -> float:
        """Momentum width hbar / (2 sigma_q), saturating sigma_q sigma_p = hbar/2."""
        return ctx.hbar / (2.0 * self.sigma_q)


def _normalized(amps: np.ndarray, grid: Grid1D) -> np.ndarray:
    norm_sq = integrate(np.abs(amps) ** 2, grid)
    if norm_sq <= 0:
        raise NormalizationError("state has zero norm on this grid")
    return amps / np.sqrt(norm_sq)


def gaussian_wavefunction(
    params: GaussianParams, grid: Grid1D, ctx: PhysContext = PhysContext()
) -> Wavefunction:
    """sqrt of the N(q0, sigma_q^2) density times the plane wave exp(i p0 q / hbar).

    The phase factor is the unique choice giving the Wigner mean (q0, p0).
    """
    sq = params.sigma_q
    if grid.min > params.q0 - 4 * sq or grid.max < params.q0 + 4 * sq:
        raise TailMassError(
            f"grid [{grid.min}, {grid.max}] must span at least 8 sigma_q around q0={params.q0}"
        )
    q = grid.points()
    envelope = (2 * np.pi * sq**2) ** -0.25 * np.exp(-((q - params.q0) ** 2) / (4 * sq**2))
    amps = envelope * np.exp(1j * params.p0 * q / ctx.hbar)
    return Wavefunction(grid, _normalized(amps, grid), ctx)


def hermite_gauss(
    n: int, omega: float, grid: Grid1D, ctx: PhysContext = PhysContext()
) -> Wavefunction:
    """n-th harmonic-oscillator eigenfunction for frequency omega.

    psi_n(x) = (2^n n!)^{-1/2} (m omega / pi hbar)^{1/4}
               exp(-m omega x^2 / 2 hbar) H_n(sqrt(m omega / hbar) x)
    with physicists' Hermite polynomials H_n.
    """
    if n < 0:
        raise ValueError(f"quantum number must be nonnegative, got {n}")
    if not omega > 0:
        raise ValueError(f"omega must be positive, got {omega}")
    hbar, m = ctx.hbar, ctx.mass
    sigma0 = np.sqrt(hbar / (2 * m * omega))
    turning = np.sqrt((2 * n + 1) * hbar / (m * omega))
    span = turning + 4 * sigma0
    if grid.min > -span or grid.max < span:
        raise TailMassError(
            f"grid must span the classical turning points +-{turning:.3g} with margin"
        )
    x = grid.points()
    xi = np.sqrt(m * omega / hbar) * x
    log_norm = -0.5 * (n * np.log(2) + gammaln(n + 1)) + 0.25 * np.log(m * omega / (np.pi * hbar))
    amps = np.exp(log_norm - xi**2 / 2) * eval_hermite(n, xi)
    return Wavefunction(grid, _normalized(amps.astype(complex), grid), ctx)


def square_wave(a: float, grid: Grid1D, ctx: PhysContext = PhysContext()) -> Wavefunction:
    """Flat-top state: a^{-1/2} on [-a/2, a/2], zero outside.

    Nodes landing exactly on the jump take the plateau value over sqrt(2),
    so the sampled density sits at the jump midpoint and trapezoid
    quadrature of the discontinuity stays second-order.
    """
    if not a > 0:
        raise ValueError(f"width a must be positive, got {a}")
    if grid.min > -a / 2 or grid.max < a / 2:
        raise TailMassError(f"grid must cover [-{a / 2}, {a / 2}] with margin")
    q = grid.points()
    tol = 1e-9 * grid.spacing
    inside = np.abs(q) < a / 2 - tol
    on_edge = np.abs(np.abs(q) - a / 2) <= tol
    amps = np.where(inside, a**-0.5, 0.0) + np.where(on_edge, a**-0.5 / np.sqrt(2), 0.0)
    return Wavefunction(grid, _normalized(amps.astype(complex), grid), ctx)


def sinc_wave(
    b: float,
    grid: Grid1D,
    ctx: PhysContext = PhysContext(),
    tail_tol: float = 1e-4,
) -> Wavefunction:
    """State with flat momentum density on [-b/2, b/2]:
    psi(q) = sqrt(b / hbar) sinc(b q / 2 hbar) / sqrt(2 pi).

    sinc decays slowly (tail mass beyond |q| = L is about hbar/(pi b L)
    per side), so the grid must be wide; the estimated out-of-grid mass
    must stay below tail_tol.
    """
    if not b > 0:
        raise ValueError(f"momentum width b must be positive, got {b}")
    hbar = ctx.hbar
    tail = hbar / (np.pi * b) * (1 / abs(grid.min) + 1 / grid.max) if grid.min < 0 < grid.max else np.inf
    if tail > tail_tol:
        raise TailMassError(
            f"estimated out-of-grid mass {tail:.2e} exceeds {tail_tol:.1e}; widen the grid"
        )
    q = grid.points()
    amps = np.sqrt(b / hbar) * np.sinc(b * q / (2 * np.pi * hbar)) / np.sqrt(2 * np.pi)
    return Wavefunction(grid, _normalized(amps.astype(complex), grid), ctx)


def state_from_target_profile(
    rho: Density1D,
    phase: np.ndarray | None,
    grid: Grid1D,
    ctx: PhysContext = PhysContext(),
) -> Wavefunction:
    """State whose momentum density equals a target profile rho(p).

    Sets the momentum wavefunction to sqrt(rho(p)) exp(i S(p)) and maps it
    to position space with the inverse of ``momentum_representation``.
    Under free propagation |psi(t, q)|^2 converges to (m/t) rho(m q / t).
    The phase S is free; None means S = 0.
    """
    total = rho.total()
    if abs(total - 1.0) > 1e-6:
        raise NormalizationError(f"target density integrates to {total}, expected 1")
    if phase is None:
        phase = np.zeros(rho.grid.n)
    phase = np.asarray(phase, dtype=float)
    if phase.shape != (rho.grid.n,):
        raise ShapeError("phase must be sampled on the target density's grid")
    amps_p = np.sqrt(np.maximum(rho.values, 0.0)) * np.exp(1j * phase)
    amps = to_position(amps_p, rho.grid, grid, ctx)
    return Wavefunction(grid, _normalized(amps, grid), ctx)


def mix(wigner_fields: list[WignerField], weights) -> WignerField:
    """Convex combination of Wigner fields on identical grids."""
    weights = np.asarray(weights, dtype=float)
    if len(wigner_fields) != len(weights) or len(weights) == 0:
        raise WeightError("need one weight per field")
    if np.any(weights < 0) or abs(weights.sum() - 1.0) > 1e-12:
        raise WeightError(f"weights must be nonnegative and sum to 1, got {weights}")
    first = wigner_fields[0]
    for w in wigner_fields[1:]:
        if w.qgrid != first.qgrid or w.pgrid != first.pgrid:
            raise ShapeError("all fields must share the same phase-space grid")
    values = sum(c * w.values for c, w in zip(weights, wigner_fields))
    return WignerField(Field2D(first.qgrid, first.pgrid, values), first.ctx)
