"""Discrete Wigner transform, closed-form oracles, marginals, and purity.

The transform evaluates, for each position sample q, the autocorrelation

    c(q, y) = psi(q + y hbar/2) * conj(psi(q - y hbar/2))

on the symmetric offset grid y_k = k * dy with dy = 2 dq / hbar, so both
arguments land exactly on position-grid nodes, then Fourier-transforms in
y with kernel exp(-i p y) and prefactor 1/(2 pi):

    W(q, p) = (1/2 pi) * integral c(q, y) exp(-i p y) dy

On the grid returned by ``wigner_momentum_grid`` (a full period of the
discrete kernel, endpoints included) the transform runs through an FFT
per row and the marginal identities hold to machine precision; on any
other momentum grid a direct kernel evaluation is used.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Callable

import numpy as np

from .errors import NegativityError, ShapeError
from .fourier import to_momentum
from .grids import Field2D, Grid1D, PhysContext, integrate, integrate_2d

if TYPE_CHECKING:
    from .states import GaussianParams, Wavefunction

#: largest |imaginary part| tolerated in the transform before it is discarded
REALNESS_TOL = 1e-10


@dataclass(frozen=True)
class WignerField:
    """Real Wigner samples W(q_i, p_j) with their physical context."""

    field: Field2D
    ctx: PhysContext

    @property
    def qgrid(self) -> Grid1D:
        return self.field.qgrid

    @property
    def pgrid(self) -> Grid1D:
        return self.field.pgrid

    @property
    def values(self) -> np.ndarray:
        return self.field.values

    def total(self) -> float:
        return integrate_2d(self.field)


@dataclass(frozen=True)
class MomentumWavefunction:
    """Complex momentum-space samples on a p-grid."""

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


@dataclass(frozen=True)
class Density1D:
    """Nonnegative normalized samples of a probability density."""

    grid: Grid1D
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.shape != (self.grid.n,):
            raise ShapeError(f"{v.shape[0]} samples on a grid of {self.grid.n} points")
        object.__setattr__(self, "values", v)

    def total(self) -> float:
        return integrate(self.values, self.grid)

    def cdf(self) -> np.ndarray:
        """Trapezoid CDF at the grid nodes; starts at 0."""
        v = self.values
        cells = 0.5 * (v[1:] + v[:-1]) * self.grid.spacing
        return np.concatenate(([0.0], np.cumsum(cells)))

    def quantile(self, alpha: float) -> float:
        """Linear-interpolation quantile of the trapezoid CDF.

        Ties (flat CDF stretches) break toward the lower grid point.
        """
        cdf = self.cdf()
        pts = self.grid.points()
        target = alpha * cdf[-1]
        i = int(np.searchsorted(cdf, target, side="left"))
        if i == 0:
            return float(pts[0])
        if i >= len(cdf):
            return float(pts[-1])
        step = cdf[i] - cdf[i - 1]
        if step <= 0:
            return float(pts[i])
        frac = (target - cdf[i - 1]) / step
        return float(pts[i - 1] + frac * self.grid.spacing)


def wigner_momentum_grid(qgrid: Grid1D, ctx: PhysContext) -> Grid1D:
    """Canonical momentum grid for the transform: [-P, P] with 2n+1 points.

    P = pi hbar / (2 dq); the 2n cells cover exactly one period of the
    discrete Fourier kernel, which makes the q-marginal identity exact.
    """
    big_p = np.pi * ctx.hbar / (2.0 * qgrid.spacing)
    return Grid1D(-big_p, big_p, 2 * qgrid.n + 1)


def _is_full_period_grid(pgrid: Grid1D, dy: float) -> bool:
    m = pgrid.n - 1
    return (
        abs(pgrid.min + pgrid.max) < 1e-9 * pgrid.spacing
        and abs(pgrid.spacing * dy * m - 2 * np.pi) < 1e-9
    )


def _autocorrelation_row(amps: np.ndarray, k: int) -> tuple[slice, np.ndarray]:
    """Valid j-slice and values of psi[j+k] * conj(psi[j-k]) for
    0 <= k <= (n-1)//2; outside that both factors cannot stay on the grid."""
    n = len(amps)
    sl = slice(k, n - k)
    return sl, amps[2 * k: n] * np.conj(amps[: n - 2 * k])


def wigner_transform(psi: "Wavefunction", pgrid: Grid1D) -> WignerField:
    """Discrete Wigner transform of a sampled wavefunction."""
    amps = psi.amps
    n = psi.grid.n
    ctx = psi.ctx
    dq = psi.grid.spacing
    dy = 2.0 * dq / ctx.hbar

    if _is_full_period_grid(pgrid, dy) and pgrid.n - 1 >= n:
        w = _transform_fft(amps, n, dy, pgrid)
    else:
        w = _transform_direct(amps, n, dy, pgrid)

    imag_max = float(np.max(np.abs(w.imag)))
    if imag_max > REALNESS_TOL:
        raise ValueError(f"transform not real: max |imag| = {imag_max:.3e}")
    return WignerField(Field2D(psi.grid, pgrid, np.ascontiguousarray(w.real)), ctx)


def _transform_fft(amps: np.ndarray, n: int, dy: float, pgrid: Grid1D) -> np.ndarray:
    m = pgrid.n - 1
    d = np.zeros((n, m), dtype=complex)
    d[:, 0] = np.abs(amps) ** 2
    for k in range(1, (n - 1) // 2 + 1):
        sl, c = _autocorrelation_row(amps, k)
        sign = -1.0 if k % 2 else 1.0
        d[sl, k] = sign * c
        d[sl, m - k] = sign * np.conj(c)
    out = np.empty((n, pgrid.n), dtype=complex)
    # chunked FFT keeps peak memory at one extra block
    step = max(1, 2**22 // m)
    for lo in range(0, n, step):
        out[lo:lo + step, :m] = np.fft.fft(d[lo:lo + step], axis=1)
    out[:, m] = out[:, 0]
    return out * (dy / (2 * np.pi))


def _transform_direct(amps: np.ndarray, n: int, dy: float, pgrid: Grid1D) -> np.ndarray:
    kmax = (n - 1) // 2
    ks = np.arange(-kmax, kmax + 1)
    c = np.zeros((n, len(ks)), dtype=complex)
    for k in range(0, kmax + 1):
        sl, row = _autocorrelation_row(amps, k)
        c[sl, kmax + k] = row
        if k:
            c[sl, kmax - k] = np.conj(row)
    kernel = np.exp(-1j * np.outer(ks * dy, pgrid.points()))
    return (c @ kernel) * (dy / (2 * np.pi))


def gaussian_wigner(params: "GaussianParams", ctx: PhysContext) -> Callable:
    """Closed-form Wigner function of a minimal-uncertainty Gaussian.

    A 2-D normal density with mean (q0, p0) and covariance
    diag(sigma_q^2, sigma_p^2), sigma_p = hbar / (2 sigma_q).
    """
    sq = params.sigma_q
    sp = params.sigma_p(ctx)
    q0, p0 = params.q0, params.p0

    def evaluator(q, p):
        q = np.asarray(q, dtype=float)
        p = np.asarray(p, dtype=float)
        out = np.exp(-((q - q0) ** 2) / (2 * sq**2) - ((p - p0) ** 2) / (2 * sp**2))
        out = out / (2 * np.pi * sq * sp)
        return float(out) if out.ndim == 0 else out

    return evaluator


def square_wave_wigner(a: float, ctx: PhysContext) -> Callable:
    """Closed-form Wigner function of the square wave of width a.

    W(q, p) = sin(p (a - 2|q|) / hbar) / (a pi p) on |q| <= a/2, 0 outside,
    with the small-p limit (a - 2|q|) / (a pi hbar).
    """
    if not a > 0:
        raise ValueError(f"width a must be positive, got {a}")
    hbar = ctx.hbar

    def evaluator(q, p):
        q, p = np.broadcast_arrays(np.asarray(q, float), np.asarray(p, float))
        width = a - 2 * np.abs(q)
        x = p * width / hbar
        small = np.abs(x) < 1e-6
        denom = np.where(small, 1.0, a * np.pi * p)
        out = np.where(small, width / (a * np.pi * hbar), np.sin(x) / denom)
        out = np.where(width >= 0, out, 0.0)
        return float(out) if out.ndim == 0 else out

    return evaluator


def square_wave_p_marginal(a: float, p, ctx: PhysContext):
    """Momentum density of the square wave:
    (hbar / (pi a p^2)) (1 - cos(p a / hbar)), limit a / (2 pi hbar) at p = 0."""
    if not a > 0:
        raise ValueError(f"width a must be positive, got {a}")
    hbar = ctx.hbar
    p = np.asarray(p, dtype=float)
    x = p * a / hbar
    small = np.abs(x) < 1e-6
    denom = np.where(small, 1.0, np.pi * a * p**2)
    out = np.where(small, a / (2 * np.pi * hbar), (1 - np.cos(x)) * hbar / denom)
    return float(out) if out.ndim == 0 else out


def shape_f(t):
    """Universal momentum-profile shape f(t) = (1 - cos t) / (pi t^2), f(0) = 1/(2 pi)."""
    t = np.asarray(t, dtype=float)
    small = np.abs(t) < 1e-6
    denom = np.where(small, 1.0, np.pi * t**2)
    out = np.where(small, 1 / (2 * np.pi), (1 - np.cos(t)) / denom)
    return float(out) if out.ndim == 0 else out


def _clamp_density(values: np.ndarray, clamp_tol: float, what: str) -> np.ndarray:
    worst = float(values.min(initial=0.0))
    if worst < -clamp_tol:
        raise NegativityError(f"{what} reaches {worst:.3e}, below -{clamp_tol:.1e}")
    return np.maximum(values, 0.0)


def marginal_q(w: WignerField, clamp_tol: float = 1e-9) -> Density1D:
    """Position density: trapezoid integral of W over p for each q."""
    vals = np.trapezoid(w.values, dx=w.pgrid.spacing, axis=1)
    return Density1D(w.qgrid, _clamp_density(vals, clamp_tol, "q-marginal"))


def marginal_p(w: WignerField, clamp_tol: float = 1e-9) -> Density1D:
    """Momentum density: trapezoid integral of W over q for each p."""
    vals = np.trapezoid(w.values, dx=w.qgrid.spacing, axis=0)
    return Density1D(w.pgrid, _clamp_density(vals, clamp_tol, "p-marginal"))


def momentum_representation(psi: "Wavefunction", pgrid: Grid1D) -> MomentumWavefunction:
    """Unitary Fourier transform of psi onto a momentum grid."""
    amps = to_momentum(psi.amps, psi.grid, pgrid, psi.ctx)
    return MomentumWavefunction(pgrid, amps, psi.ctx)


def purity(w: WignerField) -> float:
    """2 pi hbar * double integral of W^2; 1 for pure states, < 1 for mixtures."""
    sq = Field2D(w.qgrid, w.pgrid, w.values**2)
    return 2 * np.pi * w.ctx.hbar * integrate_2d(sq)
