"""Unitary position <-> momentum transforms.

Convention (the unique one under which both Wigner marginal identities
hold):

    psi_p(p) = (2 pi hbar)^(-1/2) * integral psi(q) exp(-i p q / hbar) dq

Two evaluation paths:

* an FFT path, used when the momentum grid is exactly the Fourier
  conjugate of the position grid (``fourier_conjugate_grid``).  This path
  is a unitary discrete map: round trips and Parseval hold to machine
  precision, which is what the free-evolution oracle needs;
* a direct-kernel path for arbitrary grids, using trapezoid quadrature.
"""

from __future__ import annotations

import numpy as np

from .grids import Grid1D, PhysContext


def fourier_conjugate_grid(qgrid: Grid1D, ctx: PhysContext) -> Grid1D:
    """Momentum grid on which the transform reduces to a plain FFT.

    n points with spacing dp = 2 pi hbar / (n dq), laid out like fftshift
    output: p_min = -floor(n/2) * dp.
    """
    n = qgrid.n
    dp = 2 * np.pi * ctx.hbar / (n * qgrid.spacing)
    p_min = -(n // 2) * dp
    return Grid1D(p_min, p_min + (n - 1) * dp, n)


def is_conjugate_pair(qgrid: Grid1D, pgrid: Grid1D, ctx: PhysContext) -> bool:
    if pgrid.n != qgrid.n:
        return False
    ref = fourier_conjugate_grid(qgrid, ctx)
    scale = abs(ref.min) + ref.spacing
    return (
        abs(pgrid.min - ref.min) < 1e-9 * scale
        and abs(pgrid.spacing - ref.spacing) < 1e-9 * ref.spacing
    )


def to_momentum(amps: np.ndarray, qgrid: Grid1D, pgrid: Grid1D, ctx: PhysContext) -> np.ndarray:
    """Momentum-space amplitudes of position samples."""
    hbar = ctx.hbar
    q = qgrid.points()
    p = pgrid.points()
    if is_conjugate_pair(qgrid, pgrid, ctx):
        j = np.arange(qgrid.n)
        phi = amps * np.exp(-1j * p[0] * j * qgrid.spacing / hbar)
        f = np.fft.fft(phi)
        return qgrid.spacing / np.sqrt(2 * np.pi * hbar) * np.exp(-1j * p * q[0] / hbar) * f
    kernel = np.exp(-1j * np.outer(p, q) / hbar)
    return kernel @ (amps * qgrid.trapezoid_weights()) / np.sqrt(2 * np.pi * hbar)


def to_position(amps_p: np.ndarray, pgrid: Grid1D, qgrid: Grid1D, ctx: PhysContext) -> np.ndarray:
    """Inverse transform: position samples from momentum-space amplitudes."""
    hbar = ctx.hbar
    q = qgrid.points()
    p = pgrid.points()
    if is_conjugate_pair(qgrid, pgrid, ctx):
        l = np.arange(pgrid.n)
        phi = amps_p * np.exp(1j * l * pgrid.spacing * q[0] / hbar)
        f = np.fft.ifft(phi) * pgrid.n
        return pgrid.spacing / np.sqrt(2 * np.pi * hbar) * np.exp(1j * p[0] * q / hbar) * f
    kernel = np.exp(1j * np.outer(q, p) / hbar)
    return kernel @ (amps_p * pgrid.trapezoid_weights()) / np.sqrt(2 * np.pi * hbar)
