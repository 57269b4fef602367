"""Uniform grids, trapezoid quadrature, and bilinear interpolation.

Everything downstream (states, Wigner transforms, flows) works with
samples on uniform 1-D grids or on rectangular 2-D products of them.
All containers are frozen dataclasses: operations are pure functions and
results can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import GridError, ShapeError


@dataclass(frozen=True)
class PhysContext:
    """Physical constants carried explicitly through every operation.

    Defaults are natural units hbar = 1, m = 1.
    """

    hbar: float = 1.0
    mass: float = 1.0

    def __post_init__(self):
        if not (self.hbar > 0):
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        if not (self.mass > 0):
            raise ValueError(f"mass must be positive, got {self.mass}")


@dataclass(frozen=True)
class Grid1D:
    """Uniform grid of n points on [min, max], endpoints included."""

    min: float
    max: float
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise GridError(f"grid needs at least 2 points, got n={self.n}")
        if not (self.max > self.min):
            raise GridError(f"grid needs max > min, got [{self.min}, {self.max}]")

    @property
    def spacing(self) -> float:
        return (self.max - self.min) / (self.n - 1)

    def points(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.n)

    def trapezoid_weights(self) -> np.ndarray:
        w = np.full(self.n, self.spacing)
        w[0] *= 0.5
        w[-1] *= 0.5
        return w


@dataclass(frozen=True)
class Field2D:
    """Real samples on a rectangular grid; values[i, j] = f(q_i, p_j)."""

    qgrid: Grid1D
    pgrid: Grid1D
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.shape != (self.qgrid.n, self.pgrid.n):
            raise ShapeError(
                f"field shape {v.shape} does not match grids "
                f"({self.qgrid.n}, {self.pgrid.n})"
            )
        if not np.all(np.isfinite(v)):
            raise ValueError("field contains non-finite values")
        object.__setattr__(self, "values", v)


def make_grid(lo: float, hi: float, n: int) -> Grid1D:
    """Uniform grid with point k at lo + k * spacing."""
    return Grid1D(lo, hi, n)


def integrate(samples: np.ndarray, grid: Grid1D) -> float:
    """Trapezoid-rule integral of samples over the grid."""
    s = np.asarray(samples)
    if s.shape[-1] != grid.n:
        raise ShapeError(f"got {s.shape[-1]} samples for a grid of {grid.n} points")
    result = np.trapezoid(s, dx=grid.spacing, axis=-1)
    return float(result) if np.ndim(result) == 0 else result


def integrate_2d(field: Field2D) -> float:
    """Double trapezoid integral of a 2-D field."""
    inner = np.trapezoid(field.values, dx=field.pgrid.spacing, axis=1)
    return float(np.trapezoid(inner, dx=field.qgrid.spacing))


def interp_bilinear(field: Field2D, q, p):
    """Bilinear interpolation of a 2-D field; 0 outside the grid rectangle.

    q and p may be scalars or broadcast-compatible arrays.
    """
    q = np.asarray(q, dtype=float)
    p = np.asarray(p, dtype=float)
    qg, pg = field.qgrid, field.pgrid

    x = (q - qg.min) / qg.spacing
    y = (p - pg.min) / pg.spacing
    inside = (x >= 0) & (x <= qg.n - 1) & (y >= 0) & (y <= pg.n - 1)

    # clip so the index math stays valid; outside points are zeroed at the end
    x = np.clip(x, 0.0, qg.n - 1)
    y = np.clip(y, 0.0, pg.n - 1)
    i0 = np.clip(np.floor(x).astype(int), 0, qg.n - 2)
    j0 = np.clip(np.floor(y).astype(int), 0, pg.n - 2)
    fx = x - i0
    fy = y - j0

    v = field.values
    out = (
        v[i0, j0] * (1 - fx) * (1 - fy)
        + v[i0 + 1, j0] * fx * (1 - fy)
        + v[i0, j0 + 1] * (1 - fx) * fy
        + v[i0 + 1, j0 + 1] * fx * fy
    )
    out = np.where(inside, out, 0.0)
    return float(out) if out.ndim == 0 else out
