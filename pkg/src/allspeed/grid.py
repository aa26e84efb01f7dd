"""Cartesian grid geometry, ghost-cell handling, and bracket stencil primitives.

Arrays are stored with the x index on axis -2 and the y index on axis -1;
conserved fields carry a leading component axis.  Interior cell (i, j) with
i in [0, nx), j in [0, ny) lives at array position (i + ghost, j + ghost).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

BC_PERIODIC = "periodic"
BC_ZERO_GRADIENT = "zero-gradient"

# component indices of a conserved field
RHO, MX, MY, EN = 0, 1, 2, 3


@dataclass(frozen=True)
class GridSpec:
    """Uniform Cartesian grid with a ghost frame and per-direction boundary rule."""

    nx: int
    ny: int
    x0: float = 0.0
    x1: float = 1.0
    y0: float = 0.0
    y1: float = 1.0
    ghost: int = 2
    bc_x: str = BC_PERIODIC
    bc_y: str = BC_PERIODIC

    def __post_init__(self):
        if self.nx < 4 or self.ny < 4:
            raise ValueError(f"need nx, ny >= 4, got {self.nx}x{self.ny}")
        if self.ghost < 2:
            raise ValueError("ghost layer must be at least 2 cells wide")
        if not (self.x1 > self.x0 and self.y1 > self.y0):
            raise ValueError("domain bounds must satisfy x1 > x0, y1 > y0")
        for bc in (self.bc_x, self.bc_y):
            if bc not in (BC_PERIODIC, BC_ZERO_GRADIENT):
                raise ValueError(f"unknown boundary rule {bc!r}")

    @property
    def dx(self) -> float:
        return (self.x1 - self.x0) / self.nx

    @property
    def dy(self) -> float:
        return (self.y1 - self.y0) / self.ny

    @property
    def shape(self) -> tuple[int, int]:
        """Extent including ghosts."""
        return (self.nx + 2 * self.ghost, self.ny + 2 * self.ghost)

    def cell_centers(self) -> tuple[np.ndarray, np.ndarray]:
        """1D arrays of interior cell-center coordinates."""
        xc = self.x0 + (np.arange(self.nx) + 0.5) * self.dx
        yc = self.y0 + (np.arange(self.ny) + 0.5) * self.dy
        return xc, yc


class ConservedField:
    """Cell-centered conserved variables (rho, rho*u, rho*v, e) with ghost frame."""

    def __init__(self, grid: GridSpec, data: np.ndarray | None = None):
        self.grid = grid
        if data is None:
            data = np.zeros((4,) + grid.shape)
        else:
            if data.shape != (4,) + grid.shape:
                raise ValueError("data shape does not match grid")
            data = np.asarray(data, dtype=np.float64)
        self.data = data

    @property
    def interior(self) -> np.ndarray:
        g = self.grid.ghost
        return self.data[:, g:-g, g:-g]

    def copy(self) -> "ConservedField":
        return ConservedField(self.grid, self.data.copy())


def fill_ghost_array(a: np.ndarray, grid: GridSpec) -> np.ndarray:
    """Fill the ghost frame of `a` (spatial axes last) in place; returns `a`.

    x is filled first, then y, so corner ghosts are consistent with both rules.
    """
    g = grid.ghost
    nx, ny = grid.nx, grid.ny
    if grid.bc_x == BC_PERIODIC:
        a[..., :g, :] = a[..., nx:nx + g, :]
        a[..., nx + g:, :] = a[..., g:2 * g, :]
    else:
        a[..., :g, :] = a[..., g:g + 1, :]
        a[..., nx + g:, :] = a[..., nx + g - 1:nx + g, :]
    if grid.bc_y == BC_PERIODIC:
        a[..., :g] = a[..., ny:ny + g]
        a[..., ny + g:] = a[..., g:2 * g]
    else:
        a[..., :g] = a[..., g:g + 1]
        a[..., ny + g:] = a[..., ny + g - 1:ny + g]
    return a


def fill_ghosts(field: ConservedField, grid: GridSpec | None = None) -> ConservedField:
    """Fill all ghost cells of a conserved field per the grid's boundary rules."""
    fill_ghost_array(field.data, grid or field.grid)
    return field


def _sl(a: np.ndarray, axis: int, lo, hi) -> np.ndarray:
    idx = [slice(None)] * a.ndim
    idx[axis] = slice(lo, hi)
    return a[tuple(idx)]


def jump(a: np.ndarray, axis: int = -1) -> np.ndarray:
    """Interface-centered difference [a]_{i+1/2} = a_{i+1} - a_i."""
    return _sl(a, axis, 1, None) - _sl(a, axis, 0, -1)


def ssum(a: np.ndarray, axis: int = -1) -> np.ndarray:
    """Interface-centered sum {a}_{i+1/2} = a_{i+1} + a_i (no hidden factor)."""
    return _sl(a, axis, 1, None) + _sl(a, axis, 0, -1)


def jump2c(a: np.ndarray, axis: int = -1) -> np.ndarray:
    """Cell-centered wide difference [a]_{i±1} = a_{i+1} - a_{i-1}."""
    return _sl(a, axis, 2, None) - _sl(a, axis, 0, -2)


def ssum2(a: np.ndarray, axis: int = -1) -> np.ndarray:
    """Cell-centered 1-2-1 sum {{a}}_{i±1/2} = a_{i+1} + 2 a_i + a_{i-1}."""
    return _sl(a, axis, 2, None) + 2.0 * _sl(a, axis, 1, -1) + _sl(a, axis, 0, -2)


def jump2(a: np.ndarray, axis: int = -1) -> np.ndarray:
    """Cell-centered second difference [[a]]_{i±1/2} = a_{i+1} - 2 a_i + a_{i-1}."""
    return _sl(a, axis, 2, None) - 2.0 * _sl(a, axis, 1, -1) + _sl(a, axis, 0, -2)
