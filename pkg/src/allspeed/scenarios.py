"""Initial data generators: Kelvin-Helmholtz shear layer, radial Riemann
problem, and planar 1D Sod data for validation."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .grid import (BC_PERIODIC, BC_ZERO_GRADIENT, ConservedField, GridSpec,
                   fill_ghosts)
from .model import Primitives, SchemeConfig, conserved_from_primitives


@dataclass(frozen=True)
class KHParams:
    """Shear-layer setup: Mach parameter, density contrast, perturbation."""

    mach: float = 1e-2
    r: float = 1e-3
    delta: float = 0.1
    w: float = 1.0 / 16.0
    gamma: float = 1.4

    def __post_init__(self):
        if self.mach <= 0 or self.w <= 0:
            raise ValueError("mach and w must be > 0")


@dataclass(frozen=True)
class RadialRiemannParams:
    """Disc radius and inner/outer (rho, p) states."""

    r0: float = 0.3
    rho_in: float = 1.0
    p_in: float = 1.0
    rho_out: float = 0.125
    p_out: float = 0.1

    def __post_init__(self):
        if self.r0 <= 0:
            raise ValueError("r0 must be > 0")
        if min(self.rho_in, self.p_in, self.rho_out, self.p_out) <= 0:
            raise ValueError("states must be positive")


def profile_H(y, w: float = 1.0 / 16.0):
    """C^1 shear profile: -1 in the middle band, +1 outside, sine blends."""
    y = np.asarray(y, dtype=np.float64)
    lo, hi = -0.25 - w / 2, -0.25 + w / 2
    lo2, hi2 = 0.25 - w / 2, 0.25 + w / 2
    out = np.ones_like(y)
    band1 = (y >= lo) & (y < hi)
    mid = (y >= hi) & (y < lo2)
    band2 = (y >= lo2) & (y < hi2)
    out[band1] = -np.sin(np.pi * (y[band1] + 0.25) / w)
    out[mid] = -1.0
    out[band2] = np.sin(np.pi * (y[band2] - 0.25) / w)
    return out


def kh_grid(nx: int, ny: int, ghost: int = 2) -> GridSpec:
    return GridSpec(nx=nx, ny=ny, x0=0.0, x1=2.0, y0=-0.5, y1=0.5,
                    ghost=ghost, bc_x=BC_PERIODIC, bc_y=BC_PERIODIC)


def init_kh(grid: GridSpec, params: KHParams, cfg: SchemeConfig
            ) -> tuple[ConservedField, float]:
    """Kelvin-Helmholtz data on [0,2] x [-1/2,1/2]; returns (field, t_end)."""
    if not (np.isclose(grid.x0, 0.0) and np.isclose(grid.x1, 2.0)
            and np.isclose(grid.y0, -0.5) and np.isclose(grid.y1, 0.5)):
        raise ConfigError("KH setup requires the domain [0,2] x [-1/2,1/2]")
    if grid.bc_x != BC_PERIODIC or grid.bc_y != BC_PERIODIC:
        raise ConfigError("KH setup requires periodic boundaries")
    xc, yc = grid.cell_centers()
    x = xc[:, None]
    H = profile_H(yc, params.w)[None, :]
    M = params.mach
    w = Primitives(rho=params.gamma + params.r * H + 0.0 * x,
                   u=M * H + 0.0 * x,
                   v=params.delta * M * np.sin(2.0 * np.pi * x) + 0.0 * H,
                   p=np.ones((grid.nx, grid.ny)))
    field = ConservedField(grid)
    field.interior[...] = conserved_from_primitives(w, cfg)
    fill_ghosts(field, grid)
    return field, 0.8 / M


def radial_grid(n: int = 500, extent: float = 1.0, ghost: int = 2) -> GridSpec:
    return GridSpec(nx=n, ny=n, x0=0.0, x1=extent, y0=0.0, y1=extent,
                    ghost=ghost, bc_x=BC_ZERO_GRADIENT, bc_y=BC_ZERO_GRADIENT)


def init_radial_riemann(grid: GridSpec, params: RadialRiemannParams,
                        cfg: SchemeConfig) -> ConservedField:
    """Sharp disc of (rho_in, p_in) in a (rho_out, p_out) ambient, zero velocity."""
    xc, yc = grid.cell_centers()
    cx = 0.5 * (grid.x0 + grid.x1)
    cy = 0.5 * (grid.y0 + grid.y1)
    r = np.hypot(xc[:, None] - cx, yc[None, :] - cy)
    inside = r < params.r0
    w = Primitives(rho=np.where(inside, params.rho_in, params.rho_out),
                   u=np.zeros_like(r), v=np.zeros_like(r),
                   p=np.where(inside, params.p_in, params.p_out))
    field = ConservedField(grid)
    field.interior[...] = conserved_from_primitives(w, cfg)
    fill_ghosts(field, grid)
    return field


def init_sod_1d(grid: GridSpec, cfg: SchemeConfig) -> ConservedField:
    """Planar Sod data, jump at mid-domain in x, uniform in y."""
    xc, yc = grid.cell_centers()
    xmid = 0.5 * (grid.x0 + grid.x1)
    left = xc[:, None] < xmid
    ones = np.ones((grid.nx, grid.ny))
    w = Primitives(rho=np.where(left, 1.0, 0.125) * ones,
                   u=np.zeros_like(ones), v=np.zeros_like(ones),
                   p=np.where(left, 1.0, 0.1) * ones)
    field = ConservedField(grid)
    field.interior[...] = conserved_from_primitives(w, cfg)
    fill_ghosts(field, grid)
    return field
