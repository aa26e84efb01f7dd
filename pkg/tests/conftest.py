"""Shared helpers for the test suite."""
import numpy as np
import pytest

from allspeed.grid import ConservedField, GridSpec, fill_ghosts
from allspeed.model import Primitives, SchemeConfig, conserved_from_primitives


def make_grid(nx=8, ny=6, bc="periodic", lx=1.0, ly=1.0):
    return GridSpec(nx=nx, ny=ny, x0=0.0, x1=lx, y0=0.0, y1=ly,
                    bc_x=bc, bc_y=bc)


def random_field(grid, cfg, rng, mach=0.3):
    """Smooth random positive state with velocities of order `mach`."""
    xc, yc = grid.cell_centers()
    X, Y = np.meshgrid(xc, yc, indexing="ij")
    kx = 2.0 * np.pi / (grid.x1 - grid.x0)
    ky = 2.0 * np.pi / (grid.y1 - grid.y0)
    c = rng.uniform(-1.0, 1.0, size=8)
    rho = 1.0 + 0.3 * np.sin(kx * X + c[0]) * np.cos(ky * Y + c[1])
    u = mach * np.sin(kx * X + c[2]) * np.sin(ky * Y + c[3])
    v = mach * np.cos(kx * X + c[4]) * np.sin(ky * Y + c[5])
    p = 1.0 + 0.3 * np.cos(kx * X + c[6]) * np.sin(ky * Y + c[7])
    field = ConservedField(grid)
    field.interior[...] = conserved_from_primitives(
        Primitives(rho=rho, u=u, v=v, p=p), cfg)
    fill_ghosts(field, grid)
    return field


def constant_field(grid, cfg, rho=1.3, u=0.4, v=-0.2, p=0.9):
    ones = np.ones((grid.nx, grid.ny))
    field = ConservedField(grid)
    field.interior[...] = conserved_from_primitives(
        Primitives(rho=rho * ones, u=u * ones, v=v * ones, p=p * ones), cfg)
    fill_ghosts(field, grid)
    return field


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def cfg():
    return SchemeConfig()
