"""Node/edge/cell divergences and the multi-dimensional star states."""
import numpy as np
import pytest

from allspeed.grid import fill_ghost_array, jump, ssum
from allspeed.model import Primitives, SchemeConfig, primitives_from_conserved
from allspeed.multid import (cell_divergence, cell_divergence_of_stars,
                             edge_divergence_x, edge_divergence_y,
                             node_divergence, relaxation_speed, star_states)

from conftest import constant_field, make_grid, random_field


def _prims(field, cfg):
    return primitives_from_conserved(field.data, cfg, check=False)


def test_node_divergence_exact_for_linear_fields(cfg):
    """(u, v) = (alpha*x + c1*y, beta*y + c2*x) has divergence alpha + beta."""
    grid = make_grid(8, 6, bc="zero-gradient", lx=2.0, ly=1.5)
    g = grid.ghost
    x = grid.x0 + (np.arange(-g, grid.nx + g) + 0.5) * grid.dx
    y = grid.y0 + (np.arange(-g, grid.ny + g) + 0.5) * grid.dy
    X, Y = np.meshgrid(x, y, indexing="ij")
    u = 0.7 * X + 0.2 * Y
    v = -0.3 * Y + 0.5 * X
    node = node_divergence(u, v, grid)
    assert np.allclose(node, 0.4)
    assert np.allclose(edge_divergence_x(node), 0.4)
    assert np.allclose(cell_divergence(node), 0.4)


def test_divergence_layers_are_consistent(cfg, rng):
    """Cell divergence = mean of its 4 nodes = mean of its 4 edge values."""
    grid = make_grid(9, 7)
    u = rng.normal(size=grid.shape)
    v = rng.normal(size=grid.shape)
    node = node_divergence(u, v, grid)
    ex = edge_divergence_x(node)
    ey = edge_divergence_y(node)
    cell = cell_divergence(node)
    assert np.allclose(cell, 0.5 * (ex[:-1, :] + ex[1:, :]))
    assert np.allclose(cell, 0.5 * (ey[:, :-1] + ey[:, 1:]))


def test_star_states_constant(cfg):
    """At a constant state: u* = u, p* = p, and the divergence brackets vanish."""
    grid = make_grid()
    field = constant_field(grid, cfg, rho=1.3, u=0.4, v=-0.2, p=0.9)
    stars = star_states(_prims(field, cfg), grid, cfg)
    assert np.allclose(stars.ustar, 0.4)
    assert np.allclose(stars.vstar, -0.2)
    assert np.allclose(stars.pstar_x, 0.9)
    assert np.allclose(stars.pstar_y, 0.9)
    assert np.allclose(stars.du_x, 0.0)
    assert np.allclose(stars.dv_y, 0.0)


def test_star_divergence_matches_edge_divergence(cfg, rng):
    """du_x equals dx times the edge divergence of the velocity field."""
    grid = make_grid(10, 8)
    field = random_field(grid, cfg, rng)
    w = _prims(field, cfg)
    stars = star_states(w, grid, cfg)
    node = node_divergence(w.u, w.v, grid)
    assert np.allclose(stars.du_x, grid.dx * edge_divergence_x(node))
    assert np.allclose(stars.dv_y, grid.dy * edge_divergence_y(node))


def test_divergence_free_pressure_cancellation():
    """For (u, v) = (beta*x, -beta*y) with uniform rho, p the velocity
    bracket in p* vanishes identically: p* stays central."""
    grid = make_grid(8, 8, bc="zero-gradient")
    cfg = SchemeConfig()
    g = grid.ghost
    x = grid.x0 + (np.arange(-g, grid.nx + g) + 0.5) * grid.dx
    y = grid.y0 + (np.arange(-g, grid.ny + g) + 0.5) * grid.dy
    X, Y = np.meshgrid(x, y, indexing="ij")
    beta = 0.6
    shape = X.shape
    w = Primitives(rho=np.ones(shape), u=beta * X, v=-beta * Y,
                   p=np.full(shape, 2.0))
    stars = star_states(w, grid, cfg)
    assert np.allclose(stars.du_x, 0.0, atol=1e-13)
    assert np.allclose(stars.dv_y, 0.0, atol=1e-13)
    assert np.allclose(stars.pstar_x, 2.0)
    assert np.allclose(stars.pstar_y, 2.0)


def test_relaxation_speed_bounds(cfg, rng):
    """a is at least K*rho*c of both adjacent cells and at most K*max over all."""
    grid = make_grid(10, 8)
    field = random_field(grid, cfg, rng)
    w = _prims(field, cfg)
    rc = w.rho * np.sqrt(cfg.gamma * w.p / w.rho)
    a_x, a_y = relaxation_speed(w, cfg)
    K = cfg.a_factor
    pair = K * np.maximum(rc[1:, 1:-1], rc[:-1, 1:-1])
    assert np.all(a_x >= pair - 1e-14)
    assert np.all(a_x <= K * np.max(rc) + 1e-14)
    assert np.all(a_y > 0)


def test_relaxation_speed_global_switch(cfg, rng):
    grid = make_grid()
    field = random_field(grid, cfg, rng)
    w = _prims(field, cfg)
    cfg_g = SchemeConfig(a_global=True)
    a_x, a_y = relaxation_speed(w, cfg_g)
    rc = w.rho * np.sqrt(cfg.gamma * w.p / w.rho)
    assert np.allclose(a_x, cfg.a_factor * np.max(rc))
    assert np.allclose(a_y, cfg.a_factor * np.max(rc))


def test_star_states_1d_collapse(cfg):
    """y-independent data: u*, p* reduce to the two-cell 1D star states."""
    grid = make_grid(12, 6)
    g = grid.ghost
    x = np.arange(-g, grid.nx + g) + 0.5
    rho = 1.0 + 0.3 * np.sin(2 * np.pi * x / grid.nx)
    u = 0.2 * np.cos(2 * np.pi * x / grid.nx)
    p = 1.0 + 0.1 * np.sin(4 * np.pi * x / grid.nx)
    shape = grid.shape
    w = Primitives(rho=np.repeat(rho[:, None], shape[1], 1),
                   u=np.repeat(u[:, None], shape[1], 1),
                   v=np.zeros(shape),
                   p=np.repeat(p[:, None], shape[1], 1))
    stars = star_states(w, grid, cfg)
    rc = rho * np.sqrt(cfg.gamma * p / rho)
    a = cfg.a_factor * np.maximum(rc[1:], rc[:-1])
    us_1d = 0.5 * (u[1:] + u[:-1]) - (p[1:] - p[:-1]) / (2.0 * a * cfg.epsilon)
    ps_1d = 0.5 * (p[1:] + p[:-1]) - 0.5 * a * cfg.epsilon * (u[1:] - u[:-1])
    assert np.allclose(stars.ustar, us_1d[:, None])
    assert np.allclose(stars.pstar_x, ps_1d[:, None])
    # transverse star velocity vanishes and nothing varies along y, so the
    # y-fluxes are constant along each column (their y-differences vanish)
    assert np.allclose(stars.vstar, 0.0)
    assert np.allclose(jump(stars.pstar_y, axis=1), 0.0)


def test_cell_divergence_of_stars_constant(cfg):
    grid = make_grid()
    field = constant_field(grid, cfg)
    stars = star_states(_prims(field, cfg), grid, cfg)
    assert np.allclose(cell_divergence_of_stars(stars, grid), 0.0)
