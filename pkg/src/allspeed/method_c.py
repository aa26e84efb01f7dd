"""Method C: sequential-explicit central scheme.

The acoustic sub-system is integrated sequentially (momentum first, then
density and energy from the updated momentum), which stabilizes central
differences without acoustic upwinding.  Advection is upwinded with |ubar|/2
and, as in Lagrange-Projection methods, the advective part of each flux is
divided by an edge-divergence denominator 1 + dt*div_edge; the pressure and
pressure-work parts stay outside the division (dividing them as well
over-damps the grid-scale transverse-velocity mode once the acoustic CFL
exceeds sqrt(gamma/2) ~ 0.84, turning the damping into an instability).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DenominatorNonPositive
from .grid import (EN, MX, MY, RHO, ConservedField, GridSpec, fill_ghost_array,
                   fill_ghosts, jump, ssum, ssum2)
from .model import SchemeConfig, primitives_from_conserved
from .multid import edge_divergence_x, edge_divergence_y, node_divergence


@dataclass
class SequentialPhaseState:
    """Momentum after phase 1 and the velocity it implies (momentum / rho^n)."""

    mx: np.ndarray      # (X, Y), ghosts filled
    my: np.ndarray
    u_half: np.ndarray
    v_half: np.ndarray


def sequential_ode_step(a: float, b: float, f: Callable, g: Callable,
                        dt: float) -> tuple[float, float]:
    """One sequential-explicit step of da/dt = f(b), db/dt = g(a)."""
    a_new = a + dt * f(b)
    b_new = b + dt * g(a_new)
    return a_new, b_new


def _central_x(c: np.ndarray) -> np.ndarray:
    """1-2-1 transverse average of the x-edge sum, divided by 8."""
    return ssum2(ssum(c, axis=0), axis=1) / 8.0


def _central_y(c: np.ndarray) -> np.ndarray:
    return ssum2(ssum(c, axis=1), axis=0) / 8.0


def _edge_denominators(u, v, grid, dt):
    node = node_divergence(u, v, grid)
    g, nx, ny = grid.ghost, grid.nx, grid.ny
    den_x = 1.0 + dt * edge_divergence_x(node)[g - 1:g + nx, g - 1:g - 1 + ny]
    den_y = 1.0 + dt * edge_divergence_y(node)[g - 1:g - 1 + nx, g - 1:g + ny]
    if not (np.all(den_x > 0) and np.all(den_y > 0)):
        raise DenominatorNonPositive(
            f"min denominator = {min(np.min(den_x), np.min(den_y))}")
    return den_x, den_y


def _flux_pair_x(central_cell, advected_cell, ubar_edge, den_x, grid,
                 pressure_cell=None):
    """(central - (|ubar|/2)[q]) / denominator, plus an undivided central
    pressure contribution, on interior x-edges."""
    g, nx, ny = grid.ghost, grid.nx, grid.ny
    sl = np.s_[g - 1:g + nx, g - 1:g - 1 + ny]
    cen = _central_x(central_cell)[sl]
    dq = jump(advected_cell, axis=0)[g - 1:g + nx, g:g + ny]
    f = (cen - 0.5 * np.abs(ubar_edge) * dq) / den_x
    if pressure_cell is not None:
        f = f + _central_x(pressure_cell)[sl]
    return f


def _flux_pair_y(central_cell, advected_cell, vbar_edge, den_y, grid,
                 pressure_cell=None):
    g, nx, ny = grid.ghost, grid.nx, grid.ny
    sl = np.s_[g - 1:g - 1 + nx, g - 1:g + ny]
    cen = _central_y(central_cell)[sl]
    dq = jump(advected_cell, axis=1)[g:g + nx, g - 1:g + ny]
    f = (cen - 0.5 * np.abs(vbar_edge) * dq) / den_y
    if pressure_cell is not None:
        f = f + _central_y(pressure_cell)[sl]
    return f


def _edge_speed_x(u, grid):
    g, nx, ny = grid.ghost, grid.nx, grid.ny
    return 0.5 * ssum(u, axis=0)[g - 1:g + nx, g:g + ny]


def _edge_speed_y(v, grid):
    g, nx, ny = grid.ghost, grid.nx, grid.ny
    return 0.5 * ssum(v, axis=1)[g:g + nx, g - 1:g + ny]


def momentum_phase(field: ConservedField, grid: GridSpec, cfg: SchemeConfig,
                   dt: float) -> SequentialPhaseState:
    """Phase 1: update both momentum components from time-n data."""
    U = field.data
    w = primitives_from_conserved(U, cfg)
    eps2 = cfg.epsilon**2
    den_x, den_y = _edge_denominators(w.u, w.v, grid, dt)
    ubar = _edge_speed_x(w.u, grid)
    vbar = _edge_speed_y(w.v, grid)

    fx_mu = _flux_pair_x(w.rho * w.u**2, U[MX], ubar, den_x, grid,
                         pressure_cell=w.p / eps2)
    fx_mv = _flux_pair_x(w.rho * w.u * w.v, U[MY], ubar, den_x, grid)
    fy_mu = _flux_pair_y(w.rho * w.v * w.u, U[MX], vbar, den_y, grid)
    fy_mv = _flux_pair_y(w.rho * w.v**2, U[MY], vbar, den_y, grid,
                         pressure_cell=w.p / eps2)

    g = grid.ghost
    mx = U[MX].copy()
    my = U[MY].copy()
    mx[g:-g, g:-g] -= (dt / grid.dx) * jump(fx_mu, axis=0) \
        + (dt / grid.dy) * jump(fy_mu, axis=1)
    my[g:-g, g:-g] -= (dt / grid.dx) * jump(fx_mv, axis=0) \
        + (dt / grid.dy) * jump(fy_mv, axis=1)
    m = np.stack([mx, my])
    fill_ghost_array(m, grid)
    return SequentialPhaseState(mx=m[0], my=m[1],
                                u_half=m[0] / U[RHO], v_half=m[1] / U[RHO])


def scalar_phase(field: ConservedField, phase: SequentialPhaseState,
                 grid: GridSpec, cfg: SchemeConfig, dt: float) -> ConservedField:
    """Phase 2: update rho and e from the phase-1 momentum and velocity."""
    U = field.data
    w = primitives_from_conserved(U, cfg)
    den_x, den_y = _edge_denominators(phase.u_half, phase.v_half, grid, dt)
    ubar = _edge_speed_x(phase.u_half, grid)
    vbar = _edge_speed_y(phase.v_half, grid)
    fx_rho = _flux_pair_x(phase.mx, U[RHO], ubar, den_x, grid)
    fx_e = _flux_pair_x(U[EN] * phase.u_half, U[EN], ubar, den_x, grid,
                        pressure_cell=w.p * phase.u_half)
    fy_rho = _flux_pair_y(phase.my, U[RHO], vbar, den_y, grid)
    fy_e = _flux_pair_y(U[EN] * phase.v_half, U[EN], vbar, den_y, grid,
                        pressure_cell=w.p * phase.v_half)

    out = field.copy()
    out.data[MX] = phase.mx
    out.data[MY] = phase.my
    g = grid.ghost
    out.data[RHO, g:-g, g:-g] -= (dt / grid.dx) * jump(fx_rho, axis=0) \
        + (dt / grid.dy) * jump(fy_rho, axis=1)
    out.data[EN, g:-g, g:-g] -= (dt / grid.dx) * jump(fx_e, axis=0) \
        + (dt / grid.dy) * jump(fy_e, axis=1)
    primitives_from_conserved(out.interior, cfg)
    return out


def step_c(field: ConservedField, grid: GridSpec, cfg: SchemeConfig,
           dt: float) -> ConservedField:
    """One step of Method C: momentum phase, then the scalar phase."""
    fill_ghosts(field, grid)
    phase = momentum_phase(field, grid, cfg, dt)
    return scalar_phase(field, phase, grid, cfg, dt)
