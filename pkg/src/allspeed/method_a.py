"""Method A: multi-dimensional all-speed Lagrange-Projection scheme.

Acoustic predictor Q, compression denominator L = 1 + dt*div(u*, v*), and the
upwinded advective flux

  fhat_x = (0, p*/eps^2, 0, p* u*) + (u*/2){Q/L} - (|u*|/2)[Q/L].
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveL
from .grid import EN, MX, MY, ConservedField, GridSpec, fill_ghosts, jump
from .model import SchemeConfig, primitives_from_conserved
from .multid import EdgeStars, cell_divergence_of_stars, star_states


@dataclass
class AcousticPredictor:
    """Conserved state evolved by the acoustic operator, and the denominator L."""

    Q: np.ndarray  # (4, X-2, Y-2), cell layout (one-cell margin)
    L: np.ndarray  # (X-2, Y-2)


def acoustic_predictor(field: ConservedField, stars: EdgeStars, grid: GridSpec,
                       cfg: SchemeConfig, dt: float) -> AcousticPredictor:
    """Acoustic half of the splitting: pressure-gradient and p*u* work terms."""
    U = field.data
    dx, dy = grid.dx, grid.dy
    eps2 = cfg.epsilon**2
    Uc = U[:, 1:-1, 1:-1]
    Q = np.empty_like(Uc)
    Q[0] = Uc[0]
    Q[MX] = Uc[MX] - (dt / (dx * eps2)) * jump(stars.pstar_x, axis=0)
    Q[MY] = Uc[MY] - (dt / (dy * eps2)) * jump(stars.pstar_y, axis=1)
    Q[EN] = (Uc[EN]
             - (dt / dx) * jump(stars.ustar * stars.pstar_x, axis=0)
             - (dt / dy) * jump(stars.vstar * stars.pstar_y, axis=1))
    L = 1.0 + dt * cell_divergence_of_stars(stars, grid)
    if not np.all(L > 0):
        raise NonPositiveL(f"min(L) = {np.min(L)}")
    return AcousticPredictor(Q=Q, L=L)


def _upwind_flux(s: np.ndarray, qlo: np.ndarray, qhi: np.ndarray) -> np.ndarray:
    """(s/2){q} - (|s|/2)[q] across an edge: pure upwinding in s."""
    return 0.5 * s * (qlo + qhi) - 0.5 * np.abs(s) * (qhi - qlo)


def fluxes_a(field: ConservedField, predictor: AcousticPredictor,
             stars: EdgeStars, grid: GridSpec, cfg: SchemeConfig
             ) -> tuple[np.ndarray, np.ndarray]:
    """Numerical fluxes on all interior x- and y-edges."""
    g = grid.ghost
    nx, ny = grid.nx, grid.ny
    eps2 = cfg.epsilon**2
    q = predictor.Q / predictor.L

    # x-edges (i+1/2, j): i in [0, nx], j in [0, ny)
    us = stars.ustar[g - 1:g + nx, g - 1:g - 1 + ny]
    ps = stars.pstar_x[g - 1:g + nx, g - 1:g - 1 + ny]
    qL = q[:, g - 2:g - 1 + nx, g - 1:g - 1 + ny]
    qR = q[:, g - 1:g + nx, g - 1:g - 1 + ny]
    fx = _upwind_flux(us, qL, qR)
    fx[MX] += ps / eps2
    fx[EN] += ps * us

    # y-edges (i, j+1/2): i in [0, nx), j in [0, ny]
    vs = stars.vstar[g - 1:g - 1 + nx, g - 1:g + ny]
    psy = stars.pstar_y[g - 1:g - 1 + nx, g - 1:g + ny]
    qB = q[:, g - 1:g - 1 + nx, g - 2:g - 1 + ny]
    qT = q[:, g - 1:g - 1 + nx, g - 1:g + ny]
    fy = _upwind_flux(vs, qB, qT)
    fy[MY] += psy / eps2
    fy[EN] += psy * vs
    return fx, fy


def step_a(field: ConservedField, grid: GridSpec, cfg: SchemeConfig,
           dt: float) -> ConservedField:
    """One conservative step of Method A; refills ghosts, checks positivity."""
    fill_ghosts(field, grid)
    w = primitives_from_conserved(field.data, cfg)
    stars = star_states(w, grid, cfg)
    predictor = acoustic_predictor(field, stars, grid, cfg, dt)
    fx, fy = fluxes_a(field, predictor, stars, grid, cfg)
    out = field.copy()
    out.interior[...] = (field.interior
                         - (dt / grid.dx) * jump(fx, axis=1)
                         - (dt / grid.dy) * jump(fy, axis=2))
    primitives_from_conserved(out.interior, cfg)  # positivity check
    return out
