"""Multi-dimensional building blocks shared by all schemes.

Node/edge/cell divergences and the multi-d star states u*, v*, p*.

Index conventions (arrays include the ghost frame, extent X = nx+2g,
Y = ny+2g):

* node_div[a, b]     -> node (a+1/2, b+1/2), between cells a,a+1 and b,b+1
* x-edge arrays[a, b]-> edge between cells (a, b+1) and (a+1, b+1)
* y-edge arrays[a, b]-> edge between cells (a+1, b) and (a+1, b+1)
* cell arrays[a, b]  -> cell (a+1, b+1)

Interior x-edge (i+1/2, j), i in [0, nx], j in [0, ny), sits at
[i + g - 1, j + g - 1]; analogously in y.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import GridSpec, jump, jump2c, ssum, ssum2
from .model import Primitives, SchemeConfig, sound_speed


@dataclass
class EdgeStars:
    """Star states and relaxation speeds on x- and y-edges.

    du_x/dp_x (dv_y/dp_y) are the divergence-type and pressure-jump brackets
    entering p* and the relaxation intermediate densities.
    """

    ustar: np.ndarray    # (X-1, Y-2)
    pstar_x: np.ndarray  # (X-1, Y-2)
    a_x: np.ndarray      # (X-1, Y-2)
    du_x: np.ndarray     # (X-1, Y-2)
    dp_x: np.ndarray     # (X-1, Y-2)
    vstar: np.ndarray    # (X-2, Y-1)
    pstar_y: np.ndarray  # (X-2, Y-1)
    a_y: np.ndarray      # (X-2, Y-1)
    dv_y: np.ndarray     # (X-2, Y-1)
    dp_y: np.ndarray     # (X-2, Y-1)


def node_divergence(u: np.ndarray, v: np.ndarray, grid: GridSpec) -> np.ndarray:
    """Node-based divergence: transverse-averaged central differences.

    node_div(i+1/2, j+1/2) = {[u]_{i+1/2}}_{j+1/2}/(2 dx)
                           + {[v]_{j+1/2}}_{i+1/2}/(2 dy)
    """
    du = jump(u, axis=0)   # (X-1, Y)
    dv = jump(v, axis=1)   # (X, Y-1)
    return (ssum(du, axis=1) / (2.0 * grid.dx)
            + ssum(dv, axis=0) / (2.0 * grid.dy))


def edge_divergence_x(node_div: np.ndarray) -> np.ndarray:
    """Average of the two node divergences flanking each x-edge."""
    return 0.5 * (node_div[:, :-1] + node_div[:, 1:])


def edge_divergence_y(node_div: np.ndarray) -> np.ndarray:
    """Average of the two node divergences flanking each y-edge."""
    return 0.5 * (node_div[:-1, :] + node_div[1:, :])


def cell_divergence(node_div: np.ndarray) -> np.ndarray:
    """Average of the four corner node divergences of each cell."""
    return 0.25 * (node_div[:-1, :-1] + node_div[1:, :-1]
                   + node_div[:-1, 1:] + node_div[1:, 1:])


def relaxation_speed(w: Primitives, cfg: SchemeConfig
                     ) -> tuple[np.ndarray, np.ndarray]:
    """Edge-local relaxation speeds a = K * max(rho*c) over the edge stencil.

    The stencil is the 2x3 (x-edges) / 3x2 (y-edges) block of cells feeding
    the star states of that edge.  With cfg.a_global a single global maximum
    is used instead (debugging aid).
    """
    rc = w.rho * sound_speed(w, cfg)
    K = cfg.a_factor
    if cfg.a_global:
        a = K * float(np.max(rc))
        a_x = np.full((rc.shape[0] - 1, rc.shape[1] - 2), a)
        a_y = np.full((rc.shape[0] - 2, rc.shape[1] - 1), a)
        return a_x, a_y
    mx = np.maximum(rc[1:, :], rc[:-1, :])            # pair max across x-edges
    a_x = K * np.maximum(np.maximum(mx[:, 2:], mx[:, 1:-1]), mx[:, :-2])
    my = np.maximum(rc[:, 1:], rc[:, :-1])
    a_y = K * np.maximum(np.maximum(my[2:, :], my[1:-1, :]), my[:-2, :])
    return a_x, a_y


def star_states(w: Primitives, grid: GridSpec, cfg: SchemeConfig) -> EdgeStars:
    """Multi-d star states with 1-2-1 transverse weighting.

    u*_{i+1/2,j} = {{{u}_{i+1/2}}}_{j±1/2}/8 - {{[p]_{i+1/2}}}_{j±1/2}/(4*2a*eps)
    p*_{i+1/2,j} = {{{p}_{i+1/2}}}_{j±1/2}/8 - (a*eps/2) * du_x
    with du_x = {{[u]_{i+1/2}}}_{j±1/2}/4 + (dx/dy) [{v}_{i+1/2}]_{j±1}/4,
    which equals dx times the edge-based divergence; y-edges by exchanging
    the roles of (x, u, i) and (y, v, j).
    """
    eps = cfg.epsilon
    a_x, a_y = relaxation_speed(w, cfg)

    # x-edges
    su = ssum(w.u, axis=0)          # {u}_{i+1/2}
    sp = ssum(w.p, axis=0)
    sv = ssum(w.v, axis=0)
    dpx = jump(w.p, axis=0)         # [p]_{i+1/2}
    dux = jump(w.u, axis=0)
    du_x = 0.25 * ssum2(dux, axis=1) + (grid.dx / grid.dy) * 0.25 * jump2c(sv, axis=1)
    dp_x = 0.25 * ssum2(dpx, axis=1)
    ustar = ssum2(su, axis=1) / 8.0 - dp_x / (2.0 * a_x * eps)
    pstar_x = ssum2(sp, axis=1) / 8.0 - 0.5 * a_x * eps * du_x

    # y-edges
    svy = ssum(w.v, axis=1)
    spy = ssum(w.p, axis=1)
    suy = ssum(w.u, axis=1)
    dpy = jump(w.p, axis=1)
    dvy = jump(w.v, axis=1)
    dv_y = 0.25 * ssum2(dvy, axis=0) + (grid.dy / grid.dx) * 0.25 * jump2c(suy, axis=0)
    dp_y = 0.25 * ssum2(dpy, axis=0)
    vstar = ssum2(svy, axis=0) / 8.0 - dp_y / (2.0 * a_y * eps)
    pstar_y = ssum2(spy, axis=0) / 8.0 - 0.5 * a_y * eps * dv_y

    return EdgeStars(ustar=ustar, pstar_x=pstar_x, a_x=a_x, du_x=du_x, dp_x=dp_x,
                     vstar=vstar, pstar_y=pstar_y, a_y=a_y, dv_y=dv_y, dp_y=dp_y)


def cell_divergence_of_stars(stars: EdgeStars, grid: GridSpec) -> np.ndarray:
    """cell_div(i,j) = [u*]_{i±1/2,j}/dx + [v*]_{i,j±1/2}/dy, on cell layout."""
    return (jump(stars.ustar, axis=0) / grid.dx
            + jump(stars.vstar, axis=1) / grid.dy)
