"""Thermodynamics and exact fluxes of the rescaled (epsilon-scaled) Euler equations.

The pressure gradient enters the momentum equation as grad(p)/epsilon^2, so
the acoustic signal speed is c/epsilon; epsilon = 1 recovers the usual system.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonFiniteState, NonPositiveDensity, NonPositivePressure
from .grid import EN, MX, MY, RHO, ConservedField, GridSpec


@dataclass(frozen=True)
class SchemeConfig:
    """Run parameters shared by all schemes."""

    epsilon: float = 1.0
    gamma: float = 1.4
    cfl: float = 0.9
    a_factor: float = 1.05   # safety factor K in a = K * max(rho c)
    method: str = "a"
    a_global: bool = False   # debug switch: one global relaxation speed

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError("epsilon must be > 0")
        if self.gamma <= 1:
            raise ValueError("gamma must be > 1")
        if not 0 < self.cfl <= 1:
            raise ValueError("cfl must be in (0, 1]")
        if self.a_factor <= 1:
            raise ValueError("a_factor must be > 1")
        if self.method not in ("a", "b", "c"):
            raise ValueError(f"unknown method {self.method!r}")


@dataclass
class Primitives:
    """Primitive variables; entries may be scalars or arrays of equal shape."""

    rho: np.ndarray
    u: np.ndarray
    v: np.ndarray
    p: np.ndarray


def energy_from_primitives(w: Primitives, cfg: SchemeConfig) -> np.ndarray:
    """Total energy e = p/(gamma-1) + eps^2/2 * rho |v|^2."""
    return w.p / (cfg.gamma - 1.0) + 0.5 * cfg.epsilon**2 * w.rho * (w.u**2 + w.v**2)


def conserved_from_primitives(w: Primitives, cfg: SchemeConfig) -> np.ndarray:
    e = energy_from_primitives(w, cfg)
    return np.stack([np.broadcast_to(w.rho, np.shape(e)),
                     w.rho * w.u, w.rho * w.v, e])


def primitives_from_conserved(U: np.ndarray, cfg: SchemeConfig,
                              check: bool = True) -> Primitives:
    """Invert the conserved map; raises on non-positive density or pressure."""
    rho = U[RHO]
    if check and not np.all(rho > 0):
        raise NonPositiveDensity(f"min(rho) = {np.min(rho)}")
    u = U[MX] / rho
    v = U[MY] / rho
    p = (cfg.gamma - 1.0) * (U[EN] - 0.5 * cfg.epsilon**2 * rho * (u**2 + v**2))
    if check and not np.all(p > 0):
        raise NonPositivePressure(f"min(p) = {np.min(p)}")
    return Primitives(rho=rho, u=u, v=v, p=p)


def sound_speed(w: Primitives, cfg: SchemeConfig) -> np.ndarray:
    return np.sqrt(cfg.gamma * w.p / w.rho)


def exact_flux_x(w: Primitives, cfg: SchemeConfig) -> np.ndarray:
    e = energy_from_primitives(w, cfg)
    return np.stack([w.rho * w.u,
                     w.rho * w.u**2 + w.p / cfg.epsilon**2,
                     w.rho * w.u * w.v,
                     (e + w.p) * w.u])


def exact_flux_y(w: Primitives, cfg: SchemeConfig) -> np.ndarray:
    e = energy_from_primitives(w, cfg)
    return np.stack([w.rho * w.v,
                     w.rho * w.u * w.v,
                     w.rho * w.v**2 + w.p / cfg.epsilon**2,
                     (e + w.p) * w.v])


def compute_dt(field: ConservedField, grid: GridSpec, cfg: SchemeConfig) -> float:
    """CFL step: dt = cfl * min over cells of min(dx/(|u|+c/eps), dy/(|v|+c/eps))."""
    U = field.interior
    if not np.all(np.isfinite(U)):
        raise NonFiniteState("non-finite conserved state")
    w = primitives_from_conserved(U, cfg)
    c_eff = sound_speed(w, cfg) / cfg.epsilon
    sx = np.abs(w.u) + c_eff
    sy = np.abs(w.v) + c_eff
    return cfg.cfl * min(grid.dx / np.max(sx), grid.dy / np.max(sy))
