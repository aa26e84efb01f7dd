"""Truly multi-dimensional all-speed finite-volume schemes for the 2D Euler
equations, with Kelvin-Helmholtz and radial Riemann benchmarks."""

from .grid import (BC_PERIODIC, BC_ZERO_GRADIENT, EN, MX, MY, RHO,
                   ConservedField, GridSpec, fill_ghosts)
from .model import (Primitives, SchemeConfig, compute_dt,
                    conserved_from_primitives, energy_from_primitives,
                    exact_flux_x, exact_flux_y, primitives_from_conserved,
                    sound_speed)
from .method_a import step_a
from .method_b import step_b
from .method_c import step_c
from .diagnostics import (RunConfig, RunRecord, decay_fraction,
                          kinetic_energy_total, radial_scatter, run)

__all__ = [
    "BC_PERIODIC", "BC_ZERO_GRADIENT", "RHO", "MX", "MY", "EN",
    "ConservedField", "GridSpec", "fill_ghosts",
    "Primitives", "SchemeConfig", "compute_dt", "conserved_from_primitives",
    "energy_from_primitives", "exact_flux_x", "exact_flux_y",
    "primitives_from_conserved", "sound_speed",
    "step_a", "step_b", "step_c",
    "RunConfig", "RunRecord", "decay_fraction", "kinetic_energy_total",
    "radial_scatter", "run",
]
