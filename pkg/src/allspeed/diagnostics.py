"""Diagnostics, CSV writers, and the time-stepping driver."""
from __future__ import annotations

import os
from dataclasses import dataclass, field as dataclass_field

import numpy as np

from .errors import (ConfigError, DenominatorNonPositive,
                     NonPositiveIntermediateDensity, NonPositiveL,
                     NumericalFailure)
from .grid import ConservedField, GridSpec
from .method_a import step_a
from .method_b import step_b
from .method_c import step_c
from .model import SchemeConfig, compute_dt, primitives_from_conserved
from .scenarios import (KHParams, RadialRiemannParams, init_kh,
                        init_radial_riemann, init_sod_1d, kh_grid, radial_grid)

STEPPERS = {"a": step_a, "b": step_b, "c": step_c}

# transient compression dominance: retried with a halved step before aborting
_RETRYABLE = (NonPositiveL, NonPositiveIntermediateDensity,
              DenominatorNonPositive)


@dataclass
class RunRecord:
    """Per-step diagnostic time series plus dump metadata."""

    times: list = dataclass_field(default_factory=list)
    kinetic_energy: list = dataclass_field(default_factory=list)
    totals: list = dataclass_field(default_factory=list)
    dumps: list = dataclass_field(default_factory=list)

    def append(self, t: float, e_kin: float, tot: np.ndarray):
        self.times.append(t)
        self.kinetic_energy.append(e_kin)
        self.totals.append(tot)


def kinetic_energy_total(field: ConservedField, grid: GridSpec,
                         cfg: SchemeConfig) -> float:
    """Sum of the kinetic part of e: eps^2/2 * rho |v|^2 * dx*dy."""
    w = primitives_from_conserved(field.interior, cfg, check=False)
    ke = 0.5 * cfg.epsilon**2 * w.rho * (w.u**2 + w.v**2)
    return float(np.sum(ke)) * grid.dx * grid.dy


def conserved_totals(field: ConservedField, grid: GridSpec) -> np.ndarray:
    return np.sum(field.interior, axis=(1, 2)) * grid.dx * grid.dy


def decay_fraction(record: RunRecord) -> float:
    """Percentage loss of kinetic energy between the first and last sample."""
    if not record.times:
        raise ValueError("empty run record")
    return 100.0 * (1.0 - record.kinetic_energy[-1] / record.kinetic_energy[0])


def radial_scatter(field: ConservedField, grid: GridSpec, cfg: SchemeConfig,
                   center: tuple[float, float]) -> np.ndarray:
    """One (r, rho, u_r, p) row per interior cell."""
    w = primitives_from_conserved(field.interior, cfg, check=False)
    xc, yc = grid.cell_centers()
    dx_ = xc[:, None] - center[0]
    dy_ = yc[None, :] - center[1]
    r = np.hypot(dx_, dy_)
    with np.errstate(invalid="ignore", divide="ignore"):
        ur = np.where(r > 0, (w.u * dx_ + w.v * dy_) / np.where(r > 0, r, 1.0),
                      0.0)
    return np.column_stack([r.ravel(), w.rho.ravel(), ur.ravel(), w.p.ravel()])


@dataclass(frozen=True)
class RunConfig:
    """Full description of a solver run (scenario x method x grid)."""

    method: str = "a"
    scenario: str = "kh"
    nx: int = 128
    ny: int = 64
    mach: float = 1e-2
    epsilon: float = 1.0
    cfl: float = 0.9
    gamma: float = 1.4
    a_factor: float = 1.05
    t_end: float | None = None   # None: scenario default
    out_dir: str | None = None
    n_dumps: int = 10
    kh_r: float = 1e-3
    kh_delta: float = 0.1
    kh_w: float = 1.0 / 16.0
    radial_r0: float = 0.3
    radial_extent: float = 1.0

    def scheme_config(self) -> SchemeConfig:
        try:
            return SchemeConfig(epsilon=self.epsilon, gamma=self.gamma,
                                cfl=self.cfl, a_factor=self.a_factor,
                                method=self.method)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc


def _setup(config: RunConfig):
    cfg = config.scheme_config()
    if config.scenario == "kh":
        grid = kh_grid(config.nx, config.ny)
        params = KHParams(mach=config.mach, r=config.kh_r,
                          delta=config.kh_delta, w=config.kh_w,
                          gamma=config.gamma)
        field, t_default = init_kh(grid, params, cfg)
    elif config.scenario == "radial":
        if config.nx != config.ny:
            raise ConfigError("radial scenario needs a square grid")
        grid = radial_grid(config.nx, extent=config.radial_extent)
        params = RadialRiemannParams(r0=config.radial_r0)
        field = init_radial_riemann(grid, params, cfg)
        t_default = 0.1
    elif config.scenario == "sod1d":
        grid = GridSpec(nx=config.nx, ny=config.ny, x0=0.0, x1=1.0,
                        y0=0.0, y1=config.ny / config.nx,
                        bc_x="zero-gradient", bc_y="periodic")
        field = init_sod_1d(grid, cfg)
        t_default = 0.2
    else:
        raise ConfigError(f"unknown scenario {config.scenario!r}")
    t_end = config.t_end if config.t_end is not None else t_default
    if t_end < 0:
        raise ConfigError("t_end must be >= 0")
    return cfg, grid, field, t_end


def _write_fields(path, field, grid, cfg, t):
    xc, yc = grid.cell_centers()
    X, Y = np.meshgrid(xc, yc, indexing="ij")
    U = field.interior
    rows = np.column_stack([X.ravel(), Y.ravel(), U[0].ravel(), U[1].ravel(),
                            U[2].ravel(), U[3].ravel()])
    header = (f"t = {t}\nnx = {grid.nx}, ny = {grid.ny}, "
              f"epsilon = {cfg.epsilon}, gamma = {cfg.gamma}, "
              f"method = {cfg.method}\ncolumns: x,y,rho,rhou,rhov,e")
    np.savetxt(path, rows, delimiter=",", header=header)


def _write_energy(path, record, cfg):
    rows = np.column_stack([record.times, record.kinetic_energy,
                            np.array(record.totals)])
    header = (f"epsilon = {cfg.epsilon}, gamma = {cfg.gamma}, "
              f"method = {cfg.method}\n"
              "columns: t,e_kin,mass_total,momx_total,momy_total,e_total")
    np.savetxt(path, rows, delimiter=",", header=header)


def _write_scatter(path, rows, t):
    header = f"t = {t}\ncolumns: r,rho,ur,p"
    np.savetxt(path, rows, delimiter=",", header=header)


def run(config: RunConfig) -> RunRecord:
    """Advance the chosen scenario to t_end, recording diagnostics each step.

    The last step is clamped to land exactly on t_end.  Dumps (if out_dir is
    set) are written at n_dumps evenly spaced times, plus the initial state.
    """
    cfg, grid, field, t_end = _setup(config)
    step = STEPPERS[cfg.method]
    record = RunRecord()
    out = config.out_dir
    if out:
        os.makedirs(out, exist_ok=True)

    center = (0.5 * (grid.x0 + grid.x1), 0.5 * (grid.y0 + grid.y1))
    dump_times = (np.linspace(0.0, t_end, config.n_dumps + 1)[1:]
                  if t_end > 0 and config.n_dumps > 0 else np.array([]))
    next_dump = 0

    def dump(step_idx, t):
        if not out:
            return
        k = len(record.dumps)
        path = os.path.join(out, f"fields_{k:06d}.csv")
        _write_fields(path, field, grid, cfg, t)
        record.dumps.append((step_idx, t, path))
        if config.scenario == "radial":
            spath = os.path.join(out, f"scatter_{k:06d}.csv")
            _write_scatter(spath, radial_scatter(field, grid, cfg, center), t)

    record.append(0.0, kinetic_energy_total(field, grid, cfg),
                  conserved_totals(field, grid))
    dump(0, 0.0)

    t = 0.0
    n = 0
    while t < t_end:
        dt = min(compute_dt(field, grid, cfg), t_end - t)
        try:
            new_field = None
            for attempt in range(6):
                try:
                    new_field = step(field, grid, cfg, dt)
                    break
                except _RETRYABLE:
                    if attempt == 5:
                        raise
                    dt *= 0.5
            field = new_field
        except NumericalFailure as exc:
            raise type(exc)(f"step {n} at t = {t:.6g}: {exc}") from exc
        t += dt
        n += 1
        record.append(t, kinetic_energy_total(field, grid, cfg),
                      conserved_totals(field, grid))
        while next_dump < len(dump_times) and t >= dump_times[next_dump] - 1e-12:
            dump(n, t)
            next_dump += 1
    if out:
        _write_energy(os.path.join(out, "energy.csv"), record, cfg)
    return record


def run_with_field(config: RunConfig) -> tuple[RunRecord, ConservedField, GridSpec, SchemeConfig]:
    """Like run(), but also returns the final field (for in-memory analysis)."""
    cfg, grid, field, t_end = _setup(config)
    record = run_steps(field, grid, cfg, t_end, record=None)
    return record, field, grid, cfg


def run_steps(field: ConservedField, grid: GridSpec, cfg: SchemeConfig,
              t_end: float, record: RunRecord | None = None) -> RunRecord:
    """Bare driver loop on an existing field (mutates `field.data`)."""
    step = STEPPERS[cfg.method]
    if record is None:
        record = RunRecord()
    record.append(0.0, kinetic_energy_total(field, grid, cfg),
                  conserved_totals(field, grid))
    t = 0.0
    while t < t_end:
        dt = min(compute_dt(field, grid, cfg), t_end - t)
        new_field = None
        for attempt in range(6):
            try:
                new_field = step(field, grid, cfg, dt)
                break
            except _RETRYABLE:
                if attempt == 5:
                    raise
                dt *= 0.5
        field.data[...] = new_field.data
        t += dt
        record.append(t, kinetic_energy_total(field, grid, cfg),
                      conserved_totals(field, grid))
    return record
