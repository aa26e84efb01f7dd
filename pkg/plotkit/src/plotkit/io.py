"""Readers for the solver's CSV outputs.

All files are plain CSV with '#'-prefixed header lines.  The header carries
`key = value` metadata (possibly several per line, comma-separated) and a
`columns:` line naming the data columns.

Formats:
  fields:  x, y, rho, rhou, rhov, e      (one row per cell, x-major order)
  energy:  t, e_kin, mass_total, momx_total, momy_total, e_total
  scatter: r, rho, ur, p                 (one row per cell)
  profile: r, rho, ur, p                 (one row per reference sample)
"""
from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field

import numpy as np


class MalformedFile(ValueError):
    """The file is empty or does not match the expected CSV format."""


@dataclass
class FieldsData:
    """A fields dump reshaped onto its 2D grid."""

    x: np.ndarray        # (nx,)
    y: np.ndarray        # (ny,)
    rho: np.ndarray      # (nx, ny)
    rhou: np.ndarray
    rhov: np.ndarray
    e: np.ndarray
    meta: dict = field(default_factory=dict)


def read_header(path: str) -> dict:
    """Collect `key = value` pairs from the leading '#' comment lines."""
    meta: dict = {}
    with open(path) as fh:
        for line in fh:
            if not line.startswith("#"):
                break
            body = line.lstrip("#").strip()
            if body.startswith("columns:"):
                meta["columns"] = [c.strip() for c in
                                   body.split(":", 1)[1].split(",")]
                continue
            for part in body.split(","):
                m = re.match(r"\s*(\w+)\s*=\s*(\S+)\s*$", part)
                if m:
                    key, val = m.group(1), m.group(2)
                    try:
                        meta[key] = float(val)
                    except ValueError:
                        meta[key] = val
    return meta


def _load(path: str, ncols: int, what: str) -> np.ndarray:
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")   # empty file warns before we raise
            data = np.loadtxt(path, delimiter=",", ndmin=2)
    except (ValueError, OSError) as exc:
        raise MalformedFile(f"{path}: cannot parse as {what} CSV: {exc}") \
            from exc
    if data.size == 0:
        raise MalformedFile(f"{path}: no data rows")
    if data.shape[1] != ncols:
        raise MalformedFile(f"{path}: expected {ncols} columns for {what}, "
                            f"found {data.shape[1]}")
    return data


def read_fields(path: str) -> FieldsData:
    """Read a fields dump and reshape it onto its (nx, ny) grid."""
    rows = _load(path, 6, "fields")
    meta = read_header(path)
    x = np.unique(rows[:, 0])
    y = np.unique(rows[:, 1])
    nx, ny = x.size, y.size
    if nx * ny != rows.shape[0]:
        raise MalformedFile(f"{path}: rows do not form an {nx} x {ny} grid")
    # rows are written x-major: index = i*ny + j
    grids = [rows[:, k].reshape(nx, ny) for k in range(2, 6)]
    return FieldsData(x=x, y=y, rho=grids[0], rhou=grids[1], rhov=grids[2],
                      e=grids[3], meta=meta)


def read_energy(path: str) -> tuple[np.ndarray, dict]:
    """Read an energy time series: columns t, e_kin, and conserved totals."""
    return _load(path, 6, "energy"), read_header(path)


def read_scatter(path: str) -> tuple[np.ndarray, dict]:
    """Read a scatter or reference-profile file: columns r, rho, ur, p."""
    return _load(path, 4, "scatter/profile"), read_header(path)
