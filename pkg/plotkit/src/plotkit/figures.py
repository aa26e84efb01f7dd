"""Figure builders: density pseudocolor map, kinetic-energy curves, and
radial scatter panels with an optional reference overlay.

All functions render to a file (batch artifacts); matplotlib runs with the
Agg backend so no display is needed.
"""
from __future__ import annotations

import sys

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .io import read_energy, read_fields, read_scatter  # noqa: E402


def plot_density(fields_path: str, out_path: str, vmin: float | None = None,
                 vmax: float | None = None, cmap: str = "viridis") -> str:
    """Pseudocolor map of rho from a fields dump, true grid aspect ratio."""
    data = read_fields(fields_path)
    fig, ax = plt.subplots(figsize=(7, 5), constrained_layout=True)
    mesh = ax.pcolormesh(data.x, data.y, data.rho.T, shading="nearest",
                         cmap=cmap, vmin=vmin, vmax=vmax)
    ax.set_aspect("equal")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    t = data.meta.get("t")
    method = data.meta.get("method", "")
    title = "density"
    if method:
        title += f", method {method}"
    if t is not None:
        title += f", t = {t:g}"
    ax.set_title(title)
    fig.colorbar(mesh, ax=ax, label=r"$\rho$")
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path


def plot_energy(energy_paths: list[str], out_path: str,
                labels: list[str] | None = None,
                machs: list[float] | None = None,
                normalize: bool = False) -> str:
    """Overlay kinetic-energy histories E_kin(t).

    With `machs` (one Mach number per file) the axes are rescaled to the
    Mach-independent form: t -> t*M and E -> E/M^2, so runs at different
    Mach numbers collapse onto one curve.  `normalize` divides each curve
    by its initial value instead.
    """
    if not energy_paths:
        raise ValueError("need at least one energy file")
    if labels is not None and len(labels) != len(energy_paths):
        raise ValueError("one label per energy file required")
    if machs is not None and len(machs) != len(energy_paths):
        raise ValueError("one Mach number per energy file required")

    fig, ax = plt.subplots(figsize=(7, 5), constrained_layout=True)
    for k, path in enumerate(energy_paths):
        rows, meta = read_energy(path)
        t, e_kin = rows[:, 0], rows[:, 1]
        if machs is not None:
            t = t * machs[k]
            e_kin = e_kin / machs[k]**2
        if normalize and e_kin[0] != 0:
            e_kin = e_kin / e_kin[0]
        label = labels[k] if labels else meta.get("method", path)
        ax.plot(t, e_kin, label=str(label))
    ax.set_xlabel(r"$t \mathcal{M}$" if machs is not None else "t")
    ylabel = r"$E_{kin}$"
    if machs is not None:
        ylabel = r"$E_{kin} / \mathcal{M}^2$"
    if normalize:
        ylabel += " (normalized)"
    ax.set_ylabel(ylabel)
    ax.set_title("kinetic energy evolution")
    ax.legend()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path


def plot_scatter(scatter_path: str, out_path: str,
                 reference_path: str | None = None) -> str:
    """Per-cell (r, rho), (r, u_r), (r, p) point clouds; the reference
    profile, when given, is drawn as a solid line on each panel."""
    rows, meta = read_scatter(scatter_path)
    ref = None
    if reference_path is not None:
        ref, _ = read_scatter(reference_path)
    else:
        print("warning: no reference profile given, plotting points only",
              file=sys.stderr)

    fig, axes = plt.subplots(1, 3, figsize=(13, 4), constrained_layout=True)
    for ax, col, name in zip(axes, (1, 2, 3),
                             (r"$\rho$", r"$u_r$", r"$p$")):
        ax.plot(rows[:, 0], rows[:, col], ".", ms=1, alpha=0.3,
                label="cells", rasterized=True)
        if ref is not None:
            order = np.argsort(ref[:, 0])
            ax.plot(ref[order, 0], ref[order, col], "-", color="black",
                    lw=1.2, label="reference")
        ax.set_xlabel("r")
        ax.set_ylabel(name)
        ax.legend(loc="best", markerscale=8)
    t = meta.get("t")
    fig.suptitle("radial profiles" + (f", t = {t:g}" if t is not None else ""))
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return out_path
