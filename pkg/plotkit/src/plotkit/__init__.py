"""Batch figure generation from solver CSV outputs."""

from .figures import plot_density, plot_energy, plot_scatter
from .io import (FieldsData, MalformedFile, read_energy, read_fields,
                 read_header, read_scatter)

__all__ = [
    "plot_density", "plot_energy", "plot_scatter",
    "FieldsData", "MalformedFile", "read_energy", "read_fields",
    "read_header", "read_scatter",
]
