"""Batch figure CLI: `plot density|energy|scatter <inputs> -o <png>`."""
from __future__ import annotations

import argparse
import sys

from .figures import plot_density, plot_energy, plot_scatter
from .io import MalformedFile


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="plot", description="Generate figures from solver CSV outputs")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("density", help="pseudocolor density map")
    d.add_argument("fields", help="fields CSV (x,y,rho,rhou,rhov,e)")
    d.add_argument("-o", "--out", required=True, help="output image file")
    d.add_argument("--vmin", type=float)
    d.add_argument("--vmax", type=float)
    d.add_argument("--cmap", default="viridis")

    e = sub.add_parser("energy", help="kinetic-energy curve overlay")
    e.add_argument("energy", nargs="+", help="energy CSV file(s)")
    e.add_argument("-o", "--out", required=True)
    e.add_argument("--labels", help="comma-separated, one per file")
    e.add_argument("--mach", help="comma-separated Mach numbers, one per "
                                  "file; rescales t -> t*M, E -> E/M^2")
    e.add_argument("--normalize", action="store_true",
                   help="divide each curve by its initial value")

    s = sub.add_parser("scatter", help="radial scatter with reference overlay")
    s.add_argument("scatter", help="scatter CSV (r,rho,ur,p)")
    s.add_argument("-o", "--out", required=True)
    s.add_argument("--reference", help="reference profile CSV (r,rho,ur,p)")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "density":
            out = plot_density(args.fields, args.out, vmin=args.vmin,
                               vmax=args.vmax, cmap=args.cmap)
        elif args.command == "energy":
            labels = args.labels.split(",") if args.labels else None
            machs = ([float(m) for m in args.mach.split(",")]
                     if args.mach else None)
            out = plot_energy(args.energy, args.out, labels=labels,
                              machs=machs, normalize=args.normalize)
        else:
            out = plot_scatter(args.scatter, args.out,
                               reference_path=args.reference)
    except (MalformedFile, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
