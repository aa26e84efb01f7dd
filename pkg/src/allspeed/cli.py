"""Command-line driver: scenario x method x grid runs with CSV output.

Precedence: CLI flags override the config file, which overrides defaults.
Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import fields

from .diagnostics import RunConfig, run
from .errors import ConfigError, NumericalFailure

_FLOAT_KEYS = {"mach", "epsilon", "cfl", "gamma", "a_factor", "t_end",
               "kh_r", "kh_delta", "kh_w", "radial_r0", "radial_extent"}
_INT_KEYS = {"nx", "ny", "n_dumps"}
_STR_KEYS = {"method", "scenario", "out_dir"}


def parse_config_file(path: str) -> dict:
    """Flat key=value text; '#' starts a comment."""
    values: dict = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key=value")
            key, val = (s.strip() for s in line.split("=", 1))
            if key in _FLOAT_KEYS:
                values[key] = float(val)
            elif key in _INT_KEYS:
                values[key] = int(val)
            elif key in _STR_KEYS:
                values[key] = val
            else:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
    return values


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="solver",
        description="2D all-speed finite-volume Euler solver (methods A/B/C)")
    p.add_argument("--method", choices=["a", "b", "c"])
    p.add_argument("--scenario", choices=["kh", "radial", "sod1d"])
    p.add_argument("--nx", type=int)
    p.add_argument("--ny", type=int)
    p.add_argument("--mach", type=float)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--cfl", type=float)
    p.add_argument("--gamma", type=float)
    p.add_argument("--a-factor", dest="a_factor", type=float)
    p.add_argument("--tend", dest="t_end", type=float)
    p.add_argument("--out", dest="out_dir")
    p.add_argument("--dumps", dest="n_dumps", type=int)
    p.add_argument("--config", dest="config_file")
    return p


def config_from_args(argv=None) -> RunConfig:
    args = build_parser().parse_args(argv)
    values: dict = {}
    if args.config_file:
        values.update(parse_config_file(args.config_file))
    names = {f.name for f in fields(RunConfig)}
    for key, val in vars(args).items():
        if key in names and val is not None:
            values[key] = val
    return RunConfig(**values)


def main(argv=None) -> int:
    try:
        config = config_from_args(argv)
        record = run(config)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except NumericalFailure as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    steps = len(record.times) - 1
    print(f"done: {steps} steps to t = {record.times[-1]:.6g}, "
          f"kinetic-energy decay {100.0 * (1.0 - record.kinetic_energy[-1] / record.kinetic_energy[0]):.3f}%"
          if record.kinetic_energy[0] > 0 else f"done: {steps} steps")
    return 0


if __name__ == "__main__":
    sys.exit(main())
