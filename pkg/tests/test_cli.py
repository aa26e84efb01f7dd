"""Command-line driver: argument parsing, config files, exit codes."""
import os

import numpy as np
import pytest

from allspeed.cli import config_from_args, main, parse_config_file
from allspeed.errors import ConfigError


def test_defaults():
    config = config_from_args([])
    assert config.method == "a"
    assert config.scenario == "kh"
    assert (config.nx, config.ny) == (128, 64)
    assert config.cfl == 0.9


def test_flag_parsing():
    config = config_from_args(["--method", "b", "--scenario", "radial",
                               "--nx", "50", "--ny", "50", "--cfl", "0.5",
                               "--tend", "0.05", "--dumps", "3"])
    assert config.method == "b"
    assert config.scenario == "radial"
    assert config.nx == config.ny == 50
    assert config.cfl == 0.5
    assert config.t_end == 0.05
    assert config.n_dumps == 3


def test_config_file(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("# a comment\nmethod = c\nnx = 64\nny = 32\n"
                    "cfl = 0.8   # trailing comment\n\n")
    values = parse_config_file(str(path))
    assert values == {"method": "c", "nx": 64, "ny": 32, "cfl": 0.8}


def test_config_file_errors(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("not a key value line\n")
    with pytest.raises(ConfigError):
        parse_config_file(str(bad))
    unknown = tmp_path / "unknown.cfg"
    unknown.write_text("frobnicate = 1\n")
    with pytest.raises(ConfigError):
        parse_config_file(str(unknown))


def test_cli_overrides_config_file(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("method = b\nnx = 64\n")
    config = config_from_args(["--config", str(path), "--method", "c"])
    assert config.method == "c"    # flag wins
    assert config.nx == 64         # file fills the rest


def test_main_success(tmp_path, capsys):
    out = tmp_path / "run"
    code = main(["--scenario", "kh", "--nx", "32", "--ny", "16",
                 "--tend", "1.0", "--out", str(out), "--dumps", "1"])
    assert code == 0
    assert "done:" in capsys.readouterr().out
    assert (out / "energy.csv").exists()


def test_main_config_error(capsys):
    assert main(["--scenario", "kh", "--cfl", "0"]) == 2
    assert "configuration error" in capsys.readouterr().err


def test_main_bad_flag_value():
    with pytest.raises(SystemExit):
        main(["--method", "q"])   # argparse rejects unknown choices


def test_main_missing_config_file(capsys):
    assert main(["--config", "/nonexistent/file.cfg"]) == 2


def test_main_numerical_failure(capsys, monkeypatch):
    """A run that aborts with a numerical failure maps to exit code 3."""
    import allspeed.cli
    from allspeed.errors import NonPositivePressure

    def boom(config):
        raise NonPositivePressure("min(p) = -1.0")

    monkeypatch.setattr(allspeed.cli, "run", boom)
    assert main(["--scenario", "kh"]) == 3
    assert "numerical failure" in capsys.readouterr().err
