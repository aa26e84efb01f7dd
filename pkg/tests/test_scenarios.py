"""Initial-data generators and their validation."""
import numpy as np
import pytest

from allspeed.errors import ConfigError
from allspeed.grid import EN, MX, MY, RHO, GridSpec
from allspeed.model import SchemeConfig, primitives_from_conserved
from allspeed.scenarios import (KHParams, RadialRiemannParams, init_kh,
                                init_radial_riemann, init_sod_1d, kh_grid,
                                profile_H, radial_grid)


def test_profile_shape():
    """-1 in the middle band, +1 outside, C^0 sine blends through 0 at +-1/4."""
    w = 1.0 / 16.0
    assert profile_H(0.0, w) == -1.0
    assert profile_H(-0.4, w) == 1.0
    assert profile_H(0.4, w) == 1.0
    assert profile_H(-0.25, w) == pytest.approx(0.0)
    assert profile_H(0.25, w) == pytest.approx(0.0)
    # blend endpoints meet the plateaus
    assert profile_H(-0.25 + w / 2 - 1e-12, w) == pytest.approx(-1.0)
    assert profile_H(0.25 - w / 2 + 1e-12, w) == pytest.approx(-1.0)
    # continuity across the band edges
    y = np.linspace(-0.5, 0.5, 10001)
    H = profile_H(y, w)
    assert np.max(np.abs(np.diff(H))) < 0.02
    assert np.all((H >= -1.0 - 1e-12) & (H <= 1.0 + 1e-12))


def test_kh_init_fields(cfg):
    grid = kh_grid(32, 16)
    params = KHParams(mach=1e-2)
    field, t_end = init_kh(grid, params, cfg)
    assert t_end == pytest.approx(0.8 / params.mach)
    w = primitives_from_conserved(field.interior, cfg)
    # pressure is uniform 1; rho = gamma + r*H in [gamma - r, gamma + r]
    assert np.allclose(w.p, 1.0)
    assert np.all(np.abs(w.rho - params.gamma) <= params.r + 1e-15)
    # u has magnitude M, v has amplitude delta*M and integral ~ 0
    assert np.max(np.abs(w.u)) == pytest.approx(params.mach, rel=1e-12)
    assert np.max(np.abs(w.v)) <= params.delta * params.mach + 1e-15
    assert abs(np.sum(w.v)) < 1e-12


def test_kh_init_validates_domain(cfg):
    bad = GridSpec(nx=8, ny=8, x0=0.0, x1=1.0, y0=-0.5, y1=0.5)
    with pytest.raises(ConfigError):
        init_kh(bad, KHParams(), cfg)
    bad_bc = GridSpec(nx=8, ny=8, x0=0.0, x1=2.0, y0=-0.5, y1=0.5,
                      bc_x="zero-gradient")
    with pytest.raises(ConfigError):
        init_kh(bad_bc, KHParams(), cfg)


def test_kh_params_validation():
    with pytest.raises(ValueError):
        KHParams(mach=0.0)
    with pytest.raises(ValueError):
        KHParams(w=-1.0)


def test_radial_init(cfg):
    grid = radial_grid(50)
    params = RadialRiemannParams()
    field = init_radial_riemann(grid, params, cfg)
    w = primitives_from_conserved(field.interior, cfg)
    xc, yc = grid.cell_centers()
    r = np.hypot(xc[:, None] - 0.5, yc[None, :] - 0.5)
    assert np.all(w.rho[r < params.r0 - 0.05] == params.rho_in)
    assert np.all(w.rho[r > params.r0 + 0.05] == params.rho_out)
    assert np.all(field.interior[MX] == 0.0)
    assert np.all(field.interior[MY] == 0.0)
    # four-fold reflection symmetry of the initial data
    assert np.array_equal(w.rho, w.rho[::-1, :])
    assert np.array_equal(w.rho, w.rho[:, ::-1])


def test_radial_params_validation():
    with pytest.raises(ValueError):
        RadialRiemannParams(r0=-0.1)
    with pytest.raises(ValueError):
        RadialRiemannParams(p_out=0.0)


def test_sod_init(cfg):
    grid = GridSpec(nx=40, ny=4, x0=0.0, x1=1.0, y0=0.0, y1=0.1,
                    bc_x="zero-gradient", bc_y="periodic")
    field = init_sod_1d(grid, cfg)
    w = primitives_from_conserved(field.interior, cfg)
    assert np.all(w.rho[:20] == 1.0)
    assert np.all(w.rho[20:] == 0.125)
    assert np.all(w.p[:20] == 1.0)
    assert np.all(w.p[20:] == pytest.approx(0.1))
    # y-uniform
    assert np.allclose(field.interior, field.interior[:, :, :1])
