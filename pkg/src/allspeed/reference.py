"""Independent oracles: exact 1D Riemann solution, a fine-grid radial Euler
solver with geometric source, and the 1D Lagrange-Projection advection demo.

These deliberately share no flux code with the 2D schemes.
"""
from __future__ import annotations

import numpy as np
from scipy.optimize import brentq

from .errors import DenominatorNonPositive, NonPositiveDensity
from .model import Primitives
from .scenarios import RadialRiemannParams


def _pressure_fn(p, rho_k, p_k, c_k, gamma):
    """Toro's f_K(p): rarefaction branch for p <= p_k, shock branch above."""
    if p > p_k:
        A = 2.0 / ((gamma + 1.0) * rho_k)
        B = (gamma - 1.0) / (gamma + 1.0) * p_k
        return (p - p_k) * np.sqrt(A / (p + B))
    return 2.0 * c_k / (gamma - 1.0) * ((p / p_k)**((gamma - 1.0) / (2.0 * gamma)) - 1.0)


def sod_star_state(left: Primitives, right: Primitives, gamma: float,
                   tol: float = 1e-12) -> tuple[float, float]:
    """Pressure and velocity in the star region, by root solve."""
    cl = np.sqrt(gamma * left.p / left.rho)
    cr = np.sqrt(gamma * right.p / right.rho)
    du = right.u - left.u

    def f(p):
        return (_pressure_fn(p, left.rho, left.p, cl, gamma)
                + _pressure_fn(p, right.rho, right.p, cr, gamma) + du)

    p_hi = max(left.p, right.p)
    while f(p_hi) < 0:
        p_hi *= 2.0
    p_star = brentq(f, 1e-14, p_hi, xtol=tol, rtol=8.881784197001252e-16)
    u_star = 0.5 * (left.u + right.u) \
        + 0.5 * (_pressure_fn(p_star, right.rho, right.p, cr, gamma)
                 - _pressure_fn(p_star, left.rho, left.p, cl, gamma))
    return p_star, u_star


def _sample_side(xi, w, p_star, u_star, gamma, sign):
    """Solution on one side of the contact; sign=+1 for left, -1 for right."""
    c = np.sqrt(gamma * w.p / w.rho)
    if p_star > w.p:  # shock
        ratio = p_star / w.p
        gm = (gamma - 1.0) / (gamma + 1.0)
        rho_star = w.rho * (ratio + gm) / (gm * ratio + 1.0)
        s = w.u - sign * c * np.sqrt((gamma + 1.0) / (2.0 * gamma) * ratio
                                     + (gamma - 1.0) / (2.0 * gamma))
        if sign * xi <= sign * s:
            return w.rho, w.u, w.p
        return rho_star, u_star, p_star
    # rarefaction
    c_star = c * (p_star / w.p)**((gamma - 1.0) / (2.0 * gamma))
    head = w.u - sign * c
    tail = u_star - sign * c_star
    if sign * xi <= sign * head:
        return w.rho, w.u, w.p
    if sign * xi >= sign * tail:
        rho_star = w.rho * (p_star / w.p)**(1.0 / gamma)
        return rho_star, u_star, p_star
    u = (2.0 / (gamma + 1.0)) * (sign * c + (gamma - 1.0) / 2.0 * w.u + xi)
    c_fan = sign * (u - xi)
    rho = w.rho * (c_fan / c)**(2.0 / (gamma - 1.0))
    p = w.p * (c_fan / c)**(2.0 * gamma / (gamma - 1.0))
    return rho, u, p


def sod_exact(left: Primitives, right: Primitives, xi, gamma: float = 1.4
              ) -> Primitives:
    """Exact self-similar Riemann solution sampled at xi = x/t."""
    p_star, u_star = sod_star_state(left, right, gamma)
    xi = np.atleast_1d(np.asarray(xi, dtype=np.float64))
    rho = np.empty_like(xi)
    u = np.empty_like(xi)
    p = np.empty_like(xi)
    for k, x in enumerate(xi):
        if x <= u_star:
            rho[k], u[k], p[k] = _sample_side(x, left, p_star, u_star, gamma, +1.0)
        else:
            rho[k], u[k], p[k] = _sample_side(x, right, p_star, u_star, gamma, -1.0)
    return Primitives(rho=rho, u=u, v=np.zeros_like(rho), p=p)


def _hll_flux_1d(UL, UR, gamma):
    """HLL flux for the 1D Euler equations, states as (4, n) with zero v-row."""
    def unpack(U):
        rho = U[0]
        u = U[1] / rho
        p = (gamma - 1.0) * (U[3] - 0.5 * rho * u**2)
        return rho, u, p

    def flux(U, rho, u, p):
        return np.stack([rho * u, rho * u**2 + p, np.zeros_like(u),
                         u * (U[3] + p)])

    rl, ul, pl = unpack(UL)
    rr, ur, pr = unpack(UR)
    cl = np.sqrt(gamma * pl / rl)
    cr = np.sqrt(gamma * pr / rr)
    sl = np.minimum(ul - cl, ur - cr)
    sr = np.maximum(ul + cl, ur + cr)
    FL = flux(UL, rl, ul, pl)
    FR = flux(UR, rr, ur, pr)
    f_mid = (sr * FL - sl * FR + sl * sr * (UR - UL)) / (sr - sl)
    return np.where(sl >= 0, FL, np.where(sr <= 0, FR, f_mid))


def radial_reference(params: RadialRiemannParams, n_cells: int = 20000,
                     t_end: float = 0.1, r_max: float = 0.7,
                     gamma: float = 1.4, cfl: float = 0.45
                     ) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """First-order HLL solution of the radial (cylindrical) Euler equations.

    Solves d_t U + d_r F(U) = -(1/r) (rho u, rho u^2, 0, u(e+p)) on (0, r_max]
    with a reflective inner and zero-gradient outer boundary.  Returns
    (r, rho, u_r, p) at t_end.
    """
    dr = r_max / n_cells
    r = (np.arange(n_cells) + 0.5) * dr
    rho = np.where(r < params.r0, params.rho_in, params.rho_out)
    p = np.where(r < params.r0, params.p_in, params.p_out)
    U = np.stack([rho, np.zeros_like(rho), np.zeros_like(rho),
                  p / (gamma - 1.0)])
    t = 0.0
    while t < t_end:
        rr = U[0]
        if not np.all(rr > 0):
            raise NonPositiveDensity("radial reference lost positivity")
        u = U[1] / rr
        pp = (gamma - 1.0) * (U[3] - 0.5 * rr * u**2)
        c = np.sqrt(gamma * pp / rr)
        dt = min(cfl * dr / np.max(np.abs(u) + c), t_end - t)
        # ghost cells: reflective inner, zero-gradient outer
        Ug = np.empty((4, n_cells + 2))
        Ug[:, 1:-1] = U
        Ug[:, 0] = U[:, 0]
        Ug[1, 0] = -U[1, 0]
        Ug[:, -1] = U[:, -1]
        F = _hll_flux_1d(Ug[:, :-1], Ug[:, 1:], gamma)
        src = np.stack([rr * u, rr * u**2, np.zeros_like(u),
                        u * (U[3] + pp)]) / r
        U = U - (dt / dr) * (F[:, 1:] - F[:, :-1]) - dt * src
        t += dt
    rho = U[0]
    u = U[1] / rho
    p = (gamma - 1.0) * (U[3] - 0.5 * rho * u**2)
    return r, rho, u, p


def write_profile(path, r, rho, ur, p, t: float):
    """Profile file in the scatter column format (r, rho, ur, p)."""
    header = f"t = {t}\ncolumns: r,rho,ur,p"
    np.savetxt(path, np.column_stack([r, rho, ur, p]), delimiter=",",
               header=header)


def lp_advect_1d(q: np.ndarray, speeds: np.ndarray, dt: float, dx: float,
                 bc: str = "periodic") -> np.ndarray:
    """Lagrange-Projection update for d_t q + d_x(U q) = 0, U > 0.

    `speeds` holds the interface values U_{i+1/2}: length n for periodic data
    (wrapping), length n+1 otherwise (zero-gradient donor at the left end).
    """
    n = q.shape[0]
    if bc == "periodic":
        U_r = np.asarray(speeds, dtype=np.float64)
        if U_r.shape[0] != n:
            raise ValueError("periodic: need one speed per cell (right face)")
        U_l = np.roll(U_r, 1)
        den = 1.0 + dt * (U_r - U_l) / dx
        if not np.all(den > 0):
            raise DenominatorNonPositive(f"min denominator = {np.min(den)}")
        qhat = q / den
        flux_r = U_r * qhat
        flux_l = np.roll(flux_r, 1)
    else:
        Ui = np.asarray(speeds, dtype=np.float64)
        if Ui.shape[0] != n + 1:
            raise ValueError("need n+1 interface speeds")
        den = 1.0 + dt * (Ui[1:] - Ui[:-1]) / dx
        if not np.all(den > 0):
            raise DenominatorNonPositive(f"min denominator = {np.min(den)}")
        qhat = q / den
        flux_r = Ui[1:] * qhat
        flux_l = np.empty_like(flux_r)
        flux_l[1:] = flux_r[:-1]
        flux_l[0] = Ui[0] * qhat[0]   # zero-gradient donor
    return q - (dt / dx) * (flux_r - flux_l)
