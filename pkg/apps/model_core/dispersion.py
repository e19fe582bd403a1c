"""
Dispersión de ondas de espín alrededor de la fase polarizada en z.

    A_k = J P(k) + 2h,   B_k = J P(k),   E_k = sqrt(A_k^2 - B_k^2) = 2 sqrt(h (h + J P(k)))
"""

import logging
import warnings
from dataclasses import dataclass

import numpy as np

from apps.core.exceptions import (
    DivergentVelocity,
    GapClosureWarning,
    StabilityViolation,
)
from apps.core.fourier import momentum_grid
from apps.model_core.kernel import (
    kernel_curvature,
    kernel_derivative,
    kernel_on_grid,
    kernel_palpha,
)

logger = logging.getLogger(__name__)

GAP_TOLERANCE = 1e-12
STABILITY_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class DispersionTable:
    """Tabla inmutable de la dispersión sobre la grilla de momentos"""

    params: object
    k: np.ndarray
    p_alpha: np.ndarray
    dp_alpha: np.ndarray
    A: np.ndarray
    B: np.ndarray
    E: np.ndarray
    vg: np.ndarray
    vphi: np.ndarray
    u: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        for name in ("k", "p_alpha", "dp_alpha", "A", "B", "E", "vg", "vphi", "u", "v"):
            getattr(self, name).setflags(write=False)

    @property
    def N(self):
        return self.k.size

    @property
    def rho(self):
        """(u_k - v_k)^2 = 2h / E_k, ancho del vacío de Bogoliubov"""
        return (self.A - self.B) / self.E

    def bogoliubov_norm_error(self):
        return np.max(np.abs(self.u**2 - self.v**2 - 1.0))


@dataclass(frozen=True)
class DispersionPoint:
    k: float
    p_alpha: float
    E: float
    vg: float
    curvature: float


def _gap_function(params, p_alpha):
    g = params.h * (params.h + params.J * p_alpha)
    scale = max(params.h**2, 1.0)
    worst = float(np.min(g))
    if worst < -STABILITY_TOLERANCE * scale:
        raise StabilityViolation(
            f"h(h + J P(k)) = {worst:.3e} < 0: el espectro LSWT no es real "
            f"(h = {params.h}, J = {params.J}, alpha = {params.alpha})"
        )
    return np.clip(g, 0.0, None)


def build_dispersion(params):
    """Construye la DispersionTable de params sobre k_n = -pi + 2*pi*n/N"""
    params.require_lattice()
    logger.debug(
        "Dispersión: N=%d alpha=%.3f h=%.4g J=%.4g modo=%s",
        params.N,
        params.alpha,
        params.h,
        params.J,
        params.kernel_mode,
    )
    k = momentum_grid(params.N)
    p_alpha = kernel_on_grid(params.alpha, params.kernel_mode, params.N, order=0)
    dp_alpha = kernel_on_grid(params.alpha, params.kernel_mode, params.N, order=1)

    g = _gap_function(params, p_alpha)
    E = 2.0 * np.sqrt(g)
    A = params.J * p_alpha + 2.0 * params.h
    B = params.J * p_alpha

    if np.min(E) < GAP_TOLERANCE:
        logger.warning("Cierre de gap: min E_k = %.3e", np.min(E))
        warnings.warn(
            f"min_k E_k = {np.min(E):.3e} < {GAP_TOLERANCE}", GapClosureWarning
        )

    with np.errstate(divide="ignore", invalid="ignore"):
        u = np.sign(A) * np.sqrt((np.abs(A) / E + 1.0) / 2.0)
        v = np.sign(B) * np.sqrt(np.clip(u**2 - 1.0, 0.0, None))
        vg = params.h * params.J * dp_alpha / np.sqrt(g)
        vg[(params.h * params.J * dp_alpha) == 0] = 0.0
        vphi = np.where(k == 0, np.nan, E / np.where(k == 0, 1.0, k))

    return DispersionTable(
        params=params,
        k=k,
        p_alpha=p_alpha,
        dp_alpha=dp_alpha,
        A=A,
        B=B,
        E=E,
        vg=vg,
        vphi=vphi,
        u=u,
        v=v,
    )


def evaluate_dispersion(params, k):
    """E, V_g y d2E/dk2 en un momento arbitrario (fuera de la grilla)"""
    mode, N = params.kernel_mode, params.N
    p = kernel_palpha(k, params.alpha, mode, N)
    dp = kernel_derivative(k, params.alpha, mode, N)
    d2p = kernel_curvature(k, params.alpha, mode, N)
    g = float(_gap_function(params, np.atleast_1d(p))[0])
    hj = params.h * params.J
    E = 2.0 * np.sqrt(g)
    vg = hj * dp / np.sqrt(g) if hj * dp != 0 else 0.0
    curvature = hj * d2p / np.sqrt(g) - (hj * dp) ** 2 / (2.0 * g**1.5)
    return DispersionPoint(k=float(k), p_alpha=p, E=E, vg=vg, curvature=curvature)


def max_group_velocity(table):
    """
    (k*, V_g(k*)) con |V_g| máxima sobre la mitad k <= 0 de la zona.

    El máximo de grilla se refina con la parábola por los tres puntos vecinos.
    """
    alpha = table.params.alpha
    if alpha < 2:
        raise DivergentVelocity(
            f"alpha = {alpha} < 2: V_g diverge en k -> 0 (régimen cuasi-local)"
        )
    half = table.N // 2
    speed = np.abs(table.vg[: half + 1])
    i = int(np.argmax(speed))
    k_star, vg_max = float(table.k[i]), float(speed[i])

    if 0 < i < half:
        y_minus, y0, y_plus = speed[i - 1], speed[i], speed[i + 1]
        curvature = y_minus - 2.0 * y0 + y_plus
        if curvature < 0:
            delta = 0.5 * (y_minus - y_plus) / curvature
            dk = table.k[1] - table.k[0]
            k_star = float(table.k[i] + delta * dk)
            vg_max = float(y0 - 0.25 * (y_minus - y_plus) * delta)

    sign = 1.0 if table.vg[i] >= 0 else -1.0
    return k_star, sign * vg_max


def revival_time(table):
    """t_rev = N / (2 max|V_g|); infinito para banda plana"""
    vg_max = float(np.max(np.abs(table.vg)))
    return np.inf if vg_max == 0 else table.N / (2.0 * vg_max)
