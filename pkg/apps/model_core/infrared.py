"""
Desarrollo infrarrojo del régimen cuasi-local (1 < alpha < 2):

    P(k) ~ P(0) + P' |k|^(alpha-1),  P(0) = 2 zeta(alpha),  P' < 0.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import zeta

from apps.core.exceptions import (
    InvalidParameters,
    RegimeViolation,
    RegressionIllConditioned,
)
from apps.model_core.kernel import kernel_palpha

logger = logging.getLogger(__name__)

FIT_K_MIN = 1e-4
FIT_K_MAX = 1e-2
FIT_POINTS = 50
MAX_RELATIVE_RESIDUAL = 0.01


@dataclass(frozen=True)
class InfraredExpansion:
    delta: float
    c: float
    z: float
    p0: float
    p_prime: float
    nu: float
    a_z: float
    gamma: float
    chi: float
    kappa: float
    xi_z: float

    @property
    def beta_ce(self):
        """Exponente del borde de correlación chi/gamma = 3 - alpha"""
        return self.chi / self.gamma


@lru_cache(maxsize=64)
def fit_p_prime(alpha):
    """
    Coeficiente P' por mínimos cuadrados sobre k en [1e-4, 1e-2].

    Regresión por el origen de P(k) - P(0) contra |k|^(alpha-1), sin otros
    términos; el orden k^2 queda en el residuo.
    """
    k = np.logspace(np.log10(FIT_K_MIN), np.log10(FIT_K_MAX), FIT_POINTS)
    p0 = 2.0 * zeta(alpha)
    y = kernel_palpha(k, alpha, mode="infinite_chain") - p0
    design = (k ** (alpha - 1.0))[:, None]
    coeffs, _, rank, _ = np.linalg.lstsq(design, y, rcond=None)
    residual = np.linalg.norm(y - design @ coeffs) / np.linalg.norm(y)
    logger.debug("P' (alpha=%.3f) = %.6g, residuo relativo %.2e", alpha, coeffs[0], residual)
    if rank < 1 or residual > MAX_RELATIVE_RESIDUAL:
        raise RegressionIllConditioned(
            f"Ajuste de P' mal condicionado para alpha = {alpha}",
            diagnostics={"residual": f"{residual:.3e}", "rank": rank},
        )
    return float(coeffs[0])


def infrared_expansion(params):
    """Parámetros del desarrollo infrarrojo con nu = 0"""
    alpha = params.alpha
    if not 1 < alpha < 2:
        raise RegimeViolation(
            f"alpha = {alpha}: el desarrollo infrarrojo vale sólo para 1 < alpha < 2"
        )
    if params.h <= 0:
        raise InvalidParameters("El desarrollo infrarrojo necesita gap (h > 0)")

    h, J = params.h, params.J
    z = alpha - 1.0
    nu = 0.0
    p0 = 2.0 * zeta(alpha)
    p_prime = fit_p_prime(alpha)
    delta = 2.0 * np.sqrt(h * (h + J * p0))
    c = np.sqrt(h / (h + J * p0)) * J * abs(p_prime)

    return InfraredExpansion(
        delta=float(delta),
        c=float(c),
        z=z,
        p0=float(p0),
        p_prime=p_prime,
        nu=nu,
        a_z=float(2.0 * c * (2.0 * c * z) ** (z / (1.0 - z)) * (1.0 - z)),
        gamma=(nu + 0.5) / (1.0 - z),
        chi=(nu + (2.0 - z) / 2.0) / (1.0 - z),
        kappa=(alpha - 3.0) / (alpha - 2.0),
        xi_z=float((c * z) ** (1.0 / (1.0 - z)) * (1.0 + c ** (z + 1.0) * z**z)),
    )
