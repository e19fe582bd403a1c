"""
Ajustes de las leyes de propagación t = a R^beta (log-log) y R = V t + b.
"""

import logging
from dataclasses import dataclass, replace

import numpy as np
from scipy.stats import linregress

from apps.core.exceptions import InsufficientPoints, InvalidParameters

logger = logging.getLogger(__name__)

MIN_FIT_POINTS = 6
LOW_QUALITY_R2 = 0.98


@dataclass(frozen=True)
class LinearFit:
    velocity: float
    intercept: float
    stderr: float
    r2: float

    def as_dict(self):
        return {
            "velocity": self.velocity,
            "intercept": self.intercept,
            "stderr": self.stderr,
            "r2": self.r2,
        }


@dataclass(frozen=True)
class EdgeFit:
    epsilon: float
    points: tuple
    a: float
    beta: float
    stderr_beta: float
    r2: float
    window: tuple
    velocity_fit: LinearFit = None

    @property
    def low_quality(self):
        return self.r2 < LOW_QUALITY_R2

    def with_velocity(self, velocity_fit):
        return replace(self, velocity_fit=velocity_fit)

    def as_dict(self):
        data = {
            "epsilon": self.epsilon,
            "beta": self.beta,
            "a": self.a,
            "stderr": self.stderr_beta,
            "r2": self.r2,
            "window": list(self.window),
            "low_quality": self.low_quality,
        }
        if self.velocity_fit is not None:
            data["velocity"] = self.velocity_fit.as_dict()
        return data


def _points_in_window(points, window):
    data = np.asarray(points, dtype=float).reshape(-1, 2)
    if window is not None:
        inside = (data[:, 0] >= window[0]) & (data[:, 0] <= window[1])
        data = data[inside]
    if data.shape[0] < MIN_FIT_POINTS:
        raise InsufficientPoints(
            f"{data.shape[0]} puntos en la ventana; el ajuste necesita {MIN_FIT_POINTS}"
        )
    if np.any(np.diff(data[:, 0]) <= 0):
        raise InvalidParameters("Los puntos deben estar ordenados con R estrictamente creciente")
    return data


def fit_power_law(points, window=None, epsilon=None):
    """Mínimos cuadrados de log t* contra log R: beta es la pendiente, a = exp(ordenada)"""
    data = _points_in_window(points, window)
    if np.any(data[:, 0] <= 0) or np.any(data[:, 1] <= 0):
        raise InvalidParameters("El ajuste log-log exige R > 0 y t* > 0")

    result = linregress(np.log(data[:, 0]), np.log(data[:, 1]))
    r2 = float(result.rvalue**2)
    fit = EdgeFit(
        epsilon=epsilon,
        points=tuple(map(tuple, data)),
        a=float(np.exp(result.intercept)),
        beta=float(result.slope),
        stderr_beta=float(result.stderr),
        r2=r2,
        window=tuple(window) if window is not None else (data[0, 0], data[-1, 0]),
    )
    logger.debug(
        "Ajuste t = a R^beta (epsilon=%s): beta = %.5f +- %.5f, a = %.5g, r2 = %.5f",
        epsilon,
        fit.beta,
        fit.stderr_beta,
        fit.a,
        r2,
    )
    if fit.low_quality:
        logger.warning("Ajuste de baja calidad: r2 = %.4f < %.2f", r2, LOW_QUALITY_R2)
    return fit


def fit_velocity(points, window=None):
    """R = V t* + b sobre los mismos puntos de borde"""
    data = _points_in_window(points, window)
    if np.ptp(data[:, 1]) == 0:
        raise InsufficientPoints("Todos los t* coinciden: la velocidad R(t*) no está definida")
    result = linregress(data[:, 1], data[:, 0])
    return LinearFit(
        velocity=float(result.slope),
        intercept=float(result.intercept),
        stderr=float(result.stderr),
        r2=float(result.rvalue**2),
    )
