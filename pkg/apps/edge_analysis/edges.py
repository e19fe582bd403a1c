"""
Bordes causales por umbral: el borde a fracción epsilon es, para cada R, el
primer tiempo en que |f(R, t)| alcanza epsilon veces M, el máximo de |f|
sobre las R de la ventana de análisis y todos los t. Las distancias cortas
fuera de la ventana no fijan la escala del umbral.
"""

import logging
from dataclasses import dataclass

import numpy as np

from apps.core.exceptions import EmptyEdge, InsufficientPoints, InvalidParameters
from apps.edge_analysis.fits import fit_power_law, fit_velocity

logger = logging.getLogger(__name__)

WINDOW_R_MIN = 8
WINDOW_FRACTION = 0.8
MIN_EDGE_POINTS = 6

CORRELATION_EPSILONS = (0.01, 0.12)
ENTROPY_EPSILONS = (0.2, 0.8)


def default_window(space_time_field):
    """[8, 0.8 R_max]: descarta el transitorio de distancias cortas y el borde de la grilla"""
    r_max = float(np.max(space_time_field.r_grid))
    return (float(WINDOW_R_MIN), WINDOW_FRACTION * r_max)


def _validate_epsilon(epsilon):
    if not 0 < epsilon < 1:
        raise InvalidParameters(f"epsilon = {epsilon} fuera de (0, 1)")


def edge_points(space_time_field, epsilon, window=None):
    """
    Pares (R, t*) ordenados por R dentro de la ventana.

    t* se refina por interpolación lineal entre las dos muestras que
    encierran el cruce; las R sin cruce se omiten.
    """
    _validate_epsilon(epsilon)
    window = window or default_window(space_time_field)
    magnitude = np.abs(space_time_field.values)
    r_grid = space_time_field.r_grid
    inside = (r_grid >= window[0]) & (r_grid <= window[1])
    peak = float(magnitude[:, inside].max()) if inside.any() else 0.0
    if peak == 0:
        raise EmptyEdge(
            f"El campo {space_time_field.observable} es nulo en la ventana "
            f"[{window[0]:g}, {window[1]:g}]"
        )

    threshold = epsilon * peak
    t_grid = space_time_field.t_grid
    points = []
    for j in np.argsort(space_time_field.r_grid, kind="stable"):
        R = int(space_time_field.r_grid[j])
        if not window[0] <= R <= window[1]:
            continue
        column = magnitude[:, j]
        crossed = np.flatnonzero(column >= threshold)
        if crossed.size == 0:
            continue
        i = crossed[0]
        if i == 0:
            t_star = float(t_grid[0])
        else:
            fraction = (threshold - column[i - 1]) / (column[i] - column[i - 1])
            t_star = float(t_grid[i - 1] + fraction * (t_grid[i] - t_grid[i - 1]))
        if t_star > 0 and (not points or R > points[-1][0]):
            points.append((R, t_star))

    if len(points) < MIN_EDGE_POINTS:
        raise EmptyEdge(
            f"epsilon = {epsilon}: {len(points)} cruces en la ventana "
            f"[{window[0]:g}, {window[1]:g}], se necesitan {MIN_EDGE_POINTS}"
        )
    return points


@dataclass(frozen=True)
class EpsilonScan:
    fits: tuple
    beta_mean: float
    beta_spread: float

    @property
    def epsilon_list(self):
        return [fit.epsilon for fit in self.fits]

    def as_dict(self):
        return {
            "epsilon_list": self.epsilon_list,
            "fits": [fit.as_dict() for fit in self.fits],
            "beta_mean": self.beta_mean,
            "beta_spread": self.beta_spread,
        }


def epsilon_scan(space_time_field, eps_list, window=None):
    """
    Un ajuste por epsilon; la dispersión max(beta) - min(beta) es la
    incertidumbre sistemática. Los epsilon sin borde se descartan con aviso.
    """
    window = window or default_window(space_time_field)
    fits = []
    for epsilon in eps_list:
        try:
            points = edge_points(space_time_field, epsilon, window)
            fit = fit_power_law(points, window, epsilon=epsilon)
        except (EmptyEdge, InsufficientPoints) as exc:
            logger.warning("epsilon = %.4g descartado: %s", epsilon, "; ".join(exc.messages))
            continue
        try:
            fit = fit.with_velocity(fit_velocity(points, window))
        except InsufficientPoints:
            pass
        fits.append(fit)

    if not fits:
        raise EmptyEdge(
            f"Ningún epsilon de {list(eps_list)} produjo un borde ajustable"
        )
    betas = np.array([fit.beta for fit in fits])
    scan = EpsilonScan(
        fits=tuple(fits),
        beta_mean=float(betas.mean()),
        beta_spread=float(betas.max() - betas.min()),
    )
    logger.info(
        "Barrido en epsilon (%s): beta = %.4f, dispersión %.4f en %d ajustes",
        space_time_field.observable,
        scan.beta_mean,
        scan.beta_spread,
        len(fits),
    )
    return scan
