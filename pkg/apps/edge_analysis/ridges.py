"""
Crestas de máximos: trayectorias (R, t_max) de los máximos locales en t de
|f(R, t)| enlazadas entre R vecinas.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.signal import find_peaks

from apps.core.exceptions import InsufficientPoints, NoRidges
from apps.edge_analysis.fits import fit_power_law, fit_velocity

logger = logging.getLogger(__name__)

NOISE_FLOOR = 1e-4
MAX_JUMP = 3
MIN_RIDGE_LENGTH = 8


@dataclass(frozen=True)
class Ridge:
    """points es un arreglo [n x 3] con columnas R, t_max, valor"""

    points: np.ndarray
    power_fit: object = None
    velocity_fit: object = None

    def __len__(self):
        return self.points.shape[0]

    def as_dict(self):
        data = {"points": self.points.tolist()}
        if self.power_fit is not None:
            data["power_fit"] = self.power_fit.as_dict()
        if self.velocity_fit is not None:
            data["velocity_fit"] = self.velocity_fit.as_dict()
        return data


@dataclass(frozen=True)
class RidgeSet:
    ridges: tuple

    def __len__(self):
        return len(self.ridges)

    def betas(self):
        return [r.power_fit.beta for r in self.ridges if r.power_fit is not None]

    def velocities(self):
        return [r.velocity_fit.velocity for r in self.ridges if r.velocity_fit is not None]

    def as_dict(self):
        return {"ridges": [ridge.as_dict() for ridge in self.ridges]}


def _strict_maxima(column, height):
    peaks, _ = find_peaks(column, height=height)
    strict = (column[peaks] > column[peaks - 1]) & (column[peaks] > column[peaks + 1])
    return peaks[strict]


def _predicted_index(track):
    if len(track) < 2:
        return track[-1][1]
    return 2 * track[-1][1] - track[-2][1]


def _link(columns, max_jump):
    """
    Enlaza los máximos de columnas consecutivas.

    Cada trayectoria abierta extrapola su próximo índice de tiempo y toma el
    máximo libre más cercano a distancia <= max_jump; los empates van al
    tiempo menor. Los máximos sin dueño abren trayectorias nuevas.
    """
    open_tracks, closed = [], []
    for column, peaks in columns:
        free = set(peaks.tolist())
        survivors = []
        for track in sorted(open_tracks, key=lambda tr: (_predicted_index(tr), tr[0][1])):
            target = _predicted_index(track)
            candidates = sorted(free, key=lambda i: (abs(i - target), i))
            if candidates and abs(candidates[0] - target) <= max_jump:
                free.remove(candidates[0])
                track.append((column, candidates[0]))
                survivors.append(track)
            else:
                closed.append(track)
        survivors.extend([[(column, i)] for i in sorted(free)])
        open_tracks = survivors
    return closed + open_tracks


def _try_fit(fit, points):
    try:
        return fit(points)
    except InsufficientPoints as exc:
        logger.debug("Cresta sin ajuste %s: %s", fit.__name__, "; ".join(exc.messages))
        return None


def _fit_ridge(points):
    positive = points[(points[:, 0] > 0) & (points[:, 1] > 0), :2]
    # Una cresta a t constante no define velocidad ni una ley t(R) útil
    if positive.shape[0] and np.ptp(positive[:, 1]) == 0:
        return None, None
    return _try_fit(fit_power_law, positive), _try_fit(fit_velocity, positive)


def extrema_ridges(
    space_time_field,
    noise_floor=NOISE_FLOOR,
    max_jump=MAX_JUMP,
    min_length=MIN_RIDGE_LENGTH,
    window=None,
):
    """Crestas de |f| con máximos sobre noise_floor * max|f| y al menos min_length puntos"""
    magnitude = np.abs(space_time_field.values)
    peak = float(magnitude.max())
    if peak == 0:
        raise NoRidges(f"El campo {space_time_field.observable} es idénticamente nulo")

    r_grid, t_grid = space_time_field.r_grid, space_time_field.t_grid
    columns = []
    for j in np.argsort(r_grid, kind="stable"):
        if window is not None and not window[0] <= r_grid[j] <= window[1]:
            continue
        columns.append((j, _strict_maxima(magnitude[:, j], noise_floor * peak)))

    ridges = []
    for track in _link(columns, max_jump):
        if len(track) < min_length:
            continue
        points = np.array(
            [(r_grid[j], t_grid[i], space_time_field.values[i, j]) for j, i in track]
        )
        power, velocity = _fit_ridge(points)
        ridges.append(Ridge(points=points, power_fit=power, velocity_fit=velocity))

    if not ridges:
        raise NoRidges(
            f"Ninguna cresta de {space_time_field.observable} alcanza {min_length} puntos"
        )
    ridges.sort(key=lambda ridge: (ridge.points[0, 0], ridge.points[0, 1]))
    logger.info(
        "Crestas de %s: %d trayectorias, betas %s",
        space_time_field.observable,
        len(ridges),
        [round(beta, 4) for beta in RidgeSet(tuple(ridges)).betas()],
    )
    return RidgeSet(ridges=tuple(ridges))
