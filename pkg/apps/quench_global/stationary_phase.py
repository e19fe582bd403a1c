"""
Aproximación de fase estacionaria de G_x a lo largo de rayos R/t fijos.
"""

import numpy as np
from scipy.optimize import brentq

from apps.core.exceptions import NoStationaryPoint
from apps.model_core.dispersion import evaluate_dispersion
from apps.quench_global.quench import weight_at


def stationary_points(ratio, quench):
    """
    Momentos k < 0 con 2 V_g(k) = R/t.

    Los cambios de signo se ubican en la grilla y cada raíz se refina con
    brentq sobre la velocidad evaluada fuera de la grilla.
    """
    params = quench.post_params
    table = quench.post_table
    half = table.N // 2
    k = table.k[: half + 1]
    excess = 2.0 * table.vg[: half + 1] - ratio

    def target(q):
        return 2.0 * evaluate_dispersion(params, q).vg - ratio

    roots = []
    for i in np.flatnonzero(np.sign(excess[:-1]) * np.sign(excess[1:]) < 0):
        left, right = target(k[i]), target(k[i + 1])
        if left == 0:
            roots.append(float(k[i]))
        elif left * right < 0:
            roots.append(brentq(target, k[i], k[i + 1], xtol=1e-13))
    if not roots:
        raise NoStationaryPoint(
            f"R/t = {ratio:.4g} supera 2 max V_g = {2 * np.max(table.vg):.4g}"
        )
    return roots


def gx_stationary_phase(R, t, quench):
    """
    Parte oscilante de G_x para R, t grandes:

        -sum_sp F(k) / sqrt(4 pi t |E''(k)|) cos(kR - 2E(k)t - sign(E'') pi/4)
    """
    params = quench.post_params
    total = 0.0
    for k_sp in stationary_points(R / t, quench):
        point = evaluate_dispersion(params, k_sp)
        weight = weight_at(k_sp, quench)
        phase = k_sp * R - 2.0 * point.E * t - np.sign(point.curvature) * np.pi / 4
        total -= weight / np.sqrt(4.0 * np.pi * t * abs(point.curvature)) * np.cos(phase)
    return float(total)
