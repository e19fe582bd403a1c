"""
Perfil de magnetización después de invertir el espín central:

    1/2 - <S^z_R(t)> = N~^2 N [ |(1/N) sum_k F1 e^{iE t} cos kR|^2
                               + |(1/N) sum_k F2 e^{iE t} cos kR|^2 ]

con F1 = u_k^2, F2 = -u_k v_k. La depleción uniforme del vacío,
(1/N) sum_k v_k^2, no se incluye.
"""

import logging

import numpy as np

from apps.core.fields import SpaceTimeField
from apps.core.fourier import lattice_transform, select_distances, time_chunks
from apps.quench_global.correlations import validate_grids
from apps.quench_local.state import LocalQuenchState

logger = logging.getLogger(__name__)


def magnetization_amplitudes(state):
    u, v = state.table.u, state.table.v
    return u**2, -u * v


def magnetization_field(params, r_grid, t_grid, include_f2=True):
    """1/2 - <S^z_R(t)>; include_f2=False reproduce la aproximación sin F2"""
    r_grid, t_grid = validate_grids(r_grid, t_grid)
    state = LocalQuenchState.from_params(params)
    f1, f2 = magnetization_amplitudes(state)
    energy = state.table.E
    scale = state.norm_squared * params.N
    logger.info(
        "Magnetización local: N=%d alpha=%.3f h=%.4g, %d tiempos",
        params.N,
        params.alpha,
        params.h,
        t_grid.size,
    )

    values = np.empty((t_grid.size, r_grid.size))
    for block in time_chunks(t_grid.size, params.N):
        evolution = np.exp(1j * np.outer(t_grid[block], energy))
        density = np.abs(lattice_transform(f1 * evolution)) ** 2
        if include_f2:
            density += np.abs(lattice_transform(f2 * evolution)) ** 2
        values[block] = scale * select_distances(density, r_grid)

    meta = {
        **params.as_dict(),
        "include_f2": include_f2,
        "normalization": "N~^2 = 1/sum_k u_k^2; sin depleción uniforme del vacío",
    }
    return SpaceTimeField("Sz_local", r_grid, t_grid, values, meta)
