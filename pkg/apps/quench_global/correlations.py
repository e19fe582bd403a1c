"""
Correladores conexos después de un temple global, con S = sigma/2:

    G_j(R, t) = G_j^0(R, t) - G_j^0(R, 0)

Cada rebanada temporal es una suma sobre la grilla de momentos que se evalúa
con una FFT para todas las distancias a la vez.
"""

import logging

import numpy as np

from apps.core.exceptions import InvalidParameters
from apps.core.fields import SpaceTimeField
from apps.core.fourier import lattice_transform, select_distances, time_chunks
from apps.model_core.dispersion import revival_time
from apps.quench_global.quench import grid_weight

logger = logging.getLogger(__name__)


def validate_grids(r_grid, t_grid):
    r_grid = np.asarray(r_grid, dtype=np.int64)
    t_grid = np.asarray(t_grid, dtype=float)
    if r_grid.size == 0 or t_grid.size == 0:
        raise InvalidParameters("Las grillas de R y t no pueden estar vacías")
    if np.any(t_grid < 0) or not np.all(np.isfinite(t_grid)):
        raise InvalidParameters("Los tiempos deben ser finitos y no negativos")
    return r_grid, t_grid


def _field_meta(quench, t_grid, observable):
    table = quench.post_table
    t_rev = revival_time(table)
    meta = {
        "observable_definition": f"G_{observable[-1]}(R,t) = G^0(R,t) - G^0(R,0)",
        "spin_convention": "S = sigma/2",
        "t_revival": t_rev,
        **quench.as_dict(),
    }
    if quench.alpha >= 2 and t_grid.max() > t_rev:
        logger.warning(
            "t_max = %.4g supera el tiempo de reavivamiento %.4g (N = %d)",
            t_grid.max(),
            t_rev,
            quench.N,
        )
        meta["past_revival"] = True
    return meta


def gx_field(quench, r_grid, t_grid):
    """
    G_x(R, t) = (1/N) sum_k F(k) cos(kR) [1 - cos(2 E_k t)]

    F(k) sale de weight_fk en el camino j_quench y del desajuste de
    Bogoliubov en el genérico.
    """
    r_grid, t_grid = validate_grids(r_grid, t_grid)
    weight = grid_weight(quench)
    energy = quench.post_table.E
    logger.info(
        "G_x: N=%d alpha=%.3f, %d tiempos x %d distancias",
        quench.N,
        quench.alpha,
        t_grid.size,
        r_grid.size,
    )

    values = np.empty((t_grid.size, r_grid.size))
    for block in time_chunks(t_grid.size, quench.N):
        phase = 1.0 - np.cos(2.0 * np.outer(t_grid[block], energy))
        transformed = lattice_transform(weight * phase).real
        values[block] = select_distances(transformed, r_grid)

    return SpaceTimeField(
        "Gx", r_grid, t_grid, values, _field_meta(quench, t_grid, "Gx")
    )


def bogoliubov_pair_correlators(quench, t):
    """
    n_k(t) = <a_k^+ a_k> y m_k(t) = <a_k a_-k> evolucionados con el
    Hamiltoniano post-temple desde el vacío pre-temple.

    La evolución de Heisenberg del par (a_k, a_-k^+) es
    a_k(t) = [cos(Et) - i sin(Et) A/E] a_k - i sin(Et) (B/E) a_-k^+.
    """
    pre, post = quench.pre_table, quench.post_table
    n0 = pre.v**2
    m0 = -pre.B / (2.0 * pre.E)

    t = np.asarray(t, dtype=float)[:, None]
    cos_t = np.cos(post.E * t)
    sin_t = np.sin(post.E * t)
    alpha_k = cos_t - 1j * sin_t * post.A / post.E
    beta_k = -1j * sin_t * post.B / post.E

    n_k = (
        np.abs(alpha_k) ** 2 * n0
        + 2.0 * np.real(alpha_k * np.conj(beta_k)) * m0
        + np.abs(beta_k) ** 2 * (1.0 + n0)
    )
    m_k = (alpha_k**2 + beta_k**2) * m0 + alpha_k * beta_k * (1.0 + 2.0 * n0)
    return n_k, m_k


def _gz_static(quench, t_block):
    n_k, m_k = bogoliubov_pair_correlators(quench, t_block)
    n_r = lattice_transform(n_k).real
    m_r = lattice_transform(m_k)
    g0 = n_r**2 + np.abs(m_r) ** 2
    g0[:, 0] += n_r[:, 0]
    return g0


def gz_field(quench, r_grid, t_grid):
    """
    G_z por Wick sobre S^z = 1/2 - a^+ a:

        G_z^0(R) = n(R)^2 + |m(R)|^2 + delta_R0 n(0)

    con n(R), m(R) las transformadas de n_k(t), m_k(t).
    """
    r_grid, t_grid = validate_grids(r_grid, t_grid)
    logger.info(
        "G_z: N=%d alpha=%.3f, %d tiempos x %d distancias",
        quench.N,
        quench.alpha,
        t_grid.size,
        r_grid.size,
    )
    initial = select_distances(_gz_static(quench, np.zeros(1)), r_grid)[0]

    values = np.empty((t_grid.size, r_grid.size))
    for block in time_chunks(t_grid.size, quench.N):
        g0 = select_distances(_gz_static(quench, t_grid[block]), r_grid)
        values[block] = g0 - initial
    values[t_grid == 0] = 0.0

    return SpaceTimeField(
        "Gz", r_grid, t_grid, values, _field_meta(quench, t_grid, "Gz")
    )
