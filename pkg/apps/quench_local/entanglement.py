"""
Entrelazamiento del bloque A = [R, ..., N/2] tras el temple local.

El estado evolucionado tiene una sola excitación, así que rho_A tiene rango
dos y sus autovalores son lambda_2 (la excitación está en A) y 1 - lambda_2.
"""

import logging
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.special import entr

from apps.core.exceptions import CutOutOfRange, InvalidParameters
from apps.core.fields import SpaceTimeField, renyi_tag
from apps.core.fourier import lattice_transform, time_chunks
from apps.quench_global.correlations import validate_grids
from apps.quench_local.state import LocalQuenchState

logger = logging.getLogger(__name__)

DEFAULT_ORDERS = (0.5, 1.0, 2.0, 3.0)


@dataclass(frozen=True)
class EntanglementSpectrum:
    lambda1: float
    lambda2: float
    cut: int
    renyi: dict = field(default_factory=dict)


def _validate_cuts(r_grid, N):
    outside = r_grid[(r_grid < 1) | (r_grid > N // 2)]
    if outside.size:
        raise CutOutOfRange(
            f"Cortes fuera de [1, {N // 2}]: {outside[:5].tolist()}"
        )


def _validate_order(n):
    if not np.isfinite(n) or n <= 0:
        raise InvalidParameters(f"Orden de Rényi inválido: {n}")


def lambda2_field(params, r_grid, t_grid, approx_uk=False):
    """
    lambda_2(R, t) = N~^2 sum_{m=R}^{N/2} |psi_m(t)|^2

    psi_m sale de una transformada por rebanada temporal y la suma sobre m se
    hace con sumas acumuladas desde m = N/2 hacia atrás. Con approx_uk se
    usa w_k = 1 en lugar de u_k.
    """
    r_grid, t_grid = validate_grids(r_grid, t_grid)
    N = params.N
    _validate_cuts(r_grid, N)
    state = LocalQuenchState.from_params(params)
    weight = np.ones(N) if approx_uk else state.u
    scale = N / np.sum(weight**2)
    energy = state.table.E
    half = N // 2
    logger.info(
        "lambda_2: N=%d alpha=%.3f h=%.4g approx_uk=%s, %d tiempos",
        N,
        params.alpha,
        params.h,
        approx_uk,
        t_grid.size,
    )

    values = np.empty((t_grid.size, r_grid.size))
    for block in time_chunks(t_grid.size, N):
        psi = lattice_transform(weight * np.exp(1j * np.outer(t_grid[block], energy)))
        density = np.abs(psi[:, : half + 1]) ** 2
        suffix = np.cumsum(density[:, ::-1], axis=1)[:, ::-1]
        values[block] = scale * suffix[:, r_grid]

    meta = {
        **params.as_dict(),
        "approx_uk": approx_uk,
        "block": "A = [R, N/2], excitación inicial en el sitio 0",
    }
    return SpaceTimeField("lambda2", r_grid, t_grid, np.clip(values, 0.0, 1.0), meta)


def renyi_from_spectrum(eigenvalues, n, axis=0):
    """S_n = log(sum lambda^n) / (1 - n); en n = 1, -sum lambda log lambda con 0 log 0 = 0"""
    _validate_order(n)
    eigenvalues = np.clip(np.asarray(eigenvalues, dtype=float), 0.0, 1.0)
    if n == 1:
        return np.sum(entr(eigenvalues), axis=axis)
    return np.log(np.sum(eigenvalues**n, axis=axis)) / (1.0 - n)


def renyi_entropy(lambda2, n):
    """S_n del espectro de rango dos (1 - lambda_2, lambda_2)"""
    lambda2 = np.clip(np.asarray(lambda2, dtype=float), 0.0, 1.0)
    return renyi_from_spectrum(np.stack([1.0 - lambda2, lambda2]), n)


def renyi_field(n, params, r_grid, t_grid, approx_uk=False):
    _validate_order(n)
    lambdas = lambda2_field(params, r_grid, t_grid, approx_uk=approx_uk)
    return replace(
        lambdas,
        observable=renyi_tag(n),
        values=renyi_entropy(lambdas.values, n),
        meta={**lambdas.meta, "renyi_order": float(n)},
    )


def entanglement_spectrum(params, R, t, orders=DEFAULT_ORDERS, approx_uk=False):
    lambda2 = float(lambda2_field(params, [R], [t], approx_uk=approx_uk).values[0, 0])
    return EntanglementSpectrum(
        lambda1=1.0 - lambda2,
        lambda2=lambda2,
        cut=int(R),
        renyi={float(n): float(renyi_entropy(lambda2, n)) for n in orders},
    )
