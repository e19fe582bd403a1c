"""
Núcleo de Fourier del término de largo alcance,

    P_alpha(k) = sum_{r != 0} exp(ikr) / |r|^alpha = 2 sum_{r>=1} cos(kr) / r^alpha,

y sus derivadas en k, obtenidas derivando la serie término a término.

Todas se expresan con la serie compleja S_s(k) = sum_r c_r exp(ikr) r^(-s):
P = 2 Re S_alpha, dP/dk = -2 Im S_(alpha-1), d2P/dk2 = -2 Re S_(alpha-2).
En el anillo finito r recorre las distancias de imagen mínima 1..N/2 con
c_(N/2) = 1/2; en la cadena infinita la serie se trunca (M = 1e6/alpha en la
grilla y en k = 0) y se agrega la cola analítica (Euler-Maclaurin en k = 0,
transformación de Euler en k != 0, que además da la suma de Abel cuando la
serie diverge).
"""

import logging

import numpy as np
from scipy.special import poch

from apps.core.exceptions import InvalidParameters
from apps.core.fourier import folded_momentum_sum, momentum_grid

logger = logging.getLogger(__name__)

TRUNCATION_SCALE = 1.0e6
MIN_TRUNCATION = 2000
MAX_TRUNCATION = 20_000_000
EULER_TERMS = 60
CHUNK_ELEMENTS = 1 << 22
TWO_PI = 2.0 * np.pi

# Orden de derivada -> (corrimiento del exponente, parte usada, signo)
DERIVATIVES = {
    0: (0, "real", 2.0),
    1: (1, "imag", -2.0),
    2: (2, "real", -2.0),
}


def _validate(alpha, mode, N):
    if not np.isfinite(alpha) or alpha <= 1:
        raise InvalidParameters(f"alpha = {alpha}: la serie diverge en k = 0")
    if mode == "finite_ring":
        if N is None or N < 4 or N % 2:
            raise InvalidParameters(f"El anillo finito necesita N par >= 4 (N = {N})")
    elif mode != "infinite_chain":
        raise InvalidParameters(f"Modo de núcleo desconocido: {mode}")


def truncation(alpha):
    """Corte M de la suma directa en la cadena infinita"""
    return int(TRUNCATION_SCALE / alpha)


def _effective_truncation(s, k_nonzero, minimum):
    # La transformación de Euler converge cuando M|k| >> s
    M = minimum
    if k_nonzero.size:
        needed = int(np.ceil(40.0 * (abs(s) + 2.0) / np.min(np.abs(k_nonzero))))
        if needed > MAX_TRUNCATION:
            logger.warning(
                "k = %.3e demasiado cercano a 0; corte limitado a %d",
                np.min(np.abs(k_nonzero)),
                MAX_TRUNCATION,
            )
        M = max(M, min(needed, MAX_TRUNCATION))
    return M


def _series_weights(s, r_max, half_last):
    r = np.arange(1, r_max + 1, dtype=float)
    weights = r ** (-s)
    if half_last:
        weights[-1] *= 0.5
    return r, weights


def _direct_sum(k, s, r_max, half_last=False):
    """sum_{r=1}^{r_max} c_r exp(ikr) r^(-s) en momentos arbitrarios"""
    r, weights = _series_weights(s, r_max, half_last)
    out = np.zeros(k.shape, dtype=complex)
    chunk = max(1024, CHUNK_ELEMENTS // max(k.size, 1))
    for start in range(0, r.size, chunk):
        stop = start + chunk
        phase = np.exp(1j * np.mod(np.multiply.outer(k, r[start:stop]), TWO_PI))
        out += phase @ weights[start:stop]
    return out


def _euler_maclaurin_tail(s, M):
    """sum_{r>=M} r^(-s) para s > 1"""
    if s <= 1:
        return np.nan
    return (
        M ** (1 - s) / (s - 1)
        + 0.5 * M ** (-s)
        + s * M ** (-s - 1) / 12.0
        - s * (s + 1) * (s + 2) * M ** (-s - 3) / 720.0
    )


def _euler_tail(k, s, M):
    """
    sum_{r>=M} exp(ikr) r^(-s) para k != 0 por transformación de Euler.

    Las diferencias finitas de r^(-s) se toman de sus derivadas en el punto
    medio del intervalo (con la primera corrección), lo que evita la
    cancelación numérica.
    """
    ratio = 1.0 / (1.0 - np.exp(1j * k))
    total = np.zeros(k.shape, dtype=complex)
    power = ratio.copy()
    for j in range(EULER_TERMS):
        x = M + 0.5 * j
        difference = (-1.0) ** j * (
            poch(s, j) * x ** (-s - j) + j / 24.0 * poch(s, j + 2) * x ** (-s - j - 2)
        )
        phase = np.exp(1j * np.mod(k * (M + j), TWO_PI))
        term = phase * difference * power
        total += term
        if np.all(np.abs(term) <= 1e-17 * np.abs(total) + 1e-300):
            break
        power = power * ratio
    return total


def _infinite_series(k, s, alpha):
    """
    S_s(k) de la cadena infinita en momentos arbitrarios.

    En k = 0 se suma hasta M = 1e6/alpha y se agrega la cola de
    Euler-Maclaurin; en k != 0 alcanza con M|k| acotado, lo que mantiene
    chico el error de fase de la suma directa.
    """
    out = np.zeros(k.shape, dtype=complex)
    at_zero = k == 0
    if np.any(at_zero):
        M = truncation(alpha)
        _, weights = _series_weights(s, M - 1, half_last=False)
        out[at_zero] = np.sum(weights) + _euler_maclaurin_tail(s, M)
    k_nonzero = k[~at_zero]
    if k_nonzero.size:
        M = _effective_truncation(s, k_nonzero, minimum=MIN_TRUNCATION)
        out[~at_zero] = _direct_sum(k_nonzero, s, M - 1) + _euler_tail(k_nonzero, s, M)
    return out


def _evaluate(k, alpha, mode, N, order):
    _validate(alpha, mode, N)
    k_arr = np.asarray(k, dtype=float)
    if not np.all(np.isfinite(k_arr)):
        raise InvalidParameters("El cuasi-momento k debe ser finito")
    flat = np.atleast_1d(k_arr).ravel()
    shift, part, factor = DERIVATIVES[order]
    s = alpha - shift
    if mode == "finite_ring":
        series = _direct_sum(flat, s, N // 2, half_last=True)
    else:
        series = _infinite_series(flat, s, alpha)
    values = factor * (series.real if part == "real" else series.imag)
    if order == 1:
        values[flat == 0] = 0.0
    values = values.reshape(k_arr.shape)
    return float(values) if values.ndim == 0 else values


def kernel_palpha(k, alpha, mode="finite_ring", N=None):
    """P_alpha(k) en momentos arbitrarios (escalar o arreglo)"""
    return _evaluate(k, alpha, mode, N, order=0)


def kernel_derivative(k, alpha, mode="finite_ring", N=None):
    """dP_alpha/dk por la serie derivada término a término"""
    return _evaluate(k, alpha, mode, N, order=1)


def kernel_curvature(k, alpha, mode="finite_ring", N=None):
    """d2P_alpha/dk2; diverge en k = 0 si alpha <= 3 (devuelve nan)"""
    return _evaluate(k, alpha, mode, N, order=2)


def kernel_on_grid(alpha, mode, N, order=0):
    """
    P_alpha o sus derivadas sobre toda la grilla k_n = -pi + 2*pi*n/N.

    La suma directa se pliega módulo N y se evalúa con una FFT; el resultado
    se simetriza para que la paridad en k sea exacta.
    """
    _validate(alpha, mode, N)
    if N is None or N < 4 or N % 2:
        raise InvalidParameters(f"La grilla necesita N par >= 4 (N = {N})")
    shift, part, factor = DERIVATIVES[order]
    s = alpha - shift
    k = momentum_grid(N)

    if mode == "finite_ring":
        r, weights = _series_weights(s, N // 2, half_last=True)
        series = folded_momentum_sum(r.astype(np.int64), weights, N)
    else:
        at_zero = np.isclose(k, 0.0, atol=1e-14)
        k[at_zero] = 0.0
        M = _effective_truncation(s, k[~at_zero], minimum=truncation(alpha))
        r, weights = _series_weights(s, M - 1, half_last=False)
        series = folded_momentum_sum(r.astype(np.int64), weights, N)
        series[at_zero] += _euler_maclaurin_tail(s, M)
        series[~at_zero] += _euler_tail(k[~at_zero], s, M)

    values = factor * (series.real if part == "real" else series.imag)
    mirror = values[(-np.arange(N)) % N]
    if order == 1:
        values = 0.5 * (values - mirror)
    else:
        values = 0.5 * (values + mirror)
    return values
