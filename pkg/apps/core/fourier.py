"""
Sumas de momento sobre la grilla k_n = -pi + 2*pi*n/N por FFT.

Con esa grilla, (1/N) sum_n f(k_n) exp(i k_n R) = (-1)^R * ifft(f)[R], de modo
que una sola transformada entrega todas las distancias R = 0..N-1 a la vez.
"""

import numpy as np
from scipy import fft
from django.conf import settings

# Máximo de elementos complejos por bloque de tiempos
CHUNK_ELEMENTS = 1 << 22


def momentum_grid(N):
    """Grilla de cuasi-momentos k_n = -pi + 2*pi*n/N"""
    return np.pi * (2.0 * np.arange(N) - N) / N


def _workers():
    return max(1, int(getattr(settings, "LRTI_WORKERS", 1)))


def _stagger(N):
    return np.where(np.arange(N) % 2 == 0, 1.0, -1.0)


def lattice_transform(values):
    """
    (1/N) sum_k f(k) exp(ikR) para todas las R del anillo.

    Transforma sobre el último eje, así que acepta lotes [..., N] (por ejemplo
    una fila por tiempo).
    """
    values = np.asarray(values)
    N = values.shape[-1]
    return _stagger(N) * fft.ifft(values, axis=-1, workers=_workers())


def folded_momentum_sum(r, weights, N):
    """
    sum_r w_r exp(i k_n r) sobre la grilla, para distancias r arbitrarias.

    Las distancias se pliegan módulo N (exp(i k_n N) = (-1)^N = 1 con N par)
    y el resultado sale de una sola FFT.
    """
    r = np.asarray(r, dtype=np.int64)
    sign = np.where(r % 2 == 0, 1.0, -1.0)
    folded = np.bincount(r % N, weights=sign * np.real(weights), minlength=N)
    if np.iscomplexobj(weights):
        folded = folded + 1j * np.bincount(
            r % N, weights=sign * np.imag(weights), minlength=N
        )
    return N * fft.ifft(folded, workers=_workers())


def time_chunks(n_times, N):
    """Rebanadas de tiempos que mantienen acotada la memoria de cada bloque"""
    size = max(1, CHUNK_ELEMENTS // max(N, 1))
    for start in range(0, n_times, size):
        yield slice(start, min(start + size, n_times))


def select_distances(transformed, r_grid):
    """Columnas de las distancias pedidas (R tomada módulo N)"""
    N = transformed.shape[-1]
    return transformed[..., np.asarray(r_grid, dtype=np.int64) % N]
