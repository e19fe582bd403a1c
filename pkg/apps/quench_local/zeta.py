"""
Función zeta de Hurwitz zeta(s, q) = sum_{m>=0} (m + q)^(-s).

Suma directa de los primeros términos y cola de Euler-Maclaurin con números
de Bernoulli B_2j a partir de x = q + DIRECT_TERMS.
"""

import numpy as np
from scipy.special import bernoulli, factorial, poch

from apps.core.exceptions import DomainError

DIRECT_TERMS = 16
BERNOULLI_TERMS = 10

_B2J = bernoulli(2 * BERNOULLI_TERMS)[2::2]
_J = np.arange(1, BERNOULLI_TERMS + 1)


def hurwitz_zeta(s, q):
    """zeta(s, q) para s > 1 y q > 0; q puede ser un arreglo"""
    q = np.asarray(q, dtype=float)
    if not np.isfinite(s) or s <= 1:
        raise DomainError(f"zeta(s, q) exige s > 1 (s = {s})")
    if np.any(q <= 0) or not np.all(np.isfinite(q)):
        raise DomainError("zeta(s, q) exige q > 0")

    m = np.arange(DIRECT_TERMS)
    direct = np.sum((q[..., None] + m) ** (-s), axis=-1)

    x = q + DIRECT_TERMS
    tail = x ** (1.0 - s) / (s - 1.0) + 0.5 * x ** (-s)
    coeffs = _B2J / factorial(2 * _J) * poch(s, 2 * _J - 1)
    tail = tail + np.sum(
        coeffs * x[..., None] ** (-s - 2 * _J + 1), axis=-1
    )

    result = direct + tail
    return float(result) if result.ndim == 0 else result
