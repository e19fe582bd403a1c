"""
Forma asintótica de lambda_2 en el régimen cuasi-local, con el cos^2 de la
fase estacionaria reemplazado por su promedio:

    lambda_2(R, t) ~ t^(kappa/(2-z)) zeta(kappa, R) ~ (t/R)^(1/(1-z)) / (kappa - 1)

con kappa = (2 - z)/(1 - z). Sólo los cocientes tienen sentido asintótico;
el prefactor se informa aparte.
"""

import numpy as np

from apps.core.exceptions import InvalidParameters, RegimeViolation
from apps.quench_local.zeta import hurwitz_zeta

LEADING = "leading"
ZETA = "zeta"
FORMS = (LEADING, ZETA)


def _check_expansion(expansion):
    if not 0 < expansion.z < 1:
        raise RegimeViolation(
            f"z = {expansion.z}: la forma asintótica de lambda_2 exige 1 < alpha < 2"
        )


def lambda2_asymptotic(R, t, expansion, form=LEADING):
    """
    Forma sin normalizar de lambda_2.

    LEADING da (t/R)^(1/(1-z)) / (kappa - 1), el primer término de la serie
    de zeta(kappa, R) para R grande, de modo que el cociente con la forma ZETA
    tiende a 1.
    """
    _check_expansion(expansion)
    if form not in FORMS:
        raise InvalidParameters(f"Forma asintótica desconocida: {form}")
    R = np.asarray(R, dtype=float)
    t = np.asarray(t, dtype=float)
    z, kappa = expansion.z, expansion.kappa
    if form == LEADING:
        result = (t / R) ** (1.0 / (1.0 - z)) / (kappa - 1.0)
    else:
        result = t ** (kappa / (2.0 - z)) * hurwitz_zeta(kappa, R)
    return float(result) if np.ndim(result) == 0 else result


def lambda2_prefactor(expansion, norm_squared=1.0):
    """2 pi (cz)^kappa / |cz(z-1)|, multiplicado por N~^2"""
    _check_expansion(expansion)
    cz = expansion.c * expansion.z
    return float(
        norm_squared * 2.0 * np.pi * cz**expansion.kappa / abs(cz * (expansion.z - 1.0))
    )
