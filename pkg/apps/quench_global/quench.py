"""
Temple global: cambio súbito de (J, h) en toda la cadena partiendo del estado
fundamental pre-temple.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from apps.core.exceptions import InvalidParameters, StabilityViolation
from apps.model_core.dispersion import build_dispersion
from apps.model_core.kernel import kernel_palpha
from apps.model_core.params import ModelParams

J_QUENCH = "j_quench"
GENERIC_BOGOLIUBOV = "generic_bogoliubov"
PATHS = (J_QUENCH, GENERIC_BOGOLIUBOV)


@dataclass(frozen=True)
class GlobalQuench:
    J_i: float
    h_i: float
    J_f: float
    h_f: float
    alpha: float
    N: int
    kernel_mode: str = "finite_ring"
    path: str = GENERIC_BOGOLIUBOV

    def __post_init__(self):
        self.clean()

    def clean(self):
        if self.path not in PATHS:
            raise InvalidParameters(f"Camino de temple desconocido: {self.path}")
        if self.path == J_QUENCH and self.h_i != self.h_f:
            raise InvalidParameters(
                "El peso F(k) de temple en J exige h_i = h_f "
                f"(h_i = {self.h_i}, h_f = {self.h_f})"
            )
        # Valida ambos lados con las reglas de ModelParams
        self.pre_params
        self.post_params

    @cached_property
    def pre_params(self):
        return ModelParams(
            J=self.J_i, h=self.h_i, alpha=self.alpha, N=self.N, kernel_mode=self.kernel_mode
        )

    @cached_property
    def post_params(self):
        return ModelParams(
            J=self.J_f, h=self.h_f, alpha=self.alpha, N=self.N, kernel_mode=self.kernel_mode
        )

    @cached_property
    def pre_table(self):
        return build_dispersion(self.pre_params)

    @cached_property
    def post_table(self):
        return build_dispersion(self.post_params)

    @property
    def is_null(self):
        return self.J_i == self.J_f and self.h_i == self.h_f

    def as_dict(self):
        return {
            "J_i": self.J_i,
            "h_i": self.h_i,
            "J_f": self.J_f,
            "h_f": self.h_f,
            "alpha": self.alpha,
            "N": self.N,
            "kernel_mode": self.kernel_mode,
            "path": self.path,
        }


def _j_quench_weight(p_alpha, quench):
    h, J_i, J_f = quench.h_f, quench.J_i, quench.J_f
    denominator = 8.0 * (h + J_f * p_alpha) * np.sqrt(h * (h + J_i * p_alpha))
    if np.any(denominator == 0):
        raise StabilityViolation("h + J P(k) = 0: el peso F(k) no está definido")
    return h * (J_i - J_f) * p_alpha / denominator


def weight_fk(k, quench):
    """
    Peso F(k) del temple en J,

        F(k) = h (J_i - J_f) P(k) / (8 [h + J_f P(k)] sqrt(h [h + J_i P(k)]))
    """
    if quench.path != J_QUENCH:
        raise InvalidParameters("weight_fk sólo aplica al camino j_quench")
    # Valida la estabilidad de ambos espectros
    quench.pre_table
    quench.post_table
    p_alpha = kernel_palpha(k, quench.alpha, quench.kernel_mode, quench.N)
    return _j_quench_weight(p_alpha, quench)


def generic_weight(quench):
    """
    Peso sobre la grilla a partir del desajuste de Bogoliubov pre/post.

    Con rho_k = (u_k - v_k)^2 = 2h/E_k, F(k) = (rho_f^2/rho_i - rho_i) / 8; en
    un temple de J coincide con weight_fk.
    """
    rho_i = quench.pre_table.rho
    rho_f = quench.post_table.rho
    return (rho_f**2 / rho_i - rho_i) / 8.0


def grid_weight(quench):
    """Peso F(k) en la grilla según el camino del temple"""
    if quench.path == J_QUENCH:
        quench.pre_table
        return _j_quench_weight(quench.post_table.p_alpha, quench)
    return generic_weight(quench)


def weight_at(k, quench):
    """F(k) en momentos arbitrarios para cualquiera de los dos caminos"""
    if quench.path == J_QUENCH:
        return weight_fk(k, quench)
    p_alpha = kernel_palpha(k, quench.alpha, quench.kernel_mode, quench.N)
    rho_i = np.sqrt(quench.h_i / (quench.h_i + quench.J_i * p_alpha))
    rho_f = np.sqrt(quench.h_f / (quench.h_f + quench.J_f * p_alpha))
    return (rho_f**2 / rho_i - rho_i) / 8.0
