"""Estado inicial del temple local: un espín invertido en el sitio 0 del vacío"""

from dataclasses import dataclass

import numpy as np

from apps.model_core.dispersion import build_dispersion


@dataclass(frozen=True, eq=False)
class LocalQuenchState:
    params: object
    table: object
    u: np.ndarray
    norm: float
    flip_site: int = 0

    @classmethod
    def from_params(cls, params):
        table = build_dispersion(params)
        u = table.u
        return cls(params=params, table=table, u=u, norm=float(np.sum(u**2) ** -0.5))

    @property
    def norm_squared(self):
        """Normalización N~^2 = 1 / sum_k u_k^2"""
        return self.norm**2
