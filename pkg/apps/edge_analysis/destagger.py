"""
Estructura de tablero de ajedrez: G_x alterna de signo entre R pares e
impares. Los bordes y crestas se buscan sobre |f| o sobre la subred par.

Sólo G_x tiene esa estructura; los demás observables se analizan tal cual.
"""

from dataclasses import dataclass, replace

import numpy as np

from apps.core.exceptions import ObservableMismatch

STAGGERED_OBSERVABLES = ("Gx",)


@dataclass(frozen=True)
class DestaggeredField:
    magnitude: object
    even: object


def destagger(space_time_field):
    if space_time_field.observable not in STAGGERED_OBSERVABLES:
        raise ObservableMismatch(
            f"El desescalonado sólo aplica a {', '.join(STAGGERED_OBSERVABLES)}; "
            f"el campo es {space_time_field.observable}"
        )
    even_columns = space_time_field.r_grid % 2 == 0
    magnitude = space_time_field.with_values(
        np.abs(space_time_field.values), destagger="abs"
    )
    even = replace(
        space_time_field,
        r_grid=space_time_field.r_grid[even_columns],
        values=space_time_field.values[:, even_columns],
        meta={**space_time_field.meta, "destagger": "even_sublattice"},
    )
    return DestaggeredField(magnitude=magnitude, even=even)
