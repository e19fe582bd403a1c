"""
Campos espacio-temporales y su formato CSV.

Formato de archivo: líneas de comentario '#clave=valor' con la metadata,
luego el encabezado 'R,t,value' y las filas en orden t-mayor con 17 cifras
significativas, de modo que escribir y releer reproduce los datos bit a bit.
"""

import json
from dataclasses import dataclass, field, replace

import numpy as np

from apps.core.exceptions import InvalidField

OBSERVABLES = ("Gx", "Gz", "Sz_local", "lambda2")

CSV_HEADER = "R,t,value"


def renyi_tag(n):
    """Etiqueta del observable de Rényi de orden n"""
    return f"renyi({float(n):g})"


def is_valid_observable(tag):
    return tag in OBSERVABLES or (tag.startswith("renyi(") and tag.endswith(")"))


@dataclass(frozen=True, eq=False)
class SpaceTimeField:
    """Observable muestreado en una grilla (R, t); values tiene forma [t x R]"""

    observable: str
    r_grid: np.ndarray
    t_grid: np.ndarray
    values: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        r_grid = np.array(self.r_grid, dtype=np.int64)
        t_grid = np.array(self.t_grid, dtype=float)
        values = np.array(self.values, dtype=float)
        if not is_valid_observable(self.observable):
            raise InvalidField(f"Observable desconocido: {self.observable}")
        if values.shape != (t_grid.size, r_grid.size):
            raise InvalidField(
                f"Forma {values.shape} incompatible con grillas "
                f"({t_grid.size}, {r_grid.size})"
            )
        if not np.all(np.isfinite(values)):
            raise InvalidField(f"El campo {self.observable} tiene valores no finitos")
        for arr in (r_grid, t_grid, values):
            arr.setflags(write=False)
        object.__setattr__(self, "r_grid", r_grid)
        object.__setattr__(self, "t_grid", t_grid)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "meta", dict(self.meta))

    def with_values(self, values, **meta):
        """Copia con otros valores y metadata ampliada"""
        return replace(self, values=values, meta={**self.meta, **meta})

    def with_time_scale(self, factor, unit):
        """Copia con t multiplicado por factor (cambio de unidades de tiempo)"""
        return replace(
            self,
            t_grid=self.t_grid * factor,
            meta={**self.meta, "time_unit": unit},
        )


# ==========================================
# ENTRADA / SALIDA
# ==========================================


def _format_meta_value(value):
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, sort_keys=True)
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def write_field(space_time_field, path, config=None):
    """Escribe el campo en CSV; config se agrega como 'config.<clave>'"""
    rows_t = np.repeat(space_time_field.t_grid, space_time_field.r_grid.size)
    rows_r = np.tile(space_time_field.r_grid, space_time_field.t_grid.size)
    values = space_time_field.values.reshape(-1)

    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(f"#observable={space_time_field.observable}\n")
        for key, value in space_time_field.meta.items():
            handle.write(f"#{key}={_format_meta_value(value)}\n")
        for key, value in (config or {}).items():
            handle.write(f"#config.{key}={_format_meta_value(value)}\n")
        handle.write(CSV_HEADER + "\n")
        for R, t, value in zip(rows_r, rows_t, values):
            handle.write(f"{R:d},{t:.16e},{value:.16e}\n")


def read_field(path):
    """Lee un campo escrito por write_field; devuelve (campo, config)"""
    meta = {}
    header_lines = 0
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            header_lines += 1
            line = line.strip()
            if line.startswith("#"):
                key, _, value = line[1:].partition("=")
                meta[key.strip()] = value.strip()
            elif line == CSV_HEADER:
                break
            else:
                raise InvalidField(f"Encabezado CSV inválido en {path}: {line!r}")

    data = np.loadtxt(path, delimiter=",", skiprows=header_lines, ndmin=2)
    if data.size == 0:
        raise InvalidField(f"El archivo {path} no tiene filas")

    r_all = data[:, 0].astype(np.int64)
    t_all = data[:, 1]
    # Orden t-mayor: las R de la primera rebanada definen la grilla espacial
    n_r = int(np.argmax(t_all != t_all[0])) or t_all.size
    r_grid = r_all[:n_r]
    t_grid = t_all[::n_r]
    values = data[:, 2].reshape(t_grid.size, n_r)

    observable = meta.pop("observable", "")
    config = {
        key[len("config.") :]: value
        for key, value in meta.items()
        if key.startswith("config.")
    }
    meta = {key: value for key, value in meta.items() if not key.startswith("config.")}
    return SpaceTimeField(observable, r_grid, t_grid, values, meta), config


def write_table(path, columns, config=None):
    """Tabla de columnas con nombre (por ejemplo la dispersión) en CSV"""
    names = list(columns)
    data = np.column_stack([np.asarray(columns[name], dtype=float) for name in names])
    header = [f"#config.{key}={_format_meta_value(value)}" for key, value in (config or {}).items()]
    header.append(",".join(names))
    np.savetxt(path, data, delimiter=",", fmt="%.16e", header="\n".join(header), comments="")
