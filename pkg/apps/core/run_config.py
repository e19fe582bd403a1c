"""
Configuración de una corrida.

Las claves son punteadas (model.alpha, grid.dt, ...). Un archivo de texto
'clave = valor' se lee con decouple.RepositoryEnv y las banderas de la línea
de comandos tienen precedencia sobre él. La conversión de tipos la hace
decouple.Config.
"""

from pathlib import Path

import numpy as np
from decouple import Config, Csv, RepositoryEmpty, RepositoryEnv
from django.conf import settings

from apps.core.exceptions import (
    InvalidConfigValue,
    MissingConfigValue,
    UnknownConfigKey,
)
from apps.model_core.params import ModelParams
from apps.quench_global.quench import GENERIC_BOGOLIUBOV, GlobalQuench

DEFAULT_EPSILON_POINTS = 13

# clave -> (conversión, valor por defecto)
KEYS = {
    "model.alpha": (float, None),
    "model.J": (float, 1.0),
    "model.h": (float, None),
    "model.h_over_J": (float, None),
    "model.N": (int, 256),
    "model.kernel_mode": (str, "finite_ring"),
    "model.boundary": (str, "periodic"),
    "quench.J_i": (float, None),
    "quench.h_i": (float, None),
    "quench.J_f": (float, None),
    "quench.h_f": (float, None),
    "quench.path": (str, GENERIC_BOGOLIUBOV),
    "quench.observable": (str, "Gz"),
    "quench.include_f2": (bool, True),
    "grid.t_max": (float, 10.0),
    "grid.dt": (float, 0.1),
    "grid.r_min": (int, None),
    "grid.r_max": (int, None),
    "analysis.mode": (str, "edge"),
    "analysis.epsilon": (str, "0.01:0.12"),
    "analysis.window_min": (float, None),
    "analysis.window_max": (float, None),
    "analysis.destagger": (str, "none"),
    "entanglement.orders": (Csv(cast=float), [1.0]),
    "entanglement.approx_uk": (bool, False),
    "oracle.kind": (str, "global"),
    "oracle.method": (str, "auto"),
    "output.path": (str, None),
    "input.path": (str, None),
}

# Banderas cortas de la línea de comandos
ALIASES = {
    "model.alpha": ["--alpha"],
    "model.N": ["--N"],
    "model.h_over_J": ["--h-over-J"],
    "grid.t_max": ["--tmax"],
    "grid.dt": ["--dt"],
    "analysis.epsilon": ["--eps"],
    "output.path": ["--output"],
    "input.path": ["--input"],
}


class FlagRepository(RepositoryEmpty):
    """Repositorio de decouple sobre un diccionario ya leído"""

    def __init__(self, data):
        self.data = dict(data)

    def __contains__(self, key):
        return key in self.data

    def __getitem__(self, key):
        return self.data[key]


def parse_epsilon_list(text):
    """'a:b' (13 valores), 'a:b:n' o lista separada por comas"""
    text = str(text).strip()
    try:
        if ":" in text:
            parts = text.split(":")
            if len(parts) not in (2, 3):
                raise ValueError(text)
            count = int(parts[2]) if len(parts) == 3 else DEFAULT_EPSILON_POINTS
            values = np.linspace(float(parts[0]), float(parts[1]), count)
        else:
            values = np.array([float(part) for part in text.split(",") if part.strip()])
    except ValueError as exc:
        raise InvalidConfigValue(f"Rango de epsilon ilegible: {text!r}") from exc
    if values.size == 0 or np.any((values <= 0) | (values >= 1)):
        raise InvalidConfigValue(f"Los epsilon deben estar en (0, 1): {text!r}")
    return [float(value) for value in values]


class RunConfig:
    def __init__(self, file_values=None, flag_values=None):
        file_values = dict(file_values or {})
        unknown = sorted(set(file_values) - set(KEYS))
        if unknown:
            raise UnknownConfigKey(f"Claves desconocidas: {', '.join(unknown)}")
        flags = {key: str(value) for key, value in (flag_values or {}).items() if value is not None}
        unknown = sorted(set(flags) - set(KEYS))
        if unknown:
            raise UnknownConfigKey(f"Claves desconocidas: {', '.join(unknown)}")

        repository = FlagRepository({**file_values, **flags})
        reader = Config(repository)
        self.values = {}
        for key, (cast, default) in KEYS.items():
            if key not in repository:
                self.values[key] = default
                continue
            try:
                self.values[key] = reader.get(key, cast=cast)
            except (TypeError, ValueError) as exc:
                raise InvalidConfigValue(
                    f"{key} = {repository[key]!r} no es un valor válido"
                ) from exc

    @classmethod
    def load(cls, path=None, flags=None):
        file_values = {}
        if path:
            path = Path(path)
            if not path.is_file():
                raise InvalidConfigValue(f"No existe el archivo de configuración {path}")
            file_values = RepositoryEnv(str(path)).data
        return cls(file_values, flags)

    def get(self, key):
        return self.values[key]

    def require(self, key):
        value = self.values[key]
        if value is None:
            raise MissingConfigValue(f"Falta el valor de {key}")
        return value

    def as_dict(self):
        return {key: value for key, value in self.values.items() if value is not None}

    # ==========================================
    # OBJETOS DEL MODELO
    # ==========================================

    def _field(self, J):
        if self.values["model.h_over_J"] is not None:
            return self.values["model.h_over_J"] * J
        return self.require("model.h")

    def model_params(self):
        J = self.values["model.J"]
        return ModelParams(
            J=J,
            h=self._field(J),
            alpha=self.require("model.alpha"),
            N=self.values["model.N"],
            kernel_mode=self.values["model.kernel_mode"],
            boundary=self.values["model.boundary"],
        )

    def global_quench(self):
        """Sin quench.* explícitos, ambos lados toman los valores de model.*"""
        J_f = self.values["quench.J_f"]
        J_f = self.values["model.J"] if J_f is None else J_f
        h_f = self.values["quench.h_f"]
        h_f = self._field(J_f) if h_f is None else h_f
        J_i = self.values["quench.J_i"]
        h_i = self.values["quench.h_i"]
        return GlobalQuench(
            J_i=J_f if J_i is None else J_i,
            h_i=h_f if h_i is None else h_i,
            J_f=J_f,
            h_f=h_f,
            alpha=self.require("model.alpha"),
            N=self.values["model.N"],
            kernel_mode=self.values["model.kernel_mode"],
            path=self.values["quench.path"],
        )

    # ==========================================
    # GRILLAS
    # ==========================================

    def t_grid(self):
        """Tiempos en unidades de 1/J"""
        t_max, dt = self.values["grid.t_max"], self.values["grid.dt"]
        if dt <= 0 or t_max < 0:
            raise InvalidConfigValue(f"grid.dt = {dt} y grid.t_max = {t_max} deben ser positivos")
        return np.linspace(0.0, t_max, int(round(t_max / dt)) + 1)

    def r_grid(self, N, r_min=0):
        r_min = self.values["grid.r_min"] if self.values["grid.r_min"] is not None else r_min
        r_max = self.values["grid.r_max"] if self.values["grid.r_max"] is not None else N // 2
        if r_max < r_min:
            raise InvalidConfigValue(f"grid.r_max = {r_max} < grid.r_min = {r_min}")
        return np.arange(r_min, r_max + 1)

    def epsilon_list(self):
        return parse_epsilon_list(self.values["analysis.epsilon"])

    def window(self):
        low, high = self.values["analysis.window_min"], self.values["analysis.window_max"]
        if low is None and high is None:
            return None
        return (8.0 if low is None else low, np.inf if high is None else high)

    def output_path(self, default_name):
        name = self.values["output.path"] or default_name
        path = Path(name)
        if not path.is_absolute():
            path = Path(settings.LRTI_OUTPUT_DIR) / path
        path.parent.mkdir(parents=True, exist_ok=True)
        return path
