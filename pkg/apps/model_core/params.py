import math
from dataclasses import dataclass, replace

from apps.core.exceptions import InvalidParameters

KERNEL_MODES = ("finite_ring", "infinite_chain")
BOUNDARIES = ("periodic", "open")


@dataclass(frozen=True)
class ModelParams:
    """
    Parámetros de la cadena: acoplamiento J, campo h, exponente alpha,
    tamaño N, modo del núcleo de Fourier y condición de borde.

    La condición de borde abierta sólo la usa el oráculo ED.
    """

    J: float
    h: float
    alpha: float
    N: int
    kernel_mode: str = "finite_ring"
    boundary: str = "periodic"

    def __post_init__(self):
        self.clean()
        object.__setattr__(self, "N", int(self.N))

    def clean(self):
        """Valida los parámetros igual que Model.clean()"""
        for name in ("J", "h", "alpha"):
            if not math.isfinite(float(getattr(self, name))):
                raise InvalidParameters(f"{name} debe ser finito")
        if self.J < 0:
            raise InvalidParameters("El acoplamiento J no puede ser negativo")
        if self.h < 0:
            raise InvalidParameters("El campo h no puede ser negativo")
        if self.alpha <= 1:
            raise InvalidParameters(
                f"alpha = {self.alpha} está en el régimen instantáneo (alpha <= 1)"
            )
        if int(self.N) != self.N or self.N < 2 or self.N % 2:
            raise InvalidParameters(f"N = {self.N} debe ser un entero par")
        if self.kernel_mode not in KERNEL_MODES:
            raise InvalidParameters(f"Modo de núcleo desconocido: {self.kernel_mode}")
        if self.boundary not in BOUNDARIES:
            raise InvalidParameters(f"Condición de borde desconocida: {self.boundary}")

    def require_lattice(self):
        """LSWT necesita al menos N = 4 sitios"""
        if self.N < 4:
            raise InvalidParameters(f"N = {self.N} es menor que 4")
        return self

    def with_couplings(self, J=None, h=None):
        """Copia con otro J y/o h (lados pre y post de un temple)"""
        return replace(
            self,
            J=self.J if J is None else J,
            h=self.h if h is None else h,
        )

    def as_dict(self):
        return {
            "J": self.J,
            "h": self.h,
            "alpha": self.alpha,
            "N": self.N,
            "kernel_mode": self.kernel_mode,
            "boundary": self.boundary,
        }
