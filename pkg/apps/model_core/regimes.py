from dataclasses import asdict, dataclass

from apps.core.exceptions import InvalidParameters

LOCAL = "local"
QUASI_LOCAL = "quasi_local"


def classify_regime(alpha):
    """Régimen dinámico: local (alpha >= 2) o cuasi-local (1 < alpha < 2)"""
    if alpha <= 1:
        raise InvalidParameters(f"alpha = {alpha}: régimen instantáneo no soportado")
    return LOCAL if alpha >= 2 else QUASI_LOCAL


@dataclass(frozen=True)
class PredictionSet:
    """
    Exponentes y velocidades que predice LSWT para un alpha dado.

    Los campos que no aplican a un temple o régimen quedan en None.
    """

    alpha: float
    regime: str
    quench: str
    beta_ce: float = None
    beta_se: float = None
    beta_m: float = None
    beta_m_alternative: float = None
    beta_ee: float = None
    v_ce: float = None
    v_se: float = None
    v_m: float = None
    k_star: float = None
    maxima_cancel: bool = False

    def as_dict(self):
        return {key: value for key, value in asdict(self).items() if value is not None}
