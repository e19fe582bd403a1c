"""
Jerarquía de errores del simulador.

Cada familia define el código de salida que usan los comandos de gestión:
2 configuración, 3 validez física, 4 convergencia numérica.
"""

from django.core.exceptions import ValidationError


class ConfigurationError(Exception):
    """Configuración de corrida ilegible o incompleta"""

    exit_code = 2


class UnknownConfigKey(ConfigurationError):
    pass


class InvalidConfigValue(ConfigurationError):
    pass


class MissingConfigValue(ConfigurationError):
    pass


class ObservableMismatch(ConfigurationError):
    """La operación pedida no aplica al observable del campo"""


class PhysicsValidityError(ValidationError):
    """Parámetros o datos fuera del dominio de validez del modelo"""

    exit_code = 3

    def __init__(self, message, code=None, params=None):
        super().__init__(message, code=code or type(self).__name__, params=params)


class InvalidParameters(PhysicsValidityError):
    pass


class StabilityViolation(PhysicsValidityError):
    pass


class DivergentVelocity(PhysicsValidityError):
    pass


class RegimeViolation(PhysicsValidityError):
    pass


class NoStationaryPoint(PhysicsValidityError):
    pass


class CutOutOfRange(PhysicsValidityError):
    pass


class DomainError(PhysicsValidityError):
    pass


class SizeLimit(PhysicsValidityError):
    pass


class AnnihilatedState(PhysicsValidityError):
    pass


class InvalidField(PhysicsValidityError):
    pass


# Errores del análisis de bordes


class EmptyEdge(PhysicsValidityError):
    pass


class InsufficientPoints(PhysicsValidityError):
    pass


class NoRidges(PhysicsValidityError):
    pass


class NumericalError(Exception):
    """Un método iterativo no alcanzó la tolerancia pedida"""

    exit_code = 4

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class ConvergenceFailure(NumericalError):
    pass


class RegressionIllConditioned(NumericalError):
    pass


class GapClosureWarning(RuntimeWarning):
    """El mínimo de E_k es numéricamente nulo"""


def describe_error(exc):
    """Devuelve '<NombreDeError>: detalle' para la salida de la CLI"""
    if isinstance(exc, ValidationError):
        detail = "; ".join(exc.messages)
    else:
        detail = str(exc)
    if isinstance(exc, NumericalError) and exc.diagnostics:
        extra = ", ".join(f"{k}={v}" for k, v in exc.diagnostics.items())
        detail = f"{detail} ({extra})"
    return f"{type(exc).__name__}: {detail}"
