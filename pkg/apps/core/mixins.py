import json
import logging

from django.core.management.base import CommandError

from apps.core.exceptions import (
    ConfigurationError,
    NumericalError,
    PhysicsValidityError,
    describe_error,
)
from apps.core.run_config import ALIASES, KEYS, RunConfig

logger = logging.getLogger(__name__)


def _dest(key):
    return key.replace(".", "__")


class RunConfigCommandMixin:
    """
    Mixin para comandos que leen una RunConfig.

    Agrega --config y una bandera por clave registrada, arma la RunConfig y
    traduce los errores del simulador a CommandError con su código de salida.
    """

    def add_arguments(self, parser):
        parser.add_argument(
            "--config", help="Archivo de configuración con líneas 'clave = valor'"
        )
        for key in KEYS:
            parser.add_argument(
                f"--{key}", *ALIASES.get(key, []), dest=_dest(key), default=None
            )

    def handle(self, *args, **options):
        try:
            flags = {key: options.get(_dest(key)) for key in KEYS}
            run_config = RunConfig.load(options.get("config"), flags)
            return self.run(run_config)
        except (ConfigurationError, PhysicsValidityError, NumericalError) as exc:
            logger.error("%s", describe_error(exc))
            raise CommandError(describe_error(exc), returncode=exc.exit_code) from exc

    def run(self, run_config):
        raise NotImplementedError

    def write_json(self, data, run_config, default_name=None):
        """JSON con la configuración resuelta; a archivo si hay output.path, si no a stdout"""
        payload = json.dumps({**data, "config": run_config.as_dict()}, indent=2, default=float)
        if run_config.get("output.path") or default_name:
            path = run_config.output_path(default_name)
            path.write_text(payload + "\n", encoding="utf-8")
            self.stdout.write(self.style.SUCCESS(f"Resumen escrito en {path}"))
        else:
            self.stdout.write(payload)
        return payload


def time_scale(J):
    """Factor entre el tiempo interno y el de la CLI, que se mide en 1/J"""
    return J if J > 0 else 1.0


def sibling_path(path, tag):
    """Archivo hermano de path con un sufijo: salida_lambda2.csv, salida_renyi1.csv"""
    return path.with_name(f"{path.stem}_{tag}{path.suffix or '.csv'}")
