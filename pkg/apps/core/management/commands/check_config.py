import importlib
import logging
import os

from django.conf import settings
from django.core.management.base import BaseCommand


class Command(BaseCommand):
    help = "Verifica la configuración del entorno de simulación"

    def _importable(self, module):
        try:
            importlib.import_module(module)
        except ImportError:
            return False
        return True

    def handle(self, *args, **options):
        self.stdout.write(self.style.HTTP_INFO("Verificando configuración..."))

        output_dir = settings.LRTI_OUTPUT_DIR
        level = settings.LOGGING["loggers"]["apps"]["level"]
        checks = {
            "numpy": self._importable("numpy"),
            "scipy": self._importable("scipy"),
            "LRTI_WORKERS": settings.LRTI_WORKERS >= 1,
            "LRTI_OUTPUT_DIR": output_dir.is_dir() and os.access(output_dir, os.W_OK),
            "LRTI_LOG_LEVEL": isinstance(logging.getLevelName(level), int),
        }

        self.stdout.write("\n" + "=" * 50)
        for key, value in checks.items():
            status = self.style.SUCCESS("✓") if value else self.style.ERROR("✗")
            self.stdout.write(f'{status} {key}: {"Correcto" if value else "Incorrecto"}')

        self.stdout.write("=" * 50 + "\n")

        if not all(checks.values()):
            self.stdout.write(
                self.style.WARNING(
                    "\n⚠ Hay problemas en la configuración.\nRevisa tu archivo .env"
                )
            )
        else:
            self.stdout.write(
                self.style.SUCCESS("\n✓ El entorno está listo para simular")
            )
