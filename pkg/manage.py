#!/usr/bin/env python
"""Punto de entrada de la CLI: los comandos de gestión corren las simulaciones."""
import os
import sys


def main():
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "No se pudo importar Django. Instalá las dependencias con "
            "'pip install -r requirements.txt' en el entorno virtual activo."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
