from pathlib import Path

from django.core.management.base import BaseCommand

from apps.core.exceptions import InvalidConfigValue
from apps.core.fields import read_field
from apps.core.mixins import RunConfigCommandMixin
from apps.edge_analysis.destagger import destagger
from apps.edge_analysis.edges import epsilon_scan
from apps.edge_analysis.ridges import extrema_ridges

MODES = ("edge", "ridges")
DESTAGGER = ("none", "abs", "even")


class Command(RunConfigCommandMixin, BaseCommand):
    help = "Ajusta el borde t*(R) = a R^beta o las crestas de un campo guardado"

    def _prepared_field(self, run_config):
        field, _ = read_field(Path(run_config.require("input.path")))
        option = run_config.get("analysis.destagger")
        if option not in DESTAGGER:
            raise InvalidConfigValue(
                f"analysis.destagger = {option!r}; opciones: {', '.join(DESTAGGER)}"
            )
        if option == "abs":
            return destagger(field).magnitude
        if option == "even":
            return destagger(field).even
        return field

    def run(self, run_config):
        mode = run_config.get("analysis.mode")
        if mode not in MODES:
            raise InvalidConfigValue(f"analysis.mode = {mode!r}; opciones: {', '.join(MODES)}")
        field = self._prepared_field(run_config)
        window = run_config.window()

        if mode == "edge":
            scan = epsilon_scan(field, run_config.epsilon_list(), window=window)
            self.stdout.write(
                self.style.HTTP_INFO(
                    f"{field.observable}: beta = {scan.beta_mean:.4f} "
                    f"(dispersión {scan.beta_spread:.4f}, {len(scan.fits)} umbrales)"
                )
            )
            self.write_json({"observable": field.observable, **scan.as_dict()}, run_config)
            return

        ridges = extrema_ridges(field, window=window)
        self.stdout.write(
            self.style.HTTP_INFO(f"{field.observable}: {len(ridges.ridges)} crestas")
        )
        self.write_json({"observable": field.observable, **ridges.as_dict()}, run_config)
