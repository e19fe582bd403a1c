from django.core.management.base import BaseCommand

from apps.core.exceptions import InvalidConfigValue
from apps.core.fields import write_field
from apps.core.mixins import RunConfigCommandMixin, time_scale
from apps.quench_global.correlations import gx_field, gz_field

FIELDS = {"Gx": gx_field, "Gz": gz_field}


class Command(RunConfigCommandMixin, BaseCommand):
    help = "Calcula G_x o G_z después de un temple global"

    def run(self, run_config):
        observable = run_config.get("quench.observable")
        if observable not in FIELDS:
            raise InvalidConfigValue(
                f"quench.observable = {observable!r}; opciones: {', '.join(FIELDS)}"
            )
        quench = run_config.global_quench()
        scale = time_scale(quench.J_f)
        field = FIELDS[observable](
            quench, run_config.r_grid(quench.N), run_config.t_grid() / scale
        ).with_time_scale(scale, "1/J_f")

        path = run_config.output_path(f"{observable}_alpha{quench.alpha:g}_N{quench.N}.csv")
        write_field(field, path, config=run_config.as_dict())
        self.stdout.write(
            self.style.SUCCESS(
                f"{observable}: {field.t_grid.size} tiempos x {field.r_grid.size} "
                f"distancias escritos en {path}"
            )
        )
        if field.meta.get("past_revival"):
            self.stdout.write(
                self.style.WARNING("t_max supera el tiempo de reavivamiento del anillo")
            )
