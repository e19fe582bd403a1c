from django.core.management.base import BaseCommand

from apps.core.fields import write_field
from apps.core.mixins import RunConfigCommandMixin, time_scale
from apps.quench_local.magnetization import magnetization_field


class Command(RunConfigCommandMixin, BaseCommand):
    help = "Perfil de magnetización 1/2 - <S^z_R(t)> tras invertir el espín central"

    def run(self, run_config):
        params = run_config.model_params()
        scale = time_scale(params.J)
        field = magnetization_field(
            params,
            run_config.r_grid(params.N),
            run_config.t_grid() / scale,
            include_f2=run_config.get("quench.include_f2"),
        ).with_time_scale(scale, "1/J")

        path = run_config.output_path(f"Sz_local_alpha{params.alpha:g}_N{params.N}.csv")
        write_field(field, path, config=run_config.as_dict())
        self.stdout.write(self.style.SUCCESS(f"Magnetización escrita en {path}"))
