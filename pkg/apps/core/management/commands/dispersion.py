from django.core.management.base import BaseCommand

from apps.core.fields import write_table
from apps.core.mixins import RunConfigCommandMixin
from apps.model_core.dispersion import build_dispersion, max_group_velocity, revival_time
from apps.model_core.regimes import LOCAL, classify_regime


class Command(RunConfigCommandMixin, BaseCommand):
    help = "Escribe la tabla de dispersión LSWT (k, P, E, V_g, V_phi, u, v)"

    def run(self, run_config):
        params = run_config.model_params()
        table = build_dispersion(params)
        path = run_config.output_path(f"dispersion_alpha{params.alpha:g}_N{params.N}.csv")
        write_table(
            path,
            {
                "k": table.k,
                "P": table.p_alpha,
                "dP": table.dp_alpha,
                "E": table.E,
                "vg": table.vg,
                "vphi": table.vphi,
                "u": table.u,
                "v": table.v,
            },
            config=run_config.as_dict(),
        )
        self.stdout.write(self.style.SUCCESS(f"Dispersión escrita en {path}"))
        self.stdout.write(f"Gap: min E_k = {table.E.min():.6g}")
        if classify_regime(params.alpha) == LOCAL:
            k_star, vg_star = max_group_velocity(table)
            self.stdout.write(
                f"k* = {k_star:.6f}, V_g(k*) = {vg_star:.6f}, "
                f"t_rev = {revival_time(table):.6g}"
            )
