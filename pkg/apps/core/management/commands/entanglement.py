from django.core.management.base import BaseCommand

from apps.core.fields import renyi_tag, write_field
from apps.core.mixins import RunConfigCommandMixin, sibling_path, time_scale
from apps.quench_local.entanglement import lambda2_field, renyi_field


class Command(RunConfigCommandMixin, BaseCommand):
    help = "lambda_2 y entropías de Rényi del bloque [R, N/2] tras el temple local"

    def run(self, run_config):
        params = run_config.model_params()
        scale = time_scale(params.J)
        r_grid = run_config.r_grid(params.N, r_min=1)
        t_grid = run_config.t_grid() / scale
        approx_uk = run_config.get("entanglement.approx_uk")
        base = run_config.output_path(f"entanglement_alpha{params.alpha:g}_N{params.N}.csv")
        config = run_config.as_dict()

        fields = [lambda2_field(params, r_grid, t_grid, approx_uk=approx_uk)]
        for n in run_config.get("entanglement.orders"):
            fields.append(renyi_field(n, params, r_grid, t_grid, approx_uk=approx_uk))

        for field in fields:
            tag = "lambda2" if field.observable == "lambda2" else renyi_tag(
                field.meta["renyi_order"]
            ).replace("(", "").replace(")", "")
            path = sibling_path(base, tag)
            write_field(field.with_time_scale(scale, "1/J"), path, config=config)
            self.stdout.write(self.style.SUCCESS(f"{field.observable} escrito en {path}"))
