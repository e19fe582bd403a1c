from django.core.management.base import BaseCommand

from apps.core.exceptions import InvalidConfigValue
from apps.core.mixins import RunConfigCommandMixin, time_scale
from apps.ed_oracle.compare import global_quench_report, local_quench_report
from apps.ed_oracle.evolution import METHODS

KINDS = ("global", "local")


class Command(RunConfigCommandMixin, BaseCommand):
    help = "Compara la diagonalización exacta con las fórmulas de ondas de espín (N <= 14)"

    def run(self, run_config):
        kind = run_config.get("oracle.kind")
        method = run_config.get("oracle.method")
        if kind not in KINDS:
            raise InvalidConfigValue(f"oracle.kind = {kind!r}; opciones: {', '.join(KINDS)}")
        if method not in METHODS:
            raise InvalidConfigValue(
                f"oracle.method = {method!r}; opciones: {', '.join(METHODS)}"
            )

        if kind == "global":
            quench = run_config.global_quench()
            t_grid = run_config.t_grid() / time_scale(quench.J_f)
            report = global_quench_report(quench, t_grid, method=method)
        else:
            params = run_config.model_params()
            t_grid = run_config.t_grid() / time_scale(params.J)
            report = local_quench_report(params, t_grid, method=method)

        for name, comparison in report.comparisons.items():
            self.stdout.write(
                self.style.HTTP_INFO(
                    f"{name}: error máximo {comparison.max_abs_error:.3e} "
                    f"(relativo {comparison.relative_error:.3e})"
                )
            )
        self.write_json(report.as_dict(), run_config)
