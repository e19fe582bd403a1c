from django.core.management.base import BaseCommand

from apps.core.mixins import RunConfigCommandMixin
from apps.model_core.regimes import LOCAL, classify_regime
from apps.quench_global.predictions import predict_global
from apps.quench_local.predictions import predict_local


class Command(RunConfigCommandMixin, BaseCommand):
    help = "Exponentes y velocidades predichos para los temples global y local"

    def run(self, run_config):
        alpha = run_config.require("model.alpha")
        regime = classify_regime(alpha)
        # Solo el régimen local necesita la dispersión y por lo tanto h
        params = run_config.model_params() if regime == LOCAL else None

        global_set = predict_global(alpha, params)
        local_set = predict_local(alpha, params)
        self.stdout.write(self.style.HTTP_INFO(f"alpha = {alpha:g}: régimen {regime}"))
        self.write_json(
            {"global": global_set.as_dict(), "local": local_set.as_dict()}, run_config
        )
