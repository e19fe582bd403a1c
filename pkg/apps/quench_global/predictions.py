from dataclasses import replace

from apps.model_core.dispersion import (
    build_dispersion,
    evaluate_dispersion,
    max_group_velocity,
)
from apps.model_core.regimes import QUASI_LOCAL, PredictionSet, classify_regime


def predict_global(alpha, params):
    """Exponentes y velocidades LSWT del borde de correlación y los máximos"""
    regime = classify_regime(alpha)
    if regime == QUASI_LOCAL:
        return PredictionSet(
            alpha=alpha, regime=regime, quench="global", beta_ce=3.0 - alpha, beta_m=1.0
        )

    params = replace(params, alpha=alpha)
    k_star, vg_star = max_group_velocity(build_dispersion(params))
    energy = evaluate_dispersion(params, k_star).E
    return PredictionSet(
        alpha=alpha,
        regime=regime,
        quench="global",
        beta_ce=1.0,
        beta_m=1.0,
        v_ce=2.0 * vg_star,
        v_m=abs(2.0 * energy / k_star),
        k_star=k_star,
    )
