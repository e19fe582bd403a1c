from dataclasses import replace

from apps.model_core.dispersion import build_dispersion, max_group_velocity
from apps.model_core.regimes import QUASI_LOCAL, PredictionSet, classify_regime


def predict_local(alpha, params):
    """
    Exponentes del borde de espín, los máximos y el entrelazamiento.

    En el régimen cuasi-local se informan las dos predicciones de beta_m
    (alpha - 1 y 2 - alpha); el ajuste del campo decide cuál vale. En el
    régimen local los máximos se cancelan y el borde viaja a V_g(k*).
    """
    regime = classify_regime(alpha)
    if regime == QUASI_LOCAL:
        return PredictionSet(
            alpha=alpha,
            regime=regime,
            quench="local",
            beta_se=3.0 - alpha,
            beta_m=alpha - 1.0,
            beta_m_alternative=2.0 - alpha,
            beta_ee=1.0,
        )

    k_star, vg_star = max_group_velocity(build_dispersion(replace(params, alpha=alpha)))
    return PredictionSet(
        alpha=alpha,
        regime=regime,
        quench="local",
        beta_se=1.0,
        beta_ee=1.0,
        v_se=vg_star,
        k_star=k_star,
        maxima_cancel=True,
    )
