import numpy as np
import pytest
from scipy.special import zeta

from apps.core.exceptions import (
    CutOutOfRange,
    DomainError,
    InvalidParameters,
    RegimeViolation,
)
from apps.model_core.dispersion import build_dispersion
from apps.model_core.infrared import InfraredExpansion, infrared_expansion
from apps.model_core.params import ModelParams
from apps.quench_global.predictions import predict_global
from apps.quench_local.asymptotics import ZETA, lambda2_asymptotic, lambda2_prefactor
from apps.quench_local.entanglement import (
    entanglement_spectrum,
    lambda2_field,
    renyi_entropy,
    renyi_field,
)
from apps.quench_local.magnetization import magnetization_field
from apps.quench_local.predictions import predict_local
from apps.quench_local.state import LocalQuenchState
from apps.quench_local.zeta import hurwitz_zeta


def _params(h=50.0, alpha=1.8, N=96, **kwargs):
    return ModelParams(J=1.0, h=h, alpha=alpha, N=N, **kwargs)


# ==========================================
# ESTADO INICIAL Y MAGNETIZACIÓN
# ==========================================


def test_normalizacion_del_estado():
    estado = LocalQuenchState.from_params(_params(h=3.0, alpha=1.5, N=64))
    assert estado.norm_squared * np.sum(estado.u**2) == pytest.approx(1.0, abs=1e-12)
    assert np.all(estado.u >= 1.0)
    assert estado.flip_site == 0


def test_perfil_inicial_con_campo_intenso():
    params = _params(h=1e4, N=64)
    perfil = magnetization_field(params, np.arange(-8, 9), [0.0]).values[0]
    assert perfil[8] == pytest.approx(1.0, abs=1e-3)
    assert np.all(np.abs(np.delete(perfil, 8)) < 1e-3)


def test_excitacion_total_conservada():
    params = _params(h=5.0, alpha=1.8, N=64)
    campo = magnetization_field(params, np.arange(64), np.linspace(0, 20, 11))
    totales = campo.values.sum(axis=1)
    np.testing.assert_allclose(totales, totales[0], atol=1e-10)


def test_perfil_simetrico_alrededor_del_sitio_invertido():
    params = _params(h=5.0, alpha=2.5, N=64)
    campo = magnetization_field(params, np.arange(-10, 11), [3.0]).values[0]
    np.testing.assert_allclose(campo, campo[::-1], atol=1e-14)


def test_sin_f2_no_supera_al_perfil_completo():
    params = _params(h=4.0, alpha=1.5, N=64)
    r, t = np.arange(32), np.linspace(0, 10, 6)
    completo = magnetization_field(params, r, t).values
    sin_f2 = magnetization_field(params, r, t, include_f2=False).values
    assert np.all(sin_f2 <= completo + 1e-15)
    assert np.any(sin_f2 < completo)


# ==========================================
# ENTRELAZAMIENTO
# ==========================================


def test_lambda2_nulo_en_t_cero():
    lambdas = lambda2_field(_params(), np.arange(1, 49), [0.0]).values
    assert np.max(lambdas) < 1e-6


def test_espectro_normalizado():
    espectro = entanglement_spectrum(_params(), R=3, t=8.0)
    assert espectro.lambda1 + espectro.lambda2 == pytest.approx(1.0, abs=1e-15)
    assert 0 <= espectro.lambda2 <= 1
    assert espectro.cut == 3
    assert all(0 <= s <= np.log(2) + 1e-12 for s in espectro.renyi.values())


@pytest.mark.parametrize("corte", [0, 49, -3])
def test_corte_fuera_de_rango(corte):
    with pytest.raises(CutOutOfRange):
        lambda2_field(_params(), [corte], [1.0])


def test_aproximacion_uk_dentro_del_uno_por_ciento():
    params = _params()
    r, t = np.arange(1, 49), np.linspace(0, 20, 21)
    exacto = lambda2_field(params, r, t).values
    aproximado = lambda2_field(params, r, t, approx_uk=True).values
    relevantes = exacto > 1e-3
    assert relevantes.any()
    relativo = np.abs(aproximado - exacto)[relevantes] / exacto[relevantes]
    assert np.max(relativo) < 0.01


def test_lambda2_decrece_con_el_corte():
    lambdas = lambda2_field(_params(), np.arange(1, 49), np.linspace(1, 20, 5)).values
    assert np.all(np.diff(lambdas, axis=1) <= 1e-15)


def test_entropia_monotona_en_r():
    # Después de (N/2)/V_max el frente que da la vuelta al anillo reingresa al bloque
    params = _params()
    v_max = np.max(np.abs(build_dispersion(params).vg))
    tiempos = np.linspace(0.25, 0.95, 4) * (params.N / 2) / v_max
    entropia = renyi_field(1.0, params, np.arange(1, 49), tiempos).values
    interior = entropia[:, 1:-1]
    vecinos = np.maximum(entropia[:, :-2], entropia[:, 2:])
    assert not np.any(interior > vecinos + 1e-6)


@pytest.mark.parametrize("n", [0.5, 1.0, 2.0, 3.0, 10.0])
def test_renyi_maximo_con_lambda_un_medio(n):
    assert renyi_entropy(0.5, n) == pytest.approx(np.log(2), rel=1e-12)


def test_limite_de_von_neumann():
    lambdas = np.linspace(0.0, 1.0, 21)
    von_neumann = renyi_entropy(lambdas, 1.0)
    for n in (1.0 - 1e-6, 1.0 + 1e-6):
        np.testing.assert_allclose(renyi_entropy(lambdas, n), von_neumann, atol=1e-6)
    assert von_neumann[0] == 0.0
    assert von_neumann[-1] == 0.0


def test_campo_de_renyi_acotado_y_etiquetado():
    campo = renyi_field(2.0, _params(), np.arange(1, 49), np.linspace(0, 15, 4))
    assert campo.observable == "renyi(2)"
    assert campo.meta["renyi_order"] == 2.0
    assert np.all(campo.values >= 0)
    assert np.all(campo.values <= np.log(2) + 1e-12)


@pytest.mark.parametrize("n", [0.0, -1.0, np.nan])
def test_orden_de_renyi_invalido(n):
    with pytest.raises(InvalidParameters):
        renyi_entropy(0.3, n)


# ==========================================
# ZETA DE HURWITZ Y FORMA ASINTÓTICA
# ==========================================


def test_zeta_de_hurwitz_valores_conocidos():
    assert hurwitz_zeta(2.0, 1.0) == pytest.approx(np.pi**2 / 6, rel=1e-12)
    assert hurwitz_zeta(3.0, 2.0) == pytest.approx(zeta(3.0) - 1.0, rel=1e-12)


def test_zeta_de_hurwitz_contra_scipy():
    rng = np.random.default_rng(11)
    s = rng.uniform(1.1, 12.0, 30)
    q = rng.uniform(0.05, 500.0, 30)
    obtenido = [hurwitz_zeta(si, qi) for si, qi in zip(s, q)]
    np.testing.assert_allclose(obtenido, zeta(s, q), rtol=1e-12)


def test_zeta_de_hurwitz_acepta_arreglos():
    q = np.array([1.0, 2.5, 40.0])
    np.testing.assert_allclose(hurwitz_zeta(3.0, q), zeta(3.0, q), rtol=1e-12)


def test_zeta_de_hurwitz_para_q_grande():
    s, q = 2.5, 1e6
    assert hurwitz_zeta(s, q) * (s - 1) * q ** (s - 1) == pytest.approx(1.0, abs=1e-5)


@pytest.mark.parametrize("s, q", [(1.0, 1.0), (0.5, 2.0), (2.0, 0.0), (2.0, -1.0)])
def test_zeta_de_hurwitz_fuera_de_dominio(s, q):
    with pytest.raises(DomainError):
        hurwitz_zeta(s, q)


def test_forma_asintotica_escala_con_el_tiempo():
    desarrollo = infrared_expansion(_params(alpha=1.5, N=512))
    base = lambda2_asymptotic(40.0, 100.0, desarrollo)
    assert lambda2_asymptotic(40.0, 200.0, desarrollo) == pytest.approx(4 * base)
    zeta_base = lambda2_asymptotic(40.0, 100.0, desarrollo, form=ZETA)
    assert lambda2_asymptotic(40.0, 200.0, desarrollo, form=ZETA) == pytest.approx(
        4 * zeta_base
    )


def test_forma_zeta_tiende_a_la_dominante():
    desarrollo = infrared_expansion(_params(alpha=1.6, N=512))
    cocientes = [
        lambda2_asymptotic(R, 2.0 * R, desarrollo, form=ZETA)
        / lambda2_asymptotic(R, 2.0 * R, desarrollo)
        for R in (10.0, 100.0, 1e4)
    ]
    assert abs(cocientes[-1] - 1) < 1e-3
    assert abs(cocientes[-1] - 1) < abs(cocientes[0] - 1)


def test_prefactor_positivo():
    desarrollo = infrared_expansion(_params(alpha=1.5, N=512))
    assert lambda2_prefactor(desarrollo) > 0


def test_forma_asintotica_fuera_de_regimen():
    desarrollo = InfraredExpansion(
        delta=1.0, c=1.0, z=1.5, p0=1.0, p_prime=-1.0, nu=0.0,
        a_z=1.0, gamma=1.0, chi=1.0, kappa=1.0, xi_z=1.0,
    )  # fmt: skip
    with pytest.raises(RegimeViolation):
        lambda2_asymptotic(10.0, 10.0, desarrollo)


# ==========================================
# PREDICCIONES
# ==========================================


def test_predicciones_cuasi_locales():
    prediccion = predict_local(1.8, _params())
    assert prediccion.beta_se == pytest.approx(1.2)
    assert prediccion.beta_m == pytest.approx(0.8)
    assert prediccion.beta_m_alternative == pytest.approx(0.2)
    assert prediccion.beta_ee == 1.0
    assert prediccion.v_se is None


@pytest.mark.parametrize("alpha", [1.1, 1.5, 1.9])
def test_entrelazamiento_balistico_en_todo_el_regimen(alpha):
    assert predict_local(alpha, _params()).beta_ee == 1.0


def test_borde_de_espin_viaja_a_la_velocidad_de_grupo():
    params = _params(alpha=3.0, N=512)
    local = predict_local(3.0, params)
    global_ = predict_global(3.0, params)
    assert local.maxima_cancel is True
    assert local.beta_se == 1.0
    assert global_.v_ce == pytest.approx(2 * local.v_se)
