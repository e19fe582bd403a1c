import numpy as np
import pytest

from apps.core.exceptions import (
    DivergentVelocity,
    GapClosureWarning,
    InvalidParameters,
    StabilityViolation,
)
from apps.model_core.dispersion import (
    build_dispersion,
    evaluate_dispersion,
    max_group_velocity,
    revival_time,
)
from apps.model_core.params import ModelParams


def test_parametros_invalidos():
    with pytest.raises(InvalidParameters):
        ModelParams(J=1.0, h=1.0, alpha=1.0, N=64)
    with pytest.raises(InvalidParameters):
        ModelParams(J=1.0, h=1.0, alpha=1.5, N=63)
    with pytest.raises(InvalidParameters):
        ModelParams(J=1.0, h=-1.0, alpha=1.5, N=64)
    with pytest.raises(InvalidParameters):
        ModelParams(J=1.0, h=1.0, alpha=1.5, N=64, kernel_mode="toroide")


def test_sin_acoplamiento_la_banda_es_plana():
    tabla = build_dispersion(ModelParams(J=0.0, h=3.0, alpha=1.7, N=64))
    np.testing.assert_allclose(tabla.E, 6.0, rtol=1e-14)
    np.testing.assert_allclose(tabla.v, 0.0, atol=1e-14)


def test_regimen_cuasi_local_tiene_gap_y_energia_acotada():
    tabla = build_dispersion(ModelParams(J=1.0, h=50.0, alpha=1.7, N=512))
    assert np.min(tabla.E) > 0
    assert np.max(tabla.E) < 2 * 50 + 2 * 4.0
    assert np.all(np.isfinite(tabla.E))


def test_limite_de_primeros_vecinos_en_k_cero():
    punto = evaluate_dispersion(ModelParams(J=1.0, h=1.0, alpha=50.0, N=512), 0.0)
    assert punto.E == pytest.approx(2 * np.sqrt(3.0), rel=1e-12)


def test_normalizacion_de_bogoliubov_en_parametros_aleatorios():
    rng = np.random.default_rng(11)
    for _ in range(50):
        params = ModelParams(
            J=1.0,
            h=float(rng.uniform(2.0, 60.0)),
            alpha=float(rng.uniform(1.1, 4.0)),
            N=2 * int(rng.integers(4, 128)),
        )
        tabla = build_dispersion(params)
        assert tabla.bogoliubov_norm_error() < 1e-12
        desde_ab = np.sqrt(tabla.A**2 - tabla.B**2)
        np.testing.assert_allclose(desde_ab, tabla.E, rtol=1e-12)


def test_energia_par_y_velocidad_impar():
    tabla = build_dispersion(ModelParams(J=1.0, h=5.0, alpha=2.5, N=256))
    espejo = (-np.arange(tabla.N)) % tabla.N
    np.testing.assert_allclose(tabla.E, tabla.E[espejo], rtol=1e-14)
    np.testing.assert_allclose(tabla.p_alpha, tabla.p_alpha[espejo], rtol=1e-14)
    np.testing.assert_allclose(tabla.vg, -tabla.vg[espejo], atol=1e-13)


def test_velocidad_de_grupo_coincide_con_diferencia_finita():
    params = ModelParams(J=1.0, h=2.0, alpha=2.5, N=256)
    tabla = build_dispersion(params)
    delta = 1e-5
    for n in (20, 70, 100, 200):
        k = tabla.k[n]
        centrada = (
            evaluate_dispersion(params, k + delta).E
            - evaluate_dispersion(params, k - delta).E
        ) / (2 * delta)
        assert tabla.vg[n] == pytest.approx(centrada, rel=1e-6, abs=1e-9)


def test_curvatura_coincide_con_diferencia_finita_de_la_velocidad():
    params = ModelParams(J=1.0, h=2.0, alpha=3.0, N=512, kernel_mode="infinite_chain")
    k, delta = -0.8, 1e-4
    centrada = (
        evaluate_dispersion(params, k + delta).vg
        - evaluate_dispersion(params, k - delta).vg
    ) / (2 * delta)
    assert evaluate_dispersion(params, k).curvature == pytest.approx(centrada, rel=1e-5)


def test_velocidad_de_fase_ausente_en_k_cero():
    tabla = build_dispersion(ModelParams(J=1.0, h=5.0, alpha=2.5, N=64))
    assert np.isnan(tabla.vphi[tabla.N // 2])
    assert np.all(np.isfinite(np.delete(tabla.vphi, tabla.N // 2)))


def test_inestabilidad_es_error():
    # h/J = 1 con alpha = 3: h + J P(pi) < 0
    with pytest.raises(StabilityViolation):
        build_dispersion(ModelParams(J=1.0, h=1.0, alpha=3.0, N=128))


def test_cierre_de_gap_emite_advertencia():
    with pytest.warns(GapClosureWarning):
        build_dispersion(ModelParams(J=1.0, h=0.0, alpha=2.5, N=16))


def test_velocidad_maxima_en_regimen_local():
    tabla = build_dispersion(ModelParams(J=1.0, h=2.0, alpha=3.0, N=512))
    k_star, vg_max = max_group_velocity(tabla)
    assert -np.pi < k_star < 0
    assert vg_max > 0
    assert vg_max == pytest.approx(np.max(np.abs(tabla.vg)), rel=1e-3)
    assert revival_time(tabla) == pytest.approx(512 / (2 * np.max(np.abs(tabla.vg))))


def test_velocidad_maxima_converge_con_la_grilla():
    resultados = []
    for N in (512, 4096):
        params = ModelParams(J=1.0, h=2.0, alpha=3.0, N=N, kernel_mode="infinite_chain")
        resultados.append(max_group_velocity(build_dispersion(params)))
    (k_512, v_512), (k_4096, v_4096) = resultados
    assert abs(v_512 - v_4096) / v_4096 < 1e-3
    assert k_512 == pytest.approx(k_4096, abs=2 * np.pi / 512)


def test_velocidad_maxima_de_banda_plana():
    tabla = build_dispersion(ModelParams(J=0.0, h=1.0, alpha=3.0, N=64))
    k_star, vg_max = max_group_velocity(tabla)
    assert vg_max == 0
    assert k_star == pytest.approx(-np.pi)


def test_velocidad_maxima_diverge_en_regimen_cuasi_local():
    tabla = build_dispersion(ModelParams(J=1.0, h=50.0, alpha=1.7, N=128))
    with pytest.raises(DivergentVelocity):
        max_group_velocity(tabla)
