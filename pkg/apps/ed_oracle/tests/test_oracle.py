import logging

import numpy as np
import pytest

from apps.core.exceptions import AnnihilatedState, SizeLimit
from apps.ed_oracle.compare import (
    GLOBAL_AGREEMENT_JT,
    global_quench_report,
    local_quench_report,
)
from apps.ed_oracle.evolution import (
    KRYLOV,
    SPECTRAL,
    evolve,
    evolve_series,
    ground_state,
)
from apps.ed_oracle.hamiltonian import EDState, build_hamiltonian, pair_distance
from apps.ed_oracle.observables import (
    block_sites,
    block_spectrum,
    local_quench_state,
    observables,
)
from apps.model_core.params import ModelParams
from apps.quench_global.quench import GlobalQuench
from apps.quench_local.entanglement import renyi_from_spectrum


def _params(N=8, J=1.0, h=2.0, alpha=1.5, boundary="periodic"):
    return ModelParams(J=J, h=h, alpha=alpha, N=N, boundary=boundary)


# ==========================================
# HAMILTONIANO
# ==========================================


def test_matriz_de_dos_sitios():
    J, h = 0.7, 1.3
    H = build_hamiltonian(_params(N=2, J=J, h=h, alpha=2.0, boundary="open"))
    esperada = np.array(
        [[-2 * h, 0, 0, J], [0, 0, J, 0], [0, J, 0, 0], [J, 0, 0, 2 * h]]
    )
    np.testing.assert_allclose(H.to_dense(), esperada, atol=1e-15)
    estado = ground_state(H)
    assert H.energy(estado) == pytest.approx(-np.sqrt(4 * h**2 + J**2), rel=1e-12)


def _operador_de_sitio(matriz, sitio, N):
    # El bit menos significativo del índice es el sitio 0: va último en el producto
    factores = [matriz if r == sitio else np.eye(2) for r in reversed(range(N))]
    resultado = factores[0]
    for factor in factores[1:]:
        resultado = np.kron(resultado, factor)
    return resultado


def test_hamiltoniano_con_matrices_de_pauli():
    N, J, h, alpha = 6, 0.8, 1.3, 1.6
    sigma_x = np.array([[0.0, 1.0], [1.0, 0.0]])
    sigma_z = np.diag([1.0, -1.0])
    esperada = np.zeros((2**N, 2**N))
    for i in range(N):
        esperada -= h * _operador_de_sitio(sigma_z, i, N)
        for j in range(i + 1, N):
            acople = J / pair_distance(i, j, N, "periodic") ** alpha
            esperada += acople * _operador_de_sitio(sigma_x, i, N) @ _operador_de_sitio(
                sigma_x, j, N
            )
    H = build_hamiltonian(_params(N=N, J=J, h=h, alpha=alpha))
    np.testing.assert_allclose(H.to_dense(), esperada, atol=1e-14)


def test_distancia_de_imagen_minima():
    assert pair_distance(0, 7, 8, "periodic") == 1
    assert pair_distance(0, 7, 8, "open") == 7
    assert pair_distance(1, 5, 8, "periodic") == 4


def test_sin_acoplamiento_el_fundamental_es_todo_arriba():
    H = build_hamiltonian(_params(N=6, J=0.0, h=1.5))
    estado = ground_state(H)
    assert abs(estado.overlap(EDState.product(6))) == pytest.approx(1.0, abs=1e-12)
    assert H.energy(estado) == pytest.approx(-6 * 1.5, rel=1e-12)


def test_energia_en_segundo_orden_de_perturbaciones():
    N, J, h, alpha = 10, 1.0, 50.0, 1.8
    H = build_hamiltonian(_params(N=N, J=J, h=h, alpha=alpha))
    e0 = H.energy(ground_state(H))
    pares = [
        (J / pair_distance(i, j, N, "periodic") ** alpha) ** 2
        for i in range(N)
        for j in range(i + 1, N)
    ]
    correccion = -sum(pares) / (4 * h)
    perturbativa = -N * h + correccion
    assert e0 == pytest.approx(perturbativa, rel=1e-3)
    assert e0 + N * h == pytest.approx(correccion, rel=0.2)


def test_hamiltoniano_hermitico():
    H = build_hamiltonian(_params(N=8, alpha=1.3))
    rng = np.random.default_rng(2)
    phi = rng.normal(size=256) + 1j * rng.normal(size=256)
    psi = rng.normal(size=256) + 1j * rng.normal(size=256)
    izquierda = np.vdot(phi, H.matvec(psi))
    derecha = np.conj(np.vdot(psi, H.matvec(phi)))
    assert abs(izquierda - derecha) < 1e-12 * abs(izquierda)


def test_limite_de_tamano():
    with pytest.raises(SizeLimit):
        build_hamiltonian(_params(N=16))


def test_lanczos_reproduce_el_fundamental_denso():
    H = build_hamiltonian(_params(N=10, h=3.0))
    denso = ground_state(H, SPECTRAL)
    lanczos = ground_state(H, KRYLOV)
    assert H.energy(lanczos) == pytest.approx(H.energy(denso), rel=1e-10)
    assert abs(denso.overlap(lanczos)) == pytest.approx(1.0, abs=1e-8)


def test_fundamental_cerca_del_estado_polarizado():
    H = build_hamiltonian(_params(N=10, h=50.0, alpha=1.8))
    assert abs(ground_state(H).overlap(EDState.product(10))) ** 2 > 0.999


# ==========================================
# EVOLUCIÓN
# ==========================================


def test_espectral_y_krylov_coinciden():
    inicial = ground_state(build_hamiltonian(_params(N=10, h=3.0)))
    H = build_hamiltonian(_params(N=10, h=2.0))
    espectral = evolve(inicial, 1.5, H, SPECTRAL)
    krylov = evolve(inicial, 1.5, H, KRYLOV)
    np.testing.assert_allclose(krylov.amplitudes, espectral.amplitudes, atol=1e-8)


def test_serie_de_krylov_coincide_con_la_espectral():
    inicial = local_quench_state(ground_state(build_hamiltonian(_params(N=8))))
    H = build_hamiltonian(_params(N=8))
    tiempos = np.linspace(0, 2, 5)
    for a, b in zip(
        evolve_series(inicial, tiempos, H, SPECTRAL),
        evolve_series(inicial, tiempos, H, KRYLOV),
    ):
        np.testing.assert_allclose(a.amplitudes, b.amplitudes, atol=1e-8)


def test_unitariedad_y_conservacion_de_la_energia():
    H = build_hamiltonian(_params(N=12, h=2.0, alpha=1.7))
    inicial = local_quench_state(ground_state(H))
    energia = H.energy(inicial)
    for t in np.linspace(0, 10, 6):
        estado = evolve(inicial, t, H)
        assert np.linalg.norm(estado.amplitudes) == pytest.approx(1.0, abs=1e-10)
        assert H.energy(estado) == pytest.approx(energia, rel=1e-8)


def test_autoestado_estacionario():
    H = build_hamiltonian(_params(N=8, h=1.5))
    fundamental = ground_state(H)
    antes = observables(fundamental)
    despues = observables(evolve(fundamental, 3.0, H))
    np.testing.assert_allclose(despues.sz, antes.sz, atol=1e-10)
    np.testing.assert_allclose(despues.gx0, antes.gx0, atol=1e-10)
    np.testing.assert_allclose(despues.gz0, antes.gz0, atol=1e-10)


# ==========================================
# OBSERVABLES Y ESPECTROS
# ==========================================


def test_observables_del_estado_producto():
    resultado = observables(EDState.product(6))
    np.testing.assert_allclose(resultado.sz, 0.5)
    np.testing.assert_allclose(resultado.gz0, 0.0, atol=1e-15)
    assert resultado.gx0[0] == pytest.approx(0.25)
    np.testing.assert_allclose(resultado.gx0[1:], 0.0, atol=1e-15)


def test_inversion_local_baja_el_espin():
    invertido = local_quench_state(EDState.product(4), site=2)
    assert abs(invertido.amplitudes[1 << 2]) == pytest.approx(1.0)
    assert observables(invertido, site=2).sz[0] == pytest.approx(-0.5)


def test_inversion_de_estado_ya_invertido():
    with pytest.raises(AnnihilatedState):
        local_quench_state(EDState.product(4, index=15), site=0)


def test_espectro_de_estado_producto():
    espectro = block_spectrum(EDState.product(6), [0, 1, 2])
    np.testing.assert_allclose(espectro, [1, 0, 0, 0, 0, 0, 0, 0], atol=1e-15)
    assert renyi_from_spectrum(espectro, 2.0) == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize("n", [0.5, 1.0, 2.0])
def test_par_de_bell(n):
    estado = EDState(2, np.array([0, 1, 1, 0]) / np.sqrt(2))
    espectro = block_spectrum(estado, [0])
    np.testing.assert_allclose(espectro, [0.5, 0.5], atol=1e-15)
    assert renyi_from_spectrum(espectro, n) == pytest.approx(np.log(2), rel=1e-12)


def test_simetria_de_schmidt():
    rng = np.random.default_rng(4)
    amplitudes = rng.normal(size=256) + 1j * rng.normal(size=256)
    estado = EDState(8, amplitudes / np.linalg.norm(amplitudes))
    a = block_spectrum(estado, [0, 1, 2])
    b = block_spectrum(estado, [3, 4, 5, 6, 7])
    assert a.sum() == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(a, b[: a.size], atol=1e-12)
    np.testing.assert_allclose(b[a.size :], 0.0, atol=1e-12)


def test_bloque_que_da_la_vuelta():
    assert block_sites(10, 14, 12) == [10, 11, 0, 1, 2]


# ==========================================
# COMPARACIÓN CON ONDAS DE ESPÍN
# ==========================================


def test_temple_local_de_rango_dos():
    params = ModelParams(J=1.0, h=50.0, alpha=1.8, N=12)
    reporte = local_quench_report(params, np.linspace(0, 10, 6))
    assert reporte.extra["lambda3_max"] < 1e-3
    assert reporte.comparisons["renyi(1)"].max_abs_error < 0.05


@pytest.mark.slow
def test_temple_global_debil_coincide_con_ondas_de_espin():
    temple = GlobalQuench(J_i=1.0, h_i=50.0, J_f=1.0, h_f=45.0, alpha=1.7, N=12)
    reporte = global_quench_report(temple, np.linspace(0, GLOBAL_AGREEMENT_JT, 11))
    assert reporte.comparisons["Gx"].relative_error < 0.05
    assert reporte.comparisons["Gz"].relative_error < 0.05
    assert set(reporte.as_dict()["comparisons"]) == {"Gx", "Gz"}


def test_acuerdo_global_en_tiempos_cortos():
    temple = GlobalQuench(J_i=1.0, h_i=50.0, J_f=1.0, h_f=45.0, alpha=1.7, N=8)
    reporte = global_quench_report(temple, np.linspace(0, GLOBAL_AGREEMENT_JT, 11))
    assert reporte.comparisons["Gx"].relative_error < 0.05
    assert reporte.comparisons["Gz"].relative_error < 0.05
    assert reporte.extra["jt_max"] == pytest.approx(GLOBAL_AGREEMENT_JT)


def test_el_desfasaje_del_par_rompe_el_acuerdo_en_tiempos_largos(caplog):
    temple = GlobalQuench(J_i=1.0, h_i=50.0, J_f=1.0, h_f=45.0, alpha=1.7, N=8)
    with caplog.at_level(logging.WARNING, logger="apps.ed_oracle.compare"):
        reporte = global_quench_report(temple, np.linspace(0, 2, 9))
    assert reporte.comparisons["Gx"].relative_error > 0.2
    assert "fuera de la ventana" in caplog.text
