"""
Estado fundamental y evolución temporal exacta.

Hasta N = 12 se usa la descomposición espectral completa; en N = 13-14 el
estado fundamental sale de Lanczos (eigsh) y la evolución de un propagador de
Krylov con paso adaptivo.
"""

import logging

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.sparse.linalg import ArpackNoConvergence, eigsh

from apps.core.exceptions import ConvergenceFailure, InvalidParameters
from apps.ed_oracle.hamiltonian import DENSE_MAX_SITES, EDState

logger = logging.getLogger(__name__)

SPECTRAL = "spectral"
KRYLOV = "krylov"
AUTO = "auto"
METHODS = (AUTO, SPECTRAL, KRYLOV)

KRYLOV_TOLERANCE = 1e-9
KRYLOV_DIMENSION = 40
MIN_STEP_FRACTION = 1e-10
EIGSH_TOLERANCE = 1e-12


def _resolve_method(hamiltonian, method):
    if method not in METHODS:
        raise InvalidParameters(f"Método de evolución desconocido: {method}")
    if method == AUTO:
        return SPECTRAL if hamiltonian.N <= DENSE_MAX_SITES else KRYLOV
    return method


def _fix_phase(vector):
    """Fase global con la componente de mayor módulo real y positiva"""
    pivot = vector[np.argmax(np.abs(vector))]
    return vector * (abs(pivot) / pivot)


def ground_state(hamiltonian, method=AUTO):
    method = _resolve_method(hamiltonian, method)
    if method == SPECTRAL:
        energies, vectors = hamiltonian.spectrum
        vector = vectors[:, 0].astype(complex)
    else:
        try:
            energies, vectors = eigsh(
                hamiltonian.as_linear_operator(dtype=float),
                k=1,
                which="SA",
                tol=EIGSH_TOLERANCE,
            )
        except ArpackNoConvergence as exc:
            raise ConvergenceFailure(
                "Lanczos no convergió al estado fundamental",
                diagnostics={"N": hamiltonian.N, "convergidos": len(exc.eigenvalues)},
            ) from exc
        vector = vectors[:, 0].astype(complex)
    vector = _fix_phase(vector / np.linalg.norm(vector))
    logger.debug("Estado fundamental ED (%s): E0 = %.12g", method, energies[0])
    return EDState(hamiltonian.N, vector)


def _lanczos(matvec, psi, dimension):
    """Base ortonormal de Krylov y la tridiagonal (alfa, beta) con reortogonalización completa"""
    basis = [psi / np.linalg.norm(psi)]
    alphas, betas = [], []
    for _ in range(dimension):
        w = matvec(basis[-1])
        alphas.append(np.vdot(basis[-1], w).real)
        stacked = np.array(basis)
        w = w - stacked.T @ (stacked.conj() @ w)
        w = w - stacked.T @ (stacked.conj() @ w)
        beta = np.linalg.norm(w)
        betas.append(beta)
        if beta < 1e-14:
            break
        basis.append(w / beta)
    return np.array(basis[: len(alphas)]), np.array(alphas), np.array(betas)


def krylov_propagate(matvec, psi, t, tol=KRYLOV_TOLERANCE, dimension=KRYLOV_DIMENSION):
    """
    exp(-i H t) psi con subespacios de Krylov sucesivos.

    En cada paso el error se estima como beta_m |<e_m| exp(-i T tau) e_1>|;
    si supera tol el paso tau se reduce a la mitad.
    """
    psi = np.array(psi, dtype=complex)
    norm = np.linalg.norm(psi)
    elapsed, tau, steps = 0.0, float(t), 0
    while elapsed < t:
        tau = min(tau, t - elapsed)
        basis, alphas, betas = _lanczos(matvec, psi, dimension)
        m = alphas.size
        if m == 1:
            eigvals, eigvecs = alphas, np.ones((1, 1))
        else:
            eigvals, eigvecs = eigh_tridiagonal(alphas, betas[: m - 1])
        breakdown = betas[m - 1] < 1e-14
        while True:
            coeffs = eigvecs @ (np.exp(-1j * eigvals * tau) * eigvecs[0])
            error = 0.0 if breakdown else betas[m - 1] * abs(coeffs[-1]) * norm
            if error <= tol:
                break
            tau /= 2.0
            if tau < MIN_STEP_FRACTION * t:
                raise ConvergenceFailure(
                    "El paso de Krylov colapsó sin alcanzar la tolerancia",
                    diagnostics={
                        "t": t,
                        "elapsed": elapsed,
                        "error": f"{error:.2e}",
                        "steps": steps,
                    },
                )
        psi = norm * (basis.T @ coeffs)
        elapsed += tau
        steps += 1
        tau *= 2.0
    logger.debug("Krylov: t = %.4g en %d pasos", t, steps)
    return psi


def evolve(state, t, hamiltonian, method=AUTO):
    """exp(-i H t)|state>"""
    if t < 0:
        raise InvalidParameters(f"Tiempo negativo: t = {t}")
    method = _resolve_method(hamiltonian, method)
    if method == SPECTRAL:
        energies, vectors = hamiltonian.spectrum
        weights = vectors.T @ state.amplitudes
        amplitudes = vectors @ (np.exp(-1j * energies * t) * weights)
    else:
        amplitudes = krylov_propagate(hamiltonian.matvec, state.amplitudes, t)
    return EDState(state.N, amplitudes / np.linalg.norm(amplitudes))


def evolve_series(state, t_grid, hamiltonian, method=AUTO):
    """Estados en cada tiempo de t_grid (ordenado); Krylov avanza de un tiempo al siguiente"""
    t_grid = np.asarray(t_grid, dtype=float)
    if np.any(np.diff(t_grid) < 0):
        raise InvalidParameters("La grilla de tiempos debe ser creciente")
    method = _resolve_method(hamiltonian, method)
    if method == SPECTRAL:
        return [evolve(state, t, hamiltonian, SPECTRAL) for t in t_grid]

    states, current, previous = [], state, 0.0
    for t in t_grid:
        current = evolve(current, t - previous, hamiltonian, KRYLOV)
        states.append(current)
        previous = t
    return states
