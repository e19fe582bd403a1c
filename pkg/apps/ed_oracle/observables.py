"""
Observables sobre estados exactos: magnetización, correladores conexos
respecto de un sitio de referencia, temple local y espectros de bloque.
"""

from dataclasses import dataclass

import numpy as np

from apps.core.exceptions import AnnihilatedState, InvalidParameters
from apps.ed_oracle.hamiltonian import EDState, site_bits

ANNIHILATION_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class EDObservables:
    """Arreglos indexados por la distancia R = 0..N-1 al sitio de referencia"""

    sz: np.ndarray
    gx0: np.ndarray
    gz0: np.ndarray


def _sigma_x_expectation(amplitudes, mask):
    partner = np.arange(amplitudes.size) ^ mask
    return float(np.vdot(amplitudes, amplitudes[partner]).real)


def observables(state, site=0):
    """
    <S^z_R>, G_x^0(R) y G_z^0(R) con R medido desde site.

    G^0(R) = <S_site S_site+R> - <S_site><S_site+R>, sin restar t = 0.
    """
    N = state.N
    amplitudes = state.amplitudes
    probability = np.abs(amplitudes) ** 2
    spin_z = 0.5 - site_bits(N)  # S^z de cada sitio en cada estado de la base
    sz = probability @ spin_z

    sites = (site + np.arange(N)) % N
    sx = np.array([0.5 * _sigma_x_expectation(amplitudes, 1 << r) for r in range(N)])
    gx0 = np.empty(N)
    gz0 = np.empty(N)
    for R, other in enumerate(sites):
        if other == site:
            sxsx = 0.25
        else:
            sxsx = 0.25 * _sigma_x_expectation(amplitudes, (1 << site) | (1 << other))
        gx0[R] = sxsx - sx[site] * sx[other]
        szsz = probability @ (spin_z[:, site] * spin_z[:, other])
        gz0[R] = szsz - sz[site] * sz[other]
    return EDObservables(sz=sz[sites], gx0=gx0, gz0=gz0)


def local_quench_state(state, site=0):
    """S^-_site |state> normalizado: baja el espín del sitio"""
    mask = 1 << site
    indices = np.arange(state.amplitudes.size)
    up = (indices & mask) == 0
    flipped = np.zeros_like(state.amplitudes)
    flipped[indices[up] | mask] = state.amplitudes[up]
    norm = np.linalg.norm(flipped)
    if norm < ANNIHILATION_TOLERANCE:
        raise AnnihilatedState(
            f"S^- en el sitio {site} aniquila el estado (|S^- psi| = {norm:.2e})"
        )
    return EDState(state.N, flipped / norm)


def block_sites(start, stop, N):
    """Sitios contiguos start..stop en el anillo"""
    return [r % N for r in range(start, stop + 1)]


def block_spectrum(state, block):
    """Autovalores de rho_A = Tr_B |psi><psi| en orden descendente"""
    N = state.N
    block = [int(r) % N for r in block]
    if not block or len(set(block)) != len(block):
        raise InvalidParameters(f"Bloque inválido: {block}")
    rest = [r for r in range(N) if r not in block]
    # El eje a del tensor corresponde al sitio N - 1 - a
    tensor = state.amplitudes.reshape((2,) * N)
    axes = [N - 1 - r for r in block] + [N - 1 - r for r in rest]
    matrix = np.transpose(tensor, axes).reshape(2 ** len(block), -1)
    rho = matrix @ matrix.conj().T
    eigenvalues = np.linalg.eigvalsh(rho)[::-1]
    return np.clip(eigenvalues, 0.0, None)
