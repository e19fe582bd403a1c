"""
Hamiltoniano de la cadena en la base producto de sigma^z, sin matriz:

    H = sum_{i<j} J / d(i, j)^alpha sigma^x_i sigma^x_j - h sum_i sigma^z_i

que con S = sigma/2 es sum_{R != R'} 2J / d^alpha S^x_R S^x_R' - 2h sum_R S^z_R.
El bit r del índice es el espín del sitio r (1 = abajo).
"""

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.linalg import eigh
from scipy.sparse.linalg import LinearOperator

from apps.core.exceptions import InvalidParameters, SizeLimit

logger = logging.getLogger(__name__)

MAX_SITES = 14
DENSE_MAX_SITES = 12
NORM_TOLERANCE = 1e-10


def site_bits(N):
    """Matriz [2^N x N] con el bit de cada sitio para cada estado de la base"""
    return (np.arange(2**N)[:, None] >> np.arange(N)) & 1


def pair_distance(i, j, N, boundary):
    d = abs(i - j)
    return min(d, N - d) if boundary == "periodic" else d


@dataclass(frozen=True, eq=False)
class EDState:
    N: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amplitudes = np.array(self.amplitudes, dtype=complex)
        if amplitudes.shape != (2**self.N,):
            raise InvalidParameters(
                f"El estado de N = {self.N} sitios necesita {2**self.N} amplitudes"
            )
        norm = np.linalg.norm(amplitudes)
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise InvalidParameters(f"Estado no normalizado: |psi| = {norm:.12f}")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def product(cls, N, index=0):
        """Estado producto de la base; index = 0 es todo arriba"""
        amplitudes = np.zeros(2**N, dtype=complex)
        amplitudes[index] = 1.0
        return cls(N, amplitudes)

    def overlap(self, other):
        return complex(np.vdot(self.amplitudes, other.amplitudes))


class SpinChainHamiltonian:
    """Aplicación |psi> -> H|psi> por enumeración de bits"""

    def __init__(self, params):
        if params.N > MAX_SITES:
            raise SizeLimit(f"N = {params.N} supera el máximo de {MAX_SITES} sitios para ED")
        self.params = params
        self.N = params.N
        self.dim = 2**params.N
        bits = site_bits(self.N)
        self.diagonal = -params.h * np.sum(1 - 2 * bits, axis=1).astype(float)

        indices = np.arange(self.dim)
        self.flips = []
        for i in range(self.N):
            for j in range(i + 1, self.N):
                d = pair_distance(i, j, self.N, params.boundary)
                coupling = params.J / d**params.alpha
                if coupling != 0:
                    self.flips.append((coupling, indices ^ ((1 << i) | (1 << j))))
        logger.debug(
            "Hamiltoniano ED: N=%d, %d pares, contorno %s",
            self.N,
            len(self.flips),
            params.boundary,
        )

    def matvec(self, psi):
        psi = np.asarray(psi)
        result = self.diagonal * psi
        for coupling, partner in self.flips:
            result = result + coupling * psi[partner]
        return result

    def as_linear_operator(self, dtype=complex):
        return LinearOperator(
            (self.dim, self.dim), matvec=self.matvec, rmatvec=self.matvec, dtype=dtype
        )

    def to_dense(self):
        if self.N > DENSE_MAX_SITES:
            raise SizeLimit(
                f"Matriz densa limitada a N <= {DENSE_MAX_SITES} (N = {self.N})"
            )
        matrix = np.diag(self.diagonal)
        columns = np.arange(self.dim)
        for coupling, partner in self.flips:
            matrix[partner, columns] += coupling
        return matrix

    @cached_property
    def spectrum(self):
        """Autovalores y autovectores de la matriz densa (N <= 12)"""
        return eigh(self.to_dense())

    def energy(self, state):
        return float(np.vdot(state.amplitudes, self.matvec(state.amplitudes)).real)


def build_hamiltonian(params):
    return SpinChainHamiltonian(params)
