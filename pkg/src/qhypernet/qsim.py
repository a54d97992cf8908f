"""Dense state-vector simulation of small qubit registers.

Implements exactly what the hypernetwork circuit needs: RY, RZ and CX
gates, exact Born-rule probabilities, and seeded measurement sampling.

Indexing convention, used by every module in this package: the integer
index of a basis state is sum_i bits[i] * 2**i, i.e. qubit 0 is the
least significant bit. Bitstrings are numpy arrays of 0/1 with bits[i]
holding the value of qubit i.

Gates mutate the state vector in place via bit-masked pair updates
(O(2^N) per gate); global phase is not tracked, only probabilities are
contractual.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import cos, sin

import numpy as np

MAX_QUBITS = 24


@dataclass
class StateVector:
    """2**n_qubits complex amplitudes of an n-qubit register."""

    n_qubits: int
    amplitudes: np.ndarray

    def copy(self) -> "StateVector":
        return StateVector(self.n_qubits, self.amplitudes.copy())


def zero_state(n_qubits: int) -> StateVector:
    """|0...0> on n_qubits qubits."""
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise ValueError(f"n_qubits must be in [1, {MAX_QUBITS}], got {n_qubits}")
    amps = np.zeros(2**n_qubits, dtype=complex)
    amps[0] = 1.0
    return StateVector(n_qubits, amps)


def _paired(state: StateVector, qubit: int) -> np.ndarray:
    # View of shape (high bits, qubit value, low bits); writes hit the state.
    if not 0 <= qubit < state.n_qubits:
        raise IndexError(f"qubit {qubit} out of range for {state.n_qubits} qubits")
    return state.amplitudes.reshape(-1, 2, 1 << qubit)


def apply_ry(state: StateVector, qubit: int, angle: float) -> StateVector:
    """Rotate `qubit` by RY(angle) = [[cos a/2, -sin a/2], [sin a/2, cos a/2]]."""
    v = _paired(state, qubit)
    c, s = cos(0.5 * angle), sin(0.5 * angle)
    a0 = v[:, 0, :].copy()
    v[:, 0, :] = c * a0 - s * v[:, 1, :]
    v[:, 1, :] = s * a0 + c * v[:, 1, :]
    return state


def apply_rz(state: StateVector, qubit: int, angle: float) -> StateVector:
    """Phase `qubit` by RZ(angle) = diag(exp(-i a/2), exp(+i a/2))."""
    v = _paired(state, qubit)
    v[:, 0, :] *= np.exp(-0.5j * angle)
    v[:, 1, :] *= np.exp(0.5j * angle)
    return state


@lru_cache(maxsize=None)
def _cx_pairs(n_qubits: int, control: int, target: int) -> tuple[np.ndarray, np.ndarray]:
    idx = np.arange(1 << n_qubits)
    take = (((idx >> control) & 1) == 1) & (((idx >> target) & 1) == 0)
    src = idx[take]
    return src, src | (1 << target)


def apply_cx(state: StateVector, control: int, target: int) -> StateVector:
    """Flip `target` on all basis states whose `control` bit is 1."""
    n = state.n_qubits
    if control == target:
        raise ValueError("control and target must differ")
    if not (0 <= control < n and 0 <= target < n):
        raise IndexError(f"qubit pair ({control}, {target}) out of range for {n} qubits")
    src, dst = _cx_pairs(n, control, target)
    amps = state.amplitudes
    tmp = amps[src].copy()
    amps[src] = amps[dst]
    amps[dst] = tmp
    return state


def probabilities(state: StateVector) -> np.ndarray:
    """Born-rule probabilities |amplitude|^2 for all 2^N basis states."""
    a = state.amplitudes
    return a.real**2 + a.imag**2


def sample(state: StateVector, n_shots: int, rng_seed: int) -> np.ndarray:
    """Draw ``n_shots`` i.i.d. measurement outcomes.

    Returns a (n_shots, n_qubits) uint8 array; row i is one measured
    bitstring with column j the value of qubit j. Deterministic per seed.
    """
    if n_shots < 1:
        raise ValueError("n_shots must be >= 1")
    return int_to_bits(sample_ints(state, n_shots, rng_seed), state.n_qubits)


def sample_ints(state: StateVector, n_shots: int, rng_seed: int) -> np.ndarray:
    """Like :func:`sample` but returns the basis-state integer indices."""
    rng = np.random.default_rng(rng_seed)
    p = probabilities(state)
    p = p / p.sum()  # clear 1e-10-level norm drift
    return rng.choice(p.size, size=n_shots, p=p)


def bits_to_int(bits: np.ndarray) -> np.ndarray | int:
    """Basis-state index of a bitstring (or of each row of a bit matrix)."""
    bits = np.asarray(bits)
    weights = 1 << np.arange(bits.shape[-1])
    out = bits @ weights
    return int(out) if out.ndim == 0 else out


def int_to_bits(index, n_qubits: int) -> np.ndarray:
    """Bitstring(s) of basis-state index(es); inverse of :func:`bits_to_int`."""
    idx = np.asarray(index)
    return ((idx[..., None] >> np.arange(n_qubits)) & 1).astype(np.uint8)


def all_bitstrings(n_qubits: int) -> np.ndarray:
    """All 2^N bitstrings as a (2^N, N) matrix, row i = bits of index i."""
    return int_to_bits(np.arange(1 << n_qubits), n_qubits)
