"""Dense n-qubit statevector engine.

Qubit ordering is little-endian: qubit 0 is the least significant bit of
the basis index, so ``|q2 q1 q0>`` with q0 = 1 is index 1.

All operations are pure. Every function returns a fresh ``StateVector``
and the amplitude buffers it hands out are read-only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, NonDeterministicOutcomeError

MAX_QUBITS = 20
NORM_TOL = 1e-12
DEFAULT_MEASURE_TOL = 1e-9

_SQRT1_2 = 1.0 / np.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class StateVector:
    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if self.num_qubits < 1:
            raise DomainError(f"num_qubits must be >= 1, got {self.num_qubits}")
        if amps.shape[0] != 1 << self.num_qubits:
            raise DomainError(
                f"expected {1 << self.num_qubits} amplitudes for {self.num_qubits} qubits, "
                f"got {amps.shape[0]}"
            )
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, amplitudes) -> "StateVector":
        amps = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        dim = amps.shape[0]
        if dim < 2 or dim & (dim - 1):
            raise DomainError(f"amplitude count must be a power of two >= 2, got {dim}")
        return cls(dim.bit_length() - 1, amps)

    @classmethod
    def _wrap(cls, num_qubits: int, amplitudes: np.ndarray) -> "StateVector":
        # trusted kernel output: fresh complex128 buffer of the right length
        amplitudes.flags.writeable = False
        obj = object.__new__(cls)
        object.__setattr__(obj, "num_qubits", num_qubits)
        object.__setattr__(obj, "amplitudes", amplitudes)
        return obj

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def allclose(self, other: "StateVector", atol: float = NORM_TOL) -> bool:
        return self.num_qubits == other.num_qubits and bool(
            np.allclose(self.amplitudes, other.amplitudes, rtol=0.0, atol=atol)
        )

    def __repr__(self) -> str:
        return f"StateVector(num_qubits={self.num_qubits}, amplitudes={self.amplitudes!r})"


@dataclass(frozen=True, eq=False)
class SingleQubitGate:
    name: str
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.complex128)
        if m.shape != (2, 2):
            raise DomainError(f"gate {self.name!r} must be 2x2, got shape {m.shape}")
        if not np.allclose(m.conj().T @ m, np.eye(2), rtol=0.0, atol=NORM_TOL):
            raise DomainError(f"gate {self.name!r} is not unitary")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)


I = SingleQubitGate("I", [[1, 0], [0, 1]])
X = SingleQubitGate("X", [[0, 1], [1, 0]])
Z = SingleQubitGate("Z", [[1, 0], [0, -1]])
H = SingleQubitGate("H", [[_SQRT1_2, _SQRT1_2], [_SQRT1_2, -_SQRT1_2]])
# Y is realized as the real product X @ Z (= -iY with the textbook Y), so the
# encoding set {I, X, Z, XZ} carries no complex phases. Global phase does not
# affect orthogonality or decoding.
Y = SingleQubitGate("Y", X.matrix @ Z.matrix)

GATES = {g.name: g for g in (I, X, Y, Z, H)}


def _check_qubit(state: StateVector, index: int, what: str = "target") -> None:
    if not isinstance(index, (int, np.integer)) or isinstance(index, bool):
        raise DomainError(f"{what} qubit index must be an integer, got {index!r}")
    if not 0 <= index < state.num_qubits:
        raise DomainError(
            f"{what} qubit {index} out of range for a {state.num_qubits}-qubit state"
        )


def make_basis_state(num_qubits: int, basis_index: int) -> StateVector:
    if num_qubits < 1:
        raise DomainError(f"num_qubits must be >= 1, got {num_qubits}")
    if num_qubits > MAX_QUBITS:
        raise DomainError(f"num_qubits={num_qubits} exceeds the {MAX_QUBITS}-qubit limit")
    if not 0 <= basis_index < 1 << num_qubits:
        raise DomainError(
            f"basis_index={basis_index} out of range [0, {1 << num_qubits}) "
            f"for {num_qubits} qubits"
        )
    amps = np.zeros(1 << num_qubits, dtype=np.complex128)
    amps[basis_index] = 1.0
    return StateVector(num_qubits, amps)


def apply_matrix(amplitudes: np.ndarray, matrix: np.ndarray, target: int) -> np.ndarray:
    """Apply a 2x2 matrix to one qubit of a raw amplitude array.

    No validation and no normalization requirement, which makes this the
    kernel for linearity checks on unnormalized vectors.
    """
    dim = amplitudes.shape[0]
    low = 1 << target
    view = amplitudes.reshape(dim // (2 * low), 2, low)
    a0, a1 = view[:, 0, :], view[:, 1, :]
    out = np.empty(view.shape, dtype=np.result_type(matrix, amplitudes))
    (m00, m01), (m10, m11) = matrix
    # Paulis are diagonal or anti-diagonal; skip the zero products
    if m01 == 0 and m10 == 0:
        out[:, 0, :] = a0 if m00 == 1 else m00 * a0
        out[:, 1, :] = a1 if m11 == 1 else m11 * a1
    elif m00 == 0 and m11 == 0:
        out[:, 0, :] = a1 if m01 == 1 else m01 * a1
        out[:, 1, :] = a0 if m10 == 1 else m10 * a0
    else:
        out[:, 0, :] = m00 * a0 + m01 * a1
        out[:, 1, :] = m10 * a0 + m11 * a1
    return out.reshape(dim)


def apply_single_qubit_gate(
    state: StateVector, gate: SingleQubitGate, target: int
) -> StateVector:
    _check_qubit(state, target)
    return StateVector._wrap(
        state.num_qubits, apply_matrix(state.amplitudes, gate.matrix, target)
    )


@lru_cache(maxsize=256)
def cnot_permutation(num_qubits: int, control: int, target: int) -> np.ndarray:
    idx = np.arange(1 << num_qubits)
    perm = idx ^ (((idx >> control) & 1) << target)
    perm.flags.writeable = False
    return perm


def apply_cnot(state: StateVector, control: int, target: int) -> StateVector:
    _check_qubit(state, control, "control")
    _check_qubit(state, target, "target")
    if control == target:
        raise DomainError(f"control and target must differ, both are {control}")
    perm = cnot_permutation(state.num_qubits, int(control), int(target))
    # perm is an involution, so gathering equals scattering
    return StateVector._wrap(state.num_qubits, state.amplitudes[perm])


def inner_product(a: StateVector, b: StateVector) -> complex:
    """Return <a|b>, conjugate-linear in ``a``."""
    if a.num_qubits != b.num_qubits:
        raise DomainError(
            f"dimension mismatch: {a.num_qubits} qubits vs {b.num_qubits} qubits"
        )
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def measure_all_deterministic(state: StateVector, tol: float = DEFAULT_MEASURE_TOL) -> int:
    """Read out the basis index that holds probability >= 1 - tol.

    Only meaningful where the outcome is analytically deterministic, such
    as after a dense-coding decoder. Raises NonDeterministicOutcomeError
    carrying the largest probability found otherwise.
    """
    if not 0 < tol < 1:
        raise DomainError(f"tol must lie in (0, 1), got {tol}")
    probs = state.probabilities()
    k = int(np.argmax(probs))
    if probs[k] < 1.0 - tol:
        raise NonDeterministicOutcomeError(probs[k], tol)
    return k
