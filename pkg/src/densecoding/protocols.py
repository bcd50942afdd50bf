"""Preparation, encoding and decoding for the two multiqubit dense-coding schemes.

Pairwise
    N Bell pairs on 2N qubits. Pair k lives on qubits 2k (Alice) and
    2k+1 (Bob). A message is read as N base-4 digits, digit k selecting
    one of I, X, Z, XZ for Alice's qubit of pair k. 4^N messages.

MaxEntangled ("ghz")
    One (N+1)-qubit GHZ state. Qubit 0 stays with Bob, qubits 1..N belong
    to Alice. Bit 0 of the message is the phase bit (Z on qubit 1), bits
    1..N flip Alice's qubits 1..N. 2^(N+1) messages.

The decoders are the circuits whose gate costs are N(t_h + t_c) and
t_h + N t_c respectively, and they report the gates they actually ran in
a ``GateLedger``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import CapacityLimitError, DomainError
from .statevector import (
    DEFAULT_MEASURE_TOL,
    MAX_QUBITS,
    H,
    StateVector,
    X,
    Y,
    Z,
    apply_cnot,
    apply_single_qubit_gate,
    measure_all_deterministic,
)


class Scheme(str, enum.Enum):
    PAIRWISE = "pairwise"
    MAX_ENTANGLED = "ghz"

    @classmethod
    def parse(cls, value: "Scheme | str") -> "Scheme":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("-", "").replace("_", "")
        aliases = {
            "pairwise": cls.PAIRWISE,
            "ghz": cls.MAX_ENTANGLED,
            "maxentangled": cls.MAX_ENTANGLED,
        }
        try:
            return aliases[key]
        except KeyError:
            raise DomainError(f"unknown scheme {value!r}") from None


@dataclass(frozen=True)
class SchemeConfig:
    scheme: Scheme
    n: int

    def __post_init__(self):
        object.__setattr__(self, "scheme", Scheme.parse(self.scheme))
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)):
            raise DomainError(f"n must be an integer, got {self.n!r}")
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        object.__setattr__(self, "n", int(self.n))

    @property
    def num_qubits(self) -> int:
        return 2 * self.n if self.scheme is Scheme.PAIRWISE else self.n + 1

    @property
    def capacity(self) -> int:
        """Number of distinct messages the encoder accepts."""
        return 4**self.n if self.scheme is Scheme.PAIRWISE else 2 ** (self.n + 1)

    @property
    def bits(self) -> int:
        return 2 * self.n if self.scheme is Scheme.PAIRWISE else self.n + 1

    @property
    def alice_qubits(self) -> tuple[int, ...]:
        if self.scheme is Scheme.PAIRWISE:
            return tuple(range(0, 2 * self.n, 2))
        return tuple(range(1, self.n + 1))

    @property
    def bob_qubits(self) -> tuple[int, ...]:
        if self.scheme is Scheme.PAIRWISE:
            return tuple(range(1, 2 * self.n, 2))
        return (0,)

    def check_register(self) -> None:
        if self.num_qubits > MAX_QUBITS:
            raise CapacityLimitError(
                f"{self.scheme.value} n={self.n} needs {self.num_qubits} qubits, "
                f"limit is {MAX_QUBITS}",
                MAX_QUBITS,
            )


@dataclass(frozen=True)
class GateLedger:
    hadamard_count: int = 0
    cnot_count: int = 0


def expected_ledger(config: SchemeConfig) -> GateLedger:
    if config.scheme is Scheme.PAIRWISE:
        return GateLedger(config.n, config.n)
    return GateLedger(1, config.n)


# Pairwise digit -> (x bit, z bit)
_PAULI_BY_DIGIT = {0: (), 1: (X,), 2: (Z,), 3: (Y,)}


def prepare_initial_state(config: SchemeConfig) -> StateVector:
    config.check_register()
    dim = 1 << config.num_qubits
    amps = np.zeros(dim, dtype=np.complex128)
    if config.scheme is Scheme.MAX_ENTANGLED:
        amps[0] = amps[dim - 1] = 1.0 / np.sqrt(2.0)
        return StateVector(config.num_qubits, amps)
    # product of Bell pairs: each pair contributes |00> or |11>, i.e. bit
    # pattern 0b00 or 0b11 at positions (2k, 2k+1)
    pair_patterns = np.zeros(1, dtype=np.int64)
    for k in range(config.n):
        pair_patterns = np.concatenate([pair_patterns, pair_patterns | (3 << (2 * k))])
    amps[pair_patterns] = 2.0 ** (-config.n / 2)
    return StateVector(config.num_qubits, amps)


def _check_message(config: SchemeConfig, message: int) -> int:
    if isinstance(message, bool) or not isinstance(message, (int, np.integer)):
        raise DomainError(f"message must be an integer, got {message!r}")
    if not 0 <= message < config.capacity:
        raise DomainError(
            f"message {message} out of range: {config.scheme.value} n={config.n} "
            f"has capacity {config.capacity}"
        )
    return int(message)


def _check_state(config: SchemeConfig, state: StateVector) -> None:
    if state.num_qubits != config.num_qubits:
        raise DomainError(
            f"state has {state.num_qubits} qubits, {config.scheme.value} n={config.n} "
            f"uses {config.num_qubits}"
        )


def encode(config: SchemeConfig, initial: StateVector, message: int) -> StateVector:
    """Alice's local Pauli encoding of ``message`` onto ``initial``."""
    message = _check_message(config, message)
    _check_state(config, initial)
    state = initial
    if config.scheme is Scheme.PAIRWISE:
        for k in range(config.n):
            digit = (message >> (2 * k)) & 3
            for gate in _PAULI_BY_DIGIT[digit]:
                state = apply_single_qubit_gate(state, gate, 2 * k)
        return state
    for i in range(1, config.n + 1):
        if (message >> i) & 1:
            state = apply_single_qubit_gate(state, X, i)
    if message & 1:
        state = apply_single_qubit_gate(state, Z, 1)
    return state


def decode(
    config: SchemeConfig, received: StateVector, tol: float = DEFAULT_MEASURE_TOL
) -> tuple[int, GateLedger]:
    """Run Bob's disentangling circuit and read the message out.

    Returns the decoded message and the ledger of gates executed.
    """
    _check_state(config, received)
    state = received
    hadamards = cnots = 0
    if config.scheme is Scheme.PAIRWISE:
        for k in range(config.n):
            state = apply_cnot(state, 2 * k, 2 * k + 1)
            state = apply_single_qubit_gate(state, H, 2 * k)
            cnots += 1
            hadamards += 1
        outcome = measure_all_deterministic(state, tol)
        message = 0
        for k in range(config.n):
            z_bit = (outcome >> (2 * k)) & 1
            x_bit = (outcome >> (2 * k + 1)) & 1
            message |= (x_bit | (z_bit << 1)) << (2 * k)
        return message, GateLedger(hadamards, cnots)

    for i in range(1, config.n + 1):
        state = apply_cnot(state, 0, i)
        cnots += 1
    state = apply_single_qubit_gate(state, H, 0)
    hadamards += 1
    # qubit 0 carries the phase bit and qubits 1..N the flips, which is
    # exactly the message layout
    return measure_all_deterministic(state, tol), GateLedger(hadamards, cnots)


def decoding_time(config: SchemeConfig, ledger: GateLedger, timing) -> float:
    """Total sequential gate time of a decoding run.

    ``timing`` is a ``rates.TimingModel`` (anything with positive ``t_h``
    and ``t_c``).
    """
    t_h, t_c = timing.t_h, timing.t_c
    if not (t_h > 0 and t_c > 0):
        raise DomainError(f"gate times must be positive, got t_h={t_h}, t_c={t_c}")
    return ledger.hadamard_count * t_h + ledger.cnot_count * t_c


def round_trip(config: SchemeConfig, message: int) -> tuple[int, GateLedger]:
    """Prepare, encode ``message``, decode. Returns (decoded, ledger)."""
    encoded = encode(config, prepare_initial_state(config), message)
    return decode(config, encoded)
