"""Brute-force capacity certificates.

Two independent routes count how many messages a scheme carries:

* ``Method.GRAM``: encode every message and check the Gram matrix of the
  encoded states is the identity (perfect single-shot distinguishability).
* ``Method.ROUND_TRIP``: encode and decode every message and count the
  exact recoveries.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .errors import CapacityLimitError, DomainError, NonDeterministicOutcomeError
from .protocols import Scheme, SchemeConfig, decode, encode, prepare_initial_state
from .statevector import StateVector

DEFAULT_TOL = 1e-10

# Largest n per (scheme, method). The Gram limits keep the encoded set at
# <= 8192 states; round trip is bounded by wall time (~seconds).
FEASIBILITY = {
    (Scheme.PAIRWISE, "gram"): 4,
    (Scheme.MAX_ENTANGLED, "gram"): 12,
    (Scheme.PAIRWISE, "roundtrip"): 6,
    (Scheme.MAX_ENTANGLED, "roundtrip"): 12,
}


class Method(str, enum.Enum):
    GRAM = "gram"
    ROUND_TRIP = "roundtrip"


@dataclass(frozen=True)
class CapacityReport:
    scheme: Scheme
    n: int
    message_count: int
    bits: float
    method: Method
    max_off_diagonal: float | None = None

    @property
    def expected_bits(self) -> int:
        return SchemeConfig(self.scheme, self.n).bits


def _stack_sparse(states: Iterable[StateVector]) -> sparse.csr_matrix:
    data, cols, indptr = [], [], [0]
    dim = None
    for s in states:
        if dim is None:
            dim = s.dim
        elif s.dim != dim:
            raise DomainError(f"dimension mismatch: {s.dim} vs {dim}")
        nz = np.flatnonzero(s.amplitudes)
        cols.append(nz)
        data.append(s.amplitudes[nz])
        indptr.append(indptr[-1] + nz.size)
    if dim is None:
        raise DomainError("gram_check needs at least one state")
    return sparse.csr_matrix(
        (np.concatenate(data), np.concatenate(cols), np.asarray(indptr)),
        shape=(len(indptr) - 1, dim),
    )


def gram_matrix(states: Iterable[StateVector]) -> sparse.csr_matrix:
    """Sparse Gram matrix G[i, j] = <psi_i|psi_j>.

    Only exact zeros are dropped, so the result equals the dense product.
    Encoded dense-coding states have few nonzero amplitudes, which keeps
    this cheap even for thousands of states.
    """
    m = _stack_sparse(states)
    return (m.conj() @ m.T).tocsr()


def _gram_stats(gram: sparse.csr_matrix) -> tuple[float, float]:
    diag = gram.diagonal()
    diag_err = float(np.max(np.abs(diag - 1.0))) if diag.size else 0.0
    off = gram - sparse.diags(diag)
    off_abs = np.abs(off.data)
    return diag_err, float(off_abs.max()) if off_abs.size else 0.0


def gram_check(states: Iterable[StateVector], tol: float = DEFAULT_TOL) -> tuple[bool, float]:
    """Return (is_orthonormal, max |<psi_i|psi_j>| over i != j)."""
    if not 0 < tol < 1:
        raise DomainError(f"tol must lie in (0, 1), got {tol}")
    diag_err, max_off = _gram_stats(gram_matrix(states))
    return (diag_err <= tol and max_off < tol), max_off


def _greedy_orthonormal_count(gram: sparse.csr_matrix, tol: float) -> int:
    # greedy: keep a message if it is normalized and orthogonal to every kept one
    gram = abs(gram).tocsr()
    kept: list[int] = []
    kept_mask = np.zeros(gram.shape[0], dtype=bool)
    for i in range(gram.shape[0]):
        if abs(gram[i, i] - 1.0) > tol:
            continue
        row = gram.getrow(i)
        clash = row.indices[(row.data >= tol) & kept_mask[row.indices]]
        if clash.size == 0:
            kept.append(i)
            kept_mask[i] = True
    return len(kept)


def check_feasible(config: SchemeConfig, method: Method | str) -> None:
    method = Method(method)
    bound = FEASIBILITY[(config.scheme, method.value)]
    if config.n > bound:
        raise CapacityLimitError(
            f"{method.value} capacity for {config.scheme.value} is limited to n <= {bound}, "
            f"got n={config.n}",
            bound,
        )


def best_method(config: SchemeConfig) -> Method:
    """Gram when feasible, else round trip; CapacityLimitError if neither is."""
    for method in Method:
        if config.n <= FEASIBILITY[(config.scheme, method.value)]:
            return method
    check_feasible(config, Method.ROUND_TRIP)
    raise AssertionError("unreachable")


def encoded_states(config: SchemeConfig) -> Iterable[StateVector]:
    initial = prepare_initial_state(config)
    for m in range(config.capacity):
        yield encode(config, initial, m)


def capacity(
    config: SchemeConfig, method: Method | str = Method.GRAM, tol: float = DEFAULT_TOL
) -> CapacityReport:
    """Count the perfectly distinguishable messages of ``config`` by brute force."""
    method = Method(method)
    if not 0 < tol < 1:
        raise DomainError(f"tol must lie in (0, 1), got {tol}")
    check_feasible(config, method)

    max_off = None
    if method is Method.GRAM:
        gram = gram_matrix(encoded_states(config))
        diag_err, max_off = _gram_stats(gram)
        if diag_err <= tol and max_off < tol:
            count = gram.shape[0]
        else:
            count = _greedy_orthonormal_count(gram, tol)
    else:
        initial = prepare_initial_state(config)
        count = 0
        for m in range(config.capacity):
            try:
                decoded, _ = decode(config, encode(config, initial, m))
            except NonDeterministicOutcomeError:
                continue
            count += decoded == m
    bits = math.log2(count) if count else 0.0
    return CapacityReport(config.scheme, config.n, count, bits, method, max_off)
