import numpy as np
from hypothesis import strategies as st

from densecoding.statevector import StateVector

# filled by test_acceptance, printed by the terminal-summary hook in conftest
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def random_state(rng, n):
    v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return StateVector(n, v / np.linalg.norm(v))


@st.composite
def states(draw, min_qubits=1, max_qubits=5):
    n = draw(st.integers(min_qubits, max_qubits))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_state(np.random.default_rng(seed), n)
