"""Exact statevector simulation and rate analysis for multiqubit dense coding."""

from .errors import (
    CapacityLimitError,
    DomainError,
    NonDeterministicOutcomeError,
    VerificationError,
)
from .protocols import (
    GateLedger,
    Scheme,
    SchemeConfig,
    decode,
    decoding_time,
    encode,
    expected_ledger,
    prepare_initial_state,
    round_trip,
)
from .rates import (
    CapacitySource,
    RateReport,
    TimingModel,
    compare_schemes,
    erroneous_rate,
    rate_eq1,
    rate_eq2,
    rate_ratio_bound,
    rate_ratio_limit,
    rate_report,
)
from .statevector import (
    StateVector,
    SingleQubitGate,
    apply_cnot,
    apply_single_qubit_gate,
    inner_product,
    make_basis_state,
    measure_all_deterministic,
)
from .verification import CapacityReport, Method, capacity, gram_check

__version__ = "0.1.0"
