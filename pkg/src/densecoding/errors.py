"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument is outside the domain an operation accepts."""


class NonDeterministicOutcomeError(RuntimeError):
    """No basis state carries (almost) all of the probability.

    Raised by deterministic readout. Seeing it from a decoder means the
    circuit or the received state is wrong, not that the caller misused
    the API.
    """

    def __init__(self, max_probability: float, tol: float):
        self.max_probability = float(max_probability)
        self.tol = tol
        super().__init__(
            f"outcome is not deterministic: max probability {self.max_probability:.12g} "
            f"< 1 - {tol:g}"
        )


class CapacityLimitError(DomainError):
    """A requested computation exceeds the configured feasibility bound."""

    def __init__(self, message: str, bound: int):
        self.bound = bound
        super().__init__(message)


class VerificationError(AssertionError):
    """A brute-force certificate disagrees with the closed-form capacity."""
