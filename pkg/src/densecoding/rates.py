"""Information rates of the two schemes under a gate-time cost model.

Rate per time is bits over total decoding time:

    pairwise:  2N / (N (t_h + t_c))
    ghz:       (N + 1) / (t_h + N t_c)

and rate per time per particle divides that by the N particles Alice sends
in either scheme. ``erroneous_rate`` is the pairwise rate with 2^N bits in
the numerator; it is wrong and exists only as a labeled comparison column.

The arithmetic is written so that ``fractions.Fraction`` timings give exact
rational results.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from numbers import Real

from .errors import DomainError, VerificationError
from .protocols import Scheme, SchemeConfig, decoding_time, expected_ledger
from .verification import best_method, capacity

# 2.0**n is exact for n below the float exponent limit
MAX_EXACT_POWER = 1023


@dataclass(frozen=True)
class TimingModel:
    t_h: Real = 1.0
    t_c: Real = 1.0

    def __post_init__(self):
        for name in ("t_h", "t_c"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, Real):
                raise DomainError(f"{name} must be a real number, got {value!r}")
            if not (value > 0 and math.isfinite(value)):
                raise DomainError(f"{name} must be positive and finite, got {value}")


class CapacitySource(str, enum.Enum):
    FORMULA = "formula"
    SIMULATED = "simulated"


@dataclass(frozen=True)
class RateReport:
    scheme: Scheme
    n: int
    bits: float
    particles_sent: int
    total_time: float
    rate_per_time: float
    rate_per_time_per_particle: float
    erroneous_rate_per_time: float | None = None


def _check_n(n) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be an integer >= 1, got {n!r}")
    return n


def _check_timing(timing) -> TimingModel:
    if not isinstance(timing, TimingModel):
        raise DomainError(f"timing must be a TimingModel, got {type(timing).__name__}")
    return timing


def rate_eq1(scheme: Scheme | str, n: int, timing: TimingModel):
    """Bits per unit decoding time."""
    scheme = Scheme.parse(scheme)
    n = _check_n(n)
    t = _check_timing(timing)
    if scheme is Scheme.PAIRWISE:
        return (2 * n) / (n * (t.t_h + t.t_c))
    return (n + 1) / (t.t_h + n * t.t_c)


def rate_eq2(scheme: Scheme | str, n: int, timing: TimingModel):
    """Bits per unit decoding time per sent particle (N in both schemes)."""
    return rate_eq1(scheme, n, timing) / _check_n(n)


def erroneous_rate(n: int, timing: TimingModel):
    """The incorrect 2^N-bit pairwise rate, for side-by-side tables only."""
    n = _check_n(n)
    t = _check_timing(timing)
    if n > MAX_EXACT_POWER:
        raise DomainError(f"2^n is not representable for n={n} > {MAX_EXACT_POWER}")
    return 2**n / (n * (t.t_h + t.t_c))


def rate_ratio_limit(timing: TimingModel):
    """Limit of rate_eq1(pairwise) / rate_eq1(ghz) as N grows: 2 t_c / (t_h + t_c)."""
    t = _check_timing(timing)
    return 2 * t.t_c / (t.t_h + t.t_c)


def rate_ratio_bound(timing: TimingModel):
    """Supremum over N >= 1 of rate_eq1(pairwise) / rate_eq1(ghz).

    The ratio 2(t_h + N t_c) / ((N + 1)(t_h + t_c)) equals 1 at N = 1 and
    moves monotonically toward ``rate_ratio_limit``, so the supremum is the
    larger of the two. Either way it never exceeds 2.
    """
    return max(1, rate_ratio_limit(timing))


def rate_report(
    scheme: Scheme | str, n: int, timing: TimingModel, bits: float | None = None
) -> RateReport:
    scheme = Scheme.parse(scheme)
    config = SchemeConfig(scheme, _check_n(n))
    if bits is None:
        bits = config.bits
    total_time = decoding_time(config, expected_ledger(config), _check_timing(timing))
    r1 = bits / total_time
    return RateReport(
        scheme=scheme,
        n=n,
        bits=bits,
        particles_sent=n,
        total_time=total_time,
        rate_per_time=r1,
        rate_per_time_per_particle=r1 / n,
        erroneous_rate_per_time=erroneous_rate(n, timing) if scheme is Scheme.PAIRWISE else None,
    )


def simulated_bits(config: SchemeConfig) -> float:
    """Capacity in bits from the cheapest feasible brute-force certificate."""
    return capacity(config, best_method(config)).bits


def compare_schemes(
    n_min: int,
    n_max: int,
    timing: TimingModel,
    capacity_source: CapacitySource | str = CapacitySource.FORMULA,
) -> list[tuple[RateReport, RateReport]]:
    """One (pairwise, ghz) report pair per N in [n_min, n_max]."""
    n_min, n_max = _check_n(n_min), _check_n(n_max)
    if n_min > n_max:
        raise DomainError(f"n_min={n_min} exceeds n_max={n_max}")
    source = CapacitySource(capacity_source)
    if source is CapacitySource.SIMULATED:
        # fail fast before any brute force runs
        for scheme in Scheme:
            best_method(SchemeConfig(scheme, n_max))
    out = []
    for n in range(n_min, n_max + 1):
        pair = []
        for scheme in Scheme:
            config = SchemeConfig(scheme, n)
            bits = None
            if source is CapacitySource.SIMULATED:
                bits = simulated_bits(config)
                if bits != config.bits:
                    raise VerificationError(
                        f"simulated capacity {bits} bits disagrees with closed form "
                        f"{config.bits} for {scheme.value} n={n}"
                    )
            pair.append(rate_report(scheme, n, timing, bits))
        out.append(tuple(pair))
    return out
