from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from densecoding.errors import CapacityLimitError, DomainError
from densecoding.protocols import Scheme
from densecoding.rates import (
    MAX_EXACT_POWER,
    CapacitySource,
    TimingModel,
    compare_schemes,
    erroneous_rate,
    rate_eq1,
    rate_eq2,
    rate_ratio_bound,
    rate_ratio_limit,
    rate_report,
)

PW, GHZ = Scheme.PAIRWISE, Scheme.MAX_ENTANGLED
UNIT = TimingModel(1.0, 1.0)

times = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False, allow_infinity=False)


@pytest.mark.parametrize("t_h, t_c", [(0, 1), (1, 0), (-1, 1), (float("inf"), 1), (float("nan"), 1), ("1", 1)])
def test_timing_rejects(t_h, t_c):
    with pytest.raises(DomainError):
        TimingModel(t_h, t_c)


def test_eq1_examples():
    assert rate_eq1(GHZ, 4, UNIT) == 1.0
    assert rate_eq1(PW, 4, TimingModel(0.5, 1.0)) == pytest.approx(8 / 6, abs=1e-15)
    assert rate_eq1(PW, 4, TimingModel(Fraction(1, 2), Fraction(1))) == Fraction(4, 3)


@pytest.mark.parametrize("n", [1, 2, 7, 64])
@pytest.mark.parametrize("t", [0.25, 1.0, 3.7])
def test_equal_time_identity(n, t):
    timing = TimingModel(t, t)
    assert rate_eq1(PW, n, timing) == pytest.approx(1 / t, abs=1e-12)
    assert rate_eq1(GHZ, n, timing) == pytest.approx(1 / t, abs=1e-12)
    exact = TimingModel(Fraction(t), Fraction(t))
    assert rate_eq1(PW, n, exact) == rate_eq1(GHZ, n, exact) == 1 / Fraction(t)


def test_eq2_examples():
    assert rate_eq2(PW, 1, UNIT) == 1.0
    assert rate_eq2(GHZ, 1, UNIT) == 1.0 == rate_eq2(PW, 1, UNIT)
    assert rate_eq2(PW, 4, UNIT) == 0.25


@settings(max_examples=100)
@given(n=st.integers(1, 64), t_h=times, t_c=times)
def test_eq2_closed_forms(n, t_h, t_c):
    t = TimingModel(Fraction(t_h), Fraction(t_c))
    assert rate_eq2(PW, n, t) == Fraction(2) / (n * (t.t_h + t.t_c))
    assert rate_eq2(GHZ, n, t) == Fraction(n + 1) / (n * (t.t_h + n * t.t_c))


def test_erroneous_examples():
    assert erroneous_rate(1, UNIT) == 1.0 == rate_eq1(PW, 1, UNIT)
    assert erroneous_rate(4, UNIT) == 2.0
    assert rate_eq1(PW, 4, UNIT) == 1.0
    assert erroneous_rate(10, UNIT) == 51.2
    assert rate_eq1(PW, 10, UNIT) == 1.0


def test_erroneous_rate_domain():
    assert erroneous_rate(MAX_EXACT_POWER, UNIT) > 0
    with pytest.raises(DomainError):
        erroneous_rate(MAX_EXACT_POWER + 1, UNIT)


@pytest.mark.parametrize("fn", [lambda n: rate_eq1(PW, n, UNIT), lambda n: rate_eq2(GHZ, n, UNIT), lambda n: erroneous_rate(n, UNIT)])
@pytest.mark.parametrize("n", [0, -1, 2.0, True])
def test_rates_reject_bad_n(fn, n):
    with pytest.raises(DomainError):
        fn(n)


def test_rates_reject_untyped_timing():
    with pytest.raises(DomainError):
        rate_eq1(PW, 1, (1.0, 1.0))


@settings(max_examples=200)
@given(n=st.integers(1, 10**6), t_h=times, t_c=times)
def test_ratio_bounded(n, t_h, t_c):
    t = TimingModel(t_h, t_c)
    assert rate_eq1(PW, n, t) / rate_eq1(GHZ, n, t) <= rate_ratio_bound(t) + 1e-9


@settings(max_examples=100)
@given(n=st.integers(1, 200), t_h=times, t_c=times)
def test_ratio_exact_form_and_monotone(n, t_h, t_c):
    # exact rational check of 2(t_h + N t_c) / ((N + 1)(t_h + t_c)), which
    # moves monotonically toward the limit 2 t_c / (t_h + t_c)
    t = TimingModel(Fraction(t_h), Fraction(t_c))
    ratio = rate_eq1(PW, n, t) / rate_eq1(GHZ, n, t)
    assert ratio == 2 * (t.t_h + n * t.t_c) / ((n + 1) * (t.t_h + t.t_c))
    limit = rate_ratio_limit(t)
    nxt = rate_eq1(PW, n + 1, t) / rate_eq1(GHZ, n + 1, t)
    assert abs(limit - nxt) <= abs(limit - ratio)


def test_limit_alone_is_not_a_bound_when_hadamard_slower():
    # t_h > t_c: the ratio starts at 1 and decreases toward a limit below 1
    t = TimingModel(2.0, 1.0)
    assert rate_ratio_limit(t) == pytest.approx(2 / 3)
    assert rate_eq1(PW, 1, t) / rate_eq1(GHZ, 1, t) == 1.0
    assert rate_ratio_bound(t) == 1


@settings(max_examples=100)
@given(t_h=times, t_c=times)
def test_ratio_bound_never_exceeds_two(t_h, t_c):
    assert rate_ratio_bound(TimingModel(t_h, t_c)) < 2


def test_rate_report_fields():
    r = rate_report(PW, 3, TimingModel(1.0, 2.0))
    assert (r.bits, r.particles_sent, r.total_time) == (6, 3, 9.0)
    assert r.rate_per_time == pytest.approx(6 / 9, abs=1e-15)
    assert r.rate_per_time_per_particle == r.rate_per_time / 3
    assert r.erroneous_rate_per_time == pytest.approx(8 / 9, abs=1e-15)
    g = rate_report(GHZ, 3, TimingModel(1.0, 2.0))
    assert (g.bits, g.total_time, g.erroneous_rate_per_time) == (4, 7.0, None)


def test_compare_formula_n1():
    [(pw, me)] = compare_schemes(1, 1, UNIT, CapacitySource.FORMULA)
    assert pw.scheme is PW and me.scheme is GHZ
    assert pw.bits == me.bits == 2
    assert pw.rate_per_time == me.rate_per_time == 1.0


def test_compare_simulated_bits():
    pairs = compare_schemes(1, 4, UNIT, "simulated")
    assert [p.bits for p, _ in pairs] == [2, 4, 6, 8]
    assert [g.bits for _, g in pairs] == [2, 3, 4, 5]
    formula = compare_schemes(1, 4, UNIT, "formula")
    assert pairs == formula


def test_compare_simulated_infeasible_fails_fast():
    with pytest.raises(CapacityLimitError):
        compare_schemes(1, 7, UNIT, "simulated")


def test_compare_rejects_reversed_range():
    with pytest.raises(DomainError):
        compare_schemes(3, 2, UNIT)


def test_compare_ratio_approaches_four_thirds():
    t = TimingModel(1.0, 2.0)
    ratios = [p.rate_per_time / g.rate_per_time for p, g in compare_schemes(1, 20, t)]
    assert all(a < b for a, b in zip(ratios, ratios[1:]))
    assert all(r <= 4 / 3 + 1e-9 for r in ratios)
    # at N = 20 the closed form gives 2 (1 + 40) / (21 * 3) = 82 / 63
    assert ratios[-1] == pytest.approx(82 / 63, rel=1e-12)
