import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rmtprod.logdomain import LogComplex, ONE, ZERO, log_sum_exp_complex


def test_single_term_identity():
    assert log_sum_exp_complex([ONE]) == ONE


def test_exact_cancellation_to_zero():
    # 1 + (-1) = 0
    out = log_sum_exp_complex([LogComplex(0.0, 0.0), LogComplex(0.0, math.pi)])
    assert out.is_zero
    assert out.to_complex() == 0


def test_multiplication_adds_logs_and_wraps_phase():
    a = LogComplex(2.0, 3.0)
    b = LogComplex(5.0, 3.0)
    c = a * b
    assert c.log_mag == 7.0
    assert -math.pi < c.phase <= math.pi
    assert cmath.isclose(c.to_complex(), a.to_complex() * b.to_complex(), rel_tol=1e-12)


def test_negative_real_round_trip():
    lc = LogComplex.from_real(-3.5)
    assert lc.phase == math.pi
    assert lc.to_complex() == -3.5


def test_zero_element_arithmetic():
    assert (ZERO * ONE).is_zero
    assert ZERO.to_complex() == 0
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_lse_random_terms_vs_naive_summation():
    # oracle: direct complex summation, valid while all |log_mag| < 30
    rng = np.random.default_rng(42)
    for _ in range(20):
        n = rng.integers(2, 51)
        logs = rng.uniform(-25, 25, n)
        phases = rng.uniform(-math.pi, math.pi, n)
        terms = [LogComplex(float(l), float(p)) for l, p in zip(logs, phases)]
        naive = sum(t.to_complex() for t in terms)
        got = log_sum_exp_complex(terms).to_complex()
        assert cmath.isclose(got, naive, rel_tol=1e-12, abs_tol=1e-280)


@settings(max_examples=60, deadline=None)
@given(
    st.complex_numbers(min_magnitude=1e-6, max_magnitude=10.0, allow_nan=False, allow_infinity=False)
)
def test_round_trip_matches_direct_arithmetic(z):
    lc = LogComplex.from_complex(z)
    back = lc.to_complex()
    assert abs(back - z) <= 1e-12 * abs(z)
    # exp-form square vs direct square
    sq = (lc * lc).to_complex()
    assert abs(sq - z * z) <= 1e-12 * abs(z * z)


@settings(max_examples=40, deadline=None)
@given(st.floats(-650, 650), st.floats(-math.pi, math.pi))
def test_round_trip_large_dynamic_range(log_mag, phase):
    lc = LogComplex(log_mag, phase)
    again = LogComplex.from_complex(lc.to_complex()) if abs(log_mag) < 700 else lc
    assert math.isclose(again.log_mag, lc.log_mag, rel_tol=1e-12, abs_tol=1e-9)


def test_powi_and_conj():
    z = 0.3 + 0.7j
    lc = LogComplex.from_complex(z)
    assert cmath.isclose(lc.powi(5).to_complex(), z**5, rel_tol=1e-12)
    assert cmath.isclose(lc.conj().to_complex(), z.conjugate(), rel_tol=1e-12)
