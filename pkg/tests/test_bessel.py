"""Bessel evaluation: oracle agreement, identities, window handling.

Expected values marked "oracle" below were computed with
`oracle_bessel_j` (arbitrary-precision series) and frozen.
"""

import math

import numpy as np
import pytest

from polyspec import (
    EvalConfig,
    InvalidArgumentError,
    UnsupportedRangeError,
    bessel_j,
    bessel_j_many,
    bessel_j_prime,
    bessel_j_second,
    oracle_bessel_j,
)

J1_AT_1 = 0.4400505857449335  # oracle, 30+ digits: 0.44005058574493351...
J0_AT_2 = 0.22389077914123567  # oracle: 0.22389077914123566805...


def test_value_at_origin():
    assert bessel_j(0, 0.0) == 1.0
    assert bessel_j(3, 0.0) == 0.0
    assert bessel_j(-5, 0.0) == 0.0


def test_frozen_series_values():
    assert bessel_j(1, 1.0) == pytest.approx(J1_AT_1, abs=1e-15)
    assert bessel_j(-1, 1.0) == pytest.approx(-J1_AT_1, abs=1e-15)
    assert bessel_j(0, 2.0) == pytest.approx(J0_AT_2, abs=1e-15)


def test_parity_is_bit_exact():
    rng = np.random.default_rng(3)
    for _ in range(50):
        m = int(rng.integers(1, 60))
        z = float(rng.uniform(0.0, 120.0))
        assert bessel_j(-m, z) == (-1.0) ** m * bessel_j(m, z)


def test_agreement_with_oracle_across_window():
    rng = np.random.default_rng(11)
    points = [(int(rng.integers(0, 201)), float(rng.uniform(0.0, 500.0))) for _ in range(120)]
    points += [
        (0, 17.999), (0, 18.0), (0, 18.001), (1, 18.0),  # both sides of the switch
        (0, 500.0), (200, 500.0), (200, 20.0), (150, 160.0),
        (5, 1e-8), (40, 3.0), (0, 1e-300),
    ]
    for m, z in points:
        ref = float(oracle_bessel_j(m, z, 25))
        got = bessel_j(m, z)
        assert abs(got - ref) <= max(1e-12 * abs(ref), 1e-13), (m, z, got, ref)


def test_vector_evaluator_contract():
    rng = np.random.default_rng(23)
    for m in (0, 3, -4, 55, 200):
        z = np.concatenate(
            [rng.uniform(0.0, 18.0, 24), rng.uniform(18.0, 500.0, 24), [0.0, 18.0, 500.0]]
        )
        vec = bessel_j_many(m, z)
        assert vec.shape == z.shape
        for zi, vi in zip(z, vec):
            ref = float(oracle_bessel_j(m, float(zi), 25))
            assert abs(vi - ref) <= max(1e-12 * abs(ref), 1e-13), (m, zi)
    # shape preservation, empty inputs, and window errors
    grid = bessel_j_many(1, np.array([[0.5, 1.0], [2.0, 30.0]]))
    assert grid.shape == (2, 2)
    empty = bessel_j_many(2, np.array([]))
    assert empty.shape == (0,)
    with pytest.raises(UnsupportedRangeError):
        bessel_j_many(0, np.array([1.0, 501.0]))
    with pytest.raises(InvalidArgumentError):
        bessel_j_many(0, np.array([1.0, float("nan")]))


def test_recurrence_residual_contract():
    # m J_m(z) = (z/2)(J_{m+1}(z) + J_{m-1}(z)) on 100 random points
    rng = np.random.default_rng(7)
    for _ in range(100):
        m = int(rng.integers(0, 31))
        z = float(rng.uniform(1e-6, 60.0))
        res = abs(m * bessel_j(m, z) - 0.5 * z * (bessel_j(m + 1, z) + bessel_j(m - 1, z)))
        assert res < 1e-10


def test_bessel_equation_residual():
    # J'' from the derivative recurrence applied twice, never from the ODE
    rng = np.random.default_rng(13)
    for _ in range(100):
        m = int(rng.integers(0, 31))
        z = float(rng.uniform(0.3, 60.0))
        res = abs(
            bessel_j_second(m, z)
            + bessel_j_prime(m, z) / z
            + (1.0 - m * m / (z * z)) * bessel_j(m, z)
        )
        assert res < 1e-9


def test_generating_function_identity():
    # sum_m t^m J_m(z) = exp((z/2)(t - 1/t)) on the unit circle
    import cmath

    for z in (1.0, 5.0, 10.0):
        for i in range(16):
            t = cmath.exp(2j * math.pi * (i + 0.5) / 16)
            total = sum(t**m * bessel_j(m, z) for m in range(-60, 61))
            assert abs(total - cmath.exp(0.5 * z * (t - 1.0 / t))) < 1e-10


def test_integral_representation():
    theta = 2.0 * math.pi * np.arange(2048) / 2048
    rng = np.random.default_rng(17)
    pairs = [(0, 7.0), (1, 0.5), (10, 30.0)]
    pairs += [(int(rng.integers(0, 11)), float(rng.uniform(0.1, 30.0))) for _ in range(20)]
    for m, z in pairs:
        quad = float(np.mean(np.cos(m * theta - z * np.sin(theta))))
        assert abs(quad - bessel_j(m, z)) < 1e-9


def test_derivative_recurrences():
    assert bessel_j_prime(0, 1.0) == -bessel_j(1, 1.0)
    # z J_{m-1}(z) = z J'_m(z) + m J_m(z) at (2, 3.0)
    m, z = 2, 3.0
    assert abs(z * bessel_j(m - 1, z) - (z * bessel_j_prime(m, z) + m * bessel_j(m, z))) < 1e-11
    # J'_1 at the first J_0 zero: the J_0 term of (J_0 - J_2)/2 nearly vanishes
    lam01 = 2.404825557695773
    lhs = bessel_j_prime(1, lam01)
    rhs = 0.5 * (float(oracle_bessel_j(0, lam01, 30)) - float(oracle_bessel_j(2, lam01, 30)))
    assert abs(lhs - rhs) < 1e-13


def test_window_rejection():
    with pytest.raises(UnsupportedRangeError):
        bessel_j(201, 1.0)
    with pytest.raises(UnsupportedRangeError):
        bessel_j(0, 500.5)
    with pytest.raises(UnsupportedRangeError):
        bessel_j(0, -1.0)
    with pytest.raises(InvalidArgumentError):
        bessel_j(0, float("nan"))
    with pytest.raises(InvalidArgumentError):
        bessel_j(0, float("inf"))
    with pytest.raises(InvalidArgumentError):
        bessel_j(1.5, 1.0)  # type: ignore[arg-type]


def test_eval_config_validation():
    with pytest.raises(InvalidArgumentError):
        EvalConfig(target_rel_error=0.0)
    with pytest.raises(InvalidArgumentError):
        EvalConfig(max_terms=0)
    cfg = EvalConfig(series_switch_point=10.0)
    assert bessel_j(0, 12.0, cfg) == pytest.approx(float(oracle_bessel_j(0, 12, 25)), rel=1e-12)


def test_oracle_contract():
    assert oracle_bessel_j(0, 0, 50) == 1
    v = float(oracle_bessel_j(0, 2, 50))
    assert abs(v - bessel_j(0, 2.0)) < 1e-12
    small = float(oracle_bessel_j(5, 1, 50))
    assert 0.0 < small < 1e-3
    assert small < (0.5**5) / math.factorial(5)  # bounded by its leading term
    assert float(oracle_bessel_j(-3, 2, 40)) == -float(oracle_bessel_j(3, 2, 40))
    with pytest.raises(InvalidArgumentError):
        oracle_bessel_j(0, 1, 101)
