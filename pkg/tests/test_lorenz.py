import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from routh_hurwitz.lorenz import LorenzParams, analyze, critical_r, p12_polynomial
from routh_hurwitz.routh import Kind

EPS = Fraction(1, 1000)
params_rats = st.fractions(min_value=Fraction(1, 10), max_value=30, max_denominator=12)


def jacobian(sigma, r, b, x, y, z):
    return np.array([[-sigma, sigma, 0.0], [r - z, -1.0, -x], [y, x, -b]])


def test_classic_parameters():
    a = analyze(LorenzParams(10, 28, Fraction(8, 3)))
    assert a.r_star == Fraction(470, 19)
    assert a.p12_verdict.kind is Kind.UNSTABLE_OFF_AXIS
    assert len(a.fixed_points) == 3
    assert a.fixed_points[1].radicand == 72 and a.fixed_points[1].z == 27


def test_below_one_only_origin_and_stable():
    a = analyze(LorenzParams(10, Fraction(1, 2), Fraction(8, 3)))
    assert len(a.fixed_points) == 1 and a.p12 is None
    assert a.p0_verdict.kind is Kind.STABLE


def test_origin_loses_stability_at_one():
    a = analyze(LorenzParams(10, 1, Fraction(8, 3)))
    assert a.p0_verdict.kind is Kind.SIMPLE_ZERO_ROOT


def test_transition_through_critical_r():
    rs = Fraction(470, 19)
    kinds = [analyze(LorenzParams(10, r, Fraction(8, 3))).p12_verdict for r in (rs - EPS, rs, rs + EPS)]
    assert [k.kind for k in kinds] == [Kind.STABLE, Kind.CONJUGATE_PAIR_ON_AXIS, Kind.UNSTABLE_OFF_AXIS]
    assert kinds[2].distribution.n_plus == 2


def test_no_threshold_when_sigma_small():
    assert critical_r(2, 3) is None
    assert analyze(LorenzParams(2, 50, 3)).p12_verdict.kind is Kind.STABLE


def test_positivity_enforced():
    with pytest.raises(ValueError):
        LorenzParams(0, 1, 1)
    with pytest.raises(ValueError):
        LorenzParams(1, -1, 1)


@given(params_rats, params_rats, params_rats)
def test_characteristic_polynomials_match_numeric_jacobians(sigma, r, b):
    a = analyze(LorenzParams(sigma, r, b))
    s, rr, bb = float(sigma), float(r), float(b)
    got = np.poly(jacobian(s, rr, bb, 0.0, 0.0, 0.0))
    assert np.allclose(got, [float(c) for c in a.p0.coeffs], rtol=1e-9, atol=1e-9)
    if r > 1:
        x = math.sqrt(float(a.fixed_points[1].radicand))
        got = np.poly(jacobian(s, rr, bb, x, x, rr - 1))
        assert np.allclose(got, [float(c) for c in a.p12.coeffs], rtol=1e-9, atol=1e-7)


@given(params_rats, params_rats, params_rats)
def test_hurwitz_condition_equals_threshold(sigma, r, b):
    if r <= 1:
        return
    p = p12_polynomial(LorenzParams(sigma, r, b))
    a0, a1, a2, a3 = p.coeffs
    hurwitz_ok = a1 * a2 - a0 * a3 > 0
    rs = critical_r(sigma, b)
    assert hurwitz_ok is (rs is None or r < rs)
    stable = analyze(LorenzParams(sigma, r, b)).p12_verdict.kind is Kind.STABLE
    assert stable is hurwitz_ok


@given(params_rats, params_rats)
def test_origin_stable_iff_r_below_one(sigma, b):
    for r in (Fraction(1, 3), Fraction(99, 100), Fraction(101, 100), Fraction(5)):
        stable = analyze(LorenzParams(sigma, r, b)).p0_verdict.kind is Kind.STABLE
        assert stable is (r < 1)
