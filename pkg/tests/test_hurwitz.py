import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings

from conftest import polynomials
from routh_hurwitz.hankel import hankel_matrix, markov_parameters
from routh_hurwitz.hurwitz import (
    ZeroMinorError,
    distribution_from_minors,
    hurwitz_matrix,
    hurwitz_stable,
    leading_minors,
    lienard_chipart,
    resultant_minors,
)
from routh_hurwitz.linalg import cofactor_det, det, leading_principal_minors
from routh_hurwitz.routh import is_stable, routh_array
from routh_hurwitz.scalar_poly import Polynomial, RationalFunction, even_odd_split, gcd_monic, reverse

P = Polynomial

# found by scripts/nonnegative_minors_search.py (seed 0): every minor is zero, yet two
# roots sit in the open right half-plane
NONNEGATIVE_MINORS_UNSTABLE = P((2, 0, 3, 0, 3))


def test_matrix_shapes():
    a = [Fraction(k + 1) for k in range(4)]
    assert hurwitz_matrix(P(a)) == [[a[1], a[3], 0], [a[0], a[2], 0], [0, a[1], a[3]]]
    assert hurwitz_matrix(P((5, 7))) == [[7]]
    assert hurwitz_matrix(P((1, 2, 3))) == [[2, 0], [1, 3]]


@pytest.mark.parametrize(
    "coeffs, minors",
    [((1, 2, 3, 1), (2, 5, 5)), ((1, 1, 1, 2), (1, -1, -2)), ((1, 1), (1,))],
)
def test_minor_examples(coeffs, minors):
    assert leading_minors(P(coeffs)).minors == minors


@pytest.mark.parametrize(
    "coeffs, stable", [((1, 2, 3, 1), True), ((1, 1, 1, 2), False), ((1, 1, 1), True)]
)
def test_hurwitz_stable_examples(coeffs, stable):
    assert hurwitz_stable(P(coeffs)) is stable


@pytest.mark.parametrize(
    "coeffs, seq, counts",
    [
        ((1, 2, 3, 1), (1, 2, Fraction(5, 2), 1), (3, 0, 0)),
        ((1, 1, 1, 2), (1, 1, -1, 2), (1, 2, 0)),
        ((1, -1), (1, -1), (0, 1, 0)),
    ],
)
def test_quotient_sequence_counts(coeffs, seq, counts):
    p = P(coeffs)
    assert leading_minors(p).quotient_sequence == seq
    assert distribution_from_minors(p).counts == counts


def test_zero_minor_is_refused():
    with pytest.raises(ZeroMinorError):
        distribution_from_minors(P((1, 1, 1, 1)))


@pytest.mark.parametrize(
    "coeffs, ok", [((1, 2, 3, 1), True), ((1, 1, 1, 2), False), ((1, 1, 1, 1, 1), False)]
)
def test_lienard_chipart_examples(coeffs, ok):
    assert lienard_chipart(P(coeffs)) is ok


def test_quartic_minor_three():
    assert leading_minors(P((1, 1, 1, 1, 1))).minors[2] == -1


def test_resultant_minor_examples():
    assert resultant_minors(P((1, 3)), P((2, 1))).values[0] == 5
    assert resultant_minors(P((1,)), P((1, 1))).values[0] == 1
    with pytest.raises(ValueError):
        resultant_minors(P((1, 0, 0)), P((1, 1)))


def test_nonnegative_minors_do_not_give_closed_left_half_plane():
    p = NONNEGATIVE_MINORS_UNSTABLE
    assert all(m >= 0 for m in leading_minors(p).minors)
    assert np.max(np.roots([float(c) for c in p.coeffs]).real) > 0.4
    assert not hurwitz_stable(p)


@given(polynomials(max_degree=7))
def test_last_minor_is_previous_times_constant(p):
    assume(p.deg >= 2)
    eta = leading_minors(p).minors
    q = -p if p.lead < 0 else p
    assert eta[-1] == eta[-2] * q.coeff(0)


@given(polynomials(max_degree=7))
def test_minors_are_products_of_routh_entries(p):
    out = routh_array(p)
    assume(out.completed)
    eta = leading_minors(p).minors
    prod = Fraction(1)
    for k in range(1, p.deg + 1):
        prod *= out.h[k]
        assert eta[k - 1] == prod


@given(polynomials(max_degree=7))
def test_hurwitz_routh_and_lienard_chipart_agree(p):
    s = hurwitz_stable(p)
    assert s is is_stable(p)
    assert lienard_chipart(p) is s


@given(polynomials(max_degree=7))
def test_reversal_keeps_stability(p):
    assume(p.coeff(0) != 0)
    assert hurwitz_stable(p) is hurwitz_stable(reverse(p))


@given(polynomials(min_degree=2, max_degree=8))
def test_even_odd_split_bridge(p):
    if p.lead < 0:
        p = -p
    n, m = p.deg, p.deg // 2
    eta = leading_minors(p).minors
    s = even_odd_split(p)
    nab = resultant_minors(s.g1, s.g0, degree=m).values
    for k in range(1, m + 1):
        assert nab[k - 1] == (eta[2 * k - 1] if n % 2 else p.lead * eta[2 * k - 2])


@given(polynomials(min_degree=0, max_degree=6), polynomials(max_degree=6))
def test_resultant_minors_scale_hankel_minors(num, den):
    assume(num.is_zero or num.deg <= den.deg)
    n = den.deg
    nab = resultant_minors(num, den).values
    s = markov_parameters(RationalFunction(num, den), 2 * n).s
    D = leading_principal_minors(hankel_matrix(s, n))
    for k in range(n):
        assert nab[k] == den.lead ** (2 * (k + 1)) * D[k]


def test_last_resultant_minor_detects_common_factor():
    rng = random.Random(4)
    for _ in range(60):
        a = P(tuple(rng.randint(-4, 4) for _ in range(rng.randint(1, 3))) or (1,))
        b = P((1,) + tuple(rng.randint(-4, 4) for _ in range(rng.randint(1, 3))))
        c = P((1, rng.randint(-3, 3)))
        for num, den in ((a, b), (a * c, b * c)):
            if num.is_zero or num.deg > den.deg:
                continue
            coprime = gcd_monic(num, den).deg == 0
            assert (resultant_minors(num, den).values[-1] != 0) is coprime


@settings(max_examples=40)
@given(polynomials(min_degree=1, max_degree=5))
def test_bareiss_matches_cofactor_expansion(p):
    M = hurwitz_matrix(p)
    assert det(M) == cofactor_det(M)
    assert leading_principal_minors(M) == [cofactor_det([r[:k] for r in M[:k]])
                                           for k in range(1, len(M) + 1)]
