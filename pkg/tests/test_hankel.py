from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import monic_real_rooted, polynomials
from routh_hurwitz.corpus import corpus
from routh_hurwitz.hankel import (
    borchardt_jacobi,
    distribution_via_hankel,
    hankel_minors,
    hankel_rank_signature,
    is_proper_via_hankel,
    markov_parameters,
    newton_sums,
    real_roots_with_multiplicity,
)
from routh_hurwitz.scalar_poly import Polynomial, RationalFunction, Z
from routh_hurwitz.sturm_index import cauchy_index_line

P = Polynomial


def rf(num, den):
    return RationalFunction(P(num), P(den))


def test_markov_examples():
    assert markov_parameters(rf((1,), (1, 1)), 4).s == (1, -1, 1, -1)
    f = P((1, 0, -1))
    assert markov_parameters(RationalFunction(f.derivative(), f), 4).s == (2, 0, 2, 0)
    assert markov_parameters(rf((1, 0), (1, 0, 1)), 5).s == (1, 0, -1, 0, 1)


def test_markov_keeps_polynomial_part():
    m = markov_parameters(rf((1, 0, 0, 1), (1, 1)), 3)
    assert m.polynomial_part == P((1, -1, 1))
    assert m.s_minus1 == 1
    assert m.s == (0, 0, 0)


def test_markov_parameters_of_cubic_split_from_residues():
    # poles 0 and +-sqrt(3); residues 1/3 and 5/6, so s_{2k} = 2 (5/6) 3^k for k >= 1
    R = rf((2, 0, -1), (1, 0, -3, 0))
    s = markov_parameters(R, 7).s
    assert s[0] == Fraction(1, 3) + 2 * Fraction(5, 6)
    for k in range(1, 4):
        assert s[2 * k] == 2 * Fraction(5, 6) * 3 ** k
        assert s[2 * k - 1] == 0
    assert hankel_minors(R) == (2, 10, 25)
    assert is_proper_via_hankel(R)


@settings(max_examples=40)
@given(monic_real_rooted(max_degree=4), monic_real_rooted(max_degree=4))
def test_markov_parameters_are_weighted_power_sums(f, g):
    f, poles = f
    num = g[0] % f
    R = RationalFunction(num, f)
    d = f.derivative()
    residues = [num(w) / d(w) for w in poles]
    s = markov_parameters(R, 6).s
    for k in range(6):
        assert s[k] == sum(a * w ** k for a, w in zip(residues, poles))


def test_rank_signature_examples():
    rep = hankel_rank_signature((2, 0, 2), 2)
    assert (rep.rank, rep.signature) == (2, 2)
    rep = hankel_rank_signature((2, 0, -2), 2)
    assert (rep.rank, rep.signature) == (2, 0)
    rep = hankel_rank_signature((0, 0, 0), 2)
    assert (rep.rank, rep.signature) == (0, 0)


def test_properness_examples():
    assert not is_proper_via_hankel(rf((1,), (1, 0, 1)))
    assert hankel_minors(rf((1,), (1, 0, 1)))[0] == 0
    assert is_proper_via_hankel(rf((1,), (1, 0)))
    with pytest.raises(ValueError):
        is_proper_via_hankel(rf((1, 0, 0), (1, 1)))


@pytest.mark.parametrize(
    "f, sums",
    [(P((1, 0, -1)), (2, 0, 2)), (P.from_roots([1, 1]), (2, 2, 2)), (Z ** 3, (3, 0, 0))],
)
def test_newton_sum_examples(f, sums):
    assert newton_sums(f, 3).s == sums


@pytest.mark.parametrize(
    "f, counts",
    [
        (P((1, 0, -1)), (2, 0)),
        (P((1, 0, 1)), (0, 1)),
        (P.from_roots([1, 1]) * P((1, 0, 1)), (1, 1)),
    ],
)
def test_borchardt_jacobi_examples(f, counts):
    bj = borchardt_jacobi(f)
    assert (bj.distinct_real, bj.distinct_conjugate_pairs) == counts


def test_multiplicity_count():
    g = P.from_roots([1, 1, -2]) * P((1, 0, 4))
    assert real_roots_with_multiplicity(g) == 3


@given(polynomials(max_degree=5), polynomials(max_degree=5))
def test_signature_equals_line_index(num, den):
    R = RationalFunction(num % den, den)
    n = R.den.deg
    if n == 0:
        return
    rep = hankel_rank_signature(markov_parameters(R, 2 * n - 1), n)
    assert rep.signature == cauchy_index_line(R)
    assert rep.rank == n


def test_distribution_matches_construction():
    for item in corpus(seed=31, size=120):
        assert distribution_via_hankel(item.poly).counts == item.counts


def test_shifted_minors_family_has_right_length():
    R = rf((2, 0, -1), (1, 0, -3, 0))
    assert len(hankel_minors(R, shift=1)) == 3


def test_newton_sums_reject_constants():
    with pytest.raises(ValueError):
        newton_sums(P((3,)), 2)
