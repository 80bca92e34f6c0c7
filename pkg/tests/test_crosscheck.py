import random

import pytest

from routh_hurwitz.corpus import corpus, random_complex_constructed, random_constructed
from routh_hurwitz.crosscheck import METHODS, crosscheck, distribution
from routh_hurwitz.hankel import borchardt_jacobi
from routh_hurwitz.scalar_poly import ComplexPolynomial, Polynomial

P = Polynomial


def test_all_methods_on_example():
    cc = crosscheck(P((1, 1, 1, 2)))
    assert cc.agree
    assert [r.method for r in cc.results] == list(METHODS)
    assert all(r.distribution.counts == (1, 2, 0) for r in cc.results)


def test_hurwitz_skipped_on_zero_minor():
    cc = crosscheck(P((1, 1, 1, 1)))
    assert cc.by_method("hurwitz").distribution is None
    assert cc.by_method("hurwitz").note == "zero Hurwitz minor"
    assert cc.by_method("routh").note == "case (d)"
    assert cc.agree and len(cc.applicable) == 4


def test_complex_input_skips_real_only_methods():
    p = ComplexPolynomial(((1, 0), (2, 1), (3, 0)))
    cc = crosscheck(p)
    assert {r.method for r in cc.applicable} == {"sturm", "hankel", "cf"}
    assert cc.agree


def test_unknown_method():
    with pytest.raises(ValueError):
        distribution(P((1, 1)), "newton")


def test_corpus_is_reproducible():
    a = [c.poly for c in corpus(3, 20)]
    b = [c.poly for c in corpus(3, 20)]
    assert a == b


def test_constructed_counts_are_consistent():
    rng = random.Random(9)
    for _ in range(100):
        c = random_constructed(rng)
        assert sum(c.counts) == c.poly.deg <= 8
        bj = borchardt_jacobi(c.poly)
        assert (bj.distinct_real, bj.distinct_conjugate_pairs) == (c.distinct_real, c.distinct_pairs)


def test_complex_corpus_agrees():
    rng = random.Random(12)
    for _ in range(80):
        p, counts = random_complex_constructed(rng)
        cc = crosscheck(p)
        assert cc.agree and cc.applicable[0].distribution.counts == counts


def test_mixed_corpus_agrees():
    for item in corpus(seed=99, size=100):
        cc = crosscheck(item.poly)
        assert cc.agree and cc.applicable[0].distribution.counts == item.counts
