"""Random polynomials with known root locations, built from factors."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .scalar_poly import ComplexPolynomial, Polynomial


@dataclass(frozen=True)
class Constructed:
    poly: Polynomial
    n_minus: int
    n_plus: int
    n_axis: int
    distinct_real: int
    distinct_pairs: int

    @property
    def counts(self) -> tuple:
        return self.n_minus, self.n_plus, self.n_axis


def _small_rat(rng: random.Random, lo: int = 1, hi: int = 5) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice((1, 1, 2, 3)))


def random_constructed(rng: random.Random, max_degree: int = 8, axis_prob: float = 0.25) -> Constructed:
    """Product of linear and quadratic real factors with tracked root locations.

    Roots are drawn from a small pool so repeated roots show up regularly.
    Axis roots come as ``z`` or ``z**2 + w**2``.
    """
    target = rng.randint(1, max_degree)
    p = Polynomial.constant(_small_rat(rng))
    n_minus = n_plus = n_axis = 0
    real_roots, pairs = set(), set()
    deg = 0
    while deg < target:
        room = target - deg
        kind = rng.random()
        if kind < axis_prob:
            if room >= 2 and rng.random() < 0.6:
                w2 = _small_rat(rng, 1, 4) ** 2
                p = p * Polynomial((1, 0, w2))
                pairs.add((Fraction(0), w2))
                n_axis += 2
                deg += 2
            else:
                p = p * Polynomial((1, 0))
                real_roots.add(Fraction(0))
                n_axis += 1
                deg += 1
        elif kind < 0.65 or room < 2:
            r = _small_rat(rng) * rng.choice((-1, 1))
            p = p * Polynomial((1, -r))
            real_roots.add(r)
            if r < 0:
                n_minus += 1
            else:
                n_plus += 1
            deg += 1
        else:
            a = _small_rat(rng) * rng.choice((-1, 1))
            b = _small_rat(rng)
            # roots a +- i b
            p = p * Polynomial((1, -2 * a, a * a + b * b))
            pairs.add((a, b * b))
            if a < 0:
                n_minus += 2
            else:
                n_plus += 2
            deg += 2
    return Constructed(p, n_minus, n_plus, n_axis, len(real_roots), len(pairs))


def corpus(seed: int, size: int, max_degree: int = 8) -> list:
    rng = random.Random(seed)
    return [random_constructed(rng, max_degree) for _ in range(size)]


def random_polynomial(rng: random.Random, max_degree: int = 6, span: int = 6) -> Polynomial:
    """Dense integer polynomial with positive leading coefficient."""
    n = rng.randint(1, max_degree)
    coeffs = [rng.randint(1, span)] + [rng.randint(-span, span) for _ in range(n)]
    return Polynomial(tuple(coeffs))


def random_complex_constructed(rng: random.Random, max_degree: int = 6):
    """Complex polynomial from Gaussian-rational roots; returns ``(poly, counts)``."""
    n = rng.randint(1, max_degree)
    roots = []
    n_minus = n_plus = n_axis = 0
    for _ in range(n):
        im = Fraction(rng.randint(-4, 4), rng.choice((1, 2)))
        re = Fraction(rng.randint(-4, 4), rng.choice((1, 2, 3)))
        if rng.random() < 0.15:
            re = Fraction(0)
        roots.append((re, im))
        if re < 0:
            n_minus += 1
        elif re > 0:
            n_plus += 1
        else:
            n_axis += 1
    lead = (Fraction(rng.randint(1, 3)), Fraction(rng.randint(-2, 2)))
    return ComplexPolynomial.from_roots(roots, lead), (n_minus, n_plus, n_axis)
