"""Stieltjes continued fractions, partial fractions and the Hermite-Biehler test."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .hankel import borchardt_jacobi
from .scalar_poly import (
    Polynomial,
    RationalFunction,
    as_complex,
    cauchy_root_bound,
    gcd_monic,
    imaginary_axis_split,
    poly_divmod,
    sign,
)
from .sturm_index import RootDistribution, cauchy_index_line, squarefree_tower


class UnsupportedDenominatorError(ValueError):
    """Denominator does not split into distinct rational linear factors."""


class DegenerateImageError(ValueError):
    """A projective map sent the function to a constant."""


@dataclass(frozen=True)
class ContinuedFraction:
    """``R = 1/(d_1 - 1/(d_2 - ... - 1/d_m))``; empty terms mean ``R = 0``."""

    terms: tuple

    def to_rational(self) -> RationalFunction:
        num, den = Polynomial(), Polynomial.constant(1)
        for d in reversed(self.terms):
            num, den = den, d * den - num
        return RationalFunction(num, den)


@dataclass(frozen=True)
class PartialFractions:
    poles: tuple
    residues: tuple

    def to_rational(self) -> RationalFunction:
        out = RationalFunction(Polynomial(), Polynomial.constant(1))
        for w, a in zip(self.poles, self.residues):
            out = out + RationalFunction(Polynomial.constant(a), Polynomial((1, -w)))
        return out


@dataclass(frozen=True)
class Mobius:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.alpha * self.delta - self.beta * self.gamma != 1:
            raise ValueError("Mobius map must have determinant 1")


def cf_expand(R: RationalFunction) -> ContinuedFraction:
    if not R.is_strictly_proper:
        raise ValueError("continued fraction expansion needs deg num < deg den")
    terms = []
    a, b = R.den, R.num
    while not b.is_zero:
        d, r = poly_divmod(a, b)
        terms.append(d)
        a, b = b, -r
    return ContinuedFraction(tuple(terms))


def _ind_inf_poly(d: Polynomial) -> int:
    if d.is_zero or d.deg % 2 == 0:
        return 0
    return -sign(d.lead)


def index_from_cf(cf: ContinuedFraction) -> int:
    return -sum(_ind_inf_poly(d) for d in cf.terms)


def is_proper_via_cf(R: RationalFunction) -> bool:
    cf = cf_expand(R)
    n = R.den.deg
    return n > 0 and len(cf.terms) == n and all(d.deg == 1 and d.lead > 0 for d in cf.terms)


def rational_roots(f: Polynomial) -> list:
    """Distinct rational roots of ``f`` by the rational root theorem."""
    if f.is_zero:
        raise ValueError("rational roots of the zero polynomial")
    lcm = 1
    for c in f.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in f.coeffs]
    roots = []
    while ints and ints[-1] == 0:
        ints.pop()
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
    if len(ints) <= 1:
        return roots
    g = Polynomial(tuple(ints))
    for q in _divisors(abs(ints[0])):
        for pnum in _divisors(abs(ints[-1])):
            for cand in (Fraction(pnum, q), Fraction(-pnum, q)):
                if cand not in roots and g(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def _divisors(m: int) -> list:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def partial_fractions_simple(R: RationalFunction) -> PartialFractions:
    """``R = sum alpha_k / (z - w_k)`` for a denominator with distinct rational roots."""
    if not R.is_strictly_proper:
        raise ValueError("partial fractions need deg num < deg den")
    poles = rational_roots(R.den)
    if len(poles) != R.den.deg:
        raise UnsupportedDenominatorError("denominator has nonrational or repeated roots")
    dden = R.den.derivative()
    residues = tuple(R.num(w) / dden(w) for w in poles)
    return PartialFractions(tuple(poles), residues)


def _all_real_simple(f: Polynomial) -> bool:
    if f.deg == 0:
        return True
    bj = borchardt_jacobi(f)
    return bj.distinct_conjugate_pairs == 0 and bj.distinct_real == f.deg


def hermite_biehler(p: Polynomial) -> bool:
    """Real, simple, interlacing roots of the split pair, correctly oriented.

    Interlacing is certified by ``Ind(f1/f0) = deg f0``; the orientation
    inequality ``f1' f0 - f0' f1 < 0`` is checked past the root bound of
    ``f0 f1`` where ``f0`` cannot vanish.
    """
    split = imaginary_axis_split(p)
    f0, f1 = split.f0, split.f1
    n = f0.deg
    if f1.is_zero or f1.deg != n - 1:
        return False
    if not (_all_real_simple(f0) and _all_real_simple(f1)):
        return False
    if cauchy_index_line(RationalFunction(f1, f0)) != n:
        return False
    w = 1 + cauchy_root_bound(f0 * f1) if (f0 * f1).deg > 0 else Fraction(1)
    wronskian = f1.derivative()(w) * f0(w) - f0.derivative()(w) * f1(w)
    return wronskian < 0


def mobius_apply(m: Mobius, R: RationalFunction) -> RationalFunction:
    if R.is_constant:
        raise DegenerateImageError("image of a constant function is constant")
    num = R.num * m.alpha + R.den * m.beta
    den = R.num * m.gamma + R.den * m.delta
    return RationalFunction(num, den)


def distribution_via_cf(p) -> RootDistribution:
    """Index from the quotients of ``f1/f0``; axis roots from ``g'/g`` expansions."""
    cp = as_complex(p)
    n = cp.deg
    split = imaginary_axis_split(cp)
    ind = index_from_cf(cf_expand(RationalFunction(split.f1, split.f0)))
    g = gcd_monic(split.f0, split.f1)
    n_axis = sum(
        index_from_cf(cf_expand(RationalFunction(m.derivative(), m))) for m in squarefree_tower(g)
    )
    off = n - n_axis
    return RootDistribution((off + ind) // 2, (off - ind) // 2, n_axis, g if n_axis else None)
