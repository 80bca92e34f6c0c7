"""Sturm chains and Cauchy indices, plus the half-plane root count built on them."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .scalar_poly import (
    ComplexPolynomial,
    Polynomial,
    RationalFunction,
    ZeroPolynomialError,
    as_complex,
    cauchy_root_bound,
    gcd_monic,
    imaginary_axis_split,
    poly_divmod,
    sign,
    squarefree_part,
)


class BoundaryPoleError(ValueError):
    """The rational function has a pole at an endpoint of the interval."""


@dataclass(frozen=True)
class SturmChain:
    polys: tuple

    @property
    def leading(self) -> tuple:
        return tuple(f.lead for f in self.polys)

    @property
    def is_regular(self) -> bool:
        n = self.polys[0].deg
        return len(self.polys) == n + 1 and all(f.deg == n - k for k, f in enumerate(self.polys))

    def signs_at(self, x) -> list:
        return [sign(f(x)) for f in self.polys]


@dataclass(frozen=True)
class RootDistribution:
    """Root counts relative to the imaginary axis.

    ``axis`` describes the imaginary-axis roots: a polynomial in ``w`` whose
    real roots (with multiplicity) are the ``w`` with ``p(i w) = 0``.  Two
    distributions compare equal when their counts agree.
    """

    n_minus: int
    n_plus: int
    n_axis: int = 0
    axis: Optional[Polynomial] = field(default=None, compare=False)

    @property
    def counts(self) -> tuple:
        return self.n_minus, self.n_plus, self.n_axis


@dataclass(frozen=True)
class HalfPlaneSplit:
    n_minus: int
    n_plus: int
    n_axis: int
    imaginary_axis_gcd: Polynomial

    def distribution(self) -> RootDistribution:
        axis = self.imaginary_axis_gcd if self.n_axis else None
        return RootDistribution(self.n_minus, self.n_plus, self.n_axis, axis)


def build_chain(f0: Polynomial, f1: Polynomial) -> SturmChain:
    """Sign-flipped Euclid: ``f_{k-1} = d_k f_k - f_{k+1}`` until the remainder vanishes."""
    if f0.is_zero:
        raise ZeroPolynomialError("chain must start from a nonzero polynomial")
    if not f1.is_zero and f1.deg >= f0.deg:
        raise ValueError("build_chain requires deg f1 < deg f0")
    polys = [f0]
    a, b = f0, f1
    while not b.is_zero:
        polys.append(b)
        a, b = b, -poly_divmod(a, b)[1]
    return SturmChain(tuple(polys))


def sign_changes(values: Sequence) -> int:
    """Number of sign alternations, zeros skipped."""
    count, prev = 0, 0
    for v in values:
        s = sign(v)
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def sign_right_of(p: Polynomial, a) -> int:
    """Sign of ``p(x)`` for ``x`` slightly greater than ``a``."""
    q = p
    while not q.is_zero:
        v = q(a)
        if v != 0:
            return sign(v)
        q = q.derivative()
    return 0


def sign_left_of(p: Polynomial, a) -> int:
    """Sign of ``p(x)`` for ``x`` slightly less than ``a``."""
    q, k = p, 0
    while not q.is_zero:
        v = q(a)
        if v != 0:
            return sign(v) * (-1) ** k
        q, k = q.derivative(), k + 1
    return 0


def sign_at_plus_inf(p: Polynomial) -> int:
    return 0 if p.is_zero else sign(p.lead)


def sign_at_minus_inf(p: Polynomial) -> int:
    return 0 if p.is_zero else sign(p.lead) * (-1) ** p.deg


def _proper_chain(R: RationalFunction) -> SturmChain:
    _, proper = R.split_polynomial_part()
    return build_chain(proper.den, proper.num)


def cauchy_index_interval(R: RationalFunction, a, b) -> int:
    """Cauchy index of ``R`` on the open interval ``(a, b)``, as ``V(a+0) - V(b-0)``."""
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("interval must satisfy a < b")
    if R.den(a) == 0 or R.den(b) == 0:
        raise BoundaryPoleError("pole at an interval endpoint")
    chain = _proper_chain(R)
    va = sign_changes([sign_right_of(f, a) for f in chain.polys])
    vb = sign_changes([sign_left_of(f, b) for f in chain.polys])
    return va - vb


def line_index_from_limits(chain: SturmChain) -> int:
    vm = sign_changes([sign_at_minus_inf(f) for f in chain.polys])
    vp = sign_changes([sign_at_plus_inf(f) for f in chain.polys])
    return vm - vp


def line_index_regular(chain: SturmChain) -> int:
    """``n - 2 v(h_0..h_n)``; only valid for regular chains."""
    if not chain.is_regular:
        raise ValueError("chain is not regular")
    return chain.polys[0].deg - 2 * sign_changes(chain.leading)


def cauchy_index_line(R: RationalFunction) -> int:
    """Cauchy index of ``R`` over the whole real line.

    Any polynomial part of ``R`` is dropped first: it has no finite poles.
    """
    chain = _proper_chain(R)
    if chain.is_regular:
        return line_index_regular(chain)
    return line_index_from_limits(chain)


def index_at_infinity(R: RationalFunction) -> int:
    if R.num.is_zero or R.num.deg <= R.den.deg:
        return 0
    nu = R.num.deg - R.den.deg
    if nu % 2 == 0:
        return 0
    return -sign(R.num.lead / R.den.lead)


def projective_index(R: RationalFunction) -> int:
    return cauchy_index_line(R) + index_at_infinity(R)


def count_distinct_real_roots(f: Polynomial, a=None, b=None) -> int:
    """Distinct real roots of ``f`` in ``(a, b)`` (whole line by default), via ``Ind(f'/f)``."""
    if f.is_zero:
        raise ZeroPolynomialError("zero polynomial has infinitely many roots")
    if f.deg == 0:
        return 0
    R = RationalFunction(f.derivative(), f)
    if a is None and b is None:
        return cauchy_index_line(R)
    if a is None or b is None:
        B = cauchy_root_bound(f)
        a = -B if a is None else a
        b = B if b is None else b
    return cauchy_index_interval(R, a, b)


def squarefree_tower(g: Polynomial) -> list:
    """``[g, gcd(g, g'), gcd(gcd(g, g'), ...), ...]`` down to a constant.

    A root of multiplicity ``m`` is a root of exactly the first ``m`` members,
    so summing a distinct-root count over the tower counts multiplicities.
    """
    out = []
    while not g.is_zero and g.deg > 0:
        out.append(g)
        g = gcd_monic(g, g.derivative())
    return out


def count_real_roots_with_multiplicity(g: Polynomial) -> int:
    if g.deg == 0:
        return 0
    B = cauchy_root_bound(g)
    total = 0
    for member in squarefree_tower(g):
        total += cauchy_index_interval(RationalFunction(member.derivative(), member), -B, B)
    return total


def half_plane_split(p) -> HalfPlaneSplit:
    """Counts of roots left of, right of, and on the imaginary axis.

    ``gcd(f0, f1)`` carries every root of ``p`` whose ``w = z/i`` is a common
    zero of the split pair; its real roots are exactly the axis roots.  The
    reduced index ``Ind(f1/f0)`` gives ``n_minus - n_plus`` for the rest.
    """
    cp = as_complex(p)
    if cp.is_zero:
        raise ZeroPolynomialError("root distribution of the zero polynomial")
    n = cp.deg
    split = imaginary_axis_split(cp)
    g = gcd_monic(split.f0, split.f1)
    n_axis = count_real_roots_with_multiplicity(g)
    ind = cauchy_index_line(RationalFunction(split.f1, split.f0))
    off = n - n_axis
    if (off + ind) % 2:
        raise ArithmeticError("parity violation in half-plane split")
    return HalfPlaneSplit((off + ind) // 2, (off - ind) // 2, n_axis, g)


def isolate_real_roots(f: Polynomial) -> list:
    """Disjoint rational intervals ``(a, b)``, each holding one distinct real root of ``f``.

    Endpoints are never roots; intervals are returned in increasing order.
    """
    if f.is_zero:
        raise ZeroPolynomialError("cannot isolate roots of the zero polynomial")
    if f.deg == 0:
        return []
    s = squarefree_part(f)
    B = cauchy_root_bound(s)
    chain = build_chain(s, s.derivative())

    def count(a, b):
        return sign_changes(chain.signs_at(a)) - sign_changes(chain.signs_at(b))

    out = []
    stack = [(-B, B, count(-B, B))]
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        for t in _split_points():
            m = a + (b - a) * t
            if s(m) != 0:
                break
        left = count(a, m)
        stack.append((a, m, left))
        stack.append((m, b, k - left))
    out.sort()
    return out


def _split_points():
    yield Fraction(1, 2)
    d = 3
    while True:
        for j in range(1, d):
            yield Fraction(j, d)
        d += 1
