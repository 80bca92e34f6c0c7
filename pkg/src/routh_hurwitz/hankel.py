"""Markov parameters, Hankel forms and the root counts read off their inertia."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import inertia, leading_principal_minors
from .scalar_poly import (
    Polynomial,
    RationalFunction,
    ZeroPolynomialError,
    as_complex,
    gcd_monic,
    imaginary_axis_split,
    poly_divmod,
)
from .sturm_index import RootDistribution, squarefree_tower


@dataclass(frozen=True)
class MarkovSequence:
    """Expansion ``R = polynomial_part + s_0/z + s_1/z**2 + ...`` at infinity."""

    s: tuple
    polynomial_part: Polynomial

    @property
    def s_minus1(self) -> Fraction:
        return self.polynomial_part.coeff(0)


@dataclass(frozen=True)
class HankelReport:
    rank: int
    signature: int
    pos: int
    neg: int


@dataclass(frozen=True)
class RootTypeCount:
    distinct_real: int
    distinct_conjugate_pairs: int


def markov_parameters(R: RationalFunction, count: int) -> MarkovSequence:
    """Solve ``b_j = sum_i c_{j-i} s_{i-1}`` for ``s_0 .. s_{count-1}``."""
    if count < 1:
        raise ValueError("count must be >= 1")
    q, r = poly_divmod(R.num, R.den)
    n = R.den.deg
    c = R.den.coeffs
    # r/den has b_0 = 0, so s_{-1} = 0 in the recurrence for the proper part
    b = r.padded(n + 1) if not r.is_zero else (Fraction(0),) * (n + 1)
    s = []  # s[i] holds s_{i-1}
    for j in range(count + 1):
        bj = b[j] if j <= n else Fraction(0)
        acc = bj
        for i in range(j):
            if j - i <= n:
                acc -= c[j - i] * s[i]
        s.append(acc / c[0])
    return MarkovSequence(tuple(s[1:]), q)


def hankel_matrix(s, n: int, shift: int = 0) -> list:
    return [[s[i + j + shift] for j in range(n)] for i in range(n)]


def hankel_rank_signature(s, n: int) -> HankelReport:
    seq = s.s if isinstance(s, MarkovSequence) else tuple(s)
    if len(seq) < 2 * n - 1:
        raise ValueError(f"need at least {2 * n - 1} Markov parameters")
    pos, neg = inertia(hankel_matrix(seq, n))
    return HankelReport(pos + neg, pos - neg, pos, neg)


def hankel_minors(R: RationalFunction, shift: int = 0) -> tuple:
    """Leading principal minors of ``[s_{i+j+shift}]`` of size ``deg den``.

    ``shift=0`` is the positivity family for properness; ``shift=1`` the
    shifted family built from ``s_1, s_2, ...``.
    """
    n = R.den.deg
    if n == 0:
        return ()
    s = markov_parameters(R, 2 * n + shift).s
    return tuple(leading_principal_minors(hankel_matrix(s, n, shift)))


def is_proper_via_hankel(R: RationalFunction) -> bool:
    """All ``deg den`` leading Hankel minors strictly positive (``R`` strictly proper)."""
    if not R.is_strictly_proper:
        raise ValueError("properness test needs deg num < deg den")
    if R.den.deg == 0:
        return False
    return all(m > 0 for m in hankel_minors(R))


def newton_sums(f: Polynomial, count: int) -> MarkovSequence:
    """Power sums of the roots of ``f``, read off the expansion of ``f'/f``."""
    if f.is_zero:
        raise ZeroPolynomialError("Newton sums of the zero polynomial")
    if f.deg < 1:
        raise ValueError("Newton sums need degree >= 1")
    return markov_parameters(RationalFunction(f.derivative(), f), count)


def borchardt_jacobi(f: Polynomial) -> RootTypeCount:
    n = f.deg
    rep = hankel_rank_signature(newton_sums(f, 2 * n - 1), n)
    return RootTypeCount(rep.pos - rep.neg, rep.neg)


def real_roots_with_multiplicity(g: Polynomial) -> int:
    """Real roots of ``g`` counted with multiplicity, from Newton-sum signatures."""
    return sum(borchardt_jacobi(m).distinct_real for m in squarefree_tower(g))


def distribution_via_hankel(p) -> RootDistribution:
    """``n_minus - n_plus`` is the signature of the Hankel form of ``f1/f0``."""
    cp = as_complex(p)
    n = cp.deg
    split = imaginary_axis_split(cp)
    R = RationalFunction(split.f1, split.f0)
    rep = hankel_rank_signature(markov_parameters(R, 2 * n - 1), n)
    g = gcd_monic(split.f0, split.f1)
    if rep.rank != n - g.deg:
        raise ArithmeticError("Hankel rank disagrees with the pole count")
    n_axis = real_roots_with_multiplicity(g)
    off = n - n_axis
    return RootDistribution((off + rep.signature) // 2, (off - rep.signature) // 2, n_axis,
                            g if n_axis else None)
