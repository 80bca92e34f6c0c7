"""Hurwitz matrix, its leading minors, and the criteria built on them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .linalg import det, leading_principal_minors
from .scalar_poly import Polynomial
from .sturm_index import RootDistribution, sign_changes


class ZeroMinorError(ValueError):
    """A Hurwitz minor vanishes, so the sign-variation count does not apply."""


@dataclass(frozen=True)
class HurwitzReport:
    minors: tuple
    stable: bool
    # (a_0, eta_1, eta_2/eta_1, ...); None once some minor is zero
    quotient_sequence: Optional[tuple]


@dataclass(frozen=True)
class ResultantMinors:
    values: tuple


def _coeff(a: tuple, k: int) -> Fraction:
    return a[k] if 0 <= k < len(a) else Fraction(0)


def hurwitz_matrix(p: Polynomial) -> list:
    """``H[i][j] = a_{2j - i}`` (1-based), zero outside ``0..n``."""
    n = p.deg
    if n < 1:
        raise ValueError("Hurwitz matrix needs degree >= 1")
    a = p.coeffs
    return [[_coeff(a, 2 * j - i) for j in range(1, n + 1)] for i in range(1, n + 1)]


def _normalized(p: Polynomial) -> Polynomial:
    return -p if p.lead < 0 else p


def leading_minors(p: Polynomial) -> HurwitzReport:
    p = _normalized(p)
    minors = tuple(leading_principal_minors(hurwitz_matrix(p)))
    quotients = None
    if all(m != 0 for m in minors):
        quotients = (p.lead, minors[0]) + tuple(
            minors[k] / minors[k - 1] for k in range(1, len(minors))
        )
    return HurwitzReport(minors, all(m > 0 for m in minors), quotients)


def hurwitz_stable(p: Polynomial) -> bool:
    return leading_minors(p).stable


def distribution_from_minors(p: Polynomial) -> RootDistribution:
    """Right-half-plane roots = sign variations of ``a_0, eta_1, eta_2/eta_1, ...``."""
    rep = leading_minors(p)
    if rep.quotient_sequence is None:
        raise ZeroMinorError(
            "a Hurwitz minor is zero; use routh.classify for the axis-root cases"
        )
    v = sign_changes(rep.quotient_sequence)
    return RootDistribution(p.deg - v, v, 0)


def lienard_chipart(p: Polynomial) -> bool:
    """Positive coefficients plus ``eta_{n-1}, eta_{n-3}, ... > 0``."""
    p = _normalized(p)
    n = p.deg
    if any(c <= 0 for c in p.coeffs):
        return False
    wanted = list(range(n - 1, 0, -2))
    if not wanted:
        return True
    minors = leading_principal_minors(hurwitz_matrix(p))
    return all(minors[k - 1] > 0 for k in wanted)


def resultant_minors(num: Polynomial, den: Polynomial, degree: Optional[int] = None) -> ResultantMinors:
    """The interleaved determinants ``nabla_2, nabla_4, ..., nabla_2n`` of ``num/den``.

    Taken on the pair as given (not reduced): ``nabla_2n`` vanishes exactly
    when ``num`` and ``den`` share a factor.  Row pairs are ``(c, b)`` shifted
    right by one column each time, with ``c`` the denominator coefficients.

    ``degree`` pads both coefficient rows to a nominal degree, which lets the
    leading ``c_0`` be zero (needed when the pair comes from an even/odd split
    whose top coefficient vanishes).  Without it ``c_0`` must be nonzero.
    """
    if degree is None:
        if den.is_zero:
            raise ValueError("denominator leading coefficient c_0 must be nonzero")
        n = den.deg
    else:
        n = degree
        if n < 1 or (not den.is_zero and den.deg > n):
            raise ValueError("nominal degree must be >= 1 and >= deg den")
    if not num.is_zero and num.deg > n:
        raise ValueError("resultant minors need deg num <= deg den")
    c = den.padded(n + 1)
    b = num.padded(n + 1)
    values = []
    for k in range(1, n + 1):
        rows = []
        for shift in range(k):
            rows.append([_coeff(c, j - shift) for j in range(2 * k)])
            rows.append([_coeff(b, j - shift) for j in range(2 * k)])
        values.append(det(rows))
    return ResultantMinors(tuple(values))
