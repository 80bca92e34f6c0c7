"""Run every root-distribution method on one polynomial and compare."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import hankel, hurwitz, routh, stieltjes, sturm_index
from .scalar_poly import ComplexPolynomial, Polynomial

METHODS = ("sturm", "routh", "hurwitz", "hankel", "cf")


@dataclass(frozen=True)
class MethodResult:
    method: str
    distribution: Optional[sturm_index.RootDistribution]
    note: str = ""


@dataclass(frozen=True)
class CrossCheck:
    results: tuple

    @property
    def applicable(self) -> list:
        return [r for r in self.results if r.distribution is not None]

    @property
    def agree(self) -> bool:
        counts = {r.distribution.counts for r in self.applicable}
        return len(counts) == 1

    def by_method(self, name: str) -> MethodResult:
        return next(r for r in self.results if r.method == name)


def _real(p) -> Optional[Polynomial]:
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, ComplexPolynomial) and p.is_real:
        return p.to_real()
    return None


def distribution(p, method: str) -> MethodResult:
    """Root distribution of ``p`` by one named method.

    Routh and Hurwitz need real coefficients; Hurwitz additionally needs
    every minor nonzero.  When not applicable the distribution is ``None``.
    """
    real = _real(p)
    if method == "sturm":
        return MethodResult(method, sturm_index.half_plane_split(p).distribution())
    if method == "hankel":
        return MethodResult(method, hankel.distribution_via_hankel(p))
    if method == "cf":
        return MethodResult(method, stieltjes.distribution_via_cf(p))
    if method == "routh":
        if real is None:
            return MethodResult(method, None, "complex coefficients")
        sc = routh.classify(real)
        note = f"case ({sc.case})" if sc.case else "incomplete scheme, Sturm fallback"
        return MethodResult(method, sc.distribution, note)
    if method == "hurwitz":
        if real is None:
            return MethodResult(method, None, "complex coefficients")
        try:
            return MethodResult(method, hurwitz.distribution_from_minors(real))
        except hurwitz.ZeroMinorError:
            return MethodResult(method, None, "zero Hurwitz minor")
    raise ValueError(f"unknown method {method!r}")


def crosscheck(p) -> CrossCheck:
    return CrossCheck(tuple(distribution(p, m) for m in METHODS))
