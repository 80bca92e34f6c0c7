"""Exact determinants, leading minors and symmetric inertia on Fraction matrices."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def _copy(M) -> list:
    return [[Fraction(x) for x in row] for row in M]


def det(M) -> Fraction:
    """Bareiss elimination with row swaps."""
    A = _copy(M)
    n = len(A)
    if n == 0:
        return Fraction(1)
    s, prev = 1, Fraction(1)
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    s = -s
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]) / prev
        prev = A[k][k]
    return s * A[n - 1][n - 1]


def cofactor_det(M) -> Fraction:
    """Laplace expansion along the first row, memoized over column subsets."""
    A = _copy(M)
    n = len(A)

    @lru_cache(maxsize=None)
    def sub(row: int, cols: tuple) -> Fraction:
        if row == n:
            return Fraction(1)
        total = Fraction(0)
        for idx, c in enumerate(cols):
            a = A[row][c]
            if a:
                term = a * sub(row + 1, cols[:idx] + cols[idx + 1:])
                total += -term if idx % 2 else term
        return total

    return sub(0, tuple(range(n)))


def leading_principal_minors(M) -> list:
    """All leading principal minors ``det M[:k, :k]`` for ``k = 1..n``.

    Fraction-free elimination without pivoting keeps every leading minor on
    the diagonal.  At the first zero pivot the remaining minors are taken by
    cofactor expansion instead.
    """
    A = _copy(M)
    n = len(A)
    minors = []
    prev = Fraction(1)
    for k in range(n):
        minors.append(A[k][k])
        if A[k][k] == 0:
            minors.extend(cofactor_det([row[:m] for row in M[:m]]) for m in range(k + 2, n + 1))
            return minors
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]) / prev
        prev = A[k][k]
    return minors


def inertia(M) -> tuple:
    """``(pos, neg)`` of a symmetric matrix by congruence reduction.

    A nonzero diagonal pivot is eliminated on its own; when the whole
    remaining diagonal vanishes a 2x2 block ``[[0, b], [b, 0]]`` is
    eliminated instead, contributing one square of each sign.
    """
    A = _copy(M)
    pos = neg = 0
    while A:
        n = len(A)
        piv = next((i for i in range(n) if A[i][i] != 0), None)
        if piv is not None:
            d = A[piv][piv]
            if d > 0:
                pos += 1
            else:
                neg += 1
            rest = [i for i in range(n) if i != piv]
            A = [[A[i][j] - A[i][piv] * A[piv][j] / d for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if A[i][j] != 0), None)
        if pair is None:
            break
        i0, j0 = pair
        b = A[i0][j0]
        pos += 1
        neg += 1
        # inverse of [[0, b], [b, 0]] is [[0, 1/b], [1/b, 0]]
        rest = [i for i in range(n) if i not in pair]
        A = [
            [A[i][j] - (A[i][i0] * A[j0][j] + A[i][j0] * A[i0][j]) / b for j in rest]
            for i in rest
        ]
    return pos, neg
