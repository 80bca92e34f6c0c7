from fractions import Fraction

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from conftest import small_rats
from routh_hurwitz.linalg import cofactor_det, det, inertia, leading_principal_minors


@st.composite
def square_matrices(draw, max_size=5):
    n = draw(st.integers(min_value=1, max_value=max_size))
    return [draw(st.lists(small_rats, min_size=n, max_size=n)) for _ in range(n)]


@st.composite
def symmetric_matrices(draw, max_size=5):
    M = draw(square_matrices(max_size))
    n = len(M)
    return [[M[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)]


def test_determinant_needs_row_swap():
    M = [[0, 1], [1, 0]]
    assert det(M) == -1 == cofactor_det(M)


def test_empty_matrix():
    assert det([]) == 1


def test_minors_continue_past_zero_pivot():
    M = [[0, 1, 2], [1, 0, 3], [2, 3, 4]]
    assert leading_principal_minors(M) == [0, -1, cofactor_det(M)]


@given(square_matrices())
def test_bareiss_matches_cofactor_expansion(M):
    assert det(M) == cofactor_det(M)


@given(square_matrices())
def test_leading_minors_match_submatrix_determinants(M):
    n = len(M)
    assert leading_principal_minors(M) == [cofactor_det([r[:k] for r in M[:k]]) for k in range(1, n + 1)]


def test_inertia_with_zero_diagonal():
    assert inertia([[0, 1], [1, 0]]) == (1, 1)
    assert inertia([[0, 0], [0, 0]]) == (0, 0)
    assert inertia([[0, 2, 0], [2, 0, 0], [0, 0, -3]]) == (1, 2)


@given(symmetric_matrices())
def test_inertia_matches_eigenvalue_signs(M):
    eig = np.linalg.eigvalsh(np.array([[float(x) for x in row] for row in M]))
    if np.min(np.abs(eig)) < 1e-9 and np.max(np.abs(eig)) > 1e-9:
        # a near-zero eigenvalue cannot be classified numerically; check rank instead
        pos, neg = inertia(M)
        assert pos + neg == np.linalg.matrix_rank(np.array(M, dtype=float))
        return
    assert inertia(M) == (int((eig > 1e-9).sum()), int((eig < -1e-9).sum()))


def test_fraction_entries_stay_exact():
    M = [[Fraction(1, 3), Fraction(1, 7)], [Fraction(2, 5), Fraction(3, 11)]]
    assert det(M) == Fraction(1, 3) * Fraction(3, 11) - Fraction(1, 7) * Fraction(2, 5)
