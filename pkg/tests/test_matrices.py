"""Exact integer matrix helpers: arithmetic, determinants, kernels."""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sptorsion.matrices import IntMatrix, determinant, identity, left_kernel, standard_form


def laplace_det(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * laplace_det(minor)
        total += term if j % 2 == 0 else -term
    return total


def rational_rank(rows: list[list[int]]) -> int:
    work = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[rank])]
        rank += 1
    return rank


square_entries = st.integers(min_value=-9, max_value=9)


def square_matrix(max_size: int):
    return st.integers(min_value=1, max_value=max_size).flatmap(
        lambda n: st.lists(
            st.lists(square_entries, min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )


def test_construction_and_access():
    m = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert m.rows == 2 and m.cols == 2
    assert m[0, 1] == 2
    assert m.row(1) == (3, 4)
    assert m.to_rows() == [[1, 2], [3, 4]]
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])


def test_arithmetic():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    b = IntMatrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b).to_rows() == [[2, 1], [4, 3]]
    assert (a + b).to_rows() == [[1, 3], [4, 4]]
    assert (a - a).to_rows() == [[0, 0], [0, 0]]
    assert (-a).to_rows() == [[-1, -2], [-3, -4]]
    assert a.transpose().to_rows() == [[1, 3], [2, 4]]


def test_power():
    a = IntMatrix.from_rows([[0, -1], [1, 0]])
    assert (a**4).is_identity()
    assert not (a**2).is_identity()
    assert (a**0).is_identity()
    with pytest.raises(ValueError):
        a ** (-1)


def test_standard_form_properties():
    for g in range(1, 6):
        j = standard_form(g)
        assert j.transpose() == -j
        assert (j @ j) == -identity(2 * g)
        assert determinant(j) == 1
    with pytest.raises(ValueError):
        standard_form(0)


def test_determinant_known_values():
    assert determinant(identity(4)) == 1
    assert determinant(IntMatrix.from_rows([[2, 0], [0, 3]])) == 6
    assert determinant(IntMatrix.from_rows([[1, 2], [3, 4]])) == -2
    assert determinant(IntMatrix.from_rows([[0, 0], [0, 0]])) == 0


@settings(deadline=None, max_examples=150)
@given(square_matrix(5))
def test_determinant_matches_laplace(rows):
    assert determinant(IntMatrix.from_rows(rows)) == laplace_det(rows)


@settings(deadline=None, max_examples=150)
@given(
    st.integers(min_value=1, max_value=4).flatmap(
        lambda r: st.integers(min_value=1, max_value=4).flatmap(
            lambda c: st.lists(
                st.lists(square_entries, min_size=c, max_size=c),
                min_size=r,
                max_size=r,
            )
        )
    )
)
def test_left_kernel_annihilates_and_spans(rows):
    matrix = IntMatrix.from_rows(rows)
    basis = left_kernel(matrix)
    for vec in basis:
        image = [
            sum(vec[i] * matrix[i, j] for i in range(matrix.rows))
            for j in range(matrix.cols)
        ]
        assert all(x == 0 for x in image)
    assert len(basis) == matrix.rows - rational_rank(rows)


@settings(deadline=None, max_examples=60)
@given(
    st.integers(min_value=2, max_value=4).flatmap(
        lambda r: st.lists(
            st.lists(square_entries, min_size=2, max_size=2),
            min_size=r,
            max_size=r,
        )
    )
)
def test_left_kernel_is_saturated(rows):
    # gcd of the maximal minors of the basis matrix is 1, so the basis
    # spans the full integer kernel lattice, not a finite-index sublattice
    matrix = IntMatrix.from_rows(rows)
    basis = left_kernel(matrix)
    k = len(basis)
    if k == 0:
        return
    n = matrix.rows
    minors = []
    for cols in itertools.combinations(range(n), k):
        sub = [[vec[c] for c in cols] for vec in basis]
        minors.append(abs(laplace_det(sub)))
    assert math.gcd(*minors) == 1


def test_left_kernel_saturation_hand_case():
    # the doubled row must produce the primitive relation (1, -1), not (2, -2)
    matrix = IntMatrix.from_rows([[2, 4], [2, 4]])
    basis = left_kernel(matrix)
    assert len(basis) == 1
    assert sorted(abs(x) for x in basis[0]) == [1, 1]
