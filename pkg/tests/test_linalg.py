"""Exact linear algebra over the scalar field and the deformation matrix."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qwh import scalar as sc
from qwh.linalg import (
    ScalarMatrix,
    eigensplit,
    eigenspace_identification,
    generic_q_not_eigenspace,
    involution_check,
    kernel_basis,
    lin_to_pair,
    pair_to_lin,
    rank,
    rhat_builtin,
    rref,
    span_contains,
    span_equal,
    ybe_check,
)
from qwh.scalar import Scalar


def test_pair_index_round_trip():
    seen = set()
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            a = pair_to_lin(i, j)
            assert 0 <= a < 9
            assert lin_to_pair(a) == (i, j)
            seen.add(a)
    assert len(seen) == 9


def test_ybe_and_involution_pass():
    R = rhat_builtin()
    assert ybe_check(R).ok
    assert involution_check(R).ok


def test_perturbed_matrix_fails_ybe():
    R = rhat_builtin()
    entries = [[R[i, j] for j in range(9)] for i in range(9)]
    entries[0][1] = entries[0][1] + sc.ONE
    broken = ScalarMatrix(entries)
    assert not ybe_check(broken).ok


def test_eigensplit_dimensions_and_projectors():
    R = rhat_builtin()
    plus, minus = eigensplit(R)
    assert {len(plus), len(minus)} == {6, 3}
    # each basis vector really is an eigenvector
    for basis, val in ((plus, sc.ONE), (minus, -sc.ONE)):
        M = ScalarMatrix([[v[i] for v in basis] for i in range(9)])
        assert (R * M - M.scale(val)).is_zero()


def test_eigenspace_identification_passes():
    assert eigenspace_identification().ok


def test_generic_q_relations_leave_the_eigenspace():
    assert generic_q_not_eigenspace().ok


rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4).map(
    Scalar.from_fraction
)


@st.composite
def matrices(draw, rows=3, cols=4):
    return ScalarMatrix(
        [[draw(rationals) for _ in range(cols)] for _ in range(rows)]
    )


@settings(max_examples=30, deadline=None)
@given(matrices())
def test_rref_pivots_and_rank(M):
    E, pivots = rref(M)
    assert rank(M) == len(pivots)
    for r, c in enumerate(pivots):
        assert E[r, c].is_one()
        for rr in range(E.rows):
            if rr != r:
                assert E[rr, c].is_zero()


@settings(max_examples=30, deadline=None)
@given(matrices())
def test_kernel_vectors_annihilate(M):
    for v in kernel_basis(M):
        out = [
            sum((M[i, j] * v[j] for j in range(M.cols)), sc.ZERO)
            for i in range(M.rows)
        ]
        assert all(x.is_zero() for x in out)
    assert rank(M) + len(kernel_basis(M)) == M.cols


@settings(max_examples=30, deadline=None)
@given(matrices(rows=4, cols=3))
def test_rank_nullity_and_span_reflexivity(M):
    cols = [[M[i, j] for i in range(M.rows)] for j in range(M.cols)]
    assert span_contains(cols, cols, M.rows)
    assert span_equal(cols, cols, M.rows)


def test_span_equal_detects_difference():
    e1 = [sc.ONE, sc.ZERO]
    e2 = [sc.ZERO, sc.ONE]
    assert not span_equal([e1], [e2], 2)
    assert span_equal([e1, e2], [e2, e1], 2)


def test_specialized_checks_still_pass():
    b = {"u": Fraction(5, 3), "s": Fraction(7)}
    R = rhat_builtin().substitute(b)
    assert ybe_check(R).ok
    assert involution_check(R).ok
    assert eigenspace_identification(bindings=b).ok
