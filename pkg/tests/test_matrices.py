from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from avpoints import matrices as mx
from avpoints.errors import NotFullRank


def square(n, lo=-6, hi=6):
    return st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)


def test_hnf_examples():
    H, U = mx.hermite_normal_form([[1, 2], [-1, 2]])
    assert H == [[4, 3], [0, 1]]
    H, U = mx.hermite_normal_form([[2, 4], [0, 2]])
    assert H == [[2, 0], [0, 2]]


@settings(max_examples=150)
@given(st.integers(1, 4).flatmap(square))
def test_hnf_properties(M):
    H, U = mx.hermite_normal_form(M)
    assert mx.matmul(M, U) == H
    assert abs(mx.int_det(U)) == 1
    assert abs(mx.int_det(H)) == abs(mx.int_det(M))


@settings(max_examples=150)
@given(st.integers(1, 4).flatmap(square))
def test_smith_properties(M):
    diag, P, Q = mx.smith_form(M)
    n = len(M)
    D = mx.matmul(mx.matmul(P, M), Q)
    for i in range(n):
        for j in range(n):
            assert D[i][j] == (diag[i] if i == j and i < len(diag) else 0)
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert abs(mx.int_det(P)) == 1 and abs(mx.int_det(Q)) == 1
    if mx.int_det(M):
        assert np.prod([float(d) for d in diag]) == pytest.approx(abs(mx.int_det(M)))


def test_smith_divides_case():
    diag, _, _ = mx.smith_form([[2, 4], [6, 8]])
    assert diag[:2] == [2, 4]


@settings(max_examples=100)
@given(st.integers(1, 5).flatmap(square))
def test_det_agrees(M):
    assert mx.det(M) == mx.int_det(M)
    assert round(np.linalg.det(np.array(M, dtype=float))) == mx.int_det(M)


@settings(max_examples=100)
@given(st.integers(1, 4).flatmap(square))
def test_inverse(M):
    if mx.int_det(M) == 0:
        with pytest.raises(ZeroDivisionError):
            mx.inverse(M)
        return
    Minv = mx.inverse(M)
    assert mx.matmul(M, Minv) == mx.identity(len(M))


@settings(max_examples=100)
@given(st.integers(1, 5).flatmap(square))
def test_charpoly_against_numpy(M):
    cp = mx.charpoly(M)
    ref = np.poly(np.array(M, dtype=float))[::-1]
    assert [float(c) for c in cp] == pytest.approx(list(ref), abs=1e-6 * max(1, np.abs(ref).max()))
    assert cp[-1] == 1


def test_lattice_hnf():
    cols = mx.lattice_hnf([[2, 0], [1, 1], [0, 2]], 2)
    # upper triangular with positive pivots, covolume 2
    assert cols[0][0] * cols[1][1] == 2
    with pytest.raises(NotFullRank):
        mx.lattice_hnf([[1, 1], [2, 2]], 2)


def test_mod_p_linear_algebra():
    M = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert mx.rank_mod(M, 5) == 2
    ker = mx.kernel_mod(M, 5)
    assert len(ker) == 1
    v = ker[0]
    assert all(sum(r[j] * v[j] for j in range(3)) % 5 == 0 for r in M)
    assert mx.rank([[Fraction(1, 2), 1], [1, 2]]) == 1
