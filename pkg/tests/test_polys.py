from fractions import Fraction

import numpy as np
from hypothesis import assume, given, settings, strategies as st

from avpoints import polys
from avpoints.arith import QuadIrr

coeffs = st.lists(st.integers(-9, 9), min_size=2, max_size=7)


def test_basic_ops():
    a = (1, 1)  # 1 + x
    assert polys.mul(a, a) == (1, 2, 1)
    assert polys.power(a, 3) == (1, 3, 3, 1)
    q, r = polys.divmod_poly((1, 3, 3, 1), (1, 1))
    assert q == (1, 2, 1) and r == ()
    assert polys.deriv((1, 3, 3, 1)) == (3, 6, 3)
    assert polys.deriv((1, 3, 3, 1), 3) == (6,)
    assert polys.evaluate((2, 1, 1), 1) == 4
    assert polys.compose_affine((0, 0, 1), -1, 1) == (1, -2, 1)


@given(coeffs, coeffs)
def test_divmod_identity(a, b):
    a, b = polys.trim(a), polys.trim(b)
    assume(b)
    q, r = polys.divmod_poly(a, b)
    assert polys.add(polys.mul(q, b), r) == a
    assert polys.degree(r) < polys.degree(b)


@given(coeffs, coeffs)
def test_gcd_divides(a, b):
    a, b = polys.trim(a), polys.trim(b)
    assume(a and b)
    g = polys.gcd(a, b)
    assert polys.rem(a, g) == () and polys.rem(b, g) == ()


def test_squarefree():
    assert not polys.is_squarefree((1, 2, 1))
    assert polys.is_squarefree((2, 1, 1))
    assert polys.squarefree_part(polys.mul((1, 2, 1), (3, 0, 1))) == polys.monic(polys.mul((1, 1), (3, 0, 1)))


def test_count_real_roots_examples():
    # x^2 - 2 on (-inf, inf), x^2 + 1, x^2 + x + 2/... as in the docs
    assert polys.count_real_roots((-2, 0, 1)) == 2
    assert polys.count_real_roots((1, 0, 1)) == 0
    assert polys.count_real_roots((2, 1, 1)) == 0


def test_count_real_roots_closed_interval():
    # roots at +-2 sqrt 2 counted with exact endpoints
    b = QuadIrr(0, 2, 2)
    assert polys.count_real_roots((-8, 0, 1), -b, b) == 2
    assert polys.count_real_roots((-8, 0, 1), 0, b) == 1
    assert polys.count_real_roots((0, 1), 0, 1) == 1
    assert polys.count_real_roots((-1, 1), 0, 1) == 1


@settings(max_examples=200)
@given(coeffs)
def test_real_roots_against_numpy(a):
    a = polys.trim(a)
    assume(polys.degree(a) >= 1)
    s = polys.squarefree_part(a)
    roots = np.roots(list(reversed([float(c) for c in s])))
    real = [r for r in roots if abs(r.imag) < 1e-9]
    # skip near-degenerate cases where numpy is unreliable
    assume(all(abs(r.imag) > 1e-6 or abs(r.imag) < 1e-12 for r in roots))
    assert polys.count_real_roots(a) == len(real)
    assume(all(abs(r.real) > 1e-6 for r in real))
    assert polys.count_real_roots(a, 0, "+inf") == sum(1 for r in real if r.real > 0)


def test_primitive_keeps_sign():
    assert polys.primitive((-2, -4)) == (1, 2)
    assert polys.primitive((-2, -4), keep_sign=True) == (-1, -2)
    assert polys.content((6, 9, 3)) == 3


def test_to_str_and_rationals():
    assert polys.to_str((2, 1, 1)) == "x^2 + x + 2"
    assert polys.is_integral((Fraction(2), 1))
    assert not polys.is_integral((Fraction(1, 2), 1))
