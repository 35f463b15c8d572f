import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from avpoints.errors import NotPrimePower, NotWeil, ValidationError
from avpoints.weil import (
    enumerate_real_weil,
    enumerate_weil,
    h_from_real_poly,
    parse_label,
    point_count,
    real_poly_from_h,
    validate_weil,
    weil_label,
)


def test_validate_examples():
    W = validate_weil((2, 1, 1), 2)
    assert W.squarefree and W.ordinary and W.g == 1 and W.N == 4
    W = validate_weil((25, 0, 6, 0, 1), 5)
    assert W.squarefree and W.ordinary and not W.has_real_roots
    with pytest.raises(NotWeil):
        validate_weil((2, -3, 1), 2)
    with pytest.raises(NotWeil):
        validate_weil((3, 1, 1), 2)  # not 2-symmetric
    with pytest.raises(NotPrimePower):
        validate_weil((6, 1, 1), 6)


def test_flags():
    assert validate_weil((2, 0, 1), 2).ordinary is False  # supersingular
    W = validate_weil((4, 0, -4, 0, 1), 2)  # (x^2 - 2)^2: real roots +-sqrt 2
    assert W.has_real_roots and not W.squarefree
    W = validate_weil((4, -4, 1), 4)  # (x - 2)^2
    assert not W.squarefree and W.has_real_roots


def test_point_counts():
    assert point_count(validate_weil((25, 0, 6, 0, 1), 5), 1) == 32
    assert point_count(validate_weil((16, 8, 1, 2, 1), 4), 1) == 28
    assert point_count(validate_weil((2, 1, 1), 2), 2) == 8
    # non-squarefree path
    assert point_count(validate_weil((4, -4, 1), 4), 1) == 1


def test_point_count_brute_force():
    # det(I - C^n) agrees with prod(1 - alpha^n) over numerical roots
    rng = random.Random(0)
    Ws = enumerate_weil(2, 3)
    for W in rng.sample(Ws, 10):
        roots = np.roots(list(reversed(W.h)))
        for n in (1, 2, 3):
            expect = np.prod([1 - r**n for r in roots]).real
            assert point_count(W, n) == round(expect)


def test_labels():
    assert weil_label((25, 0, 6, 0, 1), 5) == "2.5.a_g"
    assert weil_label((16, 8, 1, 2, 1), 4) == "2.4.c_b"
    assert weil_label((9, -3, 4, -1, 1), 3) == "2.3.ab_e"
    for label in ("2.5.a_g", "2.4.c_b", "2.3.ab_e", "1.2.ab", "3.5.ac_ba_abc"):
        h, q = parse_label(label)
        assert weil_label(h, q) == label
    with pytest.raises(ValidationError):
        parse_label("2.5.a")
    with pytest.raises(ValidationError):
        parse_label("nonsense")


def test_large_base26():
    assert parse_label("1.101.ba")[0] == (101, 26, 1)


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=3), st.sampled_from([2, 3, 4, 5, 7]))
def test_real_poly_roundtrip(tail, q):
    P = tuple(tail) + (1,)
    h = h_from_real_poly(P, q)
    assert real_poly_from_h(h, q, len(P) - 1) == P


@pytest.mark.parametrize("g,q,total,sqfree", [(1, 2, 5, 5), (1, 4, 9, 7), (1, 5, 9, 9), (2, 2, 35, 29), (2, 3, 63, 55), (2, 5, 129, 119)])
def test_enumeration_counts(g, q, total, sqfree):
    assert len(enumerate_real_weil(g, q)) == total
    assert len(enumerate_weil(g, q)) == sqfree


def test_enumeration_roots_on_circle():
    for W in enumerate_weil(2, 4):
        for r in np.roots(list(reversed(W.h))):
            assert abs(abs(r) - 2) < 1e-6
