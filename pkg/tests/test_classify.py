import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from avpoints import polys
from avpoints.arith import valuation
from avpoints.classify import (
    IsogenyClass,
    admissible_groups,
    annihilated_by,
    cross_checked,
    enumerate_elliptic_classes,
    is_cyclic_class,
    is_rich_class,
    prime_powers_up_to,
    product_weil,
    rich_by_factors,
    table_category,
    two_generator_witness,
)
from avpoints.errors import NotPrimePower, NotSquarefree, PartitionTooLong
from avpoints.groups import AbGroup
from avpoints.polygons import hodge_polygon, lower_hull, newton_polygon, partitions, shifted_poly
from avpoints.weil import validate_weil

from helpers import weil_list

A_G = validate_weil((25, 0, 6, 0, 1), 5)
AB_E = validate_weil((9, -3, 4, -1, 1), 3)


# polygons and groups ---------------------------------------------------------

def test_shifted_and_newton():
    assert shifted_poly(A_G.h) == (32, -16, 12, -4, 1)
    assert newton_polygon(A_G.h, 2).vertices == ((0, 5), (2, 2), (4, 0))


def test_hodge_shapes():
    assert hodge_polygon((5,), 4).vertices == ((0, 5), (1, 0), (4, 0))
    assert hodge_polygon((1, 3), 4).vertices == ((0, 4), (1, 1), (2, 0), (4, 0))
    assert hodge_polygon((1, 1, 1, 1), 4).vertices == ((0, 4), (4, 0))
    with pytest.raises(PartitionTooLong):
        hodge_polygon((1, 1, 1), 2)


@given(st.lists(st.tuples(st.integers(0, 12), st.integers(-5, 20)), min_size=1, max_size=12, unique_by=lambda t: t[0]))
def test_lower_hull_is_below_all_points(pts):
    hull = lower_hull(pts)
    xs = [p[0] for p in hull]
    assert xs == sorted(xs)
    assert hull[0][0] == min(p[0] for p in pts) and hull[-1][0] == max(p[0] for p in pts)
    for (x0, y0), (x1, y1), (x2, y2) in zip(hull, hull[1:], hull[2:]):
        # strictly convex turn
        assert (y1 - y0) * (x2 - x1) < (y2 - y1) * (x1 - x0)
    for x, y in pts:
        for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
            if x0 <= x <= x1:
                assert Fraction(y) >= y0 + Fraction(y1 - y0, x1 - x0) * (x - x0)


def test_partition_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert sorted(partitions(5, max_parts=2)) == [(3, 2), (4, 1), (5,)]


def test_abgroup():
    G = AbGroup.from_invariants([4, 6])
    assert G.invariants == (2, 12) and G.order == 24 and G.exponent == 12
    assert str(G) == "Z/2 x Z/12"
    assert AbGroup.from_invariants([1, 1]).invariants == ()
    assert AbGroup.from_prime_partitions({2: [1, 3], 3: [1]}) == AbGroup((2, 24))
    assert AbGroup.cyclic(10).is_cyclic()
    with pytest.raises(ValueError):
        AbGroup((4, 6))


# admissible groups, cyclicity, richness --------------------------------------

def test_admissible_examples():
    assert admissible_groups(validate_weil((2, 1, 1), 2)) == [AbGroup((4,))]
    assert admissible_groups(validate_weil((4, -1, 1), 4)) == [AbGroup((4,))]
    groups = admissible_groups(A_G)
    assert len(groups) == 6 and AbGroup((32,)) in groups
    assert AbGroup((2, 2, 2, 2, 2)) not in groups
    assert admissible_groups(AB_E) == [AbGroup((10,))]
    with pytest.raises(NotSquarefree):
        admissible_groups(validate_weil((4, -4, 1), 4))


@pytest.mark.parametrize("method", ["conductor", "newton", "enumeration"])
def test_cyclic_examples(method):
    assert is_cyclic_class(AB_E, method)
    assert not is_cyclic_class(A_G, method)
    assert is_cyclic_class(validate_weil((2, 1, 1), 2), method)
    assert not is_cyclic_class(validate_weil((3, 0, 1), 3), method)


@pytest.mark.parametrize("method", ["formula", "integrality", "enumeration"])
def test_rich_examples(method):
    assert is_rich_class(AB_E, method)
    assert not is_rich_class(A_G, method)
    assert is_rich_class(validate_weil((3, 0, 1), 3), method)
    assert not is_rich_class(validate_weil((2, 1, 1), 2), method)


def test_trivial_group_class():
    W = validate_weil((3, -3, 1), 3)  # trace 3 over F_3, N = 1
    assert W.N == 1
    assert cross_checked(W)[:2] == (True, True)


def test_unknown_method():
    with pytest.raises(ValueError):
        is_cyclic_class(AB_E, "guess")


def test_cross_check_small_fields():
    for q in prime_powers_up_to(30):
        for W in enumerate_elliptic_classes(q):
            cross_checked(W)
    for q in (2, 3, 4):
        for W in weil_list(2, q):
            cross_checked(W)


def test_odd_q_four_divides_n_never_cyclic():
    for q in (3, 5, 7, 9):
        for W in enumerate_elliptic_classes(q):
            if W.N % 4 == 0:
                assert not is_cyclic_class(W)
    for q in (3, 5):
        for W in weil_list(2, q):
            if W.N % 4 == 0:
                assert not is_cyclic_class(W)


def test_admissible_contains_cyclic_and_orders():
    for W in weil_list(2, 5):
        gs = admissible_groups(W)
        assert AbGroup.cyclic(W.N) in gs
        assert all(G.order == W.N for G in gs)


def test_annihilated_by():
    C = IsogenyClass(AB_E)
    assert annihilated_by(AB_E, C.O, 10)
    assert annihilated_by(AB_E, C.R, AB_E.N)
    W = validate_weil((2, 1, 1), 2)
    C2 = IsogenyClass(W)
    assert not annihilated_by(W, C2.O, 2)
    assert annihilated_by(W, C2.R, 4)


def test_rich_exponent_on_maximal_order():
    # rich classes: rad N kills the group of the maximal order
    from avpoints.arith import radical

    for W in weil_list(2, 3):
        if W.N > 1 and is_rich_class(W):
            C = IsogenyClass(W)
            assert annihilated_by(W, C.O, radical(W.N))


def test_table_category():
    assert table_category(True, True) == "both"
    assert table_category(False, True) == "only_rich"
    assert table_category(True, False) == "only_cyclic"
    assert table_category(False, False) == "neither"


# elliptic classes ------------------------------------------------------------

def brute_force_traces(p):
    """Traces of all elliptic curves over F_p by counting points of Weierstrass models."""
    traces = set()
    for a1, a2, a3, a4, a6 in itertools.product(range(p), repeat=5):
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
        if disc % p == 0:
            continue
        n = 1
        for x in range(p):
            for y in range(p):
                if (y * y + a1 * x * y + a3 * y - x**3 - a2 * x * x - a4 * x - a6) % p == 0:
                    n += 1
        traces.add(p + 1 - n)
    return traces


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_waterhouse_against_point_counts(p):
    got = {-W.h[1] for W in enumerate_elliptic_classes(p)}
    assert got == brute_force_traces(p)


def test_elliptic_counts():
    assert [len(enumerate_elliptic_classes(q)) for q in (2, 4, 5)] == [5, 7, 9]
    assert sorted(-W.h[1] for W in enumerate_elliptic_classes(4)) == [-3, -2, -1, 0, 1, 2, 3]
    # q = 9: traces prime to 3, plus 0 and +-3
    assert sorted(-W.h[1] for W in enumerate_elliptic_classes(9)) == [t for t in range(-5, 6) if t % 3 or t in (0, 3, -3)]
    with pytest.raises(NotPrimePower):
        enumerate_elliptic_classes(6)
    with pytest.raises(ValueError):
        enumerate_elliptic_classes(128, bound=100)


# proposition-shaped properties -----------------------------------------------

def test_linear_coefficient_identity():
    """-b_1 = g h(1) mod ell^s whenever q = 1 mod ell^s, for q-symmetric h."""
    rng = random.Random(17)
    checked = 0
    for _ in range(400):
        ell = rng.choice([2, 3, 5])
        s = rng.randint(1, 2)
        q = ell**s * rng.randint(1, 6) + 1
        g = rng.randint(1, 3)
        # random q-symmetric monic polynomial of degree 2g
        top = [rng.randint(-20, 20) for _ in range(g)]
        h = [0] * (2 * g + 1)
        h[2 * g] = 1
        for i, c in enumerate(top, 1):
            h[2 * g - i] = c
        h[g] = rng.randint(-20, 20)
        for i in range(g + 1, 2 * g + 1):
            h[2 * g - i] = q ** (i - g) * h[i]
        b = shifted_poly(h)
        assert (-b[1] - g * polys.evaluate(h, 1)) % ell**s == 0
        checked += 1
    assert checked == 400


def test_two_generator_witness_examples():
    # q = 5, ell = 2: every squarefree class with 4 | N admits (2, N_2 / 2)
    for W in weil_list(1, 5) + weil_list(2, 5):
        e = valuation(W.N, 2)
        if e >= 2:
            assert two_generator_witness(W, 2, 1, e - 1)
    # q = 4, ell = 3
    hits = 0
    for W in weil_list(2, 4):
        e = valuation(W.N, 3)
        if e >= 2:
            assert two_generator_witness(W, 3, 1, e - 1)
            hits += 1
    assert hits > 0
    with pytest.raises(ValueError):
        two_generator_witness(A_G, 2, 3, 1)


def test_richness_of_products():
    """A product of distinct elliptic classes is rich iff every factor is."""
    for q in (2, 3, 4, 5, 7):
        Es = enumerate_elliptic_classes(q)
        for A, B in itertools.combinations(Es, 2):
            W = product_weil([A, B])
            assert W.squarefree
            assert is_rich_class(W, "formula") == rich_by_factors([A, B])
