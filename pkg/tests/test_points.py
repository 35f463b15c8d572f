import random

import pytest

from avpoints.algebra import EtaleAlgebra
from avpoints.classify import IsogenyClass
from avpoints.errors import ZeroDivisor
from avpoints.groups import AbGroup
from avpoints.lattice import Order
from avpoints.points import (
    Basis,
    Regime,
    cmtype2_ideal,
    coprime_conductor_group,
    default_depth,
    dual_group,
    dual_group_expressions,
    dual_ideal,
    functor_regime,
    group_from_order,
    groups_by_multiplicator,
    not_self_dual_witness,
    quotient_group,
    search_groups_for_multiplicator,
)
from avpoints.primes import primes_above, singular_primes, cm_type_at
from avpoints.weil import parse_label, validate_weil

from helpers import random_element, weil_list


@pytest.fixture(scope="module")
def a_g():
    return IsogenyClass(validate_weil((25, 0, 6, 0, 1), 5))


@pytest.fixture(scope="module")
def ab_e():
    return IsogenyClass(validate_weil((9, -3, 4, -1, 1), 3))


def test_quotient_group_small():
    K = EtaleAlgebra((2, 1, 1), 2)
    R = Order.equation_order(K)
    assert quotient_group(R, 1 - K.x) == AbGroup((4,))
    L = EtaleAlgebra((3, 0, 1), 3)
    assert quotient_group(Order.equation_order(L), 1 - L.x) == AbGroup((4,))
    assert quotient_group(R, K.scalar(3)) == AbGroup((3, 3))
    Q2 = EtaleAlgebra((-1, 0, 1))
    with pytest.raises(ZeroDivisor):
        quotient_group(Order.equation_order(Q2), Q2.x - 1)


def test_quotient_group_order_is_norm():
    rng = random.Random(1)
    for W in rng.sample(weil_list(2, 3), 8):
        C = IsogenyClass(W)
        for _ in range(3):
            r = random_element(rng, W.algebra)
            for S in (C.R, C.O):
                assert quotient_group(S, r).order == abs(r.norm())


def test_group_from_order_examples(a_g, ab_e):
    res = group_from_order(ab_e.O, ab_e.W)
    assert res.group == AbGroup((10,)) and res.basis_of_claim is Basis.GORENSTEIN
    assert res.functor_regime is Regime.ORD
    S = [S for S in a_g.overorders if S.index_in(a_g.O) == 8][0]
    res = group_from_order(S, a_g.W)
    assert res.basis_of_claim is Basis.IDEAL_QUOTIENT and res.warning
    assert res.group == AbGroup((2, 2, 8))
    assert res.hypotheses_checked == [(2, 1, 3)]


def test_regimes():
    assert functor_regime(validate_weil((25, 0, 6, 0, 1), 5)) is Regime.ORD
    assert functor_regime(validate_weil((3, 0, 1), 3)) is Regime.CS  # supersingular over a prime field
    assert functor_regime(validate_weil((4, 0, 1), 4)) is Regime.NONE


def test_type2_needs_regime():
    # the same order data without a functor regime only gets IdealQuotient
    W = validate_weil((25, 0, 6, 0, 1), 5)
    C = IsogenyClass(W)
    T = [T for T in C.overorders if C.R.index_in(T) == 2][0]
    assert group_from_order(T, W).basis_of_claim is Basis.TYPE2


def test_dual_ideal_involution_and_rings(ab_e):
    for S in ab_e.overorders:
        D = dual_ideal(S)
        assert dual_ideal(D) == S
        assert D == S.trace_dual().conjugate()
        assert D.multiplicator_ring() == Order.from_lattice(S.conjugate())
    O = ab_e.O
    assert dual_ideal(O).multiplicator_ring() == O


def test_dual_group_expressions_agree():
    rng = random.Random(5)
    for W in rng.sample(weil_list(2, 4), 10):
        C = IsogenyClass(W)
        for n in (1, 2):
            for I in (C.R, C.O, C.O.scale(C.K.x + 2).sum(C.O.scale(3))):
                vals = dual_group_expressions(I, n)
                assert len(set(vals)) == 1
                assert dual_group(I, W, n) == vals[0]


def test_example_81_dual_pair():
    W = validate_weil((16, 8, 1, 2, 1), 4)
    C = IsogenyClass(W)
    pairs = set()
    for P in primes_above(C.O, 2):
        S = Order.from_lattice(C.R.sum(P.ideal.power(2)))
        pairs.add((quotient_group(S, 1 - C.K.x), dual_group(S, W)))
    assert pairs == {(AbGroup((28,)), AbGroup((2, 14))), (AbGroup((2, 14)), AbGroup((28,)))}


def test_not_self_dual_witness(a_g, ab_e):
    T = [T for T in a_g.overorders if a_g.R.index_in(T) == 2][0]
    w = not_self_dual_witness(T, a_g.W, a_g.overorders)
    assert w is not None and w.S == T and w.prime.is_conjugation_stable()
    assert not_self_dual_witness(a_g.O, a_g.W, a_g.overorders) is None
    for S in ab_e.overorders:
        assert not_self_dual_witness(S, ab_e.W, ab_e.overorders) is None


def test_not_self_dual_needs_regime():
    W = validate_weil((4, 0, 1), 4)
    C = IsogenyClass(W)
    with pytest.raises(ValueError):
        not_self_dual_witness(C.O, W)


def test_coprime_conductor_group(a_g, ab_e):
    assert coprime_conductor_group(ab_e.W, samples=ab_e.overorders) == AbGroup((10,))
    assert coprime_conductor_group(a_g.W) is None
    for W in weil_list(2, 2):
        if W.N in (1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15):
            assert coprime_conductor_group(W) == AbGroup.cyclic(W.N)


def test_search_routes_agree(a_g):
    overs = a_g.overorders
    by_ring = groups_by_multiplicator(a_g.W, 4, overs, a_g.O)
    for S in overs[4:7]:
        assert search_groups_for_multiplicator(S, a_g.W, 4, a_g.O) == by_ring[S]


def test_search_monotone_in_depth(ab_e):
    O = ab_e.O
    g1 = search_groups_for_multiplicator(O, ab_e.W, 1, O)
    g3 = search_groups_for_multiplicator(O, ab_e.W, 3, O)
    assert g1 <= g3 == {AbGroup((10,))}
    with pytest.raises(ValueError):
        search_groups_for_multiplicator(O, ab_e.W, 0, O)


def test_default_depth(a_g, ab_e):
    assert default_depth(a_g.R, a_g.O, a_g.W.N) == 8
    # conductor index 9 is prime to N = 10
    assert default_depth(ab_e.R, ab_e.O, ab_e.W.N) == 1


def test_cmtype2_ideal():
    h, q = parse_label("3.4.ad_h_aj")
    C = IsogenyClass(validate_weil(h, q))
    hits = []
    for S in C.overorders:
        if S.conjugate() != S:
            continue
        for P in singular_primes(S, C.O):
            if not P.is_conjugation_stable() and cm_type_at(S, P) == 2:
                hits.append((S, P))
    assert hits
    S, P = hits[0]
    I, d, m = cmtype2_ideal(S, P)
    assert (d, m) == (1540, 2)
    assert I.multiplicator_ring() == S
    assert S.trace_dual().scale(d).issubset(S)
    assert not S.trace_dual().scale(d - 1).issubset(S)
