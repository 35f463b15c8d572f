"""Cyclicity, richness and admissible groups of squarefree isogeny classes."""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cached_property
from math import factorial, gcd

from . import matrices as mx
from . import polys
from .algebra import charpoly_scaled_inverse
from .arith import factor_integer, prime_power, radical, valuation
from .errors import NotPrimePower, NotSquarefree, OracleDisagreement
from .groups import AbGroup
from .lattice import Lattice, Order, conductor
from .maximal import frobenius_order, maximal_order
from .polygons import hodge_polygon, lies_on_or_below, newton_polygon, partitions
from .weil import WeilPoly, validate_weil

CYCLIC_METHODS = ("conductor", "newton", "enumeration")
RICH_METHODS = ("formula", "integrality", "enumeration")


class IsogenyClass:
    """A squarefree isogeny class with its lazily computed orders."""

    def __init__(self, W: WeilPoly):
        if not W.squarefree:
            raise NotSquarefree("isogeny class must be squarefree")
        self.W = W

    @classmethod
    def from_poly(cls, h, q):
        return cls(validate_weil(h, q))

    @property
    def K(self):
        return self.W.algebra

    @property
    def N(self) -> int:
        return self.W.N

    @cached_property
    def pi(self):
        return self.K.x

    @cached_property
    def R(self) -> Order:
        return frobenius_order(self.K)

    @cached_property
    def O(self) -> Order:
        return maximal_order(self.R)

    @cached_property
    def conductor(self) -> Lattice:
        return conductor(self.R, self.O)

    @cached_property
    def conductor_index(self) -> int:
        return self.R.index_in(self.O)

    def one_minus_pi_ideal(self, S: Order, n: int = 1) -> Lattice:
        return S.scale(1 - self.pi**n)

    @cached_property
    def overorders(self):
        from .overorders import overorders

        return overorders(self.R, self.O)


def _ensure_squarefree(W: WeilPoly):
    if not W.squarefree:
        raise NotSquarefree("classification needs a squarefree Weil polynomial")


def prime_exponents(N: int):
    return factor_integer(N) if N > 1 else []


def admissible_partitions(W: WeilPoly, ell: int):
    """Partitions of ord_ell(N) (ascending tuples) whose Hodge polygon is admissible."""
    e = valuation(W.N, ell)
    width = 2 * W.g
    newt = newton_polygon(W.h, ell)
    out = []
    for part in partitions(e, max_parts=width):
        if lies_on_or_below(hodge_polygon(part, width), newt):
            out.append(tuple(sorted(part)))
    return sorted(out)


def admissible_groups(W: WeilPoly) -> list[AbGroup]:
    """Every group of order N allowed by the polygon comparison at each prime."""
    _ensure_squarefree(W)
    fac = prime_exponents(W.N)
    per_prime = [[(ell, part) for part in admissible_partitions(W, ell)] for ell, _ in fac]
    out = set()
    for combo in itertools.product(*per_prime):
        out.add(AbGroup.from_prime_partitions({ell: list(part) for ell, part in combo}))
    return sorted(out, key=lambda G: (G.rank, G.invariants))


# cyclicity -----------------------------------------------------------------

def _cyclic_conductor(C: IsogenyClass) -> bool:
    R = C.R
    return C.one_minus_pi_ideal(R).sum(C.conductor) == Lattice(R.K, R.den, R.cols)


def _cyclic_newton(W: WeilPoly) -> bool:
    # not cyclic iff some ell with ell^2 | N admits the group Z/ell x Z/ell^(e-1)
    width = 2 * W.g
    for ell, e in prime_exponents(W.N):
        if e >= 2:
            if lies_on_or_below(hodge_polygon((1, e - 1), width), newton_polygon(W.h, ell)):
                return False
    return True


def _cyclic_enumeration(W: WeilPoly) -> bool:
    return all(G.is_cyclic() for G in admissible_groups(W))


def is_cyclic_class(W: WeilPoly, method: str = "newton", cls: IsogenyClass | None = None) -> bool:
    _ensure_squarefree(W)
    if W.N == 1:
        return True
    if method == "conductor":
        return _cyclic_conductor(cls or IsogenyClass(W))
    if method == "newton":
        return _cyclic_newton(W)
    if method == "enumeration":
        return _cyclic_enumeration(W)
    raise ValueError(f"unknown method {method!r}")


# richness ------------------------------------------------------------------

def _rich_formula(W: WeilPoly) -> bool:
    fac = prime_exponents(W.N)
    for i in range(1, 2 * W.g + 1):
        t = Fraction(polys.evaluate(polys.deriv(W.h, i), 1), factorial(i))
        for ell, e in fac:
            t *= Fraction(ell) ** (i - e)
        if t.denominator != 1:
            return False
    return True


def _rich_integrality(W: WeilPoly, cls: IsogenyClass | None = None) -> bool:
    K = W.algebra
    pi = K.x
    d = radical(W.N)
    elem = (1 - pi).inv() * d
    cp = polys.trim(mx.charpoly(elem.matrix()))
    # the closed formula must agree with the explicit element
    if cp != charpoly_scaled_inverse(pi, d):
        raise OracleDisagreement("closed-form characteristic polynomial disagrees")
    return polys.is_integral(cp)


def _rich_enumeration(W: WeilPoly) -> bool:
    width = 2 * W.g
    for ell, e in prime_exponents(W.N):
        if e > width:
            return False
        # the highest Hodge polygon is (1,...,1); all others lie below it
        if len(admissible_partitions(W, ell)) != sum(1 for _ in partitions(e)):
            return False
    return True


def is_rich_class(W: WeilPoly, method: str = "formula", cls: IsogenyClass | None = None) -> bool:
    _ensure_squarefree(W)
    if W.N == 1:
        return True
    if method == "formula":
        return _rich_formula(W)
    if method == "integrality":
        return _rich_integrality(W, cls)
    if method == "enumeration":
        return _rich_enumeration(W)
    raise ValueError(f"unknown method {method!r}")


def cross_checked(W: WeilPoly, cls: IsogenyClass | None = None):
    """(cyclic, rich, details) with every method run; raises OracleDisagreement."""
    cyc = {m: is_cyclic_class(W, m, cls) for m in CYCLIC_METHODS}
    rich = {m: is_rich_class(W, m, cls) for m in RICH_METHODS}
    if len(set(cyc.values())) != 1:
        raise OracleDisagreement(f"cyclicity methods disagree for {W}: {cyc}")
    if len(set(rich.values())) != 1:
        raise OracleDisagreement(f"richness methods disagree for {W}: {rich}")
    return cyc["newton"], rich["formula"], {"cyclic": cyc, "rich": rich}


def annihilated_by(W: WeilPoly, S: Order, d: int) -> bool:
    """True iff d / (1 - pi) lies in S."""
    K = W.algebra
    elem = (1 - K.x).inv() * d
    return S.contains(elem)


def two_generator_witness(W: WeilPoly, ell: int, s1: int, s2: int) -> bool:
    """Is Z/ell^s1 x Z/ell^s2 admissible at ell?"""
    if not 1 <= s1 <= s2:
        raise ValueError("need 1 <= s1 <= s2")
    return lies_on_or_below(hodge_polygon((s1, s2), 2 * W.g), newton_polygon(W.h, ell))


def table_category(cyclic: bool, rich: bool) -> str:
    if rich and cyclic:
        return "both"
    if rich:
        return "only_rich"
    if cyclic:
        return "only_cyclic"
    return "neither"


# elliptic curves -------------------------------------------------------------

def elliptic_trace_allowed(t: int, q: int) -> bool:
    p, a = prime_power(q)
    if t * t >= 4 * q:
        return False
    if gcd(t, p) == 1:
        return True
    if t == 0:
        return a % 2 == 1 or p % 4 != 1
    if t * t == q:
        return a % 2 == 0 and p % 3 != 1
    if t * t == 2 * q:
        return p == 2 and a % 2 == 1
    if t * t == 3 * q:
        return p == 3 and a % 2 == 1
    return False


def enumerate_elliptic_classes(q: int, bound: int | None = None) -> list[WeilPoly]:
    """Squarefree g = 1 isogeny classes over F_q, as x^2 - t x + q."""
    if bound is not None and q > bound:
        raise ValueError(f"q = {q} exceeds the configured bound {bound}")
    prime_power(q)
    out = []
    t = 0
    while t * t < 4 * q:
        t += 1
    for tr in range(-t, t + 1):
        if elliptic_trace_allowed(tr, q):
            out.append(validate_weil((q, -tr, 1), q))
    return out


def prime_powers_up_to(n: int) -> list[int]:
    out = []
    for q in range(2, n + 1):
        try:
            prime_power(q)
        except NotPrimePower:
            continue
        out.append(q)
    return out


def rich_by_factors(factors) -> bool:
    """Richness of a product class from its (squarefree, coprime) factors."""
    return all(is_rich_class(F, "formula") for F in factors)


def product_weil(Ws) -> WeilPoly:
    h = (1,)
    q = Ws[0].q
    for W in Ws:
        h = polys.mul(h, W.h)
    return validate_weil(h, q)

