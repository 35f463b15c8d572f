"""Maximal order by Round 2, and the Frobenius order Z[pi, q/pi]."""

from __future__ import annotations

from .arith import factor_integer
from .errors import PartialFactorization
from .lattice import Lattice, Order
from .primes import FpAlgebra


def p_radical(S: Order, p: int) -> Lattice:
    """pS + lift of the nilradical of S/pS."""
    A = FpAlgebra(S, p)
    J = A.radical()
    n = S.n
    vecs = [[sum(c[j] * S.cols[j][i] for j in range(n)) for i in range(n)] for c in J]
    vecs += [[p * x for x in col] for col in S.cols]
    return Lattice.from_int_vectors(S.K, vecs, S.den)


def p_maximal_closure(S: Order, p: int) -> Order:
    while True:
        I = p_radical(S, p)
        T = Order.from_lattice(I.colon(I), check=False)
        if T == S:
            return S
        S = T


def _candidate_primes(disc: int) -> list[int]:
    fac = factor_integer(disc)
    bad = [q for q, e in fac if e >= 2]
    return bad


def maximal_order(S: Order) -> Order:
    """Integral closure of Z in K, starting from the order S."""
    d = S.discriminant
    if d == 0:
        raise PartialFactorization("zero discriminant")
    for p in _candidate_primes(d):
        S = p_maximal_closure(S, p)
    return S


def equation_order(K) -> Order:
    L = Lattice.equation_order(K)
    return Order(K, L.den, L.cols)


def frobenius_order(K) -> Order:
    """R = Z[pi, pibar], spanned by pi^i pibar^j with 0 <= i, j < dim."""
    n = K.n
    pi = K.x
    pibar = pi.conjugate()
    pows_a = [K.one()]
    pows_b = [K.one()]
    for _ in range(1, n):
        pows_a.append(pows_a[-1] * pi)
        pows_b.append(pows_b[-1] * pibar)
    gens = [a * b for a in pows_a for b in pows_b]
    L = Lattice.from_elements(gens)
    while True:
        L2 = L.product(L)
        if L2 == L:
            return Order(K, L.den, L.cols)
        L = L2.sum(L)
