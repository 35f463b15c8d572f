"""Full-rank Z-lattices, fractional ideals and orders in an EtaleAlgebra.

A lattice is stored as (den, cols): the Z-span of cols[j] / den where cols is
the column-style HNF basis (see matrices) in power-basis coordinates and den
is the smallest positive integer making the basis integral.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

from . import matrices as mx
from .algebra import AlgElem, EtaleAlgebra
from .errors import DegenerateTrace, NotContained, NotFullRank, ValidationError


def _canonical(K: EtaleAlgebra, int_vecs, den: int):
    n = K.n
    cols = mx.lattice_hnf(int_vecs, n)
    g = den
    for c in cols:
        for x in c:
            g = gcd(g, x)
            if g == 1:
                break
    if g > 1:
        cols = [[x // g for x in c] for c in cols]
        den //= g
    return den, tuple(tuple(c) for c in cols)


def _int_vectors(vecs):
    den = 1
    for v in vecs:
        for c in v:
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
    if den == 1:
        return [[int(c) for c in v] for v in vecs], 1
    return [[int(c * den) for c in v] for v in vecs], den


class Lattice:
    __slots__ = ("K", "den", "cols", "__dict__")

    def __init__(self, K: EtaleAlgebra, den: int, cols):
        self.K = K
        self.den = den
        self.cols = cols

    # construction ----------------------------------------------------------

    @classmethod
    def from_vectors(cls, K, vecs):
        """Z-span of rational coordinate vectors (power basis)."""
        iv, den = _int_vectors(vecs)
        d, cols = _canonical(K, iv, den)
        return cls(K, d, cols)

    @classmethod
    def from_int_vectors(cls, K, ivecs, den: int = 1):
        d, cols = _canonical(K, ivecs, den)
        return cls(K, d, cols)

    @classmethod
    def from_elements(cls, elems):
        elems = list(elems)
        if not elems:
            raise NotFullRank("no generators")
        K = elems[0].K
        return cls.from_vectors(K, [e.coords for e in elems])

    @classmethod
    def equation_order(cls, K):
        n = K.n
        return cls(K, 1, tuple(tuple(int(i == j) for i in range(n)) for j in range(n)))

    # basic data ------------------------------------------------------------

    @property
    def n(self):
        return self.K.n

    def basis(self) -> list[AlgElem]:
        d = self.den
        return [AlgElem(self.K, [Fraction(x, d) for x in c]) for c in self.cols]

    def basis_vectors(self):
        d = self.den
        return [[Fraction(x, d) for x in c] for c in self.cols]

    @cached_property
    def matrix(self):
        """Integer basis matrix B (columns); the lattice is B Z^n / den."""
        return mx.from_columns([list(c) for c in self.cols])

    @cached_property
    def det_int(self) -> int:
        out = 1
        for j, c in enumerate(self.cols):
            out *= c[j]
        return out

    @cached_property
    def covolume(self) -> Fraction:
        """Index relative to the equation order Z[x] (may be fractional)."""
        return Fraction(self.det_int, self.den**self.n)

    def __eq__(self, other):
        return (
            isinstance(other, Lattice)
            and self.K == other.K
            and self.den == other.den
            and self.cols == other.cols
        )

    def __hash__(self):
        return hash((self.den, self.cols))

    def key(self) -> str:
        """Short stable hash of the canonical form."""
        s = f"{self.den}:{self.cols}".encode()
        return hashlib.sha256(s).hexdigest()[:16]

    def __repr__(self):
        return f"{type(self).__name__}(den={self.den}, cols={[list(c) for c in self.cols]})"

    # membership ------------------------------------------------------------

    def coordinates(self, v):
        """Coordinates c (Fractions) with v = sum c_j * basis_j."""
        n = self.n
        d = self.den
        w = [Fraction(x) * d for x in v]
        c = [Fraction(0)] * n
        cols = self.cols
        for i in range(n - 1, -1, -1):
            s = w[i]
            for j in range(i + 1, n):
                if c[j]:
                    s -= cols[j][i] * c[j]
            c[i] = s / cols[i][i]
        return c

    def int_coordinates(self, v):
        c = self.coordinates(v)
        if any(x.denominator != 1 for x in c):
            raise NotContained("vector not in lattice")
        return [int(x) for x in c]

    def contains(self, a) -> bool:
        v = a.coords if isinstance(a, AlgElem) else a
        return all(x.denominator == 1 for x in self.coordinates(v))

    __contains__ = contains

    def issubset(self, other: "Lattice") -> bool:
        if self.covolume < other.covolume:
            return False
        return all(other.contains(v) for v in self.basis_vectors())

    def __le__(self, other):
        return self.issubset(other)

    def index_in(self, big: "Lattice") -> int:
        """|big / self|; raises NotContained unless self is a sublattice."""
        if not self.issubset(big):
            raise NotContained("lattice is not contained in the larger one")
        r = self.covolume / big.covolume
        return int(r)

    # operations ------------------------------------------------------------

    def sum(self, other):
        d = lcm(self.den, other.den)
        a, b = d // self.den, d // other.den
        vecs = [[a * x for x in c] for c in self.cols] + [[b * x for x in c] for c in other.cols]
        return Lattice.from_int_vectors(self.K, vecs, d)

    __add__ = sum

    def product(self, other):
        K = self.K
        vecs = []
        for u in self.cols:
            Mu = K.mult_matrix(u)
            for v in other.cols:
                vecs.append(mx.matvec(Mu, v))
        return Lattice.from_int_vectors(K, vecs, self.den * other.den)

    __mul__ = product

    def power(self, e: int):
        out = self
        for _ in range(e - 1):
            out = out.product(self)
        return out

    def scale(self, c):
        """c * L for a nonzero rational c or algebra element c."""
        if isinstance(c, AlgElem):
            M = c.matrix()
            return Lattice.from_vectors(self.K, [mx.matvec(M, v) for v in self.basis_vectors()])
        c = Fraction(c)
        if c == 0:
            raise NotFullRank("scaling by zero")
        return Lattice.from_int_vectors(
            self.K, [[x * c.numerator for x in col] for col in self.cols], self.den * c.denominator
        )

    def trace_dual(self):
        """L^t = T^{-1} (B / den)^{-T} Z^n with T the trace form."""
        K = self.K
        if K.disc == 0:
            raise DegenerateTrace("trace form is singular")
        # (B^T T) x in Z^n * (1/den)^{-1}  ->  x = den * (B^T T)^{-1} e_j
        BtT = mx.matmul(mx.transpose(self.matrix), K.trace_matrix)
        inv = mx.inverse(BtT)
        vecs = [[self.den * inv[i][j] for i in range(self.n)] for j in range(self.n)]
        return Lattice.from_vectors(K, vecs)

    def colon(self, other):
        """(self : other) = {x : x * other in self} = (self^t other)^t."""
        return self.trace_dual().product(other).trace_dual()

    def intersect(self, other):
        return self.trace_dual().sum(other.trace_dual()).trace_dual()

    def conjugate(self):
        C = self.K.conj_matrix
        return Lattice.from_vectors(self.K, [mx.matvec(C, v) for v in self.basis_vectors()])

    def multiplicator_ring(self) -> "Order":
        return Order.from_lattice(self.colon(self), check=False)

    def is_integral_over(self, S: "Lattice") -> bool:
        return self.issubset(S)


def lattice_from_generators(elems) -> Lattice:
    return Lattice.from_elements(elems)


def colon_by_membership(L1: Lattice, L2: Lattice) -> Lattice:
    """(L1 : L2) by solving the membership conditions directly.

    x in (L1:L2) iff the L1-coordinates of x*b are integral for each basis
    vector b of L2. The map x -> (L1-coords of x*b_j)_j is linear with a
    rational matrix F; the colon is F^{-1}(Z^{n^2}), computed via an HNF
    of the integer matrix D*F^T.
    """
    K = L1.K
    n = K.n
    B1 = mx.frac_matrix(L1.matrix)
    B1inv = [[x * L1.den for x in row] for row in mx.inverse(B1)]
    rows = []  # n*n rows, each a linear functional in x-coordinates
    xk = []
    for k in range(n):
        e = [0] * n
        e[k] = 1
        xk.append(e)
    for b in L2.basis_vectors():
        # columns: image of x^k times b, in L1 coordinates
        imgs = [mx.matvec(B1inv, K.mul_coords(xk[k], b)) for k in range(n)]
        for i in range(n):
            rows.append([imgs[k][i] for k in range(n)])
    F, D = mx.scale_to_int(rows)  # F/D is the rational functional matrix
    # lattice {x : (F/D) x in Z^m} = D * dual of row span of F
    H = mx.hnf(mx.transpose(F))  # n x m, columns span the row space of F
    Hc = mx.columns(H)[-n:]
    G = mx.transpose(mx.from_columns(Hc))  # rows = basis of the row lattice
    Ginv = mx.inverse(G)
    vecs = [[D * Ginv[i][j] for i in range(n)] for j in range(n)]
    return Lattice.from_vectors(K, vecs)


class Order(Lattice):
    """A lattice containing 1 and closed under multiplication."""

    @classmethod
    def from_lattice(cls, L: Lattice, check: bool = True) -> "Order":
        S = cls(L.K, L.den, L.cols)
        if check and not S.is_ring():
            raise ValidationError("lattice is not an order")
        return S

    def is_ring(self) -> bool:
        if not self.contains(self.K.one()):
            return False
        return self.product(self) == Lattice(self.K, self.den, self.cols)

    @classmethod
    def generated_by(cls, elems) -> "Order":
        """Smallest order containing the given integral elements."""
        elems = list(elems)
        K = elems[0].K
        L = Lattice.from_elements([K.one()] + elems)
        while True:
            L2 = L.product(L).sum(L)
            if L2 == L:
                return cls(K, L.den, L.cols)
            L = L2

    @cached_property
    def structure_constants(self):
        """c[i][j] = integer coordinates of w_i * w_j in the basis w."""
        K, n = self.K, self.n
        bv = self.basis_vectors()
        out = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                c = self.int_coordinates(K.mul_coords(bv[i], bv[j]))
                out[i][j] = out[j][i] = c
        return out

    @cached_property
    def one_coords(self):
        return self.int_coordinates(self.K.one().coords)

    @cached_property
    def discriminant(self) -> int:
        cov = self.covolume
        v = self.K.disc * cov * cov
        return int(v)

    @cached_property
    def dual(self) -> Lattice:
        return self.trace_dual()

    def ideal_from_generators(self, elems) -> Lattice:
        """The S-ideal generated by the given elements."""
        vecs = [(b * e).coords for b in self.basis() for e in elems]
        return Lattice.from_vectors(self.K, vecs)

    def principal(self, a: AlgElem) -> Lattice:
        return self.scale(a)


def conductor(S: Order, Sp: Order) -> Lattice:
    if not S.issubset(Sp):
        raise NotContained("S is not contained in S'")
    return S.colon(Sp)


def equals_as_lattices(a: Lattice, b: Lattice) -> bool:
    return a.den == b.den and a.cols == b.cols
