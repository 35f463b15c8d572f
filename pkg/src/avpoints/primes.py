"""Maximal ideals of an order above a rational prime, via the F_p-algebra S/pS."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import log

from . import matrices as mx
from .arith import factor_integer, is_prime
from .errors import NotContained
from .lattice import Lattice, Order

BRUTE_FORCE_ROOTS = 2000


class FpAlgebra:
    """S/pS with the multiplication coming from the structure constants of S."""

    def __init__(self, S: Order, p: int):
        self.S, self.p, self.n = S, p, S.n
        sc = S.structure_constants
        self.c = [[[x % p for x in sc[i][j]] for j in range(self.n)] for i in range(self.n)]
        self.one = [x % p for x in S.one_coords]

    def mul(self, u, v):
        p, n, c = self.p, self.n, self.c
        out = [0] * n
        for i in range(n):
            if u[i]:
                ci = c[i]
                for j in range(n):
                    if v[j]:
                        f = u[i] * v[j]
                        cij = ci[j]
                        for k in range(n):
                            out[k] += f * cij[k]
        return [x % p for x in out]

    def pow(self, u, e: int):
        out, base = list(self.one), u
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def add(self, u, v):
        return [(a + b) % self.p for a, b in zip(u, v)]

    def scal(self, c, u):
        return [c * a % self.p for a in u]

    def basis_vec(self, i):
        v = [0] * self.n
        v[i] = 1
        return v

    def linear_map_matrix(self, f):
        """Matrix (rows) of an F_p-linear map given on basis vectors."""
        imgs = [f(self.basis_vec(i)) for i in range(self.n)]
        return [[imgs[j][i] for j in range(self.n)] for i in range(self.n)]

    def radical(self):
        p, n = self.p, self.n
        k = 1
        while p**k < n:
            k += 1
        e = p**k
        M = self.linear_map_matrix(lambda u: self.pow(u, e))
        return mx.kernel_mod(M, p)

    def berlekamp(self):
        """Basis of {u : u^p = u}; its dimension is the number of maximal ideals."""
        p = self.p
        M = self.linear_map_matrix(lambda u: [(a - b) % p for a, b in zip(self.pow(u, p), u)])
        return mx.kernel_mod(M, p)

    def min_poly(self, u):
        """Minimal polynomial (monic, lowest degree first) of u over F_p."""
        p = self.p
        powers = [list(self.one)]
        while True:
            nxt = self.mul(powers[-1], u)
            # solve nxt = sum a_i powers[i]
            M = [[powers[j][i] for j in range(len(powers))] + [nxt[i]] for i in range(self.n)]
            R, piv = mx.rref_mod(M, p)
            m = len(powers)
            if m not in piv:
                coeffs = [0] * m
                for r, c in enumerate(piv):
                    coeffs[c] = R[r][m]
                return [(-a) % p for a in coeffs] + [1]
            powers.append(nxt)


def _poly_mod_roots(f, p: int, rng: random.Random):
    """Roots in F_p of a polynomial that splits into distinct linear factors."""
    deg = len(f) - 1
    if deg == 0:
        return []
    if deg == 1:
        return [(-f[0] * pow(f[1], -1, p)) % p]
    if p <= BRUTE_FORCE_ROOTS:
        return [r for r in range(p) if _peval(f, r, p) == 0]
    if p == 2:
        return [r for r in range(2) if _peval(f, r, p) == 0]
    # Cantor-Zassenhaus equal-degree splitting
    while True:
        a = rng.randrange(p)
        g = _ppow_mod([a, 1], (p - 1) // 2, f, p)
        g = _psub(g, [1], p)
        d = _pgcd(f, g, p)
        if 0 < len(d) - 1 < deg:
            q = _pdiv(f, d, p)[0]
            return sorted(_poly_mod_roots(d, p, rng) + _poly_mod_roots(q, p, rng))


def _peval(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def _ptrim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def _psub(a, b, p):
    n = max(len(a), len(b))
    return _ptrim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pdiv(a, b, p):
    a = _ptrim(a)
    b = _ptrim(b)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] = (a[k + i] - c * y) % p
        a = _ptrim(a)
    return _ptrim(q), a


def _pgcd(a, b, p):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        a, b = b, _pdiv(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _ppow_mod(base, e, mod, p):
    out = [1]
    base = _pdiv(base, mod, p)[1]
    while e:
        if e & 1:
            out = _pdiv(_pmul(out, base, p), mod, p)[1]
        base = _pdiv(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return out


@dataclass(eq=False)
class OrderPrime:
    """A maximal ideal of an order S lying above the rational prime p."""

    S: Order
    p: int
    ideal: Lattice
    f: int
    idempotent: list = field(default=None, repr=False)

    @property
    def norm(self) -> int:
        return self.p**self.f

    def __eq__(self, other):
        return isinstance(other, OrderPrime) and self.ideal == other.ideal

    def __hash__(self):
        return hash(self.ideal)

    def __repr__(self):
        return f"OrderPrime(p={self.p}, f={self.f}, key={self.ideal.key()})"

    def contains(self, L: Lattice) -> bool:
        """True iff the lattice L is contained in this prime."""
        return L.issubset(self.ideal)

    def conjugate(self) -> "OrderPrime":
        Sbar = Order.from_lattice(self.S.conjugate(), check=False)
        return OrderPrime(Sbar, self.p, self.ideal.conjugate(), self.f)

    def is_conjugation_stable(self) -> bool:
        return self.ideal.conjugate() == self.ideal


_PRIME_CACHE: dict = {}


def primes_above(S: Order, p: int, *, use_cache: bool = True) -> list[OrderPrime]:
    """All maximal ideals of S containing p, sorted by (f, canonical form)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    ck = (S.K.h, S.K.q, S.den, S.cols, p)
    if use_cache and ck in _PRIME_CACHE:
        return _PRIME_CACHE[ck]
    A = FpAlgebra(S, p)
    n = S.n
    J = A.radical()
    Bk = A.berlekamp()
    rng = random.Random(p * 1000003 + n)
    idems = [list(A.one)]
    for b in Bk:
        if len(idems) == len(Bk):
            break
        mu = A.min_poly(b)
        roots = _poly_mod_roots(mu, p, rng)
        # Lagrange idempotents of b
        fs = []
        for r in roots:
            e = list(A.one)
            for s in roots:
                if s != r:
                    lin = A.add(b, A.scal(-s % p, A.one))
                    e = A.scal(pow(r - s, -1, p), A.mul(e, lin))
            fs.append(e)
        new = []
        for e in idems:
            for fr in fs:
                prod = A.mul(e, fr)
                if any(prod):
                    new.append(prod)
        idems = new
    out = []
    for e in idems:
        one_minus = A.add(A.one, A.scal(p - 1, e))
        gens = [A.mul(one_minus, A.basis_vec(i)) for i in range(n)] + list(J)
        span = mx.span_mod(gens, p)
        f = n - len(span)
        out.append(OrderPrime(S, p, _lift(S, span, p), f, e))
    out.sort(key=lambda P: (P.f, P.ideal.den, P.ideal.cols))
    if use_cache:
        _PRIME_CACHE[ck] = out
    return out


def _lift(S: Order, span, p: int) -> Lattice:
    """pS + (lift of F_p-vectors in S-coordinates)."""
    n = S.n
    vecs = []
    for c in span:
        vecs.append([sum(c[j] * S.cols[j][i] for j in range(n)) for i in range(n)])
    for col in S.cols:
        vecs.append([p * x for x in col])
    return Lattice.from_int_vectors(S.K, vecs, S.den)


def primes_containing(S: Order, I: Lattice) -> list[OrderPrime]:
    """Primes of S containing the integral ideal I."""
    if not I.issubset(S):
        raise NotContained("I is not an integral ideal of S")
    idx = I.index_in(S)
    out = []
    if idx == 1:
        return out
    for p, _ in factor_integer(idx):
        out.extend(P for P in primes_above(S, p) if I.issubset(P.ideal))
    return out


def cm_type_at(S: Order, P: OrderPrime) -> int:
    """dim over S/P of S^t / P S^t."""
    St = S.dual
    idx = St.product(P.ideal).index_in(St)
    t = round(log(idx) / log(P.norm))
    if P.norm**t != idx:
        raise ArithmeticError("index is not a power of the residue field size")
    return t


def gorenstein_at(S: Order, P: OrderPrime) -> bool:
    return cm_type_at(S, P) == 1


def is_gorenstein(S: Order) -> bool:
    """Gorenstein at every prime: S^t is invertible, i.e. S^t (S : S^t) = S."""
    St = S.dual
    return St.product(S.colon(St)) == Lattice(S.K, S.den, S.cols)


def singular_primes(S: Order, O: Order) -> list[OrderPrime]:
    """Primes of S containing the conductor (S : O)."""
    return primes_containing(S, S.colon(O))


def is_coprime(S: Order, I: Lattice, J: Lattice) -> bool:
    if not (I.issubset(S) and J.issubset(S)):
        raise NotContained("ideals must be integral")
    return I.sum(J) == Lattice(S.K, S.den, S.cols)


def locally_equal(S: Order, Sp: Order, P: OrderPrime) -> bool:
    """S_P == Sp_P, decided by whether the conductor (S : Sp) is inside P."""
    if not S.issubset(Sp):
        raise NotContained("S is not contained in S'")
    return not S.colon(Sp).issubset(P.ideal)


def is_locally_principal(I: Lattice, P: OrderPrime) -> bool:
    S = P.S
    return not I.product(S.colon(I)).issubset(P.ideal)
