"""Arithmetic in K = Q[x]/(h) for a monic squarefree integer polynomial h."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import factorial, lcm

from . import matrices as mx
from . import polys
from .errors import NotQSymmetric, NotSquarefree, ValidationError, ZeroDivisor


def _frac(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    return c


class EtaleAlgebra:
    """Q[x]/(h), always handled as one ring (h is never factored)."""

    def __init__(self, h, q: int | None = None):
        h = polys.trim(h)
        if len(h) < 2:
            raise ValidationError("h must have degree >= 1")
        if h[-1] != 1 or not all(isinstance(c, int) for c in h):
            raise ValidationError("h must be monic with integer coefficients")
        if not polys.is_squarefree(h):
            raise NotSquarefree(f"h = {polys.to_str(h)} is not squarefree")
        self.h = h
        self.n = len(h) - 1
        self.q = q
        n = self.n
        # reduction table: x^k for 0 <= k < 2n-1, as integer coordinate vectors
        red = []
        for k in range(2 * n - 1):
            if k < n:
                v = [0] * n
                v[k] = 1
            else:
                prev = red[k - 1]
                top = prev[-1]
                v = [0] + prev[:-1]
                for i in range(n):
                    v[i] -= top * h[i]
            red.append(v)
        self._red = red

    dim = property(lambda self: self.n)

    def __repr__(self):
        return f"EtaleAlgebra({polys.to_str(self.h)})"

    def __eq__(self, other):
        return isinstance(other, EtaleAlgebra) and self.h == other.h and self.q == other.q

    def __hash__(self):
        return hash((self.h, self.q))

    # raw coordinate arithmetic (lists of int/Fraction) --------------------

    def mul_coords(self, a, b):
        n = self.n
        conv = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:n]
        red = self._red
        for k in range(n, 2 * n - 1):
            c = conv[k]
            if c:
                r = red[k]
                for i in range(n):
                    out[i] += c * r[i]
        return out

    def mult_matrix(self, a):
        """Matrix of y -> a*y in the power basis (columns are a*x^j)."""
        n = self.n
        cols = [self.mul_coords(a, self._red[j]) for j in range(n)]
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    @cached_property
    def companion(self):
        return self.mult_matrix([0, 1] + [0] * (self.n - 2) if self.n > 1 else [-self.h[0]])

    @cached_property
    def power_sums(self):
        """Tr(x^k) for 0 <= k < 2n, via Newton's identities."""
        n, h = self.n, self.h
        # e-coefficients: h = x^n + c_{n-1} x^{n-1} + ... ; p_k + c_{n-1} p_{k-1} + ... + k c_{n-k} = 0
        c = {n - i: h[i] for i in range(n)}  # c[j] = coefficient of x^{n-j}
        p = [n]
        for k in range(1, 2 * n):
            s = 0
            for j in range(1, min(k, n) + 1):
                if j < k:
                    s += c[j] * p[k - j]
                else:
                    s += k * c[j]
            p.append(-s)
        return p

    def trace_coords(self, a):
        ps = self.power_sums
        return sum(x * ps[i] for i, x in enumerate(a))

    @cached_property
    def trace_matrix(self):
        ps = self.power_sums
        return [[ps[i + j] for j in range(self.n)] for i in range(self.n)]

    @cached_property
    def trace_matrix_inv(self):
        return mx.inverse(self.trace_matrix)

    @cached_property
    def disc(self) -> int:
        return mx.int_det(self.trace_matrix)

    # conjugation -----------------------------------------------------------

    def is_q_symmetric(self, q: int) -> bool:
        """Whether x -> q/x permutes the roots, i.e. x^n h(q/x) = h(0) h(x)."""
        h, n = self.h, self.n
        return h[0] != 0 and all(q ** (n - i) * h[n - i] == h[0] * h[i] for i in range(n + 1))

    @cached_property
    def conj_matrix(self):
        """Matrix of the involution x -> q/x (columns are images of x^j)."""
        q = self.q
        if q is None:
            raise NotQSymmetric("no q attached to the algebra")
        if self.h[0] == 0:
            raise ZeroDivisor("x is not a unit")
        if not self.is_q_symmetric(q):
            raise NotQSymmetric(f"h = {polys.to_str(self.h)} is not {q}-symmetric")
        xinv = self.x.inv().coords
        qbar = [q * c for c in xinv]
        cols = [[1] + [0] * (self.n - 1)]
        for _ in range(1, self.n):
            cols.append(self.mul_coords(cols[-1], qbar))
        return [[_frac(cols[j][i]) for j in range(self.n)] for i in range(self.n)]

    # element constructors --------------------------------------------------

    def elem(self, coords) -> "AlgElem":
        coords = list(coords)
        if len(coords) != self.n:
            raise ValueError("coordinate length mismatch")
        return AlgElem(self, coords)

    def scalar(self, c) -> "AlgElem":
        return AlgElem(self, [c] + [0] * (self.n - 1))

    def one(self):
        return self.scalar(1)

    def zero(self):
        return self.scalar(0)

    @cached_property
    def x(self):
        if self.n == 1:
            return self.scalar(-self.h[0])
        return AlgElem(self, [0, 1] + [0] * (self.n - 2))

    pi = property(lambda self: self.x)

    @property
    def pibar(self):
        return self.x.conjugate()

    def from_poly(self, p):
        """Class of the polynomial p (any degree) in K."""
        p = polys.rem(p, self.h) if len(p) > self.n else polys.trim(p)
        return AlgElem(self, list(p) + [0] * (self.n - len(p)))


def make_algebra(h, q: int | None = None) -> EtaleAlgebra:
    return EtaleAlgebra(h, q)


class AlgElem:
    __slots__ = ("K", "coords")

    def __init__(self, K: EtaleAlgebra, coords):
        self.K = K
        self.coords = tuple(_frac(Fraction(c)) if isinstance(c, Fraction) else c for c in coords)

    def _wrap(self, other):
        if isinstance(other, AlgElem):
            if other.K is not self.K and other.K != self.K:
                raise ValueError("elements of different algebras")
            return other
        return self.K.scalar(other)

    def __add__(self, other):
        o = self._wrap(other)
        return AlgElem(self.K, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return AlgElem(self.K, [-a for a in self.coords])

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if not isinstance(other, AlgElem):
            return AlgElem(self.K, [a * other for a in self.coords])
        return AlgElem(self.K, self.K.mul_coords(self.coords, self._wrap(other).coords))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        out, base = self.K.one(), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, AlgElem):
            return self * other.inv()
        return AlgElem(self.K, [Fraction(a) / other for a in self.coords])

    def __rtruediv__(self, other):
        return self._wrap(other) * self.inv()

    def __eq__(self, other):
        if not isinstance(other, AlgElem):
            other = self.K.scalar(other)
        return self.K == other.K and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"AlgElem({polys.to_str(polys.trim(self.coords), 'pi')})"

    def is_zero(self) -> bool:
        return not any(self.coords)

    def matrix(self):
        return self.K.mult_matrix(self.coords)

    def inv(self) -> "AlgElem":
        e1 = [1] + [0] * (self.K.n - 1)
        try:
            v = mx.solve(self.matrix(), e1)
        except ZeroDivisionError:
            raise ZeroDivisor(f"{self!r} is a zero divisor") from None
        return AlgElem(self.K, v)

    def trace(self):
        return _frac(Fraction(self.K.trace_coords(self.coords)))

    def norm(self):
        return _frac(mx.det(self.matrix()))

    def charpoly(self):
        """det(X - M_a), lowest degree first, via power traces and Newton's identities."""
        n = self.K.n
        p = [None]
        pw = self
        for k in range(1, n + 1):
            p.append(Fraction(pw.trace()))
            if k < n:
                pw = pw * self
        # e_k via Newton: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
        e = [Fraction(1)]
        for k in range(1, n + 1):
            s = sum((-1) ** (i - 1) * e[k - i] * p[i] for i in range(1, k + 1))
            e.append(s / k)
        coeffs = [0] * (n + 1)
        for k in range(n + 1):
            coeffs[n - k] = (-1) ** k * e[k]
        return polys.trim(coeffs)

    def is_integral(self) -> bool:
        return polys.is_integral(self.charpoly())

    def conjugate(self) -> "AlgElem":
        C = self.K.conj_matrix
        return AlgElem(self.K, mx.matvec(C, self.coords))

    def as_fraction_vector(self):
        return [Fraction(c) for c in self.coords]


def transformed_charpoly(a: AlgElem, b, c):
    """Characteristic polynomial of b*a + c from that of a: b^r h_a((x - c)/b)."""
    b, c = Fraction(b), Fraction(c)
    if b == 0:
        raise ValueError("b must be nonzero")
    h = a.charpoly()
    r = len(h) - 1
    return polys.scale(polys.compose_affine(h, 1 / b, -c / b), b**r)


def reciprocal_charpoly(a: AlgElem):
    """Characteristic polynomial of 1/a: the reverse of h_a divided by h_a(0)."""
    h = a.charpoly()
    if h[0] == 0:
        raise ZeroDivisor(f"{a!r} is not a unit")
    return polys.scale(polys.reverse(h), Fraction(1, 1) / h[0])


def charpoly_scaled_inverse(a: AlgElem, d):
    """Characteristic polynomial of d/(1 - a) from the Taylor coefficients of h_a at 1.

    The coefficient of x^i is (-1)^(r+i) d^(r-i) h_a^(r-i)(1) / ((r-i)! h_a(1)).
    """
    d = Fraction(d)
    if d == 0:
        raise ValueError("d must be nonzero")
    h = a.charpoly()
    r = len(h) - 1
    h1 = polys.evaluate(h, 1)
    if h1 == 0:
        raise ZeroDivisor("1 - a is not a unit")
    out = []
    for i in range(r + 1):
        k = r - i
        num = (-1) ** (r + i) * d**k * Fraction(polys.evaluate(polys.deriv(h, k), 1))
        out.append(num / (factorial(k) * h1))
    return polys.trim(out)


def common_denominator(vec) -> int:
    d = 1
    for c in vec:
        d = lcm(d, Fraction(c).denominator)
    return d
