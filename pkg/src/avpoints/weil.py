"""Weil polynomials: validation, real Weil polynomials, point counts, enumeration."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from math import comb, gcd

from . import polys
from .algebra import EtaleAlgebra
from .arith import QuadIrr, prime_power
from .errors import NotWeil, ValidationError


def real_poly_from_h(h, q: int, g: int):
    """Solve h(x) = x^g P(x + q/x) for the monic real Weil polynomial P.

    Returns None when no such P exists (h is not q-symmetric).
    """
    h = list(h)
    rest = list(h)
    c = [0] * (g + 1)
    for k in range(g, -1, -1):
        ck = rest[g + k]
        c[k] = ck
        if ck:
            # subtract ck * x^g (x + q/x)^k = ck * sum_j C(k,j) q^j x^{g+k-2j}
            for j in range(k + 1):
                rest[g + k - 2 * j] -= ck * comb(k, j) * q**j
    if any(rest):
        return None
    return tuple(c)


def h_from_real_poly(P, q: int):
    """h(x) = x^g P(x + q/x)."""
    g = len(P) - 1
    h = [0] * (2 * g + 1)
    for k, ck in enumerate(P):
        if ck:
            for j in range(k + 1):
                h[g + k - 2 * j] += ck * comb(k, j) * q**j
    return tuple(h)


def roots_in_interval(P, q: int) -> bool:
    """All complex roots of P are real and lie in [-2 sqrt q, 2 sqrt q]."""
    s = polys.squarefree_part(P)
    d = len(s) - 1
    if d <= 0:
        return True
    bound = QuadIrr(0, 2, q)
    return polys.count_real_roots(s, -bound, bound) == d


@dataclass(frozen=True)
class WeilPoly:
    h: tuple
    q: int
    p: int = field(compare=False)
    a: int = field(compare=False)
    g: int = field(compare=False)
    gpoly: tuple = field(compare=False)
    squarefree: bool = field(compare=False)
    ordinary: bool = field(compare=False)
    has_real_roots: bool = field(compare=False)

    @property
    def N(self) -> int:
        return polys.evaluate(self.h, 1)

    @cached_property
    def algebra(self) -> EtaleAlgebra:
        if not self.squarefree:
            raise ValidationError("the algebra is only built for squarefree h")
        return EtaleAlgebra(self.h, self.q)

    def coeffs_desc(self):
        """a_1..a_{2g} with h = x^{2g} + a_1 x^{2g-1} + ... + a_{2g}."""
        return tuple(self.h[2 * self.g - i] for i in range(1, 2 * self.g + 1))

    def label(self) -> str:
        return weil_label(self.h, self.q)

    def point_count(self, n: int = 1) -> int:
        return point_count(self, n)

    def __repr__(self):
        return f"WeilPoly(q={self.q}, h={polys.to_str(self.h)})"


def validate_weil(h, q: int) -> WeilPoly:
    p, a = prime_power(q)
    h = polys.trim(tuple(int(c) for c in h))
    if not h or h[-1] != 1:
        raise NotWeil("h must be monic")
    if (len(h) - 1) % 2 or len(h) < 3:
        raise NotWeil("h must have positive even degree")
    g = (len(h) - 1) // 2
    P = real_poly_from_h(h, q, g)
    if P is None:
        raise NotWeil(f"h is not {q}-symmetric")
    if not roots_in_interval(P, q):
        raise NotWeil("some root of h has absolute value different from sqrt(q)")
    bound = QuadIrr(0, 2, q)
    real = polys.evaluate(P, bound).sign() == 0 or polys.evaluate(P, -bound).sign() == 0
    return WeilPoly(
        h=h,
        q=q,
        p=p,
        a=a,
        g=g,
        gpoly=P,
        squarefree=polys.is_squarefree(h),
        ordinary=gcd(h[g], q) == 1,
        has_real_roots=real,
    )


def point_count(W: WeilPoly, n: int = 1) -> int:
    """#A(F_{q^n}) = det(I - M_pi^n), computed as the norm of 1 - pi^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if W.squarefree:
        K = W.algebra
        return int((1 - K.x**n).norm())
    # non-squarefree: work with the companion matrix of h directly
    from . import matrices as mx

    g2 = 2 * W.g
    C = [[0] * g2 for _ in range(g2)]
    for i in range(1, g2):
        C[i][i - 1] = 1
    for i in range(g2):
        C[i][g2 - 1] = -W.h[i]
    Mn = mx.identity(g2)
    for _ in range(n):
        Mn = mx.matmul(Mn, C)
    return mx.int_det([[int(i == j) - Mn[i][j] for j in range(g2)] for i in range(g2)])


def _base26(n: int) -> str:
    if n == 0:
        return "a"
    s = ""
    while n:
        n, r = divmod(n, 26)
        s = chr(ord("a") + r) + s
    return s


def weil_label(h, q: int) -> str:
    """LMFDB-style label g.q.<a_1>_..._<a_g> from the top coefficients."""
    g = (len(h) - 1) // 2
    parts = []
    for i in range(1, g + 1):
        c = h[2 * g - i]
        parts.append(("a" + _base26(-c)) if c < 0 else _base26(c))
    return f"{g}.{q}." + "_".join(parts)


def parse_label(label: str):
    """Inverse of weil_label: returns (h ascending, q)."""
    try:
        g_s, q_s, body = label.split(".")
        g, q = int(g_s), int(q_s)
    except ValueError as exc:
        raise ValidationError(f"malformed label {label!r}") from exc
    top = []
    for tok in body.split("_"):
        if not tok.isalpha() or not tok.islower():
            raise ValidationError(f"malformed label {label!r}")
        neg = len(tok) > 1 and tok[0] == "a"
        if neg:
            tok = tok[1:]
        v = 0
        for ch in tok:
            v = v * 26 + (ord(ch) - ord("a"))
        top.append(-v if neg else v)
    if len(top) != g:
        raise ValidationError(f"label {label!r} has {len(top)} coefficients, expected {g}")
    h = [0] * (2 * g + 1)
    h[2 * g] = 1
    for i, c in enumerate(top, start=1):
        h[2 * g - i] = c
    for i in range(g + 1, 2 * g + 1):
        # a_i = q^{i-g} a_{2g-i}
        h[2 * g - i] = q ** (i - g) * h[i]
    h[0] = q**g
    return tuple(h), q


def enumerate_real_weil(g: int, q: int):
    """All monic integer P of degree g with every root real in [-2 sqrt q, 2 sqrt q].

    Coefficients are chosen top-down. The (g-k)-th derivative of P involves
    only a_1..a_k and its roots must also lie in the interval (Rolle), so
    each new coefficient is confined by the critical values of the previous
    derivative. Floats only bound the search; every candidate is checked
    exactly with Sturm sequences.
    """
    import numpy as np

    r = 2 * math.sqrt(q)
    out = []

    def profile(coeffs):
        k = len(coeffs)
        P = tuple(reversed([1] + list(coeffs) + [0] * (g - k)))
        return polys.deriv(P, g - k)

    def rec(coeffs):
        k = len(coeffs)
        if k == g:
            out.append(tuple(reversed([1] + coeffs)))
            return
        Q0 = profile(coeffs + [0])
        c = math.factorial(g - k - 1)
        f = np.array(list(reversed(Q0)), dtype=float)
        pts = [-r, r]
        if len(f) > 2:
            for z in np.roots(np.polyder(f)):
                if abs(z.imag) < 1e-7 and -r <= z.real <= r:
                    pts.append(z.real)
        vals = [np.polyval(f, t) for t in pts]
        lo, hi = -max(vals) / c, -min(vals) / c
        for ak in range(math.floor(lo) - 1, math.ceil(hi) + 2):
            nxt = coeffs + [ak]
            if roots_in_interval(profile(nxt), q):
                rec(nxt)

    rec([])
    return out


def enumerate_weil(g: int, q: int, squarefree: bool = True, ordinary: bool | None = None):
    """Weil polynomials h of genus g over F_q (as WeilPoly), optionally filtered."""
    out = []
    for P in enumerate_real_weil(g, q):
        h = h_from_real_poly(P, q)
        W = validate_weil(h, q)
        if squarefree and not W.squarefree:
            continue
        if ordinary is not None and W.ordinary != ordinary:
            continue
        out.append(W)
    out.sort(key=lambda W: W.coeffs_desc())
    return out
