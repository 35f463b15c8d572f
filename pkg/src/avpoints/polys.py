"""Dense univariate polynomials as tuples, lowest degree first.

Coefficients are ints or Fractions. The zero polynomial is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .arith import QuadIrr


def trim(p) -> tuple:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(_norm(c) for c in p)


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def degree(p) -> int:
    return len(trim(p)) - 1


def is_integral(p) -> bool:
    return all(not isinstance(c, Fraction) or c.denominator == 1 for c in p)


def add(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def neg(a):
    return tuple(-c for c in a)


def sub(a, b):
    return add(a, neg(b))


def scale(a, c):
    return trim([c * x for x in a])


def mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def power(a, e: int):
    out, base = (1,), a
    while e:
        if e & 1:
            out = mul(out, base)
        base = mul(base, base)
        e >>= 1
    return out


def divmod_poly(a, b):
    """Quotient and remainder over Q."""
    a, b = list(trim(a)), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db, lb = len(b) - 1, b[-1]
    if len(a) - 1 < db:
        return (), trim(a)
    qt = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = Fraction(a[k + db]) / lb
        qt[k] = c
        if c:
            for j in range(db + 1):
                a[k + j] -= c * b[j]
    return trim(qt), trim(a[:db])


def rem(a, b):
    return divmod_poly(a, b)[1]


def monic(a):
    a = trim(a)
    return tuple(_norm(Fraction(c) / a[-1]) for c in a) if a else a


def gcd(a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def deriv(a, k: int = 1):
    for _ in range(k):
        a = trim([i * a[i] for i in range(1, len(a))])
    return tuple(a)


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def taylor_coeff(a, x0, i: int):
    """a^(i)(x0) / i!, exactly."""
    return _norm(Fraction(evaluate(deriv(a, i), x0)) / factorial(i))


def compose_affine(a, u, v):
    """a(u*x + v)."""
    out = ()
    lin = trim((v, u))
    for c in reversed(a):
        out = add(mul(out, lin), (c,))
    return out


def shift(a, c):
    """a(x + c) by the binomial expansion."""
    n = len(a)
    out = [0] * n
    for i, ai in enumerate(a):
        if ai:
            for k in range(i + 1):
                out[k] += ai * comb(i, k) * c ** (i - k)
    return trim(out)


def reverse(a, n: int | None = None):
    """x^n a(1/x), with n defaulting to deg a."""
    a = trim(a)
    if n is None:
        n = len(a) - 1
    return trim(list(reversed(list(a) + [0] * (n + 1 - len(a)))))


def squarefree_part(a):
    a = trim(a)
    if len(a) <= 1:
        return monic(a) if a else a
    g = gcd(a, deriv(a))
    return monic(divmod_poly(a, g)[0])


def is_squarefree(a) -> bool:
    return len(gcd(a, deriv(a))) <= 1


def content(a) -> int:
    from math import gcd as igcd

    g = 0
    for c in a:
        g = igcd(g, int(c))
    return g


def primitive(a, keep_sign: bool = False):
    """Scale a rational polynomial to a primitive integer one.

    The leading coefficient is made positive unless keep_sign is set, in which
    case only a positive factor is applied (Sturm chains need that).
    """
    from math import lcm

    a = trim(a)
    if not a:
        return a
    den = 1
    for c in a:
        den = lcm(den, Fraction(c).denominator)
    b = [int(Fraction(c) * den) for c in a]
    g = content(b)
    s = 1 if (keep_sign or b[-1] > 0) else -1
    return tuple(s * c // g for c in b)


def sturm_sequence(a):
    seq = [trim(a), deriv(trim(a))]
    while seq[-1]:
        r = rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(primitive(neg(r), keep_sign=True))
    return seq


def _sign_at(p, x) -> int:
    if x is None or isinstance(x, str):
        # +inf / -inf proxies
        lead = p[-1]
        s = 1 if lead > 0 else -1
        if x == "-inf" and (len(p) - 1) % 2:
            s = -s
        return s
    v = evaluate(p, x)
    if isinstance(v, QuadIrr):
        return v.sign()
    return (v > 0) - (v < 0)


def _variations(seq, x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in seq) if s]
    return sum(1 for u, w in zip(signs, signs[1:]) if u != w)


def count_real_roots(g, lo="-inf", hi="+inf") -> int:
    """Distinct real roots of g in the closed interval [lo, hi].

    Endpoints may be ints, Fractions, QuadIrr values, or the strings
    "-inf" / "+inf".
    """
    g = trim(g)
    if not g:
        raise ValueError("zero polynomial")
    if len(g) == 1:
        return 0
    s = primitive(squarefree_part(g))
    if len(s) == 1:
        return 0
    seq = sturm_sequence(s)
    n = _variations(seq, lo) - _variations(seq, hi)
    if not isinstance(lo, str) and _sign_at(s, lo) == 0:
        n += 1
    return n


def root_bound(a) -> Fraction:
    """Cauchy bound: every complex root has modulus below this."""
    a = trim(a)
    lead = abs(Fraction(a[-1]))
    return 1 + max((abs(Fraction(c)) / lead for c in a[:-1]), default=Fraction(0))


def to_str(a, var: str = "x") -> str:
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and c == 1:
            t = mono
        elif mono and c == -1:
            t = "-" + mono
        else:
            t = f"{c}{'*' + mono if mono else ''}"
        terms.append(t)
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"
