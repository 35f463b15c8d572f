"""Integer helpers: primality, factorization, valuations, and exact a + b*sqrt(q)."""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache

from .errors import NotPrimePower

INF = math.inf

_SMALL_PRIMES = None
TRIAL_BOUND = 1 << 12

# Deterministic Miller-Rabin witnesses, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _small_primes():
    global _SMALL_PRIMES
    if _SMALL_PRIMES is None:
        sieve = bytearray([1]) * (TRIAL_BOUND + 1)
        sieve[0:2] = b"\x00\x00"
        for i in range(2, math.isqrt(TRIAL_BOUND) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
        _SMALL_PRIMES = [i for i, b in enumerate(sieve) if b]
    return _SMALL_PRIMES


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES
    if n >= 3317044064679887385961981:
        # beyond the proven range: add fixed pseudo-random bases
        rng = random.Random(n)
        bases = _MR_BASES + tuple(rng.randrange(2, n - 1) for _ in range(16))
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int, seed: int) -> int:
    """Pollard rho with Brent's cycle detection; returns a nontrivial factor or n."""
    rng = random.Random(seed)
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g


def _split(n: int, out: dict):
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split(r, out)
        _split(r, out)
        return
    seed = 1
    while True:
        d = _brent(n, seed)
        if 1 < d < n:
            break
        seed += 1
    _split(d, out)
    _split(n // d, out)


@lru_cache(maxsize=4096)
def _factor_cached(n: int) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n > 1:
        _split(n, out)
    return tuple(sorted(out.items()))


def factor_integer(n: int) -> list[tuple[int, int]]:
    """Prime factorization of |n| as a sorted list of (prime, exponent)."""
    if n == 0:
        raise ValueError("cannot factor 0")
    return list(_factor_cached(abs(n)))


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factor_integer(n)]


def valuation(n, p: int):
    """p-adic valuation of an integer or Fraction; +inf for 0."""
    if n == 0:
        return INF
    if isinstance(n, Fraction):
        return valuation(n.numerator, p) - valuation(n.denominator, p)
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def radical(n: int) -> int:
    return math.prod(prime_divisors(n)) if abs(n) > 1 else 1


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, a) with q = p**a, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    f = factor_integer(q)
    if len(f) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return f[0]


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except NotPrimePower:
        return False
    return True


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, e in factor_integer(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


class QuadIrr:
    """Exact real number a + b*sqrt(q) with rational a, b and integer q >= 0."""

    __slots__ = ("a", "b", "q")

    def __init__(self, a, b=0, q: int = 0):
        a, b = Fraction(a), Fraction(b)
        if q < 0:
            raise ValueError("q must be non-negative")
        r = math.isqrt(q)
        if r * r == q:
            a, b, q = a + b * r, Fraction(0), 0
        elif b == 0:
            q = 0
        self.a, self.b, self.q = a, b, q

    def _coerce(self, other):
        if isinstance(other, QuadIrr):
            if other.q and self.q and other.q != self.q:
                raise ValueError("mixed radicands")
            return other
        return QuadIrr(other)

    def _radicand(self, other):
        return self.q or other.q

    def __add__(self, other):
        o = self._coerce(other)
        return QuadIrr(self.a + o.a, self.b + o.b, self._radicand(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadIrr(-self.a, -self.b, self.q)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        q = self._radicand(o)
        return QuadIrr(self.a * o.a + self.b * o.b * q, self.a * o.b + self.b * o.a, q)

    __rmul__ = __mul__

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 q
        d = self.a * self.a - self.b * self.b * self.q
        return sa if d > 0 else (-sa if d < 0 else 0)

    def __eq__(self, other):
        return (self - other).sign() == 0

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __hash__(self):
        return hash((self.a, self.b, self.q))

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.q)

    def __repr__(self):
        if not self.q:
            return f"QuadIrr({self.a})"
        return f"QuadIrr({self.a} + {self.b}*sqrt({self.q}))"
