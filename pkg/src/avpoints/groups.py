"""Finite abelian groups as invariant-factor chains."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .arith import factor_integer


@dataclass(frozen=True, order=True)
class AbGroup:
    """Z/d_1 x ... x Z/d_k with 1 < d_1 | d_2 | ... | d_k."""

    invariants: tuple = ()

    def __post_init__(self):
        inv = tuple(int(d) for d in self.invariants if d != 1)
        for a, b in zip(inv, inv[1:]):
            if b % a:
                raise ValueError(f"not an invariant-factor chain: {inv}")
        if any(d <= 0 for d in inv):
            raise ValueError("invariant factors must be positive")
        object.__setattr__(self, "invariants", inv)

    @classmethod
    def from_invariants(cls, ds):
        """Normalize any list of cyclic orders (e.g. SNF diagonal) to invariant factors."""
        parts: dict[int, list[int]] = {}
        for d in ds:
            d = abs(int(d))
            if d == 0:
                raise ValueError("infinite cyclic factor")
            for p, e in factor_integer(d) if d > 1 else []:
                parts.setdefault(p, []).append(e)
        return cls.from_prime_partitions({p: sorted(es) for p, es in parts.items()})

    @classmethod
    def from_prime_partitions(cls, parts: dict):
        """Build from {p: [e_1 <= e_2 <= ...]} (the p-primary parts)."""
        k = max((len(v) for v in parts.values()), default=0)
        inv = [1] * k
        for p, es in parts.items():
            es = sorted(es)
            es = [0] * (k - len(es)) + es
            for i, e in enumerate(es):
                inv[i] *= p**e
        return cls(tuple(inv))

    @classmethod
    def cyclic(cls, n: int):
        return cls((n,)) if n > 1 else cls(())

    @property
    def order(self) -> int:
        return prod(self.invariants)

    @property
    def exponent(self) -> int:
        return self.invariants[-1] if self.invariants else 1

    @property
    def rank(self) -> int:
        return len(self.invariants)

    def is_cyclic(self) -> bool:
        return self.rank <= 1

    def primary_parts(self) -> dict:
        out: dict[int, list[int]] = {}
        for d in self.invariants:
            for p, e in factor_integer(d):
                out.setdefault(p, []).append(e)
        return out

    def __str__(self):
        if not self.invariants:
            return "0"
        return " x ".join(f"Z/{d}" for d in self.invariants)

    def to_list(self):
        return list(self.invariants)
