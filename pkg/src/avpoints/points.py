"""Groups of rational points as quotients I / rI, duality and ideal searches."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from . import matrices as mx
from .algebra import AlgElem
from .arith import factor_integer, is_prime, valuation
from .errors import BoundExceeded, ZeroDivisor
from .groups import AbGroup
from .lattice import Lattice, Order, conductor
from .maximal import frobenius_order, maximal_order
from .overorders import DEFAULT_CAP, AmbientCoords, is_stable, superlattices
from .primes import OrderPrime, cm_type_at, is_coprime, locally_equal, primes_containing, singular_primes
from .weil import WeilPoly


class Basis(str, Enum):
    GORENSTEIN = "GorensteinThm"
    TYPE2 = "Type2Thm"
    IDEAL_QUOTIENT = "IdealQuotient"


class Regime(str, Enum):
    ORD = "Ord"
    CS = "CS"
    NONE = "None"


def functor_regime(W: WeilPoly) -> Regime:
    if W.ordinary:
        return Regime.ORD
    if is_prime(W.q):
        return Regime.CS
    return Regime.NONE


def quotient_group(I: Lattice, r: AlgElem) -> AbGroup:
    """Invariant factors of I / rI."""
    if r.norm() == 0:
        raise ZeroDivisor("r is a zero divisor")
    M = r.matrix()
    cols = [I.int_coordinates(mx.matvec(M, v)) for v in I.basis_vectors()]
    diag, _, _ = mx.smith_form(mx.from_columns(cols))
    return AbGroup.from_invariants([d for d in diag if d])


def frobenius_power(K, n: int) -> AlgElem:
    return 1 - K.x**n


@dataclass
class PointsResult:
    group: AbGroup
    basis_of_claim: Basis
    hypotheses_checked: list = field(default_factory=list)  # [(p, f, type)]
    functor_regime: Regime = Regime.NONE
    warning: str | None = None

    def to_dict(self):
        return {
            "group": self.group.to_list(),
            "basis_of_claim": self.basis_of_claim.value,
            "hypotheses_checked": [list(t) for t in self.hypotheses_checked],
            "functor_regime": self.functor_regime.value,
            "warning": self.warning,
        }


def types_at_frobenius(S: Order, n: int = 1):
    """[(P, type_P(S))] over the primes of S containing 1 - pi^n."""
    J = S.scale(frobenius_power(S.K, n))
    return [(P, cm_type_at(S, P)) for P in primes_containing(S, J)]


def group_from_order(S: Order, W: WeilPoly, n: int = 1) -> PointsResult:
    types = types_at_frobenius(S, n)
    regime = functor_regime(W)
    checked = [(P.p, P.f, t) for P, t in types]
    G = quotient_group(S, frobenius_power(S.K, n))
    if all(t == 1 for _, t in types):
        return PointsResult(G, Basis.GORENSTEIN, checked, regime)
    if all(t <= 2 for _, t in types) and regime is not Regime.NONE:
        return PointsResult(G, Basis.TYPE2, checked, regime)
    return PointsResult(
        G,
        Basis.IDEAL_QUOTIENT,
        checked,
        regime,
        warning="group of the ideal S only; other varieties with this endomorphism ring may differ",
    )


# duality ---------------------------------------------------------------------

def dual_ideal(I: Lattice) -> Lattice:
    """conj(I)^t, the ideal attached to the dual variety."""
    return I.conjugate().trace_dual()


def dual_group(I: Lattice, W: WeilPoly, n: int = 1) -> AbGroup:
    return quotient_group(dual_ideal(I), frobenius_power(I.K, n))


def dual_group_expressions(I: Lattice, n: int = 1):
    """The four quotients that must agree for the dual variety."""
    r = frobenius_power(I.K, n)
    rbar = r.conjugate()
    Ib = I.conjugate()
    return [
        quotient_group(dual_ideal(I), r),
        quotient_group(I.trace_dual(), rbar),
        quotient_group(I, rbar),
        quotient_group(Ib, r),
    ]


@dataclass(frozen=True)
class SelfDualWitness:
    S: Order
    prime: OrderPrime


def not_self_dual_witness(S_end: Order, W: WeilPoly, overs=None) -> SelfDualWitness | None:
    """A conjugation-stable S inside S_end with a stable type-2 prime where S and S_end agree.

    overs defaults to all orders between Z[pi, pibar] and S_end.
    """
    if functor_regime(W) is Regime.NONE:
        raise ValueError("needs an ordinary class or a prime field")
    if overs is None:
        from .overorders import overorders

        overs = overorders(frobenius_order(S_end.K), S_end)
    O = maximal_order(S_end)
    for S in overs:
        if not S.issubset(S_end) or S.conjugate() != S:
            continue
        # type > 1 only happens at primes containing the conductor
        for P in singular_primes(S, O):
            if P.is_conjugation_stable() and cm_type_at(S, P) == 2 and locally_equal(S, S_end, P):
                return SelfDualWitness(S, P)
    return None


def cmtype2_ideal(S: Order, P: OrderPrime, max_m: int = 32):
    """I = d S^t + conj(P)^m for a prime P != conj(P).

    d is the least positive integer with d S^t inside S, and m the least
    exponent with conj(P)^m inside d S^t locally at conj(P). Returns (I, d, m).
    """
    if S.conjugate() != S:
        raise ValueError("S must be stable under conjugation")
    if P.is_conjugation_stable():
        raise ValueError("P must differ from its conjugate")
    St = S.dual
    d = 1
    while not St.scale(d).issubset(S):
        d += 1
    dSt = St.scale(d)
    Pb = P.ideal.conjugate()
    PbS = OrderPrime(S, P.p, Pb, P.f)
    Sl = Lattice(S.K, S.den, S.cols)
    power = Pb
    for m in range(1, max_m + 1):
        # conj(P)^m lies in d S^t at conj(P) iff the annihilator of the quotient avoids conj(P)
        ann = dSt.colon(dSt.sum(power)).intersect(Sl)
        if not PbS.contains(ann):
            return dSt.sum(power), d, m
        power = power.product(Pb)
    raise BoundExceeded(f"no exponent m <= {max_m} found", size=max_m)


# ideal search ----------------------------------------------------------------

def default_depth(R: Order, O: Order, N: int) -> int:
    """Exponent of O / (R : O), restricted to primes dividing N."""
    f = conductor(R, O)
    amb = AmbientCoords(O)
    cols = amb.to_coords(f)
    diag, _, _ = mx.smith_form(mx.from_columns(cols))
    expo = max((d for d in diag if d), default=1)
    m = 1
    for p, _ in factor_integer(expo) if expo > 1 else []:
        if N % p == 0:
            m *= p ** valuation(expo, p)
    return m


def groups_by_multiplicator(W: WeilPoly, m: int, overs, O: Order | None = None, cap: int = DEFAULT_CAP, n: int = 1):
    """{S: set of groups I/(1-pi^n)I} over lattices m O <= I <= O with (I:I) = S.

    The multiplicator ring of an R-stable I inside O is the largest order in
    overs that stabilizes it, so no colon computation is needed per lattice.
    """
    if m < 1:
        raise ValueError("depth must be >= 1")
    if O is None:
        O = maximal_order(overs[0])
    amb = AmbientCoords(O)
    k = O.n
    sub = [[m * int(i == j) for i in range(k)] for j in range(k)]
    gens = {S: amb.to_coords(S) for S in overs}
    # smallest order first, so stability under it is a cheap pre-filter
    smallest = max(overs, key=lambda S: S.covolume)
    r = frobenius_power(O.K, n)
    out: dict = {S: set() for S in overs}
    for H in superlattices(sub, cap):
        if not is_stable(amb, H, gens[smallest]):
            continue
        stab = [S for S in overs if is_stable(amb, H, gens[S])]
        top = min(stab, key=lambda S: S.covolume)
        I = amb.to_lattice(H)
        out[top].add(quotient_group(I, r))
    return out


def search_groups_for_multiplicator(S: Order, W: WeilPoly, m: int, O: Order | None = None, cap: int = DEFAULT_CAP, n: int = 1):
    """Groups I/(1-pi^n)I for all m O <= I <= O with multiplicator ring S."""
    if m < 1:
        raise ValueError("depth must be >= 1")
    if O is None:
        O = maximal_order(S)
    amb = AmbientCoords(O)
    k = O.n
    sub = [[m * int(i == j) for i in range(k)] for j in range(k)]
    gens = amb.to_coords(S)
    r = frobenius_power(O.K, n)
    out = set()
    for H in superlattices(sub, cap):
        if not is_stable(amb, H, gens):
            continue
        I = amb.to_lattice(H)
        if I.multiplicator_ring() == S:
            out.add(quotient_group(I, r))
    return out


def coprime_conductor_group(W: WeilPoly, R: Order | None = None, O: Order | None = None, samples=()):
    """Z/N when (1 - pi) R is coprime to the conductor of R, else None.

    Every lattice in samples (an R-ideal) is checked to give the same group.
    """
    K = W.algebra
    R = R or frobenius_order(K)
    O = O or maximal_order(R)
    J = R.scale(frobenius_power(K, 1))
    if not is_coprime(R, J, conductor(R, O)):
        return None
    G = AbGroup.cyclic(W.N)
    for I in samples:
        got = quotient_group(I, frobenius_power(K, 1))
        if got != G:
            raise AssertionError(f"sampled ideal gives {got}, expected {G}")
    return G
