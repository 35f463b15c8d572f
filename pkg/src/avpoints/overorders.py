"""Enumeration of lattices between a sublattice and an ambient order.

Everything is done in the coordinates of a fixed ambient order O (usually
O_K): a lattice L with M <= L <= O becomes an integer matrix, and such
lattices correspond to subgroups of the finite group O/M.
"""

from __future__ import annotations

import itertools

from . import matrices as mx
from .arith import divisors
from .errors import BoundExceeded, NotContained
from .lattice import Lattice, Order

DEFAULT_CAP = 10**6


class AmbientCoords:
    """Coordinates relative to the basis of an order O."""

    def __init__(self, O: Order):
        self.O = O
        self.n = O.n
        self.sc = O.structure_constants

    def to_coords(self, L: Lattice):
        """Integer O-coordinates (columns) of a lattice contained in O."""
        return [self.O.int_coordinates(v) for v in L.basis_vectors()]

    def to_lattice(self, cols, den: int = 1) -> Lattice:
        O, n = self.O, self.n
        vecs = [[sum(c[j] * O.cols[j][i] for j in range(n)) for i in range(n)] for c in cols]
        return Lattice.from_int_vectors(O.K, vecs, O.den * den)

    def mul(self, u, v):
        n, sc = self.n, self.sc
        out = [0] * n
        for i in range(n):
            if u[i]:
                for j in range(n):
                    if v[j]:
                        f = u[i] * v[j]
                        cij = sc[i][j]
                        for k in range(n):
                            out[k] += f * cij[k]
        return out

    def mult_matrix(self, u):
        n = self.n
        cols = []
        for j in range(n):
            e = [0] * n
            e[j] = 1
            cols.append(self.mul(u, e))
        return [[cols[j][i] for j in range(n)] for i in range(n)]


def in_upper(H, v) -> bool:
    """Is the integer vector v in the span of the upper-triangular columns H?"""
    n = len(H)
    v = list(v)
    for i in range(n - 1, -1, -1):
        if v[i]:
            col = H[i]
            d = col[i]
            if v[i] % d:
                return False
            f = v[i] // d
            for k in range(i + 1):
                v[k] -= f * col[k]
    return True


def superlattices(sub_cols, cap: int = DEFAULT_CAP):
    """Yield every lattice L with span(sub_cols) <= L <= Z^n.

    Output lattices are lists of columns in column-style HNF. sub_cols must
    have full rank. Raises BoundExceeded after cap candidates.
    """
    n = len(sub_cols)
    M = mx.from_columns([list(c) for c in sub_cols])
    d, P, _ = mx.smith_form(M)
    d = list(d) + [0] * (n - len(d))
    if 0 in d:
        raise NotContained("sublattice is not of full rank")
    Pinv = mx.inverse(P)
    Pinv = [[int(x) for x in row] for row in Pinv]
    H = [[0] * n for _ in range(n)]  # H[j] is column j
    count = 0
    divs = [divisors(x) for x in d]

    def rec(j):
        nonlocal count
        if j == n:
            count += 1
            if count > cap:
                raise BoundExceeded(f"more than {cap} subgroup candidates", size=count)
            cols = [mx.matvec(Pinv, H[k]) for k in range(n)]
            yield mx.lattice_hnf(cols, n)
            return
        for hj in divs[j]:
            col = H[j]
            for i in range(n):
                col[i] = 0
            col[j] = hj
            for ent in itertools.product(*[range(H[i][i]) for i in range(j)]):
                for i in range(j):
                    col[i] = ent[i]
                # d_j e_j must lie in the span of columns 0..j
                c = {j: d[j] // hj}
                ok = True
                for i in range(j - 1, -1, -1):
                    r = -sum(ck * H[k][i] for k, ck in c.items())
                    if r % H[i][i]:
                        ok = False
                        break
                    c[i] = r // H[i][i]
                if ok:
                    yield from rec(j + 1)

    yield from rec(0)


def is_stable(amb: AmbientCoords, H, gens) -> bool:
    """Is span(H) closed under multiplication by each generator (O-coordinates)?"""
    for g in gens:
        for col in H:
            if not in_upper(H, amb.mul(g, col)):
                return False
    return True


def is_ring(amb: AmbientCoords, H) -> bool:
    n = len(H)
    for i in range(n):
        for j in range(i, n):
            if not in_upper(H, amb.mul(H[i], H[j])):
                return False
    return True


def overorders(R: Order, O: Order | None = None, cap: int = DEFAULT_CAP) -> list[Order]:
    """All orders between R and O (default: the maximal order)."""
    if O is None:
        from .maximal import maximal_order

        O = maximal_order(R)
    amb = AmbientCoords(O)
    sub = amb.to_coords(R)
    out = []
    for H in superlattices(sub, cap):
        if is_ring(amb, H):
            L = amb.to_lattice(H)
            out.append(Order(L.K, L.den, L.cols))
    out.sort(key=lambda S: (-S.index_in(O), S.den, S.cols))
    return out


def minimal_overorders(S: Order, overs: list[Order]) -> list[Order]:
    """Minimal elements (under inclusion) of the proper overorders of S in overs."""
    proper = [T for T in overs if T != S and S.issubset(T)]
    return [T for T in proper if not any(U != T and U.issubset(T) for U in proper)]
