"""Exact integer and rational matrices as lists of rows.

HNF convention used everywhere in the package: column style. The columns of
H span the same Z-module as the columns of M, H is upper triangular (zero
below each pivot), pivots are positive, and each entry to the right of a
pivot lies in [0, pivot). Zero columns are moved to the left.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .arith import xgcd
from .errors import NotFullRank


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> list[list[int]]:
    return [[0] * c for _ in range(r)]


def transpose(M):
    return [list(r) for r in zip(*M)] if M else []


def matmul(A, B):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A, v):
    return [sum(a * b for a, b in zip(row, v)) for row in A]


def columns(M):
    return [list(c) for c in zip(*M)]


def from_columns(cols, nrows: int | None = None):
    if not cols:
        return [[] for _ in range(nrows or 0)]
    return [list(r) for r in zip(*cols)]


def _col_combine(cols, a, b, row, aux=None):
    """Replace columns a, b by a unimodular combination zeroing cols[b][row]."""
    x, y = cols[a][row], cols[b][row]
    g, s, t = xgcd(x, y)
    xa, yb = x // g, y // g
    ca, cb = cols[a], cols[b]
    cols[a] = [s * u + t * v for u, v in zip(ca, cb)]
    cols[b] = [yb * u - xa * v for u, v in zip(ca, cb)]
    if aux is not None:
        ua, ub = aux[a], aux[b]
        aux[a] = [s * u + t * v for u, v in zip(ua, ub)]
        aux[b] = [yb * u - xa * v for u, v in zip(ua, ub)]


def hermite_normal_form(M):
    """Column-style HNF. Returns (H, U) with M @ U == H and U unimodular."""
    m = len(M)
    n = len(M[0]) if m else 0
    cols = columns(M) if n else []
    aux = columns(identity(n))
    # columns [0, k) are still free; pivots are placed at k-1, k-2, ...
    k = n
    pivot_rows = []
    for row in range(m - 1, -1, -1):
        nz = [j for j in range(k) if cols[j][row] != 0]
        if not nz:
            continue
        a = nz[-1]
        for b in nz[:-1]:
            _col_combine(cols, a, b, row, aux)
        # move the pivot column to position k-1
        dst = k - 1
        cols[a], cols[dst] = cols[dst], cols[a]
        aux[a], aux[dst] = aux[dst], aux[a]
        if cols[dst][row] < 0:
            cols[dst] = [-v for v in cols[dst]]
            aux[dst] = [-v for v in aux[dst]]
        pivot_rows.append((row, dst))
        k -= 1
    # reduce entries to the right of each pivot
    for row, pc in pivot_rows:
        d = cols[pc][row]
        for j in range(pc + 1, n):
            f = cols[j][row] // d
            if f:
                cols[j] = [u - f * v for u, v in zip(cols[j], cols[pc])]
                aux[j] = [u - f * v for u, v in zip(aux[j], aux[pc])]
    H = from_columns(cols, m) if n else [[] for _ in range(m)]
    U = from_columns(aux, n) if n else []
    return H, U


def hnf(M):
    return hermite_normal_form(M)[0]


def lattice_hnf(vectors, n: int):
    """HNF basis (list of n columns) of the full-rank Z-span of integer vectors.

    Works modulo the running determinant once the pivots reach full rank.
    Raises NotFullRank if the span has rank < n.
    """
    piv: list = [None] * n
    D = 0
    filled = 0

    def reduce_mod(v):
        return [x % D for x in v] if D else v

    for v in vectors:
        v = reduce_mod(list(v))
        i = n - 1
        while i >= 0:
            if v[i] == 0:
                i -= 1
                continue
            p = piv[i]
            if p is None:
                if v[i] < 0:
                    v = [-x for x in v]
                piv[i] = v
                filled += 1
                break
            x, y = p[i], v[i]
            if y % x == 0:
                f = y // x
                v = [a - f * b for a, b in zip(v, p)]
            else:
                g, s, t = xgcd(x, y)
                newp = [s * a + t * b for a, b in zip(p, v)]
                v = [(y // g) * a - (x // g) * b for a, b in zip(p, v)]
                piv[i] = newp
                if D:
                    D = D // x * g
            if D:
                v = reduce_mod(v)
                keep = piv[i][i]
                piv[i] = [a % D for a in piv[i]]
                piv[i][i] = keep
            i -= 1
        if filled == n and not D:
            D = 1
            for j in range(n):
                D *= piv[j][j]
            for j in range(n):
                keep = piv[j][j]
                piv[j] = [a % D for a in piv[j]]
                piv[j][j] = keep
    if filled < n:
        raise NotFullRank(f"span has rank {filled} < {n}")
    # zero out entries below pivots (they are 0 by construction) and reduce above
    for j in range(n):
        for i in range(j - 1, -1, -1):
            d = piv[i][i]
            f = piv[j][i] // d
            if f:
                piv[j] = [a - f * b for a, b in zip(piv[j], piv[i])]
    return piv


def _pivot_gcd(x, y):
    """xgcd, but keep the pivot untouched when it already divides y."""
    if y % x == 0:
        return x, 1, 0
    return xgcd(x, y)


def smith_form(M):
    """Return (diag, P, Q) with P @ M @ Q diagonal, diag the nonzero invariants.

    diag is in divisibility order with positive entries.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    A = [list(r) for r in M]
    P, Q = identity(m), identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        P[i], P[j] = P[j], P[i]

    def swap_cols(i, j):
        for R in (A, Q):
            for r in R:
                r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero |entry| in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        done = False
        while not done:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    g, s, u = _pivot_gcd(A[t][t], A[i][t])
                    a, b = A[t][t] // g, A[i][t] // g
                    for R in (A, P):
                        rt, ri = R[t], R[i]
                        R[t] = [s * x + u * y for x, y in zip(rt, ri)]
                        R[i] = [-b * x + a * y for x, y in zip(rt, ri)]
            for j in range(t + 1, n):
                if A[t][j]:
                    g, s, u = _pivot_gcd(A[t][t], A[t][j])
                    a, b = A[t][t] // g, A[t][j] // g
                    for R in (A, Q):
                        for r in R:
                            x, y = r[t], r[j]
                            r[t], r[j] = s * x + u * y, -b * x + a * y
                    done = False
            if done:
                # divisibility: fold in any entry not divisible by the pivot
                d = A[t][t]
                for i in range(t + 1, m):
                    bad = next((j for j in range(t + 1, n) if A[i][j] % d), None)
                    if bad is not None:
                        A[t] = [x + y for x, y in zip(A[t], A[i])]
                        P[t] = [x + y for x, y in zip(P[t], P[i])]
                        done = False
                        break
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            P[t] = [-x for x in P[t]]
        t += 1
    diag = [A[i][i] for i in range(min(m, n)) if A[i][i]]
    return diag, P, Q


def smith_normal_form(M):
    """Invariant factors (all nonzero ones, including 1s) and the rank."""
    if not M or not M[0]:
        return [], 0
    d = smith_form(M)[0]
    return d, len(d)


def elementary_divisors_fast(M):
    """Invariant factors of a square nonsingular integer matrix via HNF then SNF."""
    return smith_normal_form(M)[0]


# rational linear algebra ---------------------------------------------------

def frac_matrix(M):
    return [[Fraction(x) for x in r] for r in M]


def rref(M):
    """Reduced row echelon form over Q; returns (R, pivot columns)."""
    A = frac_matrix(M)
    m = len(A)
    n = len(A[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A, pivots


def rank(M) -> int:
    return len(rref(M)[1])


def det(M):
    A = frac_matrix(M)
    n = len(A)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        d *= A[c][c]
        inv = 1 / A[c][c]
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return d


def int_det(M) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if A[i][k]), None)
            if sw is None:
                return 0
            A[k], A[sw] = A[sw], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def charpoly(M):
    """det(tI - M), lowest degree first, by interpolating determinants at t = 0..n."""
    n = len(M)
    A = frac_matrix(M)
    ys = [det([[Fraction(int(i == j) * t) - A[i][j] for j in range(n)] for i in range(n)]) for t in range(n + 1)]
    # Newton divided differences, then expand to monomial coefficients
    c = list(ys)
    for k in range(1, n + 1):
        for i in range(n, k - 1, -1):
            c[i] = (c[i] - c[i - 1]) / k
    out = [Fraction(0)] * (n + 1)
    for k in range(n, -1, -1):
        # out = out * (t - k) + c[k]
        nxt = [Fraction(0)] * (n + 1)
        for i in range(n):
            nxt[i + 1] += out[i]
            nxt[i] -= k * out[i]
        nxt[0] += c[k]
        out = nxt
    return out


def inverse(M):
    """Inverse over Q; raises ZeroDivisionError if singular."""
    n = len(M)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(M)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


def solve(M, b):
    """Solve M x = b over Q for square nonsingular M."""
    n = len(M)
    aug = [list(r) + [b[i]] for i, r in enumerate(M)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [R[i][n] for i in range(n)]


def common_denominator(M) -> int:
    d = 1
    for r in M:
        for x in r:
            d = lcm(d, Fraction(x).denominator)
    return d


def scale_to_int(M):
    """Return (A, d) with A integral and M = A / d, d minimal."""
    d = common_denominator(M)
    return [[int(Fraction(x) * d) for x in r] for r in M], d


def is_integral_matrix(M) -> bool:
    return all(Fraction(x).denominator == 1 for r in M for x in r)


# linear algebra over F_p ---------------------------------------------------

def rref_mod(M, p: int):
    A = [[x % p for x in r] for r in M]
    m = len(A)
    n = len(A[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        k = next((i for i in range(r, m) if A[i][c]), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A[:r], pivots


def rank_mod(M, p: int) -> int:
    return len(rref_mod(M, p)[1]) if M else 0


def kernel_mod(M, p: int):
    """Basis of {v : M v = 0} over F_p, as a list of vectors."""
    n = len(M[0])
    R, piv = rref_mod(M, p)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, c in enumerate(piv):
            v[c] = -R[i][f] % p
        basis.append(v)
    return basis


def span_mod(vectors, p: int):
    """Row-reduced basis of the F_p-span of vectors."""
    if not vectors:
        return []
    return rref_mod(vectors, p)[0]


def gcd_list(xs) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g
