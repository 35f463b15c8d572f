"""Random instance generators shared by the tests."""

import random

from avpoints import polys
from avpoints.algebra import EtaleAlgebra
from avpoints.lattice import Lattice
from avpoints.weil import enumerate_weil


def random_squarefree_poly(rng: random.Random, n: int, bound: int = 5):
    while True:
        h = tuple(rng.randint(-bound, bound) for _ in range(n)) + (1,)
        if h[0] != 0 and polys.is_squarefree(h):
            return h


def random_algebra(rng, n, bound=5):
    return EtaleAlgebra(random_squarefree_poly(rng, n, bound))


def random_lattice(rng, K, bound=4, den_max=3):
    """A full-rank lattice with a random (small) basis and denominator."""
    n = K.n
    while True:
        vecs = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        den = rng.randint(1, den_max)
        try:
            return Lattice.from_int_vectors(K, vecs, den)
        except Exception:
            continue


def random_element(rng, K, bound=3, integral=True):
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(K.n)]
        a = K.elem(coeffs)
        if a.norm() != 0:
            return a


def random_zx_ideal(rng, K, ngens=2, bound=4):
    """The Z[x]-module generated by a few random elements (an ideal of the equation order)."""
    from avpoints.lattice import Order

    Zx = Order.equation_order(K)
    gens = [random_element(rng, K, bound) for _ in range(ngens)]
    return Zx.ideal_from_generators(gens)


_WEIL_CACHE = {}


def weil_list(g, q):
    key = (g, q)
    if key not in _WEIL_CACHE:
        _WEIL_CACHE[key] = enumerate_weil(g, q, squarefree=True)
    return _WEIL_CACHE[key]
