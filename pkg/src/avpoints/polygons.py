"""Newton polygons of h(1 - t) and Hodge polygons of finite abelian groups."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import polys
from .arith import valuation
from .errors import PartitionTooLong


@dataclass(frozen=True)
class Polygon:
    """Piecewise-linear function on [0, width] given by its vertices."""

    vertices: tuple  # ((x0, y0), (x1, y1), ...) with x increasing

    @property
    def width(self) -> int:
        return self.vertices[-1][0]

    def at(self, x) -> Fraction:
        vs = self.vertices
        for (x0, y0), (x1, y1) in zip(vs, vs[1:]):
            if x0 <= x <= x1:
                return Fraction(y0) + Fraction(y1 - y0, x1 - x0) * (x - x0)
        if x == vs[0][0]:
            return Fraction(vs[0][1])
        raise ValueError(f"abscissa {x} outside the polygon")

    def values(self):
        return [self.at(i) for i in range(self.width + 1)]


def lower_hull(points):
    """Lower convex hull of points with distinct x, by a monotone chain."""
    pts = sorted(points)
    hull: list = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it lies on or above the segment hull[-2] -> p
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def shifted_poly(h):
    """Coefficients b_i of h(1 - t), lowest degree first."""
    return polys.compose_affine(h, -1, 1)


def newton_polygon(h, ell: int) -> Polygon:
    b = shifted_poly(h)
    pts = [(i, valuation(c, ell)) for i, c in enumerate(b) if c != 0]
    return Polygon(tuple(lower_hull(pts)))


def hodge_polygon(partition, width: int) -> Polygon:
    """Hodge polygon of prod Z/ell^{e_j}: vertices (i, e_1 + ... + e_{width-i})."""
    es = sorted(int(e) for e in partition if e)
    if len(es) > width:
        raise PartitionTooLong(f"{len(es)} parts exceed {width}")
    es = [0] * (width - len(es)) + es
    verts = []
    for i in range(width + 1):
        verts.append((i, sum(es[: width - i])))
    # keep only the breakpoints
    out = [verts[0]]
    for k in range(1, len(verts) - 1):
        (x0, y0), (x1, y1), (x2, y2) = out[-1], verts[k], verts[k + 1]
        if (y1 - y0) * (x2 - x1) != (y2 - y1) * (x1 - x0):
            out.append(verts[k])
    out.append(verts[-1])
    return Polygon(tuple(out))


def lies_on_or_below(hodge: Polygon, newton: Polygon) -> bool:
    """Compare at every integer abscissa (all breakpoints are integral)."""
    w = newton.width
    if hodge.width != w:
        raise ValueError("polygons of different widths")
    return all(hodge.at(i) <= newton.at(i) for i in range(w + 1))


def partitions(n: int, max_parts: int | None = None, max_part: int | None = None):
    """Partitions of n as non-increasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, None if max_parts is None else max_parts - 1, first):
            yield (first,) + rest
