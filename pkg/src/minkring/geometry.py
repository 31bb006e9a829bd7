"""Exact geometry of the supported polytope families.

Four families are modeled, each closed under Minkowski sums:

* 1-D closed intervals with endpoints in Q or Q(sqrt 2)   (:class:`Interval`),
* axis-aligned boxes with integer vertices in d dimensions (:class:`Box`),
* convex polygons of the regular triangular grid           (:class:`GridSet`),
* finite Cartesian products of box/grid polytopes          (:class:`ProductPolytope`).

Grid polygons live in lattice coordinates: the plane is spanned by the two
unit steps of the triangular lattice, so every grid computation is pure
integer arithmetic and the geometric slopes never materialize.  A
:class:`GridSet` keeps six bounds

    u_min <= u <= u_max,   v_min <= v <= v_max,   s_min <= u + v <= s_max

and is canonical: every bound is attained by a point of the set, and empty
bound systems are rejected at construction.

Every polytope decomposes canonically into relatively open cells: lattice
vertices, open unit edges in the three grid directions, open unit up/down
triangles, 1-D points and open intervals, unit box cells, and products of
those.  All values are immutable; all operations are pure functions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Tuple, Union

from .scalars import Scalar, ScalarLike


class FamilyMismatchError(ValueError):
    """Operands come from different polytope families or ambient blocks."""


class EmptyRegionError(ValueError):
    """The bound system describes the empty set."""


# ---------------------------------------------------------------------------
# ambient space descriptors


@dataclass(frozen=True)
class GridPlane:
    """The triangular-lattice plane."""


@dataclass(frozen=True)
class Line:
    """The real line with a scalar mode: 'rational' or 'sqrt2'."""

    mode: str = "rational"


@dataclass(frozen=True)
class BoxSpace:
    dim: int


@dataclass(frozen=True)
class ProductSpace:
    parts: tuple


Ambient = Union[GridPlane, Line, BoxSpace, ProductSpace]


# ---------------------------------------------------------------------------
# polytopes


@dataclass(frozen=True)
class Interval:
    """Closed 1-D interval [lo, hi]; lo == hi gives a point."""

    lo: Scalar
    hi: Scalar
    mode: str = "rational"

    def __post_init__(self):
        if (self.hi - self.lo).sign() < 0:
            raise ValueError(f"interval needs lo <= hi, got [{self.lo}, {self.hi}]")
        if self.mode == "rational" and not (self.lo.is_rational and self.hi.is_rational):
            raise ValueError("irrational endpoint in rational-mode interval")


def interval(lo: ScalarLike, hi: ScalarLike, mode: str | None = None) -> Interval:
    lo, hi = Scalar.of(lo), Scalar.of(hi)
    if mode is None:
        mode = "rational" if lo.is_rational and hi.is_rational else "sqrt2"
    return Interval(lo, hi, mode)


def line_point(at: ScalarLike, mode: str | None = None) -> Interval:
    return interval(at, at, mode)


@dataclass(frozen=True)
class Box:
    """Product of integer intervals [los[i], his[i]]; degenerate axes allowed."""

    los: Tuple[int, ...]
    his: Tuple[int, ...]

    def __post_init__(self):
        if len(self.los) != len(self.his) or not self.los:
            raise ValueError("box needs matching, nonempty bound tuples")
        for a, b in zip(self.los, self.his):
            if a > b:
                raise ValueError(f"box needs a_i <= b_i, got [{a}, {b}]")


def box(los: Iterable[int], his: Iterable[int]) -> Box:
    return Box(tuple(int(a) for a in los), tuple(int(b) for b in his))


def box_point(coords: Iterable[int]) -> Box:
    c = tuple(int(x) for x in coords)
    return Box(c, c)


@dataclass(frozen=True)
class GridSet:
    """Canonical convex polygon of the triangular grid (tight bounds)."""

    u_min: int
    u_max: int
    v_min: int
    v_max: int
    s_min: int
    s_max: int

    def __post_init__(self):
        tight = _tighten(self.u_min, self.u_max, self.v_min, self.v_max,
                         self.s_min, self.s_max)
        if tight != (self.u_min, self.u_max, self.v_min, self.v_max,
                     self.s_min, self.s_max):
            raise ValueError(f"grid bounds not canonical: {self} vs {tight}")

    def bounds(self) -> tuple:
        return (self.u_min, self.u_max, self.v_min, self.v_max, self.s_min, self.s_max)


def _tighten(u0, u1, v0, v1, s0, s1):
    while True:
        if u0 > u1 or v0 > v1 or s0 > s1:
            raise EmptyRegionError(f"empty grid region {(u0, u1, v0, v1, s0, s1)}")
        nxt = (max(u0, s0 - v1), min(u1, s1 - v0),
               max(v0, s0 - u1), min(v1, s1 - u0),
               max(s0, u0 + v0), min(s1, u1 + v1))
        if nxt == (u0, u1, v0, v1, s0, s1):
            return nxt
        u0, u1, v0, v1, s0, s1 = nxt


def grid_set(u_min: int, u_max: int, v_min: int, v_max: int,
             s_min: int, s_max: int) -> GridSet:
    """Build a canonical GridSet, tightening the six bounds first."""
    return GridSet(*_tighten(u_min, u_max, v_min, v_max, s_min, s_max))


def grid_point_set(u: int, v: int) -> GridSet:
    return GridSet(u, u, v, v, u + v, u + v)


def unit_triangle() -> GridSet:
    return GridSet(0, 1, 0, 1, 0, 1)


@dataclass(frozen=True)
class ProductPolytope:
    """Cartesian product; parts occupy disjoint coordinate blocks.

    Only lattice-cell families (boxes and grid polygons) may appear as
    parts, which keeps the product cell decomposition canonical.
    """

    parts: tuple

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("product needs at least two parts")
        for p in self.parts:
            if not isinstance(p, (Box, GridSet)):
                raise FamilyMismatchError(
                    f"product parts must be Box or GridSet, got {type(p).__name__}"
                )


def product(*parts) -> ProductPolytope:
    flat = []
    for p in parts:
        if isinstance(p, ProductPolytope):
            flat.extend(p.parts)
        else:
            flat.append(p)
    return ProductPolytope(tuple(flat))


Polytope = Union[Interval, Box, GridSet, ProductPolytope]


# ---------------------------------------------------------------------------
# basic queries


def ambient_of(p: Polytope) -> Ambient:
    if isinstance(p, Interval):
        return Line(p.mode)
    if isinstance(p, Box):
        return BoxSpace(len(p.los))
    if isinstance(p, GridSet):
        return GridPlane()
    if isinstance(p, ProductPolytope):
        return ProductSpace(tuple(ambient_of(q) for q in p.parts))
    raise TypeError(f"not a polytope: {p!r}")


def origin_of(ambient: Ambient) -> Polytope:
    if isinstance(ambient, Line):
        return Interval(Scalar.of(0), Scalar.of(0), ambient.mode)
    if isinstance(ambient, BoxSpace):
        return box_point((0,) * ambient.dim)
    if isinstance(ambient, GridPlane):
        return grid_point_set(0, 0)
    if isinstance(ambient, ProductSpace):
        return ProductPolytope(tuple(origin_of(a) for a in ambient.parts))
    raise TypeError(f"not an ambient: {ambient!r}")


def dim(p: Polytope) -> int:
    if isinstance(p, Interval):
        return 0 if p.lo == p.hi else 1
    if isinstance(p, Box):
        return sum(1 for a, b in zip(p.los, p.his) if a < b)
    if isinstance(p, GridSet):
        if p.u_min == p.u_max and p.v_min == p.v_max:
            return 0
        if p.u_min == p.u_max or p.v_min == p.v_max or p.s_min == p.s_max:
            return 1
        return 2
    if isinstance(p, ProductPolytope):
        return sum(dim(q) for q in p.parts)
    raise TypeError(f"not a polytope: {p!r}")


def _check_family(a: Polytope, b: Polytope) -> None:
    if type(a) is not type(b) or ambient_of(a) != ambient_of(b):
        raise FamilyMismatchError(
            f"mismatched families: {type(a).__name__} vs {type(b).__name__}"
        )


def minkowski_sum(a: Polytope, b: Polytope) -> Polytope:
    """Minkowski sum within one family; six-bound (per-axis) addition."""
    _check_family(a, b)
    if isinstance(a, Interval):
        return Interval(a.lo + b.lo, a.hi + b.hi, a.mode)
    if isinstance(a, Box):
        return Box(tuple(x + y for x, y in zip(a.los, b.los)),
                   tuple(x + y for x, y in zip(a.his, b.his)))
    if isinstance(a, GridSet):
        return grid_set(*(x + y for x, y in zip(a.bounds(), b.bounds())))
    return ProductPolytope(tuple(minkowski_sum(x, y) for x, y in zip(a.parts, b.parts)))


def scale(p: Polytope, k: int) -> Polytope:
    """k-fold Minkowski sum of p with itself (dilation); k = 0 gives the
    origin point of the same block."""
    if k < 0:
        raise ValueError("scale needs k >= 0")
    if k == 0:
        return origin_of(ambient_of(p))
    if isinstance(p, Interval):
        return Interval(p.lo * k, p.hi * k, p.mode)
    if isinstance(p, Box):
        return Box(tuple(a * k for a in p.los), tuple(b * k for b in p.his))
    if isinstance(p, GridSet):
        return grid_set(*(b * k for b in p.bounds()))
    if isinstance(p, ProductPolytope):
        return ProductPolytope(tuple(scale(q, k) for q in p.parts))
    raise TypeError(f"not a polytope: {p!r}")


def negate(p: Polytope) -> Polytope:
    if isinstance(p, Interval):
        return Interval(-p.hi, -p.lo, p.mode)
    if isinstance(p, Box):
        return Box(tuple(-b for b in p.his), tuple(-a for a in p.los))
    if isinstance(p, GridSet):
        return GridSet(-p.u_max, -p.u_min, -p.v_max, -p.v_min, -p.s_max, -p.s_min)
    if isinstance(p, ProductPolytope):
        return ProductPolytope(tuple(negate(q) for q in p.parts))
    raise TypeError(f"not a polytope: {p!r}")


def translate(p: Polytope, offset) -> Polytope:
    if isinstance(p, Interval):
        d = Scalar.of(offset)
        return Interval(p.lo + d, p.hi + d, p.mode)
    if isinstance(p, Box):
        off = tuple(int(x) for x in offset)
        return Box(tuple(a + d for a, d in zip(p.los, off)),
                   tuple(b + d for b, d in zip(p.his, off)))
    if isinstance(p, GridSet):
        du, dv = int(offset[0]), int(offset[1])
        return GridSet(p.u_min + du, p.u_max + du, p.v_min + dv, p.v_max + dv,
                       p.s_min + du + dv, p.s_max + du + dv)
    if isinstance(p, ProductPolytope):
        return ProductPolytope(tuple(translate(q, o) for q, o in zip(p.parts, offset)))
    raise TypeError(f"not a polytope: {p!r}")


# ---------------------------------------------------------------------------
# face lattice


def _grid_pinned(g: GridSet):
    yield grid_set(g.u_min, g.u_min, g.v_min, g.v_max, g.s_min, g.s_max)
    yield grid_set(g.u_max, g.u_max, g.v_min, g.v_max, g.s_min, g.s_max)
    yield grid_set(g.u_min, g.u_max, g.v_min, g.v_min, g.s_min, g.s_max)
    yield grid_set(g.u_min, g.u_max, g.v_max, g.v_max, g.s_min, g.s_max)
    yield grid_set(g.u_min, g.u_max, g.v_min, g.v_max, g.s_min, g.s_min)
    yield grid_set(g.u_min, g.u_max, g.v_min, g.v_max, g.s_max, g.s_max)


def polytope_sort_key(p: Polytope):
    if isinstance(p, Interval):
        data = (p.lo.p, p.lo.q, p.hi.p, p.hi.q)
    elif isinstance(p, Box):
        data = p.los + p.his
    elif isinstance(p, GridSet):
        data = p.bounds()
    else:
        data = tuple(polytope_sort_key(q) for q in p.parts)
    return (dim(p), data)


@lru_cache(maxsize=None)
def faces(p: Polytope) -> tuple:
    """All nonempty faces of p, including p itself, in canonical order."""
    if isinstance(p, Interval):
        if p.lo == p.hi:
            return (p,)
        out = {p, Interval(p.lo, p.lo, p.mode), Interval(p.hi, p.hi, p.mode)}
    elif isinstance(p, Box):
        axis_options = []
        for a, b in zip(p.los, p.his):
            axis_options.append([(a, a)] if a == b else [(a, a), (b, b), (a, b)])
        out = {
            Box(tuple(x[0] for x in combo), tuple(x[1] for x in combo))
            for combo in itertools.product(*axis_options)
        }
    elif isinstance(p, GridSet):
        out = {p}
        if dim(p) > 0:
            for f in _grid_pinned(p):
                if f != p:
                    out.update(faces(f))
    elif isinstance(p, ProductPolytope):
        out = {
            ProductPolytope(combo)
            for combo in itertools.product(*(faces(q) for q in p.parts))
        }
    else:
        raise TypeError(f"not a polytope: {p!r}")
    return tuple(sorted(out, key=polytope_sort_key))


def vertices(p: Polytope) -> tuple:
    return tuple(f for f in faces(p) if dim(f) == 0)


def vertex_coords(p: Polytope):
    """Coordinate point of a 0-dimensional polytope."""
    if dim(p) != 0:
        raise ValueError("vertex_coords needs a 0-dimensional polytope")
    if isinstance(p, Interval):
        return p.lo
    if isinstance(p, Box):
        return tuple(Fraction(a) for a in p.los)
    if isinstance(p, GridSet):
        return (Fraction(p.u_min), Fraction(p.v_min))
    return tuple(vertex_coords(q) for q in p.parts)


def contains_point(p: Polytope, x) -> bool:
    """Exact membership of a point given in the ambient coordinates
    (Scalar on the line, Fraction pairs/tuples elsewhere)."""
    if isinstance(p, Interval):
        t = Scalar.of(x)
        return (t - p.lo).sign() >= 0 and (p.hi - t).sign() >= 0
    if isinstance(p, Box):
        return all(a <= xi <= b for a, b, xi in zip(p.los, p.his, x))
    if isinstance(p, GridSet):
        u, v = x
        return (p.u_min <= u <= p.u_max and p.v_min <= v <= p.v_max
                and p.s_min <= u + v <= p.s_max)
    if isinstance(p, ProductPolytope):
        return all(contains_point(q, xq) for q, xq in zip(p.parts, x))
    raise TypeError(f"not a polytope: {p!r}")


def contains_polytope(outer: Polytope, inner: Polytope) -> bool:
    _check_family(outer, inner)
    if isinstance(outer, Interval):
        return (inner.lo - outer.lo).sign() >= 0 and (outer.hi - inner.hi).sign() >= 0
    if isinstance(outer, Box):
        return all(oa <= ia and ib <= ob for oa, ob, ia, ib
                   in zip(outer.los, outer.his, inner.los, inner.his))
    if isinstance(outer, GridSet):
        return (outer.u_min <= inner.u_min and inner.u_max <= outer.u_max
                and outer.v_min <= inner.v_min and inner.v_max <= outer.v_max
                and outer.s_min <= inner.s_min and inner.s_max <= outer.s_max)
    return all(contains_polytope(o, i) for o, i in zip(outer.parts, inner.parts))


def intersect(a: Polytope, b: Polytope) -> Polytope:
    """Intersection within one family; raises EmptyRegionError when empty.

    Used as an independent membership oracle: x is in P + Q exactly when
    P meets x - Q.
    """
    _check_family(a, b)
    if isinstance(a, Interval):
        lo = a.lo if (a.lo - b.lo).sign() >= 0 else b.lo
        hi = a.hi if (b.hi - a.hi).sign() >= 0 else b.hi
        if (hi - lo).sign() < 0:
            raise EmptyRegionError("empty interval intersection")
        return Interval(lo, hi, a.mode)
    if isinstance(a, Box):
        los = tuple(max(x, y) for x, y in zip(a.los, b.los))
        his = tuple(min(x, y) for x, y in zip(a.his, b.his))
        if any(l > h for l, h in zip(los, his)):
            raise EmptyRegionError("empty box intersection")
        return Box(los, his)
    if isinstance(a, GridSet):
        return grid_set(max(a.u_min, b.u_min), min(a.u_max, b.u_max),
                        max(a.v_min, b.v_min), min(a.v_max, b.v_max),
                        max(a.s_min, b.s_min), min(a.s_max, b.s_max))
    return ProductPolytope(tuple(intersect(x, y) for x, y in zip(a.parts, b.parts)))


# ---------------------------------------------------------------------------
# canonical cells


@dataclass(frozen=True)
class GridVertex:
    u: int
    v: int


@dataclass(frozen=True)
class GridEdgeU:
    """Open unit edge from (u, v) to (u+1, v)."""

    u: int
    v: int


@dataclass(frozen=True)
class GridEdgeV:
    """Open unit edge from (u, v) to (u, v+1)."""

    u: int
    v: int


@dataclass(frozen=True)
class GridEdgeS:
    """Open unit edge from (u+1, v) to (u, v+1), on the line s = u+v+1."""

    u: int
    v: int


@dataclass(frozen=True)
class GridTriUp:
    """Open triangle with vertices (u, v), (u+1, v), (u, v+1)."""

    u: int
    v: int


@dataclass(frozen=True)
class GridTriDown:
    """Open triangle with vertices (u+1, v), (u, v+1), (u+1, v+1)."""

    u: int
    v: int


@dataclass(frozen=True)
class Point1D:
    at: Scalar


@dataclass(frozen=True)
class OpenInterval1D:
    lo: Scalar
    hi: Scalar

    def __post_init__(self):
        if (self.hi - self.lo).sign() <= 0:
            raise ValueError("open interval needs lo < hi")


@dataclass(frozen=True)
class BoxCell:
    """Per axis either the lattice point k or the open unit gap (k, k+1)."""

    axes: tuple  # of (k, is_open)


@dataclass(frozen=True)
class ProductCell:
    parts: tuple


Cell = Union[GridVertex, GridEdgeU, GridEdgeV, GridEdgeS, GridTriUp, GridTriDown,
             Point1D, OpenInterval1D, BoxCell, ProductCell]

_GRID_CELL_RANK = {GridVertex: 0, GridEdgeU: 1, GridEdgeV: 2, GridEdgeS: 3,
                   GridTriUp: 4, GridTriDown: 5}


def cell_dim(c: Cell) -> int:
    if isinstance(c, (GridVertex, Point1D)):
        return 0
    if isinstance(c, (GridEdgeU, GridEdgeV, GridEdgeS, OpenInterval1D)):
        return 1
    if isinstance(c, (GridTriUp, GridTriDown)):
        return 2
    if isinstance(c, BoxCell):
        return sum(1 for _, open_ in c.axes if open_)
    if isinstance(c, ProductCell):
        return sum(cell_dim(q) for q in c.parts)
    raise TypeError(f"not a cell: {c!r}")


def cell_sort_key(c: Cell):
    if isinstance(c, (GridVertex, GridEdgeU, GridEdgeV, GridEdgeS,
                      GridTriUp, GridTriDown)):
        return (cell_dim(c), _GRID_CELL_RANK[type(c)], c.u, c.v)
    if isinstance(c, Point1D):
        return (0, 0, c.at.p, c.at.q)
    if isinstance(c, OpenInterval1D):
        return (1, 1, c.lo.p, c.lo.q, c.hi.p, c.hi.q)
    if isinstance(c, BoxCell):
        return (cell_dim(c), 0, c.axes)
    if isinstance(c, ProductCell):
        return (cell_dim(c), 9, tuple(cell_sort_key(q) for q in c.parts))
    raise TypeError(f"not a cell: {c!r}")


def cell_closure(c: Cell, line_mode: str | None = None) -> Polytope:
    """The topological closure of a cell, as a family polytope.

    1-D cells carry no scalar-mode tag of their own, so the ambient's mode
    must be supplied to close them inside a sqrt2-mode line; otherwise the
    mode is inferred from the endpoint values.
    """
    if isinstance(c, GridVertex):
        return grid_point_set(c.u, c.v)
    if isinstance(c, GridEdgeU):
        return GridSet(c.u, c.u + 1, c.v, c.v, c.u + c.v, c.u + c.v + 1)
    if isinstance(c, GridEdgeV):
        return GridSet(c.u, c.u, c.v, c.v + 1, c.u + c.v, c.u + c.v + 1)
    if isinstance(c, GridEdgeS):
        return GridSet(c.u, c.u + 1, c.v, c.v + 1, c.u + c.v + 1, c.u + c.v + 1)
    if isinstance(c, GridTriUp):
        return GridSet(c.u, c.u + 1, c.v, c.v + 1, c.u + c.v, c.u + c.v + 1)
    if isinstance(c, GridTriDown):
        return GridSet(c.u, c.u + 1, c.v, c.v + 1, c.u + c.v + 1, c.u + c.v + 2)
    if isinstance(c, Point1D):
        return Interval(c.at, c.at, line_mode or _line_mode(c.at))
    if isinstance(c, OpenInterval1D):
        return Interval(c.lo, c.hi, line_mode or _line_mode(c.lo, c.hi))
    if isinstance(c, BoxCell):
        return Box(tuple(k for k, _ in c.axes),
                   tuple(k + 1 if open_ else k for k, open_ in c.axes))
    if isinstance(c, ProductCell):
        return ProductPolytope(tuple(cell_closure(q) for q in c.parts))
    raise TypeError(f"not a cell: {c!r}")


def _line_mode(*xs: Scalar) -> str:
    return "rational" if all(x.is_rational for x in xs) else "sqrt2"


def cell_representative(c: Cell):
    """One exact point in the relative interior of the cell."""
    third, two_thirds, half = Fraction(1, 3), Fraction(2, 3), Fraction(1, 2)
    if isinstance(c, GridVertex):
        return (Fraction(c.u), Fraction(c.v))
    if isinstance(c, GridEdgeU):
        return (c.u + half, Fraction(c.v))
    if isinstance(c, GridEdgeV):
        return (Fraction(c.u), c.v + half)
    if isinstance(c, GridEdgeS):
        return (c.u + half, c.v + half)
    if isinstance(c, GridTriUp):
        return (c.u + third, c.v + third)
    if isinstance(c, GridTriDown):
        return (c.u + two_thirds, c.v + two_thirds)
    if isinstance(c, Point1D):
        return c.at
    if isinstance(c, OpenInterval1D):
        return (c.lo + c.hi) / 2
    if isinstance(c, BoxCell):
        return tuple(k + half if open_ else Fraction(k) for k, open_ in c.axes)
    if isinstance(c, ProductCell):
        return tuple(cell_representative(q) for q in c.parts)
    raise TypeError(f"not a cell: {c!r}")


def cell_contains(c: Cell, x) -> bool:
    if isinstance(c, GridVertex):
        return x[0] == c.u and x[1] == c.v
    if isinstance(c, GridEdgeU):
        return x[1] == c.v and c.u < x[0] < c.u + 1
    if isinstance(c, GridEdgeV):
        return x[0] == c.u and c.v < x[1] < c.v + 1
    if isinstance(c, GridEdgeS):
        return x[0] + x[1] == c.u + c.v + 1 and c.u < x[0] < c.u + 1
    if isinstance(c, GridTriUp):
        return x[0] > c.u and x[1] > c.v and x[0] + x[1] < c.u + c.v + 1
    if isinstance(c, GridTriDown):
        return x[0] < c.u + 1 and x[1] < c.v + 1 and x[0] + x[1] > c.u + c.v + 1
    if isinstance(c, Point1D):
        return Scalar.of(x) == c.at
    if isinstance(c, OpenInterval1D):
        t = Scalar.of(x)
        return (t - c.lo).sign() > 0 and (c.hi - t).sign() > 0
    if isinstance(c, BoxCell):
        for (k, open_), xi in zip(c.axes, x):
            if open_:
                if not (k < xi < k + 1):
                    return False
            elif xi != k:
                return False
        return True
    if isinstance(c, ProductCell):
        return all(cell_contains(q, xq) for q, xq in zip(c.parts, x))
    raise TypeError(f"not a cell: {c!r}")


# ---------------------------------------------------------------------------
# canonical decomposition into cells


def _grid_cells(g: GridSet) -> list:
    cells = []
    for u in range(g.u_min, g.u_max + 1):
        for v in range(g.v_min, g.v_max + 1):
            if g.s_min <= u + v <= g.s_max:
                cells.append(GridVertex(u, v))
    for u in range(g.u_min, g.u_max):
        for v in range(g.v_min, g.v_max + 1):
            if g.s_min <= u + v and u + v + 1 <= g.s_max:
                cells.append(GridEdgeU(u, v))
    for u in range(g.u_min, g.u_max + 1):
        for v in range(g.v_min, g.v_max):
            if g.s_min <= u + v and u + v + 1 <= g.s_max:
                cells.append(GridEdgeV(u, v))
    for u in range(g.u_min, g.u_max):
        for v in range(g.v_min, g.v_max):
            if g.s_min <= u + v + 1 <= g.s_max:
                cells.append(GridEdgeS(u, v))
            if g.s_min <= u + v and u + v + 1 <= g.s_max:
                cells.append(GridTriUp(u, v))
            if g.s_min <= u + v + 1 and u + v + 2 <= g.s_max:
                cells.append(GridTriDown(u, v))
    return cells


@lru_cache(maxsize=None)
def decompose_cells(p: Polytope) -> tuple:
    """Disjoint canonical cells whose union is exactly p."""
    if isinstance(p, Interval):
        if p.lo == p.hi:
            return (Point1D(p.lo),)
        return (Point1D(p.lo), OpenInterval1D(p.lo, p.hi), Point1D(p.hi))
    if isinstance(p, Box):
        axis_cells = []
        for a, b in zip(p.los, p.his):
            opts = []
            for k in range(a, b + 1):
                opts.append((k, False))
                if k < b:
                    opts.append((k, True))
            axis_cells.append(opts)
        return tuple(BoxCell(combo) for combo in itertools.product(*axis_cells))
    if isinstance(p, GridSet):
        return tuple(_grid_cells(p))
    if isinstance(p, ProductPolytope):
        return tuple(
            ProductCell(combo)
            for combo in itertools.product(*(decompose_cells(q) for q in p.parts))
        )
    raise TypeError(f"not a polytope: {p!r}")
