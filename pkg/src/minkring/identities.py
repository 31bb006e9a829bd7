"""Face-cover identities of a single polytope.

For a polytope P and a set C of its faces, the product of the differences
[P] - [F] over F in C vanishes in the ring of simple functions exactly when
C covers every vertex of P.  This module expands such products, verifies
them through the semantic oracle, decides the cover criterion, implements
the replacement relation on antichains of faces (swap one face for a set of
its own faces covering its vertices), and enumerates the antichain covers
that are minimal in the resulting order; those yield the defining
identities.

Kernel checks embed the polytope with one vertex anchored at the origin,
since kernels of translated polytopes differ; the anchor is reported next
to every result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import geometry as geo
from . import simplefn as sf
from .geometry import Polytope
from .laurent import LaurentPoly
from .presentations import Presentation, box_ring, coxeter_ring, interval_ring
from .rewriting import first_normal_form


class AntichainError(ValueError):
    """A face set violates the antichain requirement."""


@dataclass(frozen=True)
class CoverSpec:
    """A polytope with a duplicate-free list of its faces.

    The polytope itself may appear among the faces; the identity product
    then contains a zero factor and holds degenerately.
    """

    polytope: Polytope
    faces: tuple

    def __post_init__(self):
        pool = set(geo.faces(self.polytope))
        seen = set()
        for f in self.faces:
            if f not in pool:
                raise ValueError(f"{f} is not a face of {self.polytope}")
            if f in seen:
                raise ValueError(f"duplicate face {f}")
            seen.add(f)


def cover(polytope: Polytope, faces) -> CoverSpec:
    return CoverSpec(polytope, tuple(faces))


def covers_vertices(c: CoverSpec) -> bool:
    """True when every vertex of the polytope lies in some listed face."""
    for v in geo.vertices(c.polytope):
        point = geo.vertex_coords(v)
        if not any(geo.contains_point(f, point) for f in c.faces):
            return False
    return True


def _anchor_offset(p: Polytope):
    v = min(geo.vertices(p), key=geo.polytope_sort_key)
    if isinstance(p, geo.Interval):
        return -v.lo
    if isinstance(p, geo.Box):
        return tuple(-a for a in v.los)
    if isinstance(p, geo.GridSet):
        return (-v.u_min, -v.v_min)
    raise ValueError(f"no anchored embedding for {type(p).__name__}")


def anchored(c: CoverSpec) -> tuple:
    """Translate the polytope so one vertex sits at the origin; returns the
    anchored cover and the applied offset."""
    off = _anchor_offset(c.polytope)
    moved = CoverSpec(geo.translate(c.polytope, off),
                      tuple(geo.translate(f, off) for f in c.faces))
    return moved, off


def id_holds(c: CoverSpec) -> bool:
    """Semantic truth of the identity: the expanded product of the
    indicator differences is the zero function."""
    p = c.polytope
    fn = sf.unit(geo.ambient_of(p))
    for face in c.faces:
        fn = sf.multiply_by_indicator(fn, p) - sf.multiply_by_indicator(fn, face)
        if sf.is_zero(fn):
            return True
    return sf.is_zero(fn)


def _face_poly(face: Polytope) -> LaurentPoly:
    """Laurent preimage of a face in the family presentation (anchored
    coordinates assumed)."""
    if isinstance(face, geo.GridSet):
        return first_normal_form(face)[1]
    if isinstance(face, geo.Box):
        d = len(face.los)
        out = LaurentPoly.const(1)
        for i, (a, b) in enumerate(zip(face.los, face.his)):
            xn = "x" if d == 1 else f"x{i + 1}"
            yn = "y" if d == 1 else f"y{i + 1}"
            out = out * LaurentPoly.term({xn: a, yn: b - a})
        return out
    raise TypeError(f"no face polynomial for {type(face).__name__}")


def id_context(c: CoverSpec) -> tuple:
    """(presentation, expanded product, anchor offset) for an identity.

    The product expands over the family presentation of the anchored
    polytope: grid polygons through their first normal forms, boxes
    through their face monomials, intervals through the x, y, z naming.
    """
    ac, off = anchored(c)
    p = ac.polytope
    if isinstance(p, geo.GridSet):
        pres = coxeter_ring()
        p_poly = _face_poly(p)
        face_polys = [_face_poly(f) for f in ac.faces]
    elif isinstance(p, geo.Box):
        pres = box_ring(len(p.los), signed=True)
        p_poly = _face_poly(p)
        face_polys = [_face_poly(f) for f in ac.faces]
    elif isinstance(p, geo.Interval):
        if p.lo == p.hi:
            sym = {p: LaurentPoly.var("x")}
        else:
            sym = {p: LaurentPoly.var("z"),
                   geo.Interval(p.lo, p.lo, p.mode): LaurentPoly.var("x"),
                   geo.Interval(p.hi, p.hi, p.mode): LaurentPoly.var("y")}
            pres = interval_ring(p.lo, p.hi, mode="laurent", naming="xyz")
        p_poly = sym[p]
        face_polys = [sym[f] for f in ac.faces]
        if p.lo == p.hi:
            pres = None
    else:
        raise TypeError(f"id_context does not support {type(p).__name__}")
    product = LaurentPoly.const(1)
    for fp in face_polys:
        product = product * (p_poly - fp)
    return pres, product, off


def id_expand(c: CoverSpec) -> LaurentPoly:
    """The expanded identity product; the empty cover gives 1."""
    return id_context(c)[1]


def _is_antichain(faces) -> bool:
    for f, g in combinations(faces, 2):
        if geo.contains_polytope(f, g) or geo.contains_polytope(g, f):
            return False
    return True


def _check_poset_member(c: CoverSpec) -> None:
    if c.polytope in c.faces:
        raise AntichainError("the polytope itself is not allowed in antichains")
    if not _is_antichain(c.faces):
        raise AntichainError(f"faces are not an antichain: {c.faces}")


def covers_relation(a: CoverSpec, b: CoverSpec) -> bool:
    """True when b arises from a by swapping one face A for a set of faces
    of A that covers the vertices of A (the identity swap is excluded)."""
    if a.polytope != b.polytope:
        raise ValueError("covers_relation needs a common polytope")
    _check_poset_member(a)
    _check_poset_member(b)
    sa, sb = set(a.faces), set(b.faces)
    if sa == sb:
        return False
    for swapped in sa:
        if swapped in sb:
            continue
        rest = sa - {swapped}
        if not rest <= sb:
            continue
        introduced = sb - rest
        sub_faces = set(geo.faces(swapped))
        if not introduced <= sub_faces:
            continue
        replacement = {f for f in sb if f in sub_faces}
        if covers_vertices(CoverSpec(swapped, tuple(replacement))):
            return True
    return False


def minimal_antichains(p: Polytope) -> list:
    """All antichains of proper faces covering the vertices of p that are
    minimal in the order generated by the swap relation together with
    inclusion; these give the defining identities."""
    all_faces = geo.faces(p)
    if len(all_faces) > 12:
        raise ValueError(f"face count {len(all_faces)} exceeds the bound 12")
    proper = [f for f in all_faces if f != p]
    pool = []
    for r in range(1, len(proper) + 1):
        for combo in combinations(proper, r):
            if _is_antichain(combo):
                spec = CoverSpec(p, combo)
                if covers_vertices(spec):
                    pool.append(spec)
    n = len(pool)
    sets = [set(s.faces) for s in pool]
    below = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if sets[i] < sets[j] or covers_relation(pool[i], pool[j]):
                below[i][j] = True
    # reflexive-transitive closure
    for k in range(n):
        for i in range(n):
            if below[i][k]:
                row_k = below[k]
                row_i = below[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    minimal = [pool[j] for j in range(n)
               if not any(below[i][j] for i in range(n) if i != j)]
    minimal.sort(key=lambda s: (len(s.faces),
                                tuple(geo.polytope_sort_key(f) for f in s.faces)))
    return minimal
