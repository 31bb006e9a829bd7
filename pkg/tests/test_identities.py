import itertools

import pytest

import minkring.geometry as geo
import minkring.identities as ids
from minkring.cli import parse_poly
from minkring.laurent import LaurentPoly

TRI = geo.unit_triangle()
O = geo.grid_point_set(0, 0)
A = geo.grid_point_set(1, 0)
B = geo.grid_point_set(0, 1)
OA = geo.grid_set(0, 1, 0, 0, 0, 1)
OB = geo.grid_set(0, 0, 0, 1, 0, 1)
AB = geo.grid_set(0, 1, 0, 1, 1, 1)


def test_cover_spec_validation():
    ids.cover(TRI, [OA, B])
    ids.cover(TRI, [TRI])  # the polytope itself is allowed
    with pytest.raises(ValueError):
        ids.cover(TRI, [OA, OA])
    with pytest.raises(ValueError):
        ids.cover(TRI, [geo.grid_set(0, 2, 0, 0, 0, 2)])


def test_id_expand_examples():
    assert ids.id_expand(ids.cover(TRI, [OA, B])) == parse_poly("(z - y1)*(z - x2)")
    seg = geo.interval(1, 3)
    endpoints = [geo.line_point(1), geo.line_point(3)]
    assert ids.id_expand(ids.cover(seg, endpoints)) == parse_poly("(z - x)*(z - y)")
    assert ids.id_expand(ids.cover(TRI, [])) == LaurentPoly.const(1)
    assert ids.id_expand(ids.cover(TRI, [O, A, B])) == parse_poly(
        "(z - 1)*(z - x1)*(z - x2)")


def test_id_expand_box():
    square = geo.box((0, 0), (1, 1))
    corners = [geo.box_point(c) for c in ((0, 0), (1, 0), (0, 1), (1, 1))]
    poly = ids.id_expand(ids.cover(square, corners))
    expected = parse_poly(
        "(y1*y2 - 1)*(y1*y2 - x1)*(y1*y2 - x2)*(y1*y2 - x1*x2)")
    assert poly == expected


def test_covers_vertices():
    assert ids.covers_vertices(ids.cover(TRI, [OA, B]))
    assert not ids.covers_vertices(ids.cover(TRI, [OA]))
    square = geo.box((0, 0), (1, 1))
    bottom, top = geo.box((0, 0), (1, 0)), geo.box((0, 1), (1, 1))
    assert ids.covers_vertices(ids.cover(square, [bottom, top]))
    assert not ids.covers_vertices(ids.cover(square, [bottom]))


def test_id_holds_examples():
    assert ids.id_holds(ids.cover(TRI, [O, A, B]))
    assert not ids.id_holds(ids.cover(TRI, [AB]))
    square = geo.box((0, 0), (1, 1))
    corners = [geo.box_point(c) for c in ((0, 0), (1, 0), (0, 1), (1, 1))]
    assert ids.id_holds(ids.cover(square, corners))
    # degenerate: the polytope among the factors forces a zero product
    assert ids.id_holds(ids.cover(TRI, [TRI]))


def test_id_holds_matches_kernel_oracle():
    for faces in ([OA, B], [AB], [O, A, B], [OA, OB], [AB, OB]):
        spec = ids.cover(TRI, faces)
        pres, poly, _ = ids.id_context(spec)
        assert pres.kernel_member(poly) == ids.id_holds(spec)


def test_id_context_anchors_translated_polytopes():
    moved = geo.translate(TRI, (3, 5))
    spec = ids.cover(moved, [geo.translate(OA, (3, 5)), geo.translate(B, (3, 5))])
    pres, poly, offset = ids.id_context(spec)
    assert offset == (-3, -5)
    assert poly == parse_poly("(z - y1)*(z - x2)")
    assert ids.id_holds(spec)


def test_covers_relation():
    a = ids.cover(TRI, (OA, B))
    b = ids.cover(TRI, (O, A, B))
    assert ids.covers_relation(a, b)
    assert not ids.covers_relation(b, a)
    assert not ids.covers_relation(a, a)
    with pytest.raises(ids.AntichainError):
        ids.covers_relation(ids.cover(TRI, (TRI,)), a)
    with pytest.raises(ids.AntichainError):
        ids.covers_relation(ids.cover(TRI, (OA, A)), a)


def test_covers_relation_grows():
    pool = []
    proper = [f for f in geo.faces(TRI) if f != TRI]
    for r in range(1, len(proper) + 1):
        for combo in itertools.combinations(proper, r):
            if ids._is_antichain(combo):
                spec = ids.cover(TRI, combo)
                if ids.covers_vertices(spec):
                    pool.append(spec)
    for x in pool:
        for y in pool:
            if x is y:
                continue
            if ids.covers_relation(x, y):
                assert len(y.faces) >= len(x.faces)
                # implication: both identities hold for vertex covers
                assert ids.id_holds(x) and ids.id_holds(y)


def test_minimal_antichains_triangle():
    minimal = ids.minimal_antichains(TRI)
    got = {frozenset(spec.faces) for spec in minimal}
    assert got == {
        frozenset({O, AB}), frozenset({A, OB}), frozenset({B, OA}),
        frozenset({OA, OB}), frozenset({OA, AB}), frozenset({OB, AB}),
    }
    assert frozenset({O, A, B}) not in got


def test_minimal_antichains_interval():
    seg = geo.interval(0, 1)
    minimal = ids.minimal_antichains(seg)
    assert len(minimal) == 1
    assert set(minimal[0].faces) == {geo.line_point(0), geo.line_point(1)}


def test_minimal_antichains_bound():
    with pytest.raises(ValueError):
        ids.minimal_antichains(geo.box((0, 0, 0), (1, 1, 1)))
