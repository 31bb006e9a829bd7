import random

import pytest

import minkring.geometry as geo
from minkring.cli import parse_poly
from minkring.laurent import LaurentPoly
from minkring.presentations import box_ring, coxeter_ring, point_ring
from minkring.products import (product_presentation, psi_split,
                               random_ideal_element, rename_poly,
                               verify_tensor_identity)


def d1():
    return box_ring(1, signed=True)


def test_segment_times_segment_is_the_2_box():
    pp = product_presentation(d1(), d1())
    assert pp.combined.names() == ("x", "y", "x_r", "y_r")
    assert [g.to_text() for g in pp.combined.declared] == [
        "y^2 - x*y - y + x", "y_r^2 - x_r*y_r - y_r + x_r"]
    for g in pp.combined.declared:
        assert pp.combined.kernel_member(g)
    # the pair monomial x*y_r is the face {1} x [0,1] of the square
    img = pp.combined.phi(parse_poly("x*y_r", pp.combined.names()))
    expected = geo.product(geo.box_point((1,)), geo.box((0,), (1,)))
    import minkring.simplefn as sf
    assert img == sf.indicator(expected)


def test_product_with_point_keeps_the_ring():
    pp = product_presentation(coxeter_ring(), point_ring())
    assert pp.right_rename == {"u": "u_r"}
    assert pp.combined.kernel_member(parse_poly("u_r - 1"))
    for g in coxeter_ring().declared:
        assert pp.combined.kernel_member(g)


def test_face_count_multiplies():
    prism = geo.product(geo.unit_triangle(), geo.box((0,), (1,)))
    assert len(geo.faces(prism)) == len(geo.faces(geo.unit_triangle())) * \
        len(geo.faces(geo.box((0,), (1,))))


def test_segment_times_triangle_ten_generators():
    pp = product_presentation(d1(), coxeter_ring())
    texts = {g.to_text() for g in pp.combined.declared}
    expected = {
        "y^2 - x*y - y + x",
        "y1_r^2 - x1_r*y1_r - y1_r + x1_r",
        "y2_r^2 - x2_r*y2_r - y2_r + x2_r",
        "y3_r^2 - x2_r*y3_r - x1_r*y3_r + x1_r*x2_r",
        "z_r^2 - y3_r*z_r - z_r + y3_r",
        "z_r^2 - y2_r*z_r - x1_r*z_r + x1_r*y2_r",
        "z_r^2 - y1_r*z_r - x2_r*z_r + x2_r*y1_r",
        "z_r^2 - y2_r*z_r - y1_r*z_r + y1_r*y2_r",
        "z_r^2 - y3_r*z_r - y1_r*z_r + y1_r*y3_r",
        "z_r^2 - y3_r*z_r - y2_r*z_r + y2_r*y3_r",
    }
    assert texts == expected
    assert len(pp.combined.declared) == 10
    for g in pp.combined.declared:
        assert pp.combined.kernel_member(g)


def test_prism_declared_ideal_is_base_plus_one_relation():
    pp = product_presentation(coxeter_ring(), d1())
    base = list(coxeter_ring().declared)
    extra = rename_poly(d1().declared[0], {"x": "x_r", "y": "y_r"})
    assert list(pp.combined.declared) == base + [extra]
    for g in pp.combined.declared:
        assert pp.combined.kernel_member(g)


def test_psi_split_examples():
    f = parse_poly("x^2*y_r^3")
    l, r = psi_split(f, ["x", "y"], ["x_r", "y_r"])
    assert l == parse_poly("x^2") and r == parse_poly("y_r^3")
    pp = product_presentation(d1(), d1())
    sample = parse_poly("(y - 1)*(y - x)*y_r^2 + 3*(y_r - 1)*(y_r - x_r)")
    fl, fr = pp.split(sample)
    assert pp.left.kernel_member(fl)
    assert pp.right.kernel_member(fr)
    ones = {n: 1 for n in pp.combined.names()}
    assert sample.substitute(ones).is_zero()


def test_tensor_identity():
    pp = product_presentation(d1(), d1())
    assert verify_tensor_identity(pp, bound=0, samples=4)
    assert verify_tensor_identity(pp, bound=2, samples=10)


def test_random_ideal_elements_are_kernel_members(rng):
    pp = product_presentation(d1(), d1())
    for _ in range(10):
        f = random_ideal_element(pp, rng)
        assert pp.combined.kernel_member(f)


def test_mixed_mode_rejected():
    with pytest.raises(ValueError):
        product_presentation(box_ring(1), d1())
