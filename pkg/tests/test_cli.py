import io
import random
from fractions import Fraction
from pathlib import Path

import pytest

from minkring.cli import (ParseError, main, parse_gridset, parse_poly,
                          parse_scalar)
from minkring.laurent import LaurentPoly
from minkring.scalars import Scalar

GOLDEN = Path(__file__).parent / "golden"


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


# -- parser --------------------------------------------------------------------


def test_parse_worked_examples():
    f = parse_poly("y1^2*y2^2 - z^2 + x1*(z - y2) + x2*(z - y1)")
    assert len(f.terms) == 6
    assert f == parse_poly("y1^2*y2^2") - parse_poly("z^2") + \
        parse_poly("x1*z") - parse_poly("x1*y2") + parse_poly("x2*z") - \
        parse_poly("x2*y1")
    assert parse_poly("1") == LaurentPoly.const(1)
    g = parse_poly("x1*x2*z^-1 + x2*y1 + x1*y2 + y3 - x1 - x2 - x1*x2")
    assert len(g.terms) == 7


def test_parse_coefficients_and_implicit_multiplication():
    assert parse_poly("3/2*x") == LaurentPoly.term({"x": 1}, Fraction(3, 2))
    assert parse_poly("2 x y") == LaurentPoly.term({"x": 1, "y": 1}, 2)
    assert parse_poly("(x - 1)(x + 1)") == parse_poly("x^2 - 1")
    assert parse_poly("(x*y)^-2") == LaurentPoly.term({"x": -2, "y": -2})
    assert parse_poly("x^0") == LaurentPoly.const(1)


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_poly("x + ")
    assert err.value.pos == 4
    with pytest.raises(ParseError):
        parse_poly("x^y")
    with pytest.raises(ParseError):
        parse_poly("(x + 1")
    with pytest.raises(ParseError):
        parse_poly("x $ y")
    with pytest.raises(ParseError):
        parse_poly("(x + 1)^-1")
    with pytest.raises(ParseError):
        parse_poly("q + 1", names={"x", "y"})


def test_roundtrip_randomized():
    rng = random.Random(7)
    names = ["x1", "x2", "y1", "y2", "y3", "z"]
    for _ in range(300):
        poly = LaurentPoly.zero()
        for _ in range(rng.randint(0, 5)):
            exps = {rng.choice(names): rng.randint(-3, 3)
                    for _ in range(rng.randint(0, 3))}
            poly = poly + LaurentPoly.term(
                exps, Fraction(rng.randint(-6, 6), rng.randint(1, 4)))
        assert parse_poly(poly.to_text()) == poly


def test_parse_scalar():
    assert parse_scalar("2") == Scalar.of(2)
    assert parse_scalar("-1/2") == Scalar.of(Fraction(-1, 2))
    assert parse_scalar("sqrt2") == Scalar.sqrt2()
    assert parse_scalar("1+sqrt2") == Scalar.of(1) + Scalar.sqrt2()
    assert parse_scalar("3/2*sqrt2") == Scalar.sqrt2(Fraction(3, 2))
    assert parse_scalar("1-2sqrt2") == Scalar.of(1) - Scalar.sqrt2(2)
    with pytest.raises(ValueError):
        parse_scalar("sqrt3")


def test_parse_gridset():
    g = parse_gridset("u:0..1,v:0..1,s:0..2")
    assert g.bounds() == (0, 1, 0, 1, 0, 2)
    with pytest.raises(ValueError):
        parse_gridset("u:0..1")


# -- golden reports --------------------------------------------------------------


@pytest.mark.parametrize("fname,argv", [
    ("member_g1.txt", ["member", "--ring", "coxeter", "(y1-1)*(y1-x1)"]),
    ("member_x1.txt", ["member", "--ring", "coxeter", "x1"]),
    ("identity_triangle.txt",
     ["identity", "--polytope", "triangle", "--cover", "edge:OA,vertex:B"]),
])
def test_golden_reports(fname, argv):
    code, text = run(argv)
    assert code == 0
    assert text.encode() == (GOLDEN / fname).read_bytes()


# -- verbs -------------------------------------------------------------------------


def test_member_exit_status_is_zero_for_false():
    code, text = run(["member", "--ring", "coxeter", "x1"])
    assert code == 0
    assert "result: false" in text


def test_member_interval_ring():
    code, text = run(["member", "--ring", "interval:1,sqrt2:laurent",
                      "(z-x)*(z-y)"])
    assert code == 0 and "result: true" in text
    code, text = run(["member", "--ring", "interval:1,2", "y - x^2"])
    assert code == 0 and "result: true" in text


def test_member_errors_exit_nonzero(capsys):
    assert main(["member", "--ring", "coxeter", "q + 1"], io.StringIO()) == 1
    assert main(["member", "--ring", "nope", "x"], io.StringIO()) == 1
    assert main(["member", "--ring", "box:1", "y^-1"], io.StringIO()) == 1
    capsys.readouterr()


def test_euler_verb():
    code, text = run(["euler", "--ring", "coxeter", "z + y1"])
    assert code == 0
    assert "euler: 2" in text


def test_normalize_verb():
    code, text = run(["normalize", "--gridset", "u:0..1,v:0..1,s:0..2"])
    assert code == 0
    assert "params: N=2 n1=1 n2=1 n3=0 m1=1 m2=1 m3=0" in text
    assert "verified: true" in text
    assert ("second-open: 1 + x2 + x1 + x1*x2 + y1o + x2*y1o + y2o + x1*y2o"
            " + y3o + zo + x1*x2*z^-1") in text


def test_tile_verb():
    code, text = run(["tile", "--axis", "z", "--n", "2"])
    assert code == 0 and "verified: true" in text
    code, text = run(["tile", "--axis", "y", "--n", "3"])
    assert code == 0 and "verified: true" in text


def test_minimal_covers_verb():
    code, text = run(["minimal-covers", "--polytope", "triangle"])
    assert code == 0
    assert "count: 6" in text
    assert "cover: edge:OA, vertex:B" in text
    code, text = run(["minimal-covers", "--polytope", "interval:0,1"])
    assert code == 0 and "count: 1" in text


def test_product_verb():
    code, text = run(["product", "--left", "d1", "--right", "d2",
                      "--samples", "5"])
    assert code == 0
    assert "declared-kernel: true" in text
    assert "tensor-identity: true" in text
    assert "mapping: z -> z_r" in text
    assert "doc: minkring-presentation v1" in text


def test_classify_verb():
    code, text = run(["classify", "--ring", "principal:empty"])
    assert code == 0 and "ideal: x" in text
    code, text = run(["classify", "--ring", "principal:self-similar:laurent"])
    assert code == 0 and "ideal: x - 1" in text
    code, text = run(["classify", "--ring", "principal:bounded"])
    assert code == 0 and "ideal: 0" in text


def test_text_format():
    code, text = run(["member", "--ring", "coxeter", "x1", "--format", "text"])
    assert code == 0
    assert "not in the kernel" in text


def test_member_reads_stdin(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("(z-1)*(z-y3)\n"))
    code, text = run(["member", "--ring", "coxeter", "-"])
    assert code == 0
    assert "result: true" in text


def test_member_product_ring_selector():
    code, text = run(["member", "--ring", "product:d1,d1", "(y_r-1)*(y_r-x_r)"])
    assert code == 0
    assert "result: true" in text
