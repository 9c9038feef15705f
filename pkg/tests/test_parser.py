import random
from fractions import Fraction

import pytest

from tamewild.algebra.context import XYZ, Z2
from tamewild.algebra.cring import det
from tamewild.algebra.napoly import NaPoly
from tamewild.algebra.ncpoly import NcPoly
from tamewild.algebra.parser import Mode, format_matrix, parse_endo, parse_matrix, parse_na_endo, parse_poly
from tamewild.core.errors import MissingImage, ParseError, ResourceLimit, UnknownVariable
from tamewild.core.settings import override_settings
from tests.helpers import na, nc, random_ncpoly

x, y, z = (NcPoly.var(XYZ, n) for n in "xyz")


def test_anick_coordinate_literal():
    assert nc("x + z*(x*z - z*y)") == x + z * x * z - z * z * y


def test_zero_literal():
    assert nc("0").is_zero()
    assert str(nc("0")) == "0"


def test_commutator_sugar_and_powers():
    c = x * y - y * x
    assert nc("[x,y]^2") == c * c
    assert nc("x^0") == 1


def test_rational_literals():
    assert nc("3/2*x - 1/3") == x.scale(Fraction(3, 2)) - Fraction(1, 3)


def test_printer_roundtrip_on_random_polynomials():
    rng = random.Random(3)
    for _ in range(500):
        f = random_ncpoly(rng)
        assert nc(str(f)) == f


def test_printer_is_canonical():
    assert str(nc("y*x + x - 2 + x")) == "-2 + 2*x + y*x"


@pytest.mark.parametrize("text", ["x +", "x y", "(x", "x ^ y", "1/0", "2 $ x", ""])
def test_syntax_errors_carry_a_position(text):
    with pytest.raises(ParseError) as exc:
        nc(text)
    assert exc.value.position is not None


def test_unknown_variable():
    with pytest.raises(UnknownVariable):
        nc("x + w")


def test_commutative_mode():
    p = parse_poly("z2*z1 - z1*z2", Z2, Mode.COMMUTATIVE)
    assert p.is_zero()


def test_nonassociative_mode_requires_parentheses():
    assert na("(x*y)*z") != na("x*(y*z)")
    assert na("2*x*y") == na("x*y").scale(2)
    with pytest.raises(ParseError):
        na("x*y*z")
    with pytest.raises(ParseError):
        na("x^2")


def test_nonassociative_roundtrip():
    f = na("3*((x*y)*z) - x*(y*z) + (z*z)*(x*x)")
    assert isinstance(f, NaPoly)
    assert na(str(f)) == f


def test_endomorphism_literal():
    phi = parse_endo("x + z*y ; y ; z", XYZ)
    assert phi.image("x") == x + z * y
    assert str(phi) == "x + z*y ; y ; z"
    with pytest.raises(MissingImage):
        parse_endo("x ; y", XYZ)


def test_endomorphism_error_position_is_absolute():
    text = "x ; y + ; z"
    with pytest.raises(ParseError) as exc:
        parse_endo(text, XYZ)
    start, _ = exc.value.position
    assert text[start] == ";"


def test_nonassociative_endomorphism_literal():
    psi = parse_na_endo("x + (y*y) ; y ; z", XYZ)
    assert psi.image("x") == na("x + y*y")


def test_matrix_literal():
    m = parse_matrix("[[1+z1*z2, z2^2],[-z1^2, 1-z1*z2]]", Z2)
    assert det(m) == 1
    assert parse_matrix(format_matrix(m), Z2) == m
    with pytest.raises(ParseError):
        parse_matrix("[1, 2]", Z2)


@pytest.mark.parametrize("mode, text", [(Mode.ASSOCIATIVE, "(x + y)^100000"), (Mode.COMMUTATIVE, "(z1*z2)^5")])
def test_powers_beyond_the_degree_limit_are_refused_before_expansion(mode, text):
    ctx = Z2 if mode is Mode.COMMUTATIVE else XYZ
    with pytest.raises(ResourceLimit, match="MAX_DEGREE 8"):
        parse_poly(text, ctx, mode)


def test_power_limit_follows_settings():
    override_settings(MAX_DEGREE=12)
    assert parse_poly("(z1*z2)^5", Z2, Mode.COMMUTATIVE).degree() == 10
    assert parse_poly("3^20", XYZ).constant_term() == 3**20
