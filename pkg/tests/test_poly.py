import pytest
from hypothesis import given, settings, strategies as st

from npcurves.errors import ParseError
from npcurves.ffield import make_field
from npcurves.poly import RationalFunction, parse_expression, parse_poly, pdivmod, peval, pgcd, pmul, trim

F7 = make_field(7, 1)
F9 = make_field(3, 2)

polys = st.lists(st.integers(0, 6), max_size=6).map(trim)


@settings(max_examples=100, deadline=None)
@given(polys, polys.filter(bool))
def test_division_identity(a, b):
    q, r = pdivmod(F7, a, b)
    for x in range(7):
        assert peval(F7, a, x) == (peval(F7, q, x) * peval(F7, b, x) + peval(F7, r, x)) % 7
    assert len(r) < len(b)


@settings(max_examples=100, deadline=None)
@given(polys.filter(bool), polys.filter(bool), polys.filter(bool))
def test_gcd_divides(a, b, c):
    g = pgcd(F7, pmul(F7, a, c), pmul(F7, b, c))
    assert not pdivmod(F7, pmul(F7, a, c), g)[1]
    assert not pdivmod(F7, pmul(F7, b, c), g)[1]
    # c divides both products, so it divides their gcd
    assert not pdivmod(F7, g, c)[1]


def test_rational_normal_form():
    f = parse_expression("(x^2-1)/(2*x-2)", F7)
    assert f == RationalFunction.make(F7, [4, 4])  # (x+1)/2 = 4x + 4
    assert f.is_polynomial and not f.is_constant
    g = parse_expression("1/x + 1/x", F7)
    assert g.num == (2,) and g.den == (0, 1)
    assert str(parse_expression("x^-2", F7)) == "(1)/(x^2)"


def test_parser_features():
    assert parse_poly("t*x^2 + 2x + 1", F9) == parse_poly("1 + 2*x + t*x**2", F9)
    assert parse_expression("(t+1)^2", F9, allow_x=False).as_constant().code == F9.mul(F9.add(3, 1), F9.add(3, 1))
    assert parse_expression("-x", F7) == RationalFunction.make(F7, [0, 6])


@pytest.mark.parametrize("bad", ["", "x+", "(x", "x^y", "1/0", "x $ 2", "0^-1"])
def test_parser_errors(bad):
    with pytest.raises(ParseError):
        parse_expression(bad, F7)
