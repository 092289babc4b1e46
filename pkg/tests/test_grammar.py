from fractions import Fraction

import pytest

from semival.grammar import (
    ParseError,
    parse_content_polynomial,
    parse_element,
    parse_ideal,
)
from semival.ideals import IntervalIdeal
from semival.instances import get_instance
from semival.reports import SampleSpec
from semival.sampling import stream


def test_polynomial_parsing():
    poly = get_instance("poly(nat)")
    e = parse_element("3*X^2 + X", poly)
    assert e.payload == ((1, 1), (2, 3))
    assert parse_element("0", poly) == poly.zero
    assert parse_element("(1+X)*(1+X)", poly) == \
        poly.mul(poly.add(poly.one, poly.indeterminate()),
                 poly.add(poly.one, poly.indeterminate()))


def test_fraction_parsing():
    frq = get_instance("fractions(qnn)")
    e = parse_element("(50)/(3)", frq)
    assert e.payload == (Fraction(50, 3), Fraction(1))
    fpn = get_instance("fractions(poly(nat))")
    e = parse_element("(X^2)/(1+X)", fpn)
    assert e.payload == (((2, 1),), ((0, 1), (1, 1)))


def test_rational_and_negative_literals():
    qnn = get_instance("qnn")
    assert parse_element("1/2 + 1/3", qnn).payload == Fraction(5, 6)
    fuzzy = get_instance("fuzzy")
    assert parse_element("1/2", fuzzy).payload == Fraction(1, 2)
    trop = get_instance("tropical-int")
    assert parse_element("-3", trop).payload == -3
    assert parse_element("inf", trop) == trop.infinity()
    with pytest.raises(ValueError):
        parse_element("-3", get_instance("nat"))
    with pytest.raises(ValueError):
        parse_element("inf", get_instance("nat"))


def test_exponent_domain_enforcement():
    with pytest.raises(Exception):
        parse_element("X^-1", get_instance("poly(nat)"))
    lau = get_instance("laurent(nat)")
    assert parse_element("X^-1", lau) == lau.inv(lau.indeterminate())
    monq = get_instance("monoid(nat,Q)")
    e = parse_element("X^(1/2) * X^(1/2)", monq)
    assert e == monq.indeterminate()
    with pytest.raises(ValueError):
        parse_element("X^(1/2)", lau)
    trop = get_instance("tropical-int")
    assert parse_element("3^-1", trop).payload == -3


def test_parse_errors_carry_position():
    poly = get_instance("poly(nat)")
    with pytest.raises(ParseError) as err:
        parse_element("3*X^", poly)
    assert err.value.pos == 4
    with pytest.raises(ParseError) as err:
        parse_element("1 + ", poly)
    assert err.value.expected
    with pytest.raises(ParseError):
        parse_element("1 ) 2", poly)
    with pytest.raises(ParseError):
        parse_element("Z + 1", poly)
    with pytest.raises(ValueError):
        parse_element("1/2", get_instance("nat"))


def test_division_requires_capability():
    with pytest.raises(ValueError):
        parse_element("(1+2)/(1+1)", get_instance("fuzzy"))
    qnn = get_instance("qnn")
    assert parse_element("(1+2)/(2)", qnn).payload == Fraction(3, 2)


def test_content_polynomial_parsing():
    nat = get_instance("nat")
    f = parse_content_polynomial("2 + 3*Y", nat)
    assert [c.payload for c in f.coeffs] == [2, 3]
    g = parse_content_polynomial("(1 + Y)^2", nat)
    assert [c.payload for c in g.coeffs] == [1, 2, 1]
    h = parse_content_polynomial("5", nat)
    assert h.degree() == 0
    poly = get_instance("poly(nat)")
    mixed = parse_content_polynomial("3*X^2 + X*Y", poly)
    assert mixed.coeffs[0].payload == ((2, 3),)
    assert mixed.coeffs[1].payload == ((1, 1),)
    with pytest.raises(ValueError):
        parse_content_polynomial("Y^-1", nat)


def test_ideal_literals():
    nat = get_instance("nat")
    I = parse_ideal("ideal[2, 3]", nat)
    assert sorted(g.payload for g in I.generators) == [2, 3]
    fuzzy = get_instance("fuzzy")
    A = parse_ideal("fuzzy[0,1/2]", fuzzy)
    assert A == IntervalIdeal(Fraction(1, 2), True)
    B = parse_ideal("fuzzy[0,1/2)", fuzzy)
    assert B == IntervalIdeal(Fraction(1, 2), False)
    with pytest.raises(ParseError):
        parse_ideal("ideal[]", nat)
    with pytest.raises(ParseError):
        parse_ideal("notideal[1]", nat)
    with pytest.raises(ValueError):
        parse_ideal("fuzzy[0,1/2]", nat)


@pytest.mark.parametrize("sid", [
    "nat", "qnn", "fuzzy", "tropical-int", "tropical-nat", "ideals-z",
    "bool-poly", "poly(nat)", "laurent(nat)", "monoid(nat,N0)",
    "monoid(nat,Z)", "fractions(nat)", "fractions(poly(nat))",
    "fractions(ideals-z)",
])
def test_rendered_elements_parse_back(sid):
    instance = get_instance(sid)
    for x in stream(instance, SampleSpec(5, 120, 12)):
        assert parse_element(str(x), instance) == x, (sid, str(x))


def test_whitespace_insensitive():
    poly = get_instance("poly(nat)")
    assert parse_element("3 * X ^ 2+X", poly) == parse_element("3*X^2 + X", poly)
