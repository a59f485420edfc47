from fractions import Fraction

import pytest
from hypothesis import given

from conftest import signatures
from necgroups.errors import (BadPeriod, NonOrientableGenusZero, NotHyperbolic,
                              SignatureSyntaxError)
from necgroups.signature import (Signature, derived_counts, format_fuchsian,
                                 format_signature, hyperbolic_measure,
                                 parse_signature, validate)


def test_parse_full_form():
    sig = parse_signature("(0,0,+,[2,3,7],{})")
    assert sig == Signature("+", 0, 0, (2, 3, 7), ())


def test_parse_fuchsian_shorthand():
    assert parse_signature("[1,1;]") == Signature("+", 1, 1, (), ())
    assert parse_signature("[0, 0; 2, 3, 7]") == parse_signature("(0,0,+,[2,3,7],{})")


def test_parse_empty_cycle():
    assert parse_signature("(2,0,-,[],{()})") == Signature("-", 2, 0, (), ((),))


def test_format():
    assert format_signature(Signature("+", 0, 0, (2, 3, 7), ())) == "(0,0,+,[2,3,7],{})"
    assert format_signature(Signature("-", 2, 0, (), ((),))) == "(2,0,-,[],{()})"
    assert format_fuchsian(Signature("+", 1, 1, (), ())) == "[1,1;]"
    with pytest.raises(ValueError):
        format_fuchsian(Signature("-", 1, 0))


@pytest.mark.parametrize("text", [
    "", "(0,0,+,[2,3,7])", "(0,0,*,[],{})", "(0,0,+,[2,,3],{})",
    "(0,0,+,[2,3,7],{}) junk", "[1,1,2]", "(a,0,+,[],{})", "(0,0,+,[2],{(2}"
])
def test_syntax_errors(text):
    with pytest.raises(SignatureSyntaxError) as info:
        parse_signature(text)
    assert info.value.position >= 0


def test_period_below_two():
    with pytest.raises(BadPeriod):
        parse_signature("(0,0,+,[1,3,7],{})")
    with pytest.raises(BadPeriod):
        validate(Signature("+", 0, 0, (), ((2, 1),)))


def test_measure_values():
    assert hyperbolic_measure(parse_signature("(0,0,+,[2,3,7],{})")) == Fraction(1, 42)
    assert hyperbolic_measure(parse_signature("(0,0,+,[2,4,4],{})")) == 0
    assert hyperbolic_measure(parse_signature("(0,0,+,[],{(2,2,2,3)})")) == Fraction(1, 12)


def test_validate():
    validate(parse_signature("(0,0,+,[2,3,7],{})"))
    with pytest.raises(NotHyperbolic) as info:
        validate(parse_signature("(0,0,+,[2,4,4],{})"))
    assert "Euclidean" in str(info.value)
    with pytest.raises(NotHyperbolic) as info:
        validate(parse_signature("(0,0,+,[2,3,5],{})"))
    assert "spherical" in str(info.value)
    with pytest.raises(NonOrientableGenusZero):
        validate(Signature("-", 0, 0, (), ((2, 2),)))


def test_counts():
    c = derived_counts(parse_signature("(0,0,+,[],{(2,2,2,3)})"))
    assert (c.even_corners, c.odd_corners, c.odd_only_cycles, c.num_cycles,
            c.num_empty_cycles) == (3, 1, 0, 1, 0)
    assert c.num_corners == 4
    c = derived_counts(Signature("+", 2, 0, (), ((3, 5), ())))
    assert (c.even_corners, c.odd_corners, c.odd_only_cycles, c.num_cycles,
            c.num_empty_cycles) == (0, 2, 1, 1, 1)
    c = derived_counts(Signature("+", 2, 0))
    assert c.num_corners == c.num_cycles == c.num_empty_cycles == 0


def test_case():
    assert parse_signature("[2,0;3]").case == "a"
    assert parse_signature("[0,2;3]").case == "b"
    assert parse_signature("(0,0,+,[],{(2,2,2,3)})").case == "b"
    assert parse_signature("(2,0,-,[],{()})").case == "c"


@given(signatures())
def test_format_parse_round_trip(sig):
    assert parse_signature(format_signature(sig)) == sig
    if sig.is_fuchsian:
        assert parse_signature(format_fuchsian(sig)) == sig


@given(signatures())
def test_measure_ignores_order(sig):
    shuffled = Signature(sig.sign, sig.genus, sig.cusps, tuple(reversed(sig.periods)),
                         tuple(tuple(reversed(c)) for c in reversed(sig.cycles)))
    assert hyperbolic_measure(shuffled) == hyperbolic_measure(sig)


@given(signatures())
def test_measure_from_area_formula(sig):
    # independent form: eta*g - 2 + s + k + d + sum(1 - 1/m) + 1/2 sum(1 - 1/n)
    eta = 2 if sig.orientable else 1
    area = eta * sig.genus - 2 + sig.cusps + len(sig.cycles)
    area += sum(1 - Fraction(1, m) for m in sig.periods)
    area += sum(Fraction(1, 2) - Fraction(1, 2 * n) for c in sig.cycles for n in c)
    assert hyperbolic_measure(sig) == area
