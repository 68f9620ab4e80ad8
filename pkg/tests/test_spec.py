import pytest

from ringline.spec import (DualNumbers, EpsDelta, GaloisField, MatrixRing, ModInt, ParseError, Product,
                           Quotient, SpecError, UpperTriangular2, parse_ring_spec)


@pytest.mark.parametrize("text,tree", [
    ("Z/6", ModInt(6)),
    ("GF(4)", GaloisField(2, 2)),
    ("Dual(GF(4),frob^1)", DualNumbers(GaloisField(2, 2), 1)),
    ("M2(GF(2))", MatrixRing(GaloisField(2), 2)),
    ("UT2(GF(3))", UpperTriangular2(GaloisField(3))),
    ("EpsDelta(GF(2))", EpsDelta(GaloisField(2))),
    ("Z/2 x Z/3", Product((ModInt(2), ModInt(3)))),
    ("Quot(Z/6;2)", Quotient(ModInt(6), ("2",))),
])
def test_parse(text, tree):
    assert parse_ring_spec(text) == tree


@pytest.mark.parametrize("text", ["Z/6", "Dual(GF(4),frob^1)", "M2(GF(3))", "(Z/2 x Z/2) x GF(3)",
                                  "Quot(Z/6;2)", "EpsDelta(GF(2))", "Dual(GF(3))"])
def test_round_trip(text):
    assert str(parse_ring_spec(text)) == text
    assert parse_ring_spec(str(parse_ring_spec(text))) == parse_ring_spec(text)


def test_whitespace_tolerated():
    assert parse_ring_spec("  Z/2  x  GF( 3 ) ") == Product((ModInt(2), GaloisField(3)))


def test_not_prime_power():
    with pytest.raises(SpecError, match="6 is not a prime power"):
        parse_ring_spec("GF(6)")


@pytest.mark.parametrize("text,pos", [("Z/", 2), ("Foo", 0), ("M2(GF(2)", 8)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_ring_spec(text)
    assert info.value.pos == pos


@pytest.mark.parametrize("text", ["Dual(Z/4)", "UT2(Z/6)", "EpsDelta(M2(GF(2)))"])
def test_field_required(text):
    with pytest.raises(SpecError):
        parse_ring_spec(text)
