import cmath
import math
from fractions import Fraction

import pytest

from algebra.exact_scalars import CycloScalar, Level, embed_numeric, eta, field_arith, power_of_A
from utilities.errors import DivisionByZero


def test_level_rejects_small_r():
    with pytest.raises(ValueError):
        Level(2)


def test_power_of_A_wraps_around_the_order(level5):
    assert power_of_A(20, level5) == CycloScalar.one(level5)
    assert power_of_A(10, level5) == -CycloScalar.one(level5)
    assert power_of_A(-1, level5) * power_of_A(1, level5) == 1


def test_numeric_embedding_of_A(level5):
    value = embed_numeric(power_of_A(1, level5))
    assert value == pytest.approx(cmath.exp(2j * math.pi / 20))


def test_ring_operations_with_integers_and_fractions(level3):
    a = power_of_A(1, level3)
    assert a + 0 == a
    assert 2 * a - a == a
    assert (a * Fraction(1, 3)) * 3 == a
    assert 1 - a == -(a - 1)


def test_inverse_and_division(level5):
    x = power_of_A(2, level5) + power_of_A(-2, level5) + 3
    assert x * x.inverse() == 1
    assert (x / x) == 1
    assert 1 / x == x.inverse()


def test_division_by_zero(level5):
    with pytest.raises(DivisionByZero):
        CycloScalar.zero(level5).inverse()
    with pytest.raises(DivisionByZero):
        power_of_A(1, level5) / 0


def test_negative_powers(level7):
    a = power_of_A(3, level7)
    assert a ** -2 == power_of_A(-6, level7)
    assert a ** 0 == 1


def test_eta_squares_into_the_cyclotomic_field(level5):
    e = eta(level5)
    assert e.has_eta()
    square = e * e
    assert not square.has_eta()
    expected = 2 * math.sin(math.pi / 5) ** 2 / 5
    assert embed_numeric(square) == pytest.approx(expected)
    assert embed_numeric(e) == pytest.approx(math.sqrt(expected))


def test_mixed_eta_inverse(level5):
    x = eta(level5) + power_of_A(1, level5)
    assert x * x.inverse() == 1


def test_equality_and_hash_are_structural(level5):
    x = power_of_A(4, level5) - power_of_A(2, level5)
    y = power_of_A(4, level5) - power_of_A(2, level5)
    assert x == y and hash(x) == hash(y)
    assert len({x, y}) == 1
    assert not CycloScalar.zero(level5)


def test_level_mismatch_is_rejected(level3, level5):
    with pytest.raises(ValueError):
        power_of_A(1, level3) + power_of_A(1, level5)


def test_dict_serialization(level7):
    x = eta(level7) * 3 + power_of_A(5, level7)
    restored = CycloScalar.from_dict(x.to_dict())
    assert restored == x
    assert restored.level == level7


def test_field_arith_dispatch(level3):
    x, y = power_of_A(1, level3), power_of_A(2, level3)
    assert field_arith(x, y, "mul") == power_of_A(3, level3)
    assert field_arith(x, y, "div") == power_of_A(-1, level3)
    with pytest.raises(ValueError):
        field_arith(x, y, "pow")


def test_embed_numeric_needs_digits(level3):
    with pytest.raises(ValueError):
        embed_numeric(CycloScalar.one(level3), digits=0)


@pytest.mark.parametrize("r", [4, 6, 8])
def test_eta_is_a_field_element_at_even_r(r):
    level = Level(r)
    e = eta(level)
    assert not e.has_eta()
    diff = power_of_A(2, level) - power_of_A(-2, level)
    assert e * e == diff * diff * Fraction(-1, 2 * r)
    assert embed_numeric(e) == pytest.approx(math.sqrt(2 / r) * math.sin(math.pi / r))
    x = e + power_of_A(1, level)
    assert x * x.inverse() == 1
    assert all(c == [0, 1] for c in x.to_dict()["eta"])


def test_eta_at_r4_is_one_half(level4):
    e = eta(level4)
    assert e == Fraction(1, 2)
    assert (e - Fraction(1, 2)).is_zero()
    assert field_arith(CycloScalar.one(level4), e + Fraction(1, 2), "div") == 1


def test_eta_part_of_a_payload_folds_into_the_base(level6):
    field = level6.field
    one = [[1, 1]] + [[0, 1]] * (field.degree - 1)
    restored = CycloScalar.from_dict({"r": 6, "base": [[0, 1]] * field.degree, "eta": one})
    assert restored == eta(level6)
    assert not restored.has_eta()


def test_rational_scalars_hash_like_numbers(level5):
    assert hash(CycloScalar.one(level5)) == hash(1)
    assert hash(CycloScalar.rational(level5, Fraction(3, 4))) == hash(Fraction(3, 4))
    assert len({CycloScalar.one(level5), 1}) == 1
    assert {CycloScalar.rational(level5, 2): "two"}[2] == "two"
