from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wittbc import TruncSeries, series_mul, series_pow

from conftest import rand_series


def geo(a, order=8):
    return TruncSeries.geometric(a, order)


def test_geometric_square():
    f = series_mul(geo(1), geo(1))
    assert f.coeffs[:4] == (1, 2, 3, 4)


def test_mul_identity():
    f = geo(5, 6)
    assert series_mul(f, TruncSeries.one(6)) == f


def test_mul_hand_convolution():
    f = series_mul(geo(2, 3), geo(3, 3))
    assert f.coeffs == (1, 5, 19, 65)


def test_mul_truncates_to_min_order():
    f = series_mul(geo(2, 9), geo(3, 4))
    assert f.order == 4


def test_pow_square_matches_mul():
    assert series_pow(geo(1), 2) == series_mul(geo(1), geo(1))


def test_pow_half_inverts_square():
    sq = series_pow(geo(1), 2)
    assert series_pow(sq, Fraction(1, 2)) == geo(1)


def test_pow_zero():
    assert series_pow(geo(7), 0) == TruncSeries.one(8)


def test_pow_negative_is_inverse():
    f = geo(3, 8)
    assert series_mul(series_pow(f, -1), f) == TruncSeries.one(8)


def test_pow_rational_roundtrip(rng):
    f = rand_series(rng, 10)
    e = Fraction(3, 2)
    assert series_pow(series_pow(f, e), 1 / e) == f


@settings(max_examples=40, deadline=None)
@given(a=st.integers(-3, 3), b=st.integers(-3, 3),
       num1=st.integers(-2, 3), den1=st.integers(1, 3),
       num2=st.integers(-2, 3), den2=st.integers(1, 3))
def test_pow_additivity(a, b, num1, den1, num2, den2):
    f = TruncSeries([1, Fraction(a, 2), Fraction(b, 3), 1, 0, 0, 0, 0])
    e1, e2 = Fraction(num1, den1), Fraction(num2, den2)
    assert series_pow(f, e1 + e2) == series_mul(series_pow(f, e1),
                                                series_pow(f, e2))


def test_from_factor_matches_pow():
    assert TruncSeries.from_factor(Fraction(2), 1, 3, 8) == series_pow(geo(2), 3)
    one_minus_t2 = TruncSeries([1, 0, -1, 0, 0, 0, 0, 0, 0])
    assert TruncSeries.from_factor(Fraction(1), 2, -2, 8) == \
        series_pow(one_minus_t2, 2)


def test_ghost_of_geometric():
    assert geo(3).ghost_components(5) == [3, 9, 27, 81, 243]


def test_ghost_roundtrip(rng):
    f = rand_series(rng, 9)
    assert TruncSeries.from_ghost(f.ghost_components(), f.order) == f


def test_substitutions():
    f = geo(1, 4)
    assert f.substitute_scale(Fraction(2)).coeffs == (1, 2, 4, 8, 16)
    assert f.substitute_power(2).coeffs == (1, 0, 1, 0, 1, 0, 1, 0, 1)


def test_unit_constant_term_enforced():
    with pytest.raises(ValueError):
        TruncSeries([2, 1])


def test_json_roundtrip(rng):
    f = rand_series(rng, 7)
    again = TruncSeries.from_json(f.to_json())
    assert again == f
    assert f.to_json()["coeffs"][0] == "1"
