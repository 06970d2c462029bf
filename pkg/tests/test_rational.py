from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tough_cycles.rational import ExactRational


def test_construction_and_reduction():
    assert ExactRational(4, 6) == ExactRational(2, 3)
    assert ExactRational(5) == ExactRational(10, 2)
    assert ExactRational(0, 7) == ExactRational(0)


def test_negative_rejected():
    with pytest.raises(ValueError):
        ExactRational(-1, 2)
    with pytest.raises(ZeroDivisionError):
        ExactRational(1, 0)


def test_infinity_ordering():
    inf = ExactRational.infinity()
    assert inf.is_infinite
    assert inf > ExactRational(10**9)
    assert not inf < inf
    assert inf == ExactRational.infinity()
    assert ExactRational(4, 3) > ExactRational(1)
    assert ExactRational(1) >= ExactRational(1)


def test_json_round_trip():
    for r in (ExactRational(4, 3), ExactRational(0), ExactRational.infinity()):
        assert ExactRational.from_json(r.to_json()) == r
    assert ExactRational(4, 3).to_json() == {"num": 4, "den": 3,
                                             "infinite": False}


def test_hashable():
    assert len({ExactRational(1, 2), ExactRational(2, 4),
                ExactRational.infinity()}) == 2


@given(st.integers(0, 1000), st.integers(1, 1000),
       st.integers(0, 1000), st.integers(1, 1000))
def test_ordering_matches_fraction(a, b, c, d):
    left, right = ExactRational(a, b), ExactRational(c, d)
    assert (left < right) == (Fraction(a, b) < Fraction(c, d))
    assert (left == right) == (Fraction(a, b) == Fraction(c, d))
