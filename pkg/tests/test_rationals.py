from fractions import Fraction

import pytest

from cyclecones.errors import InputError
from cyclecones.rationals import rat, rat_str


def test_parses_integers_and_fractions():
    assert rat("3") == 3
    assert rat("-2/7") == Fraction(-2, 7)
    assert rat(" 4 / 6 ") == Fraction(2, 3)
    assert rat(5) == 5
    assert rat(Fraction(1, 3)) == Fraction(1, 3)


def test_rejects_floats_and_garbage():
    with pytest.raises(InputError):
        rat(0.5)
    with pytest.raises(InputError):
        rat("0.5")
    with pytest.raises(InputError):
        rat("1/0")
    with pytest.raises(InputError):
        rat(True)


def test_canonical_strings():
    assert rat_str(Fraction(4, 2)) == "2"
    assert rat_str(Fraction(-3, 9)) == "-1/3"
    assert rat_str(Fraction(0)) == "0"
