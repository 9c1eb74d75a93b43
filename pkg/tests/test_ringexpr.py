from fractions import Fraction

import pytest

from cyclecones.errors import InputError
from cyclecones.fixtures import load
from cyclecones.ringexpr import evaluate


@pytest.fixture(scope="module")
def hilb():
    fixture = load("p2-hilb2")
    names = dict(fixture.ring_elements)
    return fixture.ring, names


def test_scalar_arithmetic(hilb):
    ring, names = hilb
    assert evaluate("2/3 + 1/6", ring, names) == Fraction(5, 6)
    assert evaluate("2^3", ring, names) == 8


def test_generator_products(hilb):
    ring, names = hilb
    value = evaluate("(D1+D2)^2", ring, names)
    assert value.coords() == (1, 2, 1)


def test_named_classes_and_scaling(hilb):
    ring, names = hilb
    m = evaluate("S3 + 2*S1", ring, names)
    assert m.terms == names["M"].terms
    half = evaluate("1/2*M", ring, names)
    assert half.scale(2).terms == names["M"].terms


def test_implicit_multiplication(hilb):
    ring, names = hilb
    assert evaluate("2(D1)", ring, names).terms == names["D1"].scale(2).terms


def test_dual_classes_in_moduli_fixture():
    fixture = load("m07-s7")
    names = dict(fixture.ring_elements)
    names.update(fixture.dual_classes)
    gamma = evaluate("12*S1 + 7*S2 + 2*S3", fixture.ring, names)
    assert gamma.coords == (108, 0, 0)


def test_errors_are_informative(hilb):
    ring, names = hilb
    with pytest.raises(InputError):
        evaluate("NOPE", ring, names)
    with pytest.raises(InputError):
        evaluate("D1 + 2", ring, names)
    with pytest.raises(InputError):
        evaluate("(D1", ring, names)
    with pytest.raises(InputError):
        evaluate("D1 ^ D2", ring, names)
