"""Oracle tests for the coefficient field K_m = Q[delta]/(p_m)."""

from fractions import Fraction

import pytest
import sympy as sp

from dihedralcat.field import FieldError, field_for


# minimal polynomials of 2cos(pi/m), derived independently with sympy
@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7, 8, 12])
def test_minimal_polynomial_matches_sympy(m):
    F = field_for(m)
    x = sp.Symbol("x")
    expected = sp.minimal_polynomial(2 * sp.cos(sp.pi / m), x)
    ours = sum(sp.Rational(c) * x ** i
               for i, c in enumerate(F.minimal_polynomial))
    assert sp.expand(ours - expected) == 0


def test_known_small_cases():
    # delta = 0, 1, sqrt(2), golden ratio
    assert field_for(2).minimal_polynomial == (Fraction(0), Fraction(1))
    assert field_for(3).minimal_polynomial == (Fraction(-1), Fraction(1))
    assert field_for(4).minimal_polynomial == \
        (Fraction(-2), Fraction(0), Fraction(1))
    assert field_for(5).minimal_polynomial == \
        (Fraction(-1), Fraction(-1), Fraction(1))


@pytest.mark.parametrize("m", [2, 3, 4, 5, 7])
def test_field_axioms_and_inverse(m):
    F = field_for(m)
    d = F.delta()
    x = d * d - F.from_rational(3) * d + F.one()
    if x:
        assert x * x.inverse() == F.one()
    assert d + (-d) == F.zero()
    assert (d - F.one()) * (d + F.one()) == d * d - F.one()


def test_delta_squared_value_m4():
    F = field_for(4)
    assert F.delta() * F.delta() == F.from_rational(2)


def test_quantum_numbers_vanish_at_m():
    # [m]_delta = 0 and [k]_delta != 0 for 0 < k < m
    for m in (2, 3, 4, 5, 6):
        F = field_for(m)
        assert not F.quantum_number(m)
        for k in range(1, m):
            assert F.quantum_number(k)


def test_division_by_zero_raises():
    F = field_for(3)
    with pytest.raises(FieldError):
        F.zero().inverse()
