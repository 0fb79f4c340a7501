"""
Test suite for exact integer polynomials
"""
import pytest

from src.errors import InvariantViolation
from src.polynomial import (
    LAMBDA,
    ONE,
    ZERO,
    Polynomial,
    evaluate,
    falling_factorial_poly,
    interpolate_through_counts,
    linear,
    poly_power,
    poly_shift,
)


def test_trailing_zeros_are_trimmed():
    p = Polynomial((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert Polynomial((0, 0)) == ZERO
    assert ZERO.degree == -1


def test_arithmetic():
    a = linear(1)
    assert a * a == Polynomial((1, -2, 1))
    assert a + LAMBDA == Polynomial((-1, 2))
    assert a - a == ZERO
    assert -a == Polynomial((1, -1))
    assert poly_power(a, 0) == ONE
    assert poly_power(a, 3) == Polynomial((-1, 3, -3, 1))


def test_evaluation_is_exact_for_large_values():
    p = falling_factorial_poly(30)
    assert evaluate(p, 30) == 265252859812191058636308480000000
    assert p(29) == 0
    assert p(100) > 2 ** 100


def test_pretty():
    assert falling_factorial_poly(3).pretty() == "λ^3 - 3λ^2 + 2λ"
    assert Polynomial((1, -1)).pretty() == "-λ + 1"
    assert ZERO.pretty() == "0"
    assert str(ONE) == "1"


def test_json_uses_decimal_strings():
    p = Polynomial((0, -(10 ** 30), 1))
    payload = p.to_json()
    assert payload == {"coeffs": ["0", "-1000000000000000000000000000000", "1"]}
    assert Polynomial.from_json(payload) == p


def test_shift():
    assert poly_shift(poly_power(LAMBDA, 2), -1) == Polynomial((1, -2, 1))
    p = falling_factorial_poly(4)
    shifted = poly_shift(p, 3)
    for x in range(-3, 6):
        assert shifted(x) == p(x + 3)


def test_interpolation_recovers_counts():
    p = falling_factorial_poly(4)
    assert interpolate_through_counts([(x, p(x)) for x in range(5)]) == p
    # extra points are checked against the fit
    assert interpolate_through_counts([(x, p(x)) for x in range(8)], degree=4) == p


def test_interpolation_from_colouring_counts():
    assert interpolate_through_counts([(0, 0), (1, 0), (2, 0), (3, 6)]) == falling_factorial_poly(3)
    assert interpolate_through_counts([(0, 1)], degree=0) == ONE
    # 4-cycle: counts 0, 0, 2, 18, 84 at λ = 0..4
    c4 = interpolate_through_counts([(0, 0), (1, 0), (2, 2), (3, 18), (4, 84)])
    assert c4 == Polynomial((0, -3, 6, -4, 1))


def test_interpolation_rejects_bad_counts():
    with pytest.raises(InvariantViolation):
        interpolate_through_counts([(0, 0), (1, 1), (2, 3)])
    with pytest.raises(InvariantViolation):
        interpolate_through_counts([(0, 0), (1, 1), (2, 5)], degree=1)
    with pytest.raises(ValueError):
        interpolate_through_counts([(1, 1), (1, 2)])
    with pytest.raises(ValueError):
        interpolate_through_counts([(0, 1)], degree=3)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
