"""
Dense integer polynomials in the colour count λ, exact at any size
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from src.errors import InvariantViolation


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    values = list(coeffs)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class Polynomial:
    """coeffs[i] multiplies λ^i; no trailing zeros, the zero polynomial is ()"""
    coeffs: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _trim(int(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial"""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def __add__(self, other: 'Polynomial') -> 'Polynomial':
        return poly_add(self, other)

    def __sub__(self, other: 'Polynomial') -> 'Polynomial':
        return poly_sub(self, other)

    def __mul__(self, other: 'Polynomial') -> 'Polynomial':
        return poly_mul(self, other)

    def __neg__(self) -> 'Polynomial':
        return poly_scale(self, -1)

    def __call__(self, value: int) -> int:
        return evaluate(self, value)

    def pretty(self, variable: str = "λ") -> str:
        """Human-readable form, highest degree first: λ^3 - 3λ^2 + 2λ"""
        if not self.coeffs:
            return "0"
        parts: List[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                term = variable if power == 1 else f"{variable}^{power}"
                body = term if magnitude == 1 else f"{magnitude}{term}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def to_json(self) -> Dict[str, List[str]]:
        """Ascending coefficients as decimal strings"""
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, payload: Dict[str, Sequence[str]]) -> 'Polynomial':
        return cls(tuple(int(c) for c in payload["coeffs"]))

    def __str__(self):
        return self.pretty()


ZERO = Polynomial(())
ONE = Polynomial((1,))
LAMBDA = Polynomial((0, 1))


def constant(value: int) -> Polynomial:
    return Polynomial((value,))


def linear(root: int) -> Polynomial:
    """λ - root"""
    return Polynomial((-root, 1))


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    size = max(len(a.coeffs), len(b.coeffs))
    return Polynomial(tuple(a.coefficient(i) + b.coefficient(i) for i in range(size)))


def poly_sub(a: Polynomial, b: Polynomial) -> Polynomial:
    size = max(len(a.coeffs), len(b.coeffs))
    return Polynomial(tuple(a.coefficient(i) - b.coefficient(i) for i in range(size)))


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return Polynomial(tuple(out))


def poly_scale(a: Polynomial, c: int) -> Polynomial:
    return Polynomial(tuple(c * x for x in a.coeffs))


def poly_power(a: Polynomial, exponent: int) -> Polynomial:
    if exponent < 0:
        raise ValueError("negative exponent")
    result = ONE
    base = a
    while exponent:
        if exponent & 1:
            result = poly_mul(result, base)
        base = poly_mul(base, base)
        exponent >>= 1
    return result


def evaluate(p: Polynomial, value: int) -> int:
    """Exact Horner evaluation"""
    total = 0
    for c in reversed(p.coeffs):
        total = total * value + c
    return total


def poly_shift(p: Polynomial, offset: int) -> Polynomial:
    """p(λ + offset)"""
    result = ZERO
    step = Polynomial((offset, 1))
    for c in reversed(p.coeffs):
        result = poly_add(poly_mul(result, step), constant(c))
    return result


def falling_factorial_poly(k: int) -> Polynomial:
    """λ(λ-1)...(λ-k+1); the empty product for k = 0 is 1"""
    if k < 0:
        raise ValueError(f"falling factorial length must be nonnegative, got {k}")
    result = ONE
    for j in range(k):
        result = poly_mul(result, linear(j))
    return result


def interpolate_through_counts(values: Sequence[Tuple[int, int]], degree: int = -1) -> Polynomial:
    """
    Rebuild an integer polynomial from exact evaluations.

    With degree = -1 the degree is len(values) - 1. Extra points beyond
    degree + 1 must agree with the fit. A non-integral coefficient means the
    counts were wrong upstream and raises InvariantViolation.
    """
    points = [(int(x), int(y)) for x, y in values]
    if len({x for x, _ in points}) != len(points):
        raise ValueError("interpolation points must have distinct λ values")
    if degree < 0:
        degree = len(points) - 1
    if degree < 0 or len(points) < degree + 1:
        raise ValueError(f"need at least {degree + 1} points for degree {degree}, got {len(points)}")
    fit, extra = points[:degree + 1], points[degree + 1:]
    xs = [x for x, _ in fit]
    # Newton divided differences
    table = [Fraction(y) for _, y in fit]
    for level in range(1, len(fit)):
        for i in range(len(fit) - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [Fraction(0)]
    for i in range(len(fit) - 1, -1, -1):
        # coeffs <- coeffs * (λ - xs[i]) + table[i]
        shifted = [Fraction(0)] + coeffs
        for j, c in enumerate(coeffs):
            shifted[j] -= xs[i] * c
        shifted[0] += table[i]
        coeffs = shifted
    for c in coeffs:
        if c.denominator != 1:
            raise InvariantViolation(f"interpolated coefficient {c} is not an integer")
    result = Polynomial(tuple(int(c) for c in coeffs))
    for x, y in extra:
        if evaluate(result, x) != y:
            raise InvariantViolation(f"point ({x}, {y}) disagrees with the degree-{degree} fit")
    return result
