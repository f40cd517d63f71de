"""
Exact rational scalars and vectors.

All coefficients in this package are `fractions.Fraction` values; vectors are
plain tuples of them. The helpers below produce the canonical integer-scaled
forms that every representation stores.
"""
import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Tuple, Union

Vector = Tuple[Fraction, ...]
Scalar = Union[int, str, Fraction]

_TOKEN = re.compile(r"^[+-]?\d+(/\d+)?$")


def as_fraction(value: Scalar) -> Fraction:
    """
    Convert an int, Fraction or token string (`p`, `-p` or `p/q`) to a Fraction.

    Raises:
        ValueError: If a string token is not of the accepted form or has a zero denominator.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        token = value.strip()
        if not _TOKEN.match(token):
            raise ValueError(f"Not a rational token: {value!r}")
        if "/" in token and int(token.split("/")[1]) == 0:
            raise ValueError(f"Zero denominator in rational token: {value!r}")
        return Fraction(token)
    raise ValueError(f"Not a rational number: {value!r}")


def as_vector(values: Iterable[Scalar]) -> Vector:
    return tuple(as_fraction(v) for v in values)


def format_fraction(value: Fraction) -> str:
    """Render a Fraction as `p` or `p/q`."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_vector(vector: Sequence[Fraction]) -> str:
    return "(" + ", ".join(format_fraction(v) for v in vector) + ")"


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def integer_scale(values: Sequence[Fraction]) -> Vector:
    """
    Scale a vector by a positive factor so its entries are coprime integers.

    The zero vector is returned unchanged.
    """
    if not any(values):
        return tuple(Fraction(0) for _ in values)
    denominator = 1
    for v in values:
        denominator = _lcm(denominator, v.denominator)
    integers = [int(v * denominator) for v in values]
    divisor = 0
    for i in integers:
        divisor = gcd(divisor, abs(i))
    return tuple(Fraction(i // divisor) for i in integers)


def canonical_direction(values: Sequence[Fraction]) -> Vector:
    """Positive rescaling to coprime integers; the orientation of a ray is kept."""
    return integer_scale(values)


def canonical_line(values: Sequence[Fraction]) -> Vector:
    """Coprime integers with the first nonzero entry positive."""
    scaled = integer_scale(values)
    for v in scaled:
        if v != 0:
            return scaled if v > 0 else tuple(-x for x in scaled)
    return scaled


def zero_vector(dimension: int) -> Vector:
    return tuple(Fraction(0) for _ in range(dimension))


def unit_vector(dimension: int, index: int) -> Vector:
    return tuple(Fraction(1 if i == index else 0) for i in range(dimension))
