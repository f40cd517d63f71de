"""Exact linear algebra over Fractions, backed by sympy matrices."""
from fractions import Fraction
from typing import List, Sequence

import sympy

from .rational import Vector


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def scale(a: Sequence[Fraction], factor: Fraction) -> Vector:
    return tuple(x * factor for x in a)


def neg(a: Sequence[Fraction]) -> Vector:
    return tuple(-x for x in a)


def to_sympy(rows: Sequence[Sequence[Fraction]], width: int) -> sympy.Matrix:
    entries = [sympy.Rational(v.numerator, v.denominator) for r in rows for v in map(Fraction, r)]
    return sympy.Matrix(len(rows), width, entries)


def from_sympy(value) -> Fraction:
    """sympy Rational -> Fraction."""
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def _rows_of(matrix: sympy.Matrix) -> List[Vector]:
    return [tuple(from_sympy(x) for x in matrix.row(i)) for i in range(matrix.rows)]


def rref(rows: Sequence[Sequence[Fraction]], width: int) -> List[List[Fraction]]:
    """
    Reduced row echelon form of a matrix.

    Args:
        rows: Matrix rows, each of length `width`.
        width: Number of columns (needed when there are no rows).

    Returns:
        The nonzero rows of the reduced row echelon form, leading entries equal to 1.
    """
    if not rows:
        return []
    reduced, pivots = to_sympy(rows, width).rref()
    return [list(r) for r in _rows_of(reduced[:len(pivots), :])]


def nullspace(rows: Sequence[Sequence[Fraction]], width: int) -> List[Vector]:
    """Basis of {z : row·z = 0 for all rows}, one vector per free column."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(width)) for i in range(width)]
    return [tuple(from_sympy(x) for x in column) for column in to_sympy(rows, width).nullspace()]


def orthogonal_basis(vectors: Sequence[Sequence[Fraction]]) -> List[Vector]:
    """Unnormalized orthogonal basis of the span of `vectors`."""
    if not vectors:
        return []
    independent = rref(vectors, len(vectors[0]))
    if not independent:
        return []
    columns = [to_sympy([r], len(r)).T for r in independent]
    return [tuple(from_sympy(x) for x in column) for column in sympy.GramSchmidt(columns)]


def project_off(vector: Sequence[Fraction], orthogonal: Sequence[Sequence[Fraction]]) -> Vector:
    """Component of `vector` orthogonal to the span of an orthogonal basis."""
    w = tuple(vector)
    for u in orthogonal:
        w = sub(w, scale(u, dot(w, u) / dot(u, u)))
    return w
