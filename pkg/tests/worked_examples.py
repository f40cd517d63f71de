"""
The two small mappings F: ℝ² ⇉ ℝ² used throughout the tests, with the cones
computed for them by hand. Coordinates are (x1, x2, y1, y2).
"""
from polyhedra import HPolyhedron
from set_optimization import OrderingCone, PolyMapping

FIRST_ROWS = [
    (1, 0, 0, 0, 0),     # x1 >= 0
    (0, 1, 0, 0, 0),     # x2 >= 0
    (0, -1, 0, 1, 0),    # y2 >= x2
    (0, 1, 1, 0, 0),     # x2 + y1 >= 0
    (1, 2, 1, -1, 0),    # x1 + 2x2 + y1 >= y2
]

SECOND_ROWS = [
    (1, 0, 0, 0, 0),
    (0, 1, 0, 0, 0),
    (0, 1, 1, 0, 0),
    (0, -3, 1, 2, 0),
    (1, -2, 0, 1, 0),
]


def cone(*rows) -> OrderingCone:
    return OrderingCone.from_rows(len(rows[0]), rows)


def h(dimension, *rows) -> HPolyhedron:
    return HPolyhedron.from_rows(dimension, [(r[:-1], r[-1]) for r in rows])


def first_mapping() -> PolyMapping:
    return PolyMapping.from_rows(2, 2, FIRST_ROWS)


def second_mapping() -> PolyMapping:
    return PolyMapping.from_rows(2, 2, SECOND_ROWS)


FIRST_G_ZERO = cone((0, 1), (1, -1))
FIRST_NATURAL = cone((1, 0), (0, 1))
FIRST_IMAGE = cone((0, 1), (1, 1))

ORTHANT = cone((1, 0), (0, 1))
SECOND_IMAGE = cone((1, 2), (2, 1))
SECOND_NATURAL = cone((1, 0), (1, 2))
