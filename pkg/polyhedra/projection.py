"""
Coordinate projection of H-polyhedra.

Two interchangeable backends compute {z_keep : ∃ z_rest, z ∈ p}: Fourier–Motzkin
elimination and the generator route through the double description method.
"""
import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Type

from .double_description import h_to_v, v_to_h
from .operations import remove_redundant
from .rational import canonical_direction
from .types import HPolyhedron, LinearInequality, VPolyhedron

logger = logging.getLogger(__name__)

Row = Tuple[Tuple[Fraction, ...], Fraction]


class BaseProjectionBackend(ABC):
    """
    Abstract base class for projection backends.

    Every backend must return an H-polyhedron over the kept coordinates, in the
    order given by `keep`.
    """

    @abstractmethod
    def project(self, p: HPolyhedron, keep: Sequence[int]) -> HPolyhedron:
        """
        Project `p` onto the coordinates listed in `keep`.

        Args:
            p: Polyhedron to project.
            keep: Indices of the coordinates that survive, in output order.

        Returns:
            The projected polyhedron.
        """
        pass


class FourierMotzkinBackend(BaseProjectionBackend):
    """
    Fourier–Motzkin elimination; after every step rows with a shared normal are
    merged and cddlib drops the remaining redundant ones.
    """

    def project(self, p: HPolyhedron, keep: Sequence[int]) -> HPolyhedron:
        keep = _check_keep(p, keep)
        if p.is_trivially_empty:
            return HPolyhedron.empty(len(keep))
        columns = list(range(p.dimension))
        rows: List[Row] = [(row.coefficients, row.rhs) for row in p.inequalities]
        eliminate = [c for c in columns if c not in keep]

        while eliminate:
            col = min(eliminate, key=lambda c: _fill_in(rows, columns.index(c)))
            j = columns.index(col)
            rows = _eliminate(rows, j)
            columns.pop(j)
            eliminate.remove(col)
            current = HPolyhedron(len(columns), tuple(LinearInequality(a, b) for a, b in rows))
            if current.is_trivially_empty:
                return HPolyhedron.empty(len(keep))
            current = remove_redundant(_prune_pairwise(current))
            if current.is_trivially_empty:
                return HPolyhedron.empty(len(keep))
            rows = [(row.coefficients, row.rhs) for row in current.inequalities]
            logger.debug("eliminated coordinate %d, %d rows remain", col, len(rows))

        order = [columns.index(k) for k in keep]
        reordered = [LinearInequality(tuple(a[i] for i in order), b) for a, b in rows]
        return HPolyhedron(len(keep), tuple(reordered))


class GeneratorProjectionBackend(BaseProjectionBackend):
    """
    Projection through generators: enumerate, delete coordinates, re-describe.
    """

    def project(self, p: HPolyhedron, keep: Sequence[int]) -> HPolyhedron:
        keep = _check_keep(p, keep)
        generators = h_to_v(p)
        if generators.is_empty:
            return HPolyhedron.empty(len(keep))

        def cut(v):
            return tuple(v[i] for i in keep)

        projected = VPolyhedron(
            len(keep),
            tuple(cut(v) for v in generators.points),
            tuple(cut(v) for v in generators.rays),
            tuple(cut(v) for v in generators.lines),
        )
        return v_to_h(projected)


class ProjectionBackendFactory:
    """
    Factory class for creating projection backends.
    """

    _backends: Dict[str, Type[BaseProjectionBackend]] = {
        "fourier_motzkin": FourierMotzkinBackend,
        "double_description": GeneratorProjectionBackend,
        "generators": GeneratorProjectionBackend,  # Alias
    }

    @classmethod
    def create_backend(cls, name: str, **kwargs) -> BaseProjectionBackend:
        """
        Create a projection backend instance.

        Args:
            name: Registered backend name
            **kwargs: Additional arguments to pass to the backend constructor

        Returns:
            Projection backend instance

        Raises:
            ValueError: If the backend is not registered
        """
        if name.lower() not in cls._backends:
            raise ValueError(f"Unsupported projection backend: {name}. Supported backends: {list(cls._backends.keys())}")
        return cls._backends[name.lower()](**kwargs)

    @classmethod
    def register_backend(cls, name: str, backend_class: type) -> None:
        """
        Register a new projection backend.

        Args:
            name: Name of the backend
            backend_class: Class that inherits from BaseProjectionBackend
        """
        if not issubclass(backend_class, BaseProjectionBackend):
            raise ValueError("Backend class must inherit from BaseProjectionBackend")
        cls._backends[name.lower()] = backend_class

    @classmethod
    def get_available_backends(cls) -> list:
        return list(cls._backends.keys())


def project(p: HPolyhedron, keep: Sequence[int], backend: str = "fourier_motzkin") -> HPolyhedron:
    """Coordinate projection of `p` onto `keep` with the named backend."""
    return ProjectionBackendFactory.create_backend(backend).project(p, keep)


def _check_keep(p: HPolyhedron, keep: Sequence[int]) -> List[int]:
    keep = list(keep)
    if len(set(keep)) != len(keep):
        raise ValueError(f"Duplicate coordinates in projection index set: {keep}")
    for k in keep:
        if not 0 <= k < p.dimension:
            raise ValueError(f"Coordinate {k} out of range for dimension {p.dimension}")
    return keep


def _fill_in(rows: List[Row], j: int) -> int:
    positive = sum(1 for a, _ in rows if a[j] > 0)
    negative = sum(1 for a, _ in rows if a[j] < 0)
    return positive * negative - positive - negative


def _eliminate(rows: List[Row], j: int) -> List[Row]:
    """Combine every row with a positive and a negative coefficient at column j."""
    positive = [(a, b) for a, b in rows if a[j] > 0]
    negative = [(a, b) for a, b in rows if a[j] < 0]
    result = [(a[:j] + a[j + 1:], b) for a, b in rows if a[j] == 0]
    for ap, bp in positive:
        for an, bn in negative:
            wp, wn = -an[j], ap[j]
            combined = tuple(wp * x + wn * y for x, y in zip(ap, an))
            result.append((combined[:j] + combined[j + 1:], wp * bp + wn * bn))
    return result


def _prune_pairwise(p: HPolyhedron) -> HPolyhedron:
    """Among rows with the same normal keep only the tightest one."""
    tightest: Dict[Tuple[Fraction, ...], Fraction] = {}
    for row in p.inequalities:
        key = canonical_direction(row.coefficients)
        lead = next(i for i, v in enumerate(key) if v != 0)
        bound = row.rhs * key[lead] / row.coefficients[lead]
        if key not in tightest or bound > tightest[key]:
            tightest[key] = bound
    return HPolyhedron(p.dimension, tuple(LinearInequality(a, b) for a, b in tightest.items()))
