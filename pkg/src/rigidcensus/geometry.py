"""Exact points, point sets, configuration tuples, and generators.

Coordinates are arbitrary-precision rationals throughout; every comparison
downstream (distance keys, matrix ranks, non-singularity) is exact, so no
floating-point value ever enters a census or a rank computation.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .errors import ParseError

__all__ = [
    "Point",
    "PointSet",
    "ConfigTuple",
    "as_rational",
    "squared_distance",
    "difference",
    "lattice_point_set",
    "random_point_set",
    "is_nonsingular",
    "parse_point_set",
    "load_point_set",
    "parse_config_tuple",
    "load_config_tuple",
]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction, "p/q" string, or float to an exact Fraction.

    Floats are converted to their exact binary value, so isometry images
    computed in floating point can still be carried through the exact paths.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.match(text):
            raise ValueError(f"not an integer or p/q rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational coordinate")


class Point:
    """An exact point in d-dimensional space."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        coords = tuple(as_rational(c) for c in coords)
        if not coords:
            raise ValueError("a point needs at least one coordinate")
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __setattr__(self, name, value):
        raise AttributeError("Point is immutable")

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        return isinstance(other, Point) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"Point({', '.join(str(c) for c in self.coords)})"


def difference(p: Point, q: Point) -> tuple[Fraction, ...]:
    """The exact vector p - q."""
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")
    return tuple(a - b for a, b in zip(p.coords, q.coords))


def squared_distance(p: Point, q: Point) -> Fraction:
    """Exact squared Euclidean distance between two points."""
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")
    return sum(((a - b) * (a - b) for a, b in zip(p.coords, q.coords)), Fraction(0))


def _coerce_point(obj, dim: int | None) -> Point:
    point = obj if isinstance(obj, Point) else Point(obj)
    if dim is not None and point.dim != dim:
        raise ValueError(f"point dimension {point.dim} does not match {dim}")
    return point


class PointSet:
    """A finite set of distinct points sharing one ambient dimension.

    Construction deduplicates while preserving first-occurrence order, so
    reports and tie-breaking rules are reproducible.
    """

    __slots__ = ("dim", "points")

    def __init__(self, points: Iterable):
        seen: dict[Point, None] = {}
        dim = None
        for obj in points:
            point = _coerce_point(obj, dim)
            dim = point.dim
            seen.setdefault(point, None)
        if not seen:
            raise ValueError("a point set needs at least one point")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "points", tuple(seen))

    def __setattr__(self, name, value):
        raise AttributeError("PointSet is immutable")

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, point):
        return point in set(self.points)

    def __eq__(self, other):
        return (
            isinstance(other, PointSet)
            and self.dim == other.dim
            and self.points == other.points
        )

    def __hash__(self):
        return hash((self.dim, self.points))

    def __repr__(self):
        return f"PointSet(n={len(self.points)}, d={self.dim})"


class ConfigTuple:
    """An ordered tuple of k+1 points (repeats allowed) in one dimension."""

    __slots__ = ("dim", "points")

    def __init__(self, points: Iterable):
        coerced = []
        dim = None
        for obj in points:
            point = _coerce_point(obj, dim)
            dim = point.dim
            coerced.append(point)
        if len(coerced) < 2:
            raise ValueError("a configuration tuple needs at least two points")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "points", tuple(coerced))

    @property
    def k(self) -> int:
        return len(self.points) - 1

    def __setattr__(self, name, value):
        raise AttributeError("ConfigTuple is immutable")

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __eq__(self, other):
        return isinstance(other, ConfigTuple) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"ConfigTuple(k={self.k}, d={self.dim})"


def lattice_point_set(s: int) -> PointSet:
    """All integer points of {0..s} x {0..s} in row-major order."""
    if s < 0:
        raise ValueError("lattice size must be nonnegative")
    return PointSet(Point((x, y)) for x in range(s + 1) for y in range(s + 1))


def random_point_set(n: int, d: int, bound: int, seed: int) -> PointSet:
    """n distinct integer points drawn uniformly from [-bound, bound]^d.

    The stream is seeded, so a fixed (n, d, bound, seed) reproduces the same
    point set bit for bit; collisions are resampled.
    """
    if n < 1 or d < 1 or bound < 1:
        raise ValueError("need n >= 1, d >= 1, bound >= 1")
    capacity = (2 * bound + 1) ** d
    if n > capacity:
        raise ValueError(
            f"cannot place {n} distinct points in a grid of {capacity} cells"
        )
    rng = random.Random(seed)
    seen: dict[tuple, None] = {}
    while len(seen) < n:
        candidate = tuple(rng.randint(-bound, bound) for _ in range(d))
        seen.setdefault(candidate, None)
    return PointSet(Point(c) for c in seen)


def is_nonsingular(t: ConfigTuple) -> bool:
    """Whether the first d+1 points of the tuple are affinely independent.

    Only the leading d+1 points matter; reorderings are deliberately not
    considered here (censuses expose an opt-in any-order variant).
    """
    d = t.dim
    if len(t.points) < d + 1:
        raise ValueError(
            f"non-singularity needs at least d+1 = {d + 1} points, got {len(t.points)}"
        )
    base = t.points[0]
    rows = [difference(t.points[i], base) for i in range(1, d + 1)]
    return linalg.exact_rank(rows) == d


def _parse_coordinate_lines(text: str, source: str):
    rows = []
    dim = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        coords = []
        for field in fields:
            if not _RATIONAL_RE.match(field):
                raise ParseError(
                    f"bad coordinate {field!r} (expected integer or p/q)",
                    source,
                    lineno,
                )
            coords.append(Fraction(field))
        if dim is None:
            dim = len(coords)
        elif len(coords) != dim:
            raise ParseError(
                f"expected {dim} coordinates, got {len(coords)}", source, lineno
            )
        rows.append(Point(coords))
    if not rows:
        raise ParseError("no points found", source)
    return rows


def parse_point_set(text: str, source: str = "<string>") -> PointSet:
    """Parse the point-set file format.

    One point per line; coordinates are integers or "p/q" rationals separated
    by commas; '#' starts a comment line; the dimension is inferred from the
    first point and enforced thereafter. Duplicate points are merged.
    """
    return PointSet(_parse_coordinate_lines(text, source))


def load_point_set(path) -> PointSet:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_point_set(handle.read(), source=str(path))


def parse_config_tuple(text: str, source: str = "<string>") -> ConfigTuple:
    """Parse a configuration tuple: the point-set format, order kept, repeats allowed."""
    return ConfigTuple(_parse_coordinate_lines(text, source))


def load_config_tuple(path) -> ConfigTuple:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_config_tuple(handle.read(), source=str(path))
