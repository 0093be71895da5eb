"""Exact projective geometry for line arrangements in the projective plane.

Everything here is integer arithmetic. Lines and points are homogeneous
coordinate triples kept in a canonical form (gcd-reduced, first nonzero
entry positive), so equality and hashing are plain tuple operations and
the intersection lattice can be assembled by dictionary grouping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "ProjLine",
    "ProjPoint",
    "ProjArrangement",
    "IntersectionLattice",
    "AffineArrangement",
    "parse_line",
    "intersect",
    "lattice",
    "mu",
    "is_essential",
    "decone",
    "ZeroLineError",
    "IdenticalLinesError",
    "DuplicateLineError",
    "TooFewLinesError",
    "BadIndexError",
    "BadKError",
]


class ZeroLineError(ValueError):
    """The triple (0, 0, 0) defines neither a line nor a point."""


class IdenticalLinesError(ValueError):
    """Tried to intersect a line with itself."""


class DuplicateLineError(ValueError):
    """An arrangement listed the same line twice."""


class TooFewLinesError(ValueError):
    """Arrangements need at least three lines."""


class BadIndexError(IndexError):
    """Line index outside the arrangement."""


class BadKError(ValueError):
    """Divisibility threshold must be at least 2."""


def _canonical(triple) -> tuple[int, int, int]:
    a, b, c = (int(t) for t in triple)
    if a == 0 and b == 0 and c == 0:
        raise ZeroLineError("all three coordinates are zero")
    g = math.gcd(math.gcd(abs(a), abs(b)), abs(c))
    a, b, c = a // g, b // g, c // g
    for t in (a, b, c):
        if t:
            if t < 0:
                a, b, c = -a, -b, -c
            break
    return a, b, c


def _dot(u, v) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


@dataclass(frozen=True, order=True)
class ProjLine:
    """A line a*x + b*y + c*z = 0, canonicalized on construction."""

    coeffs: tuple[int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _canonical(self.coeffs))

    def contains(self, point: "ProjPoint") -> bool:
        return _dot(self.coeffs, point.coords) == 0

    def __str__(self) -> str:
        return "[{} {} {}]".format(*self.coeffs)


@dataclass(frozen=True, order=True)
class ProjPoint:
    """A point (x : y : z), canonicalized on construction."""

    coords: tuple[int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "coords", _canonical(self.coords))

    def on(self, line: ProjLine) -> bool:
        return line.contains(self)

    def __str__(self) -> str:
        return "({}:{}:{})".format(*self.coords)


def parse_line(raw) -> ProjLine:
    """Canonicalize an integer coefficient triple into a ProjLine."""
    raw = tuple(raw)
    if len(raw) != 3:
        raise ZeroLineError(f"expected three coefficients, got {len(raw)}")
    return ProjLine(raw)


def intersect(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """Exact intersection of two distinct lines (coefficient cross product)."""
    if l1 == l2:
        raise IdenticalLinesError(f"{l1} intersected with itself")
    u, v = l1.coeffs, l2.coeffs
    return ProjPoint(
        (
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        )
    )


@dataclass(frozen=True)
class ProjArrangement:
    """An ordered collection of at least three pairwise distinct lines.

    Line indices run 0..n, so an arrangement has n + 1 lines. Duplicates
    are rejected outright since every multiplicity count downstream
    assumes a simple arrangement.
    """

    lines: tuple[ProjLine, ...]

    def __post_init__(self):
        lines = tuple(self.lines)
        object.__setattr__(self, "lines", lines)
        if len(lines) < 3:
            raise TooFewLinesError(f"need at least 3 lines, got {len(lines)}")
        seen: dict[ProjLine, int] = {}
        for i, line in enumerate(lines):
            if line in seen:
                raise DuplicateLineError(
                    f"lines {seen[line]} and {i} coincide after canonicalization: {line}"
                )
            seen[line] = i

    @classmethod
    def from_coeffs(cls, triples) -> "ProjArrangement":
        return cls(tuple(parse_line(t) for t in triples))

    def __len__(self) -> int:
        return len(self.lines)

    @property
    def n(self) -> int:
        """Highest line index (the arrangement has n + 1 lines)."""
        return len(self.lines) - 1

    def check_index(self, i: int) -> None:
        if not 0 <= i < len(self.lines):
            raise BadIndexError(f"line index {i} out of range 0..{len(self.lines) - 1}")


@dataclass(frozen=True)
class IntersectionLattice:
    """All pairwise intersection points with their sorted incident line sets.

    Points are ordered by incident tuple, which is deterministic because
    two distinct points never share two lines.
    """

    points: tuple[tuple[ProjPoint, tuple[int, ...]], ...]

    def __len__(self) -> int:
        return len(self.points)

    def multiplicities(self) -> list[int]:
        return [len(inc) for _, inc in self.points]

    def histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for m in self.multiplicities():
            hist[m] = hist.get(m, 0) + 1
        return hist

    def on_line(self, i: int) -> list[tuple[ProjPoint, tuple[int, ...]]]:
        return [(pt, inc) for pt, inc in self.points if i in inc]

    def incidences(self) -> dict[ProjPoint, tuple[int, ...]]:
        return {pt: inc for pt, inc in self.points}


def lattice(arr: ProjArrangement) -> IntersectionLattice:
    """Group the C(n+1, 2) pairwise intersections by coincident point."""
    incident: dict[ProjPoint, set[int]] = {}
    for i, j in combinations(range(len(arr.lines)), 2):
        pt = intersect(arr.lines[i], arr.lines[j])
        incident.setdefault(pt, set()).update((i, j))
    points = sorted(
        ((pt, tuple(sorted(inc))) for pt, inc in incident.items()),
        key=lambda item: item[1],
    )
    return IntersectionLattice(tuple(points))


def mu(arr: ProjArrangement, i: int, k: int, lat: IntersectionLattice | None = None) -> int:
    """Number of lattice points on line i whose multiplicity k divides."""
    arr.check_index(i)
    if k < 2:
        raise BadKError(f"k must be at least 2, got {k}")
    if lat is None:
        lat = lattice(arr)
    return sum(1 for _, inc in lat.points if i in inc and len(inc) % k == 0)


def is_essential(arr: ProjArrangement, lat: IntersectionLattice | None = None) -> bool:
    """True when the arrangement has at least two intersection points."""
    if lat is None:
        lat = lattice(arr)
    return len(lat) >= 2


@dataclass(frozen=True)
class AffineArrangement:
    """A projective arrangement with one line sent to infinity.

    The n surviving lines keep their source order and are partitioned
    into parallel classes, one class per intersection point on the
    infinity line; classes are ordered by smallest member index.
    ``class_points[a]`` stores that point together with m_a, the number
    of arrangement lines through it other than the infinity line (so the
    point has multiplicity m_a + 1, and m_a equals the class size).
    Intersection points away from the infinity line are collected in
    ``finite_points`` with their incident source indices.
    """

    source: ProjArrangement
    infinity_index: int
    affine_indices: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    class_points: tuple[tuple[ProjPoint, int], ...]
    finite_points: tuple[tuple[ProjPoint, tuple[int, ...]], ...]

    @property
    def n(self) -> int:
        return len(self.affine_indices)

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def position(self, source_index: int) -> int:
        """Rank of a source line among the affine lines (its generator index)."""
        try:
            return self.affine_indices.index(source_index)
        except ValueError:
            raise BadIndexError(f"line {source_index} is not an affine line") from None

    def class_of_positions(self) -> tuple[int, ...]:
        """Parallel class index of each affine line, in generator order."""
        out = [0] * self.n
        for a, members in enumerate(self.classes):
            for src in members:
                out[self.position(src)] = a
        return tuple(out)

    def classes_as_positions(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.position(s) for s in members) for members in self.classes)

    def finite_points_as_positions(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.position(s) for s in inc) for _, inc in self.finite_points)


def decone(
    arr: ProjArrangement,
    infinity_index: int,
    lat: IntersectionLattice | None = None,
) -> AffineArrangement:
    """Remove one line and organize the rest as an affine arrangement."""
    arr.check_index(infinity_index)
    if lat is None:
        lat = lattice(arr)
    inf_line = arr.lines[infinity_index]
    affine = tuple(i for i in range(len(arr.lines)) if i != infinity_index)

    by_point: dict[ProjPoint, list[int]] = {}
    for i in affine:
        by_point.setdefault(intersect(arr.lines[i], inf_line), []).append(i)
    classes = sorted(by_point.values())

    incidences = lat.incidences()
    class_points = []
    for members in classes:
        pt = intersect(arr.lines[members[0]], inf_line)
        m = len(incidences[pt]) - 1
        # every line through pt other than the infinity line is affine
        assert m == len(members)
        class_points.append((pt, m))

    finite = sorted(
        ((pt, inc) for pt, inc in lat.points if not inf_line.contains(pt)),
        key=lambda item: item[1],
    )
    return AffineArrangement(
        source=arr,
        infinity_index=infinity_index,
        affine_indices=affine,
        classes=tuple(tuple(c) for c in classes),
        class_points=tuple(class_points),
        finite_points=tuple(finite),
    )
