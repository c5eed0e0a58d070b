"""Exact incidence kernel for projective geometry over the rationals.

Every geometric element is stored in a canonical homogeneous form: integer
coordinates with greatest common divisor 1 whose first nonzero entry is
positive.  The canonical form is unique per projective element, so equality
of elements is componentwise equality of their coordinate tuples and all
predicates in this package are exact (no tolerances anywhere).

Coordinate conventions
----------------------

Planar points and lines carry three coordinates ``(x0 : x1 : x2)``; the
affine chart used throughout is ``x2 = 1``, so the affine point ``(x, y)``
is ``(x : y : 1)`` and points with ``x2 = 0`` are ideal (at infinity).
Spatial points and planes carry four coordinates ``(x0 : x1 : x2 : x3)``
with affine chart ``x3 = 1``; the affine point ``(x, y, z)`` is
``(x : y : z : 1)``.

The canonical *drawing plane* is ``x2 = 0``, i.e. the plane with
coefficients ``(0 : 0 : 1 : 0)``.  ``embed_drawing`` maps the planar point
``(x0 : x1 : x2)`` to the spatial point ``(x0 : x1 : 0 : x2)`` and
``chart_drawing`` inverts it.

Spatial lines use Pluecker coordinates in the fixed order

    (p01, p02, p03, p23, p31, p12),   p_ij = a_i * b_j - a_j * b_i

for a line through points ``a`` and ``b``.  Note the fourth-to-sixth
entries are ``p23, p31, p12`` (not ``p13``): with this ordering the
Grassmann-Pluecker relation reads

    p01 * p23 + p02 * p31 + p03 * p12 = 0

and two lines ``p``, ``q`` meet (are coplanar) exactly when the reciprocal
bilinear form

    p01*q23 + p02*q31 + p03*q12 + p23*q01 + p31*q02 + p12*q03

vanishes.  Sign conventions for Pluecker coordinates differ between texts;
all consumers of this package should rely on the ordering above.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterator, Union

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "Scalar",
    "GeometryError",
    "ZeroVector",
    "CoincidentPoints",
    "CoincidentLines",
    "CollinearPoints",
    "LineInPlane",
    "CenterOnTarget",
    "ProjectingCenter",
    "NotOnDrawingPlane",
    "PlueckerViolation",
    "Point2",
    "Line2",
    "Point3",
    "Plane3",
    "Line3",
    "DRAWING_PLANE",
    "normalize",
    "join2",
    "meet2",
    "collinear2",
    "points_on_line2",
    "line3_through",
    "plane_through",
    "meet_line_plane",
    "meet_lines3",
    "points_on_line3",
    "collinear3",
    "coplanarity_det",
    "central_project",
    "embed_drawing",
    "chart_drawing",
]


class GeometryError(Exception):
    """Base class for all geometric failures raised by this package."""


class ZeroVector(GeometryError):
    """All homogeneous coordinates are zero."""


class CoincidentPoints(GeometryError):
    """Two points that must be distinct coincide."""


class CoincidentLines(GeometryError):
    """Two lines that must be distinct coincide."""


class CollinearPoints(GeometryError):
    """Three points that must span a plane are collinear."""


class LineInPlane(GeometryError):
    """A line meant to pierce a plane lies inside it."""


class CenterOnTarget(GeometryError):
    """A projection center lies on the target plane."""


class ProjectingCenter(GeometryError):
    """Attempt to project the center of the projection itself."""


class NotOnDrawingPlane(GeometryError):
    """A spatial point expected on the drawing plane x2 = 0 is off it."""


class PlueckerViolation(GeometryError):
    """Six coordinates that do not satisfy the Grassmann-Pluecker relation."""


def normalize(coords) -> tuple[int, ...]:
    """Canonical integer form of a homogeneous coordinate tuple.

    Clears denominators with their lcm, divides by the gcd and flips signs
    so the first nonzero entry is positive.  Raises ZeroVector if every
    coordinate is zero.  Floats are rejected: this kernel is exact.
    """
    fracs = []
    for c in coords:
        if isinstance(c, float):
            raise TypeError("coordinates must be exact (int or Fraction), not float")
        fracs.append(Fraction(c))
    if not any(fracs):
        raise ZeroVector("all homogeneous coordinates are zero")
    mult = lcm(*(f.denominator for f in fracs))
    ints = [int(f * mult) for f in fracs]
    g = gcd(*ints)
    ints = [n // g for n in ints]
    if next(n for n in ints if n) < 0:
        ints = [-n for n in ints]
    return tuple(ints)


def _fmt(coords: tuple[int, ...]) -> str:
    return ":".join(str(c) for c in coords)


@dataclass(frozen=True)
class Point2:
    """Point of the projective plane, canonical coordinates (x0 : x1 : x2)."""

    coords: tuple[int, int, int]

    def __init__(self, *coords: Scalar):
        if len(coords) != 3:
            raise TypeError("Point2 takes exactly three homogeneous coordinates")
        object.__setattr__(self, "coords", normalize(coords))

    @classmethod
    def affine(cls, x: Scalar, y: Scalar) -> "Point2":
        return cls(x, y, 1)

    @property
    def is_ideal(self) -> bool:
        return self.coords[2] == 0

    @property
    def affine_coords(self) -> tuple[Fraction, Fraction]:
        x0, x1, x2 = self.coords
        if x2 == 0:
            raise ZeroVector(f"ideal point {self!r} has no affine coordinates")
        return Fraction(x0, x2), Fraction(x1, x2)

    def __repr__(self) -> str:
        return f"Point2({_fmt(self.coords)})"


@dataclass(frozen=True)
class Line2:
    """Line of the projective plane; a point x lies on it iff l . x = 0."""

    coords: tuple[int, int, int]

    def __init__(self, *coords: Scalar):
        if len(coords) != 3:
            raise TypeError("Line2 takes exactly three homogeneous coefficients")
        object.__setattr__(self, "coords", normalize(coords))

    def contains(self, p: Point2) -> bool:
        return sum(a * b for a, b in zip(self.coords, p.coords)) == 0

    @property
    def is_ideal(self) -> bool:
        """True for the line at infinity x2 = 0."""
        return self.coords[0] == 0 and self.coords[1] == 0

    def __repr__(self) -> str:
        return f"Line2({_fmt(self.coords)})"


@dataclass(frozen=True)
class Point3:
    """Point of projective space, canonical coordinates (x0 : x1 : x2 : x3)."""

    coords: tuple[int, int, int, int]

    def __init__(self, *coords: Scalar):
        if len(coords) != 4:
            raise TypeError("Point3 takes exactly four homogeneous coordinates")
        object.__setattr__(self, "coords", normalize(coords))

    @classmethod
    def affine(cls, x: Scalar, y: Scalar, z: Scalar) -> "Point3":
        return cls(x, y, z, 1)

    def __repr__(self) -> str:
        return f"Point3({_fmt(self.coords)})"


@dataclass(frozen=True)
class Plane3:
    """Plane of projective space; a point x lies on it iff a . x = 0."""

    coords: tuple[int, int, int, int]

    def __init__(self, *coords: Scalar):
        if len(coords) != 4:
            raise TypeError("Plane3 takes exactly four homogeneous coefficients")
        object.__setattr__(self, "coords", normalize(coords))

    def contains(self, p: Point3) -> bool:
        return sum(a * b for a, b in zip(self.coords, p.coords)) == 0

    def __repr__(self) -> str:
        return f"Plane3({_fmt(self.coords)})"


@dataclass(frozen=True)
class Line3:
    """Spatial line in Pluecker coordinates (p01, p02, p03, p23, p31, p12).

    The constructor enforces the Grassmann-Pluecker relation
    p01*p23 + p02*p31 + p03*p12 = 0, which characterises the six-tuples
    that actually describe lines.
    """

    pluecker: tuple[int, int, int, int, int, int]

    def __init__(self, *pluecker: Scalar):
        if len(pluecker) != 6:
            raise TypeError("Line3 takes exactly six Pluecker coordinates")
        coords = normalize(pluecker)
        p01, p02, p03, p23, p31, p12 = coords
        if p01 * p23 + p02 * p31 + p03 * p12 != 0:
            raise PlueckerViolation(
                f"({_fmt(coords)}) violates the Grassmann-Pluecker relation"
            )
        object.__setattr__(self, "pluecker", coords)

    def contains(self, x: Point3) -> bool:
        """Incidence test: all 3x3 minors of the stacked matrix vanish."""
        p01, p02, p03, p23, p31, p12 = self.pluecker
        x0, x1, x2, x3 = x.coords
        return (
            p01 * x2 - p02 * x1 + p12 * x0 == 0
            and p01 * x3 - p03 * x1 - p31 * x0 == 0
            and p02 * x3 - p03 * x2 + p23 * x0 == 0
            and p12 * x3 + p31 * x2 + p23 * x1 == 0
        )

    def __repr__(self) -> str:
        return f"Line3({_fmt(self.pluecker)})"


#: The canonical drawing plane x2 = 0.
DRAWING_PLANE = Plane3(0, 0, 1, 0)

_BASIS3 = (Point3(1, 0, 0, 0), Point3(0, 1, 0, 0), Point3(0, 0, 1, 0), Point3(0, 0, 0, 1))


def _cross(u: tuple[int, int, int], v: tuple[int, int, int]) -> tuple[int, int, int]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def join2(p: Point2, q: Point2) -> Line2:
    """Line through two distinct planar points (cross product)."""
    if p == q:
        raise CoincidentPoints(f"cannot join {p!r} with itself")
    return Line2(*_cross(p.coords, q.coords))


def meet2(l: Line2, m: Line2) -> Point2:
    """Intersection point of two distinct planar lines (cross product)."""
    if l == m:
        raise CoincidentLines(f"cannot intersect {l!r} with itself")
    return Point2(*_cross(l.coords, m.coords))


def collinear2(p: Point2, q: Point2, r: Point2) -> bool:
    """True iff the 3x3 coordinate determinant vanishes.

    A triple with a coincident pair is collinear by this convention, which
    is exactly what perspectivity checks downstream need.
    """
    (a, b, c), (d, e, f), (g, h, i) = p.coords, q.coords, r.coords
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g) == 0


def points_on_line2(l: Line2) -> tuple[Point2, Point2]:
    """Two distinct points on a planar line, deterministically chosen."""
    found: list[Point2] = []
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        c = _cross(l.coords, e)
        if any(c):
            p = Point2(*c)
            if p not in found:
                found.append(p)
        if len(found) == 2:
            return found[0], found[1]
    raise ZeroVector(f"no two distinct points found on {l!r}")  # pragma: no cover


def line3_through(a: Point3, b: Point3) -> Line3:
    """Pluecker line through two distinct spatial points."""
    if a == b:
        raise CoincidentPoints(f"cannot join {a!r} with itself")
    a0, a1, a2, a3 = a.coords
    b0, b1, b2, b3 = b.coords
    return Line3(
        a0 * b1 - a1 * b0,  # p01
        a0 * b2 - a2 * b0,  # p02
        a0 * b3 - a3 * b0,  # p03
        a2 * b3 - a3 * b2,  # p23
        a3 * b1 - a1 * b3,  # p31
        a1 * b2 - a2 * b1,  # p12
    )


def plane_through(a: Point3, b: Point3, c: Point3) -> Plane3:
    """Plane spanned by three non-collinear spatial points.

    Coefficients are the signed 3x3 minors of the stacked 3x4 coordinate
    matrix; a zero vector means the points are collinear (or coincident).
    """
    rows = (a.coords, b.coords, c.coords)

    def minor(skip: int) -> int:
        cols = [j for j in range(4) if j != skip]
        (m00, m01, m02), (m10, m11, m12), (m20, m21, m22) = (
            tuple(row[j] for j in cols) for row in rows
        )
        return (
            m00 * (m11 * m22 - m12 * m21)
            - m01 * (m10 * m22 - m12 * m20)
            + m02 * (m10 * m21 - m11 * m20)
        )

    coeffs = tuple((-1) ** k * minor(k) for k in range(4))
    if not any(coeffs):
        raise CollinearPoints(f"{a!r}, {b!r}, {c!r} do not span a plane")
    return Plane3(*coeffs)


def _pierce(line: Line3, plane: Plane3) -> tuple[int, int, int, int]:
    """Raw Pluecker-matrix product P . a (zero vector iff line lies in plane)."""
    p01, p02, p03, p23, p31, p12 = line.pluecker
    a0, a1, a2, a3 = plane.coords
    return (
        p01 * a1 + p02 * a2 + p03 * a3,
        -p01 * a0 + p12 * a2 - p31 * a3,
        -p02 * a0 - p12 * a1 + p23 * a3,
        -p03 * a0 + p31 * a1 - p23 * a2,
    )


def meet_line_plane(line: Line3, plane: Plane3) -> Point3:
    """Unique intersection point of a line with a plane not containing it."""
    x = _pierce(line, plane)
    if not any(x):
        raise LineInPlane(f"{line!r} lies inside {plane!r}")
    return Point3(*x)


def points_on_line3(line: Line3) -> tuple[Point3, Point3]:
    """Two distinct points spanning a spatial line.

    The nonzero columns of the antisymmetric Pluecker matrix are points of
    the line; columns j and k are independent exactly when p_jk is nonzero.
    """
    p01, p02, p03, p23, p31, p12 = line.pluecker
    cols = (
        (0, -p01, -p02, -p03),
        (p01, 0, -p12, p31),
        (p02, p12, 0, -p23),
        (p03, -p31, p23, 0),
    )
    pairs = ((0, 1, p01), (0, 2, p02), (0, 3, p03), (1, 2, p12), (1, 3, -p31), (2, 3, p23))
    for j, k, pjk in pairs:
        if pjk != 0:
            return Point3(*cols[j]), Point3(*cols[k])
    raise ZeroVector("degenerate Pluecker coordinates")  # pragma: no cover


def meet_lines3(l1: Line3, l2: Line3) -> Point3 | None:
    """Common point of two coplanar spatial lines, or None when skew.

    The reciprocal bilinear form decides coplanarity.  For coplanar
    distinct lines the common point is found by cutting l2 with a plane
    through l1 that differs from the common plane; some coordinate basis
    point always provides such a plane.
    """
    if l1 == l2:
        raise CoincidentLines(f"cannot intersect {l1!r} with itself")
    p = l1.pluecker
    q = l2.pluecker
    form = p[0] * q[3] + p[1] * q[4] + p[2] * q[5] + p[3] * q[0] + p[4] * q[1] + p[5] * q[2]
    if form != 0:
        return None
    u, v = points_on_line3(l1)
    for z in _BASIS3:
        if l1.contains(z):
            continue
        plane = plane_through(u, v, z)
        x = _pierce(l2, plane)
        if any(x):
            return Point3(*x)
    raise ZeroVector("no cutting plane found")  # pragma: no cover


def collinear3(a: Point3, b: Point3, c: Point3) -> bool:
    """Spatial collinearity; coincident pairs count as collinear."""
    if a == b or a == c or b == c:
        return True
    return line3_through(a, b).contains(c)


def coplanarity_det(a: Point3, b: Point3, c: Point3, d: Point3) -> int:
    """4x4 determinant of the canonical coordinates of four points.

    Zero exactly when the points are coplanar.  Because canonical forms are
    unique, the integer value itself is deterministic and can serve as a
    certificate of non-planarity.
    """
    m = (a.coords, b.coords, c.coords, d.coords)

    def det3(rows: tuple[tuple[int, ...], ...], cols: tuple[int, ...]) -> int:
        (r0, r1, r2) = rows
        c0, c1, c2 = cols
        return (
            r0[c0] * (r1[c1] * r2[c2] - r1[c2] * r2[c1])
            - r0[c1] * (r1[c0] * r2[c2] - r1[c2] * r2[c0])
            + r0[c2] * (r1[c0] * r2[c1] - r1[c1] * r2[c0])
        )

    total = 0
    rest = (m[1], m[2], m[3])
    for j in range(4):
        cols = tuple(k for k in range(4) if k != j)
        total += (-1) ** j * m[0][j] * det3(rest, cols)
    return total


def central_project(center: Point3, target: Plane3, x: Point3) -> Point3:
    """Image of x on the target plane as seen from the center.

    Points already on the target are fixed.  The center must be off the
    target plane and x must differ from the center.
    """
    if target.contains(center):
        raise CenterOnTarget(f"projection center {center!r} lies on {target!r}")
    if x == center:
        raise ProjectingCenter(f"cannot project the center {center!r} itself")
    return meet_line_plane(line3_through(center, x), target)


def embed_drawing(p: Point2) -> Point3:
    """Embed a planar point into the drawing plane x2 = 0 in space."""
    x0, x1, x2 = p.coords
    return Point3(x0, x1, 0, x2)


def chart_drawing(x: Point3) -> Point2:
    """Inverse of embed_drawing for points on the drawing plane."""
    x0, x1, x2, x3 = x.coords
    if x2 != 0:
        raise NotOnDrawingPlane(f"{x!r} is not on the drawing plane x2 = 0")
    return Point2(x0, x1, x3)
