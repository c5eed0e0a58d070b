"""Perspectivities from a point, Desargues axes, perspective collineations.

Two figures are perspective from a center O when every pair of homologous
points is collinear with O; a coincident homologous pair counts as
perspective, which keeps all checks total.  For triangles, Desargues'
theorem makes point-perspectivity equivalent to the collinearity of the
three homologous side intersections, and the line carrying them is the
Desargues axis.

For two labeled quadrangles, dropping one vertex leaves a triangle;
dropping S, R, Q, P in turn yields four axes named s, r, q, p, built from
the six homologous side intersections:

    s:  QR.QR'   RP.RP'   PQ.PQ'
    r:  PQ.PQ'   SQ.SQ'   SP.SP'
    q:  SP.SP'   RP.RP'   SR.SR'
    p:  SR.SR'   SQ.SQ'   QR.QR'

(primes denote the second quadrangle).  Each of the six intersections
appears on exactly two of the four axes, so the axes agree pairwise in at
least one point; when all four are one line, that line is the common axis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .kernel import (
    GeometryError,
    Line2,
    Point2,
    Scalar,
    collinear2,
    join2,
    meet2,
    normalize,
)
from .quadrangle import SIDE_LABELS, Quadrangle, sides

__all__ = [
    "CenterIsVertex",
    "HomologousSidesEqual",
    "NotPerspective",
    "NoCommonAxis",
    "InvalidPair",
    "Triple",
    "AXIS_SIDES",
    "SideAxes",
    "Collineation",
    "pair_perspective_from",
    "quad_perspective",
    "triangles_perspective_point",
    "perspective_center",
    "desargues_axis",
    "side_axes",
    "common_axis",
    "general_position",
    "perspective_collineation",
]

Triple = tuple[Point2, Point2, Point2]


class CenterIsVertex(GeometryError):
    """The proposed center coincides with a vertex of a figure."""


class HomologousSidesEqual(GeometryError):
    """A pair of homologous sides coincides, so their meet is undefined."""


class NotPerspective(GeometryError):
    """Homologous side intersections are not collinear (no axis exists)."""


class NoCommonAxis(GeometryError):
    """The four quadrangle axes s, r, q, p are not all the same line."""


class InvalidPair(GeometryError):
    """A point pair unusable for defining a perspective collineation."""


def pair_perspective_from(center: Point2, x1: Point2, x2: Point2) -> bool:
    """True iff x1 = x2 or the pair is collinear with the center.

    collinear2 already treats a coincident pair as collinear, so the whole
    convention collapses into one determinant test.
    """
    return collinear2(center, x1, x2)


def quad_perspective(center: Point2, q1: Quadrangle, q2: Quadrangle) -> bool:
    """All four labeled vertex pairs perspective from the center."""
    for q in (q1, q2):
        for lab, v in q.labeled().items():
            if v == center:
                raise CenterIsVertex(f"center {center!r} is vertex {lab}")
    return all(
        pair_perspective_from(center, q1.vertex(lab), q2.vertex(lab))
        for lab in ("P", "Q", "R", "S")
    )


def triangles_perspective_point(center: Point2, t1: Triple, t2: Triple) -> bool:
    """All three labeled vertex pairs perspective from the center."""
    for t in (t1, t2):
        if center in t:
            raise CenterIsVertex(f"center {center!r} is a triangle vertex")
    return all(pair_perspective_from(center, a, b) for a, b in zip(t1, t2))


def perspective_center(t1: Triple, t2: Triple) -> Point2:
    """The unique center two point-perspective triangles share.

    Intersects two distinct homologous joins and verifies the third pair
    against the candidate.  Raises NotPerspective when no common center
    exists, ValueError when the center is not uniquely determined (fewer
    than two distinct joins).
    """
    joins = [join2(a, b) for a, b in zip(t1, t2) if a != b]
    if len(joins) < 2:
        raise ValueError("perspective center undetermined: too few distinct pairs")
    second = next((j for j in joins[1:] if j != joins[0]), None)
    if second is None:
        raise ValueError("perspective center undetermined: homologous joins coincide")
    center = meet2(joins[0], second)
    for a, b in zip(t1, t2):
        if not pair_perspective_from(center, a, b):
            raise NotPerspective(f"pair {a!r}, {b!r} misses candidate center {center!r}")
    return center


def _triangle_sides(t: Triple) -> tuple[Line2, Line2, Line2]:
    x, y, z = t
    return (join2(y, z), join2(z, x), join2(x, y))


def _line_through_all(points: list[Point2]) -> Line2:
    """Join of three collinear points, at least two of them distinct."""
    if not collinear2(*points):
        raise NotPerspective(
            f"side intersections {points[0]!r}, {points[1]!r}, {points[2]!r} "
            "are not collinear"
        )
    first = points[0]
    other = next((p for p in points[1:] if p != first), None)
    if other is None:
        raise NotPerspective("side intersections all coincide; axis undetermined")
    return join2(first, other)


def desargues_axis(t1: Triple, t2: Triple) -> Line2:
    """Axis of two point-perspective triangles.

    Needs the three homologous side pairs distinct; raises NotPerspective
    when the three intersections fail to be collinear, which by the
    converse of Desargues' theorem means no perspectivity center exists.
    """
    sides1 = _triangle_sides(t1)
    sides2 = _triangle_sides(t2)
    meets = []
    for a, b in zip(sides1, sides2):
        if a == b:
            raise HomologousSidesEqual(f"homologous sides both equal {a!r}")
        meets.append(meet2(a, b))
    return _line_through_all(meets)


#: Defining side labels for each of the four axes.
AXIS_SIDES = {
    "s": ("QR", "RP", "PQ"),
    "r": ("PQ", "SQ", "SP"),
    "q": ("SP", "RP", "SR"),
    "p": ("SR", "SQ", "QR"),
}


@dataclass(frozen=True)
class SideAxes:
    """The four Desargues axes of a quadrangle pair plus the six meets."""

    s: Line2
    r: Line2
    q: Line2
    p: Line2
    meets: dict[str, Point2]

    def axis(self, name: str) -> Line2:
        if name not in AXIS_SIDES:
            raise KeyError(name)
        return getattr(self, name)

    def defining_meets(self, name: str) -> tuple[Point2, Point2, Point2]:
        a, b, c = AXIS_SIDES[name]
        return (self.meets[a], self.meets[b], self.meets[c])


def side_axes(q1: Quadrangle, q2: Quadrangle) -> SideAxes:
    """Compute s, r, q, p from the six homologous side intersections."""
    s1 = sides(q1)
    s2 = sides(q2)
    meets: dict[str, Point2] = {}
    for lab in SIDE_LABELS:
        if s1[lab] == s2[lab]:
            raise HomologousSidesEqual(f"homologous sides {lab} coincide at {s1[lab]!r}")
        meets[lab] = meet2(s1[lab], s2[lab])
    axes = {
        name: _line_through_all([meets[lab] for lab in labs])
        for name, labs in AXIS_SIDES.items()
    }
    return SideAxes(s=axes["s"], r=axes["r"], q=axes["q"], p=axes["p"], meets=meets)


def common_axis(q1: Quadrangle, q2: Quadrangle) -> Line2:
    """The single line carrying all four axes, when it exists."""
    axes = side_axes(q1, q2)
    if not (axes.s == axes.r == axes.q == axes.p):
        raise NoCommonAxis(
            f"axes differ: s={axes.s!r} r={axes.r!r} q={axes.q!r} p={axes.p!r}"
        )
    return axes.s


def general_position(q1: Quadrangle, q2: Quadrangle) -> bool:
    """All six homologous side pairs distinct and their meets pairwise distinct.

    Never raises; a coincident side pair simply yields False.
    """
    s1 = sides(q1)
    s2 = sides(q2)
    meets = []
    for lab in SIDE_LABELS:
        if s1[lab] == s2[lab]:
            return False
        meets.append(meet2(s1[lab], s2[lab]))
    return len(set(meets)) == len(meets)


@dataclass(frozen=True)
class Collineation:
    """Projective transformation of the plane, canonical 3x3 integer matrix.

    Acts on points by matrix multiplication and on lines by the cofactor
    matrix (inverse-transpose up to scale), so incidence is preserved.
    """

    matrix: tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]

    def __init__(self, rows) -> None:
        entries = [e for row in rows for e in row]
        if len(entries) != 9:
            raise TypeError("Collineation takes a 3x3 matrix")
        flat = normalize(entries)
        m = (flat[0:3], flat[3:6], flat[6:9])
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        if det == 0:
            raise ValueError("collineation matrix is singular")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def identity(cls) -> "Collineation":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def _cofactor(self) -> tuple[tuple[int, int, int], ...]:
        m = self.matrix

        def cof(i: int, j: int) -> int:
            rs = [r for r in range(3) if r != i]
            cs = [c for c in range(3) if c != j]
            minor = m[rs[0]][cs[0]] * m[rs[1]][cs[1]] - m[rs[0]][cs[1]] * m[rs[1]][cs[0]]
            return (-1) ** (i + j) * minor

        return tuple(tuple(cof(i, j) for j in range(3)) for i in range(3))

    def apply(self, p: Point2) -> Point2:
        return Point2(*(sum(r * c for r, c in zip(row, p.coords)) for row in self.matrix))

    def apply_line(self, l: Line2) -> Line2:
        cof = self._cofactor()
        return Line2(*(sum(r * c for r, c in zip(row, l.coords)) for row in cof))

    def apply_quadrangle(self, q: Quadrangle) -> Quadrangle:
        return Quadrangle(
            self.apply(q.P), self.apply(q.Q), self.apply(q.R), self.apply(q.S)
        )

    def compose(self, other: "Collineation") -> "Collineation":
        """Matrix product: self after other."""
        a, b = self.matrix, other.matrix
        rows = tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
            for i in range(3)
        )
        return Collineation(rows)

    def inverse(self) -> "Collineation":
        cof = self._cofactor()
        adj = tuple(tuple(cof[j][i] for j in range(3)) for i in range(3))
        return Collineation(adj)


def perspective_collineation(
    center: Point2, axis: Line2, pair: tuple[Point2, Point2]
) -> Collineation:
    """The collineation with the given center and axis mapping pair[0] to pair[1].

    Fixes the axis pointwise and every line through the center.  Both pair
    points must be off the axis, distinct from the center, and collinear
    with it; an equal pair yields the identity.  The matrix is
    I + k * center * axis^T with the multiplier k solved from the pair.
    """
    x0, x1 = pair
    if axis.contains(x0) or axis.contains(x1):
        raise InvalidPair("pair points must be off the axis")
    if x0 == center or x1 == center:
        raise InvalidPair("pair points must differ from the center")
    if not collinear2(center, x0, x1):
        raise InvalidPair("pair points must be collinear with the center")

    c = center.coords
    a = axis.coords
    v0 = x0.coords
    v1 = x1.coords

    # Solve v1 ~ alpha*v0 + beta*c on two independent coordinates.
    pivot = next(
        (i, j)
        for i in range(3)
        for j in range(i + 1, 3)
        if v0[i] * c[j] - v0[j] * c[i] != 0
    )
    i, j = pivot
    d = v0[i] * c[j] - v0[j] * c[i]
    alpha = Fraction(v1[i] * c[j] - v1[j] * c[i], d)
    beta = Fraction(v0[i] * v1[j] - v0[j] * v1[i], d)
    if alpha == 0:
        raise InvalidPair("image point lies on the center ray degenerately")

    dot = sum(ai * vi for ai, vi in zip(a, v0))
    k = beta / (alpha * dot)
    rows = tuple(
        tuple((1 if r == s else 0) + k * c[r] * a[s] for s in range(3)) for r in range(3)
    )
    return Collineation(rows)
