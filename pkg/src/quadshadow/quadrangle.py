"""Complete quadrangles: labeled vertices, sides, diagonal points, traces.

A complete quadrangle is four points P, Q, R, S of the projective plane,
no three collinear.  Its six sides are the joins of vertex pairs, labeled
QR, RP, PQ, SP, SQ, SR; sides are *opposite* when they share no vertex,
giving the three pairs {QR, SP}, {RP, SQ}, {PQ, SR}.  Opposite sides meet
in the diagonal points

    A = SP . QR,    B = SQ . RP,    C = SR . PQ,

which over the rationals always form a genuine triangle.  Labels matter
throughout this package: quadrangles are compared label by label, and the
separate helper ``same_vertex_set`` compares them as bare point sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .kernel import GeometryError, Line2, Point2, join2, meet2, collinear2

__all__ = [
    "VERTEX_LABELS",
    "SIDE_LABELS",
    "OPPOSITE_SIDES",
    "RepeatedVertex",
    "CollinearTriple",
    "LineThroughVertex",
    "Quadrangle",
    "SideSet",
    "DiagonalTriangle",
    "QuadrangularTrace",
    "validate_quadrangle",
    "same_vertex_set",
    "sides",
    "diagonal_triangle",
    "quadrangular_trace",
]

VERTEX_LABELS = ("P", "Q", "R", "S")
SIDE_LABELS = ("QR", "RP", "PQ", "SP", "SQ", "SR")
OPPOSITE_SIDES = (("QR", "SP"), ("RP", "SQ"), ("PQ", "SR"))


class RepeatedVertex(GeometryError):
    """Two labeled vertices coincide."""


class CollinearTriple(GeometryError):
    """Three labeled vertices are collinear."""


class LineThroughVertex(GeometryError):
    """A trace line passes through a vertex of the quadrangle."""


def _check_vertices(p: Point2, q: Point2, r: Point2, s: Point2) -> None:
    labeled = tuple(zip(VERTEX_LABELS, (p, q, r, s)))
    for (la, a), (lb, b) in combinations(labeled, 2):
        if a == b:
            raise RepeatedVertex(f"vertices {la} and {lb} coincide at {a!r}")
    for (la, a), (lb, b), (lc, c) in combinations(labeled, 3):
        if collinear2(a, b, c):
            raise CollinearTriple(f"vertices {la}, {lb}, {lc} are collinear")


@dataclass(frozen=True)
class Quadrangle:
    """Four labeled points, no three collinear.  Checked on construction."""

    P: Point2
    Q: Point2
    R: Point2
    S: Point2

    def __post_init__(self) -> None:
        _check_vertices(self.P, self.Q, self.R, self.S)

    @property
    def vertices(self) -> tuple[Point2, Point2, Point2, Point2]:
        return (self.P, self.Q, self.R, self.S)

    def vertex(self, label: str) -> Point2:
        if label not in VERTEX_LABELS:
            raise KeyError(label)
        return getattr(self, label)

    def labeled(self) -> dict[str, Point2]:
        return {lab: getattr(self, lab) for lab in VERTEX_LABELS}


def validate_quadrangle(p: Point2, q: Point2, r: Point2, s: Point2) -> Quadrangle:
    """Checked constructor; raises RepeatedVertex or CollinearTriple."""
    return Quadrangle(p, q, r, s)


def same_vertex_set(q1: Quadrangle, q2: Quadrangle) -> bool:
    """Compare two quadrangles as unlabeled point sets."""
    return set(q1.vertices) == set(q2.vertices)


@dataclass(frozen=True)
class SideSet:
    """The six sides of a quadrangle, keyed by vertex-pair label."""

    QR: Line2
    RP: Line2
    PQ: Line2
    SP: Line2
    SQ: Line2
    SR: Line2

    def __getitem__(self, label: str) -> Line2:
        if label not in SIDE_LABELS:
            raise KeyError(label)
        return getattr(self, label)

    def labeled(self) -> dict[str, Line2]:
        return {lab: getattr(self, lab) for lab in SIDE_LABELS}


def sides(q: Quadrangle) -> SideSet:
    """All six sides; always defined for a valid quadrangle."""
    return SideSet(
        QR=join2(q.Q, q.R),
        RP=join2(q.R, q.P),
        PQ=join2(q.P, q.Q),
        SP=join2(q.S, q.P),
        SQ=join2(q.S, q.Q),
        SR=join2(q.S, q.R),
    )


@dataclass(frozen=True)
class DiagonalTriangle:
    """Diagonal points A = SP.QR, B = SQ.RP, C = SR.PQ."""

    A: Point2
    B: Point2
    C: Point2

    @property
    def points(self) -> tuple[Point2, Point2, Point2]:
        return (self.A, self.B, self.C)


def diagonal_triangle(q: Quadrangle) -> DiagonalTriangle:
    """Meet each pair of opposite sides.

    The three points are never collinear over the rationals, so they do
    form a triangle; callers may rely on that without re-checking.
    """
    s = sides(q)
    return DiagonalTriangle(
        A=meet2(s.SP, s.QR),
        B=meet2(s.SQ, s.RP),
        C=meet2(s.SR, s.PQ),
    )


@dataclass(frozen=True)
class QuadrangularTrace:
    """The six labeled points cut out of a line by the sides of a quadrangle."""

    line: Line2
    QR: Point2
    RP: Point2
    PQ: Point2
    SP: Point2
    SQ: Point2
    SR: Point2

    def __getitem__(self, label: str) -> Point2:
        if label not in SIDE_LABELS:
            raise KeyError(label)
        return getattr(self, label)

    def labeled(self) -> dict[str, Point2]:
        return {lab: getattr(self, lab) for lab in SIDE_LABELS}


def quadrangular_trace(q: Quadrangle, line: Line2) -> QuadrangularTrace:
    """Intersect every side with a line that avoids all four vertices.

    The opposite-side pairing of the labels is what makes the six points a
    quadrangular set; the trace preserves the labels so callers can compare
    traces of different quadrangles point by point.
    """
    for lab, v in q.labeled().items():
        if line.contains(v):
            raise LineThroughVertex(f"trace line {line!r} passes through vertex {lab}")
    s = sides(q)
    meets = {lab: meet2(s[lab], line) for lab in SIDE_LABELS}
    return QuadrangularTrace(line=line, **meets)
