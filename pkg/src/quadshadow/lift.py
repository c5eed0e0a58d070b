"""Spatial witnesses: lift a correct diagram off the drawing plane.

A *witness* for a diagram (O, quad1, quad2) is a spatial quadrangle in a
plane other than the drawing plane together with two centers O1, O2 such
that projecting the spatial quadrangle from O1 yields quad1, projecting it
from O2 yields quad2, and O1, O2 are collinear with the embedded O.  Such
a witness exists exactly when the diagram is correct, and this module
constructs one in two independent ways:

* ``lift_collinear_centers`` places O1 and O2 on the vertical line through
  the embedded O by displacing O along the x2 direction by two distinct
  nonzero amounts c1, c2 (defaults 1 and -1).  Each spatial vertex is the
  intersection of the two projection rays O1-X1 and O2-X2, which meet
  because O, X1, X2 are collinear in the drawing plane.  The four
  intersection points are coplanar precisely for correct diagrams; for
  merely vertex-perspective diagrams the 4x4 coplanarity determinant is a
  nonzero integer certificate (``planarity_certificate``).

* ``lift_via_axis`` starts from the common Desargues axis o of the two
  quadrangles: the witness plane is spanned by the embedded axis and a
  deterministically chosen anchor point off the drawing plane, O1 is a
  deterministically chosen point off both planes, quad1 is projected from
  O1 onto the witness plane, and O2 is recovered as the common point of
  the rays through the lifted vertices and quad2.  Requires the six
  homologous side pairs and their intersections to be in general position.

``project_scene`` goes the other way: from a spatial quadrangle, a light
and a shadow plane (plus an optional viewpoint) it produces the planar
diagram the scene presents, with quad1 the image of the shadow and quad2
the image of the spatial quadrangle.  ``verify_witness`` re-checks a
claimed witness from scratch and reports per-clause results instead of
raising, so broken witnesses can be described, not just rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .kernel import (
    DRAWING_PLANE,
    GeometryError,
    Line2,
    Line3,
    Plane3,
    Point2,
    Point3,
    Scalar,
    central_project,
    chart_drawing,
    collinear3,
    coplanarity_det,
    embed_drawing,
    line3_through,
    meet_line_plane,
    meet_lines3,
    plane_through,
    points_on_line2,
)
from .quadrangle import SIDE_LABELS, VERTEX_LABELS, Quadrangle, diagonal_triangle
from .perspectivity import common_axis, general_position
from .checker import PlanarDiagram, decide_depiction

__all__ = [
    "NotCorrectDiagram",
    "DegenerateParameters",
    "NotGeneralPosition",
    "DegenerateScene",
    "SpatialQuadrangle",
    "Witness",
    "SpatialScene",
    "PlanarityCertificate",
    "ClauseCheck",
    "WitnessReport",
    "displaced_centers",
    "planarity_certificate",
    "lift_collinear_centers",
    "lift_via_axis",
    "scene_from_witness",
    "project_scene",
    "verify_witness",
    "witness_side_traces",
]

_SIDE_VERTICES = {
    "QR": ("Q", "R"),
    "RP": ("R", "P"),
    "PQ": ("P", "Q"),
    "SP": ("S", "P"),
    "SQ": ("S", "Q"),
    "SR": ("S", "R"),
}


class NotCorrectDiagram(GeometryError):
    """Witness construction demands a diagram that passes the checker."""


class DegenerateParameters(GeometryError):
    """Displacement parameters c1, c2 must be distinct and nonzero."""


class NotGeneralPosition(GeometryError):
    """The axis route needs six distinct side pairs with distinct meets."""


class DegenerateScene(GeometryError):
    """The scene violates its invariants or cannot be drawn from this viewpoint."""


@dataclass(frozen=True)
class SpatialQuadrangle:
    """Four spatial points with the plane they are claimed to span.

    Construction does not validate: witnesses are claims, and
    ``verify_witness`` is the judge.  The lift constructors only ever
    produce genuinely valid instances.
    """

    Pbar: Point3
    Qbar: Point3
    Rbar: Point3
    Sbar: Point3
    plane: Plane3

    @property
    def vertices(self) -> tuple[Point3, Point3, Point3, Point3]:
        return (self.Pbar, self.Qbar, self.Rbar, self.Sbar)

    def vertex(self, label: str) -> Point3:
        if label not in VERTEX_LABELS:
            raise KeyError(label)
        return getattr(self, label + "bar")

    def labeled(self) -> dict[str, Point3]:
        return {lab: self.vertex(lab) for lab in VERTEX_LABELS}


@dataclass(frozen=True)
class Witness:
    """Claimed spatial explanation of a planar diagram."""

    quad: SpatialQuadrangle
    O1: Point3
    O2: Point3
    drawing_plane: Plane3
    diagram: PlanarDiagram | None = None


@dataclass(frozen=True)
class SpatialScene:
    """A quadrangle in space, a light, a shadow plane, an optional viewpoint.

    Without a viewpoint the scene is reported in the shadow plane's own
    chart (the flattening drops the coordinate of the plane's first
    nonzero coefficient, which for the drawing plane is plain
    chart_drawing).
    """

    quad: SpatialQuadrangle
    light: Point3
    shadow_plane: Plane3
    viewpoint: Point3 | None = None


@dataclass(frozen=True)
class PlanarityCertificate:
    """Attempted two-ray lift of a vertex-perspective diagram.

    ``determinant`` is the 4x4 coplanarity determinant of the four ray
    intersections in canonical form: zero exactly for correct diagrams.
    """

    O1: Point3
    O2: Point3
    points: dict[str, Point3]
    determinant: int


@dataclass(frozen=True)
class ClauseCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of verify_witness; one entry per clause, never an exception."""

    clauses: tuple[ClauseCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.clauses)


def displaced_centers(O: Point2, c1: Scalar, c2: Scalar) -> tuple[Point3, Point3]:
    """Two points off the drawing plane, collinear with the embedded O.

    Adds c_i times the x2 basis direction to the canonical embedded
    coordinates of O, which works uniformly for affine and ideal O.
    """
    if c1 == c2 or c1 == 0 or c2 == 0:
        raise DegenerateParameters(
            f"displacements must be distinct and nonzero, got {c1} and {c2}"
        )
    e0, e1, _, e3 = embed_drawing(O).coords
    return Point3(e0, e1, c1, e3), Point3(e0, e1, c2, e3)


def planarity_certificate(
    d: PlanarDiagram, c1: Scalar = 1, c2: Scalar = -1
) -> PlanarityCertificate:
    """Intersect homologous projection rays and measure their coplanarity.

    Requires the diagram to be vertex-perspective (the rays O1-X1 and
    O2-X2 are coplanar exactly because O, X1, X2 are collinear).
    """
    verdict = decide_depiction(d)
    if not verdict.applicable:
        raise NotCorrectDiagram("diagram is not vertex-perspective; rays would be skew")
    O1, O2 = displaced_centers(d.O, c1, c2)
    points: dict[str, Point3] = {}
    for lab in VERTEX_LABELS:
        ray1 = line3_through(O1, embed_drawing(d.quad1.vertex(lab)))
        ray2 = line3_through(O2, embed_drawing(d.quad2.vertex(lab)))
        x = meet_lines3(ray1, ray2)
        assert x is not None, "perspective rays cannot be skew"
        points[lab] = x
    det = coplanarity_det(*(points[lab] for lab in VERTEX_LABELS))
    return PlanarityCertificate(O1=O1, O2=O2, points=points, determinant=det)


def lift_collinear_centers(
    d: PlanarDiagram, c1: Scalar = 1, c2: Scalar = -1
) -> Witness:
    """Build a witness with both centers on the vertical through O."""
    verdict = decide_depiction(d)
    if not verdict.correct:
        raise NotCorrectDiagram(f"diagram is not correct ({verdict.reason.value})")
    cert = planarity_certificate(d, c1, c2)
    assert cert.determinant == 0, "correct diagram lifted to non-coplanar points"
    plane = plane_through(cert.points["P"], cert.points["Q"], cert.points["R"])
    assert plane != DRAWING_PLANE
    quad = SpatialQuadrangle(
        Pbar=cert.points["P"],
        Qbar=cert.points["Q"],
        Rbar=cert.points["R"],
        Sbar=cert.points["S"],
        plane=plane,
    )
    return Witness(quad=quad, O1=cert.O1, O2=cert.O2, drawing_plane=DRAWING_PLANE, diagram=d)


#: Anchor points tried for the witness plane of the axis route.
_AXIS_ANCHORS = (
    Point3(0, 0, 1, 0),
    Point3(0, 0, 1, 1),
    Point3(1, 0, 1, 1),
)

#: Candidate first centers; no four are coplanar, so for any witness plane
#: at least one candidate avoids it (they all avoid the drawing plane).
_CENTER_CANDIDATES = (
    Point3(0, 0, 1, 1),
    Point3(1, 0, 1, 1),
    Point3(0, 1, 1, 1),
    Point3(1, 1, 2, 1),
)


def _embed_line(l: Line2) -> Line3:
    u, v = points_on_line2(l)
    return line3_through(embed_drawing(u), embed_drawing(v))


def lift_via_axis(d: PlanarDiagram) -> Witness:
    """Build a witness whose plane passes through the common axis."""
    verdict = decide_depiction(d)
    if not verdict.correct:
        raise NotCorrectDiagram(f"diagram is not correct ({verdict.reason.value})")
    if not general_position(d.quad1, d.quad2):
        raise NotGeneralPosition(
            "need six distinct homologous side pairs with six distinct meets"
        )
    axis = common_axis(d.quad1, d.quad2)
    axis_points = [embed_drawing(p) for p in points_on_line2(axis)]

    plane: Plane3 | None = None
    for anchor in _AXIS_ANCHORS:
        candidate = plane_through(axis_points[0], axis_points[1], anchor)
        if candidate != DRAWING_PLANE:
            plane = candidate
            break
    assert plane is not None, "no anchor produced a witness plane"

    O1 = next(
        c
        for c in _CENTER_CANDIDATES
        if not plane.contains(c) and not DRAWING_PLANE.contains(c)
    )

    barred: dict[str, Point3] = {}
    for lab in VERTEX_LABELS:
        ray = line3_through(O1, embed_drawing(d.quad1.vertex(lab)))
        barred[lab] = meet_line_plane(ray, plane)
    quad = SpatialQuadrangle(
        Pbar=barred["P"], Qbar=barred["Q"], Rbar=barred["R"], Sbar=barred["S"], plane=plane
    )

    ray_p = line3_through(barred["P"], embed_drawing(d.quad2.P))
    ray_q = line3_through(barred["Q"], embed_drawing(d.quad2.Q))
    O2 = meet_lines3(ray_p, ray_q)
    assert O2 is not None, "lifted rays to quad2 do not meet"
    for lab in ("R", "S"):
        ray = line3_through(barred[lab], embed_drawing(d.quad2.vertex(lab)))
        assert ray.contains(O2), "second center is not common to all four rays"
    assert collinear3(O1, O2, embed_drawing(d.O))
    return Witness(quad=quad, O1=O1, O2=O2, drawing_plane=DRAWING_PLANE, diagram=d)


def scene_from_witness(w: Witness) -> SpatialScene:
    """Read a witness as a scene: O1 is the light, O2 the viewpoint."""
    return SpatialScene(
        quad=w.quad, light=w.O1, shadow_plane=w.drawing_plane, viewpoint=w.O2
    )


def _chart_index(plane: Plane3) -> int:
    return next(i for i, c in enumerate(plane.coords) if c != 0)


def _chart_on(plane: Plane3, k: int, x: Point3) -> Point2:
    coords = [c for i, c in enumerate(x.coords) if i != k]
    return Point2(*coords)


def project_scene(s: SpatialScene) -> PlanarDiagram:
    """Flatten a scene into the diagram it presents.

    All images land on the shadow plane and are then read in that plane's
    chart: quad1 is the shadow (cast by the light), quad2 is the spatial
    quadrangle as seen from the viewpoint, and O is the seen light.  With
    no viewpoint the chart direction itself does the flattening.  Raises
    DegenerateScene when the scene breaks its invariants or when images
    collapse so that no valid diagram exists.
    """
    quad = s.quad
    for lab, x in quad.labeled().items():
        if not quad.plane.contains(x):
            raise DegenerateScene(f"vertex {lab} is off the declared plane")
    if quad.plane == s.shadow_plane:
        raise DegenerateScene("spatial quadrangle lies in the shadow plane")
    if quad.plane.contains(s.light):
        raise DegenerateScene("light lies in the plane of the quadrangle")
    if s.shadow_plane.contains(s.light):
        raise DegenerateScene("light lies in the shadow plane")
    if s.viewpoint is not None and s.shadow_plane.contains(s.viewpoint):
        raise DegenerateScene("viewpoint lies in the shadow plane")

    k = _chart_index(s.shadow_plane)
    viewpoint = s.viewpoint
    if viewpoint is None:
        basis = [0, 0, 0, 0]
        basis[k] = 1
        viewpoint = Point3(*basis)

    try:
        shadow = {
            lab: central_project(s.light, s.shadow_plane, x)
            for lab, x in quad.labeled().items()
        }
        seen_quad = {
            lab: _chart_on(
                s.shadow_plane, k, central_project(viewpoint, s.shadow_plane, x)
            )
            for lab, x in quad.labeled().items()
        }
        seen_shadow = {lab: _chart_on(s.shadow_plane, k, x) for lab, x in shadow.items()}
        seen_light = _chart_on(
            s.shadow_plane, k, central_project(viewpoint, s.shadow_plane, s.light)
        )
        quad1 = Quadrangle(**seen_shadow)
        quad2 = Quadrangle(**seen_quad)
        return PlanarDiagram(O=seen_light, quad1=quad1, quad2=quad2)
    except GeometryError as e:
        raise DegenerateScene(f"scene is not depictable from this viewpoint: {e}") from e


def _spatial_sides(quad: SpatialQuadrangle) -> dict[str, Line3]:
    v = quad.labeled()
    return {
        lab: line3_through(v[a], v[b]) for lab, (a, b) in _SIDE_VERTICES.items()
    }


def witness_side_traces(w: Witness) -> dict[str, Point2]:
    """Where the six sides of the witness quadrangle pierce the drawing plane.

    For a valid witness of a general-position diagram these are the six
    homologous side intersections, labeled compatibly with the planar
    traces.
    """
    traces = {}
    for lab, line in _spatial_sides(w.quad).items():
        traces[lab] = chart_drawing(meet_line_plane(line, w.drawing_plane))
    return traces


def _clause(name: str, fn) -> ClauseCheck:
    try:
        ok, detail = fn()
    except GeometryError as e:
        return ClauseCheck(name, False, f"{type(e).__name__}: {e}")
    return ClauseCheck(name, ok, detail if not ok else "")


def verify_witness(d: PlanarDiagram, w: Witness) -> WitnessReport:
    """Re-check a claimed witness from scratch, clause by clause.

    1. the spatial quadrangle is valid (distinct vertices, no collinear
       triple) and lies in its declared plane, which differs from the
       drawing plane;
    2. projecting it from O1 reproduces quad1 label by label;
    3. projecting it from O2 reproduces quad2 label by label;
    4. O1, O2 and the embedded O are collinear;
    5. the spatial diagonal points project onto the planar diagonal points
       from both centers.

    Failures are reported, never raised.
    """
    quad = w.quad

    def clause_quad() -> tuple[bool, str]:
        labeled = list(quad.labeled().items())
        for i, (la, a) in enumerate(labeled):
            for lb, b in labeled[i + 1 :]:
                if a == b:
                    return False, f"vertices {la} and {lb} coincide"
        for i in range(4):
            for j in range(i + 1, 4):
                for k in range(j + 1, 4):
                    (la, a), (lb, b), (lc, c) = labeled[i], labeled[j], labeled[k]
                    if collinear3(a, b, c):
                        return False, f"vertices {la}, {lb}, {lc} are collinear"
        for la, a in labeled:
            if not quad.plane.contains(a):
                return False, f"vertex {la} is off the declared plane"
        if quad.plane == w.drawing_plane:
            return False, "declared plane equals the drawing plane"
        return True, ""

    def projection_clause(center: Point3, planar: Quadrangle) -> tuple[bool, str]:
        for lab in VERTEX_LABELS:
            image = central_project(center, DRAWING_PLANE, quad.vertex(lab))
            if image != embed_drawing(planar.vertex(lab)):
                return False, f"vertex {lab} projects to {image!r}"
        return True, ""

    def clause_centers() -> tuple[bool, str]:
        if w.O1 == w.O2:
            return False, "centers coincide"
        if collinear3(w.O1, w.O2, embed_drawing(d.O)):
            return True, ""
        return False, "centers are not collinear with the embedded O"

    def clause_diagonals() -> tuple[bool, str]:
        sides3 = _spatial_sides(quad)
        spatial = {}
        for name, (s1, s2) in (("A", ("SP", "QR")), ("B", ("SQ", "RP")), ("C", ("SR", "PQ"))):
            x = meet_lines3(sides3[s1], sides3[s2])
            if x is None:
                return False, f"opposite sides {s1}, {s2} are skew"
            spatial[name] = x
        dt1 = diagonal_triangle(d.quad1)
        dt2 = diagonal_triangle(d.quad2)
        for center, dt in ((w.O1, dt1), (w.O2, dt2)):
            for name in ("A", "B", "C"):
                image = central_project(center, DRAWING_PLANE, spatial[name])
                if image != embed_drawing(getattr(dt, name)):
                    return False, f"diagonal point {name} projects to {image!r}"
        return True, ""

    clauses = (
        _clause("spatial quadrangle valid and planar", clause_quad),
        _clause("first projection reproduces quad1", lambda: projection_clause(w.O1, d.quad1)),
        _clause("second projection reproduces quad2", lambda: projection_clause(w.O2, d.quad2)),
        _clause("centers collinear with embedded O", clause_centers),
        _clause("diagonal points correspond", clause_diagonals),
    )
    return WitnessReport(clauses=clauses)
