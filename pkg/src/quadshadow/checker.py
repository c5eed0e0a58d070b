"""Decide whether a drawn quadrangle-and-shadow diagram is consistent.

A planar diagram consists of a center O and two labeled quadrangles whose
homologous vertices are (supposed to be) aligned with O, the way a light
source aligns an object with its shadow.  The diagram is *correct*, i.e.
realizable by an actual spatial quadrangle with its shadow, exactly when
the two diagonal triangles are also perspective from O.  decide_depiction
evaluates that criterion and reports every ingredient of the decision.

Degenerate pairs in which three of the four vertex pairs coincide come in
two shapes, distinguished by which three homologous sides coincide: either
those three sides form a triangle (the fourth vertex moved freely off the
shared three) or they run through one shared vertex (the moved vertex slid
along a side through that vertex).  Both shapes always break the diagonal
criterion, and fully identical quadrangles are ruled incorrect by fiat:
nothing about such drawings forces a spatial reading.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .kernel import Point2, collinear2
from .quadrangle import (
    SIDE_LABELS,
    VERTEX_LABELS,
    Quadrangle,
    diagonal_triangle,
    sides,
)
from .perspectivity import CenterIsVertex, pair_perspective_from, quad_perspective

__all__ = [
    "DegeneracyKind",
    "DegeneracyClass",
    "Reason",
    "PlanarDiagram",
    "Verdict",
    "classify_degeneracy",
    "decide_depiction",
]


class DegeneracyKind(Enum):
    NONE = "none"
    TRIANGLE = "triangle"
    VERTEX = "vertex"
    IDENTICAL = "identical"


@dataclass(frozen=True)
class DegeneracyClass:
    """Kind of coincidence between two labeled quadrangles.

    ``coincident`` lists the labels whose vertices agree.  TRIANGLE and
    VERTEX both mean exactly one label differs; they are told apart by
    whether the moved pair is collinear with one of the shared vertices
    (VERTEX) or not (TRIANGLE).
    """

    kind: DegeneracyKind
    coincident: tuple[str, ...]


def classify_degeneracy(q1: Quadrangle, q2: Quadrangle) -> DegeneracyClass:
    shared = tuple(lab for lab in VERTEX_LABELS if q1.vertex(lab) == q2.vertex(lab))
    if len(shared) == 4:
        return DegeneracyClass(DegeneracyKind.IDENTICAL, shared)
    if len(shared) == 3:
        moved = next(lab for lab in VERTEX_LABELS if lab not in shared)
        w1 = q1.vertex(moved)
        w2 = q2.vertex(moved)
        if any(collinear2(q1.vertex(lab), w1, w2) for lab in shared):
            return DegeneracyClass(DegeneracyKind.VERTEX, shared)
        return DegeneracyClass(DegeneracyKind.TRIANGLE, shared)
    return DegeneracyClass(DegeneracyKind.NONE, shared)


class Reason(Enum):
    CORRECT = "correct"
    NOT_PERSPECTIVE = "not_perspective"
    IDENTICAL = "identical"
    TRIANGLE_DEGENERACY = "triangle_degeneracy"
    VERTEX_DEGENERACY = "vertex_degeneracy"
    DIAGONAL_A = "diagonal_pair_a"
    DIAGONAL_B = "diagonal_pair_b"
    DIAGONAL_C = "diagonal_pair_c"


@dataclass(frozen=True)
class PlanarDiagram:
    """Center plus two labeled quadrangles; O must not be a vertex."""

    O: Point2
    quad1: Quadrangle
    quad2: Quadrangle

    def __post_init__(self) -> None:
        for which, q in (("quadrangle 1", self.quad1), ("quadrangle 2", self.quad2)):
            for lab, v in q.labeled().items():
                if v == self.O:
                    raise CenterIsVertex(f"center O equals vertex {lab} of {which}")


@dataclass(frozen=True)
class Verdict:
    """Full outcome of the depiction decision.

    ``diagonal_pairs`` holds the perspectivity of the homologous diagonal
    pairs (A, B, C) and is None when the diagram is not even
    vertex-perspective.  ``correct`` is

        applicable and all diagonal pairs perspective and not identical.
    """

    applicable: bool
    diagonal_pairs: tuple[bool, bool, bool] | None
    degeneracy: DegeneracyClass
    correct: bool
    reason: Reason
    notes: tuple[str, ...] = ()


def _notes(d: PlanarDiagram) -> tuple[str, ...]:
    notes = []
    for which, q in (("quadrangle 1", d.quad1), ("quadrangle 2", d.quad2)):
        side_set = sides(q)
        for lab in SIDE_LABELS:
            if side_set[lab].contains(d.O):
                notes.append(f"center O lies on side {lab} of {which}")
    return tuple(notes)


def decide_depiction(d: PlanarDiagram) -> Verdict:
    """Evaluate the diagonal-triangle criterion for a diagram.

    Applicability (vertex perspectivity from O) is checked first; when it
    fails no diagonal results are reported.  Otherwise the three homologous
    diagonal pairs are tested one by one, and the reason pinpoints the
    degeneracy or the first failing pair.
    """
    degeneracy = classify_degeneracy(d.quad1, d.quad2)
    notes = _notes(d)
    applicable = quad_perspective(d.O, d.quad1, d.quad2)
    if not applicable:
        return Verdict(False, None, degeneracy, False, Reason.NOT_PERSPECTIVE, notes)

    dt1 = diagonal_triangle(d.quad1)
    dt2 = diagonal_triangle(d.quad2)
    pairs = (
        pair_perspective_from(d.O, dt1.A, dt2.A),
        pair_perspective_from(d.O, dt1.B, dt2.B),
        pair_perspective_from(d.O, dt1.C, dt2.C),
    )
    correct = all(pairs) and degeneracy.kind is not DegeneracyKind.IDENTICAL

    if degeneracy.kind is DegeneracyKind.IDENTICAL:
        reason = Reason.IDENTICAL
    elif degeneracy.kind is DegeneracyKind.TRIANGLE:
        reason = Reason.TRIANGLE_DEGENERACY
    elif degeneracy.kind is DegeneracyKind.VERTEX:
        reason = Reason.VERTEX_DEGENERACY
    elif not pairs[0]:
        reason = Reason.DIAGONAL_A
    elif not pairs[1]:
        reason = Reason.DIAGONAL_B
    elif not pairs[2]:
        reason = Reason.DIAGONAL_C
    else:
        reason = Reason.CORRECT
    return Verdict(True, pairs, degeneracy, correct, reason, notes)
