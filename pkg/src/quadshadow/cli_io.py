"""Documents, command line, and SVG figures.

Documents are versioned JSON with fixed field names and fixed key order;
every coordinate travels as a rational string ("-7/3", "4") or a JSON
integer, never as a float, so exactness survives the trip through text.
Emitters write canonical form (indent 2, trailing newline, canonical
integer coordinates), and everything emitted re-parses to an equal value;
for already-canonical input, parse followed by emit is byte-identical.

Exit codes: 0 the diagram is correct (or the requested object was
produced), 1 incorrect verdict or a domain failure (no witness, no axis,
degenerate scene), 2 invalid or inapplicable input document, 64 usage
errors, 66 file errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence, TextIO

from .kernel import (
    GeometryError,
    Line2,
    Plane3,
    Point2,
    Point3,
    join2,
)
from .quadrangle import (
    SIDE_LABELS,
    VERTEX_LABELS,
    Quadrangle,
    diagonal_triangle,
    quadrangular_trace,
    sides,
)
from .perspectivity import common_axis, desargues_axis, perspective_center
from .checker import (
    DegeneracyClass,
    DegeneracyKind,
    PlanarDiagram,
    Reason,
    Verdict,
    decide_depiction,
)
from .lift import (
    SpatialQuadrangle,
    SpatialScene,
    Witness,
    lift_collinear_centers,
    lift_via_axis,
    planarity_certificate,
    project_scene,
)
from .generators import (
    gen_axis_perspective_triangles,
    gen_correct_diagram,
    gen_incorrect_diagram,
    gen_point_perspective_triangles,
)

__all__ = [
    "ParseError",
    "InvariantViolation",
    "parse_diagram",
    "emit_diagram",
    "parse_witness",
    "emit_witness",
    "parse_scene",
    "emit_scene",
    "parse_verdict",
    "emit_verdict",
    "render_svg",
    "run_cli",
    "main",
]

DOCUMENT_VERSION = 1


class ParseError(Exception):
    """Malformed document; the message carries the offending location."""


class InvariantViolation(Exception):
    """Well-formed document describing an invalid geometric object."""


# ---------------------------------------------------------------------------
# rational plumbing


def _rational(node: Any, path: str) -> Fraction:
    if isinstance(node, bool) or isinstance(node, float):
        raise ParseError(f"{path}: coordinates must be rational strings, got {node!r}")
    if isinstance(node, int):
        return Fraction(node)
    if isinstance(node, str):
        try:
            return Fraction(node)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"{path}: not a rational: {node!r}") from None
    raise ParseError(f"{path}: coordinates must be rational strings, got {type(node).__name__}")


def _coords(node: Any, path: str, arity: int) -> tuple[Fraction, ...]:
    if not isinstance(node, list) or len(node) != arity:
        raise ParseError(f"{path}: expected an array of {arity} rationals")
    return tuple(_rational(c, f"{path}[{i}]") for i, c in enumerate(node))


def _strings(value) -> list[str]:
    return [str(c) for c in value.coords]


def _object(node: Any, path: str, keys: tuple[str, ...]) -> dict:
    if not isinstance(node, dict):
        raise ParseError(f"{path}: expected an object")
    missing = [k for k in keys if k not in node]
    if missing:
        raise ParseError(f"{path}: missing field {missing[0]!r}")
    unknown = [k for k in node if k not in keys]
    if unknown:
        raise ParseError(f"{path}: unknown field {unknown[0]!r}")
    return node


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None


def _check_version(doc: dict, path: str = "version") -> None:
    if doc.get("version") != DOCUMENT_VERSION:
        raise ParseError(f"{path}: expected {DOCUMENT_VERSION}, got {doc.get('version')!r}")


def _dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _point2(node: Any, path: str) -> Point2:
    try:
        return Point2(*_coords(node, path, 3))
    except GeometryError as e:
        raise InvariantViolation(f"{path}: {e}") from None


def _point3(node: Any, path: str) -> Point3:
    try:
        return Point3(*_coords(node, path, 4))
    except GeometryError as e:
        raise InvariantViolation(f"{path}: {e}") from None


def _plane(node: Any, path: str) -> Plane3:
    try:
        return Plane3(*_coords(node, path, 4))
    except GeometryError as e:
        raise InvariantViolation(f"{path}: {e}") from None


# ---------------------------------------------------------------------------
# diagram documents


def _quadrangle(node: Any, path: str) -> Quadrangle:
    obj = _object(node, path, VERTEX_LABELS)
    points = {lab: _point2(obj[lab], f"{path}.{lab}") for lab in VERTEX_LABELS}
    try:
        return Quadrangle(**points)
    except GeometryError as e:
        raise InvariantViolation(f"{path}: {e}") from None


def parse_diagram(text: str) -> PlanarDiagram:
    doc = _object(_load(text), "document", ("version", "O", "quad1", "quad2"))
    _check_version(doc)
    center = _point2(doc["O"], "O")
    quad1 = _quadrangle(doc["quad1"], "quad1")
    quad2 = _quadrangle(doc["quad2"], "quad2")
    try:
        return PlanarDiagram(O=center, quad1=quad1, quad2=quad2)
    except GeometryError as e:
        raise InvariantViolation(str(e)) from None


def emit_diagram(d: PlanarDiagram) -> str:
    return _dumps(
        {
            "version": DOCUMENT_VERSION,
            "O": _strings(d.O),
            "quad1": {lab: _strings(d.quad1.vertex(lab)) for lab in VERTEX_LABELS},
            "quad2": {lab: _strings(d.quad2.vertex(lab)) for lab in VERTEX_LABELS},
        }
    )


# ---------------------------------------------------------------------------
# witness documents

_BARRED = ("Pbar", "Qbar", "Rbar", "Sbar")


def _spatial_quadrangle(node: Any, path: str) -> SpatialQuadrangle:
    obj = _object(node, path, _BARRED + ("plane",))
    points = {lab: _point3(obj[lab], f"{path}.{lab}") for lab in _BARRED}
    return SpatialQuadrangle(plane=_plane(obj["plane"], f"{path}.plane"), **points)


def parse_witness(text: str) -> Witness:
    doc = _object(
        _load(text), "document", ("version", "O1", "O2", "quad", "plane", "drawing_plane")
    )
    _check_version(doc)
    quad = _object(doc["quad"], "quad", _BARRED)
    points = {lab: _point3(quad[lab], f"quad.{lab}") for lab in _BARRED}
    return Witness(
        quad=SpatialQuadrangle(plane=_plane(doc["plane"], "plane"), **points),
        O1=_point3(doc["O1"], "O1"),
        O2=_point3(doc["O2"], "O2"),
        drawing_plane=_plane(doc["drawing_plane"], "drawing_plane"),
    )


def emit_witness(w: Witness) -> str:
    return _dumps(
        {
            "version": DOCUMENT_VERSION,
            "O1": _strings(w.O1),
            "O2": _strings(w.O2),
            "quad": {lab: _strings(w.quad.vertex(lab[0])) for lab in _BARRED},
            "plane": _strings(w.quad.plane),
            "drawing_plane": _strings(w.drawing_plane),
        }
    )


# ---------------------------------------------------------------------------
# scene documents


def parse_scene(text: str) -> SpatialScene:
    doc = _object(
        _load(text),
        "document",
        ("version", "quad", "plane", "light", "shadow_plane", "viewpoint"),
    )
    _check_version(doc)
    quad_obj = _object(doc["quad"], "quad", _BARRED)
    points = {lab: _point3(quad_obj[lab], f"quad.{lab}") for lab in _BARRED}
    viewpoint = None
    if doc["viewpoint"] is not None:
        viewpoint = _point3(doc["viewpoint"], "viewpoint")
    return SpatialScene(
        quad=SpatialQuadrangle(plane=_plane(doc["plane"], "plane"), **points),
        light=_point3(doc["light"], "light"),
        shadow_plane=_plane(doc["shadow_plane"], "shadow_plane"),
        viewpoint=viewpoint,
    )


def emit_scene(s: SpatialScene) -> str:
    return _dumps(
        {
            "version": DOCUMENT_VERSION,
            "quad": {lab: _strings(s.quad.vertex(lab[0])) for lab in _BARRED},
            "plane": _strings(s.quad.plane),
            "light": _strings(s.light),
            "shadow_plane": _strings(s.shadow_plane),
            "viewpoint": None if s.viewpoint is None else _strings(s.viewpoint),
        }
    )


# ---------------------------------------------------------------------------
# verdict documents


def emit_verdict(v: Verdict, witness_ref: str | None = None) -> str:
    pairs = None
    if v.diagonal_pairs is not None:
        pairs = dict(zip(("A", "B", "C"), v.diagonal_pairs))
    return _dumps(
        {
            "version": DOCUMENT_VERSION,
            "applicable": v.applicable,
            "correct": v.correct,
            "degeneracy": {
                "kind": v.degeneracy.kind.value,
                "coincident": list(v.degeneracy.coincident),
            },
            "diagonal_pairs": pairs,
            "reason": v.reason.value,
            "witness": witness_ref,
            "notes": list(v.notes),
        }
    )


def parse_verdict(text: str) -> Verdict:
    doc = _object(
        _load(text),
        "document",
        (
            "version",
            "applicable",
            "correct",
            "degeneracy",
            "diagonal_pairs",
            "reason",
            "witness",
            "notes",
        ),
    )
    _check_version(doc)
    for key in ("applicable", "correct"):
        if not isinstance(doc[key], bool):
            raise ParseError(f"{key}: expected a boolean")
    deg = _object(doc["degeneracy"], "degeneracy", ("kind", "coincident"))
    try:
        kind = DegeneracyKind(deg["kind"])
    except ValueError:
        raise ParseError(f"degeneracy.kind: unknown kind {deg['kind']!r}") from None
    if not isinstance(deg["coincident"], list) or not all(
        isinstance(c, str) for c in deg["coincident"]
    ):
        raise ParseError("degeneracy.coincident: expected an array of labels")
    pairs = None
    if doc["diagonal_pairs"] is not None:
        pobj = _object(doc["diagonal_pairs"], "diagonal_pairs", ("A", "B", "C"))
        if not all(isinstance(pobj[k], bool) for k in ("A", "B", "C")):
            raise ParseError("diagonal_pairs: expected booleans")
        pairs = (pobj["A"], pobj["B"], pobj["C"])
    try:
        reason = Reason(doc["reason"])
    except ValueError:
        raise ParseError(f"reason: unknown reason {doc['reason']!r}") from None
    if not isinstance(doc["notes"], list) or not all(
        isinstance(n, str) for n in doc["notes"]
    ):
        raise ParseError("notes: expected an array of strings")
    return Verdict(
        applicable=doc["applicable"],
        diagonal_pairs=pairs,
        degeneracy=DegeneracyClass(kind=kind, coincident=tuple(deg["coincident"])),
        correct=doc["correct"],
        reason=reason,
        notes=tuple(doc["notes"]),
    )


# ---------------------------------------------------------------------------
# SVG rendering

_CANVAS = 640.0


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _clip_to_rect(
    line: Line2, rect: tuple[Fraction, Fraction, Fraction, Fraction]
):
    """Chord of an affine line across a rectangle, or None if it misses."""
    a, b, c = line.coords
    if a == 0 and b == 0:
        return None
    xmin, ymin, xmax, ymax = rect
    hits = set()
    for x in (xmin, xmax):
        if b != 0:
            y = Fraction(-(a * x + c), b)
            if ymin <= y <= ymax:
                hits.add((x, y))
    for y in (ymin, ymax):
        if a != 0:
            x = Fraction(-(b * y + c), a)
            if xmin <= x <= xmax:
                hits.add((x, y))
    if len(hits) < 2:
        return None
    ordered = sorted(hits)
    return ordered[0], ordered[-1]


def render_svg(d: PlanarDiagram) -> str:
    """Deterministic SVG of the diagram in the affine chart.

    Layered groups: quad1 sides, quad2 sides, rays through O, diagonal
    triangles, the common axis when one exists, then labeled markers.
    Ideal labeled points become labeled boundary arrows; an ideal common
    axis becomes one more arrow.  Coincident labeled points share a
    marker (or arrow) with their labels joined by '='.
    """
    labeled: list[tuple[str, str, Point2]] = []
    for suffix, quad in (("1", d.quad1), ("2", d.quad2)):
        for lab in VERTEX_LABELS:
            labeled.append((f"{lab}{suffix}", "vertex", quad.vertex(lab)))
    labeled.append(("O", "center", d.O))
    for suffix, quad in (("1", d.quad1), ("2", d.quad2)):
        dt = diagonal_triangle(quad)
        for name in ("A", "B", "C"):
            labeled.append((f"{name}{suffix}", "diagonal", getattr(dt, name)))

    affine_groups: dict[Point2, list[tuple[str, str]]] = {}
    ideal_groups: dict[Point2, list[tuple[str, str]]] = {}
    for label, role, point in labeled:
        target = ideal_groups if point.is_ideal else affine_groups
        target.setdefault(point, []).append((label, role))

    if affine_groups:
        xs = [p.affine_coords[0] for p in affine_groups]
        ys = [p.affine_coords[1] for p in affine_groups]
        xmin, xmax, ymin, ymax = min(xs), max(xs), min(ys), max(ys)
    else:
        xmin = ymin = Fraction(-1)
        xmax = ymax = Fraction(1)
    pad_x = (xmax - xmin) * Fraction(1, 10) or Fraction(1, 2)
    pad_y = (ymax - ymin) * Fraction(1, 10) or Fraction(1, 2)
    rect = (xmin - pad_x, ymin - pad_y, xmax + pad_x, ymax + pad_y)
    world_w = rect[2] - rect[0]
    world_h = rect[3] - rect[1]
    scale = _CANVAS / float(max(world_w, world_h))
    width = float(world_w) * scale
    height = float(world_h) * scale

    def pixel(p: tuple[Fraction, Fraction]) -> tuple[float, float]:
        return (float(p[0] - rect[0]) * scale, float(rect[3] - p[1]) * scale)

    def line_elements(lines, dedupe: set) -> list[str]:
        out = []
        for line in lines:
            if line in dedupe:
                continue
            dedupe.add(line)
            chord = _clip_to_rect(line, rect)
            if chord is None:
                continue
            (x1, y1), (x2, y2) = (pixel(chord[0]), pixel(chord[1]))
            out.append(
                f'<line x1="{x1:.4f}" y1="{y1:.4f}" x2="{x2:.4f}" y2="{y2:.4f}"/>'
            )
        return out

    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.4f} {height:.4f}" '
        f'font-family="sans-serif" font-size="12">'
    )
    parts.append(f'<rect width="{width:.4f}" height="{height:.4f}" fill="white"/>')

    seen: set[Line2] = set()
    parts.append('<g class="quad1-sides" stroke="#1f77b4" stroke-width="1.5">')
    parts.extend(line_elements(sides(d.quad1).labeled().values(), seen))
    parts.append("</g>")
    parts.append('<g class="quad2-sides" stroke="#d62728" stroke-width="1.5">')
    parts.extend(line_elements(sides(d.quad2).labeled().values(), seen))
    parts.append("</g>")

    rays = []
    ray_seen: set[Line2] = set()
    for quad in (d.quad1, d.quad2):
        for lab in VERTEX_LABELS:
            vertex = quad.vertex(lab)
            ray = join2(d.O, vertex)
            if ray not in ray_seen:
                ray_seen.add(ray)
                rays.append(ray)
    parts.append(
        '<g class="rays" stroke="#999999" stroke-width="0.75" stroke-dasharray="6 4">'
    )
    parts.extend(line_elements(rays, set()))
    parts.append("</g>")

    diag_lines = []
    for quad in (d.quad1, d.quad2):
        dt = diagonal_triangle(quad)
        for u, v in ((dt.A, dt.B), (dt.B, dt.C), (dt.C, dt.A)):
            if u != v:
                diag_lines.append(join2(u, v))
    parts.append(
        '<g class="diagonal-triangles" stroke="#2ca02c" stroke-width="1" '
        'stroke-dasharray="3 3">'
    )
    parts.extend(line_elements(diag_lines, set()))
    parts.append("</g>")

    axis: Line2 | None = None
    try:
        axis = common_axis(d.quad1, d.quad2)
    except GeometryError:
        axis = None
    if axis is not None and not (axis.coords[0] == 0 and axis.coords[1] == 0):
        parts.append('<g class="axis" stroke="#000000" stroke-width="2">')
        chord = _clip_to_rect(axis, rect)
        if chord is not None:
            (x1, y1), (x2, y2) = (pixel(chord[0]), pixel(chord[1]))
            parts.append(
                f'<line x1="{x1:.4f}" y1="{y1:.4f}" x2="{x2:.4f}" y2="{y2:.4f}"/>'
            )
            parts.append(
                f'<text x="{x1 + 4:.4f}" y="{y1 - 4:.4f}" stroke="none" '
                f'fill="#000000">o</text>'
            )
        parts.append("</g>")

    role_style = {
        "vertex": ("vertex", "#1f77b4", 3.5),
        "center": ("center", "#000000", 4.5),
        "diagonal": ("diagonal", "#2ca02c", 3.0),
    }
    _priority = ("center", "vertex", "diagonal")
    parts.append('<g class="markers">')
    for point, members in affine_groups.items():
        role = min((m[1] for m in members), key=_priority.index)
        css, color, radius = role_style[role]
        cx, cy = pixel(point.affine_coords)
        label = "=".join(m[0] for m in members)
        parts.append(
            f'<circle class="{css}" cx="{cx:.4f}" cy="{cy:.4f}" r="{radius}" '
            f'fill="{color}"/>'
        )
        parts.append(
            f'<text x="{cx + 6:.4f}" y="{cy - 6:.4f}" fill="{color}">'
            f"{_escape(label)}</text>"
        )
    parts.append("</g>")

    arrows: list[tuple[tuple[float, float], str]] = []
    for point, members in ideal_groups.items():
        direction = (float(point.coords[0]), -float(point.coords[1]))
        label = "=".join(m[0] for m in members)
        arrows.append((direction, label))
    if axis is not None and axis.coords[0] == 0 and axis.coords[1] == 0:
        arrows.append(((0.7071, -0.7071), "o"))

    parts.append('<g class="ideal" stroke="#555555" stroke-width="1.5">')
    for (dx, dy), label in arrows:
        norm = (dx * dx + dy * dy) ** 0.5
        ux, uy = dx / norm, dy / norm
        cx, cy = width / 2.0, height / 2.0
        t = float("inf")
        if ux > 0:
            t = min(t, (width - 10.0 - cx) / ux)
        elif ux < 0:
            t = min(t, (10.0 - cx) / ux)
        if uy > 0:
            t = min(t, (height - 10.0 - cy) / uy)
        elif uy < 0:
            t = min(t, (10.0 - cy) / uy)
        tip = (cx + t * ux, cy + t * uy)
        tail = (tip[0] - 26.0 * ux, tip[1] - 26.0 * uy)
        px, py = -uy, ux
        head1 = (tip[0] - 8.0 * ux + 4.0 * px, tip[1] - 8.0 * uy + 4.0 * py)
        head2 = (tip[0] - 8.0 * ux - 4.0 * px, tip[1] - 8.0 * uy - 4.0 * py)
        parts.append('<g class="arrow">')
        parts.append(
            f'<line x1="{tail[0]:.4f}" y1="{tail[1]:.4f}" '
            f'x2="{tip[0]:.4f}" y2="{tip[1]:.4f}"/>'
        )
        parts.append(
            f'<line x1="{head1[0]:.4f}" y1="{head1[1]:.4f}" '
            f'x2="{tip[0]:.4f}" y2="{tip[1]:.4f}"/>'
        )
        parts.append(
            f'<line x1="{head2[0]:.4f}" y1="{head2[1]:.4f}" '
            f'x2="{tip[0]:.4f}" y2="{tip[1]:.4f}"/>'
        )
        lx = min(max(tail[0] - 10.0 * ux, 14.0), width - 14.0)
        ly = min(max(tail[1] - 10.0 * uy, 14.0), height - 14.0)
        parts.append(
            f'<text x="{lx:.4f}" y="{ly:.4f}" stroke="none" fill="#555555">'
            f"{_escape(label)}</text>"
        )
        parts.append("</g>")
    parts.append("</g>")

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# ---------------------------------------------------------------------------
# command line


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: A003 - argparse API
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="quadshadow",
        description="Decide whether a planar diagram depicts a quadrangle "
        "and its shadow, and build spatial witnesses when it does.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="verdict for a diagram document")
    p_check.add_argument("input", help="diagram document path")

    p_lift = sub.add_parser("lift", help="spatial witness for a correct diagram")
    p_lift.add_argument("input", help="diagram document path")
    p_lift.add_argument(
        "--method", choices=("centers", "axis"), default="centers",
        help="collinear displaced centers (default) or the common-axis route",
    )
    p_lift.add_argument(
        "--c1", default="1", help="first displacement (rational; use --c1=-2 form)"
    )
    p_lift.add_argument(
        "--c2", default="-1", help="second displacement (rational; use --c2=-1/2 form)"
    )

    p_project = sub.add_parser("project", help="diagram presented by a scene document")
    p_project.add_argument("input", help="scene document path")

    p_axis = sub.add_parser("axis", help="common axis and its six labeled traces")
    p_axis.add_argument("input", help="diagram document path")

    p_qset = sub.add_parser("qset", help="trace of a line on both quadrangles")
    p_qset.add_argument("input", help="diagram document path")
    p_qset.add_argument("line", help="line coordinates 'a,b,c' (rationals)")

    p_fuzz = sub.add_parser("fuzz", help="run a seeded property suite")
    p_fuzz.add_argument("--count", type=int, required=True)
    p_fuzz.add_argument("--seed", type=int, required=True)
    p_fuzz.add_argument(
        "--mode", choices=("correct", "incorrect", "desargues"), default="correct"
    )

    p_render = sub.add_parser("render", help="SVG figure of a diagram")
    p_render.add_argument("input", help="diagram document path")
    p_render.add_argument("--out", required=True, help="output SVG path")

    return parser


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _cmd_check(args, out: TextIO, err: TextIO) -> int:
    verdict = decide_depiction(parse_diagram(_read_text(args.input)))
    out.write(emit_verdict(verdict))
    if verdict.correct:
        return 0
    return 1 if verdict.applicable else 2


def _cmd_lift(args, out: TextIO, err: TextIO) -> int:
    diagram = parse_diagram(_read_text(args.input))
    if args.method == "centers":
        try:
            c1, c2 = Fraction(args.c1), Fraction(args.c2)
        except (ValueError, ZeroDivisionError):
            raise _UsageError(f"displacements must be rationals, got {args.c1!r}, {args.c2!r}")
        witness = lift_collinear_centers(diagram, c1, c2)
    else:
        witness = lift_via_axis(diagram)
    out.write(emit_witness(witness))
    return 0


def _cmd_project(args, out: TextIO, err: TextIO) -> int:
    out.write(emit_diagram(project_scene(parse_scene(_read_text(args.input)))))
    return 0


def _trace_doc(quad: Quadrangle, line: Line2) -> dict:
    trace = quadrangular_trace(quad, line)
    return {lab: _strings(getattr(trace, lab)) for lab in SIDE_LABELS}


def _cmd_axis(args, out: TextIO, err: TextIO) -> int:
    diagram = parse_diagram(_read_text(args.input))
    axis = common_axis(diagram.quad1, diagram.quad2)
    doc = {
        "version": DOCUMENT_VERSION,
        "axis": _strings(axis),
        "quad1": _trace_doc(diagram.quad1, axis),
        "quad2": _trace_doc(diagram.quad2, axis),
    }
    out.write(_dumps(doc))
    return 0


def _cmd_qset(args, out: TextIO, err: TextIO) -> int:
    diagram = parse_diagram(_read_text(args.input))
    pieces = args.line.split(",")
    if len(pieces) != 3:
        raise _UsageError(f"line must be 'a,b,c', got {args.line!r}")
    try:
        coeffs = [Fraction(p.strip()) for p in pieces]
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"line coordinates must be rationals, got {args.line!r}")
    try:
        line = Line2(*coeffs)
    except GeometryError as e:
        raise _UsageError(str(e))
    doc = {
        "version": DOCUMENT_VERSION,
        "line": _strings(line),
        "quad1": _trace_doc(diagram.quad1, line),
        "quad2": _trace_doc(diagram.quad2, line),
    }
    out.write(_dumps(doc))
    return 0


def _cmd_fuzz(args, out: TextIO, err: TextIO) -> int:
    if args.count <= 0:
        raise _UsageError(f"--count must be positive, got {args.count}")
    failures: list[tuple[int, str]] = []
    mode = args.mode
    for i in range(args.count):
        seed = args.seed + i
        try:
            if mode == "correct":
                _, diagram = gen_correct_diagram(seed)
                verdict = decide_depiction(diagram)
                if not verdict.correct:
                    failures.append((seed, f"verdict {verdict.reason.value}"))
            elif mode == "incorrect":
                diagram = gen_incorrect_diagram(seed)
                verdict = decide_depiction(diagram)
                if not verdict.applicable or verdict.correct:
                    failures.append((seed, f"verdict {verdict.reason.value}"))
                elif planarity_certificate(diagram).determinant == 0:
                    failures.append((seed, "coplanarity determinant vanished"))
            else:
                center, t1, t2 = gen_point_perspective_triangles(seed)
                desargues_axis(t1, t2)
                _, u1, u2 = gen_axis_perspective_triangles(seed)
                perspective_center(u1, u2)
        except GeometryError as e:
            failures.append((seed, f"{type(e).__name__}: {e}"))
    good = args.count - len(failures)
    noun = {
        "correct": "verdicts correct",
        "incorrect": "verdicts incorrect",
        "desargues": "configurations consistent",
    }[mode]
    out.write(f"{good}/{args.count} {noun}\n")
    if failures:
        seed, detail = failures[0]
        out.write(f"first failure: seed {seed}: {detail}\n")
        return 1
    return 0


def _cmd_render(args, out: TextIO, err: TextIO) -> int:
    svg = render_svg(parse_diagram(_read_text(args.input)))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "lift": _cmd_lift,
    "project": _cmd_project,
    "axis": _cmd_axis,
    "qset": _cmd_qset,
    "fuzz": _cmd_fuzz,
    "render": _cmd_render,
}


def run_cli(
    argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None
) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
        return _COMMANDS[args.command](args, out, err)
    except _UsageError as e:
        err.write(f"error: usage: {e}\n")
        return 64
    except SystemExit as e:  # argparse --help
        return int(e.code or 0)
    except OSError as e:
        err.write(f"error: file: {e}\n")
        return 66
    except (ParseError, InvariantViolation) as e:
        err.write(f"error: {type(e).__name__}: {e}\n")
        return 2
    except GeometryError as e:
        err.write(f"error: {type(e).__name__}: {e}\n")
        return 1


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
