"""Seeded random instances: scenes, diagrams, triangle pairs, collineations.

Everything here is deterministic in the seed.  The underlying stream is
the splitmix64 recurrence (64-bit state s, output z):

    s = (s + 0x9E3779B97F4A7C15) mod 2^64
    z = s;  z ^= z >> 30;  z = z * 0xBF58476D1CE4E5B9 mod 2^64
            z ^= z >> 27;  z = z * 0x94D049BB133111EB mod 2^64
            z ^= z >> 31

so identical seeds give identical objects on any platform.  Coordinates
are small rationals drawn inside the bounds of a ``GenConfig``; samples
that hit a degenerate configuration are redrawn, up to
``max_retries`` attempts before ``RetriesExhausted``.

The constructions guarantee their advertised property instead of
filtering for it wherever a guarantee is possible: ``gen_correct_diagram``
projects an actual spatial scene (so its diagrams are correct because a
shadow really was cast), ``gen_degenerate_diagram`` moves exactly one
vertex along its projection ray, and the triangle-pair generators build
the perspectivity into the coordinates.  Only ``gen_incorrect_diagram``
rejects on the verdict, since re-drawing each vertex independently along
its ray can, rarely, land back on a correct diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .kernel import (
    DRAWING_PLANE,
    GeometryError,
    Line2,
    Point2,
    Point3,
    collinear2,
    collinear3,
    join2,
    meet2,
    plane_through,
)
from .quadrangle import Quadrangle, validate_quadrangle
from .perspectivity import Collineation, Triple, general_position
from .checker import DegeneracyKind, PlanarDiagram, classify_degeneracy, decide_depiction
from .lift import SpatialQuadrangle, SpatialScene, project_scene

__all__ = [
    "MASK64",
    "SplitMix64",
    "GenConfig",
    "RetriesExhausted",
    "gen_quadrangle",
    "gen_correct_diagram",
    "gen_incorrect_diagram",
    "gen_general_position_diagram",
    "gen_degenerate_diagram",
    "gen_point_perspective_triangles",
    "gen_axis_perspective_triangles",
    "gen_collineation",
]

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """The splitmix64 stream; tiny, seedable, and identical everywhere."""

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-enough integer in [0, n); n must be positive."""
        if n <= 0:
            raise ValueError(f"need a positive bound, got {n}")
        return self.next_u64() % n


@dataclass(frozen=True)
class GenConfig:
    numerator_bound: int = 9
    denominator_bound: int = 9
    max_retries: int = 1000


class RetriesExhausted(GeometryError):
    """max_retries redraws did not produce a valid sample."""


def _fraction(rng: SplitMix64, cfg: GenConfig) -> Fraction:
    num = rng.below(2 * cfg.numerator_bound + 1) - cfg.numerator_bound
    den = rng.below(cfg.denominator_bound) + 1
    return Fraction(num, den)


def _nonzero_fraction(rng: SplitMix64, cfg: GenConfig) -> Fraction:
    while True:
        f = _fraction(rng, cfg)
        if f != 0:
            return f


def _point2(rng: SplitMix64, cfg: GenConfig) -> Point2:
    return Point2.affine(_fraction(rng, cfg), _fraction(rng, cfg))


def _triple3(rng: SplitMix64, cfg: GenConfig) -> tuple[Fraction, Fraction, Fraction]:
    return (_fraction(rng, cfg), _fraction(rng, cfg), _fraction(rng, cfg))


def _quadrangle(rng: SplitMix64, cfg: GenConfig) -> Quadrangle:
    for _ in range(cfg.max_retries):
        try:
            return validate_quadrangle(*(_point2(rng, cfg) for _ in range(4)))
        except GeometryError:
            continue
    raise RetriesExhausted("no valid quadrangle within the retry budget")


def gen_quadrangle(seed: int, cfg: GenConfig | None = None) -> Quadrangle:
    """A random labeled quadrangle with small rational vertices."""
    return _quadrangle(SplitMix64(seed), cfg or GenConfig())


def _triangle(rng: SplitMix64, cfg: GenConfig) -> Triple:
    for _ in range(cfg.max_retries):
        x, y, z = (_point2(rng, cfg) for _ in range(3))
        if x != y and y != z and x != z and not collinear2(x, y, z):
            return (x, y, z)
    raise RetriesExhausted("no valid triangle within the retry budget")


def gen_correct_diagram(
    seed: int, cfg: GenConfig | None = None
) -> tuple[SpatialScene, PlanarDiagram]:
    """A random scene together with the diagram it presents.

    The quadrangle lives in a random plane, the light and viewpoint are
    random points, and the diagram is the genuine projection, so it is
    correct by construction, never by filtering.
    """
    cfg = cfg or GenConfig()
    rng = SplitMix64(seed)
    for _ in range(cfg.max_retries):
        try:
            u, v, w = (_triple3(rng, cfg) for _ in range(3))
            plane = plane_through(Point3.affine(*u), Point3.affine(*v), Point3.affine(*w))
            if plane == DRAWING_PLANE:
                continue
            verts = []
            for _ in range(4):
                a, b = _fraction(rng, cfg), _fraction(rng, cfg)
                verts.append(
                    Point3.affine(
                        *(ui + a * (vi - ui) + b * (wi - ui) for ui, vi, wi in zip(u, v, w))
                    )
                )
            if len(set(verts)) < 4 or any(
                collinear3(verts[i], verts[j], verts[k])
                for i in range(4)
                for j in range(i + 1, 4)
                for k in range(j + 1, 4)
            ):
                continue
            light = Point3.affine(*_triple3(rng, cfg))
            if plane.contains(light) or DRAWING_PLANE.contains(light):
                continue
            viewpoint = Point3.affine(*_triple3(rng, cfg))
            if DRAWING_PLANE.contains(viewpoint) or viewpoint == light:
                continue
            scene = SpatialScene(
                quad=SpatialQuadrangle(*verts, plane=plane),
                light=light,
                shadow_plane=DRAWING_PLANE,
                viewpoint=viewpoint,
            )
            return scene, project_scene(scene)
        except GeometryError:
            continue
    raise RetriesExhausted("no valid scene within the retry budget")


def gen_incorrect_diagram(seed: int, cfg: GenConfig | None = None) -> PlanarDiagram:
    """A vertex-perspective diagram that fails the diagonal criterion.

    quad2 is quad1 re-drawn with an independent nonzero stretch along
    each projection ray; an all-equal draw (a plain dilation, which stays
    correct) is rejected before use, and the rare remaining correct
    outcomes are redrawn after checking.
    """
    cfg = cfg or GenConfig()
    rng = SplitMix64(seed)
    for _ in range(cfg.max_retries):
        try:
            center = _point2(rng, cfg)
            quad1 = _quadrangle(rng, cfg)
            ratios = [_nonzero_fraction(rng, cfg) for _ in range(4)]
            if len(set(ratios)) == 1:
                continue
            cx, cy = center.affine_coords
            moved = []
            for vertex, t in zip(quad1.vertices, ratios):
                x, y = vertex.affine_coords
                moved.append(Point2.affine(cx + t * (x - cx), cy + t * (y - cy)))
            diagram = PlanarDiagram(
                O=center, quad1=quad1, quad2=validate_quadrangle(*moved)
            )
        except GeometryError:
            continue
        verdict = decide_depiction(diagram)
        if verdict.applicable and not verdict.correct:
            return diagram
    raise RetriesExhausted("no incorrect diagram within the retry budget")


def gen_general_position_diagram(
    seed: int, cfg: GenConfig | None = None, correct: bool = True
) -> PlanarDiagram:
    """A correct or incorrect diagram whose twelve sides are in general
    position: the six homologous side pairs distinct, their six
    intersections pairwise distinct."""
    cfg = cfg or GenConfig()
    rng = SplitMix64(seed)
    for _ in range(cfg.max_retries):
        sub = rng.next_u64()
        if correct:
            _, diagram = gen_correct_diagram(sub, cfg)
        else:
            diagram = gen_incorrect_diagram(sub, cfg)
        if general_position(diagram.quad1, diagram.quad2):
            return diagram
    raise RetriesExhausted("no general-position diagram within the retry budget")


def gen_degenerate_diagram(
    seed: int, cfg: GenConfig | None = None, kind: DegeneracyKind = DegeneracyKind.TRIANGLE
) -> PlanarDiagram:
    """A vertex-perspective diagram sharing exactly three vertices.

    kind TRIANGLE moves S off every line joining the center to a shared
    vertex; kind VERTEX puts the center on side RS and slides R inside
    that side, so the moved pair is collinear with the shared vertex S.
    """
    cfg = cfg or GenConfig()
    rng = SplitMix64(seed)
    if kind not in (DegeneracyKind.TRIANGLE, DegeneracyKind.VERTEX):
        raise ValueError(f"can only generate triangle or vertex kinds, got {kind}")
    for _ in range(cfg.max_retries):
        try:
            quad1 = _quadrangle(rng, cfg)
            p, q, r, s = quad1.vertices
            if kind is DegeneracyKind.TRIANGLE:
                center = _point2(rng, cfg)
                if center in quad1.vertices:
                    continue
                ray = join2(center, s)
                if any(ray.contains(x) for x in (p, q, r)):
                    continue
                t = _nonzero_fraction(rng, cfg)
                if t == 1:
                    continue
                cx, cy = center.affine_coords
                sx, sy = s.affine_coords
                s2 = Point2.affine(cx + t * (sx - cx), cy + t * (sy - cy))
                quad2 = validate_quadrangle(p, q, r, s2)
            else:
                a = _nonzero_fraction(rng, cfg)
                if a == 1:
                    continue
                rx, ry = r.affine_coords
                sx, sy = s.affine_coords
                center = Point2.affine(rx + a * (sx - rx), ry + a * (sy - ry))
                if center in quad1.vertices:
                    continue
                b = _nonzero_fraction(rng, cfg)
                if b == 1:
                    continue
                r2 = Point2.affine(rx + b * (sx - rx), ry + b * (sy - ry))
                if r2 == center:
                    continue
                quad2 = validate_quadrangle(p, q, r2, s)
            diagram = PlanarDiagram(O=center, quad1=quad1, quad2=quad2)
        except GeometryError:
            continue
        got = classify_degeneracy(diagram.quad1, diagram.quad2)
        assert got.kind is kind, f"built {kind.value} but classified {got.kind.value}"
        return diagram
    raise RetriesExhausted("no degenerate diagram within the retry budget")


def gen_point_perspective_triangles(
    seed: int, cfg: GenConfig | None = None
) -> tuple[Point2, Triple, Triple]:
    """A center and two triangles perspective from it, with the six
    homologous sides distinct and their meets pairwise distinct."""
    cfg = cfg or GenConfig()
    rng = SplitMix64(seed)
    for _ in range(cfg.max_retries):
        try:
            center = _point2(rng, cfg)
            t1 = _triangle(rng, cfg)
            if center in t1:
                continue
            cx, cy = center.affine_coords
            t2 = []
            for vertex in t1:
                k = _nonzero_fraction(rng, cfg)
                x, y = vertex.affine_coords
                t2.append(Point2.affine(cx + k * (x - cx), cy + k * (y - cy)))
            t2 = tuple(t2)
            if len(set(t2)) < 3 or collinear2(*t2) or center in t2:
                continue
            sides1 = _sides(t1)
            sides2 = _sides(t2)
            if any(a == b for a, b in zip(sides1, sides2)):
                continue
            meets = [meet2(a, b) for a, b in zip(sides1, sides2)]
            if len(set(meets)) < 3:
                continue
            return center, t1, t2
        except GeometryError:
            continue
    raise RetriesExhausted("no perspective triangle pair within the retry budget")


def _sides(t: Triple):
    x, y, z = t
    return (join2(y, z), join2(z, x), join2(x, y))


def gen_axis_perspective_triangles(
    seed: int, cfg: GenConfig | None = None
) -> tuple[Line2, Triple, Triple]:
    """An axis and two triangles whose homologous sides meet on it.

    The second triangle is built outward from the axis marks, so the
    side correspondence holds by construction; homologous vertices stay
    distinct with distinct joins, ready for recovering the center.
    """
    cfg = cfg or GenConfig()
    rng = SplitMix64(seed)
    for _ in range(cfg.max_retries):
        try:
            t1 = _triangle(rng, cfg)
            axis = join2(_point2(rng, cfg), _point2(rng, cfg))
            if any(axis.contains(v) for v in t1):
                continue
            m_a, m_b, m_c = (meet2(side, axis) for side in _sides(t1))
            x2 = _point2(rng, cfg)
            if axis.contains(x2) or x2 in t1:
                continue
            lam = _nonzero_fraction(rng, cfg)
            xx, xy = x2.affine_coords
            if m_c.is_ideal:
                continue
            mx, my = m_c.affine_coords
            y2 = Point2.affine(xx + lam * (mx - xx), xy + lam * (my - xy))
            if y2 == x2 or y2 == m_c:
                continue
            line_b = join2(x2, m_b)
            line_a = join2(y2, m_a)
            if line_b == line_a:
                continue
            z2 = meet2(line_b, line_a)
            if z2 in (x2, y2) or axis.contains(z2):
                continue
            t2 = (x2, y2, z2)
            if collinear2(*t2):
                continue
            pairs_distinct = all(v1 != v2 for v1, v2 in zip(t1, t2))
            if not pairs_distinct:
                continue
            join_x = join2(t1[0], x2)
            join_y = join2(t1[1], y2)
            if join_x == join_y:
                continue
            return axis, t1, t2
        except GeometryError:
            continue
    raise RetriesExhausted("no axis-perspective triangle pair within the retry budget")


def gen_collineation(seed: int, cfg: GenConfig | None = None) -> Collineation:
    """A random invertible collineation with small integer entries."""
    cfg = cfg or GenConfig()
    rng = SplitMix64(seed)
    bound = cfg.numerator_bound
    for _ in range(cfg.max_retries):
        rows = tuple(
            tuple(rng.below(2 * bound + 1) - bound for _ in range(3)) for _ in range(3)
        )
        try:
            return Collineation(rows)
        except ValueError:
            continue
    raise RetriesExhausted("no invertible matrix within the retry budget")
