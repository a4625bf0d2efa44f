"""Static SVG drawing of the projected picture for planar Σ.

C edges are drawn thick, C' edges thin, ∂Σ dashed; twist vertices get a
filled dot and every region shows its N value.

Supported inputs: genus-0 Σ with at most one boundary circle made of
graph edges; further boundary circles must be free circles.

Layout: the graph splits into pieces (connected components, plus free
circles).  Regions and pieces form a tree when Σ is planar.  Each piece is
drawn inside a disk: the cycle it shares with its parent region goes on the
disk's circle, remaining vertices are placed by a barycentric (Tutte) solve,
and child pieces are nested into the faces recursively.

Styling constants:

=============  ======
THICK          3
THIN           1
DOT_RADIUS     4
DASH           "4 3"
CANVAS         400
=============  ======
"""

from __future__ import annotations

import math
from collections import defaultdict

import numpy as np

from .complex import CurveComplex, EdgeKind, _boundary_circuits
from .numbering import Numbering, twist_vertices

THICK = 3
THIN = 1
DOT_RADIUS = 4
DASH = "4 3"
CANVAS = 400
MARGIN = 20
FONT_SIZE = 14
ARC_STEPS = 48  # samples per full turn

STYLE = {
    EdgeKind.C: f'stroke="black" stroke-width="{THICK}"',
    EdgeKind.CPRIME: f'stroke="black" stroke-width="{THIN}"',
    EdgeKind.B: f'stroke="black" stroke-width="{THIN}" stroke-dasharray="{DASH}"',
}
CLASS = {EdgeKind.C: "C", EdgeKind.CPRIME: "Cprime", EdgeKind.B: "B"}


class RenderUnsupported(ValueError):
    """The complex cannot be drawn in the plane by this renderer."""


def _fmt(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def _arc(center, radius, a0, a1):
    steps = max(2, int(math.ceil(abs(a1 - a0) / (2 * math.pi) * ARC_STEPS)))
    return [(center[0] + radius * math.cos(a0 + (a1 - a0) * t / steps),
             center[1] + radius * math.sin(a0 + (a1 - a0) * t / steps)) for t in range(steps + 1)]


def _inside(p, poly):
    x, y = p
    hit = False
    for (x0, y0), (x1, y1) in zip(poly, poly[1:] + poly[:1]):
        if (y0 > y) != (y1 > y) and x < x0 + (y - y0) * (x1 - x0) / (y1 - y0):
            hit = not hit
    return hit


def _seg_dist(p, a, b):
    ax, ay = b[0] - a[0], b[1] - a[1]
    L = ax * ax + ay * ay
    t = 0.0 if L == 0 else max(0.0, min(1.0, ((p[0] - a[0]) * ax + (p[1] - a[1]) * ay) / L))
    return math.hypot(p[0] - a[0] - t * ax, p[1] - a[1] - t * ay)


def _pole(poly):
    """An interior point far from the boundary, and its clearance."""
    xs, ys = [p[0] for p in poly], [p[1] for p in poly]
    best, best_d = None, -1.0
    n = 24
    for i in range(1, n):
        for j in range(1, n):
            p = (min(xs) + (max(xs) - min(xs)) * i / n, min(ys) + (max(ys) - min(ys)) * j / n)
            if not _inside(p, poly):
                continue
            d = min(_seg_dist(p, a, b) for a, b in zip(poly, poly[1:] + poly[:1]))
            if d > best_d + 1e-9:
                best, best_d = p, d
    if best is None:
        best, best_d = (sum(xs) / len(xs), sum(ys) / len(ys)), 1.0
    return best, best_d


class _Layout:
    def __init__(self, c: CurveComplex):
        self.c = c
        self.edge_points: dict[str, list] = {}
        self.free_points: dict[str, list] = {}
        self.vertex_pos: dict[str, tuple] = {}
        self.label_pos: dict[str, tuple] = {}
        self.seen_regions: set[str] = set()
        self.seen_pieces: set[str] = set()
        self._pieces()

    def _pieces(self):
        c = self.c
        parent = {v.id: v.id for v in c.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in c.edges:
            parent[find(e.head)] = find(e.tail)
        self.piece_of_vertex = {v.id: "K:" + min(w.id for w in c.vertices if find(w.id) == find(v.id))
                                for v in c.vertices}
        # piece -> {region: cycle}; region -> [pieces]
        self.cycles_of = defaultdict(dict)
        self.pieces_in = defaultdict(list)
        for r in c.regions:
            for cycle in r.cycles:
                piece = self.piece_of_vertex[c.endpoint_of(cycle[0].departs)]
                if r.id in self.cycles_of[piece]:
                    raise RenderUnsupported(f"region {r.id} meets one graph component twice")
                self.cycles_of[piece][r.id] = cycle
                self.pieces_in[r.id].append(piece)
            for fc in r.free_circles:
                self.pieces_in[r.id].append("F:" + fc.id)
                self.cycles_of["F:" + fc.id][r.id] = None

    def _boundary_cycles(self, piece):
        """The ∂Σ circles made of B edges in ``piece``, each with Σ on the left."""
        c = self.c
        refs = {}
        for r in c.regions:
            for cycle in r.cycles:
                for ref in cycle:
                    if c.edge_map[ref.edge].kind is EdgeKind.B:
                        refs[ref.edge] = ref
        mine = sorted(e for e in refs if self.piece_of_vertex[c.edge_map[e].tail] == piece)
        by_start = {c.endpoint_of(refs[e].departs): refs[e] for e in mine}
        cycles, used = [], set()
        for first in mine:
            if first in used:
                continue
            out, ref = [], refs[first]
            while not out or ref.edge != first:
                out.append(ref)
                used.add(ref.edge)
                ref = by_start[c.endpoint_of(ref.arrives)]
            cycles.append(tuple(out))
        return cycles

    # -- pieces ------------------------------------------------------------

    def root(self):
        c = self.c
        box = [(MARGIN, MARGIN), (CANVAS - MARGIN, MARGIN), (CANVAS - MARGIN, CANVAS - MARGIN), (MARGIN, CANVAS - MARGIN)]
        center, radius = (CANVAS / 2, CANVAS / 2), CANVAS / 2 - MARGIN
        b_edges = sorted(e.id for e in c.edges if e.kind is EdgeKind.B)
        free = sorted(fc.id for r in c.regions for fc in r.free_circles)
        if b_edges:
            piece = self.piece_of_vertex[c.edge_map[b_edges[0]].tail]
            if len(_boundary_circuits(c)) > 1:
                raise RenderUnsupported("at most one boundary circle of Σ may carry graph vertices")
            self.piece(piece, None, center, radius, outer=self._boundary_cycles(piece)[0])
        elif free:
            self.piece("F:" + free[0], None, center, radius)
        else:
            self.region(c.regions[0].id, box, None)
        missing = [r.id for r in c.regions if r.id not in self.seen_regions]
        if missing:
            raise RenderUnsupported(f"regions {', '.join(missing)} are not reachable in a planar layout")

    def piece(self, piece, parent_region, center, radius, outer=None):
        if piece in self.seen_pieces:
            raise RenderUnsupported("regions and graph components do not form a tree (Σ is not planar)")
        self.seen_pieces.add(piece)
        if piece.startswith("F:"):
            pts = _arc(center, radius, math.pi / 2, math.pi / 2 + 2 * math.pi)
            self.free_points[piece[2:]] = pts
            if parent_region is None:
                (owner,) = self.cycles_of[piece]
                self.region(owner, pts[:-1], piece)
            return
        if outer is None:
            outer = self.cycles_of[piece][parent_region]
            turn = -1  # parent region outside: clockwise
        else:
            turn = 1
        self._place(piece, outer, center, radius, turn)
        for rid, cycle in sorted(self.cycles_of[piece].items()):
            if rid == parent_region:
                continue
            poly = []
            for ref in cycle:
                pts = self.edge_points[ref.edge]
                poly.extend(pts[:-1] if ref.forward else pts[::-1][:-1])
            self.region(rid, poly, piece)

    def _place(self, piece, outer, center, radius, turn):
        angle = {}
        self._ring(outer, center, radius, turn, angle)
        self._interior(piece, angle, center, radius)

    def _ring(self, cycle, center, radius, turn, angle):
        c = self.c
        ring = [c.endpoint_of(ref.departs) for ref in cycle]
        if len(set(ring)) != len(ring) or set(ring) & set(angle):
            raise RenderUnsupported(f"face boundary through {ring[0]} is not a simple cycle")
        m = len(ring)
        for k, v in enumerate(ring):
            angle[v] = math.pi / 2 + turn * 2 * math.pi * k / m
            self.vertex_pos[v] = (center[0] + radius * math.cos(angle[v]), center[1] + radius * math.sin(angle[v]))
        for k, ref in enumerate(cycle):
            a0 = angle[ring[k]]
            pts = _arc(center, radius, a0, a0 + turn * 2 * math.pi / m)
            self.edge_points[ref.edge] = pts if ref.forward else pts[::-1]

    def _interior(self, piece, angle, center, radius):
        c = self.c
        members = sorted(v for v, p in self.piece_of_vertex.items() if p == piece and v not in angle)
        edges = [e for e in c.edges if self.piece_of_vertex[e.tail] == piece and e.id not in self.edge_points]
        if members:
            index = {v: i for i, v in enumerate(members)}
            L = np.zeros((len(members), len(members)))
            rhs = np.zeros((len(members), 2))
            for e in edges:
                if e.tail == e.head:
                    continue
                for a, b in ((e.tail, e.head), (e.head, e.tail)):
                    if a in index:
                        L[index[a], index[a]] += 1
                        if b in index:
                            L[index[a], index[b]] -= 1
                        else:
                            rhs[index[a]] += self.vertex_pos[b]
            sol = np.linalg.solve(L, rhs)
            for v, i in index.items():
                self.vertex_pos[v] = (float(sol[i, 0]), float(sol[i, 1]))

        bundles = defaultdict(list)
        for e in edges:
            bundles[tuple(sorted((e.tail, e.head)))].append(e)
        for (u, w), group in sorted(bundles.items()):
            for k, e in enumerate(group):
                p, q = self.vertex_pos[e.tail], self.vertex_pos[e.head]
                if u == w:
                    self.edge_points[e.id] = self._loop(p, center, radius, k)
                    continue
                offset = (k - (len(group) - 1) / 2) * 0.25 * math.dist(p, q)
                if e.tail != u:
                    offset = -offset
                self.edge_points[e.id] = self._curve(p, q, offset)

    @staticmethod
    def _curve(p, q, offset):
        mx, my = (p[0] + q[0]) / 2, (p[1] + q[1]) / 2
        d = math.dist(p, q) or 1.0
        nx, ny = -(q[1] - p[1]) / d, (q[0] - p[0]) / d
        ctrl = (mx + 2 * offset * nx, my + 2 * offset * ny)
        steps = 1 if offset == 0 else 12
        return [((1 - t) ** 2 * p[0] + 2 * (1 - t) * t * ctrl[0] + t * t * q[0],
                 (1 - t) ** 2 * p[1] + 2 * (1 - t) * t * ctrl[1] + t * t * q[1])
                for t in (i / steps for i in range(steps + 1))]

    @staticmethod
    def _loop(p, center, radius, k):
        dx, dy = center[0] - p[0], center[1] - p[1]
        d = math.hypot(dx, dy) or 1.0
        ux, uy = dx / d, dy / d
        size = radius * 0.3 * (1 + 0.3 * k)
        pts = []
        for i in range(ARC_STEPS // 2 + 1):
            phi = 2 * math.pi * i / (ARC_STEPS // 2)
            s, t = size * (1 - math.cos(phi)) / 2, size * 0.35 * math.sin(phi)
            pts.append((p[0] + s * ux - t * uy, p[1] + s * uy + t * ux))
        return pts

    # -- regions -----------------------------------------------------------

    def region(self, rid, poly, parent_piece):
        if rid in self.seen_regions:
            raise RenderUnsupported("regions and graph components do not form a tree (Σ is not planar)")
        self.seen_regions.add(rid)
        children = sorted(p for p in self.pieces_in[rid] if p != parent_piece)
        (px, py), d = _pole(poly)
        slots = len(children) + 1
        step = 2 * d / slots
        centers = [(px - d + step * (k + 0.5), py) for k in range(slots)]
        self.label_pos[rid] = centers[0]
        for child, cc in zip(children, centers[1:]):
            self.piece(child, rid, cc, 0.3 * step)


def _path(points, flip):
    return "M " + " L ".join(f"{_fmt(x)},{_fmt(flip(y))}" for x, y in points)


def render_svg(c: CurveComplex, n: Numbering) -> str:
    """The projected picture of ``(c, n)`` as an SVG document string."""
    if any(r.genus for r in c.regions):
        raise RenderUnsupported("rendering needs every region to have genus 0")
    if c.euler + c.boundary_circles != 2:
        raise RenderUnsupported(f"rendering needs planar Σ (χ + b = 2), got χ={c.euler}, b={c.boundary_circles}")
    lay = _Layout(c)
    lay.root()

    def flip(y):
        return CANVAS - y

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">',
        f'<rect width="{CANVAS}" height="{CANVAS}" fill="white"/>',
    ]
    for e in c.edges:
        out.append(f'<path class="edge {CLASS[e.kind]}" id="{e.id}" d="{_path(lay.edge_points[e.id], flip)}" '
                   f'fill="none" {STYLE[e.kind]}/>')
    for cid, pts in sorted(lay.free_points.items()):
        out.append(f'<path class="edge B free" id="{cid}" d="{_path(pts, flip)} Z" fill="none" {STYLE[EdgeKind.B]}/>')
    for vid in sorted(twist_vertices(c, n)):
        x, y = lay.vertex_pos[vid]
        out.append(f'<circle class="twist" cx="{_fmt(x)}" cy="{_fmt(flip(y))}" r="{DOT_RADIUS}" fill="black"/>')
    for r in c.regions:
        x, y = lay.label_pos[r.id]
        out.append(f'<text class="label" x="{_fmt(x)}" y="{_fmt(flip(y))}" font-size="{FONT_SIZE}" '
                   f'text-anchor="middle" dominant-baseline="central">{n[r.id]}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

