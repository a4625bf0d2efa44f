"""Rebuild the surface determined by curve data and a numbering.

Over a region with value ``k`` lie ``k`` horizontal sheets, numbered from 1
at the bottom.  Across a C edge the top sheet of the larger side ends on
``C × 1`` and the others continue level to level; across a C' edge the
bottom sheet of the larger side ends on ``C' × 0`` and the rest drop one
level.  At a twist vertex the two value-1 sheets are glued along the
vertical twist line, whose top lies on ``C × 1`` and bottom on ``C' × 0``.

The result is an abstract :class:`SheetComplex`: cells (one per sheet),
boundary segments of cells and the gluings among them.  Each cell is a copy
of its region surface, whose boundary circles are subdivided by segments
and corners; corners are identified through the gluings.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from typing import NamedTuple

from ._unionfind import ParityUnionFind, UnionFind
from .complex import CurveComplex, EdgeKind, VertexKind, validate_structure
from .numbering import Numbering, validate_numbering


class PreconditionError(ValueError):
    """Reconstruction was asked for data that fails validation."""


class InternalConsistencyError(RuntimeError):
    """The gluing rules produced an ill-formed complex (a bug, not bad input)."""


class BoundaryLabel(str, enum.Enum):
    C_TIMES_ONE = "CtimesOne"
    CPRIME_TIMES_ZERO = "CPrimeTimesZero"
    B_ARC = "Barc"


@dataclass(frozen=True)
class SheetCell:
    region: str
    level: int
    genus: int
    cycle_lengths: tuple[int, ...]
    free_circles: int

    @property
    def id(self) -> str:
        return f"{self.region}#{self.level}"

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus - len(self.cycle_lengths) - self.free_circles


class Segment(NamedTuple):
    """A boundary arc of one cell.

    ``kind`` is ``"edge"`` (over an edge of the graph), ``"free"`` (a whole
    free circle) or ``"twist"`` (a twist line); ``over`` is the id of that
    edge, circle or crossing vertex.  ``ends`` are the corner indices at the
    tail and head.
    """

    id: str
    cell: int
    kind: str
    over: str
    ends: tuple[int, int]


class Gluing(NamedTuple):
    """Identification of segments ``a`` and ``b``.

    With ``reversed`` the tail of ``a`` meets the head of ``b`` (the cells'
    inherited orientations agree); otherwise tails meet.
    """

    a: int
    b: int
    reversed: bool


class CornerSlot(NamedTuple):
    cell: int
    vertex: str  # graph vertex (or free circle) underneath
    incidences: tuple[tuple[int, int], tuple[int, int]]  # (segment, end)


@dataclass(frozen=True)
class SheetComplex:
    cells: tuple[SheetCell, ...]
    segments: tuple[Segment, ...]
    corners: tuple[CornerSlot, ...]
    gluings: tuple[Gluing, ...]
    boundary: tuple[tuple[int, BoundaryLabel], ...]  # segment index, label
    twist_edges: tuple[tuple[str, int, int], ...]  # vertex, twist segments glued along it

    def boundary_map(self) -> dict[int, BoundaryLabel]:
        return dict(self.boundary)

    def glue_map(self) -> dict[tuple[int, int], tuple[int, int]]:
        """Segment end to the segment end it is identified with."""
        out = {}
        for g in self.gluings:
            if g.reversed:
                pairs = (((g.a, 0), (g.b, 1)), ((g.a, 1), (g.b, 0)))
            else:
                pairs = (((g.a, 0), (g.b, 0)), ((g.a, 1), (g.b, 1)))
            for x, y in pairs:
                out[x] = y
                out[y] = x
        return out

    def corner_of(self) -> dict[tuple[int, int], int]:
        out = {}
        for k, slot in enumerate(self.corners):
            for inc in slot.incidences:
                out[inc] = k
        return out


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def reconstruct(c: CurveComplex, n: Numbering) -> SheetComplex:
    """Glue the sheets over each region into the surface for ``(c, n)``."""
    problems = validate_structure(c)
    if not problems:
        problems = validate_numbering(c, n)
    if problems:
        raise PreconditionError("; ".join(v.format() for v in problems))

    cells: list[SheetCell] = []
    cell_index: dict[tuple[str, int], int] = {}
    for r in c.regions:
        for level in range(1, n[r.id] + 1):
            cell_index[(r.id, level)] = len(cells)
            cells.append(SheetCell(r.id, level, r.genus, tuple(len(cy) for cy in r.cycles), len(r.free_circles)))

    # boundary label (or None when glued) of every edge slot at every level
    def slot_label(rid, ref, level):
        e = c.edge_map[ref.edge]
        if e.kind is EdgeKind.B:
            if not e.in_pB:
                raise InternalConsistencyError(f"sheet over {rid} meets ∂Σ outside p(B) along {e.id}")
            return BoundaryLabel.B_ARC
        fwd, bwd = c.edge_sides(e.id)
        other = bwd if ref.forward else fwd
        mine, theirs = n[rid], n[other]
        if mine < theirs:
            return None
        if e.kind is EdgeKind.C:
            return BoundaryLabel.C_TIMES_ONE if level == mine else None
        return BoundaryLabel.CPRIME_TIMES_ZERO if level == 1 else None

    segments: list[Segment] = []
    seg_ends: list[list[int]] = []  # mutable ends while building
    corners: list[list] = []  # [cell, vertex, [incidences]]
    boundary: dict[int, BoundaryLabel] = {}
    slot_segment: dict[tuple[str, int, int, int], int] = {}  # (region, cycle, pos, level)
    twist_segs = defaultdict(list)  # vertex -> [(segment, top_end)]

    def new_segment(sid, cell, kind, over):
        segments.append(Segment(sid, cell, kind, over, (-1, -1)))
        seg_ends.append([-1, -1])
        return len(segments) - 1

    def new_corner(cell, vertex, *incidences):
        k = len(corners)
        corners.append((cell, vertex, incidences))
        for seg, end in incidences:
            seg_ends[seg][end] = k
        return k

    for r in c.regions:
        for level in range(1, n[r.id] + 1):
            ci_cell = cell_index[(r.id, level)]
            for ci, cycle in enumerate(r.cycles):
                segs, labels = [], []
                for pi, ref in enumerate(cycle):
                    s = new_segment(f"{ref}@{r.id}#{level}", ci_cell, "edge", ref.edge)
                    slot_segment[(r.id, ci, pi, level)] = s
                    lab = slot_label(r.id, ref, level)
                    if lab is not None:
                        boundary[s] = lab
                    segs.append(s)
                    labels.append(lab)
                m = len(cycle)
                for pi, ref in enumerate(cycle):
                    nxt = (pi + 1) % m
                    vertex = c.endpoint_of(ref.arrives)
                    lin, lout = labels[pi], labels[nxt]
                    split = (c.vertex_map[vertex].kind is VertexKind.CROSSING
                             and lin is not None and lout is not None)
                    if not split:
                        new_corner(ci_cell, vertex, (segs[pi], 1), (segs[nxt], 0))
                        continue
                    if {lin, lout} != {BoundaryLabel.C_TIMES_ONE, BoundaryLabel.CPRIME_TIMES_ZERO}:
                        raise InternalConsistencyError(f"corner of {r.id}#{level} at {vertex} is bounded by {lin}, {lout}")
                    t = new_segment(f"~{vertex}@{r.id}#{level}:{ci}.{pi}", ci_cell, "twist", vertex)
                    # the twist line runs from the in-segment's height to the out-segment's
                    top_end = 0 if lin is BoundaryLabel.C_TIMES_ONE else 1
                    new_corner(ci_cell, vertex, (segs[pi], 1), (t, 0))
                    new_corner(ci_cell, vertex, (t, 1), (segs[nxt], 0))
                    twist_segs[vertex].append((t, top_end))
            for fc in r.free_circles:
                if not fc.in_pB:
                    raise InternalConsistencyError(f"sheet over {r.id} meets ∂Σ outside p(B) at {fc.id}")
                s = new_segment(f"{fc.id}@{r.id}#{level}", ci_cell, "free", fc.id)
                boundary[s] = BoundaryLabel.B_ARC
                new_corner(ci_cell, fc.id, (s, 1), (s, 0))

    gluings: list[Gluing] = []
    for e in c.curve_edges():
        fwd_slot = next(s for s in c.slots[e.id] if s.forward)
        bwd_slot = next(s for s in c.slots[e.id] if not s.forward)
        vf, vb = n[fwd_slot.region], n[bwd_slot.region]
        (big, vbig), (small, vsmall) = sorted(((fwd_slot, vf), (bwd_slot, vb)), key=lambda t: -t[1])
        for lv in range(1, vsmall + 1):
            lbig = lv if e.kind is EdgeKind.C else lv + 1
            a = slot_segment[(big.region, big.cycle, big.position, lbig)]
            b = slot_segment[(small.region, small.cycle, small.position, lv)]
            gluings.append(Gluing(a, b, True))

    twist_edges = []
    for vertex in sorted(twist_segs):
        pair = twist_segs[vertex]
        if len(pair) != 2:
            raise InternalConsistencyError(f"twist vertex {vertex} has {len(pair)} split corners")
        (a, ta), (b, tb) = pair
        gluings.append(Gluing(a, b, ta != tb))
        twist_edges.append((vertex, a, b))

    segs_final = tuple(s._replace(ends=tuple(seg_ends[i])) for i, s in enumerate(segments))
    corner_final = tuple(CornerSlot(cell, vertex, tuple(inc)) for cell, vertex, inc in corners)
    glued = [g.a for g in gluings] + [g.b for g in gluings]
    if len(set(glued)) != len(glued) or set(glued) & set(boundary) or len(glued) + len(boundary) != len(segments):
        raise InternalConsistencyError("every segment must be glued once or lie on the boundary")
    return SheetComplex(tuple(cells), segs_final, corner_final, tuple(gluings),
                        tuple(sorted(boundary.items())), tuple(twist_edges))


# ---------------------------------------------------------------------------
# boundary and invariants
# ---------------------------------------------------------------------------


class TraceStep(NamedTuple):
    label: BoundaryLabel
    segment: str
    over: str


@dataclass(frozen=True)
class BoundaryTrace:
    components: tuple[tuple[TraceStep, ...], ...]

    def __len__(self):
        return len(self.components)

    def format(self) -> str:
        lines = []
        for i, comp in enumerate(self.components, start=1):
            lines.append(f"boundary {i}: " + " ".join(f"{st.label.value}:{st.segment}" for st in comp))
        return "".join(line + "\n" for line in lines)


def trace_boundary(s: SheetComplex) -> BoundaryTrace:
    """Walk around each boundary circle of the surface.

    From the end of a boundary segment, turn around the corner into the
    next segment of the cell; while that segment is glued, cross to its
    partner and keep turning.
    """
    labels = s.boundary_map()
    glue = s.glue_map()
    corner_of = s.corner_of()
    limit = 4 * len(s.segments) + 4

    def other_incidence(inc):
        a, b = s.corners[corner_of[inc]].incidences
        return b if inc == a else a

    order = sorted(labels, key=lambda i: s.segments[i].id)
    visited: set[int] = set()
    comps = []
    for start in order:
        if start in visited:
            continue
        comp, seg, exit_end = [], start, 1
        for _ in range(limit):
            visited.add(seg)
            comp.append(TraceStep(labels[seg], s.segments[seg].id, s.segments[seg].over))
            inc = other_incidence((seg, exit_end))
            for _ in range(limit):
                if inc[0] in labels:
                    break
                inc = other_incidence(glue[inc])
            else:
                raise InternalConsistencyError("corner walk did not reach the boundary")
            seg, exit_end = inc[0], 1 - inc[1]
            if seg == start:
                if exit_end != 1:
                    raise InternalConsistencyError(f"boundary walk re-entered {s.segments[start].id} backwards")
                break
        else:
            raise InternalConsistencyError("boundary walk did not close")
        comps.append(tuple(comp))
    return BoundaryTrace(tuple(comps))


@dataclass(frozen=True)
class SurfaceInvariants:
    euler: int
    boundary_components: int
    connected_components: int
    orientable: bool
    genus_per_component: tuple[int | None, ...]
    component_euler: tuple[int, ...]
    component_boundaries: tuple[int, ...]
    twists: int

    def format(self) -> str:
        genus = ",".join("-" if g is None else str(g) for g in self.genus_per_component)
        return (f"X: chi={self.euler} boundary={self.boundary_components} "
                f"components={self.connected_components} orientable={'yes' if self.orientable else 'no'} "
                f"genus=[{genus}] twists={self.twists}")


def vertex_classes(s: SheetComplex) -> UnionFind:
    uf = UnionFind(range(len(s.corners)))
    corner_of = s.corner_of()
    for x, y in s.glue_map().items():
        uf.union(corner_of[x], corner_of[y])
    return uf


def invariants(s: SheetComplex) -> SurfaceInvariants:
    """Euler characteristic, boundary, components, orientability and genera."""
    verts = vertex_classes(s)
    cell_uf = UnionFind(range(len(s.cells)))
    orient = ParityUnionFind()
    for i in range(len(s.cells)):
        orient.add(i)
    consistent = True
    bad_cells = set()
    for g in s.gluings:
        ca, cb = s.segments[g.a].cell, s.segments[g.b].cell
        cell_uf.union(ca, cb)
        if not orient.union(ca, cb, 0 if g.reversed else 1):
            consistent = False
            bad_cells.add(ca)

    comp_of_cell = {i: cell_uf.find(i) for i in range(len(s.cells))}
    roots = sorted(set(comp_of_cell.values()), key=lambda r: min(
        (s.cells[i].region, s.cells[i].level) for i in comp_of_cell if comp_of_cell[i] == r))
    comp_pos = {r: k for k, r in enumerate(roots)}
    ncomp = len(roots)
    chi = [0] * ncomp
    for i, cell in enumerate(s.cells):
        chi[comp_pos[comp_of_cell[i]]] += cell.euler
    seen_vertex = set()
    for k, slot in enumerate(s.corners):
        root = verts.find(k)
        if root not in seen_vertex:
            seen_vertex.add(root)
            chi[comp_pos[comp_of_cell[slot.cell]]] += 1
    for seg in s.segments:
        chi[comp_pos[comp_of_cell[seg.cell]]] -= 1
    for g in s.gluings:
        chi[comp_pos[comp_of_cell[s.segments[g.a].cell]]] += 1

    # boundary circles: boundary segments linked through shared quotient vertices
    bd = UnionFind()
    for seg_index, _ in s.boundary:
        seg = s.segments[seg_index]
        bd.union(("s", seg_index), ("v", verts.find(seg.ends[0])))
        bd.union(("s", seg_index), ("v", verts.find(seg.ends[1])))
    circle_roots = {}
    for seg_index, _ in s.boundary:
        circle_roots.setdefault(bd.find(("s", seg_index)), s.segments[seg_index].cell)
    b = [0] * ncomp
    for cell in circle_roots.values():
        b[comp_pos[comp_of_cell[cell]]] += 1

    comp_orientable = [True] * ncomp
    for cell in bad_cells:
        comp_orientable[comp_pos[comp_of_cell[cell]]] = False
    genus = tuple((2 - chi[k] - b[k]) // 2 if comp_orientable[k] else None for k in range(ncomp))
    return SurfaceInvariants(
        euler=sum(chi),
        boundary_components=sum(b),
        connected_components=ncomp,
        orientable=consistent,
        genus_per_component=genus,
        component_euler=tuple(chi),
        component_boundaries=tuple(b),
        twists=len(s.twist_edges),
    )


def euler_crosscheck(c: CurveComplex, n: Numbering) -> int:
    """χ(X) by local counting, without building the sheet complex.

    Sheets contribute ``N(r)·χ(r)``.  Over a graph vertex or edge the number
    of distinct quotient vertices or edges equals the largest value among
    the regions around it; a twist adds one vertex and one edge, which
    cancel.
    """
    chi = sum(n[r.id] * r.euler for r in c.regions)
    around_vertex = defaultdict(int)
    for k in c.corners:
        around_vertex[k.vertex] = max(around_vertex[k.vertex], n[k.region])
    chi += sum(around_vertex.values())
    for e in c.edges:
        chi -= max(n[s.region] for s in c.slots[e.id])
    return chi


def check_surface(s: SheetComplex) -> list[str]:
    """Problems preventing the quotient from being a compact surface (empty if none).

    Every segment must be glued at most once, and every quotient vertex
    must have a connected link that is a circle (interior point) or an arc
    (boundary point).
    """
    problems = []
    labels = s.boundary_map()
    uses = defaultdict(int)
    for g in s.gluings:
        uses[g.a] += 1
        uses[g.b] += 1
    for i, seg in enumerate(s.segments):
        if uses[i] > 1:
            problems.append(f"segment {seg.id} is glued {uses[i]} times")
        if uses[i] and i in labels:
            problems.append(f"segment {seg.id} is both glued and boundary")
        if not uses[i] and i not in labels:
            problems.append(f"segment {seg.id} is neither glued nor boundary")

    glue = s.glue_map()
    corner_of = s.corner_of()
    classes = vertex_classes(s)
    members = defaultdict(set)
    for k in range(len(s.corners)):
        members[classes.find(k)].add(k)
    boundary_vertices = set()
    for root, group in members.items():
        start = min(group)
        reached, stack = {start}, [start]
        free_ends = 0
        while stack:
            k = stack.pop()
            for inc in s.corners[k].incidences:
                if inc in glue:
                    j = corner_of[glue[inc]]
                    if j not in reached:
                        reached.add(j)
                        stack.append(j)
                else:
                    free_ends += 1
        if reached != group:
            problems.append(f"link of vertex over {s.corners[start].vertex} is disconnected")
        if free_ends not in (0, 2):
            problems.append(f"link of vertex over {s.corners[start].vertex} has {free_ends} free ends")
        if free_ends == 2:
            boundary_vertices.add(root)
    for vertex, a, _ in s.twist_edges:
        for end in (0, 1):
            if classes.find(s.segments[a].ends[end]) not in boundary_vertices:
                problems.append(f"twist line at {vertex} has an interior endpoint")
    return problems

