"""Curve systems on a compact orientable surface, as a region-annotated graph.

A :class:`CurveComplex` stores the graph ``C ∪ C' ∪ ∂Σ`` together with the
complementary regions of ``C ∪ C'``.  Regions are given explicitly by their
boundary cycles (region to the left of every directed edge), their genus and
the boundary circles of the surface that they contain without meeting any
curve.  The graph may be disconnected; rotation data is recovered from the
corners that region cycles contribute at each vertex.
"""

from __future__ import annotations

import enum
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

from .violation import Condition, Violation, sorted_violations


class VertexKind(str, enum.Enum):
    CROSSING = "crossing"
    ENDPOINT = "endpoint"
    DUMMY = "dummy"


class EdgeKind(str, enum.Enum):
    C = "C"
    CPRIME = "C'"
    B = "B"

    @property
    def is_curve(self) -> bool:
        return self is not EdgeKind.B


@dataclass(frozen=True)
class Vertex:
    id: str
    kind: VertexKind


@dataclass(frozen=True)
class Edge:
    id: str
    kind: EdgeKind
    tail: str
    head: str
    in_pB: bool = False


@dataclass(frozen=True)
class EdgeRef:
    """An edge traversed forwards (tail to head) or backwards."""

    edge: str
    forward: bool = True

    def __str__(self):
        return ("+" if self.forward else "-") + self.edge

    @property
    def departs(self) -> "HalfEdge":
        return HalfEdge(self.edge, 0 if self.forward else 1)

    @property
    def arrives(self) -> "HalfEdge":
        return HalfEdge(self.edge, 1 if self.forward else 0)


@dataclass(frozen=True)
class FreeCircle:
    id: str
    in_pB: bool


@dataclass(frozen=True)
class Region:
    id: str
    genus: int = 0
    cycles: tuple[tuple[EdgeRef, ...], ...] = ()
    free_circles: tuple[FreeCircle, ...] = ()

    @property
    def boundary_count(self) -> int:
        return len(self.cycles) + len(self.free_circles)

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus - self.boundary_count


class HalfEdge(NamedTuple):
    """One end of an edge: ``end`` is 0 at the tail and 1 at the head."""

    edge: str
    end: int


class Slot(NamedTuple):
    """One occurrence of an edge in a region boundary cycle."""

    region: str
    cycle: int
    position: int
    forward: bool


class Corner(NamedTuple):
    """The corner of a region at the vertex between two consecutive cycle edges."""

    region: str
    cycle: int
    position: int  # corner sits at the head of edge ``position``
    vertex: str
    incoming: HalfEdge
    outgoing: HalfEdge


class DualArc(NamedTuple):
    edge: str
    kind: EdgeKind
    source: str  # region traversing the edge forwards
    target: str  # region traversing the edge backwards


@dataclass(frozen=True)
class DualGraph:
    nodes: tuple[str, ...]
    arcs: tuple[DualArc, ...]

    def neighbours(self) -> dict[str, list[tuple[str, DualArc]]]:
        adj = {n: [] for n in self.nodes}
        for arc in self.arcs:
            adj[arc.source].append((arc.target, arc))
            if arc.source != arc.target:
                adj[arc.target].append((arc.source, arc))
        return adj


@dataclass(frozen=True)
class CurveComplex:
    """The data ``(Σ, C, C', p(B))``.

    Attributes:
        euler: Declared Euler characteristic of Σ.
        boundary_circles: Declared number of boundary circles of Σ.
        vertices, edges, regions: Graph and region records, in document order.
    """

    euler: int
    boundary_circles: int
    vertices: tuple[Vertex, ...] = ()
    edges: tuple[Edge, ...] = ()
    regions: tuple[Region, ...] = ()

    # -- lookups ---------------------------------------------------------

    @cached_property
    def vertex_map(self) -> dict[str, Vertex]:
        return {v.id: v for v in self.vertices}

    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def region_map(self) -> dict[str, Region]:
        return {r.id: r for r in self.regions}

    @cached_property
    def region_ids(self) -> tuple[str, ...]:
        """Region ids in lexicographic order."""
        return tuple(sorted(r.id for r in self.regions))

    def endpoint_of(self, half: HalfEdge) -> str:
        e = self.edge_map[half.edge]
        return e.tail if half.end == 0 else e.head

    def curve_edges(self) -> Iterator[Edge]:
        return (e for e in self.edges if e.kind.is_curve)

    # -- derived incidence ------------------------------------------------

    @cached_property
    def slots(self) -> dict[str, list[Slot]]:
        out = defaultdict(list)
        for r in self.regions:
            for ci, cycle in enumerate(r.cycles):
                for pi, ref in enumerate(cycle):
                    out[ref.edge].append(Slot(r.id, ci, pi, ref.forward))
        return dict(out)

    @cached_property
    def corners(self) -> tuple[Corner, ...]:
        out = []
        for r in self.regions:
            for ci, cycle in enumerate(r.cycles):
                n = len(cycle)
                for pi, ref in enumerate(cycle):
                    nxt = cycle[(pi + 1) % n]
                    if ref.edge not in self.edge_map:
                        continue
                    out.append(Corner(r.id, ci, pi, self.endpoint_of(ref.arrives), ref.arrives, nxt.departs))
        return tuple(out)

    @cached_property
    def half_edges_at(self) -> dict[str, list[HalfEdge]]:
        out = {v.id: [] for v in self.vertices}
        for e in self.edges:
            out.setdefault(e.tail, []).append(HalfEdge(e.id, 0))
            out.setdefault(e.head, []).append(HalfEdge(e.id, 1))
        return out

    def edge_sides(self, edge_id: str) -> tuple[str, str]:
        """Regions on the forward (left) and backward side of a curve edge."""
        fwd = bwd = None
        for s in self.slots.get(edge_id, ()):
            if s.forward:
                fwd = s.region
            else:
                bwd = s.region
        return fwd, bwd

    @cached_property
    def rotations(self) -> dict[str, tuple[Corner, ...]]:
        """Corners around each vertex in counterclockwise order.

        At an interior vertex the sequence is cyclic; at a vertex on ∂Σ it
        runs from the outgoing to the incoming boundary half-edge.  Only
        meaningful on structurally valid complexes.
        """
        by_out = defaultdict(dict)
        for k in self.corners:
            by_out[k.vertex][k.outgoing] = k
        out = {}
        for v in self.vertices:
            table = by_out.get(v.id, {})
            if not table:
                out[v.id] = ()
                continue
            incoming = {k.incoming for k in table.values()}
            starts = [h for h in table if h not in incoming]
            start = min(starts) if starts else min(table)
            seq, h = [], start
            while h in table and len(seq) <= len(table):
                k = table[h]
                seq.append(k)
                h = k.incoming
                if h == start:
                    break
            out[v.id] = tuple(seq)
        return out

    def crossing_corner_regions(self, vertex_id: str) -> tuple[str, ...]:
        return tuple(k.region for k in self.rotations[vertex_id])

    @cached_property
    def boundary_contacts(self) -> dict[str, tuple[list[str], list[str]]]:
        """Per region: ids of in-p(B) and non-p(B) boundary pieces it meets."""
        out = {r.id: ([], []) for r in self.regions}
        for r in self.regions:
            yes, no = out[r.id]
            for cycle in r.cycles:
                for ref in cycle:
                    e = self.edge_map.get(ref.edge)
                    if e is not None and e.kind is EdgeKind.B:
                        (yes if e.in_pB else no).append(e.id)
            for fc in r.free_circles:
                (yes if fc.in_pB else no).append(fc.id)
        return out


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _check_vertices(c: CurveComplex) -> list[Violation]:
    out = []
    for v in c.vertices:
        halves = c.half_edges_at.get(v.id, [])
        kinds = Counter(c.edge_map[h.edge].kind for h in halves)
        deg = len(halves)
        n_b = kinds[EdgeKind.B]
        if v.kind is VertexKind.CROSSING:
            if deg != 4 or n_b:
                out.append(Violation(Condition.STRUCTURE, (v.id,),
                                     f"crossing vertex must meet 4 curve half-edges, has degree {deg} ({n_b} boundary)"))
        elif v.kind is VertexKind.ENDPOINT:
            if deg != 3 or n_b != 2:
                out.append(Violation(Condition.STRUCTURE, (v.id,),
                                     f"endpoint vertex must meet 1 curve and 2 boundary half-edges, has degree {deg} ({n_b} boundary)"))
        else:
            if deg != 2 or len(kinds) != 1:
                out.append(Violation(Condition.STRUCTURE, (v.id,),
                                     f"dummy vertex must meet 2 half-edges of one kind, has degree {deg}"))
    return out


def _check_slots(c: CurveComplex) -> list[Violation]:
    out = []
    for e in c.edges:
        slots = c.slots.get(e.id, [])
        if e.kind.is_curve:
            signs = sorted(s.forward for s in slots)
            if signs != [False, True]:
                out.append(Violation(Condition.STRUCTURE, (e.id,) + tuple(sorted({s.region for s in slots})),
                                     f"curve edge must occur once forwards and once backwards in region cycles, occurs {len(slots)} times"))
        elif len(slots) != 1:
            out.append(Violation(Condition.STRUCTURE, (e.id,) + tuple(sorted({s.region for s in slots})),
                                 f"boundary edge must occur in exactly one region cycle, occurs {len(slots)} times"))
    for r in c.regions:
        for ci, cycle in enumerate(r.cycles):
            if not cycle:
                out.append(Violation(Condition.STRUCTURE, (r.id,), f"cycle {ci} is empty"))
                continue
            for pi, ref in enumerate(cycle):
                nxt = cycle[(pi + 1) % len(cycle)]
                if c.endpoint_of(ref.arrives) != c.endpoint_of(nxt.departs):
                    out.append(Violation(Condition.STRUCTURE, (r.id, ref.edge, nxt.edge),
                                         f"cycle {ci} is not a closed walk between {ref} and {nxt}"))
    return out


def _check_corners(c: CurveComplex) -> list[Violation]:
    out = []
    by_vertex = defaultdict(list)
    for k in c.corners:
        by_vertex[k.vertex].append(k)
    for v in c.vertices:
        halves = set(c.half_edges_at.get(v.id, []))
        ks = by_vertex.get(v.id, [])
        outs = Counter(k.outgoing for k in ks)
        ins = Counter(k.incoming for k in ks)
        if any(n > 1 for n in outs.values()) or any(n > 1 for n in ins.values()):
            out.append(Violation(Condition.STRUCTURE, (v.id,), "corners overlap: a half-edge starts or ends two corners"))
            continue
        boundary = {h for h in halves if c.edge_map[h.edge].kind is EdgeKind.B}
        succ = {k.outgoing: k.incoming for k in ks}
        if boundary:
            starts = [h for h in halves if h not in ins]
            ends = [h for h in halves if h not in outs]
            ok = len(starts) == 1 and len(ends) == 1 and starts[0] in boundary and ends[0] in boundary
            if ok:
                seen, h = [starts[0]], starts[0]
                while h in succ and len(seen) <= len(halves):
                    h = succ[h]
                    seen.append(h)
                ok = len(seen) == len(halves) and set(seen) == halves
        else:
            ok = bool(halves) and set(succ) == halves
            if ok:
                h0 = min(halves)
                seen, h = [h0], succ[h0]
                while h != h0 and len(seen) <= len(halves):
                    seen.append(h)
                    h = succ[h]
                ok = len(seen) == len(halves)
        if not ok:
            out.append(Violation(Condition.STRUCTURE, (v.id,), "corners do not assemble into a single rotation"))
            continue
        if v.kind is VertexKind.CROSSING and len(halves) == 4:
            kinds = [c.edge_map[k.outgoing.edge].kind for k in c.rotations[v.id]]
            if any(kinds[i] == kinds[(i + 1) % 4] for i in range(4)):
                order = ", ".join(k.value for k in kinds)
                out.append(Violation(Condition.TRANSVERSALITY, (v.id,),
                                     f"rotation order {order} does not alternate C and C'"))
    return out


def _boundary_circuits(c: CurveComplex) -> list[list[str]]:
    """Cycles of boundary edges (each a circle of ∂Σ), as lists of edge ids."""
    b_edges = [e for e in c.edges if e.kind is EdgeKind.B]
    at = defaultdict(list)
    for e in b_edges:
        at[e.tail].append(e.id)
        at[e.head].append(e.id)
    seen, circuits = set(), []
    for e in b_edges:
        if e.id in seen:
            continue
        comp, stack = [], [e.id]
        seen.add(e.id)
        while stack:
            x = stack.pop()
            comp.append(x)
            ex = c.edge_map[x]
            for w in (ex.tail, ex.head):
                for y in at[w]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
        circuits.append(sorted(comp))
    return circuits


def _check_counts(c: CurveComplex) -> list[Violation]:
    out = []
    chi = len(c.vertices) - len(c.edges) + sum(r.euler for r in c.regions)
    if chi != c.euler:
        out.append(Violation(Condition.STRUCTURE, (c.regions[0].id,) if c.regions else (),
                             f"computed Euler characteristic {chi} differs from declared {c.euler}"))
    n_circles = len(_boundary_circuits(c)) + sum(len(r.free_circles) for r in c.regions)
    if n_circles != c.boundary_circles:
        out.append(Violation(Condition.STRUCTURE, (c.regions[0].id,) if c.regions else (),
                             f"found {n_circles} boundary circles, declared {c.boundary_circles}"))
    for r in c.regions:
        if r.genus < 0:
            out.append(Violation(Condition.STRUCTURE, (r.id,), "negative genus"))
    return out


def pB_endpoints(c: CurveComplex) -> set[str]:
    """Vertices where exactly one incident boundary edge lies in p(B)."""
    flags = defaultdict(list)
    for e in c.edges:
        if e.kind is EdgeKind.B:
            flags[e.tail].append(e.in_pB)
            flags[e.head].append(e.in_pB)
    return {v for v, fs in flags.items() if sum(fs) == 1}


def _check_condition_2(c: CurveComplex) -> list[Violation]:
    out = []
    curve_ends = {v.id for v in c.vertices if v.kind is VertexKind.ENDPOINT}
    ends = pB_endpoints(c)
    for v in sorted(curve_ends - ends):
        out.append(Violation(Condition.C2, (v,), "endpoint of C or C' is not an endpoint of p(B)"))
    for v in sorted(ends - curve_ends):
        out.append(Violation(Condition.C2, (v,), "endpoint of p(B) is not an endpoint of C or C'"))
    return out


def _check_references(c: CurveComplex) -> list[Violation]:
    out = []
    for e in c.edges:
        for w in (e.tail, e.head):
            if w not in c.vertex_map:
                out.append(Violation(Condition.STRUCTURE, (e.id, w), "edge endpoint is not a vertex"))
        if e.in_pB and e.kind.is_curve:
            out.append(Violation(Condition.STRUCTURE, (e.id,), "only boundary edges may lie in p(B)"))
    for r in c.regions:
        for cycle in r.cycles:
            for ref in cycle:
                if ref.edge not in c.edge_map:
                    out.append(Violation(Condition.STRUCTURE, (r.id, ref.edge), "cycle references an unknown edge"))
    return out


def validate_structure(c: CurveComplex) -> list[Violation]:
    """Check transversality, cell structure, counts and ``∂p(B) = ∂C ∪ ∂C'``.

    Returns an empty list exactly when the complex is well formed; otherwise
    one violation per failed check, sorted by condition tag and first id.
    """
    refs = _check_references(c)
    if refs:
        return sorted_violations(refs)
    out = _check_vertices(c) + _check_slots(c) + _check_corners(c)
    out += _check_counts(c) + _check_condition_2(c)
    return sorted_violations(out)


def dual_adjacency(c: CurveComplex) -> DualGraph:
    """Regions joined by one arc per C or C' edge (boundary edges give none)."""
    arcs = []
    for e in c.curve_edges():
        fwd, bwd = c.edge_sides(e.id)
        arcs.append(DualArc(e.id, e.kind, fwd, bwd))
    return DualGraph(tuple(r.id for r in c.regions), tuple(arcs))
