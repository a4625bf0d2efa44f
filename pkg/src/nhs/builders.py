"""Constructors for standard complexes.

Used by the test-suite and handy for experiments.  The two parametrised
families are grids (horizontal and vertical lines on a disk, cylinder or
torus) and concentric loops (on a sphere, disk or annulus).
"""

from __future__ import annotations

from typing import Sequence

from .complex import CurveComplex, Edge, EdgeKind, EdgeRef, FreeCircle, Region, Vertex, VertexKind

C, CP, B = EdgeKind.C, EdgeKind.CPRIME, EdgeKind.B


def _ref(edge, forward=True):
    return EdgeRef(edge, forward)


def quadrant_disk() -> CurveComplex:
    """A disk cut by one C arc and one C' arc meeting once at ``o``.

    Quadrants ``q1..q4`` run counterclockwise from the north-east; the p(B)
    arcs are the boundary arcs of ``q1`` and ``q3``.
    """
    vertices = (
        Vertex("o", VertexKind.CROSSING),
        Vertex("e", VertexKind.ENDPOINT),
        Vertex("n", VertexKind.ENDPOINT),
        Vertex("w", VertexKind.ENDPOINT),
        Vertex("s", VertexKind.ENDPOINT),
    )
    edges = (
        Edge("ce", C, "o", "e"),
        Edge("cw", C, "o", "w"),
        Edge("dn", CP, "o", "n"),
        Edge("ds", CP, "o", "s"),
        Edge("bne", B, "e", "n", True),
        Edge("bnw", B, "n", "w", False),
        Edge("bsw", B, "w", "s", True),
        Edge("bse", B, "s", "e", False),
    )
    regions = (
        Region("q1", 0, ((_ref("ce"), _ref("bne"), _ref("dn", False)),)),
        Region("q2", 0, ((_ref("dn"), _ref("bnw"), _ref("cw", False)),)),
        Region("q3", 0, ((_ref("cw"), _ref("bsw"), _ref("ds", False)),)),
        Region("q4", 0, ((_ref("ds"), _ref("bse"), _ref("ce", False)),)),
    )
    return CurveComplex(1, 1, vertices, edges, regions)


def empty_disk(in_pB: bool = True) -> CurveComplex:
    return CurveComplex(1, 1, regions=(Region("d", 0, (), (FreeCircle("rim", in_pB),)),))


def closed_surface(genus: int) -> CurveComplex:
    """Closed genus-``genus`` surface with no curves: a single region."""
    return CurveComplex(2 - 2 * genus, 0, regions=(Region("s", genus),))


def annulus_core(outer_pB: bool, inner_pB: bool, kind: EdgeKind = C) -> CurveComplex:
    """Annulus split by its core circle; both boundary circles are free."""
    return CurveComplex(
        0, 2,
        vertices=(Vertex("x", VertexKind.DUMMY),),
        edges=(Edge("core", kind, "x", "x"),),
        regions=(
            Region("inner", 0, ((_ref("core"),),), (FreeCircle("hole", inner_pB),)),
            Region("outer", 0, ((_ref("core", False),),), (FreeCircle("rim", outer_pB),)),
        ),
    )


def torus_nonseparating_loop(kind: EdgeKind = C) -> CurveComplex:
    """Torus cut along one essential loop: a single annular region on both sides."""
    return CurveComplex(
        0, 0,
        vertices=(Vertex("x", VertexKind.DUMMY),),
        edges=(Edge("k", kind, "x", "x"),),
        regions=(Region("a", 0, ((_ref("k"),), (_ref("k", False),))),),
    )


def lens_sphere() -> CurveComplex:
    """A C circle and a C' circle on the sphere crossing at ``x1`` (top) and ``x2``.

    Regions: ``lens`` inside both, ``cside`` inside C only, ``dside`` inside
    C' only, ``out`` outside both.
    """
    vertices = (Vertex("x1", VertexKind.CROSSING), Vertex("x2", VertexKind.CROSSING))
    edges = (
        Edge("cin", C, "x2", "x1"),
        Edge("cout", C, "x1", "x2"),
        Edge("din", CP, "x1", "x2"),
        Edge("dout", CP, "x2", "x1"),
    )
    regions = (
        Region("lens", 0, ((_ref("cin"), _ref("din")),)),
        Region("cside", 0, ((_ref("cout"), _ref("din", False)),)),
        Region("dside", 0, ((_ref("dout"), _ref("cin", False)),)),
        Region("out", 0, ((_ref("cout", False), _ref("dout", False)),)),
    )
    return CurveComplex(2, 0, vertices, edges, regions)


# ---------------------------------------------------------------------------
# grids
# ---------------------------------------------------------------------------


def grid(rows: int, cols: int, topology: str = "disk", swap: bool = False,
         phase: int | Sequence[int] = 0) -> CurveComplex:
    """``rows`` horizontal C lines crossing ``cols`` vertical C' lines.

    Args:
        rows, cols: Number of horizontal and vertical lines.
        topology: ``"disk"`` (lines are chords of a square), ``"cylinder"``
            (periodic in x; vertical lines are chords between the two
            boundary circles, horizontal lines are loops) or ``"torus"``.
        swap: Make horizontal lines C' and vertical lines C instead.
        phase: Per boundary circle (one int for all), whether p(B) starts on
            the first or second boundary edge; flags then alternate.

    Every region is a square cell, so periodic directions need at least one
    line crossing them.
    """
    if topology not in ("disk", "cylinder", "torus"):
        raise ValueError(f"unknown topology {topology!r}")
    px = topology in ("cylinder", "torus")
    py = topology == "torus"
    if (px and cols < 1) or (py and rows < 1):
        raise ValueError("periodic directions need at least one transverse line")
    if topology == "disk" and rows == 0 and cols == 0:
        return empty_disk(_phase_list(phase, 1)[0] == 0)
    hkind, vkind = (CP, C) if swap else (C, CP)

    def nx(x):
        return (x - 1) % cols + 1 if px else x

    def ny(y):
        return (y - 1) % rows + 1 if py else y

    def x_interior(x):
        return px or 1 <= x <= cols

    def y_interior(y):
        return py or 1 <= y <= rows

    def node(x, y):
        return f"v{nx(x)}_{ny(y)}"

    cells_x = range(1, cols + 1) if px else range(0, cols + 1)
    cells_y = range(1, rows + 1) if py else range(0, rows + 1)

    vertices = {}
    edges = {}
    regions = []
    for j in cells_y:
        for i in cells_x:
            corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]
            # side k runs from corners[k] to corners[k+1]
            sides = []
            for k in range(4):
                (x0, y0), (x1, y1) = corners[k], corners[(k + 1) % 4]
                if y0 == y1:
                    interior = y_interior(y0)
                    if interior:
                        a = min(x0, x1)
                        eid = f"h{nx(a)}_{ny(y0)}"
                        edges.setdefault(eid, Edge(eid, hkind, node(a, y0), node(a + 1, y0)))
                        sides.append(EdgeRef(eid, x1 > x0))
                    else:
                        sides.append(None)
                else:
                    interior = x_interior(x0)
                    if interior:
                        b = min(y0, y1)
                        eid = f"g{nx(x0)}_{ny(b)}"
                        edges.setdefault(eid, Edge(eid, vkind, node(x0, b), node(x0, b + 1)))
                        sides.append(EdgeRef(eid, y1 > y0))
                    else:
                        sides.append(None)
            cycle = _close_boundary_runs(corners, sides, node, edges)
            regions.append(Region(f"r{nx(i)}_{ny(j)}", 0, (tuple(cycle),)))

    for e in edges.values():
        for w in (e.tail, e.head):
            if w not in vertices:
                x, y = (int(t) for t in w[1:].split("_"))
                crossing = x_interior(x) and y_interior(y)
                vertices[w] = Vertex(w, VertexKind.CROSSING if crossing else VertexKind.ENDPOINT)

    edge_list = _apply_phases(list(edges.values()), phase)
    euler = {"disk": 1, "cylinder": 0, "torus": 0}[topology]
    circles = {"disk": 1, "cylinder": 2, "torus": 0}[topology]
    return CurveComplex(euler, circles, tuple(sorted(vertices.values(), key=lambda v: v.id)),
                        tuple(edge_list), tuple(regions))


def _close_boundary_runs(corners, sides, node, edges):
    """Replace maximal runs of boundary sides with single B edges."""
    if all(s is None for s in sides):
        raise ValueError("cell without curve sides")
    start = next(k for k in range(4) if sides[k] is not None)
    order = [(start + k) % 4 for k in range(4)]
    cycle, run_from = [], None
    for k in order:
        if sides[k] is not None:
            if run_from is not None:
                _add_b(cycle, edges, run_from, node(*corners[k]))
                run_from = None
            cycle.append(sides[k])
        elif run_from is None:
            run_from = node(*corners[k])
    if run_from is not None:
        _add_b(cycle, edges, run_from, node(*corners[start]))
    return cycle


def _add_b(cycle, edges, tail, head):
    eid = "b" + tail[1:]
    edges.setdefault(eid, Edge(eid, B, tail, head, False))
    cycle.append(EdgeRef(eid, True))


def _phase_list(phase, n):
    if isinstance(phase, int):
        return [phase] * n
    phase = list(phase)
    if len(phase) != n:
        raise ValueError(f"expected {n} phases, got {len(phase)}")
    return phase


def _apply_phases(edges: list[Edge], phase) -> list[Edge]:
    """Alternate p(B) flags along each boundary circle."""
    b = {e.id: e for e in edges if e.kind is B}
    by_tail = {e.tail: e for e in b.values()}
    circles, seen = [], set()
    for eid in sorted(b):
        if eid in seen:
            continue
        circ, e = [], b[eid]
        while e.id not in seen:
            seen.add(e.id)
            circ.append(e.id)
            e = by_tail[e.head]
        circles.append(circ)
    flags = {}
    for circ, ph in zip(circles, _phase_list(phase, len(circles))):
        for k, eid in enumerate(circ):
            flags[eid] = (k + ph) % 2 == 0
    return [Edge(e.id, e.kind, e.tail, e.head, flags[e.id]) if e.kind is B else e for e in edges]


# ---------------------------------------------------------------------------
# concentric loops
# ---------------------------------------------------------------------------


def concentric(kinds: Sequence[EdgeKind], outer: tuple[str, bool] | None = None,
               inner: tuple[str, bool] | None = None) -> CurveComplex:
    """Nested loops of the given kinds, innermost first.

    ``outer`` and ``inner`` add boundary circles outside the last loop and
    inside the first: ``("free", in_pB)`` as a free circle or
    ``("loop", in_pB)`` as a boundary edge on a dummy vertex.  With neither
    the surface is a sphere.
    """
    k = len(kinds)
    vertices, edges = [], []
    for i, kind in enumerate(kinds):
        vertices.append(Vertex(f"a{i}", VertexKind.DUMMY))
        edges.append(Edge(f"k{i}", kind, f"a{i}", f"a{i}"))
    cycles = [[] for _ in range(k + 1)]
    free = [[] for _ in range(k + 1)]
    for i in range(k):
        cycles[i].append((EdgeRef(f"k{i}", True),))
        cycles[i + 1].append((EdgeRef(f"k{i}", False),))
    n_boundary = 0
    for side, where, name, forward in ((inner, 0, "in", False), (outer, k, "out", True)):
        if side is None:
            continue
        style, flag = side
        n_boundary += 1
        if style == "free":
            free[where].append(FreeCircle(f"b{name}", flag))
        elif style == "loop":
            vertices.append(Vertex(f"p{name}", VertexKind.DUMMY))
            edges.append(Edge(f"b{name}", B, f"p{name}", f"p{name}", flag))
            cycles[where].append((EdgeRef(f"b{name}", forward),))
        else:
            raise ValueError(f"unknown boundary style {style!r}")
    regions = tuple(Region(f"z{i}", 0, tuple(cycles[i]), tuple(free[i])) for i in range(k + 1))
    return CurveComplex(2 - n_boundary, n_boundary, tuple(vertices), tuple(edges), regions)
