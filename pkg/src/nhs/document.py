"""Line-oriented text formats for complexes, numberings and reports.

Complex documents::

    surface euler=1 boundary_circles=1
    vertex o kind=crossing
    edge c1 kind=C from=o to=e
    edge b1 kind=B from=e to=n pB=yes
    region q1 genus=0 cycles=(+c1,+b1,-d1)
    region z genus=0 free=(out:yes),(in:no)

``#`` starts a comment.  Every id (vertex, edge, region, free circle) must be
unique across the document.
"""

from __future__ import annotations

import re
from typing import Iterable

from .complex import CurveComplex, Edge, EdgeKind, EdgeRef, FreeCircle, Region, Vertex, VertexKind
from .numbering import Numbering

_ID = r"[^\s(),:=#]+"
_ID_RE = re.compile(_ID + r"\Z")
_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_FREE_RE = re.compile(r"\((" + _ID + r"):(yes|no)\)")
_INT_RE = re.compile(r"[+-]?\d+\Z")

_VERTEX_KINDS = {"crossing": VertexKind.CROSSING, "endpoint": VertexKind.ENDPOINT, "dummy": VertexKind.DUMMY}
_EDGE_KINDS = {"C": EdgeKind.C, "C'": EdgeKind.CPRIME, "B": EdgeKind.B}


class ParseError(ValueError):
    """Malformed document; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class _Line:
    def __init__(self, text: str, lineno: int):
        self.lineno = lineno
        self.tokens = []  # (token, column)
        body = text.split("#", 1)[0]
        for m in re.finditer(r"\S+", body):
            self.tokens.append((m.group(), m.start() + 1))

    def error(self, message, column=None):
        return ParseError(message, self.lineno, column if column is not None else 1)

    def head(self, k):
        if len(self.tokens) <= k:
            col = self.tokens[-1][1] + len(self.tokens[-1][0]) if self.tokens else 1
            raise self.error("missing identifier", col)
        tok, col = self.tokens[k]
        if not _ID_RE.match(tok):
            raise self.error(f"invalid identifier {tok!r}", col)
        return tok, col

    def options(self, start, allowed, required):
        opts = {}
        for tok, col in self.tokens[start:]:
            key, sep, value = tok.partition("=")
            if not sep:
                raise self.error(f"expected key=value, got {tok!r}", col)
            if key not in allowed:
                raise self.error(f"unknown option {key!r}", col)
            if key in opts:
                raise self.error(f"repeated option {key!r}", col)
            opts[key] = (value, col + len(key) + 1)
        for key in required:
            if key not in opts:
                raise self.error(f"missing option {key}=", self.tokens[0][1])
        return opts


def _int(line, value, col, what, minimum=None):
    if not _INT_RE.match(value):
        raise line.error(f"{what} must be an integer, got {value!r}", col)
    n = int(value)
    if minimum is not None and n < minimum:
        raise line.error(f"{what} must be at least {minimum}", col)
    return n


def _yes_no(line, value, col, what):
    if value not in ("yes", "no"):
        raise line.error(f"{what} must be yes or no, got {value!r}", col)
    return value == "yes"


def _parse_cycles(line, value, col):
    cycles, pos = [], 0
    while pos < len(value):
        m = _CYCLE_RE.match(value, pos)
        if not m:
            raise line.error("malformed cycle list", col + pos)
        refs = []
        inner_col = col + pos + 1
        for part in m.group(1).split(",") if m.group(1) else []:
            if len(part) < 2 or part[0] not in "+-" or not _ID_RE.match(part[1:]):
                raise line.error(f"malformed directed edge reference {part!r}", inner_col)
            refs.append((EdgeRef(part[1:], part[0] == "+"), inner_col))
            inner_col += len(part) + 1
        cycles.append(refs)
        pos = m.end()
    return cycles


def _parse_free(line, value, col):
    out, pos = [], 0
    while pos < len(value):
        m = _FREE_RE.match(value, pos)
        if not m:
            raise line.error("malformed free circle list", col + pos)
        out.append((FreeCircle(m.group(1), m.group(2) == "yes"), col + pos + 1))
        pos = m.end()
        if pos < len(value):
            if value[pos] != ",":
                raise line.error("expected ',' between free circles", col + pos)
            pos += 1
    return out


def parse_complex(text: str) -> CurveComplex:
    """Parse a complex document; checks syntax and id references only."""
    surface = None
    vertices, edges, regions = [], [], []
    seen: dict[str, int] = {}
    pending_vertex_refs = []  # (vid, line, col)
    pending_edge_refs = []

    def claim(ident, line, col):
        if ident in seen:
            raise line.error(f"duplicate id {ident!r} (first defined on line {seen[ident]})", col)
        seen[ident] = line.lineno

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _Line(raw, lineno)
        if not line.tokens:
            continue
        keyword, kcol = line.tokens[0]
        if keyword == "surface":
            if surface is not None:
                raise line.error("repeated surface record", kcol)
            opts = line.options(1, {"euler", "boundary_circles"}, ["euler", "boundary_circles"])
            surface = (_int(line, *opts["euler"], "euler"),
                       _int(line, *opts["boundary_circles"], "boundary_circles", minimum=0))
        elif keyword == "vertex":
            vid, vcol = line.head(1)
            opts = line.options(2, {"kind"}, ["kind"])
            kind, col = opts["kind"]
            if kind not in _VERTEX_KINDS:
                raise line.error(f"unknown vertex kind {kind!r}", col)
            claim(vid, line, vcol)
            vertices.append(Vertex(vid, _VERTEX_KINDS[kind]))
        elif keyword == "edge":
            eid, ecol = line.head(1)
            opts = line.options(2, {"kind", "from", "to", "pB"}, ["kind", "from", "to"])
            kind, col = opts["kind"]
            if kind not in _EDGE_KINDS:
                raise line.error(f"unknown edge kind {kind!r}", col)
            kind = _EDGE_KINDS[kind]
            if kind is EdgeKind.B and "pB" not in opts:
                raise line.error("boundary edge requires pB=yes|no", ecol)
            if kind is not EdgeKind.B and "pB" in opts:
                raise line.error("pB is only allowed on boundary edges", opts["pB"][1])
            in_pB = _yes_no(line, *opts["pB"], "pB") if "pB" in opts else False
            for key in ("from", "to"):
                value, col = opts[key]
                if not _ID_RE.match(value):
                    raise line.error(f"invalid identifier {value!r}", col)
                pending_vertex_refs.append((value, line, col))
            claim(eid, line, ecol)
            edges.append(Edge(eid, kind, opts["from"][0], opts["to"][0], in_pB))
        elif keyword == "region":
            rid, rcol = line.head(1)
            opts = line.options(2, {"genus", "cycles", "free"}, ["genus"])
            genus = _int(line, *opts["genus"], "genus", minimum=0)
            cycles = _parse_cycles(line, *opts["cycles"]) if "cycles" in opts else []
            free = _parse_free(line, *opts["free"]) if "free" in opts else []
            claim(rid, line, rcol)
            for fc, col in free:
                claim(fc.id, line, col)
            for cycle in cycles:
                for ref, col in cycle:
                    pending_edge_refs.append((ref.edge, line, col))
            regions.append(Region(rid, genus,
                                  tuple(tuple(ref for ref, _ in cyc) for cyc in cycles),
                                  tuple(fc for fc, _ in free)))
        else:
            raise line.error(f"unknown record {keyword!r}", kcol)

    vertex_ids = {v.id for v in vertices}
    edge_ids = {e.id for e in edges}
    for ref, line, col in pending_vertex_refs:
        if ref not in vertex_ids:
            raise line.error(f"dangling reference to vertex {ref!r}", col)
    for ref, line, col in pending_edge_refs:
        if ref not in edge_ids:
            raise line.error(f"dangling reference to edge {ref!r}", col)
    if surface is None:
        raise ParseError("missing surface record", max(1, len(text.splitlines())), 1)
    return CurveComplex(surface[0], surface[1], tuple(vertices), tuple(edges), tuple(regions))


def serialize_complex(c: CurveComplex) -> str:
    lines = [f"surface euler={c.euler} boundary_circles={c.boundary_circles}"]
    for v in c.vertices:
        lines.append(f"vertex {v.id} kind={v.kind.value}")
    for e in c.edges:
        text = f"edge {e.id} kind={e.kind.value} from={e.tail} to={e.head}"
        if e.kind is EdgeKind.B:
            text += " pB=" + ("yes" if e.in_pB else "no")
        lines.append(text)
    for r in c.regions:
        text = f"region {r.id} genus={r.genus}"
        if r.cycles:
            text += " cycles=" + "".join("(" + ",".join(str(ref) for ref in cyc) + ")" for cyc in r.cycles)
        if r.free_circles:
            text += " free=" + ",".join(f"({fc.id}:{'yes' if fc.in_pB else 'no'})" for fc in r.free_circles)
        lines.append(text)
    return "\n".join(lines) + "\n"


def parse_numbering(text: str, complex: CurveComplex | None = None) -> Numbering:
    """Parse ``region <id> = <int>`` lines; ids unknown to ``complex`` are rejected."""
    known = set(complex.region_map) if complex is not None else None
    values: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _Line(raw, lineno)
        if not line.tokens:
            continue
        toks = line.tokens
        if toks[0][0] != "region":
            raise line.error(f"unknown record {toks[0][0]!r}", toks[0][1])
        if len(toks) != 4 or toks[2][0] != "=":
            raise line.error("expected 'region <id> = <int>'", toks[0][1])
        rid, col = line.head(1)
        if known is not None and rid not in known:
            raise line.error(f"unknown region {rid!r}", col)
        if rid in values:
            raise line.error(f"duplicate region {rid!r}", col)
        values[rid] = _int(line, toks[3][0], toks[3][1], "value", minimum=0)
    return Numbering.of(values)


def format_numbering(n: Numbering) -> str:
    return "".join(f"region {rid} = {v}\n" for rid, v in n.items)


def format_numberings(ns: Iterable[Numbering]) -> str:
    return "\n".join(format_numbering(n) for n in ns)


def format_violations(violations) -> str:
    return "".join(v.format() + "\n" for v in violations)
