"""Numberings of regions: validation, twist detection and enumeration.

A numbering assigns to every region the number of sheets of the surface
lying over it.  It is valid when regions meeting p(B) get 1, regions meeting
the rest of ∂Σ get 0, values jump by exactly one across every curve edge,
and the four corners at each crossing carry either three distinct values or
the alternating pattern 0, 1, 0, 1 (a twist vertex).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, NamedTuple

from .complex import CurveComplex, DualArc, VertexKind, dual_adjacency
from .violation import Condition, Violation, sorted_violations

BRUTE_FORCE_LIMIT = 10**7


class NumberingDomainError(ValueError):
    """The numbering is not defined on exactly the regions of the complex."""


class SearchLimitError(ValueError):
    """Exhaustive enumeration would exceed the candidate guard."""


@dataclass(frozen=True, order=True)
class Numbering:
    """Immutable map from region id to a non-negative integer.

    Stored as ``(region id, value)`` pairs sorted by id, so the natural
    ordering of numberings over one complex is lexicographic in region-id
    order.
    """

    items: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for rid, value in self.items:
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"numbering value for {rid!r} must be a non-negative integer, got {value!r}")

    @classmethod
    def of(cls, mapping: Mapping[str, int]) -> "Numbering":
        return cls(tuple(sorted(mapping.items())))

    @cached_property
    def _dict(self) -> dict[str, int]:
        return dict(self.items)

    def __getitem__(self, region_id: str) -> int:
        return self._dict[region_id]

    def __len__(self):
        return len(self.items)

    def as_dict(self) -> dict[str, int]:
        return dict(self.items)

    def region_ids(self) -> tuple[str, ...]:
        return tuple(rid for rid, _ in self.items)

    def values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.items)

    def shifted(self, k: int) -> "Numbering":
        return Numbering(tuple((rid, v + k) for rid, v in self.items))


def corner_pattern_ok(values) -> bool:
    """Three distinct values around the crossing, or the twist pattern."""
    return len(set(values)) == 3 or is_twist_pattern(values)


def is_twist_pattern(values) -> bool:
    a, b, c, d = values
    return a == c and b == d and {a, b} == {0, 1}


class _Rules:
    """Conditions compiled once per complex, over regions in sorted-id order."""

    def __init__(self, c: CurveComplex):
        self.ids = c.region_ids
        index = {rid: i for i, rid in enumerate(self.ids)}
        self.forced = []
        for rid in self.ids:
            yes, no = c.boundary_contacts[rid]
            if yes:
                self.forced.append((index[rid], 1, Condition.C3, (rid,) + tuple(yes)))
            if no:
                self.forced.append((index[rid], 0, Condition.C3ZERO, (rid,) + tuple(no)))
        self.adjacent = []
        for e in c.curve_edges():
            fwd, bwd = c.edge_sides(e.id)
            self.adjacent.append((e.id, index[fwd], index[bwd]))
        self.crossings = []
        for v in c.vertices:
            if v.kind is VertexKind.CROSSING:
                self.crossings.append((v.id, tuple(index[r] for r in c.crossing_corner_regions(v.id))))

    def is_valid(self, vals) -> bool:
        for i, want, _, _ in self.forced:
            if vals[i] != want:
                return False
        for _, i, j in self.adjacent:
            if abs(vals[i] - vals[j]) != 1:
                return False
        for _, corners in self.crossings:
            if not corner_pattern_ok([vals[i] for i in corners]):
                return False
        return True

    def violations(self, vals) -> list[Violation]:
        out = []
        for i, want, cond, loc in self.forced:
            if vals[i] != want:
                what = "p(B)" if cond is Condition.C3 else "∂Σ outside p(B)"
                out.append(Violation(cond, loc, f"region meets {what} so needs value {want}, has {vals[i]}"))
        for eid, i, j in self.adjacent:
            if abs(vals[i] - vals[j]) != 1:
                out.append(Violation(Condition.C4, (eid, self.ids[i], self.ids[j]),
                                     f"values {vals[i]} and {vals[j]} across the edge do not differ by 1"))
        for vid, corners in self.crossings:
            cv = [vals[i] for i in corners]
            if not corner_pattern_ok(cv):
                out.append(Violation(Condition.C5, (vid,) + tuple(self.ids[i] for i in corners),
                                     f"corner values {','.join(map(str, cv))} are neither 3 distinct numbers nor 0,1,0,1"))
        return out


def _rules(c: CurveComplex) -> _Rules:
    cached = c.__dict__.get("_numbering_rules")
    if cached is None:
        cached = _Rules(c)
        c.__dict__["_numbering_rules"] = cached
    return cached


def _values_for(c: CurveComplex, n: Numbering) -> tuple[int, ...]:
    ids = c.region_ids
    if n.region_ids() != ids:
        missing = sorted(set(ids) - set(n.region_ids()))
        extra = sorted(set(n.region_ids()) - set(ids))
        raise NumberingDomainError(f"numbering domain mismatch: missing {missing}, extra {extra}")
    return n.values()


def validate_numbering(c: CurveComplex, n: Numbering) -> list[Violation]:
    """Check the numbering conditions; raises on a domain mismatch."""
    vals = _values_for(c, n)
    return sorted_violations(_rules(c).violations(vals))


def twist_vertices(c: CurveComplex, n: Numbering) -> frozenset[str]:
    """Crossings whose corner values read 0, 1, 0, 1 in cyclic order."""
    return frozenset(
        v.id for v in c.vertices
        if v.kind is VertexKind.CROSSING
        and is_twist_pattern([n[r] for r in c.crossing_corner_regions(v.id)])
    )


class ParityResult(NamedTuple):
    bipartite: bool
    witness: tuple[str, ...]  # edge ids of an odd dual cycle when not bipartite


def check_parity(c: CurveComplex) -> ParityResult:
    """Two-colour the dual graph; any valid numbering alternates parity across arcs."""
    graph = dual_adjacency(c)
    adj = graph.neighbours()
    for arc in graph.arcs:
        if arc.source == arc.target:
            return ParityResult(False, (arc.edge,))
    colour: dict[str, int] = {}
    parent: dict[str, tuple[str, DualArc] | None] = {}
    for root in sorted(graph.nodes):
        if root in colour:
            continue
        colour[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, arc in sorted(adj[u], key=lambda t: t[1].edge):
                if w not in colour:
                    colour[w] = colour[u] ^ 1
                    parent[w] = (u, arc)
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return ParityResult(False, _odd_cycle(parent, u, w, arc))
    return ParityResult(True, ())


def _odd_cycle(parent, u, w, closing: DualArc) -> tuple[str, ...]:
    def chain(x):
        out = [x]
        while parent[x] is not None:
            x = parent[x][0]
            out.append(x)
        return out

    up_u, up_w = chain(u), chain(w)
    common = set(up_u) & set(up_w)
    lca = next(x for x in up_u if x in common)
    edges_u, x = [], u
    while x != lca:
        x, arc = parent[x]
        edges_u.append(arc.edge)
    edges_w, x = [], w
    while x != lca:
        x, arc = parent[x]
        edges_w.append(arc.edge)
    return tuple(reversed(edges_u)) + (closing.edge,) + tuple(edges_w)


def enumerate_numberings(c: CurveComplex, max_level: int) -> list[Numbering]:
    """All valid numberings with values at most ``max_level``, sorted.

    Boundary contacts seed forced values; ``|a - b| = 1`` is propagated to
    arc consistency along the dual graph, the search branches on the
    smallest open domain and crossings are checked as soon as their four
    corners are fixed.
    """
    if max_level < 0:
        raise ValueError("max_level must be non-negative")
    ids = c.region_ids
    index = {rid: i for i, rid in enumerate(ids)}
    domains = [frozenset(range(max_level + 1)) for _ in ids]

    for rid in ids:
        yes, no = c.boundary_contacts[rid]
        allowed = set(domains[index[rid]])
        if yes:
            allowed &= {1}
        if no:
            allowed &= {0}
        domains[index[rid]] = frozenset(allowed)

    neighbours = [set() for _ in ids]
    for e in c.curve_edges():
        fwd, bwd = c.edge_sides(e.id)
        if fwd == bwd:
            return []
        i, j = index[fwd], index[bwd]
        neighbours[i].add(j)
        neighbours[j].add(i)

    crossings = [tuple(index[r] for r in c.crossing_corner_regions(v.id))
                 for v in c.vertices if v.kind is VertexKind.CROSSING]
    crossings_of = [[] for _ in ids]
    for k, corners in enumerate(crossings):
        for i in set(corners):
            crossings_of[i].append(k)

    results: list[Numbering] = []

    def propagate(doms, queue):
        queue = deque(queue)
        queued = set(queue)
        while queue:
            i = queue.popleft()
            queued.discard(i)
            for j in neighbours[i]:
                new = frozenset(x for x in doms[j] if (x - 1) in doms[i] or (x + 1) in doms[i])
                if new != doms[j]:
                    if not new:
                        return False
                    doms[j] = new
                    if j not in queued:
                        queue.append(j)
                        queued.add(j)
            if len(doms[i]) == 1:
                for k in crossings_of[i]:
                    corners = crossings[k]
                    if all(len(doms[x]) == 1 for x in corners):
                        if not corner_pattern_ok([next(iter(doms[x])) for x in corners]):
                            return False
        return True

    def search(doms, touched):
        if any(not d for d in doms) or not propagate(doms, touched):
            return
        open_vars = [i for i, d in enumerate(doms) if len(d) > 1]
        if not open_vars:
            results.append(Numbering(tuple((rid, next(iter(doms[i]))) for i, rid in enumerate(ids))))
            return
        var = min(open_vars, key=lambda i: (len(doms[i]), i))
        for value in sorted(doms[var]):
            child = list(doms)
            child[var] = frozenset((value,))
            search(child, [var])

    search(list(domains), range(len(ids)))
    return sorted(results)


def brute_force_numberings(c: CurveComplex, max_level: int, limit: int = BRUTE_FORCE_LIMIT) -> list[Numbering]:
    """Every assignment in ``{0..max_level}^regions`` that validates, sorted."""
    if max_level < 0:
        raise ValueError("max_level must be non-negative")
    ids = c.region_ids
    count = (max_level + 1) ** len(ids)
    if count > limit:
        raise SearchLimitError(
            f"{count} candidates ({max_level + 1}^{len(ids)}) exceed the limit of {limit}")
    rules = _rules(c)
    out = []
    for vals in itertools.product(range(max_level + 1), repeat=len(ids)):
        if rules.is_valid(vals):
            out.append(Numbering(tuple(zip(ids, vals))))
    return out
