import dataclasses

import pytest

from nhs import (Condition, CurveComplex, Edge, EdgeKind, annulus_core, closed_surface, concentric, dual_adjacency,
                 empty_disk, grid, lens_sphere, quadrant_disk, torus_nonseparating_loop, validate_structure)
from nhs.complex import VertexKind


def with_edge(c: CurveComplex, eid, **changes) -> CurveComplex:
    edges = tuple(dataclasses.replace(e, **changes) if e.id == eid else e for e in c.edges)
    return dataclasses.replace(c, edges=edges)


def conditions(c):
    return {v.condition for v in validate_structure(c)}


BUILT = {
    "quadrant": quadrant_disk(),
    "empty_disk": empty_disk(),
    "annulus": annulus_core(True, False),
    "sphere": closed_surface(0),
    "genus3": closed_surface(3),
    "torus_loop": torus_nonseparating_loop(),
    "lens": lens_sphere(),
    "grid_disk": grid(2, 3, "disk"),
    "grid_cylinder": grid(1, 2, "cylinder", phase=[0, 1]),
    "grid_torus": grid(2, 2, "torus", swap=True),
    "concentric": concentric([EdgeKind.C, EdgeKind.CPRIME], ("loop", True), ("free", False)),
}


@pytest.mark.parametrize("name", sorted(BUILT))
def test_builders_are_well_formed(name):
    assert validate_structure(BUILT[name]) == []


def test_quadrant_counts():
    c = quadrant_disk()
    kinds = [v.kind for v in c.vertices]
    assert kinds.count(VertexKind.CROSSING) == 1 and kinds.count(VertexKind.ENDPOINT) == 4
    curve = list(c.curve_edges())
    assert len(curve) == 4 and sum(len(c.half_edges_at[v.id]) for v in c.vertices) == 2 * len(c.edges)
    assert sum(e.kind is EdgeKind.B for e in c.edges) == 4
    assert len(c.regions) == 4


def test_crossing_rotation_alternates():
    c = quadrant_disk()
    kinds = [c.edge_map[k.outgoing.edge].kind for k in c.rotations["o"]]
    assert kinds in ([EdgeKind.C, EdgeKind.CPRIME] * 2, [EdgeKind.CPRIME, EdgeKind.C] * 2)


def test_flipped_pB_flag_breaks_condition_2():
    c = with_edge(quadrant_disk(), "bne", in_pB=False)
    found = validate_structure(c)
    assert {v.condition for v in found} == {Condition.C2}
    assert sorted(v.location[0] for v in found) == ["e", "n"]


def test_non_alternating_crossing_is_not_transverse():
    c = with_edge(with_edge(quadrant_disk(), "dn", kind=EdgeKind.C), "cw", kind=EdgeKind.CPRIME)
    assert Condition.TRANSVERSALITY in conditions(c)


def test_wrong_euler_characteristic_is_reported():
    c = dataclasses.replace(quadrant_disk(), euler=0)
    assert Condition.STRUCTURE in conditions(c)


def test_endpoint_must_touch_boundary_once():
    c = quadrant_disk()
    bad = dataclasses.replace(c, edges=c.edges + (Edge("extra", EdgeKind.C, "e", "n"),))
    assert validate_structure(bad)


def test_odd_cylinder_fails_condition_2():
    assert Condition.C2 in conditions(grid(1, 3, "cylinder"))


def test_dual_graph_of_quadrant_is_alternating_four_cycle():
    g = dual_adjacency(quadrant_disk())
    assert sorted(g.nodes) == ["q1", "q2", "q3", "q4"]
    assert len(g.arcs) == 4
    degree = {r: len(v) for r, v in g.neighbours().items()}
    assert set(degree.values()) == {2}
    for r, nbrs in g.neighbours().items():
        assert sorted(a.kind.value for _, a in nbrs) == ["C", "C'"]


def test_dual_graph_small_cases():
    g = dual_adjacency(empty_disk())
    assert (len(g.nodes), len(g.arcs)) == (1, 0)
    g = dual_adjacency(annulus_core(True, False))
    assert len(g.nodes) == 2 and len(g.arcs) == 1
    assert {g.arcs[0].source, g.arcs[0].target} == {"inner", "outer"}


def test_region_euler():
    a = annulus_core(True, False)
    assert [r.euler for r in a.regions] == [0, 0]
    assert closed_surface(2).regions[0].euler == -2
