import itertools
from collections import Counter

import pytest

from nhs import (BoundaryLabel, EdgeKind, Numbering, PreconditionError, annulus_core, check_surface, closed_surface,
                 enumerate_numberings, euler_crosscheck, grid, invariants, lens_sphere, quadrant_disk, reconstruct,
                 trace_boundary)

TWIST = Numbering.of({"q1": 1, "q2": 0, "q3": 1, "q4": 0})
ANNULUS = Numbering.of({"inner": 0, "outer": 1})


def labels(s):
    return Counter(label for _, label in s.boundary)


def test_horizontal_copies():
    for genus, k in ((0, 1), (1, 2), (2, 3)):
        c = closed_surface(genus)
        s = reconstruct(c, Numbering.of({"s": k}))
        assert len(s.cells) == k and not s.gluings and not s.boundary
        inv = invariants(s)
        assert inv.euler == k * (2 - 2 * genus)
        assert inv.connected_components == k and inv.boundary_components == 0
        assert inv.orientable and inv.genus_per_component == (genus,) * k
        assert len(trace_boundary(s)) == 0
        assert euler_crosscheck(c, Numbering.of({"s": k})) == inv.euler


def test_zero_sheets_is_empty_surface():
    inv = invariants(reconstruct(closed_surface(1), Numbering.of({"s": 0})))
    assert (inv.euler, inv.connected_components, inv.genus_per_component) == (0, 0, ())


def test_annulus_reconstruction():
    c = annulus_core(True, False)
    s = reconstruct(c, ANNULUS)
    assert [cell.id for cell in s.cells] == ["outer#1"]
    assert labels(s) == {BoundaryLabel.C_TIMES_ONE: 1, BoundaryLabel.B_ARC: 1}
    trace = trace_boundary(s)
    assert sorted(len(comp) for comp in trace.components) == [1, 1]
    inv = invariants(s)
    assert (inv.euler, inv.boundary_components, inv.connected_components, inv.genus_per_component) == (0, 2, 1, (0,))
    assert euler_crosscheck(c, ANNULUS) == 0


def test_annulus_with_cprime_core_ends_at_height_zero():
    c = annulus_core(True, False, kind=EdgeKind.CPRIME)
    s = reconstruct(c, ANNULUS)
    assert labels(s) == {BoundaryLabel.CPRIME_TIMES_ZERO: 1, BoundaryLabel.B_ARC: 1}


def test_quadrant_twist_cells_and_segments():
    s = reconstruct(quadrant_disk(), TWIST)
    assert [cell.id for cell in s.cells] == ["q1#1", "q3#1"]
    assert [t[0] for t in s.twist_edges] == ["o"]
    assert labels(s) == {BoundaryLabel.C_TIMES_ONE: 2, BoundaryLabel.CPRIME_TIMES_ZERO: 2, BoundaryLabel.B_ARC: 2}


def test_quadrant_twist_boundary_is_one_circle():
    trace = trace_boundary(reconstruct(quadrant_disk(), TWIST))
    (comp,) = trace.components
    merged = [label for label, _ in itertools.groupby(step.label for step in comp)]
    if merged[0] == merged[-1]:
        merged.pop()
    # C arc, B arc, C' arc, B arc up to rotation
    assert len(merged) == 4
    b_positions = [i for i, label in enumerate(merged) if label is BoundaryLabel.B_ARC]
    assert b_positions in ([0, 2], [1, 3])
    assert Counter(merged) == {BoundaryLabel.B_ARC: 2, BoundaryLabel.C_TIMES_ONE: 1, BoundaryLabel.CPRIME_TIMES_ZERO: 1}


def test_quadrant_twist_invariants():
    s = reconstruct(quadrant_disk(), TWIST)
    inv = invariants(s)
    assert inv.format() == "X: chi=1 boundary=1 components=1 orientable=yes genus=[0] twists=1"
    assert euler_crosscheck(quadrant_disk(), TWIST) == 1
    assert check_surface(s) == []


def test_lens_twist_case_is_an_annulus():
    n = Numbering.of({"cside": 0, "dside": 0, "lens": 1, "out": 1})
    inv = invariants(reconstruct(lens_sphere(), n))
    assert (inv.euler, inv.boundary_components, inv.connected_components, inv.twists) == (0, 2, 1, 2)


def test_torus_checkerboard():
    c = grid(2, 2, "torus")
    n = Numbering.of({rid: (1 if rid in ("r1_1", "r2_2") else 0) for rid in c.region_ids})
    inv = invariants(reconstruct(c, n))
    assert (inv.euler, inv.boundary_components, inv.genus_per_component) == (-2, 4, (0,))


def test_invalid_input_rejected():
    with pytest.raises(PreconditionError):
        reconstruct(quadrant_disk(), Numbering.of({"q1": 1, "q2": 2, "q3": 1, "q4": 0}))


def test_every_segment_accounted_once():
    c = lens_sphere()
    for n in enumerate_numberings(c, 3):
        s = reconstruct(c, n)
        glued = Counter(x for g in s.gluings for x in (g.a, g.b))
        bound = {i for i, _ in s.boundary}
        assert all(v == 1 for v in glued.values())
        assert set(glued).isdisjoint(bound) and len(glued) + len(bound) == len(s.segments)
        traced = [st.segment for comp in trace_boundary(s).components for st in comp]
        assert sorted(traced) == sorted(s.segments[i].id for i in bound)


def test_reconstruction_is_deterministic():
    c = grid(1, 3, "disk")
    (n,) = enumerate_numberings(c, 3)
    assert reconstruct(c, n) == reconstruct(c, n)
