"""Randomised properties over generated complexes (hypothesis drives the seeds)."""

import random

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from _families import random_complex
from nhs import (brute_force_numberings, check_parity, check_surface, closed_surface, concentric, EdgeKind,
                 enumerate_numberings, euler_crosscheck, grid, invariants, parse_complex, reconstruct,
                 serialize_complex, trace_boundary, twist_vertices, validate_numbering, validate_structure)

FAMILIES = st.sampled_from(["disk", "cylinder", "torus", "concentric"])
SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def complex_from(seed, family):
    c = random_complex(random.Random(seed), family)
    return c if not validate_structure(c) else None


@SETTINGS
@given(seed=st.integers(0, 10**6), family=FAMILIES, level=st.integers(0, 3))
def test_search_equals_brute_force(seed, family, level):
    c = complex_from(seed, family)
    if c is None:
        return
    found = enumerate_numberings(c, level)
    assert found == brute_force_numberings(c, level)
    assert all(validate_numbering(c, n) == [] for n in found)


@SETTINGS
@given(seed=st.integers(0, 10**6), family=FAMILIES)
def test_valid_numbering_implies_bipartite_dual(seed, family):
    c = complex_from(seed, family)
    if c is None:
        return
    if not check_parity(c).bipartite:
        assert enumerate_numberings(c, 4) == []


@SETTINGS
@given(seed=st.integers(0, 10**6), family=FAMILIES)
def test_serialization_round_trip(seed, family):
    c = random_complex(random.Random(seed), family)
    text = serialize_complex(c)
    assert parse_complex(text) == c
    assert serialize_complex(parse_complex(text)) == text


@SETTINGS
@given(seed=st.integers(0, 10**6), family=FAMILIES, pick=st.integers(0, 10**6))
def test_reconstruction_invariants(seed, family, pick):
    c = complex_from(seed, family)
    if c is None:
        return
    found = enumerate_numberings(c, 3)
    if not found:
        return
    n = found[pick % len(found)]
    s = reconstruct(c, n)
    inv = invariants(s)
    assert inv.euler == euler_crosscheck(c, n)
    assert inv.boundary_components == len(trace_boundary(s))
    assert check_surface(s) == []
    assert inv.twists == len(twist_vertices(c, n))
    assert sum(inv.component_euler) == inv.euler and sum(inv.component_boundaries) == inv.boundary_components
    for chi, b, g in zip(inv.component_euler, inv.component_boundaries, inv.genus_per_component):
        if g is not None:
            assert chi + b <= 2 and (chi + b) % 2 == 0 and g >= 0


CLOSED = st.one_of(
    st.builds(lambda r, c, sw: grid(r, c, "torus", swap=sw), st.sampled_from([2, 4]), st.sampled_from([2, 4]),
              st.booleans()),
    st.builds(lambda ks: concentric([EdgeKind.C if k else EdgeKind.CPRIME for k in ks]),
              st.lists(st.booleans(), min_size=0, max_size=5)),
    st.builds(closed_surface, st.integers(0, 3)),
)


@SETTINGS
@given(c=CLOSED, pick=st.integers(0, 10**6))
def test_stacking_two_more_sheets(c, pick):
    found = [n for n in enumerate_numberings(c, 3) if not twist_vertices(c, n)]
    if not found:
        return
    n = found[pick % len(found)]
    up = n.shifted(2)
    assert validate_numbering(c, up) == []
    euler_up = invariants(reconstruct(c, up)).euler
    assert euler_up == euler_crosscheck(c, up)
    assert euler_up == invariants(reconstruct(c, n)).euler + 2 * c.euler
