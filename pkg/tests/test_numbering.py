import pytest

from _families import fixture_complex
from nhs import (Condition, Numbering, NumberingDomainError, SearchLimitError, annulus_core, brute_force_numberings,
                 check_parity, closed_surface, empty_disk, enumerate_numberings, grid, lens_sphere, quadrant_disk,
                 torus_nonseparating_loop, twist_vertices, validate_numbering)
from nhs.numbering import corner_pattern_ok, is_twist_pattern


def quad(*values):
    return Numbering.of(dict(zip(("q1", "q2", "q3", "q4"), values)))


def test_twist_numbering_is_valid():
    c = quadrant_disk()
    assert validate_numbering(c, quad(1, 0, 1, 0)) == []
    assert twist_vertices(c, quad(1, 0, 1, 0)) == {"o"}


def test_value_two_next_to_free_boundary_arc():
    found = validate_numbering(quadrant_disk(), quad(1, 2, 1, 0))
    assert [(v.condition, v.location) for v in found] == [(Condition.C3ZERO, ("q2", "bnw"))]


def test_forced_one_on_pB():
    found = validate_numbering(quadrant_disk(), quad(0, 1, 1, 0))
    assert any(v.condition is Condition.C3 and v.location[0] == "q1" for v in found)


def test_self_adjacent_region_always_fails_c4():
    c = torus_nonseparating_loop()
    for k in range(4):
        assert [v.condition for v in validate_numbering(c, Numbering.of({"a": k}))] == [Condition.C4]


def test_corner_patterns():
    assert corner_pattern_ok([0, 1, 2, 1])
    assert not is_twist_pattern([0, 1, 2, 1])
    assert is_twist_pattern([1, 0, 1, 0]) and is_twist_pattern([0, 1, 0, 1])
    assert not corner_pattern_ok([1, 2, 1, 2])  # alternating but not 0,1
    assert not corner_pattern_ok([0, 1, 2, 3])  # four distinct values


def test_crossing_with_all_distinct_values_rejected():
    c = grid(1, 1, "disk")
    bad = Numbering.of({rid: k for k, rid in enumerate(c.region_ids)})
    assert Condition.C5 in {v.condition for v in validate_numbering(c, bad)}


def test_domain_mismatch_raises():
    with pytest.raises(NumberingDomainError):
        validate_numbering(quadrant_disk(), Numbering.of({"q1": 1}))


def test_negative_values_rejected():
    with pytest.raises(ValueError):
        Numbering.of({"a": -1})


def test_no_twists_without_crossings():
    assert twist_vertices(closed_surface(1), Numbering.of({"s": 2})) == frozenset()


def test_parity():
    assert check_parity(quadrant_disk()) == (True, ())
    assert check_parity(empty_disk()).bipartite
    ok, witness = check_parity(torus_nonseparating_loop())
    assert not ok and witness == ("k",)


def test_parity_witness_is_odd_cycle():
    c = grid(1, 3, "torus")
    ok, witness = check_parity(c)
    assert not ok and len(witness) % 2 == 1


@pytest.mark.parametrize("max_level", [0, 1, 3, 5])
def test_annulus_enumeration(max_level):
    assert enumerate_numberings(annulus_core(False, False), max_level) == []
    expected = [Numbering.of({"inner": 0, "outer": 1})] if max_level >= 1 else []
    assert enumerate_numberings(annulus_core(True, False), max_level) == expected


def test_sphere_enumeration():
    found = enumerate_numberings(closed_surface(0), 2)
    assert found == [Numbering.of({"s": k}) for k in range(3)]
    assert brute_force_numberings(closed_surface(0), 2) == found


def test_quadrant_matches_brute_force():
    c = quadrant_disk()
    assert enumerate_numberings(c, 1) == brute_force_numberings(c, 1) == [quad(1, 0, 1, 0)]


def test_lens_enumeration_sorted_and_valid():
    c = lens_sphere()
    found = enumerate_numberings(c, 3)
    assert found == sorted(found)
    assert found == brute_force_numberings(c, 3)
    assert all(validate_numbering(c, n) == [] for n in found)
    assert Numbering.of({"cside": 0, "dside": 0, "lens": 1, "out": 1}) in found


def test_fixture_three_crossing_disk():
    c = fixture_complex("three_crossing_disk")
    found = enumerate_numberings(c, 3)
    assert found == brute_force_numberings(c, 3)
    assert len(found) == 1 and twist_vertices(c, found[0]) == {"v1_1", "v2_1", "v3_1"}


def test_brute_force_guard():
    with pytest.raises(SearchLimitError):
        brute_force_numberings(grid(1, 3, "disk"), 9, limit=1000)


def test_negative_max_level():
    with pytest.raises(ValueError):
        enumerate_numberings(quadrant_disk(), -1)
