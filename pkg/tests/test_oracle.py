import pytest

from polity import InputError
from polity.oracle import (
    CATALOG,
    NaiveSite,
    OracleBounds,
    agents,
    brute_force_ground_maps,
    enumerate_complexes,
    enumerate_functions,
    enumerate_simplicial,
    enumerate_sites,
    make_rng,
    random_site,
    states,
    verify_proposition,
)


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_functions("ab", "xyz")) == 9
    assert sum(1 for _ in enumerate_sites(2, 2)) == 16
    assert sum(1 for _ in enumerate_complexes(2)) == 16
    # simplicial complexes on 0..3 labelled vertices, the empty one included
    assert [sum(1 for _ in enumerate_simplicial(n)) for n in range(4)] == [1, 2, 5, 19]


def test_brute_force_counts_bg_maps():
    a = NaiveSite(("1",), ("x", "y"), {"1": frozenset({"x"})})
    b = NaiveSite(("1",), ("u", "v", "w"), {"1": frozenset({"u", "v"})})
    # x must land in {u, v} and y on w
    assert len(brute_force_ground_maps("B", [0], a, b)) == 2
    # in mode S, y may go anywhere
    assert len(brute_force_ground_maps("S", [0], a, b)) == 6


def test_rng_is_seeded_per_check():
    r1, r2 = make_rng(3, "A"), make_rng(3, "A")
    assert r1.integers(0, 10 ** 9) == r2.integers(0, 10 ** 9)
    assert make_rng(3, "A").integers(0, 10 ** 9) != make_rng(3, "B").integers(0, 10 ** 9)


def test_random_sites_have_fair_membership():
    rng = make_rng(0, "coin")
    total = hits = 0
    bounds = OracleBounds()
    for _ in range(2500):
        a = random_site(bounds, 4, 10, rng)
        hits += sum(m.bit_count() for m in a.profile)
        total += 40
    assert total == 10 ** 5
    assert abs(hits / total - 0.5) < 0.008


def test_bounds_validation():
    with pytest.raises(InputError):
        OracleBounds(max_base=7)
    with pytest.raises(InputError):
        OracleBounds(seed=None)
    with pytest.raises(InputError):
        verify_proposition("NOPE", OracleBounds())


@pytest.mark.parametrize("check_id", sorted(CATALOG))
def test_every_catalog_check_passes_at_small_bounds(check_id):
    r = verify_proposition(check_id, OracleBounds(max_base=2, max_ground=2, trials=20, seed=5))
    assert r.passed, r.to_dict()
    d = r.to_dict()
    assert d["instances"] == d["exhaustive"] + d["sampled"]


def test_reports_are_reproducible():
    b = OracleBounds(max_base=1, max_ground=1, trials=30, seed=42)
    assert verify_proposition("NATURALITY", b).to_dict() == verify_proposition("NATURALITY", b).to_dict()


def test_small_helpers():
    assert agents(3).agents == ("1", "2", "3")
    assert states(2, "t").states == ("t1", "t2")
