import pytest
from hypothesis import given

from polity import (
    Base,
    Ground,
    InputError,
    PSite,
    effective_site,
    is_perfect,
    is_simple,
    knit,
    nerve,
    parting,
    parting_table,
    site_from_parting,
    states_containing,
    states_exact,
)
from polity.oracle import NaiveSite, naive_closure, naive_family
from strategies import sites


def small_site():
    base = Base(("a", "b", "c"))
    ground = Ground(("x", "y", "z", "w"))
    return PSite.from_profile(base, ground, {"a": ["x", "y"], "b": ["y", "z"], "c": []})


def test_parting_and_fibers_on_a_small_site():
    s = small_site()
    assert parting(s, "y").members == ("a", "b")
    assert parting(s, "w").members == ()
    assert states_containing(s, ["a"]).labels == ("x", "y")
    assert states_containing(s, []).labels == ("x", "y", "z", "w")
    assert states_exact(s, ["a"]).labels == ("x",)
    assert knit(s).to_lists() == [[], ["a"], ["b"], ["a", "b"]]
    assert nerve(s).to_lists() == [["a"], ["b"], ["a", "b"]]
    assert not is_perfect(s)


def test_effective_site_drops_uncovered_states():
    e = effective_site(small_site())
    assert e.ground.states == ("x", "y", "z")
    assert nerve(e) == nerve(small_site())


def test_profile_must_be_strict_and_total():
    base, ground = Base(("a", "b")), Ground(("x",))
    with pytest.raises(InputError):
        PSite.from_profile(base, ground, {"a": ["x"]})
    with pytest.raises(InputError):
        PSite.from_profile(base, ground, {"a": ["x"], "b": [], "c": []})
    with pytest.raises(InputError):
        PSite.from_profile(base, ground, {"a": ["q"], "b": []})


def test_parting_mapping_must_cover_the_ground():
    base, ground = Base(("a",)), Ground(("x", "y"))
    with pytest.raises(InputError):
        site_from_parting(base, ground, {"x": ["a"]})


def test_product_ground_labels():
    g = Ground.product([("E", ["1", "2"]), ("S", ["l", "r"])])
    assert g.states == ("1,l", "1,r", "2,l", "2,r")
    assert g.dim_names == ("E", "S")
    assert g.coordinates("2,r") == ("2", "r")
    with pytest.raises(InputError):
        Ground.product([("E", ["1"]), ("E", ["2"])])


@given(sites())
def test_parting_table_round_trip(a):
    assert site_from_parting(a.base, a.ground, parting_table(a)) == a


@given(sites())
def test_knit_and_nerve_match_naive_definitions(a):
    naive = NaiveSite.of(a)
    assert naive_family(knit(a)) == naive.knit()
    assert naive_family(nerve(a)) == naive.nerve() == naive_closure(naive.knit())


@given(sites())
def test_exact_fibers_partition_the_ground(a):
    seen = 0
    for s in range(1 << len(a.base)):
        fiber = states_exact(a, a.base.labels_of(s)).mask
        assert seen & fiber == 0
        seen |= fiber
    assert seen == a.ground.full_mask


@given(sites())
def test_simple_means_injective_parting(a):
    naive = NaiveSite.of(a)
    assert is_simple(a) == (len({naive.parting(x) for x in a.ground}) == len(a.ground))


@given(sites())
def test_effective_site_keeps_nerve_and_drops_empty_from_knit(a):
    e = effective_site(a)
    assert nerve(e) == nerve(a)
    assert knit(e).masks == knit(a).masks - {0}
