import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polity import (
    Base,
    BaseMap,
    Complex,
    FunctorTag,
    Ground,
    GroundMap,
    InputError,
    PairMap,
    PSite,
    canonical_site,
    check_naturality,
    functor_on_morphism,
    functor_on_object,
    knit,
    nerve,
)
from polity.functors import (
    check_category_laws,
    check_equivalence_witness,
    check_functor_laws,
    knit_after_canon_is_identity,
    naturality_square,
    pi_bar,
    pi_star,
)
from polity.morphisms import CMap, c_image
from polity.oracle import OracleBounds, make_rng, random_chain, random_morphism, random_site
from strategies import base_maps, base_of, complexes, sites

BOUNDS = OracleBounds(random_max_base=4, random_max_ground=6)


def test_functors_on_objects():
    base = Base(("1", "2"))
    a = PSite.from_profile(base, Ground(("x", "y")), {"1": ["x", "y"], "2": ["y"]})
    assert functor_on_object("knit", a) == knit(a)
    assert functor_on_object(FunctorTag.NERVE, a) == nerve(a)
    K = knit(a)
    assert functor_on_object("canon", K) == canonical_site(base, K)
    with pytest.raises(InputError):
        functor_on_object("knit", K)
    with pytest.raises(InputError):
        functor_on_object("bogus", a)


def test_knit_rejects_a_non_b_map():
    base = Base(("1",))
    a = PSite.from_profile(base, Ground(("x",)), {"1": []})
    b = PSite.from_profile(base, Ground(("y",)), {"1": ["y"]})
    m = PairMap(BaseMap.identity(base), GroundMap.from_mapping(a.ground, b.ground, {"x": "y"}))
    with pytest.raises(InputError):
        functor_on_morphism("knit", m, a, b)
    assert functor_on_morphism("nerve", m, a, b).target == nerve(b)


def test_s_naturality_square_does_not_commute_literally():
    base = Base(("1", "2"))
    a = PSite.from_profile(base, Ground(("x",)), {"1": ["x"], "2": []})
    b = PSite.from_profile(base, Ground(("y",)), {"1": ["y"], "2": ["y"]})
    m = PairMap(BaseMap.identity(base), GroundMap.from_mapping(a.ground, b.ground, {"x": "y"}))
    sq = naturality_square("S", m, a, b)
    assert sq.via_functor.ground_map.as_dict() == {"x": "1"}
    assert sq.via_morphism.ground_map.as_dict() == {"x": "1|2"}
    assert not sq.literal
    assert check_naturality("S", m, a, b)


def test_b_naturality_square_commutes_literally_on_an_example():
    base = Base(("1", "2"))
    a = PSite.from_profile(base, Ground(("x", "z")), {"1": ["x"], "2": ["x", "z"]})
    b = PSite.from_profile(base, Ground(("y", "w")), {"1": ["y"], "2": ["y", "w"]})
    m = PairMap(BaseMap.identity(base), GroundMap.from_mapping(a.ground, b.ground, {"x": "y", "z": "w"}))
    sq = naturality_square("B", m, a, b)
    assert sq.literal
    assert sq.via_functor.ground_map.as_dict() == {"x": "1|2", "z": "2"}
    assert check_naturality("B", m, a, b)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["B", "S"]), st.integers(0, 2 ** 32 - 1))
def test_naturality_on_random_morphisms(mode, seed):
    rng = make_rng(seed, "test")
    a = random_site(BOUNDS, int(rng.integers(1, 5)), int(rng.integers(0, 7)), rng)
    m, b = random_morphism(mode, rng, a)
    assert check_naturality(mode, m, a, b)
    if mode == "B":
        assert naturality_square(mode, m, a, b).literal


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["B", "S"]), st.integers(0, 2 ** 32 - 1))
def test_laws_on_random_chains(mode, seed):
    rng = make_rng(seed, "chain")
    sites_, maps = random_chain(mode, rng, BOUNDS, 3)
    assert check_category_laws([(mode, tuple(sites_), tuple(maps))])
    tag = FunctorTag.KNIT if mode == "B" else FunctorTag.NERVE
    chain = ((maps[0], sites_[1]), (maps[1], sites_[2]))
    assert check_functor_laws(tag, sites_[0], chain)


@given(st.data())
def test_canon_functor_laws_and_knit_after_canon(data):
    X = data.draw(complexes(max_agents=3))
    J, K = base_of(data.draw(st.integers(1, 3)), "j"), base_of(data.draw(st.integers(1, 3)), "k")
    phi, psi = data.draw(base_maps(X.base, J)), data.draw(base_maps(J, K))
    Y = c_image(phi, X) | data.draw(complexes(min_agents=len(J), max_agents=len(J), prefix="j"))
    Z = c_image(psi, Y)
    c1, c2 = CMap(phi, X, Y), CMap(psi, Y, Z)
    assert check_functor_laws("canon", X, (c1, c2))
    assert knit_after_canon_is_identity(c1)


@given(sites(max_agents=3, max_states=4))
def test_equivalence_witnesses(a):
    assert check_equivalence_witness("B", a)
    assert check_equivalence_witness("S", a)
    assert pi_bar(a).is_surjective()
    assert "∅" not in pi_star(a).codomain.states


def test_canon_rejects_non_sc_maps():
    I = Base(("1",))
    X = Complex.of(I, [["1"]])
    Y = Complex.of(I, [[]])
    with pytest.raises(InputError):
        functor_on_morphism("canon", CMap(BaseMap.identity(I), X, Y))
