"""The twelve acceptance criteria, one test each.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints
one PASS/FAIL line per criterion.
"""
import ast

import pytest

from polity import (
    Base,
    Complex,
    Delegation,
    are_g_isomorphic,
    canonical_site,
    downward_closure,
    is_friendly_delegation,
    is_perfect,
    is_simplicial_delegation,
    knit,
    nerve,
    parting,
    parting_table,
    site_from_parting,
    states_containing,
)
from polity.cli import io
from polity.cli.fixtures import (
    appendix_formation,
    gallopolis_site,
    triangle_boundary,
    triangle_sites,
)
from polity.cli.scenarios import project_site
from polity.delegation import delegation_fn, friendly_foundation_witness
from polity.morphisms import c_image
from polity.oracle import NaiveSite, OracleBounds, make_rng, random_site, verify_proposition

criterion = pytest.mark.criterion

PARTIES = ("LEFT", "SOCD", "CONS", "LIBER", "RIGHT")


@pytest.fixture(scope="module")
def gallopolis():
    return io.load_site(gallopolis_site())


def _assert_report(report, **expect_sizes):
    assert report.failures == 0, report.counterexample
    assert report.instances > 0
    for key, count in expect_sizes.items():
        assert report.by_size.get(key) == count, (key, report.by_size)


@criterion(1, "Gallopolis nerve")
def test_gallopolis_nerve(gallopolis):
    base = gallopolis.base
    expected = Complex.of(base, [[p] for p in PARTIES] + [
        ["LEFT", "SOCD"], ["SOCD", "CONS"], ["CONS", "LIBER"], ["CONS", "RIGHT"]])
    sigma = nerve(gallopolis)
    assert sigma == expected
    assert len(sigma) == 9


@criterion(2, "Gallopolis knit")
def test_gallopolis_knit(gallopolis):
    kappa = knit(gallopolis)
    assert len(kappa) == 9
    assert 0 in kappa.masks
    missing = nerve(gallopolis).masks - kappa.masks
    assert missing == {gallopolis.base.mask_of(["RIGHT"])}


@criterion(3, "Gallopolis parting spot values")
def test_gallopolis_partings(gallopolis):
    assert parting(gallopolis, "2,l,γ").members == ("LEFT", "SOCD")
    assert parting(gallopolis, "2,n,β").members == ("SOCD", "CONS")
    assert parting(gallopolis, "1,c,β").members == ("CONS",)
    assert parting(gallopolis, "1,c,γ").members == ()


@criterion(4, "Scenario projections")
def test_scenario_projections(gallopolis):
    drop_s = project_site(gallopolis, "S")
    trio = ["CONS", "LIBER", "RIGHT"]
    assert drop_s.base.mask_of(trio) in nerve(drop_s).masks
    assert states_containing(drop_s, trio).labels == ("1,α",)

    drop_e = project_site(gallopolis, "E")
    left_trio = ["LEFT", "SOCD", "LIBER"]
    assert drop_e.base.mask_of(left_trio) in nerve(drop_e).masks
    assert states_containing(drop_e, left_trio).labels == ("l,γ",)

    drop_o = project_site(gallopolis, "O")
    assert nerve(drop_o) == nerve(gallopolis)


@criterion(5, "Triangle example")
def test_triangle():
    left, right = (io.load_site(d) for d in triangle_sites())
    boundary = io.load_formation(triangle_boundary())
    assert is_perfect(left)
    assert knit(left) == boundary and nerve(left) == boundary
    edges = Complex.of(left.base, [["1", "2"], ["1", "3"], ["2", "3"]])
    assert knit(right) == edges
    assert nerve(right) == boundary
    assert are_g_isomorphic("S", left, right)
    assert not are_g_isomorphic("B", left, right)


@criterion(6, "Profile and parting inversion")
def test_pi_gamma():
    exhaustive = verify_proposition("PI_GAMMA", OracleBounds(max_base=2, max_ground=2, trials=0))
    _assert_report(exhaustive, **{"(2, 2)": 16})
    # 512 random sites strictly larger than the exhaustive range
    rng = make_rng(6, "criterion 6")
    bounds = OracleBounds()
    for _ in range(512):
        a = random_site(bounds, int(rng.integers(3, 6)), int(rng.integers(3, 13)), rng)
        rho = parting_table(a)
        assert site_from_parting(a.base, a.ground, rho) == a
        naive = NaiveSite.of(a)
        assert {x: frozenset(c.members) for x, c in rho.items()} == \
            {x: naive.parting(x) for x in a.ground}
        mapping = {x: list(c.members) for x, c in rho.items()}
        assert parting_table(site_from_parting(a.base, a.ground, mapping)) == rho


@criterion(7, "Nerve is the closure of the knit")
def test_nerve_generated_by_knit():
    r = verify_proposition("NERVE_GEN", OracleBounds(max_base=0, max_ground=0, trials=1000, seed=7,
                                                     random_max_base=5, random_max_ground=12))
    _assert_report(r)
    assert r.sampled == 1000
    assert all(n <= 5 and m <= 12 for n, m in map(ast.literal_eval, r.by_size))


@criterion(8, "Existence theorems against exhaustive search")
def test_existence():
    bounds = OracleBounds(max_base=2, max_ground=3, trials=100, seed=8)
    for cid in ("BG_EXISTS", "SG_EXISTS", "BS_EXISTS"):
        r = verify_proposition(cid, bounds)
        _assert_report(r)
        assert r.exhaustive > 0


@criterion(9, "Characterization agreement suites")
def test_characterizations():
    bounds = OracleBounds(max_base=3, max_ground=3, trials=100, seed=9)
    for cid in ("BG_CHAR", "PAIR_CHAR", "BMAP1", "SMAP1", "IMAGE2"):
        r = verify_proposition(cid, bounds)
        _assert_report(r)
        assert r.exhaustive > 0


@criterion(10, "Canonical round trips")
def test_canonical_round_trips():
    bounds = OracleBounds(max_base=4, max_ground=3, trials=0)
    knit_report = verify_proposition("CANON_KNIT", bounds)
    _assert_report(knit_report, **{"(4,)": 2 ** 16})
    nerve_report = verify_proposition("CANON_NERVE", bounds)
    # simplicial complexes on four labelled agents, counting the empty one
    _assert_report(nerve_report, **{"(4,)": 167})


@criterion(11, "Functor, naturality and category laws")
def test_laws():
    r = verify_proposition("FUNCTOR_LAWS", OracleBounds(trials=500, seed=11))
    _assert_report(r, **{"('knit',)": 500, "('nerve',)": 500, "('canon',)": 500})
    r = verify_proposition("NATURALITY", OracleBounds(trials=250, seed=11))
    _assert_report(r)
    assert r.sampled == 500
    r = verify_proposition("CATEGORY_LAWS", OracleBounds(trials=100, seed=11))
    _assert_report(r)
    assert r.sampled == 200


@criterion(12, "Delegation")
def test_delegation():
    E = io.load_formation(triangle_boundary())
    d = Delegation(E.base, "1", "2")
    assert is_simplicial_delegation(E, d).holds
    assert not is_friendly_delegation(E, d).holds
    assert c_image(delegation_fn(d), E) == Complex.of(E.base, [["2", "3"], ["2"], ["3"]])

    E = io.load_formation(appendix_formation())
    base = Base(("1", "2", "3", "4"))
    assert E == downward_closure(Complex.of(base, [["1", "2"], ["2", "3"], ["1", "3"], ["2", "4"]]))
    d = Delegation(base, "4", "2")
    assert is_friendly_delegation(E, d).holds
    witness = friendly_foundation_witness(E, d)
    expected = canonical_site(base, Complex.of(base, [["1", "2"], ["2", "3"], ["1", "3"], ["2", "4"]]))
    assert witness == expected
    assert nerve(witness) == E
    assert set(witness.aspirations("4")) <= set(witness.aspirations("2"))

    r = verify_proposition("DELEG_CHAR", OracleBounds(max_base=4, max_ground=3, trials=0))
    _assert_report(r)
    assert "(4,)" in r.by_size
    r = verify_proposition("SCDELTA", OracleBounds(max_base=4, max_ground=3, trials=100, seed=12))
    _assert_report(r)
    assert "(4, 3)" in r.by_size


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
