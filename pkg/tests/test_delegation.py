import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polity import (
    Base,
    Complex,
    Delegation,
    InputError,
    check_withdrawal_equivalences,
    downward_closure,
    friendly_foundation_witness,
    is_friendly_delegation,
    is_simplicial_delegation,
    nerve,
)
from polity.delegation import complex_implies, complex_minus, delegation_fn, withdrawal_site
from polity.morphisms import c_image
from polity.oracle import NaiveSite, naive_family
from strategies import complexes, sites


def test_delegation_map():
    base = Base(("1", "2", "3"))
    d = Delegation(base, "1", "3")
    assert delegation_fn(d).as_dict() == {"1": "3", "2": "2", "3": "3"}
    with pytest.raises(InputError):
        Delegation(base, "2", "2")
    with pytest.raises(InputError):
        Delegation(base, "1", "9")


def test_predicates_need_a_simplicial_complex():
    base = Base(("1", "2"))
    with pytest.raises(InputError):
        is_friendly_delegation(Complex.of(base, [["1", "2"]]), Delegation(base, "1", "2"))


def test_minus_and_implies():
    base = Base(("1", "2", "3"))
    E = downward_closure(Complex.of(base, [["1", "2"], ["1", "3"]]))
    assert complex_minus(E, "1").to_lists() == [["2"], ["3"]]
    assert complex_implies(E, "3", "1").to_lists() == [["1"], ["2"], ["1", "2"], ["1", "3"]]


@st.composite
def delegation_cases(draw):
    E = downward_closure(draw(complexes(min_agents=2, max_agents=4)))
    i0, j0 = draw(st.sampled_from(list(itertools.permutations(E.base.agents, 2))))
    return E, Delegation(E.base, i0, j0)


@given(delegation_cases())
def test_predicates_match_their_definitions(case):
    E, d = case
    fam = naive_family(E)
    friendly = all(s | {d.delegate} in fam for s in fam if d.delegating in s)
    delta = {i: (d.delegate if i == d.delegating else i) for i in E.base.agents}
    simplicial = all(frozenset(delta[i] for i in s) in fam for s in fam)
    assert is_friendly_delegation(E, d).holds == friendly
    assert is_simplicial_delegation(E, d).holds == simplicial
    if friendly:
        assert simplicial


@given(delegation_cases())
def test_friendly_iff_foundation_witness(case):
    E, d = case
    w = friendly_foundation_witness(E, d)
    assert (w is not None) == is_friendly_delegation(E, d).holds
    if w is not None:
        assert nerve(w) == E
        assert set(w.aspirations(d.delegating)) <= set(w.aspirations(d.delegate))


@given(delegation_cases())
def test_delegation_fixes_the_complex_without_the_delegator(case):
    E, d = case
    minus = complex_minus(E, d.delegating)
    assert c_image(delegation_fn(d), minus) == minus


@given(sites(min_agents=2, max_agents=4, max_states=5), st.data())
def test_withdrawal_conditions(a, data):
    i0, j0 = data.draw(st.sampled_from(list(itertools.permutations(a.base.agents, 2))))
    v = check_withdrawal_equivalences(a, Delegation(a.base, i0, j0))
    naive = NaiveSite.of(a)
    assert v.holds == (naive.aspirations[i0] <= naive.aspirations[j0])
    if not v.holds:
        x = v.counterexample.item
        assert x in naive.aspirations[i0] and x not in naive.aspirations[j0]
    w = withdrawal_site(a, i0)
    assert not w.aspirations(i0).mask
