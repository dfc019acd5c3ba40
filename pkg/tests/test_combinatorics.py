import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polity import Base, Complex, InputError, SimplicialComplex, downward_closure, max_elements
from polity.combinatorics import bits, closure_masks, is_simplicial, mask_key, sorted_masks, submasks
from polity.oracle import naive_closure, naive_family
from strategies import complexes


def test_bits_ascending():
    assert list(bits(0b101010)) == [1, 3, 5]
    assert list(bits(0)) == []


def test_display_order_is_size_then_lexicographic():
    masks = [0b100, 0b011, 0, 0b001, 0b101, 0b010, 0b110]
    assert sorted_masks(masks) == [0, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110]
    assert mask_key(0b1001) < mask_key(0b0110) < mask_key(0b0111)


@given(st.integers(0, 2 ** 10 - 1))
def test_submasks_are_all_nonempty_subsets(m):
    subs = list(submasks(m))
    assert len(subs) == len(set(subs)) == 2 ** m.bit_count() - 1
    assert all(s and s & ~m == 0 for s in subs)


def test_base_rejects_duplicates_and_unknown_labels():
    with pytest.raises(InputError):
        Base(("a", "a"))
    base = Base(("a", "b"))
    with pytest.raises(InputError):
        base.mask_of(["c"])


def test_complex_to_lists_follows_display_order():
    base = Base(("x", "y", "z"))
    K = Complex.of(base, [["y", "z"], ["x"], [], ["z"]])
    assert K.to_lists() == [[], ["x"], ["z"], ["y", "z"]]


def test_simplicial_complex_validation():
    base = Base(("1", "2"))
    SimplicialComplex(base, frozenset({0b01, 0b10, 0b11}))
    with pytest.raises(InputError):
        SimplicialComplex(base, frozenset({0b11}))
    with pytest.raises(InputError):
        SimplicialComplex(base, frozenset({0, 0b01}))


def test_complexes_over_different_bases_do_not_mix():
    K = Complex.of(Base(("1",)), [["1"]])
    L = Complex.of(Base(("2",)), [["2"]])
    with pytest.raises(InputError):
        _ = K <= L


@given(complexes())
def test_closure_agrees_with_naive_closure(K):
    assert naive_family(downward_closure(K)) == naive_closure(naive_family(K))


@given(complexes())
def test_closure_properties(K):
    E = downward_closure(K)
    assert is_simplicial(E)
    assert K.masks - {0} <= E.masks
    assert downward_closure(E) == E
    assert downward_closure(max_elements(K)) == E


@given(complexes())
def test_max_elements_are_an_antichain_with_the_same_closure(K):
    top = max_elements(K).masks
    assert top <= K.masks
    for a, b in itertools.permutations(top, 2):
        assert a & ~b != 0
    assert closure_masks(top) == closure_masks(K.masks)
