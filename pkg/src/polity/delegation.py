"""Delegation of one agent's role to another, on formations and on sites.

The delegation from ``i0`` to ``j0`` is the base self-map sending ``i0`` to
``j0`` and fixing every other agent.  Each predicate is computed through
every equivalent characterization; a disagreement raises
:class:`ConsistencyError`, since it can only mean a bug.
"""
from __future__ import annotations

from dataclasses import dataclass

from .canonical import canonical_site
from .combinatorics import (
    Base,
    Complex,
    SimplicialComplex,
    closure_masks,
    is_simplicial,
    max_masks,
    sorted_masks,
)
from .errors import ConsistencyError, InputError
from .morphisms import BaseMap, Verdict, check_p_map, p_image
from .site_core import PSite, nerve


@dataclass(frozen=True)
class Delegation:
    base: Base
    delegating: str
    delegate: str

    def __post_init__(self):
        self.base.index(self.delegating)
        self.base.index(self.delegate)
        if self.delegating == self.delegate:
            raise InputError("an agent cannot delegate to itself")

    @property
    def source_index(self) -> int:
        return self.base.index(self.delegating)

    @property
    def target_index(self) -> int:
        return self.base.index(self.delegate)


def delegation_fn(d: Delegation) -> BaseMap:
    i0, j0 = d.source_index, d.target_index
    return BaseMap(d.base, d.base, tuple(j0 if i == i0 else i for i in range(len(d.base))))


def _require_simplicial(E: Complex) -> SimplicialComplex:
    if not is_simplicial(E):
        raise InputError("delegation predicates need a simplicial complex")
    return E if isinstance(E, SimplicialComplex) else SimplicialComplex(E.base, E.masks)


def complex_minus(E: Complex, agent: str) -> SimplicialComplex:
    """Coalitions of ``E`` not containing ``agent``."""
    E = _require_simplicial(E)
    bit = 1 << E.base.index(agent)
    return SimplicialComplex(E.base, frozenset(s for s in E.masks if not s & bit))


def complex_implies(E: Complex, i0: str, j0: str) -> Complex:
    """Coalitions of ``E`` that contain ``j0`` whenever they contain ``i0``."""
    E = _require_simplicial(E)
    bi, bj = 1 << E.base.index(i0), 1 << E.base.index(j0)
    return Complex(E.base, frozenset(s for s in E.masks if not s & bi or s & bj))


def _check_base(E: Complex, d: Delegation):
    if E.base != d.base:
        raise InputError("complex and delegation use different bases")


def is_simplicial_delegation(E: Complex, d: Delegation) -> Verdict:
    """Whether the delegation maps every coalition of ``E`` into ``E``."""
    E = _require_simplicial(E)
    _check_base(E, d)
    delta = delegation_fn(d)
    first_bad = next((s for s in sorted_masks(E.masks) if delta.hat(s) not in E.masks), None)
    image = frozenset(delta.hat(s) for s in E.masks)
    via_image = image == complex_minus(E, d.delegating).masks
    if (first_bad is None) != via_image:
        raise ConsistencyError("simplicial delegation characterizations disagree")
    if first_bad is None:
        return Verdict.ok()
    return Verdict.fail("coalition", E.base.labels_of(first_bad), "source",
                        f"its image {E.base.labels_of(delta.hat(first_bad))} is not in the complex")


def is_friendly_delegation(E: Complex, d: Delegation) -> Verdict:
    """Whether adding the delegate to any coalition holding the delegator stays in ``E``."""
    E = _require_simplicial(E)
    _check_base(E, d)
    bi, bj = 1 << d.source_index, 1 << d.target_index
    first_bad = next((s for s in sorted_masks(E.masks) if s & bi and (s | bj) not in E.masks), None)
    implied = complex_implies(E, d.delegating, d.delegate).masks
    closure_form = closure_masks(implied) == E.masks
    max_form = max_masks(E.masks) <= implied
    if not ((first_bad is None) == closure_form == max_form):
        raise ConsistencyError("friendly delegation characterizations disagree")
    if first_bad is None:
        return Verdict.ok()
    return Verdict.fail("coalition", E.base.labels_of(first_bad), "source",
                        f"adding {d.delegate!r} leaves the complex")


def withdrawal_site(a: PSite, agent: str) -> PSite:
    """The site in which ``agent`` desires nothing; everything else unchanged."""
    k = a.base.index(agent)
    return PSite(a.base, a.ground, tuple(0 if i == k else m for i, m in enumerate(a.profile)))


def check_withdrawal_equivalences(a: PSite, d: Delegation) -> Verdict:
    """Four equivalent conditions, evaluated separately and required to agree.

    (i) the delegation is a BP-map onto the withdrawal site; (ii) the P-image
    equals the withdrawal site; (iii) the delegator's aspirations lie inside
    the delegate's; (iv) the delegation is an SP-map of the site to itself.
    The common verdict's counterexample is the first state that the delegator
    desires and the delegate does not.
    """
    if a.base != d.base:
        raise InputError("site and delegation use different bases")
    delta = delegation_fn(d)
    w = withdrawal_site(a, d.delegating)
    outside = a.profile[d.source_index] & ~a.profile[d.target_index]
    results = (
        check_p_map("B", delta, a, w).holds,
        p_image(delta, a) == w,
        outside == 0,
        check_p_map("S", delta, a, a).holds,
    )
    if len(set(results)) != 1:
        raise ConsistencyError(f"withdrawal characterizations disagree: {results}")
    if results[0]:
        return Verdict.ok()
    x = (outside & -outside).bit_length() - 1
    return Verdict.fail("state", a.ground.states[x], "source",
                        f"desired by {d.delegating!r} but not by {d.delegate!r}")


def friendly_foundation_witness(E: Complex, d: Delegation) -> PSite | None:
    """``ca(I, E^max)`` when the delegation is friendly, else ``None``."""
    if not is_friendly_delegation(E, d):
        return None
    site = canonical_site(E.base, Complex(E.base, max_masks(E.masks)))
    if nerve(site).masks != E.masks:
        raise ConsistencyError("foundation witness has the wrong nerve")
    if site.profile[d.source_index] & ~site.profile[d.target_index]:
        raise ConsistencyError("foundation witness violates the aspiration inclusion")
    return site
