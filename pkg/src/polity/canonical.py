"""Canonical and subcanonical sites, whose ground is a family of coalitions.

A coalition used as a state label is written as its member labels in base
declaration order joined by ``|``; the empty coalition is written ``∅``.
Decoding is strict, so a label round-trips bit-exactly.
"""
from __future__ import annotations

from .combinatorics import (
    EMPTY_LABEL,
    Base,
    Coalition,
    Complex,
    SimplicialComplex,
    as_simplicial,
    bits,
    max_masks,
    sorted_masks,
)
from .errors import InputError, SizeLimitError
from .site_core import Ground, PSite

SEPARATOR = "|"
MAX_FREE_SIMPLICES = 20


def encode_mask(base: Base, mask: int) -> str:
    if not mask:
        return EMPTY_LABEL
    labels = base.labels_of(mask)
    for a in labels:
        if SEPARATOR in a or a == EMPTY_LABEL:
            raise InputError(f"agent label {a!r} cannot be coalition-encoded")
    return SEPARATOR.join(labels)


def encode_coalition(s: Coalition) -> str:
    return encode_mask(s.base, s.mask)


def decode_mask(base: Base, label: str) -> int:
    """Strict inverse of :func:`encode_mask`; raises :class:`InputError`."""
    if label == EMPTY_LABEL:
        return 0
    parts = label.split(SEPARATOR)
    idx = [base.index(p) for p in parts]
    if any(j <= i for i, j in zip(idx, idx[1:])):
        raise InputError(f"coalition label {label!r} is not in base order")
    return sum(1 << i for i in idx)


def decode_coalition(base: Base, label: str) -> Coalition:
    return Coalition(base, decode_mask(base, label))


def coalition_ground(K: Complex) -> Ground:
    """The ground whose states are the coalitions of ``K`` in display order."""
    return Ground(tuple(encode_mask(K.base, m) for m in K.ordered_masks()))


def subcanonical_site(I: Base, A: Complex, F: Complex) -> PSite:
    """Site on ground ``A`` whose parting maps ``s`` to ``s`` on ``F`` and to ∅ elsewhere."""
    if A.base != I or F.base != I:
        raise InputError("complexes must be over the given base")
    if 0 in F.masks:
        raise InputError("the effective family must not contain ∅")
    if not F.masks <= A.masks:
        raise InputError("the effective family must be contained in the ground family")
    order = A.ordered_masks()
    ground = Ground(tuple(encode_mask(I, m) for m in order))
    return PSite.from_partings(I, ground, (m if m in F.masks else 0 for m in order))


def canonical_site(I: Base, A: Complex) -> PSite:
    """``ca(I, A)``: ground ``A``, agent ``i`` desiring the coalitions that contain it."""
    return subcanonical_site(I, A, Complex(I, A.masks - {0}))


def is_canonical(a: PSite) -> bool:
    """True iff every state label decodes to exactly its own parting coalition."""
    for x, p in zip(a.ground.states, a.partings):
        try:
            if decode_mask(a.base, x) != p:
                return False
        except InputError:
            return False
    return True


def canonical_with_nerve(I: Base, E: SimplicialComplex) -> list[Complex]:
    """Every ``A`` with ``E^max ⊆ A ⊆ E``; these are the canonical sites of nerve ``E``.

    The last entry is ``E`` itself, the only perfect one.
    """
    E = as_simplicial(E)
    if E.base != I:
        raise InputError("complex must be over the given base")
    top = max_masks(E.masks)
    free = sorted_masks(E.masks - top)
    if len(free) > MAX_FREE_SIMPLICES:
        raise SizeLimitError(
            f"{len(free)} non-maximal simplices: 2^{len(free)} solutions is too many"
        )
    out = []
    for pick in range(1 << len(free)):
        chosen = top | {free[k] for k in bits(pick)}
        out.append(Complex(I, frozenset(chosen)))
    return out
