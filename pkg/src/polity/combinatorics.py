"""Coalitions of a finite base as bit masks, and complexes of coalitions.

Bit ``k`` of a mask stands for the ``k``-th agent of the base in declaration
order.  Every other module works with these masks internally and only builds
:class:`Coalition` / :class:`Complex` values at its public surface.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Iterator

from .errors import InputError

if TYPE_CHECKING:
    from .morphisms import BaseMap

MAX_AGENTS = 64
EMPTY_LABEL = "∅"


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_key(mask: int) -> tuple:
    """Display order: cardinality first, then lexicographic on indices."""
    return (mask.bit_count(), tuple(bits(mask)))


def sorted_masks(masks: Iterable[int]) -> list[int]:
    return sorted(masks, key=mask_key)


def submasks(mask: int) -> Iterator[int]:
    """All nonempty submasks of ``mask`` (including ``mask`` itself)."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def hat_mask(assignment: tuple[int, ...], mask: int) -> int:
    """Image of a subset under the index map ``assignment``."""
    out = 0
    for i in bits(mask):
        out |= 1 << assignment[i]
    return out


@dataclass(frozen=True)
class Base:
    """An ordered set of distinctly labeled agents."""

    agents: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        agents = tuple(self.agents)
        for a in agents:
            if not isinstance(a, str):
                raise InputError(f"agent labels must be strings, got {a!r}")
        if len(set(agents)) != len(agents):
            raise InputError(f"duplicate agent labels in {list(agents)}")
        if len(agents) > MAX_AGENTS:
            raise InputError(f"bases are capped at {MAX_AGENTS} agents")
        object.__setattr__(self, "agents", agents)
        object.__setattr__(self, "_index", {a: k for k, a in enumerate(agents)})

    def __len__(self):
        return len(self.agents)

    def __iter__(self):
        return iter(self.agents)

    def __contains__(self, label):
        return label in self._index

    @property
    def full_mask(self) -> int:
        return (1 << len(self.agents)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except (KeyError, TypeError):
            raise InputError(f"unknown agent {label!r}") from None

    def mask_of(self, labels: Iterable[str]) -> int:
        out = 0
        for label in labels:
            out |= 1 << self.index(label)
        return out

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.agents[k] for k in bits(mask))

    def coalition(self, labels: Iterable[str] = ()) -> Coalition:
        return Coalition(self, self.mask_of(labels))

    def complex(self, coalitions: Iterable[Iterable[str]]) -> Complex:
        return Complex(self, frozenset(self.mask_of(c) for c in coalitions))


@dataclass(frozen=True)
class Coalition:
    base: Base
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask & ~self.base.full_mask:
            raise InputError(f"mask {self.mask:#x} is not a subset of the base")

    @property
    def members(self) -> tuple[str, ...]:
        return self.base.labels_of(self.mask)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, label):
        return label in self.base and bool(self.mask >> self.base.index(label) & 1)

    def __le__(self, other: Coalition) -> bool:
        _same_base(self.base, other.base)
        return self.mask & ~other.mask == 0

    def __or__(self, other: Coalition) -> Coalition:
        _same_base(self.base, other.base)
        return Coalition(self.base, self.mask | other.mask)

    def __and__(self, other: Coalition) -> Coalition:
        _same_base(self.base, other.base)
        return Coalition(self.base, self.mask & other.mask)

    def __str__(self):
        if not self.mask:
            return EMPTY_LABEL
        return "{" + ",".join(self.members) + "}"


@dataclass(frozen=True, eq=False)
class Complex:
    """A finite family of coalitions over one base; the empty coalition is allowed."""

    base: Base
    masks: frozenset

    def __post_init__(self):
        masks = frozenset(self.masks)
        full = self.base.full_mask
        for m in masks:
            if not isinstance(m, int) or m < 0 or m & ~full:
                raise InputError(f"coalition mask {m!r} is not a subset of the base")
        object.__setattr__(self, "masks", masks)

    @classmethod
    def of(cls, base: Base, coalitions: Iterable[Iterable[str]]) -> Complex:
        return cls(base, frozenset(base.mask_of(c) for c in coalitions))

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return self.base == other.base and self.masks == other.masks

    def __hash__(self):
        return hash((self.base, self.masks))

    def __len__(self):
        return len(self.masks)

    def __iter__(self) -> Iterator[Coalition]:
        return (Coalition(self.base, m) for m in self.ordered_masks())

    def __contains__(self, item):
        if isinstance(item, Coalition):
            return item.base == self.base and item.mask in self.masks
        if isinstance(item, int):
            return item in self.masks
        return self.base.mask_of(item) in self.masks

    def __le__(self, other: Complex) -> bool:
        _same_base(self.base, other.base)
        return self.masks <= other.masks

    def __or__(self, other: Complex) -> Complex:
        _same_base(self.base, other.base)
        return Complex(self.base, self.masks | other.masks)

    def __sub__(self, other: Complex) -> Complex:
        _same_base(self.base, other.base)
        return Complex(self.base, self.masks - other.masks)

    def ordered_masks(self) -> list[int]:
        return sorted_masks(self.masks)

    def to_lists(self) -> list[list[str]]:
        return [list(self.base.labels_of(m)) for m in self.ordered_masks()]

    def __str__(self):
        return "{" + ", ".join(str(c) for c in self) + "}"

    def __repr__(self):
        return f"{type(self).__name__}({self.base.agents!r}, {self.to_lists()!r})"


class SimplicialComplex(Complex):
    """A downward closed complex without the empty coalition."""

    def __post_init__(self):
        super().__post_init__()
        if not _is_simplicial_masks(self.masks):
            raise InputError("complex is not simplicial (contains ∅ or is not downward closed)")


def _same_base(b1: Base, b2: Base):
    if b1 != b2:
        raise InputError("coalitions/complexes over different bases")


def _is_simplicial_masks(masks: frozenset) -> bool:
    if 0 in masks:
        return False
    for m in masks:
        if m & (m - 1):  # at least two members: every facet must be present
            for k in bits(m):
                if m ^ (1 << k) not in masks:
                    return False
    return True


def closure_masks(masks: Iterable[int]) -> frozenset:
    out: set[int] = set()
    for m in masks:
        if m in out:
            continue
        out.update(submasks(m))
    return frozenset(out)


def max_masks(masks: Iterable[int]) -> frozenset:
    masks = set(masks)
    return frozenset(
        m for m in masks
        if not any(o != m and m & ~o == 0 for o in masks)
    )


def hat_extend(phi: BaseMap, s: Coalition) -> Coalition:
    """``{phi(i) : i in s}`` as a coalition of the codomain."""
    if s.base != phi.domain:
        raise InputError("coalition is not over the domain of the base map")
    return Coalition(phi.codomain, hat_mask(phi.assignment, s.mask))


def downward_closure(K: Complex) -> SimplicialComplex:
    return SimplicialComplex(K.base, closure_masks(K.masks))


def max_elements(K: Complex) -> Complex:
    return Complex(K.base, max_masks(K.masks))


def is_simplicial(K: Complex) -> bool:
    return _is_simplicial_masks(K.masks)


def carrier(K: Complex) -> Coalition:
    out = 0
    for m in K.masks:
        out |= m
    return Coalition(K.base, out)


def as_simplicial(K: Complex) -> SimplicialComplex:
    """Re-type a complex already known to be simplicial (raises otherwise)."""
    if isinstance(K, SimplicialComplex):
        return K
    return SimplicialComplex(K.base, K.masks)
