"""Political sites: a base, a ground of states, and one aspiration set per agent.

A site stores its profile as one state mask per agent.  The dual view, the
parting table (state -> coalition of agents desiring it), is computed once at
construction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Mapping

from .combinatorics import (
    Base,
    Coalition,
    Complex,
    SimplicialComplex,
    bits,
    closure_masks,
)
from .errors import InputError

if TYPE_CHECKING:
    from .morphisms import GroundMap

MAX_STATES = 4096
MAX_DIMS = 6
MAX_DIM_VALUES = 8


@dataclass(frozen=True)
class Ground:
    """An ordered set of distinct state labels.

    A product ground also records its dimensions; its states are then exactly
    the Cartesian product, each labeled by its coordinates joined with ",".
    """

    states: tuple[str, ...]
    dims: tuple | None = None
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        states = tuple(self.states)
        for x in states:
            if not isinstance(x, str):
                raise InputError(f"state labels must be strings, got {x!r}")
        if len(set(states)) != len(states):
            raise InputError("duplicate state labels in ground")
        if len(states) > MAX_STATES:
            raise InputError(f"grounds are capped at {MAX_STATES} states")
        if self.dims is not None:
            dims = tuple((name, tuple(values)) for name, values in self.dims)
            expected = tuple(",".join(p) for p in itertools.product(*(v for _, v in dims)))
            if states != expected:
                raise InputError("product ground states must be the full Cartesian product")
            object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "_index", {x: k for k, x in enumerate(states)})

    @classmethod
    def product(cls, dims: Iterable[tuple[str, Iterable[str]]]) -> Ground:
        dims = tuple((str(name), tuple(values)) for name, values in dims)
        if not dims:
            raise InputError("a product ground needs at least one dimension")
        if len(dims) > MAX_DIMS:
            raise InputError(f"product grounds are capped at {MAX_DIMS} dimensions")
        names = [n for n, _ in dims]
        if len(set(names)) != len(names):
            raise InputError("duplicate dimension names")
        for name, values in dims:
            if not values or len(values) > MAX_DIM_VALUES:
                raise InputError(f"dimension {name!r} needs 1..{MAX_DIM_VALUES} values")
            if len(set(values)) != len(values):
                raise InputError(f"duplicate values in dimension {name!r}")
            for v in values:
                if not isinstance(v, str) or "," in v:
                    raise InputError(f"dimension value {v!r} must be a string without ','")
        states = tuple(",".join(p) for p in itertools.product(*(v for _, v in dims)))
        return cls(states, dims)

    def __len__(self):
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __contains__(self, label):
        return label in self._index

    @property
    def full_mask(self) -> int:
        return (1 << len(self.states)) - 1

    @property
    def is_product(self) -> bool:
        return self.dims is not None

    @property
    def dim_names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.dims or ())

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except (KeyError, TypeError):
            raise InputError(f"unknown state {label!r}") from None

    def mask_of(self, labels: Iterable[str]) -> int:
        out = 0
        for label in labels:
            out |= 1 << self.index(label)
        return out

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.states[k] for k in bits(mask))

    def coordinates(self, label: str) -> tuple[str, ...]:
        if self.dims is None:
            raise InputError("ground has no product structure")
        self.index(label)
        return tuple(label.split(","))


@dataclass(frozen=True)
class StateSet:
    """A subset of a ground."""

    ground: Ground
    mask: int

    @property
    def labels(self) -> tuple[str, ...]:
        return self.ground.labels_of(self.mask)

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, label):
        return label in self.ground and bool(self.mask >> self.ground.index(label) & 1)

    def __str__(self):
        return "{" + "; ".join(f"({x})" for x in self.labels) + "}"


@dataclass(frozen=True)
class PartingTable:
    """The map state -> coalition of agents whose aspiration set contains it."""

    base: Base
    ground: Ground
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        if len(values) != len(self.ground):
            raise InputError("parting table must be total on the ground")
        full = self.base.full_mask
        for v in values:
            if v < 0 or v & ~full:
                raise InputError("parting values must be subsets of the base")
        object.__setattr__(self, "values", values)

    def __getitem__(self, state: str) -> Coalition:
        return Coalition(self.base, self.values[self.ground.index(state)])

    def items(self):
        for x, v in zip(self.ground.states, self.values):
            yield x, Coalition(self.base, v)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class PSite:
    """A political site ``(I, A, (A_i))``: base, ground, and profile.

    ``profile[k]`` is the state mask of the ``k``-th agent's aspiration set.
    ``partings[x]`` is the agent mask of state ``x``; it is derived, not stored
    independently.
    """

    base: Base
    ground: Ground
    profile: tuple[int, ...]
    partings: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        profile = tuple(self.profile)
        if len(profile) != len(self.base):
            raise InputError("profile must be total on the base")
        full = self.ground.full_mask
        for m in profile:
            if m < 0 or m & ~full:
                raise InputError("aspiration sets must be subsets of the ground")
        object.__setattr__(self, "profile", profile)
        object.__setattr__(self, "partings", _partings_of(profile, len(self.ground)))

    @classmethod
    def from_profile(cls, base: Base, ground: Ground,
                     profile: Mapping[str, Iterable[str]]) -> PSite:
        extra = [k for k in profile if k not in base]
        if extra:
            raise InputError(f"profile names unknown agents {extra}")
        missing = [a for a in base.agents if a not in profile]
        if missing:
            raise InputError(f"profile is missing agents {missing}")
        return cls(base, ground, tuple(ground.mask_of(profile[a]) for a in base.agents))

    @classmethod
    def from_partings(cls, base: Base, ground: Ground, partings: Iterable[int]) -> PSite:
        partings = tuple(partings)
        profile = [0] * len(base)
        for x, p in enumerate(partings):
            for i in bits(p):
                profile[i] |= 1 << x
        return cls(base, ground, tuple(profile))

    def aspirations(self, agent: str) -> StateSet:
        return StateSet(self.ground, self.profile[self.base.index(agent)])

    def profile_dict(self) -> dict[str, tuple[str, ...]]:
        return {a: self.ground.labels_of(m) for a, m in zip(self.base.agents, self.profile)}


def _partings_of(profile: tuple[int, ...], n_states: int) -> tuple[int, ...]:
    out = [0] * n_states
    for i, m in enumerate(profile):
        for x in bits(m):
            out[x] |= 1 << i
    return tuple(out)


def _coalition_mask(a: PSite, s) -> int:
    if isinstance(s, Coalition):
        if s.base != a.base:
            raise InputError("coalition is not over the site's base")
        return s.mask
    return a.base.mask_of(s)


def parting(a: PSite, x: str) -> Coalition:
    return Coalition(a.base, a.partings[a.ground.index(x)])


def parting_table(a: PSite) -> PartingTable:
    return PartingTable(a.base, a.ground, a.partings)


def site_from_parting(base: Base, ground: Ground, rho) -> PSite:
    """The unique site whose parting table is ``rho``.

    ``rho`` is a :class:`PartingTable` or a mapping state -> agents (labels or
    a :class:`Coalition`) that must cover every state of the ground.
    """
    if isinstance(rho, PartingTable):
        if rho.base != base or rho.ground != ground:
            raise InputError("parting table is over a different base/ground")
        return PSite.from_partings(base, ground, rho.values)
    missing = [x for x in ground.states if x not in rho]
    if missing:
        raise InputError(f"parting map is not total: missing states {missing[:5]}")
    extra = [x for x in rho if x not in ground]
    if extra:
        raise InputError(f"parting map names unknown states {extra[:5]}")
    values = []
    for x in ground.states:
        v = rho[x]
        if isinstance(v, Coalition):
            if v.base != base:
                raise InputError(f"parting of {x!r} is over a different base")
            values.append(v.mask)
        else:
            values.append(base.mask_of(v))
    return PSite.from_partings(base, ground, values)


def states_containing(a: PSite, s) -> StateSet:
    """``A_s``: states desired by every member of ``s`` (the whole ground for ∅)."""
    mask = a.ground.full_mask
    for i in bits(_coalition_mask(a, s)):
        mask &= a.profile[i]
    return StateSet(a.ground, mask)


def states_exact(a: PSite, s) -> StateSet:
    """The exact fiber: states whose parting coalition is exactly ``s``."""
    target = _coalition_mask(a, s)
    mask = 0
    for x, p in enumerate(a.partings):
        if p == target:
            mask |= 1 << x
    return StateSet(a.ground, mask)


def knit(a: PSite) -> Complex:
    return Complex(a.base, frozenset(a.partings))


def nerve(a: PSite) -> SimplicialComplex:
    return SimplicialComplex(a.base, closure_masks(set(a.partings)))


def effective_site(a: PSite) -> PSite:
    """Restrict the ground to states desired by at least one agent."""
    keep = [x for x, p in enumerate(a.partings) if p]
    if len(keep) == len(a.ground):
        return a
    ground = Ground(tuple(a.ground.states[x] for x in keep))
    return PSite.from_partings(a.base, ground, (a.partings[x] for x in keep))


def is_simple(a: PSite) -> bool:
    return len(set(a.partings)) == len(a.partings)


def is_perfect(a: PSite) -> bool:
    return knit(a) == nerve(a)


def is_isotopy(f: GroundMap, a: PSite, b: PSite) -> bool:
    if a.base != b.base:
        raise InputError("isotopy needs sites with the same base")
    if f.domain != a.ground or f.codomain != b.ground:
        raise InputError("ground map does not span the two sites")
    if not f.is_bijective():
        return False
    return all(f.image_mask(m) == n for m, n in zip(a.profile, b.profile))
