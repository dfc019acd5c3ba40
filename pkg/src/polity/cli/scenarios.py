"""Projections of product-ground sites and winning viable coalitions."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..combinatorics import Base, Coalition, mask_key, max_masks
from ..errors import InputError
from ..morphisms import GroundMap, direct_g_image
from ..site_core import Ground, PSite, nerve


def _drop_index(ground: Ground, drop: str) -> int:
    if not ground.is_product:
        raise InputError("projection needs a product ground")
    names = ground.dim_names
    if drop not in names:
        raise InputError(f"unknown dimension {drop!r}; dimensions are {list(names)}")
    if len(names) < 3:
        raise InputError("projection must leave at least two dimensions")
    return names.index(drop)


def projection_map(ground: Ground, drop: str) -> GroundMap:
    """The coordinate-erasing map onto the product of the remaining dimensions."""
    k = _drop_index(ground, drop)
    target = Ground.product(d for j, d in enumerate(ground.dims) if j != k)
    out = []
    for x in ground.states:
        coords = x.split(",")
        out.append(target.index(",".join(coords[:k] + coords[k + 1:])))
    return GroundMap(ground, target, tuple(out))


def project_site(a: PSite, drop: str) -> PSite:
    """Direct G-image of ``a`` under erasure of dimension ``drop``."""
    return direct_g_image(projection_map(a.ground, drop), a)


def project_boxes(boxes: dict[str, list[dict]], ground: Ground, drop: str) -> PSite:
    """The same projection computed box by box, then unioned."""
    k = _drop_index(ground, drop)
    dims = [d for j, d in enumerate(ground.dims) if j != k]
    target = Ground.product(dims)
    profile = {}
    for agent, blist in boxes.items():
        states = set()
        for box in blist:
            states.update(",".join(p) for p in itertools.product(*(box[n] for n, _ in dims)))
        profile[agent] = sorted(states, key=target.index)
    return PSite.from_profile(Base(tuple(boxes)), target, profile)


@dataclass(frozen=True)
class WeightProfile:
    """Seats per agent and the quota a coalition must reach."""

    weights: dict
    quota: int

    def __post_init__(self):
        for agent, w in self.weights.items():
            if not isinstance(w, int) or w < 0:
                raise InputError(f"weight of {agent!r} must be a nonnegative integer")
        if not isinstance(self.quota, int) or self.quota < 1:
            raise InputError("quota must be a positive integer")
        if self.quota > self.total:
            raise InputError(f"quota {self.quota} exceeds the total weight {self.total}")

    @property
    def total(self) -> int:
        return sum(self.weights.values())

    def check_base(self, base: Base):
        missing = [a for a in base.agents if a not in self.weights]
        if missing:
            raise InputError(f"missing weights for {missing}")
        extra = [a for a in self.weights if a not in base]
        if extra:
            raise InputError(f"weights for unknown agents {extra}")

    def of(self, s: Coalition) -> int:
        return sum(self.weights[a] for a in s.members)


def winning_viable(a: PSite, w: WeightProfile) -> list[Coalition]:
    """Maximal viable coalitions reaching the quota, heaviest first."""
    w.check_base(a.base)
    facets = [Coalition(a.base, m) for m in max_masks(nerve(a).masks)]
    winners = [s for s in facets if w.of(s) >= w.quota]
    return sorted(winners, key=lambda s: (-w.of(s), mask_key(s.mask)))
