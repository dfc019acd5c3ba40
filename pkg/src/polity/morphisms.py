"""Maps between formations and between sites.

Every site-level check reduces to the pair check ``(phi, f): a -> b``:

* mode ``"B"``: ``hat(phi) . pi_a == pi_b . f``
* mode ``"S"``: ``hat(phi)(pi_a(x)) ⊆ pi_b(f(x))`` for every state ``x``

Fixed-ground (BP/SP) checks use the identity ground map and fixed-base
(BG/SG) checks the identity base map.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

from .combinatorics import Base, Coalition, Complex, bits, hat_mask, mask_key
from .errors import InputError, SizeLimitError
from .site_core import Ground, PSite, nerve

MAX_ISO_AGENTS = 8


def _mode(mode: str) -> str:
    m = str(mode).upper()
    if m not in ("B", "S"):
        raise InputError(f"mode must be 'B' or 'S', got {mode!r}")
    return m


@dataclass(frozen=True)
class BaseMap:
    """A total function between two bases, stored as an index tuple."""

    domain: Base
    codomain: Base
    assignment: tuple[int, ...]

    def __post_init__(self):
        assignment = tuple(self.assignment)
        if len(assignment) != len(self.domain):
            raise InputError("base map must be total on its domain")
        n = len(self.codomain)
        if any(not 0 <= j < n for j in assignment):
            raise InputError("base map takes values outside its codomain")
        object.__setattr__(self, "assignment", assignment)

    @classmethod
    def from_mapping(cls, domain: Base, codomain: Base, mapping: Mapping[str, str]) -> BaseMap:
        missing = [i for i in domain.agents if i not in mapping]
        if missing:
            raise InputError(f"base map is not total: missing {missing}")
        extra = [i for i in mapping if i not in domain]
        if extra:
            raise InputError(f"base map names unknown agents {extra}")
        return cls(domain, codomain, tuple(codomain.index(mapping[i]) for i in domain.agents))

    @classmethod
    def identity(cls, base: Base) -> BaseMap:
        return cls(base, base, tuple(range(len(base))))

    def __call__(self, agent: str) -> str:
        return self.codomain.agents[self.assignment[self.domain.index(agent)]]

    def hat(self, mask: int) -> int:
        return hat_mask(self.assignment, mask)

    def image(self, s: Coalition) -> Coalition:
        if s.base != self.domain:
            raise InputError("coalition is not over the domain of the base map")
        return Coalition(self.codomain, self.hat(s.mask))

    def preimage_mask(self, j: int) -> int:
        return sum(1 << i for i, t in enumerate(self.assignment) if t == j)

    def is_bijective(self) -> bool:
        return len(self.domain) == len(self.codomain) == len(set(self.assignment))

    def as_dict(self) -> dict[str, str]:
        return {self.domain.agents[i]: self.codomain.agents[j]
                for i, j in enumerate(self.assignment)}


@dataclass(frozen=True)
class GroundMap:
    """A total function between two grounds, stored as an index tuple."""

    domain: Ground
    codomain: Ground
    assignment: tuple[int, ...]

    def __post_init__(self):
        assignment = tuple(self.assignment)
        if len(assignment) != len(self.domain):
            raise InputError("ground map must be total on its domain")
        n = len(self.codomain)
        if any(not 0 <= y < n for y in assignment):
            raise InputError("ground map takes values outside its codomain")
        object.__setattr__(self, "assignment", assignment)

    @classmethod
    def from_mapping(cls, domain: Ground, codomain: Ground, mapping: Mapping[str, str]) -> GroundMap:
        missing = [x for x in domain.states if x not in mapping]
        if missing:
            raise InputError(f"ground map is not total: missing {missing[:5]}")
        extra = [x for x in mapping if x not in domain]
        if extra:
            raise InputError(f"ground map names unknown states {extra[:5]}")
        return cls(domain, codomain, tuple(codomain.index(mapping[x]) for x in domain.states))

    @classmethod
    def identity(cls, ground: Ground) -> GroundMap:
        return cls(ground, ground, tuple(range(len(ground))))

    def __call__(self, state: str) -> str:
        return self.codomain.states[self.assignment[self.domain.index(state)]]

    def image_mask(self, mask: int) -> int:
        return hat_mask(self.assignment, mask)

    def preimage_mask(self, mask: int) -> int:
        return sum(1 << x for x, y in enumerate(self.assignment) if mask >> y & 1)

    def is_injective(self) -> bool:
        return len(set(self.assignment)) == len(self.assignment)

    def is_surjective(self) -> bool:
        return len(set(self.assignment)) == len(self.codomain)

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def as_dict(self) -> dict[str, str]:
        return {self.domain.states[x]: self.codomain.states[y]
                for x, y in enumerate(self.assignment)}


@dataclass(frozen=True)
class PairMap:
    base_map: BaseMap
    ground_map: GroundMap

    @classmethod
    def identity(cls, a: PSite) -> PairMap:
        return cls(BaseMap.identity(a.base), GroundMap.identity(a.ground))


@dataclass(frozen=True)
class CMap:
    """A base map viewed as a morphism between two formations."""

    base_map: BaseMap
    source: Complex
    target: Complex

    def __post_init__(self):
        if self.source.base != self.base_map.domain or self.target.base != self.base_map.codomain:
            raise InputError("formation map endpoints do not match the base map")

    @classmethod
    def identity(cls, X: Complex) -> CMap:
        return cls(BaseMap.identity(X.base), X, X)


@dataclass(frozen=True)
class Counterexample:
    kind: str  # "agent", "state" or "coalition"
    item: object
    side: str
    detail: str = ""

    def to_dict(self) -> dict:
        item = list(self.item) if isinstance(self.item, tuple) else self.item
        return {"kind": self.kind, "item": item, "side": self.side, "detail": self.detail}


@dataclass(frozen=True)
class Verdict:
    holds: bool
    counterexample: Counterexample | None = field(default=None)

    def __post_init__(self):
        if self.holds != (self.counterexample is None):
            raise ValueError("a verdict has a counterexample exactly when it fails")

    def __bool__(self):
        return self.holds

    @classmethod
    def ok(cls) -> Verdict:
        return cls(True)

    @classmethod
    def fail(cls, kind, item, side, detail="") -> Verdict:
        return cls(False, Counterexample(kind, item, side, detail))

    def to_dict(self) -> dict:
        return {"holds": self.holds,
                "counterexample": self.counterexample.to_dict() if self.counterexample else None}


def _fmt(base: Base, mask: int) -> str:
    return str(Coalition(base, mask))


# --- formations ---------------------------------------------------------------

def c_image(phi: BaseMap, X: Complex) -> Complex:
    if X.base != phi.domain:
        raise InputError("complex is not over the domain of the base map")
    return Complex(phi.codomain, frozenset(phi.hat(m) for m in X.masks))


def check_c_map(mode: str, phi: BaseMap, X: Complex, Y: Complex) -> Verdict:
    """BC-map (``hat(phi)(X) == Y``) or SC-map (``hat(phi)(X) ⊆ Y``)."""
    mode = _mode(mode)
    if X.base != phi.domain or Y.base != phi.codomain:
        raise InputError("complexes do not match the base map's domain/codomain")
    image = set()
    for m in X.ordered_masks():
        t = phi.hat(m)
        image.add(t)
        if t not in Y.masks:
            return Verdict.fail("coalition", X.base.labels_of(m), "source",
                                f"image {_fmt(Y.base, t)} is not in the target complex")
    if mode == "B":
        for m in Y.ordered_masks():
            if m not in image:
                return Verdict.fail("coalition", Y.base.labels_of(m), "target",
                                    "target coalition is not the image of any source coalition")
    return Verdict.ok()


def compose_c(c2: CMap, c1: CMap) -> CMap:
    if c1.target != c2.source:
        raise InputError("formation maps are not composable")
    return CMap(compose_base(c2.base_map, c1.base_map), c1.source, c2.target)


# --- composition ----------------------------------------------------------------

def compose_base(psi: BaseMap, phi: BaseMap) -> BaseMap:
    if phi.codomain != psi.domain:
        raise InputError("base maps are not composable")
    return BaseMap(phi.domain, psi.codomain, tuple(psi.assignment[j] for j in phi.assignment))


def compose_ground(g: GroundMap, f: GroundMap) -> GroundMap:
    if f.codomain != g.domain:
        raise InputError("ground maps are not composable")
    return GroundMap(f.domain, g.codomain, tuple(g.assignment[y] for y in f.assignment))


def compose_pair(m2: PairMap, m1: PairMap) -> PairMap:
    """``m2 ∘ m1``: apply ``m1`` first."""
    return PairMap(compose_base(m2.base_map, m1.base_map),
                   compose_ground(m2.ground_map, m1.ground_map))


# --- pair maps ------------------------------------------------------------------

def _check_spans(m: PairMap, a: PSite, b: PSite):
    if m.base_map.domain != a.base or m.base_map.codomain != b.base:
        raise InputError("base map does not span the two sites' bases")
    if m.ground_map.domain != a.ground or m.ground_map.codomain != b.ground:
        raise InputError("ground map does not span the two sites' grounds")


def check_pair_map(mode: str, m: PairMap, a: PSite, b: PSite) -> Verdict:
    """B-map / S-map check through the parting equation; counterexample is a state."""
    mode = _mode(mode)
    _check_spans(m, a, b)
    phi, f = m.base_map, m.ground_map
    for x, p in enumerate(a.partings):
        lhs = phi.hat(p)
        rhs = b.partings[f.assignment[x]]
        bad = lhs != rhs if mode == "B" else lhs & ~rhs
        if bad:
            rel = "differs from" if mode == "B" else "is not contained in"
            return Verdict.fail(
                "state", a.ground.states[x], "source",
                f"image of its parting {_fmt(b.base, lhs)} {rel} the parting "
                f"{_fmt(b.base, rhs)} of {b.ground.states[f.assignment[x]]!r}")
    return Verdict.ok()


def check_pair_map_definitional(mode: str, m: PairMap, a: PSite, b: PSite) -> Verdict:
    """The same classes checked per target agent: ``∪_{phi(i)=j} A_i`` vs ``f^-1(B_j)``."""
    mode = _mode(mode)
    _check_spans(m, a, b)
    phi, f = m.base_map, m.ground_map
    union = [0] * len(b.base)
    for i, j in enumerate(phi.assignment):
        union[j] |= a.profile[i]
    for j, bj in enumerate(b.profile):
        pre = f.preimage_mask(bj)
        bad = union[j] != pre if mode == "B" else union[j] & ~pre
        if bad:
            return Verdict.fail("agent", b.base.agents[j], "target",
                                "merged aspirations do not match the preimage of its aspirations")
    return Verdict.ok()


def check_p_map(mode: str, phi: BaseMap, a: PSite, b: PSite) -> Verdict:
    """BP-map / SP-map: sites on the same ground, ground map the identity."""
    if a.ground != b.ground:
        raise InputError("BP/SP maps need sites with the same ground")
    return check_pair_map(mode, PairMap(phi, GroundMap.identity(a.ground)), a, b)


def check_g_map(mode: str, f: GroundMap, a: PSite, b: PSite) -> Verdict:
    """BG-map / SG-map: sites on the same base, base map the identity."""
    if a.base != b.base:
        raise InputError("BG/SG maps need sites with the same base")
    return check_pair_map(mode, PairMap(BaseMap.identity(a.base), f), a, b)


def p_image(phi: BaseMap, a: PSite) -> PSite:
    """The site on ``phi.codomain`` and the same ground with parting ``hat(phi) . pi_a``."""
    if phi.domain != a.base:
        raise InputError("base map does not start at the site's base")
    return PSite.from_partings(phi.codomain, a.ground, (phi.hat(p) for p in a.partings))


def inverse_g_image(f: GroundMap, b: PSite) -> PSite:
    """The site on ``f.domain`` with ``A_j = f^-1(B_j)``."""
    if f.codomain != b.ground:
        raise InputError("ground map does not end at the site's ground")
    return PSite.from_partings(b.base, f.domain, (b.partings[y] for y in f.assignment))


def direct_g_image(f: GroundMap, a: PSite) -> PSite:
    """The site on ``f.codomain`` with ``B_i = f(A_i)``."""
    if f.domain != a.ground:
        raise InputError("ground map does not start at the site's ground")
    return PSite(a.base, f.codomain, tuple(f.image_mask(m) for m in a.profile))


def pair_map_forms(mode: str, m: PairMap, a: PSite, b: PSite) -> dict[str, bool]:
    """All five equivalent ways of saying ``m`` is a B-map (S-map) ``a -> b``.

    pair: the per-agent definition on ``(phi, f)``; p_image: ``(id, f)`` from the
    P-image of ``a``; inverse_g_image: ``(phi, id)`` into the inverse G-image of
    ``b``; central: ``(id, id)`` between those two; parting: the parting equation.
    """
    mode = _mode(mode)
    _check_spans(m, a, b)
    phi, f = m.base_map, m.ground_map
    pa = p_image(phi, a)
    bf = inverse_g_image(f, b)
    id_J = BaseMap.identity(b.base)
    id_A = GroundMap.identity(a.ground)
    return {
        "pair": check_pair_map_definitional(mode, m, a, b).holds,
        "p_image": check_pair_map_definitional(mode, PairMap(id_J, f), pa, b).holds,
        "inverse_g_image": check_pair_map_definitional(mode, PairMap(phi, id_A), a, bf).holds,
        "central": check_pair_map_definitional(mode, PairMap(id_J, id_A), pa, bf).holds,
        "parting": check_pair_map(mode, m, a, b).holds,
    }


def g_map_forms(mode: str, f: GroundMap, a: PSite, b: PSite) -> dict[str, bool]:
    """Equivalent conditions for a BG-map (mode B) or an SG-map (mode S)."""
    mode = _mode(mode)
    if a.base != b.base:
        raise InputError("BG/SG maps need sites with the same base")
    if f.domain != a.ground or f.codomain != b.ground:
        raise InputError("ground map does not span the two sites")
    n = len(a.base)
    if mode == "B":
        fibers_a: dict[int, int] = {}
        fibers_b: dict[int, int] = {}
        for x, p in enumerate(a.partings):
            fibers_a[p] = fibers_a.get(p, 0) | 1 << x
        for y, p in enumerate(b.partings):
            fibers_b[p] = fibers_b.get(p, 0) | 1 << y
        return {
            "definition": all(m == f.preimage_mask(bm) for m, bm in zip(a.profile, b.profile)),
            "fiber_preimage": all(f.preimage_mask(fibers_b.get(s, 0)) == fibers_a.get(s, 0)
                                  for s in range(1 << n)),
            "fiber_image": all(f.image_mask(fibers_a.get(s, 0)) & ~fibers_b.get(s, 0) == 0
                               for s in range(1 << n)),
            "parting": all(p == b.partings[f.assignment[x]] for x, p in enumerate(a.partings)),
        }

    def common(site: PSite, s: int) -> int:
        mask = site.ground.full_mask
        for i in bits(s):
            mask &= site.profile[i]
        return mask

    return {
        "definition": all(f.image_mask(m) & ~bm == 0 for m, bm in zip(a.profile, b.profile)),
        "intersection_image": all(f.image_mask(common(a, s)) & ~common(b, s) == 0
                                  for s in range(1, 1 << n)),
        "intersection_preimage": all(common(a, s) & ~f.preimage_mask(common(b, s)) == 0
                                     for s in range(1, 1 << n)),
        "parting": all(p & ~b.partings[f.assignment[x]] == 0 for x, p in enumerate(a.partings)),
    }


# --- existence and witnesses ------------------------------------------------------

def ground_witness_exists(mode: str, phi: BaseMap, a: PSite, b: PSite) -> bool:
    """Whether some ground map ``f`` makes ``(phi, f)`` a map of the given mode.

    B: ``hat(phi)(knit a) ⊆ knit b``.  S: ``hat(phi)(nerve a) ⊆ nerve b``, plus
    the target ground must be nonempty when the source ground is.
    """
    mode = _mode(mode)
    if phi.domain != a.base or phi.codomain != b.base:
        raise InputError("base map does not span the two sites' bases")
    if mode == "B":
        target = set(b.partings)
        return all(phi.hat(p) in target for p in set(a.partings))
    if len(a.ground) and not len(b.ground):
        return False
    target = nerve(b).masks
    return all(phi.hat(s) in target for s in nerve(a).masks)


def find_ground_witness(mode: str, phi: BaseMap, a: PSite, b: PSite) -> GroundMap | None:
    """A ground map completing ``phi`` to a B-map (S-map), or ``None`` if none exists.

    Each state goes to the least-indexed target state whose parting is exactly
    (B) or contains (S) the image of its own parting; in mode S, states with
    empty parting go to the first target state.
    """
    mode = _mode(mode)
    if not ground_witness_exists(mode, phi, a, b):
        return None
    chosen: dict[int, int] = {}
    out = []
    for p in a.partings:
        t = phi.hat(p)
        if t not in chosen:
            if mode == "B":
                y = b.partings.index(t)
            elif t == 0:
                y = 0
            else:
                y = next(y for y, q in enumerate(b.partings) if t & ~q == 0)
            chosen[t] = y
        out.append(chosen[t])
    return GroundMap(a.ground, b.ground, tuple(out))


def right_inverse_bg(f: GroundMap, a: PSite, b: PSite) -> GroundMap:
    """A section ``g`` of a surjective BG-map; each state maps to its least preimage."""
    if not f.is_surjective():
        raise InputError("right inverse needs a surjective ground map")
    if not check_g_map("B", f, a, b):
        raise InputError("right inverse needs a BG-map")
    first: dict[int, int] = {}
    for x, y in enumerate(f.assignment):
        first.setdefault(y, x)
    return GroundMap(b.ground, a.ground, tuple(first[y] for y in range(len(b.ground))))


def are_g_isomorphic(mode: str, a: PSite, b: PSite) -> bool:
    """Same-base sites with BG-maps (SG-maps) both ways: equal knits (nerves)."""
    if a.base != b.base:
        raise InputError("BG/SG-isomorphism needs sites with the same base")
    ident = BaseMap.identity(a.base)
    return ground_witness_exists(mode, ident, a, b) and ground_witness_exists(mode, ident, b, a)


def are_pair_isomorphic(mode: str, a: PSite, b: PSite) -> tuple[BaseMap, BaseMap] | None:
    """Mutually inverse base bijections that both extend to B-maps (S-maps)."""
    mode = _mode(mode)
    n = len(a.base)
    if n > MAX_ISO_AGENTS or len(b.base) > MAX_ISO_AGENTS:
        raise SizeLimitError(f"isomorphism search is capped at {MAX_ISO_AGENTS} agents")
    if n != len(b.base):
        return None
    for perm in itertools.permutations(range(n)):
        phi = BaseMap(a.base, b.base, perm)
        inv = [0] * n
        for i, j in enumerate(perm):
            inv[j] = i
        psi = BaseMap(b.base, a.base, tuple(inv))
        if ground_witness_exists(mode, phi, a, b) and ground_witness_exists(mode, psi, b, a):
            return phi, psi
    return None


def s_equivalent(m1: PairMap, m2: PairMap, a: PSite, b: PSite) -> bool:
    """Same base map and same ground map on the states desired by someone."""
    for m in (m1, m2):
        if not check_pair_map("S", m, a, b):
            raise InputError("S-equivalence is defined only between S-maps")
    if m1.base_map != m2.base_map:
        return False
    f1, f2 = m1.ground_map.assignment, m2.ground_map.assignment
    return all(f1[x] == f2[x] for x, p in enumerate(a.partings) if p)


def knit_inclusion_counterexample(phi: BaseMap, a: PSite, b: PSite) -> Coalition | None:
    """First coalition of ``knit a`` whose image is missing from ``knit b``."""
    target = set(b.partings)
    for s in sorted(set(a.partings), key=mask_key):
        if phi.hat(s) not in target:
            return Coalition(a.base, s)
    return None
