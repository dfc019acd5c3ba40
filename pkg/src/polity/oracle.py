"""Brute-force oracle: exhaustive enumeration, seeded random generation, and a
catalog of checks that compare library results against independent
computations straight from the definitions.

The independent side works on :class:`NaiveSite` (plain frozensets of labels)
or on boolean membership matrices; it never calls the library's partings,
knit, nerve, closure or morphism checks.

Randomness comes from numpy's ``PCG64`` bit generator, seeded per check
through ``SeedSequence([seed, crc32(check_id)])`` so that every check replays
bit-exactly regardless of the order in which checks run.
"""
from __future__ import annotations

import itertools
import zlib
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np

from .canonical import SEPARATOR, canonical_site, canonical_with_nerve
from .combinatorics import (
    Base,
    Complex,
    SimplicialComplex,
    downward_closure,
    max_elements,
)
from .delegation import (
    Delegation,
    check_withdrawal_equivalences,
    complex_implies,
    complex_minus,
    delegation_fn,
    friendly_foundation_witness,
    is_friendly_delegation,
    is_simplicial_delegation,
)
from .errors import InputError, SizeLimitError
from .functors import (
    FunctorTag,
    check_category_laws,
    check_equivalence_witness,
    check_functor_laws,
    check_naturality,
    knit_after_canon_is_identity,
    pi_bar,
)
from .morphisms import (
    BaseMap,
    CMap,
    GroundMap,
    PairMap,
    c_image,
    check_p_map,
    check_pair_map,
    check_pair_map_definitional,
    compose_pair,
    find_ground_witness,
    g_map_forms,
    pair_map_forms,
)
from .site_core import (
    Ground,
    PSite,
    effective_site,
    is_isotopy,
    is_perfect,
    is_simple,
    knit,
    nerve,
    parting_table,
    site_from_parting,
    states_containing,
    states_exact,
)

MAX_FUNCTIONS = 10**7
MAX_ORACLE_BASE = 6
MAX_ORACLE_GROUND = 4


@dataclass(frozen=True)
class OracleBounds:
    """Sizes for exhaustive sweeps, and trial count and seed for random ones."""

    max_base: int = 3
    max_ground: int = 3
    trials: int = 200
    seed: int = 0
    random_max_base: int = 5
    random_max_ground: int = 12

    def __post_init__(self):
        if not 0 <= self.max_base <= MAX_ORACLE_BASE:
            raise InputError(f"max_base must be in 0..{MAX_ORACLE_BASE}")
        if not 0 <= self.max_ground <= MAX_ORACLE_GROUND:
            raise InputError(f"max_ground must be in 0..{MAX_ORACLE_GROUND}")
        if self.trials < 0:
            raise InputError("trials must be nonnegative")
        if self.seed is None or not isinstance(self.seed, int):
            raise InputError("random checks need an integer seed")
        if not 1 <= self.random_max_base <= MAX_ORACLE_BASE:
            raise InputError(f"random_max_base must be in 1..{MAX_ORACLE_BASE}")
        if not 0 <= self.random_max_ground <= 64:
            raise InputError("random_max_ground must be in 0..64")


# --- enumeration -------------------------------------------------------------------

def enumerate_functions(X: Sequence, Y: Sequence) -> Iterator[dict]:
    """All total functions ``X -> Y`` as dicts, in lexicographic order."""
    X, Y = list(X), list(Y)
    if len(Y) ** len(X) > MAX_FUNCTIONS:
        raise SizeLimitError(f"{len(Y)}^{len(X)} functions exceeds the cap of {MAX_FUNCTIONS}")
    for values in itertools.product(Y, repeat=len(X)):
        yield dict(zip(X, values))


def agents(n: int) -> Base:
    return Base(tuple(str(k + 1) for k in range(n)))


def states(m: int, prefix: str = "s") -> Ground:
    return Ground(tuple(f"{prefix}{k + 1}" for k in range(m)))


def enumerate_sites(n: int, m: int, base: Base | None = None,
                    ground: Ground | None = None) -> Iterator[PSite]:
    """All ``2^(n*m)`` sites on ``n`` agents and ``m`` states."""
    base = base or agents(n)
    ground = ground or states(m)
    for profile in itertools.product(range(1 << m), repeat=n):
        yield PSite(base, ground, profile)


def enumerate_complexes(n: int, base: Base | None = None) -> Iterator[Complex]:
    """All ``2^(2^n)`` families of coalitions of an ``n``-agent base."""
    base = base or agents(n)
    total = 1 << n
    for pick in range(1 << total):
        yield Complex(base, frozenset(s for s in range(total) if pick >> s & 1))


def _naive_is_simplicial(family: frozenset) -> bool:
    if frozenset() in family:
        return False
    return all(s - {x} in family for s in family if len(s) > 1 for x in s)


def enumerate_simplicial(n: int, base: Base | None = None) -> Iterator[SimplicialComplex]:
    """All simplicial complexes on an ``n``-agent base (filtered from all families)."""
    base = base or agents(n)
    labels = base.agents
    nonempty = list(range(1, 1 << n))
    for pick in range(1 << len(nonempty)):
        masks = [nonempty[k] for k in range(len(nonempty)) if pick >> k & 1]
        family = frozenset(frozenset(labels[i] for i in range(n) if s >> i & 1) for s in masks)
        if _naive_is_simplicial(family):
            yield SimplicialComplex(base, frozenset(masks))


# --- independent definitions ----------------------------------------------------------

@dataclass(frozen=True)
class NaiveSite:
    """A site as plain label sets, for computations straight from definitions."""

    agents: tuple
    states: tuple
    aspirations: dict

    @classmethod
    def of(cls, a: PSite) -> NaiveSite:
        return cls(a.base.agents, a.ground.states,
                   {i: frozenset(v) for i, v in a.profile_dict().items()})

    def parting(self, x) -> frozenset:
        return frozenset(i for i in self.agents if x in self.aspirations[i])

    def knit(self) -> set:
        return {self.parting(x) for x in self.states}

    def common(self, s) -> set:
        out = set(self.states)
        for i in s:
            out &= self.aspirations[i]
        return out

    def nerve(self) -> set:
        out = set()
        for r in range(1, len(self.agents) + 1):
            for s in itertools.combinations(self.agents, r):
                if self.common(s):
                    out.add(frozenset(s))
        return out

    def membership(self) -> np.ndarray:
        return np.array([[x in self.aspirations[i] for x in self.states] for i in self.agents],
                        dtype=bool).reshape(len(self.agents), len(self.states))


def naive_family(K: Complex) -> set:
    return {frozenset(c.members) for c in K}


def naive_closure(family) -> set:
    out = set()
    for s in family:
        s = tuple(s)
        for r in range(1, len(s) + 1):
            out.update(frozenset(c) for c in itertools.combinations(s, r))
    return out


def naive_is_pair_map(mode: str, phi: dict, f: dict, a: NaiveSite, b: NaiveSite) -> bool:
    """Per-agent definition: union of ``A_i`` over the fiber of ``j`` vs ``f^-1(B_j)``."""
    for j in b.agents:
        union = set()
        for i in a.agents:
            if phi[i] == j:
                union |= a.aspirations[i]
        pre = {x for x in a.states if f[x] in b.aspirations[j]}
        if mode == "B" and union != pre:
            return False
        if mode == "S" and not union <= pre:
            return False
    return True


_MAPS: dict = {}


def _all_maps(m: int, k: int) -> np.ndarray:
    """Every function ``range(m) -> range(k)`` as rows of an int array."""
    key = (m, k)
    if key not in _MAPS:
        if m == 0:
            arr = np.zeros((1, 0), dtype=np.intp)
        elif k == 0:
            arr = np.zeros((0, m), dtype=np.intp)
        else:
            if k ** m > MAX_FUNCTIONS:
                raise SizeLimitError("too many ground maps for exhaustive search")
            arr = np.array(list(itertools.product(range(k), repeat=m)), dtype=np.intp)
        _MAPS[key] = arr
    return _MAPS[key]


def brute_force_ground_maps(mode: str, phi: Sequence[int], a: NaiveSite, b: NaiveSite) -> np.ndarray:
    """All ground maps ``f`` making ``(phi, f)`` a map of the mode, by exhaustive search.

    ``phi[i]`` is the index in ``b.agents`` of the image of ``a.agents[i]``.
    The test is the per-agent definition, evaluated for every ``f`` at once.
    """
    maps = _all_maps(len(a.states), len(b.states))
    ma, mb = a.membership(), b.membership()
    union = np.zeros((len(b.agents), len(a.states)), dtype=bool)
    for i, j in enumerate(phi):
        union[j] |= ma[i]
    pre = mb[:, maps]  # (J, F, A): pre[j, k, x] = f_k(x) in B_j
    if mode == "B":
        ok = (pre == union[:, None, :]).all(axis=(0, 2))
    else:
        ok = (~union[:, None, :] | pre).all(axis=(0, 2))
    return maps[ok]


# --- random generation --------------------------------------------------------------

def make_rng(seed: int, tag: str = "") -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, zlib.crc32(tag.encode())])))


def random_site(bounds: OracleBounds, n: int, m: int, rng: np.random.Generator | None = None,
                base: Base | None = None, prefix: str = "s") -> PSite:
    """Every (agent, state) membership is an independent fair coin."""
    if not 0 <= n <= 64 or not 0 <= m <= 4096:
        raise InputError("random site sizes out of range")
    rng = rng if rng is not None else make_rng(bounds.seed, "random_site")
    coins = rng.integers(0, 2, size=(n, m))
    weights = 1 << np.arange(m, dtype=object) if m else np.zeros(0, dtype=object)
    profile = tuple(int((coins[i].astype(object) * weights).sum()) if m else 0 for i in range(n))
    return PSite(base or agents(n), states(m, prefix), profile)


def _random_size_site(bounds: OracleBounds, rng, min_base: int = 1) -> PSite:
    n = int(rng.integers(min_base, bounds.random_max_base + 1))
    m = int(rng.integers(0, bounds.random_max_ground + 1))
    return random_site(bounds, n, m, rng)


def random_mask(rng, n: int) -> int:
    return int(sum(1 << k for k in range(n) if rng.integers(0, 2)))


def random_base_map(rng, I: Base, J: Base) -> BaseMap:
    if not len(J) and len(I):
        raise InputError("no map into an empty base")
    return BaseMap(I, J, tuple(int(rng.integers(0, len(J))) for _ in range(len(I))))


def random_complex(rng, base: Base) -> Complex:
    total = 1 << len(base)
    return Complex(base, frozenset(s for s in range(total) if rng.integers(0, 2)))


def random_simplicial(rng, base: Base) -> SimplicialComplex:
    return downward_closure(random_complex(rng, base))


def random_morphism(mode: str, rng, a: PSite, max_base: int = 4,
                    tag: str = "b") -> tuple[PairMap, PSite]:
    """A random valid ``mode``-map out of ``a`` together with its target site.

    Target agents are drawn first with a random base map; each needed image
    coalition gets one or two target states (enlarged at random in mode S),
    a few unrelated states are added, and the target ground is shuffled.
    """
    mode = mode.upper()
    J = Base(tuple(f"{tag}{k + 1}" for k in range(int(rng.integers(1, max_base + 1)))))
    phi = random_base_map(rng, a.base, J)
    images = [phi.hat(p) for p in a.partings]
    partings = []
    for t in dict.fromkeys(images):
        for _ in range(int(rng.integers(1, 3))):
            partings.append(t | random_mask(rng, len(J)) if mode == "S" and rng.integers(0, 2) else t)
    for _ in range(int(rng.integers(0, 3))):
        partings.append(random_mask(rng, len(J)))
    order = rng.permutation(len(partings))
    partings = [partings[k] for k in order]
    ground = states(len(partings), f"{tag}s")
    b = PSite.from_partings(J, ground, partings)
    f = []
    for t in images:
        if mode == "B":
            cands = [y for y, q in enumerate(partings) if q == t]
        else:
            cands = [y for y, q in enumerate(partings) if t & ~q == 0]
        f.append(cands[int(rng.integers(0, len(cands)))])
    return PairMap(phi, GroundMap(a.ground, ground, tuple(f))), b


def random_pair_map(rng, a: PSite, b: PSite) -> PairMap | None:
    """A uniformly random (generally invalid) pair ``a -> b``; ``None`` if none exists."""
    if (len(a.base) and not len(b.base)) or (len(a.ground) and not len(b.ground)):
        return None
    phi = random_base_map(rng, a.base, b.base)
    f = tuple(int(rng.integers(0, len(b.ground))) for _ in range(len(a.ground)))
    return PairMap(phi, GroundMap(a.ground, b.ground, f))


def random_chain(mode: str, rng, bounds: OracleBounds, length: int):
    """Sites ``a_0..a_length`` and valid maps ``m_k: a_{k-1} -> a_k``."""
    a = _random_size_site(bounds, rng)
    sites, maps = [a], []
    for k in range(length):
        m, b = random_morphism(mode, rng, sites[-1], tag=f"c{k}_")
        sites.append(b)
        maps.append(m)
    return sites, maps


# --- reports and catalog ---------------------------------------------------------------

@dataclass
class Report:
    id: str
    description: str
    instances: int = 0
    failures: int = 0
    exhaustive: int = 0
    sampled: int = 0
    by_size: dict = field(default_factory=dict)
    counterexample: object = None
    bounds: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.instances > 0

    def record(self, ok: bool, size=(), sampled: bool = False, detail=None):
        self.instances += 1
        if sampled:
            self.sampled += 1
        else:
            self.exhaustive += 1
        key = str(tuple(size))
        self.by_size[key] = self.by_size.get(key, 0) + 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = detail if detail is not None else {"size": list(size)}

    def to_dict(self) -> dict:
        return {"id": self.id, "description": self.description, "passed": self.passed,
                "instances": self.instances, "failures": self.failures,
                "exhaustive": self.exhaustive, "sampled": self.sampled,
                "by_size": self.by_size, "counterexample": self.counterexample,
                "bounds": self.bounds}


CATALOG: dict[str, tuple[str, Callable]] = {}


def _check(check_id: str, description: str):
    def register(fn):
        CATALOG[check_id] = (description, fn)
        return fn
    return register


def verify_proposition(check_id: str, bounds: OracleBounds) -> Report:
    try:
        description, fn = CATALOG[check_id]
    except KeyError:
        raise InputError(f"unknown check {check_id!r}; known: {sorted(CATALOG)}") from None
    report = Report(check_id, description, bounds={
        "max_base": bounds.max_base, "max_ground": bounds.max_ground, "trials": bounds.trials,
        "seed": bounds.seed, "random_max_base": bounds.random_max_base,
        "random_max_ground": bounds.random_max_ground})
    fn(report, bounds, make_rng(bounds.seed, check_id))
    return report


def _describe(a: PSite) -> dict:
    return {"base": list(a.base.agents), "ground": list(a.ground.states),
            "profile": {i: list(v) for i, v in a.profile_dict().items()}}


def _sizes(limit_base: int, limit_ground: int, cap_base: int, cap_ground: int, min_base: int = 0):
    for n in range(min_base, min(limit_base, cap_base) + 1):
        for m in range(0, min(limit_ground, cap_ground) + 1):
            yield n, m


# Sites: parting duality, nerve, fibers, effective ground.

def _pi_gamma_one(a: PSite) -> bool:
    rho = parting_table(a)
    back = site_from_parting(a.base, a.ground, rho)
    if back != a or parting_table(back) != rho:
        return False
    naive = NaiveSite.of(a)
    table = {x: frozenset(c.members) for x, c in rho.items()}
    if table != {x: naive.parting(x) for x in a.ground.states}:
        return False
    # the other direction: start from an arbitrary parting mapping
    mapping = {x: list(v) for x, v in table.items()}
    return site_from_parting(a.base, a.ground, mapping) == a


@_check("PI_GAMMA", "profiles and parting maps are mutually inverse")
def _pi_gamma(report, bounds, rng):
    for n, m in _sizes(bounds.max_base, bounds.max_ground, 3, 3, min_base=1):
        for a in enumerate_sites(n, m):
            report.record(_pi_gamma_one(a), (n, m), detail=_describe(a))
    for _ in range(bounds.trials):
        a = _random_size_site(bounds, rng)
        report.record(_pi_gamma_one(a), (len(a.base), len(a.ground)), True, _describe(a))


def _nerve_gen_one(a: PSite) -> bool:
    naive = NaiveSite.of(a)
    sigma = nerve(a)
    return (sigma == downward_closure(knit(a))
            and naive_family(sigma) == naive.nerve() == naive_closure(naive.knit()))


@_check("NERVE_GEN", "the nerve is the simplicial complex generated by the knit")
def _nerve_gen(report, bounds, rng):
    for n, m in _sizes(bounds.max_base, bounds.max_ground, 3, 3):
        for a in enumerate_sites(n, m):
            report.record(_nerve_gen_one(a), (n, m), detail=_describe(a))
    for _ in range(bounds.trials):
        a = _random_size_site(bounds, rng)
        report.record(_nerve_gen_one(a), (len(a.base), len(a.ground)), True, _describe(a))


def _fibers_one(a: PSite) -> bool:
    n = len(a.base)
    fibers = [states_exact(a, a.base.coalition(a.base.labels_of(s))).mask for s in range(1 << n)]
    union = 0
    for fm in fibers:
        if union & fm:
            return False
        union |= fm
    if union != a.ground.full_mask:
        return False
    naive = NaiveSite.of(a)
    for s in range(1 << n):
        labels = a.base.labels_of(s)
        common = states_containing(a, labels)
        expected = 0
        for t in range(1 << n):
            if s & ~t == 0:
                expected |= fibers[t]
        if common.mask != expected or set(common.labels) != naive.common(labels):
            return False
        exact = {x for x in a.ground.states if naive.parting(x) == frozenset(labels)}
        if set(a.ground.labels_of(fibers[s])) != exact:
            return False
    return True


@_check("EXACT_FIBERS", "exact fibers partition the ground and rebuild every A_s")
def _exact_fibers(report, bounds, rng):
    for n, m in _sizes(bounds.max_base, bounds.max_ground, 3, 3):
        for a in enumerate_sites(n, m):
            report.record(_fibers_one(a), (n, m), detail=_describe(a))
    for _ in range(bounds.trials):
        a = _random_size_site(bounds, rng)
        report.record(_fibers_one(a), (len(a.base), len(a.ground)), True, _describe(a))


def _effective_one(a: PSite) -> bool:
    e = effective_site(a)
    naive = NaiveSite.of(a)
    covered = {x for x in a.ground.states if naive.parting(x)}
    return (set(e.ground.states) == covered and nerve(e) == nerve(a)
            and knit(e).masks == knit(a).masks - {0})


@_check("EFFECTIVE", "the effective site keeps the nerve and drops ∅ from the knit")
def _effective(report, bounds, rng):
    for n, m in _sizes(bounds.max_base, bounds.max_ground, 3, 3):
        for a in enumerate_sites(n, m):
            report.record(_effective_one(a), (n, m), detail=_describe(a))
    for _ in range(bounds.trials):
        a = _random_size_site(bounds, rng)
        report.record(_effective_one(a), (len(a.base), len(a.ground)), True, _describe(a))


# Existence of ground witnesses.

def _existence_one(mode: str, phi: BaseMap, a: PSite, b: PSite) -> tuple[bool, dict]:
    na, nb = NaiveSite.of(a), NaiveSite.of(b)
    found = brute_force_ground_maps(mode, phi.assignment, na, nb)
    witness = find_ground_witness(mode, phi, a, b)
    detail = {"mode": mode, "phi": phi.as_dict(), "a": _describe(a), "b": _describe(b),
              "brute_force": len(found)}
    if (witness is None) != (len(found) == 0):
        return False, detail
    if witness is not None:
        f = witness.as_dict()
        if not (check_pair_map(mode, PairMap(phi, witness), a, b)
                and naive_is_pair_map(mode, phi.as_dict(), f, na, nb)):
            return False, detail
    return True, detail


def _small_sites(n: int, m_max: int, prefix: str = "s", base: Base | None = None) -> list[PSite]:
    base = base or agents(n)
    out = []
    for m in range(m_max + 1):
        out.extend(enumerate_sites(n, m, base, states(m, prefix)))
    return out


def _same_base_existence(report, bounds, rng, mode):
    for n in range(1, min(bounds.max_base, 2) + 1):
        sites = _small_sites(n, min(bounds.max_ground, 3))
        targets = _small_sites(n, min(bounds.max_ground, 3), "t")
        phi = BaseMap.identity(agents(n))
        for a in sites:
            for b in targets:
                ok, detail = _existence_one(mode, phi, a, b)
                report.record(ok, (n, len(a.ground), len(b.ground)), detail=detail)
                # the criterion stated on complexes, for the identity base map
                cond = (knit(a) <= Complex(b.base, knit(b).masks) if mode == "B"
                        else nerve(a).masks <= nerve(b).masks and (len(b.ground) or not len(a.ground)))
                brute = len(brute_force_ground_maps(mode, phi.assignment, NaiveSite.of(a),
                                                    NaiveSite.of(b))) > 0
                report.record(bool(cond) == brute, (n, len(a.ground), len(b.ground)), detail=detail)
    _random_existence(report, bounds, rng, mode, same_base=True)


def _random_existence(report, bounds, rng, mode, same_base=False):
    for _ in range(bounds.trials):
        n = int(rng.integers(1, min(bounds.random_max_base, 3) + 1))
        a = random_site(bounds, n, int(rng.integers(0, 5)), rng)
        if same_base:
            b = random_site(bounds, n, int(rng.integers(0, 5)), rng, prefix="t")
            phi = BaseMap.identity(a.base)
        elif rng.integers(0, 2):
            m, b = random_morphism(mode, rng, a, 3)
            if len(b.ground) > 4:
                b = random_site(bounds, len(b.base), 4, rng, base=b.base, prefix="t")
            phi = m.base_map
        else:
            J = Base(tuple(f"j{k + 1}" for k in range(int(rng.integers(1, 4)))))
            b = random_site(bounds, len(J), int(rng.integers(0, 5)), rng, base=J, prefix="t")
            phi = random_base_map(rng, a.base, J)
        ok, detail = _existence_one(mode, phi, a, b)
        report.record(ok, (len(a.base), len(a.ground), len(b.ground)), True, detail)


@_check("BG_EXISTS", "a BG-map exists iff the knit of the source lies in the knit of the target")
def _bg_exists(report, bounds, rng):
    _same_base_existence(report, bounds, rng, "B")


@_check("SG_EXISTS", "an SG-map exists iff the nerve of the source lies in the nerve of the target")
def _sg_exists(report, bounds, rng):
    _same_base_existence(report, bounds, rng, "S")


@_check("BS_EXISTS", "a base map extends to a B-map (S-map) iff it maps knit into knit (nerve into nerve)")
def _bs_exists(report, bounds, rng):
    limit_n = min(bounds.max_base, 2)
    limit_m = min(bounds.max_ground, 3)
    families = {n: _small_sites(n, limit_m) for n in range(1, limit_n + 1)}
    targets = {}
    for n in range(1, limit_n + 1):
        J = Base(tuple(f"j{k + 1}" for k in range(n)))
        targets[n] = _small_sites(n, limit_m, "t", J)
    for na, sources in families.items():
        for nb, tgts in targets.items():
            phis = [BaseMap(agents(na), tgts[0].base, p)
                    for p in itertools.product(range(nb), repeat=na)]
            for a in sources:
                for b in tgts:
                    for phi in phis:
                        for mode in ("B", "S"):
                            ok, detail = _existence_one(mode, phi, a, b)
                            report.record(ok, (na, nb, len(a.ground), len(b.ground)), detail=detail)
    for mode in ("B", "S"):
        _random_existence(report, bounds, rng, mode)


@_check("WITNESS", "constructed witnesses are valid and exist exactly when some map exists")
def _witness(report, bounds, rng):
    for mode in ("B", "S"):
        for _ in range(max(bounds.trials, 1)):
            n = int(rng.integers(1, min(bounds.random_max_base, 3) + 1))
            a = random_site(bounds, n, int(rng.integers(0, bounds.max_ground + 1)), rng)
            J = Base(tuple(f"j{k + 1}" for k in range(int(rng.integers(1, 4)))))
            b = random_site(bounds, len(J), int(rng.integers(0, bounds.max_ground + 1)), rng,
                            base=J, prefix="t")
            phi = random_base_map(rng, a.base, J)
            ok, detail = _existence_one(mode, phi, a, b)
            report.record(ok, (len(a.base), len(J), len(a.ground), len(b.ground)), True, detail)


# Characterizations of morphism classes.

def _profiles_array(n: int, m: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(range(1 << m), repeat=n)), dtype=np.int64)


@_check("BG_CHAR", "same-ground maps: the per-agent definition agrees with the parting equation")
def _bg_char(report, bounds, rng):
    limit_n = min(bounds.max_base, 3)
    limit_m = min(bounds.max_ground, 3)
    # Vectorized sweep: library partings and hat on one side, per-agent unions of
    # the raw profile on the other, for every target site at once.
    for m in range(limit_m + 1):
        ground = states(m)
        site_cache = {}
        for nb in range(1, limit_n + 1):
            profs = _profiles_array(nb, m)
            J = Base(tuple(f"j{k + 1}" for k in range(nb)))
            sites_b = [PSite(J, ground, tuple(int(v) for v in row)) for row in profs]
            site_cache[nb] = (J, profs, np.array([s.partings for s in sites_b],
                                                 dtype=np.int64).reshape(len(sites_b), m))
        for na in range(1, limit_n + 1):
            I = agents(na)
            for prof_a in itertools.product(range(1 << m), repeat=na):
                a = PSite(I, ground, prof_a)
                for nb in range(1, limit_n + 1):
                    J, profs_b, parts_b = site_cache[nb]
                    for phi_t in itertools.product(range(nb), repeat=na):
                        phi = BaseMap(I, J, phi_t)
                        lhs = np.array([phi.hat(p) for p in a.partings], dtype=np.int64)
                        union = np.zeros(nb, dtype=np.int64)
                        for i, j in enumerate(phi_t):
                            union[j] |= prof_a[i]
                        for mode in ("B", "S"):
                            if mode == "B":
                                by_parting = (parts_b == lhs).all(axis=1)
                                by_def = (profs_b == union).all(axis=1)
                            else:
                                by_parting = ((lhs & ~parts_b) == 0).all(axis=1)
                                by_def = ((union & ~profs_b) == 0).all(axis=1)
                            bad = np.nonzero(by_parting != by_def)[0]
                            report.instances += len(by_def)
                            report.exhaustive += len(by_def)
                            key = str((na, nb, m))
                            report.by_size[key] = report.by_size.get(key, 0) + len(by_def)
                            if len(bad):
                                report.failures += len(bad)
                                if report.counterexample is None:
                                    b = PSite(J, ground, tuple(int(v) for v in profs_b[bad[0]]))
                                    report.counterexample = {"mode": mode, "phi": phi.as_dict(),
                                                             "a": _describe(a), "b": _describe(b)}
    # The library's own same-ground checker against the naive definition.
    for m in range(min(limit_m, 3) + 1):
        ground = states(m)
        for na in range(1, min(limit_n, 2) + 1):
            for nb in range(1, min(limit_n, 2) + 1):
                J = Base(tuple(f"j{k + 1}" for k in range(nb)))
                targets = list(enumerate_sites(nb, m, J, ground))
                naive_t = [NaiveSite.of(b) for b in targets]
                ident = {x: x for x in ground.states}
                for a in enumerate_sites(na, m, agents(na), ground):
                    na_site = NaiveSite.of(a)
                    for phi_t in itertools.product(range(nb), repeat=na):
                        phi = BaseMap(a.base, J, phi_t)
                        phi_d = phi.as_dict()
                        for b, nbs in zip(targets, naive_t):
                            for mode in ("B", "S"):
                                lib = check_p_map(mode, phi, a, b).holds
                                lib_def = check_pair_map_definitional(
                                    mode, PairMap(phi, GroundMap.identity(ground)), a, b).holds
                                naive = naive_is_pair_map(mode, phi_d, ident, na_site, nbs)
                                report.record(lib == lib_def == naive, (na, nb, m),
                                              detail={"mode": mode, "phi": phi_d,
                                                      "a": _describe(a), "b": _describe(b)})


def _pair_char_one(mode, m: PairMap, a, b, report, size, sampled):
    forms = pair_map_forms(mode, m, a, b)
    naive = naive_is_pair_map(mode, m.base_map.as_dict(), m.ground_map.as_dict(),
                              NaiveSite.of(a), NaiveSite.of(b))
    ok = len(set(forms.values())) == 1 and forms["parting"] == naive
    report.record(ok, size, sampled, {"mode": mode, "forms": forms, "naive": naive,
                                      "phi": m.base_map.as_dict(), "f": m.ground_map.as_dict(),
                                      "a": _describe(a), "b": _describe(b)})


@_check("PAIR_CHAR", "the five forms of the general B/S condition agree")
def _pair_char(report, bounds, rng):
    limit_n = min(bounds.max_base, 2)
    limit_m = min(bounds.max_ground, 2)
    for na in range(1, limit_n + 1):
        for nb in range(1, limit_n + 1):
            J = Base(tuple(f"j{k + 1}" for k in range(nb)))
            sources = _small_sites(na, limit_m)
            targets = _small_sites(nb, limit_m, "t", J)
            for a in sources:
                for b in targets:
                    for phi_t in itertools.product(range(nb), repeat=na):
                        phi = BaseMap(a.base, J, phi_t)
                        for f_t in itertools.product(range(len(b.ground)), repeat=len(a.ground)):
                            pm = PairMap(phi, GroundMap(a.ground, b.ground, f_t))
                            for mode in ("B", "S"):
                                _pair_char_one(mode, pm, a, b, report,
                                               (na, nb, len(a.ground), len(b.ground)), False)
    for _ in range(bounds.trials):
        a = _random_size_site(bounds, rng)
        mode = "B" if rng.integers(0, 2) else "S"
        pm, b = random_morphism(mode, rng, a)
        if rng.integers(0, 2):
            other = random_pair_map(rng, a, b)
            pm = other if other is not None else pm
        for md in ("B", "S"):
            _pair_char_one(md, pm, a, b, report, (len(a.base), len(b.base)), True)


def _g_forms_one(report, f, a, b, size, sampled):
    ok = True
    detail = {"f": f.as_dict(), "a": _describe(a), "b": _describe(b)}
    naive_a, naive_b = NaiveSite.of(a), NaiveSite.of(b)
    ident = {i: i for i in a.base.agents}
    for mode, key in (("B", "BMAP1"), ("S", "SMAP1")):
        if report.id != key:
            continue
        forms = g_map_forms(mode, f, a, b)
        naive = naive_is_pair_map(mode, ident, f.as_dict(), naive_a, naive_b)
        ok = len(set(forms.values())) == 1 and forms["definition"] == naive
        detail["forms"] = forms
    report.record(ok, size, sampled, detail)


def _g_forms_sweep(report, bounds, rng):
    limit_n = min(bounds.max_base, 2)
    for n in range(1, limit_n + 1):
        limit_m = min(bounds.max_ground, 3 if n == 1 else 2)
        sources = _small_sites(n, limit_m)
        targets = _small_sites(n, limit_m, "t")
        for a in sources:
            for b in targets:
                for f_t in itertools.product(range(len(b.ground)), repeat=len(a.ground)):
                    f = GroundMap(a.ground, b.ground, f_t)
                    _g_forms_one(report, f, a, b, (n, len(a.ground), len(b.ground)), False)
    for _ in range(bounds.trials):
        a = _random_size_site(bounds, rng)
        b = random_site(bounds, len(a.base), int(rng.integers(1, bounds.random_max_ground + 1)),
                        rng, prefix="t")
        if rng.integers(0, 2):  # force a valid map some of the time
            mode = "B" if report.id == "BMAP1" else "S"
            f = find_ground_witness(mode, BaseMap.identity(a.base), a, b)
            if f is None:
                f = random_pair_map(rng, a, b)
                f = f.ground_map if f is not None else None
        else:
            pm = random_pair_map(rng, a, b)
            f = pm.ground_map if pm is not None else None
        if f is not None:
            _g_forms_one(report, f, a, b, (len(a.base), len(a.ground), len(b.ground)), True)


@_check("BMAP1", "equivalent conditions for a BG-map agree")
def _bmap1(report, bounds, rng):
    _g_forms_sweep(report, bounds, rng)


@_check("SMAP1", "equivalent conditions for an SG-map agree")
def _smap1(report, bounds, rng):
    _g_forms_sweep(report, bounds, rng)


@_check("IMAGE2", "same-ground maps transport knits and nerves as stated")
def _image2(report, bounds, rng):
    limit_n = min(bounds.max_base, 2)
    limit_m = min(bounds.max_ground, 3)
    for m in range(limit_m + 1):
        ground = states(m)
        for na in range(1, limit_n + 1):
            for nb in range(1, limit_n + 1):
                J = Base(tuple(f"j{k + 1}" for k in range(nb)))
                targets = list(enumerate_sites(nb, m, J, ground))
                for a in enumerate_sites(na, m, agents(na), ground):
                    for phi_t in itertools.product(range(nb), repeat=na):
                        phi = BaseMap(a.base, J, phi_t)
                        for b in targets:
                            _image2_one(report, phi, a, b, (na, nb, m))


def _image2_one(report, phi, a, b, size):
    def hat_family(fam):
        return {frozenset(phi(i) for i in s) for s in fam}

    na_, nb_ = NaiveSite.of(a), NaiveSite.of(b)
    detail = {"phi": phi.as_dict(), "a": _describe(a), "b": _describe(b)}
    if check_p_map("B", phi, a, b):
        ok = (hat_family(na_.knit()) == nb_.knit() and hat_family(na_.nerve()) == nb_.nerve())
        report.record(ok, size, detail=detail)
    if check_p_map("S", phi, a, b):
        kb, ka = nb_.knit(), na_.knit()
        ok = (hat_family(na_.nerve()) <= nb_.nerve()
              and all(any(frozenset(phi(i) for i in s) <= t for s in ka) for t in kb))
        report.record(ok, size, detail=detail)


@_check("COMPOSITION", "composites of B-maps are B-maps and of S-maps are S-maps")
def _composition(report, bounds, rng):
    for mode in ("B", "S"):
        for _ in range(bounds.trials):
            sites, maps = random_chain(mode, rng, bounds, 2)
            a, _, c = sites
            comp = compose_pair(maps[1], maps[0])
            naive = naive_is_pair_map(mode, comp.base_map.as_dict(), comp.ground_map.as_dict(),
                                      NaiveSite.of(a), NaiveSite.of(c))
            ok = check_pair_map(mode, comp, a, c).holds and naive
            report.record(ok, (mode, len(a.base)), True, {"mode": mode, "a": _describe(a)})


# Canonical sites.

def _canon_knit_one(K: Complex) -> bool:
    a = canonical_site(K.base, K)
    if knit(a) != K:
        return False
    naive = NaiveSite.of(a)
    for x in a.ground.states:
        members = set() if x == "∅" else set(x.split(SEPARATOR))
        if naive.parting(x) != frozenset(members):
            return False
    return is_simple(a)


@_check("CANON_KNIT", "the knit of a canonical site is its family, and simple sites are canonical up to isotopy")
def _canon_knit(report, bounds, rng):
    for n in range(0, min(bounds.max_base, 4) + 1):
        for K in enumerate_complexes(n):
            report.record(_canon_knit_one(K), (n,), detail=K.to_lists())
    if bounds.max_base >= 5:  # 2^32 families: sample instead
        base = agents(5)
        for _ in range(bounds.trials):
            K = random_complex(rng, base)
            report.record(_canon_knit_one(K), (5,), True, K.to_lists())
    for n, m in _sizes(bounds.max_base, bounds.max_ground, 3, 3):
        for a in enumerate_sites(n, m):
            if is_simple(a):
                c = canonical_site(a.base, knit(a))
                ok = is_isotopy(pi_bar(a), a, c)
                report.record(ok, ("simple", n, m), detail=_describe(a))


@_check("CANON_NERVE", "canonical sites on simplicial complexes are perfect with that nerve")
def _canon_nerve(report, bounds, rng):
    for n in range(0, min(bounds.max_base, 4) + 1):
        for E in enumerate_simplicial(n):
            a = canonical_site(E.base, E)
            ok = nerve(a) == E and is_perfect(a) and naive_family(E) == NaiveSite.of(a).nerve()
            report.record(ok, (n,), detail=E.to_lists())


@_check("CANON_WITH_NERVE", "the canonical sites with a given nerve are those between its facets and itself")
def _canon_with_nerve(report, bounds, rng):
    for n in range(0, min(bounds.max_base, 4) + 1):
        for E in enumerate_simplicial(n):
            free = len(E.masks) - len(max_elements(E).masks)
            if n == 4 and free > 8:
                continue
            sols = canonical_with_nerve(E.base, E)
            # independent count: every family between the facets and E
            naive = naive_family(E)
            facets = {s for s in naive if not any(s < t for t in naive)}
            ok = len(sols) == 2 ** (len(naive) - len(facets))
            perfect = []
            for A in sols:
                fam = naive_family(A)
                site = canonical_site(E.base, A)
                ok = ok and facets <= fam <= naive and nerve(site) == E
                if is_perfect(site):
                    perfect.append(A)
            ok = ok and perfect == [E] and sols[-1] == E
            report.record(ok, (n,), detail=E.to_lists())


@_check("SIMPLE_CANON", "a site is simple iff its corestricted parting map is an isotopy onto its canonical site")
def _simple_canon(report, bounds, rng):
    for n, m in _sizes(bounds.max_base, bounds.max_ground, 3, 3):
        for a in enumerate_sites(n, m):
            c = canonical_site(a.base, knit(a))
            naive_simple = len({NaiveSite.of(a).parting(x) for x in a.ground.states}) == m
            ok = is_simple(a) == naive_simple == is_isotopy(pi_bar(a), a, c)
            report.record(ok, (n, m), detail=_describe(a))


@_check("KC_IDENTITY", "Knit after Canon is the identity on formations and formation maps")
def _kc_identity(report, bounds, rng):
    for na in range(0, min(bounds.max_base, 3) + 1):
        for nb in range(1, min(bounds.max_base, 3) + 1):
            J = Base(tuple(f"j{k + 1}" for k in range(nb)))
            for X in enumerate_complexes(na):
                for phi_t in itertools.product(range(nb), repeat=na):
                    phi = BaseMap(X.base, J, phi_t)
                    c = CMap(phi, X, c_image(phi, X))
                    report.record(knit_after_canon_is_identity(c), (na, nb), detail=X.to_lists())
    for _ in range(bounds.trials):
        I = agents(int(rng.integers(1, 5)))
        J = Base(tuple(f"j{k + 1}" for k in range(int(rng.integers(1, 5)))))
        X = random_complex(rng, I)
        phi = random_base_map(rng, I, J)
        Y = c_image(phi, X) | random_complex(rng, J)
        c = CMap(phi, X, Y)
        report.record(knit_after_canon_is_identity(c), (len(I), len(J)), True, X.to_lists())


# Delegation.

def _naive_friendly(E: set, i0, j0) -> bool:
    return all(s | {j0} in E for s in E if i0 in s)


def _naive_simplicial_deleg(E: set, i0, j0) -> bool:
    def delta(s):
        return frozenset(j0 if i == i0 else i for i in s)
    return all(delta(s) in E for s in E)


@_check("DELEG_CHAR", "the three characterizations of friendly (and two of simplicial) delegation agree")
def _deleg_char(report, bounds, rng):
    for n in range(2, min(bounds.max_base, 4) + 1):
        for E in enumerate_simplicial(n):
            fam = naive_family(E)
            for i0, j0 in itertools.permutations(E.base.agents, 2):
                d = Delegation(E.base, i0, j0)
                fr = is_friendly_delegation(E, d).holds  # raises on internal disagreement
                si = is_simplicial_delegation(E, d).holds
                ok = fr == _naive_friendly(fam, i0, j0) and si == _naive_simplicial_deleg(fam, i0, j0)
                report.record(ok, (n,), detail={"E": E.to_lists(), "from": i0, "to": j0})


@_check("DELEG_SIMPLICIAL", "friendly delegations are simplicial and fix the complex without the delegator")
def _deleg_simplicial(report, bounds, rng):
    for n in range(2, min(bounds.max_base, 4) + 1):
        for E in enumerate_simplicial(n):
            for i0, j0 in itertools.permutations(E.base.agents, 2):
                d = Delegation(E.base, i0, j0)
                minus = complex_minus(E, i0)
                fixed = c_image(delegation_fn(d), minus) == Complex(E.base, minus.masks)
                implied = complex_implies(E, i0, j0)
                ok = fixed and implied.masks <= E.masks and minus.masks <= implied.masks
                if is_friendly_delegation(E, d):
                    ok = ok and is_simplicial_delegation(E, d).holds
                report.record(ok, (n,), detail={"E": E.to_lists(), "from": i0, "to": j0})


@_check("SCDELTA", "the four withdrawal conditions agree")
def _scdelta(report, bounds, rng):
    for n, m in _sizes(bounds.max_base, bounds.max_ground, 4, 3, min_base=2):
        for a in enumerate_sites(n, m):
            na_ = NaiveSite.of(a)
            for i0, j0 in itertools.permutations(a.base.agents, 2):
                d = Delegation(a.base, i0, j0)
                v = check_withdrawal_equivalences(a, d)  # raises on disagreement
                ok = v.holds == (na_.aspirations[i0] <= na_.aspirations[j0])
                report.record(ok, (n, m), detail={"a": _describe(a), "from": i0, "to": j0})
    for _ in range(bounds.trials):
        a = _random_size_site(bounds, rng, min_base=2)
        i0, j0 = (a.base.agents[int(k)] for k in rng.choice(len(a.base), 2, replace=False))
        v = check_withdrawal_equivalences(a, Delegation(a.base, i0, j0))
        na_ = NaiveSite.of(a)
        report.record(v.holds == (na_.aspirations[i0] <= na_.aspirations[j0]),
                      (len(a.base), len(a.ground)), True, {"a": _describe(a)})


@_check("FOUNDATION", "a delegation is friendly iff some site with that nerve has nested aspirations")
def _foundation(report, bounds, rng):
    for n in range(2, min(bounds.max_base, 3) + 1):
        by_nerve: dict = {}
        for m in range(min(bounds.max_ground, 3) + 1):
            for a in enumerate_sites(n, m):
                by_nerve.setdefault(nerve(a).masks, []).append(a.profile)
        for E in enumerate_simplicial(n):
            family = by_nerve.get(E.masks, [])
            for i0, j0 in itertools.permutations(E.base.agents, 2):
                d = Delegation(E.base, i0, j0)
                ki, kj = d.source_index, d.target_index
                exists = any(p[ki] & ~p[kj] == 0 for p in family)
                witness = friendly_foundation_witness(E, d)
                friendly = is_friendly_delegation(E, d).holds
                ok = friendly == exists == (witness is not None)
                if witness is not None:
                    ok = ok and nerve(witness) == E
                report.record(ok, (n,), detail={"E": E.to_lists(), "from": i0, "to": j0})


# Functors, naturality, category laws.

@_check("FUNCTOR_LAWS", "Knit, Nerve and Canon preserve identities and composition")
def _functor_laws(report, bounds, rng):
    for tag, mode in ((FunctorTag.KNIT, "B"), (FunctorTag.NERVE, "S")):
        for _ in range(bounds.trials):
            sites, maps = random_chain(mode, rng, bounds, 2)
            v = check_functor_laws(tag, sites[0], ((maps[0], sites[1]), (maps[1], sites[2])))
            report.record(v.holds, (tag.value,), True, {"a": _describe(sites[0])})
    for _ in range(bounds.trials):
        I = agents(int(rng.integers(0, 5)))
        X = random_complex(rng, I)
        J = Base(tuple(f"j{k + 1}" for k in range(int(rng.integers(1, 4)))))
        K = Base(tuple(f"k{k + 1}" for k in range(int(rng.integers(1, 4)))))
        phi, psi = random_base_map(rng, I, J), random_base_map(rng, J, K)
        Y = c_image(phi, X) | random_complex(rng, J)
        Z = c_image(psi, Y) | random_complex(rng, K)
        v = check_functor_laws(FunctorTag.CANON, X, (CMap(phi, X, Y), CMap(psi, Y, Z)))
        report.record(v.holds, ("canon",), True, {"X": X.to_lists()})


@_check("NATURALITY", "the parting maps form natural transformations")
def _naturality(report, bounds, rng):
    for mode in ("B", "S"):
        for _ in range(bounds.trials):
            a = _random_size_site(bounds, rng)
            m, b = random_morphism(mode, rng, a)
            v = check_naturality(mode, m, a, b)
            report.record(v.holds, (mode,), True, {"a": _describe(a), "b": _describe(b)})


@_check("CATEGORY_LAWS", "identities absorb and composition associates")
def _category_laws(report, bounds, rng):
    for mode in ("B", "S"):
        for _ in range(bounds.trials):
            sites, maps = random_chain(mode, rng, bounds, 3)
            v = check_category_laws([(mode, tuple(sites), tuple(maps))])
            report.record(v.holds, (mode,), True, {"a": _describe(sites[0])})


@_check("EQUIVALENCE", "every site is linked to its canonical site as the equivalence theorems state")
def _equivalence(report, bounds, rng):
    for n, m in _sizes(bounds.max_base, bounds.max_ground, 2, 3):
        for a in enumerate_sites(n, m):
            for mode in ("B", "S"):
                report.record(check_equivalence_witness(mode, a).holds, (mode, n, m),
                              detail=_describe(a))
    for _ in range(bounds.trials):
        a = _random_size_site(bounds, rng)
        for mode in ("B", "S"):
            report.record(check_equivalence_witness(mode, a).holds, (mode,), True, _describe(a))


def catalog_ids() -> list[str]:
    return list(CATALOG)


__all__ = [
    "OracleBounds", "Report", "NaiveSite", "CATALOG", "catalog_ids", "verify_proposition",
    "enumerate_functions", "enumerate_sites", "enumerate_complexes", "enumerate_simplicial",
    "random_site", "random_morphism", "random_pair_map", "random_chain", "random_complex",
    "random_simplicial", "random_base_map", "brute_force_ground_maps", "naive_is_pair_map",
    "make_rng",
]
