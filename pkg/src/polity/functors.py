"""Knit, Nerve and Canon acting on morphisms, and the parting transformations.

``KNIT`` sends a B-map ``(phi, f): a -> b`` to the SC-map
``phi: (I, knit a) -> (J, knit b)``; ``NERVE`` does the same for S-maps and
nerves; ``CANON`` sends an SC-map ``phi: X -> Y`` to the pair map
``(phi, s -> hat(phi)(s))`` between canonical sites.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .canonical import canonical_site, coalition_ground, encode_mask
from .combinatorics import Complex
from .errors import InputError
from .morphisms import (
    BaseMap,
    CMap,
    GroundMap,
    PairMap,
    Verdict,
    are_g_isomorphic,
    check_c_map,
    check_g_map,
    check_pair_map,
    compose_c,
    compose_pair,
)
from .site_core import PSite, effective_site, knit, nerve


class FunctorTag(enum.Enum):
    KNIT = "knit"
    NERVE = "nerve"
    CANON = "canon"


def _tag(tag) -> FunctorTag:
    if isinstance(tag, FunctorTag):
        return tag
    try:
        return FunctorTag(str(tag).lower())
    except ValueError:
        raise InputError(f"unknown functor {tag!r}") from None


def functor_on_object(tag, obj):
    tag = _tag(tag)
    if tag is FunctorTag.CANON:
        if not isinstance(obj, Complex):
            raise InputError("Canon acts on formations")
        return canonical_site(obj.base, obj)
    if not isinstance(obj, PSite):
        raise InputError(f"{tag.value} acts on sites")
    return knit(obj) if tag is FunctorTag.KNIT else nerve(obj)


def functor_on_morphism(tag, m, a: PSite | None = None, b: PSite | None = None):
    """Image of a morphism; the input is validated for the functor first."""
    tag = _tag(tag)
    if tag is FunctorTag.CANON:
        if not isinstance(m, CMap):
            raise InputError("Canon acts on formation maps")
        verdict = check_c_map("S", m.base_map, m.source, m.target)
        if not verdict:
            raise InputError(f"not an SC-map: {verdict.counterexample.detail}")
        src, dst = coalition_ground(m.source), coalition_ground(m.target)
        phi = m.base_map
        ground_map = GroundMap(src, dst, tuple(
            dst.index(encode_mask(phi.codomain, phi.hat(s))) for s in m.source.ordered_masks()))
        return PairMap(phi, ground_map)
    if a is None or b is None:
        raise InputError(f"{tag.value} needs the morphism's endpoints")
    mode = "B" if tag is FunctorTag.KNIT else "S"
    verdict = check_pair_map(mode, m, a, b)
    if not verdict:
        raise InputError(f"not a {mode}-map: {verdict.counterexample.detail}")
    src, dst = functor_on_object(tag, a), functor_on_object(tag, b)
    out = CMap(m.base_map, src, dst)
    if not check_c_map("S", out.base_map, src, dst):
        raise AssertionError("functor image is not an SC-map")
    return out


def pi_bar(a: PSite) -> GroundMap:
    """The parting map corestricted to the knit, as a ground map into ``ca(I, knit a)``."""
    target = coalition_ground(knit(a))
    return GroundMap(a.ground, target,
                     tuple(target.index(encode_mask(a.base, p)) for p in a.partings))


def pi_star(a: PSite) -> GroundMap:
    """The parting map on the effective ground, into ``ca(I, nerve a)``."""
    eff = effective_site(a)
    target = coalition_ground(nerve(a))
    return GroundMap(eff.ground, target,
                     tuple(target.index(encode_mask(a.base, p)) for p in eff.partings))


def restrict_to_effective(m: PairMap, a: PSite, b: PSite) -> PairMap:
    """``(phi, f_*)``: an S-map restricted to ``a_* -> b_*``."""
    ea, eb = effective_site(a), effective_site(b)
    f = m.ground_map
    out = []
    for x in ea.ground.states:
        y = f(x)
        if y not in eb.ground:
            raise InputError(f"state {x!r} is desired but maps to undesired {y!r}")
        out.append(eb.ground.index(y))
    return PairMap(m.base_map, GroundMap(ea.ground, eb.ground, tuple(out)))


@dataclass(frozen=True)
class NaturalitySquare:
    """Both legs of a naturality square, with their shared endpoints."""

    source: PSite
    target: PSite
    via_functor: PairMap
    via_morphism: PairMap

    @property
    def literal(self) -> bool:
        return self.via_functor == self.via_morphism


def naturality_square(mode: str, m: PairMap, a: PSite, b: PSite) -> NaturalitySquare:
    mode = mode.upper()
    if mode == "B":
        if not check_pair_map("B", m, a, b):
            raise InputError("naturality in mode B needs a B-map")
        top = functor_on_morphism(FunctorTag.CANON, functor_on_morphism(FunctorTag.KNIT, m, a, b))
        left = PairMap(BaseMap.identity(a.base), pi_bar(a))
        right = PairMap(BaseMap.identity(b.base), pi_bar(b))
        return NaturalitySquare(a, canonical_site(b.base, knit(b)),
                                compose_pair(top, left), compose_pair(right, m))
    if mode == "S":
        if not check_pair_map("S", m, a, b):
            raise InputError("naturality in mode S needs an S-map")
        top = functor_on_morphism(FunctorTag.CANON, functor_on_morphism(FunctorTag.NERVE, m, a, b))
        left = PairMap(BaseMap.identity(a.base), pi_star(a))
        right = PairMap(BaseMap.identity(b.base), pi_star(b))
        return NaturalitySquare(effective_site(a), canonical_site(b.base, nerve(b)),
                                compose_pair(top, left),
                                compose_pair(right, restrict_to_effective(m, a, b)))
    raise InputError(f"mode must be 'B' or 'S', got {mode!r}")


def check_naturality(mode: str, m: PairMap, a: PSite, b: PSite) -> Verdict:
    """Does the naturality square for ``m`` commute?

    Mode B asks for literal equality of the two composite pair maps.  In mode
    S the two legs ``a_* -> ca(J, nerve b)`` share their base map and are both
    S-maps, but their ground maps may differ (a single S-map can enlarge
    partings), so only the base-map identity and validity of both legs are
    required.  :func:`naturality_square` exposes the literal comparison.
    """
    mode = mode.upper()
    sq = naturality_square(mode, m, a, b)
    u, v = sq.via_functor, sq.via_morphism
    if mode == "B":
        for x, (p, q) in enumerate(zip(u.ground_map.assignment, v.ground_map.assignment)):
            if p != q:
                g = u.ground_map.codomain
                return Verdict.fail("state", a.ground.states[x], "source",
                                    f"legs send it to {g.states[p]!r} and {g.states[q]!r}")
        if u.base_map != v.base_map:
            return Verdict.fail("agent", a.base.agents[0], "source", "base maps differ")
        return Verdict.ok()
    for name, leg in (("functor", u), ("morphism", v)):
        verdict = check_pair_map("S", leg, sq.source, sq.target)
        if not verdict:
            c = verdict.counterexample
            return Verdict.fail(c.kind, c.item, c.side, f"{name} leg is not an S-map: {c.detail}")
    for i, (p, q) in enumerate(zip(u.base_map.assignment, v.base_map.assignment)):
        if p != q:
            return Verdict.fail("agent", a.base.agents[i], "source", "base maps differ")
    return Verdict.ok()


# --- laws --------------------------------------------------------------------------

def _pair_equal(m1: PairMap, m2: PairMap) -> bool:
    return m1 == m2


def check_category_laws(sample) -> Verdict:
    """Identity absorption and associativity on composable triples.

    ``sample`` yields ``(mode, (a, b, c, d), (m1, m2, m3))`` with
    ``m1: a -> b``, ``m2: b -> c``, ``m3: c -> d``.
    """
    for k, (mode, sites, maps) in enumerate(sample):
        a, b, c, d = sites
        m1, m2, m3 = maps
        for m, s, t in ((m1, a, b), (m2, b, c), (m3, c, d)):
            if not check_pair_map(mode, m, s, t):
                raise InputError(f"sample {k}: morphism is not a {mode}-map")
        id_a = PairMap.identity(a)
        id_b = PairMap.identity(b)
        if not _pair_equal(compose_pair(m1, id_a), m1):
            return Verdict.fail("coalition", (k,), "source", "m . id != m")
        if not _pair_equal(compose_pair(id_b, m1), m1):
            return Verdict.fail("coalition", (k,), "source", "id . m != m")
        left = compose_pair(m3, compose_pair(m2, m1))
        right = compose_pair(compose_pair(m3, m2), m1)
        if not _pair_equal(left, right):
            return Verdict.fail("coalition", (k,), "source", "composition is not associative")
        for m, s, t in ((compose_pair(m2, m1), a, c), (left, a, d)):
            if not check_pair_map(mode, m, s, t):
                return Verdict.fail("coalition", (k,), "source",
                                    f"composite is not a {mode}-map")
    return Verdict.ok()


def check_functor_laws(tag, a: PSite | Complex, chain) -> Verdict:
    """Identity and composition laws for one functor on one composable pair.

    For ``KNIT``/``NERVE``: ``chain = ((m1, b), (m2, c))`` with ``m1: a -> b``,
    ``m2: b -> c``.  For ``CANON``: ``chain = (c1, c2)`` with ``c1: a -> Y``,
    ``c2: Y -> Z`` formation maps.
    """
    tag = _tag(tag)
    if tag is FunctorTag.CANON:
        c1, c2 = chain
        X = a
        ident = functor_on_morphism(tag, CMap.identity(X))
        if ident != PairMap.identity(canonical_site(X.base, X)):
            return Verdict.fail("coalition", (), "source", "image of the identity is not the identity")
        lhs = functor_on_morphism(tag, compose_c(c2, c1))
        rhs = compose_pair(functor_on_morphism(tag, c2), functor_on_morphism(tag, c1))
        if lhs != rhs:
            return Verdict.fail("coalition", (), "source", "composition is not preserved")
        return Verdict.ok()
    (m1, b), (m2, c) = chain
    ident = functor_on_morphism(tag, PairMap.identity(a), a, a)
    if ident != CMap.identity(functor_on_object(tag, a)):
        return Verdict.fail("coalition", (), "source", "image of the identity is not the identity")
    lhs = functor_on_morphism(tag, compose_pair(m2, m1), a, c)
    rhs = compose_c(functor_on_morphism(tag, m2, b, c), functor_on_morphism(tag, m1, a, b))
    if lhs != rhs:
        return Verdict.fail("coalition", (), "source", "composition is not preserved")
    return Verdict.ok()


def check_equivalence_witness(mode: str, a: PSite) -> Verdict:
    """Instance content of the equivalence theorems for one site.

    B: ``a`` and ``ca(I, knit a)`` have equal knits, are BG-isomorphic, and the
    corestricted parting map is a BG-map between them.  S: the same for
    ``a_*`` and ``ca(I, nerve a)`` with nerves and the effective parting map.
    """
    mode = mode.upper()
    if mode == "B":
        c = canonical_site(a.base, knit(a))
        if knit(c) != knit(a):
            return Verdict.fail("coalition", (), "target", "canonical site has a different knit")
        f, src, tag = pi_bar(a), a, "BG"
    elif mode == "S":
        src = effective_site(a)
        c = canonical_site(a.base, nerve(a))
        if nerve(c) != nerve(a):
            return Verdict.fail("coalition", (), "target", "canonical site has a different nerve")
        f, tag = pi_star(a), "BG"
    else:
        raise InputError(f"mode must be 'B' or 'S', got {mode!r}")
    verdict = check_g_map("B", f, src, c)
    if not verdict:
        cx = verdict.counterexample
        return Verdict.fail(cx.kind, cx.item, cx.side, f"parting map is not {tag}: {cx.detail}")
    if not are_g_isomorphic(mode, src, c):
        return Verdict.fail("coalition", (), "target", f"not {mode}G-isomorphic to its canonical site")
    return Verdict.ok()


def knit_after_canon_is_identity(c: CMap) -> bool:
    """``K(C(phi)) == phi`` and ``knit(ca(I, X)) == X`` for one formation map."""
    a = canonical_site(c.source.base, c.source)
    b = canonical_site(c.target.base, c.target)
    if knit(a) != c.source or knit(b) != c.target:
        return False
    return functor_on_morphism(FunctorTag.KNIT, functor_on_morphism(FunctorTag.CANON, c), a, b) == c
