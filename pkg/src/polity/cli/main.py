"""The ``polity`` command line.

Exit status: 0 success or the property holds, 1 the property fails or no
witness exists, 2 bad input.
"""
from __future__ import annotations

import argparse
import sys

from ..canonical import canonical_site
from ..combinatorics import Complex, bits
from ..delegation import (
    Delegation,
    complex_minus,
    delegation_fn,
    friendly_foundation_witness,
    is_friendly_delegation,
    is_simplicial_delegation,
)
from ..errors import ConsistencyError, InputError
from ..functors import FunctorTag, check_category_laws, check_functor_laws, check_naturality
from ..morphisms import (
    Verdict,
    are_g_isomorphic,
    are_pair_isomorphic,
    c_image,
    check_c_map,
    check_pair_map,
    find_ground_witness,
)
from ..oracle import (
    CATALOG,
    OracleBounds,
    make_rng,
    random_chain,
    random_morphism,
    random_site,
    verify_proposition,
)
from ..site_core import knit, nerve
from . import io
from .fixtures import DEMOS, write_demo
from .scenarios import project_site, winning_viable

OK, NEGATIVE, BAD_INPUT = 0, 1, 2


def _emit(doc, args) -> None:
    text = io.dumps(doc)
    if getattr(args, "output", None):
        io.write_json(doc, args.output)
    else:
        sys.stdout.write(text)


def _site(path):
    return io.load_site(io.read_json(path))


def _formation(path):
    return io.load_formation(io.read_json(path))


def _verdict(v: Verdict, args) -> int:
    _emit(v.to_dict(), args)
    return OK if v.holds else NEGATIVE


def cmd_knit(args):
    _emit(io.formation_doc(knit(_site(args.site))), args)
    return OK


def nerve_dot(E: Complex) -> str:
    lines = ["graph nerve {"]
    for i in E.base.agents:
        if E.base.mask_of([i]) in E.masks:
            lines.append(f'  "{i}";')
    for m in E.ordered_masks():
        if m.bit_count() == 2:
            i, j = (E.base.agents[k] for k in bits(m))
            lines.append(f'  "{i}" -- "{j}";')
    higher = [m for m in E.ordered_masks() if m.bit_count() > 2]
    for m in higher:
        lines.append(f'  // simplex {{{",".join(E.base.labels_of(m))}}}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_nerve(args):
    E = nerve(_site(args.site))
    if args.dot:
        sys.stdout.write(nerve_dot(E))
    else:
        _emit(io.formation_doc(E), args)
    return OK


def cmd_canon(args):
    K = _formation(args.formation)
    _emit(io.site_doc(canonical_site(K.base, K)), args)
    return OK


def cmd_check(args):
    kind = args.kind
    mode = "B" if kind[0] == "b" else "S"
    mapdoc = io.read_json(args.map) if args.map else {}
    if kind in ("bc", "sc"):
        X, Y = _formation(args.source), _formation(args.target)
        c = io.load_c_map(mapdoc, X, Y)
        return _verdict(check_c_map(mode, c.base_map, X, Y), args)
    a, b = _site(args.source), _site(args.target)
    m = io.load_map(mapdoc, a, b)
    if kind in ("bp", "sp"):
        if a.ground != b.ground:
            raise InputError("BP/SP maps need sites with the same ground")
        if "ground_map" in mapdoc:
            raise InputError("BP/SP maps take no ground map", "$.ground_map")
    if kind in ("bg", "sg"):
        if a.base != b.base:
            raise InputError("BG/SG maps need sites with the same base")
        if "base_map" in mapdoc:
            raise InputError("BG/SG maps take no base map", "$.base_map")
    return _verdict(check_pair_map(mode, m, a, b), args)


def cmd_find(args):
    a, b = _site(args.source), _site(args.target)
    mapdoc = io.read_json(args.map) if args.map else {}
    if "ground_map" in io._obj(mapdoc, "$", (), ("base_map",)):
        raise InputError("find takes only a base map")
    phi = io.load_base_map(mapdoc.get("base_map"), a.base, b.base)
    f = find_ground_witness(args.kind.upper(), phi, a, b)
    if f is None:
        sys.stdout.write("NONE\n")
        return NEGATIVE
    _emit({"base_map": phi.as_dict(), "ground_map": f.as_dict()}, args)
    return OK


def cmd_iso(args):
    a, b = _site(args.a), _site(args.b)
    kind = args.kind
    if kind in ("bg", "sg"):
        holds = are_g_isomorphic(kind[0].upper(), a, b)
        _emit({"kind": kind, "isomorphic": holds}, args)
        return OK if holds else NEGATIVE
    found = are_pair_isomorphic(kind.upper(), a, b)
    doc = {"kind": kind, "isomorphic": found is not None}
    if found is not None:
        doc["base_map"] = found[0].as_dict()
        doc["inverse"] = found[1].as_dict()
    _emit(doc, args)
    return OK if found is not None else NEGATIVE


def cmd_delegation(args):
    E = _formation(args.formation)
    d = Delegation(E.base, args.source, args.target)
    simp = is_simplicial_delegation(E, d)
    friend = is_friendly_delegation(E, d)
    doc = {
        "simplicial": simp.holds,
        "friendly": friend.holds,
        "image": c_image(delegation_fn(d), E).to_lists(),
        "minus": complex_minus(E, d.delegating).to_lists(),
    }
    if not simp.holds:
        doc["simplicial_counterexample"] = simp.counterexample.to_dict()
    if not friend.holds:
        doc["friendly_counterexample"] = friend.counterexample.to_dict()
    witness = friendly_foundation_witness(E, d)
    if witness is not None:
        doc["foundation_witness"] = io.site_doc(witness)
    _emit(doc, args)
    return OK


def cmd_project(args):
    _emit(io.site_doc(project_site(_site(args.site), args.drop)), args)
    return OK


def cmd_winning(args):
    a = _site(args.site)
    w = io.load_weights(io.read_json(args.weights), a.base)
    out = [{"coalition": list(s.members), "weight": w.of(s)} for s in winning_viable(a, w)]
    _emit({"quota": w.quota, "total": w.total, "winning": out}, args)
    return OK if out else NEGATIVE


def _law_samples(suite: str, bounds: OracleBounds):
    rng = make_rng(bounds.seed, f"laws:{suite}")
    results = []
    for k in range(bounds.trials):
        mode = "B" if k % 2 == 0 else "S"
        if suite == "functor":
            tag = FunctorTag.KNIT if mode == "B" else FunctorTag.NERVE
            sites, maps = random_chain(mode, rng, bounds, 2)
            v = check_functor_laws(tag, sites[0], ((maps[0], sites[1]), (maps[1], sites[2])))
        elif suite == "naturality":
            n = int(rng.integers(1, bounds.random_max_base + 1))
            a = random_site(bounds, n, int(rng.integers(0, bounds.random_max_ground + 1)), rng)
            m, b = random_morphism(mode, rng, a)
            v = check_naturality(mode, m, a, b)
        else:
            sites, maps = random_chain(mode, rng, bounds, 3)
            v = check_category_laws([(mode, tuple(sites), tuple(maps))])
        results.append((mode, v))
    return results


def cmd_laws(args):
    bounds = OracleBounds(trials=args.trials, seed=args.seed)
    results = _law_samples(args.suite, bounds)
    failures = [(k, m, v) for k, (m, v) in enumerate(results) if not v.holds]
    doc = {"suite": args.suite, "seed": args.seed, "trials": args.trials,
           "passed": not failures, "failures": len(failures)}
    if failures:
        k, mode, v = failures[0]
        doc["first_failure"] = {"trial": k, "mode": mode, **v.to_dict()}
    _emit(doc, args)
    return OK if not failures else NEGATIVE


def cmd_oracle(args):
    if args.list:
        _emit({cid: desc for cid, (desc, _) in CATALOG.items()}, args)
        return OK
    if not args.check:
        raise InputError("oracle needs --check ID (or --list)")
    if args.seed is None:
        raise InputError("oracle needs --seed")
    bounds = OracleBounds(max_base=args.max_base, max_ground=args.max_ground,
                          trials=args.trials, seed=args.seed)
    ids = list(CATALOG) if args.check == "all" else [args.check]
    reports = [verify_proposition(cid, bounds) for cid in ids]
    doc = reports[0].to_dict() if len(reports) == 1 else {"reports": [r.to_dict() for r in reports]}
    _emit(doc, args)
    return OK if all(r.passed for r in reports) else NEGATIVE


def cmd_demo(args):
    for path in write_demo(args.name, args.out):
        sys.stdout.write(f"{path}\n")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polity", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        sp.add_argument("-o", "--output", help="write JSON here instead of standard output")
        return sp

    sp = add("knit", cmd_knit, "knit of a site, as a formation")
    sp.add_argument("site")
    sp = add("nerve", cmd_nerve, "nerve of a site, as a formation")
    sp.add_argument("site")
    sp.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of JSON")
    sp = add("canon", cmd_canon, "canonical site of a formation")
    sp.add_argument("formation")
    sp = add("check", cmd_check, "check a morphism of the given class")
    sp.add_argument("--kind", required=True, choices=["bc", "sc", "bp", "sp", "bg", "sg", "b", "s"])
    sp.add_argument("--map", help="map JSON; omitted components are identities")
    sp.add_argument("source")
    sp.add_argument("target")
    sp = add("find", cmd_find, "complete a base map to a B-map or S-map")
    sp.add_argument("--kind", required=True, choices=["b", "s"])
    sp.add_argument("--map", help="JSON with a base_map; omitted means identity")
    sp.add_argument("source")
    sp.add_argument("target")
    sp = add("iso", cmd_iso, "isomorphism test between two sites")
    sp.add_argument("--kind", required=True, choices=["bg", "sg", "b", "s"])
    sp.add_argument("a")
    sp.add_argument("b")
    sp = add("delegation", cmd_delegation, "analyse one delegation on a formation")
    sp.add_argument("--from", dest="source", required=True)
    sp.add_argument("--to", dest="target", required=True)
    sp.add_argument("formation")
    sp = add("project", cmd_project, "erase one dimension of a product ground")
    sp.add_argument("--drop", required=True)
    sp.add_argument("site")
    sp = add("winning", cmd_winning, "maximal viable coalitions reaching the quota")
    sp.add_argument("--weights", required=True)
    sp.add_argument("site")
    sp = add("laws", cmd_laws, "seeded functor, naturality or category law suite")
    sp.add_argument("--suite", required=True, choices=["functor", "naturality", "category"])
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--trials", type=int, default=100)
    sp = add("oracle", cmd_oracle, "run one brute-force check from the catalog")
    sp.add_argument("--check", help="check id, or 'all'")
    sp.add_argument("--list", action="store_true", help="list check ids")
    sp.add_argument("--max-base", type=int, default=3)
    sp.add_argument("--max-ground", type=int, default=3)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--trials", type=int, default=100)
    sp = add("demo", cmd_demo, "write a bundled example set")
    sp.add_argument("name", choices=DEMOS)
    sp.add_argument("--out", default=".")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.fn(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return BAD_INPUT
    except ConsistencyError as exc:
        sys.stderr.write(f"internal inconsistency: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
