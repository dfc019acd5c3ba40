"""JSON reading and writing for sites, formations, maps and weights.

Readers are strict: unknown keys, missing agents and wrong types are errors
that name the JSON path of the offending value.  Writers emit one canonical
form (base order, ground order, display order for complexes), so that
save -> load -> save is byte-identical.
"""
from __future__ import annotations

import itertools
import json
from pathlib import Path
from typing import Any

from ..combinatorics import Base, Complex
from ..errors import InputError
from ..morphisms import BaseMap, CMap, GroundMap, PairMap
from ..site_core import Ground, PSite


def parse_json(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def read_json(path: str | Path) -> Any:
    if str(path) == "-":
        import sys
        return parse_json(sys.stdin.read(), "<stdin>")
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_json(text, str(path))


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def write_json(doc: Any, path: str | Path | None = None) -> str:
    text = dumps(doc)
    if path is not None and str(path) != "-":
        Path(path).write_text(text, encoding="utf-8")
    return text


# --- schema helpers -------------------------------------------------------------

def _obj(doc, path: str, required: tuple, optional: tuple = ()) -> dict:
    if not isinstance(doc, dict):
        raise InputError("expected an object", path)
    for key in required:
        if key not in doc:
            raise InputError(f"missing key {key!r}", path)
    for key in doc:
        if key not in required and key not in optional:
            raise InputError(f"unknown key {key!r}", path)
    return doc


def _str_list(doc, path: str) -> list[str]:
    if not isinstance(doc, list):
        raise InputError("expected a list of strings", path)
    for k, v in enumerate(doc):
        if not isinstance(v, str):
            raise InputError("expected a string", f"{path}[{k}]")
    return doc


def _wrap(fn, path):
    try:
        return fn()
    except InputError as exc:
        if exc.path:
            raise
        raise InputError(str(exc), path) from None


# --- bases, grounds, formations ---------------------------------------------------

def load_base(doc, path: str = "$.base") -> Base:
    agents = _str_list(doc, path)
    return _wrap(lambda: Base(tuple(agents)), path)


def load_ground(doc, path: str = "$.ground") -> Ground:
    doc = _obj(doc, path, (), ("states", "product"))
    if ("states" in doc) == ("product" in doc):
        raise InputError("give exactly one of 'states' or 'product'", path)
    if "states" in doc:
        states = _str_list(doc["states"], f"{path}.states")
        return _wrap(lambda: Ground(tuple(states)), f"{path}.states")
    prod = _obj(doc["product"], f"{path}.product", ("dims",))
    dims_doc = prod["dims"]
    if not isinstance(dims_doc, list):
        raise InputError("expected a list of dimensions", f"{path}.product.dims")
    dims = []
    for k, d in enumerate(dims_doc):
        p = f"{path}.product.dims[{k}]"
        d = _obj(d, p, ("name", "values"))
        if not isinstance(d["name"], str):
            raise InputError("dimension name must be a string", f"{p}.name")
        dims.append((d["name"], tuple(_str_list(d["values"], f"{p}.values"))))
    return _wrap(lambda: Ground.product(dims), f"{path}.product")


def load_formation(doc) -> Complex:
    doc = _obj(doc, "$", ("base", "complex"))
    base = load_base(doc["base"])
    if not isinstance(doc["complex"], list):
        raise InputError("expected a list of coalitions", "$.complex")
    masks = set()
    for k, c in enumerate(doc["complex"]):
        p = f"$.complex[{k}]"
        labels = _str_list(c, p)
        if len(set(labels)) != len(labels):
            raise InputError("duplicate agent in coalition", p)
        mask = _wrap(lambda: base.mask_of(labels), p)
        if mask in masks:
            raise InputError("duplicate coalition", p)
        masks.add(mask)
    return Complex(base, frozenset(masks))


def formation_doc(K: Complex) -> dict:
    return {"base": list(K.base.agents), "complex": K.to_lists()}


def save_formation(K: Complex, path=None) -> str:
    return write_json(formation_doc(K), path)


# --- sites --------------------------------------------------------------------------

def _box_states(ground: Ground, box, path: str) -> list[str]:
    names = ground.dim_names
    box = _obj(box, path, names)
    values = []
    for name, (_, allowed) in zip(names, ground.dims):
        vals = _str_list(box[name], f"{path}.{name}")
        for k, v in enumerate(vals):
            if v not in allowed:
                raise InputError(f"unknown value {v!r} for dimension {name!r}", f"{path}.{name}[{k}]")
        values.append(vals)
    return [",".join(p) for p in itertools.product(*values)]


def load_profile_entries(ground: Ground, entries, path: str) -> list[str]:
    """State ids of one aspiration set: a list of state ids and/or boxes."""
    if not isinstance(entries, list):
        raise InputError("expected a list of state ids or boxes", path)
    out: list[str] = []
    for k, e in enumerate(entries):
        p = f"{path}[{k}]"
        if isinstance(e, str):
            if e not in ground:
                raise InputError(f"unknown state {e!r}", p)
            out.append(e)
        elif isinstance(e, dict):
            if not ground.is_product:
                raise InputError("boxes need a product ground", p)
            out.extend(_box_states(ground, e, p))
        else:
            raise InputError("expected a state id or a box object", p)
    return out


def load_site(doc) -> PSite:
    doc = _obj(doc, "$", ("base", "ground", "profile"))
    base = load_base(doc["base"])
    ground = load_ground(doc["ground"])
    prof = _obj(doc["profile"], "$.profile", tuple(base.agents))
    profile = {a: load_profile_entries(ground, prof[a], f"$.profile.{a}") for a in base.agents}
    return PSite.from_profile(base, ground, profile)


def load_site_boxes(doc) -> dict[str, list[dict]]:
    """The raw box lists of a box-profile site document (state ids are rejected)."""
    site = load_site(doc)
    out = {}
    for a in site.base.agents:
        entries = doc["profile"][a]
        if any(not isinstance(e, dict) for e in entries):
            raise InputError("profile is not given purely by boxes", f"$.profile.{a}")
        out[a] = entries
    return out


def ground_doc(ground: Ground) -> dict:
    if ground.is_product:
        return {"product": {"dims": [{"name": n, "values": list(v)} for n, v in ground.dims]}}
    return {"states": list(ground.states)}


def site_doc(a: PSite) -> dict:
    return {"base": list(a.base.agents), "ground": ground_doc(a.ground),
            "profile": {i: list(v) for i, v in a.profile_dict().items()}}


def save_site(a: PSite, path=None) -> str:
    return write_json(site_doc(a), path)


# --- maps and weights -------------------------------------------------------------------

def _str_map(doc, path: str) -> dict[str, str]:
    if not isinstance(doc, dict):
        raise InputError("expected an object of label -> label", path)
    for k, v in doc.items():
        if not isinstance(v, str):
            raise InputError("expected a string", f"{path}.{k}")
    return doc


def load_base_map(doc, domain: Base, codomain: Base, path="$.base_map") -> BaseMap:
    if doc is None:
        if domain != codomain:
            raise InputError("base map omitted but the bases differ", path)
        return BaseMap.identity(domain)
    mapping = _str_map(doc, path)
    return _wrap(lambda: BaseMap.from_mapping(domain, codomain, mapping), path)


def load_ground_map(doc, domain: Ground, codomain: Ground, path="$.ground_map") -> GroundMap:
    if doc is None:
        if domain != codomain:
            raise InputError("ground map omitted but the grounds differ", path)
        return GroundMap.identity(domain)
    mapping = _str_map(doc, path)
    return _wrap(lambda: GroundMap.from_mapping(domain, codomain, mapping), path)


def load_map(doc, a: PSite, b: PSite) -> PairMap:
    doc = _obj(doc, "$", (), ("base_map", "ground_map"))
    return PairMap(load_base_map(doc.get("base_map"), a.base, b.base),
                   load_ground_map(doc.get("ground_map"), a.ground, b.ground))


def load_c_map(doc, X: Complex, Y: Complex) -> CMap:
    doc = _obj(doc, "$", (), ("base_map",))
    return CMap(load_base_map(doc.get("base_map"), X.base, Y.base), X, Y)


def map_doc(m: PairMap) -> dict:
    return {"base_map": m.base_map.as_dict(), "ground_map": m.ground_map.as_dict()}


def load_weights(doc, base: Base | None = None):
    from .scenarios import WeightProfile

    doc = _obj(doc, "$", ("weights", "quota"))
    w = doc["weights"]
    if not isinstance(w, dict):
        raise InputError("expected an object of agent -> seats", "$.weights")
    for k, v in w.items():
        if not isinstance(v, int) or isinstance(v, bool):
            raise InputError("weight must be an integer", f"$.weights.{k}")
    q = doc["quota"]
    if not isinstance(q, int) or isinstance(q, bool):
        raise InputError("quota must be an integer", "$.quota")
    wp = _wrap(lambda: WeightProfile(dict(w), q), "$")
    if base is not None:
        _wrap(lambda: wp.check_base(base), "$.weights")
    return wp


def weights_doc(w) -> dict:
    return {"weights": dict(w.weights), "quota": w.quota}
