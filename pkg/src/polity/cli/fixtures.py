"""Bundled example documents, written by ``polity demo NAME``."""
from __future__ import annotations

from pathlib import Path

from ..canonical import canonical_site
from ..combinatorics import Base, Complex, downward_closure, max_elements
from ..errors import InputError
from .io import dumps, formation_doc, load_formation, site_doc

E_DIM = ("E", ["1", "2", "3"])
S_DIM = ("S", ["l", "n", "c"])
O_DIM = ("O", ["α", "β", "γ"])


def _box(e, s, o) -> dict:
    return {"E": list(e), "S": list(s), "O": list(o)}


def gallopolis_site() -> dict:
    return {
        "base": ["LEFT", "SOCD", "CONS", "LIBER", "RIGHT"],
        "ground": {"product": {"dims": [{"name": n, "values": v} for n, v in (E_DIM, S_DIM, O_DIM)]}},
        "profile": {
            "LEFT": [_box("23", "l", "γ")],
            "SOCD": [_box("2", "ln", "βγ")],
            "CONS": [_box("12", "nc", "αβ")],
            "LIBER": [_box("1", "l", "αβγ"), _box("1", "n", "βγ")],
            "RIGHT": [_box("12", "c", "α")],
        },
    }


def gallopolis_weights() -> dict:
    # Seat counts are illustrative: 100 seats, simple majority.
    return {"weights": {"LEFT": 28, "SOCD": 12, "CONS": 18, "LIBER": 20, "RIGHT": 22},
            "quota": 51}


def triangle_sites() -> tuple[dict, dict]:
    """Two sites on six states: one perfect, one whose knit has only the edges."""
    ground = {"states": ["p1", "p2", "p3", "p4", "p5", "p6"]}
    left = {"base": ["1", "2", "3"], "ground": ground,
            "profile": {"1": ["p1", "p4", "p5"], "2": ["p2", "p4", "p6"], "3": ["p3", "p5", "p6"]}}
    right = {"base": ["1", "2", "3"], "ground": ground,
             "profile": {"1": ["p1", "p2", "p3", "p4"], "2": ["p1", "p2", "p5", "p6"],
                         "3": ["p3", "p4", "p5", "p6"]}}
    return left, right


def triangle_boundary() -> dict:
    return {"base": ["1", "2", "3"],
            "complex": [["1"], ["2"], ["3"], ["1", "2"], ["1", "3"], ["2", "3"]]}


def appendix_formation() -> dict:
    base = Base(("1", "2", "3", "4"))
    E = downward_closure(Complex.of(base, [["1", "2"], ["2", "3"], ["1", "3"], ["2", "4"]]))
    return formation_doc(E)


def appendix_site() -> dict:
    E = load_formation(appendix_formation())
    return site_doc(canonical_site(E.base, max_elements(E)))


def demo_files(name: str) -> dict[str, dict]:
    if name == "gallopolis":
        return {"gallopolis.json": gallopolis_site(), "gallopolis_weights.json": gallopolis_weights()}
    if name == "triangle":
        left, right = triangle_sites()
        return {"triangle_left.json": left, "triangle_right.json": right}
    if name == "delegation":
        return {"triangle_boundary.json": triangle_boundary(),
                "appendix_formation.json": appendix_formation(),
                "appendix_site.json": appendix_site()}
    raise InputError(f"unknown demo {name!r}; choose gallopolis, triangle or delegation")


DEMOS = ("gallopolis", "triangle", "delegation")


def write_demo(name: str, out: str | Path = ".") -> list[Path]:
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for fname, doc in demo_files(name).items():
        path = out / fname
        path.write_text(dumps(doc), encoding="utf-8")
        written.append(path)
    return written
