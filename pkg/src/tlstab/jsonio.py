"""JSON encodings for diagrams, link states, representations, profiles,
spaces and chains."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import linalg
from .comb import FiltrationProfile, Multiplicities
from .diagram import Diagram
from .link_state import DEFECT, LinkState
from .space import BASE, SimplicialTLSpace, WedgeSpace
from .stability import LSChain
from .std_module import from_json as rep_from_json, to_json as rep_to_json


def dumps(obj: Any) -> str:
    """Deterministic JSON text: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def diagram_to_json(a: Diagram) -> dict:
    return {"n": a.n, "pairs": [list(p) for p in a.named_pairs()], "loop_count": a.loop_count}


def diagram_from_json(data: dict) -> Diagram:
    return Diagram.from_pairs(int(data["n"]), [tuple(p) for p in data["pairs"]], int(data.get("loop_count", 0)))


def state_to_json(v: LinkState) -> dict:
    return {"n": v.n, "sites": ["d" if j == DEFECT else j + 1 for j in v.sites], "word": v.word()}


def state_from_json(data: dict) -> LinkState:
    return LinkState(int(data["n"]), tuple(DEFECT if s == "d" else int(s) - 1 for s in data["sites"]))


def profile_to_json(f: FiltrationProfile) -> dict:
    return {"n": f.n, "k": f.k, "betti": list(f.betti)}


def profile_from_json(data: dict) -> FiltrationProfile:
    return FiltrationProfile(int(data["n"]), int(data.get("k", 0)), tuple(int(b) for b in data["betti"]))


def multiplicities_to_json(m: Multiplicities) -> dict:
    return m.to_json()


def matrix_to_json(m) -> list:
    return [[x if isinstance(x, int) else f"{x.numerator}/{x.denominator}"
             for x in map(linalg.normalize, row)] for row in m]


def matrix_from_json(rows) -> list:
    return [[linalg.normalize(Fraction(x)) if isinstance(x, str) else x for x in row] for row in rows]


def space_to_json(space) -> dict:
    if isinstance(space, WedgeSpace):
        out = {
            "n": space.n,
            "k": space.k,
            "cells": list(space.cells),
            "maps": {str(i): {c: space.maps[i].get(c, BASE) for c in space.cells} for i in sorted(space.maps)},
        }
        dims = {c: d for c, d in space.dims.items() if d != space.k}
        if dims:
            out["dims"] = dims
        return out
    return {
        "type": "simplicial",
        "n": space.n,
        "vertices": list(space.vertices),
        "simplices": [list(space.label(s)) for s in space.maximal_simplices()],
        "basepoint": space.basepoint,
        "maps": {str(i): {str(v): space.vertex_maps[i].get(v, v) for v in space.vertices}
                 for i in sorted(space.vertex_maps)},
        "collapsed": [list(space.label(s)) for s in sorted(space.collapsed_simplices())],
    }


def space_from_json(data: dict):
    n = int(data["n"])
    if data.get("type") == "simplicial" or "simplices" in data:
        vertices = list(data["vertices"])
        by_name = {str(v): v for v in vertices}
        maps = {int(i): {by_name[a]: by_name[str(b)] for a, b in f.items()} for i, f in data["maps"].items()}
        return SimplicialTLSpace(n, vertices, [tuple(s) for s in data["simplices"]], data["basepoint"], maps,
                                 frozenset(tuple(s) for s in data.get("collapsed", [])))
    cells = list(data["cells"])
    maps = {int(i): dict(f) for i, f in data["maps"].items()}
    k = int(data.get("k", 2))
    return WedgeSpace(n, cells, maps, dict(data.get("dims", {})), k)


def chain_to_json(chain: LSChain) -> dict:
    return {
        "N": chain.N,
        "N_max": chain.N_max,
        "modules": {str(n): rep_to_json(r) for n, r in sorted(chain.modules.items())},
        "inclusions": {f"{m},{n}": matrix_to_json(mat) for (m, n), mat in sorted(chain.inclusions.items())},
    }


def chain_from_json(data: dict) -> LSChain:
    modules = {int(n): rep_from_json(r) for n, r in data["modules"].items()}
    inclusions = {}
    for key, mat in data["inclusions"].items():
        m, n = (int(x) for x in key.split(","))
        inclusions[(m, n)] = matrix_from_json(mat)
    return LSChain(int(data["N"]), int(data["N_max"]), modules, inclusions)


__all__ = [
    "dumps", "diagram_to_json", "diagram_from_json", "state_to_json", "state_from_json",
    "profile_to_json", "profile_from_json", "multiplicities_to_json", "matrix_to_json", "matrix_from_json",
    "space_to_json", "space_from_json", "chain_to_json", "chain_from_json", "rep_to_json", "rep_from_json",
]
