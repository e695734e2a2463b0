"""JSON-compatible trees for every data type, with rationals as ``"p/q"`` strings.

Object labels may be strings, integers or (nested) tuples; tuples are written
as JSON arrays and read back as tuples.  Vectors are lists of
``[index, "p/q"]`` pairs.  See ``docs/formats.md`` for the schema.
"""

from __future__ import annotations

import json
from pathlib import Path

from .ainf import AInfCategory, AInfFunctor, from_fincategory
from .fincat import (
    Bimodule,
    FinCategory,
    LinearFunctor,
    Module,
    _checked,
    fmt_q,
    regular_bimodule,
)
from .hochschild import Cochain
from .linalg import as_rational
from .multilinear import GradedQuiver


class FormatError(ValueError):
    """Input tree does not follow the documented schema."""


def _label_out(x):
    if isinstance(x, tuple):
        return [_label_out(y) for y in x]
    if isinstance(x, (str, int)):
        return x
    if isinstance(x, frozenset):
        return sorted(x)
    raise FormatError(f"object label {x!r} cannot be serialized")


def _label_in(x):
    if isinstance(x, list):
        return tuple(_label_in(y) for y in x)
    if isinstance(x, (str, int)):
        return x
    raise FormatError(f"bad object label {x!r}")


def _basis_out(labels) -> list:
    return [_label_out(x) if isinstance(x, (tuple, str, int)) else str(x) for x in labels]


def _basis_in(raw) -> tuple:
    return tuple(_label_in(x) for x in raw)


def vec_out(v: dict) -> list:
    return [[k, fmt_q(x)] for k, x in sorted(v.items()) if x]


def vec_in(raw) -> dict:
    try:
        if isinstance(raw, dict):
            items = raw.items()
        else:
            items = raw
        out = {}
        for k, x in items:
            q = as_rational(x)
            if q:
                out[int(k)] = q
        return out
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad vector {raw!r}: {exc}") from exc


def need(tree: dict, key: str, kind: str):
    if not isinstance(tree, dict):
        raise FormatError(f"{kind} must be an object, got {type(tree).__name__}")
    if key not in tree:
        raise FormatError(f"{kind} is missing the field {key!r}")
    return tree[key]


def _expect_kind(tree, kind: str):
    got = tree.get("kind", kind) if isinstance(tree, dict) else None
    if got != kind:
        raise FormatError(f"expected a {kind}, got {got!r}")


# ---------------------------------------------------------------- categories


def category_to_tree(c: FinCategory) -> dict:
    objs = c.objects
    return {
        "kind": "category",
        "name": c.name,
        "objects": [_label_out(a) for a in objs],
        "homs": [
            {"source": _label_out(a), "target": _label_out(b), "basis": _basis_out(c.homs[(a, b)])}
            for a in objs
            for b in objs
            if c.homs[(a, b)]
        ],
        "compose": [
            {"objects": [_label_out(x) for x in key], "left": i, "right": j, "value": vec_out(v)}
            for key, table in c.products.items()
            for (i, j), v in sorted(table.items())
        ],
        "identities": [{"object": _label_out(a), "value": vec_out(c.identities[a])} for a in objs],
    }


def category_from_tree(tree: dict) -> FinCategory:
    _expect_kind(tree, "category")
    try:
        objs = [_label_in(a) for a in need(tree, "objects", "category")]
        homs = {
            (_label_in(h["source"]), _label_in(h["target"])): _basis_in(h["basis"])
            for h in need(tree, "homs", "category")
        }
        prods: dict = {}
        for e in need(tree, "compose", "category"):
            key = tuple(_label_in(x) for x in e["objects"])
            prods.setdefault(key, {})[(int(e["left"]), int(e["right"]))] = vec_in(e["value"])
        ids = {_label_in(e["object"]): vec_in(e["value"]) for e in need(tree, "identities", "category")}
        missing = [a for a in objs if a not in ids]
        if missing:
            raise FormatError(f"no identity given for {missing}")
        c = FinCategory(objs, homs, prods, ids, name=tree.get("name", ""))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed category: {exc!r}") from exc
    return _checked(c)


# ---------------------------------------------------------------- bimodules and modules


def _action_out(table_by_key: dict) -> list:
    return [
        {"objects": [_label_out(x) for x in key], "left": i, "right": j, "value": vec_out(v)}
        for key, table in table_by_key.items()
        for (i, j), v in sorted(table.items())
    ]


def _action_in(entries) -> dict:
    out: dict = {}
    for e in entries:
        key = tuple(_label_in(x) for x in e["objects"])
        out.setdefault(key, {})[(int(e["left"]), int(e["right"]))] = vec_in(e["value"])
    return out


def bimodule_to_tree(m: Bimodule) -> dict:
    objs = m.category.objects
    return {
        "kind": "bimodule",
        "name": m.name,
        "shift": m.shift,
        "carriers": [
            {"source": _label_out(a), "target": _label_out(b), "basis": _basis_out(m.carriers[(a, b)])}
            for a in objs
            for b in objs
            if m.carriers[(a, b)]
        ],
        "left": _action_out(m.left),
        "right": _action_out(m.right),
    }


def bimodule_from_tree(tree, c: FinCategory) -> Bimodule:
    if tree == "self":
        return regular_bimodule(c)
    _expect_kind(tree, "bimodule")
    try:
        carriers = {
            (_label_in(h["source"]), _label_in(h["target"])): _basis_in(h["basis"])
            for h in need(tree, "carriers", "bimodule")
        }
        m = Bimodule(
            c,
            carriers,
            _action_in(tree.get("left", [])),
            _action_in(tree.get("right", [])),
            shift=int(tree.get("shift", 0)),
            name=tree.get("name", ""),
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed bimodule: {exc!r}") from exc
    return m.validate()


def module_to_tree(u: Module) -> dict:
    objs = u.category.objects
    return {
        "kind": "module",
        "name": u.name,
        "carriers": [{"object": _label_out(a), "basis": _basis_out(u.carriers[a])} for a in objs if u.carriers[a]],
        "action": _action_out({(a, b): t for (a, b), t in u.action.items()}),
    }


def module_from_tree(tree, c: FinCategory) -> Module:
    _expect_kind(tree, "module")
    try:
        carriers = {_label_in(h["object"]): _basis_in(h["basis"]) for h in need(tree, "carriers", "module")}
        action = {}
        for e in tree.get("action", []):
            a, b = (_label_in(x) for x in e["objects"])
            action.setdefault((a, b), {})[(int(e["left"]), int(e["right"]))] = vec_in(e["value"])
        u = Module(c, carriers, action, name=tree.get("name", ""))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed module: {exc!r}") from exc
    return u.validate()


# ---------------------------------------------------------------- multilinear maps


def multimap_to_tree(mm: dict) -> list:
    return [
        {"objects": [_label_out(x) for x in objs], "inputs": list(idx), "value": vec_out(v)}
        for (objs, idx), v in sorted(mm.items(), key=lambda kv: repr(kv[0]))
        if v
    ]


def multimap_from_tree(entries) -> dict:
    out = {}
    try:
        for e in entries:
            key = (tuple(_label_in(x) for x in e["objects"]), tuple(int(i) for i in e["inputs"]))
            out[key] = vec_in(e["value"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed multilinear map: {exc!r}") from exc
    return out


def cochain_to_tree(x: Cochain) -> dict:
    return {"kind": "cochain", "degree": x.degree, "shift": x.shift, "entries": multimap_to_tree(x.data)}


def cochain_from_tree(tree: dict, c: FinCategory, m: Bimodule) -> Cochain:
    _expect_kind(tree, "cochain")
    degree = int(need(tree, "degree", "cochain"))
    try:
        return Cochain(c, m, degree, multimap_from_tree(tree.get("entries", [])), int(tree.get("shift", 0)))
    except ValueError as exc:
        raise FormatError(f"cochain does not fit its category: {exc}") from exc


def functor_to_tree(f: LinearFunctor) -> dict:
    return {
        "kind": "functor",
        "objmap": [[_label_out(a), _label_out(b)] for a, b in f.objmap.items()],
        "maps": [
            {"objects": [_label_out(a), _label_out(b)], "basis": j, "value": vec_out(v)}
            for (a, b), m in f.maps.items()
            for j, v in sorted(m.items())
        ],
    }


def functor_from_tree(tree: dict, source: FinCategory, target: FinCategory) -> LinearFunctor:
    _expect_kind(tree, "functor")
    try:
        objmap = {_label_in(a): _label_in(b) for a, b in need(tree, "objmap", "functor")}
        maps: dict = {}
        for e in tree.get("maps", []):
            a, b = (_label_in(x) for x in e["objects"])
            maps.setdefault((a, b), {})[int(e["basis"])] = vec_in(e["value"])
        f = LinearFunctor(source, target, objmap, maps)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed functor: {exc!r}") from exc
    return f.validate()


# ---------------------------------------------------------------- A-infinity data


def ainf_to_tree(a: AInfCategory) -> dict:
    objs = a.objects
    return {
        "kind": "ainf_category",
        "name": a.name,
        "objects": [_label_out(x) for x in objs],
        "degrees": [
            {"source": _label_out(x), "target": _label_out(y), "degrees": list(a.quiver.degrees[(x, y)])}
            for x in objs
            for y in objs
            if a.quiver.degrees[(x, y)]
        ],
        "operations": [
            {"arity": k, "degree": 2 - k, "entries": multimap_to_tree(mm)} for k, mm in sorted(a.ops.items())
        ],
    }


def ainf_from_tree(tree: dict) -> AInfCategory:
    if isinstance(tree, dict) and tree.get("kind") == "category":
        return from_fincategory(category_from_tree(tree))
    _expect_kind(tree, "ainf_category")
    try:
        objs = [_label_in(x) for x in need(tree, "objects", "ainf_category")]
        degs = {
            (_label_in(e["source"]), _label_in(e["target"])): tuple(int(g) for g in e["degrees"])
            for e in tree.get("degrees", [])
        }
        ops = {int(e["arity"]): multimap_from_tree(e["entries"]) for e in tree.get("operations", [])}
        return AInfCategory(GradedQuiver(objs, degs), ops, name=tree.get("name", ""))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed A-infinity category: {exc!r}") from exc


def ainf_functor_to_tree(f: AInfFunctor) -> dict:
    return {
        "kind": "ainf_functor",
        "objmap": [[_label_out(a), _label_out(b)] for a, b in f.objmap.items()],
        "components": [
            {"arity": k, "degree": 1 - k, "entries": multimap_to_tree(mm)} for k, mm in sorted(f.components.items())
        ],
    }


def ainf_functor_from_tree(tree: dict, source: AInfCategory, target: AInfCategory) -> AInfFunctor:
    _expect_kind(tree, "ainf_functor")
    try:
        objmap = {_label_in(a): _label_in(b) for a, b in need(tree, "objmap", "ainf_functor")}
        comps = {int(e["arity"]): multimap_from_tree(e["entries"]) for e in tree.get("components", [])}
        return AInfFunctor(source, target, objmap, comps)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed A-infinity functor: {exc!r}") from exc


# ---------------------------------------------------------------- files


def dumps(tree) -> str:
    return json.dumps(tree, indent=2, sort_keys=False)


def load_json(path: str | Path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc})") from exc
