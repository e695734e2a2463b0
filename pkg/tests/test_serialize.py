import json
import random
import re
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from hhdeform import ainf as A
from hhdeform import fincat as F
from hhdeform import hochschild as hh
from hhdeform import samples as S
from hhdeform import serialize as ser


def _through_json(tree):
    return json.loads(json.dumps(tree))


@pytest.mark.parametrize("name", sorted(S.BUILTIN_CATEGORIES))
def test_category_round_trip(name):
    c = S.builtin_category(name)
    back = ser.category_from_tree(_through_json(ser.category_to_tree(c)))
    assert back == c


def test_tuple_labels_round_trip():
    c = F.tensor_categories(S.builtin_category("A2_quiver"), S.builtin_category("QxQ"))
    assert ser.category_from_tree(_through_json(ser.category_to_tree(c))) == c


def test_rationals_are_strings():
    c = S.random_base_change(S.builtin_category("dual_numbers"), random.Random(3))
    tree = ser.category_to_tree(c)
    values = [x for e in tree["compose"] for _, x in e["value"]]
    assert values and all(isinstance(x, str) for x in values)
    assert any("/" in x for x in values)


@settings(max_examples=15)
@given(st.integers(0, 2**32 - 1))
def test_bimodule_module_cochain_round_trip(seed):
    rng = random.Random(seed)
    name, c = S.random_category(rng)
    m = S.random_bimodule(c, name, rng)
    assert ser.bimodule_from_tree(_through_json(ser.bimodule_to_tree(m)), c) == m
    u = S.random_module(c, rng)
    back = ser.module_from_tree(_through_json(ser.module_to_tree(u)), c)
    assert back.carriers == u.carriers and back.action == u.action
    x = S.random_cochain(c, m, rng.randint(0, 3), rng)
    y = ser.cochain_from_tree(_through_json(ser.cochain_to_tree(x)), c, m)
    assert y == x and y.shift == x.shift


def test_ainf_round_trip():
    c = F.dual_numbers()
    m = F.regular_bimodule(c)
    eta = next(z for z in hh.cocycle_basis(c, m, 3) if hh.coboundary_solve(c, m, z) is None)
    a, can = A.deform(c, m, eta)
    back = ser.ainf_from_tree(_through_json(ser.ainf_to_tree(a)))
    assert back == a
    f = ser.ainf_functor_from_tree(_through_json(ser.ainf_functor_to_tree(can)), a, can.target)
    assert f == can


def test_functor_round_trip():
    x, y, f, _ = S.divisor_toy()
    back = ser.functor_from_tree(_through_json(ser.functor_to_tree(f)), y, x)
    assert back.maps == f.maps and back.objmap == f.objmap


@pytest.mark.parametrize(
    "tree",
    [
        {"kind": "category", "objects": ["a"]},
        {"kind": "category", "objects": ["a"], "homs": [], "compose": [], "identities": [{"object": "a", "value": [[0, "x"]]}]},
        {"kind": "cochain"},
        [1, 2],
    ],
)
def test_malformed_trees_raise_format_error(tree):
    with pytest.raises(ser.FormatError):
        if isinstance(tree, dict) and tree.get("kind") == "cochain":
            c = F.dual_numbers()
            ser.cochain_from_tree(tree, c, F.regular_bimodule(c))
        else:
            ser.category_from_tree(tree)


def test_wrong_kind_rejected():
    c = F.dual_numbers()
    with pytest.raises(ser.FormatError):
        ser.category_from_tree(ser.cochain_to_tree(hh.Cochain.zero(c, F.regular_bimodule(c), 1)))


def test_documented_examples_load():
    text = (Path(__file__).resolve().parent.parent / "docs" / "formats.md").read_text()
    trees = {}
    for block in re.findall(r"```json\n(.*?)```", text, re.S):
        if '"..."' not in block:
            tree = json.loads(block)
            trees.setdefault(tree["kind"], tree)
    c = ser.category_from_tree(trees["category"])
    m = ser.bimodule_from_tree(trees["bimodule"], c)
    ser.module_from_tree(trees["module"], c)
    eta = ser.cochain_from_tree(trees["cochain"], c, F.regular_bimodule(c))
    assert c.dim("*", "*") == 2 and m.dim("*", "*") == 2 and eta.degree == 3
