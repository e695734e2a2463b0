"""Small named instances and seeded random instances for tests and ``selftest``.

Every random generator takes a :class:`random.Random` so results are
reproducible from a seed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .fincat import (
    Bimodule,
    FinCategory,
    LinearFunctor,
    Module,
    ValidationError,
    _checked,
    a2_category,
    algebra_from_table,
    build_cover_category,
    build_one_object_category,
    disjoint_union,
    dual_numbers,
    ground_field,
    inclusion_functor,
    p1_cover_spec,
    path_algebra_a2,
    poset_cover_spec,
    regular_bimodule,
    representable_module,
    trivial_module,
    truncated_polynomials,
    twisted_bimodule,
    vec_add,
)
from .hochschild import Cochain, CochainSpace, cocycle_basis, coboundary_solve, hochschild_differential
from .linalg import Matrix, inverse


def product_field() -> FinCategory:
    """Q x Q as a one-object category (two orthogonal idempotents)."""
    alg = algebra_from_table(["e1", "e2"], {(0, 0): [1, 0], (1, 1): [0, 1]}, [1, 1])
    return build_one_object_category(alg, name="QxQ")


def truncated_cubic() -> FinCategory:
    return build_one_object_category(truncated_polynomials(3, "x"), name="Q[x]/x^3")


def a2_two_objects() -> FinCategory:
    """The A2 quiver 1 -> 2 as a category with two objects."""
    return _checked(
        FinCategory(
            ["1", "2"],
            {("1", "1"): ("e1",), ("2", "2"): ("e2",), ("1", "2"): ("a",)},
            {
                ("1", "1", "1"): {(0, 0): {0: 1}},
                ("2", "2", "2"): {(0, 0): {0: 1}},
                ("1", "1", "2"): {(0, 0): {0: 1}},
                ("1", "2", "2"): {(0, 0): {0: 1}},
            },
            {"1": {0: 1}, "2": {0: 1}},
            name="A2quiver",
        )
    )


BUILTIN_CATEGORIES = {
    "Q": ground_field,
    "dual_numbers": dual_numbers,
    "truncated_cubic": truncated_cubic,
    "A2": a2_category,
    "A2_quiver": a2_two_objects,
    "QxQ": product_field,
    "P1_cover": lambda: build_cover_category(p1_cover_spec()),
    "poset2": lambda: build_cover_category(poset_cover_spec(2)),
}

# grading weights per (a, b) basis index; scaling by lambda^weight is an automorphism
_GRADINGS = {
    "dual_numbers": {("*", "*"): [0, 1]},
    "truncated_cubic": {("*", "*"): [0, 1, 2]},
    "A2": {("*", "*"): [0, 0, 1]},
    "A2_quiver": {("1", "2"): [1]},
}


def builtin_category(name: str) -> FinCategory:
    try:
        return BUILTIN_CATEGORIES[name]()
    except KeyError:
        raise KeyError(f"unknown builtin category {name!r}; choose from {sorted(BUILTIN_CATEGORIES)}") from None


def grading_automorphism(c: FinCategory, name: str, lam: Fraction) -> LinearFunctor:
    weights = _GRADINGS.get(name, {})
    maps = {}
    for a, b in c.nonzero_pairs():
        w = weights.get((a, b), [0] * c.dim(a, b))
        maps[(a, b)] = {j: {j: Fraction(lam) ** w[j]} for j in range(c.dim(a, b))}
    return LinearFunctor(c, c, {a: a for a in c.objects}, maps).validate()


# ---------------------------------------------------------------- toy divisor model


def divisor_toy():
    """(X, Y, f, M): X = dual numbers + A2 (disjoint blocks), Y the A2 block, f the inclusion, M regular."""
    dn = build_one_object_category(truncated_polynomials(2, "eps"), obj="D", name="dual")
    a2 = build_one_object_category(path_algebra_a2(), obj="P", name="A2")
    x = disjoint_union(dn, a2, name="divisor_toy")
    y = x.full_subcategory(["P"])
    return x, y, inclusion_functor(y, x), regular_bimodule(x)


def divisor_toy_cocycle(x: FinCategory, m: Bimodule) -> Cochain:
    """A non-trivial HH^3 class on the dual-number block whose restriction to the A2 block
    is a nonzero coboundary."""
    cls = next(z for z in cocycle_basis(x, m, 3) if coboundary_solve(x, m, z) is None)
    sigma = Cochain(x, m, 2, {(("P", "P", "P"), (2, 1)): {0: 1}, (("P", "P", "P"), (0, 0)): {2: 3}})
    return cls + hochschild_differential(x, m, sigma)


# ---------------------------------------------------------------- random instances


def _rat(rng: random.Random, lo: int = -3, hi: int = 3) -> Fraction:
    return Fraction(rng.randint(lo, hi))


def random_unit(rng: random.Random) -> Fraction:
    return Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2, 3]))


SMALL_POOL = ("Q", "dual_numbers", "truncated_cubic", "A2", "A2_quiver", "QxQ", "poset2")


def random_category(rng: random.Random, pool=SMALL_POOL) -> tuple[str, FinCategory]:
    name = rng.choice(pool)
    c = builtin_category(name)
    if rng.random() < 0.5:
        c = random_base_change(c, rng)
    return name, c


def random_base_change(c: FinCategory, rng: random.Random) -> FinCategory:
    """An isomorphic copy with random invertible changes of basis on every hom space."""
    change = {}
    for a, b in c.nonzero_pairs():
        n = c.dim(a, b)
        while True:
            mat = Matrix(n, n, {(i, j): _rat(rng) for i in range(n) for j in range(n)})
            try:
                change[(a, b)] = (mat, inverse(mat))
                break
            except ValueError:
                continue

    def new_to_old(key, v):
        mat = change[key][0]
        out: dict = {}
        for (r, j), x in mat.entries.items():
            if j in v:
                vec_add(out, {r: 1}, x * v[j])
        return out

    def old_to_new(key, v):
        inv = change[key][1]
        out: dict = {}
        for (r, j), x in inv.entries.items():
            if j in v:
                vec_add(out, {r: 1}, x * v[j])
        return out

    prods = {}
    for a, b, d in product(c.objects, repeat=3):
        if not c.table(a, b, d):
            continue
        table = {}
        for i, j in product(range(c.dim(a, b)), range(c.dim(b, d))):
            w = c.mul(a, b, d, new_to_old((a, b), {i: 1}), new_to_old((b, d), {j: 1}))
            w = old_to_new((a, d), w) if w else {}
            if w:
                table[(i, j)] = w
        prods[(a, b, d)] = table
    ids = {a: old_to_new((a, a), c.identities[a]) for a in c.objects}
    return _checked(FinCategory(c.objects, c.homs, prods, ids, name=c.name))


def random_bimodule(c: FinCategory, name: str, rng: random.Random) -> Bimodule:
    """Regular, or twisted by a grading automorphism (only on categories in their builtin basis)."""
    if name in _GRADINGS and rng.random() < 0.5 and c == builtin_category(name):
        return twisted_bimodule(c, grading_automorphism(c, name, random_unit(rng)))
    return regular_bimodule(c)


def random_cochain(c: FinCategory, m: Bimodule, n: int, rng: random.Random, density: float = 0.6) -> Cochain:
    space = CochainSpace(c, m, n)
    vec = [_rat(rng) if rng.random() < density else Fraction(0) for _ in range(space.dim)]
    return space.from_vector(vec)


def random_cocycle(c: FinCategory, m: Bimodule, n: int, rng: random.Random) -> Cochain:
    basis = cocycle_basis(c, m, n)
    out = Cochain.zero(c, m, n)
    for z in basis:
        coeff = _rat(rng)
        if coeff:
            out = out + coeff * z
    return out


def random_module(c: FinCategory, rng: random.Random) -> Module:
    """A representable module, or the simple module of a local one-object category."""
    if len(c.objects) == 1 and rng.random() < 0.5:
        try:
            return trivial_module(c)
        except (ValueError, ValidationError):
            pass
    return representable_module(c, rng.choice(c.objects))
