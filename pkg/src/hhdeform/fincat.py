"""Finite k-linear categories over Q, their bimodules, modules and functors.

Conventions
-----------
Products are written in *path order*: for ``x`` in ``hom(a, b)`` and ``y`` in
``hom(b, c)`` the product ``x * y`` lies in ``hom(a, c)``.  In functional
notation this is ``y o x``.  For a one-object category the product is the
algebra multiplication.  Every structure constant table below uses this order.

Bimodule actions follow the same reading:

* left action  ``hom(a, b) (x) M(b, c) -> M(a, c)``,  ``x . m``
* right action ``M(a, b) (x) hom(b, c) -> M(a, c)``,  ``m . y``

A :class:`Module` carries ``U(a)`` per object and an action
``U(a) (x) hom(a, b) -> U(b)``; it is a covariant functor to vector spaces.

Vectors are sparse dicts ``{basis index: Fraction}``.  Structure tensors are
dicts ``{(i, j): vector}`` keyed by basis indices of the two factors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Hashable, Iterable, Mapping, Sequence

from .linalg import Matrix, as_rational, inverse, rref

Vector = dict  # {int: Fraction}


class ValidationError(ValueError):
    """Structure data failed an axiom check; ``problems`` lists each failure."""

    def __init__(self, problems: Sequence[str]):
        self.problems = list(problems)
        head = "; ".join(self.problems[:5])
        more = f" (+{len(self.problems) - 5} more)" if len(self.problems) > 5 else ""
        super().__init__(head + more)


# ---------------------------------------------------------------- sparse helpers


def vec_add(acc: dict, v: Mapping, c=1) -> dict:
    """acc += c * v, in place; drops entries that cancel."""
    if not c:
        return acc
    for k, x in v.items():
        y = acc.get(k, 0) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


def vec_clean(v: Mapping) -> dict:
    return {k: Fraction(x) for k, x in v.items() if x}


def as_vector(v, dim: int | None = None) -> dict:
    """Accept a dense list or a sparse mapping and return a sparse vector."""
    if isinstance(v, Mapping):
        out = {int(k): as_rational(x) for k, x in v.items()}
    else:
        out = {k: as_rational(x) for k, x in enumerate(v)}
    out = {k: x for k, x in out.items() if x}
    if dim is not None and any(not 0 <= k < dim for k in out):
        raise ValueError(f"vector {v!r} has an index outside range({dim})")
    return out


def bilinear(table: Mapping, u: Mapping, v: Mapping) -> dict:
    """Evaluate a bilinear structure tensor on two sparse vectors."""
    out: dict = {}
    for i, a in u.items():
        for j, b in v.items():
            w = table.get((i, j))
            if w:
                vec_add(out, w, a * b)
    return out


def fmt_q(x) -> str:
    x = as_rational(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------- algebras


@dataclass
class Algebra:
    """A finite-dimensional associative unital Q-algebra given by structure constants.

    ``mult[(i, j)]`` is the sparse vector ``e_i * e_j``; ``unit`` is a sparse vector.
    """

    basis: tuple
    mult: dict
    unit: dict

    @property
    def dim(self) -> int:
        return len(self.basis)

    def mul(self, u: Mapping, v: Mapping) -> dict:
        return bilinear(self.mult, u, v)

    def problems(self) -> list[str]:
        out = []
        n = self.dim
        e = [{i: Fraction(1)} for i in range(n)]
        for i, j, k in product(range(n), repeat=3):
            left = self.mul(self.mul(e[i], e[j]), e[k])
            right = self.mul(e[i], self.mul(e[j], e[k]))
            if left != right:
                out.append(
                    f"associativity fails on ({self.basis[i]}, {self.basis[j]}, {self.basis[k]})"
                )
        for i in range(n):
            if self.mul(self.unit, e[i]) != e[i] or self.mul(e[i], self.unit) != e[i]:
                out.append(f"unit law fails on {self.basis[i]}")
        return out


def algebra_from_table(basis: Sequence, table, unit) -> Algebra:
    """Build an :class:`Algebra`.

    Args:
        basis: labels of the basis elements.
        table: either ``table[i][j]`` = coefficient list/dict of ``e_i * e_j``,
            or a dict ``{(i, j): vector}`` (missing pairs are zero).
        unit: coefficient list/dict of the unit, or a basis label.
    """
    basis = tuple(basis)
    n = len(basis)
    mult = {}
    if isinstance(table, Mapping):
        for (i, j), v in table.items():
            w = as_vector(v, n)
            if w:
                mult[(int(i), int(j))] = w
    else:
        if len(table) != n:
            raise ValueError("multiplication table must have one row per basis element")
        for i, row in enumerate(table):
            if len(row) != n:
                raise ValueError("multiplication table rows must have one entry per basis element")
            for j, v in enumerate(row):
                w = as_vector(v, n)
                if w:
                    mult[(i, j)] = w
    if not isinstance(unit, (Mapping, list, tuple)):
        unit = {basis.index(unit): 1}
    return Algebra(basis, mult, as_vector(unit, n))


# ---------------------------------------------------------------- categories


class FinCategory:
    """A finite k-linear category.

    Args:
        objects: ordered object labels (hashable).
        homs: ``{(a, b): basis labels}``; missing pairs are zero spaces.
        products: ``{(a, b, c): {(i, j): vector}}`` with ``i`` indexing
            ``hom(a, b)``, ``j`` indexing ``hom(b, c)`` and the vector living in
            ``hom(a, c)``.
        identities: ``{a: vector in hom(a, a)}``.
    """

    def __init__(self, objects, homs, products, identities, name: str = ""):
        self.objects = tuple(objects)
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("object labels must be distinct")
        obj = set(self.objects)
        for key in homs:
            if key[0] not in obj or key[1] not in obj:
                raise ValueError(f"hom space {key} mentions an unknown object")
        self.homs = {(a, b): tuple(homs.get((a, b), ())) for a in self.objects for b in self.objects}
        self.products = {}
        for key, table in products.items():
            a, b, c = key
            dab, dbc, dac = self.dim(a, b), self.dim(b, c), self.dim(a, c)
            clean = {}
            for (i, j), v in table.items():
                if not (0 <= i < dab and 0 <= j < dbc):
                    raise ValueError(f"product entry {(i, j)} out of range for {key}")
                w = as_vector(v, dac)
                if w:
                    clean[(i, j)] = w
            if clean:
                self.products[key] = clean
        self.identities = {a: as_vector(identities[a], self.dim(a, a)) for a in self.objects}
        self.name = name

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<FinCategory{label} objects={list(self.objects)}>"

    def dim(self, a, b) -> int:
        return len(self.homs[(a, b)])

    def table(self, a, b, c) -> dict:
        return self.products.get((a, b, c), {})

    def mul(self, a, b, c, u: Mapping, v: Mapping) -> dict:
        """Path-order product of ``u`` in hom(a, b) and ``v`` in hom(b, c)."""
        return bilinear(self.table(a, b, c), u, v)

    def compose(self, a, b, c, g: Mapping, f: Mapping) -> dict:
        """Functional composition ``g o f`` for ``f: a -> b`` and ``g: b -> c``."""
        return self.mul(a, b, c, f, g)

    def identity(self, a) -> dict:
        return dict(self.identities[a])

    def nonzero_pairs(self) -> list[tuple]:
        return [k for k, v in self.homs.items() if v]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FinCategory)
            and self.objects == other.objects
            and self.homs == other.homs
            and self.products == other.products
            and self.identities == other.identities
        )

    __hash__ = object.__hash__

    def full_subcategory(self, objects: Iterable) -> "FinCategory":
        keep = [a for a in self.objects if a in set(objects)]
        return FinCategory(
            keep,
            {(a, b): self.homs[(a, b)] for a in keep for b in keep},
            {k: v for k, v in self.products.items() if all(x in keep for x in k)},
            {a: self.identities[a] for a in keep},
            name=f"{self.name}|{len(keep)}",
        )


def validate_category(c: FinCategory) -> list[str]:
    """Problems with associativity or units, one string per failing basis tuple."""
    out = []
    objs = c.objects
    for a, b, cc, d in product(objs, repeat=4):
        dab, dbc, dcd = c.dim(a, b), c.dim(b, cc), c.dim(cc, d)
        if not (dab and dbc and dcd):
            continue
        for i, j, k in product(range(dab), range(dbc), range(dcd)):
            x, y, z = {i: 1}, {j: 1}, {k: 1}
            left = c.mul(a, cc, d, c.mul(a, b, cc, x, y), z)
            right = c.mul(a, b, d, x, c.mul(b, cc, d, y, z))
            if left != right:
                out.append(
                    "associativity fails on "
                    f"({c.homs[(a, b)][i]}: {a}->{b}, {c.homs[(b, cc)][j]}: {b}->{cc}, "
                    f"{c.homs[(cc, d)][k]}: {cc}->{d})"
                )
    for a, b in c.nonzero_pairs():
        for i in range(c.dim(a, b)):
            x = {i: Fraction(1)}
            if c.mul(a, a, b, c.identities[a], x) != x or c.mul(a, b, b, x, c.identities[b]) != x:
                out.append(f"unit law fails on ({c.homs[(a, b)][i]}: {a}->{b})")
    return out


def _checked(c: FinCategory) -> FinCategory:
    problems = validate_category(c)
    if problems:
        raise ValidationError(problems)
    return c


def build_one_object_category(algebra: Algebra, obj: Hashable = "*", name: str = "") -> FinCategory:
    """The one-object category whose endomorphism algebra is ``algebra``."""
    problems = algebra.problems()
    if problems:
        raise ValidationError(problems)
    return FinCategory(
        [obj],
        {(obj, obj): algebra.basis},
        {(obj, obj, obj): algebra.mult},
        {obj: algebra.unit},
        name=name,
    )


def subset_label(s: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


@dataclass
class CoverSpec:
    """Coordinate-ring data for a finite cover.

    ``rings[J]`` is the algebra of the intersection over ``J``; ``restrictions[(I, J)]``
    for ``I`` a proper subset of ``J`` maps basis index ``k`` of ``rings[I]`` to a
    vector in ``rings[J]``.  Subsets are frozensets of ints.
    """

    rings: dict
    restrictions: dict = field(default_factory=dict)


def build_cover_category(cover: CoverSpec) -> FinCategory:
    """Objects are the subsets with a ring; hom(I, J) = O(U_J) for I within J.

    The product of ``x`` in hom(I, J) and ``y`` in hom(J, K) restricts ``x`` to
    ``U_K`` and multiplies there.
    """
    subsets = sorted(cover.rings, key=lambda s: (len(s), sorted(s)))
    rings = cover.rings
    problems: list[str] = []

    def res(i_set, j_set) -> dict:
        if i_set == j_set:
            return {k: {k: Fraction(1)} for k in range(rings[j_set].dim)}
        key = (i_set, j_set)
        if key not in cover.restrictions:
            raise ValueError(f"missing restriction {subset_label(i_set)} -> {subset_label(j_set)}")
        return {k: as_vector(v, rings[j_set].dim) for k, v in cover.restrictions[key].items()}

    def apply(m: dict, v: Mapping) -> dict:
        out: dict = {}
        for k, x in v.items():
            vec_add(out, m.get(k, {}), x)
        return out

    for s in subsets:
        problems += [f"ring {subset_label(s)}: {p}" for p in rings[s].problems()]
    for i_set in subsets:
        for j_set in subsets:
            if i_set < j_set:
                r, A, B = res(i_set, j_set), rings[i_set], rings[j_set]
                if apply(r, A.unit) != B.unit:
                    problems.append(f"restriction {subset_label(i_set)}->{subset_label(j_set)} is not unital")
                for a, b in product(range(A.dim), repeat=2):
                    lhs = apply(r, A.mul({a: 1}, {b: 1}))
                    rhs = B.mul(r.get(a, {}), r.get(b, {}))
                    if lhs != rhs:
                        problems.append(
                            f"restriction {subset_label(i_set)}->{subset_label(j_set)} "
                            f"is not multiplicative on ({A.basis[a]}, {A.basis[b]})"
                        )
    for i_set, j_set, k_set in product(subsets, repeat=3):
        if i_set < j_set < k_set:
            rij, rjk, rik = res(i_set, j_set), res(j_set, k_set), res(i_set, k_set)
            for a in range(rings[i_set].dim):
                if apply(rjk, rij.get(a, {})) != rik.get(a, {}):
                    problems.append(
                        f"restrictions {subset_label(i_set)}->{subset_label(j_set)}->"
                        f"{subset_label(k_set)} do not compose on {rings[i_set].basis[a]}"
                    )
    if problems:
        raise ValidationError(problems)

    labels = {s: subset_label(s) for s in subsets}
    homs, prods = {}, {}
    for i_set in subsets:
        for j_set in subsets:
            if i_set <= j_set:
                homs[(labels[i_set], labels[j_set])] = rings[j_set].basis
    for i_set, j_set, k_set in product(subsets, repeat=3):
        if i_set <= j_set <= k_set:
            r, K = res(j_set, k_set), rings[k_set]
            table = {}
            for x in range(rings[j_set].dim):
                rx = r.get(x, {})
                for y in range(K.dim):
                    w = K.mul(rx, {y: 1})
                    if w:
                        table[(x, y)] = w
            prods[(labels[i_set], labels[j_set], labels[k_set])] = table
    ids = {labels[s]: rings[s].unit for s in subsets}
    return _checked(FinCategory([labels[s] for s in subsets], homs, prods, ids, name="cover"))


def tensor_categories(c: FinCategory, i: FinCategory) -> FinCategory:
    """c (x) i: objects are pairs, hom bases are pairs ordered (outer c, inner i)."""
    objs = [(x, p) for x in c.objects for p in i.objects]
    homs = {}
    for (x, p), (y, q) in product(objs, repeat=2):
        homs[((x, p), (y, q))] = tuple((u, v) for u in c.homs[(x, y)] for v in i.homs[(p, q)])
    prods = {}
    for (x, p), (y, q), (z, r) in product(objs, repeat=3):
        tc, ti = c.table(x, y, z), i.table(p, q, r)
        if not (tc and ti):
            continue
        n1, n2, n3 = i.dim(p, q), i.dim(q, r), i.dim(p, r)
        table = {}
        for (a, b), va in tc.items():
            for (s, t), vs in ti.items():
                table[(a * n1 + s, b * n2 + t)] = {
                    k * n3 + l: ca * cs for k, ca in va.items() for l, cs in vs.items()
                }
        prods[((x, p), (y, q), (z, r))] = table
    ids = {}
    for x, p in objs:
        n = i.dim(p, p)
        ids[(x, p)] = {
            k * n + l: a * b for k, a in c.identities[x].items() for l, b in i.identities[p].items()
        }
    return FinCategory(objs, homs, prods, ids, name=f"{c.name}(x){i.name}")


def disjoint_union(*cats: FinCategory, name: str = "") -> FinCategory:
    """Coproduct of categories with pairwise distinct object labels; no homs between blocks."""
    objs = [a for c in cats for a in c.objects]
    homs, prods, ids = {}, {}, {}
    for c in cats:
        homs.update(c.homs)
        prods.update(c.products)
        ids.update(c.identities)
    return _checked(FinCategory(objs, homs, prods, ids, name=name or "+".join(c.name for c in cats)))


def path_products(i: FinCategory, ipath: tuple) -> dict:
    """Iterated path-order products along ``ipath``: {basis indices: vector in hom(p0, pn)}.

    For a length-0 path this is the identity.
    """
    n = len(ipath) - 1
    if n == 0:
        return {(): dict(i.identities[ipath[0]])}
    out = {}
    ranges = [range(i.dim(ipath[j], ipath[j + 1])) for j in range(n)]
    for idx in product(*ranges):
        acc = {idx[0]: Fraction(1)}
        for j in range(1, n):
            acc = i.mul(ipath[0], ipath[j], ipath[j + 1], acc, {idx[j]: 1})
            if not acc:
                break
        if acc:
            out[idx] = acc
    return out


# ---------------------------------------------------------------- functors


class LinearFunctor:
    """A k-linear functor; ``maps[(a, b)][j]`` is the image of basis ``j`` of hom(a, b)."""

    def __init__(self, source: FinCategory, target: FinCategory, objmap: Mapping, maps: Mapping):
        self.source = source
        self.target = target
        self.objmap = {a: objmap[a] for a in source.objects}
        self.maps = {}
        for a, b in source.nonzero_pairs():
            fa, fb = self.objmap[a], self.objmap[b]
            m = maps.get((a, b), {})
            self.maps[(a, b)] = {
                j: as_vector(m[j], target.dim(fa, fb)) for j in range(source.dim(a, b)) if j in m
            }

    def apply(self, a, b, v: Mapping) -> dict:
        out: dict = {}
        m = self.maps.get((a, b), {})
        for j, x in v.items():
            vec_add(out, m.get(j, {}), x)
        return out

    def problems(self) -> list[str]:
        s, t = self.source, self.target
        out = []
        for a in s.objects:
            fa = self.objmap[a]
            if self.apply(a, a, s.identities[a]) != t.identities[fa]:
                out.append(f"identity of {a} is not preserved")
        for (a, b, c), table in s.products.items():
            fa, fb, fc = (self.objmap[x] for x in (a, b, c))
            for i, j in product(range(s.dim(a, b)), range(s.dim(b, c))):
                lhs = self.apply(a, c, table.get((i, j), {}))
                rhs = t.mul(fa, fb, fc, self.apply(a, b, {i: 1}), self.apply(b, c, {j: 1}))
                if lhs != rhs:
                    out.append(
                        f"composition not preserved on ({s.homs[(a, b)][i]}, {s.homs[(b, c)][j]})"
                    )
        return out

    def validate(self) -> "LinearFunctor":
        problems = self.problems()
        if problems:
            raise ValidationError(problems)
        return self

    def then(self, g: "LinearFunctor") -> "LinearFunctor":
        """The composite ``g o self`` (apply self first)."""
        if g.source is not self.target and g.source != self.target:
            raise ValueError("functors are not composable")
        maps = {}
        for (a, b), m in self.maps.items():
            fa, fb = self.objmap[a], self.objmap[b]
            maps[(a, b)] = {j: g.apply(fa, fb, v) for j, v in m.items()}
        objmap = {a: g.objmap[self.objmap[a]] for a in self.source.objects}
        return LinearFunctor(self.source, g.target, objmap, maps)


def identity_functor(c: FinCategory) -> LinearFunctor:
    return LinearFunctor(
        c,
        c,
        {a: a for a in c.objects},
        {(a, b): {j: {j: 1} for j in range(c.dim(a, b))} for a, b in c.nonzero_pairs()},
    )


def inclusion_functor(sub: FinCategory, c: FinCategory) -> LinearFunctor:
    """Inclusion of a full subcategory built by :meth:`FinCategory.full_subcategory`."""
    return LinearFunctor(
        sub,
        c,
        {a: a for a in sub.objects},
        {(a, b): {j: {j: 1} for j in range(sub.dim(a, b))} for a, b in sub.nonzero_pairs()},
    ).validate()


def unital_rebasing(c: FinCategory) -> tuple[FinCategory, LinearFunctor]:
    """An isomorphic copy of ``c`` whose identities are basis vector 0 of each End.

    Returns the copy and the isomorphism ``copy -> c``.  Used to build
    normalized cochains, which vanish whenever an input is an identity.
    """
    change = {}
    for a, b in c.nonzero_pairs():
        n = c.dim(a, b)
        cols = [{k: Fraction(1)} for k in range(n)]
        if a == b:
            ident = c.identities[a]
            if not ident:
                raise ValueError(f"identity of {a} is zero in a nonzero endomorphism space")
            pivot = min(ident)
            cols = [ident] + [cols[k] for k in range(n) if k != pivot]
        change[(a, b)] = cols
    inv = {}
    for key, cols in change.items():
        n = len(cols)
        m = Matrix(n, n, {(r, j): v for j, col in enumerate(cols) for r, v in col.items()})
        inv[key] = inverse(m)

    def to_new(key, v: Mapping) -> dict:
        m = inv[key]
        out: dict = {}
        for (r, j), x in m.entries.items():
            if j in v:
                vec_add(out, {r: 1}, x * v[j])
        return out

    homs = {k: tuple(f"b{j}" for j in range(len(cols))) for k, cols in change.items()}
    prods = {}
    for a, b, d in product(c.objects, repeat=3):
        if not c.table(a, b, d):
            continue
        table = {}
        for i, u in enumerate(change.get((a, b), [])):
            for j, v in enumerate(change.get((b, d), [])):
                w = to_new((a, d), c.mul(a, b, d, u, v))
                if w:
                    table[(i, j)] = w
        prods[(a, b, d)] = table
    ids = {a: ({0: Fraction(1)} if c.dim(a, a) else {}) for a in c.objects}
    new = FinCategory(c.objects, homs, prods, ids, name=c.name)
    iso = LinearFunctor(
        new,
        c,
        {a: a for a in c.objects},
        {k: dict(enumerate(cols)) for k, cols in change.items()},
    )
    return new, iso


# ---------------------------------------------------------------- bimodules


class Bimodule:
    """A bimodule over a FinCategory.

    Args:
        category: the acting category.
        carriers: ``{(a, b): basis labels of M(a, b)}``; missing pairs are zero.
        left: ``{(a, b, c): {(i, j): vector}}`` for ``hom(a, b) (x) M(b, c) -> M(a, c)``.
        right: ``{(a, b, c): {(i, j): vector}}`` for ``M(a, b) (x) hom(b, c) -> M(a, c)``.
        shift: grading tag carried along for bookkeeping only.
    """

    def __init__(self, category: FinCategory, carriers, left, right, shift: int = 0, name: str = ""):
        self.category = category
        objs = category.objects
        self.carriers = {(a, b): tuple(carriers.get((a, b), ())) for a in objs for b in objs}
        self.left = {k: {ij: as_vector(v) for ij, v in t.items() if as_vector(v)} for k, t in left.items()}
        self.right = {k: {ij: as_vector(v) for ij, v in t.items() if as_vector(v)} for k, t in right.items()}
        self.left = {k: t for k, t in self.left.items() if t}
        self.right = {k: t for k, t in self.right.items() if t}
        self.shift = shift
        self.name = name

    def __repr__(self) -> str:
        return f"<Bimodule {self.name or ''} over {self.category!r}>"

    def dim(self, a, b) -> int:
        return len(self.carriers[(a, b)])

    def act_left(self, a, b, c, x: Mapping, m: Mapping) -> dict:
        return bilinear(self.left.get((a, b, c), {}), x, m)

    def act_right(self, a, b, c, m: Mapping, y: Mapping) -> dict:
        return bilinear(self.right.get((a, b, c), {}), m, y)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Bimodule)
            and self.carriers == other.carriers
            and self.left == other.left
            and self.right == other.right
        )

    __hash__ = object.__hash__

    def problems(self) -> list[str]:
        c = self.category
        out = []
        objs = c.objects
        for a, b in product(objs, repeat=2):
            for i in range(self.dim(a, b)):
                m = {i: Fraction(1)}
                if self.act_left(a, a, b, c.identities[a], m) != m:
                    out.append(f"left unit fails on {self.carriers[(a, b)][i]} in M({a},{b})")
                if self.act_right(a, b, b, m, c.identities[b]) != m:
                    out.append(f"right unit fails on {self.carriers[(a, b)][i]} in M({a},{b})")
        for a, b, d, e in product(objs, repeat=4):
            # x: a->b, y: b->d, m in M(d, e)
            if c.dim(a, b) and c.dim(b, d) and self.dim(d, e):
                for i, j, k in product(range(c.dim(a, b)), range(c.dim(b, d)), range(self.dim(d, e))):
                    x, y, m = {i: 1}, {j: 1}, {k: 1}
                    lhs = self.act_left(a, d, e, c.mul(a, b, d, x, y), m)
                    rhs = self.act_left(a, b, e, x, self.act_left(b, d, e, y, m))
                    if lhs != rhs:
                        out.append(f"left action not associative on ({a},{b},{d},{e}) basis ({i},{j},{k})")
            # m in M(a, b), y: b->d, z: d->e
            if self.dim(a, b) and c.dim(b, d) and c.dim(d, e):
                for i, j, k in product(range(self.dim(a, b)), range(c.dim(b, d)), range(c.dim(d, e))):
                    m, y, z = {i: 1}, {j: 1}, {k: 1}
                    lhs = self.act_right(a, d, e, self.act_right(a, b, d, m, y), z)
                    rhs = self.act_right(a, b, e, m, c.mul(b, d, e, y, z))
                    if lhs != rhs:
                        out.append(f"right action not associative on ({a},{b},{d},{e}) basis ({i},{j},{k})")
            # x: a->b, m in M(b, d), z: d->e
            if c.dim(a, b) and self.dim(b, d) and c.dim(d, e):
                for i, j, k in product(range(c.dim(a, b)), range(self.dim(b, d)), range(c.dim(d, e))):
                    x, m, z = {i: 1}, {j: 1}, {k: 1}
                    lhs = self.act_right(a, d, e, self.act_left(a, b, d, x, m), z)
                    rhs = self.act_left(a, b, e, x, self.act_right(b, d, e, m, z))
                    if lhs != rhs:
                        out.append(f"actions do not commute on ({a},{b},{d},{e}) basis ({i},{j},{k})")
        return out

    def validate(self) -> "Bimodule":
        problems = self.problems()
        if problems:
            raise ValidationError(problems)
        return self


def regular_bimodule(c: FinCategory) -> Bimodule:
    """The category acting on its own hom spaces by composition."""
    return Bimodule(c, c.homs, c.products, c.products, name="regular")


def twisted_bimodule(c: FinCategory, auto: LinearFunctor) -> Bimodule:
    """hom(a, b) with right action through an automorphism: m . y = m * auto(y).

    The automorphism must fix objects.  The result is invertible.
    """
    if auto.source != c or auto.target != c or any(auto.objmap[a] != a for a in c.objects):
        raise ValueError("twisting needs an object-fixing endofunctor of the category")
    right = {}
    for a, b, d in product(c.objects, repeat=3):
        if not (c.dim(a, b) and c.dim(b, d)):
            continue
        table = {}
        for i, j in product(range(c.dim(a, b)), range(c.dim(b, d))):
            w = c.mul(a, b, d, {i: 1}, auto.apply(b, d, {j: 1}))
            if w:
                table[(i, j)] = w
        right[(a, b, d)] = table
    return Bimodule(c, c.homs, c.products, right, name="twisted").validate()


def restrict_bimodule(f: LinearFunctor, m: Bimodule) -> Bimodule:
    """Pull ``m`` back along ``f``: (f*M)(i, j) = M(f i, f j)."""
    y = f.source
    fo = f.objmap
    carriers = {(a, b): m.carriers[(fo[a], fo[b])] for a in y.objects for b in y.objects}
    left, right = {}, {}
    for a, b, c in product(y.objects, repeat=3):
        fa, fb, fc = fo[a], fo[b], fo[c]
        if y.dim(a, b) and m.dim(fb, fc):
            table = {}
            for i in range(y.dim(a, b)):
                img = f.apply(a, b, {i: 1})
                for j in range(m.dim(fb, fc)):
                    w = m.act_left(fa, fb, fc, img, {j: 1})
                    if w:
                        table[(i, j)] = w
            left[(a, b, c)] = table
        if m.dim(fa, fb) and y.dim(b, c):
            table = {}
            for j in range(y.dim(b, c)):
                img = f.apply(b, c, {j: 1})
                for i in range(m.dim(fa, fb)):
                    w = m.act_right(fa, fb, fc, {i: 1}, img)
                    if w:
                        table[(i, j)] = w
            right[(a, b, c)] = table
    return Bimodule(y, carriers, left, right, shift=m.shift, name=f"pullback of {m.name}")


def tensor_bimodule(m: Bimodule, i: FinCategory) -> Bimodule:
    """M (x) I over c (x) i, where I is i's regular bimodule."""
    c = m.category
    ci = tensor_categories(c, i)
    carriers = {}
    for (x, p), (y, q) in product(ci.objects, repeat=2):
        carriers[((x, p), (y, q))] = tuple((u, v) for u in m.carriers[(x, y)] for v in i.homs[(p, q)])

    def combine(tm: dict, ti: dict, n1: int, n2: int, n3: int) -> dict:
        table = {}
        for (a, b), va in tm.items():
            for (s, t), vs in ti.items():
                table[(a * n1 + s, b * n2 + t)] = {
                    k * n3 + l: ca * cs for k, ca in va.items() for l, cs in vs.items()
                }
        return table

    left, right = {}, {}
    for (x, p), (y, q), (z, r) in product(ci.objects, repeat=3):
        ti = i.table(p, q, r)
        if not ti:
            continue
        n1, n2, n3 = i.dim(p, q), i.dim(q, r), i.dim(p, r)
        tl = m.left.get((x, y, z))
        if tl:
            left[((x, p), (y, q), (z, r))] = combine(tl, ti, n1, n2, n3)
        tr = m.right.get((x, y, z))
        if tr:
            right[((x, p), (y, q), (z, r))] = combine(tr, ti, n1, n2, n3)
    return Bimodule(ci, carriers, left, right, shift=m.shift, name=f"{m.name}(x){i.name}")


# ---------------------------------------------------------------- modules


class Module:
    """U(a) per object with an action U(a) (x) hom(a, b) -> U(b), written u . x."""

    def __init__(self, category: FinCategory, carriers, action, name: str = ""):
        self.category = category
        self.carriers = {a: tuple(carriers.get(a, ())) for a in category.objects}
        self.action = {}
        for k, t in action.items():
            clean = {ij: as_vector(v) for ij, v in t.items() if as_vector(v)}
            if clean:
                self.action[k] = clean
        self.name = name

    def __repr__(self) -> str:
        return f"<Module {self.name or ''} dims={[self.dim(a) for a in self.category.objects]}>"

    def dim(self, a) -> int:
        return len(self.carriers[a])

    def act(self, a, b, u: Mapping, x: Mapping) -> dict:
        return bilinear(self.action.get((a, b), {}), u, x)

    def problems(self) -> list[str]:
        c = self.category
        out = []
        for a in c.objects:
            for i in range(self.dim(a)):
                u = {i: Fraction(1)}
                if self.act(a, a, u, c.identities[a]) != u:
                    out.append(f"unit fails on {self.carriers[a][i]} in U({a})")
        for a, b, d in product(c.objects, repeat=3):
            if not (self.dim(a) and c.dim(a, b) and c.dim(b, d)):
                continue
            for i, j, k in product(range(self.dim(a)), range(c.dim(a, b)), range(c.dim(b, d))):
                u, x, y = {i: 1}, {j: 1}, {k: 1}
                if self.act(b, d, self.act(a, b, u, x), y) != self.act(a, d, u, c.mul(a, b, d, x, y)):
                    out.append(f"action not associative on ({a},{b},{d}) basis ({i},{j},{k})")
        return out

    def validate(self) -> "Module":
        problems = self.problems()
        if problems:
            raise ValidationError(problems)
        return self


def representable_module(c: FinCategory, a) -> Module:
    """hom(a, -) acting by composition."""
    return Module(
        c,
        {b: c.homs[(a, b)] for b in c.objects},
        {(b, d): c.table(a, b, d) for b in c.objects for d in c.objects},
        name=f"hom({a},-)",
    )


def module_from_matrices(c: FinCategory, carriers, matrices) -> Module:
    """Module from action matrices: ``matrices[(a, b)][j]`` is the dense matrix
    (rows = U(b) basis, cols = U(a) basis) of acting by basis ``j`` of hom(a, b)."""
    action = {}
    for (a, b), mats in matrices.items():
        table = {}
        for j, mat in mats.items():
            for r, row in enumerate(mat):
                for col, v in enumerate(row):
                    if v:
                        table.setdefault((col, j), {})[r] = as_rational(v)
        action[(a, b)] = table
    return Module(c, carriers, action).validate()


# ---------------------------------------------------------------- quotient helper


def quotient_basis(dim: int, relations: list[dict]) -> tuple[list[int], callable]:
    """Coordinates of V / span(relations).

    Returns the surviving coordinate indices of V (non-pivot columns of the
    relation echelon form) and a function reducing a vector of V to quotient
    coordinates indexed by position in that list.
    """
    rels = [r for r in relations if r]
    if not rels:
        keep = list(range(dim))
        return keep, lambda v: dict(v)
    m = Matrix(len(rels), dim, {(i, k): x for i, r in enumerate(rels) for k, x in r.items()})
    rows, pivots = rref(m)
    keep = [k for k in range(dim) if k not in set(pivots)]
    pos = {k: n for n, k in enumerate(keep)}
    reducers = [(p, {k: x for k, x in enumerate(row) if x}) for row, p in zip(rows, pivots)]

    def reduce(v: Mapping) -> dict:
        w = dict(v)
        for p, row in reducers:
            if w.get(p):
                vec_add(w, row, -w[p])
        return {pos[k]: x for k, x in w.items() if x}

    return keep, reduce


# ---------------------------------------------------------------- toy library


def ground_field() -> FinCategory:
    return build_one_object_category(algebra_from_table(["1"], [[[1]]], "1"), name="Q")


def truncated_polynomials(k: int, var: str = "x") -> Algebra:
    """Q[x]/(x^k) with basis 1, x, ..., x^(k-1)."""
    labels = ["1"] + [var if e == 1 else f"{var}^{e}" for e in range(1, k)]
    table = {(i, j): {i + j: 1} for i in range(k) for j in range(k) if i + j < k}
    return algebra_from_table(labels, table, "1")


def dual_numbers() -> FinCategory:
    return build_one_object_category(truncated_polynomials(2, "eps"), name="dual_numbers")


def path_algebra_a2() -> Algebra:
    """Path algebra of 1 --a--> 2 with basis e1, e2, a (path order products)."""
    return algebra_from_table(
        ["e1", "e2", "a"],
        {(0, 0): [1, 0, 0], (1, 1): [0, 1, 0], (0, 2): [0, 0, 1], (2, 1): [0, 0, 1]},
        [1, 1, 0],
    )


def a2_category() -> FinCategory:
    return build_one_object_category(path_algebra_a2(), name="A2")


def p1_cover_spec() -> CoverSpec:
    """Two-chart toy of P^1 truncated at order 3.

    U_1 = Q[x]/x^3, U_2 = Q[y]/y^3, and U_12 = span{x^-2, ..., x^2} realized as
    Q[x, y]/(x^3, y^3, xy) with y playing x^-1; mixed products are truncated to zero.
    """
    u1, u2 = frozenset({1}), frozenset({2})
    u12 = u1 | u2
    basis12 = ["x^-2", "x^-1", "1", "x", "x^2"]
    power = {-2: 0, -1: 1, 0: 2, 1: 3, 2: 4}
    table = {}
    for a, ia in power.items():
        for b, ib in power.items():
            if a == 0 or b == 0:
                s = a + b
            elif (a > 0) == (b > 0) and abs(a + b) <= 2:
                s = a + b
            else:
                continue
            table[(ia, ib)] = {power[s]: 1}
    rings = {
        u1: truncated_polynomials(3, "x"),
        u2: truncated_polynomials(3, "y"),
        u12: algebra_from_table(basis12, table, "1"),
    }
    restrictions = {
        (u1, u12): {0: {2: 1}, 1: {3: 1}, 2: {4: 1}},
        (u2, u12): {0: {2: 1}, 1: {1: 1}, 2: {0: 1}},
    }
    return CoverSpec(rings, restrictions)


def poset_cover_spec(n: int = 2) -> CoverSpec:
    """All nonempty subsets of {1..n} with ring Q and identity restrictions."""
    from itertools import combinations

    q = algebra_from_table(["1"], [[[1]]], "1")
    subsets = [frozenset(s) for k in range(1, n + 1) for s in combinations(range(1, n + 1), k)]
    rings = {s: q for s in subsets}
    restrictions = {(s, t): {0: {0: 1}} for s in subsets for t in subsets if s < t}
    return CoverSpec(rings, restrictions)


def scaling_automorphism(c: FinCategory, weights: Mapping) -> LinearFunctor:
    """Object-fixing functor scaling basis ``j`` of hom(a, b) by ``weights[(a, b)][j]``.

    The caller is responsible for choosing weights compatible with composition;
    the result is validated.
    """
    maps = {
        (a, b): {j: {j: weights.get((a, b), {}).get(j, 1)} for j in range(c.dim(a, b))}
        for a, b in c.nonzero_pairs()
    }
    return LinearFunctor(c, c, {a: a for a in c.objects}, maps).validate()


def trivial_module(c: FinCategory, obj=None) -> Module:
    """The one-dimensional module of a local one-object category (radical acts by 0)."""
    if obj is None:
        (obj,) = c.objects
    ident = c.identities[obj]
    if ident != {0: 1}:
        raise ValueError("expected the identity to be basis vector 0")
    return Module(c, {obj: ("k",)}, {(obj, obj): {(0, 0): {0: 1}}}, name="simple").validate()
