"""Hochschild cochains of a finite k-linear category with bimodule coefficients.

A degree-n cochain assigns to every object tuple ``(X0, ..., Xn)`` a linear map
``hom(X0, X1) (x) ... (x) hom(X_{n-1}, Xn) -> M(X0, Xn)``, stored sparsely as a
:data:`~hhdeform.multilinear.MultiMap`.  The differential is

    (df)(x1, ..., x_{n+1}) = x1 . f(x2, ..., x_{n+1})
                           + sum_{i=1..n} (-1)^i f(..., x_i x_{i+1}, ...)
                           + (-1)^{n+1} f(x1, ..., xn) . x_{n+1}

with products in path order (see :mod:`hhdeform.fincat`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Mapping

from . import multilinear as ml
from .fincat import (
    Bimodule,
    FinCategory,
    Module,
    path_products,
    quotient_basis,
    restrict_bimodule,
    tensor_bimodule,
    tensor_categories,
    unital_rebasing,
    vec_add,
)
from .linalg import Matrix, cohomology_dim, nullspace, solve_linear

DEFAULT_MAX_DEGREE = 6


class NotACocycleError(ValueError):
    pass


def paths(c: FinCategory, n: int, dims=None) -> Iterator[tuple]:
    """Object tuples (X0..Xn) whose consecutive hom spaces are all nonzero."""
    dims = dims or c.dim
    if n == 0:
        for a in c.objects:
            yield (a,)
        return
    for prefix in paths(c, n - 1, dims):
        for b in c.objects:
            if dims(prefix[-1], b):
                yield prefix + (b,)


class Cochain:
    """A Hochschild cochain of ``degree`` (= arity) over ``(category, bimodule)``.

    ``shift`` is the internal degree of the values; it does not enter the
    differential.
    """

    def __init__(self, category: FinCategory, bimodule: Bimodule, degree: int, data=None, shift: int = 0):
        if bimodule.category is not category and bimodule.category != category:
            raise ValueError("bimodule lives over a different category")
        self.category = category
        self.bimodule = bimodule
        self.degree = degree
        self.shift = shift
        clean = {}
        for (objs, idx), vec in (data or {}).items():
            objs, idx = tuple(objs), tuple(idx)
            if len(objs) != degree + 1 or len(idx) != degree:
                raise ValueError(f"entry {objs}/{idx} does not have arity {degree}")
            for j, i in enumerate(idx):
                if not 0 <= i < category.dim(objs[j], objs[j + 1]):
                    raise ValueError(f"input index {i} out of range at {objs}")
            dm = bimodule.dim(objs[0], objs[-1])
            vec = {int(k): Fraction(v) for k, v in vec.items() if v}
            if any(not 0 <= k < dm for k in vec):
                raise ValueError(f"output index out of range at {objs}")
            if vec:
                clean[(objs, idx)] = vec
        self.data = clean

    @classmethod
    def zero(cls, c: FinCategory, m: Bimodule, n: int, shift: int = 0) -> "Cochain":
        return cls(c, m, n, {}, shift)

    def _like(self, data) -> "Cochain":
        return Cochain(self.category, self.bimodule, self.degree, data, self.shift)

    def _check_same(self, other: "Cochain"):
        if self.degree != other.degree or self.bimodule is not other.bimodule and self.bimodule != other.bimodule:
            raise ValueError("cochains live in different spaces")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_same(other)
        return self._like(ml.add_into({k: dict(v) for k, v in self.data.items()}, other.data))

    def __neg__(self) -> "Cochain":
        return self._like(ml.scale(self.data, -1))

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __rmul__(self, c) -> "Cochain":
        return self._like(ml.scale(self.data, Fraction(c)))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Cochain)
            and self.degree == other.degree
            and self.data == other.data
        )

    __hash__ = object.__hash__

    def is_zero(self) -> bool:
        return not self.data

    def value(self, objs, idx) -> dict:
        return dict(self.data.get((tuple(objs), tuple(idx)), {}))

    def __repr__(self) -> str:
        return f"<Cochain degree={self.degree} shift={self.shift} nnz={len(self.data)}>"


class CochainSpace:
    """Coordinates of CC^n: one per (object tuple, input indices, output index)."""

    def __init__(self, c: FinCategory, m: Bimodule, n: int, normalized: bool = False):
        if normalized:
            for a in c.objects:
                if c.dim(a, a) and c.identities[a] != {0: 1}:
                    raise ValueError("normalized cochains need identities as basis vector 0")
        self.category, self.bimodule, self.degree = c, m, n
        self.normalized = normalized
        self.coords: list[tuple] = []
        for objs in paths(c, n):
            dm = m.dim(objs[0], objs[-1])
            if not dm:
                continue
            ranges = []
            for j in range(n):
                d = c.dim(objs[j], objs[j + 1])
                ranges.append(range(1, d) if normalized and objs[j] == objs[j + 1] else range(d))
            for idx in product(*ranges):
                for k in range(dm):
                    self.coords.append((objs, idx, k))
        self.index = {co: n for n, co in enumerate(self.coords)}

    @property
    def dim(self) -> int:
        return len(self.coords)

    def to_vector(self, x: Cochain) -> list[Fraction]:
        v = [Fraction(0)] * self.dim
        for (objs, idx), vec in x.data.items():
            for k, val in vec.items():
                pos = self.index.get((objs, idx, k))
                if pos is None:
                    raise ValueError(f"cochain has a coordinate {objs}/{idx}/{k} outside this space")
                v[pos] = val
        return v

    def from_vector(self, v, shift: int = 0) -> Cochain:
        data: dict = {}
        for pos, val in enumerate(v):
            if val:
                objs, idx, k = self.coords[pos]
                data.setdefault((objs, idx), {})[k] = Fraction(val)
        return Cochain(self.category, self.bimodule, self.degree, data, shift)

    def basis_cochain(self, pos: int) -> Cochain:
        objs, idx, k = self.coords[pos]
        return Cochain(self.category, self.bimodule, self.degree, {(objs, idx): {k: 1}})


def _spaces(c: FinCategory, m: Bimodule, n: int, normalized: bool) -> CochainSpace:
    cache = m.__dict__.setdefault("_hh_spaces", {})
    key = (id(c), n, normalized)
    if key not in cache:
        cache[key] = CochainSpace(c, m, n, normalized)
    return cache[key]


def differential_matrix(c: FinCategory, m: Bimodule, n: int, normalized: bool = False) -> Matrix:
    """Matrix of d: CC^n -> CC^{n+1} in the coordinates of :class:`CochainSpace`."""
    cache = m.__dict__.setdefault("_hh_diff", {})
    key = (id(c), n, normalized)
    if key in cache:
        return cache[key]
    src = _spaces(c, m, n, normalized)
    tgt = _spaces(c, m, n + 1, normalized)
    col = src.index
    ent: dict = {}
    seen_rows = set()
    for row_pos, (objs, idx, k) in enumerate(tgt.coords):
        key_oi = (objs, idx)
        if key_oi in seen_rows:
            continue
        seen_rows.add(key_oi)
        x0, xl = objs[0], objs[-1]
        dm = m.dim(x0, xl)
        base = tgt.index[(objs, idx, 0)]
        acc: dict = {}

        def put(out_k, pos, coeff):
            if pos is None:
                return
            r = base + out_k
            acc[(r, pos)] = acc.get((r, pos), 0) + coeff

        # x1 . f(x2, ..., x_{n+1})
        table = m.left.get((x0, objs[1], xl), {})
        for l in range(m.dim(objs[1], xl)):
            w = table.get((idx[0], l))
            if w:
                pos = col.get((objs[1:], idx[1:], l))
                for kk, cval in w.items():
                    put(kk, pos, cval)
        # (-1)^s f(..., x_s x_{s+1}, ...)
        for s in range(1, n + 1):
            w = c.table(objs[s - 1], objs[s], objs[s + 1]).get((idx[s - 1], idx[s]))
            if not w:
                continue
            sign = -1 if s % 2 else 1
            new_objs = objs[:s] + objs[s + 1 :]
            for j, cval in w.items():
                new_idx = idx[: s - 1] + (j,) + idx[s + 1 :]
                for kk in range(dm):
                    put(kk, col.get((new_objs, new_idx, kk)), sign * cval)
        # (-1)^{n+1} f(x1, ..., xn) . x_{n+1}
        table = m.right.get((x0, objs[n], xl), {})
        sign = -1 if (n + 1) % 2 else 1
        for l in range(m.dim(x0, objs[n])):
            w = table.get((l, idx[n]))
            if w:
                pos = col.get((objs[:-1], idx[:-1], l))
                for kk, cval in w.items():
                    put(kk, pos, sign * cval)
        for key2, v in acc.items():
            if v:
                ent[key2] = v
    mat = Matrix(tgt.dim, src.dim, ent)
    cache[key] = mat
    return mat


def hochschild_differential(c: FinCategory, m: Bimodule, x: Cochain) -> Cochain:
    """The Hochschild differential of ``x``; same shift, degree + 1."""
    if x.category is not c and x.category != c:
        raise ValueError("cochain lives over a different category")
    if x.bimodule is not m and x.bimodule != m:
        raise ValueError("cochain takes values in a different bimodule")
    d = differential_matrix(c, m, x.degree)
    src = _spaces(c, m, x.degree, False)
    tgt = _spaces(c, m, x.degree + 1, False)
    return tgt.from_vector(d @ src.to_vector(x), x.shift)


def is_cocycle(x: Cochain) -> bool:
    return hochschild_differential(x.category, x.bimodule, x).is_zero()


@dataclass(frozen=True)
class CohomologyClass:
    """A cocycle together with the (already verified) statement that dx = 0."""

    representative: Cochain
    certificate: bool = True

    @classmethod
    def of(cls, x: Cochain) -> "CohomologyClass":
        if not is_cocycle(x):
            raise NotACocycleError("representative is not a cocycle")
        return cls(x, True)


def hh_dimension(
    c: FinCategory, m: Bimodule, n: int, normalized: bool = True, max_degree: int = DEFAULT_MAX_DEGREE
) -> int:
    """dim HH^n(c, m) as dim ker d_n - rank d_{n-1}."""
    if n < 0:
        raise ValueError("Hochschild degree must be non-negative")
    if n + 1 > max_degree + 1 or n > max_degree:
        raise ValueError(f"degree {n} exceeds the materialization bound {max_degree}")
    if normalized:
        c2, iso = unital_rebasing(c)
        m2 = restrict_bimodule(iso, m)
        c, m = c2, m2
    d_out = differential_matrix(c, m, n, normalized)
    if n == 0:
        d_in = Matrix(d_out.cols, 0)
    else:
        d_in = differential_matrix(c, m, n - 1, normalized)
    return cohomology_dim(d_out, d_in)


def cocycle_basis(c: FinCategory, m: Bimodule, n: int) -> list[Cochain]:
    """A basis of the degree-n cocycles (unnormalized)."""
    space = _spaces(c, m, n, False)
    return [space.from_vector(v) for v in nullspace(differential_matrix(c, m, n))]


def coboundary_solve(c: FinCategory, m: Bimodule, target: Cochain) -> Cochain | None:
    """Some theta with d(theta) = target, or None."""
    n = target.degree
    if n == 0:
        return None
    src = _spaces(c, m, n - 1, False)
    tgt = _spaces(c, m, n, False)
    sol = solve_linear(differential_matrix(c, m, n - 1), tgt.to_vector(target))
    if sol is None:
        return None
    return src.from_vector(sol, target.shift)


def cohomologous_witness(eta: Cochain, mu: Cochain) -> Cochain | None:
    """Some theta with d(theta) = eta - mu, or None if the classes differ."""
    if eta.degree != mu.degree:
        raise ValueError("cochains of different degree")
    if eta.degree < 1:
        raise ValueError("witnesses exist only in positive degree")
    for name, x in (("eta", eta), ("mu", mu)):
        if not is_cocycle(x):
            raise NotACocycleError(f"{name} is not a cocycle")
    return coboundary_solve(eta.category, eta.bimodule, eta - mu)


# ---------------------------------------------------------------- bracket


def gerstenhaber_bracket(f: Cochain, k: int, ops: Mapping | None = None, quiver=None) -> Cochain:
    """[f, m_k] for a cochain f valued in an A-infinity bimodule.

    The bimodule structure is read from an A-infinity category on the
    square-zero layout ``hom (+) M[shift]``: ``ops`` maps arities to unshifted
    multilinear maps and ``quiver`` gives the grading.  By default this is the
    square-zero extension with only m_2, i.e. the ordinary bimodule.

    Computed as ``F o B_k - (-1)^{|F|} B_k o F`` in the bar convention, with
    Koszul signs only.  With m_2 this gives ``(-1)^i d f`` for f of arity i.
    """
    c, m = f.category, f.bimodule
    i = f.degree
    if i < 0 or k < 1:
        raise ValueError("bracket needs f of arity >= 0 and m_k of arity >= 1")
    if quiver is None:
        quiver = ml.square_zero_degrees(c, m, f.shift)
        ops = {2: ml.square_zero_m2(c, m)}
    for a, b in quiver.nonzero_pairs():
        if quiver.dim(a, b) != c.dim(a, b) + m.dim(a, b):
            raise ValueError("operations do not live on the square-zero layout of f")
    mk = ops.get(k, {})
    result_arity = i + k - 1
    if not mk:
        return Cochain.zero(c, m, result_arity, f.shift + 2 - k)
    fb = ml.to_bar(quiver, ml.embed_coefficients(c, f.data))
    bk = ml.to_bar(quiver, mk)
    f_deg = f.shift + i - 1  # bar degree of f
    total: dict = {}
    bk_index = ml.by_output(bk)
    for r in range(i):
        ml.add_into(total, ml.insert(quiver, fb, bk, r, 1, bk_index))
    sign = -1 if (f_deg % 2) else 1
    f_index = ml.by_output(fb)
    for j in range(k):
        ml.add_into(total, ml.insert(quiver, bk, fb, j, f_deg, f_index), -sign)
    out = ml.extract_coefficients(c, ml.from_bar(quiver, ml.clean(total)))
    return Cochain(c, m, result_arity, out, f.shift + 2 - k)


# ---------------------------------------------------------------- cup with identity


def cup_identity_extend(eta: Cochain, i: FinCategory) -> Cochain:
    """eta u Id over c (x) i with values in M (x) I.

    On pure tensors: (x1 (x) i1, ..., xn (x) in) |-> eta(x1..xn) (x) (i1 ... in).
    """
    c, m = eta.category, eta.bimodule
    ci = tensor_categories(c, i)
    mi = tensor_bimodule(m, i)
    n = eta.degree
    data: dict = {}
    for ipath in paths(i, n):
        prods = path_products(i, ipath)
        p0, pn = ipath[0], ipath[-1]
        ni = i.dim(p0, pn)
        for (objs, xidx), vec in eta.data.items():
            new_objs = tuple(zip(objs, ipath))
            for iidx, ivec in prods.items():
                dims = [i.dim(ipath[j], ipath[j + 1]) for j in range(n)]
                new_idx = tuple(x * d + y for x, y, d in zip(xidx, iidx, dims))
                out = {}
                for kx, a in vec.items():
                    for ky, b in ivec.items():
                        out[kx * ni + ky] = a * b
                data[(new_objs, new_idx)] = out
    return Cochain(ci, mi, n, data, eta.shift)


# ---------------------------------------------------------------- module-level Ext


def tensor_module_bimodule(g: Module, m: Bimodule) -> tuple[Module, callable]:
    """G (x)_c M as a module, plus ``embed(x, gi, mvec, y)`` giving [g_gi (x) mvec] in N(y)."""
    c = g.category
    free_coords: dict = {}
    reducers: dict = {}
    keeps: dict = {}
    for y in c.objects:
        coords = [(x, gi, mi) for x in c.objects for gi in range(g.dim(x)) for mi in range(m.dim(x, y))]
        pos = {co: n for n, co in enumerate(coords)}
        rels = []
        for x, x2 in product(c.objects, repeat=2):
            for gi, ai, mi in product(range(g.dim(x)), range(c.dim(x, x2)), range(m.dim(x2, y))):
                rel: dict = {}
                for gj, v in g.act(x, x2, {gi: 1}, {ai: 1}).items():
                    vec_add(rel, {pos[(x2, gj, mi)]: 1}, v)
                for mj, v in m.act_left(x, x2, y, {ai: 1}, {mi: 1}).items():
                    vec_add(rel, {pos[(x, gi, mj)]: 1}, -v)
                if rel:
                    rels.append(rel)
        keep, reduce = quotient_basis(len(coords), rels)
        free_coords[y] = pos
        reducers[y] = reduce
        keeps[y] = [coords[k] for k in keep]

    def embed(x, gi, mvec: Mapping, y) -> dict:
        pos = free_coords[y]
        return reducers[y]({pos[(x, gi, mi)]: v for mi, v in mvec.items()})

    action = {}
    for y, z in product(c.objects, repeat=2):
        table = {}
        for n, (x, gi, mi) in enumerate(keeps[y]):
            for bi in range(c.dim(y, z)):
                w = embed(x, gi, m.act_right(x, y, z, {mi: 1}, {bi: 1}), z)
                if w:
                    table[(n, bi)] = w
        action[(y, z)] = table
    carriers = {
        y: tuple(f"{g.carriers[x][gi]}*{m.carriers[(x, y)][mi]}" for x, gi, mi in keeps[y])
        for y in c.objects
    }
    return Module(c, carriers, action, name=f"{g.name}(x)M"), embed


def hom_bimodule_module(m: Bimodule, g: Module) -> tuple[Module, list]:
    """Hom_c(M, G) as a module: at x, families of maps M(x, y) -> G(y) compatible
    with the right actions.  Also returns, per object, the basis as dicts
    ``{(y, m_index): vector in G(y)}``."""
    c = g.category
    bases = {}
    for x in c.objects:
        unknowns = [(y, mi, gi) for y in c.objects for mi in range(m.dim(x, y)) for gi in range(g.dim(y))]
        pos = {u: n for n, u in enumerate(unknowns)}
        rows = []
        for y, z in product(c.objects, repeat=2):
            for mi, bi in product(range(m.dim(x, y)), range(c.dim(y, z))):
                # f_z(m . b) - f_y(m) . b = 0, one equation per output coordinate in G(z)
                eqs: dict = {}
                for mj, v in m.act_right(x, y, z, {mi: 1}, {bi: 1}).items():
                    for gz in range(g.dim(z)):
                        vec_add(eqs.setdefault(gz, {}), {pos[(z, mj, gz)]: 1}, v)
                for gi in range(g.dim(y)):
                    for gz, v in g.act(y, z, {gi: 1}, {bi: 1}).items():
                        vec_add(eqs.setdefault(gz, {}), {pos[(y, mi, gi)]: 1}, -v)
                rows += [e for e in eqs.values() if e]
        mat = Matrix(len(rows), len(unknowns), {(r, k): v for r, e in enumerate(rows) for k, v in e.items()})
        sols = nullspace(mat)
        basis = []
        for sol in sols:
            fam: dict = {}
            for n, v in enumerate(sol):
                if v:
                    y, mi, gi = unknowns[n]
                    fam.setdefault((y, mi), {})[gi] = v
            basis.append(fam)
        bases[x] = (basis, unknowns, pos, sols)

    action = {}
    for x, x2 in product(c.objects, repeat=2):
        basis2, unknowns2, pos2, sols2 = bases[x2]
        if not basis2 or not bases[x][0] or not c.dim(x, x2):
            continue
        coord_mat = Matrix(
            len(unknowns2), len(sols2), {(k, j): v for j, s in enumerate(sols2) for k, v in enumerate(s) if v}
        )
        table = {}
        for hi, fam in enumerate(bases[x][0]):
            for ai in range(c.dim(x, x2)):
                # (h . a)_y(m') = h_y(a . m') for m' in M(x2, y)
                vec = [Fraction(0)] * len(unknowns2)
                for y in c.objects:
                    for mi in range(m.dim(x2, y)):
                        for mj, v in m.act_left(x, x2, y, {ai: 1}, {mi: 1}).items():
                            for gi, w in fam.get((y, mj), {}).items():
                                vec[pos2[(y, mi, gi)]] += v * w
                if not any(vec):
                    continue
                sol = solve_linear(coord_mat, vec)
                if sol is None:
                    raise ArithmeticError("action does not preserve the hom module")
                table[(hi, ai)] = {j: v for j, v in enumerate(sol) if v}
        action[(x, x2)] = table
    carriers = {x: tuple(f"h{j}" for j in range(len(bases[x][0]))) for x in c.objects}
    return Module(c, carriers, action, name=f"Hom(M,{g.name})"), {x: bases[x][0] for x in c.objects}


def bar_space(c: FinCategory, g: Module, nmod: Module, n: int) -> list[tuple]:
    """Coordinates of Hom(G (x) hom^{(x) n}, N): (objects, (g index, inputs...), output)."""
    coords = []
    for objs in paths(c, n):
        dg, dn = g.dim(objs[0]), nmod.dim(objs[-1])
        if not (dg and dn):
            continue
        ranges = [range(dg)] + [range(c.dim(objs[j], objs[j + 1])) for j in range(n)]
        for idx in product(*ranges):
            for k in range(dn):
                coords.append((objs, idx, k))
    return coords


def bar_differential(c: FinCategory, g: Module, nmod: Module, n: int) -> tuple[Matrix, list, list]:
    """Matrix of the bar-resolution differential C^n(G, N) -> C^{n+1}(G, N).

    (dphi)(g, a1..a_{n+1}) = phi(g a1, a2..) + sum_i (-1)^i phi(g, .., a_i a_{i+1}, ..)
                             + (-1)^{n+1} phi(g, a1..an) a_{n+1}
    """
    src = bar_space(c, g, nmod, n)
    tgt = bar_space(c, g, nmod, n + 1)
    col = {co: p for p, co in enumerate(src)}
    ent: dict = {}
    for r, (objs, idx, k) in enumerate(tgt):
        gi, ins = idx[0], idx[1:]

        def put(pos, coeff):
            if pos is not None and coeff:
                ent[(r, pos)] = ent.get((r, pos), 0) + coeff

        for gj, v in g.act(objs[0], objs[1], {gi: 1}, {ins[0]: 1}).items():
            put(col.get((objs[1:], (gj,) + ins[1:], k)), v)
        for s in range(1, n + 1):
            w = c.table(objs[s - 1], objs[s], objs[s + 1]).get((ins[s - 1], ins[s]))
            if not w:
                continue
            sign = -1 if s % 2 else 1
            new_objs = objs[:s] + objs[s + 1 :]
            for j, v in w.items():
                put(col.get((new_objs, (gi,) + ins[: s - 1] + (j,) + ins[s + 1 :], k)), sign * v)
        sign = -1 if (n + 1) % 2 else 1
        for l in range(nmod.dim(objs[n])):
            w = nmod.act(objs[n], objs[n + 1], {l: 1}, {ins[n]: 1}).get(k)
            if w:
                put(col.get((objs[:-1], idx[:-1], l)), sign * w)
    return Matrix(len(tgt), len(src), ent), src, tgt


@dataclass
class CharacteristicClass:
    """Bar-resolution representative of c_G(eta) (or its dual) and the verdict."""

    degree: int
    representative: dict  # {(objects, (g, inputs...)): {k: value}}
    vanishes: bool
    witness: list | None
    coefficient_module: Module
    source_module: Module


def characteristic_class(eta: Cochain, g: Module, dual: bool = False) -> CharacteristicClass:
    """The Yoneda class of eta acting on the module ``g``.

    Non-dual: class in Ext^n(G, G (x) M) represented by (g, a..) |-> [g (x) eta(a..)].
    Dual: class in Ext^n(Hom(M, G), G) represented by (h, a..) |-> h(eta(a..)).
    The verdict says whether the representative is a coboundary.
    """
    c, m, n = eta.category, eta.bimodule, eta.degree
    if g.category is not c and g.category != c:
        raise ValueError("module lives over a different category")
    if n < 1:
        raise ValueError("characteristic classes are taken in positive degree")
    if not is_cocycle(eta):
        raise NotACocycleError("eta is not a cocycle")
    if not dual:
        nmod, embed = tensor_module_bimodule(g, m)
        src_mod = g
        rep: dict = {}
        for (objs, idx), vec in eta.data.items():
            for gi in range(g.dim(objs[0])):
                w = embed(objs[0], gi, vec, objs[-1])
                if w:
                    rep[(objs, (gi,) + idx)] = w
    else:
        src_mod, bases = hom_bimodule_module(m, g)
        nmod = g
        rep = {}
        for (objs, idx), vec in eta.data.items():
            for hi, fam in enumerate(bases[objs[0]]):
                out: dict = {}
                for mi, v in vec.items():
                    vec_add(out, fam.get((objs[-1], mi), {}), v)
                if out:
                    rep[(objs, (hi,) + idx)] = out
    d_prev, src, tgt = bar_differential(c, src_mod, nmod, n - 1)
    pos = {co: p for p, co in enumerate(tgt)}
    vec = [Fraction(0)] * len(tgt)
    for (objs, idx), w in rep.items():
        for k, v in w.items():
            vec[pos[(objs, idx, k)]] = v
    d_here, _, _ = bar_differential(c, src_mod, nmod, n)
    if any(d_here @ vec):
        raise ArithmeticError("characteristic representative failed to be a cocycle")
    sol = solve_linear(d_prev, vec)
    return CharacteristicClass(n, rep, sol is not None, sol, nmod, src_mod)


def module_lift_witness(u: Module, eta: Cochain, mdeg: int | None = None):
    """Solve for the arity-mdeg operation of a lift of ``u`` to the deformation.

    Returns the lift data (see :func:`hhdeform.ainf.lift_module`) or None.
    """
    from .ainf import lift_module

    return lift_module(u, eta, mdeg if mdeg is not None else eta.degree)
