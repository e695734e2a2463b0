"""Sparse graded multilinear maps between hom spaces of a graded quiver.

A multilinear map of arity ``k`` is a dict

    {(objects, indices): {output index: Fraction}}

where ``objects = (X0, ..., Xk)`` and ``indices = (i1, ..., ik)`` with ``i_j`` a
basis index of ``hom(X_{j-1}, X_j)``; the output lives in ``hom(X0, Xk)`` (or in
a coefficient space over the same pair).  Arity-0 maps have ``objects = (X,)``.

Signs.  Internally operations are handled in the *bar* (suspended) convention,
where a basis element of degree ``g`` has shifted degree ``g - 1`` and every
operation ``b_k`` has degree +1.  There the only signs are Koszul signs.  A map
``m`` in the unshifted convention corresponds to ``b = s o m o (s^-1)^{(x) k}``,
i.e. each entry is multiplied by ``(-1)^eps`` with

    eps = sum_j (k - j) * (|x_j| - 1).

With this dictionary the A-infinity relation of a square-zero extension at
arity ``mdeg + 1`` is exactly the Hochschild cocycle condition with the
alternating-sum differential, with no extra sign.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Callable, Iterable, Mapping

from .fincat import Bimodule, FinCategory, vec_add

MultiMap = dict


class GradedQuiver:
    """Objects plus graded hom spaces; ``degrees[(a, b)]`` lists basis degrees."""

    def __init__(self, objects: Iterable, degrees: Mapping):
        self.objects = tuple(objects)
        self.degrees = {
            (a, b): tuple(degrees.get((a, b), ())) for a in self.objects for b in self.objects
        }

    def dim(self, a, b) -> int:
        return len(self.degrees[(a, b)])

    def deg(self, a, b, i) -> int:
        return self.degrees[(a, b)][i]

    def nonzero_pairs(self) -> list[tuple]:
        return [k for k, v in self.degrees.items() if v]


def ungraded_quiver(c: FinCategory) -> GradedQuiver:
    return GradedQuiver(c.objects, {k: (0,) * len(v) for k, v in c.homs.items()})


def input_degree(q: GradedQuiver, objs: tuple, idx: tuple) -> int:
    return sum(q.deg(objs[j], objs[j + 1], i) for j, i in enumerate(idx))


def bar_sign(q: GradedQuiver, objs: tuple, idx: tuple) -> int:
    k = len(idx)
    eps = 0
    for j, i in enumerate(idx):
        eps += (k - 1 - j) * (q.deg(objs[j], objs[j + 1], i) - 1)
    return -1 if eps % 2 else 1


def to_bar(q: GradedQuiver, mm: MultiMap) -> MultiMap:
    """Convert an unshifted map to the bar convention (the conversion is an involution)."""
    out = {}
    for (objs, idx), vec in mm.items():
        s = bar_sign(q, objs, idx)
        out[(objs, idx)] = dict(vec) if s == 1 else {k: -v for k, v in vec.items()}
    return out


from_bar = to_bar


def clean(mm: MultiMap) -> MultiMap:
    return {k: v for k, v in mm.items() if v}


def add_into(acc: MultiMap, mm: MultiMap, c=1) -> MultiMap:
    for key, vec in mm.items():
        vec_add(acc.setdefault(key, {}), vec, c)
    return acc


def scale(mm: MultiMap, c) -> MultiMap:
    return clean({k: {o: c * v for o, v in vec.items()} for k, vec in mm.items()})


def by_output(mm: MultiMap) -> dict:
    """Index entries of ``mm`` by (source object, target object, output index)."""
    index = defaultdict(list)
    for (objs, idx), vec in mm.items():
        for out, c in vec.items():
            index[(objs[0], objs[-1], out)].append((objs, idx, c))
    return index


def insert(
    q: GradedQuiver,
    outer: MultiMap,
    inner: MultiMap,
    r: int,
    inner_degree: int,
    inner_index: dict | None = None,
) -> MultiMap:
    """``outer o (1^r (x) inner (x) 1^t)`` in the bar convention.

    The Koszul sign is ``(-1)^(inner_degree * sum of shifted degrees of the
    first r inputs)``; both maps must already be in the bar convention.
    """
    index = inner_index if inner_index is not None else by_output(inner)
    result: MultiMap = {}
    for (objs, idx), vec in outer.items():
        if r >= len(idx):
            continue
        hits = index.get((objs[r], objs[r + 1], idx[r]))
        if not hits:
            continue
        sign = 1
        if inner_degree % 2:
            shifted = sum(q.deg(objs[j], objs[j + 1], idx[j]) - 1 for j in range(r))
            sign = -1 if shifted % 2 else 1
        head_o, tail_o = objs[:r], objs[r + 2 :]
        head_i, tail_i = idx[:r], idx[r + 1 :]
        for iobjs, iidx, c in hits:
            key = (head_o + iobjs + tail_o, head_i + iidx + tail_i)
            vec_add(result.setdefault(key, {}), vec, sign * c)
    return clean(result)


def map_degree(q_in: GradedQuiver, q_out_deg: Callable, mm: MultiMap) -> set[int]:
    """Set of unshifted degrees (output degree minus input degree) occurring in ``mm``."""
    degs = set()
    for (objs, idx), vec in mm.items():
        din = input_degree(q_in, objs, idx)
        for out in vec:
            degs.add(q_out_deg(objs[0], objs[-1], out) - din)
    return degs


# ---------------------------------------------------------------- square-zero layout


def square_zero_degrees(c: FinCategory, m: Bimodule, shift: int) -> GradedQuiver:
    """hom(a, b) in degree 0 followed by M(a, b) in degree ``shift``."""
    degs = {}
    for a in c.objects:
        for b in c.objects:
            degs[(a, b)] = (0,) * c.dim(a, b) + (shift,) * m.dim(a, b)
    return GradedQuiver(c.objects, degs)


def square_zero_m2(c: FinCategory, m: Bimodule) -> MultiMap:
    """(x, u)(x', u') = (x x', x u' + u x') on the square-zero layout, unshifted."""
    ops: MultiMap = {}
    for (a, b, d), table in c.products.items():
        for (i, j), v in table.items():
            ops[((a, b, d), (i, j))] = dict(v)
    for (a, b, d), table in m.left.items():
        off_bd, off_ad = c.dim(b, d), c.dim(a, d)
        for (i, j), v in table.items():
            ops[((a, b, d), (i, off_bd + j))] = {off_ad + k: x for k, x in v.items()}
    for (a, b, d), table in m.right.items():
        off_ab, off_ad = c.dim(a, b), c.dim(a, d)
        for (i, j), v in table.items():
            ops[((a, b, d), (off_ab + i, j))] = {off_ad + k: x for k, x in v.items()}
    return ops


def embed_coefficients(c: FinCategory, mm: MultiMap) -> MultiMap:
    """Shift output indices of an M-valued map into the square-zero layout."""
    return {
        (objs, idx): {c.dim(objs[0], objs[-1]) + k: v for k, v in vec.items()}
        for (objs, idx), vec in mm.items()
    }


def extract_coefficients(c: FinCategory, mm: MultiMap) -> MultiMap:
    """Keep inputs from the category part and outputs in the coefficient part."""
    out = {}
    for (objs, idx), vec in mm.items():
        if any(i >= c.dim(objs[j], objs[j + 1]) for j, i in enumerate(idx)):
            continue
        off = c.dim(objs[0], objs[-1])
        w = {k - off: v for k, v in vec.items() if k >= off}
        if w:
            out[(objs, idx)] = w
    return out
