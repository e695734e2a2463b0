"""Independent reference implementations used as the second route in tests.

Nothing here imports the package's linear algebra, cochain spaces, bar-sign
helpers or Hodge formulas.  Inputs are read only through the public structure
of categories/bimodules (hom dimensions, product tables, action tables).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb, factorial

import sympy


def frac_rank(rows: list[list]) -> int:
    """Rank by plain Gaussian elimination over Fractions."""
    m = [[Fraction(x) for x in row] for row in rows if any(row)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / p
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def _tuples(c, n):
    objs = c.objects
    for path in product(objs, repeat=n + 1):
        dims = [c.dim(path[j], path[j + 1]) for j in range(n)]
        for idx in product(*[range(d) for d in dims]):
            yield path, idx


def _add(acc, vec, coeff):
    for k, v in vec.items():
        acc[k] = acc.get(k, 0) + coeff * v


def _left(m, a, b, d, i, vec):
    out: dict = {}
    table = m.left.get((a, b, d), {})
    for k, v in vec.items():
        _add(out, table.get((i, k), {}), v)
    return out


def _right(m, a, b, d, vec, j):
    out: dict = {}
    table = m.right.get((a, b, d), {})
    for k, v in vec.items():
        _add(out, table.get((k, j), {}), v)
    return out


def differential(c, m, data: dict, n: int) -> dict:
    """(d f)(x1..x_{n+1}) evaluated on every basis tuple, straight from the formula."""
    out = {}
    for path, idx in _tuples(c, n + 1):
        acc: dict = {}
        _add(acc, _left(m, path[0], path[1], path[-1], idx[0], data.get((path[1:], idx[1:]), {})), 1)
        for i in range(1, n + 1):
            a, b, d = path[i - 1], path[i], path[i + 1]
            prod_vec = c.products.get((a, b, d), {}).get((idx[i - 1], idx[i]), {})
            for k, v in prod_vec.items():
                key = (path[:i] + path[i + 1 :], idx[: i - 1] + (k,) + idx[i + 1 :])
                _add(acc, data.get(key, {}), (-1) ** i * v)
        _add(acc, _right(m, path[0], path[-2], path[-1], data.get((path[:-1], idx[:-1]), {}), idx[-1]), (-1) ** (n + 1))
        acc = {k: v for k, v in acc.items() if v}
        if acc:
            out[(path, idx)] = acc
    return out


def _coords(c, m, n):
    return [(path, idx, k) for path, idx in _tuples(c, n) for k in range(m.dim(path[0], path[-1]))]


def differential_rows(c, m, n) -> list[list[Fraction]]:
    src, tgt = _coords(c, m, n), _coords(c, m, n + 1)
    pos = {co: i for i, co in enumerate(tgt)}
    cols = []
    for path, idx, k in src:
        img = differential(c, m, {(path, idx): {k: Fraction(1)}}, n)
        col = [Fraction(0)] * len(tgt)
        for (p2, i2), vec in img.items():
            for k2, v in vec.items():
                col[pos[(p2, i2, k2)]] = v
        cols.append(col)
    if not cols:
        return [[] for _ in tgt]
    return [list(r) for r in zip(*cols)]


def hh_dims(c, m, up_to: int) -> list[int]:
    """Unnormalized Hochschild cohomology dimensions by brute-force ranks."""
    dims = [len(_coords(c, m, n)) for n in range(up_to + 2)]
    ranks = [frac_rank(differential_rows(c, m, n)) if dims[n] and dims[n + 1] else 0 for n in range(up_to + 1)]
    return [dims[n] - ranks[n] - (ranks[n - 1] if n else 0) for n in range(up_to + 1)]


# ---------------------------------------------------------------- A-infinity relations, unshifted signs


def relation_failures(ops: dict, degrees: dict, objects, up_to: int) -> set[int]:
    """Arities n where sum (-1)^{r+st} m_{r+1+t}(1^r (x) m_s (x) 1^t) is nonzero.

    Elements carry the Koszul sign (-1)^{s * (|x_1| + ... + |x_r|)}.
    """
    bad = set()

    def apply(k, path, idx):
        return ops.get(k, {}).get((path, idx), {})

    def deg(a, b, i):
        return degrees[(a, b)][i]

    for n in range(3, up_to + 1):
        for path in product(objects, repeat=n + 1):
            dims = [len(degrees.get((path[j], path[j + 1]), ())) for j in range(n)]
            if not all(dims):
                continue
            for idx in product(*[range(d) for d in dims]):
                acc: dict = {}
                for s in range(2, n):
                    if s not in ops:
                        continue
                    for r in range(0, n - s + 1):
                        t = n - r - s
                        u = r + 1 + t
                        if u not in ops:
                            continue
                        inner = apply(s, path[r : r + s + 1], idx[r : r + s])
                        if not inner:
                            continue
                        koszul = s * sum(deg(path[j], path[j + 1], idx[j]) for j in range(r))
                        sign = -1 if (r + s * t + koszul) % 2 else 1
                        new_path = path[: r + 1] + path[r + s :]
                        for o, v in inner.items():
                            new_idx = idx[:r] + (o,) + idx[r + s :]
                            _add(acc, apply(u, new_path, new_idx), sign * v)
                if any(acc.values()):
                    bad.add(n)
                    break
            if n in bad:
                break
    return bad


# ---------------------------------------------------------------- Hodge-side oracles


def bott_by_euler_sequence(N: int, p: int, q: int, t: int) -> int:
    """h^q(P^N, Omega^p(t)) from chi via the Euler sequence plus the standard vanishing pattern.

    For (p, q, t) with t != 0 at most one q carries cohomology (q = 0 if t > p,
    q = N if t < p - N); for t = 0 only q = p.
    """

    def chi_o(s):
        # chi(O(s)) on P^N = (s + 1)(s + 2)...(s + N) / N!, valid for every integer s
        num = 1
        for k in range(1, N + 1):
            num *= s + k
        return num // factorial(N)

    def chi(pp, s):
        if pp < 0:
            return 0
        return comb(N + 1, pp) * chi_o(s - pp) - chi(pp - 1, s)

    if t == 0:
        return 1 if p == q else 0
    value = chi(p, t)
    if t > p:
        return value if q == 0 else 0
    if t < p - N:
        return (-1) ** N * value if q == N else 0
    return 0


def capped_monomials(degree: int, nvars: int, cap: int) -> int:
    """Coefficient of x^degree in (1 + x + ... + x^cap)^nvars, via sympy polynomial expansion."""
    if degree < 0:
        return 0
    x = sympy.symbols("x")
    poly = sympy.Poly(sum(x**i for i in range(cap + 1)) ** nvars, x)
    return int(poly.coeff_monomial(x**degree))


def capped_monomials_enumerated(degree: int, nvars: int, cap: int) -> int:
    return sum(1 for e in product(range(cap + 1), repeat=nvars) if sum(e) == degree)
