"""Twisted Hodge numbers of smooth hypersurfaces.

For a smooth degree-d hypersurface X in P^N (dimension n = N - 1) the numbers
h^q(X, Omega^p_X(t)) vanish except on the two edges q = 0, q = n, the middle
row p + q = n and the untwisted diagonal p = q, t = 0.  The edges come from
finite alternating sums of Bott numbers of the ambient space (via the conormal
and restriction sequences, whose maps on global sections are injective); the
middle row is then forced by the Euler characteristic.

Everything is integer arithmetic with Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable


class RuleNotApplicable(ValueError):
    """The kernel rule cannot be evaluated for these parameters."""


def binom(a: int, b: int) -> int:
    """C(a, b), zero outside 0 <= b <= a."""
    return comb(a, b) if 0 <= b <= a else 0


# ---------------------------------------------------------------- projective space


def bott_cohomology(N: int, p: int, q: int, t: int) -> int:
    """dim H^q(P^N, Omega^p(t))."""
    if not (0 <= p <= N and 0 <= q <= N):
        return 0
    if q == 0 and t > p:
        return binom(t + N - p, t) * binom(t - 1, p)
    if t == 0 and q == p:
        return 1
    if q == N and t < p - N:
        return binom(-t + p, -t) * binom(-t - 1, N - p)
    return 0


def ambient_euler(N: int, p: int, t: int) -> int:
    return sum((-1) ** q * bott_cohomology(N, p, q, t) for q in range(N + 1))


# ---------------------------------------------------------------- hypersurfaces


@dataclass(frozen=True)
class HypersurfaceSpec:
    """A smooth hypersurface of degree ``d`` in P^N, with twist ``t``."""

    d: int
    N: int
    t: int = 0

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("degree must be at least 1")
        if self.N < 2:
            raise ValueError("ambient dimension must be at least 2")

    @property
    def n(self) -> int:
        return self.N - 1

    @property
    def canonical_twist(self) -> int:
        """omega_X = O(d - N - 1)."""
        return self.d - self.N - 1

    def twisted(self, t: int) -> "HypersurfaceSpec":
        return HypersurfaceSpec(self.d, self.N, t)


def _restricted_h0(N: int, d: int, j: int, s: int) -> int:
    # h^0(X, Omega^j_P(s)|_X); the extra 1 is the H^1(Omega^1_P) class hit at s = d
    return bott_cohomology(N, j, 0, s) - bott_cohomology(N, j, 0, s - d) + (1 if j == 1 and s == d else 0)


def _h0(d: int, N: int, p: int, t: int) -> int:
    n = N - 1
    if p == n:
        return _restricted_h0(N, d, 0, t + d - N - 1)
    return sum((-1) ** i * _restricted_h0(N, d, p - i, t - i * d) for i in range(p + 1))


@lru_cache(maxsize=None)
def _euler(d: int, N: int, p: int, t: int) -> int:
    if p < 0:
        return 0
    return ambient_euler(N, p, t) - ambient_euler(N, p, t - d) - _euler(d, N, p - 1, t - d)


def euler_char_twisted(spec: HypersurfaceSpec, p: int) -> int:
    """chi(X, Omega^p_X(t)) by the conormal-sequence recursion."""
    return _euler(spec.d, spec.N, p, spec.t)


def _hodge(d: int, N: int, p: int, q: int, t: int) -> int:
    n = N - 1
    if not (0 <= p <= n and 0 <= q <= n):
        return 0
    bottom = _h0(d, N, p, t)
    top = _h0(d, N, n - p, -t)
    if q == 0:
        return bottom
    if q == n:
        return top
    if q == n - p:
        diag = 1 if (t == 0 and p != q) else 0
        rest = _euler(d, N, p, t) - bottom - (-1) ** n * top - (-1) ** p * diag
        return (-1) ** q * rest
    if q == p and t == 0:
        return 1
    return 0


def twisted_hodge_number(spec: HypersurfaceSpec, p: int, q: int) -> int:
    """dim H^q(X, Omega^p_X(t))."""
    return _hodge(spec.d, spec.N, p, q, spec.t)


# ---------------------------------------------------------------- diamonds


@dataclass(frozen=True)
class Diamond:
    spec: HypersurfaceSpec
    entries: tuple  # entries[p][q]

    @property
    def n(self) -> int:
        return self.spec.n

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        return self.entries[p][q]

    def rows(self) -> list[list[int]]:
        """Rows from p + q = 2n down to 0, each listed with p decreasing."""
        n = self.n
        return [
            [self.entries[p][r - p] for p in range(min(n, r), max(0, r - n) - 1, -1)]
            for r in range(2 * n, -1, -1)
        ]

    def table(self) -> list[tuple[int, int, int]]:
        return [(p, q, self.entries[p][q]) for p in range(self.n + 1) for q in range(self.n + 1)]

    def render(self) -> str:
        n = self.n
        width = max(len(str(v)) for row in self.entries for v in row)
        lines = []
        for r in range(2 * n, -1, -1):
            cells = [" " * width] * (2 * n + 1)
            for p in range(min(n, r), max(0, r - n) - 1, -1):
                q = r - p
                cells[n + q - p] = str(self.entries[p][q]).center(width)
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)

    def is_symmetric(self) -> bool:
        return all(self.entries[p][q] == self.entries[q][p] for p in range(self.n + 1) for q in range(self.n + 1))


def diamond(spec: HypersurfaceSpec) -> Diamond:
    n = spec.n
    return Diamond(spec, tuple(tuple(twisted_hodge_number(spec, p, q) for q in range(n + 1)) for p in range(n + 1)))


# ---------------------------------------------------------------- Jacobian ring


def capped_monomials(degree: int, variables: int, cap: int) -> int:
    """Monomials of ``degree`` in ``variables`` variables with every exponent <= cap."""
    if degree < 0:
        return 0
    return sum(
        (-1) ** k * binom(variables, k) * binom(degree - k * (cap + 1) + variables - 1, variables - 1)
        for k in range(variables + 1)
    )


def jacobian_middle_row(d: int, N: int) -> list[int]:
    """[h^{n-q, q} for q = 0..n] of the untwisted hypersurface, from the Jacobian ring."""
    if d < 2:
        raise ValueError("the Jacobian ring needs d >= 2")
    n = N - 1
    row = [capped_monomials((q + 1) * d - (N + 1), N + 1, d - 2) for q in range(n + 1)]
    if n % 2 == 0:
        row[n // 2] += 1
    return row


# ---------------------------------------------------------------- Hochschild side


def polyvector_cohomology(spec: HypersurfaceSpec, p: int, q: int) -> int:
    """h^q(X, Lambda^p T_X (t)), using Lambda^p T_X = Omega^{n-p}_X (x) omega_X^{-1}."""
    n = spec.n
    if not (0 <= p <= n and 0 <= q <= n):
        return 0
    return _hodge(spec.d, spec.N, n - p, q, spec.t - spec.canonical_twist)


def ambient_polyvector_cohomology(spec: HypersurfaceSpec, p: int, q: int) -> int:
    """h^q(X, Lambda^p T_P |_X (t)), using Lambda^p T_P = Omega^{N-p}_P(N + 1)."""
    N, d = spec.N, spec.d
    if not (0 <= p <= N):
        return 0
    j, s = N - p, spec.t + N + 1
    # restriction sequence 0 -> O(s - d) -> O(s) -> O_X(s) twisted by Omega^j; multiplication
    # by the equation is injective on H^0 and surjective on H^N, so its rank is min(a, b)
    def rank(qq: int) -> int:
        return min(bott_cohomology(N, j, qq, s - d), bott_cohomology(N, j, qq, s))

    return bott_cohomology(N, j, q, s) - rank(q) + bott_cohomology(N, j, q + 1, s - d) - rank(q + 1)


def hkr_hh_dim(spec: HypersurfaceSpec, k: int) -> int:
    """dim HH^k(X, O(t)) = sum over p + q = k of h^q(Lambda^p T_X (t))."""
    if not 0 <= k <= 2 * spec.n:
        raise ValueError(f"degree {k} outside 0..{2 * spec.n}")
    return sum(polyvector_cohomology(spec, p, k - p) for p in range(k + 1))


@dataclass(frozen=True)
class KernelTerm:
    p: int
    q: int
    source: int  # h^q(Lambda^p T_X(t))
    target: int  # h^q(Lambda^p T_P|_X(t))
    kernel: int


def _normal_sequence_ranks(spec: HypersurfaceSpec, p: int) -> list[int]:
    """Dims along the long exact sequence of 0 -> L^p T_X(t) -> L^p T_P|_X(t) -> L^{p-1} T_X(t + d) -> 0.

    Returns ranks r_k of the maps out of the k-th term; an exact sequence that
    starts and ends with zero determines every rank from the dimensions.
    """
    n = spec.n
    up = spec.twisted(spec.t + spec.d)
    dims = []
    for q in range(n + 1):
        dims += [
            polyvector_cohomology(spec, p, q),
            ambient_polyvector_cohomology(spec, p, q),
            polyvector_cohomology(up, p - 1, q) if p >= 1 else 0,
        ]
    ranks, prev = [], 0
    for k, dim in enumerate(dims):
        r = dim - prev
        if r < 0:
            raise RuleNotApplicable(
                f"dimensions along the normal sequence for p={p} are not exact at position {k}"
            )
        ranks.append(r)
        prev = r
    if prev != 0:
        raise RuleNotApplicable(f"normal sequence for p={p} does not close up")
    return ranks


def kernel_terms(spec: HypersurfaceSpec, m: int) -> list[KernelTerm]:
    """Per (p, q) with p + q = m: kernel of H^q(L^p T_X(t)) -> H^q(L^p T_P|_X(t))."""
    n = spec.n
    if not 0 <= m <= 2 * n:
        raise RuleNotApplicable(f"HH^{m} is outside the range 0..{2 * n} for a {n}-fold")
    terms = []
    for p in range(max(0, m - n), min(n, m) + 1):
        q = m - p
        ranks = _normal_sequence_ranks(spec, p)
        src = polyvector_cohomology(spec, p, q)
        tgt = ambient_polyvector_cohomology(spec, p, q)
        terms.append(KernelTerm(p, q, src, tgt, src - ranks[3 * q]))
    return terms


def kernel_dim(spec: HypersurfaceSpec, m: int) -> int:
    """dim ker(f_*: HH^m(X, O(t)) -> HH^m(P^N, f_* O(t))) for the inclusion f."""
    return sum(term.kernel for term in kernel_terms(spec, m))


def catalog_non_fm(d: int, N: int, t_range: Iterable[int], m_range: Iterable[int]) -> list[tuple[int, int, int]]:
    """(t, m, kernel dim) for m >= n + 3 with a nonzero kernel."""
    n = N - 1
    out = []
    for t in t_range:
        spec = HypersurfaceSpec(d, N, t)
        for m in m_range:
            if m < n + 3 or m > 2 * n:
                continue
            k = kernel_dim(spec, m)
            if k > 0:
                out.append((t, m, k))
    return out
