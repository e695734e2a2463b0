"""Exact linear algebra over Q.

Matrices are stored sparsely as ``{(row, col): Fraction}``; absent entries are
zero.  Rank, reduced row echelon forms and solving are delegated to FLINT
(``python-flint``), which works with exact integers and rationals.  Nothing in
this module touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

import flint

Rational = Fraction


class NotAComplexError(ValueError):
    """Raised when two maps meant to form a complex do not compose to zero."""


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a reduced Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, flint.fmpq):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, flint.fmpz):
        return Fraction(int(x))
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class Matrix:
    """A sparse rows x cols matrix with Fraction entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: dict | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        clean = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside a {rows}x{cols} matrix")
            v = as_rational(v)
            if v:
                clean[(i, j)] = v
        self.entries = clean

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        nrows = len(rows)
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        ent = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged row list")
            for j, v in enumerate(row):
                if v:
                    ent[(i, j)] = v
        return cls(nrows, ncols, ent)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key) -> Fraction:
        return self.entries.get(key, Fraction(0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, nnz={len(self.entries)})"

    def to_rows(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def is_zero(self) -> bool:
        return not self.entries

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            by_row: dict[int, list] = {}
            for (k, j), v in other.entries.items():
                by_row.setdefault(k, []).append((j, v))
            acc: dict = {}
            for (i, k), a in self.entries.items():
                for j, b in by_row.get(k, ()):
                    acc[(i, j)] = acc.get((i, j), 0) + a * b
            return Matrix(self.rows, other.cols, acc)
        vec = list(other)
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} does not fit {self.shape}")
        out = [Fraction(0)] * self.rows
        for (i, j), v in self.entries.items():
            if vec[j]:
                out[i] += v * vec[j]
        return out

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        acc = dict(self.entries)
        for k, v in other.entries.items():
            acc[k] = acc.get(k, 0) + v
        return Matrix(self.rows, self.cols, acc)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        ent = dict(self.entries)
        ent.update({(i, j + self.cols): v for (i, j), v in other.entries.items()})
        return Matrix(self.rows, self.cols + other.cols, ent)


def _compressed(m: Matrix) -> tuple[list[int], list[int]]:
    rows = sorted({i for i, _ in m.entries})
    cols = sorted({j for _, j in m.entries})
    return rows, cols


def _to_fmpz(m: Matrix) -> flint.fmpz_mat:
    # Drop empty rows/columns and clear denominators row by row; rank is unchanged.
    rows, cols = _compressed(m)
    ridx = {r: k for k, r in enumerate(rows)}
    cidx = {c: k for k, c in enumerate(cols)}
    scale: dict[int, int] = {}
    for (i, _), v in m.entries.items():
        scale[i] = lcm(scale.get(i, 1), v.denominator)
    flat = [0] * (len(rows) * len(cols))
    for (i, j), v in m.entries.items():
        flat[ridx[i] * len(cols) + cidx[j]] = int(v * scale[i])
    return flint.fmpz_mat(len(rows), len(cols), flat)


def _to_fmpq(m: Matrix) -> flint.fmpq_mat:
    flat = [0] * (m.rows * m.cols)
    for (i, j), v in m.entries.items():
        flat[i * m.cols + j] = flint.fmpq(v.numerator, v.denominator)
    return flint.fmpq_mat(m.rows, m.cols, flat)


def rank(m: Matrix) -> int:
    """Exact rank over Q."""
    if not m.entries:
        return 0
    return int(_to_fmpz(m).rank())


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form: (nonzero rows, pivot columns)."""
    if not m.entries:
        return [], []
    red, r = _to_fmpq(m).rref()
    rows = [[as_rational(red[i, j]) for j in range(m.cols)] for i in range(int(r))]
    pivots = [next(j for j, v in enumerate(row) if v) for row in rows]
    return rows, pivots


def solve_linear(a: Matrix, b: Sequence) -> list[Fraction] | None:
    """Some x with a @ x == b, or None when the system is inconsistent."""
    b = [as_rational(v) for v in b]
    if len(b) != a.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {a.rows}")
    if not any(b):
        return [Fraction(0)] * a.cols
    aug = a.hstack(Matrix(a.rows, 1, {(i, 0): v for i, v in enumerate(b) if v}))
    rows, pivots = rref(aug)
    if pivots and pivots[-1] == a.cols:
        return None
    x = [Fraction(0)] * a.cols
    for row, p in zip(rows, pivots):
        x[p] = row[a.cols]
    return x


def nullspace(m: Matrix) -> list[list[Fraction]]:
    """A basis of {x : m @ x == 0}, one list per basis vector."""
    rows, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = -row[free]
        basis.append(v)
    return basis


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("only square matrices have inverses")
    if m.rows == 0:
        return Matrix(0, 0)
    if rank(m) < m.rows:
        raise ValueError("matrix is singular")
    inv = _to_fmpq(m).inv()
    return Matrix(
        m.rows,
        m.cols,
        {(i, j): as_rational(inv[i, j]) for i in range(m.rows) for j in range(m.cols)},
    )


def cohomology_dim(d_out: Matrix, d_in: Matrix) -> int:
    """dim ker(d_out) - rank(d_in) for  V --d_in--> W --d_out--> U.

    Raises NotAComplexError if d_out @ d_in is nonzero.
    """
    if d_out.cols != d_in.rows:
        raise ValueError(
            f"d_in lands in a space of dim {d_in.rows}, d_out starts from dim {d_out.cols}"
        )
    if not (d_out @ d_in).is_zero():
        raise NotAComplexError("d_out composed with d_in is nonzero")
    return d_out.cols - rank(d_out) - rank(d_in)


def span_rank(vectors: Iterable[Sequence]) -> int:
    vecs = list(vectors)
    if not vecs:
        return 0
    return rank(Matrix.from_rows(vecs))
