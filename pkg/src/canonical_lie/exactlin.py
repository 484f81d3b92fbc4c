"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` (arbitrary precision, always in
lowest terms with positive denominator); nothing here ever touches a float.
Matrices are dense and immutable.  Subspaces are stored through a reduced
row-echelon basis, which is a canonical representative: two subspaces are
equal as sets exactly when their stored bases compare equal entry for entry.

All ambient dimensions in this package are small (at most 28), so dense
storage and textbook Gauss-Jordan elimination are the right tools.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def as_rational(value) -> Fraction:
    """Coerce an exact scalar to Fraction, rejecting floats outright."""
    if isinstance(value, float):
        raise TypeError(f"float coefficient {value!r} not allowed; use int or Fraction")
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    """Parse a 'p' or 'p/q' string (q positive); anything else is an error."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational 'p/q' string: {text!r}")
    return Fraction(s)


class RatMatrix:
    """Immutable dense matrix with Fraction entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, data: Iterable[Sequence], cols: int | None = None):
        entries = tuple(tuple(as_rational(v) for v in row) for row in data)
        if entries:
            width = len(entries[0])
            if any(len(row) != width for row in entries[1:]):
                raise ValueError("rows have inconsistent lengths")
            if cols is not None and cols != width:
                raise ValueError(f"expected {cols} columns, got {width}")
            cols = width
        elif cols is None:
            cols = 0
        self.rows = len(entries)
        self.cols = cols
        self.entries = entries

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i][j]

    def transpose(self) -> RatMatrix:
        return RatMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        ot = list(zip(*other.entries)) if other.entries else []
        out = []
        for row in self.entries:
            if ot:
                out.append([sum(a * b for a, b in zip(row, col)) for col in ot])
            else:
                out.append([Fraction(0)] * other.cols)
        return RatMatrix(out, cols=other.cols)

    def __add__(self, other: RatMatrix) -> RatMatrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} + {other.shape}")
        return RatMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        return self + (-other)

    def __neg__(self) -> RatMatrix:
        return RatMatrix([[-v for v in row] for row in self.entries], cols=self.cols)

    def scaled(self, c) -> RatMatrix:
        c = as_rational(c)
        return RatMatrix([[c * v for v in row] for row in self.entries], cols=self.cols)

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def tolists(self) -> list[list[Fraction]]:
        return [list(row) for row in self.entries]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RatMatrix)
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self.entries)
        return f"RatMatrix({self.rows}x{self.cols}: {body})"


def rref(m: RatMatrix) -> tuple[int, RatMatrix]:
    """Reduced row-echelon form by Gauss-Jordan elimination.

    Returns (rank, reduced).  `reduced` has the shape of `m`, its nonzero
    rows on top with unit pivots in strictly increasing columns, and zeros
    above and below every pivot; it is the unique RREF of `m`.
    """
    work = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == nrows:
            break
        hit = next((r for r in range(pivot_row, nrows) if work[r][col] != 0), None)
        if hit is None:
            continue
        work[pivot_row], work[hit] = work[hit], work[pivot_row]
        lead = work[pivot_row][col]
        if lead != 1:
            work[pivot_row] = [v / lead for v in work[pivot_row]]
        piv = work[pivot_row]
        for r in range(nrows):
            f = work[r][col]
            if r != pivot_row and f != 0:
                work[r] = [a - f * b for a, b in zip(work[r], piv)]
        pivot_row += 1
    return pivot_row, RatMatrix(work, cols=ncols)


class Subspace:
    """A subspace of Q^n held as a reduced row-echelon basis.

    The RREF basis is canonical, so `==` on Subspaces decides set equality.
    Build instances through :func:`span` (or the `zero`/`full` helpers);
    the constructor insists on an already-reduced basis.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: RatMatrix):
        if basis.cols != ambient_dim:
            raise ValueError(f"basis width {basis.cols} != ambient dim {ambient_dim}")
        last_pivot = -1
        for row in basis.entries:
            pivot = next((j for j, v in enumerate(row) if v != 0), None)
            if pivot is None:
                raise ValueError("basis contains a zero row")
            if pivot <= last_pivot or row[pivot] != 1:
                raise ValueError("basis is not in reduced row-echelon form")
            last_pivot = pivot
        for r, row in enumerate(basis.entries):
            pivot = next(j for j, v in enumerate(row) if v != 0)
            if any(other[pivot] != 0 for i, other in enumerate(basis.entries) if i != r):
                raise ValueError("basis is not in reduced row-echelon form")
        self.ambient_dim = ambient_dim
        self.basis = basis

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, RatMatrix((), cols=ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, RatMatrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> tuple[tuple[Fraction, ...], ...]:
        return self.basis.entries

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    """Canonical subspace spanned by the given coordinate rows."""
    rows = []
    for vec in vectors:
        row = tuple(as_rational(v) for v in vec)
        if len(row) != ambient_dim:
            raise ValueError(f"vector of length {len(row)} in ambient dim {ambient_dim}")
        rows.append(row)
    if not rows:
        return Subspace.zero(ambient_dim)
    rank, reduced = rref(RatMatrix(rows, cols=ambient_dim))
    return Subspace(ambient_dim, RatMatrix(reduced.entries[:rank], cols=ambient_dim))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    return span(a.vectors() + b.vectors(), a.ambient_dim)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the Zassenhaus block trick.

    Reduce [U|U; V|0]: rows whose left half vanished carry an intersection
    basis in their right half.
    """
    _check_same_ambient(a, b)
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(n)
    zero = (Fraction(0),) * n
    block = [u + u for u in a.vectors()] + [v + zero for v in b.vectors()]
    _, reduced = rref(RatMatrix(block, cols=2 * n))
    inter = [
        row[n:]
        for row in reduced.entries
        if all(v == 0 for v in row[:n]) and any(v != 0 for v in row[n:])
    ]
    return span(inter, n)


def contains(a: Subspace, v: Sequence) -> bool:
    """Membership test by reducing v against the pivot rows of a."""
    vec = [as_rational(x) for x in v]
    if len(vec) != a.ambient_dim:
        raise ValueError(f"vector of length {len(vec)} in ambient dim {a.ambient_dim}")
    for row in a.vectors():
        pivot = next(j for j, x in enumerate(row) if x != 0)
        f = vec[pivot]
        if f != 0:
            vec = [x - f * y for x, y in zip(vec, row)]
    return all(x == 0 for x in vec)


def kernel(m: RatMatrix) -> Subspace:
    """Null space of m as a canonical Subspace; dim(kernel) = cols - rank."""
    rank, reduced = rref(m)
    pivots = []
    for r in range(rank):
        pivots.append(next(j for j, v in enumerate(reduced.entries[r]) if v != 0))
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * m.cols
        vec[free] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -reduced.entries[r][free]
        basis.append(vec)
    return span(basis, m.cols)


def _check_same_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient dims differ: {a.ambient_dim} vs {b.ambient_dim}")
