"""Finite-dimensional graded Lie algebras as structure-constant tables.

A :class:`LieTable` packages an ordered basis, the rational coordinates of
every bracket [e_i, e_j], a rational grade label per basis element (the
element sits in the (I*grade)-eigenspace of the grading derivation) and the
Gram matrix of an invariant symmetric bilinear form.  Construction through
:func:`build_table` validates the whole package eagerly, in this order:

  1. antisymmetry of the bracket table,
  2. grading: [e_i, e_j] supported on grade(i) + grade(j) only,
  3. grade symmetry: the multiset of grades is stable under negation
     (the real-form conjugation swaps the +r and -r eigenspaces),
  4. the Jacobi identity on all basis triples,
  5. symmetry and invariance of the bilinear form.

At the dimensions in scope (<= 28 per summand) exhaustive validation is a
few hundred thousand integer operations: cheap insurance, since a corrupt
table would silently invalidate every verdict computed from it.

Everything downstream (subspace brackets, generated subalgebras, the
descending series of a nilpotent subalgebra, form polars, direct sums) is
generic over the table; no matrix realization is consulted here.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .exactlin import (
    RatMatrix,
    Subspace,
    as_rational,
    kernel,
    rref,
    span,
    subspace_sum,
)


class LieTableError(ValueError):
    """A structure-constant table failed validation."""


class AntisymmetryViolation(LieTableError):
    def __init__(self, i: int, j: int):
        super().__init__(f"bracket table is not antisymmetric at basis pair ({i}, {j})")
        self.indices = (i, j)


class JacobiViolation(LieTableError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"Jacobi identity fails on basis triple ({i}, {j}, {k})")
        self.indices = (i, j, k)


class GradingViolation(LieTableError):
    def __init__(self, message: str, indices: tuple = ()):
        super().__init__(message)
        self.indices = indices


class FormNotInvariant(LieTableError):
    def __init__(self, message: str, indices: tuple = ()):
        super().__init__(message)
        self.indices = indices


class DegenerateForm(LieTableError):
    """The bilinear form has a radical, so polars are undefined."""


def _exact(value):
    # ints are kept as ints: structure constants are usually integral and
    # native int arithmetic keeps the eager validation loops fast.
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return value
    return as_rational(value)


class LieTable:
    """Validated structure-constant table; build via :func:`build_table`."""

    __slots__ = ("dim", "grade", "form", "_rows", "_sparse", "_form_rank")

    def __init__(self, dim, grade, form, rows, sparse):
        self.dim = dim
        self.grade = grade
        self.form = form
        self._rows = rows
        self._sparse = sparse
        self._form_rank = None

    def bracket_row(self, i: int, j: int) -> tuple:
        """Coordinates of [e_i, e_j]."""
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieTable)
            and self.dim == other.dim
            and self.grade == other.grade
            and self.form == other.form
            and self._rows == other._rows
        )

    def __repr__(self) -> str:
        return f"LieTable(dim {self.dim}, grades {sorted(set(self.grade))})"


def build_table(
    dim: int,
    bracket_table: Sequence[Sequence[Sequence]],
    grade: Sequence,
    form: RatMatrix | Sequence[Sequence],
) -> LieTable:
    """Validate and assemble a LieTable.

    `bracket_table[i][j]` is the coordinate row of [e_i, e_j]; `grade` is one
    rational label per basis element; `form` is the dim x dim Gram matrix.
    Raises AntisymmetryViolation / GradingViolation / JacobiViolation /
    FormNotInvariant naming the offending basis indices.
    """
    if len(bracket_table) != dim:
        raise ValueError(f"bracket table has {len(bracket_table)} rows, expected {dim}")
    rows = []
    for i, per_i in enumerate(bracket_table):
        if len(per_i) != dim:
            raise ValueError(f"bracket table row {i} has {len(per_i)} entries, expected {dim}")
        fixed = []
        for j, row in enumerate(per_i):
            row = tuple(_exact(v) for v in row)
            if len(row) != dim:
                raise ValueError(f"bracket [e_{i}, e_{j}] has {len(row)} coordinates")
            fixed.append(row)
        rows.append(tuple(fixed))
    rows = tuple(rows)
    grades = tuple(as_rational(g) for g in grade)
    if len(grades) != dim:
        raise ValueError(f"{len(grades)} grade labels for dim {dim}")
    if not isinstance(form, RatMatrix):
        form = RatMatrix(form, cols=dim)
    if form.shape != (dim, dim):
        raise ValueError(f"form has shape {form.shape}, expected ({dim}, {dim})")

    sparse = tuple(
        tuple(tuple((k, v) for k, v in enumerate(row) if v != 0) for row in per_i)
        for per_i in rows
    )

    for i in range(dim):
        for j in range(i, dim):
            rij, rji = rows[i][j], rows[j][i]
            if any(rij[k] != -rji[k] for k in range(dim)):
                raise AntisymmetryViolation(i, j)

    for i in range(dim):
        for j in range(i, dim):
            target = grades[i] + grades[j]
            for k, _ in sparse[i][j]:
                if grades[k] != target:
                    raise GradingViolation(
                        f"[e_{i}, e_{j}] has grade {grades[i]}+{grades[j]} but hits "
                        f"basis element {k} of grade {grades[k]}",
                        (i, j, k),
                    )

    counts = Counter(grades)
    for g, cnt in counts.items():
        if counts.get(-g, 0) != cnt:
            raise GradingViolation(
                f"grade {g} has dimension {cnt} but grade {-g} has {counts.get(-g, 0)}"
            )

    for i in range(dim):
        sp_i = sparse[i]
        for j in range(i + 1, dim):
            sp_j = sparse[j]
            row_ij = sp_i[j]
            for k in range(j + 1, dim):
                acc: dict[int, object] = {}
                for c, v in sp_j[k]:
                    for t, w in sp_i[c]:
                        acc[t] = acc.get(t, 0) + v * w
                for c, v in sparse[k][i]:
                    for t, w in sp_j[c]:
                        acc[t] = acc.get(t, 0) + v * w
                for c, v in row_ij:
                    for t, w in sparse[k][c]:
                        acc[t] = acc.get(t, 0) + v * w
                if any(v != 0 for v in acc.values()):
                    raise JacobiViolation(i, j, k)

    f = form.entries
    for i in range(dim):
        for j in range(i + 1, dim):
            if f[i][j] != f[j][i]:
                raise FormNotInvariant(f"form is not symmetric at ({i}, {j})", (i, j))
    for i in range(dim):
        sp_i = sparse[i]
        for j in range(dim):
            fj = f[j]
            for k in range(j, dim):
                total = sum(v * f[t][k] for t, v in sp_i[j])
                total += sum(v * fj[t] for t, v in sp_i[k])
                if total != 0:
                    raise FormNotInvariant(
                        f"<[e_{i}, e_{j}], e_{k}> + <e_{j}, [e_{i}, e_{k}]> = {total} != 0",
                        (i, j, k),
                    )

    return LieTable(dim, grades, form, rows, sparse)


@dataclass(frozen=True)
class GradingMap:
    """Eigenspace decomposition by grade label, sorted by grade ascending."""

    ambient_dim: int
    entries: tuple[tuple[Fraction, Subspace], ...]

    def grades(self) -> tuple[Fraction, ...]:
        return tuple(g for g, _ in self.entries)

    def space_at(self, r) -> Subspace:
        r = as_rational(r)
        for g, sp in self.entries:
            if g == r:
                return sp
        return Subspace.zero(self.ambient_dim)

    def dim_at(self, r) -> int:
        return self.space_at(r).dim

    def dims(self) -> dict[Fraction, int]:
        return {g: sp.dim for g, sp in self.entries}

    def tail(self, r) -> Subspace:
        """Sum of the eigenspaces with grade >= r."""
        r = as_rational(r)
        out = Subspace.zero(self.ambient_dim)
        for g, sp in self.entries:
            if g >= r:
                out = subspace_sum(out, sp)
        return out


def grading_of(t: LieTable) -> GradingMap:
    """Group basis elements by their grade label into canonical subspaces."""
    groups: dict[Fraction, list[int]] = {}
    for idx, g in enumerate(t.grade):
        groups.setdefault(g, []).append(idx)
    entries = []
    for g in sorted(groups):
        rows = []
        for idx in groups[g]:
            vec = [0] * t.dim
            vec[idx] = 1
            rows.append(vec)
        entries.append((g, span(rows, t.dim)))
    return GradingMap(t.dim, tuple(entries))


def _sparse_vec(vec) -> tuple:
    return tuple((i, v) for i, v in enumerate(vec) if v != 0)


def bracket_spaces(t: LieTable, a: Subspace, b: Subspace) -> Subspace:
    """Span of [x, y] over x in a basis of `a`, y in a basis of `b`."""
    if a.ambient_dim != t.dim or b.ambient_dim != t.dim:
        raise ValueError("subspace ambient dimension does not match the algebra")
    out_rows = []
    a_items = [_sparse_vec(v) for v in a.vectors()]
    b_items = [_sparse_vec(v) for v in b.vectors()]
    for x in a_items:
        for y in b_items:
            acc: dict[int, object] = {}
            for i, xa in x:
                sp_i = t._sparse[i]
                for j, yb in y:
                    coeff = xa * yb
                    for k, c in sp_i[j]:
                        acc[k] = acc.get(k, 0) + coeff * c
            if any(v != 0 for v in acc.values()):
                out_rows.append(tuple(acc.get(k, 0) for k in range(t.dim)))
    return span(out_rows, t.dim)


def generated_subalgebra(t: LieTable, seed: Subspace) -> Subspace:
    """Smallest bracket-closed subspace containing `seed`.

    Iterates s <- s + [s, s]; dimensions strictly increase until the
    fixpoint, so this needs at most dim steps.
    """
    current = seed
    while True:
        bigger = subspace_sum(current, bracket_spaces(t, current, current))
        if bigger.dim == current.dim:
            return current
        current = bigger


def descending_series(t: LieTable, n: Subspace) -> list[Subspace]:
    """Central descending series of the subalgebra n.

    Returns [n, [n, n], [n, [n, n]], ...] and stops just before the first
    repetition, so a nilpotent n yields a chain ending in the zero subspace.
    """
    series = [n]
    for _ in range(t.dim + 1):
        nxt = bracket_spaces(t, n, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)
    raise ValueError("descending series did not stabilize; is n a subalgebra?")


def polar(t: LieTable, a: Subspace) -> Subspace:
    """{x : <x, a> = 0} with respect to the table's bilinear form."""
    if a.ambient_dim != t.dim:
        raise ValueError("subspace ambient dimension does not match the algebra")
    if _form_rank(t) < t.dim:
        raise DegenerateForm("bilinear form is degenerate; polars are undefined")
    constraints = a.basis @ t.form
    return kernel(constraints)


def _form_rank(t: LieTable) -> int:
    if t._form_rank is None:
        t._form_rank = rref(t.form)[0]
    return t._form_rank


def direct_sum(a: LieTable, b: LieTable) -> LieTable:
    """Block-diagonal sum: brackets and form act blockwise, grades concatenate."""
    dim = a.dim + b.dim
    zero = (0,) * dim

    def pad_left(row):
        return tuple(row) + (0,) * b.dim

    def pad_right(row):
        return (0,) * a.dim + tuple(row)

    table = []
    for i in range(dim):
        per_i = []
        for j in range(dim):
            if i < a.dim and j < a.dim:
                per_i.append(pad_left(a.bracket_row(i, j)))
            elif i >= a.dim and j >= a.dim:
                per_i.append(pad_right(b.bracket_row(i - a.dim, j - a.dim)))
            else:
                per_i.append(zero)
        table.append(per_i)

    form = [[0] * dim for _ in range(dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            form[i][j] = a.form[i, j]
    for i in range(b.dim):
        for j in range(b.dim):
            form[a.dim + i][a.dim + j] = b.form[i, j]

    return build_table(dim, table, a.grade + b.grade, RatMatrix(form, cols=dim))
