"""Exact dense matrices, incremental row reduction and kernels.

Pivoting is deterministic: rows are consumed in order and each new row,
once reduced against the existing pivots, pivots on its first nonzero
column.  Internally rows are kept as ``{column: value}`` dicts because the
matrices built by the graded-piece code are very sparse; the public
:class:`ExactMatrix` is a plain dense grid.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InvalidInput
from .field import FieldElement, FieldSpec
from .poly1 import LaurentPoly


@dataclass(frozen=True)
class ExactMatrix:
    field: FieldSpec
    rows: tuple
    ncols: int

    @classmethod
    def from_rows(cls, field: FieldSpec, rows, ncols: int | None = None) -> ExactMatrix:
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise InvalidInput("empty matrix needs an explicit column count")
            ncols = len(rows[0])
        out = []
        for r in rows:
            if len(r) != ncols:
                raise InvalidInput("ragged matrix rows")
            for x in r:
                if isinstance(x, FieldElement) and x.field != field:
                    raise InvalidInput(f"mixed field specs: {x.field} entry in a {field} matrix")
            out.append(tuple(field.coerce(x) for x in r))
        return cls(field, tuple(out), ncols)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (len(self.rows), self.ncols)

    def sparse_rows(self):
        return [{j: x for j, x in enumerate(r) if x} for r in self.rows]

    def apply(self, vec):
        f = self.field
        vec = [f.coerce(x) for x in vec]
        if len(vec) != self.ncols:
            raise InvalidInput("vector length does not match column count")
        out = []
        for r in self.rows:
            acc = f.zero
            for a, b in zip(r, vec):
                if a and b:
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if other.field != self.field:
            raise InvalidInput(f"mixed field specs {self.field} and {other.field}")
        if self.ncols != other.nrows:
            raise InvalidInput("shape mismatch in matrix product")
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        return ExactMatrix(self.field, tuple(tuple(_dot(self.field, r, c) for c in cols) for r in self.rows), other.ncols)


def _dot(f, a, b):
    acc = f.zero
    for x, y in zip(a, b):
        if x and y:
            acc = f.add(acc, f.mul(x, y))
    return acc


class Echelon:
    """Incrementally maintained reduced row echelon form over a field.

    ``rows`` maps each pivot column to its row (pivot entry 1, zero in every
    other pivot column).
    """

    __slots__ = ("field", "rows", "order")

    def __init__(self, field: FieldSpec):
        self.field = field
        self.rows: dict[int, dict] = {}
        self.order: list[int] = []

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Remainder of vec modulo the row space (a fresh dict)."""
        p = self.field.p
        out = dict(vec)
        rows = self.rows
        for col in [c for c in vec if c in rows]:
            c = out.get(col)
            if not c:
                continue
            for j, v in rows[col].items():
                nv = out.get(j, 0) - c * v
                if p:
                    nv %= p
                if nv:
                    out[j] = nv
                else:
                    out.pop(j, None)
        return out

    def reduce_tracked(self, vec: dict):
        """Like reduce, also returning the multipliers used per pivot column."""
        p = self.field.p
        out = dict(vec)
        used = {}
        for col in [c for c in vec if c in self.rows]:
            c = out.get(col)
            if not c:
                continue
            used[col] = c
            for j, v in self.rows[col].items():
                nv = out.get(j, 0) - c * v
                if p:
                    nv %= p
                if nv:
                    out[j] = nv
                else:
                    out.pop(j, None)
        return out, used

    def add(self, vec: dict):
        """Insert vec; return its pivot column, or None if it was dependent."""
        r = self.reduce(vec)
        if not r:
            return None
        f = self.field
        p = f.p
        piv = min(r)
        inv = f.inv(r[piv])
        if inv != 1:
            r = {j: (v * inv % p if p else v * inv) for j, v in r.items()}
        for row in self.rows.values():
            c = row.get(piv)
            if not c:
                continue
            for j, v in r.items():
                nv = row.get(j, 0) - c * v
                if p:
                    nv %= p
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
        self.rows[piv] = r
        self.order.append(piv)
        return piv

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def pivots(self):
        return sorted(self.rows)

    def kernel(self, ncols: int):
        """Right kernel basis of the row space, one vector per free column."""
        f = self.field
        pivots = self.pivots()
        pivset = set(pivots)
        basis = []
        for j in range(ncols):
            if j in pivset:
                continue
            v = [f.zero] * ncols
            v[j] = f.one
            for pc in pivots:
                c = self.rows[pc].get(j)
                if c:
                    v[pc] = f.neg(c)
            basis.append(tuple(v))
        return basis

    def kernel_sparse(self, ncols: int):
        f = self.field
        pivots = self.pivots()
        pivset = set(pivots)
        column_hits: dict[int, list] = {}
        for pc in pivots:
            for j, c in self.rows[pc].items():
                if j != pc:
                    column_hits.setdefault(j, []).append((pc, c))
        basis = []
        for j in range(ncols):
            if j in pivset:
                continue
            v = {j: f.one}
            for pc, c in column_hits.get(j, ()):
                v[pc] = f.neg(c)
            basis.append(v)
        return basis


def row_reduce(field: FieldSpec, sparse_rows) -> Echelon:
    ech = Echelon(field)
    for r in sparse_rows:
        ech.add(r)
    return ech


def solve_kernel(m: ExactMatrix):
    """Basis of {v : m v = 0}; count is cols - rank(m)."""
    return row_reduce(m.field, m.sparse_rows()).kernel(m.ncols)


def rank(m: ExactMatrix) -> int:
    return row_reduce(m.field, m.sparse_rows()).rank


def rank_by_elimination(field: FieldSpec, rows) -> int:
    """Plain forward elimination on a dense copy (independent of Echelon)."""
    a = [[field.coerce(x) for x in r] for r in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = field.inv(a[r][c])
        for i in range(r + 1, nrows):
            if a[i][c]:
                factor = field.mul(a[i][c], inv)
                a[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return r


class LaurentMatrix:
    """Square grid of Laurent polynomials in one variable."""

    def __init__(self, entries, field: FieldSpec | None = None, var: str | None = None):
        entries = [list(r) for r in entries]
        n = len(entries)
        if any(len(r) != n for r in entries):
            raise InvalidInput("Laurent matrix must be square")
        if field is None:
            field = entries[0][0].field
        if var is None:
            var = entries[0][0].var if n else "t"
        self.field = field
        self.var = var
        self.entries = [
            [e if isinstance(e, LaurentPoly) else LaurentPoly(field, {0: field.coerce(e)}, var) for e in r]
            for r in entries
        ]
        for r in self.entries:
            for e in r:
                if e.field != field:
                    raise InvalidInput(f"mixed field specs {e.field} and {field}")

    @property
    def size(self):
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: LaurentMatrix) -> LaurentMatrix:
        if other.size != self.size:
            raise InvalidInput("shape mismatch")
        n = self.size
        zero = LaurentPoly(self.field, {}, self.var)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return LaurentMatrix(out, self.field, self.var)

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.entries) + "]"


def laurent_det(m: LaurentMatrix) -> LaurentPoly:
    """Determinant by cofactor expansion along the first row."""
    if not isinstance(m, LaurentMatrix):
        m = LaurentMatrix(m)
    return _cofactor_det(m.entries, m.field, m.var)


def _cofactor_det(rows, field, var):
    n = len(rows)
    if n == 0:
        return LaurentPoly(field, {0: field.one}, var)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = LaurentPoly(field, {}, var)
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _cofactor_det(minor, field, var)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc
