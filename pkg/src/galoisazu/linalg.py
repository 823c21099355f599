"""Sparse exact matrices over the fields of :mod:`galoisazu.exactfield`.

Rows are stored as ``{column: raw}`` dictionaries holding nonzero entries
only.  Elimination is incremental Gauss-Jordan: each incoming row is reduced
against the pivot rows found so far, which are kept fully reduced.  Column
``j`` of a matrix representing a linear map is the image of basis vector
``j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import DivisionByZero
from .exactfield import Field


@dataclass
class Echelon:
    """Reduced row echelon data: pivot column -> normalized pivot row."""

    ncols: int
    pivots: dict = dc_field(default_factory=dict)
    residues: list = dc_field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _reduce_into(F: Field, ech: Echelon, row: dict) -> dict:
    """Reduce ``row`` (mutated) against the pivot rows of ``ech``."""
    add, mul, neg, is_zero = F.add, F.mul, F.neg, F.is_zero
    pivots = ech.pivots
    for c in [c for c in row if c in pivots]:
        coef = row.get(c)
        if coef is None:
            continue
        factor = neg(coef)
        for k, v in pivots[c].items():
            cur = row.get(k)
            val = mul(factor, v) if cur is None else add(cur, mul(factor, v))
            if is_zero(val):
                row.pop(k, None)
            else:
                row[k] = val
    return row


def _insert(F: Field, ech: Echelon, row: dict, limit: int | None = None) -> int | None:
    """Add a reduced row to ``ech``; return its pivot column or None."""
    cols = [c for c in row if limit is None or c < limit]
    if not cols:
        return None
    pc = min(cols)
    inv = F.inv(row[pc])
    mul, add, is_zero = F.mul, F.add, F.is_zero
    new = {k: mul(inv, v) for k, v in row.items()}
    for other in ech.pivots.values():
        coef = other.get(pc)
        if coef is None:
            continue
        factor = F.neg(coef)
        for k, v in new.items():
            cur = other.get(k)
            val = mul(factor, v) if cur is None else add(cur, mul(factor, v))
            if is_zero(val):
                other.pop(k, None)
            else:
                other[k] = val
    ech.pivots[pc] = new
    return pc


def echelon(F: Field, rows, ncols: int, limit: int | None = None) -> Echelon:
    """Row-reduce; pivots are chosen only among columns < ``limit``."""
    ech = Echelon(ncols)
    for r in rows:
        row = _reduce_into(F, ech, dict(r))
        if _insert(F, ech, row, limit) is None and row:
            ech.residues.append(row)
    return ech


class Matrix:
    """An exact sparse matrix; treat instances as immutable."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, nrows: int, ncols: int, rows=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [dict() for _ in range(nrows)]

    # construction

    @classmethod
    def zeros(cls, F, nrows, ncols):
        return cls(F, nrows, ncols)

    @classmethod
    def identity(cls, F, n):
        return cls(F, n, n, [{i: F.one} for i in range(n)])

    @classmethod
    def from_dense(cls, F, entries, ncols=None):
        entries = [list(r) for r in entries]
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        rows = [{j: v for j, v in enumerate(r) if not F.is_zero(v)} for r in entries]
        return cls(F, len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, F, columns, nrows: int):
        """Columns given as dense lists or {row: raw} dicts."""
        rows = [dict() for _ in range(nrows)]
        for j, col in enumerate(columns):
            items = col.items() if isinstance(col, dict) else enumerate(col)
            for i, v in items:
                if not F.is_zero(v):
                    rows[i][j] = v
        return cls(F, nrows, len(columns), rows)

    # access

    def get(self, i, j):
        return self.rows[i].get(j, self.field.zero)

    def to_dense(self):
        z = self.field.zero
        return [[r.get(j, z) for j in range(self.ncols)] for r in self.rows]

    def column(self, j) -> list:
        z = self.field.zero
        return [r.get(j, z) for r in self.rows]

    def columns(self) -> list[list]:
        dense = self.to_dense()
        return [list(c) for c in zip(*dense)] if self.nrows else [[] for _ in range(self.ncols)]

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    # arithmetic

    def apply(self, vec):
        """Matrix times a dense vector of raws."""
        F = self.field
        add, mul = F.add, F.mul
        out = []
        for r in self.rows:
            acc = F.zero
            for j, v in r.items():
                x = vec[j]
                if not F.is_zero(x):
                    acc = add(acc, mul(v, x))
            out.append(acc)
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        F = self.field
        add, mul, is_zero = F.add, F.mul, F.is_zero
        out = []
        orows = other.rows
        for r in self.rows:
            acc: dict = {}
            for k, v in r.items():
                for j, w in orows[k].items():
                    cur = acc.get(j)
                    acc[j] = mul(v, w) if cur is None else add(cur, mul(v, w))
            out.append({j: v for j, v in acc.items() if not is_zero(v)})
        return Matrix(F, self.nrows, other.ncols, out)

    def _combine(self, other, op):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        F = self.field
        out = []
        for r, s in zip(self.rows, other.rows):
            acc = dict(r)
            for j, w in s.items():
                val = op(acc.get(j, F.zero), w)
                if F.is_zero(val):
                    acc.pop(j, None)
                else:
                    acc[j] = val
            out.append(acc)
        return Matrix(F, self.nrows, self.ncols, out)

    def __add__(self, other):
        return self._combine(other, self.field.add)

    def __sub__(self, other):
        return self._combine(other, self.field.sub)

    def scale(self, c) -> "Matrix":
        F = self.field
        if F.is_zero(c):
            return Matrix.zeros(F, self.nrows, self.ncols)
        return Matrix(F, self.nrows, self.ncols, [{j: F.mul(c, v) for j, v in r.items()} for r in self.rows])

    def transpose(self) -> "Matrix":
        rows = [dict() for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                rows[j][i] = v
        return Matrix(self.field, self.ncols, self.nrows, rows)

    def kron(self, other: "Matrix") -> "Matrix":
        F = self.field
        m, n = other.nrows, other.ncols
        rows = []
        for r in self.rows:
            for s in other.rows:
                rows.append({j * n + l: F.mul(v, w) for j, v in r.items() for l, w in s.items()})
        return Matrix(F, self.nrows * m, self.ncols * n, rows)

    def power(self, k: int) -> "Matrix":
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def map_entries(self, fn, target: Field) -> "Matrix":
        rows = []
        for r in self.rows:
            new = {}
            for j, v in r.items():
                w = fn(v)
                if not target.is_zero(w):
                    new[j] = w
            rows.append(new)
        return Matrix(target, self.nrows, self.ncols, rows)

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        pos = {c: k for k, c in enumerate(col_idx)}
        rows = []
        for i in row_idx:
            rows.append({pos[j]: v for j, v in self.rows[i].items() if j in pos})
        return Matrix(self.field, len(row_idx), len(col_idx), rows)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    __hash__ = None

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.field, self.nrows) if self.nrows == self.ncols else False

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def __repr__(self):
        return f"Matrix({self.field.spec}, {self.nrows}x{self.ncols}, nnz={self.nnz()})"

    # elimination

    def rank(self) -> int:
        return echelon(self.field, self.rows, self.ncols).rank

    def nullspace(self) -> list[list]:
        """Basis of {v : M v = 0} as dense raw vectors, one per free column."""
        F = self.field
        ech = echelon(F, self.rows, self.ncols)
        free = [c for c in range(self.ncols) if c not in ech.pivots]
        basis = []
        for f in free:
            v = [F.zero] * self.ncols
            v[f] = F.one
            for pc, prow in ech.pivots.items():
                coef = prow.get(f)
                if coef is not None:
                    v[pc] = F.neg(coef)
            basis.append(v)
        return basis

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        F = self.field
        aug = [dict(r) for r in self.rows]
        for i, r in enumerate(aug):
            r[n + i] = F.one
        ech = echelon(F, aug, 2 * n, limit=n)
        if ech.rank < n:
            raise DivisionByZero(f"matrix is singular (rank {ech.rank} < {n})")
        rows = [None] * n
        for pc, prow in ech.pivots.items():
            rows[pc] = {k - n: v for k, v in prow.items() if k >= n}
        return Matrix(F, n, n, rows)

    def det(self):
        """Determinant by Gaussian elimination on a dense copy."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        F = self.field
        a = self.to_dense()
        result = F.one
        for c in range(n):
            piv = next((r for r in range(c, n) if not F.is_zero(a[r][c])), None)
            if piv is None:
                return F.zero
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                result = F.neg(result)
            result = F.mul(result, a[c][c])
            inv = F.inv(a[c][c])
            for r in range(c + 1, n):
                if F.is_zero(a[r][c]):
                    continue
                factor = F.mul(a[r][c], inv)
                a[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(a[r], a[c])]
        return result

    def solve_columns(self, rhs_columns) -> list | None:
        """Solve M X = B column by column; None entries where unsolvable."""
        F = self.field
        n = self.ncols
        k = len(rhs_columns)
        aug = [dict(r) for r in self.rows]
        for j, col in enumerate(rhs_columns):
            items = col.items() if isinstance(col, dict) else enumerate(col)
            for i, v in items:
                if not F.is_zero(v):
                    aug[i][n + j] = v
        ech = echelon(F, aug, n + k, limit=n)
        # rows reduced to zero on the left with a nonzero right side are inconsistent
        inconsistent = {c - n for res in ech.residues for c in res}
        out = []
        for j in range(k):
            if j in inconsistent:
                out.append(None)
                continue
            x = [F.zero] * n
            for pc, prow in ech.pivots.items():
                v = prow.get(n + j)
                if v is not None:
                    x[pc] = v
            out.append(x)
        return out

    def solve(self, b) -> list | None:
        return self.solve_columns([b])[0]


def rank_of_vectors(F: Field, vectors) -> int:
    return echelon(F, [{j: v for j, v in enumerate(vec) if not F.is_zero(v)} for vec in vectors], len(vectors[0]) if vectors else 0).rank


def span_basis(F: Field, vectors) -> list[list]:
    """A reduced basis (dense) of the span of the given dense vectors."""
    if not vectors:
        return []
    n = len(vectors[0])
    ech = echelon(F, [{j: v for j, v in enumerate(vec) if not F.is_zero(v)} for vec in vectors], n)
    out = []
    for pc in sorted(ech.pivots):
        row = ech.pivots[pc]
        out.append([row.get(j, F.zero) for j in range(n)])
    return out
