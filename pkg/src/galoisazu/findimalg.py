"""Finite-dimensional unital associative algebras given by structure constants.

``sc[i][j]`` is the coefficient vector of ``b_i * b_j``.  Every constructor
goes through :class:`Algebra`, whose initializer checks associativity on all
basis triples and the two-sided unit on all basis vectors, so a wrong table
fails at construction instead of producing wrong certificates later.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .errors import (
    CharNotTwo,
    CharTwo,
    ConstructionError,
    BadRootOrder,
    DimensionCap,
    FieldMismatch,
    FieldTooLarge,
    InfiniteField,
    NotAUnit,
    ZeroParameter,
)
from .exactfield import Field, FieldElement, has_exact_order
from .linalg import Matrix, rank_of_vectors

DEFAULT_MAX_DIM = 64
HARD_MAX_DIM = 128


def max_dim() -> int:
    """Dimension cap, overridable by GALOISAZU_MAX_DIM up to a hard ceiling."""
    raw = os.environ.get("GALOISAZU_MAX_DIM")
    if not raw:
        return DEFAULT_MAX_DIM
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_MAX_DIM
    return max(1, min(value, HARD_MAX_DIM))


class Algebra:
    """A unital associative algebra over an exact field."""

    def __init__(self, field: Field, labels, table, unit=None, kind: str = "custom", params=None, check: bool = True):
        dim = len(labels)
        if dim < 1:
            raise ConstructionError("an algebra needs at least one basis vector")
        if dim > max_dim():
            raise DimensionCap(f"dimension {dim} exceeds the cap {max_dim()}")
        if len(table) != dim or any(len(row) != dim for row in table):
            raise ConstructionError("structure-constant table has the wrong shape")
        F = field
        self.field = F
        self.dim = dim
        self.labels = tuple(labels)
        self.kind = kind
        self.params = dict(params or {})
        sc = []
        sparse = []
        for row in table:
            sc_row, sp_row = [], []
            for entry in row:
                if isinstance(entry, dict):
                    vec = [F.zero] * dim
                    for k, v in entry.items():
                        vec[k] = F.coerce(v)
                else:
                    if len(entry) != dim:
                        raise ConstructionError("structure-constant vector has the wrong length")
                    vec = [F.coerce(v) for v in entry]
                sc_row.append(tuple(vec))
                sp_row.append(tuple((k, v) for k, v in enumerate(vec) if not F.is_zero(v)))
            sc.append(tuple(sc_row))
            sparse.append(tuple(sp_row))
        self.sc = tuple(sc)
        self._sp = tuple(sparse)
        self._left_cache: dict = {}
        if check:
            self._check_associative()
        if unit is None:
            self.unit = self._find_unit()
        else:
            self.unit = tuple(F.coerce(v) for v in unit)
            if len(self.unit) != dim:
                raise ConstructionError("unit vector has the wrong length")
        if check:
            self._check_unit()

    # construction-time checks

    def _basis_times(self, vec: dict, k: int, left: bool) -> dict:
        F = self.field
        out: dict = {}
        for m, c in vec.items():
            entries = self._sp[m][k] if left else self._sp[k][m]
            for t, v in entries:
                val = F.mul(c, v)
                cur = out.get(t)
                out[t] = val if cur is None else F.add(cur, val)
        return {t: v for t, v in out.items() if not F.is_zero(v)}

    def _check_associative(self):
        n = self.dim
        for i in range(n):
            for j in range(n):
                ij = dict(self._sp[i][j])
                for k in range(n):
                    lhs = self._basis_times(ij, k, left=True)
                    rhs = self._basis_times(dict(self._sp[j][k]), i, left=False)
                    if lhs != rhs:
                        raise ConstructionError(
                            f"associativity fails on ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})"
                        )

    def _find_unit(self):
        # solve e * b_j = b_j for all j, then confirm b_j * e = b_j
        F, n = self.field, self.dim
        rows = []
        rhs = []
        for j in range(n):
            for k in range(n):
                rows.append({i: self.sc[i][j][k] for i in range(n) if not F.is_zero(self.sc[i][j][k])})
                rhs.append(F.one if j == k else F.zero)
        sol = Matrix(F, n * n, n, rows).solve(rhs)
        if sol is None:
            raise ConstructionError("no left unit exists")
        return tuple(sol)

    def _check_unit(self):
        for j in range(self.dim):
            bj = self.basis_vector(j)
            if self.mul(self.unit, bj) != bj or self.mul(bj, self.unit) != bj:
                raise ConstructionError(f"unit check fails on {self.labels[j]}")

    # raw-vector arithmetic

    def basis_vector(self, i: int) -> tuple:
        F = self.field
        return tuple(F.one if k == i else F.zero for k in range(self.dim))

    def zero_vector(self) -> tuple:
        return tuple([self.field.zero] * self.dim)

    def mul(self, u, v) -> tuple:
        F = self.field
        out = [F.zero] * self.dim
        nz_v = [(j, b) for j, b in enumerate(v) if not F.is_zero(b)]
        sp = self._sp
        for i, a in enumerate(u):
            if F.is_zero(a):
                continue
            row = sp[i]
            for j, b in nz_v:
                ab = F.mul(a, b)
                for k, c in row[j]:
                    out[k] = F.add(out[k], F.mul(ab, c))
        return tuple(out)

    def add(self, u, v) -> tuple:
        F = self.field
        return tuple(F.add(a, b) for a, b in zip(u, v))

    def sub(self, u, v) -> tuple:
        F = self.field
        return tuple(F.sub(a, b) for a, b in zip(u, v))

    def scale(self, c, u) -> tuple:
        F = self.field
        return tuple(F.mul(c, a) for a in u)

    def left_matrix(self, u) -> Matrix:
        """Matrix of x -> u x (column j = u b_j)."""
        key = tuple(u)
        cached = self._left_cache.get(key)
        if cached is None:
            cached = Matrix.from_columns(self.field, [self.mul(u, self.basis_vector(j)) for j in range(self.dim)], self.dim)
            if len(self._left_cache) < 4096:
                self._left_cache[key] = cached
        return cached

    def right_matrix(self, u) -> Matrix:
        """Matrix of x -> x u (column j = b_j u)."""
        return Matrix.from_columns(self.field, [self.mul(self.basis_vector(j), u) for j in range(self.dim)], self.dim)

    # elements

    def element(self, coeffs) -> "AlgElement":
        if len(coeffs) != self.dim:
            raise ValueError(f"expected {self.dim} coefficients, got {len(coeffs)}")
        return AlgElement(self, tuple(self.field.coerce(c) for c in coeffs))

    def basis(self, i) -> "AlgElement":
        if isinstance(i, str):
            i = self.labels.index(i)
        return AlgElement(self, self.basis_vector(i))

    def one(self) -> "AlgElement":
        return AlgElement(self, self.unit)

    def zero(self) -> "AlgElement":
        return AlgElement(self, self.zero_vector())

    def scalar(self, c) -> "AlgElement":
        return AlgElement(self, self.scale(self.field.coerce(c), self.unit))

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.sc[i][j] == self.sc[j][i] for i in range(n) for j in range(i + 1, n))

    def invert_vector(self, u) -> tuple:
        L = self.left_matrix(u)
        sol = L.solve(list(self.unit))
        if sol is None:
            raise NotAUnit("element has no right inverse")
        sol = tuple(sol)
        if self.mul(sol, u) != self.unit:
            raise NotAUnit("right inverse is not a left inverse")
        return sol

    def is_unit_vector(self, u) -> bool:
        return self.left_matrix(u).rank() == self.dim

    def relabel(self, perm, labels=None, kind=None, params=None) -> "Algebra":
        """Algebra with new basis c_i = b_{perm[i]}."""
        F, n = self.field, self.dim
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                vec = self.sc[perm[i]][perm[j]]
                row.append([vec[perm[k]] for k in range(n)])
            table.append(row)
        unit = [self.unit[perm[k]] for k in range(n)]
        return Algebra(F, labels or [self.labels[p] for p in perm], table, unit,
                       kind=kind or self.kind, params=params if params is not None else self.params)

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and self.labels == other.labels
            and self.sc == other.sc
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.field.spec, self.labels, self.sc))

    def __repr__(self):
        return f"Algebra({self.kind}, {self.field.spec}, dim={self.dim})"


class AlgElement:
    """An element of an algebra, stored as a tuple of raw coefficients."""

    __slots__ = ("algebra", "raw")

    def __init__(self, algebra: Algebra, raw):
        self.algebra = algebra
        self.raw = tuple(raw)

    @property
    def coeffs(self) -> list[FieldElement]:
        F = self.algebra.field
        return [F.element(c) for c in self.raw]

    def _other(self, other):
        if isinstance(other, AlgElement):
            if other.algebra is not self.algebra and other.algebra != self.algebra:
                raise FieldMismatch("elements of different algebras")
            return other.raw
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            o = self.algebra.scalar(other).raw
        return AlgElement(self.algebra, self.algebra.add(self.raw, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            o = self.algebra.scalar(other).raw
        return AlgElement(self.algebra, self.algebra.sub(self.raw, o))

    def __neg__(self):
        A = self.algebra
        return AlgElement(A, tuple(A.field.neg(c) for c in self.raw))

    def __mul__(self, other):
        A = self.algebra
        o = self._other(other)
        if o is None:
            return AlgElement(A, A.scale(A.field.coerce(other), self.raw))
        return AlgElement(A, A.mul(self.raw, o))

    def __rmul__(self, other):
        A = self.algebra
        return AlgElement(A, A.scale(A.field.coerce(other), self.raw))

    def __truediv__(self, other):
        A = self.algebra
        return AlgElement(A, A.scale(A.field.inv(A.field.coerce(other)), self.raw))

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.algebra.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "AlgElement":
        return AlgElement(self.algebra, self.algebra.invert_vector(self.raw))

    def is_zero(self) -> bool:
        F = self.algebra.field
        return all(F.is_zero(c) for c in self.raw)

    def __eq__(self, other):
        if isinstance(other, AlgElement):
            return self.algebra == other.algebra and self.raw == other.raw
        try:
            return self.raw == self.algebra.scalar(other).raw
        except Exception:
            return NotImplemented

    def __hash__(self):
        return hash(self.raw)

    def __repr__(self):
        F = self.algebra.field
        terms = []
        for c, lab in zip(self.raw, self.algebra.labels):
            if F.is_zero(c):
                continue
            terms.append(f"({F.element(c)})*{lab}")
        return " + ".join(terms) if terms else "0"


def multiply(u: AlgElement, v: AlgElement) -> AlgElement:
    return u * v


def add(u: AlgElement, v: AlgElement) -> AlgElement:
    return u + v


def invert(u: AlgElement) -> AlgElement:
    return u.inverse()


class SubalgebraBasis:
    """A unital subalgebra given by linearly independent raw vectors."""

    def __init__(self, algebra: Algebra, vectors, check: bool = True):
        self.algebra = algebra
        self.vectors = [tuple(algebra.field.coerce(c) for c in v) for v in vectors]
        F = algebra.field
        n = algebra.dim
        # column j = vector j, so coords solve M c = v
        self._matrix = Matrix.from_columns(F, [list(v) for v in self.vectors], n)
        if check:
            if self.vectors and rank_of_vectors(F, self.vectors) != len(self.vectors):
                raise ConstructionError("subalgebra vectors are linearly dependent")
            if self.coords(algebra.unit) is None:
                raise ConstructionError("subalgebra does not contain the unit")
            for u in self.vectors:
                for v in self.vectors:
                    if self.coords(algebra.mul(u, v)) is None:
                        raise ConstructionError("subspace is not closed under multiplication")

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def coords(self, vec):
        """Coordinates of ``vec`` in this basis, or None if not a member."""
        if not self.vectors:
            return [] if all(self.algebra.field.is_zero(c) for c in vec) else None
        return self._matrix.solve(list(vec))

    def contains(self, vec) -> bool:
        return self.coords(vec) is not None

    def same_span(self, other: "SubalgebraBasis") -> bool:
        return self.dim == other.dim and all(self.contains(v) for v in other.vectors)

    def is_commutative(self) -> bool:
        A = self.algebra
        return all(A.mul(u, v) == A.mul(v, u) for u in self.vectors for v in self.vectors)

    def elements(self) -> list[AlgElement]:
        return [AlgElement(self.algebra, v) for v in self.vectors]

    def as_algebra(self, labels=None, kind: str = "subalgebra") -> Algebra:
        """The subalgebra as a standalone algebra in the coordinates of ``vectors``."""
        A = self.algebra
        table = [[self.coords(A.mul(u, v)) for v in self.vectors] for u in self.vectors]
        unit = self.coords(A.unit)
        labels = labels or [f"v{i}" for i in range(self.dim)]
        return Algebra(A.field, labels, table, unit, kind=kind)

    def inclusion_matrix(self) -> Matrix:
        return self._matrix

    def __repr__(self):
        return f"SubalgebraBasis(dim={self.dim} in {self.algebra!r})"


# constructors

def _nonzero(F: Field, value, name: str):
    raw = F.coerce(value)
    if F.is_zero(raw):
        raise ZeroParameter(f"{name} must be nonzero")
    return raw


def quaternion_algebra(F: Field, a, b) -> Algebra:
    """(a,b/F): basis (1, i, j, k) with i^2 = a, j^2 = b, ij = -ji = k."""
    if F.characteristic == 2:
        raise CharTwo("quaternion_algebra needs characteristic != 2; use char2_quaternion")
    a = _nonzero(F, a, "a")
    b = _nonzero(F, b, "b")
    z, o = F.zero, F.one
    ab = F.mul(a, b)

    def v(c0=z, c1=z, c2=z, c3=z):
        return [c0, c1, c2, c3]

    table = [
        [v(c0=o), v(c1=o), v(c2=o), v(c3=o)],
        [v(c1=o), v(c0=a), v(c3=o), v(c2=a)],
        [v(c2=o), v(c3=F.neg(o)), v(c0=b), v(c1=F.neg(b))],
        [v(c3=o), v(c2=F.neg(a)), v(c1=b), v(c0=F.neg(ab))],
    ]
    return Algebra(F, ["1", "i", "j", "k"], table, v(c0=o), kind="quaternion",
                   params={"a": F.element(a), "b": F.element(b)})


def char2_quaternion(F: Field, a, b) -> Algebra:
    """Characteristic-2 quaternions: e1^2 = e1 + a, e2^2 = b, e2 e1 = e1 e2 + e2.

    Basis (1, e1, e2, e3) with e3 = e1 e2.
    """
    if F.characteristic != 2:
        raise CharNotTwo("char2_quaternion needs characteristic 2")
    a = F.coerce(a)
    b = F.coerce(b)
    z, o = F.zero, F.one
    ab = F.mul(a, b)

    def v(c0=z, c1=z, c2=z, c3=z):
        return [c0, c1, c2, c3]

    table = [
        [v(c0=o), v(c1=o), v(c2=o), v(c3=o)],
        [v(c1=o), v(c0=a, c1=o), v(c3=o), v(c2=a, c3=o)],
        [v(c2=o), v(c2=o, c3=o), v(c0=b), v(c0=b, c1=b)],
        [v(c3=o), v(c2=a), v(c1=b), v(c0=ab)],
    ]
    return Algebra(F, ["1", "e1", "e2", "e1e2"], table, v(c0=o), kind="char2_quaternion",
                   params={"a": F.element(a), "b": F.element(b)})


def _monomial_label(m: int, mp: int) -> str:
    parts = []
    for var, e in (("x", m), ("u", mp)):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return " ".join(parts) if parts else "1"


def symbol_algebra(F: Field, a, b, zeta, n: int) -> Algebra:
    """(a,b,zeta)_F: x^n = a, u^n = b, u x = zeta x u; basis x^m u^m' at m*n + m'."""
    if n < 2:
        raise BadRootOrder("symbol algebras need n >= 2")
    a = _nonzero(F, a, "a")
    b = _nonzero(F, b, "b")
    z = F.coerce(zeta)
    if not has_exact_order(F, z, n):
        raise BadRootOrder(f"zeta does not have exact order {n}")
    zpow = [F.pow(z, e) for e in range(n)]
    table = []
    for r in range(n):
        for s in range(n):
            row = []
            for k in range(n):
                for l in range(n):
                    coef = zpow[(k * s) % n]
                    if r + k >= n:
                        coef = F.mul(coef, a)
                    if s + l >= n:
                        coef = F.mul(coef, b)
                    row.append({((r + k) % n) * n + (s + l) % n: coef})
            table.append(row)
    labels = [_monomial_label(m, mp) for m in range(n) for mp in range(n)]
    unit = [F.one] + [F.zero] * (n * n - 1)
    return Algebra(F, labels, table, unit, kind="symbol",
                   params={"a": F.element(a), "b": F.element(b), "zeta": F.element(z), "n": n})


QUATERNION_FROM_SYMBOL = (0, 2, 1, 3)


def symbol_as_quaternion(S: Algebra) -> Algebra:
    """Relabel a degree-2 symbol algebra as (1, i, j, k) = (1, x, u, xu)."""
    if S.kind != "symbol" or S.params.get("n") != 2:
        raise ConstructionError("needs a symbol algebra with n = 2")
    return S.relabel(QUATERNION_FROM_SYMBOL, ["1", "i", "j", "k"], kind="quaternion",
                     params={"a": S.params["a"], "b": S.params["b"]})


def matrix_algebra(F: Field, n: int) -> Algebra:
    """M_n(F) with E_ij at index i*n + j."""
    if n < 1:
        raise ConstructionError("matrix_algebra needs n >= 1")
    table = []
    for i in range(n):
        for j in range(n):
            row = []
            for k in range(n):
                for l in range(n):
                    row.append({i * n + l: F.one} if j == k else {})
            table.append(row)
    labels = ["1"] if n == 1 else [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    unit = [F.one if (idx // n) == (idx % n) else F.zero for idx in range(n * n)]
    return Algebra(F, labels, table, unit, kind="matrix", params={"n": n})


def field_algebra(F: Field) -> Algebra:
    """F as a one-dimensional algebra over itself."""
    return Algebra(F, ["1"], [[{0: F.one}]], [F.one], kind="field")


def function_algebra(S: Algebra, G) -> Algebra:
    """S(G) = functions G -> S: basis s_i delta_g at index g_idx*dim(S) + i."""
    F = S.field
    d = S.dim
    elems = G.elements()
    order = len(elems)
    table = []
    for g in range(order):
        for i in range(d):
            row = []
            for h in range(order):
                for j in range(d):
                    if g != h:
                        row.append({})
                    else:
                        row.append({g * d + k: c for k, c in S._sp[i][j]})
            table.append(row)
    glabels = [G.label(e) for e in elems]
    if d == 1:
        labels = [f"δ_{gl}" for gl in glabels]
    else:
        labels = [f"{sl} δ_{gl}" for gl in glabels for sl in S.labels]
    unit = [S.unit[i] for _ in range(order) for i in range(d)]
    return Algebra(F, labels, table, unit, kind="function",
                   params={"base_kind": S.kind, "group": list(G.factors), "base_dim": d})


def quotient_algebra(F: Field, modulus) -> Algebra:
    """F[X]/(f) for a monic f given low-degree-first; basis 1, x, ..., x^(d-1)."""
    f = [F.coerce(c) for c in modulus]
    while f and F.is_zero(f[-1]):
        f.pop()
    d = len(f) - 1
    if d < 1 or f[-1] != F.one:
        raise ConstructionError("modulus must be monic of degree >= 1")
    # x^e for e < 2d - 1 reduced mod f
    powers = []
    vec = [F.one] + [F.zero] * (d - 1)
    for _ in range(2 * d - 1):
        powers.append(list(vec))
        lead = vec[-1]
        vec = [F.zero] + vec[:-1]
        vec = [F.sub(vec[i], F.mul(lead, f[i])) for i in range(d)]
    table = [[powers[i + j] for j in range(d)] for i in range(d)]
    labels = [_monomial_label(e, 0) for e in range(d)]
    return Algebra(F, labels, table, powers[0], kind="quotient",
                   params={"modulus": [F.element(c) for c in f]})


def tensor_algebra(A: Algebra, B: Algebra) -> Algebra:
    """A (x)_F B with componentwise product; basis a_i (x) b_j at index i*dim(B) + j."""
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    F = A.field
    da, db = A.dim, B.dim
    if da * db > max_dim():
        raise DimensionCap(f"tensor dimension {da * db} exceeds the cap {max_dim()}")
    table = []
    for i in range(da):
        for j in range(db):
            row = []
            for k in range(da):
                for l in range(db):
                    entry = {}
                    for p, c in A._sp[i][k]:
                        for q, e in B._sp[j][l]:
                            entry[p * db + q] = F.mul(c, e)
                    row.append(entry)
            table.append(row)
    labels = [f"{la}⊗{lb}" for la in A.labels for lb in B.labels]
    unit = [F.mul(A.unit[i], B.unit[j]) for i in range(da) for j in range(db)]
    return Algebra(F, labels, table, unit, kind="tensor",
                   params={"left": A.kind, "right": B.kind, "left_dim": da, "right_dim": db})


def opposite(A: Algebra) -> Algebra:
    """A^op: c_op[i][j] = c[j][i]."""
    n = A.dim
    table = [[list(A.sc[j][i]) for j in range(n)] for i in range(n)]
    if A.kind == "opposite":
        kind, params = A.params.get("of_kind", "custom"), dict(A.params.get("of_params", {}))
    else:
        kind, params = "opposite", {"of_kind": A.kind, "of_params": dict(A.params)}
    return Algebra(A.field, list(A.labels), table, A.unit, kind=kind, params=params)


# structure

def _commutant_matrix(A: Algebra, vectors) -> Matrix:
    """Stacked maps z -> z v - v z over the given vectors."""
    F, n = A.field, A.dim
    rows = []
    for v in vectors:
        cols = [A.sub(A.mul(A.basis_vector(j), v), A.mul(v, A.basis_vector(j))) for j in range(n)]
        block = Matrix.from_columns(F, cols, n)
        rows.extend(block.rows)
    return Matrix(F, len(rows), n, rows)


def centralizer(A: Algebra, vectors) -> SubalgebraBasis:
    """{z : z v = v z for every given v}."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return SubalgebraBasis(A, [A.basis_vector(i) for i in range(A.dim)])
    return SubalgebraBasis(A, _commutant_matrix(A, vectors).nullspace())


def centre(A: Algebra) -> SubalgebraBasis:
    return centralizer(A, [A.basis_vector(i) for i in range(A.dim)])


def sandwich_matrix(A: Algebra) -> Matrix:
    """Matrix of A (x) A^op -> End_F(A), a (x) b^op -> (x -> a x b).

    Column i*dim + j is the map x -> b_i x b_j; row k*dim + l holds the
    coefficient of b_k in b_i b_l b_j.
    """
    F, n = A.field, A.dim
    rows = [dict() for _ in range(n * n)]
    for i in range(n):
        bi = A.basis_vector(i)
        for l in range(n):
            il = A.mul(bi, A.basis_vector(l))
            for j in range(n):
                img = A.mul(il, A.basis_vector(j))
                for k, c in enumerate(img):
                    if not F.is_zero(c):
                        rows[k * n + l][i * n + j] = c
    return Matrix(F, n * n, n * n, rows)


@dataclass
class AzumayaWitness:
    is_azumaya: bool
    centre_dim: int
    rank: int
    full_rank: int

    def __bool__(self):
        return self.is_azumaya


def is_azumaya_over_field(A: Algebra) -> AzumayaWitness:
    """Centre is F*1 and A (x) A^op -> End_F(A) is bijective."""
    zdim = centre(A).dim
    rank = sandwich_matrix(A).rank()
    return AzumayaWitness(zdim == 1 and rank == A.dim ** 2, zdim, rank, A.dim ** 2)


def char2_form(H: Algebra):
    """The quartic form whose nonzero roots decide the skew-field question."""
    if H.kind != "char2_quaternion":
        raise ConstructionError("needs an algebra built by char2_quaternion")
    F = H.field
    a = H.params["a"].raw
    b = H.params["b"].raw
    add, mul = F.add, F.mul

    def form(x0, x1, x2, x3):
        first = add(add(mul(x0, x0), mul(x0, x1)), mul(a, mul(x1, x1)))
        second = add(add(mul(x2, x2), mul(x1, x2)), mul(a, mul(x3, x3)))
        return add(first, mul(b, second))

    return form


def char2_form_root(H: Algebra):
    """First nonzero root of the quartic form in canonical order, or None."""
    F = H.field
    if not F.is_finite:
        raise InfiniteField("exhaustive search needs a finite field")
    if F.cardinality > 2 ** 10:
        raise FieldTooLarge(f"|F| = {F.cardinality} exceeds 2^10")
    form = char2_form(H)
    elems = list(F.elements())
    for point in itertools.product(elems, repeat=4):
        if all(F.is_zero(c) for c in point):
            continue
        if F.is_zero(form(*point)):
            return tuple(F.element(c) for c in point)
    return None


def char2_skewfield_test(H: Algebra) -> bool:
    """True iff the quartic form vanishes only at the origin."""
    return char2_form_root(H) is None
