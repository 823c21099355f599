"""Tensor-cube identities, the operator l_eta, quaternion blocks and braid representations.

Tensors in S^(x)k (k = 2, 3) over the ground field use the lexicographic
product basis: b_i (x) b_j sits at i*d + j and b_i (x) b_j (x) b_l at
(i*d + j)*d + l.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstructionError, DimensionCap, NotInvertible
from .findimalg import Algebra
from .galois import AlgebraMorphism, GaloisCertificate, certify_galois, check_morphism, ground_extension
from .groupaction import quaternion_v_action
from .linalg import Matrix

BRAID_DIM_CAP = 256


class TensorElement:
    """An element of S^(x)k stored sparsely as {product index: raw}."""

    __slots__ = ("algebra", "k", "coeffs")

    def __init__(self, algebra: Algebra, k: int, coeffs):
        self.algebra = algebra
        self.k = k
        F = algebra.field
        if isinstance(coeffs, dict):
            self.coeffs = {i: c for i, c in coeffs.items() if not F.is_zero(c)}
        else:
            coeffs = list(coeffs)
            if len(coeffs) != algebra.dim ** k:
                raise ValueError(f"expected {algebra.dim ** k} coordinates")
            self.coeffs = {i: c for i, c in enumerate(coeffs) if not F.is_zero(c)}

    @classmethod
    def pure(cls, algebra: Algebra, *factors) -> "TensorElement":
        F = algebra.field
        d = algebra.dim
        acc = {0: F.one}
        for vec in factors:
            nxt = {}
            for idx, c in acc.items():
                for j, v in enumerate(vec):
                    if not F.is_zero(v):
                        nxt[idx * d + j] = F.mul(c, v)
            acc = nxt
        return cls(algebra, len(factors), acc)

    def dense(self) -> list:
        F = self.algebra.field
        out = [F.zero] * (self.algebra.dim ** self.k)
        for i, c in self.coeffs.items():
            out[i] = c
        return out

    def digits(self, idx: int) -> tuple:
        d = self.algebra.dim
        out = []
        for _ in range(self.k):
            out.append(idx % d)
            idx //= d
        return tuple(reversed(out))

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        if self.k != other.k:
            raise ValueError("tensor orders differ")
        S = self.algebra
        F = S.field
        d = S.dim
        out: dict = {}
        left_terms = [(self.digits(i), c) for i, c in self.coeffs.items()]
        right_terms = [(other.digits(i), c) for i, c in other.coeffs.items()]
        for di, c in left_terms:
            for dj, c2 in right_terms:
                partial = {0: F.mul(c, c2)}
                for a, b in zip(di, dj):
                    prods = S._sp[a][b]
                    nxt = {}
                    for idx, val in partial.items():
                        for t, v in prods:
                            key = idx * d + t
                            w = F.mul(val, v)
                            cur = nxt.get(key)
                            nxt[key] = w if cur is None else F.add(cur, w)
                    partial = nxt
                for key, val in partial.items():
                    cur = out.get(key)
                    out[key] = val if cur is None else F.add(cur, val)
        return TensorElement(S, self.k, out)

    def __add__(self, other):
        F = self.algebra.field
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = F.add(out.get(i, F.zero), c)
        return TensorElement(self.algebra, self.k, out)

    def scale(self, c) -> "TensorElement":
        F = self.algebra.field
        return TensorElement(self.algebra, self.k, {i: F.mul(c, v) for i, v in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.k == other.k and self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        return f"TensorElement(k={self.k}, nnz={len(self.coeffs)})"


def as_tensor(S: Algebra, eta) -> TensorElement:
    if isinstance(eta, TensorElement):
        return eta
    return TensorElement(S, 2, eta)


def embed(X, slot: str, S: Algebra | None = None) -> TensorElement:
    """X in S (x) S placed into S (x) S (x) S at slots 12, 23 or 13."""
    if not isinstance(X, TensorElement):
        X = TensorElement(S, 2, X)
    S = X.algebra
    F = S.field
    d = S.dim
    unit = [(t, c) for t, c in enumerate(S.unit) if not F.is_zero(c)]
    slot = str(slot)
    out: dict = {}
    for idx, c in X.coeffs.items():
        i, j = divmod(idx, d)
        for t, u in unit:
            if slot == "12":
                key = (i * d + j) * d + t
            elif slot == "23":
                key = (t * d + i) * d + j
            elif slot == "13":
                key = (i * d + t) * d + j
            else:
                raise ValueError(f"unknown slot {slot!r}")
            val = F.mul(c, u)
            cur = out.get(key)
            out[key] = val if cur is None else F.add(cur, val)
    return TensorElement(S, 3, out)


def check_fs_equation(S: Algebra, eta) -> tuple:
    """(X12 X23 == X23 X13, X23 X13 == X13 X12, X12 X23 == X13 X12)."""
    X = as_tensor(S, eta)
    x12, x23, x13 = embed(X, "12"), embed(X, "23"), embed(X, "13")
    a = x12 * x23
    b = x23 * x13
    c = x13 * x12
    return (a == b, b == c, a == c)


def check_yang_baxter(S: Algebra, eta) -> bool:
    X = as_tensor(S, eta)
    x12, x23 = embed(X, "12"), embed(X, "23")
    return (x12 * x23) * x12 == (x23 * x12) * x23


@dataclass
class RMatrixOperator:
    matrix: Matrix
    eta: TensorElement

    def invertible(self) -> bool:
        return self.matrix.rank() == self.matrix.nrows


def left_mult_operator(S: Algebra, eta) -> RMatrixOperator:
    """Matrix of T -> eta T on S (x) S; column k*d + l is eta (b_k (x) b_l)."""
    X = as_tensor(S, eta)
    d = S.dim
    F = S.field
    cols = []
    for k in range(d):
        for l in range(d):
            img = X * TensorElement(S, 2, {k * d + l: F.one})
            cols.append(img.coeffs)
    return RMatrixOperator(Matrix.from_columns(F, cols, d * d), X)


def invertible(op: RMatrixOperator) -> bool:
    return op.invertible()


QUATERNION_BLOCK_BASES = {
    "1": (("1", "1"), ("i", "i"), ("j", "j"), ("k", "k")),
    "i": (("1", "i"), ("i", "1"), ("j", "k"), ("k", "j")),
    "j": (("1", "j"), ("j", "1"), ("k", "i"), ("i", "k")),
    "k": (("1", "k"), ("k", "1"), ("i", "j"), ("j", "i")),
}


@dataclass
class QuaternionBlocks:
    blocks: dict  # "1", "i", "j", "k" -> 4x4 Matrix
    operator: RMatrixOperator
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def quaternion_eta(H: Algebra, cert: GaloisCertificate | None = None) -> TensorElement:
    if cert is None:
        cert = certify_galois(ground_extension(H), quaternion_v_action(H))
    return TensorElement(H, 2, cert.galois_element)


def quaternion_blocks(H: Algebra, cert: GaloisCertificate | None = None) -> QuaternionBlocks:
    """Restrict l_eta to the four stable subspaces V_1, V_i, V_j, V_k.

    Block entry (r, c) is the coefficient of the r-th basis tensor of V_u in
    l_eta applied to the c-th one.
    """
    if H.kind != "quaternion":
        raise ConstructionError("quaternion_blocks needs an algebra from quaternion_algebra")
    op = left_mult_operator(H, quaternion_eta(H, cert))
    L = op.matrix
    pos = {lab: i for i, lab in enumerate(H.labels)}
    index_sets = {
        u: [pos[a] * 4 + pos[b] for a, b in basis] for u, basis in QUATERNION_BLOCK_BASES.items()
    }
    all_idx = sorted(i for idx in index_sets.values() for i in idx)
    checks = {"direct_sum": all_idx == list(range(16))}
    blocks = {}
    invariant = True
    for u, idx in index_sets.items():
        inside = set(idx)
        for c in idx:
            col = L.column(c)
            invariant &= all(H.field.is_zero(v) for r, v in enumerate(col) if r not in inside)
        blocks[u] = L.submatrix(idx, idx)
    checks["invariant_subspaces"] = invariant
    perm = [i for u in ("1", "i", "j", "k") for i in index_sets[u]]
    reassembled = L.submatrix(perm, perm)
    diagonal = True
    for bi, u in enumerate(("1", "i", "j", "k")):
        for bj, w in enumerate(("1", "i", "j", "k")):
            sub = reassembled.submatrix(range(4 * bi, 4 * bi + 4), range(4 * bj, 4 * bj + 4))
            diagonal &= (sub == blocks[u]) if bi == bj else sub.is_zero()
    checks["blocks_equal_operator"] = diagonal
    return QuaternionBlocks(blocks, op, checks)


@dataclass
class BraidRepresentation:
    n: int
    generators: list
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _sigma(L: Matrix, d: int, n: int, i: int) -> Matrix:
    F = L.field
    left = Matrix.identity(F, d ** (i - 1))
    right = Matrix.identity(F, d ** (n - i - 1))
    return left.kron(L).kron(right)


def braid_representation(S: Algebra, eta, n: int) -> BraidRepresentation:
    """rho(sigma_i) = id^(i-1) (x) l_eta (x) id^(n-i-1), braid relations verified."""
    if not 2 <= n <= 4:
        raise ValueError("braid representations are built for 2 <= n <= 4 strands")
    d = S.dim
    if d ** n > BRAID_DIM_CAP:
        raise DimensionCap(f"dim(S)^n = {d ** n} exceeds {BRAID_DIM_CAP}")
    op = left_mult_operator(S, eta)
    if not op.invertible():
        raise NotInvertible("l_eta is not invertible")
    gens = [_sigma(op.matrix, d, n, i) for i in range(1, n)]
    checks = {}
    ok = True
    for i in range(len(gens) - 1):
        a, b = gens[i], gens[i + 1]
        ok &= (a @ b) @ a == (b @ a) @ b
    checks["braid_relation"] = ok
    ok = True
    for i in range(len(gens)):
        for j in range(i + 2, len(gens)):
            ok &= gens[i] @ gens[j] == gens[j] @ gens[i]
    checks["far_commutation"] = ok
    if not all(checks.values()):
        raise ConstructionError(f"braid relations fail: {checks}")
    return BraidRepresentation(n, gens, checks)


def check_rep_morphism(cert1: GaloisCertificate, cert2: GaloisCertificate, phi) -> bool:
    """phi^(x)n rho(sigma_i) = rho'(sigma_i) phi^(x)n for n = 2, 3."""
    report = check_morphism(cert1, cert2, phi)
    if not report.passed:
        return False
    S1, S2 = cert1.algebra, cert2.algebra
    if isinstance(phi, Matrix):
        from .exactfield import FieldEmbedding

        phi = AlgebraMorphism(S1, S2, phi, FieldEmbedding(S1.field, S2.field))
    T = S2.field
    Phi = Matrix.from_columns(T, [list(phi(S1.basis_vector(i))) for i in range(S1.dim)], S2.dim)
    for n in (2, 3):
        if max(S1.dim, S2.dim) ** n > BRAID_DIM_CAP:
            continue
        rho1 = braid_representation(S1, cert1.galois_element, n)
        rho2 = braid_representation(S2, cert2.galois_element, n)
        Phin = Phi
        for _ in range(n - 1):
            Phin = Phin.kron(Phi)
        for g1, g2 in zip(rho1.generators, rho2.generators):
            g1T = g1.map_entries(phi.embedding, T)
            if Phin @ g1T != g2 @ Phin:
                return False
    return True
