"""Frobenius systems, separability data, Nakayama automorphism, symmetry search."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CertificationError, GaloisAzuError, NotCentralizing
from .galois import Extension, GaloisCertificate, trace_vector
from .linalg import Matrix

SYMMETRY_ENUMERATION_LIMIT = 10 ** 5
_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


@dataclass
class FrobeniusSystem:
    extension: Extension
    pairs: tuple  # (u_1..u_m ; v_1..v_m)
    tau: Matrix  # base coordinates of tau(b_k) in column k
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def tau_vector(self, s) -> tuple:
        """tau(s) as an element of S."""
        ext = self.extension
        S = ext.total
        coords = self.tau.apply(list(s))
        out = S.zero_vector()
        for c, v in zip(coords, ext.base_vectors):
            out = S.add(out, S.scale(c, v))
        return out


def frobenius_from_galois(cert: GaloisCertificate) -> FrobeniusSystem:
    """((x_i, y_i), tr) with both normalizing conditions and bimodule property verified."""
    ext = cert.extension
    S = ext.total
    xs, ys = cert.galois_basis
    tau = cert.trace_matrix
    if tau is None:
        raise CertificationError("the trace does not land in the base")
    system = FrobeniusSystem(ext, (list(xs), list(ys)), tau, {})
    tr = system.tau_vector
    left_ok = right_ok = True
    for k in range(S.dim):
        s = S.basis_vector(k)
        acc_l = S.zero_vector()
        acc_r = S.zero_vector()
        for x, y in zip(xs, ys):
            acc_l = S.add(acc_l, S.mul(x, tr(S.mul(y, s))))
            acc_r = S.add(acc_r, S.mul(tr(S.mul(s, x)), y))
        left_ok &= acc_l == s
        right_ok &= acc_r == s
    system.checks["normalizing_left"] = left_ok
    system.checks["normalizing_right"] = right_ok
    ok = True
    for r in ext.base_vectors:
        for r2 in ext.base_vectors:
            for k in range(S.dim):
                s = S.basis_vector(k)
                ok &= tr(S.mul(S.mul(r, s), r2)) == S.mul(S.mul(r, tr(s)), r2)
    system.checks["bimodule"] = ok
    system.checks["trace_matches_galois_action"] = all(
        tr(S.basis_vector(k)) == trace_vector(cert.action, S.basis_vector(k)) for k in range(S.dim)
    )
    return system


@dataclass
class SeparabilityReport:
    eta: list
    casimir_ok: bool
    mu_one_ok: bool
    idempotent_ok: bool | None

    @property
    def passed(self) -> bool:
        return self.casimir_ok and self.mu_one_ok and self.idempotent_ok is not False


def _enveloping_square(S, eta) -> dict:
    """e(eta)^2 in S (x) S^op, where (u (x) v^o)(u' (x) v'^o) = u u' (x) (v' v)^o."""
    F = S.field
    d = S.dim
    terms = [(idx // d, idx % d, c) for idx, c in enumerate(eta) if not F.is_zero(c)]
    out: dict = {}
    for i, k, c in terms:
        for j, l, c2 in terms:
            left = S._sp[i][j]
            right = S._sp[l][k]
            coef = F.mul(c, c2)
            for p, a in left:
                for q, b in right:
                    key = p * d + q
                    val = F.mul(coef, F.mul(a, b))
                    cur = out.get(key)
                    out[key] = val if cur is None else F.add(cur, val)
    return {k: v for k, v in out.items() if not F.is_zero(v)}


def separability_check(ext: Extension, eta) -> SeparabilityReport:
    S = ext.total
    F = S.field
    eta = list(eta)
    casimir = all(
        ext.right_mul(eta, S.basis_vector(k)) == ext.left_mul(S.basis_vector(k), eta) for k in range(S.dim)
    )
    mu_one = ext.multiplication(eta) == tuple(S.unit)
    idempotent = None
    if ext.base is None:
        square = _enveloping_square(S, eta)
        idempotent = square == {k: v for k, v in enumerate(eta) if not F.is_zero(v)}
    return SeparabilityReport(eta, casimir, mu_one, idempotent)


@dataclass
class NakayamaResult:
    matrix: Matrix
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def is_identity(self) -> bool:
        return self.matrix.is_identity()


def nakayama(cert: GaloisCertificate) -> NakayamaResult:
    """nu(d) = sum_i tr(x_i d) y_i, with tau(nu(d) s) = tau(s d) verified on all basis pairs."""
    if not cert.is_centralizing:
        raise NotCentralizing("the Nakayama automorphism is computed for extensions of the ground field")
    S = cert.algebra
    F = S.field
    system = frobenius_from_galois(cert)
    tau = cert.trace_matrix

    def tau_scalar(v):
        return tau.apply(list(v))[0]

    xs, ys = cert.galois_basis
    cols = []
    for k in range(S.dim):
        dk = S.basis_vector(k)
        acc = S.zero_vector()
        for x, y in zip(xs, ys):
            c = tau_scalar(S.mul(x, dk))
            if not F.is_zero(c):
                acc = S.add(acc, S.scale(c, y))
        cols.append(list(acc))
    nu = Matrix.from_columns(F, cols, S.dim)
    images = [tuple(c) for c in cols]
    checks = {"frobenius_system": system.passed}
    checks["fixes_unit"] = tuple(nu.apply(list(S.unit))) == tuple(S.unit)
    checks["multiplicative"] = all(
        tuple(nu.apply(list(S.sc[i][j]))) == S.mul(images[i], images[j]) for i in range(S.dim) for j in range(S.dim)
    )
    checks["invertible"] = nu.rank() == S.dim
    checks["defining_identity"] = all(
        tau_scalar(S.mul(images[k], S.basis_vector(j))) == tau_scalar(S.mul(S.basis_vector(j), S.basis_vector(k)))
        for k in range(S.dim) for j in range(S.dim)
    )
    checks["fixes_base"] = all(tuple(nu.apply(list(v))) == tuple(v) for v in cert.extension.base_vectors)
    return NakayamaResult(nu, checks)


@dataclass
class SymmetryResult:
    status: str  # "inner", "not-inner" or "not-found-at-desk-scale"
    witness: tuple | None
    solution_dim: int
    method: str

    def __bool__(self):
        return self.status == "inner"


def _conjugation_ok(S, nu: Matrix, w) -> bool:
    try:
        winv = S.invert_vector(w)
    except GaloisAzuError:
        return False
    for k in range(S.dim):
        s = S.basis_vector(k)
        if S.mul(S.mul(w, s), winv) != tuple(nu.apply(list(s))):
            return False
    return True


def is_symmetric(cert: GaloisCertificate, nu) -> SymmetryResult:
    """Search an invertible w with nu(s) w = w s for every s."""
    if not cert.is_centralizing:
        raise NotCentralizing("symmetry is tested for extensions of the ground field")
    if isinstance(nu, NakayamaResult):
        nu = nu.matrix
    S = cert.algebra
    F = S.field
    d = S.dim
    rows = []
    for k in range(d):
        s = S.basis_vector(k)
        block = S.left_matrix(tuple(nu.apply(list(s)))) - S.right_matrix(s)
        rows.extend(block.rows)
    W = Matrix(F, len(rows), d, rows).nullspace()
    if not W:
        return SymmetryResult("not-inner", None, 0, "solution space is zero")

    def combo(coeffs):
        v = S.zero_vector()
        for c, w in zip(coeffs, W):
            if not F.is_zero(c):
                v = S.add(v, S.scale(c, w))
        return v

    def accept(v, method):
        if S.is_unit_vector(v) and _conjugation_ok(S, nu, v):
            return SymmetryResult("inner", tuple(v), len(W), method)
        return None

    if F.is_finite and F.cardinality ** len(W) <= SYMMETRY_ENUMERATION_LIMIT:
        elems = list(F.elements())
        for coeffs in itertools.product(elems, repeat=len(W)):
            if all(F.is_zero(c) for c in coeffs):
                continue
            found = accept(combo(coeffs), "exhaustive enumeration")
            if found:
                return found
        return SymmetryResult("not-inner", None, len(W), "exhaustive enumeration found no unit")
    candidates = []
    if len(W) <= len(_PRIMES):
        candidates.append((combo([F.from_int(p) for p in _PRIMES[: len(W)]]), "generic combination"))
    candidates.extend((w, "solution basis vector") for w in W)
    for v, method in candidates:
        found = accept(v, method)
        if found:
            return found
    return SymmetryResult("not-found-at-desk-scale", None, len(W), "generic points were not units")
