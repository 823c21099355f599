"""Galois morphism, certification, Galois elements and derived extensions.

A tensor in S (x)_R S is stored through a right R-module basis f_1..f_n of
S: every tensor is uniquely sum_i f_i (x) y_i, so its coordinates are the
concatenated coefficient vectors of y_1..y_n (index i*dim(S) + k).  With
R = F*1 the module basis is the standard basis and this is the usual
product basis b_i (x) b_k.

The Galois morphism Gamma(s (x) t) = sum_g s g(t) delta_g lands in S(G),
whose coordinates are indexed g_idx*dim(S) + k.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

from .errors import (
    ActionMovesBase,
    BaseMismatch,
    ConstructionError,
    DivisionByZero,
    FixedRingNotField,
    GammaSingular,
    InvariantsMismatch,
    NotAlgebraMorphism,
    NotCommutative,
    NotEquivariant,
    NotStrict,
    SubgroupNotFactor,
)
from .exactfield import (
    FieldEmbedding,
    Rationals,
    is_irreducible_finite,
    is_irreducible_rational,
)
from .findimalg import (
    Algebra,
    SubalgebraBasis,
    field_algebra,
    function_algebra,
    opposite,
    tensor_algebra,
)
from .groupaction import (
    AlgebraAction,
    GroupSpec,
    invariants,
    opposite_action,
    product_action,
    translation_action,
)
from .linalg import Echelon, Matrix, _insert, _reduce_into

FAITHFUL_FLATNESS_NOTE = (
    "faithful flatness holds structurally: the base is a field, so S is a free "
    "nonzero module over it; bijectivity of Gamma together with S^G = R completes the check"
)

FIELD_ENUMERATION_LIMIT = 10 ** 4


class Extension:
    """An extension R -> S with R = F*1 (base None) or a commutative subfield U of S."""

    def __init__(self, total: Algebra, base: SubalgebraBasis | None = None):
        self.total = total
        self.base = base
        d = total.dim
        if base is None:
            self.module_basis = [total.basis_vector(i) for i in range(d)]
            self._expand_inv = None
            self.base_vectors = [total.unit]
        else:
            if base.algebra is not total and base.algebra != total:
                raise BaseMismatch("base subalgebra lives in a different algebra")
            if not base.is_commutative():
                raise NotCommutative("the base must be commutative")
            self.base_vectors = list(base.vectors)
            self.module_basis, self._expand_inv = self._choose_module_basis()
        self.rank = len(self.module_basis)
        # left multiplication by each basis vector in module coordinates
        self._left_cache: dict = {}

    def _choose_module_basis(self):
        S = self.total
        F = S.field
        d = S.dim
        U = self.base_vectors
        m = len(U)
        if d % m:
            raise BaseMismatch(f"dim S = {d} is not a multiple of dim R = {m}")
        ech = Echelon(d)
        chosen = []
        columns = []
        for k in range(d):
            f = S.basis_vector(k)
            products = [S.mul(f, u) for u in U]
            trial = Echelon(d, {c: dict(r) for c, r in ech.pivots.items()})
            ok = True
            for p in products:
                row = _reduce_into(F, trial, {j: v for j, v in enumerate(p) if not F.is_zero(v)})
                if _insert(F, trial, row) is None:
                    ok = False
                    break
            if ok:
                ech = trial
                chosen.append(f)
                columns.extend(products)
            if len(columns) == d:
                break
        if len(columns) != d:
            raise BaseMismatch("S is not free as a right module over the base")
        E = Matrix.from_columns(F, [list(c) for c in columns], d)
        return chosen, E.inverse()

    @property
    def field(self):
        return self.total.field

    @property
    def tensor_dim(self) -> int:
        return self.rank * self.total.dim

    def right_coords(self, p) -> list:
        """p = sum_i f_i u_i; returns the u_i as vectors of S."""
        S = self.total
        F = S.field
        if self._expand_inv is None:
            return [S.scale(c, S.unit) for c in p]
        c = self._expand_inv.apply(list(p))
        m = len(self.base_vectors)
        out = []
        for i in range(self.rank):
            vec = S.zero_vector()
            for j in range(m):
                coef = c[i * m + j]
                if not F.is_zero(coef):
                    vec = S.add(vec, S.scale(coef, self.base_vectors[j]))
            out.append(vec)
        return out

    # tensors in S (x)_R S

    def zero_tensor(self) -> list:
        return [self.field.zero] * self.tensor_dim

    def components(self, T) -> list[tuple]:
        d = self.total.dim
        return [tuple(T[i * d:(i + 1) * d]) for i in range(self.rank)]

    def from_components(self, comps) -> list:
        out = []
        for c in comps:
            out.extend(c)
        return out

    def pure(self, p, q) -> list:
        """Coordinates of p (x) q."""
        S = self.total
        if self._expand_inv is None:
            F = S.field
            out = []
            for c in p:
                out.extend(S.scale(c, q) if not F.is_zero(c) else S.zero_vector())
            return out
        return self.from_components([S.mul(u, q) for u in self.right_coords(p)])

    def tensor_add(self, T1, T2) -> list:
        F = self.field
        return [F.add(a, b) for a, b in zip(T1, T2)]

    def tensor_scale(self, c, T) -> list:
        F = self.field
        return [F.mul(c, a) for a in T]

    def _left_structure(self, s) -> list:
        key = tuple(s)
        cached = self._left_cache.get(key)
        if cached is None:
            S = self.total
            cached = [self.right_coords(S.mul(s, f)) for f in self.module_basis]
            if len(self._left_cache) < 1024:
                self._left_cache[key] = cached
        return cached

    def left_mul(self, s, T) -> list:
        """s . sum_i f_i (x) y_i = sum_i (s f_i) (x) y_i."""
        S = self.total
        comps = self.components(T)
        out = [S.zero_vector() for _ in range(self.rank)]
        for i, w_i in enumerate(self._left_structure(s)):
            y = comps[i]
            if all(S.field.is_zero(c) for c in y):
                continue
            for j, w in enumerate(w_i):
                if any(not S.field.is_zero(c) for c in w):
                    out[j] = S.add(out[j], S.mul(w, y))
        return self.from_components(out)

    def right_mul(self, T, s) -> list:
        S = self.total
        return self.from_components([S.mul(y, s) for y in self.components(T)])

    def multiplication(self, T) -> tuple:
        """mu(sum f_i (x) y_i) = sum f_i y_i."""
        S = self.total
        out = S.zero_vector()
        for f, y in zip(self.module_basis, self.components(T)):
            out = S.add(out, S.mul(f, y))
        return out

    def one_tensor(self) -> list:
        return self.pure(self.total.unit, self.total.unit)

    def base_coords(self, s):
        """Coordinates of s in the base, or None if s is not in the base."""
        S = self.total
        if self.base is None:
            c = s[0] if S.unit == S.basis_vector(0) else None
            if c is not None and S.scale(c, S.unit) == tuple(s):
                return [c]
            sol = Matrix.from_columns(S.field, [list(S.unit)], S.dim).solve(list(s))
            return sol
        return self.base.coords(s)

    def __repr__(self):
        base = "F" if self.base is None else f"U(dim {len(self.base_vectors)})"
        return f"Extension({base} -> {self.total!r})"


def ground_extension(S: Algebra) -> Extension:
    return Extension(S, None)


@dataclass
class GaloisCertificate:
    extension: Extension
    action: AlgebraAction
    gamma: Matrix
    gamma_inverse: Matrix
    eta: dict
    galois_basis: tuple
    checks: dict
    strict: bool
    notes: list = dc_field(default_factory=list)
    trace_matrix: Matrix | None = None

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def galois_element(self) -> list:
        return self.eta[self.action.group.identity]

    @property
    def algebra(self) -> Algebra:
        return self.extension.total

    @property
    def field(self):
        return self.extension.total.field

    @property
    def is_centralizing(self) -> bool:
        return self.extension.base is None


def _fixes_base(ext: Extension, action: AlgebraAction) -> bool:
    for i in range(action.group.rank):
        M = action.generators[i]
        for v in ext.base_vectors:
            if tuple(M.apply(list(v))) != tuple(v):
                return False
    return True


def gamma_matrix(ext: Extension, action: AlgebraAction) -> Matrix:
    """Matrix of Gamma: column i*dim+k is the image of f_i (x) b_k."""
    S = ext.total
    if action.algebra is not S and action.algebra != S:
        raise BaseMismatch("action and extension use different algebras")
    if not _fixes_base(ext, action):
        raise ActionMovesBase("the action does not fix the base pointwise")
    F = S.field
    d = S.dim
    elems = action.group.elements()
    images = [action.matrix(g).columns() for g in elems]
    columns = []
    for f in ext.module_basis:
        for k in range(d):
            col = {}
            for gi in range(len(elems)):
                v = S.mul(f, images[gi][k])
                for l, c in enumerate(v):
                    if not F.is_zero(c):
                        col[gi * d + l] = c
            columns.append(col)
    return Matrix.from_columns(F, columns, len(elems) * d)


def delta(action: AlgebraAction, g, s=None) -> list:
    """Coordinates of s delta_g in S(G) (s defaults to 1)."""
    S = action.algebra
    F = S.field
    s = S.unit if s is None else s
    out = [F.zero] * (action.group.order * S.dim)
    gi = action.group.index(g)
    out[gi * S.dim:(gi + 1) * S.dim] = list(s)
    return out


def apply_gamma(ext: Extension, action: AlgebraAction, T) -> list:
    """Gamma applied directly from its definition, without the matrix."""
    S = ext.total
    F = S.field
    elems = action.group.elements()
    out = []
    comps = ext.components(T)
    for g in elems:
        acc = S.zero_vector()
        for f, y in zip(ext.module_basis, comps):
            if all(F.is_zero(c) for c in y):
                continue
            acc = S.add(acc, S.mul(f, action.act(g, y)))
        out.extend(acc)
    return out


def trace_vector(action: AlgebraAction, s) -> tuple:
    """tr(s) = sum_g g(s)."""
    S = action.algebra
    acc = S.zero_vector()
    for g in action.group.elements():
        acc = S.add(acc, action.act(g, s))
    return acc


def trace(cert: GaloisCertificate, s):
    from .findimalg import AlgElement

    raw = s.raw if hasattr(s, "raw") else tuple(s)
    return AlgElement(cert.algebra, trace_vector(cert.action, raw))


def trace_map(cert: GaloisCertificate) -> Matrix:
    """Matrix of tr: S -> R in the base coordinates (column k = tr(b_k))."""
    return cert.trace_matrix


def _trace_matrix(ext: Extension, action: AlgebraAction):
    S = ext.total
    cols = []
    for k in range(S.dim):
        c = ext.base_coords(trace_vector(action, S.basis_vector(k)))
        if c is None:
            return None
        cols.append(c)
    return Matrix.from_columns(S.field, cols, len(ext.base_vectors))


def certify_galois(ext: Extension, action: AlgebraAction) -> GaloisCertificate:
    """Build Gamma, invert it and verify every Galois identity exactly."""
    S = ext.total
    F = S.field
    G = action.group
    gamma = gamma_matrix(ext, action)

    inv_sub = invariants(action)
    base_sub = ext.base if ext.base is not None else SubalgebraBasis(S, [S.unit])
    if not inv_sub.same_span(base_sub):
        raise InvariantsMismatch(
            f"S^G has dimension {inv_sub.dim}, base has dimension {base_sub.dim}", invariants=inv_sub
        )
    if gamma.nrows != gamma.ncols:
        raise GammaSingular(
            f"Gamma is {gamma.nrows}x{gamma.ncols}: rank_R(S) = {ext.rank} differs from |G| = {G.order}",
            rank=gamma.rank(),
        )
    try:
        gamma_inv = gamma.inverse()
    except DivisionByZero:
        raise GammaSingular(f"Gamma is singular (rank {gamma.rank()} < {gamma.nrows})", rank=gamma.rank()) from None

    checks: dict[str, bool] = {"invariants_ok": True, "gamma_bijective": True}
    identity = Matrix.identity(F, gamma.nrows)
    checks["gamma_roundtrip"] = (gamma @ gamma_inv) == identity and (gamma_inv @ gamma) == identity

    elems = G.elements()
    eta = {g: gamma_inv.apply(delta(action, g)) for g in elems}
    e = G.identity
    eta_e = eta[e]

    comps = ext.components(eta_e)
    xs, ys = [], []
    for f, y in zip(ext.module_basis, comps):
        if any(not F.is_zero(c) for c in y):
            xs.append(tuple(f))
            ys.append(tuple(y))

    # sum_i x_i g(y_i) = [g = e]
    ok = True
    for g in elems:
        acc = S.zero_vector()
        for x, y in zip(xs, ys):
            acc = S.add(acc, S.mul(x, action.act(g, y)))
        want = S.unit if g == e else S.zero_vector()
        ok &= acc == tuple(want)
    checks["galois_basis_identity"] = ok

    # eta_g = sum_i x_i (x) g^-1(y_i), and Gamma(eta_g) = delta_g from the definition
    ok = True
    for g in elems:
        ginv = G.neg(g)
        T = ext.zero_tensor()
        for x, y in zip(xs, ys):
            T = ext.tensor_add(T, ext.pure(x, action.act(ginv, y)))
        ok &= T == eta[g]
        ok &= apply_gamma(ext, action, eta[g]) == delta(action, g)
    checks["eta_from_basis"] = ok

    total = ext.zero_tensor()
    for g in elems:
        total = ext.tensor_add(total, eta[g])
    checks["eta_sum_is_one"] = total == ext.one_tensor()

    ok = True
    for g in elems:
        for k in range(S.dim):
            s = S.basis_vector(k)
            ok &= ext.right_mul(eta[g], s) == ext.left_mul(action.act(g, s), eta[g])
            if not ok:
                break
    checks["eta_twisted_commutation"] = ok

    tmat = _trace_matrix(ext, action)
    checks["trace_lands_in_base"] = tmat is not None
    ok = tmat is not None
    if ok:
        order = F.from_int(G.order)
        for v in ext.base_vectors:
            ok &= trace_vector(action, v) == S.scale(order, v)
    checks["trace_on_base"] = ok

    strict = F.characteristic == 0 or G.order % F.characteristic != 0
    notes = [FAITHFUL_FLATNESS_NOTE]
    if not strict:
        notes.append(f"not strict: the characteristic {F.characteristic} divides |G| = {G.order}")
    return GaloisCertificate(ext, action, gamma, gamma_inv, eta, (xs, ys), checks, strict, notes, tmat)


def galois_element(cert: GaloisCertificate) -> list:
    return cert.galois_element


def galois_basis(cert: GaloisCertificate):
    return cert.galois_basis


def eta_of(cert: GaloisCertificate, g) -> list:
    """eta_g = Gamma^-1(delta_g), re-verified against Gamma before returning."""
    g = cert.action.group.reduce(g)
    T = cert.eta[g]
    if cert.gamma.apply(T) != delta(cert.action, g):
        raise GammaSingular("Gamma(eta_g) != delta_g")
    return T


def tensor_pure_terms(ext: Extension, T):
    """Decompose a tensor into pure tensors f_i (x) y_i (nonzero y_i only)."""
    F = ext.field
    out = []
    for f, y in zip(ext.module_basis, ext.components(T)):
        if any(not F.is_zero(c) for c in y):
            out.append((tuple(f), tuple(y)))
    return out


# standard extensions

def trivial_extension(F, G: GroupSpec):
    """F -> F(G) with the translation action; the diagonal copy of F is the base."""
    A = function_algebra(field_algebra(F), G)
    return ground_extension(A), translation_action(A, G)


# constructions on certificates

def _vec_kron(F, u, v):
    return tuple(F.mul(a, b) for a in u for b in v)


def tensor_galois(cert1: GaloisCertificate, cert2: GaloisCertificate) -> GaloisCertificate:
    """Certify R -> S (x)_F S' for G x G' acting factorwise, from scratch."""
    if cert1.extension.base is not None or cert2.extension.base is not None:
        raise BaseMismatch("tensor_galois needs both extensions over the ground field")
    if cert1.field != cert2.field:
        raise BaseMismatch(f"{cert1.field} vs {cert2.field}")
    S1, S2 = cert1.algebra, cert2.algebra
    F = S1.field
    T = tensor_algebra(S1, S2)
    act = product_action(cert1.action, cert2.action, T)
    ext = ground_extension(T)
    cert = certify_galois(ext, act)
    # interleaved Galois element sum (x_i (x) x'_k) (x) (y_i (x) y'_k)
    want = ext.zero_tensor()
    for x, y in zip(*cert1.galois_basis):
        for x2, y2 in zip(*cert2.galois_basis):
            want = ext.tensor_add(want, ext.pure(_vec_kron(F, x, x2), _vec_kron(F, y, y2)))
    cert.checks["eta_interleaved"] = want == cert.galois_element
    return cert


def opposite_extension(cert: GaloisCertificate) -> GaloisCertificate:
    """R^o -> S^o with g(s^o) = g(s)^o, certified afresh."""
    S = cert.algebra
    Sop = opposite(S)
    act = opposite_action(cert.action, Sop)
    base = None if cert.extension.base is None else SubalgebraBasis(Sop, cert.extension.base_vectors)
    ext = Extension(Sop, base)
    new = certify_galois(ext, act)
    # the transformed basis (y_i^o ; g^-1(x_i)^o) must give eta^o_g
    G = cert.action.group
    xs, ys = cert.galois_basis
    ok = True
    for g in G.elements():
        ginv = G.neg(g)
        T = ext.zero_tensor()
        for x, y in zip(xs, ys):
            T = ext.tensor_add(T, ext.pure(y, act.act(ginv, x)))
        ok &= new.gamma.apply(T) == delta(act, g)
        ok &= T == new.eta[g]
    new.checks["opposite_basis_transform"] = ok
    return new


def subgroup_action(action: AlgebraAction, generators) -> AlgebraAction:
    """Restrict to the subgroup generated by ``generators``, presented as a product of cyclics."""
    G = action.group
    gens = [G.reduce(g) for g in generators]
    members = G.subgroup(gens)
    orders = [G.element_order(g) for g in gens]
    prod = 1
    for o in orders:
        prod *= o
    if prod != len(members):
        raise SubgroupNotFactor("subgroup generators must give a direct-product presentation")
    H = GroupSpec(tuple(orders))
    return AlgebraAction(H, action.algebra, [action.matrix(g) for g in gens], name=f"{action.name}-restricted")


def minimal_polynomial(A: Algebra, v) -> list:
    """Monic minimal polynomial of v over the ground field (low degree first)."""
    F = A.field
    powers = [A.unit]
    while True:
        nxt = A.mul(powers[-1], v)
        M = Matrix.from_columns(F, [list(p) for p in powers], A.dim)
        sol = M.solve(list(nxt))
        if sol is not None:
            return [F.neg(c) for c in sol] + [F.one]
        powers.append(nxt)
        if len(powers) > A.dim + 1:  # pragma: no cover
            raise ConstructionError("minimal polynomial degree exceeds the dimension")


def _is_irreducible(F, poly) -> bool:
    if F.is_finite:
        return is_irreducible_finite(F, poly)
    if isinstance(F, Rationals):
        return is_irreducible_rational(poly)
    raise FixedRingNotField(f"cannot decide irreducibility over {F}")


def check_field(sub: SubalgebraBasis) -> str:
    """Verify a commutative subalgebra is a field; returns how it was decided."""
    A = sub.algebra
    F = A.field
    if not sub.is_commutative():
        raise FixedRingNotField("the fixed ring is not commutative")
    if sub.dim == 1:
        return "one-dimensional"
    if F.is_finite and F.cardinality ** sub.dim <= FIELD_ENUMERATION_LIMIT:
        import itertools

        elems = list(F.elements())
        for coeffs in itertools.product(elems, repeat=sub.dim):
            if all(F.is_zero(c) for c in coeffs):
                continue
            v = A.zero_vector()
            for c, b in zip(coeffs, sub.vectors):
                v = A.add(v, A.scale(c, b))
            if not A.is_unit_vector(v):
                raise FixedRingNotField("the fixed ring has a zero divisor")
        return "every nonzero element inverted"
    # primitive element: its minimal polynomial has full degree and is irreducible
    candidates = list(sub.vectors)
    for shift in range(1, 4):
        v = A.zero_vector()
        for idx, b in enumerate(sub.vectors):
            v = A.add(v, A.scale(F.from_int(idx * shift + 1), b))
        candidates.append(v)
    for v in candidates:
        mp = minimal_polynomial(A, v)
        if len(mp) - 1 == sub.dim:
            if _is_irreducible(F, mp):
                return "primitive element with irreducible minimal polynomial"
            raise FixedRingNotField("primitive element has a reducible minimal polynomial")
    raise FixedRingNotField("no primitive element found; cannot confirm the fixed ring is a field")


@dataclass
class FixedRingResult:
    fixed_ring: SubalgebraBasis
    field_check: str
    upper: GaloisCertificate
    lower: GaloisCertificate | None
    quotient_note: str | None = None


def _quotient_action(action: AlgebraAction, sub: SubalgebraBasis, U: Algebra, coords: list[int]) -> AlgebraAction:
    G = action.group
    F = U.field
    mats = []
    for i in coords:
        M = action.generators[i]
        cols = [sub.coords(M.apply(list(v))) for v in sub.vectors]
        mats.append(Matrix.from_columns(F, cols, U.dim))
    Q = GroupSpec(tuple(G.factors[i] for i in coords))
    return AlgebraAction(Q, U, mats, name=f"{action.name}-quotient")


def fixed_ring_extension(cert: GaloisCertificate, subgroup_generators, require_quotient: bool = False) -> FixedRingResult:
    """U = S^H: certify U -> S as H-Galois and R -> U as G/H-Galois."""
    if not cert.strict:
        raise NotStrict("fixed-ring extensions need |G| invertible in the field")
    if cert.extension.base is not None:
        raise BaseMismatch("fixed_ring_extension needs a certificate over the ground field")
    action = cert.action
    G = action.group
    H_action = subgroup_action(action, subgroup_generators)
    gens = [G.reduce(g) for g in subgroup_generators]
    sub = action.fixed_subalgebra(gens) if gens else action.fixed_subalgebra([])
    how = check_field(sub)
    S = cert.algebra
    upper_ext = Extension(S, None if sub.dim == 1 else sub)
    upper = certify_galois(upper_ext, H_action)

    # the quotient part needs H to be a product of whole coordinate factors
    members = set(G.subgroup(gens))
    coords_in = [i for i in range(G.rank) if G.generator(i) in members]
    expected = set(G.subgroup([G.generator(i) for i in coords_in]))
    if members != expected:
        note = "H is not a product of coordinate factors; the quotient extension was not built"
        if require_quotient:
            raise SubgroupNotFactor(note)
        return FixedRingResult(sub, how, upper, None, note)
    rest = [i for i in range(G.rank) if i not in coords_in]
    labels = [f"v{i}" for i in range(sub.dim)]
    U = sub.as_algebra(labels, kind="fixed_ring")
    q_action = _quotient_action(action, sub, U, rest)
    lower = certify_galois(ground_extension(U), q_action)
    return FixedRingResult(sub, how, upper, lower)


# morphisms and base change

@dataclass
class MorphismReport:
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


@dataclass
class AlgebraMorphism:
    """An F-linear map S -> S' given by a matrix over the field of S'.

    Scalars of S are carried into the field of S' by ``embedding``.
    """

    source: Algebra
    target: Algebra
    matrix: Matrix
    embedding: FieldEmbedding

    def __call__(self, v) -> tuple:
        T = self.target.field
        mapped = [self.embedding(c) for c in v]
        out = [T.zero] * self.target.dim
        for k, row in enumerate(self.matrix.rows):
            acc = T.zero
            for i, c in row.items():
                if not T.is_zero(mapped[i]):
                    acc = T.add(acc, T.mul(c, mapped[i]))
            out[k] = acc
        return tuple(out)


def identity_morphism(S: Algebra) -> AlgebraMorphism:
    return AlgebraMorphism(S, S, Matrix.identity(S.field, S.dim), FieldEmbedding(S.field, S.field))


def check_morphism(cert: GaloisCertificate, cert2: GaloisCertificate, phi) -> MorphismReport:
    """Verify phi is an equivariant algebra map and that it intertwines Gamma and eta."""
    S, S2 = cert.algebra, cert2.algebra
    if isinstance(phi, Matrix):
        phi = AlgebraMorphism(S, S2, phi, FieldEmbedding(S.field, S2.field))
    images = [phi(S.basis_vector(i)) for i in range(S.dim)]
    if phi(S.unit) != tuple(S2.unit):
        raise NotAlgebraMorphism("phi does not preserve the unit")
    for i in range(S.dim):
        for j in range(S.dim):
            if phi(S.sc[i][j]) != S2.mul(images[i], images[j]):
                raise NotAlgebraMorphism(f"phi is not multiplicative on ({S.labels[i]}, {S.labels[j]})")
    G, G2 = cert.action.group, cert2.action.group
    if G.factors != G2.factors:
        raise NotEquivariant(f"groups differ: {G.name} vs {G2.name}")
    for g in G.elements():
        for i in range(S.dim):
            if phi(cert.action.act(g, S.basis_vector(i))) != cert2.action.act(g, images[i]):
                raise NotEquivariant(f"phi does not commute with {G.label(g)} on {S.labels[i]}")
    checks = {"algebra_morphism": True, "equivariant": True}
    ext, ext2 = cert.extension, cert2.extension
    checks["base_compatible"] = all(ext2.base_coords(phi(v)) is not None for v in ext.base_vectors)

    def phi_tensor(Tvec):
        out = ext2.zero_tensor()
        for f, y in zip(ext.module_basis, ext.components(Tvec)):
            if all(S.field.is_zero(c) for c in y):
                continue
            out = ext2.tensor_add(out, ext2.pure(phi(f), phi(y)))
        return out

    def phi_tilde(vec):
        d = S.dim
        out = []
        for gi in range(G.order):
            out.extend(phi(vec[gi * d:(gi + 1) * d]))
        return out

    ok = True
    F = S.field
    for idx in range(ext.tensor_dim):
        e = [F.zero] * ext.tensor_dim
        e[idx] = F.one
        ok &= phi_tilde(cert.gamma.apply(e)) == cert2.gamma.apply(phi_tensor(e))
    checks["gamma_compatible"] = ok
    checks["galois_element_preserved"] = phi_tensor(cert.galois_element) == list(cert2.galois_element)
    return MorphismReport(checks)


def _map_params(params: dict, emb: FieldEmbedding) -> dict:
    out = {}
    for k, v in params.items():
        if hasattr(v, "raw") and hasattr(v, "field"):
            out[k] = emb.target.element(emb(v.raw))
        elif isinstance(v, dict):
            out[k] = _map_params(v, emb)
        elif isinstance(v, list):
            out[k] = [emb.target.element(emb(x.raw)) if hasattr(x, "raw") else x for x in v]
        else:
            out[k] = v
    return out


def change_algebra_field(S: Algebra, emb: FieldEmbedding) -> Algebra:
    table = [[[emb(c) for c in S.sc[i][j]] for j in range(S.dim)] for i in range(S.dim)]
    return Algebra(emb.target, list(S.labels), table, [emb(c) for c in S.unit], kind=S.kind,
                   params=_map_params(S.params, emb))


@dataclass
class BaseChangeResult:
    certificate: GaloisCertificate
    morphism_report: MorphismReport
    insertion: AlgebraMorphism


def base_change(cert: GaloisCertificate, target_field, gen_image=None) -> BaseChangeResult:
    """Extend scalars along F -> T and certify the result afresh."""
    if cert.extension.base is not None:
        raise BaseMismatch("base_change needs a certificate over the ground field")
    S = cert.algebra
    emb = FieldEmbedding(S.field, target_field, gen_image)
    S_T = change_algebra_field(S, emb)
    T = target_field
    gens = [M.map_entries(emb, T) for M in cert.action.generators]
    act = AlgebraAction(cert.action.group, S_T, gens, name=f"{cert.action.name}-base-changed")
    new = certify_galois(ground_extension(S_T), act)
    ins = AlgebraMorphism(S, S_T, Matrix.identity(T, S.dim), emb)
    report = check_morphism(cert, new, ins)
    new.checks["base_change_eta_preserved"] = report.checks["galois_element_preserved"]
    return BaseChangeResult(new, report, ins)


def prop32_check(cert1: GaloisCertificate, cert2: GaloisCertificate):
    """For commutative S, S': S -> S (x) S' is G'-Galois and S' -> S (x) S' is G-Galois.

    The first map has base S (x) 1 and the group of S' acting on the second
    factor; the second has base 1 (x) S' and the group of S acting on the first.
    """
    S1, S2 = cert1.algebra, cert2.algebra
    if not S1.is_commutative() or not S2.is_commutative():
        raise NotCommutative("both algebras must be commutative")
    if cert1.extension.base is not None or cert2.extension.base is not None:
        raise BaseMismatch("both certificates must be over the ground field")
    F = S1.field
    n = cert1.action.group.order * cert2.action.group.order
    if F.characteristic and n % F.characteristic == 0:
        raise NotStrict(f"|G||G'| = {n} is not invertible in {F}")
    T = tensor_algebra(S1, S2)
    d1, d2 = S1.dim, S2.dim
    left_vecs = [_vec_kron(F, S1.basis_vector(i), S2.unit) for i in range(d1)]
    right_vecs = [_vec_kron(F, S1.unit, S2.basis_vector(j)) for j in range(d2)]
    I1 = Matrix.identity(F, d1)
    I2 = Matrix.identity(F, d2)
    act_second = AlgebraAction(cert2.action.group, T, [I1.kron(M) for M in cert2.action.generators], name="second-factor")
    act_first = AlgebraAction(cert1.action.group, T, [M.kron(I2) for M in cert1.action.generators], name="first-factor")
    base1 = SubalgebraBasis(T, left_vecs)
    base2 = SubalgebraBasis(T, right_vecs)
    check_field(base1)
    check_field(base2)
    eps1 = certify_galois(Extension(T, base1 if d1 > 1 else None), act_second)
    eps2 = certify_galois(Extension(T, base2 if d2 > 1 else None), act_first)
    return eps1, eps2


def is_strict(F, order: int) -> bool:
    return F.characteristic == 0 or gcd(order, F.characteristic) == 1


__all__ = [
    "Extension",
    "GaloisCertificate",
    "ground_extension",
    "gamma_matrix",
    "certify_galois",
    "galois_element",
    "galois_basis",
    "eta_of",
    "trace",
    "trace_map",
    "trivial_extension",
    "tensor_galois",
    "opposite_extension",
    "fixed_ring_extension",
    "base_change",
    "check_morphism",
    "prop32_check",
    "AlgebraMorphism",
    "identity_morphism",
]
