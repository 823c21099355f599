"""Finite abelian groups Z/n1 x ... x Z/nk acting on algebras by automorphisms."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property

from .errors import ActionError, NonCommuting, NotAutomorphism, WrongOrder
from .exactfield import Field, element_of_order
from .findimalg import Algebra, SubalgebraBasis, opposite
from .linalg import Matrix


@dataclass(frozen=True)
class GroupSpec:
    """Z/n1 x ... x Z/nk; elements are tuples reduced mod the factors."""

    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(n) for n in self.factors))
        if any(n < 1 for n in self.factors):
            raise ActionError("cyclic factors must be >= 1")

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        text = text.strip()
        if text in ("1", "trivial", ""):
            return cls(())
        parts = text.split("x")
        if not all(re.fullmatch(r"Z\d+", p) for p in parts):
            raise ActionError(f"cannot parse group {text!r}; expected e.g. Z2xZ2")
        return cls(tuple(int(p[1:]) for p in parts))

    @property
    def name(self) -> str:
        return "x".join(f"Z{n}" for n in self.factors) if self.factors else "1"

    @property
    def order(self) -> int:
        out = 1
        for n in self.factors:
            out *= n
        return out

    @property
    def rank(self) -> int:
        return len(self.factors)

    def elements(self) -> list[tuple]:
        return self._elements

    @cached_property
    def _elements(self) -> list[tuple]:
        return list(itertools.product(*[range(n) for n in self.factors]))

    @cached_property
    def _index(self) -> dict:
        return {g: i for i, g in enumerate(self._elements)}

    def index(self, g) -> int:
        return self._index[self.reduce(g)]

    def reduce(self, g) -> tuple:
        g = tuple(g)
        if len(g) != len(self.factors):
            raise ActionError(f"element {g} does not match group {self.name}")
        return tuple(x % n for x, n in zip(g, self.factors))

    @property
    def identity(self) -> tuple:
        return tuple(0 for _ in self.factors)

    def add(self, g, h) -> tuple:
        return tuple((x + y) % n for x, y, n in zip(g, h, self.factors))

    def neg(self, g) -> tuple:
        return tuple((-x) % n for x, n in zip(g, self.factors))

    def sub(self, g, h) -> tuple:
        return self.add(g, self.neg(h))

    def generator(self, i: int) -> tuple:
        return tuple(1 if k == i else 0 for k in range(len(self.factors)))

    def label(self, g) -> str:
        return "(" + ",".join(str(x) for x in g) + ")"

    def element_order(self, g) -> int:
        from math import gcd

        out = 1
        for x, n in zip(g, self.factors):
            k = n // gcd(x, n)
            out = out * k // gcd(out, k)
        return out

    def subgroup(self, generators) -> list[tuple]:
        """Closure of the generators, listed in the group's element order."""
        gens = [self.reduce(g) for g in generators]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for h in frontier:
                for g in gens:
                    k = self.add(h, g)
                    if k not in seen:
                        seen.add(k)
                        nxt.append(k)
            frontier = nxt
        return [g for g in self._elements if g in seen]

    def product(self, other: "GroupSpec") -> "GroupSpec":
        return GroupSpec(self.factors + other.factors)


class AlgebraAction:
    """An action of a GroupSpec on an Algebra, one matrix per cyclic factor."""

    def __init__(self, group: GroupSpec, algebra: Algebra, generators, name: str = "custom"):
        self.group = group
        self.algebra = algebra
        self.name = name
        gens = [g if isinstance(g, Matrix) else Matrix.from_dense(algebra.field, [[algebra.field.coerce(c) for c in row] for row in g]) for g in generators]
        if len(gens) != len(group.factors):
            raise ActionError(f"{len(gens)} generator matrices for {len(group.factors)} cyclic factors")
        self.generators = gens
        self._cache: dict = {}
        self._check()

    def _check(self):
        A = self.algebra
        n = A.dim
        F = A.field
        identity = Matrix.identity(F, n)
        for idx, M in enumerate(self.generators):
            if M.shape != (n, n):
                raise NotAutomorphism(f"generator {idx} has shape {M.shape}, expected {(n, n)}")
            if M.apply(list(A.unit)) != list(A.unit):
                raise NotAutomorphism(f"generator {idx} does not fix the unit")
            images = [tuple(M.column(j)) for j in range(n)]
            for i in range(n):
                for j in range(n):
                    lhs = tuple(M.apply(list(A.sc[i][j])))
                    rhs = A.mul(images[i], images[j])
                    if lhs != rhs:
                        raise NotAutomorphism(
                            f"generator {idx} is not multiplicative on ({A.labels[i]}, {A.labels[j]})"
                        )
            if M.rank() != n:
                raise NotAutomorphism(f"generator {idx} is not invertible")
            if M.power(self.group.factors[idx]) != identity:
                raise WrongOrder(f"generator {idx} has order not dividing {self.group.factors[idx]}")
        for p in range(len(self.generators)):
            for q in range(p + 1, len(self.generators)):
                if self.generators[p] @ self.generators[q] != self.generators[q] @ self.generators[p]:
                    raise NonCommuting(f"generators {p} and {q} do not commute")

    def matrix(self, g) -> Matrix:
        g = self.group.reduce(g)
        cached = self._cache.get(g)
        if cached is None:
            F = self.algebra.field
            cached = Matrix.identity(F, self.algebra.dim)
            for M, e in zip(self.generators, g):
                if e:
                    cached = cached @ M.power(e)
            self._cache[g] = cached
        return cached

    def act(self, g, vec) -> tuple:
        return tuple(self.matrix(g).apply(list(vec)))

    def act_element(self, g, s):
        from .findimalg import AlgElement

        return AlgElement(self.algebra, self.act(g, s.raw))

    def fixed_subalgebra(self, generators) -> SubalgebraBasis:
        """Elements fixed by every group element in ``generators``."""
        A = self.algebra
        F = A.field
        rows = []
        identity = Matrix.identity(F, A.dim)
        for g in generators:
            rows.extend((self.matrix(g) - identity).rows)
        if not rows:
            return SubalgebraBasis(A, [A.basis_vector(i) for i in range(A.dim)])
        return SubalgebraBasis(A, Matrix(F, len(rows), A.dim, rows).nullspace())

    def __repr__(self):
        return f"AlgebraAction({self.name}, {self.group.name} on {self.algebra!r})"


def make_action(G: GroupSpec, A: Algebra, generators, name: str = "custom") -> AlgebraAction:
    return AlgebraAction(G, A, generators, name)


def invariants(action: AlgebraAction) -> SubalgebraBasis:
    """S^G as the common kernel of (generator - id)."""
    return action.fixed_subalgebra([action.group.generator(i) for i in range(action.group.rank)])


def trivial_action(A: Algebra) -> AlgebraAction:
    return AlgebraAction(GroupSpec(()), A, [], name="trivial")


def _diagonal(F: Field, entries) -> Matrix:
    return Matrix(F, len(entries), len(entries), [{i: v} if not F.is_zero(v) else {} for i, v in enumerate(entries)])


def quaternion_v_action(H: Algebra) -> AlgebraAction:
    """Klein four-group: alpha fixes i and negates j, beta negates i and fixes j."""
    if H.kind != "quaternion":
        raise ActionError("quaternion_v_action needs an algebra from quaternion_algebra")
    F = H.field
    o, m = F.one, F.neg(F.one)
    alpha = _diagonal(F, [o, o, m, m])
    beta = _diagonal(F, [o, m, o, m])
    return AlgebraAction(GroupSpec((2, 2)), H, [alpha, beta], name="quaternion-v")


def symbol_action(S: Algebra) -> AlgebraAction:
    """(i, j) x^k u^l = zeta^(jk + il) x^k u^l."""
    if S.kind != "symbol":
        raise ActionError("symbol_action needs an algebra from symbol_algebra")
    F = S.field
    n = S.params["n"]
    z = S.params["zeta"].raw
    alpha = _diagonal(F, [F.pow(z, l) for k in range(n) for l in range(n)])
    beta = _diagonal(F, [F.pow(z, k) for k in range(n) for l in range(n)])
    return AlgebraAction(GroupSpec((n, n)), S, [alpha, beta], name="symbol")


def translation_action(A: Algebra, G: GroupSpec) -> AlgebraAction:
    """g (s delta_h) = s delta_(h - g) on the function algebra S(G)."""
    if A.kind != "function":
        raise ActionError("translation_action needs an algebra from function_algebra")
    F = A.field
    d = A.params["base_dim"]
    elems = G.elements()
    gens = []
    for i in range(G.rank):
        gi = G.generator(i)
        cols = []
        for h in elems:
            target = G.index(G.sub(h, gi))
            for k in range(d):
                cols.append({target * d + k: F.one})
        gens.append(Matrix.from_columns(F, cols, A.dim))
    return AlgebraAction(G, A, gens, name="translation")


def frobenius_action(A: Algebra) -> AlgebraAction:
    """x -> x^p on F_p[X]/(f) with f irreducible of degree d, generating Z/d."""
    if A.kind != "quotient":
        raise ActionError("frobenius_action needs an algebra from quotient_algebra")
    F = A.field
    p = F.characteristic
    if not p or F.cardinality != p:
        raise ActionError("frobenius_action needs a quotient over a prime field")
    x = A.basis_vector(1) if A.dim > 1 else A.unit
    xp = (A.element(x) ** p).raw
    cols = []
    power = A.unit
    for _ in range(A.dim):
        cols.append(power)
        power = A.mul(power, xp)
    M = Matrix.from_columns(F, [list(c) for c in cols], A.dim)
    return AlgebraAction(GroupSpec((A.dim,)), A, [M], name="frobenius")


def kummer_action(A: Algebra, zeta=None) -> AlgebraAction:
    """x -> zeta x on F[X]/(X^n - a), generating Z/n."""
    if A.kind != "quotient":
        raise ActionError("kummer_action needs an algebra from quotient_algebra")
    F = A.field
    n = A.dim
    z = element_of_order(F, n).raw if zeta is None else F.coerce(zeta)
    M = _diagonal(F, [F.pow(z, k) for k in range(n)])
    return AlgebraAction(GroupSpec((n,)), A, [M], name="kummer")


def product_action(act1: AlgebraAction, act2: AlgebraAction, algebra: Algebra) -> AlgebraAction:
    """(g, g') (s (x) s') = g(s) (x) g'(s') on ``algebra`` = tensor of the two."""
    F = algebra.field
    I1 = Matrix.identity(F, act1.algebra.dim)
    I2 = Matrix.identity(F, act2.algebra.dim)
    gens = [M.kron(I2) for M in act1.generators] + [I1.kron(N) for N in act2.generators]
    return AlgebraAction(act1.group.product(act2.group), algebra, gens, name="product")


def opposite_action(action: AlgebraAction, algebra_op: Algebra | None = None) -> AlgebraAction:
    """g(s^o) = g(s)^o: the same matrices on the opposite algebra."""
    Aop = algebra_op if algebra_op is not None else opposite(action.algebra)
    return AlgebraAction(action.group, Aop, action.generators, name=f"opposite-{action.name}")
