"""Quaternion Brauer classes over Q and finite fields.

Local symbols are decided by searching primitive solutions of
z^2 = a x^2 + b y^2 modulo p^j and accepting as soon as Hensel's lemma
guarantees a p-adic lift.  For odd p the case p | a, p | b is first
rewritten with (a, b) = (a, -ab); after that every primitive p-adic solution
has a unit partial derivative, so one search modulo p decides.  For p = 2
and squarefree a, b the derivatives have valuation at most 2, so depth 5
suffices.

Convention: the symbol is +1 exactly when the quaternion algebra splits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable

from .errors import FieldTooLarge, InfiniteField, UnsupportedField, ZeroParameter
from .exactfield import Field, Rationals, is_irreducible_finite

INF = "inf"


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    if hasattr(value, "raw") and hasattr(value, "field"):
        return _to_fraction(value.raw)
    raise TypeError(f"cannot read {value!r} as a rational")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| by trial division."""
    n = abs(n)
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_part(value) -> int:
    """The squarefree integer in the square class of a nonzero rational."""
    q = _to_fraction(value)
    if q == 0:
        raise ZeroParameter("Hilbert symbols need nonzero arguments")
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in factorize(n).items():
        if e % 2:
            out *= p
    return sign * out


def parse_place(place):
    if isinstance(place, str):
        text = place.strip().lower()
        if text in ("inf", "infinity", "∞", "oo", "r", "real"):
            return INF
        place = int(text)
    place = int(place)
    if place < 2 or factorize(place) != {place: 1}:
        raise ValueError(f"{place} is not a prime")
    return place


def _vp(n: int, p: int) -> int:
    if n == 0:
        return 10 ** 9
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _hensel_ok(a: int, b: int, p: int, vals, j: int) -> bool:
    x, y, z = vals
    mod = p ** j
    for D in (2 * z, -2 * a * x, -2 * b * y):
        r = D % mod
        if r and 2 * _vp(r, p) + 1 <= j:
            return True
    return False


def _local_solvable_odd(a: int, b: int, p: int) -> bool:
    """Odd p, a and b squarefree and not both divisible by p."""
    roots: dict[int, list] = {}
    for z in range(p):
        roots.setdefault(z * z % p, []).append(z)
    for y in range(p):
        for z in roots.get((a + b * y * y) % p, ()):
            if _hensel_ok(a, b, p, (1, y, z), 1):
                return True
    return any(_hensel_ok(a, b, p, (0, 1, z), 1) for z in roots.get(b % p, ()))


def _local_solvable_two(a: int, b: int) -> bool:
    p, depth = 2, 5

    def f(x, y, z):
        return z * z - a * x * x - b * y * y

    # charts: first unit coordinate normalized to 1; "f" free, "1" fixed, "0" divisible by p
    charts = [("1", "f", "f"), ("0", "1", "f"), ("0", "0", "1")]
    for chart in charts:
        start = [[1] if kind == "1" else [0] if kind == "0" else list(range(p)) for kind in chart]
        level = [v for v in itertools.product(*start) if f(*v) % p == 0]
        j = 1
        while level:
            if any(_hensel_ok(a, b, p, vals, j) for vals in level):
                return True
            if j == depth:
                break
            step, mod = p ** j, p ** (j + 1)
            nxt = []
            for vals in level:
                options = [[c] if kind == "1" else [c + t * step for t in range(p)] for c, kind in zip(vals, chart)]
                nxt.extend(v for v in itertools.product(*options) if f(*v) % mod == 0)
            level = nxt
            j += 1
    return False


def hilbert_symbol(a, b, place) -> int:
    """(a, b)_v in {+1, -1}: +1 iff z^2 = a x^2 + b y^2 has a nontrivial local solution."""
    a = squarefree_part(a)
    b = squarefree_part(b)
    v = parse_place(place)
    if v == INF:
        return -1 if (a < 0 and b < 0) else 1
    if v == 2:
        return 1 if _local_solvable_two(a, b) else -1
    if a % v == 0 and b % v == 0:
        b = squarefree_part(-a * b)
    return 1 if _local_solvable_odd(a, b, v) else -1


def relevant_places(*values) -> list:
    """inf and every prime dividing 2 * (numerators and denominators)."""
    primes = {2}
    for x in values:
        q = _to_fraction(x)
        primes.update(factorize(q.numerator))
        primes.update(factorize(q.denominator))
    return sorted(primes) + [INF]


def _place_key(v):
    return (1, 0) if v == INF else (0, v)


def sorted_places(places: Iterable) -> list:
    return sorted(places, key=_place_key)


UNRAMIFIED_NOTE = (
    "places outside inf and the primes dividing 2ab carry symbol +1: there a and b "
    "are units at an odd prime and the conic has a smooth point mod p that lifts"
)


@dataclass(frozen=True)
class QuaternionClass:
    """A product of quaternion classes over Q, described by its ramified places."""

    factors: tuple  # ((a, b), ...) squarefree integer pairs
    ramified: frozenset = dc_field(default_factory=frozenset)

    @property
    def a(self) -> int:
        return self.factors[0][0]

    @property
    def b(self) -> int:
        return self.factors[0][1]

    @property
    def is_trivial(self) -> bool:
        return not self.ramified

    @property
    def split(self) -> bool:
        return self.is_trivial

    def ramified_list(self) -> list:
        return sorted_places(self.ramified)

    def local_symbols(self, places=None) -> dict:
        places = places if places is not None else sorted(
            {v for pair in self.factors for v in relevant_places(*pair)}, key=_place_key
        )
        return {v: (-1 if v in self.ramified else 1) for v in places}

    def __mul__(self, other: "QuaternionClass") -> "QuaternionClass":
        return class_product(self, other)


def quaternion_class(a, b) -> QuaternionClass:
    a0, b0 = squarefree_part(a), squarefree_part(b)
    ramified = frozenset(v for v in relevant_places(a0, b0) if hilbert_symbol(a0, b0, v) == -1)
    if len(ramified) % 2:
        raise AssertionError(f"odd number of ramified places for ({a0}, {b0}): {sorted_places(ramified)}")
    return QuaternionClass(((a0, b0),), ramified)


def trivial_class() -> QuaternionClass:
    return QuaternionClass((), frozenset())


def class_product(c1: QuaternionClass, c2: QuaternionClass) -> QuaternionClass:
    """Local symbols multiply placewise: ramified sets combine by symmetric difference."""
    return QuaternionClass(c1.factors + c2.factors, c1.ramified ^ c2.ramified)


def is_split(F: Field, a, b) -> bool:
    """Q: no ramified place.  Finite fields: always split."""
    if isinstance(F, Rationals):
        return quaternion_class(a, b).is_trivial
    if F.is_finite:
        if F.is_zero(F.coerce(a)) or F.is_zero(F.coerce(b)):
            raise ZeroParameter("a and b must be nonzero")
        return True
    raise UnsupportedField(f"splitting is decided over Q and finite fields, not {F}")


@dataclass
class SteinbergReport:
    checked: int = 0
    failures: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def steinberg_checks(samples, places=None, F: Field | None = None) -> SteinbergReport:
    """Bilinearity (ab, c) = (a, c)(b, c) and (a, 1 - a) = 1 on the samples.

    Over a finite field F the relation (a, 1 - a) is checked through the norm
    criterion for the quadratic symbol algebra.
    """
    report = SteinbergReport()
    samples = [_to_fraction(s) for s in samples]
    if F is not None and F.is_finite:
        from .findimalg import symbol_algebra

        minus_one = F.neg(F.one)
        for s in samples:
            a = F.coerce(s)
            one_minus = F.sub(F.one, a)
            if F.is_zero(a) or F.is_zero(one_minus):
                continue
            report.checked += 1
            if F.characteristic == 2:
                continue
            res = norm_criterion_split(symbol_algebra(F, a, one_minus, minus_one, 2))
            if not res.split:
                report.failures.append(("(a,1-a)", s))
        return report
    for s in samples:
        if s in (0, 1):
            continue
        vs = places if places is not None else relevant_places(s, 1 - s)
        for v in vs:
            report.checked += 1
            if hilbert_symbol(s, 1 - s, v) != 1:
                report.failures.append(("(a,1-a)", s, v))
    for i, a in enumerate(samples):
        for b in samples[i:]:
            for c in samples:
                if 0 in (a, b, c):
                    continue
                vs = places if places is not None else relevant_places(a, b, c)
                for v in vs:
                    report.checked += 1
                    lhs = hilbert_symbol(a * b, c, v)
                    rhs = hilbert_symbol(a, c, v) * hilbert_symbol(b, c, v)
                    if lhs != rhs:
                        report.failures.append(("bilinear", a, b, c, v))
    return report


@dataclass
class NormCriterionResult:
    split: bool
    vacuous: bool
    norms: frozenset
    note: str = ""

    def __bool__(self):
        return self.split


def norm_criterion_split(S) -> NormCriterionResult:
    """Decide b in N_{E/F}(E^x) for E = F[x]/(x^n - a), by enumerating norms."""
    if S.kind != "symbol":
        raise UnsupportedField("norm_criterion_split needs a symbol algebra")
    F = S.field
    if not F.is_finite:
        raise InfiniteField("the norm criterion enumerates a finite field")
    if F.cardinality > 1000:
        raise FieldTooLarge(f"|F| = {F.cardinality} exceeds 1000")
    n = S.params["n"]
    a = S.params["a"].raw
    b = S.params["b"].raw
    modulus = [F.neg(a)] + [F.zero] * (n - 1) + [F.one]
    if not is_irreducible_finite(F, modulus):
        return NormCriterionResult(True, True, frozenset(), "x^n - a is reducible; criterion reported as vacuously split")
    from .findimalg import quotient_algebra

    E = quotient_algebra(F, modulus)
    group_order = F.cardinality - 1
    norms: set = set()
    elems = list(F.elements())
    for coeffs in itertools.product(elems, repeat=n):
        if all(F.is_zero(c) for c in coeffs):
            continue
        N = E.left_matrix(tuple(coeffs)).det()
        norms.add(N)
        if b in norms or len(norms) == group_order:
            break
    return NormCriterionResult(b in norms, False, frozenset(norms))
