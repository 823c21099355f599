"""Exact arithmetic over Q, F_p, F_p[X]/(f) and Q(zeta_n).

Every field is a descriptor object that owns the arithmetic on *raw*
values: ``mpq`` for Q, ``int`` in ``[0, p)`` for F_p, and tuples of base
raws (coefficients of 1, x, x^2, ...) for the two quotient kinds.  The
linear algebra and algebra layers work on raw values for speed; the public
surface hands out :class:`FieldElement` wrappers.

Field text syntax: ``"Q"``, ``"Fp:5"``, ``"Fq:3:x^2+1"``, ``"Qzeta:4"``.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import lru_cache

import gmpy2
from gmpy2 import mpq

from .errors import (
    DivisionByZero,
    EmbeddingInvalid,
    FieldError,
    FieldMismatch,
    NoSuchElement,
    NotIrreducible,
)

MAX_PRIME = 10**6
MAX_EXTENSION_DEGREE = 12
MAX_CYCLOTOMIC_ORDER = 24


class Field:
    """Common interface of the four field kinds."""

    kind: str
    characteristic: int
    cardinality: int | None
    zero: object
    one: object
    spec: str

    # arithmetic on raw values, overridden per kind
    def add(self, a, b): raise NotImplementedError
    def sub(self, a, b): raise NotImplementedError
    def mul(self, a, b): raise NotImplementedError
    def neg(self, a): raise NotImplementedError
    def inv(self, a): raise NotImplementedError
    def is_zero(self, a): raise NotImplementedError
    def coerce(self, value): raise NotImplementedError
    def format(self, a): raise NotImplementedError
    def key(self, a): raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result, base = self.one, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def eq(self, a, b) -> bool:
        return a == b

    def from_int(self, n: int):
        return self.coerce(int(n))

    @property
    def is_finite(self) -> bool:
        return self.cardinality is not None

    def elements(self):
        raise FieldError(f"{self.spec} is infinite")

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, self.coerce(value))

    def element(self, raw) -> "FieldElement":
        return FieldElement(self, raw)

    def __eq__(self, other):
        return isinstance(other, Field) and other.spec == self.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"Field({self.spec!r})"

    def __str__(self):
        return self.spec


class Rationals(Field):
    kind = "rationals"
    characteristic = 0
    cardinality = None
    spec = "Q"

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)

    def add(self, a, b): return a + b
    def sub(self, a, b): return a - b
    def mul(self, a, b): return a * b
    def neg(self, a): return -a
    def is_zero(self, a): return a == 0

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by 0 in Q")
        return a / b

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value.field} element used in Q")
            return value.raw
        if isinstance(value, bool):
            raise TypeError("bool is not a field element")
        if isinstance(value, int) or type(value).__name__ == "mpz":
            return mpq(value)
        if type(value).__name__ == "mpq":
            return value
        if isinstance(value, Fraction):
            return mpq(value.numerator, value.denominator)
        if isinstance(value, str):
            text = value.strip()
            if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
                raise FieldError(f"cannot parse {value!r} as a rational")
            num, _, den = text.partition("/")
            if den and int(den) == 0:
                raise DivisionByZero(f"zero denominator in {value!r}")
            return mpq(int(num), int(den or 1))
        raise TypeError(f"cannot coerce {value!r} into Q")

    def format(self, a):
        return str(a)

    def key(self, a):
        return a


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p: int):
        if p < 2 or p > MAX_PRIME or not gmpy2.is_prime(p):
            raise FieldError(f"{p} is not a prime <= {MAX_PRIME}")
        self.p = int(p)
        self.characteristic = self.p
        self.cardinality = self.p
        self.spec = f"Fp:{self.p}"
        self.zero = 0
        self.one = 1

    def add(self, a, b): return (a + b) % self.p
    def sub(self, a, b): return (a - b) % self.p
    def mul(self, a, b): return (a * b) % self.p
    def neg(self, a): return (-a) % self.p
    def is_zero(self, a): return a == 0

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.p}")
        return pow(a, -1, self.p)

    def pow(self, a, n):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value.field} element used in {self.spec}")
            return value.raw
        if isinstance(value, bool):
            raise TypeError("bool is not a field element")
        if isinstance(value, int) or type(value).__name__ == "mpz":
            return int(value) % self.p
        if isinstance(value, str):
            q = RATIONALS.coerce(value)
            return self.coerce(q)
        if isinstance(value, Fraction) or type(value).__name__ == "mpq":
            num, den = int(value.numerator), int(value.denominator)
            if den % self.p == 0:
                raise DivisionByZero(f"denominator divisible by {self.p}")
            return num * pow(den, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {value!r} into {self.spec}")

    def format(self, a):
        return int(a)

    def key(self, a):
        return a

    def elements(self):
        return iter(range(self.p))


RATIONALS = Rationals()


# polynomials over a field, as lists of raw coefficients (low degree first)

def poly_trim(F: Field, f):
    f = list(f)
    while f and F.is_zero(f[-1]):
        f.pop()
    return f


def poly_add(F, f, g):
    n = max(len(f), len(g))
    out = [F.add(f[i] if i < len(f) else F.zero, g[i] if i < len(g) else F.zero) for i in range(n)]
    return poly_trim(F, out)


def poly_sub(F, f, g):
    n = max(len(f), len(g))
    out = [F.sub(f[i] if i < len(f) else F.zero, g[i] if i < len(g) else F.zero) for i in range(n)]
    return poly_trim(F, out)


def poly_mul(F, f, g):
    if not f or not g:
        return []
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if F.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return poly_trim(F, out)


def poly_divmod(F, f, g):
    g = poly_trim(F, g)
    if not g:
        raise DivisionByZero("polynomial division by zero")
    r = poly_trim(F, f)
    q = [F.zero] * max(len(r) - len(g) + 1, 0)
    lead_inv = F.inv(g[-1])
    while len(r) >= len(g):
        c = F.mul(r[-1], lead_inv)
        shift = len(r) - len(g)
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = F.sub(r[shift + i], F.mul(c, b))
        r = poly_trim(F, r)
    return poly_trim(F, q), r


def poly_monic(F, f):
    f = poly_trim(F, f)
    if not f:
        return f
    c = F.inv(f[-1])
    return [F.mul(c, a) for a in f]


def poly_gcd(F, f, g):
    f, g = poly_trim(F, f), poly_trim(F, g)
    while g:
        f, g = g, poly_divmod(F, f, g)[1]
    return poly_monic(F, f)


def poly_xgcd(F, f, g):
    """Return (d, s, t) with s*f + t*g = d = gcd(f, g), d monic."""
    r0, r1 = poly_trim(F, f), poly_trim(F, g)
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]
    while r1:
        q, r = poly_divmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(F, s0, poly_mul(F, q, s1))
        t0, t1 = t1, poly_sub(F, t0, poly_mul(F, q, t1))
    if not r0:
        return [], s0, t0
    c = F.inv(r0[-1])
    scale = lambda h: [F.mul(c, a) for a in h]  # noqa: E731
    return scale(r0), scale(s0), scale(t0)


def poly_powmod(F, f, e: int, m):
    result = [F.one]
    base = poly_divmod(F, f, m)[1]
    while e:
        if e & 1:
            result = poly_divmod(F, poly_mul(F, result, base), m)[1]
        base = poly_divmod(F, poly_mul(F, base, base), m)[1]
        e >>= 1
    return result


def poly_eval(F, f, x):
    acc = F.zero
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def is_irreducible_finite(F: Field, f) -> bool:
    """Ben-Or test: f has no irreducible factor of degree <= deg(f)/2."""
    if not F.is_finite:
        raise FieldError("Ben-Or test needs a finite field")
    f = poly_monic(F, f)
    d = len(f) - 1
    if d < 1:
        return False
    q = F.cardinality
    X = [F.zero, F.one]
    h = X
    for _ in range(d // 2):
        h = poly_powmod(F, h, q, f)
        if len(poly_gcd(F, f, poly_sub(F, h, X))) > 1:
            return False
    return True


def is_irreducible_rational(coeffs) -> bool:
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(int(c.numerator), int(c.denominator)) for c in reversed(coeffs)], x, domain="QQ")
    return poly.degree() >= 1 and poly.is_irreducible


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*([a-zA-Z](?:\s*\^\s*(\d+))?)?")


def parse_poly(text: str) -> dict[int, str]:
    """Parse "x^3 - 3", "2x+1", "X^2+X+1" into {degree: coefficient string}."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise FieldError("empty polynomial")
    out: dict[int, Fraction] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise FieldError(f"cannot parse polynomial {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3) is None:
            deg = 0
        else:
            deg = int(m.group(4)) if m.group(4) else 1
        out[deg] = out.get(deg, Fraction(0)) + sign * coef
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise FieldError(f"cannot parse polynomial {text!r}")
    return {d: str(c) for d, c in out.items()}


def format_poly(coeffs, var: str = "X") -> str:
    terms = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        c = Fraction(int(c.numerator), int(c.denominator)) if hasattr(c, "numerator") else Fraction(c)
        mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        else:
            body = f"{mag}{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text


class PolyQuotientField(Field):
    """base[X]/(modulus) for a monic irreducible modulus."""

    def __init__(self, base: Field, modulus, kind: str, spec: str, order: int | None = None):
        self.base = base
        self.modulus = tuple(modulus)
        self.degree = len(modulus) - 1
        self.kind = kind
        self.spec = spec
        self.order = order
        self.characteristic = base.characteristic
        self.cardinality = None if base.cardinality is None else base.cardinality ** self.degree
        B = base
        d = self.degree
        self.zero = tuple([B.zero] * d)
        self.one = tuple([B.one] + [B.zero] * (d - 1))
        # x^k mod modulus for k = d .. 2d-2
        self._reductions = []
        vec = [B.neg(c) for c in self.modulus[:d]]
        for _ in range(max(d - 1, 0)):
            self._reductions.append(tuple(vec))
            lead = vec[-1]
            vec = [B.zero] + vec[:-1]
            vec = [B.add(vec[i], B.mul(lead, B.neg(self.modulus[i]))) for i in range(d)]

    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        B = self.base
        return tuple(B.neg(x) for x in a)

    def is_zero(self, a):
        B = self.base
        return all(B.is_zero(x) for x in a)

    def mul(self, a, b):
        B = self.base
        d = self.degree
        prod = [B.zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if B.is_zero(x):
                continue
            for j, y in enumerate(b):
                if B.is_zero(y):
                    continue
                prod[i + j] = B.add(prod[i + j], B.mul(x, y))
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if B.is_zero(c):
                continue
            red = self._reductions[k - d]
            out = [B.add(out[i], B.mul(c, red[i])) for i in range(d)]
        return tuple(out)

    def inv(self, a):
        if self.is_zero(a):
            raise DivisionByZero(f"inverse of 0 in {self.spec}")
        g, s, _ = poly_xgcd(self.base, list(a), list(self.modulus))
        if len(g) != 1:
            raise DivisionByZero(f"{a} is not invertible modulo the field polynomial")
        return self._from_poly(s)

    def _from_poly(self, f):
        B = self.base
        f = poly_trim(B, f)
        if len(f) > self.degree:
            f = poly_divmod(B, f, list(self.modulus))[1]
        return tuple(list(f) + [B.zero] * (self.degree - len(f)))

    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return self.element(self._from_poly([self.base.neg(self.modulus[0])]))
        return self.element(self._from_poly([self.base.zero, self.base.one]))

    def coerce(self, value):
        B = self.base
        if isinstance(value, FieldElement):
            if value.field == self:
                return value.raw
            if value.field == B:
                return self._from_poly([value.raw])
            raise FieldMismatch(f"{value.field} element used in {self.spec}")
        if isinstance(value, (list, tuple)):
            return self._from_poly([B.coerce(c) for c in value])
        if isinstance(value, str):
            text = value.strip()
            if text.startswith("["):
                import json

                return self.coerce(json.loads(text))
            if re.fullmatch(r"[+-]?\d+(/\d+)?", text):
                return self._from_poly([B.coerce(text)])
            terms = parse_poly(text)
            top = max(terms)
            coeffs = [B.zero] * (top + 1)
            for deg, c in terms.items():
                coeffs[deg] = B.coerce(c)
            return self._from_poly(coeffs)
        return self._from_poly([B.coerce(value)])

    def format(self, a):
        return [self.base.format(c) for c in a]

    def key(self, a):
        return tuple(self.base.key(c) for c in reversed(a))

    def elements(self):
        if self.cardinality is None:
            raise FieldError(f"{self.spec} is infinite")
        p = self.base.cardinality
        for digits in itertools.product(range(p), repeat=self.degree):
            yield tuple(reversed(digits))


class FieldElement:
    """An immutable element of an exact field."""

    __slots__ = ("field", "raw")

    def __init__(self, field: Field, raw):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "raw", raw)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.raw
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.raw, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.raw, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.raw))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.raw, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.raw, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.raw))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.raw))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.raw, n))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.raw))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.raw)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.raw == other.raw
        try:
            return self.raw == self.field.coerce(other)
        except (TypeError, FieldError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field.spec, self.raw))

    def to_json(self):
        return self.field.format(self.raw)

    def __repr__(self):
        return f"{self.field.spec}({self})"

    def __str__(self):
        F = self.field
        if isinstance(F, PolyQuotientField):
            B = F.base
            coeffs = [Fraction(int(c.numerator), int(c.denominator)) if B.characteristic == 0 else int(c) for c in self.raw]
            return format_poly(coeffs, "x")
        return str(F.format(self.raw))


# constructors and parsing

@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(int(p))


def rationals() -> Rationals:
    return RATIONALS


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients (low degree first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic_polynomial needs n >= 1")
    Q = RATIONALS
    num = [Q.neg(Q.one)] + [Q.zero] * (n - 1) + [Q.one]
    for d in range(1, n):
        if n % d == 0:
            q, r = poly_divmod(Q, num, [mpq(c) for c in cyclotomic_polynomial(d)])
            assert not r
            num = q
    return tuple(int(c) for c in num)


@lru_cache(maxsize=None)
def cyclotomic_field(n: int) -> PolyQuotientField:
    if not 1 <= n <= MAX_CYCLOTOMIC_ORDER:
        raise FieldError(f"Q(zeta_{n}) supported for 1 <= n <= {MAX_CYCLOTOMIC_ORDER}")
    modulus = [mpq(c) for c in cyclotomic_polynomial(n)]
    return PolyQuotientField(RATIONALS, modulus, "cyclotomic", f"Qzeta:{n}", order=n)


def extension_field(p: int, modulus) -> PolyQuotientField:
    """F_p[X]/(modulus); modulus as coefficient list (low first) or text."""
    base = prime_field(p)
    if isinstance(modulus, str):
        terms = parse_poly(modulus)
        coeffs = [0] * (max(terms) + 1)
        for d, c in terms.items():
            coeffs[d] = base.coerce(c)
    else:
        coeffs = [base.coerce(c) for c in modulus]
    coeffs = tuple(poly_trim(base, coeffs))
    return _extension_field(base.p, coeffs)


def _modulus_text(coeffs) -> str:
    return format_poly([Fraction(c) for c in coeffs], "x").replace(" ", "")


@lru_cache(maxsize=None)
def _extension_field(p: int, coeffs: tuple) -> PolyQuotientField:
    base = prime_field(p)
    d = len(coeffs) - 1
    if d < 1 or d > MAX_EXTENSION_DEGREE:
        raise FieldError(f"extension degree must be in 1..{MAX_EXTENSION_DEGREE}")
    if coeffs[-1] != 1:
        raise NotIrreducible("modulus must be monic")
    if not is_irreducible_finite(base, list(coeffs)):
        raise NotIrreducible(f"{_modulus_text(coeffs)} is reducible over F_{p}")
    return PolyQuotientField(base, coeffs, "extension", f"Fq:{p}:{_modulus_text(coeffs)}")


def parse_field(text: str) -> Field:
    s = text.strip()
    if s in ("Q", "QQ"):
        return RATIONALS
    parts = s.split(":", 2)
    try:
        if parts[0] == "Fp" and len(parts) == 2:
            return prime_field(int(parts[1]))
        if parts[0] == "Fq" and len(parts) == 3:
            return extension_field(int(parts[1]), parts[2])
        if parts[0] == "Qzeta" and len(parts) == 2:
            return cyclotomic_field(int(parts[1]))
    except ValueError as exc:
        raise FieldError(f"bad field spec {text!r}: {exc}") from None
    raise FieldError(f"unknown field spec {text!r}")


def _prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def has_exact_order(F: Field, z, n: int) -> bool:
    if F.is_zero(z) or F.pow(z, n) != F.one:
        return False
    return all(F.pow(z, n // r) != F.one for r in _prime_divisors(n))


def element_of_order(F: Field, n: int) -> FieldElement:
    """First element of exact multiplicative order n in canonical order."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        return F(1)
    if F.characteristic and n % F.characteristic == 0:
        raise NoSuchElement(f"characteristic {F.characteristic} divides {n}")
    if F.is_finite:
        if (F.cardinality - 1) % n:
            raise NoSuchElement(f"{n} does not divide |F^x| = {F.cardinality - 1}")
        for z in F.elements():
            if has_exact_order(F, z, n):
                return F.element(z)
        raise NoSuchElement(f"no element of order {n}")  # pragma: no cover
    if isinstance(F, Rationals):
        if n == 2:
            return F(-1)
        raise NoSuchElement(f"Q has no element of order {n}")
    # Q(zeta_m): the torsion subgroup is generated by -zeta
    m = F.order
    w = m if m % 2 == 0 else 2 * m
    if w % n:
        raise NoSuchElement(f"Q(zeta_{m}) has no element of order {n}")
    g = F.neg(F.gen().raw)
    candidates = {F.pow(g, k) for k in range(w)}
    for z in sorted(candidates, key=F.key):
        if has_exact_order(F, z, n):
            return F.element(z)
    raise NoSuchElement(f"no element of order {n}")  # pragma: no cover


class FieldEmbedding:
    """A field homomorphism source -> target, applied to raw values."""

    def __init__(self, source: Field, target: Field, gen_image=None):
        self.source = source
        self.target = target
        if source.characteristic != target.characteristic:
            raise EmbeddingInvalid(f"{source} and {target} differ in characteristic")
        self._gen = None
        if isinstance(source, PolyQuotientField) and source != target:
            if gen_image is None:
                gen_image = self._default_gen_image(source, target)
            g = target.coerce(gen_image)
            image_of_modulus = target.zero
            for c in reversed(source.modulus):
                image_of_modulus = target.add(target.mul(image_of_modulus, g), self._base(c))
            if not target.is_zero(image_of_modulus):
                raise EmbeddingInvalid(f"generator image is not a root of the modulus of {source}")
            self._gen = g
        elif gen_image is not None and source != target:
            raise EmbeddingInvalid(f"{source} has no generator to map")

    @staticmethod
    def _default_gen_image(source, target):
        if source.kind == "cyclotomic" and target.kind == "cyclotomic" and target.order % source.order == 0:
            return target.element(target.pow(target.gen().raw, target.order // source.order))
        raise EmbeddingInvalid(f"no canonical embedding {source} -> {target}; give the generator image")

    def _base(self, c):
        T = self.target
        if self.source.characteristic == 0:
            return T.coerce(c)
        return T.from_int(int(c))

    def __call__(self, a):
        S, T = self.source, self.target
        if S == T:
            return a
        if self._gen is None:
            return self._base(a)
        acc = T.zero
        for c in reversed(a):
            acc = T.add(T.mul(acc, self._gen), self._base(c))
        return acc

    @property
    def is_identity(self) -> bool:
        return self.source == self.target
