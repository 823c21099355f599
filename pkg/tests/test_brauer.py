from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galoisazu.brauer import (
    INF,
    class_product,
    factorize,
    hilbert_symbol,
    is_split,
    norm_criterion_split,
    quaternion_class,
    relevant_places,
    squarefree_part,
    steinberg_checks,
    trivial_class,
)
from galoisazu.errors import ZeroParameter
from galoisazu.exactfield import parse_field, prime_field, rationals
from galoisazu.findimalg import symbol_algebra

SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def squarefree(n):
    return n != 0 and all(e == 1 for e in factorize(n).values())


def serre_symbol(a: int, b: int, v) -> int:
    """Closed-form Hilbert symbol over Q_v for nonzero integers a, b."""
    if v == INF:
        return -1 if a < 0 and b < 0 else 1
    p = v

    def split(x):
        k = 0
        while x % p == 0:
            x //= p
            k += 1
        return k, x

    alpha, u = split(a)
    beta, w = split(b)
    if p != 2:
        def legendre(x):
            r = pow(x % p, (p - 1) // 2, p)
            return -1 if r == p - 1 else 1

        eps = ((p - 1) // 2) % 2
        sign = -1 if (alpha * beta * eps) % 2 else 1
        return sign * legendre(u) ** beta * legendre(w) ** alpha

    def e(x):
        return ((x - 1) // 2) % 2

    def om(x):
        return ((x * x - 1) // 8) % 2

    exp = e(u) * e(w) + alpha * om(w) + beta * om(u)
    return -1 if exp % 2 else 1


squarefree_ints = st.integers(-50, 50).filter(squarefree)


@pytest.mark.parametrize("place", SMALL_PRIMES[:8] + [INF])
def test_hilbert_symbol_matches_closed_form_exhaustively(place):
    values = [n for n in range(-30, 31) if squarefree(n)]
    for a in values:
        for b in values:
            assert hilbert_symbol(a, b, place) == serre_symbol(a, b, place), (a, b, place)


def test_known_symbols():
    assert hilbert_symbol(-1, -1, INF) == -1
    assert hilbert_symbol(-1, -1, 2) == -1
    assert hilbert_symbol(-1, -1, 3) == 1
    assert hilbert_symbol(2, 3, 3) == -1
    assert hilbert_symbol("1/2", 3, 3) == hilbert_symbol(2, 3, 3)


def test_ramified_places_of_hamilton():
    c = quaternion_class(-1, -1)
    assert c.ramified_list() == [2, INF]
    assert not c.split


@settings(max_examples=50)
@given(squarefree_ints, squarefree_ints)
def test_product_formula(a, b):
    places = relevant_places(a, b)
    prod = 1
    for v in places:
        prod *= hilbert_symbol(a, b, v)
    assert prod == 1
    # places outside 2ab and inf are unramified
    for p in SMALL_PRIMES:
        if p not in places:
            assert hilbert_symbol(a, b, p) == 1


@settings(max_examples=30)
@given(squarefree_ints, squarefree_ints, squarefree_ints, squarefree_ints)
def test_class_group_laws(a1, b1, a2, b2):
    c1, c2 = quaternion_class(a1, b1), quaternion_class(a2, b2)
    e = trivial_class()
    assert (c1 * c1).is_trivial
    assert (c1 * e).ramified == c1.ramified
    assert (c1 * c2).ramified == (c2 * c1).ramified
    assert ((c1 * c2) * c1).ramified == c2.ramified
    assert class_product(c1, c2).ramified == (c1 * c2).ramified


@settings(max_examples=30)
@given(squarefree_ints, squarefree_ints, squarefree_ints)
def test_bilinearity(a, b, c):
    for v in relevant_places(a, b, c):
        assert hilbert_symbol(a * b, c, v) == hilbert_symbol(a, c, v) * hilbert_symbol(b, c, v)


def test_steinberg_relation_on_rationals():
    samples = [2, 3, -1, "1/2", 5, -3, "3/4", 7, "2/3", -5]
    report = steinberg_checks(samples)
    assert report.passed and report.checked > 0


def test_steinberg_relation_over_finite_field():
    report = steinberg_checks(range(2, 7), F=prime_field(7))
    assert report.passed and report.checked == 5


def test_squarefree_part():
    assert squarefree_part(12) == 3
    assert squarefree_part("-8/3") == -6
    with pytest.raises(ZeroParameter):
        squarefree_part(0)


def test_is_split():
    Q = rationals()
    assert not is_split(Q, -1, -1)
    assert is_split(Q, 1, 7)
    assert is_split(Q, 2, 7)  # 7 = 3^2 - 2 * 1^2 is a norm from Q(sqrt 2)
    assert is_split(prime_field(7), 3, 5)
    assert is_split(parse_field("Fq:3:x^2+1"), 1, [0, 1])


def test_norm_criterion_on_symbol_fixture():
    S = symbol_algebra(prime_field(7), 3, 5, 2, 3)
    res = norm_criterion_split(S)
    assert res.split and not res.vacuous
    assert 5 in res.norms


def test_norm_criterion_reducible_case_is_vacuous():
    S = symbol_algebra(prime_field(7), 1, 5, 2, 3)  # x^3 - 1 has the root 1
    res = norm_criterion_split(S)
    assert res.vacuous and res.split
