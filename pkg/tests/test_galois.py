from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galoisazu.errors import ActionMovesBase, GammaSingular, InvariantsMismatch, NotCommutative
from galoisazu.exactfield import cyclotomic_field, prime_field, rationals
from galoisazu.findimalg import SubalgebraBasis, centralizer, quaternion_algebra, quotient_algebra, symbol_algebra
from galoisazu.galois import (
    Extension,
    base_change,
    certify_galois,
    check_morphism,
    eta_of,
    fixed_ring_extension,
    ground_extension,
    identity_morphism,
    opposite_extension,
    prop32_check,
    tensor_pure_terms,
    trace,
    trivial_extension,
)
from galoisazu.groupaction import AlgebraAction, GroupSpec, kummer_action, quaternion_v_action, symbol_action
from galoisazu.linalg import Matrix

Q = rationals()
F7 = prime_field(7)


def quaternion_cert(a, b):
    H = quaternion_algebra(Q, a, b)
    return certify_galois(ground_extension(H), quaternion_v_action(H))


def symbol_cert(F=F7, a=3, b=5, zeta=2, n=3):
    S = symbol_algebra(F, a, b, zeta, n)
    return certify_galois(ground_extension(S), symbol_action(S))


def quaternion_eta_closed_form(a, b, signs=(1, 1, 1, -1)):
    """1/4 (s0 1(x)1 + s1 i(x)i/a + s2 j(x)j/b + s3 k(x)k/ab) in index i*4 + k."""
    a, b = Q.coerce(a), Q.coerce(b)
    out = [Q.zero] * 16
    scale = [Q.one, 1 / a, 1 / b, 1 / (a * b)]
    for t in range(4):
        out[t * 4 + t] = Q.coerce(signs[t]) * scale[t] / 4
    return out


def symbol_eta_closed_form(F, a, b, zeta, n):
    """sum_{r,s} zeta^(rs) / (a b n^2) x^r u^s (x) x^(n-r) u^(n-s)."""
    A, B, Z = F.coerce(a), F.coerce(b), F.coerce(zeta)
    d = n * n
    out = [F.zero] * (d * d)
    denom = F.inv(F.mul(F.mul(A, B), F.from_int(n * n)))
    for r in range(n):
        for s in range(n):
            c = F.mul(F.pow(Z, r * s), denom)
            if r == 0:
                c = F.mul(c, A)  # x^n = a
            if s == 0:
                c = F.mul(c, B)  # u^n = b
            left = r * n + s
            right = ((-r) % n) * n + (-s) % n
            out[left * d + right] = F.add(out[left * d + right], c)
    return out


@pytest.mark.parametrize("a,b", [(-1, -1), (2, 3), ("1/2", 7), (-3, 5)])
def test_quaternion_eta_closed_form(a, b):
    cert = quaternion_cert(a, b)
    assert cert.passed
    assert cert.galois_element == quaternion_eta_closed_form(a, b)


def test_quaternion_twisted_eta_closed_form():
    a, b = 2, 3
    cert = quaternion_cert(a, b)
    assert eta_of(cert, (1, 0)) == quaternion_eta_closed_form(a, b, (1, 1, -1, 1))


@pytest.mark.parametrize("spec,a,b,zeta,n", [("Fp:7", 3, 5, 2, 3), ("Fp:13", 2, 7, 3, 3), ("Fp:5", 2, 3, 2, 4)])
def test_symbol_eta_closed_form(spec, a, b, zeta, n):
    from galoisazu.exactfield import parse_field

    F = parse_field(spec)
    cert = symbol_cert(F, a, b, zeta, n)
    assert cert.passed
    assert cert.galois_element == symbol_eta_closed_form(F, a, b, zeta, n)


def test_symbol_eta_over_cyclotomic_field():
    F = cyclotomic_field(3)
    zeta = F.gen().raw
    S = symbol_algebra(F, 2, 5, zeta, 3)
    cert = certify_galois(ground_extension(S), symbol_action(S))
    assert cert.passed
    assert cert.galois_element == symbol_eta_closed_form(F, 2, 5, zeta, 3)


def test_trivial_extension_eta_is_diagonal_sum():
    G = GroupSpec.parse("Z2xZ3")
    ext, act = trivial_extension(F7, G)
    cert = certify_galois(ext, act)
    assert cert.passed
    d = G.order
    want = [F7.zero] * (d * d)
    for g in range(d):
        want[g * d + g] = F7.one
    assert cert.galois_element == want


def test_galois_basis_pure_terms_reassemble_eta():
    cert = symbol_cert()
    ext = cert.extension
    T = ext.zero_tensor()
    for x, y in tensor_pure_terms(ext, cert.galois_element):
        T = ext.tensor_add(T, ext.pure(x, y))
    assert T == cert.galois_element


def test_trace_of_quaternion_is_four_times_real_part():
    cert = quaternion_cert(-1, -1)
    S = cert.algebra
    for coeffs in ([1, 2, 3, 4], ["1/3", -5, 0, 2], [0, 1, 1, 1]):
        v = tuple(Q.coerce(c) for c in coeffs)
        assert trace(cert, v).raw == S.scale(4 * v[0], S.unit)


def test_invariants_mismatch_raises():
    H = quaternion_algebra(Q, -1, -1)
    alpha = quaternion_v_action(H).generators[0]
    act = AlgebraAction(GroupSpec((2,)), H, [alpha])
    with pytest.raises(InvariantsMismatch) as info:
        certify_galois(ground_extension(H), act)
    assert info.value.invariants.dim == 2


def test_inseparable_extension_has_singular_gamma():
    F = prime_field(3)
    D = quotient_algebra(F, [0, 0, 1])  # dual numbers F[x]/(x^2)
    flip = Matrix.from_dense(F, [[1, 0], [0, -1]])
    act = AlgebraAction(GroupSpec((2,)), D, [flip])
    with pytest.raises(GammaSingular) as info:
        certify_galois(ground_extension(D), act)
    assert info.value.rank < 4


def test_action_moving_base_is_rejected():
    cert = symbol_cert()
    S = cert.algebra
    moved = SubalgebraBasis(S, [S.unit, S.basis_vector(1), S.basis_vector(2)])
    with pytest.raises(ActionMovesBase):
        certify_galois(Extension(S, moved), cert.action)


def test_non_strict_extension_is_flagged():
    # F_2 -> F_4 with the Frobenius is Galois but 2 = |G| vanishes in F_2
    from galoisazu.groupaction import frobenius_action

    E = quotient_algebra(prime_field(2), [1, 1, 1])
    cert = certify_galois(ground_extension(E), frobenius_action(E))
    assert cert.passed and not cert.strict


def test_fixed_ring_symbol_subgroup():
    cert = symbol_cert()
    res = fixed_ring_extension(cert, [(1, 0)])
    S = cert.algebra
    U = res.fixed_ring
    assert U.same_span(SubalgebraBasis(S, [S.basis_vector(0), S.basis_vector(3), S.basis_vector(6)]))
    assert res.field_check
    assert res.upper.passed and res.lower.passed
    assert centralizer(S, U.vectors).same_span(U)


def test_fixed_ring_other_factor():
    cert = symbol_cert()
    res = fixed_ring_extension(cert, [(0, 1)])
    S = cert.algebra
    assert res.fixed_ring.same_span(SubalgebraBasis(S, [S.basis_vector(0), S.basis_vector(1), S.basis_vector(2)]))
    assert res.upper.passed and res.lower.passed


def test_opposite_and_identity_morphism():
    for cert in (quaternion_cert(-1, -1), symbol_cert()):
        op = opposite_extension(cert)
        assert op.passed
        assert check_morphism(cert, cert, identity_morphism(cert.algebra)).passed


def test_base_change_to_cyclotomic_preserves_eta():
    cert = quaternion_cert(-1, -1)
    res = base_change(cert, cyclotomic_field(4))
    assert res.certificate.passed
    assert res.morphism_report.passed
    T = cyclotomic_field(4)
    mapped = [res.insertion.embedding(c) for c in cert.galois_element]
    assert mapped == res.certificate.galois_element
    assert T.spec == res.certificate.field.spec


def test_prop32_for_commuting_kummer_extensions():
    S1 = quotient_algebra(Q, [1, 0, 1])  # Q(i)
    S2 = quotient_algebra(Q, [-2, 0, 1])  # Q(sqrt 2)
    c1 = certify_galois(ground_extension(S1), kummer_action(S1))
    c2 = certify_galois(ground_extension(S2), kummer_action(S2))
    eps1, eps2 = prop32_check(c1, c2)
    assert eps1.passed and eps2.passed
    assert eps1.action.group.factors == (2,) and eps2.action.group.factors == (2,)


def test_prop32_rejects_noncommutative():
    c = quaternion_cert(-1, -1)
    with pytest.raises(NotCommutative):
        prop32_check(c, c)


vec4 = st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=5), min_size=4, max_size=4)


@settings(max_examples=30, deadline=None)
@given(vec4)
def test_eta_is_casimir_on_random_elements(coeffs):
    cert = quaternion_cert(2, 3)
    ext = cert.extension
    s = tuple(Q.coerce(c) for c in coeffs)
    eta = cert.galois_element
    assert ext.left_mul(s, eta) == ext.right_mul(eta, s)
    assert ext.multiplication(eta) == tuple(cert.algebra.unit)
