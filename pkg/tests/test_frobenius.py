from __future__ import annotations

import pytest

from galoisazu.errors import NotCentralizing
from galoisazu.exactfield import prime_field, rationals
from galoisazu.findimalg import quaternion_algebra, symbol_algebra
from galoisazu.frobenius import frobenius_from_galois, is_symmetric, nakayama, separability_check
from galoisazu.galois import certify_galois, fixed_ring_extension, ground_extension, trivial_extension
from galoisazu.groupaction import GroupSpec, quaternion_v_action, symbol_action

Q = rationals()
F7 = prime_field(7)


def hamilton():
    H = quaternion_algebra(Q, -1, -1)
    return certify_galois(ground_extension(H), quaternion_v_action(H))


def symbol():
    S = symbol_algebra(F7, 3, 5, 2, 3)
    return certify_galois(ground_extension(S), symbol_action(S))


def trivial():
    return certify_galois(*trivial_extension(prime_field(5), GroupSpec.parse("Z2xZ3")))


CERTS = {"hamilton": hamilton, "symbol": symbol, "trivial": trivial}


@pytest.mark.parametrize("name", sorted(CERTS))
def test_frobenius_system_from_galois(name):
    system = frobenius_from_galois(CERTS[name]())
    assert system.passed, system.checks


@pytest.mark.parametrize("name", sorted(CERTS))
def test_separability_element(name):
    cert = CERTS[name]()
    report = separability_check(cert.extension, cert.galois_element)
    assert report.passed
    assert report.idempotent_ok is True


@pytest.mark.parametrize("name", sorted(CERTS))
def test_nakayama_is_identity_and_fixes_base(name):
    nu = nakayama(CERTS[name]())
    assert nu.passed, nu.checks
    assert nu.is_identity


def test_quaternion_trace_values():
    cert = hamilton()
    system = frobenius_from_galois(cert)
    H = cert.algebra
    for k, want in enumerate([4, 0, 0, 0]):
        assert system.tau_vector(H.basis_vector(k)) == H.scale(Q.coerce(want), H.unit)


def test_symmetry_witness_for_identity():
    cert = hamilton()
    result = is_symmetric(cert, nakayama(cert))
    assert result.status == "inner"
    assert cert.algebra.is_unit_vector(result.witness)


def test_symmetry_search_rejects_outer_automorphism():
    # on a commutative algebra only the identity is inner; a translation is not
    cert = trivial()
    shift = cert.action.generators[0]
    result = is_symmetric(cert, shift)
    assert result.status == "not-inner"
    assert result.solution_dim == 0 and result.witness is None


def test_symmetry_on_symbol_fixture():
    cert = symbol()
    assert is_symmetric(cert, nakayama(cert)).status == "inner"


def test_nakayama_needs_centralizing_extension():
    res = fixed_ring_extension(symbol(), [(1, 0)])
    with pytest.raises(NotCentralizing):
        nakayama(res.upper)
    assert frobenius_from_galois(res.upper).passed
