from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galoisazu.exactfield import cyclotomic_field, extension_field, prime_field, rationals
from galoisazu.findimalg import quaternion_algebra, symbol_algebra
from galoisazu.fixtures import FIXTURE_NAMES, build_fixture, fixture_inputs, load_fixture
from galoisazu.galois import certify_galois, ground_extension
from galoisazu.groupaction import quaternion_v_action
from galoisazu.serialize import (
    action_from_json,
    action_to_json,
    algebra_from_json,
    algebra_to_json,
    certificate_from_json,
    certificate_to_json,
    dumps,
    elem_from_json,
    elem_to_json,
    validate,
)

Q = rationals()


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_shipped_fixtures_match_constructors(name):
    assert load_fixture(name) == build_fixture(name)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_algebra_round_trip_and_schema(name):
    data = load_fixture(name)
    validate(data["algebra"], "algebra")
    A = algebra_from_json(data["algebra"])
    assert algebra_to_json(A) == data["algebra"]
    if data["action"] is not None:
        validate(data["action"], "action")
        assert action_to_json(action_from_json(data["action"], A)) == data["action"]


def test_element_encodings():
    assert elem_to_json(Q, Q.coerce("-3/4")) == "-3/4"
    F7 = prime_field(7)
    assert elem_to_json(F7, F7.coerce(-1)) == 6
    F4 = extension_field(2, [1, 1, 1])
    g = F4.gen().raw
    assert elem_from_json(F4, elem_to_json(F4, g)) == g
    Z = cyclotomic_field(3)
    z = Z.gen().raw
    assert elem_from_json(Z, elem_to_json(Z, z)) == z


@pytest.mark.parametrize("name", ["hamilton", "symbol-7-3", "trivial-5-6"])
def test_certificate_round_trip(name):
    cert = certify_galois(*fixture_inputs(name))
    obj = certificate_to_json(cert)
    validate(obj, "certificate")
    text = dumps(obj)
    again = certificate_from_json(json.loads(text))
    assert again.checks["stored_gamma_matches"]
    assert again.galois_element == cert.galois_element
    assert certificate_to_json(again)["gamma"] == obj["gamma"]


def test_tampered_gamma_is_detected():
    cert = certify_galois(*fixture_inputs("hamilton"))
    obj = certificate_to_json(cert)
    obj["gamma"][0][0] = "7"
    again = certificate_from_json(obj)
    assert again.checks["stored_gamma_matches"] is False


def test_symbol_algebra_params_round_trip():
    S = symbol_algebra(prime_field(13), 2, 7, 3, 3)
    obj = algebra_to_json(S)
    back = algebra_from_json(obj)
    assert back.kind == "symbol"
    assert algebra_to_json(back) == obj


coef = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(lambda x: x != 0)


@settings(max_examples=15, deadline=None)
@given(coef, coef)
def test_quaternion_certificate_json_round_trip(a, b):
    H = quaternion_algebra(Q, a, b)
    cert = certify_galois(ground_extension(H), quaternion_v_action(H))
    obj = json.loads(dumps(certificate_to_json(cert)))
    again = certificate_from_json(obj)
    assert again.passed and again.checks["stored_gamma_matches"]
    assert again.galois_element == cert.galois_element
