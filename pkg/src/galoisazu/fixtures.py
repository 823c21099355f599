"""Bundled example inputs: algebra, action and base JSON for the standard cases."""

from __future__ import annotations

import json
from pathlib import Path

from .exactfield import parse_field, prime_field, rationals
from .findimalg import char2_quaternion, field_algebra, function_algebra, quaternion_algebra, symbol_algebra, tensor_algebra
from .groupaction import GroupSpec, product_action, quaternion_v_action, symbol_action, translation_action
from .serialize import action_to_json, algebra_to_json, certificate_inputs_from_json

_DATA_DIR = Path(__file__).parent / "fixtures"
FIXTURE_NAMES = ("hamilton", "symbol-7-3", "trivial-5-6", "char2-2", "tensor-hamilton")

CHAR2_NOTE = (
    "recorded, not verified: the quaternion algebra (a, b] over a field of characteristic 2 "
    "is asserted not to be Galois over its centre for the action of the four-group"
)


def build_fixture(name: str) -> dict:
    """Construct the fixture from the library constructors."""
    Q = rationals()
    if name == "hamilton":
        H = quaternion_algebra(Q, -1, -1)
        return _bundle(name, "quaternion algebra (-1, -1) over Q with the four-group action", H, quaternion_v_action(H))
    if name == "symbol-7-3":
        S = symbol_algebra(prime_field(7), 3, 5, 2, 3)
        return _bundle(name, "symbol algebra (3, 5, 2) over F_7, n = 3, with the (Z/3)^2 action", S, symbol_action(S))
    if name == "trivial-5-6":
        G = GroupSpec.parse("Z2xZ3")
        A = function_algebra(field_algebra(prime_field(5)), G)
        return _bundle(name, "F_5 -> F_5(Z/2 x Z/3), diagonal embedding, translation action", A, translation_action(A, G))
    if name == "char2-2":
        H = char2_quaternion(prime_field(2), 1, 1)
        out = _bundle(name, "characteristic-2 quaternion algebra (1, 1] over F_2", H, None)
        out["note"] = CHAR2_NOTE
        return out
    if name == "tensor-hamilton":
        H = quaternion_algebra(Q, -1, -1)
        T = tensor_algebra(H, H)
        act = quaternion_v_action(H)
        return _bundle(name, "H(-1,-1) (x)_Q H(-1,-1) with the product action of (Z/2)^4", T, product_action(act, act, T))
    raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")


def _bundle(name, description, algebra, action) -> dict:
    return {
        "name": name,
        "description": description,
        "algebra": algebra_to_json(algebra),
        "action": action_to_json(action) if action is not None else None,
        "base": None,
    }


def load_fixture(name: str) -> dict:
    """The shipped JSON for ``name``."""
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")
    text = (_DATA_DIR / f"{name}.json").read_text()
    return json.loads(text)


def fixtures() -> dict:
    return {name: load_fixture(name) for name in FIXTURE_NAMES}


def fixture_inputs(name: str):
    """(extension, action) rebuilt from the shipped JSON."""
    data = load_fixture(name)
    if data["action"] is None:
        raise KeyError(f"fixture {name!r} carries no action")
    return certificate_inputs_from_json(data)


def fixture_field(name: str):
    return parse_field(load_fixture(name)["algebra"]["field"])


def write_fixtures(directory) -> list:
    """Regenerate the shipped JSON files; returns the written paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name in FIXTURE_NAMES:
        path = directory / f"{name}.json"
        path.write_text(json.dumps(build_fixture(name), indent=1, ensure_ascii=False) + "\n")
        paths.append(path)
    return paths
