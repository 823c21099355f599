"""JSON encoding of fields, algebras, actions, bases and certificates.

Rationals are written as strings ("3", "-1/4"), F_p elements as integers,
F_p[X]/(f) elements as integer lists and Q(zeta_n) elements as lists of
rational strings, so every value round-trips exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

from .exactfield import Field, FieldElement, parse_field
from .findimalg import Algebra, SubalgebraBasis
from .galois import Extension, GaloisCertificate, certify_galois
from .groupaction import AlgebraAction, GroupSpec
from .linalg import Matrix

SCHEMA_DIR = Path(__file__).parent / "schemas"
SCHEMA_NAMES = ("algebra", "action", "base", "certificate", "brauer")


def elem_to_json(F: Field, raw):
    return F.format(raw)


def elem_from_json(F: Field, obj):
    return F.coerce(obj)


def vector_to_json(F: Field, vec) -> list:
    return [F.format(c) for c in vec]


def vector_from_json(F: Field, obj) -> tuple:
    return tuple(F.coerce(c) for c in obj)


def matrix_to_json(M: Matrix) -> list:
    F = M.field
    return [[F.format(c) for c in row] for row in M.to_dense()]


def matrix_from_json(F: Field, obj) -> Matrix:
    rows = [[F.coerce(c) for c in row] for row in obj]
    ncols = len(rows[0]) if rows else 0
    return Matrix.from_dense(F, rows, ncols)


def _params_to_json(params: dict):
    out = {}
    for k, v in params.items():
        if isinstance(v, FieldElement):
            out[k] = v.to_json()
        elif isinstance(v, dict):
            out[k] = _params_to_json(v)
        elif isinstance(v, (list, tuple)):
            out[k] = [x.to_json() if isinstance(x, FieldElement) else x for x in v]
        else:
            out[k] = v
    return out


_ELEMENT_PARAMS = {
    "quaternion": ("a", "b"),
    "char2_quaternion": ("a", "b"),
    "symbol": ("a", "b", "zeta"),
}


def _params_from_json(kind: str, F: Field, params: dict) -> dict:
    out = dict(params)
    for key in _ELEMENT_PARAMS.get(kind, ()):
        if key in out:
            out[key] = F.element(F.coerce(out[key]))
    if kind == "quotient" and "modulus" in out:
        out["modulus"] = [F.element(F.coerce(c)) for c in out["modulus"]]
    if kind == "opposite" and "of_params" in out:
        out["of_params"] = _params_from_json(out.get("of_kind", ""), F, out["of_params"])
    return out


def algebra_to_json(A: Algebra) -> dict:
    F = A.field
    out = {
        "field": F.spec,
        "dim": A.dim,
        "labels": list(A.labels),
        "sc": [[vector_to_json(F, A.sc[i][j]) for j in range(A.dim)] for i in range(A.dim)],
        "unit": vector_to_json(F, A.unit),
    }
    if A.kind != "custom":
        out["kind"] = A.kind
    if A.params:
        out["params"] = _params_to_json(A.params)
    return out


def algebra_from_json(obj: dict) -> Algebra:
    F = parse_field(obj["field"])
    dim = obj["dim"]
    labels = obj["labels"]
    if len(labels) != dim:
        raise ValueError("labels do not match dim")
    table = [[[F.coerce(c) for c in entry] for entry in row] for row in obj["sc"]]
    unit = [F.coerce(c) for c in obj["unit"]] if "unit" in obj else None
    kind = obj.get("kind", "custom")
    params = _params_from_json(kind, F, obj.get("params", {}))
    return Algebra(F, labels, table, unit, kind=kind, params=params)


def action_to_json(action: AlgebraAction) -> dict:
    return {
        "group": action.group.name,
        "generators": [matrix_to_json(M) for M in action.generators],
        "name": action.name,
    }


def action_from_json(obj: dict, A: Algebra) -> AlgebraAction:
    G = GroupSpec.parse(obj["group"])
    gens = [matrix_from_json(A.field, g) for g in obj["generators"]]
    return AlgebraAction(G, A, gens, name=obj.get("name", "custom"))


def base_to_json(ext: Extension):
    if ext.base is None:
        return None
    F = ext.field
    return {"vectors": [vector_to_json(F, v) for v in ext.base_vectors]}


def base_from_json(obj, A: Algebra) -> SubalgebraBasis | None:
    if obj is None:
        return None
    return SubalgebraBasis(A, [vector_from_json(A.field, v) for v in obj["vectors"]])


def certificate_to_json(cert: GaloisCertificate) -> dict:
    F = cert.field
    G = cert.action.group
    xs, ys = cert.galois_basis
    return {
        "algebra": algebra_to_json(cert.algebra),
        "action": action_to_json(cert.action),
        "base": base_to_json(cert.extension),
        "module_basis": [vector_to_json(F, f) for f in cert.extension.module_basis],
        "gamma": matrix_to_json(cert.gamma),
        "gamma_inverse": matrix_to_json(cert.gamma_inverse),
        "eta": {G.label(g): vector_to_json(F, cert.eta[g]) for g in G.elements()},
        "galois_basis": {
            "x": [vector_to_json(F, x) for x in xs],
            "y": [vector_to_json(F, y) for y in ys],
        },
        "trace": matrix_to_json(cert.trace_matrix) if cert.trace_matrix is not None else None,
        "checks": dict(cert.checks),
        "strict": cert.strict,
        "passed": cert.passed,
        "notes": list(cert.notes),
    }


def certificate_inputs_from_json(obj: dict):
    """Rebuild (extension, action) from a certificate or an input bundle."""
    A = algebra_from_json(obj["algebra"])
    action = action_from_json(obj["action"], A)
    base = base_from_json(obj.get("base"), A)
    return Extension(A, base), action


def certificate_from_json(obj: dict) -> GaloisCertificate:
    """Re-certify from the embedded inputs; stored matrices are compared, not trusted."""
    ext, action = certificate_inputs_from_json(obj)
    cert = certify_galois(ext, action)
    if "gamma" in obj:
        cert.checks["stored_gamma_matches"] = matrix_to_json(cert.gamma) == obj["gamma"]
    return cert


def load_schema(name: str) -> dict:
    text = (SCHEMA_DIR / f"{name}.schema.json").read_text()
    return json.loads(text)


def validate(obj, name: str):
    import jsonschema

    jsonschema.validate(obj, load_schema(name))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=False)
