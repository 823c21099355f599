"""Command-line front end: ``galoisazu <verb> ...``.

Exit codes: 0 every check passed, 1 a check failed, 2 unreadable or invalid
input, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .brauer import INF, class_product, hilbert_symbol, parse_place, quaternion_class, relevant_places
from .errors import ActionError, AlgebraError, CertificationError, FieldError, GaloisAzuError
from .exactfield import element_of_order, parse_field
from .findimalg import (
    char2_quaternion,
    field_algebra,
    function_algebra,
    is_azumaya_over_field,
    matrix_algebra,
    quaternion_algebra,
    symbol_algebra,
)
from .fixtures import FIXTURE_NAMES, load_fixture
from .frobenius import frobenius_from_galois, is_symmetric, nakayama, separability_check
from .galois import base_change, certify_galois, fixed_ring_extension, tensor_galois
from .groupaction import GroupSpec, quaternion_v_action, symbol_action, translation_action
from .rmatrix import braid_representation, check_fs_equation, check_yang_baxter, left_mult_operator, quaternion_blocks
from .serialize import (
    action_to_json,
    algebra_to_json,
    certificate_inputs_from_json,
    certificate_to_json,
    dumps,
    matrix_to_json,
    validate,
    vector_to_json,
)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3


class ParseError(Exception):
    pass


# input helpers

def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read JSON from {path}: {exc}") from exc


def _scalar_arg(text: str):
    """Command-line scalars: integers and "p/q" stay text, lists are JSON."""
    text = text.strip()
    if text.startswith("["):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad element {text!r}") from exc
    return text


def _field(text: str):
    try:
        return parse_field(text)
    except (FieldError, ValueError) as exc:
        raise ParseError(str(exc)) from exc


def _validated(obj, schema: str):
    import jsonschema

    try:
        validate(obj, schema)
    except jsonschema.ValidationError as exc:
        raise ParseError(f"{schema} JSON is invalid: {exc.message}") from exc
    return obj


def _bundle_inputs(bundle: dict):
    """(extension, action) from a certificate or {algebra, action, base} bundle."""
    if not isinstance(bundle, dict) or "algebra" not in bundle:
        raise ParseError("expected an object with an 'algebra' entry")
    if bundle.get("action") is None:
        raise ParseError("the input carries no group action")
    _validated(bundle["algebra"], "algebra")
    _validated(bundle["action"], "action")
    _validated(bundle.get("base"), "base")
    if "gamma" in bundle:
        _validated(bundle, "certificate")
    try:
        return certificate_inputs_from_json(bundle)
    except (FieldError, AlgebraError, ActionError, ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"{type(exc).__name__}: {exc}") from exc


def _bundle_from_args(args, suffix: str = "") -> dict:
    fixture = getattr(args, f"fixture{suffix}", None)
    cert = getattr(args, f"cert{suffix}", None)
    if fixture and cert:
        raise ParseError("give either a certificate file or a fixture, not both")
    if fixture:
        return load_fixture(fixture)
    if cert:
        return _read_json(cert)
    raise ParseError(f"one of --cert{suffix} or --fixture{suffix} is required")


def _certificate(args, suffix: str = ""):
    bundle = _bundle_from_args(args, suffix)
    ext, action = _bundle_inputs(bundle)
    cert = certify_galois(ext, action)
    if "gamma" in bundle:
        cert.checks["stored_gamma_matches"] = matrix_to_json(cert.gamma) == bundle["gamma"]
    return cert


# verbs; each returns (payload, ok)

def cmd_construct(args):
    F = _field(args.field)
    kind = args.kind
    action = None
    if kind == "quaternion":
        A = quaternion_algebra(F, _scalar_arg(args.a), _scalar_arg(args.b))
        action = quaternion_v_action(A)
    elif kind == "symbol":
        if args.n is None:
            raise ParseError("symbol needs --n")
        zeta = element_of_order(F, args.n).raw if args.zeta is None else _scalar_arg(args.zeta)
        A = symbol_algebra(F, _scalar_arg(args.a), _scalar_arg(args.b), zeta, args.n)
        action = symbol_action(A)
    elif kind == "matrix":
        if args.n is None:
            raise ParseError("matrix needs --n")
        A = matrix_algebra(F, args.n)
    elif kind == "function":
        if not args.group:
            raise ParseError("function needs --group")
        G = GroupSpec.parse(args.group)
        A = function_algebra(field_algebra(F), G)
        action = translation_action(A, G)
    else:
        A = char2_quaternion(F, _scalar_arg(args.a), _scalar_arg(args.b))
    if args.action_out:
        if action is None:
            raise ParseError(f"{kind} algebras have no default action")
        with open(args.action_out, "w", encoding="utf-8") as fh:
            fh.write(dumps(action_to_json(action)) + "\n")
    return algebra_to_json(A), True


def cmd_certify(args):
    if args.fixture or args.cert:
        cert = _certificate(args)
    else:
        if not (args.algebra and args.action):
            raise ParseError("certify needs --algebra and --action, or --fixture")
        bundle = {"algebra": _read_json(args.algebra), "action": _read_json(args.action)}
        bundle["base"] = _read_json(args.base) if args.base else None
        cert = certify_galois(*_bundle_inputs(bundle))
    return certificate_to_json(cert), cert.passed


def cmd_frobenius(args):
    cert = _certificate(args)
    F = cert.field
    system = frobenius_from_galois(cert)
    us, vs = system.pairs
    out = {
        "pairs": {"u": [vector_to_json(F, u) for u in us], "v": [vector_to_json(F, v) for v in vs]},
        "tau": matrix_to_json(system.tau),
        "checks": dict(system.checks),
    }
    sep = separability_check(cert.extension, cert.galois_element)
    out["separability"] = {
        "casimir": sep.casimir_ok, "mu_one": sep.mu_one_ok, "idempotent": sep.idempotent_ok,
    }
    ok = system.passed and sep.passed
    if cert.is_centralizing:
        nu = nakayama(cert)
        sym = is_symmetric(cert, nu)
        out["nakayama"] = {"matrix": matrix_to_json(nu.matrix), "is_identity": nu.is_identity, "checks": dict(nu.checks)}
        out["symmetry"] = {
            "status": sym.status,
            "witness": vector_to_json(F, sym.witness) if sym.witness is not None else None,
            "solution_dim": sym.solution_dim,
            "method": sym.method,
        }
        ok = ok and nu.passed
    return out, ok


def cmd_rmatrix(args):
    cert = _certificate(args)
    S = cert.algebra
    if args.blocks and (S.kind != "quaternion" or S.dim != 4):
        raise ParseError("--blocks is valid only for dim-4 quaternion certificates")
    if args.braid is not None and not 2 <= args.braid <= 4:
        raise ParseError("--braid takes 2, 3 or 4 strands")
    eta = cert.galois_element
    op = left_mult_operator(S, eta)
    fs = check_fs_equation(S, eta)
    yb = check_yang_baxter(S, eta)
    out = {
        "operator": matrix_to_json(op.matrix),
        "invertible": op.invertible(),
        "checks": {
            "fs_12_23_eq_23_13": fs[0],
            "fs_23_13_eq_13_12": fs[1],
            "fs_12_23_eq_13_12": fs[2],
            "yang_baxter": yb,
        },
    }
    if args.blocks:
        qb = quaternion_blocks(S, cert)
        out["blocks"] = {u: matrix_to_json(M) for u, M in qb.blocks.items()}
        out["checks"].update(qb.checks)
    if args.braid is not None:
        rep = braid_representation(S, eta, args.braid)
        out["braid"] = {"n": rep.n, "generators": [matrix_to_json(M) for M in rep.generators]}
        out["checks"].update({f"braid_{k}": v for k, v in rep.checks.items()})
    return out, all(out["checks"].values())


def _rationals(values):
    from fractions import Fraction

    try:
        return [Fraction(v) for v in values]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc)) from exc


def _place_json(v):
    return v if v == INF else int(v)


def _class_json(c) -> dict:
    return {
        "factors": [[int(a), int(b)] for a, b in c.factors],
        "ramified": [_place_json(v) for v in c.ramified_list()],
        "split": c.split,
    }


def cmd_hilbert(args):
    a, b = _rationals([args.a, args.b])
    if a == 0 or b == 0:
        raise ParseError("Hilbert symbols need nonzero arguments")
    if args.place is not None:
        try:
            place = parse_place(args.place)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        return hilbert_symbol(a, b, place), True
    return {str(v): hilbert_symbol(a, b, v) for v in relevant_places(a, b)}, True


def cmd_class(args):
    a, b = _rationals([args.a, args.b])
    if a == 0 or b == 0:
        raise ParseError("quaternion classes need nonzero arguments")
    out = _class_json(quaternion_class(a, b))
    _validated(out, "brauer")
    return out, True


def cmd_class_product(args):
    vals = _rationals([args.a1, args.b1, args.a2, args.b2])
    if 0 in vals:
        raise ParseError("quaternion classes need nonzero arguments")
    c = class_product(quaternion_class(vals[0], vals[1]), quaternion_class(vals[2], vals[3]))
    out = _class_json(c)
    _validated(out, "brauer")
    return out, True


def cmd_tensor(args):
    cert = tensor_galois(_certificate(args, "1"), _certificate(args, "2"))
    return certificate_to_json(cert), cert.passed


def _subgroup(texts, G: GroupSpec):
    gens = []
    for text in texts or []:
        for part in text.split(";"):
            try:
                g = tuple(int(x) for x in part.replace("(", "").replace(")", "").split(","))
            except ValueError as exc:
                raise ParseError(f"bad group element {part!r}") from exc
            if len(g) != G.rank:
                raise ParseError(f"group element {part!r} needs {G.rank} coordinates")
            gens.append(g)
    return gens


def cmd_fixed_ring(args):
    cert = _certificate(args)
    gens = _subgroup(args.subgroup, cert.action.group)
    res = fixed_ring_extension(cert, gens)
    F = cert.field
    out = {
        "subgroup": [list(g) for g in gens],
        "fixed_ring": [vector_to_json(F, v) for v in res.fixed_ring.vectors],
        "field_check": res.field_check,
        "upper": certificate_to_json(res.upper),
        "lower": certificate_to_json(res.lower) if res.lower is not None else None,
        "note": res.quotient_note,
    }
    ok = res.upper.passed and (res.lower is None or res.lower.passed)
    return out, ok


def cmd_base_change(args):
    cert = _certificate(args)
    T = _field(args.to)
    gen = _scalar_arg(args.gen_image) if args.gen_image is not None else None
    res = base_change(cert, T, gen)
    out = {
        "certificate": certificate_to_json(res.certificate),
        "morphism_checks": dict(res.morphism_report.checks),
    }
    return out, res.certificate.passed and res.morphism_report.passed


def _section(name, checks, witnesses=None):
    witnesses = witnesses or {}
    return {
        "name": name,
        "checks": [{"name": k, "passed": bool(v), "witness": witnesses.get(k)} for k, v in checks.items()],
    }


def cmd_report(args):
    start = time.perf_counter()
    bundle = _bundle_from_args(args)
    cert = _certificate(args)
    S = cert.algebra
    sections = [_section("Galois conditions", cert.checks, {"gamma_bijective": f"rank {cert.gamma.rank()} of {cert.gamma.nrows}"})]
    sep = separability_check(cert.extension, cert.galois_element)
    ident = {"casimir": sep.casimir_ok, "mu_eta_is_one": sep.mu_one_ok}
    if sep.idempotent_ok is not None:
        ident["separability_idempotent"] = sep.idempotent_ok
    sections.append(_section("Casimir and separability identities", ident))
    system = frobenius_from_galois(cert)
    frob = dict(system.checks)
    if cert.is_centralizing:
        nu = nakayama(cert)
        frob.update({f"nakayama_{k}": v for k, v in nu.checks.items()})
    sections.append(_section("Frobenius conditions", frob))
    fs = check_fs_equation(S, cert.galois_element)
    eqs = {"fs_equation": all(fs), "yang_baxter": check_yang_baxter(S, cert.galois_element)}
    sections.append(_section("Tensor equations", eqs))
    info = {"strict": cert.strict, "l_eta_invertible": left_mult_operator(S, cert.galois_element).invertible()}
    if cert.is_centralizing and S.dim <= 16:
        info["azumaya_over_field"] = bool(is_azumaya_over_field(S))
    out = {
        "inputs": {
            "name": bundle.get("name"),
            "field": S.field.spec,
            "dim": S.dim,
            "kind": S.kind,
            "group": cert.action.group.name,
            "base_dim": len(cert.extension.base_vectors),
        },
        "sections": sections,
        "properties": info,
        "notes": list(cert.notes),
        "timing_seconds": round(time.perf_counter() - start, 4),
        "version": __version__,
    }
    ok = all(c["passed"] for s in sections for c in s["checks"])
    return out, ok


# rendering

def _render_text(verb: str, payload) -> str:
    if verb == "report":
        return _render_report(payload)
    if not isinstance(payload, (dict, list)):
        return str(payload)
    lines: list[str] = []
    _render_value(payload, lines, 0)
    return "\n".join(lines)


def _render_value(value, lines, depth):
    pad = "  " * depth
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _is_flat_list(v):
                lines.append(f"{pad}{k}:")
                _render_value(v, lines, depth + 1)
            else:
                lines.append(f"{pad}{k}: {_flat(v)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and not _is_flat_list(item):
                lines.append(f"{pad}-")
                _render_value(item, lines, depth + 1)
            else:
                lines.append(f"{pad}{_flat(item)}")


def _is_flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or _is_scalar_list(x) for x in v)


def _is_scalar_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _flat(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_flat(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    return str(v)


def _render_report(payload) -> str:
    inp = payload["inputs"]
    lines = [
        f"galoisazu {payload['version']} certification report",
        f"algebra: {inp['kind']} of dimension {inp['dim']} over {inp['field']}; group {inp['group']}; base dimension {inp['base_dim']}",
    ]
    width = max(len(c["name"]) for s in payload["sections"] for c in s["checks"])
    for s in payload["sections"]:
        lines.append("")
        lines.append(s["name"])
        for c in s["checks"]:
            mark = "PASS" if c["passed"] else "FAIL"
            extra = f"  ({c['witness']})" if c["witness"] else ""
            lines.append(f"  {c['name']:<{width}}  {mark}{extra}")
    lines.append("")
    for k, v in payload["properties"].items():
        lines.append(f"{k}: {_flat(v)}")
    for note in payload["notes"]:
        lines.append(f"note: {note}")
    lines.append(f"time: {payload['timing_seconds']} s")
    return "\n".join(lines)


# parser

def _add_cert_source(p, suffix: str = ""):
    p.add_argument(f"--cert{suffix}", metavar="JSON", help="certificate or {algebra, action, base} bundle; '-' for stdin")
    p.add_argument(f"--fixture{suffix}", choices=FIXTURE_NAMES, help="bundled example input")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=None, help="output format")
    parser = argparse.ArgumentParser(prog="galoisazu", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"galoisazu {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("construct", parents=[common], help="build an algebra and emit its JSON")
    p.add_argument("kind", choices=("quaternion", "symbol", "matrix", "function", "char2quat"))
    p.add_argument("--field", default="Q")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--zeta")
    p.add_argument("--n", type=int)
    p.add_argument("--group")
    p.add_argument("--action-out", metavar="FILE", help="also write the default group action here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("certify", parents=[common], help="certify a Galois extension")
    p.add_argument("--algebra", metavar="JSON")
    p.add_argument("--action", metavar="JSON")
    p.add_argument("--base", metavar="JSON")
    _add_cert_source(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("frobenius", parents=[common], help="Frobenius system, Nakayama map and symmetry")
    _add_cert_source(p)
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("rmatrix", parents=[common], help="the operator l_eta and its equations")
    _add_cert_source(p)
    p.add_argument("--blocks", action="store_true", help="quaternion block decomposition")
    p.add_argument("--braid", type=int, metavar="N", help="braid group representation on N strands")
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert symbol over Q")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--place", help="a prime or 'inf'; all relevant places when omitted")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("class", parents=[common], help="ramified places of (a, b) over Q")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("class-product", parents=[common], help="product of two quaternion classes over Q")
    for name in ("a1", "b1", "a2", "b2"):
        p.add_argument(name)
    p.set_defaults(func=cmd_class_product)

    p = sub.add_parser("tensor", parents=[common], help="certify the tensor product of two extensions")
    _add_cert_source(p, "1")
    _add_cert_source(p, "2")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("fixed-ring", parents=[common], help="fixed ring of a subgroup and its two extensions")
    _add_cert_source(p)
    p.add_argument("--subgroup", action="append", metavar="G",
                   help="subgroup generator such as '1,0'; repeat or separate with ';'")
    p.set_defaults(func=cmd_fixed_ring)

    p = sub.add_parser("base-change", parents=[common], help="extend scalars and re-certify")
    _add_cert_source(p)
    p.add_argument("--to", required=True, metavar="FIELD")
    p.add_argument("--gen-image", metavar="ELEM", help="image of the source field generator")
    p.set_defaults(func=cmd_base_change)

    p = sub.add_parser("report", parents=[common], help="table of every check on a certificate")
    _add_cert_source(p)
    p.set_defaults(func=cmd_report)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_PARSE
    fmt = args.format or ("text" if args.verb == "report" else "json")
    try:
        payload, ok = args.func(args)
    except ParseError as exc:
        _error(stdout, stderr, fmt, "ParseError", str(exc))
        return EXIT_PARSE
    except CertificationError as exc:
        _error(stdout, stderr, fmt, type(exc).__name__, str(exc))
        return EXIT_CHECK_FAILED
    except (FieldError, AlgebraError, ActionError) as exc:
        # bad parameters reach the constructors before any certification
        _error(stdout, stderr, fmt, type(exc).__name__, str(exc))
        return EXIT_PARSE
    except GaloisAzuError as exc:
        _error(stdout, stderr, fmt, type(exc).__name__, str(exc))
        return EXIT_CHECK_FAILED
    except Exception as exc:  # noqa: BLE001 - last-resort boundary of the process
        _error(stdout, stderr, fmt, "Internal", f"{type(exc).__name__}: {exc}")
        return EXIT_INTERNAL
    text = dumps(payload) if fmt == "json" else _render_text(args.verb, payload)
    stdout.write(text + "\n")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _error(stdout, stderr, fmt, kind, message):
    if fmt == "json":
        stdout.write(dumps({"error": kind, "message": message}) + "\n")
    stderr.write(f"galoisazu: {kind}: {message}\n")


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
