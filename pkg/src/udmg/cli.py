"""Command-line surface: verification, construction, quotients, code and
bound reports, modulation audits, and the bundled worked example.

Exit codes: 0 for success or a valid set, 1 for an invalid set (witness
printed) or a failed audit, 2 for usage and file errors.  Reports are
human-readable tables by default and JSON with --json; output is
deterministic and independent of the thread count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import reference
from .codes import bounds as bounds_report
from .codes import first_column_code, min_distance
from .core import Udmg, minimal_genus, quotient, realize, truncate, verify
from .curves import (
    INFINITY,
    DivisorSpec,
    FnElement,
    WeierstrassCurve,
    genus0_udmg,
    goppa_udmg,
)
from .errors import UdmgError
from .fields import FieldSpec, field_from_order
from .linalg import FqMatrix, rref
from .waveform import audit_product_distance, build_scheme, complexify, snr

# -- bit-exact matrix-set file format -----------------------------------------

def matrixset_to_text(u: Udmg) -> str:
    """Canonical serialization: fixed key order, one matrix per line, LF EOF."""
    lines = ["{"]
    lines.append(f'  "p": {u.field.p},')
    lines.append(f'  "m": {u.field.m},')
    if u.field.m > 1:
        lines.append(f'  "modulus": {json.dumps(list(u.field.modulus))},')
    lines.append(f'  "K": {u.K},')
    lines.append(f'  "g": {u.g},')
    mats = [json.dumps([list(M.row(i)) for i in range(M.rows)]) for M in u.matrices]
    lines.append('  "matrices": [')
    for i, m in enumerate(mats):
        comma = "," if i + 1 < len(mats) else ""
        lines.append(f"    {m}{comma}")
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def matrixset_from_text(text: str) -> Udmg:
    data = json.loads(text)
    for key in ("p", "m", "K", "g", "matrices"):
        if key not in data:
            raise ValueError(f"matrix-set file missing key {key!r}")
    if data["m"] > 1:
        field = FieldSpec(data["p"], data["m"], tuple(data["modulus"]))
    else:
        field = FieldSpec(data["p"])
    mats = tuple(FqMatrix.from_rows(field, rows) for rows in data["matrices"])
    return Udmg(field, data["K"], data["g"], mats)


def load_matrixset(path: str) -> Udmg:
    with open(path, "r", encoding="utf-8") as fh:
        return matrixset_from_text(fh.read())


def save_matrixset(u: Udmg, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(matrixset_to_text(u))


# -- construction file ----------------------------------------------------------

_FN_ALLOWED = set("0123456789rs+-*^() ")


def parse_function(curve: WeierstrassCurve, text: str) -> FnElement:
    """Polynomial in r and s with integer coefficients, e.g. 'r+s' or '2*r^2+1'."""
    if not set(text) <= _FN_ALLOWED:
        raise ValueError(f"unsupported characters in function string {text!r}")
    expr = text.replace("^", "**")
    env = {"r": FnElement.r(curve), "s": FnElement.s(curve), "__builtins__": {}}
    value = eval(expr, env)  # noqa: S307 - charset restricted above
    if isinstance(value, int):
        value = FnElement.const(curve, value)
    return value


def construction_from_data(data: dict):
    q = data["q"]
    field = field_from_order(q)
    genus = data["genus"]
    if genus == 0:
        points = []
        for tok in data["points"]:
            points.append(INFINITY if tok == "inf" else field.check(int(tok)))
        return genus0_udmg(field, points, int(data["K"]))
    if genus == 1:
        curve = WeierstrassCurve(field, int(data["a"]) % q, int(data["b"]) % q)
        points = []
        for tok in data["points"]:
            points.append(INFINITY if tok == "inf" else (int(tok[0]), int(tok[1])))
        div = data.get("divisor")
        if not isinstance(div, dict) or "n" not in div:
            raise ValueError("genus-1 construction needs divisor: {\"n\": ..., \"h\": ...}")
        h = parse_function(curve, div["h"]) if div.get("h") else None
        return goppa_udmg(curve, points, DivisorSpec(int(div["n"]), h))
    raise ValueError("genus must be 0 or 1")


def load_construction(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return construction_from_data(json.load(fh))


# -- report helpers ---------------------------------------------------------------

def _emit(payload: dict, as_json: bool, out=None) -> None:
    out = out if out is not None else sys.stdout
    if as_json:
        print(json.dumps(payload, default=_jsonable), file=out)
        return
    for key, value in payload.items():
        if isinstance(value, (list, tuple)) and value and isinstance(value[0], (list, tuple)):
            print(f"{key}:", file=out)
            for row in value:
                print(f"  {row if isinstance(row, str) else list(row)}", file=out)
        else:
            print(f"{key}: {_pretty(value)}", file=out)


def _jsonable(x):
    from fractions import Fraction

    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, tuple):
        return list(x)
    return str(x)


def _pretty(x):
    from fractions import Fraction

    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, (list, tuple)):
        return [_pretty(v) for v in x]
    return x


def _threads(args) -> int:
    env = os.environ.get("UDMG_THREADS")
    if env is not None:
        return max(1, int(env))
    if args.threads is not None:
        return max(1, args.threads)
    return os.cpu_count() or 1


# -- subcommands -------------------------------------------------------------------

def _cmd_verify(args) -> int:
    u = load_matrixset(args.matrixset)
    if args.genus is not None:
        u = u.with_genus(args.genus)
    rep = verify(u, threads=_threads(args))
    payload = {
        "valid": rep.valid,
        "genus": u.g,
        "checked": rep.checked,
        "vacuous": rep.vacuous,
        "witness": list(rep.witness) if rep.witness else None,
    }
    if args.min_genus:
        g_min, vac = minimal_genus(u)
        payload["minimal_genus"] = g_min
        payload["minimal_genus_vacuous"] = vac
    _emit(payload, args.json)
    return 0 if rep.valid else 1


def _point_token(P):
    if P is INFINITY:
        return "inf"
    return P if isinstance(P, int) else list(P)


def _cmd_construct(args) -> int:
    gc = load_construction(args.constructionfile)
    save_matrixset(gc.udmg, args.output)
    payload = {
        "q": gc.field.q,
        "genus": gc.genus,
        "K": gc.udmg.K,
        "L": gc.udmg.L,
        "points": [_point_token(P) for P in gc.points],
        "valuations": [list(v) for v in gc.point_valuations],
        "basis": [str(b) for b in gc.basis0],
        "generator": [list(gc.generator.row(i)) for i in range(gc.generator.rows)],
        "verified": True,
        "output": args.output,
    }
    _emit(payload, args.json)
    return 0


def _cmd_quotient(args) -> int:
    u = load_matrixset(args.matrixset)
    trunc = tuple(int(t) for t in args.truncate.split(","))
    res = quotient(realize(u), trunc)
    payload = {
        "d": res.d,
        "r": res.r,
        "B_dim": res.B_dim,
        "height": res.quotient.K,
        "genus": res.quotient.g,
        "lengths": list(res.quotient.lengths),
        "valid": True,
    }
    if args.output:
        from .core import matrices_from_chains

        save_matrixset(matrices_from_chains(res.quotient), args.output)
        payload["output"] = args.output
    _emit(payload, args.json)
    return 0


def _cmd_code(args) -> int:
    u = load_matrixset(args.matrixset)
    rep = verify(u, threads=_threads(args))
    if not rep.valid:
        _emit({"valid": False, "witness": list(rep.witness)}, args.json)
        return 1
    code = first_column_code(u, compute_distance=args.min_distance)
    payload = {
        "n": code.n,
        "k": code.k,
        "generator": [list(code.generator.row(i)) for i in range(code.k)],
    }
    if args.min_distance:
        payload["d"] = code.d
        payload["defect"] = code.defect
    _emit(payload, args.json)
    return 0


def _cmd_bounds(args) -> int:
    lengths = tuple(int(x) for x in args.lengths.split(",")) if args.lengths else None
    nks = tuple(int(x) for x in args.nks.split(",")) if args.nks else None
    rep = bounds_report(args.K, args.q, args.g, lengths=lengths, nks=nks)
    payload = {
        "K": rep.K, "q": rep.q, "g": rep.g,
        "defect_bound": rep.defect_bound,
        "class": rep.code_class or "n/a",
        "class1_bound": rep.class1_bound,
        "class2_range": list(rep.class2_range),
        "gamma": rep.gamma,
        "partition_bound": rep.partition_bound,
        "notes": list(rep.notes),
    }
    if nks:
        payload["asmds_bound"] = rep.asmds_bound
        payload["asmds_holds"] = rep.asmds_holds
    _emit(payload, args.json)
    return 0


def _cmd_modulate(args) -> int:
    u = load_matrixset(args.matrixset)
    scheme = build_scheme(u)
    payload = {
        "q": u.field.q,
        "N": scheme.N,
        "L": scheme.L,
        "delta": scheme.delta,
        "rate_symbols": scheme.rate_symbols,
        "rate_bits": round(scheme.rate_bits, 6),
        "weights": [w for w in scheme.modulator.weights],
    }
    exit_code = 0
    if args.snr:
        rep = snr(scheme)
        payload["snr"] = rep.snr
        payload["snr_lower"] = rep.lower
        payload["snr_upper"] = rep.upper
        payload["snr_within_bounds"] = rep.within
        if not rep.within:
            exit_code = 1
    if args.audit:
        rep = audit_product_distance(scheme)
        payload["audit_pairs"] = rep.pairs_checked
        payload["audit_min_product"] = rep.min_product
        payload["audit_floor"] = rep.floor
        payload["audit_passed"] = rep.passed
        payload["audit_vacuous"] = rep.vacuous
        if not rep.passed:
            payload["audit_worst_pair"] = [list(v) for v in rep.worst_pair]
            exit_code = 1
    _emit(payload, args.json)
    return exit_code


def _cmd_example(args) -> int:
    """Emit the bundled genus-1 instance and run the whole pipeline on it."""
    out = args.output or "genus1_f5.json"
    u = reference.matrix_set()
    save_matrixset(u, out)
    checks = {}

    rep1 = verify(u, threads=_threads(args))
    checks["verifies_at_genus_1"] = rep1.valid
    rep0 = verify(u.with_genus(0))
    checks["fails_at_genus_0"] = (not rep0.valid
                                  and rep0.witness == reference.WITNESS_GENUS0)

    gc = construction_from_data({
        "q": 5, "genus": 1, "a": reference.CURVE_A, "b": reference.CURVE_B,
        "points": [("inf" if P is INFINITY else list(P)) for P in reference.POINTS],
        "divisor": {"n": reference.DIVISOR_N, "h": reference.DIVISOR_H},
    })
    checks["construction_reproduces_fixture"] = gc.matrices == u.matrices
    same_rowspace = (rref(gc.generator).matrix
                     == rref(reference.evaluation_generator()).matrix)
    checks["generator_rowspace_matches_hand_evaluation"] = same_rowspace

    code = first_column_code(u)
    checks["code_is_9_3_with_d_in_6_7"] = (code.n, code.k) == (9, 3) and 6 <= code.d <= 7
    checks["defect_at_most_genus"] = code.defect <= u.g

    scheme = build_scheme(u)
    srep = snr(scheme)
    checks["snr_within_bounds"] = srep.within
    arep = audit_product_distance(scheme)
    checks["product_distance_audit"] = arep.passed
    crep = complexify(scheme)
    checks["complexified_power_doubles"] = crep.snr == 2 * crep.base_snr

    payload = dict(checks)
    payload["fixture"] = out
    payload["all_passed"] = all(checks.values())
    _emit(payload, args.json)
    return 0 if payload["all_passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="udmg",
        description="Verify, construct, quotient, and audit universally "
                    "decodable matrix sets of genus g.")
    parser.add_argument("--json", action="store_true", help="emit JSON reports")
    parser.add_argument("--threads", type=int, default=None,
                        help="workers for exhaustive enumerations "
                             "(UDMG_THREADS overrides; output is identical)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the defining rank property")
    p.add_argument("matrixset")
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--min-genus", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("construct", help="build a matrix set from a curve description")
    p.add_argument("constructionfile")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("quotient", help="quotient by a truncated sub-collection")
    p.add_argument("matrixset")
    p.add_argument("--truncate", required=True, help="comma-separated kept lengths")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("code", help="first-column code parameters")
    p.add_argument("matrixset")
    p.add_argument("--min-distance", action="store_true")
    p.set_defaults(func=_cmd_code)

    p = sub.add_parser("bounds", help="size caps for the given parameters")
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--lengths", default=None)
    p.add_argument("--nks", default=None, help="n,k,s for the defect length cap")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("modulate", help="scheme report with exact SNR and audits")
    p.add_argument("matrixset")
    p.add_argument("--snr", action="store_true")
    p.add_argument("--audit", action="store_true")
    p.set_defaults(func=_cmd_modulate)

    p = sub.add_parser("example-paper",
                       help="emit the bundled genus-1 instance and run the "
                            "full pipeline on it")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_example)
    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UdmgError, ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
