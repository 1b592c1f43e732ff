"""Command-line front end: one JSON document in, one JSON document out.

Exit codes: 0 success, 2 invalid input, 3 precision exhausted, 64 unknown
subcommand.  Defaults for the series window and the coordinate box can be
set through PTYPICAL_WINDOW ("lo,hi") and PTYPICAL_BOX.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from . import serialize as S
from .as_extension import tower2_break
from .census import (census_report, enumerate_as_classes, rays_through_support,
                     verify_splits2_torsor)
from .cones import ray
from .errors import InstanceTooLarge, PrecisionExhausted
from .field_series import DEFAULT_WINDOW, as_reduce
from .finite_field import get_field, is_prime
from .heights import c_lambda_linear, h_lambda_as, h_U_as, height_splits_check
from .ramification import PhiPsi
from .toric_algebra import (Diagram, MapDescriptor, check_map_p_properties, check_p_limit_bounded,
                            coker_basis_bounded, coker_normal_form, restrict_as, v_lambda)

EXIT_OK, EXIT_INVALID, EXIT_PRECISION, EXIT_UNKNOWN = 0, 2, 3, 64
DEFAULT_BOX = 8

SUBCOMMANDS = {
    "reduce-as": "reduce a Laurent series modulo (F - 1)",
    "break": "highest break of an Artin-Schreier extension",
    "tower2-break": "highest break of a depth-2 tower",
    "phi": "evaluate the Herbrand function of a list of breaks",
    "coker-nf": "coker(F - 1) normal form of a toric datum",
    "coker-basis": "bounded coker(F - 1) basis of a cone",
    "restrict": "restrict a toric datum to a subcone",
    "vlambda": "lambda-valuation of a toric datum",
    "heights": "h_lambda, h_U, c_lambda and the ray-splitting check",
    "check-plimit": "bounded p-limit check for a diagram of cones",
    "check-map": "p-injective / p-surjective / p-faithful check",
    "census": "enumerate torsor classes with bounded support",
    "splits2-check": "ray reconstruction check for a reduced datum",
}


class InputError(ValueError):
    pass


@lru_cache(maxsize=None)
def _schema() -> dict:
    text = resources.files("ptypical").joinpath("data/cli_schema.json").read_text()
    return json.loads(text)


def _validate(cmd: str, doc):
    schema = dict(_schema())
    schema["$ref"] = f"#/subcommands/{cmd}"
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        path = "/".join(map(str, exc.absolute_path)) or "<root>"
        raise InputError(f"{path}: {exc.message}") from None


def _load(raw: str | None):
    if raw is None:
        return {}
    if raw == "-":
        text = sys.stdin.read()
    elif not raw.lstrip().startswith(("{", "[")) and Path(raw).is_file():
        text = Path(raw).read_text()
    else:
        text = raw
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None


def _env_window():
    env = os.environ.get("PTYPICAL_WINDOW")
    if not env:
        return DEFAULT_WINDOW
    lo, hi = (int(x) for x in env.split(","))
    return (lo, hi)


def _window(args):
    if args.window:
        lo, hi = (int(x) for x in args.window.split(","))
        return (lo, hi)
    return _env_window()


def _box(args, doc) -> int:
    if "box" in doc:
        return int(doc["box"])
    if args.box is not None:
        return args.box
    return int(os.environ.get("PTYPICAL_BOX", DEFAULT_BOX))


def _field(args, doc):
    p = args.p if args.p is not None else doc.get("p")
    e = args.e if args.e is not None else doc.get("e", 1)
    if p is None:
        raise InputError("field characteristic p is required (--p or \"p\")")
    if not is_prime(p):
        raise InputError(f"p = {p} is not prime")
    if e < 1 or p ** e > 2 ** 16:
        raise InputError("field size must satisfy 1 <= e and p^e <= 2^16")
    return get_field(p, e)


def _points_rays(gens):
    return [ray(g) for g in gens]


# -- subcommand bodies --------------------------------------------------------
# Each returns (normalized input echo, result dict).

def _cmd_reduce_as(args, doc):
    f = _field(args, doc)
    a = S.series_from_json(f, doc, _window(args))
    nf = as_reduce(a)
    echo = {"p": f.p, "e": f.e, **S.series_to_json(a)}
    return echo, {"m": S.rat(nf.m), "split": nf.split,
                  "reduced": S.series_to_json(nf.reduced), "witness": S.series_to_json(nf.witness)}


def _cmd_break(args, doc):
    f = _field(args, doc)
    a = S.series_from_json(f, doc, _window(args))
    m = as_reduce(a).m
    return {"p": f.p, "e": f.e, **S.series_to_json(a)}, {"break": S.rat(m)}


def _cmd_tower2(args, doc):
    f = _field(args, doc)
    w = _window(args)
    a = S.series_from_json(f, doc["a"], w)
    b = [S.series_from_json(f, c, w) for c in doc["b"]]
    if len(b) > f.p:
        raise InputError(f"b has more than p = {f.p} coefficients")
    val = tower2_break(a, b)
    echo = {"p": f.p, "e": f.e, "a": S.series_to_json(a), "b": [S.series_to_json(c) for c in b]}
    return echo, {"break": S.rat(val)}


def _cmd_phi(args, doc):
    p = args.p if args.p is not None else doc.get("p")
    if p is None or not is_prime(p):
        raise InputError("a prime p is required")
    breaks, x = doc["breakpoints"], doc["x"]
    bs = [S.parse_rat(b) for b in breaks]
    if any(b <= 0 for b in bs):
        raise InputError("breaks must be positive")
    f = PhiPsi.from_breaks(bs, p)
    x = S.parse_rat(x)
    if x < -1:
        raise InputError("x must be at least -1")
    echo = {"p": p, "breakpoints": [S.rat(b) for b in bs], "x": S.rat(x)}
    return echo, {"phi": S.rat(f(x)), "psi": S.rat(f.psi(x))}


def _datum(args, doc):
    f = _field(args, doc)
    return S.datum_from_json(f, doc, _box(args, doc))


def _cmd_coker_nf(args, doc):
    x = _datum(args, doc)
    red, wit = coker_normal_form(x)
    return S.datum_to_json(x), {"reduced": S.datum_to_json(red), "witness": S.datum_to_json(wit)}


def _cmd_coker_basis(args, doc):
    f = _field(args, doc)
    sigma = S.cone_from_json(doc["cone"])
    box = _box(args, doc)
    basis = coker_basis_bounded(sigma, box, f.p)
    echo = {"p": f.p, "e": f.e, "cone": S.cone_to_json(sigma), "box": box}
    return echo, {"points": [list(v) for v in basis.points], "constant_classes": basis.constant_classes,
                  "class_count": basis.class_count(f.q)}


def _inner_datum(args, doc):
    sub = dict(doc["datum"])
    for k in ("p", "e"):
        if k in doc and k not in sub:
            sub[k] = doc[k]
    return _datum(args, sub)


def _cmd_restrict(args, doc):
    x = _inner_datum(args, doc)
    tau = S.cone_from_json(doc["tau"])
    y = restrict_as(x, tau)
    return {"datum": S.datum_to_json(x), "tau": S.cone_to_json(tau)}, {"restricted": S.datum_to_json(y)}


def _cmd_vlambda(args, doc):
    x = _inner_datum(args, doc)
    lam = S.functional_from_json(doc["lambda"])
    return ({"datum": S.datum_to_json(x), "lambda": S.functional_to_json(lam)},
            {"v_lambda": S.rat(v_lambda(x, lam))})


def _cmd_heights(args, doc):
    x = _inner_datum(args, doc)
    lam = S.functional_from_json(doc["lambda"])
    echo = {"datum": S.datum_to_json(x), "lambda": S.functional_to_json(lam)}
    out = {"h_lambda": S.rat(h_lambda_as(x, lam))}
    if "U" in doc:
        U = [S.functional_from_json(u) for u in doc["U"]]
        echo["U"] = [S.functional_to_json(u) for u in U]
        out["h_U"] = S.rat(h_U_as(x, U))
    if "rays" in doc:
        echo["rays"] = doc["rays"]
        chk = height_splits_check(x, lam, _points_rays(doc["rays"]))
        out["splits"] = {"ok": chk.ok, "lhs": S.rat(chk.lhs), "rhs": S.rat(chk.rhs)}
    if x.cone.is_linear():
        out["c_lambda"] = S.rat(c_lambda_linear(x, lam))
    return echo, out


def _cmd_check_plimit(args, doc):
    f = _field(args, doc)
    cones = [S.cone_from_json(c) for c in doc["cones"]]
    target = S.cone_from_json(doc["target"])
    box = _box(args, doc)
    rep = check_p_limit_bounded(Diagram(tuple(cones), tuple(map(tuple, doc["arrows"]))), target, box, f.p)
    echo = {"p": f.p, "cones": [S.cone_to_json(c) for c in cones], "arrows": doc["arrows"],
            "target": S.cone_to_json(target), "box": box}
    return echo, {"ok": rep.ok, "missing": [list(v) for v in rep.missing],
                  "duplicated": [list(v) for v in rep.duplicated], "extra": [list(v) for v in rep.extra]}


def _cmd_check_map(args, doc):
    f = _field(args, doc)
    box = _box(args, doc)
    kind = doc["kind"]
    if kind == "katz":
        m = MapDescriptor.katz()
    else:
        src = S.cone_from_json(doc["source"]) if "source" in doc else None
        if kind == "identity":
            m = MapDescriptor.identity(src)
        elif kind == "inclusion":
            m = MapDescriptor.inclusion(src, S.cone_from_json(doc["target"]))
        else:
            m = MapDescriptor.completion(src, S.functional_from_json(doc["lambda"]))
    res = check_map_p_properties(m, box, f.p)
    echo = {"p": f.p, "kind": kind, "box": box, "source": S.cone_to_json(m.source),
            "target": S.cone_to_json(m.target)}
    if m.functional is not None:
        echo["lambda"] = S.functional_to_json(m.functional)
    return echo, {"p_injective": res.p_injective, "p_surjective": res.p_surjective,
                  "p_faithful": res.p_faithful, "killed": [list(v) for v in res.killed],
                  "uncovered": [list(v) for v in res.uncovered]}


def _cmd_census(args, doc):
    f = _field(args, doc)
    sigma = S.cone_from_json(doc["cone"])
    box = _box(args, doc)
    lam = S.functional_from_json(doc["lambda"]) if "lambda" in doc else None
    echo = {"p": f.p, "e": f.e, "cone": S.cone_to_json(sigma), "box": box}
    if lam is not None:
        echo["lambda"] = S.functional_to_json(lam)
    if args.format == "csv":
        return echo, census_report(sigma, box, f.p, f.e, lam, "csv")
    count = enumerate_as_classes(sigma, box, f.p, f.e).count
    return echo, {"count": count, "classes": json.loads(census_report(sigma, box, f.p, f.e, lam, "json"))}


def _cmd_splits2(args, doc):
    x = _inner_datum(args, doc)
    rays = _points_rays(doc["rays"])
    return ({"datum": S.datum_to_json(x), "rays": doc["rays"]},
            {"ok": verify_splits2_torsor(x, rays),
             "support_rays": [list(T.generator()) for T in rays_through_support(x)]})


HANDLERS = {
    "reduce-as": _cmd_reduce_as, "break": _cmd_break, "tower2-break": _cmd_tower2, "phi": _cmd_phi,
    "coker-nf": _cmd_coker_nf, "coker-basis": _cmd_coker_basis, "restrict": _cmd_restrict,
    "vlambda": _cmd_vlambda, "heights": _cmd_heights, "check-plimit": _cmd_check_plimit,
    "check-map": _cmd_check_map, "census": _cmd_census, "splits2-check": _cmd_splits2,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ptypical", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND")
    for name, helptext in SUBCOMMANDS.items():
        sp = sub.add_parser(name, help=helptext, description=helptext)
        sp.add_argument("input", nargs="?", help="inline JSON, a file path, or - for stdin")
        sp.add_argument("--p", type=int)
        sp.add_argument("--e", type=int)
        sp.add_argument("--window", help="series window lo,hi")
        sp.add_argument("--box", type=int)
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        if name == "phi":
            sp.add_argument("--m", action="append", help="break (repeatable)")
            sp.add_argument("--x")
    return parser


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    first = next((a for a in argv if not a.startswith("-")), None)
    if first is not None and first not in SUBCOMMANDS:
        print(f"ptypical: unknown subcommand {first!r}", file=err)
        return EXIT_UNKNOWN
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command is None:
        parser.print_help(out)
        return EXIT_INVALID
    try:
        doc = _load(args.input)
        if not isinstance(doc, dict):
            raise InputError("input must be a JSON object")
        if args.command == "phi":
            if args.m:
                doc["breakpoints"] = args.m
            if args.x is not None:
                doc["x"] = args.x
        _validate(args.command, doc)
        if args.format == "csv" and args.command != "census":
            raise InputError("--format csv is only available for census")
        echo, result = HANDLERS[args.command](args, doc)
    except PrecisionExhausted as exc:
        print(f"ptypical: precision exhausted: {exc}", file=err)
        return EXIT_PRECISION
    except (InputError, InstanceTooLarge, ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        print(f"ptypical: invalid input: {exc}", file=err)
        return EXIT_INVALID
    if isinstance(result, str):
        out.write(result)
    else:
        out.write(json.dumps({"command": args.command, "input": echo, "output": result},
                             sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def main() -> None:  # pragma: no cover
    sys.exit(run())
