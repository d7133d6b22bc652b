"""Command-line front end.

Verbs: info, classify, bounds, obstruct, family, scan, project.  Output is
JSON by default (--output text renders the same fields as key: value
lines).  Exit codes: 0 success, 2 domain/precondition failures (structured
error on stdout), 64 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any

from . import bounds as bounds_mod
from . import families as families_mod
from .classify import project_by_n, type_verdict
from .core import (DEFAULT_GENUS_CAP, NumericalSemigroup, descendants,
                   enumerate_genus_range, format_semigroup, natural_gamma,
                   parse_semigroup)
from .errors import CapExceeded, SemigroupError, UnknownPredicate, WrongShape
from .obstruction import (NOT_WEIERSTRASS, gap_sum_profile, pair_sum_extras,
                          pairing_obstruction)

GAP_LIST_CAP = 512
EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_USAGE = 64

PREDICATES = ("bc_fail", "symmetric", "quasi_symmetric", "obstruction")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exits with code 2
        raise _UsageError(message)


def _genus_cap() -> int:
    raw = os.environ.get("SGP_GENUS_CAP")
    if raw is None:
        return DEFAULT_GENUS_CAP
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"SGP_GENUS_CAP must be an integer, got {raw!r}")


def _gap_list(H: NumericalSemigroup) -> dict[str, Any]:
    payload: dict[str, Any] = {"gaps": list(H.gaps[:GAP_LIST_CAP])}
    if H.genus > GAP_LIST_CAP:
        payload["gaps_truncated"] = True
        payload["gaps_omitted"] = H.genus - GAP_LIST_CAP
    return payload


def _semigroup_json(H: NumericalSemigroup) -> dict[str, Any]:
    out: dict[str, Any] = {"genus": H.genus, "frobenius": H.frobenius,
                           "conductor": H.conductor}
    out.update(_gap_list(H))
    out["min_gens"] = list(H.min_generators)
    return out


def _verdict_json(H: NumericalSemigroup, N: int, gamma: int) -> dict[str, Any]:
    v = type_verdict(H, N, gamma)
    return {"N": v.N, "gamma": v.gamma, "cond_a": v.cond_a, "cond_b": v.cond_b,
            "cond_c": v.cond_c, "is_type": v.is_type, "gamma_N": v.gamma_n}


def _render_text(payload: Any, indent: str = "") -> str:
    lines = []
    if isinstance(payload, dict):
        for key, value in payload.items():
            if isinstance(value, dict) or (
                    isinstance(value, list) and value and isinstance(value[0], dict)):
                lines.append(f"{indent}{key}:")
                lines.append(_render_text(value, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {json.dumps(value)}")
    elif isinstance(payload, list):
        for value in payload:
            lines.append(_render_text(value, indent))
    else:
        lines.append(f"{indent}{json.dumps(payload)}")
    return "\n".join(lines)


def _emit(payload: Any, mode: str) -> None:
    if mode == "json":
        print(json.dumps(payload))
    else:
        print(_render_text(payload))


def _build_parser() -> _Parser:
    parser = _Parser(prog="sgp", description=__doc__)
    parser.add_argument("--output", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="verb", required=True)

    p_info = sub.add_parser("info", help="summarize a semigroup")
    p_info.add_argument("spec")

    p_classify = sub.add_parser("classify", help="type-(N, gamma) verdict")
    p_classify.add_argument("spec")
    p_classify.add_argument("--N", type=int, required=True)
    p_classify.add_argument("--gamma", type=int, default=None,
                            help="defaults to the natural gamma for N")

    p_bounds = sub.add_parser("bounds", help="evaluate a named bound")
    p_bounds.add_argument("action", choices=("eval",))
    p_bounds.add_argument("name")
    p_bounds.add_argument("args", nargs="*")

    p_obstruct = sub.add_parser("obstruct", help="gap-sum profile")
    p_obstruct.add_argument("spec")
    p_obstruct.add_argument("--n", type=int, default=2)
    p_obstruct.add_argument("--explain", action="store_true",
                            help="list the pairwise sums beyond the baseline")

    p_family = sub.add_parser("family", help="generate a family instance")
    p_family.add_argument("name", choices=("buchweitz", "cover", "sharp",
                                           "extremal", "spurious"))
    p_family.add_argument("--params", nargs="*", default=[], metavar="k=v")
    p_family.add_argument("--emit", choices=("gaps", "gens"), default="gaps")
    p_family.add_argument("--bump-g", action="store_true", dest="bump_g",
                          help="cover only: retry with g+1 when 2g-f is divisible by N")

    p_scan = sub.add_parser("scan", help="stream semigroups matching a predicate")
    p_scan.add_argument("--genus", required=True,
                        help="a single genus G or an inclusive range LO..HI")
    p_scan.add_argument("--predicate", required=True,
                        help="bc_fail | type:N,GAMMA | symmetric | quasi_symmetric | obstruction")
    p_scan.add_argument("--n", type=int, default=2, help="sum length for bc_fail")
    p_scan.add_argument("--parallelism", type=int, default=1)

    p_project = sub.add_parser("project", help="project a type-(N, gamma) semigroup")
    p_project.add_argument("spec")
    p_project.add_argument("--N", type=int, required=True)
    p_project.add_argument("--gamma", type=int, default=None)
    return parser


def _cmd_info(args) -> dict[str, Any]:
    return _semigroup_json(parse_semigroup(args.spec))


def _cmd_classify(args) -> dict[str, Any]:
    H = parse_semigroup(args.spec)
    gamma = args.gamma if args.gamma is not None else natural_gamma(H, args.N)
    return _verdict_json(H, args.N, gamma)


def _cmd_bounds(args) -> dict[str, Any]:
    name = args.name
    if name == "coprime_lower":
        if len(args.args) != 2:
            raise _UsageError("coprime_lower takes a semigroup spec and N")
        H = parse_semigroup(args.args[0])
        n = int(args.args[1])
        value = bounds_mod.coprime_lower_bound(H, n)  # re-checks every element
        report = bounds_mod.BoundReport("coprime_lower",
                                        (H.genus, natural_gamma(H, n), n), value,
                                        hypothesis_met=True)
    else:
        try:
            int_args = [int(a) for a in args.args]
        except ValueError:
            raise _UsageError("bound arguments must be integers")
        try:
            report = bounds_mod.evaluate(name, int_args)
        except ValueError as exc:
            raise _UsageError(str(exc))
    return {"name": report.name, "arguments": list(report.arguments),
            "value": report.value, "hypothesis_met": report.hypothesis_met}


def _cmd_obstruct(args) -> dict[str, Any]:
    H = parse_semigroup(args.spec)
    profile = gap_sum_profile(H, args.n)
    out: dict[str, Any] = {"n": profile.n, "cardinality": profile.cardinality,
                           "bound": profile.bc_bound, "passes_bc": profile.passes_bc,
                           "lambda": profile.excess}
    if args.explain:
        out["extra_sums"] = list(pair_sum_extras(H)) if args.n == 2 else None
    return out


def _parse_params(tokens: list[str]) -> dict[str, str]:
    params = {}
    for token in tokens:
        if "=" not in token:
            raise _UsageError(f"params must look like k=v, got {token!r}")
        key, value = token.split("=", 1)
        params[key] = value
    return params


def _int_param(params: dict[str, str], key: str) -> int:
    if key not in params:
        raise _UsageError(f"missing family parameter {key}")
    try:
        return int(params[key])
    except ValueError:
        raise _UsageError(f"parameter {key} must be an integer, got {params[key]!r}")


def _cmd_family(args) -> dict[str, Any]:
    params = _parse_params(args.params)
    name = args.name
    if name == "buchweitz":
        a = _int_param(params, "a") if "a" in params else None
        result = families_mod.buchweitz_family(_int_param(params, "g"),
                                               _int_param(params, "i"), a)
    elif name == "cover":
        if "htilde" not in params:
            raise _UsageError("cover needs htilde=<semigroup spec>")
        htilde = parse_semigroup(params["htilde"])
        n = _int_param(params, "N")
        g = _int_param(params, "g")
        f = _int_param(params, "f")
        if args.bump_g and (2 * g - f) % n == 0:
            g += 1
        result = families_mod.cover_family(htilde, n, g, f)
    elif name == "sharp":
        result = families_mod.superelliptic_sharp(_int_param(params, "N"),
                                                  _int_param(params, "gamma"),
                                                  _int_param(params, "g"))
    elif name == "extremal":
        result = families_mod.superelliptic_extremal(_int_param(params, "N"),
                                                     _int_param(params, "gamma"))
    else:
        result = families_mod.superelliptic_spurious(_int_param(params, "N"),
                                                     _int_param(params, "gamma"),
                                                     _int_param(params, "A"),
                                                     _int_param(params, "t"),
                                                     _int_param(params, "g"))
    H = result.semigroup
    return {
        "family": result.family,
        "params": result.params,
        "semigroup": format_semigroup(H, args.emit),
        "genus": H.genus,
        "frobenius": H.frobenius,
        "claims": [{"name": c.name, "expected": _jsonable(c.expected),
                    "observed": _jsonable(c.observed), "holds": c.holds}
                   for c in result.claims],
        "diagnostics": {k: _jsonable(v) for k, v in result.diagnostics.items()},
    }


def _jsonable(value: Any) -> Any:
    if isinstance(value, NumericalSemigroup):
        return format_semigroup(value)
    return value


def _parse_genus_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
    else:
        lo_text = hi_text = text
    if not (lo_text.isdigit() and hi_text.isdigit()):
        raise _UsageError(f"bad genus range {text!r}")
    lo, hi = int(lo_text), int(hi_text)
    if lo > hi:
        raise _UsageError(f"bad genus range {text!r}")
    return lo, hi


def _predicate_fn(spec: str, n: int):
    if spec.startswith("type:"):
        body = spec[5:].split(",")
        if len(body) != 2:
            raise UnknownPredicate(f"bad type predicate {spec!r}")
        try:
            type_n, type_gamma = int(body[0]), int(body[1])
        except ValueError:
            raise UnknownPredicate(f"bad type predicate {spec!r}")
        return lambda H: type_verdict(H, type_n, type_gamma).is_type
    if spec == "bc_fail":
        return lambda H: H.genus >= 2 and not gap_sum_profile(H, n).passes_bc
    if spec == "symmetric":
        return lambda H: H.genus >= 1 and H.frobenius == 2 * H.genus - 1
    if spec == "quasi_symmetric":
        return lambda H: H.genus >= 1 and H.frobenius == 2 * H.genus - 2
    if spec == "obstruction":
        def matches(H: NumericalSemigroup) -> bool:
            try:
                return pairing_obstruction(H) == NOT_WEIERSTRASS
            except WrongShape:
                return False
        return matches
    raise UnknownPredicate(f"unknown predicate {spec!r}")


def _scan_worker(payload: tuple[tuple[int, ...], int, int, str, int]):
    root_gaps, lo, hi, pred_spec, n = payload
    predicate = _predicate_fn(pred_spec, n)
    scanned = 0
    rows = []
    for H in descendants(NumericalSemigroup(root_gaps), hi):
        if H.genus < lo:
            continue
        scanned += 1
        if predicate(H):
            rows.append((H.genus, H.gaps))
    return scanned, rows


def _cmd_scan(args, mode: str) -> int:
    lo, hi = _parse_genus_range(args.genus)
    cap = _genus_cap()
    if hi > cap:
        raise CapExceeded(f"genus {hi} exceeds cap {cap} (set SGP_GENUS_CAP to raise)")
    _predicate_fn(args.predicate, args.n)  # fail fast on bad predicate
    workers = max(1, args.parallelism)
    scanned = 0
    rows: list[tuple[int, tuple[int, ...]]] = []
    shard_depth = min(hi, 5)
    if workers == 1 or shard_depth < 1:
        scanned, rows = _scan_worker(((), lo, hi, args.predicate, args.n))
    else:
        # nodes above the shard depth are handled inline, subtrees fan out
        if lo < shard_depth:
            predicate = _predicate_fn(args.predicate, args.n)
            for H in descendants(NumericalSemigroup(), shard_depth - 1):
                if H.genus >= lo:
                    scanned += 1
                    if predicate(H):
                        rows.append((H.genus, H.gaps))
        roots = [H.gaps for H in enumerate_genus_range(shard_depth, shard_depth, cap)]
        payloads = [(gaps, max(lo, shard_depth), hi, args.predicate, args.n)
                    for gaps in roots]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part_scanned, part_rows in pool.map(_scan_worker, payloads):
                scanned += part_scanned
                rows.extend(part_rows)
    rows.sort()
    for genus, gaps in rows:
        H = NumericalSemigroup(gaps)
        line: dict[str, Any] = {"genus": genus}
        line.update(_gap_list(H))
        line["min_gens"] = list(H.min_generators)
        _emit(line, mode)
    _emit({"summary": True, "predicate": args.predicate, "genus": [lo, hi],
           "scanned": scanned, "matched": len(rows)}, mode)
    return EXIT_OK


def _cmd_project(args) -> dict[str, Any]:
    H = parse_semigroup(args.spec)
    gamma = args.gamma if args.gamma is not None else natural_gamma(H, args.N)
    return _semigroup_json(project_by_n(H, args.N, gamma))


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(json.dumps({"error": {"name": "Usage", "message": str(exc)}}),
              file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.verb == "scan":
            return _cmd_scan(args, args.output)
        handler = {"info": _cmd_info, "classify": _cmd_classify,
                   "bounds": _cmd_bounds, "obstruct": _cmd_obstruct,
                   "family": _cmd_family, "project": _cmd_project}[args.verb]
        _emit(handler(args), args.output)
        return EXIT_OK
    except _UsageError as exc:
        print(json.dumps({"error": {"name": "Usage", "message": str(exc)}}),
              file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(json.dumps({"error": {"name": "Usage", "message": str(exc)}}),
              file=sys.stderr)
        return EXIT_USAGE
    except UnknownPredicate as exc:
        print(json.dumps({"error": {"name": exc.name, "message": str(exc)}}),
              file=sys.stderr)
        return EXIT_USAGE
    except SemigroupError as exc:
        print(json.dumps({"error": {"name": exc.name, "message": str(exc)}}))
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
