"""Command line interface for qspec.

Subcommands
-----------
qdim      exact and numeric quantum dimensions of one highest weight
weights   weight multiplicity tables (pattern and recursive methods)
zeta      spectral zeta values over a list of exponents (JSON or CSV)
specdim   spectral-dimension estimate from the eigenvalue-ratio probe
residue   extrapolated residue of s -> zeta(p + s) at a target exponent
twisted   commutator-defect scan and trace consistency for the shift model
verify    run the named self-check suite (quick or full profile)

Exit codes: 0 success, 2 invalid input or domain error, 3 resource or
estimation failure, 4 verification failure.  All JSON output is
canonical: sorted keys, floats rendered with repr-precision %.17g, so
repeat runs are byte identical.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import DomainError, EstimationError, NonExactDivisionError, ResourceLimitError
from .oracle import (
    multiplicities_freudenthal,
    multiplicities_gt,
    resolve_pattern_cap,
)
from .qdim import quantum_dim, quantum_dim_numeric
from .modular import shift_model, twisted_defect_scan, twisted_trace_check
from .spectrum import (
    default_model,
    model_from_config,
    model_to_config,
    residue_limit,
    spectral_dimension_estimate,
    zeta,
)
from .verify import PROFILES, run_profile

__all__ = ["main"]

_WEIGHT_CHOICES = ("qdim", "qdim-inverse", "classical", "count")
_KERNEL_CHOICES = ("shifted", "pure")


# -- canonical serialization ----------------------------------------------


def _format_float(x: float) -> str:
    if x != x:
        return '"nan"'
    if x == float("inf"):
        return '"inf"'
    if x == float("-inf"):
        return '"-inf"'
    text = format(x, ".17g")
    # make floats self-identifying so round trips stay typed
    if "." not in text and "e" not in text and "E" not in text:
        text += ".0"
    return text


def _write_canonical(obj, out: list) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(_format_float(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for pos, key in enumerate(sorted(obj)):
            if not isinstance(key, str):
                raise TypeError(f"JSON object keys must be strings, got {key!r}")
            if pos:
                out.append(", ")
            out.append(json.dumps(key))
            out.append(": ")
            _write_canonical(obj[key], out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for pos, item in enumerate(obj):
            if pos:
                out.append(", ")
            _write_canonical(item, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__} canonically")


def dumps_canonical(obj) -> str:
    """Deterministic JSON: sorted keys, fixed float formatting."""
    out: list = []
    _write_canonical(obj, out)
    return "".join(out)


def _emit(text: str, path) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path:
        with open(path, "w", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


# -- shared argument plumbing ---------------------------------------------


def _parse_weight(text: str) -> tuple:
    try:
        coords = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise DomainError(f"weight must be comma-separated integers, got {text!r}") from exc
    return coords


def _parse_s_list(text: str) -> list:
    try:
        values = [float(part) for part in text.split(",")]
    except ValueError as exc:
        raise DomainError(f"--s must be comma-separated numbers, got {text!r}") from exc
    if not values:
        raise DomainError("--s needs at least one value")
    return values


def _add_model_args(sub) -> None:
    sub.add_argument("--ell", type=int, default=None, help="rank of the root system")
    sub.add_argument("--q", type=float, default=None, help="deformation parameter in (0, 1)")
    sub.add_argument("--N", type=int, default=None, help="twist level stored on the model")
    sub.add_argument("--config", default=None, help="JSON file with a full model description")


def _resolve_model(args):
    if args.config is not None:
        with open(args.config) as handle:
            cfg = json.load(handle)
        if args.ell is not None:
            cfg["ell"] = args.ell
        if args.q is not None:
            cfg["q"] = args.q
        if args.N is not None:
            cfg["N"] = args.N
        return model_from_config(cfg)
    if args.ell is None:
        raise DomainError("either --ell or --config is required")
    return default_model(args.ell, args.N or 0, args.q if args.q is not None else 0.5)


# -- subcommands -----------------------------------------------------------


def cmd_qdim(args) -> int:
    lam = _parse_weight(args.weight)
    result = quantum_dim(args.ell, lam)
    if args.classical:
        _emit(str(result.classical_value), args.output)
        return 0
    payload = {
        "ell": args.ell,
        "weight": list(lam),
        "classical": result.classical_value,
        "exact": result.exact.to_json_dict(),
        "leading_exponent": result.exact.leading_exponent(),
        "trailing_exponent": result.exact.trailing_exponent(),
    }
    if args.q is not None:
        payload["q"] = args.q
        payload["numeric"] = quantum_dim_numeric(args.ell, lam, args.q)
    _emit(dumps_canonical(payload), args.output)
    return 0


def cmd_weights(args) -> int:
    lam = _parse_weight(args.weight)
    cap = resolve_pattern_cap(args.cap)
    payload = {"ell": args.ell, "highest": list(lam), "method": args.method}
    if args.method == "gt":
        table = multiplicities_gt(args.ell, lam, cap=cap)
    elif args.method == "freudenthal":
        table = multiplicities_freudenthal(args.ell, lam)
    else:
        gt = multiplicities_gt(args.ell, lam, cap=cap)
        fr = multiplicities_freudenthal(args.ell, lam)
        if gt != fr:
            weights = sorted(set(gt.entries) | set(fr.entries))
            payload["mismatches"] = [
                {
                    "weight": list(mu),
                    "gt": gt.multiplicity(mu),
                    "freudenthal": fr.multiplicity(mu),
                }
                for mu in weights
                if gt.multiplicity(mu) != fr.multiplicity(mu)
            ]
            _emit(dumps_canonical(payload), args.output)
            return 4
        table = gt
    payload["table"] = table.to_json_dict()
    payload["total"] = table.total()
    _emit(dumps_canonical(payload), args.output)
    return 0


def cmd_zeta(args) -> int:
    model = _resolve_model(args)
    svals = _parse_s_list(args.s)
    results = []
    for s in svals:
        res = zeta(
            model, s, weight=args.weight, kernel=args.kernel,
            tol=args.tol, max_terms=args.max_terms,
        )
        results.append((s, res))
    if args.format == "csv":
        rows = ["s,value,terms_used,tail_estimate"]
        for s, res in results:
            rows.append(
                f"{format(s, '.17g')},{format(res.value, '.17g')},"
                f"{res.terms_used},{format(res.tail_estimate, '.17g')}"
            )
        _emit("\n".join(rows), args.output)
        return 0
    payload = {
        "kernel": args.kernel,
        "weight": args.weight,
        "model": model_to_config(model),
        "results": [dict(res.to_json_dict(), s=s) for s, res in results],
    }
    _emit(dumps_canonical(payload), args.output)
    return 0


def cmd_specdim(args) -> int:
    model = _resolve_model(args)
    estimate = spectral_dimension_estimate(
        model, weight=args.weight, kernel=args.kernel,
        probe_s=args.probe_s, max_terms=args.max_terms,
    )
    payload = {
        "ell": model.ell,
        "q": model.q.q,
        "weight": args.weight,
        "kernel": args.kernel,
        "estimate": estimate,
    }
    _emit(dumps_canonical(payload), args.output)
    return 0


def cmd_residue(args) -> int:
    model = _resolve_model(args)
    res = residue_limit(
        model, args.p, weight=args.weight, kernel=args.kernel,
        tol=args.tol, max_terms=args.max_terms,
    )
    payload = dict(res.to_json_dict(), ell=model.ell, q=model.q.q,
                   weight=args.weight, kernel=args.kernel)
    _emit(dumps_canonical(payload), args.output)
    return 0


def cmd_twisted(args) -> int:
    model = shift_model(args.size, args.q, args.p)
    svals = _parse_s_list(args.s)
    scan = twisted_defect_scan(model, svals)
    checks = []
    for s in svals:
        lhs, rhs = twisted_trace_check(model, s)
        checks.append({"s": s, "lhs": lhs, "rhs": rhs, "gap": abs(lhs - rhs)})
    payload = {
        "size": args.size,
        "q": args.q,
        "p": args.p,
        "scan": [{"s": s, "defect": d} for s, d in scan],
        "trace_checks": checks,
    }
    _emit(dumps_canonical(payload), args.output)
    return 0


def cmd_verify(args) -> int:
    report, ok = run_profile(args.profile)
    _emit(report, args.output)
    return 0 if ok else 4


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qspec",
        description="quantum dimensions, spectral zeta models and twisted traces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qdim", help="quantum dimension of a highest weight")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--weight", required=True, help="comma-separated coordinates")
    p.add_argument("--q", type=float, default=None, help="also evaluate at this q")
    p.add_argument("--classical", action="store_true", help="print only the integer dimension")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_qdim)

    p = sub.add_parser("weights", help="weight multiplicity table")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--method", choices=("gt", "freudenthal", "both"), default="both")
    p.add_argument("--cap", type=int, default=None, help="pattern enumeration limit")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("zeta", help="zeta values over a list of exponents")
    _add_model_args(p)
    p.add_argument("--s", required=True, help="comma-separated exponents")
    p.add_argument("--weight", choices=_WEIGHT_CHOICES, default="qdim")
    p.add_argument("--kernel", choices=_KERNEL_CHOICES, default="shifted")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-terms", type=int, default=200_000)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("specdim", help="spectral dimension estimate")
    _add_model_args(p)
    p.add_argument("--weight", choices=_WEIGHT_CHOICES, default="qdim")
    p.add_argument("--kernel", choices=_KERNEL_CHOICES, default="shifted")
    p.add_argument("--probe-s", type=float, default=None)
    p.add_argument("--max-terms", type=int, default=200_000)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_specdim)

    p = sub.add_parser("residue", help="residue of the zeta function at an exponent")
    _add_model_args(p)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--weight", choices=_WEIGHT_CHOICES, default="qdim")
    p.add_argument("--kernel", choices=_KERNEL_CHOICES, default="shifted")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--max-terms", type=int, default=200_000)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_residue)

    p = sub.add_parser("twisted", help="twisted-trace defect scan for the shift model")
    p.add_argument("--size", type=int, default=120)
    p.add_argument("--q", type=float, default=0.5)
    p.add_argument("--p", type=float, default=4.0)
    p.add_argument("--s", required=True, help="comma-separated exponents above p")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_twisted)

    p = sub.add_parser("verify", help="run the self-check suite")
    p.add_argument("--profile", choices=PROFILES, default="quick")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, NonExactDivisionError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ResourceLimitError, EstimationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
