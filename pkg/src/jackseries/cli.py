"""Command-line entry point: ``jackseries <subcommand> [flags]``.

Every run prints one JSON document (or CSV / a plain table) whose header
echoes the resolved configuration and the floating precision in use.
Exit codes: 0 success, 1 usage error, 2 domain error, 3 failed checks
(``selftest`` and ``dunkl-check`` only).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import acceptance
from .branching import CertificationError, certify, scan_restriction, scan_tensor
from .combinatorics import enumerate_partitions, format_partition, parse_partition
from .domains import DomainError, make_domain
from .dunkl import invariant_norm
from .hypergeo import EXTENDED_DPS, DivergentSeriesError, PoleError, SeriesParams, hyper_at_one, hyper_eval
from .jack import jack_J
from .norms import InvariantLabel, LabelError, bergman_norm, fock_norm
from .spherical import SphericalSpec, lambda_of_sigma, spherical_radial

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_CHECKS = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _rational_list(text: str) -> list:
    text = text.strip()
    return [] if not text else [_rational(v) for v in text.split(",")]


def _float_list(text: str) -> list:
    return [float(v) for v in text.split(",") if v.strip()]


def _nu_values(text: str) -> list:
    """``"2"`` or ``"start:stop:step"`` (stop inclusive)."""
    if ":" not in text:
        return [_rational(text)]
    start, stop, step = (_rational(v) for v in text.split(":"))
    if step <= 0:
        raise argparse.ArgumentTypeError("nu step must be positive")
    out, v = [], start
    while v <= stop:
        out.append(v)
        v += step
    return out


def _domain_flags(p):
    p.add_argument("--family", required=True, help="BCxBC (SU), A, BC (Sp), B1 (SO), B2, D1, D2")
    p.add_argument("--l", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--a", type=_rational)
    p.add_argument("--two-b", type=_rational)
    p.add_argument("--params", default="", help="alternative form, e.g. 'l=5,r=2'")


def _domain(args):
    params = {"l": args.l, "r": args.r, "a": args.a, "two_b": args.two_b}
    for item in filter(None, (s.strip() for s in args.params.split(","))):
        if "=" not in item:
            raise UsageError(f"bad --params entry {item!r}")
        key, val = item.split("=", 1)
        key = key.strip().replace("-", "_")
        if key not in params:
            raise UsageError(f"unknown domain parameter {key!r}")
        params[key] = int(val) if key in ("l", "r") else _rational(val)
    return make_domain(args.family, **params)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("--precision", choices=("double", "extended"), default="double")
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="jackseries", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="domain descriptor")
    _domain_flags(p)

    p = sub.add_parser("jack", parents=[common], help="Jack polynomial coefficient table")
    p.add_argument("--partition", required=True)
    p.add_argument("--alpha", type=_rational, required=True)
    p.add_argument("--rank", type=int, help="number of variables (default: the weight)")

    p = sub.add_parser("hyper", parents=[common], help="hypergeometric series")
    p.add_argument("--alpha", type=_rational_list, required=True)
    p.add_argument("--beta", type=_rational_list, default=[])
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--mult-a", type=_rational, required=True)
    p.add_argument("--t", type=_float_list)
    p.add_argument("--max-degree", type=int, default=60)
    p.add_argument("--at-one", action="store_true")
    p.add_argument("--tail-tol", type=float)

    p = sub.add_parser("spherical", parents=[common], help="radial spherical function")
    _domain_flags(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--sigma", type=_rational)
    g.add_argument("--lambda", dest="i_lambda", type=_rational, help="the real number i*lambda")
    p.add_argument("--t", type=_float_list, required=True)
    p.add_argument("--max-degree", type=int, default=40)
    p.add_argument("--tail-tol", type=float)

    p = sub.add_parser("norm", parents=[common], help="Fock and Bergman norm squares")
    _domain_flags(p)
    p.add_argument("--partition", required=True)
    p.add_argument("--parity", type=int, default=0)
    p.add_argument("--nu", type=_rational)

    p = sub.add_parser("scan", parents=[common], help="discrete components in branching")
    p.add_argument("--setting", choices=("tensor", "restriction"), required=True)
    p.add_argument("--hkind", choices=("SO", "Sp"))
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--nu", type=_nu_values, required=True)
    p.add_argument("--k-max", type=int, default=8)
    p.add_argument("--max-degree", type=int, default=120)
    p.add_argument("--tail-tol", type=float, default=1e-10)

    p = sub.add_parser("dunkl-check", parents=[common], help="Dunkl oracle vs closed-form norms")
    p.add_argument("--max-weight", type=int, default=3)

    sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    return parser


def _config(args) -> dict:
    out = {}
    for key, val in sorted(vars(args).items()):
        if isinstance(val, Fraction):
            val = str(val)
        elif isinstance(val, list):
            val = [str(v) if isinstance(v, Fraction) else v for v in val]
        out[key] = val
    return out


def _precision(args) -> dict:
    if args.precision == "extended":
        return {"mode": "extended", "decimal_digits": EXTENDED_DPS}
    return {"mode": "double", "decimal_digits": 15}


def cmd_classify(args):
    return _domain(args).to_json()


def cmd_jack(args):
    m = parse_partition(args.partition)
    poly = jack_J(m, args.alpha, args.rank or max(sum(m), 1))
    return {
        "partition": format_partition(m),
        "alpha": str(args.alpha),
        "rank": poly.nvars,
        "coeffs": {format_partition(mu): str(c) for mu, c in poly.coeffs.items()},
    }


def cmd_hyper(args):
    params = SeriesParams(args.alpha, args.beta, args.rank, args.mult_a)
    if args.at_one:
        res = hyper_at_one(params, args.max_degree, args.tail_tol if args.tail_tol is not None else 1e-12,
                           args.precision)
    else:
        t = args.t if args.t is not None else [0.0] * args.rank
        res = hyper_eval(params, t, args.max_degree, args.precision, args.tail_tol)
    return res.to_json()


def cmd_spherical(args):
    dom = _domain(args)
    spec = SphericalSpec(dom, args.sigma) if args.sigma is not None else SphericalSpec.from_lambda(dom, args.i_lambda)
    res = spherical_radial(spec, args.t, args.max_degree, args.precision, args.tail_tol)
    return {"sigma": str(spec.exact_sigma), "lambda": lambda_of_sigma(dom, spec.exact_sigma).to_json(),
            "family": dom.family, "result": res.to_json()}


def cmd_norm(args):
    dom = _domain(args)
    label = InvariantLabel.of(dom, parse_partition(args.partition), args.parity)
    out = {"family": dom.family, "m": format_partition(label.m), "n": format_partition(label.n),
           "parity": label.parity, "fock": str(fock_norm(dom, label))}
    if args.nu is not None:
        try:
            out["bergman"] = str(bergman_norm(dom, label, args.nu))
        except ZeroDivisionError as exc:
            raise DomainError(str(exc)) from exc
        out["nu"] = str(args.nu)
    return out


def cmd_scan(args):
    if args.setting == "restriction" and args.hkind is None:
        raise UsageError("--hkind is required for the restriction setting")
    rows, reasons = [], {}
    for nu in args.nu:
        if args.setting == "tensor":
            certs = scan_tensor(args.l, args.r, nu, args.k_max)
        else:
            certs = scan_restriction(args.hkind, args.l, args.r, nu, args.k_max)
        if certs.reason:
            reasons[str(nu)] = certs.reason
        for c in certs:
            rows.append(certify(c, args.max_degree, args.tail_tol, args.precision).to_json())
    return {"certificates": rows, "empty_reasons": reasons}


def cmd_dunkl_check(args):
    rows = []
    doms = acceptance.dunkl_domains() + [make_domain("D1", r=2), make_domain("D1", r=3)]
    for dom in doms:
        for n in range(args.max_weight + 1):
            for m in enumerate_partitions(n, dom.rank):
                for parity in ((0, 1) if dom.family == "D" else (0,)):
                    oracle = invariant_norm(dom, m, parity)
                    closed = fock_norm(dom, InvariantLabel.of(dom, m, parity))
                    rows.append({"kind": dom.kind, "rank": dom.rank, "params": {k: str(v) for k, v in dom.params.items()},
                                 "m": format_partition(m), "parity": parity, "oracle": str(oracle),
                                 "closed_form": str(closed), "pass": oracle == closed})
    return {"rows": rows, "all_pass": all(r["pass"] for r in rows)}


def cmd_selftest(args):
    results = acceptance.run_all()
    return {"criteria": [{"number": r.number, "name": r.name, "pass": r.passed, "detail": _strip_time(r.detail)}
                         for r in results],
            "all_pass": all(r.passed for r in results),
            "_lines": [r.line() for r in results]}


def _strip_time(detail: str) -> str:
    # wall-clock numbers would break byte-identical output
    import re
    return re.sub(r",? ?\d+\.\d+s(?= \(limit)", "", detail)


COMMANDS = {
    "classify": cmd_classify, "jack": cmd_jack, "hyper": cmd_hyper, "spherical": cmd_spherical,
    "norm": cmd_norm, "scan": cmd_scan, "dunkl-check": cmd_dunkl_check, "selftest": cmd_selftest,
}


def _render(args, payload) -> str:
    lines = payload.pop("_lines", None) if isinstance(payload, dict) else None
    if args.format == "pretty":
        if lines:
            return "\n".join(lines) + "\n"
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.format == "csv":
        rows = None
        if isinstance(payload, dict):
            rows = payload.get("certificates") or payload.get("rows") or payload.get("criteria")
        if rows is None:
            rows = [payload]
        buf = io.StringIO()
        flat = [{k: (json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v) for k, v in row.items()}
                for row in rows]
        fields = sorted({k for row in flat for k in row})
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(flat)
        return buf.getvalue()
    doc = {"config": _config(args), "precision": _precision(args), "result": payload}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        payload = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, LabelError, DivergentSeriesError, PoleError, CertificationError,
            ValueError, NotImplementedError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    out.write(_render(args, payload))
    if args.command in ("selftest", "dunkl-check") and not payload.get("all_pass", False):
        return EXIT_CHECKS
    return EXIT_OK


def main():
    sys.exit(run())
