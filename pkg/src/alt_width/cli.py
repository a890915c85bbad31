"""``alt-width`` command line.

Exit codes: 0 success, 1 verification failure or unreachable target, 2 usage
or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions, metrics, oracle
from .errors import AltWidthError, ParityObstruction
from .perm import (
    CycleType,
    conjugate,
    cycle_type,
    format_cycles,
    inverse,
    parity,
    parse_cycles,
    product,
    word_length,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _perm(text: str):
    return parse_cycles(text)


def _class(text: str) -> metrics.ClassId:
    # Either cycle notation or a "+"-joined cycle type.
    if text.strip().startswith("("):
        return metrics.ClassId(cycle_type(parse_cycles(text)))
    return metrics.ClassId(CycleType.parse(text))


def cmd_lambda(args) -> int:
    p = _perm(args.perm)
    wl = word_length(p)
    _emit(
        args,
        {"permutation": format_cycles(p), "word_length": wl, "cycle_type": str(cycle_type(p)), "parity": parity(p).value},
        str(wl),
    )
    return EXIT_OK


def cmd_compose(args) -> int:
    p = product(_perm(t) for t in args.perms)
    _emit(args, {"result": format_cycles(p)}, format_cycles(p))
    return EXIT_OK


def cmd_inverse(args) -> int:
    p = inverse(_perm(args.perm))
    _emit(args, {"result": format_cycles(p)}, format_cycles(p))
    return EXIT_OK


def cmd_conjugate(args) -> int:
    p = conjugate(_perm(args.perm), _perm(args.by))
    _emit(args, {"result": format_cycles(p)}, format_cycles(p))
    return EXIT_OK


def cmd_decompose(args) -> int:
    g, h = _perm(args.g), _perm(args.h)
    try:
        cert = constructions.decompose(g, h)
    except ParityObstruction as e:
        print(f"unreachable (parity): {e}", file=sys.stderr)
        return EXIT_FAIL
    report = constructions.verify_certificate(cert)
    if args.json:
        print(cert.to_json())
    else:
        print(f"target {format_cycles(g)} over class {cycle_type(h)}: {report.count} factors (bound {report.bound})")
        for f in cert.factors:
            print(format_cycles(f))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.file in (None, "-"):
        text = sys.stdin.read()
    else:
        text = Path(args.file).read_text(encoding="utf-8")
    try:
        cert = constructions.Certificate.from_json(text)
    except (ValueError, KeyError, TypeError) as e:
        print(f"error: malformed certificate: {e}", file=sys.stderr)
        return EXIT_USAGE
    report = constructions.verify_certificate(cert)
    _emit(
        args,
        report.to_dict(),
        f"{'PASS' if report.passed else 'FAIL'}: product {'ok' if report.product_ok else 'mismatch'}, "
        f"types {'ok' if report.types_ok else 'mismatch'}, count {report.count}, bound {report.bound}, "
        f"within bound {report.within_bound}",
    )
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_oracle(args) -> int:
    g, h = _perm(args.g), _perm(args.h)
    if args.universe is None:
        universe = oracle.default_universe(g, h, args.max_depth)
    else:
        universe = oracle.UniverseSpec(args.universe, args.max_depth)
    res = oracle.exact_lambda(g, h, universe)
    payload = {
        "value": res.value,
        "reason": res.reason or None,
        "universe": universe.n,
        "max_depth": universe.max_depth,
        "stabilized": res.stabilized,
        "witness": [format_cycles(f) for f in res.witness],
    }
    if res.reachable:
        _emit(args, payload, str(res.value))
        return EXIT_OK
    _emit(args, payload, f"unreachable ({res.reason})")
    return EXIT_FAIL


def cmd_d_bounds(args) -> int:
    g, h = _class(args.g), _class(args.h)
    b = metrics.d_bounds(g, h)

    def iv(x: metrics.BoundsInterval):
        return {"lower": str(x.lower), "upper": str(x.upper), "upper_source": x.upper_source}

    _emit(
        args,
        {"class_g": str(g), "class_h": str(h), "g_by_h": iv(b.g_by_h), "h_by_g": iv(b.h_by_g),
         "d_lower": b.d_lower, "d_upper": b.d_upper},
        f"d([{g}],[{h}]) in [{b.d_lower:.12g}, {b.d_upper:.12g}]",
    )
    return EXIT_OK


def cmd_experiment(args) -> int:
    res = metrics.experiment_quasi_isometry(args.count, args.lambda_min, args.lambda_max, args.seed)
    if args.out:
        Path(args.out).write_text(res.to_csv(), encoding="utf-8")
    if args.json:
        print(res.to_json(sort_keys=True))
    else:
        s = res.summary()
        print(f"pairs {s['pair_count']} seed {s['seed']} max_gap {s['max_gap']:.12g} "
              f"(limit log 8 = {metrics.QI_CONSTANT:.12g}): {'PASS' if res.passed else 'FAIL'}")
    return EXIT_OK if res.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="alt-width", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lambda", parents=[common], help="word length of a permutation")
    p.add_argument("perm")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("compose", parents=[common], help="product, rightmost factor applied first")
    p.add_argument("perms", nargs="+")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("inverse", parents=[common])
    p.add_argument("perm")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("conjugate", parents=[common], help="BY * PERM * BY^-1")
    p.add_argument("perm")
    p.add_argument("by")
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("decompose", parents=[common], help="certificate writing g as conjugates of h")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="check a certificate JSON file (or stdin)")
    p.add_argument("file", nargs="?")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="exact width by exhaustive search")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--universe", type=int)
    p.add_argument("--max-depth", type=int, default=oracle.DEFAULT_MAX_DEPTH)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("d-bounds", parents=[common], help="interval for the class distance")
    p.add_argument("--g", required=True, help="cycle notation or cycle type such as 3+2+2")
    p.add_argument("--h", required=True)
    p.set_defaults(func=cmd_d_bounds)

    p = sub.add_parser("experiment", parents=[common], help="sampled quasi-isometry check")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--lambda-min", type=int, default=2)
    p.add_argument("--lambda-max", type=int, default=4096)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--out", help="CSV output path")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except AltWidthError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
