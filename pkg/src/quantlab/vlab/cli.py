"""Command-line interface.

Subcommands:
    verify      check one (m, n) pair (polynomial or ladder integral)
    sweep       check every pair with m + n up to a bound
    quantize    quantize a classical expression under one scheme
    commutator  commutator of the quantized Hamiltonian and integral

Exit codes: 0 when every checked claim holds, 1 on verification failure
(with a machine-readable failure list on stderr), 2 on usage or parse
errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from quantlab.generators import OscillatorParams, hamiltonian, k_integral
from quantlab.quantizer import Scheme, quantize
from quantlab.weylalgebra import commutator, differential_text
from quantlab.vlab import report
from quantlab.vlab.parser import ParseError, parse_polynomial
from quantlab.vlab.verify import failed_claims, sweep, verify_ladder_pair, verify_pair

_SCHEMES = {"bj": Scheme.BORN_JORDAN, "weyl": Scheme.WEYL}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quantlab",
        description="Exact Born-Jordan vs Weyl quantization checks for the "
        "superintegrable 2D anisotropic oscillator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="verify one (m, n) pair")
    p_verify.add_argument("--m", type=int, required=True)
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--target", choices=("k", "f1", "f2"), default="k")
    p_verify.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p_verify.set_defaults(func=_cmd_verify)

    p_sweep = sub.add_parser("sweep", help="verify all pairs with m + n <= bound")
    p_sweep.add_argument("--max-sum", type=int, required=True)
    p_sweep.add_argument("--target", choices=("k", "f"), default="k")
    p_sweep.add_argument("--format", choices=("text", "json"), default="text")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_quantize = sub.add_parser("quantize", help="quantize a classical expression")
    p_quantize.add_argument("--scheme", choices=("bj", "weyl"), required=True)
    p_quantize.add_argument("--expr", required=True)
    p_quantize.add_argument("--format", choices=("text", "json"), default="text")
    p_quantize.set_defaults(func=_cmd_quantize)

    p_comm = sub.add_parser(
        "commutator", help="commutator of quantized H and K for one pair"
    )
    p_comm.add_argument("--scheme", choices=("bj", "weyl"), required=True)
    p_comm.add_argument("--m", type=int, required=True)
    p_comm.add_argument("--n", type=int, required=True)
    p_comm.add_argument("--format", choices=("text", "json"), default="text")
    p_comm.set_defaults(func=_cmd_commutator)

    return parser


def _fail(failures: list[str]) -> int:
    print(json.dumps({"failures": failures}), file=sys.stderr)
    return 1


def _cmd_verify(args) -> int:
    if args.target == "k":
        record = verify_pair(args.m, args.n)
    else:
        record = verify_ladder_pair(args.m, args.n, int(args.target[1]))
    sys.stdout.write(report.render_record(record, args.format))
    failures = failed_claims(record)
    return _fail(failures) if failures else 0


def _cmd_sweep(args) -> int:
    records = sweep(args.max_sum, args.target)
    sys.stdout.write(report.render_sweep(records, args.max_sum, args.target, args.format))
    failures = [fail for record in records for fail in failed_claims(record)]
    return _fail(failures) if failures else 0


def _cmd_quantize(args) -> int:
    poly = parse_polynomial(args.expr)
    op = quantize(_SCHEMES[args.scheme], poly)
    if args.format == "json":
        data = {
            "scheme": args.scheme,
            "input": args.expr,
            "classical": poly.text(),
            "operator": report.operator_json(op),
            "operator_text": op.text(),
            "differential_text": differential_text(op),
        }
        sys.stdout.write(json.dumps(data, indent=2) + "\n")
    else:
        sys.stdout.write(
            f"input: {args.expr}\n"
            f"classical (canonical): {poly.text()}\n"
            f"scheme: {args.scheme}\n"
            f"operator (normal-ordered): {op.text()}\n"
            f"operator (differential): {differential_text(op)}\n"
        )
    return 0


def _cmd_commutator(args) -> int:
    params = OscillatorParams(args.m, args.n)
    scheme = _SCHEMES[args.scheme]
    h_op = quantize(scheme, hamiltonian(params))
    k_op = quantize(scheme, k_integral(params))
    comm = commutator(h_op, k_op)
    if args.format == "json":
        data = {
            "params": {"m": args.m, "n": args.n},
            "scheme": args.scheme,
            "commutator": report.operator_json(comm),
            "commutator_text": comm.text(),
            "differential_text": differential_text(comm),
        }
        sys.stdout.write(json.dumps(data, indent=2) + "\n")
    else:
        sys.stdout.write(
            f"pair: ({args.m}, {args.n})\n"
            f"scheme: {args.scheme}\n"
            f"commutator (normal-ordered): {comm.text()}\n"
            f"commutator (differential): {differential_text(comm)}\n"
        )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        return _fail([str(exc)])


if __name__ == "__main__":
    raise SystemExit(main())
