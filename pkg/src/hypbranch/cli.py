"""Command-line front-end: JSON/CSV reports and the verification suites.

Half-integer flags use the doubled-integer convention (`--lambda-x2 3` means
lambda = 3/2) so no parameter ever passes through float parsing.  Exit codes:
0 success, 1 property failure, 2 invalid parameters, 3 divergent integral.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .checks import run_suite
from .errors import DivergenceError, InvalidParameterError
from .fjrep import SpaceTag, make_fj_param
from .numerics import HalfInt, QuadratureSpec
from .packets import RealForm, arthur_packet, pure_inner_forms, relevant_pairs
from .periods import (
    branching_verdict,
    converges_G1,
    converges_G2,
    period_integral_G1,
    period_integral_G2,
    valid_targets,
)

BRANCH_COLUMNS = [
    "p",
    "q",
    "lambda_x2",
    "subgroup",
    "target_x2",
    "converges",
    "nonzero",
    "predicate",
    "value",
    "err",
    "parity",
    "interlace",
    "admissible",
]


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _emit_json(args, obj) -> None:
    _emit(args, json.dumps(obj, sort_keys=True))


def _quad_spec(args) -> QuadratureSpec:
    nodes = getattr(args, "nodes", None)
    if nodes is None:
        return QuadratureSpec()
    return QuadratureSpec(radial_nodes=nodes, sphere_nodes=max(nodes, 32))


def cmd_fj(args) -> int:
    param = make_fj_param(args.p, args.q, HalfInt.from_twice(args.lambda_x2))
    _emit_json(args, param.to_json_dict())
    return 0


def _branch_rows(args, spec):
    lam = HalfInt.from_twice(args.lambda_x2)
    make_fj_param(args.p, args.q, lam)
    rows = []
    for target in valid_targets(args.p, args.q, args.subgroup, args.max_target_x2):
        result = branching_verdict(args.p, args.q, lam, args.subgroup, target, spec)
        v = result.verdict
        rows.append(
            {
                "p": args.p,
                "q": args.q,
                "lambda_x2": lam.twice,
                "subgroup": args.subgroup,
                "target_x2": target.twice,
                "converges": v.converges,
                "nonzero": v.nonzero,
                "predicate": v.predicate_nonzero,
                "value": v.value,
                "err": v.err_est,
                "parity": v.parity_match,
                "interlace": result.interlace.value,
                "admissible": result.admissible_restriction,
            }
        )
    return rows


def cmd_branch(args) -> int:
    rows = _branch_rows(args, _quad_spec(args))
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=BRANCH_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow(
                {k: (str(v).lower() if isinstance(v, bool) else v) for k, v in row.items()}
            )
        _emit(args, buf.getvalue().rstrip("\n"))
    else:
        _emit_json(args, rows)
    return 0


def cmd_period(args) -> int:
    lam = HalfInt.from_twice(args.lambda_x2)
    target = HalfInt.from_twice(args.target_x2)
    converges = converges_G1(lam, target) if args.subgroup == "g1" else converges_G2(lam, target)
    if not converges:
        print(
            f"period diverges: lambda + target = {lam + target} is not > -1/2",
            file=sys.stderr,
        )
        return 3
    spec = _quad_spec(args)
    if args.subgroup == "g1":
        verdict = period_integral_G1(args.p, args.q, lam, target, spec)
    else:
        verdict = period_integral_G2(args.p, args.q, lam, target, spec, use_witness=args.witness)
    payload = verdict.to_json_dict()
    payload.update(
        {
            "p": args.p,
            "q": args.q,
            "lambda_x2": lam.twice,
            "target_x2": target.twice,
            "subgroup": args.subgroup,
        }
    )
    _emit_json(args, payload)
    return 0


def cmd_packet(args) -> int:
    form = RealForm(args.p, args.q)
    inner = [[f.p_sig, f.q_sig] for f in pure_inner_forms(form)]
    if args.inner_forms_only:
        _emit_json(args, {"p": args.p, "q": args.q, "pure_inner_forms": inner})
        return 0
    report = arthur_packet(args.p, args.q, HalfInt.from_twice(args.lambda_x2))
    report["pure_inner_forms"] = inner
    report["relevant_pairs"] = {
        direction: [
            [[sub.p_sig, sub.q_sig], [amb.p_sig, amb.q_sig]]
            for sub, amb in relevant_pairs(form, direction)
        ]
        for direction in ("drop_p", "drop_q")
    }
    _emit_json(args, report)
    return 0


def cmd_check(args) -> int:
    results = run_suite(args.suite, args.seed)
    failures = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        line = f"[{status}] {res.name}"
        if res.detail:
            line += f"  ({res.detail})"
        print(line)
        failures += 0 if res.passed else 1
    print(f"{len(results) - failures}/{len(results)} properties passed")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypbranch",
        description="Branching verdicts for hyperboloid discrete series via period integrals",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    fj = sub.add_parser("fj", help="report a representation parameter")
    fj.add_argument("--p", type=int, required=True)
    fj.add_argument("--q", type=int, required=True)
    fj.add_argument("--lambda-x2", dest="lambda_x2", type=int, required=True)
    fj.add_argument("--out")
    fj.set_defaults(func=cmd_fj)

    branch = sub.add_parser("branch", help="scan branching targets")
    branch.add_argument("--p", type=int, required=True)
    branch.add_argument("--q", type=int, required=True)
    branch.add_argument("--lambda-x2", dest="lambda_x2", type=int, required=True)
    branch.add_argument("--subgroup", choices=("g1", "g2"), required=True)
    branch.add_argument("--max-target-x2", dest="max_target_x2", type=int, required=True)
    branch.add_argument("--format", choices=("json", "csv"), default="json")
    branch.add_argument("--nodes", type=int)
    branch.add_argument("--out")
    branch.set_defaults(func=cmd_branch)

    period = sub.add_parser("period", help="evaluate one period integral")
    period.add_argument("--p", type=int, required=True)
    period.add_argument("--q", type=int, required=True)
    period.add_argument("--lambda-x2", dest="lambda_x2", type=int, required=True)
    period.add_argument("--target-x2", dest="target_x2", type=int, required=True)
    period.add_argument("--subgroup", choices=("g1", "g2"), required=True)
    period.add_argument("--nodes", type=int)
    period.add_argument("--witness", action="store_true", help="use the twisted witness pairing")
    period.add_argument("--out")
    period.set_defaults(func=cmd_period)

    packet = sub.add_parser("packet", help="packet combinatorics and inner forms")
    packet.add_argument("--p", type=int, required=True)
    packet.add_argument("--q", type=int, required=True)
    packet.add_argument("--lambda-x2", dest="lambda_x2", type=int, default=2)
    packet.add_argument("--inner-forms-only", action="store_true")
    packet.add_argument("--out")
    packet.set_defaults(func=cmd_packet)

    check = sub.add_parser("check", help="run property suites")
    check.add_argument(
        "--suite",
        default="all",
        choices=("all", "quadrature", "harmonics", "decay", "branching", "packets", "conjecture"),
    )
    check.add_argument("--seed", type=int, default=0)
    check.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad flags, which matches the contract
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except DivergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:  # InvalidParameterError and friends
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
