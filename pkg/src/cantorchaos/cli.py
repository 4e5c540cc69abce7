"""Command-line front end.

Every command prints one JSON document
``{command, inputs, witness|report, verified, seed}`` to stdout.  Exit code is
0 when the independent verifier accepts (or the report is clean), 1 when it
does not, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import sft_oracle
from .chaos_witness import (
    periodic_point_in,
    shared_orbit_witness,
    transitivity_witness,
    verify_periodic,
    verify_shared_orbit,
    verify_transitivity,
)
from .core_space import check_label, membership, normalize_cylinder, primitive_period
from .grammar import ParseError, parse_value
from .sensitivity import SensitivityConfig, sensitivity_witness, verify_sensitive
from .uniformity import SampleSpec, uns_axioms_check

COMMANDS = (
    "witness-transitivity",
    "witness-periodic",
    "witness-shared-orbit",
    "witness-sensitivity",
    "verify-uns",
    "sft-check",
    "sft-sweep",
    "remark-demos",
)


class UsageError(Exception):
    pass


def _value(kind, text, flag):
    try:
        return parse_value(kind, text)
    except ParseError as e:
        raise UsageError(f"{flag}: {e}") from None


def _fiber(label):
    try:
        return check_label(label)
    except ValueError as e:
        raise UsageError(f"--fiber: {e}") from None


def _cylinder_pair(args):
    return _value("cylinder", args.u, "--u"), _value("cylinder", args.v, "--v")


def cmd_witness_transitivity(args):
    U, V = _cylinder_pair(args)
    w = transitivity_witness(U, V, args.fiber)
    return {"U": str(U), "V": str(V)}, "witness", w.to_json(), verify_transitivity(U, V, w)


def cmd_witness_periodic(args):
    U = _value("cylinder", args.u, "--u")
    f = periodic_point_in(U, args.fiber)
    _, k, _ = normalize_cylinder(U, args.fiber)
    witness = {"f": str(f), "k": k, "period": primitive_period(f)}
    return {"U": str(U)}, "witness", witness, verify_periodic(U, f, k)


def cmd_witness_shared_orbit(args):
    U, V = _cylinder_pair(args)
    w = shared_orbit_witness(U, V, args.fiber)
    return {"U": str(U), "V": str(V)}, "witness", w.to_json(), verify_shared_orbit(U, V, w)


def cmd_witness_sensitivity(args):
    x = _value("point", args.x, "--x")
    nbhd = _value("cylinder", args.nbhd, "--nbhd")
    if not membership(x, nbhd):
        raise UsageError(f"--x {x} is not in --nbhd {nbhd}")
    w = sensitivity_witness(x, nbhd, SensitivityConfig(args.fiber))
    inputs = {"x": str(x), "nbhd": str(nbhd), "fiber": args.fiber}
    return inputs, "witness", w.to_json(), verify_sensitive(x, w, nbhd)


def cmd_verify_uns(args):
    reports = uns_axioms_check(SampleSpec(args.samples, args.seed))
    report = [r.to_json() for r in reports]
    return {"samples": args.samples}, "report", report, all(r.passed for r in reports)


def cmd_sft_check(args):
    system = _value("sft", args.sft, "--sft")
    rep = sft_oracle.proposition_crosscheck(system, args.depth, args.period_bound)
    inputs = {"sft": str(system), "depth": args.depth, "period_bound": args.period_bound}
    return inputs, "report", rep.to_json(), rep.equivalence_holds


def cmd_sft_sweep(args):
    reports = sft_oracle.proposition_sweep(args.max_forbidden_len, args.depth, args.period_bound)
    body = {
        "systems": len(reports),
        "discrepancies": sum(not r.equivalence_holds for r in reports),
        "reports": [r.to_json() for r in reports],
    }
    inputs = {
        "max_forbidden_len": args.max_forbidden_len,
        "depth": args.depth,
        "period_bound": args.period_bound,
    }
    return inputs, "report", body, body["discrepancies"] == 0


def cmd_remark_demos(args):
    rep = sft_oracle.remark_demos(args.depth, args.period_bound, args.samples, args.seed)
    inputs = {"depth": args.depth, "period_bound": args.period_bound, "samples": args.samples}
    return inputs, "report", rep, rep["ok"]


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def default_seed():
    env = os.environ.get("CANTOR_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"CANTOR_SEED must be an integer, got {env!r}") from None


def build_parser():
    parser = argparse.ArgumentParser(prog="cantorchaos", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=None, help="overrides CANTOR_SEED (default 0)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        return p

    for name, func, help in (
        ("witness-transitivity", cmd_witness_transitivity, "k, W with W in U and sigma^k W in V"),
        ("witness-shared-orbit", cmd_witness_shared_orbit, "periodic orbit meeting U and V"),
    ):
        p = add(name, func, help)
        p.add_argument("--u", required=True)
        p.add_argument("--v", required=True)
        p.add_argument("--fiber", default="a")

    p = add("witness-periodic", cmd_witness_periodic, "periodic point inside U")
    p.add_argument("--u", required=True)
    p.add_argument("--fiber", default="a")

    p = add("witness-sensitivity", cmd_witness_sensitivity, "sensitive-dependence witness at x")
    p.add_argument("--x", required=True)
    p.add_argument("--nbhd", default="{}")
    p.add_argument("--fiber", default="a")

    p = add("verify-uns", cmd_verify_uns, "sampled uniformity axiom checks")
    p.add_argument("--samples", type=_positive, default=1000)

    p = add("sft-check", cmd_sft_check, "chaos equivalence on one subshift")
    p.add_argument("--sft", required=True)
    p.add_argument("--depth", type=_positive, default=5)
    p.add_argument("--period-bound", type=_positive, default=10)

    p = add("sft-sweep", cmd_sft_sweep, "chaos equivalence on every small subshift")
    p.add_argument("--max-forbidden-len", type=_positive, default=2)
    p.add_argument("--depth", type=_positive, default=5)
    p.add_argument("--period-bound", type=_positive, default=10)

    p = add("remark-demos", cmd_remark_demos, "independence of the two chaos ingredients")
    p.add_argument("--depth", type=_positive, default=6)
    p.add_argument("--period-bound", type=_positive, default=12)
    p.add_argument("--samples", type=_positive, default=200)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        if args.seed is None:
            args.seed = default_seed()
        if hasattr(args, "fiber"):
            _fiber(args.fiber)
        inputs, key, body, verified = args.func(args)
    except UsageError as e:
        print(f"cantorchaos {args.command}: {e}", file=sys.stderr)
        return 2
    doc = {
        "command": args.command,
        "inputs": inputs,
        key: body,
        "verified": bool(verified),
        "seed": args.seed,
    }
    print(json.dumps(doc, indent=2))
    return 0 if verified else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
