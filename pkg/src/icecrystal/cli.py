"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import formats
from .crystal_graph import (
    check_axioms_C1_C6,
    find_highest_weights,
    generate,
    highest_weight_model,
    node_cap_from_env,
    verify_staircase,
)
from .crystal_ops import e_op, f_op
from .ice_model import (
    BRUTE_FORCE_CAP,
    CapExceeded,
    Partition,
    brute_force_enumerate,
    brute_force_size,
    validate,
)
from .stembridge import verify_regular
from .tableau_oracle import crystal_isomorphic, tableau_crystal

log = logging.getLogger("icecrystal")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(f"invalid partition {text!r}: {exc}") from None


def _emit(text: str, out: str | None = None) -> None:
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def cmd_hw(args) -> int:
    _emit(formats.model_to_json(highest_weight_model(args.lam)))
    return EXIT_OK


def cmd_gen(args) -> int:
    g = generate(args.lam, node_cap=args.node_cap)
    text = formats.to_dot(g) if args.format == "dot" else formats.graph_to_json(g)
    _emit(text, args.out)
    return EXIT_OK


def _check_generated(args) -> dict:
    lam = args.lam
    g = generate(lam, node_cap=args.node_cap)
    violations = []
    for key, m in sorted(g.payload.items()):
        for v in validate(m):
            violations.append({"check": "validate", "node": key, **v.as_dict()})
    violations += [{"check": "crystal_axioms", **v.as_dict()} for v in check_axioms_C1_C6(g)]
    violations += [{"check": "regularity", **v.as_dict()} for v in verify_regular(g).violations]
    sources = find_highest_weights(g)
    if len(sources) != 1:
        violations.append({"check": "highest_weight", "detail": f"{len(sources)} source nodes"})
    for key in sources:
        if g.nodes[key] != lam.parts:
            violations.append({"check": "highest_weight", "node": key,
                               "detail": f"weight {g.nodes[key].counts} is not lambda"})
        for clause, msgs in verify_staircase(g.payload[key]).failures().items():
            violations += [{"check": "staircase", "clause": clause, "node": key, "detail": msg}
                           for msg in msgs]
    brute = None
    if brute_force_size(lam) <= args.brute_cap:
        keys = {m.key() for m in brute_force_enumerate(lam, cap=args.brute_cap)}
        brute = len(keys)
        if keys != set(g.nodes):
            violations.append({"check": "brute_force",
                               "detail": f"brute force finds {len(keys)} models, generation {len(g.nodes)}"})
    return {"lambda": list(lam.parts), "nodes": len(g.nodes), "edges": len(g.edges),
            "brute_force_nodes": brute, "passed": not violations, "violations": violations}


def _check_file(args) -> dict:
    try:
        g = formats.graph_from_json(_read(args.graph))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed graph file {args.graph}: {exc}") from None
    report = verify_regular(g)
    violations = [{"check": "regularity", **v.as_dict()} for v in report.violations]
    if report.ok:
        violations += [{"check": "crystal_axioms", **v.as_dict()} for v in check_axioms_C1_C6(g)]
    return {"lambda": list(g.lam.parts), "nodes": len(g.nodes), "edges": len(g.edges),
            "notices": report.notices, "passed": not violations, "violations": violations}


def cmd_check(args) -> int:
    if (args.lam is None) == (args.graph is None):
        raise UsageError("check needs exactly one of --lambda or --graph")
    result = _check_generated(args) if args.graph is None else _check_file(args)
    _emit(json.dumps(result, indent=2) + "\n")
    return EXIT_OK if result["passed"] else EXIT_FAIL


def cmd_iso(args) -> int:
    ice = generate(args.lam, node_cap=args.node_cap)
    tab = tableau_crystal(args.lam, args.lam.n, cap=args.node_cap)
    result = crystal_isomorphic(ice, tab)
    if result:
        _emit(f"yes: M({args.lam}) ~ B({args.lam}), {len(ice.nodes)} nodes, {len(ice.edges)} edges\n")
        return EXIT_OK
    _emit(f"no: {result.witness}\n")
    return EXIT_FAIL


def cmd_apply(args) -> int:
    try:
        m = formats.model_from_json(_read(args.model))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed model file {args.model}: {exc}") from None
    problems = validate(m)
    if problems:
        raise UsageError("model is not in M(lambda): " + "; ".join(
            f"{v.clause} {v.position}: {v.detail}" for v in problems[:5]))
    if not 1 <= args.color < m.n:
        raise UsageError(f"color {args.color} out of range 1..{m.n - 1}")
    image = (f_op if args.op == "f" else e_op)(m, args.color)
    _emit("none\n" if image is None else formats.model_to_json(image))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="icecrystal",
                                     description="Crystals of five-vertex ice models.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("--node-cap", type=int, default=None,
                        help="maximum crystal size (default: $ICE_CRYSTAL_NODE_CAP or 100000)")
    parser.add_argument("--brute-cap", type=int, default=BRUTE_FORCE_CAP,
                        help="maximum number of candidate box sets for brute force")
    sub = parser.add_subparsers(dest="command", required=True)

    def lam_arg(p, required=True):
        p.add_argument("--lambda", dest="lam", required=required, type=str,
                       help="comma-separated partition, e.g. 2,1,0")

    p = sub.add_parser("hw", help="print the highest weight model")
    lam_arg(p)
    p.set_defaults(func=cmd_hw)

    p = sub.add_parser("gen", help="generate the crystal graph")
    lam_arg(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="verify a generated crystal or a graph file")
    lam_arg(p, required=False)
    p.add_argument("--graph", default=None, help="graph JSON file to certify instead")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("iso", help="compare M(lambda) with the tableau crystal")
    lam_arg(p)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("apply", help="apply a crystal operator to a model file")
    p.add_argument("--op", choices=("e", "f"), required=True)
    p.add_argument("--color", type=int, required=True)
    p.add_argument("--model", required=True, help="model JSON file, or - for stdin")
    p.set_defaults(func=cmd_apply)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose > 1 else
                        logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.node_cap is None:
            args.node_cap = node_cap_from_env()
        if getattr(args, "lam", None) is not None:
            args.lam = _partition(args.lam)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
