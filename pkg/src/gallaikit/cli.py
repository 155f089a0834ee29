"""Command line front end.

Subcommands: build, build-mixed, verify, partition, formula, search,
encode, decode, catalog, fixtures.  Every subcommand accepts --json for
machine-readable output and --threads (reserved; engines run
single-threaded, 0 means auto).  GRC files are the only medium between
commands.

Exit codes: 0 pass / witness / SAT-decoded, 1 fail / exhausted /
UNSAT-claim / rainbow input, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cnf import (
    CnfDocument,
    CnfError,
    assignment_satisfies,
    decode_assignment,
    encode_cnf,
    parse_dimacs,
    parse_model,
)
from .coloring import ColoringError, read_grc, write_grc
from .construct import (
    ConstructionError,
    build_lower,
    build_mixed,
    regenerate_fixtures,
)
from .decompose import DecompositionError, RainbowTriangleError, gallai_partition
from .detect import AvoidanceSpec, verify
from .formulas import (
    FormulaError,
    conjecture_kipas,
    fan_param,
    gr_mixed_value,
    gr_value,
)
from .patterns import PatternError, canonical_id, catalog, chromatic_number
from .search import ScopeExceededError, SearchError, SearchProblem, exhaustive_check

_DOMAIN_ERRORS = (
    ColoringError,
    PatternError,
    FormulaError,
    ConstructionError,
    SearchError,
    CnfError,
    DecompositionError,
    OSError,
)


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _forbid_pair(text: str) -> tuple[int, str]:
    color, sep, pid = text.partition("=")
    if not sep or not pid:
        raise argparse.ArgumentTypeError(f"expected <color>=<patternId>, got {text!r}")
    try:
        c = int(color)
    except ValueError:
        raise argparse.ArgumentTypeError(f"color must be an integer, got {color!r}")
    if c < 1:
        raise argparse.ArgumentTypeError("color must be >= 1")
    return c, pid


def _per_color_list(text: str) -> tuple[str | None, ...]:
    # "h10,h10" -> ("h10","h10"); "none" or "-" leaves a color unconstrained
    out: list[str | None] = []
    for token in text.split(","):
        token = token.strip()
        out.append(None if token in ("", "none", "-") else token)
    return tuple(out)


def _emit(args: argparse.Namespace, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(human)


def _write_if_requested(args: argparse.Namespace, coloring) -> None:
    if getattr(args, "out", None):
        write_grc(coloring, args.out)


def _cmd_build(args: argparse.Namespace) -> int:
    c = build_lower(args.target, args.k, r2=args.r2, certify=not args.no_certify)
    _write_if_requested(args, c)
    used = sorted(set(c.colors)) if c.colors else []
    payload = {"size": c.n, "colors_used": used, "certified": not args.no_certify}
    _emit(args, payload, f"size {c.n}, colors used {used}, certified {payload['certified']}")
    return 0


def _cmd_build_mixed(args: argparse.Namespace) -> int:
    c = build_mixed(args.k, args.s, certify=not args.no_certify)
    _write_if_requested(args, c)
    used = sorted(set(c.colors)) if c.colors else []
    payload = {"size": c.n, "colors_used": used, "certified": not args.no_certify}
    _emit(args, payload, f"size {c.n}, colors used {used}, certified {payload['certified']}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    c = read_grc(args.file)
    per_color: dict[int, str] = {}
    if args.forbid_all is not None:
        pid = canonical_id(args.forbid_all)
        per_color = {color: pid for color in range(1, c.k + 1)}
    for color, pid in args.forbid or []:
        if pid == "none":
            per_color.pop(color, None)
        else:
            per_color[color] = canonical_id(pid)
    spec = AvoidanceSpec.from_map(per_color, require_gallai=args.gallai)
    report = verify(c, spec)
    payload = {
        "passed": report.passed,
        "rainbow_witness": list(report.rainbow_witness) if report.rainbow_witness else None,
        "mono_witnesses": [
            {"color": e.color, "vertices": list(e.map)} for e in report.mono_witnesses
        ],
        "stats": {
            "pairs_scanned": report.stats.pairs_scanned,
            "embedding_nodes": report.stats.embedding_nodes,
            "patterns_checked": report.stats.patterns_checked,
        },
    }
    if report.passed:
        human = "pass"
    else:
        bits = []
        if report.rainbow_witness:
            bits.append(f"rainbow triangle {report.rainbow_witness}")
        for e in report.mono_witnesses:
            bits.append(f"color {e.color} copy on {e.map}")
        human = "fail: " + "; ".join(bits)
    _emit(args, payload, human)
    return 0 if report.passed else 1


def _cmd_partition(args: argparse.Namespace) -> int:
    c = read_grc(args.file)
    try:
        gp = gallai_partition(c)
    except RainbowTriangleError as exc:
        payload = {"rainbow_witness": list(exc.witness)}
        _emit(args, payload, f"rainbow triangle {exc.witness}")
        return 1
    payload = {
        "parts": [list(p) for p in gp.parts],
        "quotient_colors": list(gp.quotient.colors),
        "ell": gp.ell,
    }
    human = f"ell {gp.ell}, parts " + " ".join(
        "{" + ",".join(map(str, p)) + "}" for p in gp.parts
    )
    _emit(args, payload, human)
    return 0


def _cmd_formula(args: argparse.Namespace) -> int:
    if args.conjecture:
        m = fan_param(canonical_id(args.target))
        if m is None:
            print(f"error: --conjecture needs a kipas target, got {args.target!r}",
                  file=sys.stderr)
            return 2
        gv = conjecture_kipas(m, args.k, r2=args.r2)
    elif args.s is not None:
        if fan_param(canonical_id(args.target)) != 4:
            print("error: --s selects the mixed family; target must be kipas(4)",
                  file=sys.stderr)
            return 2
        gv = gr_mixed_value(args.k, args.s)
    else:
        gv = gr_value(args.target, args.k)
    payload = {
        "value": gv.value,
        "branch": gv.case_tag,
        "lower_construction_size": gv.value - 1,
    }
    _emit(args, payload,
          f"{gv.value}  branch {gv.case_tag}  lower construction {gv.value - 1} vertices")
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    problem = SearchProblem(
        args.n, args.per_color, require_gallai=args.gallai, mode=args.mode
    )
    outcome = exhaustive_check(problem, max_nodes=args.max_nodes)
    payload = {
        "kind": outcome.kind,
        "nodes_explored": outcome.nodes_explored,
        "symmetry_reduced": outcome.symmetry_reduced,
    }
    if outcome.kind == "witness":
        payload["witness_colors"] = list(outcome.witness.colors)
        if args.out:
            write_grc(outcome.witness, args.out)
            payload["out"] = args.out
        _emit(args, payload,
              f"witness after {outcome.nodes_explored} nodes"
              + (f", written to {args.out}" if args.out else ""))
        return 0
    _emit(args, payload, f"exhausted after {outcome.nodes_explored} nodes, no coloring")
    return 1


def _cmd_encode(args: argparse.Namespace) -> int:
    k = len(args.per_color)
    if args.k is not None and args.k != k:
        print(f"error: --k {args.k} disagrees with --per-color arity {k}",
              file=sys.stderr)
        return 2
    problem = SearchProblem(args.n, args.per_color, require_gallai=args.gallai)
    doc = encode_cnf(problem)
    with open(args.out, "w", encoding="ascii") as fh:
        fh.write(doc.to_dimacs())
    payload = {
        "n": doc.n,
        "k": doc.k,
        "vars": doc.num_vars,
        "clauses": len(doc.clauses),
        "out": args.out,
    }
    _emit(args, payload,
          f"{doc.num_vars} vars, {len(doc.clauses)} clauses written to {args.out}")
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    with open(args.cnf, encoding="ascii") as fh:
        num_vars, clauses = parse_dimacs(fh.read())
    doc = CnfDocument(args.n, args.k, num_vars, tuple(clauses))
    with open(args.model, encoding="ascii") as fh:
        model = parse_model(fh.read())
    if model is None:
        _emit(args, {"kind": "unsat"}, "UNSAT claim, nothing to decode")
        return 1
    c = decode_assignment(doc, model, n=args.n, k=args.k)
    if not assignment_satisfies(doc, model):
        raise CnfError("model does not satisfy the formula it came with")
    _write_if_requested(args, c)
    payload = {"kind": "sat", "n": c.n, "k": c.k, "colors": list(c.colors)}
    if args.out:
        payload["out"] = args.out
    _emit(args, payload,
          "decoded satisfying coloring"
          + (f", written to {args.out}" if args.out else ""))
    return 0


def _cmd_catalog(args: argparse.Namespace) -> int:
    rows = []
    for cid, pattern in catalog():
        rows.append({
            "id": cid,
            "vertices": pattern.m,
            "edges": [list(e) for e in sorted(pattern.edges)],
            "chromatic_number": chromatic_number(pattern),
        })
    if args.json:
        print(json.dumps(rows))
    else:
        for row in rows:
            edges = " ".join(f"{a}{b}" for a, b in row["edges"])
            print(f"{row['id']}: {row['vertices']} vertices, "
                  f"chi {row['chromatic_number']}, edges {edges}")
    return 0


def _cmd_fixtures(args: argparse.Namespace) -> int:
    if args.action != "regenerate":
        print(f"error: unknown fixtures action {args.action!r}", file=sys.stderr)
        return 2
    written = regenerate_fixtures(
        dest=args.dest, method=args.method, max_nodes=args.max_nodes
    )
    if args.json:
        print(json.dumps({"written": written}))
    else:
        for path in written:
            print(path)
    return 0


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--json", action="store_true", help="machine-readable output")
    sub.add_argument(
        "--threads", type=_nonneg_int, default=0, metavar="N",
        help="reserved; engines run single-threaded (0 = auto)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gallaikit",
        description="Build, verify, and search rainbow-triangle-free edge colorings.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("build", help="materialize a lower-bound coloring")
    p.add_argument("--target", required=True, help="pattern id, e.g. h10 or kipas(4)")
    p.add_argument("--k", type=int, required=True, help="number of colors")
    p.add_argument("--r2", type=int, help="two-color Ramsey number for unlisted kipas")
    p.add_argument("--out", help="write the coloring to this GRC file")
    p.add_argument("--no-certify", action="store_true",
                   help="skip the avoidance re-check (sizes still validated)")
    _add_common(p)
    p.set_defaults(func=_cmd_build)

    p = subparsers.add_parser("build-mixed",
                              help="materialize a mixed-family lower-bound coloring")
    p.add_argument("--k", type=int, required=True, help="number of colors")
    p.add_argument("--s", type=int, required=True,
                   help="colors forbidding kipas(4); the rest forbid path(3)")
    p.add_argument("--out", help="write the coloring to this GRC file")
    p.add_argument("--no-certify", action="store_true",
                   help="skip the avoidance re-check (sizes still validated)")
    _add_common(p)
    p.set_defaults(func=_cmd_build_mixed)

    p = subparsers.add_parser("verify", help="check a GRC file against avoidance flags")
    p.add_argument("file", help="GRC input")
    p.add_argument("--gallai", action="store_true", help="also forbid rainbow triangles")
    p.add_argument("--forbid", type=_forbid_pair, action="append", metavar="C=ID",
                   help="forbid pattern ID in color C (repeatable; ID 'none' unsets)")
    p.add_argument("--forbid-all", metavar="ID", help="forbid pattern ID in every color")
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = subparsers.add_parser("partition", help="compute a Gallai partition of a GRC file")
    p.add_argument("file", help="GRC input")
    _add_common(p)
    p.set_defaults(func=_cmd_partition)

    p = subparsers.add_parser("formula", help="evaluate a Gallai-Ramsey closed form")
    p.add_argument("--target", required=True, help="pattern id")
    p.add_argument("--k", type=int, required=True, help="number of colors")
    p.add_argument("--s", type=int,
                   help="mixed family: colors forbidding kipas(4) out of k")
    p.add_argument("--r2", type=int, help="two-color Ramsey number for unlisted kipas")
    p.add_argument("--conjecture", action="store_true",
                   help="evaluate the general kipas conjecture instead of a theorem")
    _add_common(p)
    p.set_defaults(func=_cmd_formula)

    p = subparsers.add_parser("search", help="backtracking search for an avoiding coloring")
    p.add_argument("--n", type=int, required=True, help="host vertices")
    p.add_argument("--per-color", type=_per_color_list, required=True, metavar="ID,ID,...",
                   help="pattern per color; 'none' or '-' leaves a color free")
    p.add_argument("--gallai", action="store_true", help="also forbid rainbow triangles")
    p.add_argument("--mode", choices=("first", "exhaust"), default="first",
                   help="stop at first witness, or prove none exists")
    p.add_argument("--max-nodes", type=int, help="abort after this many search nodes")
    p.add_argument("--out", help="write a found witness to this GRC file")
    _add_common(p)
    p.set_defaults(func=_cmd_search)

    p = subparsers.add_parser("encode", help="emit a DIMACS CNF for the same question")
    p.add_argument("--n", type=int, required=True, help="host vertices")
    p.add_argument("--k", type=int, help="number of colors (checked against --per-color)")
    p.add_argument("--per-color", type=_per_color_list, required=True, metavar="ID,ID,...",
                   help="pattern per color; 'none' or '-' leaves a color free")
    p.add_argument("--gallai", action="store_true", help="also forbid rainbow triangles")
    p.add_argument("--out", required=True, help="DIMACS output file")
    _add_common(p)
    p.set_defaults(func=_cmd_encode)

    p = subparsers.add_parser("decode", help="turn a solver model back into a GRC file")
    p.add_argument("--cnf", required=True, help="DIMACS file the solver ran on")
    p.add_argument("--model", required=True, help="solver output file")
    p.add_argument("--n", type=int, required=True, help="host vertices")
    p.add_argument("--k", type=int, required=True, help="number of colors")
    p.add_argument("--out", help="write the decoded coloring to this GRC file")
    _add_common(p)
    p.set_defaults(func=_cmd_decode)

    p = subparsers.add_parser("catalog", help="list the five-vertex pattern catalog")
    _add_common(p)
    p.set_defaults(func=_cmd_catalog)

    p = subparsers.add_parser("fixtures", help="regenerate packaged extremal colorings")
    p.add_argument("action", choices=("regenerate",))
    p.add_argument("--method", choices=("auto", "seed", "search"), default="auto",
                   help="auto searches within the node budget, then falls back to seed")
    p.add_argument("--max-nodes", type=int, default=2_000_000,
                   help="search budget per fixture")
    p.add_argument("--dest", help="directory to write into (default: packaged data)")
    _add_common(p)
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits itself on usage errors and --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ScopeExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def cli_main() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    cli_main()
