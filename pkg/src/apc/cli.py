"""Command-line front end.

Exit codes: 0 success, 1 hypothesis violation or negative answer, 2 bad
input, 3 internal verification failure.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path

from apc import analysis, documents, oracle, synthesis
from apc.cgs import CgsInstance, generate_no_good_pair, generate_random
from apc.errors import (
    ApcError,
    BudgetExceeded,
    ConstructionError,
    GenerationFailed,
    GoodPairPresent,
    HypothesisViolated,
    IndexOutOfRange,
    InstanceError,
    LengthOutOfRange,
)
from apc.graph import RED

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path: str) -> CgsInstance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return documents.loads_instance(text)
    except InstanceError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _vertex(inst: CgsInstance, name: str) -> int:
    try:
        return inst.vertex_by_name(name)
    except IndexOutOfRange as exc:
        raise InputError(str(exc)) from exc


def _budget() -> oracle.EnumerationBudget:
    try:
        return oracle.EnumerationBudget.from_env()
    except ValueError as exc:
        raise InputError(f"APC_BUDGET: {exc}") from exc


def _names(inst: CgsInstance, seq) -> list[str]:
    return [inst.name(v) for v in seq]


# -- check ------------------------------------------------------------------


def check_report(inst: CgsInstance) -> dict:
    name = inst.name
    red = sum(1 for c in inst.exterior.values() if c is RED)
    report = {
        "sizes": list(inst.sizes),
        "vertices": inst.vertex_count,
        "exterior": {"total": len(inst.exterior), "red": red, "blue": len(inst.exterior) - red},
        "pairs": [],
        "good_cycles": [_names(inst, c) for c in analysis.find_good_cycles(inst)],
    }
    for i, j in itertools.combinations(range(inst.k), 2):
        gps = analysis.find_good_pairs(inst, i, j)
        entry = {
            "summands": [i, j],
            "good_pairs": [
                {"edges": [_names(inst, gp.e1), _names(inst, gp.e2)], "color": gp.color.value} for gp in gps
            ],
            "singular": {
                f"{a}->{b}": [[name(v), c.value] for v, c in analysis.singular_vertices(inst, a, b)]
                for a, b in ((i, j), (j, i))
            },
        }
        try:
            classes = analysis.parallel_partition(inst, i, j)
            entry["parallel_classes"] = [len(p) for p in classes]
            entry["consistency"] = analysis.verify_lemma4(inst, i, j).to_dict()
        except GoodPairPresent:
            entry["parallel_classes"] = None
            entry["consistency"] = None
        report["pairs"].append(entry)
    violations = analysis.hypothesis_violations(inst)
    report["hypotheses_hold"] = not violations
    report["violations"] = [str(v) for v in violations]
    return report


def _print_check(report: dict) -> None:
    ext = report["exterior"]
    print(
        f"instance: {len(report['sizes'])} summands, sizes {' '.join(map(str, report['sizes']))}, "
        f"{report['vertices']} vertices"
    )
    print(f"exterior edges: {ext['total']} ({ext['red']} red, {ext['blue']} blue)")
    for p in report["pairs"]:
        i, j = p["summands"]
        print(f"summands {i}-{j}:")
        print(f"  good pairs: {len(p['good_pairs'])}")
        for gp in p["good_pairs"]:
            (a, b), (c, d) = gp["edges"]
            print(f"    {a}{b}, {c}{d} ({gp['color']})")
        for key, sing in p["singular"].items():
            shown = ", ".join(f"{v} ({c})" for v, c in sing) or "none"
            print(f"  singular {key}: {shown}")
        if p["parallel_classes"] is None:
            print("  parallel classes: undefined (good pair present)")
        else:
            sizes = p["parallel_classes"]
            print(f"  parallel classes: {len(sizes)} (sizes {' '.join(map(str, sizes))})")
            cons = p["consistency"]
            print(f"  consistency report: {'pass' if cons['passed'] else 'FAIL'}")
            for c in cons["checks"]:
                print(f"    [{'pass' if c['passed'] else 'FAIL'}] {c['name']}" + (f": {c['detail']}" if c["detail"] else ""))
    print(f"good cycles: {len(report['good_cycles'])}")
    for c in report["good_cycles"][:10]:
        print("  " + " ".join(c))
    if report["hypotheses_hold"]:
        print("hypotheses: hold")
    else:
        print("hypotheses: violated")
        for v in report["violations"][:10]:
            print("  " + v)


def cmd_check(args) -> int:
    inst = _load(args.file)
    report = check_report(inst)
    if args.json:
        print(json.dumps(report, indent=1))
    else:
        _print_check(report)
    return EXIT_OK if report["hypotheses_hold"] else EXIT_VIOLATION


# -- cycle / certify ------------------------------------------------------


def cmd_cycle(args) -> int:
    inst = _load(args.file)
    v = _vertex(inst, args.vertex)
    cyc = synthesis.pancyclic_cycle(inst, v, args.length)
    print(" ".join(_names(inst, cyc)))
    return EXIT_OK


def oracle_agreement(inst: CgsInstance, cert: synthesis.PancyclicCertificate, budget: oracle.EnumerationBudget) -> list[str]:
    """Differences between the certificate and exhaustive search."""
    g = inst.graph
    realized = oracle.realizable_pairs(g, budget)
    problems = []
    if set(cert.entries) != realized:
        problems.append(f"pair sets differ ({len(cert.entries)} certified vs {len(realized)} realizable)")
    every = oracle.enumerate_alternating_cycles(g, budget)
    strays = [k for k, c in cert.entries.items() if c.canonical() not in every]
    if strays:
        problems.append(f"{len(strays)} certificate cycles missing from the enumeration")
    return problems


def cmd_certify(args) -> int:
    inst = _load(args.file)
    cert = synthesis.certify_vertex_pancyclic(inst)
    text = json.dumps(documents.render_certificate(cert, inst), indent=1) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.oracle:
        budget = _budget()
        if inst.vertex_count > budget.max_vertices:
            print(f"oracle agreement: skipped ({inst.vertex_count} vertices over budget {budget.max_vertices})", file=sys.stderr)
        else:
            problems = oracle_agreement(inst, cert, budget)
            if problems:
                print("oracle agreement: MISMATCH; " + "; ".join(problems), file=sys.stderr)
                return EXIT_INTERNAL
            print("oracle agreement: exact", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = _load(args.instance)
    try:
        doc = json.loads(Path(args.certificate).read_text())
    except OSError as exc:
        raise InputError(f"{args.certificate}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.certificate}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    problems = documents.verify_certificate_document(doc, inst)
    if problems:
        for p in problems[:20]:
            print(p)
        print(f"verify: FAILED ({len(problems)} problems)")
        return EXIT_VIOLATION
    print(f"verify: ok ({len(doc['entries'])} entries)")
    return EXIT_OK


# -- gen / export / oracle ------------------------------------------------


def _sizes(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",")]
    except ValueError as exc:
        raise InputError(f"bad --sizes {text!r}") from exc


def cmd_gen(args) -> int:
    sizes = _sizes(args.sizes)
    try:
        if args.mode == "random":
            inst = generate_random(sizes, args.seed)
        else:
            inst = generate_no_good_pair(sizes, args.seed)
    except GenerationFailed:
        raise
    except InstanceError as exc:
        raise InputError(str(exc)) from exc
    sys.stdout.write(documents.dumps_instance(inst))
    return EXIT_OK


def cmd_export(args) -> int:
    inst = _load(args.file)
    highlight = None
    if args.highlight:
        try:
            vname, length = args.highlight.rsplit(",", 1)
            length = int(length)
        except ValueError as exc:
            raise InputError(f"bad --highlight {args.highlight!r}; expected VERTEX,LENGTH") from exc
        highlight = synthesis.pancyclic_cycle(inst, _vertex(inst, vname), length)
    try:
        Path(args.dot).write_text(documents.render_dot(inst, highlight))
    except OSError as exc:
        raise InputError(f"{args.dot}: {exc.strerror or exc}") from exc
    return EXIT_OK


def cmd_oracle(args) -> int:
    inst = _load(args.file)
    budget = _budget()
    report = oracle.brute_vertex_pancyclic(inst.graph, budget)
    if report.pancyclic:
        print(f"vertex alternating-pancyclic: yes ({len(report.realized)} (vertex, length) pairs)")
        return EXIT_OK
    print(f"vertex alternating-pancyclic: no ({len(report.missing)} missing pairs)")
    for v, L in report.missing[:20]:
        print(f"  missing {inst.name(v)} length {L}")
    return EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="apc", description="Alternating cycles in colored generalized sums.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="report structure and the pancyclicity hypotheses")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cycle", help="print an alternating cycle through a vertex")
    p.add_argument("file")
    p.add_argument("--vertex", required=True)
    p.add_argument("--length", required=True, type=int)
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("certify", help="emit a vertex-pancyclicity certificate")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="cross-check against exhaustive search")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("gen", help="generate an instance document")
    p.add_argument("--sizes", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["no-good-pair", "random"], default="no-good-pair")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("export", help="write a DOT rendering")
    p.add_argument("file")
    p.add_argument("--dot", required=True)
    p.add_argument("--highlight", help="VERTEX,LENGTH of a cycle to draw bold")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("oracle", help="decide vertex alternating-pancyclicity by exhaustive search")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="re-check a certificate against its instance")
    p.add_argument("certificate")
    p.add_argument("instance")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (HypothesisViolated, LengthOutOfRange, GenerationFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except ConstructionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InstanceError, BudgetExceeded, IndexOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ApcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
