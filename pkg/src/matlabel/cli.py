"""Command line interface.

Subcommands: classify, label, verify, exponents, poset, selftest. Machine
readable JSON goes to stdout (or --out); human summaries go to stderr
under --verbose. Exit codes: 0 success, 1 input or usage error, 2
mathematical rejection with a machine-checkable witness.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import families
from .arrangement import check_terao_factorization, exponents_from_labeling
from .brute import brute_force_mat_labeling
from .chordal import find_chordless_cycle, is_chordal, peo_exponents
from .construct import construct_mat_labeling
from .errors import NotStronglyChordalError
from .graph import Graph
from .io import (
    dump_json,
    labeling_to_dot,
    labeling_to_json_dict,
    load_graph,
    parse_labeling_json,
    poset_to_dot,
    poset_to_json_dict,
)
from .labeling import find_mat_peo, verify_mat_labeling
from .poset import CrownWitness, build_poset, find_any_crown
from .strong_chordal import (
    SunWitness,
    detect_induced_sun,
    is_strongly_chordal,
    unit_interval_obstruction,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_REJECT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors are input errors: exit 1
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _witness_json(witness) -> dict:
    if isinstance(witness, SunWitness):
        return witness.as_json()
    if isinstance(witness, CrownWitness):
        return witness.as_json()
    if isinstance(witness, tuple):
        return {"kind": "chordless-cycle", "vertices": list(witness)}
    raise TypeError(f"unknown witness {witness!r}")


def _classification_witness(g: Graph):
    cycle = find_chordless_cycle(g)
    if cycle is not None:
        return {"kind": "chordless-cycle", "vertices": list(cycle)}
    sun = detect_induced_sun(g)
    if sun is not None:
        return sun.as_json()
    obstruction = unit_interval_obstruction(g)
    if obstruction is None:
        return None
    kind, payload = obstruction
    if kind == "claw":
        return {"kind": "claw", "center": payload[1],
                "leaves": sorted(payload[v] for v in (2, 3, 4))}
    if kind == "net":
        return {"kind": "net",
                "triangle": [payload[v] for v in (1, 2, 3)],
                "pendants": [payload[v] for v in (4, 5, 6)]}
    return payload.as_json()  # only suns remain


def _emit(args, data: dict) -> None:
    text = dump_json(data)
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _say(args, message: str) -> None:
    if args.verbose:
        print(message, file=sys.stderr)


def _load(args) -> Graph:
    return load_graph(args.graph, args.format)


def cmd_classify(args) -> int:
    g = _load(args)
    chordal = is_chordal(g)
    strongly = is_strongly_chordal(g)
    unit_interval = chordal and unit_interval_obstruction(g) is None
    report = {
        "chordal": chordal,
        "strongly_chordal": strongly,
        "unit_interval": unit_interval,
        "witness": None if unit_interval else _classification_witness(g),
    }
    _emit(args, report)
    _say(args, f"{args.graph}: chordal={chordal} strongly_chordal={strongly}")
    return EXIT_OK


def cmd_label(args) -> int:
    g = _load(args)
    try:
        lab = construct_mat_labeling(g)
    except NotStronglyChordalError as exc:
        _emit(args, {"error": "graph is not strongly chordal",
                     "witness": _witness_json(exc.witness)})
        _say(args, f"{args.graph}: rejected ({exc.kind} witness)")
        return EXIT_REJECT
    _emit(args, labeling_to_json_dict(lab))
    if args.dot:
        Path(args.dot).write_text(labeling_to_dot(lab))
    _say(args, f"{args.graph}: labeled, block sizes {lab.block_sizes()}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args)
    lab = parse_labeling_json(g, Path(args.labeling).read_text())
    violation = verify_mat_labeling(lab)
    if violation is None:
        _emit(args, {"ok": True})
        _say(args, f"{args.labeling}: valid MAT-labeling")
        return EXIT_OK
    _emit(args, {"ok": False, "violation": violation.as_json()})
    _say(args, f"{args.labeling}: invalid ({violation.kind} at level {violation.level})")
    return EXIT_REJECT


def cmd_exponents(args) -> int:
    g = _load(args)
    if args.labeling:
        lab = parse_labeling_json(g, Path(args.labeling).read_text())
        violation = verify_mat_labeling(lab)
        if violation is not None:
            _emit(args, {"error": "labeling is not a MAT-labeling",
                         "violation": violation.as_json()})
            return EXIT_REJECT
        exps = exponents_from_labeling(lab)
    else:
        maybe = peo_exponents(g)
        if maybe is None:
            _emit(args, {"error": "graph is not chordal and no labeling given"})
            return EXIT_REJECT
        exps = maybe
    report = {
        "exponents": list(exps),
        "chromatic_factors_check": check_terao_factorization(g, exps),
    }
    _emit(args, report)
    _say(args, f"{args.graph}: exponents {list(exps)}")
    return EXIT_OK


def cmd_poset(args) -> int:
    g = _load(args)
    if not is_chordal(g):
        _emit(args, {"error": "graph is not chordal",
                     "witness": _witness_json(find_chordless_cycle(g))})
        return EXIT_REJECT
    p = build_poset(g)
    crown = find_any_crown(p)
    if args.out and args.out.endswith(".dot"):
        Path(args.out).write_text(poset_to_dot(p))
    else:
        report = poset_to_json_dict(p)
        report["crown_free"] = crown is None
        report["crown"] = None if crown is None else crown.as_json()
        _emit(args, report)
    _say(args, f"{args.graph}: {len(p.nodes)} poset nodes, "
               f"crown_free={crown is None}")
    return EXIT_OK


def cmd_selftest(args) -> int:
    rng = random.Random(args.seed)
    mismatches = []
    checked = 0
    # recognizer three-way agreement on random graphs
    for _ in range(60):
        n = rng.randint(4, 7)
        m = rng.randint(n - 1, min(n * (n - 1) // 2, 14))
        g = families.random_graph(n, m, rng)
        checked += 1
        sc = is_strongly_chordal(g)
        via_sun = is_chordal(g) and detect_induced_sun(g) is None
        via_crown = is_chordal(g) and find_any_crown(build_poset(g)) is None
        if not (sc == via_sun == via_crown):
            mismatches.append({"graph": [list(e) for e in g.edges],
                               "check": "recognizers"})
    # construct and verify round trip on random strongly chordal graphs
    for _ in range(20):
        g = families.random_strongly_chordal(rng.randint(2, 12), rng=rng)
        checked += 1
        lab = construct_mat_labeling(g)
        if verify_mat_labeling(lab) is not None or find_mat_peo(lab) is None:
            mismatches.append({"graph": [list(e) for e in g.edges],
                               "check": "construct"})
        elif not check_terao_factorization(g, exponents_from_labeling(lab)):
            mismatches.append({"graph": [list(e) for e in g.edges],
                               "check": "factorization"})
    # existence oracle agreement on small graphs
    for _ in range(15):
        n = rng.randint(3, 6)
        m = rng.randint(0, min(n * (n - 1) // 2, args.max_brute_edges))
        g = families.random_graph(n, m, rng)
        checked += 1
        found = brute_force_mat_labeling(g, max_edges=args.max_brute_edges)
        if (found is not None) != is_strongly_chordal(g):
            mismatches.append({"graph": [list(e) for e in g.edges],
                               "check": "brute-force"})
    _emit(args, {"checked": checked, "mismatches": mismatches,
                 "seed": args.seed})
    _say(args, f"selftest: {checked} checks, {len(mismatches)} mismatches")
    return EXIT_OK if not mismatches else EXIT_REJECT


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="matlabel",
                     description="Strongly chordal graphs and MAT-labelings")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, labeling=False, out=True, dot=False):
        p.add_argument("graph", help="graph file (.txt edge list or .json)")
        if labeling:
            p.add_argument("labeling", nargs="?" if labeling == "optional" else None,
                           default=None, help="labeling JSON file")
        p.add_argument("--format", choices=["edgelist", "json"], default=None,
                       help="override input format detection")
        if out:
            p.add_argument("--out", default=None, help="write JSON here instead of stdout")
        if dot:
            p.add_argument("--dot", default=None, help="also write a DOT rendering here")
        p.add_argument("--verbose", action="store_true",
                       help="human-readable summary on stderr")

    p = sub.add_parser("classify", help="chordal / strongly chordal / unit interval")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("label", help="construct a MAT-labeling")
    common(p, dot=True)
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="check a labeling against the three conditions")
    common(p, labeling=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exponents", help="arrangement exponents and factorization check")
    common(p, labeling="optional")
    p.set_defaults(func=cmd_exponents)

    p = sub.add_parser("poset", help="clique intersection poset (JSON, or DOT via --out x.dot)")
    common(p)
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("selftest", help="sampled cross-checks of the recognizers")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-brute-edges", type=int, default=18)
    p.add_argument("--out", default=None)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"matlabel: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
