"""Command-line entry point: ``paraglider <subcommand> ...``.

Exit codes: 0 success, 1 a property violation was found, 2 usage, parse,
size or class-precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .certify import MINOR_MAX_N, certify_conjecture, has_odd_clique_minor, oh_small
from .cover import build_cover, color, cover_over_all_c5s, witness_independent_set
from .decompose import classify, decompose, validate_structure
from .errors import ClassViolation, InternalContradiction, ParagliderError
from .exact import CLIQUE_CAP, COLORING_CAP, chromatic_number, max_clique, theta_triangle_free
from .families import GenParams, make_bhat, make_hstar, make_ht, random_class_member
from .graph import Graph, bits, components, format_graph, parse_graph, read_graph
from .patterns import PatternName, class_H_failure, has_induced, is_quasi_line, target_class_failure

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(path: str, complement: bool = False) -> Graph:
    g = parse_graph(sys.stdin.read()) if path == "-" else read_graph(path)
    return g.complement() if complement else g


def _emit(data: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(data, indent=2, sort_keys=False, default=str))
        return
    for line in _flatten(data):
        print(line)


def _flatten(data, prefix: str = ""):
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            yield from _flatten(value, name + ".")
        else:
            yield f"{name}: {value}"


def _sets(masks) -> list[list[int]]:
    return [sorted(bits(m)) for m in masks]


# -- analyze --------------------------------------------------------------------

def analyze(g: Graph) -> tuple[dict, int]:
    h = g.complement()
    fail = target_class_failure(g)
    report: dict = {"input": {"n": g.n, "m": g.m}}
    report["predicates"] = {
        "alpha_le_2": not has_induced(PatternName.THREE_K1, g),
        "paraglider_free": not has_induced(PatternName.PARAGLIDER, g),
        "target_class": fail is None,
        "complement_in_H": class_H_failure(h) is None,
        "quasi_line": is_quasi_line(g),
        "house_free": not has_induced(PatternName.HOUSE, g),
        "W4_free": not has_induced(PatternName.W4, g),
    }
    if fail is not None:
        report["predicates"]["target_failure"] = f"{fail[0]} at {list(fail[1])}"
    inv: dict = {}
    if g.n <= CLIQUE_CAP:
        inv["omega"] = max_clique(g).bit_count()
        inv["alpha"] = max_clique(h).bit_count()
    if report["predicates"]["alpha_le_2"]:
        inv["chi"] = theta_triangle_free(h)[0]
        inv["chi_source"] = "n - max matching of the complement"
    elif g.n <= COLORING_CAP:
        inv["chi"] = chromatic_number(g)
        inv["chi_source"] = "exact coloring search"
    report["invariants"] = inv
    status = EXIT_OK
    if fail is None:
        try:
            big = [c for c in components(h) if c.bit_count() > 1]
            if report["predicates"]["complement_in_H"]:
                d = decompose(h)
                report["decomposition"] = d.summary()
                report["decomposition"]["label"] = classify(h, d).label.value
                report["decomposition"]["structure_ok"] = validate_structure(h, d).ok
            elif big:
                report["decomposition"] = {"note": "complement is perfect or has isolated vertices"}
            coloring, trace = color(g)
            report["cover"] = {
                "colors": coloring.count,
                "case": trace.case,
                "claimed": trace.claimed,
                "bound": trace.bound,
                "alpha_used": trace.alpha,
                "alpha_source": trace.alpha_source,
            }
        except InternalContradiction as exc:
            report["cover"] = {"error": str(exc)}
            status = EXIT_VIOLATION
    if g.n <= CLIQUE_CAP:
        report["certificate"] = certify_conjecture(g).to_dict()
    return report, status


# -- subcommands -------------------------------------------------------------------

def _cmd_analyze(args) -> int:
    report, status = analyze(_load(args.graph))
    _emit(report, args.json)
    return status


def _cmd_color(args) -> int:
    g = _load(args.graph)
    coloring, trace = color(g)
    data = {
        "colors": coloring.count,
        "classes": coloring.classes(),
        "assignment": list(coloring.colors),
        "trace": trace.to_dict(),
    }
    _emit(data, args.json)
    return EXIT_OK


def _cmd_cover(args) -> int:
    h = _load(args.graph, args.complement)
    if args.all_c5:
        fail = class_H_failure(h)
        if fail is not None:
            raise ClassViolation(*fail)
        probes = cover_over_all_c5s(h)
        data = {
            "c5_count": len(probes),
            "probes": [
                {"c5": list(p.c5), "size": p.size, "case": p.case, "within_bound": p.within_bound, "error": p.error}
                for p in probes
            ],
        }
        if args.json:
            _emit(data, True)
        else:
            print(f"c5_count: {len(probes)}")
            for p in probes:
                print(f"c5 {list(p.c5)}: size={p.size} case={p.case} within_bound={p.within_bound}" + (f" error={p.error}" if p.error else ""))
        return EXIT_OK
    cover, trace = build_cover(h)
    data = {"size": len(cover), "parts": cover.as_lists(), "trace": trace.to_dict()}
    if args.json:
        _emit(data, True)
    else:
        print(f"size: {len(cover)}")
        print("parts: " + " ".join("{" + ",".join(map(str, p)) + "}" for p in cover.as_lists()))
        print(trace.to_text())
    return EXIT_OK


def _cmd_witness(args) -> int:
    h = _load(args.graph, args.complement)
    fail = class_H_failure(h)
    if fail is not None:
        raise ClassViolation(*fail)
    w = witness_independent_set(h, decompose(h))
    _emit(w.to_dict(), args.json)
    return EXIT_OK


def _cmd_generate(args) -> int:
    if args.family == "hstar":
        h, note = make_hstar(), "H*"
    elif args.family == "bhat":
        h, note = make_bhat(args.s), f"Bhat_{args.s}"
    elif args.family == "ht":
        h, note = make_ht(args.t), f"H_{args.t}"
    else:
        params = GenParams(seed=args.seed, n_target=args.n)
        h, note = random_class_member(params), f"random member, seed {args.seed}, n_target {args.n}"
    g = h.complement() if args.complement else h
    side = "complement G" if args.complement else "H"
    sys.stdout.write(format_graph(g, f"{note} ({side})"))
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    from .acceptance import isomorphism_classes
    from .enumeration import MAX_ENUM_N, check_target_graph, scan, target_class_graphs

    if not 0 <= args.n <= MAX_ENUM_N:
        raise argparse.ArgumentTypeError(f"--n must lie in 0..{MAX_ENUM_N}")
    if args.iso:
        violations = []
        reps = isomorphism_classes(target_class_graphs(args.n))
        for g, _ in reps:
            problems, _ = check_target_graph(g)
            violations += [{"edges": [list(e) for e in g.edges()], "reason": why} for why in problems]
        data = {"n": args.n, "target_class_labeled": sum(m for _, m in reps), "target_class_iso": len(reps), "violations": violations}
    else:
        data = scan(args.n).to_dict()
    if args.json:
        _emit(data, True)
    else:
        for key, value in data.items():
            if key != "violations":
                print(f"{key}: {value}")
        print(f"violations: {len(data['violations'])}")
        for v in data["violations"]:
            print(f"  {v['reason']}: {v['edges']}")
    return EXIT_VIOLATION if data["violations"] else EXIT_OK


def _cmd_oddminor(args) -> int:
    g = _load(args.graph)
    if args.t is None:
        _emit({"n": g.n, "oh": oh_small(g)}, args.json)
        return EXIT_OK
    found, model = has_odd_clique_minor(g, args.t)
    data = {"n": g.n, "t": args.t, "found": found}
    if model is not None:
        data["model"] = model.to_dict()
    _emit(data, args.json)
    return EXIT_OK


def _cmd_certify(args) -> int:
    cert = certify_conjecture(_load(args.graph))
    if args.json:
        _emit(cert.to_dict(), True)
    else:
        print(cert.to_text())
    return EXIT_OK


def _cmd_selftest(args) -> int:
    from .acceptance import run

    numbers = [int(x) for x in args.criteria.split(",")] if args.criteria else None
    results = run(numbers)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="paraglider", description="Structure, covers and colorings of {3K1, paraglider}-free graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name: str, help_text: str, fn, complement_flag: bool = False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", help="graph file in edge-list format, or - for stdin")
        p.add_argument("--json", action="store_true", help="structured output")
        if complement_flag:
            p.add_argument("--complement", action="store_true", help="the file holds G; work on its complement")
        p.set_defaults(fn=fn)
        return p

    graph_cmd("analyze", "full report for a graph G", _cmd_analyze)
    graph_cmd("color", "color a {3K1, paraglider}-free graph G", _cmd_color)
    cover = graph_cmd("cover", "clique cover of a {K3, P2uP3}-free graph H", _cmd_cover, True)
    cover.add_argument("--all-c5", action="store_true", help="run the construction from every induced C5")
    graph_cmd("witness", "independent-set witness for a member H of the class", _cmd_witness, True)
    odd = graph_cmd("oddminor", f"odd clique minors (n <= {MINOR_MAX_N})", _cmd_oddminor)
    odd.add_argument("--t", type=int, default=None, help="test a single order t instead of computing oh")
    graph_cmd("certify", "which known result gives oh(G) >= chi(G)", _cmd_certify)

    gen = sub.add_parser("generate", help="emit a named or random graph")
    gen.add_argument("--family", choices=["hstar", "bhat", "ht", "random"], required=True)
    gen.add_argument("--s", type=int, default=2)
    gen.add_argument("--t", type=int, default=1)
    gen.add_argument("--seed", type=int, default=1)
    gen.add_argument("--n", type=int, default=20, help="size target for --family random")
    gen.add_argument("--complement", action="store_true", help="emit G, the complement of the generated H")
    gen.set_defaults(fn=_cmd_generate)

    enum = sub.add_parser("enumerate", help="check the bounds on every target-class graph on n vertices")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--iso", action="store_true", help="check one graph per isomorphism class")
    enum.add_argument("--json", action="store_true")
    enum.set_defaults(fn=_cmd_enumerate)

    st = sub.add_parser("selftest", help="run the acceptance suite")
    st.add_argument("--criteria", default="", help="comma-separated criterion numbers (default: all)")
    st.set_defaults(fn=_cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InternalContradiction as exc:
        print(f"paraglider: property violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (ParagliderError, argparse.ArgumentTypeError, OSError, ValueError) as exc:
        print(f"paraglider: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
