"""Command-line interface.

Exit codes: 0 ok, 1 verified false, 2 inconclusive, 3 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import io
from .complexes import (
    ComplexError,
    alexander_dual,
    clique_complex,
    closed_neighborhood_complex,
    independence_complex,
    open_neighborhood_complex,
)
from .digraph_ext import left_closed_nbhd_complex, right_closed_nbhd_complex
from .graphs import Digraph, Graph, GraphError, complement, double_cover, generate
from .grouppres import PresentationError, abelianization_invariants, edge_path_presentation, tietze_simplify
from .homology import FieldSpec, HomologyError, betti_over_field, reduced_homology_z
from .hypergraphs import dominance_complex, independence_complex_hyper, neighborhood_hypergraph
from .kpath import PathError, bounded_equivalence_graph
from .metric import MetricError, cech_complex, circle_metric, circle_sample
from .verify import SUITES, SuiteError, run_suite

EXIT_OK, EXIT_FALSE, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _emit(data):
    sys.stdout.write(io.dumps(data) + "\n")


GRAPH_KINDS = {
    "closed-nbhd": lambda g, k: closed_neighborhood_complex(g, k),
    "open-nbhd": lambda g, k: open_neighborhood_complex(g),
    "clique": lambda g, k: clique_complex(g),
    "independence": lambda g, k: independence_complex(g),
    "double-cover-independence": lambda g, k: independence_complex(double_cover(g)),
    "dominance": lambda g, k: dominance_complex(g),
    "nbhd-hypergraph-independence": lambda g, k: independence_complex_hyper(neighborhood_hypergraph(g)),
}
DIGRAPH_KINDS = {
    "right-closed-nbhd": right_closed_nbhd_complex,
    "left-closed-nbhd": left_closed_nbhd_complex,
}


def cmd_gen(args) -> int:
    g = generate(args.family, *args.params, seed=args.seed)
    _emit(io.graph_to_json(g))
    return EXIT_OK


def cmd_complex(args) -> int:
    g = io.graph_from_json(io.loads(_read(args.input)))
    if args.kind in DIGRAPH_KINDS:
        if not isinstance(g, Digraph):
            g = Digraph.from_graph(g)
        k = DIGRAPH_KINDS[args.kind](g, args.k)
    else:
        if isinstance(g, Digraph):
            raise UsageError(f"{args.kind} needs an undirected graph")
        if args.complement:
            g = complement(g)
        k = GRAPH_KINDS[args.kind](g, args.k)
    _emit(io.complex_to_json(k))
    return EXIT_OK


def cmd_dual(args) -> int:
    k = io.complex_from_json(io.loads(_read(args.input)))
    _emit(io.complex_to_json(alexander_dual(k)))
    return EXIT_OK


def cmd_homology(args) -> int:
    k = io.complex_from_json(io.loads(_read(args.input)))
    if args.field:
        f = FieldSpec.parse(args.field)
        betti = betti_over_field(k, f)
        if args.json:
            _emit({"field": str(f), "betti": {str(d - 1): b for d, b in enumerate(betti)}})
        else:
            print(f"field {f}")
            print("dim  betti")
            for d, b in enumerate(betti):
                print(f"{d - 1:>3}  {b:>5}")
        return EXIT_OK
    h = reduced_homology_z(k)
    if args.json:
        _emit(h.to_json())
    else:
        print(h.table())
    return EXIT_OK


def cmd_pi1(args) -> int:
    k = io.complex_from_json(io.loads(_read(args.input)))
    base = args.base if args.base is not None else (k.vertices[0] if not k.void and k.vertices else None)
    if base is None:
        raise UsageError("complex has no vertices")
    pres = edge_path_presentation(k, base)
    simple, cert = tietze_simplify(pres, args.budget)
    free, torsion = abelianization_invariants(pres)
    if args.json:
        _emit({
            "presentation": pres.to_json(),
            "simplified": simple.to_json(),
            "certificate": cert,
            "abelianization": {"free_rank": free, "torsion": list(torsion)},
        })
    else:
        print(f"generators: {pres.generators}")
        print(f"relators: {len(pres.relators)}")
        for r in pres.relators:
            print("  " + " ".join(str(x) for x in r))
        print(f"simplified: {simple.describe()}")
        print(f"certificate: {cert}")
        tors = ", ".join(f"Z/{t}" for t in torsion)
        print(f"abelianization: Z^{free}" + (f" + {tors}" if tors else ""))
    return EXIT_OK


def _parse_path(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise UsageError(f"bad path {text!r}; expected comma-separated vertex ids") from None


def cmd_kpath_equiv(args) -> int:
    g = io.graph_from_json(io.loads(_read(args.graph)))
    if not isinstance(g, Graph):
        raise UsageError("kpath-equiv needs an undirected graph")
    res = bounded_equivalence_graph(
        g, _parse_path(args.loop), _parse_path(args.loop2), args.k,
        max_len=args.max_len, max_states=args.max_states,
    )
    _emit({"status": res.status, "states": res.states, "witness": res.moves(args.k)})
    return EXIT_OK if res.equivalent else EXIT_INCONCLUSIVE


def cmd_metric(args) -> int:
    _emit(circle_metric(circle_sample(args.n)).to_json())
    return EXIT_OK


def cmd_cech(args) -> int:
    x = io.metric_from_json(io.loads(_read(args.input)))
    try:
        r = Fraction(args.radius)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad radius {args.radius!r}") from None
    _emit(io.complex_to_json(cech_complex(x, r, args.closed)))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    code = EXIT_OK
    for name in names:
        rep = run_suite(name, args.seed, args.cases)
        if args.json:
            _emit(rep.to_json(timing=not args.no_timing))
        else:
            status = {0: "pass", 1: "FAIL", 2: "inconclusive"}[rep.exit_code()]
            print(f"{name}: {status}  cases={rep.cases} failures={len(rep.failures)} "
                  f"inconclusive={rep.inconclusive} skipped={len(rep.skipped)} time={rep.wall_time:.1f}s")
            for f in rep.failures[:10]:
                print(f"  {f['case']}: expected {f['expected']}, got {f['actual']}")
        if rep.exit_code() == EXIT_FALSE or code == EXIT_FALSE:
            code = EXIT_FALSE
        else:
            code = max(code, rep.exit_code())
    return code


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="closednbhd", description="Closed neighborhood complexes of graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", help="generate a graph or digraph as JSON")
    s.add_argument("family", help="complete, empty, path, cycle, hypercube, gnp, forest, "
                                  "random-digraph, x1, x2, x2-window")
    s.add_argument("params", nargs="*", help="family parameters, e.g. 'cycle 5' or 'gnp 6 0.5 SEED'")
    s.add_argument("--seed", type=int, default=None, help="seed for random families")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("complex", help="build a complex from a graph JSON")
    s.add_argument("kind", choices=sorted(GRAPH_KINDS) + sorted(DIGRAPH_KINDS))
    s.add_argument("-k", type=int, default=1, help="neighborhood radius (default 1)")
    s.add_argument("-i", "--input", default=None, help="graph JSON file (default stdin)")
    s.add_argument("--complement", action="store_true", help="use the complement graph")
    s.set_defaults(func=cmd_complex)

    s = sub.add_parser("dual", help="combinatorial Alexander dual of a complex JSON")
    s.add_argument("-i", "--input", default=None, help="complex JSON file (default stdin)")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("homology", help="reduced homology of a complex JSON")
    s.add_argument("-i", "--input", default=None, help="complex JSON file (default stdin)")
    s.add_argument("--json", action="store_true", help="print homology JSON instead of a table")
    s.add_argument("--field", default=None, help="Betti numbers over Q or GF(p), e.g. Q, 2, 3")
    s.set_defaults(func=cmd_homology)

    s = sub.add_parser("pi1", help="edge-path presentation and its simplification")
    s.add_argument("-i", "--input", default=None, help="complex JSON file (default stdin)")
    s.add_argument("--base", type=int, default=None, help="base vertex (default smallest vertex)")
    s.add_argument("--budget", type=int, default=10**5, help="Tietze step budget")
    s.add_argument("--json", action="store_true", help="print JSON")
    s.set_defaults(func=cmd_pi1)

    s = sub.add_parser("kpath-equiv", help="bounded search for closed k-homotopy of two paths")
    s.add_argument("--graph", required=True, help="graph JSON file")
    s.add_argument("-k", type=int, required=True, help="k >= 2")
    s.add_argument("--loop", required=True, help="first path, e.g. 0,1,2,0")
    s.add_argument("--loop2", required=True, help="second path with the same endpoints")
    s.add_argument("--max-len", type=int, default=12, help="longest path visited")
    s.add_argument("--max-states", type=int, default=20000, help="state budget")
    s.set_defaults(func=cmd_kpath_equiv)

    s = sub.add_parser("metric", help="finite metric spaces")
    msub = s.add_subparsers(dest="space", required=True, parser_class=_Parser)
    c = msub.add_parser("circle", help="n evenly spaced points on R/Z")
    c.add_argument("-n", type=int, required=True)
    c.set_defaults(func=cmd_metric)

    s = sub.add_parser("cech", help="Čech complex of a metric JSON")
    s.add_argument("-i", "--input", default=None, help="metric JSON file (default stdin)")
    s.add_argument("-r", "--radius", required=True, help="rational radius, e.g. 1/6")
    flag = s.add_mutually_exclusive_group()
    flag.add_argument("--closed", dest="closed", action="store_true", default=True, help="closed balls (default)")
    flag.add_argument("--open", dest="closed", action="store_false", help="open balls")
    s.set_defaults(func=cmd_cech)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite", choices=list(SUITES) + ["all"])
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cases", type=int, default=None, help="random instances (default per suite)")
    s.add_argument("--json", action="store_true", help="print the report JSON")
    s.add_argument("--no-timing", action="store_true", help="omit wall_time from JSON")
    s.set_defaults(func=cmd_verify)
    return p


# every domain error subclasses ValueError; bad numeric params raise it too
INPUT_ERRORS = (
    UsageError, io.FormatError, GraphError, ComplexError, HomologyError, PresentationError,
    PathError, MetricError, SuiteError, ValueError,
)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        sys.stderr.write(f"closednbhd: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
