"""JSON encoding of graphs, complexes, hypergraphs, homology, presentations and metrics.

Readers reject unknown fields and malformed values with :class:`FormatError`.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .complexes import SimplicialComplex
from .graphs import Digraph, Graph
from .grouppres import GroupPresentation
from .homology import HomologyResult
from .hypergraphs import Hypergraph
from .metric import FiniteMetricSpace


class FormatError(ValueError):
    pass


def _fields(data, required: set, optional: set = frozenset(), what: str = "object") -> dict:
    if not isinstance(data, dict):
        raise FormatError(f"{what} must be a JSON object")
    unknown = set(data) - required - set(optional)
    if unknown:
        raise FormatError(f"unknown {what} field(s): {', '.join(sorted(unknown))}")
    missing = required - set(data)
    if missing:
        raise FormatError(f"missing {what} field(s): {', '.join(sorted(missing))}")
    return data


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"{what} must be an integer")
    return x


def _int_list(xs, what: str) -> list:
    if not isinstance(xs, list):
        raise FormatError(f"{what} must be a list")
    return [_int(x, what) for x in xs]


def graph_to_json(g) -> dict:
    if isinstance(g, Digraph):
        return {"type": "digraph", "n": g.n, "edges": [list(a) for a in g.sorted_arcs()]}
    return {"type": "graph", "n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def graph_from_json(data):
    _fields(data, {"type", "n", "edges"}, what="graph")
    n = _int(data["n"], "n")
    if not isinstance(data["edges"], list):
        raise FormatError("edges must be a list")
    pairs = []
    for e in data["edges"]:
        e = _int_list(e, "edge endpoint")
        if len(e) != 2:
            raise FormatError("each edge must have two endpoints")
        pairs.append(tuple(e))
    try:
        if data["type"] == "graph":
            return Graph.from_edges(n, pairs)
        if data["type"] == "digraph":
            return Digraph.from_arcs(n, pairs)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    raise FormatError(f"unknown graph type {data['type']!r}")


def complex_to_json(k: SimplicialComplex) -> dict:
    if k.void:
        return {"ground": list(k.ground), "void": True}
    return {"ground": list(k.ground), "facets": [list(f) for f in k.facets]}


def complex_from_json(data) -> SimplicialComplex:
    _fields(data, {"ground"}, {"facets", "void"}, what="complex")
    ground = data["ground"]
    if not isinstance(ground, list):
        raise FormatError("ground must be a list")
    try:
        if data.get("void"):
            if data.get("facets"):
                raise FormatError("a void complex has no facets")
            return SimplicialComplex.void_complex(ground)
        if "facets" not in data:
            raise FormatError("complex needs facets or void")
        facets = data["facets"]
        if not isinstance(facets, list) or any(not isinstance(f, list) for f in facets):
            raise FormatError("facets must be a list of lists")
        return SimplicialComplex.from_simplices(ground, [tuple(f) for f in facets])
    except FormatError:
        raise
    except (ValueError, TypeError) as exc:
        raise FormatError(str(exc)) from None


def hypergraph_to_json(h: Hypergraph) -> dict:
    return {"n": h.n, "hyperedges": [list(e) for e in h.sorted_hyperedges()]}


def hypergraph_from_json(data) -> Hypergraph:
    _fields(data, {"n", "hyperedges"}, what="hypergraph")
    if not isinstance(data["hyperedges"], list):
        raise FormatError("hyperedges must be a list")
    edges = [tuple(_int_list(e, "hyperedge vertex")) for e in data["hyperedges"]]
    try:
        return Hypergraph(_int(data["n"], "n"), frozenset(edges))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def homology_from_json(data) -> HomologyResult:
    _fields(data, {"dims"}, what="homology")
    dims = data["dims"]
    if not isinstance(dims, dict):
        raise FormatError("dims must be an object")
    for d, v in dims.items():
        _fields(v, {"betti", "torsion"}, what="homology dimension")
        try:
            int(d)
        except ValueError:
            raise FormatError(f"bad dimension key {d!r}") from None
        _int(v["betti"], "betti")
        _int_list(v["torsion"], "torsion")
    return HomologyResult.from_json(data)


def presentation_from_json(data) -> GroupPresentation:
    _fields(data, {"generators", "relators"}, what="presentation")
    rels = data["relators"]
    if not isinstance(rels, list):
        raise FormatError("relators must be a list")
    try:
        return GroupPresentation.build(
            _int(data["generators"], "generators"), [_int_list(r, "relator letter") for r in rels]
        )
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def metric_from_json(data) -> FiniteMetricSpace:
    _fields(data, {"n", "dist"}, what="metric")
    n = _int(data["n"], "n")
    rows = data["dist"]
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise FormatError("dist must be a list of lists")
    try:
        dist = tuple(tuple(Fraction(str(x)) for x in row) for row in rows)
        return FiniteMetricSpace(n, dist)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(str(exc)) from None


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from None


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True)
