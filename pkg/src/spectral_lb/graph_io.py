"""File formats: edge-list text, JSON graph documents, partition documents.

The edge-list format is `n m` on the first line followed by m lines
`u v [weight]`, with `#` comments, `p/q` rational weights and `u u` loops
allowed in weighted files.  JSON documents carry a format version field
and one of three graph types.  Partition and certificate documents are
the JSON surface of the clique machinery.
"""

from __future__ import annotations

import json

from .decomp import CliquePartition
from .graphs import (
    Multigraph,
    SimpleGraph,
    WeightedGraph,
    build_multigraph,
    build_simple,
    build_weighted,
)
from .rationals import Q, format_q, parse_q

FORMAT_VERSION = 1


class ParseError(ValueError):
    """Input rejected; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def parse_edge_list(text: str) -> WeightedGraph:
    """Parse the `n m` / `u v [weight]` format into a weighted graph."""

    header = None
    weights = {}
    count = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError("expected header 'n m'", lineno)
            try:
                header = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise ParseError("header entries must be integers", lineno)
            if header[0] < 0 or header[1] < 0:
                raise ParseError("header entries must be nonnegative", lineno)
            continue
        if len(parts) not in (2, 3):
            raise ParseError("expected 'u v' or 'u v weight'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("endpoints must be integers", lineno)
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range 0..{n - 1}", lineno)
        w = Q(1)
        if len(parts) == 3:
            try:
                w = parse_q(parts[2])
            except ValueError as exc:
                raise ParseError(str(exc), lineno)
        key = (u, v) if u <= v else (v, u)
        weights[key] = weights.get(key, Q(0)) + w
        count += 1
    if header is None:
        raise ParseError("empty input", 1)
    if count != header[1]:
        raise ParseError(f"header promised {header[1]} edges, found {count}")
    return build_weighted(header[0], weights)


def format_edge_list(g) -> str:
    """Render any graph kind in the edge-list format."""

    if isinstance(g, SimpleGraph):
        entries = [(u, v, None) for u, v in g.edges()]
        n = g.n
    elif isinstance(g, Multigraph):
        entries = [(u, v, Q(m)) for (u, v), m in sorted(g.mult.items())]
        n = g.n
    elif isinstance(g, WeightedGraph):
        entries = [(u, v, w) for (u, v), w in sorted(g.weights.items())]
        n = g.n
    else:
        raise TypeError(f"not a graph value: {g!r}")
    lines = [f"{n} {len(entries)}"]
    for u, v, w in entries:
        if w is None or w == 1:
            lines.append(f"{u} {v}")
        else:
            lines.append(f"{u} {v} {format_q(w)}")
    return "\n".join(lines) + "\n"


def graph_to_json(g) -> dict:
    if isinstance(g, SimpleGraph):
        return {
            "fmt": FORMAT_VERSION,
            "type": "simple",
            "n": g.n,
            "edges": [[u, v] for u, v in g.edges()],
        }
    if isinstance(g, Multigraph):
        return {
            "fmt": FORMAT_VERSION,
            "type": "multigraph",
            "n": g.n,
            "mult": [[u, v, m] for (u, v), m in sorted(g.mult.items())],
        }
    if isinstance(g, WeightedGraph):
        doc = {
            "fmt": FORMAT_VERSION,
            "type": "weighted",
            "n": g.n,
            "weights": [
                [u, v, format_q(w)] for (u, v), w in sorted(g.weights.items())
            ],
        }
        if g.labels is not None:
            doc["labels"] = list(g.labels)
        return doc
    raise TypeError(f"not a graph value: {g!r}")


def graph_from_json(doc: dict):
    if not isinstance(doc, dict) or doc.get("fmt") != FORMAT_VERSION:
        raise ParseError(f"unsupported or missing format version: {doc.get('fmt')!r}")
    kind = doc.get("type")
    n = doc.get("n")
    if not isinstance(n, int) or n < 0:
        raise ParseError("missing or bad vertex count")
    try:
        if kind == "simple":
            return build_simple(n, [tuple(e) for e in doc["edges"]])
        if kind == "multigraph":
            return build_multigraph(n, {(u, v): m for u, v, m in doc["mult"]})
        if kind == "weighted":
            weights = {(u, v): parse_q(w) for u, v, w in doc["weights"]}
            return build_weighted(n, weights, labels=doc.get("labels"))
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad graph document: {exc}")
    raise ParseError(f"unknown graph type: {kind!r}")


def load_graph_text(text: str):
    """Auto-detect JSON versus edge-list by the first non-comment byte."""

    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line[0] == "{":
            try:
                return graph_from_json(json.loads(text))
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad JSON: {exc}", exc.lineno)
        return parse_edge_list(text)
    raise ParseError("empty input", 1)


def require_simple(g) -> SimpleGraph:
    """Downcast to a simple graph; weight-1 loopless weighted graphs qualify."""

    if isinstance(g, SimpleGraph):
        return g
    if isinstance(g, Multigraph):
        if g.is_loopless and all(m == 1 for m in g.mult.values()):
            return g.underlying_simple()
        raise ValueError("multigraph has loops or multiplicities above 1")
    if isinstance(g, WeightedGraph):
        if all(u != v and w == 1 for (u, v), w in g.weights.items()):
            return build_simple(g.n, list(g.weights))
        raise ValueError("weighted graph is not a 0/1 loopless graph")
    raise TypeError(f"not a graph value: {g!r}")


# ---------------------------------------------------------------------------
# partitions and certificates


def partition_to_json(k: CliquePartition) -> dict:
    return {"mu": k.mu, "cliques": [list(c) for c in k.cliques]}


def partition_from_json(doc: dict) -> CliquePartition:
    try:
        mu = doc["mu"]
        cliques = tuple(tuple(int(v) for v in c) for c in doc["cliques"])
        return CliquePartition(int(mu), cliques)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad partition document: {exc}")


def certificate_to_json(result) -> dict:
    """Serialise a LambdaStarResult: partition schema plus mu and exact value."""

    doc = {"mu": result.mu, "value": format_q(result.value)}
    cliques = []
    pieces = []
    for key, count in sorted(result.multiplicities.items()):
        if isinstance(key, tuple) and key and isinstance(key[0], str):
            kind, subset = key
            pieces.append({"kind": kind, "subset": list(subset), "coeff": count})
        else:
            cliques.extend([list(key)] * count)
    if pieces:
        doc["pieces"] = pieces
    else:
        doc["cliques"] = cliques
    return doc
