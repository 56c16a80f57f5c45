"""Text formats and JSON reports used by the command line tools.

Edge list files: a header line ``p <n> <m>`` followed by m lines
``e <u> <v>`` with 0-indexed endpoints in ascending edge-index order.
Lines starting with ``#`` are comments.  Ordering files: m lines
``<u> <v>``, one edge per label in label order.

Reports are JSON with sorted keys and a stable layout so identical inputs
produce identical bytes.  Rational values are serialized as exact fraction
strings like "5/2", never floats.
"""
from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .errors import FormatError
from .graphs import Graph, build_graph
from .orderings import EdgeOrdering
from .sequencer import CmsCertificate

SCHEMA_VERSION = 1


# -- edge lists ---------------------------------------------------------------


def format_edge_list(g: Graph) -> str:
    lines = [f"p {g.vertex_count} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    n = None
    declared = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate header")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: header must be 'p <n> <m>'")
            try:
                n, declared = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer header") from None
        elif parts[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: edge must be 'e <u> <v>'")
            try:
                pairs.append((int(parts[1]), int(parts[2])))
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer endpoint") from None
        else:
            raise FormatError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise FormatError("missing 'p' header line")
    if declared != len(pairs):
        raise FormatError(f"header declares {declared} edges, found {len(pairs)}")
    return build_graph(n, pairs)


# -- orderings -----------------------------------------------------------------


def format_ordering(o: EdgeOrdering) -> str:
    g = o.graph
    lines = []
    for e in o.seq:
        u, v = g.endpoints(e)
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def parse_ordering_pairs(text: str) -> list[tuple[int, int]]:
    """Vertex pairs named by an ordering file, in label order.

    Only syntax is checked here; whether every pair is a graph edge and the
    pairs form a permutation of all edges is the verifier's job.
    """
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected '<u> <v>'")
        try:
            out.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer endpoint") from None
    return out


def resolve_ordering(pairs, g: Graph) -> list[int] | None:
    """Map pairs to edge indices; None when any pair is not a graph edge."""
    out = []
    for u, v in pairs:
        if not g.has_pair(u, v):
            return None
        out.append(g.index_of(u, v))
    return out


# -- reports -------------------------------------------------------------------


def fraction_str(value) -> str:
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def parse_fraction(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def graph_digest(g: Graph) -> str:
    canonical = format_edge_list(g).encode()
    return "sha256:" + hashlib.sha256(canonical).hexdigest()


def ordering_payload(o: EdgeOrdering) -> list[list[int]]:
    return [list(o.graph.endpoints(e)) for e in o.seq]


def certificate_payload(cert: CmsCertificate) -> dict:
    return {
        "method": cert.method,
        "graph": {"n": cert.n, "m": cert.m, "k": cert.k, "c": cert.c},
        "parameters": {k: v for k, v in sorted(cert.parameters.items())},
        "claimed_bound": cert.claimed_bound,
        "measured_cms": cert.measured_cms,
        "verified": cert.verified,
        "ordering": ordering_payload(cert.ordering),
    }


def make_report(command: str, g: Graph, params: dict, result: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input": {"digest": graph_digest(g), "n": g.vertex_count, "m": g.m},
        "parameters": params,
        "result": result,
    }


def dump_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def load_report(text: str) -> dict:
    try:
        report = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad report JSON: {exc}") from None
    if not isinstance(report, dict) or "schema_version" not in report:
        raise FormatError("not a report object")
    return report
