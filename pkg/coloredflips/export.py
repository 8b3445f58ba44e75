# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur

Documents written to standard output by the command line: JSON lines for the
enumerated objects and graph documents in DOT or JSON. Everything is sorted
before it is written so repeated runs give identical bytes.

To plot a graph document run, e.g.:

    coloredflips graph --n 6 --format dot > flips6.gv
    dot -Tpng -O flips6.gv

Functions:
- enumeration_lines: one JSON object per element plus a count line.
- graph_edges: the sorted labeled edge list of the flip or chamber graph.
- to_dot / to_json_graph: the two graph formats.
"""
# Standard library
import enum
import json
import logging
import typing
# Third party
import networkx as nx
# Local imports
from coloredflips import arcperm
from coloredflips import arrangement
from coloredflips import codec
from coloredflips import flipgraph
from coloredflips import tableaux
# Constants
Edge = typing.Tuple[str, str, str]
logger: logging.Logger = logging.getLogger(__name__)


class What(str, enum.Enum):
    CTFT = "ctft"
    ARCPERM = "arcperm"
    CLASSES = "classes"
    TABLEAUX = "tableaux"


class GraphFormat(str, enum.Enum):
    DOT = "dot"
    JSON = "json"


class Labels(str, enum.Enum):
    DIAGONAL = "diagonal"
    GENERATOR = "generator"
    HYPERPLANE = "hyperplane"


def dumps(document: typing.Any) -> str:
    """Compact JSON with sorted keys."""
    return json.dumps(document, ensure_ascii=False, sort_keys=True,
                      separators=(",", ":"))


###############################################################################
# Enumeration                                                                 #
###############################################################################
def _records(n: int, what: What) -> typing.List[typing.Dict[str, typing.Any]]:
    """The plain records of a family, in canonical order."""
    if what is What.CTFT:
        return [{"n": n, "code": str(code),
                 "chords": [c.as_list() for c in codec.decode(code).chords]}
                for code in codec.all_codes(n)]
    if what is What.ARCPERM:
        return [perm.to_dict()
                for perm in sorted(arcperm.enumerate_arc_perms(n))]
    if what is What.CLASSES:
        return [cl.to_dict() for cl in sorted(arcperm.enumerate_classes(n))]
    return [tableau.to_dict()
            for tableau in tableaux.enumerate_syt(tableaux.make_shape(n - 3))]


def enumeration_lines(n: int, what: What) -> typing.Iterator[str]:
    """
    JSON lines for every element of the chosen family, in canonical order,
    closed by a summary line {"count": ...}.

    Parameters:
        n : The polygon size (or the size of Z_n for arc permutations).
        what : ctft, arcperm, classes or tableaux.

    Returns:
        An iterator over the lines, without line ends.
    """
    what = What(what)
    records = _records(n, what)
    logger.info(f"{len(records)} elements of {what.value} for n={n}.")
    for record in records:
        yield dumps(record)
    yield dumps({"count": len(records), "n": n, "what": what.value})


###############################################################################
# Graphs                                                                      #
###############################################################################
def _pair(a: int, b: int) -> str:
    return f"{a},{b}"


def _flip_edges(n: int, labels: Labels) -> typing.List[Edge]:
    """
    The edges of the flip graph from their lower end, labeled by the erased
    diagonal or by the generator.
    """
    graph = flipgraph.build(n)
    return [(str(code), str(edge.target),
             str(edge.generator) if labels is Labels.GENERATOR
             else _pair(edge.erased.a, edge.erased.b))
            for code, edge in graph.edges()]


def _chamber_edges(n: int) -> typing.List[Edge]:
    """
    The chamber graph of the classes of arc permutations, its vertices
    named by the codes of the triangulations sent to them and every edge
    oriented towards the larger rank.
    """
    chambers: nx.Graph = arrangement.classes_chamber_graph(n)
    name: typing.Dict[arrangement.Chamber, codec.Code] = {
        chamber: codec.encode(arcperm.f_inv(cl))
        for chamber, cl in chambers.nodes(data="arc_class")}
    edges: typing.List[Edge] = []
    for first, second, hyperplane in chambers.edges(data="hyperplane"):
        source, target = name[first], name[second]
        step: int = codec.rank(target) - codec.rank(source)
        if step % codec.modulus(n) != 1:
            source, target = target, source
        edges.append((str(source), str(target), _pair(*hyperplane)))
    return edges


def graph_edges(n: int, labels: Labels = Labels.DIAGONAL
                ) -> typing.Tuple[typing.List[str], typing.List[Edge]]:
    """
    The vertices and the labeled edges of the flip graph, sorted. Every edge
    runs from its lower end in the orientation to its upper end.

    - diagonal: the edge is labeled "i,j" by the diagonal it erases;
    - generator: the edge is labeled by the index of its flip;
    - hyperplane: the graph of chambers is built instead and every edge is
      labeled "i,j" by the hyperplane it crosses.

    The diagonal and the hyperplane views give the same edge list.
    """
    labels = Labels(labels)
    vertices: typing.List[str] = sorted(str(c) for c in codec.all_codes(n))
    edges = (_chamber_edges(n) if labels is Labels.HYPERPLANE
             else _flip_edges(n, labels))
    return vertices, sorted(edges)


def to_dot(n: int, oriented: bool = False,
           labels: Labels = Labels.DIAGONAL) -> str:
    """The flip graph as a DOT document, arcs when oriented."""
    labels = Labels(labels)
    vertices, edges = graph_edges(n, labels)
    keyword, arrow = ("digraph", "->") if oriented else ("graph", "--")
    lines: typing.List[str] = [f'{keyword} "flips_{n}" {{']
    lines += [f'\t"{vertex}";' for vertex in vertices]
    lines += [f'\t"{source}" {arrow} "{target}" [label="{label}"];'
              for source, target, label in edges]
    lines.append("}")
    return "\n".join(lines)


def to_json_graph(n: int, oriented: bool = False,
                  labels: Labels = Labels.DIAGONAL) -> str:
    """
    The flip graph as one JSON document.

    Parameters:
        n : The polygon size.
        oriented : Whether the document declares its edges as arcs.
        labels : The edge labels, see graph_edges.

    Returns:
        {"n", "oriented", "labels", "vertices", "edges"} with every edge
        written as {"source", "target", "label"}.
    """
    labels = Labels(labels)
    vertices, edges = graph_edges(n, labels)
    return dumps({"n": n,
                  "oriented": oriented,
                  "labels": labels.value,
                  "vertices": vertices,
                  "edges": [{"source": s, "target": t, "label": label}
                            for s, t, label in edges]})


def render_graph(n: int, graph_format: GraphFormat, oriented: bool = False,
                 labels: Labels = Labels.DIAGONAL) -> str:
    """
    The flip graph in the requested format.

    Parameters:
        n : The polygon size.
        graph_format : dot or json.
        oriented : Whether edges are written as arcs.
        labels : The edge labels, see graph_edges.

    Returns:
        The document as text.
    """
    if GraphFormat(graph_format) is GraphFormat.DOT:
        return to_dot(n, oriented, labels)
    return to_json_graph(n, oriented, labels)
