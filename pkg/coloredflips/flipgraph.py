# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur

The colored flip graph on codes of colored triangle-free triangulations. Two
codes are joined by an edge labeled i when the flip s_i sends one to the
other; the edge also records the diagonal erased and the diagonal created by
the flip. Every edge changes the rank by +1 or -1 modulo n(n-3) and is
oriented towards the code of larger rank modulo n(n-3).

Geodesics between a triangulation and its reverse are walked along edges of a
single orientation only: ascending edges for 'plus' geodesics and descending
edges for 'minus' geodesics.
"""
# Standard library
import dataclasses
import enum
import functools
import logging
import types
import typing
# Third party
import networkx as nx
# Local imports
from coloredflips import arcperm
from coloredflips import arrangement
from coloredflips import codec
from coloredflips import errors
from coloredflips import polygon
# Constants
ORACLE_MAX: int = 6
logger: logging.Logger = logging.getLogger(__name__)


class Direction(str, enum.Enum):
    PLUS = "plus"
    MINUS = "minus"
    BOTH = "both"


@dataclasses.dataclass(frozen=True)
class FlipEdge:
    generator: int
    target: codec.Code
    erased: polygon.Diagonal
    created: polygon.Diagonal
    ascending: bool


@dataclasses.dataclass(frozen=True, eq=False)
class FlipGraph:
    """
    The flip graph on all codes of the n-gon. The neighbours of every code
    are listed by erased diagonal.
    """
    n: int
    vertices: typing.Tuple[codec.Code, ...]
    adjacency: typing.Mapping[codec.Code, typing.Tuple[FlipEdge, ...]]

    def edges(self) -> typing.Iterator[typing.Tuple[codec.Code, FlipEdge]]:
        """Every edge once, from its lower end in the orientation."""
        for code in self.vertices:
            for edge in self.adjacency[code]:
                if edge.ascending:
                    yield code, edge

    def degree(self, code: codec.Code) -> int:
        """The number of flips that change the triangulation with this code."""
        return len(self.adjacency[code])

    @functools.cached_property
    def nx_graph(self) -> nx.Graph:
        """The undirected networkx view, built on first use."""
        return to_networkx(self)


@dataclasses.dataclass(frozen=True)
class GeodesicPath:
    """
    A geodesic between a code and its reverse: its vertices, the diagonal
    erased by every step and the orientation it follows.
    """
    n: int
    direction: Direction
    vertices: typing.Tuple[codec.Code, ...]
    diagonals: typing.Tuple[polygon.Diagonal, ...]

    def __len__(self) -> int:
        return len(self.diagonals)

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """The path as {"n", "direction", "path", "diagonals"}."""
        return {"n": self.n,
                "direction": self.direction.value,
                "path": [str(code) for code in self.vertices],
                "diagonals": [d.as_list() for d in self.diagonals]}


def _is_ascending(source: codec.Code, target: codec.Code) -> bool:
    """Whether the rank grows by one modulo n(n-3) from source to target."""
    step: int = codec.rank(target) - codec.rank(source)
    return step % codec.modulus(source.n) == 1


def build(n: int) -> FlipGraph:
    """
    Build the flip graph of the n-gon.

    Parameters:
        n : The polygon size, larger than 4.

    Returns:
        The flip graph with every edge labeled by its generator, its erased
        and created diagonals and its orientation.

    Raises:
        errors.InvalidSizeError: If n <= 4.
    """
    vertices: typing.List[codec.Code] = codec.all_codes(n)
    adjacency: typing.Dict[codec.Code, typing.Tuple[FlipEdge, ...]] = {}
    for code in vertices:
        edges: typing.List[FlipEdge] = []
        for generator in range(n - 3):
            target = codec.apply_generator(code, generator)
            if target == code:
                continue
            edges.append(FlipEdge(
                generator, target,
                codec.chord_of_label(code, generator),
                codec.chord_of_label(target, generator),
                _is_ascending(code, target)))
        adjacency[code] = tuple(sorted(edges, key=lambda e: e.erased))
    graph = FlipGraph(n, tuple(vertices), types.MappingProxyType(adjacency))
    logger.info(f"Flip graph for n={n}: {len(vertices)} vertices,"
                f" {sum(1 for _ in graph.edges())} edges.")
    return graph


def to_networkx(graph: FlipGraph, oriented: bool = False) -> nx.Graph:
    """
    The flip graph as a networkx graph on codes. Edges carry the generator
    and the diagonal erased when the edge is walked in its orientation.
    With oriented=True a DiGraph holding the ascending arcs is returned.
    """
    result: nx.Graph = nx.DiGraph() if oriented else nx.Graph()
    result.add_nodes_from(graph.vertices)
    for code, edge in graph.edges():
        result.add_edge(code, edge.target, generator=edge.generator,
                        diagonal=edge.erased)
    return result


def _check_vertex(graph: FlipGraph, code: codec.Code) -> None:
    """Refuse codes of another polygon size."""
    if code not in graph.adjacency:
        raise errors.DomainError(f"{code} is not a vertex for n={graph.n}.")


def distance(graph: FlipGraph, source: codec.Code,
             target: codec.Code) -> int:
    """
    Length of a shortest path between two codes.

    Raises:
        errors.DomainError: If a code is not a vertex of the graph.
        errors.NoPathError: If the codes are not connected.
    """
    _check_vertex(graph, source)
    _check_vertex(graph, target)
    try:
        return nx.shortest_path_length(graph.nx_graph, source, target)
    except nx.NetworkXNoPath:
        raise errors.NoPathError(f"No path joins {source} and {target}.")


def diameter(graph: FlipGraph) -> int:
    """
    The largest distance between two codes of the flip graph.

    Parameters:
        graph : The flip graph.

    Returns:
        The diameter, n(n-3)/2 for the n-gon.
    """
    return nx.diameter(graph.nx_graph)


def edge_diagonal(graph: FlipGraph, source: codec.Code,
                  target: codec.Code) -> polygon.Diagonal:
    """
    The diagonal erased when walking from source to target.

    Raises:
        errors.DomainError: If the codes are not adjacent.
    """
    _check_vertex(graph, source)
    for edge in graph.adjacency[source]:
        if edge.target == target:
            return edge.erased
    raise errors.DomainError(f"{source} and {target} are not adjacent.")


def orientation_by_cases(code: codec.Code, generator: int) -> bool:
    """
    Whether the edge from a code along s_i is ascending, by cases: the last
    bit going from 0 to 1, a pair (0, 1) of adjacent bits becoming (1, 0) and
    v0 going from j to j+1 are the ascending moves.

    Raises:
        errors.DomainError: If s_i fixes the code.
    """
    target = codec.apply_generator(code, generator)
    if target == code:
        raise errors.DomainError(f"s_{generator} fixes {code}.")
    if generator == 0:
        return target.v0 == (code.v0 + 1) % code.n
    if generator == code.n - 4:
        return code.bits[-1] == 0
    return (code.bits[generator - 1], code.bits[generator]) == (0, 1)


###############################################################################
# Geodesics                                                                   #
###############################################################################
def _geodesic_setup(graph: FlipGraph, source: codec.Code,
                    target: codec.Code) -> typing.Dict[codec.Code, int]:
    """
    Check the endpoints and return the distances to the target.

    Raises:
        errors.UnsupportedEndpointError: If the target is not the reverse of
        the source.
    """
    _check_vertex(graph, source)
    _check_vertex(graph, target)
    if target != codec.reverse_code(source):
        raise errors.UnsupportedEndpointError(
            f"Geodesics are enumerated between a code and its reverse, got"
            f" {source} and {target}.")
    return nx.single_source_shortest_path_length(graph.nx_graph, target)


def _directions(direction: Direction) -> typing.List[Direction]:
    """The orientations to walk, plus before minus."""
    direction = Direction(direction)
    if direction is Direction.BOTH:
        return [Direction.PLUS, Direction.MINUS]
    return [direction]


def enumerate_geodesics(graph: FlipGraph,
                        source: codec.Code,
                        target: codec.Code,
                        direction: Direction = Direction.BOTH
                        ) -> typing.Iterator[GeodesicPath]:
    """
    Yield the geodesics from a code to its reverse that follow one
    orientation, depth first with neighbours taken by erased diagonal. With
    Direction.BOTH the 'plus' geodesics come before the 'minus' ones.

    Parameters:
        graph : The flip graph.
        source : The start code.
        target : The reverse of the start code.
        direction : plus, minus or both.

    Returns:
        An iterator over the geodesics.

    Raises:
        errors.UnsupportedEndpointError: If the target is not the reverse of
        the source.
    """
    to_target: typing.Dict[codec.Code, int] = _geodesic_setup(
        graph, source, target)

    def _walk(vertices: typing.List[codec.Code],
              diagonals: typing.List[polygon.Diagonal],
              ascending: bool,
              label: Direction) -> typing.Iterator[GeodesicPath]:
        current: codec.Code = vertices[-1]
        if current == target:
            yield GeodesicPath(graph.n, label, tuple(vertices),
                               tuple(diagonals))
            return
        for edge in graph.adjacency[current]:
            if (edge.ascending == ascending
                    and to_target[edge.target] == to_target[current] - 1):
                vertices.append(edge.target)
                diagonals.append(edge.erased)
                yield from _walk(vertices, diagonals, ascending, label)
                vertices.pop()
                diagonals.pop()

    for label in _directions(direction):
        yield from _walk([source], [], label is Direction.PLUS, label)


def _geodesic_dag(graph: FlipGraph,
                  to_target: typing.Mapping[codec.Code, int],
                  ascending: bool) -> nx.DiGraph:
    """The arcs that lie on a geodesic of the given orientation."""
    dag: nx.DiGraph = nx.DiGraph()
    dag.add_nodes_from(graph.vertices)
    for code in graph.vertices:
        dag.add_edges_from(
            (code, edge.target) for edge in graph.adjacency[code]
            if edge.ascending == ascending
            and to_target[edge.target] == to_target[code] - 1)
    return dag


def count_geodesics(graph: FlipGraph,
                    source: codec.Code,
                    target: codec.Code,
                    direction: Direction = Direction.BOTH) -> int:
    """
    Count the geodesics enumerate_geodesics would yield, by summing path
    counts over the geodesic DAG in reverse topological order.

    Raises:
        errors.UnsupportedEndpointError: If the target is not the reverse of
        the source.
    """
    to_target = _geodesic_setup(graph, source, target)
    total: int = 0
    for label in _directions(direction):
        dag = _geodesic_dag(graph, to_target, label is Direction.PLUS)
        paths: typing.Dict[codec.Code, int] = {}
        for code in reversed(list(nx.topological_sort(dag))):
            paths[code] = 1 if code == target else sum(
                paths[successor] for successor in dag.successors(code))
        total += paths[source]
    logger.info(f"{total} geodesics from {source} to {target}.")
    return total


def all_shortest_paths(graph: FlipGraph, source: codec.Code,
                       target: codec.Code) -> typing.List[GeodesicPath]:
    """
    Every shortest path between two codes regardless of orientation, sorted
    by diagonal sequence. Each path is labeled by the orientation of its
    first edge. Used as an independent check for n <= 6.

    Raises:
        errors.InvalidSizeError: If n > 6.
    """
    if graph.n > ORACLE_MAX:
        raise errors.InvalidSizeError(
            f"The generic enumeration is limited to n <= {ORACLE_MAX}.")
    _check_vertex(graph, source)
    _check_vertex(graph, target)
    paths: typing.List[GeodesicPath] = []
    for vertices in nx.all_shortest_paths(graph.nx_graph, source, target):
        diagonals = tuple(edge_diagonal(graph, a, b)
                          for a, b in zip(vertices, vertices[1:]))
        label: Direction = Direction.PLUS
        if len(vertices) > 1 and not _is_ascending(vertices[0], vertices[1]):
            label = Direction.MINUS
        paths.append(GeodesicPath(graph.n, label, tuple(vertices), diagonals))
    return sorted(paths, key=lambda path: path.diagonals)


def verify_diagonal_multiset(path: GeodesicPath) -> bool:
    """True iff every diagonal of the n-gon is flipped exactly once."""
    return sorted(path.diagonals) == list(polygon.all_diagonals(path.n))


###############################################################################
# Isomorphism with the chamber graph                                          #
###############################################################################
def isomorphism_mismatches(n: int) -> typing.List[str]:
    """
    Compare the flip graph with the graph of chambers of the classes of arc
    permutations under T -> chamber of f(T).

    Returns:
        One message per mismatch: a vertex map that is not a bijection, an
        edge without a counterpart, or an ascending edge whose erased
        diagonal differs from the separating hyperplane.
    """
    graph: FlipGraph = build(n)
    chambers: nx.Graph = arrangement.classes_chamber_graph(n)
    image: typing.Dict[codec.Code, arrangement.Chamber] = {
        code: arrangement.class_chamber(arcperm.f_map(codec.decode(code)))
        for code in graph.vertices}
    mismatches: typing.List[str] = []
    if set(image.values()) != set(chambers.nodes) or len(
            set(image.values())) != len(image):
        mismatches.append("The vertex map is not a bijection.")
    edge_count: int = 0
    for code, edge in graph.edges():
        edge_count += 1
        first, second = image[code], image[edge.target]
        if not chambers.has_edge(first, second):
            mismatches.append(f"{code} -> {edge.target} has no chamber edge.")
            continue
        hyperplane = chambers.edges[first, second]["hyperplane"]
        if hyperplane != (edge.erased.a, edge.erased.b):
            mismatches.append(
                f"{code} -> {edge.target} erases {edge.erased} but crosses"
                f" {hyperplane}.")
    if edge_count != chambers.number_of_edges():
        mismatches.append(
            f"{edge_count} flip edges against"
            f" {chambers.number_of_edges()} chamber edges.")
    logger.info(f"Isomorphism check for n={n}: {len(mismatches)}"
                f" mismatches.")
    return mismatches


def verify_isomorphism(n: int) -> bool:
    """
    Whether the flip graph of the n-gon and the chamber graph of the classes
    of arc permutations are isomorphic as labeled graphs.

    Parameters:
        n : The polygon size, larger than 4.

    Returns:
        True when isomorphism_mismatches finds nothing.
    """
    return not isomorphism_mismatches(n)
