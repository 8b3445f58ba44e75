# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur

Graphic hyperplane arrangements inside the braid arrangement. The hyperplane
x_i = x_j belongs to the arrangement of a graph G when {i, j} is an edge of G.
A chamber is stored as its sign vector: '-' at (i, j) when x_i < x_j on the
chamber and '+' otherwise, together with a permutation witnessing it. No
floating point geometry is involved; only the order of the coordinates
matters.

The graph K'_n (the complete graph minus the n-cycle 0-1-...-(n-1)-0) has one
edge per diagonal of the n-gon, which ties its arrangement to the flip graph.
"""
# Standard library
import collections
import dataclasses
import itertools
import logging
import typing
# Third party
import networkx as nx
# Local imports
from coloredflips import arcperm
from coloredflips import errors
# Constants
Pair = typing.Tuple[int, int]
MINUS: str = "-"
PLUS: str = "+"
MAX_ALL_CHAMBERS: int = 7
logger: logging.Logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class SimpleGraph:
    """A simple graph on the vertices 0..n-1, every edge written (i, j), i < j."""
    n: int
    edges: typing.FrozenSet[Pair]

    def __post_init__(self) -> None:
        for i, j in self.edges:
            if not 0 <= i < j < self.n:
                raise errors.DomainError(
                    f"({i}, {j}) is not an edge between distinct vertices"
                    f" of 0..{self.n - 1} written as i < j.")


def complete_graph(n: int) -> SimpleGraph:
    """
    The complete graph on 0..n-1.

    Parameters:
        n : The number of vertices.

    Returns:
        The graph with every pair (i, j), i < j, as an edge.
    """
    return SimpleGraph(n, frozenset(itertools.combinations(range(n), 2)))


def k_prime(n: int) -> SimpleGraph:
    """
    The complete graph on 0..n-1 minus the edges {i, i+1 mod n}.

    Raises:
        errors.DomainError: If n < 4.
    """
    if not isinstance(n, int) or n < 4:
        raise errors.DomainError(f"K'_n needs n >= 4, got {n}.")
    cycle: typing.Set[Pair] = {tuple(sorted((i, (i + 1) % n)))
                               for i in range(n)}
    return SimpleGraph(n, complete_graph(n).edges - cycle)


@dataclasses.dataclass(frozen=True)
class Arrangement:
    """The hyperplanes of a graph, in lexicographic order of (i, j)."""
    graph: SimpleGraph
    hyperplanes: typing.Tuple[Pair, ...]

    def __post_init__(self) -> None:
        if self.hyperplanes != tuple(sorted(self.graph.edges)):
            raise errors.DomainError(
                "The hyperplanes must be the sorted edges of the graph.")

    @property
    def n(self) -> int:
        """The dimension of the ambient space."""
        return self.graph.n

    def index(self, hyperplane: Pair) -> int:
        """
        The position of a hyperplane in the sign vectors.

        Raises:
            errors.DomainError: If the pair is not a hyperplane.
        """
        try:
            return self.hyperplanes.index(hyperplane)
        except ValueError:
            raise errors.DomainError(
                f"{hyperplane} is not a hyperplane of the arrangement.")


def arrangement_of(graph: SimpleGraph) -> Arrangement:
    """The graphic arrangement of a graph: one hyperplane x_i = x_j per edge."""
    return Arrangement(graph, tuple(sorted(graph.edges)))


def braid_arrangement(n: int) -> Arrangement:
    """All hyperplanes x_i = x_j of R^n."""
    return arrangement_of(complete_graph(n))


def k_prime_arrangement(n: int) -> Arrangement:
    """
    The graphic arrangement of K'_n, whose hyperplanes are the diagonals
    of the n-gon.

    Parameters:
        n : The number of coordinates, at least 4.

    Returns:
        The arrangement with n(n-3)/2 hyperplanes.

    Raises:
        errors.DomainError: If n < 4.
    """
    return arrangement_of(k_prime(n))


@dataclasses.dataclass(frozen=True)
class Chamber:
    """A sign vector over the hyperplanes, with a permutation inducing it."""
    arrangement: Arrangement
    signs: str
    witness: typing.Tuple[int, ...] = dataclasses.field(compare=False)

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """The sign vector and the witnessing permutation."""
        return {"signs": self.signs, "witness": list(self.witness)}


def chamber_of(perm: typing.Sequence[int],
               arrangement: Arrangement) -> Chamber:
    """
    The chamber on which x_perm(0) < x_perm(1) < ... holds.

    Parameters:
        perm : A permutation of 0..n-1.
        arrangement : A graphic arrangement on n coordinates.

    Returns:
        The chamber with '-' at (i, j) when i comes before j in perm.

    Raises:
        errors.DomainError: If perm is not a permutation of 0..n-1.
    """
    letters: typing.Tuple[int, ...] = tuple(perm)
    if sorted(letters) != list(range(arrangement.n)):
        raise errors.DomainError(
            f"{list(letters)} is not a permutation of 0..{arrangement.n - 1}.")
    position: typing.Dict[int, int] = {x: k for k, x in enumerate(letters)}
    signs: str = "".join(MINUS if position[i] < position[j] else PLUS
                         for i, j in arrangement.hyperplanes)
    return Chamber(arrangement, signs, letters)


def _check_same(first: Chamber, second: Chamber) -> None:
    """Refuse to compare chambers of two different arrangements."""
    if first.arrangement != second.arrangement:
        raise errors.DomainError(
            "The chambers belong to different arrangements.")


def separating_set(first: Chamber, second: Chamber
                   ) -> typing.FrozenSet[Pair]:
    """
    The hyperplanes on which two chambers disagree.

    Raises:
        errors.DomainError: If the chambers belong to different
        arrangements.
    """
    _check_same(first, second)
    return frozenset(
        hyperplane for hyperplane, a, b in zip(
            first.arrangement.hyperplanes, first.signs, second.signs)
        if a != b)


def negative(chamber: Chamber) -> Chamber:
    """The antipodal chamber, witnessed by the reversed permutation."""
    flipped: str = chamber.signs.translate(str.maketrans("+-", "-+"))
    return Chamber(chamber.arrangement, flipped, chamber.witness[::-1])


def chamber_graph(arrangement: Arrangement,
                  chambers: typing.Iterable[Chamber]) -> nx.Graph:
    """
    The graph on the given chambers joining two chambers separated by
    exactly one hyperplane.

    Parameters:
        arrangement : The arrangement all chambers belong to.
        chambers : The vertex set.

    Returns:
        A graph with the chambers as nodes; every edge carries the separating
        hyperplane under the key "hyperplane".

    Raises:
        errors.DomainError: If a chamber belongs to another arrangement.
    """
    by_signs: typing.Dict[str, Chamber] = {}
    for chamber in chambers:
        if chamber.arrangement != arrangement:
            raise errors.DomainError(
                "The chambers belong to different arrangements.")
        by_signs[chamber.signs] = chamber
    graph: nx.Graph = nx.Graph()
    graph.add_nodes_from(by_signs.values())
    flip: typing.Dict[str, str] = {MINUS: PLUS, PLUS: MINUS}
    for signs, chamber in by_signs.items():
        for k, hyperplane in enumerate(arrangement.hyperplanes):
            neighbour_signs: str = signs[:k] + flip[signs[k]] + signs[k + 1:]
            if (neighbour := by_signs.get(neighbour_signs)) is not None:
                graph.add_edge(chamber, neighbour, hyperplane=hyperplane)
    logger.info(f"Chamber graph with {graph.number_of_nodes()} vertices and"
                f" {graph.number_of_edges()} edges.")
    return graph


def gallery_distance(first: Chamber, second: Chamber,
                     graph: nx.Graph) -> int:
    """
    Length of a shortest gallery between two chambers of a chamber graph.

    Raises:
        errors.DomainError: If a chamber is not a vertex of the graph.
        errors.NoPathError: If no gallery connects the chambers.
    """
    for chamber in (first, second):
        if chamber not in graph:
            raise errors.DomainError(
                f"The chamber {chamber.signs} is not in the graph.")
    try:
        return nx.shortest_path_length(graph, first, second)
    except nx.NetworkXNoPath:
        raise errors.NoPathError(
            f"No gallery joins {first.signs} and {second.signs}.")


###############################################################################
# Classes of arc permutations                                                 #
###############################################################################
def class_chamber(cl: arcperm.ArcClass) -> Chamber:
    """The chamber of A(K'_n) containing the members of a class."""
    return chamber_of(arcperm.representative(cl).letters,
                      k_prime_arrangement(cl.n))


def classes_chamber_graph(n: int) -> nx.Graph:
    """
    The graph of the chambers of the classes of arc permutations of Z_n.
    Every node carries its class under the key "arc_class".
    """
    arrangement: Arrangement = k_prime_arrangement(n)
    classes: typing.List[arcperm.ArcClass] = sorted(
        arcperm.enumerate_classes(n))
    chambers: typing.List[Chamber] = [class_chamber(cl) for cl in classes]
    graph: nx.Graph = chamber_graph(arrangement, chambers)
    nx.set_node_attributes(graph, dict(zip(chambers, classes)), "arc_class")
    return graph


###############################################################################
# All chambers                                                                #
###############################################################################
def _check_small(arrangement: Arrangement) -> None:
    """Refuse to list all chambers above MAX_ALL_CHAMBERS coordinates."""
    if arrangement.n > MAX_ALL_CHAMBERS:
        raise errors.InvalidSizeError(
            f"Listing all chambers is limited to n <= {MAX_ALL_CHAMBERS},"
            f" got {arrangement.n}.")


def permutation_classes(arrangement: Arrangement
                        ) -> typing.Dict[Chamber, typing.List[
                            typing.Tuple[int, ...]]]:
    """
    Group all permutations of 0..n-1 by the chamber they lie in.

    Returns:
        For every chamber, the sorted list of its permutations.
    """
    _check_small(arrangement)
    groups: typing.DefaultDict[Chamber, typing.List[typing.Tuple[int, ...]]]
    groups = collections.defaultdict(list)
    for perm in itertools.permutations(range(arrangement.n)):
        groups[chamber_of(perm, arrangement)].append(perm)
    return dict(groups)


def all_chambers(arrangement: Arrangement) -> typing.List[Chamber]:
    """
    Every chamber of the arrangement, sorted by sign vector, each witnessed
    by its lexicographically least permutation.

    Raises:
        errors.InvalidSizeError: If n > 7.
    """
    chambers: typing.List[Chamber] = sorted(
        (chamber_of(perms[0], arrangement)
         for perms in permutation_classes(arrangement).values()),
        key=lambda chamber: chamber.signs)
    logger.info(f"{len(chambers)} chambers for {len(arrangement.hyperplanes)}"
                f" hyperplanes.")
    return chambers


def count_acyclic_orientations(graph: SimpleGraph) -> int:
    """
    Count the acyclic orientations of a graph by trying all of them; the
    chambers of a graphic arrangement are in bijection with these.
    """
    edges: typing.List[Pair] = sorted(graph.edges)
    count: int = 0
    for directions in itertools.product((False, True), repeat=len(edges)):
        digraph: nx.DiGraph = nx.DiGraph()
        digraph.add_nodes_from(range(graph.n))
        digraph.add_edges_from((j, i) if reverse else (i, j)
                               for (i, j), reverse in zip(edges, directions))
        count += nx.is_directed_acyclic_graph(digraph)
    return count


def chamber_of_orientation(arrangement: Arrangement,
                           orientation: typing.Iterable[Pair]) -> Chamber:
    """
    The chamber of an acyclic orientation given as arcs (i, j) meaning
    x_i < x_j, witnessed by a topological order.

    Raises:
        errors.DomainError: If the orientation has a directed cycle.
    """
    digraph: nx.DiGraph = nx.DiGraph()
    digraph.add_nodes_from(range(arrangement.n))
    digraph.add_edges_from(orientation)
    if not nx.is_directed_acyclic_graph(digraph):
        raise errors.DomainError("The orientation has a directed cycle.")
    witness = tuple(nx.lexicographical_topological_sort(digraph))
    return chamber_of(witness, arrangement)


def dihedral_image(chamber: Chamber, shift: int,
                   reflect: bool = False) -> Chamber:
    """
    Relabel the coordinates of a chamber by the rotation i -> i + shift and,
    when asked, the reflection i -> -i, both modulo n. The result is a
    chamber of the same arrangement when its graph is invariant under these
    relabelings, as K'_n is.
    """
    n: int = chamber.arrangement.n
    letters: typing.List[int] = [(x + shift) % n for x in chamber.witness]
    if reflect:
        letters = [(-x) % n for x in letters]
    return chamber_of(letters, chamber.arrangement)
