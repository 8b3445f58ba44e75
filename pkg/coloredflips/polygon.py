# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur

Geometric model of triangulations of the convex n-gon whose vertices are
labeled by Z_n = {0, ..., n-1}. A colored triangle-free triangulation is a
triangulation without internal triangles whose n-3 chords carry the labels
0..n-4 such that a short chord is labeled 0 and the two internal edges of
every triangle with exactly two internal edges carry consecutive labels.

This module is the ground truth the other modules are checked against: a flip
is validated by re-checking the coloring conditions, never by a closed-form
rule.

Functions:
- canonical_star: the star triangulation at vertex 0.
- is_triangle_free / proper_colorings: the uncolored side.
- flip_label / reverse: the generator action and the label reversal.
- enumerate_ctft / brute_force_ctft: the full set, by orbit closure and by
  Catalan recursion.
"""
# Standard library
import dataclasses
import functools
import itertools
import logging
import typing
# Local imports
from coloredflips import actions
from coloredflips import errors
# Constants
MIN_SIZE: int = 5
logger: logging.Logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, order=True)
class Diagonal:
    """A chord [a, b] of the polygon, stored with a < b."""
    a: int
    b: int

    def __post_init__(self) -> None:
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise TypeError("Diagonal endpoints must be integers.")
        if not 0 <= self.a < self.b:
            raise errors.DomainError(
                f"Diagonal endpoints must satisfy 0 <= a < b, got {self}.")

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"

    def as_list(self) -> typing.List[int]:
        return [self.a, self.b]


def check_size(n: int) -> None:
    """
    Reject polygon sizes for which colored triangle-free triangulations are
    not defined.

    Raises:
        errors.InvalidSizeError: If n <= 4.
    """
    if not isinstance(n, int) or n < MIN_SIZE:
        raise errors.InvalidSizeError(
            f"The polygon size must be an integer > 4, got {n}.")


def cyclic_distance(x: int, y: int, n: int) -> int:
    """Number of polygon sides on the shorter arc between x and y."""
    step: int = (y - x) % n
    return min(step, n - step)


def diagonal(x: int, y: int, n: int) -> Diagonal:
    """
    Build the normalized diagonal joining the vertices x and y of the n-gon.
    The endpoints are reduced modulo n first.

    Parameters:
        x : One endpoint.
        y : The other endpoint.
        n : The polygon size.

    Returns:
        The diagonal with its endpoints sorted.

    Raises:
        errors.DomainError: If x and y coincide or are joined by a side.
    """
    x, y = x % n, y % n
    if cyclic_distance(x, y, n) < 2:
        raise errors.DomainError(
            f"{x} and {y} do not span a diagonal of the {n}-gon.")
    return Diagonal(min(x, y), max(x, y))


def all_diagonals(n: int) -> typing.Tuple[Diagonal, ...]:
    """All n(n-3)/2 diagonals of the n-gon in lexicographic order."""
    return tuple(Diagonal(a, b)
                 for a, b in itertools.combinations(range(n), 2)
                 if cyclic_distance(a, b, n) >= 2)


def is_short(chord: Diagonal, n: int) -> bool:
    """A chord is short when it cuts off a single vertex."""
    return cyclic_distance(chord.a, chord.b, n) == 2


def crosses(first: Diagonal, second: Diagonal) -> bool:
    """
    Two chords cross iff exactly one endpoint of the second lies strictly
    inside the open interval (a, b) of the first. Chords sharing an endpoint
    never cross.
    """
    if {first.a, first.b} & {second.a, second.b}:
        return False
    return (first.a < second.a < first.b) != (first.a < second.b < first.b)


def _edge_set(n: int, chords: typing.Iterable[Diagonal]
              ) -> typing.Set[typing.FrozenSet[int]]:
    """Sides and chords of a triangulation as unordered vertex pairs."""
    edges: typing.Set[typing.FrozenSet[int]] = {
        frozenset((v, (v + 1) % n)) for v in range(n)}
    edges.update(frozenset((c.a, c.b)) for c in chords)
    return edges


def triangles(n: int, chords: typing.Iterable[Diagonal]
              ) -> typing.List[typing.Tuple[int, int, int]]:
    """
    The triangles of a triangulation. In a triangulated convex polygon every
    3-clique of the edge graph is a face.

    Parameters:
        n : The polygon size.
        chords : The chords of the triangulation.

    Returns:
        The triangles as sorted vertex triples, in lexicographic order.
    """
    edges = _edge_set(n, chords)
    return [triple for triple in itertools.combinations(range(n), 3)
            if all(frozenset(pair) in edges
                   for pair in itertools.combinations(triple, 2))]


def is_triangulation(n: int, chords: typing.Sequence[Diagonal]) -> bool:
    """
    True iff the chords are n-3 distinct, pairwise non-crossing diagonals of
    the n-gon, which is exactly a triangulation.
    """
    if len(chords) != n - 3 or len(set(chords)) != len(chords):
        return False
    if any(c.b >= n or cyclic_distance(c.a, c.b, n) < 2 for c in chords):
        return False
    return not any(crosses(first, second)
                   for first, second in itertools.combinations(chords, 2))


@dataclasses.dataclass(frozen=True)
class UncoloredTriangulation:
    """A triangulation of the n-gon given by its set of chords."""
    n: int
    chords: typing.FrozenSet[Diagonal]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 4:
            raise errors.InvalidSizeError(
                f"The polygon size must be at least 4, got {self.n}.")
        if not is_triangulation(self.n, sorted(self.chords)):
            raise errors.DomainError(
                f"{sorted(self.chords)} is not a triangulation of the"
                f" {self.n}-gon.")


@dataclasses.dataclass(frozen=True)
class ColoredTriangulation:
    """
    A properly colored triangle-free triangulation: chords[i] is the chord
    labeled i. Instances built through the public functions of this package
    always satisfy the coloring conditions; from_chords checks them for
    outside input.
    """
    n: int
    chords: typing.Tuple[Diagonal, ...]

    def __post_init__(self) -> None:
        check_size(self.n)
        if len(self.chords) != self.n - 3:
            raise errors.DomainError(
                f"A triangulation of the {self.n}-gon has {self.n - 3}"
                f" chords, got {len(self.chords)}.")

    @classmethod
    def from_chords(cls,
                    n: int,
                    pairs: typing.Iterable[typing.Sequence[int]]
                    ) -> "ColoredTriangulation":
        """
        Build and validate a colored triangulation from vertex pairs listed
        in label order.

        Raises:
            errors.DomainError: If the labeling is not a proper coloring of a
            triangle-free triangulation.
        """
        check_size(n)
        chords: typing.Tuple[Diagonal, ...] = tuple(
            diagonal(x, y, n) for x, y in pairs)
        if not is_properly_colored(n, chords):
            raise errors.DomainError(
                f"{[str(c) for c in chords]} is not a properly colored"
                f" triangle-free triangulation of the {n}-gon.")
        return cls(n, chords)

    @property
    def uncolored(self) -> UncoloredTriangulation:
        """The same chords without their labels."""
        return UncoloredTriangulation(self.n, frozenset(self.chords))

    def label_of(self, chord: Diagonal) -> int:
        """The label carried by a chord of this triangulation."""
        try:
            return self.chords.index(chord)
        except ValueError:
            raise errors.DomainError(f"{chord} is not a chord of {self}.")

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """The triangulation as {"n", "chords"}, chords in label order."""
        return {"n": self.n, "chords": [c.as_list() for c in self.chords]}

    @classmethod
    def from_dict(cls, data: typing.Mapping[str, typing.Any]
                  ) -> "ColoredTriangulation":
        """
        Read the form written by to_dict.

        Raises:
            errors.DomainError: If the chords are not a properly colored
            triangle-free triangulation.
        """
        return cls.from_chords(data["n"], data["chords"])


def _chord_neighbours(n: int, chords: typing.Iterable[Diagonal]
                      ) -> typing.Dict[Diagonal, typing.Set[Diagonal]]:
    """
    Link two chords whenever they are the two internal edges of a triangle.
    In a triangle-free triangulation the result is a path whose ends are the
    two short chords.
    """
    chord_list: typing.List[Diagonal] = list(chords)
    neighbours: typing.Dict[Diagonal, typing.Set[Diagonal]] = {
        c: set() for c in chord_list}
    for internal in _internal_edges(n, chord_list):
        if len(internal) == 2:
            first, second = internal
            neighbours[first].add(second)
            neighbours[second].add(first)
    return neighbours


def _internal_edges(n: int, chords: typing.Iterable[Diagonal]
                    ) -> typing.List[typing.List[Diagonal]]:
    """For every triangle, the list of its internal edges."""
    chord_list: typing.List[Diagonal] = list(chords)
    chord_pairs: typing.Set[typing.Tuple[int, int]] = {
        (c.a, c.b) for c in chord_list}
    return [[Diagonal(x, y) for x, y in itertools.combinations(triangle, 2)
             if (x, y) in chord_pairs]
            for triangle in triangles(n, chord_list)]


def count_short_chords(n: int, chords: typing.Iterable[Diagonal]) -> int:
    """
    Count the chords that cut off a single vertex.

    Parameters:
        n : The polygon size.
        chords : The chords of a triangulation.

    Returns:
        The number of chords [i, i+2] modulo n.
    """
    return sum(1 for c in chords if is_short(c, n))


def is_triangle_free(triangulation: UncoloredTriangulation) -> bool:
    """
    A triangulation is triangle-free if no triangle has three internal edges.

    Parameters:
        triangulation : A valid triangulation.

    Returns:
        True if no triangle has three internal edges.
    """
    return all(len(internal) < 3 for internal in
               _internal_edges(triangulation.n, triangulation.chords))


def is_properly_colored(n: int, chords: typing.Sequence[Diagonal]) -> bool:
    """
    Check that chords (listed in label order) form a properly colored
    triangle-free triangulation of the n-gon.

    Parameters:
        n : The polygon size.
        chords : chords[i] is the chord labeled i.

    Returns:
        True if the triangulation is triangle-free, the chord labeled 0 is
        short and every triangle with two internal edges has consecutive
        labels on them.
    """
    if not is_triangulation(n, chords) or not is_short(chords[0], n):
        return False
    label: typing.Dict[Diagonal, int] = {c: i for i, c in enumerate(chords)}
    for internal in _internal_edges(n, chords):
        if len(internal) == 3:
            return False
        if len(internal) == 2 and abs(
                label[internal[0]] - label[internal[1]]) != 1:
            return False
    return True


def proper_colorings(triangulation: UncoloredTriangulation
                     ) -> typing.Tuple[ColoredTriangulation,
                                       ColoredTriangulation]:
    """
    The two proper colorings of a triangle-free triangulation. The labels
    follow the path of chords linked by shared triangles, starting from
    either short chord.

    Parameters:
        triangulation : A triangle-free triangulation.

    Returns:
        Both colorings; the first starts from the lexicographically smaller
        short chord. Each is the label reversal of the other.

    Raises:
        errors.DomainError: If the triangulation has an internal triangle.
    """
    n: int = triangulation.n
    check_size(n)
    if not is_triangle_free(triangulation):
        raise errors.DomainError(
            f"{sorted(triangulation.chords)} has an internal triangle.")
    neighbours = _chord_neighbours(n, triangulation.chords)
    start: Diagonal = min(c for c in triangulation.chords if is_short(c, n))
    path: typing.List[Diagonal] = [start]
    previous: typing.Optional[Diagonal] = None
    while len(path) < n - 3:
        current: Diagonal = path[-1]
        (following,) = neighbours[current] - {previous}
        previous = current
        path.append(following)
    colored = ColoredTriangulation(n, tuple(path))
    return colored, reverse(colored)


def canonical_star(n: int) -> ColoredTriangulation:
    """
    The canonical colored star: chords [0,2], [0,3], ..., [0,n-2] labeled
    0, ..., n-4 in that order.

    Raises:
        errors.InvalidSizeError: If n <= 4.
    """
    check_size(n)
    return ColoredTriangulation(
        n, tuple(Diagonal(0, b) for b in range(2, n - 1)))


def reverse(triangulation: ColoredTriangulation) -> ColoredTriangulation:
    """The chord labeled i is labeled n-4-i in the reversed triangulation."""
    return ColoredTriangulation(triangulation.n,
                                triangulation.chords[::-1])


def quadrangle_partner(n: int,
                       chords: typing.Sequence[Diagonal],
                       chord: Diagonal) -> Diagonal:
    """
    The other diagonal of the quadrangle formed by the two triangles on each
    side of a chord.
    """
    edges = _edge_set(n, chords)
    apexes: typing.List[int] = [
        w for w in range(n) if w not in (chord.a, chord.b)
        and frozenset((chord.a, w)) in edges
        and frozenset((chord.b, w)) in edges]
    first, second = apexes
    return Diagonal(min(first, second), max(first, second))


def _check_label(n: int, label: int) -> None:
    """Refuse labels outside 0..n-4."""
    if not isinstance(label, int) or not 0 <= label <= n - 4:
        raise errors.InvalidLabelError(
            f"Labels run over 0..{n - 4}, got {label}.")


def flip_label(triangulation: ColoredTriangulation,
               label: int) -> ColoredTriangulation:
    """
    Apply the generator s_i: flip the chord labeled i, keeping its label, if
    the result is again properly colored; otherwise leave the triangulation
    unchanged.

    Parameters:
        triangulation : A colored triangle-free triangulation.
        label : The label i in 0..n-4.

    Returns:
        s_i applied to the triangulation.

    Raises:
        errors.InvalidLabelError: If the label is out of range.
    """
    n: int = triangulation.n
    _check_label(n, label)
    chords: typing.List[Diagonal] = list(triangulation.chords)
    chords[label] = quadrangle_partner(n, chords, chords[label])
    if is_properly_colored(n, chords):
        logger.debug(f"s_{label}: {triangulation.chords[label]} ->"
                     f" {chords[label]}")
        return ColoredTriangulation(n, tuple(chords))
    logger.debug(f"s_{label} fixes {[str(c) for c in triangulation.chords]}")
    return triangulation


def enumerate_ctft(n: int) -> typing.FrozenSet[ColoredTriangulation]:
    """
    All colored triangle-free triangulations of the n-gon, obtained as the
    orbit of the canonical star under the generators s_0, ..., s_{n-4}.

    Raises:
        errors.InvalidSizeError: If n <= 4.
    """
    elements = actions.orbit(flip_label, canonical_star(n), range(n - 3))
    logger.info(f"CTFT({n}) has {len(elements)} elements.")
    return elements


def enumerate_triangulations(n: int
                             ) -> typing.List[UncoloredTriangulation]:
    """
    All triangulations of the convex n-gon by the Catalan recursion on the
    apex of the triangle resting on the side [0, n-1].

    Parameters:
        n : The polygon size, at least 4.

    Returns:
        Catalan(n-2) triangulations.
    """
    @functools.lru_cache(maxsize=None)
    def _triangulate(low: int, high: int
                     ) -> typing.Tuple[typing.FrozenSet[Diagonal], ...]:
        """Triangulations of the sub-polygon low, low+1, ..., high."""
        if high - low < 2:
            return (frozenset(),)
        results: typing.List[typing.FrozenSet[Diagonal]] = []
        for apex in range(low + 1, high):
            own: typing.Set[Diagonal] = set()
            if apex - low >= 2:
                own.add(Diagonal(low, apex))
            if high - apex >= 2:
                own.add(Diagonal(apex, high))
            for left, right in itertools.product(_triangulate(low, apex),
                                                 _triangulate(apex, high)):
                results.append(frozenset(own) | left | right)
        return tuple(results)

    if not isinstance(n, int) or n < 4:
        raise errors.InvalidSizeError(
            f"The polygon size must be at least 4, got {n}.")
    return [UncoloredTriangulation(n, chords)
            for chords in _triangulate(0, n - 1)]


def brute_force_ctft(n: int) -> typing.FrozenSet[ColoredTriangulation]:
    """
    Independent oracle for enumerate_ctft: every triangulation, filtered by
    triangle-freeness, with both of its proper colorings.
    """
    check_size(n)
    colored: typing.Set[ColoredTriangulation] = set()
    for triangulation in enumerate_triangulations(n):
        if is_triangle_free(triangulation):
            colored.update(proper_colorings(triangulation))
    return frozenset(colored)
