# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur

Standard Young tableaux of shifted shapes and the posets around them:

- the truncated shifted staircase with rows (p, p, p-1, ..., 1), whose cell
  (r, c) stands for the diagonal [r-1, c+1] of the (p+3)-gon;
- the coordinate-wise order on the diagonals of the n-gon, whose linear
  extensions are the diagonal orders of the 'plus' geodesics;
- the poset of partitions whose parts are distinct except that the first two
  may both equal n, and its maximal chains;
- the closed formula for the number of geodesics from the canonical star to
  its reverse.

Every count is exact integer arithmetic.
"""
# Standard library
import dataclasses
import functools
import itertools
import logging
import math
import typing
# Third party
import networkx as nx
# Local imports
from coloredflips import errors
from coloredflips import polygon
# Constants
Cell = typing.Tuple[int, int]
Partition = typing.Tuple[int, ...]
T = typing.TypeVar("T")
logger: logging.Logger = logging.getLogger(__name__)


###############################################################################
# Shapes and tableaux                                                         #
###############################################################################
@dataclasses.dataclass(frozen=True)
class ShiftedShape:
    """Row r (counted from 1) covers the columns r .. r + rows[r-1] - 1."""
    rows: typing.Tuple[int, ...]

    @property
    def cells(self) -> typing.Tuple[Cell, ...]:
        """The cells (row, column) in row reading order."""
        return tuple((r, c) for r, length in enumerate(self.rows, start=1)
                     for c in range(r, r + length))

    @property
    def size(self) -> int:
        """The number of cells."""
        return sum(self.rows)


@dataclasses.dataclass(frozen=True)
class TruncShiftedShape(ShiftedShape):
    """The shifted staircase on 1 <= r <= c <= p+1 without the cell (1, p+1)."""
    p: int

    def __post_init__(self) -> None:
        if self.rows != (self.p, *range(self.p, 0, -1)):
            raise errors.DomainError(
                f"{self.rows} is not the truncated staircase with p={self.p}.")


def make_shape(p: int) -> TruncShiftedShape:
    """
    The truncated shifted staircase with rows (p, p, p-1, ..., 1).

    Raises:
        errors.InvalidSizeError: If p < 1.
    """
    if not isinstance(p, int) or p < 1:
        raise errors.InvalidSizeError(f"The first part must be >= 1, got {p}.")
    return TruncShiftedShape((p, *range(p, 0, -1)), p)


def make_staircase(m: int) -> ShiftedShape:
    """The shifted staircase with rows (m, m-1, ..., 1); empty for m = 0."""
    if not isinstance(m, int) or m < 0:
        raise errors.InvalidSizeError(f"The size must be >= 0, got {m}.")
    return ShiftedShape(tuple(range(m, 0, -1)))


def _cell_less(first: Cell, second: Cell) -> bool:
    """
    The strict coordinate-wise order on cells.

    Parameters:
        first : A cell (row, column).
        second : Another cell.

    Returns:
        True iff first lies weakly north-west of second and differs from it.
    """
    return first != second and first[0] <= second[0] and first[1] <= second[1]


@dataclasses.dataclass(frozen=True)
class ShiftedTableau:
    """A standard filling of a shifted shape, stored row by row."""
    shape: ShiftedShape
    rows: typing.Tuple[typing.Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if tuple(map(len, self.rows)) != self.shape.rows:
            raise errors.DomainError(
                f"The rows {self.rows} do not fill the shape"
                f" {self.shape.rows}.")
        entries = sorted(itertools.chain.from_iterable(self.rows))
        if entries != list(range(1, self.shape.size + 1)):
            raise errors.DomainError(
                f"The entries must be 1..{self.shape.size}, got {entries}.")
        filling = self.filling
        for (r, c), entry in filling.items():
            for neighbour in ((r, c + 1), (r + 1, c), (r + 1, c + 1)):
                if neighbour in filling and filling[neighbour] < entry:
                    raise errors.DomainError(
                        f"The tableau {self.rows} is not standard at {(r, c)}.")

    @property
    def filling(self) -> typing.Dict[Cell, int]:
        """The entry of every cell."""
        return dict(zip(self.shape.cells,
                        itertools.chain.from_iterable(self.rows)))

    @property
    def reading_word(self) -> typing.Tuple[int, ...]:
        """The entries read row by row, top row first."""
        return tuple(itertools.chain.from_iterable(self.rows))

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """
        The tableau as {"p", "rows"} for truncated staircases and as
        {"shape", "rows"} otherwise.
        """
        rows: typing.List[typing.List[int]] = [list(row) for row in self.rows]
        if isinstance(self.shape, TruncShiftedShape):
            return {"p": self.shape.p, "rows": rows}
        return {"shape": list(self.shape.rows), "rows": rows}


def _from_cells(shape: ShiftedShape,
                order: typing.Sequence[Cell]) -> ShiftedTableau:
    """The tableau holding entry k+1 in the cell order[k]."""
    entry: typing.Dict[Cell, int] = {cell: k for k, cell in enumerate(
        order, start=1)}
    rows: typing.List[typing.Tuple[int, ...]] = []
    start: int = 0
    for length in shape.rows:
        rows.append(tuple(entry[cell]
                          for cell in shape.cells[start:start + length]))
        start += length
    return ShiftedTableau(shape, tuple(rows))


def enumerate_syt(shape: ShiftedShape) -> typing.List[ShiftedTableau]:
    """
    All standard tableaux of a shifted shape, sorted by row reading word.
    Entries are placed one by one in any cell whose left, upper and
    upper-left neighbours are already filled.
    """
    cells: typing.Tuple[Cell, ...] = shape.cells
    blockers: typing.Dict[Cell, typing.List[Cell]] = {
        cell: [other for other in ((cell[0], cell[1] - 1),
                                   (cell[0] - 1, cell[1]),
                                   (cell[0] - 1, cell[1] - 1))
               if other in cells]
        for cell in cells}
    found: typing.List[ShiftedTableau] = []
    order: typing.List[Cell] = []
    placed: typing.Set[Cell] = set()

    def _place() -> None:
        if len(order) == len(cells):
            found.append(_from_cells(shape, order))
            return
        for cell in cells:
            if cell not in placed and all(b in placed for b in blockers[cell]):
                placed.add(cell)
                order.append(cell)
                _place()
                order.pop()
                placed.remove(cell)

    _place()
    logger.debug(f"{len(found)} tableaux of shape {shape.rows}.")
    return sorted(found, key=lambda tableau: tableau.reading_word)


def count_linear_extensions(elements: typing.Iterable[T],
                            less: typing.Callable[[T, T], bool]) -> int:
    """
    Count the linear extensions of a finite poset by dynamic programming over
    its order ideals.

    Parameters:
        elements : The elements of the poset.
        less : The strict order, less(x, y) meaning x < y.

    Returns:
        The number of linear extensions.
    """
    items: typing.Tuple[T, ...] = tuple(elements)
    below: typing.Dict[T, typing.FrozenSet[T]] = {
        x: frozenset(y for y in items if less(y, x)) for x in items}

    @functools.lru_cache(maxsize=None)
    def _extensions(ideal: typing.FrozenSet[T]) -> int:
        if len(ideal) == len(items):
            return 1
        return sum(_extensions(ideal | {x}) for x in items
                   if x not in ideal and below[x] <= ideal)

    return _extensions(frozenset())


def count_syt(shape: ShiftedShape) -> int:
    """The number of standard tableaux of a shifted shape."""
    return count_linear_extensions(shape.cells, _cell_less)


def rc_words(tableau: ShiftedTableau
             ) -> typing.Tuple[typing.Tuple[int, ...], typing.Tuple[int, ...]]:
    """The row and the column holding each entry 1, 2, ..., N."""
    by_entry: typing.Dict[int, Cell] = {
        entry: cell for cell, entry in tableau.filling.items()}
    cells: typing.List[Cell] = [by_entry[k]
                                for k in range(1, len(by_entry) + 1)]
    return tuple(r for r, _ in cells), tuple(c for _, c in cells)


###############################################################################
# Geodesics and tableaux                                                      #
###############################################################################
def polygon_size(count: int) -> int:
    """
    The n with n(n-3)/2 = count.

    Raises:
        errors.DomainError: If count is not a diagonal count.
    """
    root: int = math.isqrt(9 + 8 * count)
    n: int = (3 + root) // 2
    if root * root != 9 + 8 * count or n * (n - 3) // 2 != count:
        raise errors.DomainError(
            f"{count} is not the number of diagonals of a polygon.")
    return n


def tableau_to_geodesic(tableau: ShiftedTableau,
                        n: int) -> typing.List[polygon.Diagonal]:
    """
    The diagonal orders of a 'plus' geodesic: the entry i sits in the cell
    (r, c) and the i-th flip erases [r-1, c+1].

    Raises:
        errors.DomainError: If the shape is not the truncated staircase with
        first part n-3.
    """
    shape = tableau.shape
    if not isinstance(shape, TruncShiftedShape) or shape.p != n - 3:
        raise errors.DomainError(
            f"Tableaux of the {n}-gon have first part {n - 3}, got"
            f" {shape.rows}.")
    rows, columns = rc_words(tableau)
    return [polygon.Diagonal(r - 1, c + 1) for r, c in zip(rows, columns)]


def geodesic_to_tableau(diagonals: typing.Sequence[polygon.Diagonal]
                        ) -> ShiftedTableau:
    """
    The tableau holding entry i in the cell (a+1, b-1) when the i-th flip
    erases [a, b].

    Raises:
        errors.DomainError: If the sequence does not flip every diagonal
        once or the filling is not standard.
    """
    n: int = polygon_size(len(diagonals))
    shape: TruncShiftedShape = make_shape(n - 3)
    order: typing.List[Cell] = [(d.a + 1, d.b - 1) for d in diagonals]
    if sorted(order) != sorted(shape.cells):
        raise errors.DomainError(
            "The sequence does not flip every diagonal exactly once.")
    return _from_cells(shape, order)


def reflect(diagonals: typing.Iterable[polygon.Diagonal],
            n: int) -> typing.List[polygon.Diagonal]:
    """Apply the reflection v -> n - v (mod n) of the n-gon to diagonals."""
    return [polygon.diagonal(-d.a, -d.b, n) for d in diagonals]


@dataclasses.dataclass(frozen=True)
class DiagonalPoset:
    """
    The diagonals of the n-gon ordered coordinate-wise: [i, j] <= [k, l] iff
    i <= k and j <= l. With reverse=True the vertices are first relabeled by
    v -> n - v (mod n), i.e. 0 < n-1 < ... < 1.
    """
    n: int
    reverse: bool = False

    @property
    def elements(self) -> typing.Tuple[polygon.Diagonal, ...]:
        return polygon.all_diagonals(self.n)

    def _key(self, d: polygon.Diagonal) -> Cell:
        if not self.reverse:
            return d.a, d.b
        a, b = sorted(((self.n - d.a) % self.n, (self.n - d.b) % self.n))
        return a, b

    def less(self, first: polygon.Diagonal, second: polygon.Diagonal) -> bool:
        """Whether first comes strictly before second in this order."""
        return _cell_less(self._key(first), self._key(second))

    def count_linear_extensions(self) -> int:
        """The number of orders of the diagonals compatible with this one."""
        return count_linear_extensions(self.elements, self.less)


def diagonal_poset(n: int, reverse: bool = False) -> DiagonalPoset:
    """
    The coordinate-wise order on the diagonals of the n-gon.

    Parameters:
        n : The polygon size, larger than 4.
        reverse : Relabel the vertices by v -> n - v first, the order
            followed by the minus geodesics.

    Returns:
        The poset of the n(n-3)/2 diagonals.

    Raises:
        errors.InvalidSizeError: If n <= 4.
    """
    polygon.check_size(n)
    return DiagonalPoset(n, reverse)


def is_linear_extension(poset: DiagonalPoset,
                        sequence: typing.Sequence[polygon.Diagonal]) -> bool:
    """True iff the sequence lists every element once, respecting the order."""
    if sorted(sequence) != sorted(poset.elements):
        return False
    return not any(poset.less(sequence[j], sequence[i])
                   for i, j in itertools.combinations(range(len(sequence)),
                                                      2))


def lambda_extension_count(n: int) -> int:
    """
    Linear extensions of the coordinate-wise order on the pairs (i, j) with
    0 <= i+1 < j <= n other than (0, n).
    """
    pairs: typing.List[Cell] = [
        (i, j) for i in range(n + 1) for j in range(i + 2, n + 1)
        if (i, j) != (0, n)]
    return count_linear_extensions(pairs, _cell_less)


###############################################################################
# Partitions                                                                  #
###############################################################################
@dataclasses.dataclass(frozen=True, eq=False)
class PartitionPoset:
    """The partitions of Lambda(n) ordered by inclusion of diagrams."""
    n: int
    elements: typing.Tuple[Partition, ...]
    covers: nx.DiGraph

    @property
    def bottom(self) -> Partition:
        return ()

    @property
    def top(self) -> Partition:
        """The largest partition (n, n, n-1, ..., 1)."""
        return (self.n, *range(self.n, 0, -1))


def _contained(small: Partition, large: Partition) -> bool:
    """Whether the diagram of small fits inside the diagram of large."""
    return len(small) <= len(large) and all(
        a <= b for a, b in zip(small, large))


def lambda_poset(n: int) -> PartitionPoset:
    """
    The partitions with parts at most n, all distinct except that the first
    two may both equal n. Covers come from raw inclusion, so a cover may add
    more than one box.

    Raises:
        errors.InvalidSizeError: If n < 1.
    """
    if not isinstance(n, int) or n < 1:
        raise errors.InvalidSizeError(f"Lambda(n) needs n >= 1, got {n}.")
    strict: typing.List[Partition] = [
        tuple(sorted(parts, reverse=True))
        for size in range(n + 1)
        for parts in itertools.combinations(range(1, n + 1), size)]
    doubled: typing.List[Partition] = [
        (n, n, *sorted(parts, reverse=True))
        for size in range(n)
        for parts in itertools.combinations(range(1, n), size)]
    elements: typing.Tuple[Partition, ...] = tuple(sorted(
        strict + doubled, key=lambda part: (sum(part), part)))
    order: nx.DiGraph = nx.DiGraph()
    order.add_nodes_from(elements)
    order.add_edges_from(
        (small, large) for small, large in itertools.permutations(elements, 2)
        if _contained(small, large))
    covers: nx.DiGraph = nx.transitive_reduction(order)
    logger.debug(f"Lambda({n}) has {len(elements)} elements and"
                 f" {covers.number_of_edges()} covers.")
    return PartitionPoset(n, elements, covers)


def count_maximal_chains(poset: PartitionPoset) -> int:
    """Count the paths from the bottom to the top of the cover graph."""
    chains: typing.Dict[Partition, int] = {}
    for element in nx.topological_sort(poset.covers):
        chains[element] = 1 if element == poset.bottom else sum(
            chains[below] for below in poset.covers.predecessors(element))
    return chains[poset.top]


def lambda_report(n: int) -> typing.Dict[str, typing.Optional[int]]:
    """
    The maximal chains of Lambda(n) next to the tableau counts of the two
    truncated shapes they can be paired with: first part n-1 and first part
    n. A warning is logged when the chains do not match first part n-1.
    """
    chains: int = count_maximal_chains(lambda_poset(n))
    below: typing.Optional[int] = count_syt(make_shape(n - 1)) if n > 1 \
        else None
    same: int = count_syt(make_shape(n))
    if below is not None and chains != below:
        logger.warning(
            f"Lambda({n}) has {chains} maximal chains, the truncated shape"
            f" with first part {n - 1} has {below} tableaux and the one with"
            f" first part {n} has {same}.")
    return {"n": n, "maximal_chains": chains,
            "syt_first_part_n_minus_1": below, "syt_first_part_n": same}


###############################################################################
# Closed formulas                                                             #
###############################################################################
def staircase_g(m: int) -> int:
    """
    The number of standard tableaux of the shifted staircase (m, ..., 1):
    M! * prod_{i<m} i!/(2i+1)! with M = m(m+1)/2.
    """
    if not isinstance(m, int) or m < 0:
        raise errors.InvalidSizeError(f"The size must be >= 0, got {m}.")
    numerator: int = math.factorial(m * (m + 1) // 2) * math.prod(
        math.factorial(i) for i in range(m))
    denominator: int = math.prod(math.factorial(2 * i + 1) for i in range(m))
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(f"staircase_g({m}) is not an integer.")
    return quotient


def d_formula(n: int) -> int:
    """
    The number of geodesics from the canonical star of the n-gon to its
    reverse: g(n-6) * C(N, 4n-15) * 8(2n-9)/(n-3) with N = n(n-3)/2.

    Raises:
        errors.InvalidSizeError: If n < 6.
    """
    if not isinstance(n, int) or n < 6:
        raise errors.InvalidSizeError(f"The formula holds for n >= 6, got {n}.")
    diagonals: int = n * (n - 3) // 2
    numerator: int = (staircase_g(n - 6) * math.comb(diagonals, 4 * n - 15)
                      * 8 * (2 * n - 9))
    quotient, remainder = divmod(numerator, n - 3)
    if remainder:
        raise ArithmeticError(f"d_formula({n}) is not an integer.")
    return quotient
