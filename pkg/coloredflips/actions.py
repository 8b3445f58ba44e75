# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur

Helpers shared by the three generator actions of the package (flips on
colored triangulations, rho on arc permutations and theta on their classes):
the defining relations of the affine Coxeter group of type C, orbit closure
and relation checking on a finite set.
"""
# Standard library
import collections
import functools
import logging
import typing
# Local imports
from coloredflips import errors
# Constants
T = typing.TypeVar("T")
Action = typing.Callable[[T, int], T]
Word = typing.Tuple[int, ...]
logger: logging.Logger = logging.getLogger(__name__)


def coxeter_relations(rank: int) -> typing.List[Word]:
    """
    Words that act trivially in the affine Weyl group of type C with
    generators s_0, ..., s_rank:

    - s_i s_i for every i;
    - (s_i s_j)^2 for |i - j| > 1;
    - (s_i s_{i+1})^3 for 1 <= i <= rank - 2;
    - (s_0 s_1)^4 and (s_{rank-1} s_rank)^4.

    Parameters:
        rank : The index of the last generator, at least 2.

    Returns:
        The relator words, each read as the sequence of generator indices.

    Raises:
        errors.InvalidSizeError: If rank < 2.
    """
    if rank < 2:
        raise errors.InvalidSizeError(
            f"The relations are stated for rank >= 2, got {rank}.")
    words: typing.List[Word] = [(i, i) for i in range(rank + 1)]
    for i in range(rank + 1):
        for j in range(i + 2, rank + 1):
            words.append((i, j) * 2)
    words.extend((i, i + 1) * 3 for i in range(1, rank - 1))
    words.append((0, 1) * 4)
    words.append((rank - 1, rank) * 4)
    return words


def apply_word(action: Action, element: T, word: Word) -> T:
    """Apply the generators of a word from left to right."""
    return functools.reduce(action, word, element)


def orbit(action: Action,
          start: T,
          generators: typing.Iterable[int]
          ) -> typing.FrozenSet[T]:
    """
    Close a starting element under the given generators.

    Parameters:
        action : The action, called as action(element, generator).
        start : The starting element.
        generators : The generator indices.

    Returns:
        The orbit of the starting element.
    """
    gens: typing.Tuple[int, ...] = tuple(generators)
    seen: typing.Set[T] = {start}
    frontier: typing.Deque[T] = collections.deque([start])
    while frontier:
        current = frontier.popleft()
        for generator in gens:
            if (image := action(current, generator)) not in seen:
                seen.add(image)
                frontier.append(image)
    logger.debug(f"Orbit of size {len(seen)}.")
    return frozenset(seen)


def relation_violations(action: Action,
                        elements: typing.Iterable[T],
                        rank: int
                        ) -> typing.List[typing.Tuple[T, Word]]:
    """
    Check the Coxeter relations of the given rank on every element.

    Returns:
        The pairs (element, word) for which the word moves the element; an
        empty list when all relations hold.
    """
    relations: typing.List[Word] = coxeter_relations(rank)
    violations: typing.List[typing.Tuple[T, Word]] = [
        (element, word) for element in elements for word in relations
        if apply_word(action, element, word) != element]
    if violations:
        logger.info(f"{len(violations)} relation violations found.")
    return violations
