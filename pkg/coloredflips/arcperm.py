# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur

Arc permutations of Z_n, i.e. permutations all of whose prefixes are cyclic
intervals, together with:

- their encoding by a head letter and n-2 growth directions;
- the action rho_i swapping the letters at positions i and i+1;
- the classes obtained by ignoring the order of the first two and the last
  two letters, stored as a series of n-2 subsets;
- the action theta_i on these classes;
- the bijection f from colored triangle-free triangulations to classes.

Letters are 0..n-1 throughout.
"""
# Standard library
import dataclasses
import itertools
import logging
import typing
# Local imports
from coloredflips import codec
from coloredflips import errors
from coloredflips import polygon
# Constants
Subset = typing.Tuple[int, ...]
logger: logging.Logger = logging.getLogger(__name__)


###############################################################################
# Arc permutations                                                            #
###############################################################################
def _check_permutation(letters: typing.Sequence[int]) -> None:
    """Refuse sequences that are not permutations of 0..len-1."""
    if sorted(letters) != list(range(len(letters))):
        raise errors.DomainError(
            f"{list(letters)} is not a permutation of 0..{len(letters) - 1}.")


def _grows(n: int, letters: typing.Sequence[int]
           ) -> typing.Optional[typing.List[int]]:
    """
    Follow the prefix interval [low, high] letter by letter.

    Returns:
        For every letter after the first, 0 if it extends the interval at the
        lower end and 1 if at the upper end; None as soon as a letter extends
        neither end.
    """
    low = high = letters[0]
    directions: typing.List[int] = []
    for letter in letters[1:]:
        if letter == (low - 1) % n:
            low -= 1
            directions.append(0)
        elif letter == (high + 1) % n:
            high += 1
            directions.append(1)
        else:
            return None
    return directions


def is_arc_permutation(letters: typing.Sequence[int]) -> bool:
    """
    Check that every prefix of a permutation of Z_n is a cyclic interval.

    Parameters:
        letters : A permutation of 0..n-1.

    Returns:
        True if the permutation is an arc permutation.

    Raises:
        errors.DomainError: If the sequence is not a permutation.
    """
    _check_permutation(letters)
    return len(letters) == 0 or _grows(len(letters), letters) is not None


@dataclasses.dataclass(frozen=True, order=True)
class ArcPermutation:
    n: int
    letters: typing.Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.letters) != self.n:
            raise errors.DomainError(
                f"An arc permutation of Z_{self.n} has {self.n} letters.")
        if not is_arc_permutation(self.letters):
            raise errors.DomainError(
                f"{list(self.letters)} is not an arc permutation.")

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """The permutation as {"n", "letters"}."""
        return {"n": self.n, "letters": list(self.letters)}


@dataclasses.dataclass(frozen=True)
class ArcVector:
    """The head letter and the n-2 growth directions of an arc permutation."""
    head: int
    dirs: typing.Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.dirs) + 2


def enumerate_arc_perms(n: int) -> typing.FrozenSet[ArcPermutation]:
    """
    All n*2^(n-2) arc permutations of Z_n.

    Raises:
        errors.InvalidSizeError: If n < 2.
    """
    if not isinstance(n, int) or n < 2:
        raise errors.InvalidSizeError(f"Arc permutations need n >= 2, got {n}.")
    perms = frozenset(
        decode_arc(ArcVector(head, dirs)) for head, dirs in itertools.product(
            range(n), itertools.product((0, 1), repeat=n - 2)))
    logger.info(f"U_{n} has {len(perms)} elements.")
    return perms


def encode_arc(perm: ArcPermutation) -> ArcVector:
    """
    The head letter and the growth direction of the letters at positions
    1..n-2; the last letter is forced.
    """
    directions = _grows(perm.n, perm.letters)
    return ArcVector(perm.letters[0], tuple(directions[:perm.n - 2]))


def decode_arc(vector: ArcVector) -> ArcPermutation:
    """The arc permutation with the given head and growth directions."""
    n: int = vector.n
    if not 0 <= vector.head < n:
        raise errors.DomainError(
            f"The head must lie in 0..{n - 1}, got {vector.head}.")
    low = high = vector.head
    letters: typing.List[int] = [vector.head]
    for direction in vector.dirs:
        if direction == 0:
            low -= 1
            letters.append(low % n)
        else:
            high += 1
            letters.append(high % n)
    if n > 1:
        letters.append((low - 1) % n)
    return ArcPermutation(n, tuple(letters))


def rho(perm: ArcPermutation, index: int) -> ArcPermutation:
    """
    Swap the letters at positions index and index+1 (counted from 0) when the
    result is again an arc permutation; otherwise return the permutation.

    Raises:
        errors.InvalidLabelError: If the index is outside 0..n-2.
    """
    if not 0 <= index <= perm.n - 2:
        raise errors.InvalidLabelError(
            f"rho is indexed by 0..{perm.n - 2}, got {index}.")
    letters: typing.List[int] = list(perm.letters)
    letters[index], letters[index + 1] = letters[index + 1], letters[index]
    if _grows(perm.n, letters) is None:
        return perm
    return ArcPermutation(perm.n, tuple(letters))


###############################################################################
# Classes                                                                     #
###############################################################################
def _member_letters(subsets: typing.Sequence[Subset]
                    ) -> typing.List[typing.Tuple[int, ...]]:
    """The four orderings of the first and the last pair, sorted."""
    first, *middle, last = subsets
    inner: typing.Tuple[int, ...] = tuple(x for (x,) in middle)
    return sorted(head + inner + tail
                  for head in (first, first[::-1])
                  for tail in (last, last[::-1]))


def _is_valid_series(n: int, subsets: typing.Sequence[Subset]) -> bool:
    """
    Whether the subsets form a pair, n-4 singletons and a pair covering
    Z_n, with every member an arc permutation.
    """
    sizes: typing.List[int] = [len(subset) for subset in subsets]
    if sizes != [2] + [1] * (n - 4) + [2]:
        return False
    letters: typing.List[int] = [x for subset in subsets for x in subset]
    if sorted(letters) != list(range(n)):
        return False
    return all(_grows(n, member) is not None
               for member in _member_letters(subsets))


@dataclasses.dataclass(frozen=True, order=True)
class ArcClass:
    """
    A class of four arc permutations that differ in the order of their first
    two and their last two letters: a pair, n-4 singletons and a pair, each
    subset stored sorted.
    """
    n: int
    subsets: typing.Tuple[Subset, ...]

    def __post_init__(self) -> None:
        if self.n < 4:
            raise errors.DomainError(f"Classes need n > 3, got {self.n}.")
        if not _is_valid_series(self.n, self.subsets):
            raise errors.DomainError(
                f"{self.subsets} is not a class of arc permutations of"
                f" Z_{self.n}.")

    @classmethod
    def from_subsets(cls, n: int,
                     subsets: typing.Iterable[typing.Iterable[int]]
                     ) -> "ArcClass":
        """Build a class, sorting every subset first."""
        return cls(n, tuple(tuple(sorted(subset)) for subset in subsets))

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """The class as {"n", "subsets"}, subsets in series order."""
        return {"n": self.n, "subsets": [list(s) for s in self.subsets]}


def class_of(perm: ArcPermutation) -> ArcClass:
    """
    The class of an arc permutation.

    Raises:
        errors.DomainError: If n <= 3.
    """
    letters = perm.letters
    if perm.n <= 3:
        raise errors.DomainError(f"Classes need n > 3, got {perm.n}.")
    return ArcClass.from_subsets(
        perm.n,
        [letters[:2], *((x,) for x in letters[2:-2]), letters[-2:]])


def members(cl: ArcClass) -> typing.List[ArcPermutation]:
    """
    The four arc permutations of a class.

    Parameters:
        cl : A class of arc permutations.

    Returns:
        The members, sorted by their letters.
    """
    return [ArcPermutation(cl.n, letters)
            for letters in _member_letters(cl.subsets)]


def representative(cl: ArcClass) -> ArcPermutation:
    """The lexicographically least member of a class."""
    return members(cl)[0]


def enumerate_classes(n: int) -> typing.FrozenSet[ArcClass]:
    """All n*2^(n-4) classes of arc permutations of Z_n."""
    if not isinstance(n, int) or n < 4:
        raise errors.InvalidSizeError(f"Classes need n > 3, got {n}.")
    return frozenset(class_of(perm) for perm in enumerate_arc_perms(n))


def _check_theta(cl: ArcClass, index: int) -> None:
    """Refuse classes with n <= 4 and indices outside 0..n-4."""
    if cl.n < polygon.MIN_SIZE:
        raise errors.InvalidSizeError(
            f"theta needs n > 4, got {cl.n}.")
    if not 0 <= index <= cl.n - 4:
        raise errors.InvalidLabelError(
            f"theta is indexed by 0..{cl.n - 4}, got {index}.")


def theta(cl: ArcClass, index: int) -> ArcClass:
    """
    Apply theta_i to a class.

    - theta_0 trades a letter of the first pair with the following
      singleton x: a pair {x-2, x-1} becomes {x-1, x} followed by {x-2} and a
      pair {x+1, x+2} becomes {x, x+1} followed by {x+2}.
    - theta_{n-4} mirrors theta_0 on the last singleton and the last pair.
    - Any other theta_i swaps the singletons i and i+1 of the series when the
      result is again a class.

    Parameters:
        cl : A class of arc permutations.
        index : The index i in 0..n-4.

    Returns:
        theta_i applied to the class; the class itself when theta_i fixes it.

    Raises:
        errors.InvalidSizeError: If n <= 4.
        errors.InvalidLabelError: If the index is out of range.
    """
    _check_theta(cl, index)
    n: int = cl.n
    subsets: typing.List[Subset] = list(cl.subsets)
    if index == 0:
        pair, (x,) = set(subsets[0]), subsets[1]
        if pair == {(x - 2) % n, (x - 1) % n}:
            subsets[0:2] = [((x - 1) % n, x), ((x - 2) % n,)]
        elif pair == {(x + 1) % n, (x + 2) % n}:
            subsets[0:2] = [(x, (x + 1) % n), ((x + 2) % n,)]
    elif index == n - 4:
        (y,), pair = subsets[-2], set(subsets[-1])
        if pair == {(y - 2) % n, (y - 1) % n}:
            subsets[-2:] = [((y - 2) % n,), ((y - 1) % n, y)]
        elif pair == {(y + 1) % n, (y + 2) % n}:
            subsets[-2:] = [((y + 2) % n,), (y, (y + 1) % n)]
    else:
        subsets[index], subsets[index + 1] = subsets[index + 1], subsets[index]
        if not _is_valid_series(n, subsets):
            return cl
    return ArcClass.from_subsets(n, subsets)


def theta_by_representatives(cl: ArcClass, index: int) -> ArcClass:
    """
    theta_i computed on member permutations: swap the letters at positions
    i+1 and i+2 of each member and keep the arc permutations that land in
    another class.

    Raises:
        errors.DomainError: If two different classes are reached.
    """
    _check_theta(cl, index)
    images: typing.Set[ArcClass] = set()
    for member in members(cl):
        letters: typing.List[int] = list(member.letters)
        letters[index + 1], letters[index + 2] = (letters[index + 2],
                                                  letters[index + 1])
        if _grows(cl.n, letters) is not None:
            image = class_of(ArcPermutation(cl.n, tuple(letters)))
            if image != cl:
                images.add(image)
    if len(images) > 1:
        raise errors.DomainError(
            f"theta_{index} is not well defined on {cl.subsets}.")
    return images.pop() if images else cl


###############################################################################
# Bijection with colored triangulations                                       #
###############################################################################
def f_map(triangulation: polygon.ColoredTriangulation) -> ArcClass:
    """
    Send a colored triangulation with code (v0; v1 ... v_{n-4}) to the class
    starting with {v0-1, v0}, followed by the vertex exposed by every later
    chord and closed by the two remaining vertices.
    """
    code = codec.encode(triangulation)
    n: int = code.n
    low, high = code.v0 - 1, code.v0 + 1
    subsets: typing.List[Subset] = [(low % n, code.v0)]
    for bit in code.bits:
        if bit == 1:
            subsets.append((high % n,))
            high += 1
        else:
            low -= 1
            subsets.append((low % n,))
    subsets.append(((low - 1) % n, (low - 2) % n))
    return ArcClass.from_subsets(n, subsets)


def f_inv(cl: ArcClass) -> polygon.ColoredTriangulation:
    """
    The colored triangulation sent to a class by f_map.

    Raises:
        errors.DomainError: If a singleton does not extend the letters before
        it.
    """
    n: int = cl.n
    if n < polygon.MIN_SIZE:
        raise errors.InvalidSizeError(f"f is defined for n > 4, got {n}.")
    first, second = cl.subsets[0]
    v0: int = second if second == first + 1 else first
    low, high = v0 - 1, v0 + 1
    bits: typing.List[int] = []
    for (letter,) in cl.subsets[1:-1]:
        if letter == high % n:
            bits.append(1)
            high += 1
        elif letter == (low - 1) % n:
            bits.append(0)
            low -= 1
        else:
            raise errors.DomainError(
                f"{letter} does not extend the letters before it in"
                f" {cl.subsets}.")
    return codec.decode(codec.Code(n, v0, tuple(bits)))
