# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur

Encoding of colored triangle-free triangulations of the n-gon as vectors in
Z_n x Z_2^(n-4). The chord labeled 0 is [a-1, a+1] and gives v0 = a; every
following chord extends the previous one by one vertex, to the left (bit 0)
or to the right (bit 1). Codes are the canonical keys of triangulations
throughout the package.

Functions:
- encode / decode / chord_of_label: the bijection and its closed form.
- rank: the integer rank used to orient the flip graph.
- reverse_code: label reversal expressed on codes.
- apply_generator: the flip s_i expressed on codes.
"""
# Standard library
import dataclasses
import itertools
import logging
import typing
# Local imports
from coloredflips import errors
from coloredflips import polygon
# Constants
SEPARATOR: str = ";"
logger: logging.Logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, order=True)
class Code:
    """The code (v0; v1 ... v_{n-4}) of a colored triangulation."""
    n: int
    v0: int
    bits: typing.Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < polygon.MIN_SIZE:
            raise errors.InvalidSizeError(
                f"The polygon size must be > 4, got {self.n}.")
        if not 0 <= self.v0 < self.n:
            raise errors.DomainError(
                f"v0 must lie in 0..{self.n - 1}, got {self.v0}.")
        if len(self.bits) != self.n - 4 or any(
                bit not in (0, 1) for bit in self.bits):
            raise errors.DomainError(
                f"A code of the {self.n}-gon needs {self.n - 4} bits in"
                f" {{0, 1}}, got {self.bits}.")

    def __str__(self) -> str:
        return f"{self.v0}{SEPARATOR}{''.join(map(str, self.bits))}"

    @classmethod
    def parse(cls, text: str) -> "Code":
        """
        Read the textual form "v0;b1b2...", e.g. "1;11" for n = 6. The
        polygon size follows from the number of bits.

        Raises:
            errors.DomainError: If the text is not a code.
        """
        head, sep, tail = text.strip().partition(SEPARATOR)
        if not sep or not head.isdigit() or not set(tail) <= {"0", "1"}:
            raise errors.DomainError(f"'{text}' is not a code.")
        return cls(len(tail) + 4, int(head), tuple(int(b) for b in tail))


def encode(triangulation: polygon.ColoredTriangulation) -> Code:
    """
    Compute the code of a colored triangle-free triangulation.

    Parameters:
        triangulation : A properly colored triangle-free triangulation.

    Returns:
        Its code.

    Raises:
        errors.DomainError: If a chord does not extend its predecessor,
        which only happens for triangulations that are not properly colored.
    """
    n: int = triangulation.n
    first: polygon.Diagonal = triangulation.chords[0]
    apex: int = first.a + 1 if first.b - first.a == 2 else first.b + 1
    left, right = apex - 1, apex + 1
    bits: typing.List[int] = []
    for chord in triangulation.chords[1:]:
        pair: typing.Set[int] = {chord.a, chord.b}
        if pair == {(left - 1) % n, right % n}:
            bits.append(0)
            left -= 1
        elif pair == {left % n, (right + 1) % n}:
            bits.append(1)
            right += 1
        else:
            raise errors.DomainError(
                f"{chord} does not extend the chord labeled"
                f" {len(bits)} by one vertex.")
    return Code(n, apex % n, tuple(bits))


def chord_of_label(code: Code, label: int) -> polygon.Diagonal:
    """
    The chord labeled i of the triangulation with the given code:
    [v0 - 1 - i + s, v0 + 1 + s] modulo n with s = v1 + ... + vi.

    Raises:
        errors.InvalidLabelError: If the label is outside 0..n-4.
    """
    n: int = code.n
    if not 0 <= label <= n - 4:
        raise errors.InvalidLabelError(
            f"Labels run over 0..{n - 4}, got {label}.")
    steps_right: int = sum(code.bits[:label])
    return polygon.diagonal(code.v0 - 1 - label + steps_right,
                            code.v0 + 1 + steps_right, n)


def decode(code: Code) -> polygon.ColoredTriangulation:
    """The colored triangulation with the given code."""
    return polygon.ColoredTriangulation(
        code.n, tuple(chord_of_label(code, i) for i in range(code.n - 3)))


def rank(code: Code) -> int:
    """
    The rank (n-3)*v0 + sum of (n-3-i)*v_i over i = 1..n-4, with all entries
    read as ordinary integers.
    """
    n: int = code.n
    return (n - 3) * code.v0 + sum(
        (n - 3 - i) * bit for i, bit in enumerate(code.bits, start=1))


def modulus(n: int) -> int:
    """Ranks of neighbouring codes differ by +-1 modulo n(n-3)."""
    return n * (n - 3)


def reverse_code(code: Code) -> Code:
    """
    The code of the reversed triangulation: v0 becomes 2 + v0 + v1 + ... +
    v_{n-4} modulo n and the bits are reversed and complemented.
    """
    return Code(code.n,
                (2 + code.v0 + sum(code.bits)) % code.n,
                tuple(1 - bit for bit in reversed(code.bits)))


def _check_generator(code: Code, generator: int) -> None:
    """Refuse generator indices outside 0..n-4."""
    if not 0 <= generator <= code.n - 4:
        raise errors.InvalidLabelError(
            f"Generators run over 0..{code.n - 4}, got {generator}.")


def apply_generator_closed_form(code: Code, generator: int) -> Code:
    """
    The flip s_i on codes without going through the polygon.

    - s_0 moves v0 to v0 + 1 and clears v1 when v1 = 1, and moves v0 to
      v0 - 1 and sets v1 when v1 = 0.
    - s_i for 0 < i < n-4 swaps v_i and v_{i+1}.
    - s_{n-4} flips the last bit.

    Parameters:
        code : A code.
        generator : The generator index i in 0..n-4.

    Returns:
        The code of s_i applied to the triangulation.

    Raises:
        errors.InvalidLabelError: If the generator index is out of range.
    """
    _check_generator(code, generator)
    n: int = code.n
    bits: typing.List[int] = list(code.bits)
    if generator == 0:
        step: int = 1 if bits[0] == 1 else -1
        bits[0] = 1 - bits[0]
        return Code(n, (code.v0 + step) % n, tuple(bits))
    if generator == n - 4:
        bits[-1] = 1 - bits[-1]
    else:
        bits[generator - 1], bits[generator] = (bits[generator],
                                                bits[generator - 1])
    return Code(n, code.v0, tuple(bits))


def apply_generator(code: Code, generator: int) -> Code:
    """
    The flip s_i on codes. s_0 is computed through the polygon, the other
    generators through the closed form.

    Raises:
        errors.InvalidLabelError: If the generator index is out of range.
    """
    _check_generator(code, generator)
    if generator == 0:
        return encode(polygon.flip_label(decode(code), 0))
    return apply_generator_closed_form(code, generator)


def s0_report(n: int) -> typing.Dict[str, int]:
    """
    Compare the two sign pairings of s_0 on codes with the flip on the
    polygon: the fitted one (v1 = 1 gives v0 + 1) and its mirror (v1 = 1
    gives v0 - 1). A warning is logged when the mirrored pairing disagrees
    with the polygon.

    Parameters:
        n : The polygon size, larger than 4.

    Returns:
        The number of codes and, per pairing, the number of codes on which
        it agrees with the polygon.

    Raises:
        errors.InvalidSizeError: If n <= 4.
    """
    codes: typing.List[Code] = all_codes(n)
    fitted: int = 0
    mirrored: int = 0
    for code in codes:
        expected: Code = apply_generator(code, 0)
        fitted += apply_generator_closed_form(code, 0) == expected
        step: int = -1 if code.bits[0] == 1 else 1
        mirror: Code = Code(n, (code.v0 + step) % n,
                            (1 - code.bits[0],) + code.bits[1:])
        mirrored += mirror == expected
    if mirrored != len(codes):
        logger.warning(
            f"s_0 on the {n}-gon: the pairing v1 = 1 -> v0 + 1 agrees with"
            f" the polygon on {fitted} of {len(codes)} codes, the pairing"
            f" v1 = 1 -> v0 - 1 on {mirrored}.")
    return {"n": n, "codes": len(codes), "fitted": fitted,
            "mirrored": mirrored}


def all_codes(n: int) -> typing.List[Code]:
    """All n*2^(n-4) codes of the n-gon in lexicographic order."""
    polygon.check_size(n)
    codes: typing.List[Code] = [
        Code(n, v0, bits) for v0, bits in itertools.product(
            range(n), itertools.product((0, 1), repeat=n - 4))]
    logger.debug(f"{len(codes)} codes for n={n}.")
    return codes
