# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur
"""
# Third party
import pytest
# Local imports
from coloredflips import errors
from coloredflips import polygon
from coloredflips.polygon import Diagonal


@pytest.mark.parametrize("n", [-1, 3, 4])
def test_check_size_rejects_small_polygons(n):
    with pytest.raises(errors.InvalidSizeError):
        polygon.check_size(n)


def test_diagonal_is_normalized():
    assert polygon.diagonal(5, 2, 6) == Diagonal(2, 5)
    assert polygon.diagonal(-1, 1, 6) == Diagonal(1, 5)
    assert str(Diagonal(0, 3)) == "[0,3]"
    assert Diagonal(1, 4).as_list() == [1, 4]


@pytest.mark.parametrize("x, y", [(0, 1), (0, 5), (3, 3)])
def test_sides_are_not_diagonals(x, y):
    with pytest.raises(errors.DomainError):
        polygon.diagonal(x, y, 6)


def test_diagonal_rejects_bad_endpoints():
    with pytest.raises(errors.DomainError):
        Diagonal(3, 1)
    with pytest.raises(TypeError):
        Diagonal(0.5, 2)


@pytest.mark.parametrize("n", range(5, 10))
def test_number_of_diagonals(n):
    assert len(polygon.all_diagonals(n)) == n * (n - 3) // 2


def test_crosses():
    assert polygon.crosses(Diagonal(0, 2), Diagonal(1, 3))
    assert not polygon.crosses(Diagonal(0, 2), Diagonal(2, 4))
    assert not polygon.crosses(Diagonal(0, 4), Diagonal(1, 3))


def test_canonical_star():
    star = polygon.canonical_star(6)
    assert star.chords == (Diagonal(0, 2), Diagonal(0, 3), Diagonal(0, 4))
    assert polygon.is_properly_colored(6, star.chords)
    assert star.label_of(Diagonal(0, 4)) == 2
    with pytest.raises(errors.DomainError):
        star.label_of(Diagonal(1, 3))


def test_labels_must_follow_the_chord_path():
    chords = (Diagonal(0, 2), Diagonal(0, 4), Diagonal(0, 3))
    assert not polygon.is_properly_colored(6, chords)
    with pytest.raises(errors.DomainError):
        polygon.ColoredTriangulation.from_chords(6, [(0, 2), (0, 4), (0, 3)])


def test_internal_triangle_is_rejected():
    fan = polygon.UncoloredTriangulation(
        6, frozenset({Diagonal(0, 2), Diagonal(2, 4), Diagonal(0, 4)}))
    assert not polygon.is_triangle_free(fan)
    with pytest.raises(errors.DomainError):
        polygon.proper_colorings(fan)
    with pytest.raises(errors.DomainError):
        polygon.ColoredTriangulation.from_chords(6, [(0, 2), (2, 4), (0, 4)])


def test_crossing_chords_are_not_a_triangulation():
    with pytest.raises(errors.DomainError):
        polygon.UncoloredTriangulation(
            5, frozenset({Diagonal(0, 2), Diagonal(1, 3)}))


def test_proper_colorings_are_reverses():
    star = polygon.canonical_star(7)
    first, second = polygon.proper_colorings(star.uncolored)
    assert first == star
    assert second == polygon.reverse(star)


def test_flip_label_on_the_star():
    star = polygon.canonical_star(6)
    flipped = polygon.flip_label(star, 0)
    assert flipped.chords == (Diagonal(1, 3), Diagonal(0, 3), Diagonal(0, 4))
    # flipping [0,3] would create the triangle 0-2-4
    assert polygon.flip_label(star, 1) == star
    assert polygon.flip_label(flipped, 0) == star


@pytest.mark.parametrize("label", [-1, 3])
def test_flip_label_out_of_range(label):
    with pytest.raises(errors.InvalidLabelError):
        polygon.flip_label(polygon.canonical_star(6), label)


@pytest.mark.parametrize("n", range(5, 9))
def test_enumerate_ctft_cardinality(n):
    ctft = polygon.enumerate_ctft(n)
    assert len(ctft) == n * 2 ** (n - 4)
    assert all(polygon.count_short_chords(n, t.chords) == 2 for t in ctft)
    assert all(polygon.reverse(t) in ctft for t in ctft)


@pytest.mark.parametrize("n, catalan", [(4, 2), (5, 5), (6, 14), (7, 42)])
def test_enumerate_triangulations(n, catalan):
    assert len(polygon.enumerate_triangulations(n)) == catalan


@pytest.mark.parametrize("n", [5, 6, 7])
def test_brute_force_agrees_with_orbit(n):
    assert polygon.brute_force_ctft(n) == polygon.enumerate_ctft(n)


@pytest.mark.slow
def test_brute_force_agrees_with_orbit_n8():
    assert polygon.brute_force_ctft(8) == polygon.enumerate_ctft(8)


def test_dict_form():
    star = polygon.canonical_star(5)
    assert star.to_dict() == {"n": 5, "chords": [[0, 2], [0, 3]]}
    assert polygon.ColoredTriangulation.from_dict(star.to_dict()) == star


@pytest.mark.parametrize("n, count", [(5, 5), (6, 12), (7, 28), (8, 64),
                                      (9, 144)])
def test_triangle_free_means_two_short_chords(n, count):
    triangulations = polygon.enumerate_triangulations(n)
    for triangulation in triangulations:
        assert polygon.is_triangle_free(triangulation) == (
            polygon.count_short_chords(n, triangulation.chords) == 2)
    free = [t for t in triangulations if polygon.is_triangle_free(t)]
    assert len(free) == count == n * 2 ** (n - 4) // 2
