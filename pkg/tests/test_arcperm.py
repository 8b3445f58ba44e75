# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur
"""
# Third party
import pytest
# Local imports
from coloredflips import arcperm
from coloredflips import errors
from coloredflips import polygon
from coloredflips.arcperm import ArcClass, ArcPermutation


def test_is_arc_permutation():
    assert arcperm.is_arc_permutation((0, 1, 2, 3))
    assert arcperm.is_arc_permutation((2, 1, 3, 0))
    assert arcperm.is_arc_permutation((4, 0, 3, 1, 2))
    assert not arcperm.is_arc_permutation((0, 2, 1, 3))
    with pytest.raises(errors.DomainError):
        arcperm.is_arc_permutation((0, 0, 1))


def test_arc_permutation_validation():
    with pytest.raises(errors.DomainError):
        ArcPermutation(4, (0, 2, 1, 3))
    with pytest.raises(errors.DomainError):
        ArcPermutation(5, (0, 1, 2, 3))


@pytest.mark.parametrize("n", range(2, 8))
def test_number_of_arc_permutations(n):
    assert len(arcperm.enumerate_arc_perms(n)) == n * 2 ** (n - 2)


def test_enumerate_needs_two_letters():
    with pytest.raises(errors.InvalidSizeError):
        arcperm.enumerate_arc_perms(1)


def test_arc_vectors():
    perm = ArcPermutation(5, (2, 1, 3, 0, 4))
    vector = arcperm.encode_arc(perm)
    assert vector == arcperm.ArcVector(2, (0, 1, 0))
    assert vector.n == 5
    assert arcperm.decode_arc(vector) == perm
    with pytest.raises(errors.DomainError):
        arcperm.decode_arc(arcperm.ArcVector(5, (0, 0, 0)))


def test_rho():
    identity = ArcPermutation(5, (0, 1, 2, 3, 4))
    assert arcperm.rho(identity, 0).letters == (1, 0, 2, 3, 4)
    assert arcperm.rho(identity, 1) == identity
    assert arcperm.rho(identity, 3).letters == (0, 1, 2, 4, 3)
    with pytest.raises(errors.InvalidLabelError):
        arcperm.rho(identity, 4)


def test_class_of_the_identity():
    identity = ArcPermutation(6, tuple(range(6)))
    cl = arcperm.class_of(identity)
    assert cl.subsets == ((0, 1), (2,), (3,), (4, 5))
    assert [m.letters for m in arcperm.members(cl)] == [
        (0, 1, 2, 3, 4, 5), (0, 1, 2, 3, 5, 4),
        (1, 0, 2, 3, 4, 5), (1, 0, 2, 3, 5, 4)]
    assert arcperm.representative(cl) == identity
    assert cl.to_dict() == {"n": 6, "subsets": [[0, 1], [2], [3], [4, 5]]}


def test_invalid_classes():
    with pytest.raises(errors.DomainError):
        ArcClass.from_subsets(6, [(0, 1), (3,), (2,), (4, 5)])
    with pytest.raises(errors.DomainError):
        ArcClass.from_subsets(3, [(0, 1), (2,)])


@pytest.mark.parametrize("n", range(4, 9))
def test_number_of_classes(n):
    assert len(arcperm.enumerate_classes(n)) == n * 2 ** (n - 4)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_theta_matches_the_permutation_model(n):
    for cl in arcperm.enumerate_classes(n):
        for i in range(n - 3):
            assert arcperm.theta(cl, i) == \
                arcperm.theta_by_representatives(cl, i)


def test_theta_ranges():
    small = ArcClass.from_subsets(4, [(0, 1), (2, 3)])
    with pytest.raises(errors.InvalidSizeError):
        arcperm.theta(small, 0)
    cl = min(arcperm.enumerate_classes(6))
    with pytest.raises(errors.InvalidLabelError):
        arcperm.theta(cl, 3)


def test_f_on_the_star():
    star = polygon.canonical_star(6)
    assert arcperm.f_map(star).subsets == ((0, 1), (2,), (3,), (4, 5))
    assert arcperm.f_map(polygon.reverse(star)).subsets == (
        (4, 5), (3,), (2,), (0, 1))


@pytest.mark.parametrize("n", [5, 6, 7])
def test_f_is_an_equivariant_bijection(n):
    ctft = polygon.enumerate_ctft(n)
    images = {t: arcperm.f_map(t) for t in ctft}
    assert set(images.values()) == arcperm.enumerate_classes(n)
    for t, cl in images.items():
        assert arcperm.f_inv(cl) == t
        assert arcperm.f_map(polygon.reverse(t)).subsets == cl.subsets[::-1]
        for i in range(n - 3):
            assert images[polygon.flip_label(t, i)] == arcperm.theta(cl, i)


def test_arcs_of_the_examples():
    assert arcperm.is_arc_permutation((0, 1, 4, 3, 2))
    assert not arcperm.is_arc_permutation((0, 1, 4, 3, 2, 5))
    assert arcperm.encode_arc(ArcPermutation(5, (0, 1, 4, 3, 2))) == \
        arcperm.ArcVector(0, (1, 0, 0))


def test_rho_acts_where_the_directions_change():
    n = 6
    for perm in arcperm.enumerate_arc_perms(n):
        dirs = arcperm.encode_arc(perm).dirs
        for i in range(1, n - 2):
            assert (arcperm.rho(perm, i) != perm) == (dirs[i - 1] != dirs[i])


def test_theta_0_on_the_identity_class():
    cl = ArcClass.from_subsets(6, [(0, 1), (2,), (3,), (4, 5)])
    assert arcperm.theta(cl, 0).subsets == ((1, 2), (0,), (3,), (4, 5))
