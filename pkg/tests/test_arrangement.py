# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur
"""
# Third party
import networkx as nx
import pytest
# Local imports
from coloredflips import arcperm
from coloredflips import arrangement
from coloredflips import errors
from coloredflips import polygon


def test_k_prime():
    assert arrangement.k_prime(4).edges == frozenset({(0, 2), (1, 3)})
    with pytest.raises(errors.DomainError):
        arrangement.k_prime(3)
    with pytest.raises(errors.DomainError):
        arrangement.SimpleGraph(3, frozenset({(2, 1)}))


@pytest.mark.parametrize("n", range(5, 10))
def test_hyperplanes_are_the_diagonals(n):
    hyperplanes = arrangement.k_prime_arrangement(n).hyperplanes
    assert hyperplanes == tuple((d.a, d.b) for d in polygon.all_diagonals(n))


def test_hyperplane_index():
    a = arrangement.k_prime_arrangement(5)
    assert a.index((0, 2)) == 0
    with pytest.raises(errors.DomainError):
        a.index((0, 1))


def test_chamber_of_and_negative():
    a = arrangement.k_prime_arrangement(4)
    identity = arrangement.chamber_of((0, 1, 2, 3), a)
    assert identity.signs == "--"
    flipped = arrangement.negative(identity)
    assert flipped.signs == "++"
    assert flipped.witness == (3, 2, 1, 0)
    assert arrangement.chamber_of((2, 0, 1, 3), a).signs == "+-"
    assert arrangement.separating_set(identity, flipped) == frozenset(
        a.hyperplanes)
    with pytest.raises(errors.DomainError):
        arrangement.chamber_of((0, 1, 1, 3), a)


def test_chambers_of_different_arrangements():
    first = arrangement.chamber_of((0, 1, 2, 3),
                                   arrangement.k_prime_arrangement(4))
    second = arrangement.chamber_of((0, 1, 2, 3),
                                    arrangement.braid_arrangement(4))
    with pytest.raises(errors.DomainError):
        arrangement.separating_set(first, second)


@pytest.mark.parametrize("graph, count", [
    (arrangement.complete_graph(3), 6),
    (arrangement.complete_graph(4), 24),
    (arrangement.k_prime(4), 4),
    (arrangement.k_prime(5), 30),
])
def test_count_acyclic_orientations(graph, count):
    assert arrangement.count_acyclic_orientations(graph) == count


@pytest.mark.parametrize("n", [4, 5, 6])
def test_all_chambers(n):
    a = arrangement.k_prime_arrangement(n)
    chambers = arrangement.all_chambers(a)
    assert len(chambers) == arrangement.count_acyclic_orientations(a.graph)
    assert [c.signs for c in chambers] == sorted(c.signs for c in chambers)


def test_all_chambers_is_limited():
    with pytest.raises(errors.InvalidSizeError):
        arrangement.all_chambers(arrangement.k_prime_arrangement(8))


def test_permutation_classes():
    sizes = sorted(len(perms) for perms in arrangement.permutation_classes(
        arrangement.k_prime_arrangement(4)).values())
    assert sizes == [6, 6, 6, 6]
    sizes = sorted(len(perms) for perms in arrangement.permutation_classes(
        arrangement.k_prime_arrangement(5)).values())
    assert sizes == [1] * 10 + [3] * 10 + [8] * 10


@pytest.mark.parametrize("n", [4, 5])
def test_full_chamber_graph_diameter(n):
    a = arrangement.k_prime_arrangement(n)
    graph = arrangement.chamber_graph(a, arrangement.all_chambers(a))
    assert nx.diameter(graph) == len(a.hyperplanes)
    chamber = arrangement.all_chambers(a)[0]
    assert arrangement.gallery_distance(
        chamber, arrangement.negative(chamber), graph) == len(a.hyperplanes)


def test_chamber_graph_of_k_prime_4_is_a_square():
    a = arrangement.k_prime_arrangement(4)
    graph = arrangement.chamber_graph(a, arrangement.all_chambers(a))
    assert nx.is_isomorphic(graph, nx.cycle_graph(4))


def test_gallery_distance_errors():
    a = arrangement.k_prime_arrangement(4)
    identity = arrangement.chamber_of((0, 1, 2, 3), a)
    lonely = arrangement.chamber_graph(a, [identity,
                                           arrangement.negative(identity)])
    with pytest.raises(errors.NoPathError):
        arrangement.gallery_distance(identity,
                                     arrangement.negative(identity), lonely)
    other = arrangement.chamber_of((2, 0, 1, 3), a)
    with pytest.raises(errors.DomainError):
        arrangement.gallery_distance(identity, other, lonely)


def test_classes_chamber_graph_n5_is_a_ten_cycle():
    graph = arrangement.classes_chamber_graph(5)
    assert nx.is_isomorphic(graph, nx.cycle_graph(10))
    for chamber, cl in graph.nodes(data="arc_class"):
        assert arrangement.class_chamber(cl) == chamber


@pytest.mark.parametrize("n", [5, 6])
def test_class_members_share_a_chamber(n):
    a = arrangement.k_prime_arrangement(n)
    for cl in arcperm.enumerate_classes(n):
        assert {arrangement.chamber_of(m.letters, a).signs
                for m in arcperm.members(cl)} == {
            arrangement.class_chamber(cl).signs}


def test_chamber_of_orientation():
    a = arrangement.k_prime_arrangement(4)
    chamber = arrangement.chamber_of_orientation(a, [(0, 2), (1, 3)])
    assert chamber.signs == "--"
    with pytest.raises(errors.DomainError):
        arrangement.chamber_of_orientation(
            arrangement.braid_arrangement(3), [(0, 1), (1, 2), (2, 0)])


@pytest.mark.parametrize("n", [4, 5, 6])
@pytest.mark.parametrize("shift, reflect", [(1, False), (2, True)])
def test_dihedral_images_preserve_adjacency(n, shift, reflect):
    a = arrangement.k_prime_arrangement(n)
    graph = arrangement.chamber_graph(a, arrangement.all_chambers(a))
    for first, second in graph.edges:
        assert graph.has_edge(
            arrangement.dihedral_image(first, shift, reflect),
            arrangement.dihedral_image(second, shift, reflect))


@pytest.mark.parametrize("n", [5, 6, 7])
@pytest.mark.parametrize("shift, reflect", [(1, False), (3, True)])
def test_dihedral_images_preserve_the_classes_graph(n, shift, reflect):
    graph = arrangement.classes_chamber_graph(n)
    for first, second in graph.edges:
        image_first = arrangement.dihedral_image(first, shift, reflect)
        image_second = arrangement.dihedral_image(second, shift, reflect)
        assert image_first in graph
        assert graph.has_edge(image_first, image_second)
