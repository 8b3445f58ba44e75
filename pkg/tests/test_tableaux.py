# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur
"""
# Third party
import pytest
# Local imports
from coloredflips import errors
from coloredflips import flipgraph
from coloredflips import tableaux
from coloredflips.flipgraph import Direction
from coloredflips.polygon import Diagonal
from coloredflips.tableaux import ShiftedTableau

WORKED_EXAMPLE = [Diagonal(0, 2), Diagonal(0, 3), Diagonal(1, 3),
                  Diagonal(0, 4), Diagonal(1, 4), Diagonal(1, 5),
                  Diagonal(2, 4), Diagonal(2, 5), Diagonal(3, 5)]


def test_make_shape():
    shape = tableaux.make_shape(3)
    assert shape.rows == (3, 3, 2, 1)
    assert shape.size == 9
    assert shape.cells[:4] == ((1, 1), (1, 2), (1, 3), (2, 2))
    with pytest.raises(errors.InvalidSizeError):
        tableaux.make_shape(0)
    with pytest.raises(errors.DomainError):
        tableaux.TruncShiftedShape((3, 2, 1), 3)


def test_staircase():
    assert tableaux.make_staircase(3).rows == (3, 2, 1)
    assert tableaux.make_staircase(0).size == 0
    with pytest.raises(errors.InvalidSizeError):
        tableaux.make_staircase(-1)


def test_tableaux_of_the_hexagon():
    syt = tableaux.enumerate_syt(tableaux.make_shape(3))
    assert [t.rows for t in syt] == [
        ((1, 2, 3), (4, 5, 6), (7, 8), (9,)),
        ((1, 2, 3), (4, 5, 7), (6, 8), (9,)),
        ((1, 2, 4), (3, 5, 6), (7, 8), (9,)),
        ((1, 2, 4), (3, 5, 7), (6, 8), (9,)),
    ]
    assert syt[2].to_dict() == {"p": 3, "rows": [[1, 2, 4], [3, 5, 6],
                                                 [7, 8], [9]]}


@pytest.mark.parametrize("p, count", [
    (1, 1), (2, 1), (3, 4), (4, 70),
    pytest.param(5, 6384, marks=pytest.mark.slow)])
def test_count_syt(p, count):
    shape = tableaux.make_shape(p)
    assert tableaux.count_syt(shape) == count
    assert len(tableaux.enumerate_syt(shape)) == count


@pytest.mark.parametrize("m, count", [(0, 1), (1, 1), (2, 1), (3, 2),
                                      (4, 12), (5, 286)])
def test_staircase_g(m, count):
    assert tableaux.staircase_g(m) == count
    assert tableaux.count_syt(tableaux.make_staircase(m)) == count


def test_non_standard_fillings_are_rejected():
    shape = tableaux.make_shape(3)
    with pytest.raises(errors.DomainError):
        ShiftedTableau(shape, ((1, 2, 3), (5, 4, 6), (7, 8), (9,)))
    with pytest.raises(errors.DomainError):
        ShiftedTableau(shape, ((1, 2, 3), (4, 5, 6), (7, 8)))
    with pytest.raises(errors.DomainError):
        ShiftedTableau(tableaux.make_shape(1), ((2,), (1,)))


def test_rc_words():
    tableau = ShiftedTableau(tableaux.make_shape(3),
                             ((1, 2, 4), (3, 5, 6), (7, 8), (9,)))
    rows, columns = tableaux.rc_words(tableau)
    assert rows == (1, 1, 2, 1, 2, 2, 3, 3, 4)
    assert columns == (1, 2, 2, 3, 3, 4, 3, 4, 4)


def test_worked_example():
    tableau = ShiftedTableau(tableaux.make_shape(3),
                             ((1, 2, 4), (3, 5, 6), (7, 8), (9,)))
    assert tableaux.tableau_to_geodesic(tableau, 6) == WORKED_EXAMPLE
    assert tableaux.geodesic_to_tableau(WORKED_EXAMPLE) == tableau
    with pytest.raises(errors.DomainError):
        tableaux.tableau_to_geodesic(tableau, 7)


def test_geodesic_to_tableau_errors():
    with pytest.raises(errors.DomainError):
        tableaux.geodesic_to_tableau(WORKED_EXAMPLE[:7])
    with pytest.raises(errors.DomainError):
        tableaux.geodesic_to_tableau(WORKED_EXAMPLE[::-1])


def test_polygon_size():
    assert tableaux.polygon_size(5) == 5
    assert tableaux.polygon_size(9) == 6
    assert tableaux.polygon_size(27) == 9
    with pytest.raises(errors.DomainError):
        tableaux.polygon_size(7)


@pytest.mark.parametrize("n", [6, 7])
def test_plus_geodesics_are_the_tableaux(n, flip_graphs, star_codes):
    graph = flip_graphs(n)
    start, end = star_codes(n)
    plus = sorted(list(p.diagonals) for p in flipgraph.enumerate_geodesics(
        graph, start, end, Direction.PLUS))
    minus = sorted(list(p.diagonals) for p in flipgraph.enumerate_geodesics(
        graph, start, end, Direction.MINUS))
    syt = tableaux.enumerate_syt(tableaux.make_shape(n - 3))
    assert plus == sorted(tableaux.tableau_to_geodesic(t, n) for t in syt)
    natural = tableaux.diagonal_poset(n)
    reverse = tableaux.diagonal_poset(n, reverse=True)
    assert all(tableaux.is_linear_extension(natural, seq) for seq in plus)
    assert all(tableaux.is_linear_extension(reverse, seq) for seq in minus)
    assert minus == sorted(tableaux.reflect(seq, n) for seq in plus)


@pytest.mark.parametrize("n", range(5, 9))
def test_diagonal_poset_count(n):
    assert tableaux.diagonal_poset(n).count_linear_extensions() == \
        tableaux.count_syt(tableaux.make_shape(n - 3))


def test_is_linear_extension():
    poset = tableaux.diagonal_poset(6)
    assert tableaux.is_linear_extension(poset, WORKED_EXAMPLE)
    assert not tableaux.is_linear_extension(poset, WORKED_EXAMPLE[::-1])
    assert not tableaux.is_linear_extension(poset, WORKED_EXAMPLE[:-1])


def test_lambda_poset():
    poset = tableaux.lambda_poset(3)
    assert len(poset.elements) == 12
    assert poset.bottom == ()
    assert poset.top == (3, 3, 2, 1)
    assert (3, 3) in poset.elements
    assert (2, 2) not in poset.elements
    assert tableaux.count_maximal_chains(poset) == 4
    assert tableaux.lambda_poset(1).elements == ((), (1,), (1, 1))
    assert tableaux.count_maximal_chains(tableaux.lambda_poset(1)) == 1
    with pytest.raises(errors.InvalidSizeError):
        tableaux.lambda_poset(0)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_lambda_covers_add_one_box(n):
    poset = tableaux.lambda_poset(n)
    assert all(sum(large) - sum(small) == 1
               for small, large in poset.covers.edges)


def test_lambda_report_flags_the_shape(caplog):
    report = tableaux.lambda_report(3)
    assert report == {"n": 3, "maximal_chains": 4,
                      "syt_first_part_n_minus_1": 1, "syt_first_part_n": 4}
    assert "Lambda(3)" in caplog.text


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_lambda_extension_count(n):
    assert tableaux.lambda_extension_count(n) == tableaux.count_syt(
        tableaux.make_shape(n - 2))


@pytest.mark.parametrize("n, d", [(6, 8), (7, 140), (8, 12768),
                                  (9, 7104240)])
def test_d_formula(n, d):
    assert tableaux.d_formula(n) == d


@pytest.mark.parametrize("n", range(6, 13))
def test_d_formula_counts_tableaux(n):
    assert tableaux.d_formula(n) == 2 * tableaux.count_syt(
        tableaux.make_shape(n - 3))


def test_d_formula_needs_a_hexagon():
    with pytest.raises(errors.InvalidSizeError):
        tableaux.d_formula(5)


@pytest.mark.parametrize("n", range(6, 31))
def test_d_formula_is_an_exact_even_integer(n):
    d = tableaux.d_formula(n)
    assert isinstance(d, int)
    assert d > 0
    assert d % 2 == 0
