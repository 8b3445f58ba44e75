# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur
"""
# Standard library
import json
# Third party
import pytest
# Local imports
from coloredflips import export
from coloredflips.export import Labels, What


def test_ctft_lines():
    lines = list(export.enumeration_lines(6, What.CTFT))
    assert len(lines) == 25
    assert json.loads(lines[0]) == {"n": 6, "code": "0;00",
                                    "chords": [[1, 5], [1, 4], [1, 3]]}
    assert json.loads(lines[-1]) == {"count": 24, "n": 6, "what": "ctft"}
    assert json.loads(lines[7])["code"] == "1;11"
    assert json.loads(lines[7])["chords"] == [[0, 2], [0, 3], [0, 4]]


@pytest.mark.parametrize("n, what, count", [
    (5, What.ARCPERM, 40),
    (5, What.CLASSES, 10),
    (6, What.TABLEAUX, 4),
    (7, What.CTFT, 56),
])
def test_enumeration_counts(n, what, count):
    lines = list(export.enumeration_lines(n, what))
    assert len(lines) == count + 1
    assert json.loads(lines[-1])["count"] == count
    assert len(set(lines[:-1])) == count


def test_enumeration_is_sorted():
    records = [json.loads(line)
               for line in export.enumeration_lines(5, What.ARCPERM)][:-1]
    letters = [record["letters"] for record in records]
    assert letters == sorted(letters)
    assert letters[0] == [0, 1, 2, 3, 4]


def test_dot_of_the_pentagon():
    text = export.to_dot(5)
    lines = text.splitlines()
    assert lines[0] == 'graph "flips_5" {'
    assert lines[-1] == "}"
    assert sum(" -- " in line for line in lines) == 10
    assert sum(line.endswith('";') for line in lines) == 10
    assert '\t"1;1" -- "2;0" [label="0,2"];' in lines


def test_oriented_dot():
    text = export.to_dot(6, oriented=True, labels=Labels.GENERATOR)
    assert text.startswith('digraph "flips_6" {')
    assert '\t"1;11" -> "2;01" [label="0"];' in text.splitlines()


@pytest.mark.parametrize("n", [5, 6, 7])
def test_hyperplane_view_matches_the_diagonal_view(n):
    assert export.graph_edges(n, Labels.HYPERPLANE) == \
        export.graph_edges(n, Labels.DIAGONAL)


def test_json_graph():
    document = json.loads(export.to_json_graph(6, oriented=True))
    assert document["n"] == 6
    assert document["oriented"] is True
    assert document["labels"] == "diagonal"
    assert len(document["vertices"]) == 24
    assert {"source": "1;11", "target": "2;01", "label": "0,2"} in \
        document["edges"]


def test_render_is_deterministic():
    first = export.render_graph(6, export.GraphFormat.JSON)
    assert first == export.render_graph(6, "json")
    assert export.render_graph(5, "dot") == export.to_dot(5)
