# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur

Shared fixtures: flip graphs and the canonical endpoints for small n.
"""
# Third party
import pytest
# Local imports
from coloredflips import codec
from coloredflips import flipgraph
from coloredflips import polygon


@pytest.fixture(scope="session")
def flip_graphs():
    """Flip graphs built once per session, keyed by n."""
    cache = {}

    def _get(n: int) -> flipgraph.FlipGraph:
        if n not in cache:
            cache[n] = flipgraph.build(n)
        return cache[n]
    return _get


@pytest.fixture
def star_codes():
    """The code of the canonical star and of its reverse."""
    def _get(n: int):
        start = codec.encode(polygon.canonical_star(n))
        return start, codec.reverse_code(start)
    return _get
