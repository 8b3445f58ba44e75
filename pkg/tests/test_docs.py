# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur
"""
# Standard library
import importlib
import inspect
# Third party
import pytest
# Constants
MODULES = ["actions", "arcperm", "arrangement", "cli", "codec", "config",
           "errors", "export", "flipgraph", "polygon", "tableaux",
           "verification"]


def _public(module):
    return [(name, obj) for name, obj in vars(module).items()
            if not name.startswith("_")
            and inspect.isfunction(obj)
            and obj.__module__ == module.__name__]


@pytest.mark.parametrize("name", MODULES)
def test_public_functions_have_docstrings(name):
    module = importlib.import_module(f"coloredflips.{name}")
    assert module.__doc__.strip().startswith("author: UnicornOnAzur")
    missing = [attr for attr, obj in _public(module)
               if not inspect.getdoc(obj)]
    assert missing == []


@pytest.mark.parametrize("name, function", [
    ("cli", "cmd_verify"), ("cli", "build_parser"),
    ("flipgraph", "diameter"), ("flipgraph", "verify_isomorphism"),
    ("arrangement", "k_prime_arrangement"), ("export", "render_graph"),
    ("verification", "geodesics_suite"), ("tableaux", "diagonal_poset")])
def test_operations_document_parameters_and_returns(name, function):
    doc = inspect.getdoc(
        getattr(importlib.import_module(f"coloredflips.{name}"), function))
    assert "Returns:" in doc
