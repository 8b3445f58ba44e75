# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur

Exceptions raised by the coloredflips package. Everything derives from
ValueError so callers that only catch ValueError keep working.
"""


class ColoredFlipsError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidSizeError(ColoredFlipsError):
    """A polygon size or shape parameter is outside its supported range."""


class InvalidLabelError(ColoredFlipsError):
    """A chord label or generator index is outside 0..n-4 (or 0..n-2)."""


class DomainError(ColoredFlipsError):
    """The input is outside the domain of the operation."""


class NoPathError(ColoredFlipsError):
    """No path connects the requested vertices."""


class UnsupportedEndpointError(ColoredFlipsError):
    """Geodesic enumeration was asked for a non-antipodal pair."""


class CapExceededError(ColoredFlipsError):
    """A command-line cap on n was exceeded."""
