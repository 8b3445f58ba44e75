# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur

Colored triangle-free triangulations of convex polygons, their flip graph and
the objects in bijection with them: classes of arc permutations, chambers of
a graphic arrangement and standard tableaux of a truncated shifted staircase.
"""
__version__: str = "0.1.0"
