from typing import Callable

from combinatorics.coloring import Coloring, Ground


def pullback_coloring(source: Ground, d: Coloring, point_map: Callable) -> Coloring:
    """e(eta) = d(F(eta)) on every point of source."""
    return Coloring(source, [d(point_map(eta)) for eta in source.points()], d.colors)
