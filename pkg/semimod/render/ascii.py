"""
Plain-text drawing of a lattice path on the beta x alpha grid.

Rows run from y = alpha at the top down to y = 0. Grid points sit in even
columns, horizontal steps fill the odd column between two points and
vertical steps get a row of their own between two point rows.
"""

from typing import List, Set, Tuple

from semimod.algebra.pathmatrix import LatticePath, Step
from semimod.constants import (
    ASCII_DOWN,
    ASCII_EMPTY,
    ASCII_ENDPOINT,
    ASCII_RIGHT,
    ASCII_TURN,
    ASCII_VERTEX,
)


def _point_row(
    y: int,
    width: int,
    vertices: Set[Tuple[int, int]],
    turns: Set[Tuple[int, int]],
    endpoints: Set[Tuple[int, int]],
    rights: Set[Tuple[int, int]],
) -> str:
    cells = [" "] * (2 * width + 1)
    for x in range(width + 1):
        if (x, y) in endpoints:
            cells[2 * x] = ASCII_ENDPOINT
        elif (x, y) in turns:
            cells[2 * x] = ASCII_TURN
        elif (x, y) in vertices:
            cells[2 * x] = ASCII_VERTEX
        else:
            cells[2 * x] = ASCII_EMPTY
        if (x, y) in rights:
            cells[2 * x + 1] = ASCII_RIGHT
    return "".join(cells).rstrip()


def _connector_row(y: int, width: int, downs: Set[Tuple[int, int]]) -> str:
    cells = [" "] * (2 * width + 1)
    for x in range(width + 1):
        if (x, y) in downs:
            cells[2 * x] = ASCII_DOWN
    return "".join(cells).rstrip()


def render_ascii(path: LatticePath) -> str:
    """
    Draw `path` from (0, alpha) to (beta, 0).

    '*' marks the turning points (the gap coordinates of the lean set), 'o'
    the two endpoints, '+' every other vertex and '.' the free grid points.
    """
    alpha, beta = path.gamma.alpha, path.gamma.beta
    points = path.vertices()
    vertices = set(points)
    turns = set(path.turning_points())
    endpoints = {points[0], points[-1]}

    # steps are keyed by their starting point
    rights, downs = set(), set()
    for start, step in zip(points, path.steps):
        (rights if step is Step.RIGHT else downs).add(start)

    lines: List[str] = []
    for y in range(alpha, -1, -1):
        lines.append(_point_row(y, beta, vertices, turns, endpoints, rights))
        if y > 0:
            lines.append(_connector_row(y, beta, downs))
    return "\n".join(lines)
