from typing import Optional

from semimod.algebra.pathmatrix import LatticePath
from semimod.constants import DEFAULT_SVG_CELL_SIZE
from semimod.helpers.optional import import_dependency


def render_svg(
    path: LatticePath,
    file: str,
    cell_size: Optional[float] = None,
) -> str:
    """
    Draw `path` with the diagonal and the grid and save it as SVG.

    Args:
        path (LatticePath): the path to draw.
        file (str): destination of the SVG document.
        cell_size (float, optional): size of one grid cell in inches.

    Returns:
        str: the file the drawing was saved to.

    Raises:
        ImportError: when matplotlib is not installed.
    """
    figure_module = import_dependency(
        "matplotlib.figure", extra="SVG rendering needs matplotlib."
    )

    cell_size = cell_size or DEFAULT_SVG_CELL_SIZE
    alpha, beta = path.gamma.alpha, path.gamma.beta

    fig = figure_module.Figure(figsize=(beta * cell_size + 1, alpha * cell_size + 1))
    ax = fig.add_subplot()

    ax.set_xticks(range(beta + 1))
    ax.set_yticks(range(alpha + 1))
    ax.grid(True, color="lightgray", linewidth=0.5)
    ax.set_xlim(-0.5, beta + 0.5)
    ax.set_ylim(-0.5, alpha + 0.5)
    ax.set_aspect("equal")

    ax.plot([0, beta], [alpha, 0], linestyle="--", color="gray", linewidth=1)

    xs, ys = zip(*path.vertices())
    ax.plot(xs, ys, color="black", linewidth=2)

    turns = path.turning_points()
    if turns:
        tx, ty = zip(*turns)
        ax.scatter(tx, ty, color="tab:red", zorder=3, label="turning points")
        for x, y in turns:
            ax.annotate(f"({x},{y})", (x, y), textcoords="offset points", xytext=(4, 4))
        ax.legend(loc="upper right")

    ax.set_title(f"{path.gamma}: {path}")
    fig.savefig(file, format="svg", bbox_inches="tight")
    return file
