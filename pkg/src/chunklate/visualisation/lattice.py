import typing as ty

import matplotlib.pyplot as plt
import networkx
import numpy
from matplotlib.axes import Axes
from matplotlib.figure import Figure
from matplotlib.patches import FancyArrowPatch

from chunklate.lattice import Lattice, Path
from chunklate.matcher import CorrespondenceMatrix


def plot_correspondence_matrix(
    matrix: CorrespondenceMatrix,
    title: str = "",
    fig: ty.Optional[Figure] = None,
    ax: ty.Optional[Axes] = None,
):
    """Plot the chunk/word grid of a correspondence matrix.

    :param matrix: the matrix to plot, one row per candidate chunk.
    :param title: title of the ax.
    :param fig: the figure to use. If either fig or ax is None, fig **and** ax are
        obtained through a call to plt.subplots().
    :param ax: the ax to use. If either fig or ax is None, fig **and** ax are
        obtained through a call to plt.subplots().
    """
    if fig is None or ax is None:
        fig, ax = plt.subplots()
    assert ax is not None

    cells = matrix.cells.astype(float)
    # Dummy rows are drawn with a lighter shade.
    for r, row in enumerate(matrix.rows):
        if row.is_dummy:
            cells[r] *= 0.4
    ax.imshow(
        cells if len(matrix.rows) else numpy.zeros((1, matrix.n)),
        cmap="Greys",
        vmin=0,
        vmax=1,
        aspect="auto",
    )
    ax.set_xticks(range(matrix.n))
    ax.set_xticklabels(matrix.words, rotation=45, ha="right")
    ax.set_yticks(range(len(matrix.rows)))
    ax.set_yticklabels([str(row.ident) for row in matrix.rows])
    ax.set_title(title)
    return fig, ax


def plot_lattice(
    lattice: Lattice,
    highlight: ty.Optional[Path] = None,
    title: str = "",
    fig: ty.Optional[Figure] = None,
    ax: ty.Optional[Axes] = None,
):
    """Plot the word-boundary graph with one arc per chunk.

    Dummy edges are dashed; the edges of ``highlight`` are drawn in red.

    :param lattice: the graph to plot.
    :param highlight: an optional path, usually the selected optimal path.
    :param title: title of the ax.
    :param fig: the figure to use. If either fig or ax is None, fig **and** ax are
        obtained through a call to plt.subplots().
    :param ax: the ax to use. If either fig or ax is None, fig **and** ax are
        obtained through a call to plt.subplots().
    """
    if fig is None or ax is None:
        fig, ax = plt.subplots()
    assert ax is not None

    graph = lattice.to_networkx()
    positions = {node: (node, 0.0) for node in graph.nodes}
    networkx.draw_networkx_nodes(graph, positions, ax=ax, node_size=250, node_color="w", edgecolors="k")
    networkx.draw_networkx_labels(graph, positions, ax=ax, font_size=8)

    selected = set() if highlight is None else {edge.ident for edge in highlight.edges}
    for k, (start, end, key, data) in enumerate(graph.edges(keys=True, data=True)):
        chunk = data["chunk"]
        # Alternate arcs above and below the axis so that parallel edges stay visible.
        rad = (-0.5 if k % 2 else 0.5) * min(1.0, 2.0 / (end - start + 1))
        arrow = FancyArrowPatch(
            positions[start],
            positions[end],
            connectionstyle=f"arc3,rad={rad}",
            arrowstyle="-|>",
            mutation_scale=10,
            linestyle="--" if chunk.is_dummy else "-",
            color="r" if key in selected else "k",
            alpha=0.8,
        )
        ax.add_patch(arrow)
        ax.annotate(
            chunk.label,
            xy=((start + end) / 2, -rad * (end - start) / 2),
            ha="center",
            va="center",
            fontsize=7,
        )
    ax.set_xlim(-0.5, lattice.n + 0.5)
    ax.set_ylim(-lattice.n / 3 - 0.5, lattice.n / 3 + 0.5)
    ax.set_axis_off()
    ax.set_title(title)
    return fig, ax
