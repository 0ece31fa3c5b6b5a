"""Directed graph over word boundaries and optimal path selection."""

import logging
import typing as ty
import warnings
from dataclasses import dataclass, field

import networkx

from chunklate.errors import NoPathError
from chunklate.matcher import ChunkInstance, CorrespondenceMatrix

logger = logging.getLogger(__name__)

DEFAULT_PATH_CAP = 10_000


class PathCost(ty.NamedTuple):
    """Dummy and chunk counts of a path, compared lexicographically."""

    dummies: int
    chunks: int

    @classmethod
    def of_labels(
        cls, labels: ty.Iterable[str], is_dummy: ty.Callable[[str], bool]
    ) -> "PathCost":
        """Cost of a path given as labels, e.g. a path list transcribed by hand."""
        flags = [is_dummy(label) for label in labels]
        return cls(sum(flags), len(flags) - sum(flags))


@dataclass(frozen=True)
class Path:
    edges: tuple[ChunkInstance, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> ty.Iterator[ChunkInstance]:
        return iter(self.edges)

    @property
    def labels(self) -> list[str]:
        return [edge.label for edge in self.edges]

    @property
    def cost(self) -> PathCost:
        return path_cost(self)

    def is_complete(self, n: int) -> bool:
        """Contiguous edges going from node 0 to node ``n``."""
        if not self.edges:
            return n == 0
        return (
            self.edges[0].start == 0
            and self.edges[-1].end == n
            and all(a.end == b.start for a, b in zip(self.edges, self.edges[1:]))
        )


@dataclass(frozen=True)
class Lattice:
    """Acyclic graph with nodes ``0..n`` and one edge per matrix row."""

    n: int
    edges: tuple[ChunkInstance, ...]
    _outgoing: dict[int, tuple[ChunkInstance, ...]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        outgoing: dict[int, list[ChunkInstance]] = {}
        for edge in self.edges:
            if edge.end > self.n:
                raise RuntimeError(
                    f"Edge {edge.ident} ends at node {edge.end}, beyond node {self.n}."
                )
            outgoing.setdefault(edge.start, []).append(edge)
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(
            self, "_outgoing", {node: tuple(e) for node, e in outgoing.items()}
        )

    @property
    def nodes(self) -> range:
        return range(self.n + 1)

    def outgoing(self, node: int) -> tuple[ChunkInstance, ...]:
        """Edges leaving ``node``, in matrix row order."""
        return self._outgoing.get(node, ())

    def to_networkx(self) -> networkx.MultiDiGraph:
        graph = networkx.MultiDiGraph()
        graph.add_nodes_from(self.nodes)
        for edge in self.edges:
            graph.add_edge(edge.start, edge.end, key=edge.ident, chunk=edge)
        return graph

    def to_dot(self) -> str:
        lines = ["digraph lattice {", "  rankdir=LR;"]
        lines += [f"  {node};" for node in self.nodes]
        for edge in self.edges:
            style = ", style=dashed" if edge.is_dummy else ""
            lines.append(f'  {edge.start} -> {edge.end} [label="{edge.label}"{style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict[str, ty.Any]:
        return {"nodes": self.n + 1, "edges": [edge.to_json() for edge in self.edges]}


@dataclass(frozen=True)
class PathEnumeration:
    paths: list[Path]
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> ty.Iterator[Path]:
        return iter(self.paths)


def build_lattice(matrix: CorrespondenceMatrix) -> Lattice:
    return Lattice(matrix.n, matrix.rows)


def enumerate_paths(lattice: Lattice, cap: int = DEFAULT_PATH_CAP) -> PathEnumeration:
    """Depth-first enumeration of all complete paths.

    :param lattice: the graph to walk.
    :param cap: maximum number of paths returned; when more exist, the result is
        truncated and flagged.
    """
    if cap < 1:
        raise ValueError(f"The path cap must be positive, got {cap}.")
    paths: list[Path] = []
    truncated = False
    stack: list[ChunkInstance] = []

    def walk(node: int) -> bool:
        nonlocal truncated
        if node == lattice.n:
            if len(paths) == cap:
                truncated = True
                return False
            paths.append(Path(tuple(stack)))
            return True
        for edge in lattice.outgoing(node):
            stack.append(edge)
            keep_going = walk(edge.end)
            stack.pop()
            if not keep_going:
                return False
        return True

    walk(0)
    if truncated:
        message = f"Path enumeration truncated to {cap} paths."
        logger.warning(message)
        warnings.warn(message)
    return PathEnumeration(paths, truncated)


def path_cost(path: Path) -> PathCost:
    dummies = sum(edge.is_dummy for edge in path.edges)
    return PathCost(dummies, len(path.edges) - dummies)


def _edge_cost(edge: ChunkInstance) -> PathCost:
    return PathCost(1, 0) if edge.is_dummy else PathCost(0, 1)


def select_optimal(lattice: Lattice) -> list[Path]:
    """Every complete path minimising (dummies, chunks).

    Costs to the last node are computed backwards by dynamic programming while
    keeping all minimising edges, then the optimal paths are expanded forwards in
    edge order.

    :raise NoPathError: when no complete path exists.
    """
    best: dict[int, PathCost] = {lattice.n: PathCost(0, 0)}
    choices: dict[int, list[ChunkInstance]] = {lattice.n: []}
    for node in range(lattice.n - 1, -1, -1):
        for edge in lattice.outgoing(node):
            if edge.end not in best:
                continue
            tail, step = best[edge.end], _edge_cost(edge)
            cost = PathCost(tail.dummies + step.dummies, tail.chunks + step.chunks)
            if node not in best or cost < best[node]:
                best[node] = cost
                choices[node] = [edge]
            elif cost == best[node]:
                choices[node].append(edge)
    if 0 not in best:
        raise NoPathError(f"No complete path over the {lattice.n} words of the lattice.")

    paths: list[Path] = []

    def expand(node: int, prefix: tuple[ChunkInstance, ...]) -> None:
        if node == lattice.n:
            paths.append(Path(prefix))
            return
        for edge in choices[node]:
            expand(edge.end, prefix + (edge,))

    expand(0, ())
    logger.debug("Selected %d optimal path(s) of cost %s.", len(paths), best[0])
    return paths
