"""Directed graph value type, degree sequences, structural stats, edge-list files."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components, shortest_path


class EdgeListError(ValueError):
    """Raised when an edge-list file cannot be parsed or validated."""


class Digraph:
    """Immutable simple directed graph on dense integer node ids.

    Nodes are ``0 .. node_count - 1``.  Edges are ordered ``(src, dst)``
    pairs with no self-loops and no parallel edges.  ``node_count`` is
    independent of the edge set, so isolated nodes are representable.

    Parameters
    ----------
    node_count : int
        Number of nodes (>= 0).
    edges : iterable of (int, int), optional
        Edge pairs.  Out-of-range endpoints, self-loops and duplicates
        raise ``ValueError``.
    """

    __slots__ = ("_node_count", "_arr", "_canon", "_edge_set")

    def __init__(self, node_count: int, edges=()):
        node_count = int(node_count)
        if node_count < 0:
            raise ValueError("node_count must be >= 0")
        arr = np.asarray(list(edges), dtype=np.int64)
        if arr.size == 0:
            arr = np.empty((0, 2), dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError("edges must be (src, dst) pairs")
        if arr.size and (arr.min() < 0 or arr.max() >= node_count):
            raise ValueError("edge endpoint out of range")
        if np.any(arr[:, 0] == arr[:, 1]):
            raise ValueError("self-loops are not allowed")
        canon = arr[np.lexsort((arr[:, 1], arr[:, 0]))]
        if len(canon) > 1 and np.any(np.all(canon[1:] == canon[:-1], axis=1)):
            raise ValueError("parallel edges are not allowed")
        self._node_count = node_count
        self._arr = arr
        self._canon = canon
        self._edge_set = None

    @classmethod
    def _from_arrays(cls, node_count: int, src: np.ndarray, dst: np.ndarray) -> "Digraph":
        # Trusted fast path for generators: endpoints already validated.
        g = object.__new__(cls)
        g._node_count = int(node_count)
        g._arr = np.column_stack((src, dst)).astype(np.int64, copy=False)
        g._canon = None
        g._edge_set = None
        return g

    @property
    def node_count(self) -> int:
        return self._node_count

    @property
    def edge_count(self) -> int:
        return len(self._arr)

    @property
    def edges(self) -> frozenset:
        """Edge set as a frozenset of ``(src, dst)`` int pairs."""
        if self._edge_set is None:
            self._edge_set = frozenset(
                (int(s), int(d)) for s, d in self._arr
            )
        return self._edge_set

    def _canonical(self) -> np.ndarray:
        if self._canon is None:
            a = self._arr
            self._canon = a[np.lexsort((a[:, 1], a[:, 0]))]
        return self._canon

    def edge_array(self) -> np.ndarray:
        """Edges as an ``(E, 2)`` int64 array sorted by ``(src, dst)``."""
        return self._canonical().copy()

    def out_degrees(self) -> np.ndarray:
        """Out-degree of every node, indexed by node id."""
        return np.bincount(self._arr[:, 0], minlength=self._node_count).astype(np.int64)

    def in_degrees(self) -> np.ndarray:
        """In-degree of every node, indexed by node id."""
        return np.bincount(self._arr[:, 1], minlength=self._node_count).astype(np.int64)

    def has_edge(self, src: int, dst: int) -> bool:
        return (src, dst) in self.edges

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._node_count == other._node_count and np.array_equal(
            self._canonical(), other._canonical()
        )

    def __hash__(self) -> int:
        return hash((self._node_count, self._canonical().tobytes()))

    def __repr__(self) -> str:
        return f"Digraph(node_count={self._node_count}, edge_count={self.edge_count})"


@dataclass(frozen=True, eq=False)
class DegreeSequence:
    """Degree values tagged with their direction.

    ``values[i]`` is the degree of the i-th listed node; for sequences built
    by :func:`degree_sequence` the index is the node id.  ``kind`` is either
    ``"in"`` or ``"out"`` and metric code refuses to mix the two.
    """

    values: np.ndarray
    kind: str

    def __post_init__(self):
        if self.kind not in ("in", "out"):
            raise ValueError(f"kind must be 'in' or 'out', got {self.kind!r}")

    def __len__(self) -> int:
        return len(self.values)


def degree_sequence(g: Digraph, kind: str) -> DegreeSequence:
    """Degree sequence of ``g`` indexed by node id.

    Parameters
    ----------
    g : Digraph
    kind : {"in", "out"}

    Returns
    -------
    DegreeSequence
        Length ``g.node_count``; values sum to ``g.edge_count``.
    """
    if kind == "in":
        return DegreeSequence(g.in_degrees(), "in")
    if kind == "out":
        return DegreeSequence(g.out_degrees(), "out")
    raise ValueError(f"kind must be 'in' or 'out', got {kind!r}")


@dataclass(frozen=True)
class GraphStats:
    """Structural summary of a digraph.

    ``edges_per_node`` is kept exact as a Fraction.  ``diameter`` is the
    longest shortest-path length over the largest weakly connected
    component with edge directions ignored; it is None when the graph has
    no component with at least two nodes (every node isolated), since no
    path structure exists to measure.
    """

    node_count: int
    edge_count: int
    edges_per_node: Fraction
    diameter: int | None
    weakly_connected: bool

    def to_dict(self) -> dict:
        return {
            "node_count": self.node_count,
            "edge_count": self.edge_count,
            "edges_per_node": float(self.edges_per_node),
            "diameter": self.diameter,
            "weakly_connected": self.weakly_connected,
        }


def graph_stats(g: Digraph) -> GraphStats:
    """Compute :class:`GraphStats` for ``g`` (requires ``node_count >= 1``)."""
    n = g.node_count
    if n < 1:
        raise ValueError("graph_stats requires at least one node")
    e = g.edge_count
    arr = g._arr
    adj = sp.coo_matrix(
        (np.ones(len(arr), dtype=np.int8), (arr[:, 0], arr[:, 1])), shape=(n, n)
    ).tocsr()
    n_comp, labels = connected_components(adj, directed=True, connection="weak")
    weakly = n_comp == 1
    sizes = np.bincount(labels)
    largest = int(sizes.argmax())
    if sizes[largest] < 2:
        # All components are single nodes.
        diameter = 0 if weakly else None
    else:
        members = np.flatnonzero(labels == largest)
        sub = adj[members][:, members]
        und = sub + sub.T
        dist = shortest_path(und, directed=False, unweighted=True)
        diameter = int(dist.max())
    return GraphStats(
        node_count=n,
        edge_count=e,
        edges_per_node=Fraction(e, n),
        diameter=diameter,
        weakly_connected=weakly,
    )


def write_edge_list(g: Digraph, path) -> None:
    """Write ``g`` to ``path`` in the plain-text edge-list format.

    The file is UTF-8, starts with a ``#nodes=N`` header so isolated nodes
    survive a round trip, and lists one ``src dst`` pair per line in sorted
    order, which makes the output byte-stable for a given graph.
    """
    canon = g._canonical()
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"#nodes={g.node_count}\n")
        for s, d in canon:
            fh.write(f"{s} {d}\n")


def read_edge_list(path) -> Digraph:
    """Parse an edge-list file into a :class:`Digraph`.

    Lines starting with ``#`` are comments; a ``#nodes=N`` comment declares
    the node count (required to preserve isolated nodes, otherwise the count
    is inferred as max endpoint + 1).  Data lines hold two whitespace
    separated integer ids.  Malformed lines, endpoints outside a declared
    node count, duplicate edges and self-loops raise :class:`EdgeListError`
    naming the offending line.
    """
    declared = None
    src = []
    dst = []
    seen = set()
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("nodes=") and declared is None:
                    try:
                        declared = int(body[len("nodes="):])
                    except ValueError:
                        raise EdgeListError(
                            f"{path}:{lineno}: malformed node-count header: {line!r}"
                        ) from None
                    if declared < 0:
                        raise EdgeListError(
                            f"{path}:{lineno}: negative node count {declared}"
                        )
                continue
            parts = line.split()
            if len(parts) != 2:
                raise EdgeListError(f"{path}:{lineno}: malformed line: {line!r}")
            try:
                s, d = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListError(
                    f"{path}:{lineno}: malformed line: {line!r}"
                ) from None
            if s < 0 or d < 0:
                raise EdgeListError(f"{path}:{lineno}: negative node id")
            if declared is not None and (s >= declared or d >= declared):
                raise EdgeListError(
                    f"{path}:{lineno}: endpoint >= declared node count {declared}"
                )
            if s == d:
                raise EdgeListError(f"{path}:{lineno}: self-loop {s} -> {d}")
            if (s, d) in seen:
                raise EdgeListError(f"{path}:{lineno}: duplicate edge {s} -> {d}")
            seen.add((s, d))
            src.append(s)
            dst.append(d)
    if declared is not None:
        n = declared
    elif src:
        n = int(max(max(src), max(dst))) + 1
    else:
        n = 0
    return Digraph._from_arrays(
        n, np.asarray(src, dtype=np.int64), np.asarray(dst, dtype=np.int64)
    )
