"""Core graph representation and degree ordering.

Graphs are simple, undirected, and immutable after construction, stored in
compressed adjacency form (offsets + neighbor array, each undirected edge in
both directions). External labels may be ints or strings; internally vertices
are dense 0-based ids assigned in sorted label order, so label order and
internal id order always agree.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InputError


class Graph:
    """Immutable compressed-adjacency graph. Rows are sorted by internal id."""

    __slots__ = ("n", "m", "offsets", "neighbors", "labels", "_index")

    def __init__(self, n, m, offsets, neighbors, labels):
        self.n = n
        self.m = m
        self.offsets = offsets
        self.neighbors = neighbors
        self.labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}

    @property
    def degrees(self):
        return np.diff(self.offsets)

    def degree(self, v):
        return int(self.offsets[v + 1] - self.offsets[v])

    def neighbors_of(self, v):
        return self.neighbors[self.offsets[v]:self.offsets[v + 1]]

    def id_of(self, label):
        return self._index[label]

    def label_of(self, v):
        return self.labels[v]

    def has_edge(self, u, v):
        row = self.neighbors_of(u)
        i = np.searchsorted(row, v)
        return bool(i < row.shape[0] and row[i] == v)

    def edges(self):
        """Yield each undirected edge once as an (u, v) internal-id pair, u < v."""
        for u in range(self.n):
            for v in self.neighbors_of(u):
                if u < v:
                    yield u, int(v)

    def to_edge_list(self):
        return [(self.labels[u], self.labels[v]) for u, v in self.edges()]

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(edge_list):
    """Build a simple undirected Graph from a possibly dirty edge list.

    Duplicate edges and both orientations collapse, self-loops are dropped,
    labels are densely re-mapped preserving their sort order. An empty edge
    list yields the empty graph.
    """
    try:
        labels = sorted({x for e in edge_list for x in e})
    except TypeError as exc:
        raise InputError("edge labels must be mutually comparable "
                         "(all ints or all strings)") from exc
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    pairs = set()
    for a, b in edge_list:
        if a == b:
            continue
        u, v = index[a], index[b]
        pairs.add((u, v) if u < v else (v, u))
    m = len(pairs)
    offsets = np.zeros(n + 1, dtype=np.int64)
    for u, v in pairs:
        offsets[u + 1] += 1
        offsets[v + 1] += 1
    np.cumsum(offsets, out=offsets)
    neighbors = np.empty(2 * m, dtype=np.int64)
    fill = offsets[:-1].copy()
    for u, v in sorted(pairs):
        neighbors[fill[u]] = v
        fill[u] += 1
        neighbors[fill[v]] = u
        fill[v] += 1
    for u in range(n):
        neighbors[offsets[u]:offsets[u + 1]].sort()
    return Graph(n, m, offsets, neighbors, tuple(labels))


def parse_edge_list(lines, source="<input>"):
    """Parse edge-list text: two whitespace-separated tokens per line.

    Lines starting with ``#`` and blank lines are ignored. Integer tokens are
    used as int labels when every token in the input is integral; otherwise
    all labels stay strings.
    """
    raw = []
    all_int = True
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise InputError(
                f"{source}:{lineno}: expected two tokens, got {len(tokens)}: {stripped!r}"
            )
        raw.append(tokens)
        if all_int:
            for t in tokens:
                try:
                    int(t)
                except ValueError:
                    all_int = False
                    break
    if all_int:
        return [(int(a), int(b)) for a, b in raw]
    return [(a, b) for a, b in raw]


def load_edge_list(path_or_file):
    """Read an edge-list file (path, '-' for stdin, or open file) into a Graph."""
    if hasattr(path_or_file, "read"):
        return build_graph(parse_edge_list(path_or_file, source=getattr(path_or_file, "name", "<stream>")))
    if path_or_file == "-":
        import sys

        return build_graph(parse_edge_list(sys.stdin, source="<stdin>"))
    with open(path_or_file) as fh:
        return build_graph(parse_edge_list(fh, source=str(path_or_file)))


def dump_edge_list(g, file):
    """Write one `label label` line per undirected edge."""
    for a, b in g.to_edge_list():
        file.write(f"{a} {b}\n")


@dataclass(frozen=True)
class VertexOrder:
    """Total order by ascending degree, ties by ascending label.

    ``rank[v]`` is v's position in the order; ``order[p]`` is the vertex at
    position p (the inverse permutation).
    """

    rank: np.ndarray
    order: np.ndarray

    def below(self, u, v):
        """True iff u precedes v in the order."""
        return self.rank[u] < self.rank[v]


def degree_order(g):
    """Degree ordering: position by (degree, label); deterministic."""
    deg = g.degrees
    # internal ids are already in label-sorted order, so a stable sort on
    # degree alone realizes the (degree, label) tiebreak
    order = np.argsort(deg, kind="stable").astype(np.int64)
    rank = np.empty(g.n, dtype=np.int64)
    rank[order] = np.arange(g.n, dtype=np.int64)
    return VertexOrder(rank=rank, order=order)


class OrderedAdjacency:
    """Per-vertex partition of N(v) with the higher-ordered prefix first.

    ``nbr`` mirrors the graph's neighbor array, reordered per vertex so that
    entries ``nbr[offsets[v] : offsets[v] + prefix_len[v]]`` are exactly the
    neighbors ranked above v, sorted ascending by internal id. The remaining
    entries of the row hold the lower-ordered neighbors (arbitrary order).
    ``prefix_offsets`` packs the prefixes into one index space of total size m
    (used by the mark arrays).
    """

    __slots__ = ("n", "m", "offsets", "nbr", "prefix_len", "prefix_offsets", "rank")

    def __init__(self, n, m, offsets, nbr, prefix_len, rank):
        self.n = n
        self.m = m
        self.offsets = offsets
        self.nbr = nbr
        self.prefix_len = prefix_len
        self.prefix_offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(prefix_len, out=self.prefix_offsets[1:])
        self.rank = rank

    def prefix(self, v):
        base = self.offsets[v]
        return self.nbr[base:base + self.prefix_len[v]]

    def suffix(self, v):
        return self.nbr[self.offsets[v] + self.prefix_len[v]:self.offsets[v + 1]]

    def row(self, v):
        return self.nbr[self.offsets[v]:self.offsets[v + 1]]


def build_abbreviated_adjacency(g, order):
    """Partition each neighbor row into higher-/lower-ordered halves.

    Stable partition per row with the prefix sorted ascending for merge
    intersections; linear scan plus the prefix sorting cost, vectorized.
    """
    offsets = g.offsets
    rank = order.rank
    if g.m == 0:
        return OrderedAdjacency(g.n, 0, offsets, g.neighbors.copy(),
                                np.zeros(g.n, dtype=np.int64), rank)
    nbr = g.neighbors
    src = np.repeat(np.arange(g.n, dtype=np.int64), g.degrees)
    in_prefix = rank[nbr] > rank[src]
    # within a row: prefix entries first (sorted by neighbor id), then the
    # rest in original row order
    tail_key = np.where(in_prefix, nbr, np.arange(nbr.shape[0], dtype=np.int64))
    perm = np.lexsort((tail_key, ~in_prefix, src))
    prefix_len = np.bincount(src[in_prefix], minlength=g.n).astype(np.int64)
    return OrderedAdjacency(g.n, g.m, offsets, nbr[perm], prefix_len, rank)


def average_degeneracy(g):
    """Mean over edges of the smaller endpoint degree, as an exact rational."""
    if g.m == 0:
        raise InputError("average degeneracy is undefined for an edgeless graph")
    deg = g.degrees
    total = 0
    for u, v in g.edges():
        total += int(min(deg[u], deg[v]))
    return Fraction(total, g.m)
