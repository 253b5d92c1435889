"""Triangle centrality scores.

Score of v = (core/3 + non-core) / total, where core sums triangle counts
over v and its triangle neighbors and non-core sums them over the remaining
neighbors. Sums are kept in exact integers; the single floating-point step is
the final division, computed as (core + 3*non_core) / (3*total).
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InputError
from .graph import build_abbreviated_adjacency, degree_order
from .triangle import hash_neighbor_pair_tri_neighbors, triangle_neighbor


@dataclass
class CentralityVector:
    """Per-vertex scores plus provenance.

    ``tri_total`` is the normalizing global triangle count for triangle-based
    methods (None for the classical measures). ``triangle_free`` flags the
    all-zero result defined for graphs without triangles; ``converged`` is
    used by the iterative classical measures.
    """

    scores: np.ndarray
    method: str
    tri_total: int | None = None
    triangle_free: bool = False
    converged: bool = True


def _scores_from_sums(core, non_core, total):
    # one division at the end keeps everything before it exact
    return (core + 3 * non_core).astype(np.float64) / float(3 * total)


def _neighbor_sums(g, per_vertex):
    if g.m == 0:
        return np.zeros(g.n, dtype=np.int64)
    sums = np.add.reduceat(per_vertex[g.neighbors], g.offsets[:-1])
    sums[g.degrees == 0] = 0  # reduceat yields garbage on empty segments
    return sums.astype(np.int64)


def tc_from_triangles(g, stats, neighborhood=None, adj=None, marks=None, method="main"):
    """Second phase: fold triangle counts into scores.

    Accepts either explicit neighbor lists or (adj, marks), in which case the
    core sums accumulate symmetrically over marked prefix entries without
    materializing lists.
    """
    tri = stats.per_vertex
    if stats.total == 0:
        return CentralityVector(scores=np.zeros(g.n), method=method, tri_total=0,
                                triangle_free=True)
    core = np.zeros(g.n, dtype=np.int64)
    if neighborhood is not None:
        for v in range(g.n):
            core[v] = tri[v] + sum(int(tri[u]) for u in neighborhood[v])
    elif adj is not None and marks is not None:
        bits = marks.bits
        poff = adj.prefix_offsets
        off = adj.offsets
        for v in range(g.n):
            base = off[v]
            mbase = poff[v]
            for i in range(adj.prefix_len[v]):
                if bits[mbase + i]:
                    u = int(adj.nbr[base + i])
                    core[v] += tri[u]
                    core[u] += tri[v]
        core += tri
    else:
        raise InputError("need either a neighborhood or (adj, marks)")
    s = _neighbor_sums(g, tri)
    non_core = s - core + tri  # = s - (core - tri); core already includes tri[v]
    scores = _scores_from_sums(core, non_core, stats.total)
    return CentralityVector(scores=scores, method=method, tri_total=int(stats.total))


def triangle_centrality(g):
    """Production pipeline: degree order, abbreviated adjacency, merge-based
    triangle neighbors, then the score fold over marks."""
    order = degree_order(g)
    adj = build_abbreviated_adjacency(g, order)
    stats, marks = triangle_neighbor(adj, per_edge=False)
    return tc_from_triangles(g, stats, adj=adj, marks=marks, method="main")


def triangle_centrality_basic(g):
    """Reference pipeline over hash-based detection and explicit lists."""
    order = degree_order(g)
    adj = build_abbreviated_adjacency(g, order)
    stats, nbh = hash_neighbor_pair_tri_neighbors(g, adj)
    return tc_from_triangles(g, stats, neighborhood=nbh, method="basic")


CHAIN_ROLES = ("inner-joint", "outer-joint", "inner-member", "outer-member")
RING_ROLES = ("joint", "member")
FAMILIES = ("clique", "bridged-cliques", "disjoint-cliques", "clique-chain",
            "clique-ring", "lone-triangle")


def closed_form_tc(family, k=None, p=None, role=None):
    """Exact rational score for the closed-form graph families.

    Caveat: the clique-ring formulas presume every triangle lies inside one of
    the cliques. In the smallest ring (p = 3) the three joint vertices are
    mutually adjacent and close one extra triangle, so the generated p = 3
    family deviates slightly from these values; they agree exactly for p >= 4.
    """
    if family == "clique":
        _require(k is not None and k >= 3, "clique needs k >= 3")
        return Fraction(1)
    if family == "bridged-cliques":
        _require(k is not None and k >= 3, "bridged-cliques needs k >= 3")
        _require(p is not None and p >= 1, "bridged-cliques needs p >= 1")
        return Fraction(3, k)
    if family == "disjoint-cliques":
        _require(k is not None and k >= 3, "disjoint-cliques needs k >= 3")
        _require(p is not None and p >= 1, "disjoint-cliques needs p >= 1")
        return Fraction(1, p)
    if family == "clique-chain":
        _require(k is not None and k >= 3, "clique-chain needs k >= 3")
        _require(p is not None and p >= 3, "clique-chain needs p >= 3")
        if role == "inner-joint":
            _require(p >= 4, "inner-joint requires p >= 4")
            return Fraction(2 * k + 2, p * k)
        if role == "outer-joint":
            return Fraction(2 * k + 1, p * k)
        if role == "inner-member":
            return Fraction(k + 2, p * k)
        if role == "outer-member":
            return Fraction(k + 1, p * k)
        raise InputError(f"unknown chain role {role!r}")
    if family == "clique-ring":
        _require(k is not None and k >= 3, "clique-ring needs k >= 3")
        _require(p is not None and p >= 3, "clique-ring needs p >= 3")
        if role == "joint":
            return Fraction(2 * k + 2, p * k)
        if role == "member":
            return Fraction(k + 2, p * k)
        raise InputError(f"unknown ring role {role!r}")
    if family == "lone-triangle":
        return Fraction(1)
    raise InputError(f"unknown family {family!r}")


def _require(cond, msg):
    if not cond:
        raise InputError(msg)
