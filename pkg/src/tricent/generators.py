"""Graph generators for closed-form families, showcase graphs, and the
bundled small networks.

Family generators return ``(Graph, roles)`` where ``roles`` maps a role name
to the tuple of vertex labels playing it; the closed-form score of each role
comes from :func:`tricent.centrality.closed_form_tc`. Showcase graphs label
their distinguished vertex ``"a"``.
"""

from importlib import resources
from itertools import combinations

from .centrality import CHAIN_ROLES
from .errors import InputError
from .graph import build_graph, parse_edge_list


def _clique_edges(members):
    return list(combinations(members, 2))


def clique(k):
    """Complete graph on labels 1..k."""
    if k < 2:
        raise InputError("clique needs k >= 2")
    members = list(range(1, k + 1))
    g = build_graph(_clique_edges(members))
    return g, {"member": tuple(members)}


def disjoint_cliques(p, k):
    """p disjoint copies of K_k; clique i holds labels i*k+1 .. (i+1)*k."""
    if p < 1 or k < 2:
        raise InputError("disjoint-cliques needs p >= 1, k >= 2")
    edges = []
    for i in range(p):
        edges += _clique_edges(range(i * k + 1, (i + 1) * k + 1))
    g = build_graph(edges)
    return g, {"member": tuple(range(1, p * k + 1))}


def bridged_cliques(p, k):
    """A bridge vertex (label 1) joined to one vertex of each of p copies of K_k."""
    if p < 1 or k < 2:
        raise InputError("bridged-cliques needs p >= 1, k >= 2")
    edges = []
    attach = []
    for i in range(p):
        members = list(range(2 + i * k, 2 + (i + 1) * k))
        edges += _clique_edges(members)
        edges.append((1, members[0]))
        attach.append(members[0])
    g = build_graph(edges)
    members = tuple(v for v in range(2, 2 + p * k) if v not in set(attach))
    return g, {"bridge": (1,), "attach": tuple(attach), "member": members}


def clique_chain(p, k):
    """Chain of p copies of K_k, consecutive copies sharing a joint vertex."""
    if p < 3 or k < 3:
        raise InputError("clique-chain needs p >= 3, k >= 3")
    edges = []
    roles = {r: [] for r in CHAIN_ROLES}
    for i in range(p):
        members = list(range(i * (k - 1) + 1, i * (k - 1) + k + 1))
        edges += _clique_edges(members)
    joints = [i * (k - 1) + 1 for i in range(1, p)]
    joint_set = set(joints)
    roles["outer-joint"] = [joints[0], joints[-1]]
    roles["inner-joint"] = joints[1:-1]
    for i in range(p):
        members = range(i * (k - 1) + 1, i * (k - 1) + k + 1)
        kind = "outer-member" if i in (0, p - 1) else "inner-member"
        roles[kind] += [v for v in members if v not in joint_set]
    g = build_graph(edges)
    return g, {r: tuple(sorted(vs)) for r, vs in roles.items()}


def clique_ring(p, k):
    """Ring of p copies of K_k, consecutive copies sharing a joint vertex.

    At p = 3 the joints are mutually adjacent and form one triangle of their
    own on top of the per-clique triangles.
    """
    if p < 3 or k < 3:
        raise InputError("clique-ring needs p >= 3, k >= 3")
    n = p * (k - 1)
    edges = []
    joints = []
    for i in range(p):
        start = i * (k - 1) + 1
        members = [start + t for t in range(k)]
        members[-1] = (members[-1] - 1) % n + 1  # wrap the last clique onto vertex 1
        edges += _clique_edges(members)
        joints.append(start)
    g = build_graph(edges)
    joint_set = set(joints)
    members = tuple(v for v in range(1, n + 1) if v not in joint_set)
    return g, {"joint": tuple(sorted(joints)), "member": members}


def lone_triangle(pendants=1):
    """One triangle (labels 1..3) with `pendants` leaf vertices per corner."""
    if pendants < 0:
        raise InputError("lone-triangle needs pendants >= 0")
    edges = [(1, 2), (1, 3), (2, 3)]
    leaves = []
    nxt = 4
    for corner in (1, 2, 3):
        for _ in range(pendants):
            edges.append((corner, nxt))
            leaves.append(nxt)
            nxt += 1
    g = build_graph(edges)
    return g, {"triangle": (1, 2, 3), "pendant": tuple(leaves)}


def triad_hub():
    """Hub `a` on six ring vertices whose consecutive pairs close triangles;
    each ring vertex carries four leaves. Uniform degree everywhere but the
    leaves."""
    ring = ["b", "c", "d", "e", "f", "g"]
    edges = [("a", r) for r in ring]
    edges += [("b", "c"), ("d", "e"), ("f", "g")]
    leaf = 1
    for r in ring:
        for _ in range(4):
            edges.append((r, f"l{leaf:02d}"))
            leaf += 1
    return build_graph(edges)


def clique_bridge_hub(p=4, k=6):
    """Showcase variant of bridged cliques with the bridge labelled `a`."""
    if p < 1 or k < 2:
        raise InputError("needs p >= 1, k >= 2")
    edges = []
    for i in range(p):
        members = [f"{chr(ord('b') + i)}{j}" for j in range(1, k + 1)]
        edges += _clique_edges(members)
        edges.append(("a", members[0]))
    return build_graph(edges)


def star_triangle_hub():
    """`a` tied to a big star hub, two triangle gadgets, and one own triangle."""
    edges = [("a", "h")]
    edges += [("h", f"s{j}") for j in range(1, 9)]
    edges += [("a", "p1"), ("a", "p2"), ("p1", "p2")]
    edges += [("a", "t1"), ("t1", "t2"), ("t1", "t3"), ("t2", "t3")]
    edges += [("a", "u1"), ("u1", "u2"), ("u1", "u3"), ("u2", "u3")]
    return build_graph(edges)


def clique_star_hub():
    """`a` inside a 5-clique, tied to a triangle gadget and a 9-leaf star hub."""
    edges = _clique_edges(["a", "k1", "k2", "k3", "k4"])
    edges += [("a", "c"), ("c", "c1"), ("c", "c2"), ("c1", "c2")]
    edges += [("a", "h")]
    edges += [("h", f"s{j}") for j in range(1, 10)]
    return build_graph(edges)


def book_with_satellite():
    """Two triangles sharing an edge at `v` plus a separate triangle one hop away."""
    edges = [("v", "a"), ("v", "b"), ("v", "c"), ("a", "c"), ("b", "c"),
             ("v", "d"), ("d", "e"), ("d", "f"), ("e", "f")]
    return build_graph(edges)


FIXTURES = ("borgatti", "karate", "dolphins", "hijackers")


def load_fixture(name):
    """Load one of the bundled small networks by name."""
    if name not in FIXTURES:
        raise InputError(f"unknown fixture {name!r}; have {FIXTURES}")
    text = resources.files("tricent.fixtures").joinpath(f"{name}.txt").read_text()
    return build_graph(parse_edge_list(text.splitlines(), source=f"fixture:{name}"))


GEN_FAMILIES = {
    "clique": lambda k=5, **_: clique(k)[0],
    "disjoint-cliques": lambda p=2, k=4, **_: disjoint_cliques(p, k)[0],
    "bridged-cliques": lambda p=4, k=6, **_: bridged_cliques(p, k)[0],
    "clique-chain": lambda p=3, k=4, **_: clique_chain(p, k)[0],
    "clique-ring": lambda p=3, k=4, **_: clique_ring(p, k)[0],
    "lone-triangle": lambda pendants=1, **_: lone_triangle(pendants)[0],
    "triad-hub": lambda **_: triad_hub(),
    "clique-bridge-hub": lambda p=4, k=6, **_: clique_bridge_hub(p, k),
    "star-triangle-hub": lambda **_: star_triangle_hub(),
    "clique-star-hub": lambda **_: clique_star_hub(),
    "book-satellite": lambda **_: book_with_satellite(),
    "borgatti": lambda **_: load_fixture("borgatti"),
    "karate": lambda **_: load_fixture("karate"),
    "dolphins": lambda **_: load_fixture("dolphins"),
    "hijackers": lambda **_: load_fixture("hijackers"),
}


def generate_fixture(family, **params):
    """Dispatch a named family with keyword parameters (CLI entry point)."""
    if family not in GEN_FAMILIES:
        raise InputError(f"unknown family {family!r}; have {sorted(GEN_FAMILIES)}")
    return GEN_FAMILIES[family](**params)
