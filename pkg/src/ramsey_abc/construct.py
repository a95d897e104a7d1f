"""Building 40-vertex candidates by extending a fixed base graph.

A candidate adds a handful of new vertices to the base: the added vertices
carry a triangle-free graph among themselves (the "inner" graph) and each
added vertex attaches to a set of base vertices. Attachment sets are kept
pairwise disjoint: with an 8-regular base and a degree ceiling of 9, a base
vertex receiving two new edges would exceed the admissible degree range.

Attachments are drawn by chunking a random permutation of the base vertices:
added vertex k takes the permutation positions (S_{k-1}, S_k], where S_k is
the running total of requested attachment counts.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .graph import Graph, _bits, induced_subgraph

DEFAULT_DEGREE_RANGE = (4, 9)


@dataclass(frozen=True)
class InnerGraph:
    """Graph on the added vertices plus its per-vertex degrees."""

    graph: Graph
    degrees: tuple[int, ...]

    @classmethod
    def from_graph(cls, g: Graph) -> "InnerGraph":
        return cls(g, g.degrees())


@dataclass(frozen=True)
class ExtensionState:
    """Base graph + inner graph + one attachment set per added vertex."""

    base: Graph
    inner: InnerGraph
    attachments: tuple[frozenset[int], ...]

    def added_count(self) -> int:
        return self.inner.graph.n

    def added_degree(self, i: int) -> int:
        """Total degree of added vertex i in the assembled graph."""
        return len(self.attachments[i]) + self.inner.degrees[i]


def _is_independent(g: Graph, mask: int) -> bool:
    m = mask
    while m:
        b = m & -m
        v = b.bit_length() - 1
        m ^= b
        if g.adj[v] & mask:
            return False
    return True


def _canonical_bits(g: Graph) -> int:
    """Isomorphism-invariant key: minimum upper-triangle bit pattern over all
    vertex orderings that sort degrees descending."""
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    degs = [g.degree(v) for v in order]
    groups: list[list[int]] = []
    for i, v in enumerate(order):
        if i and degs[i] == degs[i - 1]:
            groups[-1].append(v)
        else:
            groups.append([v])
    best = None
    for parts in itertools.product(*(itertools.permutations(grp) for grp in groups)):
        arr = [v for part in parts for v in part]
        bits = 0
        k = 0
        for j in range(1, g.n):
            aj = g.adj[arr[j]]
            for i in range(j):
                bits = bits << 1 | (aj >> arr[i] & 1)
                k += 1
        if best is None or bits < best:
            best = bits
    return best


def _from_canonical_bits(n: int, bits: int) -> Graph:
    total = n * (n - 1) // 2
    adj = [0] * n
    k = total - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))


def enumerate_triangle_free(k: int) -> list[InnerGraph]:
    """One canonical representative per isomorphism class of triangle-free
    graphs on k vertices, in a deterministic order (14 classes for k = 5).

    Built level by level: every triangle-free graph on j vertices arises from
    one on j-1 vertices by adding a vertex whose neighbourhood is an
    independent set, so extending class representatives and deduplicating by
    canonical form enumerates each class exactly once.
    """
    if not 1 <= k <= 7:
        raise ValueError(f"triangle-free enumeration supports 1..7 vertices, got {k}")
    reps: dict[int, Graph] = {_canonical_bits(Graph.empty(1)): Graph.empty(1)}
    for size in range(2, k + 1):
        nxt: dict[int, Graph] = {}
        for g in reps.values():
            for nb_mask in range(1 << g.n):
                if not _is_independent(g, nb_mask):
                    continue
                adj = list(g.adj) + [nb_mask]
                for v in _bits(nb_mask):
                    adj[v] |= 1 << g.n
                cand = Graph(size, tuple(adj))
                key = _canonical_bits(cand)
                if key not in nxt:
                    nxt[key] = cand
        reps = nxt
    ordered = sorted(
        (g.edge_count(), key, _from_canonical_bits(k, key)) for key, g in reps.items()
    )
    return [InnerGraph.from_graph(g) for _, _, g in ordered]


def random_extension(
    base: Graph,
    inner: InnerGraph,
    degree_range: tuple[int, int] = DEFAULT_DEGREE_RANGE,
    rng: random.Random | None = None,
    max_resamples: int = 10_000,
) -> ExtensionState:
    """Draw a random extension state with the given total-degree range.

    Each added vertex's total degree is sampled uniformly from the range; the
    whole vector is rejected and resampled whenever some vertex would need a
    negative attachment count or the attachment total exceeds the number of
    base vertices. Attachment sets come from chunking one random permutation
    of the base vertices, which makes them pairwise disjoint by construction.
    """
    rng = rng if rng is not None else random.Random()
    lo, hi = degree_range
    t = inner.degrees
    a = inner.graph.n
    m = base.n
    if any(hi < ti for ti in t):
        raise ValueError(
            f"degree range [{lo}, {hi}] infeasible: inner degrees {t} exceed the ceiling"
        )
    if sum(max(lo, ti) - ti for ti in t) > m:
        raise ValueError(
            f"degree range [{lo}, {hi}] infeasible: minimum attachment total exceeds {m}"
        )
    for _ in range(max_resamples):
        degs = [rng.randint(lo, hi) for _ in range(a)]
        if all(d >= ti for d, ti in zip(degs, t)) and sum(degs) - sum(t) <= m:
            break
    else:
        raise ValueError("could not sample a feasible degree vector")
    perm = list(range(m))
    rng.shuffle(perm)
    attachments = []
    pos = 0
    for d, ti in zip(degs, t):
        take = d - ti
        attachments.append(frozenset(perm[pos : pos + take]))
        pos += take
    return ExtensionState(base, inner, tuple(attachments))


def extension_to_graph(ext: ExtensionState) -> Graph:
    """Assemble the full graph: base edges, inner edges, attachment edges.

    Added vertices occupy indices m..m+a-1, mirroring the 1-indexed labels
    36..40 used by the shipped 40-vertex dataset.
    """
    m = ext.base.n
    a = ext.inner.graph.n
    n = m + a
    adj = list(ext.base.adj) + [0] * a
    for i in range(a):
        u = m + i
        adj[u] = ext.inner.graph.adj[i] << m
        for v in ext.attachments[i]:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def decompose_extension(g: Graph, base_size: int) -> ExtensionState:
    """Split a graph into (base, inner, attachments) with vertices base_size..
    n-1 as the added set. Inverse of extension_to_graph; does not require the
    generated-state invariants (disjointness, degree bounds) to hold."""
    if not 1 <= base_size < g.n:
        raise ValueError(f"base size must be in 1..{g.n - 1}")
    base = induced_subgraph(g, range(base_size))
    inner = InnerGraph.from_graph(induced_subgraph(g, range(base_size, g.n)))
    attachments = tuple(
        frozenset(v for v in _bits(g.adj[u]) if v < base_size)
        for u in range(base_size, g.n)
    )
    return ExtensionState(base, inner, attachments)


def check_extension_invariants(
    ext: ExtensionState, degree_range: tuple[int, int] = DEFAULT_DEGREE_RANGE
) -> None:
    """Raise if attachment sets overlap or an added vertex leaves the degree range."""
    lo, hi = degree_range
    seen: set[int] = set()
    for i, att in enumerate(ext.attachments):
        if att & seen:
            raise ValueError(f"attachment sets overlap at base vertices {sorted(att & seen)}")
        seen |= att
        if not all(0 <= v < ext.base.n for v in att):
            raise ValueError(f"attachment of added vertex {i} outside the base")
        d = ext.added_degree(i)
        if not lo <= d <= hi:
            raise ValueError(f"added vertex {i} has degree {d} outside [{lo}, {hi}]")


def mutate_extension(
    ext: ExtensionState,
    rng: random.Random,
    degree_range: tuple[int, int] = DEFAULT_DEGREE_RANGE,
) -> ExtensionState | None:
    """Toggle exactly one attachment edge, preserving the state invariants.

    A removal is legal while the vertex stays at or above the degree floor; an
    addition may only claim a base vertex not attached to ANY added vertex and
    must respect the ceiling. Returns None when no legal move exists anywhere.
    """
    lo, hi = degree_range
    a = ext.inner.graph.n
    attached = set()
    for att in ext.attachments:
        attached |= att
    unattached = sorted(set(range(ext.base.n)) - attached)

    moves_by_vertex: list[list[tuple[str, int]]] = []
    for i in range(a):
        moves: list[tuple[str, int]] = []
        d = ext.added_degree(i)
        if d > lo:
            moves.extend(("remove", v) for v in sorted(ext.attachments[i]))
        if d < hi:
            moves.extend(("add", v) for v in unattached)
        moves_by_vertex.append(moves)
    legal = [i for i in range(a) if moves_by_vertex[i]]
    if not legal:
        return None
    i = legal[rng.randrange(len(legal))]
    action, v = moves_by_vertex[i][rng.randrange(len(moves_by_vertex[i]))]
    att = set(ext.attachments[i])
    if action == "remove":
        att.discard(v)
    else:
        att.add(v)
    new_attachments = list(ext.attachments)
    new_attachments[i] = frozenset(att)
    return ExtensionState(ext.base, ext.inner, tuple(new_attachments))


def serialize_extension(ext: ExtensionState) -> dict:
    """JSON-friendly form: base graph6, inner index in the canonical catalog
    (or its graph6 when not catalogued), 1-indexed attachment lists."""
    from .graph import encode_graph6

    inner_key = _canonical_bits(ext.inner.graph)
    index = None
    if ext.inner.graph.n <= 7:
        catalog = enumerate_triangle_free(ext.inner.graph.n)
        for idx, item in enumerate(catalog):
            if _canonical_bits(item.graph) == inner_key:
                index = idx
                break
    return {
        "base_graph6": encode_graph6(ext.base),
        "inner_index": index,
        "inner_graph6": encode_graph6(ext.inner.graph),
        "attachments": [sorted(v + 1 for v in att) for att in ext.attachments],
    }


def deserialize_extension(payload: dict) -> ExtensionState:
    from .graph import decode_graph6

    base = decode_graph6(payload["base_graph6"])
    inner = InnerGraph.from_graph(decode_graph6(payload["inner_graph6"]))
    attachments = tuple(
        frozenset(v - 1 for v in att) for att in payload["attachments"]
    )
    return ExtensionState(base, inner, attachments)
