"""Exact clique / independent-set counting and the combined fitness objective.

The objective for an (p, q, n) search is

    f(G) = (# q-subsets inducing an independent set)
         + (# p-subsets inducing a complete graph)

so f(G) = 0 exactly when G is an n-vertex witness for R(p, q) > n.

Counting walks subsets in ascending vertex order, extending a partial clique
only through the bitmask intersection of common neighbours, which keeps the
enumeration exact while pruning almost all of the C(n, k) subsets. Independent
sets are counted as cliques of the complement.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .graph import Graph, _bits, complement, decode_graph6, encode_graph6, induced_subgraph


class CacheBudgetError(RuntimeError):
    """Independent-set cache exceeded its configured memory budget."""


@dataclass(frozen=True)
class FitnessReport:
    """Counts of forbidden substructures; total == 0 marks a witness graph.

    With capped=True the counts saturated at the configured ceiling and are
    lower bounds, not exact values.
    """

    clique_count: int
    indep_count: int
    capped: bool = False

    @property
    def total(self) -> int:
        return self.clique_count + self.indep_count

    @property
    def is_witness(self) -> bool:
        return self.total == 0 and not self.capped


def _check_order(g: Graph, k: int, what: str) -> None:
    if not 1 <= k <= g.n:
        raise ValueError(f"{what} must be in 1..{g.n}, got {k}")


def _count_complete(adj: tuple[int, ...], n: int, p: int, cap: int | None) -> int:
    """Number of p-subsets of 0..n-1 that are pairwise adjacent."""
    if p == 1:
        return n if cap is None else min(n, cap)
    count = 0

    def rec(cand: int, need: int) -> None:
        nonlocal count
        if need == 1:
            count += cand.bit_count()
            return
        while cand:
            b = cand & -cand
            v = b.bit_length() - 1
            cand ^= b
            nxt = cand & adj[v]
            if nxt.bit_count() >= need - 1:
                rec(nxt, need - 1)
                if cap is not None and count >= cap:
                    return

    rec((1 << n) - 1, p)
    return count if cap is None else min(count, cap)


def _find_complete(adj: tuple[int, ...], n: int, p: int) -> tuple[int, ...] | None:
    """Lexicographically first p-subset that is pairwise adjacent, or None."""
    out: list[int] = []

    def rec(cand: int, need: int) -> bool:
        while cand:
            b = cand & -cand
            v = b.bit_length() - 1
            cand ^= b
            out.append(v)
            if need == 1:
                return True
            nxt = cand & adj[v]
            if nxt.bit_count() >= need - 1 and rec(nxt, need - 1):
                return True
            out.pop()
        return False

    if rec((1 << n) - 1, p):
        return tuple(out)
    return None


def count_cliques(g: Graph, p: int, cap: int | None = None) -> int:
    """Exact number of p-vertex complete subgraphs (saturating at cap if given)."""
    _check_order(g, p, "clique order")
    return _count_complete(g.adj, g.n, p, cap)


def count_independent_sets(g: Graph, q: int, cap: int | None = None) -> int:
    """Exact number of q-vertex independent sets (saturating at cap if given)."""
    _check_order(g, q, "independent-set order")
    return _count_complete(complement(g).adj, g.n, q, cap)


def fitness(g: Graph, p: int, q: int, cap: int | None = None) -> FitnessReport:
    """Clique count plus independent-set count; zero total means witness."""
    cliques = count_cliques(g, p, cap)
    indep = count_independent_sets(g, q, cap)
    capped = cap is not None and (cliques >= cap or indep >= cap)
    return FitnessReport(cliques, indep, capped)


def find_clique(g: Graph, p: int) -> tuple[int, ...] | None:
    """Some p-clique if one exists (lexicographically first), else None."""
    _check_order(g, p, "clique order")
    return _find_complete(g.adj, g.n, p)


def find_independent_set(g: Graph, q: int) -> tuple[int, ...] | None:
    """Some q-independent set if one exists (lexicographically first), else None."""
    _check_order(g, q, "independent-set order")
    return _find_complete(complement(g).adj, g.n, q)


def max_independent_set(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact independence number with a witness set.

    Branch and bound on the complement (maximum clique) with a greedy
    colouring upper bound: a candidate set coloured with c colours cannot
    extend the current clique by more than c vertices.
    """
    adj = complement(g).adj
    best_size = 0
    best_mask = 0

    def expand(rsize: int, rmask: int, cand: int) -> None:
        nonlocal best_size, best_mask
        if not cand:
            if rsize > best_size:
                best_size, best_mask = rsize, rmask
            return
        order: list[int] = []
        bound: list[int] = []
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                b = avail & -avail
                v = b.bit_length() - 1
                avail &= ~(adj[v] | b)
                uncolored ^= b
                order.append(v)
                bound.append(color)
        rest = cand
        for i in range(len(order) - 1, -1, -1):
            if rsize + bound[i] <= best_size:
                return
            v = order[i]
            b = 1 << v
            expand(rsize + 1, rmask | b, rest & adj[v])
            rest ^= b

    expand(0, 0, (1 << g.n) - 1)
    return best_size, tuple(_bits(best_mask))


@dataclass(frozen=True, eq=False)
class IndepSetCache:
    """All independent sets of the base graph, grouped by size.

    masks_by_size[k] is a uint64 array with one bit-set per k-independent
    set; free_by_size[k] holds, per set, the mask of base vertices neither
    in the set nor adjacent to it. Combining a cached set S with vertices
    attached to the base reduces to one mask test: S stays independent of
    an added-vertex set T iff S & (union of T's attachment masks) == 0.
    """

    base: Graph
    sizes: tuple[int, ...]
    masks_by_size: dict[int, np.ndarray]
    free_by_size: dict[int, np.ndarray]

    def counts(self) -> dict[int, int]:
        return {k: len(self.masks_by_size[k]) for k in self.sizes}

    def compatible_count(self, k: int, avoid_mask: int) -> int:
        """Number of cached k-sets disjoint from avoid_mask."""
        arr = self.masks_by_size[k]
        if len(arr) == 0:
            return 0
        return int(np.count_nonzero((arr & np.uint64(avoid_mask)) == 0))

    def save(self, path) -> None:
        payload = {
            "version": 1,
            "base_graph6": encode_graph6(self.base),
            "sizes": list(self.sizes),
            "sets": {str(k): [int(m) for m in self.masks_by_size[k]] for k in self.sizes},
        }
        with open(path, "w") as fh:
            json.dump(payload, fh)

    @staticmethod
    def load(path, base: Graph | None = None) -> "IndepSetCache":
        with open(path) as fh:
            payload = json.load(fh)
        if payload.get("version") != 1:
            raise ValueError(f"unsupported cache version {payload.get('version')!r}")
        stored = decode_graph6(payload["base_graph6"])
        if base is not None and (base.n != stored.n or base.adj != stored.adj):
            raise ValueError("cache was built for a different base graph")
        sizes = tuple(sorted(payload["sizes"]))
        full = (1 << stored.n) - 1
        masks_by_size: dict[int, np.ndarray] = {}
        free_by_size: dict[int, np.ndarray] = {}
        for k in sizes:
            masks = [int(m) for m in payload["sets"][str(k)]]
            frees = []
            for m in masks:
                closed = m
                for v in _bits(m):
                    closed |= stored.adj[v]
                frees.append(full & ~closed)
            masks_by_size[k] = np.array(masks, dtype=np.uint64)
            free_by_size[k] = np.array(frees, dtype=np.uint64)
        return IndepSetCache(stored, sizes, masks_by_size, free_by_size)


def build_indep_cache(
    base: Graph, sizes, max_sets_per_size: int = 2_000_000
) -> IndepSetCache:
    """Enumerate every independent set of the requested sizes in one DFS pass."""
    wanted = tuple(sorted(set(sizes)))
    if not wanted:
        raise ValueError("no sizes requested")
    if wanted[0] < 1 or wanted[-1] > base.n:
        raise ValueError(f"sizes must lie within 1..{base.n}")
    comp = complement(base).adj
    kmax = wanted[-1]
    wanted_set = set(wanted)
    # smallest requested size still reachable from a partial set of each size
    next_wanted = [min((k for k in wanted if k > s), default=kmax + 1) for s in range(kmax + 1)]
    collected: dict[int, list[int]] = {k: [] for k in wanted}
    frees: dict[int, list[int]] = {k: [] for k in wanted}
    full = (1 << base.n) - 1

    def rec(cand: int, chosen: int, free: int, size: int) -> None:
        while cand:
            b = cand & -cand
            v = b.bit_length() - 1
            cand ^= b
            nchosen = chosen | b
            nfree = free & ~(base.adj[v] | b)
            nsize = size + 1
            if nsize in wanted_set:
                bucket = collected[nsize]
                if len(bucket) >= max_sets_per_size:
                    raise CacheBudgetError(
                        f"more than {max_sets_per_size} independent sets of size {nsize}"
                    )
                bucket.append(nchosen)
                frees[nsize].append(nfree)
            if nsize < kmax:
                nxt = cand & comp[v]
                if nsize + nxt.bit_count() >= next_wanted[nsize]:
                    rec(nxt, nchosen, nfree, nsize)

    rec(full, 0, full, 0)
    masks_by_size = {k: np.array(collected[k], dtype=np.uint64) for k in wanted}
    free_by_size = {k: np.array(frees[k], dtype=np.uint64) for k in wanted}
    return IndepSetCache(base, wanted, masks_by_size, free_by_size)


def extension_fitness(cache: IndepSetCache, ext, p: int, q: int) -> FitnessReport:
    """Fitness of the assembled extension graph, computed incrementally.

    q-independent sets split as (k-set in the base) x ((q-k)-set among the
    added vertices) with no attachment edge between the parts; the base-side
    counts come from the cache, so only the handful of added-vertex subsets
    are enumerated per call. p-cliques are the base's own count plus cliques
    touching at least one added vertex. Must agree exactly with fitness() on
    extension_to_graph(ext).
    """
    from .construct import extension_to_graph

    base = cache.base
    if ext.base.n != base.n or ext.base.adj != base.adj:
        raise ValueError("extension base does not match cache base")
    inner = ext.inner.graph
    a = inner.n
    m = base.n
    n = m + a
    if not 1 <= p <= n:
        raise ValueError(f"clique order must be in 1..{n}, got {p}")
    if not 1 <= q <= n:
        raise ValueError(f"independent-set order must be in 1..{n}, got {q}")

    att_masks = [sum(1 << v for v in att) for att in ext.attachments]

    needed = [k for k in range(max(1, q - a), min(q, m) + 1)]
    missing = [k for k in needed if k not in cache.masks_by_size]
    if missing:
        raise ValueError(f"cache does not cover independent-set sizes {missing}")

    indep = 0
    for t_size in range(max(0, q - m), min(a, q) + 1):
        k = q - t_size
        for combo in _independent_subsets(inner, t_size):
            if k == 0:
                indep += 1
                continue
            avoid = 0
            for i in combo:
                avoid |= att_masks[i]
            indep += cache.compatible_count(k, avoid)

    if p == 1:
        return FitnessReport(n, indep)
    cliques = count_cliques(base, p) if p <= m else 0
    assembled = extension_to_graph(ext)
    for i in range(a):
        allowed = att_masks[i]
        for j in range(i + 1, a):
            if inner.has_edge(i, j):
                allowed |= 1 << (m + j)
        size = allowed.bit_count()
        if size >= p - 1:
            sub = induced_subgraph(assembled, _bits(allowed))
            cliques += count_cliques(sub, p - 1)
    return FitnessReport(cliques, indep)


def _independent_subsets(g: Graph, size: int):
    """All vertex tuples of the given size with no internal edge."""
    from itertools import combinations

    if size == 0:
        yield ()
        return
    for combo in combinations(range(g.n), size):
        ok = True
        for i, u in enumerate(combo):
            for v in combo[i + 1 :]:
                if g.has_edge(u, v):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield combo
