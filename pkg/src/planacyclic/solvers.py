"""Exact optimization: minimum feedback vertex set, maximum acyclic set,
maximum induced forest, and the forbidden-pair test.

The workhorse is iterative deepening on the deletion budget with branching on
a shortest cycle: every feedback vertex set must hit every cycle, so trying
each vertex of one cycle is an exhaustive case split, and the branching
factor equals the cycle length. Search is deterministic: sources and branch
children are scanned in ascending vertex id, so witnesses are reproducible.

Witnesses are re-validated before they are returned; the search result is
never trusted blindly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidInputError, InvalidParameterError, ResourceGuardError
from .graphs import Digraph, UndirectedGraph, mask_is_acyclic, mask_vertices

BRUTE_FORCE_VERTEX_LIMIT = 24


@dataclass(frozen=True)
class SolverWitness:
    """An optimal set together with its certified size.

    kind is one of ``fvs``, ``acyclic-set``, ``induced-forest``.
    """

    kind: str
    size: int
    vertices: frozenset[int]


def _check_fvs(digraph: Digraph, removed: int) -> None:
    full = (1 << digraph.n) - 1
    if not mask_is_acyclic(digraph.out_masks, full & ~removed):
        raise AssertionError("search returned an invalid feedback vertex set")


def _cycle_floor(digraph: Digraph) -> int:
    # Digon-free digraphs cannot have 2-cycles; a floor of 3 lets the
    # shortest-cycle scan stop as soon as it sees a triangle.
    out = digraph.out_masks
    for u, v in digraph.arcs:
        if out[v] >> u & 1:
            return 2
    return 3


# ---------------------------------------------------------------------------
# directed shortest-cycle extraction


def shortest_cycle(out_masks, in_masks, alive: int, floor: int = 2) -> list[int] | None:
    """A shortest directed cycle inside ``alive``, as a vertex list, or None.

    Per-source BFS in ascending source order; the first strictly shortest
    cycle wins, which keeps the result deterministic. ``floor`` is a known
    lower bound on cycle length (2 for digraphs, 3 for oriented graphs) used
    only to stop early once unbeatable.
    """
    best = None  # (length, source)
    cap = None
    scan = alive
    while scan:
        low = scan & -scan
        scan ^= low
        s = low.bit_length() - 1
        length = _cycle_len_through(out_masks, in_masks[s], s, alive, cap)
        if length is not None and (best is None or length < best[0]):
            best = (length, s)
            cap = length - 1
            if length <= floor:
                break
    if best is None:
        return None
    return _rebuild_cycle(out_masks, in_masks, alive, best[1], best[0])


def _cycle_len_through(out_masks, in_mask_of_s: int, s: int, alive: int,
                       cap: int | None) -> int | None:
    seen = 1 << s
    frontier = seen
    dist = 0
    while frontier:
        if dist and frontier & in_mask_of_s:
            return dist + 1
        dist += 1
        if cap is not None and dist + 1 > cap:
            return None
        nxt = 0
        scan = frontier
        while scan:
            low = scan & -scan
            scan ^= low
            nxt |= out_masks[low.bit_length() - 1]
        frontier = nxt & alive & ~seen
        seen |= frontier
    return None


def _rebuild_cycle(out_masks, in_masks, alive: int, s: int, length: int) -> list[int]:
    # Recompute the BFS waves from s, then walk parents back from the lowest
    # in-neighbor of s reached at distance length-1.
    waves = [1 << s]
    seen = 1 << s
    for _ in range(length - 1):
        nxt = 0
        scan = waves[-1]
        while scan:
            low = scan & -scan
            scan ^= low
            nxt |= out_masks[low.bit_length() - 1]
        waves.append(nxt & alive & ~seen)
        seen |= waves[-1]
    closing = waves[length - 1] & in_masks[s]
    u = (closing & -closing).bit_length() - 1
    path = [u]
    for d in range(length - 2, 0, -1):
        candidates = waves[d] & in_masks[path[-1]]
        path.append((candidates & -candidates).bit_length() - 1)
    path.append(s)
    path.reverse()  # s, ..., u; arcs s->...->u->s
    return path


# ---------------------------------------------------------------------------
# minimum directed feedback vertex set


def _fvs_search(out_masks, in_masks, alive: int, budget: int, floor: int) -> list[int] | None:
    """Deleted-vertex list of size <= budget leaving ``alive`` acyclic, or None."""
    cycle = shortest_cycle(out_masks, in_masks, alive, floor)
    if cycle is None:
        return []
    if budget == 0:
        return None
    for v in sorted(cycle):
        rest = _fvs_search(out_masks, in_masks, alive & ~(1 << v), budget - 1, floor)
        if rest is not None:
            return [v] + rest
    return None


def _min_fvs_vertices(digraph: Digraph, alive: int, floor: int | None = None) -> frozenset[int]:
    if floor is None:
        floor = _cycle_floor(digraph)
    out_masks, in_masks = digraph.out_masks, digraph.in_masks
    for budget in range(digraph.n + 1):
        deleted = _fvs_search(out_masks, in_masks, alive, budget, floor)
        if deleted is not None:
            return frozenset(deleted)
    raise AssertionError("unreachable: deleting every vertex is always a feedback set")


def min_fvs(digraph: Digraph) -> SolverWitness:
    """A provably minimum feedback vertex set (iterative deepening on the budget)."""
    full = (1 << digraph.n) - 1
    vertices = _min_fvs_vertices(digraph, full)
    removed = 0
    for v in vertices:
        removed |= 1 << v
    _check_fvs(digraph, removed)
    return SolverWitness(kind="fvs", size=len(vertices), vertices=vertices)


def max_acyclic_set(digraph: Digraph) -> SolverWitness:
    """A maximum acyclic set: the complement of a minimum feedback vertex set."""
    fvs = min_fvs(digraph)
    vertices = frozenset(range(digraph.n)) - fvs.vertices
    if not mask_is_acyclic(digraph.out_masks, sum(1 << v for v in vertices)):
        raise AssertionError("complement of the feedback set is not acyclic")
    return SolverWitness(kind="acyclic-set", size=digraph.n - fvs.size, vertices=vertices)


def has_acyclic_set_of_size(digraph: Digraph, k: int) -> bool:
    """Decision variant: does some acyclic set of size >= k exist?

    Runs the feedback-set search with budget ``n - k`` and stops at the first
    success; no full optimization.
    """
    if not 0 <= k <= digraph.n:
        raise InvalidParameterError(f"k must be in [0, {digraph.n}], got {k}")
    if k == 0:
        return True
    full = (1 << digraph.n) - 1
    return _fvs_search(digraph.out_masks, digraph.in_masks, full, digraph.n - k,
                       _cycle_floor(digraph)) is not None


def pair_in_some_min_fvs(digraph: Digraph, x: int, y: int) -> bool:
    """True iff some minimum feedback vertex set contains both x and y.

    Equivalent test: removing x and y first costs exactly two budget units,
    i.e. min_fvs(D - {x, y}) + 2 == min_fvs(D).
    """
    n = digraph.n
    if not (0 <= x < n and 0 <= y < n):
        raise InvalidInputError(f"vertices ({x}, {y}) out of range [0, {n})")
    if x == y:
        raise InvalidInputError("x and y must be distinct")
    full = (1 << n) - 1
    floor = _cycle_floor(digraph)
    base = len(_min_fvs_vertices(digraph, full, floor))
    rest = len(_min_fvs_vertices(digraph, full & ~(1 << x) & ~(1 << y), floor))
    return rest + 2 == base


def brute_force_min_fvs(digraph: Digraph) -> SolverWitness:
    """Oracle: exhaustive subset enumeration in increasing size. Guarded to n <= 24."""
    n = digraph.n
    if n > BRUTE_FORCE_VERTEX_LIMIT:
        raise ResourceGuardError(
            f"brute force limited to {BRUTE_FORCE_VERTEX_LIMIT} vertices, got {n}")
    out_masks = digraph.out_masks
    full = (1 << n) - 1
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            removed = 0
            for v in subset:
                removed |= 1 << v
            if mask_is_acyclic(out_masks, full & ~removed):
                return SolverWitness(kind="fvs", size=size, vertices=frozenset(subset))
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# maximum induced forest (undirected)


def mask_is_forest(adj_masks, mask: int) -> bool:
    """True iff the induced undirected subgraph has no cycle (peel leaves)."""
    while mask:
        peeled = False
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            if (adj_masks[v] & mask).bit_count() <= 1:
                mask ^= low
                peeled = True
        if not peeled:
            return False
    return True


def _undirected_cycle(adj_masks, alive: int) -> list[int] | None:
    """A short undirected cycle inside ``alive`` as a vertex list, or None.

    Per-source BFS; the first non-tree edge closing at minimal combined depth
    wins. The closed walk is reduced to a simple cycle before returning, so
    the result is always valid for branching.
    """
    best = None  # (length, cycle)
    scan_sources = alive
    while scan_sources:
        low = scan_sources & -scan_sources
        scan_sources ^= low
        s = low.bit_length() - 1
        found = _cycle_from_source(adj_masks, alive, s,
                                   best[0] if best else None)
        if found is not None and (best is None or len(found) < best[0]):
            best = (len(found), found)
            if best[0] == 3:
                break
    return best[1] if best else None


def _cycle_from_source(adj_masks, alive: int, s: int, cap: int | None) -> list[int] | None:
    parent = {s: -1}
    dist = {s: 0}
    queue = [s]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        if cap is not None and 2 * dist[u] + 1 >= cap:
            return None
        nbrs = adj_masks[u] & alive
        while nbrs:
            low = nbrs & -nbrs
            nbrs ^= low
            w = low.bit_length() - 1
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
            elif w != parent[u] and dist[w] >= dist[u]:
                return _simple_cycle_from_paths(parent, u, w)
    return None


def _simple_cycle_from_paths(parent, u: int, w: int) -> list[int]:
    path_u = [u]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    path_w = [w]
    while parent[path_w[-1]] != -1:
        path_w.append(parent[path_w[-1]])
    in_u = {v: i for i, v in enumerate(path_u)}
    meet_w = next(i for i, v in enumerate(path_w) if v in in_u)
    meet_u = in_u[path_w[meet_w]]
    # u ... meet vertex ... w, plus the closing edge w-u
    return path_u[:meet_u + 1] + path_w[:meet_w][::-1]


def _decycling_search(adj_masks, alive: int, budget: int) -> list[int] | None:
    cycle = _undirected_cycle(adj_masks, alive)
    if cycle is None:
        return []
    if budget == 0:
        return None
    for v in sorted(cycle):
        rest = _decycling_search(adj_masks, alive & ~(1 << v), budget - 1)
        if rest is not None:
            return [v] + rest
    return None


def max_induced_forest(graph: UndirectedGraph) -> SolverWitness:
    """A maximum vertex set inducing a forest (minimum decycling, complemented)."""
    n = graph.n
    full = (1 << n) - 1
    for budget in range(n + 1):
        deleted = _decycling_search(graph.adj_masks, full, budget)
        if deleted is not None:
            kept = full
            for v in deleted:
                kept &= ~(1 << v)
            if not mask_is_forest(graph.adj_masks, kept):
                raise AssertionError("search returned an invalid forest")
            return SolverWitness(kind="induced-forest", size=n - len(deleted),
                                 vertices=mask_vertices(kept))
    raise AssertionError("unreachable")


def brute_force_max_induced_forest(graph: UndirectedGraph) -> SolverWitness:
    """Oracle: exhaustive subset enumeration in decreasing size. Guarded to n <= 24."""
    n = graph.n
    if n > BRUTE_FORCE_VERTEX_LIMIT:
        raise ResourceGuardError(
            f"brute force limited to {BRUTE_FORCE_VERTEX_LIMIT} vertices, got {n}")
    adj = graph.adj_masks
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            mask = 0
            for v in subset:
                mask |= 1 << v
            if mask_is_forest(adj, mask):
                return SolverWitness(kind="induced-forest", size=size,
                                     vertices=frozenset(subset))
    raise AssertionError("unreachable")
