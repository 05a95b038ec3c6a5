"""Directed and undirected graph types plus the cheap decision procedures.

Vertices are dense integers ``0..n-1``. Arc and edge containers have set
semantics (duplicates collapse, loops are rejected). Vertex sets are plain
iterables of ints at the API surface; internally everything runs on bitmask
adjacency (``out_masks[v]`` has bit ``w`` set iff the arc ``v -> w`` exists),
which is what the exact solvers iterate over.

All types are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import InvalidInputError, ParseError


class Digraph:
    """A loop-free digraph without duplicate arcs."""

    __slots__ = ("n", "arcs", "out_masks", "in_masks")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidInputError(f"vertex count must be >= 0, got {n}")
        arc_set = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"arc ({u}, {v}) out of range [0, {n})")
            if u == v:
                raise InvalidInputError(f"loop at vertex {u} not allowed")
            arc_set.add((u, v))
        out = [0] * n
        inm = [0] * n
        for u, v in arc_set:
            out[u] |= 1 << v
            inm[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", tuple(sorted(arc_set)))
        object.__setattr__(self, "out_masks", tuple(out))
        object.__setattr__(self, "in_masks", tuple(inm))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def m(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and self.out_masks[u] >> v & 1 == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, m={self.m})"


class OrientedGraph(Digraph):
    """A digraph that is additionally digon-free: ``u -> v`` excludes ``v -> u``."""

    __slots__ = ()

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        super().__init__(n, arcs)
        for u, v in self.arcs:
            if self.out_masks[v] >> u & 1:
                raise InvalidInputError(f"digon between {u} and {v} not allowed")


class UndirectedGraph:
    """A simple undirected graph; edges are stored as sorted pairs ``(u, v)``, u < v."""

    __slots__ = ("n", "edges", "adj_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidInputError(f"vertex count must be >= 0, got {n}")
        edge_set = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge ({u}, {v}) out of range [0, {n})")
            if u == v:
                raise InvalidInputError(f"loop at vertex {u} not allowed")
            edge_set.add((u, v) if u < v else (v, u))
        adj = [0] * n
        for u, v in edge_set:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(edge_set)))
        object.__setattr__(self, "adj_masks", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and self.adj_masks[u] >> v & 1 == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, m={self.m})"


def vertex_mask(n: int, vertices: Iterable[int]) -> int:
    """Pack a vertex collection into a bitmask, validating the range."""
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise InvalidInputError(f"vertex {v} out of range [0, {n})")
        mask |= 1 << v
    return mask


def mask_vertices(mask: int) -> frozenset[int]:
    """Unpack a bitmask into a frozenset of vertex ids."""
    out = set()
    while mask:
        low = mask & -mask
        out.add(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def mask_is_acyclic(out_masks, mask: int) -> bool:
    """True iff the subgraph induced by the bitmask has no directed cycle.

    Kahn-style peeling: repeatedly drop vertices with no out-arc inside the
    mask; the induced subgraph is acyclic iff everything peels away.
    """
    while mask:
        peeled = False
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            if not out_masks[v] & mask:
                mask ^= low
                peeled = True
        if not peeled:
            return False
    return True


def is_acyclic(digraph: Digraph, vertices: Iterable[int]) -> bool:
    """True iff the subgraph induced by ``vertices`` has no directed cycle."""
    return mask_is_acyclic(digraph.out_masks, vertex_mask(digraph.n, vertices))


def shortest_cycle_length_through(out_masks, in_mask_of_start: int, start: int,
                                  alive: int, cap: int | None = None) -> int | None:
    """Length of a shortest directed cycle through ``start`` inside ``alive``.

    BFS by frontier masks; returns None if no cycle through ``start`` exists
    (or none shorter than ``cap``).
    """
    start_bit = 1 << start
    if not alive & start_bit:
        return None
    seen = start_bit
    frontier = start_bit
    dist = 0
    while frontier:
        if dist and frontier & in_mask_of_start:
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


def digirth(digraph: Digraph) -> int | None:
    """Length of a smallest directed cycle, or None if the digraph is acyclic."""
    n = digraph.n
    alive = (1 << n) - 1
    best = None
    for s in range(n):
        cap = best - 1 if best is not None else None
        length = shortest_cycle_length_through(
            digraph.out_masks, digraph.in_masks[s], s, alive, cap)
        if length is not None and (best is None or length < best):
            best = length
            if best == 2:
                break
    return best


def reverse(digraph: Digraph) -> Digraph:
    """Reverse every arc; the result has the same concrete type as the input."""
    return type(digraph)(digraph.n, [(v, u) for u, v in digraph.arcs])


def orientations(graph: UndirectedGraph, dedup_reversal: bool = False) -> Iterator[OrientedGraph]:
    """Yield every orientation of ``graph``, one per edge-direction bitmask.

    Edges are indexed in canonical sorted order; bit ``i`` clear means the
    i-th edge ``(u, v)`` is oriented ``u -> v``. With ``dedup_reversal``,
    exactly one of each pair ``{D, reverse(D)}`` is produced (the mask whose
    value is smaller than its m-bit complement, i.e. masks with the top bit
    clear), which halves the stream; this is sound for any reversal-invariant
    quantity such as the maximum acyclic set size.
    """
    m = graph.m
    n = graph.n
    edges = graph.edges
    total = 1 << m
    stop = total >> 1 if (dedup_reversal and m >= 1) else total
    for mask in range(stop):
        arcs = [(v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(edges)]
        yield OrientedGraph(n, arcs)


def read_edge_list(text: str) -> Digraph:
    """Parse the text edge-list format: first line ``n m``, then ``m`` lines ``u v``."""
    n, pairs = _parse_pairs(text)
    seen = set()
    for lineno, (u, v) in pairs:
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        if (u, v) in seen:
            raise ParseError(f"duplicate arc ({u}, {v})", lineno)
        seen.add((u, v))
    try:
        return Digraph(n, [p for _, p in pairs])
    except InvalidInputError as exc:
        raise ParseError(str(exc), 1) from exc


def read_undirected_edge_list(text: str) -> UndirectedGraph:
    """Parse the same edge-list format, treating each pair as an undirected edge."""
    n, pairs = _parse_pairs(text)
    try:
        return UndirectedGraph(n, [p for _, p in pairs])
    except InvalidInputError as exc:
        raise ParseError(str(exc), 1) from exc


def write_edge_list(digraph: Digraph) -> str:
    lines = [f"{digraph.n} {digraph.m}"]
    lines.extend(f"{u} {v}" for u, v in digraph.arcs)
    return "\n".join(lines) + "\n"


def _parse_pairs(text: str) -> tuple[int, list[tuple[int, tuple[int, int]]]]:
    lines = [(i + 1, line) for i, line in enumerate(text.splitlines())
             if line.strip() and not line.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty input", 1)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError("header must be 'n m'", lineno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("header must contain two integers", lineno) from None
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"expected {m} arc lines, found {len(body)}",
                         body[-1][0] if body else lineno)
    pairs = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("arc line must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("arc endpoints must be integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range [0, {n})", lineno)
        pairs.append((lineno, (u, v)))
    return n, pairs
