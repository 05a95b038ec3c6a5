"""Tight-triangulation experiment pipeline: planar_code ingestion, the
induced-forest tightness filter, and exhaustive orientation sweeps.

The sweep enumerates edge-direction bitmasks in plain ascending order,
optionally up to global arc reversal (sound for acyclic-set sizes, which are
reversal-invariant), and asks per orientation whether an acyclic set of the
threshold size exists. Mask ranges are independent, so they can be chunked
across worker processes and resumed from a plain-text checkpoint file; the
verdict does not depend on the chunking.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from importlib import resources
from multiprocessing import Pool
from typing import Iterable, Iterator, Sequence

from .embedding import PlaneEmbedding
from .errors import InvalidInputError, ParseError, ResourceGuardError
from .graphs import UndirectedGraph, mask_is_acyclic
from .solvers import max_induced_forest, shortest_cycle

PLANAR_CODE_HEADER = b">>planar_code<<"

# A sweep larger than this (after dedup) only runs when `long_run` is set;
# 2^20 masks admits every n <= 8 triangulation but gates the n = 10 ones.
DEFAULT_SWEEP_GATE = 1 << 20

# Hard guard on edge count (2^m enumeration); overridable with force=True.
MAX_SWEEP_EDGES = 30


@dataclass(frozen=True)
class EmbeddedGraph:
    """An undirected graph together with the plane embedding it was read with."""

    graph: UndirectedGraph
    embedding: PlaneEmbedding

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m


@dataclass
class ScanRecord:
    """Per-graph scan outcome, serialized as one JSON object per line.

    ``threshold``/``holds`` are None when no sweep applied (not tight, gated,
    or the instance fails Problem 1's hypothesis); ``min_mas`` is only set by
    exact sweeps.
    """

    n: int
    m: int
    forest: int
    tight: bool
    orientations: int
    min_mas: int | None
    threshold: int | None
    holds: bool | None
    seconds: float

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n, "m": self.m, "forest": self.forest, "tight": self.tight,
            "orientations": self.orientations, "min_mas": self.min_mas,
            "threshold": self.threshold, "holds": self.holds,
            "seconds": round(self.seconds, 3),
        })


# ---------------------------------------------------------------------------
# planar_code


def read_planar_code(data: bytes) -> Iterator[EmbeddedGraph]:
    """Decode planar_code bytes into embedded graphs.

    The optional 15-byte ``>>planar_code<<`` header is skipped; then each
    record is one unsigned byte n followed, for each vertex, by its neighbor
    list in rotation order terminated by a zero byte. Vertex ids are 1-based
    in the file and shifted to 0-based here. Parse errors carry the byte
    offset at which decoding failed.
    """
    pos = len(PLANAR_CODE_HEADER) if data.startswith(PLANAR_CODE_HEADER) else 0
    while pos < len(data):
        record_start = pos
        n = data[pos]
        pos += 1
        if n == 0:
            raise ParseError("vertex count byte is zero", record_start)
        rotations: list[list[int]] = []
        for v in range(n):
            ring: list[int] = []
            while True:
                if pos >= len(data):
                    raise ParseError(
                        f"record truncated in neighbor list of vertex {v}", pos)
                byte = data[pos]
                pos += 1
                if byte == 0:
                    break
                if byte > n:
                    raise ParseError(
                        f"neighbor {byte} out of range 1..{n}", pos - 1)
                if byte - 1 == v:
                    raise ParseError(f"loop at vertex {v}", pos - 1)
                if byte - 1 in ring:
                    raise ParseError(
                        f"duplicate neighbor {byte} at vertex {v}", pos - 1)
                ring.append(byte - 1)
            rotations.append(ring)
        for v, ring in enumerate(rotations):
            for w in ring:
                if v not in rotations[w]:
                    raise ParseError(
                        f"asymmetric adjacency between {v} and {w}", record_start)
        embedding = PlaneEmbedding(rotations)
        yield EmbeddedGraph(graph=UndirectedGraph(n, embedding.edges),
                            embedding=embedding)


def write_planar_code(graphs: Iterable[EmbeddedGraph], header: bool = True) -> bytes:
    """Encode embedded graphs back to planar_code; inverse of read_planar_code."""
    out = bytearray(PLANAR_CODE_HEADER if header else b"")
    for eg in graphs:
        if eg.n > 255:
            raise InvalidInputError("planar_code records are limited to 255 vertices")
        out.append(eg.n)
        for ring in eg.embedding.rotations:
            out.extend(w + 1 for w in ring)
            out.append(0)
    return bytes(out)


# ---------------------------------------------------------------------------
# triangulations and tightness


def is_triangulation(eg: EmbeddedGraph) -> bool:
    """Connected, simple, m = 3n - 6, and every traced face a triangle."""
    n, m = eg.n, eg.m
    if n < 3 or m != 3 * n - 6:
        return False
    seen = 1
    stack = [0]
    adj = eg.graph.adj_masks
    while stack:
        v = stack.pop()
        rest = adj[v] & ~seen
        seen |= rest
        while rest:
            low = rest & -rest
            rest ^= low
            stack.append(low.bit_length() - 1)
    if seen != (1 << n) - 1:
        return False
    return all(len(face) == 3 for face in eg.embedding.faces)


def find_tight(graphs: Iterable[EmbeddedGraph]) -> list[EmbeddedGraph]:
    """Keep the triangulations whose maximum induced forest is exactly n/2.

    Inputs are expected to pass is_triangulation; n must be even for the
    forest bound n/2 to be attainable exactly.
    """
    kept = []
    for eg in graphs:
        if eg.n % 2 == 0 and max_induced_forest(eg.graph).size == eg.n // 2:
            kept.append(eg)
    return kept


# ---------------------------------------------------------------------------
# orientation sweep


@dataclass(frozen=True)
class SweepResult:
    min_mas: int | None
    all_meet_threshold: bool
    orientations: int


def _directed_triangle(out, alive: int, triangles) -> tuple[int, int, int] | None:
    for a, b, c, bits in triangles:
        if alive & bits == bits:
            ab = out[a] >> b & 1
            if ab == out[b] >> c & 1 == out[c] >> a & 1:
                return (a, b, c)
    return None


def _find_cycle(out, inm, alive: int, triangles) -> Sequence[int] | None:
    tri = _directed_triangle(out, alive, triangles)
    if tri is not None:
        return tri
    if mask_is_acyclic(out, alive):
        return None
    return shortest_cycle(out, inm, alive, floor=4)


def _kept_within_budget(out, inm, alive: int, budget: int, triangles) -> int | None:
    """An acyclic sub-mask of ``alive`` reachable by at most ``budget``
    deletions, or None. Branches on directed triangles first (triangulation
    orientations mostly have them), falling back to a shortest-cycle search."""
    cycle = _find_cycle(out, inm, alive, triangles)
    if cycle is None:
        return alive
    if budget == 0:
        return None
    for v in cycle:
        kept = _kept_within_budget(out, inm, alive & ~(1 << v), budget - 1, triangles)
        if kept is not None:
            return kept
    return None


def _exact_mas_masked(out, inm, full: int, n: int, triangles) -> int:
    for budget in range(n + 1):
        if _kept_within_budget(out, inm, full, budget, triangles) is not None:
            return n - budget
    raise AssertionError("unreachable")


def _orientation_masks_arrays(n: int, edges) -> tuple[list[int], list[int]]:
    u_bits = [1 << u for u, _ in edges]
    v_bits = [1 << v for _, v in edges]
    return u_bits, v_bits


def _sweep_chunk(args) -> tuple[int, int, bool, int | None]:
    """Worker: sweep orientation masks in [start, stop); returns
    (start, stop, holds, min_mas)."""
    (n, edges, triangles, start, stop, threshold, exact) = args
    full = (1 << n) - 1
    budget = n - threshold
    holds = True
    min_mas: int | None = None
    cached_kept = 0
    out = [0] * n
    inm = [0] * n
    for mask in range(start, stop):
        for i, (u, v) in enumerate(edges):
            if mask >> i & 1:
                u, v = v, u
            out[u] |= 1 << v
            inm[v] |= 1 << u
        if exact:
            mas = _exact_mas_masked(out, inm, full, n, triangles)
            min_mas = mas if min_mas is None else min(min_mas, mas)
            if mas < threshold:
                holds = False
        else:
            if not (cached_kept and mask_is_acyclic(out, cached_kept)):
                kept = _kept_within_budget(out, inm, full, budget, triangles)
                if kept is None:
                    holds = False
                    for j in range(n):
                        out[j] = inm[j] = 0
                    break
                cached_kept = kept
        for j in range(n):
            out[j] = inm[j] = 0
    return start, stop, holds, min_mas


class Checkpoint:
    """Append-only plain-text log of completed sweep chunks.

    Line format: ``<key> <start> <stop> <holds 0|1> <min_mas or ->``.
    """

    def __init__(self, path):
        self.path = path

    def completed(self, key: str) -> dict[tuple[int, int], tuple[bool, int | None]]:
        done = {}
        try:
            with open(self.path) as fh:
                for line in fh:
                    parts = line.split()
                    if len(parts) == 5 and parts[0] == key:
                        start, stop = int(parts[1]), int(parts[2])
                        holds = parts[3] == "1"
                        min_mas = None if parts[4] == "-" else int(parts[4])
                        done[(start, stop)] = (holds, min_mas)
        except FileNotFoundError:
            pass
        return done

    def record(self, key: str, start: int, stop: int, holds: bool,
               min_mas: int | None) -> None:
        with open(self.path, "a") as fh:
            fh.write(f"{key} {start} {stop} {int(holds)} "
                     f"{'-' if min_mas is None else min_mas}\n")


def _undirected_triangles(graph: UndirectedGraph):
    adj = graph.adj_masks
    triangles = []
    for a in range(graph.n):
        for b in range(a + 1, graph.n):
            if not adj[a] >> b & 1:
                continue
            common = adj[a] & adj[b] & ~((1 << (b + 1)) - 1)
            while common:
                low = common & -common
                common ^= low
                c = low.bit_length() - 1
                triangles.append((a, b, c, (1 << a) | (1 << b) | (1 << c)))
    return triangles


def orientation_sweep(graph: UndirectedGraph | EmbeddedGraph, threshold: int, *,
                      dedup: bool = True, exact: bool = False, jobs: int = 1,
                      force: bool = False, checkpoint: Checkpoint | None = None,
                      checkpoint_key: str = "", chunk_size: int | None = None,
                      ) -> SweepResult:
    """Test every orientation for an acyclic set of size >= threshold.

    With ``dedup`` (default) one orientation of each reversal pair is
    enumerated. ``exact`` additionally computes the exact minimum over
    orientations of the maximum acyclic set size (slower; off by default
    because the claim under test is a threshold claim). ``jobs`` > 1 spreads
    mask chunks over worker processes; results do not depend on the chunking.
    Graphs with more than 30 edges are refused unless ``force`` is set.
    """
    if isinstance(graph, EmbeddedGraph):
        graph = graph.graph
    n, m = graph.n, graph.m
    if not 0 <= threshold <= n:
        raise InvalidInputError(f"threshold must be in [0, {n}], got {threshold}")
    if m > MAX_SWEEP_EDGES and not force:
        raise ResourceGuardError(
            f"sweep of 2^{m} orientations refused (limit m <= {MAX_SWEEP_EDGES}); "
            "pass force to override")
    total = 1 << m
    stop = total >> 1 if (dedup and m >= 1) else total
    triangles = _undirected_triangles(graph)
    if chunk_size is None:
        # fixed chunking under checkpointing so resumed ranges line up
        chunk_size = 1 << 16 if checkpoint else max(1 << 10, stop // (max(jobs, 1) * 16) or 1)

    done = checkpoint.completed(checkpoint_key) if checkpoint else {}
    chunks = []
    results = []
    lo = 0
    while lo < stop:
        hi = min(lo + chunk_size, stop)
        if (lo, hi) in done:
            holds, min_mas = done[(lo, hi)]
            results.append((lo, hi, holds, min_mas))
        else:
            chunks.append((n, graph.edges, triangles, lo, hi, threshold, exact))
        lo = hi

    def collect(result):
        start, stop_, holds, min_mas = result
        if checkpoint:
            checkpoint.record(checkpoint_key, start, stop_, holds, min_mas)
        results.append(result)
        return holds

    if jobs <= 1 or len(chunks) <= 1:
        for chunk in chunks:
            if not collect(_sweep_chunk(chunk)) and not exact:
                break
    else:
        with Pool(processes=jobs) as pool:
            for result in pool.imap(_sweep_chunk, chunks):
                if not collect(result) and not exact:
                    pool.terminate()
                    break

    all_meet = all(holds for _, _, holds, _ in results)
    min_mas = None
    if exact:
        seen = [mm for _, _, _, mm in results if mm is not None]
        min_mas = min(seen) if seen else None
    return SweepResult(min_mas=min_mas, all_meet_threshold=all_meet,
                       orientations=stop)


def check_problem1(eg: EmbeddedGraph, *, dedup: bool = True, exact: bool = False,
                   jobs: int = 1, force: bool = False,
                   long_run: bool = False) -> ScanRecord:
    """One graph's entry for the a+1 question: if the maximum induced forest
    has size a <= n/2, sweep all orientations for an acyclic set of size a+1.

    Entries whose forest exceeds n/2 are marked not applicable (threshold and
    holds left null) rather than failing.
    """
    t0 = time.perf_counter()
    n = eg.n
    forest = max_induced_forest(eg.graph).size
    tight = n % 2 == 0 and forest == n // 2
    record = ScanRecord(n=n, m=eg.m, forest=forest, tight=tight, orientations=0,
                        min_mas=None, threshold=None, holds=None, seconds=0.0)
    if 2 * forest <= n:
        planned = 1 << (eg.m - 1 if (dedup and eg.m) else eg.m)
        if planned <= DEFAULT_SWEEP_GATE or long_run:
            result = orientation_sweep(eg.graph, forest + 1, dedup=dedup,
                                       exact=exact, jobs=jobs, force=force)
            record.orientations = result.orientations
            record.min_mas = result.min_mas
            record.threshold = forest + 1
            record.holds = result.all_meet_threshold
    record.seconds = time.perf_counter() - t0
    return record


# ---------------------------------------------------------------------------
# committed fixtures


def _data_root():
    return resources.files("planacyclic.data")


def fixture_manifest() -> dict[int, dict]:
    raw = json.loads((_data_root() / "manifest.json").read_text())
    return {int(k): v for k, v in raw.items()}


def fixture_bytes(order: int) -> bytes:
    manifest = fixture_manifest()
    if order not in manifest:
        raise InvalidInputError(f"no committed fixture for n={order}")
    return (_data_root() / manifest[order]["file"]).read_bytes()


def load_fixtures(orders: Iterable[int] | None = None) -> dict[int, list[EmbeddedGraph]]:
    """Load committed triangulation fixtures, verifying manifest counts and
    that every graph is a plane triangulation."""
    manifest = fixture_manifest()
    orders = sorted(manifest) if orders is None else list(orders)
    out = {}
    for order in orders:
        graphs = list(read_planar_code(fixture_bytes(order)))
        expected = manifest[order]["count"]
        if len(graphs) != expected:
            raise InvalidInputError(
                f"fixture n={order}: {len(graphs)} records, manifest says {expected}")
        for i, eg in enumerate(graphs):
            if eg.n != order or not is_triangulation(eg):
                raise InvalidInputError(
                    f"fixture n={order} record {i} is not a plane triangulation")
        out[order] = graphs
    return out
