#!/usr/bin/env python3
"""One-off generator for the committed triangulation fixtures.

Produces every isomorphism class of plane triangulation (simple, all faces
triangles, m = 3n-6) for 4 <= n <= 10 as planar_code files, one file per
order, each record in canonical form and records sorted, plus a manifest
with the per-order counts.

Method: start from the stacked triangulation on n vertices and close the set
under diagonal flips; by Wagner's theorem the flip graph on sphere
triangulations of a fixed order is connected, so this reaches every class.
Isomorphism rejection uses the lexicographically minimal planar_code over all
start darts and both chiralities, which is a complete invariant for embedded
graphs; for triangulations (3-connected) the embedding is unique up to
reflection, so this equals graph isomorphism.

The resulting per-order counts (1, 1, 2, 5, 14, 50, 233 for n = 4..10) match
the published enumeration of simplicial polyhedra, which is the external
check that the sweep is exhaustive.

Usage: PYTHONPATH=src python3 tools/generate_triangulation_fixtures.py [outdir]
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from planacyclic.embedding import trace_faces  # noqa: E402

EXPECTED_COUNTS = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50, 10: 233}
HEADER = b">>planar_code<<"

Rotations = tuple[tuple[int, ...], ...]

K4: Rotations = ((1, 2, 3), (2, 0, 3), (0, 1, 3), (1, 0, 2))


def successor(ring: tuple[int, ...], entry: int) -> int:
    return ring[(ring.index(entry) + 1) % len(ring)]


def insert_vertex_in_triangle(rot: Rotations, triangle: tuple[int, int, int]) -> Rotations:
    """Subdivide the face (a, b, c) with one new vertex joined to all corners."""
    a, b, c = triangle
    rings = [list(ring) for ring in rot]
    w = len(rings)
    # For each face dart (p, q), the new vertex slots in right after p at q.
    for p, q in ((a, b), (b, c), (c, a)):
        rings[q].insert(rings[q].index(p) + 1, w)
    rings.append([b, a, c])
    return tuple(tuple(r) for r in rings)


def stacked_triangulation(n: int) -> Rotations:
    rot = K4
    while len(rot) < n:
        face = trace_faces(rot)[0]
        rot = insert_vertex_in_triangle(rot, tuple(face.vertices))
    return rot


def flip(rot: Rotations, u: int, v: int) -> Rotations | None:
    """Replace edge {u, v} by the opposite diagonal of its two triangles.

    Returns None when the flip would create a duplicate edge.
    """
    a = successor(rot[v], u)  # apex of the triangle on dart (u, v)
    b = successor(rot[u], v)  # apex of the triangle on dart (v, u)
    if a == b or a in rot[b]:
        return None
    rings = [list(ring) for ring in rot]
    rings[a].insert(rings[a].index(v) + 1, b)
    rings[b].insert(rings[b].index(u) + 1, a)
    rings[u].remove(v)
    rings[v].remove(u)
    return tuple(tuple(r) for r in rings)


def planar_code_record(rot: Rotations) -> bytes:
    out = bytearray([len(rot)])
    for ring in rot:
        out.extend(w + 1 for w in ring)
        out.append(0)
    return bytes(out)


def code_from_dart(rot: Rotations, u: int, v: int) -> bytes:
    """planar_code record of the BFS relabeling that starts with dart (u, v)."""
    n = len(rot)
    labels = {u: 1}
    entry = {u: v}
    order = [u]
    out = bytearray([n])
    head = 0
    while head < len(order):
        w = order[head]
        head += 1
        ring = rot[w]
        size = len(ring)
        start = ring.index(entry[w])
        for i in range(size):
            nb = ring[(start + i) % size]
            if nb not in labels:
                labels[nb] = len(labels) + 1
                entry[nb] = w
                order.append(nb)
            out.append(labels[nb])
        out.append(0)
    return bytes(out)


def canonical_code(rot: Rotations) -> bytes:
    mirror = tuple(tuple(reversed(ring)) for ring in rot)
    return min(code_from_dart(r, u, v)
               for r in (rot, mirror)
               for u in range(len(r))
               for v in r[u])


def rotations_from_record(record: bytes) -> Rotations:
    n = record[0]
    rings, ring = [], []
    for byte in record[1:]:
        if byte == 0:
            rings.append(tuple(w - 1 for w in ring))
            ring = []
        else:
            ring.append(byte)
    assert len(rings) == n
    return tuple(rings)


def is_plane_triangulation(rot: Rotations) -> bool:
    n = len(rot)
    m = sum(len(r) for r in rot) // 2
    if m != 3 * n - 6:
        return False
    faces = trace_faces(rot)
    if any(len(f) != 3 for f in faces):
        return False
    return n - m + len(faces) == 2


def all_triangulations(n: int) -> list[bytes]:
    seed = stacked_triangulation(n)
    assert is_plane_triangulation(seed)
    start = canonical_code(seed)
    seen = {start: seed}
    frontier = [seed]
    while frontier:
        rot = frontier.pop()
        edges = sorted({(min(u, v), max(u, v)) for u in range(n) for v in rot[u]})
        for u, v in edges:
            flipped = flip(rot, u, v)
            if flipped is None:
                continue
            code = canonical_code(flipped)
            if code not in seen:
                assert is_plane_triangulation(flipped)
                seen[code] = flipped
                frontier.append(flipped)
    return sorted(seen)


def main() -> None:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent / "src" / "planacyclic" / "data")
    outdir.mkdir(parents=True, exist_ok=True)
    manifest = {}
    for n, expected in EXPECTED_COUNTS.items():
        codes = all_triangulations(n)
        if len(codes) != expected:
            raise SystemExit(
                f"n={n}: found {len(codes)} triangulations, expected {expected}")
        # sanity: canonical codes decode back to themselves
        for code in codes:
            assert canonical_code(rotations_from_record(code)) == code
        name = f"triangulations_n{n:02d}.plc"
        (outdir / name).write_bytes(HEADER + b"".join(codes))
        manifest[str(n)] = {"file": name, "count": len(codes)}
        print(f"n={n}: {len(codes)} triangulations -> {name}")
    (outdir / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    print(f"manifest -> {outdir / 'manifest.json'}")


if __name__ == "__main__":
    main()
