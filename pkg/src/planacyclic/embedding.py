"""Combinatorial plane embeddings: rotation systems, face tracing, and the
path-insertion surgery used by the recursive construction.

A rotation system assigns each vertex the cyclic order of its incident darts;
a dart is an ordered pair ``(tail, head)`` of an undirected edge. Faces are
the orbits of ``next(d) = rotation-successor, at head(d), of the reversed
dart``; with V - E + F = 2 the rotation system is certified to be a plane
(genus 0) embedding. Planarity is established by this arithmetic, never by a
general planarity test.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (InvalidEmbeddingError, InvalidFaceError,
                     InvalidParameterError, UnsupportedInputError)

Dart = tuple[int, int]


class FaceWalk:
    """A closed walk of darts bounding one face.

    Stored in canonical rotation (lexicographically smallest dart first) so
    that two traces of the same face compare equal.
    """

    __slots__ = ("darts", "vertices")

    def __init__(self, darts: Sequence[Dart]):
        darts = tuple(darts)
        if darts:
            pivot = min(range(len(darts)), key=lambda i: darts[i])
            darts = darts[pivot:] + darts[:pivot]
        object.__setattr__(self, "darts", darts)
        object.__setattr__(self, "vertices", tuple(u for u, _ in darts))

    def __setattr__(self, name, value):
        raise AttributeError("FaceWalk is immutable")

    def __len__(self) -> int:
        return len(self.darts)

    def __contains__(self, vertex: int) -> bool:
        return vertex in self.vertices

    def __eq__(self, other) -> bool:
        if not isinstance(other, FaceWalk):
            return NotImplemented
        return self.darts == other.darts

    def __hash__(self) -> int:
        return hash(self.darts)

    def __repr__(self) -> str:
        return f"FaceWalk({'-'.join(map(str, self.vertices))})"


def _validate_rotations(rotations: Sequence[Sequence[int]]) -> set[Dart]:
    darts: set[Dart] = set()
    for v, ring in enumerate(rotations):
        seen = set()
        for w in ring:
            if w == v:
                raise InvalidEmbeddingError(f"loop dart at vertex {v}")
            if not 0 <= w < len(rotations):
                raise InvalidEmbeddingError(f"rotation at {v} references unknown vertex {w}")
            if w in seen:
                raise InvalidEmbeddingError(f"duplicate dart ({v}, {w}) in rotation")
            seen.add(w)
            darts.add((v, w))
    for u, v in darts:
        if (v, u) not in darts:
            raise InvalidEmbeddingError(f"dart ({u}, {v}) has no reverse in rotation at {v}")
    return darts


def trace_faces(rotations: Sequence[Sequence[int]]) -> list[FaceWalk]:
    """Partition all darts of a rotation system into closed face walks.

    Successor rule: after dart ``(u, v)`` the walk continues with ``(v, w)``
    where ``w`` follows ``u`` in the rotation at ``v``.
    """
    darts = _validate_rotations(rotations)
    succ_index = [{w: i for i, w in enumerate(ring)} for ring in rotations]
    faces = []
    unused = set(darts)
    for start in sorted(darts):
        if start not in unused:
            continue
        walk = []
        dart = start
        while True:
            walk.append(dart)
            unused.discard(dart)
            u, v = dart
            ring = rotations[v]
            dart = (v, ring[(succ_index[v][u] + 1) % len(ring)])
            if dart == start:
                break
        faces.append(FaceWalk(walk))
    total = sum(len(f) for f in faces)
    if total != len(darts):
        raise InvalidEmbeddingError("face walks do not partition the darts")
    return faces


class PlaneEmbedding:
    """An embedded simple graph: rotation system plus derived face walks.

    Structural well-formedness (every dart present exactly once, symmetric
    adjacency) is enforced here; the Euler characteristic is *computed*, not
    assumed, so callers can certify planarity of what they built.
    """

    __slots__ = ("n", "rotations", "edges", "faces")

    def __init__(self, rotations: Sequence[Sequence[int]]):
        rotations = tuple(tuple(ring) for ring in rotations)
        faces = trace_faces(rotations)
        edges = sorted({(min(v, w), max(v, w))
                        for v, ring in enumerate(rotations) for w in ring})
        object.__setattr__(self, "n", len(rotations))
        object.__setattr__(self, "rotations", rotations)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "faces", tuple(faces))

    def __setattr__(self, name, value):
        raise AttributeError("PlaneEmbedding is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def face_of_dart(self, dart: Dart) -> FaceWalk:
        for face in self.faces:
            if dart in face.darts:
                return face
        raise InvalidFaceError(f"dart {dart} not in embedding")

    def __repr__(self) -> str:
        return f"PlaneEmbedding(n={self.n}, m={self.m}, faces={len(self.faces)})"


def euler_characteristic(embedding: PlaneEmbedding) -> int:
    """V - E + F of a connected embedded graph; 2 certifies a plane embedding."""
    n = embedding.n
    if n > 0:
        seen = {0}
        stack = [0]
        while stack:
            for w in embedding.rotations[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            raise UnsupportedInputError("euler characteristic requires a connected graph")
    return n - embedding.m + len(embedding.faces)


def insert_path_in_face(embedding: PlaneEmbedding, face: FaceWalk, x: int, y: int,
                        k: int) -> tuple[PlaneEmbedding, list[FaceWalk]]:
    """Add a path of ``k`` new vertices inside ``face``, joined to ``x`` and ``y``.

    The new vertices ``s_1 .. s_k`` get ids ``n .. n+k-1``. Added undirected
    edges: the path ``s_1 - ... - s_k`` plus ``x-s_1``, ``y-s_1``, ``x-s_k``,
    ``y-s_k``. The new darts are spliced into the rotations at ``x`` and ``y``
    between the two darts of ``face`` incident there, which is the unique
    choice that keeps the new material inside the face. The face is replaced
    by exactly four new ones:

      * ``y - s_1 - x`` closed by the old boundary portion from x to y,
      * ``y - ... - x - s_k`` closed by the other boundary portion,
      * ``x - s_1 - ... - s_k``,
      * ``y - s_k - ... - s_1``.

    Returns the new embedding and those four faces (as traced in it, in the
    order above).
    """
    if k < 2:
        raise InvalidParameterError(f"path length k must be >= 2, got {k}")
    if face not in embedding.faces:
        raise InvalidFaceError("face walk is not a face of this embedding")
    walk = face.darts
    size = len(walk)
    try:
        ix = next(i for i, d in enumerate(walk) if d[0] == x)
    except StopIteration:
        raise InvalidFaceError(f"vertex {x} does not occur on the face") from None
    try:
        iy = next(i for i, d in enumerate(walk) if d[0] == y)
    except StopIteration:
        raise InvalidFaceError(f"vertex {y} does not occur on the face") from None
    if x == y:
        raise InvalidFaceError("x and y must be distinct")

    n = embedding.n
    s = list(range(n, n + k))  # s[0] = s_1, s[-1] = s_k
    rotations = [list(ring) for ring in embedding.rotations]

    # Splice at x: between the face's incoming dart (a, x) and outgoing dart
    # (x, b), in that cyclic gap, place x->s_k then x->s_1.
    _splice(rotations, x, before=walk[ix - 1][0], after=walk[ix][1],
            inserted=[s[-1], s[0]])
    # Splice at y: same gap logic, order s_1 then s_k.
    _splice(rotations, y, before=walk[iy - 1][0], after=walk[iy][1],
            inserted=[s[0], s[-1]])

    rotations.append([y, x, s[1]])  # s_1
    for i in range(1, k - 1):
        rotations.append([s[i - 1], s[i + 1]])
    rotations.append([x, y, s[-2]])  # s_k

    new_embedding = PlaneEmbedding(rotations)

    portion_xy = [walk[(ix + i) % size] for i in range((iy - ix) % size)]
    portion_yx = [walk[(iy + i) % size] for i in range((ix - iy) % size)]
    path_down = list(zip([x] + s, s + [x]))          # x->s_1->...->s_k->x
    path_up = list(zip([y] + s[::-1], s[::-1] + [y]))  # y->s_k->...->s_1->y
    expected = [
        FaceWalk([(y, s[0]), (s[0], x)] + portion_xy),
        FaceWalk(portion_yx + [(x, s[-1]), (s[-1], y)]),
        FaceWalk(path_down),
        FaceWalk(path_up),
    ]
    traced = set(new_embedding.faces)
    for f in expected:
        if f not in traced:
            raise AssertionError(f"insertion produced unexpected face structure: {f}")
    return new_embedding, expected


def _splice(rotations: list[list[int]], v: int, before: int, after: int,
            inserted: Iterable[int]) -> None:
    ring = rotations[v]
    idx = ring.index(after)
    if ring[(idx - 1) % len(ring)] != before:
        raise InvalidFaceError(
            f"face is inconsistent with the rotation at vertex {v}")
    rotations[v] = ring[:idx] + list(inserted) + ring[idx:]
