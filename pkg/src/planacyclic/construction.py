"""Recursive construction of extremal planar oriented graphs.

For parameters ``digirth g >= 3`` and ``feedback_size f >= 1`` the family
built here has order ``f(g-1)+1``, digirth exactly ``g``, a minimum feedback
vertex set of size exactly ``f``, and hence a maximum acyclic set of size
``f(g-2)+1``. Each instance carries a designated vertex pair on a designated
face that no minimum feedback vertex set contains simultaneously; that pair
is where the next recursion level attaches.

Every instance returned is a *certificate*: the claims are stored alongside
the graph and embedding but are meant to be re-verified by the exact solvers,
never trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import FaceWalk, PlaneEmbedding, euler_characteristic, insert_path_in_face
from .errors import InvalidParameterError
from .graphs import OrientedGraph


@dataclass(frozen=True)
class ConstructionCertificate:
    """A constructed graph bundled with its embedding, parameters, and claims."""

    digraph: OrientedGraph
    embedding: PlaneEmbedding
    x: int
    y: int
    face: FaceWalk
    digirth: int
    feedback_size: int

    @property
    def claimed_order(self) -> int:
        return self.feedback_size * (self.digirth - 1) + 1

    @property
    def claimed_min_fvs(self) -> int:
        return self.feedback_size

    @property
    def claimed_max_acyclic(self) -> int:
        return self.feedback_size * (self.digirth - 2) + 1

    def level_of(self, vertex: int) -> int:
        """Recursion level that introduced ``vertex``: 1 for the base cycle,
        2..f for the inserted paths."""
        g = self.digirth
        if not 0 <= vertex < self.digraph.n:
            raise InvalidParameterError(f"vertex {vertex} out of range")
        return 1 if vertex < g else 2 + (vertex - g) // (g - 1)


def construct(digirth: int, feedback_size: int) -> ConstructionCertificate:
    """Build the extremal instance for the given digirth and feedback size.

    Level 1 is a directed cycle of order ``digirth`` with designated pair
    (0, 1). Each further level inserts a directed path of ``digirth - 1``
    fresh vertices into the designated face, wires it to the designated pair
    with arcs ``x->s_1``, ``y->s_1``, ``s_last->x``, ``s_last->y`` (creating
    two new shortest cycles through the path), and designates the pair
    ``(s_1, s_2)`` on the freshly traced path face. The Euler characteristic
    is asserted to stay 2 after every step.
    """
    g, f = digirth, feedback_size
    if g < 3:
        raise InvalidParameterError(f"digirth must be >= 3, got {g}")
    if f < 1:
        raise InvalidParameterError(f"feedback size must be >= 1, got {f}")

    arcs = [(i, (i + 1) % g) for i in range(g)]
    rotations = [((v + 1) % g, (v - 1) % g) for v in range(g)]
    embedding = PlaneEmbedding(rotations)
    x, y = 0, 1
    face = embedding.faces[0]
    if x not in face or y not in face:  # both cycle faces contain every vertex
        raise AssertionError("base cycle face misses the designated pair")

    for _ in range(f - 1):
        first = embedding.n
        embedding, new_faces = insert_path_in_face(embedding, face, x, y, g - 1)
        path = list(range(first, first + g - 1))
        arcs.extend(zip(path, path[1:]))
        arcs.extend([(x, path[0]), (y, path[0]), (path[-1], x), (path[-1], y)])
        if euler_characteristic(embedding) != 2:
            raise AssertionError("construction step broke planarity")
        face = new_faces[2]  # the x - s_1 - ... - s_last face
        x, y = path[0], path[1]
        if x not in face or y not in face:
            raise AssertionError("new designated pair not on the designated face")

    if euler_characteristic(embedding) != 2:
        raise AssertionError("construction broke planarity")
    return ConstructionCertificate(
        digraph=OrientedGraph(embedding.n, arcs),
        embedding=embedding,
        x=x,
        y=y,
        face=face,
        digirth=g,
        feedback_size=f,
    )


def theorem_bound(n: int, g: int) -> int:
    """Upper bound ceil((n(g-2)+1)/(g-1)) on the maximum acyclic set size
    over planar oriented graphs of order n and digirth g, in exact integer
    arithmetic."""
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    if g < 3:
        raise InvalidParameterError(f"digirth must be >= 3, got {g}")
    return -(-(n * (g - 2) + 1) // (g - 1))


def pad_to_order(certificate: ConstructionCertificate, n_target: int) -> OrientedGraph:
    """Extend a constructed instance to any larger order with isolated vertices.

    Each added vertex is trivially acyclic on its own, so the maximum acyclic
    set grows by exactly the padding amount while digirth and planarity are
    preserved; this realizes the bound at orders between construction sizes.
    """
    if n_target < certificate.claimed_order:
        raise InvalidParameterError(
            f"target order {n_target} below constructed order {certificate.claimed_order}")
    return OrientedGraph(n_target, certificate.digraph.arcs)
