"""Connected plane multigraphs as rotation systems over darts.

A graph with m edges has darts 0..2m-1.  Darts 2e and 2e+1 are the two
directed sides of edge e, so ``twin(d) == d ^ 1`` and ``edge(d) == d >> 1``.
Every dart appears exactly once, at its tail vertex, in that vertex's
counterclockwise rotation.  Faces are the orbits of
``next = rotation_successor(twin(d))``: each face lies to the left of its
boundary darts and the boundary of a bounded face runs counterclockwise.

Parallel edges are first-class (digons occur deliberately in the gadget
constructions); loops are rejected.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class StructureError(ValueError):
    """A rotation system that does not describe a connected plane multigraph."""


class InputError(ValueError):
    """Arguments inconsistent with the graph they refer to."""


def twin(d: int) -> int:
    return d ^ 1


def edge_of(d: int) -> int:
    return d >> 1


@dataclass(frozen=True)
class CheckResult:
    """Boolean verdict plus a human-readable reason for the failing case."""

    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


class PlaneGraph:
    """Immutable connected plane multigraph given by counterclockwise rotations.

    ``rotations[v]`` is the cyclic sequence of darts with tail ``v``.  Faces
    are traced at construction time, in increasing order of their smallest
    dart, so face ids are deterministic.  ``outer_face`` is an explicit
    designation (the data model is spherical; the outer face is the single
    piece of plane-specific state).
    """

    __slots__ = (
        "n",
        "rotations",
        "outer_face",
        "_tail",
        "_rot_pos",
        "faces",
        "_face_of",
    )

    def __init__(self, rotations: Sequence[Sequence[int]], outer_face: int = 0):
        self.n = len(rotations)
        if self.n == 0:
            raise StructureError("graph must have at least one vertex")
        self.rotations = tuple(tuple(r) for r in rotations)

        num_darts = sum(len(r) for r in self.rotations)
        if num_darts % 2:
            raise StructureError("odd number of darts")
        tail = [-1] * num_darts
        rot_pos = [-1] * num_darts
        for v, rot in enumerate(self.rotations):
            for i, d in enumerate(rot):
                if not 0 <= d < num_darts:
                    raise StructureError(f"dart {d} out of range")
                if tail[d] != -1:
                    raise StructureError(f"dart {d} appears twice")
                tail[d] = v
                rot_pos[d] = i
        if -1 in tail:
            raise StructureError("dart missing from rotations")
        for d in range(0, num_darts, 2):
            if tail[d] == tail[d + 1]:
                raise StructureError(f"loop at vertex {tail[d]} (edge {d >> 1})")
        self._tail = tuple(tail)
        self._rot_pos = tuple(rot_pos)

        if num_darts and not self._connected():
            raise StructureError("graph is not connected")
        if num_darts == 0 and self.n > 1:
            raise StructureError("graph is not connected")

        self.faces = self._trace_faces()
        face_of = [-1] * num_darts
        for f, boundary in enumerate(self.faces):
            for d in boundary:
                face_of[d] = f
        self._face_of = tuple(face_of)

        if self.n - self.num_edges + len(self.faces) != 2:
            raise StructureError(
                "Euler formula violated: V-E+F = "
                f"{self.n}-{self.num_edges}+{len(self.faces)}"
            )
        if not 0 <= outer_face < len(self.faces):
            raise InputError(f"no face {outer_face}")
        self.outer_face = outer_face

    # -- basic accessors ---------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self._tail) // 2

    @property
    def num_darts(self) -> int:
        return len(self._tail)

    def tail(self, d: int) -> int:
        return self._tail[d]

    def head(self, d: int) -> int:
        return self._tail[d ^ 1]

    def sigma(self, d: int) -> int:
        """Next dart counterclockwise around the tail of ``d``."""
        rot = self.rotations[self._tail[d]]
        return rot[(self._rot_pos[d] + 1) % len(rot)]

    def sigma_inv(self, d: int) -> int:
        rot = self.rotations[self._tail[d]]
        return rot[(self._rot_pos[d] - 1) % len(rot)]

    def next_in_face(self, d: int) -> int:
        return self.sigma(d ^ 1)

    def face_of(self, d: int) -> int:
        return self._face_of[d]

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def degrees(self) -> list[int]:
        return [len(r) for r in self.rotations]

    def edge_endpoints(self, e: int) -> tuple[int, int]:
        return self._tail[2 * e], self._tail[2 * e + 1]

    def edges(self) -> list[tuple[int, int]]:
        return [self.edge_endpoints(e) for e in range(self.num_edges)]

    def face_len(self, f: int) -> int:
        return len(self.faces[f])

    def face_vertices(self, f: int) -> list[int]:
        return [self._tail[d] for d in self.faces[f]]

    def face_edges(self, f: int) -> list[int]:
        return [d >> 1 for d in self.faces[f]]

    def bounded_faces(self) -> list[int]:
        return [f for f in range(len(self.faces)) if f != self.outer_face]

    def dart_between(self, u: int, v: int) -> int:
        """First dart (by rotation position) with tail u and head v."""
        for d in self.rotations[u]:
            if self._tail[d ^ 1] == v:
                return d
        raise InputError(f"no edge between {u} and {v}")

    def is_cubic(self) -> bool:
        return all(len(r) == 3 for r in self.rotations)

    def is_eulerian(self) -> bool:
        return all(len(r) % 2 == 0 for r in self.rotations)

    def with_outer_face(self, f: int) -> "PlaneGraph":
        if f == self.outer_face:
            return self
        return PlaneGraph(self.rotations, outer_face=f)

    def simple_adjacency(self) -> list[set[int]]:
        """Neighbour sets with parallel edges collapsed."""
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for e in range(self.num_edges):
            u, w = self.edge_endpoints(e)
            adj[u].add(w)
            adj[w].add(u)
        return adj

    def mirror(self) -> "PlaneGraph":
        """Reflected embedding: all rotations reversed, outer face preserved."""
        rev = [tuple(reversed(r)) for r in self.rotations]
        g = PlaneGraph(rev, outer_face=0)
        d0 = self.faces[self.outer_face][0]
        return g.with_outer_face(g.face_of(d0 ^ 1))

    def __repr__(self) -> str:
        return (
            f"PlaneGraph(n={self.n}, m={self.num_edges}, "
            f"f={len(self.faces)}, outer={self.outer_face})"
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PlaneGraph)
            and self.rotations == other.rotations
            and self.outer_face == other.outer_face
        )

    def __hash__(self) -> int:
        return hash((self.rotations, self.outer_face))

    # -- construction helpers ---------------------------------------------

    @classmethod
    def from_neighbors(
        cls,
        neighbors: Sequence[Sequence[int]],
        outer_dart: Optional[tuple[int, int]] = None,
    ) -> "PlaneGraph":
        """Build from counterclockwise neighbour lists.

        Parallel edges are disambiguated by list position: for u < v the k-th
        occurrence of v in u's list pairs with the (count-1-k)-th occurrence
        of u in v's list (the orders reverse, as nested parallel edges do in
        the plane).  ``outer_dart`` designates the outer face as the face
        containing the dart at (vertex, rotation position); default (0, 0).
        """
        n = len(neighbors)
        occ_count: dict[tuple[int, int], int] = {}
        for u, nbrs in enumerate(neighbors):
            for v in nbrs:
                if not 0 <= v < n:
                    raise StructureError(f"neighbour {v} out of range")
                if v == u:
                    raise StructureError(f"loop at vertex {u}")
                occ_count[(u, v)] = occ_count.get((u, v), 0) + 1
        for (u, v), c in occ_count.items():
            if occ_count.get((v, u), 0) != c:
                raise StructureError(f"edge {u}-{v} not symmetric")

        rotations: list[list[int]] = [[-1] * len(nbrs) for nbrs in neighbors]
        # dart id assignment: edges numbered in scan order of (u, position)
        dart_at: dict[tuple[int, int, int], int] = {}  # (u, v, occurrence) -> dart
        next_edge = 0
        seen_occ: dict[tuple[int, int], int] = {}
        for u, nbrs in enumerate(neighbors):
            for i, v in enumerate(nbrs):
                k = seen_occ.get((u, v), 0)
                seen_occ[(u, v)] = k + 1
                if u < v:
                    d = 2 * next_edge
                    next_edge += 1
                    dart_at[(u, v, k)] = d
                    rotations[u][i] = d
                else:
                    m = occ_count[(u, v)]
                    d = dart_at[(v, u, m - 1 - k)] ^ 1
                    rotations[u][i] = d
        g = cls(rotations, outer_face=0)
        if outer_dart is None:
            outer_dart = (0, 0)
        ov, oi = outer_dart
        if not (0 <= ov < n and 0 <= oi < len(g.rotations[ov])):
            raise InputError(f"no dart at vertex {ov} position {oi}")
        return g.with_outer_face(g.face_of(g.rotations[ov][oi]))

    # -- internals ----------------------------------------------------------

    def _connected(self) -> bool:
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            v = queue.popleft()
            for d in self.rotations[v]:
                w = self._tail[d ^ 1]
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    queue.append(w)
        return count == self.n

    def _trace_faces(self) -> tuple[tuple[int, ...], ...]:
        if self.num_darts == 0:
            return ((),)  # single vertex on the sphere: one face
        assigned = [False] * self.num_darts
        faces = []
        for d0 in range(self.num_darts):
            if assigned[d0]:
                continue
            boundary = []
            d = d0
            while True:
                boundary.append(d)
                assigned[d] = True
                d = self.sigma(d ^ 1)
                if d == d0:
                    break
                if assigned[d]:
                    raise StructureError("face tracing revisited a dart")
            faces.append(tuple(boundary))
        return tuple(faces)


# -- face tracing as a standalone operation (deterministic) -----------------


def trace_faces(g: PlaneGraph) -> tuple[tuple[int, ...], ...]:
    """All face boundaries of ``g``, each a dart orbit, in trace order."""
    return g.faces


# -- facial 2-factors --------------------------------------------------------


@dataclass(frozen=True)
class FacialTwoFactor:
    """A set of face ids whose boundaries form a 2-factor of the host."""

    faces: frozenset[int]

    def __init__(self, faces: Iterable[int]):
        object.__setattr__(self, "faces", frozenset(faces))

    def complement(self, g: PlaneGraph) -> frozenset[int]:
        return frozenset(range(len(g.faces))) - self.faces


def face_is_simple_cycle(g: PlaneGraph, f: int) -> bool:
    verts = g.face_vertices(f)
    return len(verts) >= 2 and len(set(verts)) == len(verts)


def verify_facial_two_factor(g: PlaneGraph, q: FacialTwoFactor) -> CheckResult:
    """Each chosen boundary a simple cycle, every vertex on exactly one."""
    cover = [0] * g.n
    for f in q.faces:
        if not 0 <= f < len(g.faces):
            raise InputError(f"unknown face id {f}")
        if not face_is_simple_cycle(g, f):
            return CheckResult(False, f"face {f} boundary is not a simple cycle")
        for v in g.face_vertices(f):
            cover[v] += 1
    for v, c in enumerate(cover):
        if c != 1:
            return CheckResult(False, f"vertex {v} lies on {c} chosen faces")
    return CheckResult(True)


# -- connectivity and bipartition --------------------------------------------


def _connected_after_removal(adj: list[set[int]], removed: set[int]) -> bool:
    remaining = [v for v in range(len(adj)) if v not in removed]
    if not remaining:
        return True
    seen = {remaining[0]}
    queue = deque([remaining[0]])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in removed and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(remaining)


def _simple_adjacency(g) -> list[set[int]]:
    if isinstance(g, PlaneGraph):
        return g.simple_adjacency()
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edge_list:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def connectivity(g) -> int:
    """Exact vertex connectivity of the underlying simple graph.

    Exhaustive cut enumeration with early termination; intended for graphs
    of desk scale (a few dozen vertices).  Accepts plane or abstract graphs.
    """
    adj = _simple_adjacency(g)
    n = g.n
    if n == 1:
        return 0
    if all(len(a) == n - 1 for a in adj):
        return n - 1
    for k in range(0, n - 1):
        for cut in itertools.combinations(range(n), k):
            if not _connected_after_removal(adj, set(cut)):
                return k
    return n - 1


def is_bipartite(g) -> Optional[tuple[set[int], set[int]]]:
    """BFS 2-colouring; returns the bipartition or None.

    Accepts plane or abstract graphs; disconnected abstract graphs are
    layered component by component.
    """
    adj = _simple_adjacency(g)
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return (
        {v for v in range(g.n) if color[v] == 0},
        {v for v in range(g.n) if color[v] == 1},
    )


# -- isomorphism of embedded graphs ------------------------------------------


def _canonical_code(g: PlaneGraph, root: int) -> tuple:
    """Canonical relabelling code of the map rooted at dart ``root``.

    Vertices are labelled in discovery order; each vertex's rotation is read
    from its entry dart, and darts are numbered in reading order.  The code
    (degree sequence plus twin-number sequence) determines the rooted map.
    """
    num = {}
    entry = {g.tail(root): root}
    order = [g.tail(root)]
    seen = {g.tail(root)}
    queue = deque([g.tail(root)])
    while queue:
        v = queue.popleft()
        rot = g.rotations[v]
        pos = g._rot_pos[entry[v]]
        k = len(rot)
        for i in range(k):
            d = rot[(pos + i) % k]
            num[d] = len(num)
            w = g.head(d)
            if w not in seen:
                seen.add(w)
                entry[w] = d ^ 1
                order.append(w)
                queue.append(w)
    degs = tuple(g.degree(v) for v in order)
    by_num = sorted(num, key=num.get)
    twins = tuple(num[d ^ 1] for d in by_num)
    return (g.n, degs, twins)


def _min_code(g: PlaneGraph) -> tuple:
    best = None
    for h in (g, g.mirror()):
        for root in h.faces[h.outer_face]:
            code = _canonical_code(h, root)
            if best is None or code < best:
                best = code
    return best


def same_graph(g1: PlaneGraph, g2: PlaneGraph) -> bool:
    """Isomorphism of embedded graphs.

    True iff some isomorphism maps rotations to rotations (up to a global
    reflection) and the outer face to the outer face.
    """
    if (
        g1.n != g2.n
        or g1.num_edges != g2.num_edges
        or sorted(g1.degrees()) != sorted(g2.degrees())
        or sorted(map(len, g1.faces)) != sorted(map(len, g2.faces))
        or g1.face_len(g1.outer_face) != g2.face_len(g2.outer_face)
    ):
        return False
    return _min_code(g1) == _min_code(g2)


# -- abstract multigraphs -----------------------------------------------------


@dataclass
class MultiGraph:
    """Abstract multigraph: numbered vertices, edges as endpoint pairs."""

    n: int
    edge_list: list[tuple[int, int]] = field(default_factory=list)

    def add_edge(self, u: int, v: int) -> int:
        self.edge_list.append((u, v))
        return len(self.edge_list) - 1

    @property
    def num_edges(self) -> int:
        return len(self.edge_list)

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of (neighbour, edge id)."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edge_list):
            adj[u].append((v, e))
            adj[v].append((u, e))
        return adj

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj = self.adjacency()
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w, _ in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n


def as_multigraph(g) -> MultiGraph:
    """View a PlaneGraph (or a MultiGraph) as an abstract multigraph."""
    if isinstance(g, MultiGraph):
        return g
    return MultiGraph(g.n, g.edges())
