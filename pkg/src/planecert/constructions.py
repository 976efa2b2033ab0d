"""Graph transformations: dual, radial, truncation, leapfrog, contraction.

All constructions are pure: they take immutable PlaneGraphs and return new
ones, plus provenance maps where downstream converters need to know where a
vertex/edge/face came from.
"""

from __future__ import annotations

from dataclasses import dataclass

from planecert.plane import (
    FacialTwoFactor,
    InputError,
    MultiGraph,
    PlaneGraph,
    StructureError,
    verify_facial_two_factor,
)


def faces_are_simple_cycles(g: PlaneGraph) -> bool:
    """Every face boundary a simple cycle: the working notion of
    2-connectedness for plane multigraphs (true for the digon)."""
    return all(
        len(set(g.face_vertices(f))) == g.face_len(f) and g.face_len(f) >= 2
        for f in range(len(g.faces))
    )


# -- dual ---------------------------------------------------------------------


@dataclass(frozen=True)
class DualMaps:
    """Correspondences for ``dual``: dual darts are the host's darts XORed
    with ``dart_shift`` (so twin pairs are preserved and the involution is
    exact)."""

    dart_shift: int

    def dart(self, d: int) -> int:
        return d ^ self.dart_shift

    def edge(self, e: int) -> int:
        return e ^ (self.dart_shift >> 1)


def dual_full(g: PlaneGraph) -> tuple[PlaneGraph, DualMaps]:
    """Dual graph plus dart correspondence.

    Dual vertex i is face i of ``g``; its rotation is the face boundary
    orbit.  Darts are relabelled by XOR with the least dart of the outer
    face boundary, which pins the dual's outer face to the face containing
    dart 0 (the vertex at the tail of that least dart) and makes the double
    dual reproduce the host, outer face included.
    """
    shift = min(g.faces[g.outer_face])
    rotations = [tuple(d ^ shift for d in boundary) for boundary in g.faces]
    dg = PlaneGraph(rotations, outer_face=0)
    dg = dg.with_outer_face(dg.face_of(0))
    return dg, DualMaps(shift)


def dual(g: PlaneGraph) -> PlaneGraph:
    return dual_full(g)[0]


def dual_face_of_vertex(g: PlaneGraph, dg: PlaneGraph, maps: DualMaps, v: int) -> int:
    """The face of the dual corresponding to host vertex ``v``."""
    return dg.face_of(maps.dart(g.rotations[v][0]))


# -- radial -------------------------------------------------------------------


def radial(g: PlaneGraph) -> PlaneGraph:
    """Vertex-face incidence graph with the induced plane embedding.

    Nodes 0..n-1 are the host vertices, node n+f is host face f.  The
    radial edge for host dart x joins tail(x) to face(x) and has edge id x,
    so provenance is positional.
    """
    if not faces_are_simple_cycles(g):
        raise InputError("radial graph requires 2-connected host (simple face boundaries)")
    n = g.n
    rotations: list[list[int]] = []
    for v in range(n):
        rotations.append([2 * x for x in g.rotations[v]])
    for boundary in g.faces:
        rotations.append([2 * x + 1 for x in reversed(boundary)])
    rg = PlaneGraph(rotations, outer_face=0)
    x0 = min(g.faces[g.outer_face])
    return rg.with_outer_face(rg.face_of(2 * x0 + 1))


@dataclass
class RadialSubgraph:
    """Restricted radial graph: the subgraph of the radial graph induced on
    a vertex set and a set of bounded faces, in abstract form."""

    vertex_nodes: tuple[int, ...]
    face_nodes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]  # (vertex, face) incidences

    @property
    def num_nodes(self) -> int:
        return len(self.vertex_nodes) + len(self.face_nodes)

    def is_tree(self) -> bool:
        if self.num_nodes == 0:
            return False
        if len(self.edges) != self.num_nodes - 1:
            return False
        index = {("v", v): i for i, v in enumerate(self.vertex_nodes)}
        for f in self.face_nodes:
            index[("f", f)] = len(index)
        parent = list(range(len(index)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for v, f in self.edges:
            a, b = find(index[("v", v)]), find(index[("f", f)])
            if a == b:
                return False
            parent[a] = b
        return True


def restricted_radial(h: PlaneGraph, u, t) -> RadialSubgraph:
    """R(U, T): incidences between vertices of ``u`` and bounded faces ``t``."""
    u = sorted(set(u))
    t = sorted(set(t))
    for v in u:
        if not 0 <= v < h.n:
            raise InputError(f"unknown vertex {v}")
    edges = []
    uset = set(u)
    for f in t:
        if not 0 <= f < len(h.faces):
            raise InputError(f"unknown face {f}")
        if f == h.outer_face:
            raise InputError("restricted radial graph excludes the outer face")
        for v in h.face_vertices(f):
            if v in uset:
                edges.append((v, f))
    return RadialSubgraph(tuple(u), tuple(t), tuple(edges))


# -- truncation ---------------------------------------------------------------


def truncate(g: PlaneGraph) -> PlaneGraph:
    """Replace every vertex by a cycle of its degree; the result is cubic.

    The corner vertex for host dart d keeps d as the dart of its surviving
    host edge, so old faces can be followed by dart id.
    """
    if any(g.degree(v) < 3 for v in range(g.n)):
        raise InputError("truncation requires minimum degree 3")
    m = g.num_edges
    t_index = [-1] * g.num_darts
    counter = 0
    for v in range(g.n):
        for d in g.rotations[v]:
            t_index[d] = counter
            counter += 1
    rotations: list[list[int]] = [[] for _ in range(counter)]
    next_edge = m
    cycle_dart_to = {}
    for v in range(g.n):
        rot = g.rotations[v]
        k = len(rot)
        for i in range(k):
            e = next_edge
            next_edge += 1
            cycle_dart_to[(v, i)] = 2 * e  # from corner i to corner i+1
    for v in range(g.n):
        rot = g.rotations[v]
        k = len(rot)
        for i, d in enumerate(rot):
            to_next = cycle_dart_to[(v, i)]
            to_prev = cycle_dart_to[(v, (i - 1) % k)] + 1
            rotations[t_index[d]] = [d, to_next, to_prev]
    tg = PlaneGraph(rotations, outer_face=0)
    d_min = min(g.faces[g.outer_face])
    return tg.with_outer_face(tg.face_of(d_min))


# -- leapfrog -----------------------------------------------------------------


def superpose_with_radial(g: PlaneGraph) -> PlaneGraph:
    """The host overlaid with its radial graph.

    Host edges keep their edge ids; the radial edge for host dart x gets
    edge id m+x.  Every face of the result is a triangle (corner of a host
    face), one per host dart.
    """
    if not faces_are_simple_cycles(g):
        raise InputError("superposition requires 2-connected host")
    n, m = g.n, g.num_edges
    rotations: list[list[int]] = []
    for v in range(n):
        rot = g.rotations[v]
        interleaved = []
        for i, d in enumerate(rot):
            interleaved.append(d)
            nxt = rot[(i + 1) % len(rot)]
            interleaved.append(2 * (m + nxt))
        rotations.append(interleaved)
    for boundary in g.faces:
        rotations.append([2 * (m + x) + 1 for x in reversed(boundary)])
    sg = PlaneGraph(rotations, outer_face=0)
    return sg.with_outer_face(sg.face_of(min(g.faces[g.outer_face])))


@dataclass(frozen=True)
class LeapfrogMaps:
    """Correspondences for the leapfrog extension of a host g.

    Faces of Lf(g) are indexed by the superposition's vertices: the face
    for host vertex v (a hexagon when g is cubic) and the face for host
    face f (an |f|-gon).  Edges of Lf(g) are the superposition's edges:
    one per host edge (shared between the two endpoint hexagons) and one
    per host dart.
    """

    face_of_vertex: tuple[int, ...]
    face_of_face: tuple[int, ...]
    edge_of_edge: tuple[int, ...]
    edge_of_dart: tuple[int, ...]
    host_face_of_lf_vertex: tuple[int, ...]

    def face_factor(self) -> FacialTwoFactor:
        """The facial 2-factor of Lf(g) given by the host-face faces."""
        return FacialTwoFactor(self.face_of_face)


def leapfrog_full(g: PlaneGraph) -> tuple[PlaneGraph, LeapfrogMaps]:
    """Leapfrog extension: the dual of the host overlaid with its radial.

    The outer face is the face corresponding to the tail of the least
    outer-boundary dart of the host (for cubic hosts, one of the hexagons)
    so that contracting the host-face 2-factor aligns with ``dual(g)``.
    """
    sup = superpose_with_radial(g)
    lf, dm = dual_full(sup)
    n, m = g.n, g.num_edges

    def face_for_sup_vertex(w: int) -> int:
        return lf.face_of(dm.dart(sup.rotations[w][0]))

    face_of_vertex = tuple(face_for_sup_vertex(v) for v in range(n))
    face_of_face = tuple(face_for_sup_vertex(n + f) for f in range(len(g.faces)))
    edge_of_edge = tuple(dm.edge(e) for e in range(m))
    edge_of_dart = tuple(dm.edge(m + x) for x in range(2 * m))
    # each Lf vertex is a corner region of exactly one host face
    host_face = []
    for boundary in sup.faces:
        fnode = next(sup.tail(d) for d in boundary if sup.tail(d) >= n)
        host_face.append(fnode - n)
    maps = LeapfrogMaps(
        face_of_vertex, face_of_face, edge_of_edge, edge_of_dart, tuple(host_face)
    )

    v0 = g.tail(min(g.faces[g.outer_face]))
    lf = lf.with_outer_face(maps.face_of_vertex[v0])
    return lf, maps


def leapfrog(g: PlaneGraph) -> PlaneGraph:
    return leapfrog_full(g)[0]


def hexagon_adjacency(g: PlaneGraph, lf: PlaneGraph, maps: LeapfrogMaps) -> MultiGraph:
    """Adjacency of the per-vertex faces of Lf(g) via shared edges; for
    cubic hosts this reproduces the host graph."""
    face_to_vertex = {f: v for v, f in enumerate(maps.face_of_vertex)}
    edges = []
    for e in range(lf.num_edges):
        fa = lf.face_of(2 * e)
        fb = lf.face_of(2 * e + 1)
        if fa in face_to_vertex and fb in face_to_vertex:
            edges.append((face_to_vertex[fa], face_to_vertex[fb]))
    return MultiGraph(g.n, edges)


# -- contraction of a facial 2-factor ----------------------------------------


@dataclass(frozen=True)
class ContractionMap:
    """Provenance for H = G/Q.

    ``vertex_origin[i]`` is the Q-face of G contracted to H-vertex i;
    ``edge_origin``/``dart_origin`` give the bijection between H-edges
    (darts) and the G-edges (darts) not on Q-faces; ``face_origin`` maps
    every H-face to the Q^c face of G it came from.
    """

    vertex_origin: tuple[int, ...]
    edge_origin: tuple[int, ...]
    dart_origin: tuple[int, ...]
    face_origin: tuple[int, ...]
    corner_edge: dict[int, int]
    """H-dart -> host edge of the contracted-face boundary arc swept between
    that dart and its rotation successor (defined when every boundary vertex
    keeps at least one edge, e.g. for cubic hosts)."""

    def vertex_of_qface(self, f: int) -> int:
        return self.vertex_origin.index(f)

    def edge_image(self) -> dict[int, int]:
        return {e: k for k, e in enumerate(self.edge_origin)}

    def face_image(self) -> dict[int, int]:
        return {f: k for k, f in enumerate(self.face_origin)}


def contract_factor(
    g: PlaneGraph, q: FacialTwoFactor
) -> tuple[PlaneGraph, ContractionMap]:
    """Contract each Q-face to a single vertex, keeping the cyclic order of
    the surviving edges, so the result is plane.

    The outer face of H is the image of the outer face of G when that face
    survives (outer in Q^c); otherwise the image of the least-id Q^c face.
    Parallel edges are kept; an edge joining two vertices of the same
    Q-face (which would contract to a loop) is rejected.
    """
    check = verify_facial_two_factor(g, q)
    if not check:
        raise InputError(f"invalid facial 2-factor: {check.reason}")
    qfaces = sorted(q.faces)
    vertex_of_face = {f: i for i, f in enumerate(qfaces)}
    qface_of_vertex = [-1] * g.n
    for f in qfaces:
        for v in g.face_vertices(f):
            qface_of_vertex[v] = f

    on_q = [False] * g.num_edges
    for f in qfaces:
        for e in g.face_edges(f):
            on_q[e] = True
    kept = [e for e in range(g.num_edges) if not on_q[e]]
    for e in kept:
        u, w = g.edge_endpoints(e)
        if qface_of_vertex[u] == qface_of_vertex[w]:
            raise InputError(
                f"edge {e} joins two vertices of Q-face {qface_of_vertex[u]}: "
                "contraction would create a loop"
            )
    new_dart = {}
    for k, e in enumerate(kept):
        new_dart[2 * e] = 2 * k
        new_dart[2 * e + 1] = 2 * k + 1

    rotations: list[list[int]] = [[] for _ in qfaces]
    corner_edge: dict[int, int] = {}
    for f in qfaces:
        boundary = g.faces[f]
        rot: list[int] = []
        groups: list[tuple[int, list[int]]] = []
        for p in reversed(boundary):
            x = g.next_in_face(p)  # leave-dart at this boundary vertex
            group: list[int] = []
            d = g.sigma(x)
            while d != (p ^ 1):
                group.append(new_dart[d])
                d = g.sigma(d)
            rot.extend(group)
            groups.append((p, group))
        rotations[vertex_of_face[f]] = rot
        if all(grp for _, grp in groups):
            # the rotation successor of each group's last dart belongs to the
            # next boundary vertex: the corner swept between them is edge p
            for p, grp in groups:
                corner_edge[grp[-1]] = p >> 1

    h = PlaneGraph(rotations, outer_face=0)

    dart_origin = [-1] * h.num_darts
    for old, new in new_dart.items():
        dart_origin[new] = old
    face_origin = []
    for boundary in h.faces:
        origins = {g.face_of(dart_origin[d]) for d in boundary}
        if len(origins) != 1:
            raise StructureError("contracted face does not match a single Q^c face")
        face_origin.append(origins.pop())
    if sorted(face_origin) != sorted(set(range(len(g.faces))) - set(qfaces)):
        raise StructureError("contracted faces do not biject with Q^c faces")

    cmap = ContractionMap(
        vertex_origin=tuple(qfaces),
        edge_origin=tuple(kept),
        dart_origin=tuple(dart_origin),
        face_origin=tuple(face_origin),
        corner_edge=corner_edge,
    )
    if g.outer_face not in q.faces:
        outer = face_origin.index(g.outer_face)
    else:
        outer = face_origin.index(min(set(range(len(g.faces))) - set(qfaces)))
    return h.with_outer_face(outer), cmap
