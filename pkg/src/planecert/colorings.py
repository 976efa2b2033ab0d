"""Face colorings: the unique 2-face-coloring of plane eulerian graphs and
3-face-colorings of cubic planar bipartite graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from planecert.plane import (
    FacialTwoFactor,
    InputError,
    PlaneGraph,
    StructureError,
    is_bipartite,
)


@dataclass(frozen=True)
class FaceColoring:
    """A proper face coloring: ``colors[f]`` is the color of face f."""

    colors: tuple[int, ...]
    palette: int

    def color_of(self, f: int) -> int:
        return self.colors[f]

    def color_class(self, c: int) -> tuple[int, ...]:
        return tuple(f for f, col in enumerate(self.colors) if col == c)

    def classes(self, g: PlaneGraph) -> list[tuple[int, ...]]:
        """Color classes, sorted by face ids, with the outer face's class
        reported last."""
        outer_color = self.colors[g.outer_face]
        order = sorted(c for c in range(1, self.palette + 1) if c != outer_color)
        return [self.color_class(c) for c in order + [outer_color]]


def face_adjacency(g: PlaneGraph) -> list[set[int]]:
    """Faces sharing at least one edge."""
    adj: list[set[int]] = [set() for _ in g.faces]
    for e in range(g.num_edges):
        fa, fb = g.face_of(2 * e), g.face_of(2 * e + 1)
        if fa != fb:
            adj[fa].add(fb)
            adj[fb].add(fa)
    return adj


def check_proper(g: PlaneGraph, coloring: FaceColoring) -> bool:
    for e in range(g.num_edges):
        if coloring.colors[g.face_of(2 * e)] == coloring.colors[g.face_of(2 * e + 1)]:
            return False
    return all(c >= 1 for c in coloring.colors)


def face_2_coloring(h: PlaneGraph) -> FaceColoring:
    """The proper 2-face-coloring of a plane eulerian graph, outer face 1.

    Exists and is unique for connected eulerian plane graphs; layering the
    face-adjacency graph from the outer face realises it.
    """
    odd = [v for v in range(h.n) if h.degree(v) % 2]
    if odd:
        raise InputError(f"host is not eulerian: odd degree at vertex {odd[0]}")
    colors = [0] * len(h.faces)
    colors[h.outer_face] = 1
    queue = deque([h.outer_face])
    adj = face_adjacency(h)
    while queue:
        f = queue.popleft()
        for f2 in adj[f]:
            if colors[f2] == 0:
                colors[f2] = 3 - colors[f]
                queue.append(f2)
            elif colors[f2] == colors[f]:
                raise StructureError("eulerian plane graph failed to 2-face-color")
    return FaceColoring(tuple(colors), 2)


def face_3_coloring(g: PlaneGraph, outer_color: int = 3) -> FaceColoring:
    """Proper 3-face-coloring of a cubic planar bipartite graph with the
    requested color on the outer face.

    Equivalent to properly 3-coloring the vertices of the dual eulerian
    triangulation; found by most-constrained-first backtracking.
    """
    if not g.is_cubic():
        raise InputError("3-face-coloring requires a cubic host")
    if is_bipartite(g) is None:
        raise InputError("3-face-coloring requires a bipartite host")
    if outer_color not in (1, 2, 3):
        raise InputError(f"outer color {outer_color} not in palette 1..3")

    adj = face_adjacency(g)
    nf = len(g.faces)
    colors = [0] * nf
    colors[g.outer_face] = outer_color

    def pick() -> int:
        best, best_key = -1, None
        for f in range(nf):
            if colors[f]:
                continue
            used = {colors[f2] for f2 in adj[f] if colors[f2]}
            key = (-len(used), f)
            if best_key is None or key < best_key:
                best, best_key = f, key
        return best

    def solve() -> bool:
        f = pick()
        if f == -1:
            return True
        used = {colors[f2] for f2 in adj[f] if colors[f2]}
        for c in (1, 2, 3):
            if c not in used:
                colors[f] = c
                if solve():
                    return True
                colors[f] = 0
        return False

    if not solve():
        raise StructureError("no proper 3-face-coloring found for valid input")
    coloring = FaceColoring(tuple(colors), 3)

    for v in range(g.n):
        incident = {colors[g.face_of(d)] for d in g.rotations[v]} | {
            colors[g.face_of(d ^ 1)] for d in g.rotations[v]
        }
        if incident != {1, 2, 3}:
            raise StructureError(f"vertex {v} not incident to all three colors")
    return coloring


def color_class_factor(g: PlaneGraph, coloring: FaceColoring, c: int) -> FacialTwoFactor:
    """The faces of color c, as a facial 2-factor candidate."""
    return FacialTwoFactor(coloring.color_class(c))
