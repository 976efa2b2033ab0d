"""Hand-embedded fixture graphs used by tests, pipelines and the CLI.

Rotations were read off planar drawings; every constructor goes through
PlaneGraph validation (connectivity, Euler formula), so a bad rotation
cannot survive silently.
"""

from __future__ import annotations

from planecert.plane import MultiGraph, PlaneGraph


def prism(k: int) -> PlaneGraph:
    """k-gonal prism: outer cycle 0..k-1, inner cycle k..2k-1, spokes i-(i+k)."""
    if k < 3:
        raise ValueError("prism needs k >= 3")
    neighbors: list[list[int]] = []
    for i in range(k):
        neighbors.append([(i + 1) % k, i + k, (i - 1) % k])
    for i in range(k):
        neighbors.append([k + (i + 1) % k, k + (i - 1) % k, i])
    g = PlaneGraph.from_neighbors(neighbors)
    return g.with_outer_face(g.face_of(g.dart_between(0, 1)))


def cube() -> PlaneGraph:
    return prism(4)


def hexagonal_prism() -> PlaneGraph:
    return prism(6)


def triangular_prism() -> PlaneGraph:
    return prism(3)


def k4() -> PlaneGraph:
    """Tetrahedron: outer triangle 0,1,2 (counterclockwise), centre 3."""
    g = PlaneGraph.from_neighbors([[1, 3, 2], [2, 3, 0], [0, 3, 1], [2, 0, 1]])
    return g.with_outer_face(g.face_of(g.dart_between(0, 1)))


tetrahedron = k4


def octahedron() -> PlaneGraph:
    """Triangular antiprism: outer triangle 0,1,2, inner triangle 3,4,5."""
    g = PlaneGraph.from_neighbors(
        [
            [1, 4, 3, 2],
            [2, 5, 4, 0],
            [0, 3, 5, 1],
            [5, 2, 0, 4],
            [5, 3, 0, 1],
            [2, 3, 4, 1],
        ]
    )
    return g.with_outer_face(g.face_of(g.dart_between(0, 1)))


def digon() -> PlaneGraph:
    return PlaneGraph.from_neighbors([[1, 1], [0, 0]])


def theta() -> PlaneGraph:
    """Two vertices joined by three parallel edges."""
    return PlaneGraph.from_neighbors([[1, 1, 1], [0, 0, 0]])


def cycle(k: int) -> PlaneGraph:
    if k == 2:
        return digon()
    neighbors = [[(i + 1) % k, (i - 1) % k] for i in range(k)]
    g = PlaneGraph.from_neighbors(neighbors)
    return g.with_outer_face(g.face_of(g.dart_between(0, 1)))


def square() -> PlaneGraph:
    return cycle(4)


def path3() -> PlaneGraph:
    return PlaneGraph.from_neighbors([[1], [0, 2], [1]])


def star_k13() -> PlaneGraph:
    return PlaneGraph.from_neighbors([[1, 2, 3], [0], [0], [0]])


def bowtie() -> PlaneGraph:
    """Two triangles sharing vertex 0."""
    g = PlaneGraph.from_neighbors([[3, 1, 2, 4], [2, 0], [0, 1], [0, 4], [3, 0]])
    return g.with_outer_face(g.face_of(g.dart_between(1, 2)))


def petersen() -> MultiGraph:
    """Petersen graph (not planar; abstract form for the cycle solvers)."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((i + 5, (i + 2) % 5 + 5))
    return MultiGraph(10, edges)


def named_fixtures() -> dict[str, PlaneGraph]:
    """The standard structural fixture set."""
    return {
        "k4": k4(),
        "cube": cube(),
        "octahedron": octahedron(),
        "hexagonal_prism": hexagonal_prism(),
        "triangular_prism": triangular_prism(),
        "theta": theta(),
        "digon": digon(),
    }
