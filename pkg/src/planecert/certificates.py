"""Certificate types and exact solvers.

Hamiltonian cycles/paths with edge constraints, A-trails, (quasi) spanning
trees of faces, and the spanning-tree-parity solver.  Every certificate
type has an independent validator that re-checks the defining conditions
without reusing the search code.

All searches are deterministic: candidates are explored lowest-id first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from planecert.plane import (
    CheckResult,
    InputError,
    MultiGraph,
    PlaneGraph,
    StructureError,
    as_multigraph,
)
from planecert.constructions import faces_are_simple_cycles, restricted_radial
from planecert.colorings import FaceColoring

INSIDE = "inside"
OUTSIDE = "outside"


class CertificateError(ValueError):
    """A certificate failed validation against its host."""


# ---------------------------------------------------------------------------
# hamiltonian cycles and paths
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HamiltonianCycle:
    """Cyclic edge sequence visiting every vertex exactly once.

    ``edge_seq[i]`` joins ``vertex_seq[i]`` to ``vertex_seq[i+1]`` (cyclically).
    """

    host: object  # PlaneGraph or MultiGraph
    edge_seq: tuple[int, ...]
    vertex_seq: tuple[int, ...]

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_seq)

    def side_map(self) -> dict[int, str]:
        """Face id -> inside/outside; host must be a PlaneGraph."""
        if not isinstance(self.host, PlaneGraph):
            raise InputError("side map requires a plane host")
        return cycle_side_map(self.host, self.edge_set)


def cycle_side_map(g: PlaneGraph, cycle_edges: frozenset[int]) -> dict[int, str]:
    """Partition the faces into the two open domains of a cycle.

    Faces across a cycle edge lie on opposite sides; across any other edge
    on the same side; the outer face is outside.  Inconsistency certifies
    that the edge set is not a simple closed curve in the embedding.
    """
    side = {g.outer_face: OUTSIDE}
    stack = [g.outer_face]
    while stack:
        f = stack.pop()
        for d in g.faces[f]:
            f2 = g.face_of(d ^ 1)
            expected = side[f]
            if (d >> 1) in cycle_edges:
                expected = INSIDE if expected == OUTSIDE else OUTSIDE
            if f2 not in side:
                side[f2] = expected
                stack.append(f2)
            elif side[f2] != expected:
                raise CertificateError(
                    "edge set does not bound two consistent domains "
                    f"(conflict at face {f2})"
                )
    return side


def validate_hamiltonian_cycle(
    hc: HamiltonianCycle,
    forced: Sequence[int] = (),
    forbidden: Sequence[int] = (),
) -> CheckResult:
    g = as_multigraph(hc.host)
    n = g.n
    if n < 2 or len(hc.edge_seq) != n or len(hc.vertex_seq) != n:
        return CheckResult(False, "length mismatch")
    if sorted(hc.vertex_seq) != list(range(n)):
        return CheckResult(False, "vertices not visited exactly once")
    if len(set(hc.edge_seq)) != n:
        return CheckResult(False, "repeated edge")
    for i, e in enumerate(hc.edge_seq):
        u, v = hc.vertex_seq[i], hc.vertex_seq[(i + 1) % n]
        if set(g.edge_list[e]) != {u, v}:
            return CheckResult(False, f"edge {e} does not join {u},{v}")
    if set(forced) - set(hc.edge_seq):
        return CheckResult(False, "missing forced edge")
    if set(forbidden) & set(hc.edge_seq):
        return CheckResult(False, "contains forbidden edge")
    if isinstance(hc.host, PlaneGraph):
        try:
            hc.side_map()
        except CertificateError as ex:
            return CheckResult(False, str(ex))
    return CheckResult(True)


def _ham_dfs(
    graph: MultiGraph,
    start: int,
    target: Optional[int],
    forced: frozenset[int],
    forbidden: frozenset[int],
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Yield hamiltonian cycles (target None) or start-target paths.

    Cycles are yielded once per undirected traversal (first edge id below
    last edge id); paths once each, oriented from start.
    """
    n = graph.n
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(graph.edge_list):
        if e in forbidden:
            continue
        adj[u].append((v, e))
        adj[v].append((u, e))
    for lst in adj:
        lst.sort(key=lambda p: p[1])

    forced_at: list[list[int]] = [[] for _ in range(n)]
    for e in forced:
        u, v = graph.edge_list[e]
        forced_at[u].append(e)
        forced_at[v].append(e)
    for v in range(n):
        cap = 2 if target is None or v not in (start, target) else 1
        if len(forced_at[v]) > cap:
            return

    visited = [False] * n
    visited[start] = True
    used = [False] * graph.num_edges
    vseq = [start]
    eseq: list[int] = []

    closing_ok = target if target is not None else start

    def degree_prune(current: int) -> bool:
        for w in range(n):
            if visited[w]:
                continue
            avail = 0
            for x, e in adj[w]:
                if used[e]:
                    continue
                if not visited[x] or x == current or x == closing_ok:
                    avail += 1
                    if avail >= 2:
                        break
            if avail < 2:
                if not (target is not None and w == target and avail >= 1):
                    return False
        return True

    def candidates(v: int) -> list[tuple[int, int]]:
        pending = [e for e in forced_at[v] if not used[e]]
        if pending:
            out = []
            for e in sorted(pending):
                u, w = graph.edge_list[e]
                out.append((w if u == v else u, e))
            return out
        return adj[v]

    def dfs(current: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        if len(vseq) == n:
            if target is None:
                for w, e in candidates(current):
                    if w == start and not used[e]:
                        if all(used[x] or x == e for x in forced):
                            if eseq[0] < e:
                                yield tuple(eseq) + (e,), tuple(vseq)
            else:
                if current == target and all(used[x] for x in forced):
                    yield tuple(eseq), tuple(vseq)
            return
        if not degree_prune(current):
            return
        for w, e in candidates(current):
            if used[e] or visited[w]:
                continue
            if target is not None and w == target and len(vseq) != n - 1:
                continue
            visited[w] = True
            used[e] = True
            vseq.append(w)
            eseq.append(e)
            yield from dfs(w)
            visited[w] = False
            used[e] = False
            vseq.pop()
            eseq.pop()

    if target is not None and len(vseq) == n:
        # single-vertex path
        if start == target:
            yield (), (start,)
        return
    yield from dfs(start)


def enumerate_hamiltonian_cycles(
    g, forced: Sequence[int] = (), forbidden: Sequence[int] = ()
) -> Iterator[HamiltonianCycle]:
    graph = as_multigraph(g)
    if graph.n < 2:
        return
    fset, bset = frozenset(forced), frozenset(forbidden)
    if fset & bset:
        raise InputError("forced and forbidden edges overlap")
    for eseq, vseq in _ham_dfs(graph, 0, None, fset, bset):
        yield HamiltonianCycle(g, eseq, vseq)


def find_hamiltonian_cycle(
    g, forced: Sequence[int] = (), forbidden: Sequence[int] = ()
) -> Optional[HamiltonianCycle]:
    """First hamiltonian cycle through all forced and no forbidden edges,
    or None once the backtracking search exhausts."""
    return next(enumerate_hamiltonian_cycles(g, forced, forbidden), None)


def enumerate_hamiltonian_paths(g, u: int, v: int) -> Iterator[HamiltonianPath]:
    graph = as_multigraph(g)
    if u == v:
        raise InputError("path endpoints must differ")
    for eseq, vseq in _ham_dfs(graph, u, v, frozenset(), frozenset()):
        yield HamiltonianPath(g, eseq, vseq)


def find_hamiltonian_path(g, u: int, v: int) -> Optional[HamiltonianPath]:
    """Hamiltonian u-v path or verified nonexistence."""
    return next(enumerate_hamiltonian_paths(g, u, v), None)


@dataclass(frozen=True)
class HamiltonianPath:
    host: object
    edge_seq: tuple[int, ...]
    vertex_seq: tuple[int, ...]

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_seq)


def validate_hamiltonian_path(hp: HamiltonianPath, u: int, v: int) -> CheckResult:
    g = as_multigraph(hp.host)
    n = g.n
    if len(hp.vertex_seq) != n or sorted(hp.vertex_seq) != list(range(n)):
        return CheckResult(False, "vertices not visited exactly once")
    if len(hp.edge_seq) != n - 1 or len(set(hp.edge_seq)) != n - 1:
        return CheckResult(False, "edge count wrong")
    if hp.vertex_seq[0] != u or hp.vertex_seq[-1] != v:
        return CheckResult(False, "wrong endpoints")
    for i, e in enumerate(hp.edge_seq):
        if set(g.edge_list[e]) != {hp.vertex_seq[i], hp.vertex_seq[i + 1]}:
            return CheckResult(False, f"edge {e} out of place")
    return CheckResult(True)


# ---------------------------------------------------------------------------
# A-trails
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ATrail:
    """Closed eulerian dart sequence whose transitions respect the rotation.

    ``darts[i]`` is traversed tail to head; the head of each dart is the
    tail of the next (cyclically).
    """

    host: PlaneGraph
    darts: tuple[int, ...]

    @property
    def edge_seq(self) -> tuple[int, ...]:
        return tuple(d >> 1 for d in self.darts)

    def canonical(self) -> tuple[int, ...]:
        """Invariant form: least rotation over both traversal directions."""
        seqs = []
        m = len(self.darts)
        for seq in (self.darts, tuple((d ^ 1) for d in reversed(self.darts))):
            for i in range(m):
                seqs.append(seq[i:] + seq[:i])
        return min(seqs)


def _transition_adjacent(g: PlaneGraph, d_in: int, d_out: int) -> bool:
    x = d_in ^ 1
    return g.sigma(x) == d_out or g.sigma_inv(x) == d_out


def validate_a_trail(trail: ATrail) -> CheckResult:
    g = trail.host
    darts = trail.darts
    if not g.is_eulerian():
        return CheckResult(False, "host is not eulerian")
    if len(darts) != g.num_edges:
        return CheckResult(False, "trail does not use every edge once")
    if len({d >> 1 for d in darts}) != g.num_edges:
        return CheckResult(False, "repeated edge")
    m = len(darts)
    for i in range(m):
        d, nxt = darts[i], darts[(i + 1) % m]
        if g.head(d) != g.tail(nxt):
            return CheckResult(False, f"darts {d},{nxt} not consecutive")
        if not _transition_adjacent(g, d, nxt):
            return CheckResult(
                False,
                f"transition {d}->{nxt} not adjacent in rotation at {g.head(d)}",
            )
    return CheckResult(True)


def transition_face(g: PlaneGraph, d_in: int, d_out: int) -> int:
    """The face whose corner the trail pinches between two consecutive darts."""
    x = d_in ^ 1
    if g.sigma(x) == d_out:
        return g.face_of(d_out)
    if g.sigma_inv(x) == d_out:
        return g.face_of(x)
    raise InputError(f"{d_in}->{d_out} is not an A-trail transition")


def _a_trail_dfs(g: PlaneGraph, non_separating: bool) -> Iterator[ATrail]:
    m = g.num_edges
    used = [False] * m
    seq = [0]
    used[0] = True

    face_edge_sets = None
    if non_separating:
        face_edge_sets = [frozenset(g.face_edges(f)) for f in range(len(g.faces))]

    def passes_non_separating(darts: tuple[int, ...]) -> bool:
        satisfied = [False] * len(g.faces)
        mm = len(darts)
        for i in range(mm):
            d, nxt = darts[i], darts[(i + 1) % mm]
            e1, e2 = d >> 1, nxt >> 1
            for f in {g.face_of(d), g.face_of(d ^ 1), g.face_of(nxt), g.face_of(nxt ^ 1)}:
                if not satisfied[f] and e1 in face_edge_sets[f] and e2 in face_edge_sets[f]:
                    satisfied[f] = True
        return all(satisfied)

    def dfs(last: int) -> Iterator[ATrail]:
        if len(seq) == m:
            if _transition_adjacent(g, last, seq[0]) and g.head(last) == g.tail(seq[0]):
                trail = ATrail(g, tuple(seq))
                if not non_separating or passes_non_separating(trail.darts):
                    yield trail
            return
        x = last ^ 1
        cands = []
        for d in (g.sigma(x), g.sigma_inv(x)):
            if not used[d >> 1] and d not in cands:
                cands.append(d)
        for d in sorted(cands):
            used[d >> 1] = True
            seq.append(d)
            yield from dfs(d)
            seq.pop()
            used[d >> 1] = False

    yield from dfs(0)


def enumerate_a_trails(
    h: PlaneGraph, require_non_separating: bool = False, limit: Optional[int] = None
) -> Iterator[ATrail]:
    """Distinct A-trails (each undirected trail once, oriented so edge 0 is
    traversed as dart 0)."""
    if not h.is_eulerian():
        raise InputError("A-trail host must be eulerian")
    if require_non_separating and any(len(f) != 3 for f in h.faces):
        raise InputError("non-separating A-trails are defined on plane triangulations")
    if h.num_edges == 0:
        return
    it = _a_trail_dfs(h, require_non_separating)
    if limit is None:
        yield from it
    else:
        yield from itertools.islice(it, limit)


def find_a_trail(
    h: PlaneGraph, require_non_separating: bool = False
) -> Optional[ATrail]:
    """Depth-first search over rotation-adjacent transitions."""
    return next(enumerate_a_trails(h, require_non_separating), None)


# ---------------------------------------------------------------------------
# trail-induced vertex partition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VertexPartition:
    v1: frozenset[int]
    v2: frozenset[int]


def induced_partition(trail: ATrail, coloring: FaceColoring) -> VertexPartition:
    """Classify each vertex by the color of the faces its trail visits pinch.

    A vertex joins V1 when a transition through it pinches a 2-colored
    corner and V2 for a 1-colored corner; a conflict certifies that the
    input is not an A-trail.
    """
    g = trail.host
    if coloring.palette != 2:
        raise InputError("induced partition needs a 2-face-coloring")
    side = [0] * g.n
    m = len(trail.darts)
    for i in range(m):
        d, nxt = trail.darts[i], trail.darts[(i + 1) % m]
        v = g.tail(nxt)
        try:
            f = transition_face(g, d, nxt)
        except InputError as ex:
            raise CertificateError(f"not an A-trail: {ex}") from ex
        cls = 3 - coloring.color_of(f)
        if side[v] == 0:
            side[v] = cls
        elif side[v] != cls:
            raise CertificateError(
                f"vertex {v} pinches corners of both colors: not an A-trail"
            )
    if 0 in side:
        raise CertificateError("some vertex never visited by the trail")
    return VertexPartition(
        frozenset(v for v in range(g.n) if side[v] == 1),
        frozenset(v for v in range(g.n) if side[v] == 2),
    )


# ---------------------------------------------------------------------------
# (quasi) spanning trees of faces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FaceTree:
    """A (quasi) spanning tree of faces: bounded faces ``t`` and the set of
    proper vertices ``u``; vertices outside ``u`` are quasi."""

    host: PlaneGraph
    t: frozenset[int]
    u: frozenset[int]

    def is_spanning(self) -> bool:
        return self.u == frozenset(range(self.host.n))


def validate_face_tree(ft: FaceTree) -> CheckResult:
    """Definition check, independent of the search:

    - t consists of bounded faces, u of vertices;
    - the restricted radial graph on u and t is a tree whose nodes cover
      every proper vertex;
    - every quasi vertex lies on exactly half its degree of t-faces.
    """
    h = ft.host
    for f in ft.t:
        if not 0 <= f < len(h.faces):
            return CheckResult(False, f"unknown face {f}")
        if f == h.outer_face:
            return CheckResult(False, "outer face cannot belong to a face tree")
    for v in ft.u:
        if not 0 <= v < h.n:
            return CheckResult(False, f"unknown vertex {v}")
    rr = restricted_radial(h, ft.u, ft.t)
    if not rr.is_tree():
        return CheckResult(False, "restricted radial graph is not a tree")
    count = {v: 0 for v in range(h.n)}
    for f in ft.t:
        for v in set(h.face_vertices(f)):
            count[v] += 1
    for v in range(h.n):
        if v in ft.u:
            if count[v] == 0 and h.n + len(ft.t) > 1:
                return CheckResult(False, f"proper vertex {v} on no tree face")
        else:
            if 2 * count[v] != h.degree(v):
                return CheckResult(
                    False,
                    f"quasi vertex {v} lies on {count[v]} faces of t, "
                    f"degree {h.degree(v)}",
                )
    return CheckResult(True)


class _DSU:
    """Union-find with rollback (union by size, no path compression)."""

    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.size = {x: 1 for x in items}
        self.trail: list[tuple] = []
        self.components = len(self.parent)

    def find(self, x):
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] > self.size[rb]:
            ra, rb = rb, ra
        self.trail.append((ra, rb))
        self.parent[ra] = rb
        self.size[rb] += self.size[ra]
        self.components -= 1
        return True

    def mark(self) -> int:
        return len(self.trail)

    def rollback(self, mark: int) -> None:
        while len(self.trail) > mark:
            ra, rb = self.trail.pop()
            self.parent[ra] = ra
            self.size[rb] -= self.size[ra]
            self.components += 1


def enumerate_face_trees(
    h: PlaneGraph,
    require_spanning: bool = False,
    must_contain: Sequence[int] = (),
    must_exclude: Sequence[int] = (),
    fixed_proper: Sequence[int] = (),
    fixed_quasi: Sequence[int] = (),
) -> Iterator[FaceTree]:
    """Exhaustive search over face subsets, growing the restricted radial
    tree and pruning as soon as a forced-proper vertex closes a cycle."""
    must_contain = frozenset(must_contain)
    must_exclude = frozenset(must_exclude)
    fixed_proper = frozenset(fixed_proper)
    fixed_quasi = frozenset(fixed_quasi)
    if must_contain & must_exclude:
        raise InputError("must_contain and must_exclude overlap")
    if fixed_proper & fixed_quasi:
        raise InputError("fixed_proper and fixed_quasi overlap")
    if require_spanning and fixed_quasi:
        raise InputError("spanning tree of faces admits no quasi vertices")
    if h.n == 1:
        # degenerate host: the empty tree spans vacuously
        if not must_contain:
            yield FaceTree(h, frozenset(), frozenset({0}))
        return
    if not faces_are_simple_cycles(h):
        raise InputError("face trees need a 2-connected host")
    bounded = [f for f in range(len(h.faces)) if f != h.outer_face]
    for f in must_contain | must_exclude:
        if f not in bounded:
            raise InputError(f"face {f} is not a bounded face")
    for v in fixed_proper | fixed_quasi:
        if not 0 <= v < h.n:
            raise InputError(f"unknown vertex {v}")

    deg = h.degrees()
    face_verts = {f: sorted(set(h.face_vertices(f))) for f in bounded}
    faces_at: list[list[int]] = [[] for _ in range(h.n)]
    for f in bounded:
        for v in face_verts[f]:
            faces_at[v].append(f)

    can_be_quasi = [
        not require_spanning and v not in fixed_proper and deg[v] % 2 == 0
        for v in range(h.n)
    ]

    count = [0] * h.n
    remaining = [len(faces_at[v]) for v in range(h.n)]
    chosen: list[int] = []
    dsu = _DSU(bounded)

    def vertex_feasible(v: int) -> bool:
        if count[v] + remaining[v] == 0:
            return False  # uncoverable
        if v in fixed_quasi:
            if count[v] > deg[v] // 2 or count[v] + remaining[v] < deg[v] // 2:
                return False
        return True

    def settle_vertex(v: int) -> Optional[bool]:
        """When v's faces are all decided: merge if v is forced proper.
        Returns False on a dead end, True if settled/deferred."""
        if count[v] == 0:
            return False
        if v in fixed_quasi:
            return 2 * count[v] == deg[v]
        forced_proper = (
            require_spanning or v in fixed_proper or 2 * count[v] != deg[v]
        )
        if forced_proper:
            mine = [f for f in faces_at[v] if f in chosen_set]
            root = mine[0]
            for f in mine[1:]:
                if not dsu.union(root, f):
                    return False
        return True

    chosen_set: set[int] = set()

    def flexible_assignments(flex: list[int]) -> Iterator[frozenset[int]]:
        """All subsets of flexible vertices promotable to proper so the
        structure becomes a single tree."""
        if dsu.components - (len(bounded) - len(chosen)) == 1:
            # chosen faces already form one component (unchosen faces are
            # their own untouched singletons)
            yield frozenset()
        if not flex:
            return
        v, rest = flex[0], flex[1:]
        mark = dsu.mark()
        mine = [f for f in faces_at[v] if f in chosen_set]
        ok = True
        for f in mine[1:]:
            if not dsu.union(mine[0], f):
                ok = False
                break
        if ok:
            for s in flexible_assignments(rest):
                yield s | {v}
        dsu.rollback(mark)
        # v stays quasi
        for s in flexible_assignments(rest):
            yield s

    def leaves() -> Iterator[FaceTree]:
        flex = []
        for v in range(h.n):
            if count[v] == 0:
                return
            if v in fixed_quasi:
                continue
            if can_be_quasi[v] and 2 * count[v] == deg[v] and v not in fixed_proper:
                flex.append(v)
        seen: set[frozenset[int]] = set()
        for s in flexible_assignments(flex):
            quasi = set(v for v in flex if v not in s) | set(fixed_quasi)
            u = frozenset(range(h.n)) - frozenset(quasi)
            if u in seen:
                continue
            seen.add(u)
            yield FaceTree(h, frozenset(chosen), u)

    def dfs(idx: int) -> Iterator[FaceTree]:
        if idx == len(bounded):
            yield from leaves()
            return
        f = bounded[idx]
        options = []
        if f not in must_exclude:
            options.append(True)
        if f not in must_contain:
            options.append(False)
        for include in options:
            mark = dsu.mark()
            touched = face_verts[f]
            if include:
                chosen.append(f)
                chosen_set.add(f)
                for v in touched:
                    count[v] += 1
            for v in touched:
                remaining[v] -= 1
            ok = all(vertex_feasible(v) for v in touched)
            if ok:
                for v in touched:
                    if remaining[v] == 0:
                        res = settle_vertex(v)
                        if not res:
                            ok = False
                            break
            if ok:
                yield from dfs(idx + 1)
            dsu.rollback(mark)
            if include:
                chosen.pop()
                chosen_set.discard(f)
                for v in touched:
                    count[v] -= 1
            for v in touched:
                remaining[v] += 1

    yield from dfs(0)


def find_face_tree(
    h: PlaneGraph,
    require_spanning: bool = False,
    must_contain: Sequence[int] = (),
    must_exclude: Sequence[int] = (),
    fixed_proper: Sequence[int] = (),
    fixed_quasi: Sequence[int] = (),
) -> Optional[FaceTree]:
    """A (quasi) spanning tree of faces honouring the constraints, or None."""
    return next(
        enumerate_face_trees(
            h, require_spanning, must_contain, must_exclude, fixed_proper, fixed_quasi
        ),
        None,
    )


# ---------------------------------------------------------------------------
# spanning tree parity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParityInstance:
    """Graph plus disjoint edge pairs; a solution is a spanning tree meeting
    each pair in 0 or 2 edges."""

    graph: MultiGraph
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for e, f in self.pairs:
            if e == f:
                raise InputError("pair members must be distinct")
            for x in (e, f):
                if not 0 <= x < self.graph.num_edges:
                    raise InputError(f"unknown edge {x}")
                if x in seen:
                    raise InputError(f"edge {x} appears in two pairs")
                seen.add(x)


def is_spanning_tree(graph: MultiGraph, edges: frozenset[int]) -> bool:
    if len(edges) != graph.n - 1:
        return False
    dsu = _DSU(range(graph.n))
    for e in edges:
        u, v = graph.edge_list[e]
        if not dsu.union(u, v):
            return False
    return dsu.components == 1


def satisfies_pairs(pairs: Sequence[tuple[int, int]], edges: frozenset[int]) -> bool:
    return all(len({e, f} & edges) in (0, 2) for e, f in pairs)


def solve_spanning_tree_parity(p: ParityInstance) -> Optional[frozenset[int]]:
    """Exact solver: branch over pair in/out decisions, then complete the
    forced forest greedily with unconstrained edges."""
    graph = p.graph
    if graph.n == 0 or not graph.is_connected():
        return None
    pair_edges = {e for pair in p.pairs for e in pair}
    free = [e for e in range(graph.num_edges) if e not in pair_edges]

    def complete(dsu: _DSU, taken: list[int]) -> Optional[frozenset[int]]:
        mark = dsu.mark()
        extra = []
        for e in free:
            u, v = graph.edge_list[e]
            if dsu.union(u, v):
                extra.append(e)
        if dsu.components == 1:
            result = frozenset(taken) | frozenset(extra)
            dsu.rollback(mark)
            return result
        dsu.rollback(mark)
        return None

    dsu = _DSU(range(graph.n))
    taken: list[int] = []

    def branch(i: int) -> Optional[frozenset[int]]:
        if i == len(p.pairs):
            return complete(dsu, taken)
        e, f = p.pairs[i]
        mark = dsu.mark()
        ok = True
        for x in (e, f):
            u, v = graph.edge_list[x]
            if not dsu.union(u, v):
                ok = False
                break
        if ok:
            taken.extend((e, f))
            res = branch(i + 1)
            if res is not None:
                return res
            taken.pop()
            taken.pop()
        dsu.rollback(mark)
        return branch(i + 1)  # neither edge

    return branch(0)


# ---------------------------------------------------------------------------
# spanning trees of digon/triangle faces via parity
# ---------------------------------------------------------------------------


def parity_reduction(
    h: PlaneGraph, d: Sequence[int]
) -> tuple[ParityInstance, dict[int, tuple[int, ...]]]:
    """The auxiliary graph: a digon face becomes a single edge, a triangle
    face a constrained edge pair; returns the instance and the map from
    face to its representative edges."""
    rep: dict[int, tuple[int, ...]] = {}
    aux = MultiGraph(h.n)
    pairs = []
    for f in sorted(set(d)):
        if not 0 <= f < len(h.faces):
            raise InputError(f"unknown face {f}")
        if f == h.outer_face:
            raise InputError("outer face cannot span")
        k = h.face_len(f)
        boundary = h.faces[f]
        verts = [h.tail(x) for x in boundary]
        if k == 2:
            rep[f] = (aux.add_edge(verts[0], verts[1]),)
        elif k == 3:
            e1 = aux.add_edge(verts[0], verts[1])
            e2 = aux.add_edge(verts[1], verts[2])
            rep[f] = (e1, e2)
            pairs.append((e1, e2))
        else:
            raise InputError(
                f"face {f} has {k} sides; only digon and triangle faces reduce "
                "to spanning tree parity"
            )
    return ParityInstance(aux, tuple(pairs)), rep


def face_tree_via_parity(h: PlaneGraph, d: Sequence[int]) -> Optional[FaceTree]:
    """Spanning tree of faces within a digon/triangle face set, decided by
    the spanning tree parity solver."""
    if h.n == 1:
        return FaceTree(h, frozenset(), frozenset({0}))
    instance, rep = parity_reduction(h, d)
    tree = solve_spanning_tree_parity(instance)
    if tree is None:
        return None
    t = frozenset(f for f, edges in rep.items() if all(e in tree for e in edges))
    ft = FaceTree(h, t, frozenset(range(h.n)))
    check = validate_face_tree(ft)
    if not check:
        raise StructureError(f"parity reduction produced an invalid tree: {check.reason}")
    return ft
