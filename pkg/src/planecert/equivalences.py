"""Constructive certificate converters.

Each converter realises one of the certificate equivalences and validates
its output with the target certificate's independent validator:

- A-trail <-> quasi spanning tree of faces on eulerian hosts;
- quasi spanning tree of faces in a contraction <-> constrained
  hamiltonian cycle of the host (via the facial-2-factor provenance);
- the four equivalent statements for 3-face-colored cubic bipartite hosts;
- hamiltonian cycles of a cubic bipartite host <-> conforming hamiltonian
  cycles of its leapfrog extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from planecert.plane import (
    FacialTwoFactor,
    InputError,
    PlaneGraph,
    verify_facial_two_factor,
)
from planecert.colorings import (
    FaceColoring,
    color_class_factor,
    face_2_coloring,
    face_3_coloring,
)
from planecert.constructions import ContractionMap, LeapfrogMaps, contract_factor, leapfrog_full
from planecert.certificates import (
    ATrail,
    CertificateError,
    FaceTree,
    HamiltonianCycle,
    INSIDE,
    OUTSIDE,
    cycle_side_map,
    enumerate_hamiltonian_cycles,
    find_a_trail,
    find_face_tree,
    induced_partition,
    validate_a_trail,
    validate_face_tree,
    validate_hamiltonian_cycle,
)


class ConversionError(CertificateError):
    """A certificate does not have the form the conversion requires."""


# ---------------------------------------------------------------------------
# Observation 1: A-trail <-> quasi spanning tree of faces
# ---------------------------------------------------------------------------


def atrail_to_face_tree(h: PlaneGraph, trail: ATrail, coloring: FaceColoring) -> FaceTree:
    """The 2-colored faces, with the trail's V1 vertices quasi."""
    if trail.host != h:
        raise InputError("trail host mismatch")
    if any(h.degree(v) < 4 for v in range(h.n)):
        raise InputError("conversion requires minimum degree 4")
    if coloring.palette != 2 or coloring.color_of(h.outer_face) != 1:
        raise InputError("need a 2-face-coloring with the outer face colored 1")
    part = induced_partition(trail, coloring)
    t = frozenset(coloring.color_class(2))
    u = frozenset(range(h.n)) - part.v1
    ft = FaceTree(h, t, u)
    check = validate_face_tree(ft)
    if not check:
        raise CertificateError(f"input trail is not an A-trail: {check.reason}")
    return ft


def _pinch_walk(h: PlaneGraph, ft: FaceTree) -> tuple[list[int], list[tuple[int, int]]]:
    """Walk the unique A-trail of H_T in host darts.

    At a quasi vertex the trail pinches the corners inside t-faces, at a
    proper vertex the corners outside them; both are forced, so the walk is
    deterministic.  Returns the dart sequence and the pinch pairs
    (in-dart twin, out-dart) in sigma orientation per transition.
    """
    t = ft.t
    in_ht = [False] * h.num_edges
    for f in t:
        for e in h.face_edges(f):
            in_ht[e] = True
    ht_darts = {d for d in range(h.num_darts) if in_ht[d >> 1]}
    if not ht_darts:
        raise CertificateError("face tree has no edges to walk")

    def neighbor(x: int, direction: int) -> int:
        d = h.sigma(x) if direction > 0 else h.sigma_inv(x)
        while d not in ht_darts:
            d = h.sigma(d) if direction > 0 else h.sigma_inv(d)
        return d

    def partner(x: int) -> tuple[int, tuple[int, int]]:
        """The pinch mate of dart x and the pinched corner in sigma
        orientation (sweep from corner[0] to corner[1])."""
        v = h.tail(x)
        want_t = v not in ft.u  # quasi vertices pinch inside t-faces
        nxt = neighbor(x, +1)
        corner_next_is_t = nxt == h.sigma(x) and h.face_of(nxt) in t
        prv = neighbor(x, -1)
        corner_prev_is_t = x == h.sigma(prv) and h.face_of(x) in t
        if corner_next_is_t == want_t and corner_prev_is_t == want_t and nxt != prv:
            raise CertificateError(f"ambiguous pinch at vertex {v}")
        if corner_next_is_t == want_t:
            return nxt, (x, nxt)
        if corner_prev_is_t == want_t:
            return prv, (prv, x)
        raise CertificateError(f"no pinch corner of the required class at vertex {v}")

    start = min(ht_darts)
    seq = [start]
    pairs = []
    used = {start >> 1}
    d = start
    while True:
        x = d ^ 1
        y, corner = partner(x)
        pairs.append(corner)
        if y == start:
            break
        if (y >> 1) in used:
            raise CertificateError("pinch walk revisits an edge: invalid face tree")
        used.add(y >> 1)
        seq.append(y)
        d = y
    if len(seq) != sum(in_ht):
        raise CertificateError("pinch walk closed before using every tree edge")
    return seq, pairs


def face_tree_to_atrail(h: PlaneGraph, ft: FaceTree) -> ATrail:
    """The unique A-trail of the union of the tree's face boundaries.

    When the tree's faces cover every edge the trail lives on the host
    itself; otherwise on the induced submap.
    """
    check = validate_face_tree(ft)
    if not check:
        raise InputError(f"invalid face tree: {check.reason}")
    seq, _ = _pinch_walk(h, ft)
    if len(seq) == h.num_edges:
        trail = ATrail(h, tuple(seq))
    else:
        sub, dart_map = _edge_submap(h, sorted({d >> 1 for d in seq}))
        trail = ATrail(sub, tuple(dart_map[d] for d in seq))
    res = validate_a_trail(trail)
    if not res:
        raise CertificateError(f"pinch walk produced a non-A-trail: {res.reason}")
    return trail


def _edge_submap(h: PlaneGraph, edges: list[int]) -> tuple[PlaneGraph, dict[int, int]]:
    """Plane submap on an edge subset (which must span and stay connected)."""
    keep = set(edges)
    dart_map = {}
    for k, e in enumerate(sorted(keep)):
        dart_map[2 * e] = 2 * k
        dart_map[2 * e + 1] = 2 * k + 1
    rotations = [
        [dart_map[d] for d in rot if (d >> 1) in keep] for rot in h.rotations
    ]
    sub = PlaneGraph(rotations, outer_face=0)
    outer_origin = [d for d in h.faces[h.outer_face] if (d >> 1) in keep]
    if outer_origin:
        sub = sub.with_outer_face(sub.face_of(dart_map[outer_origin[0]]))
    return sub, dart_map


# ---------------------------------------------------------------------------
# Theorem PR:1: face trees in H = G/Q <-> constrained hamiltonian cycles of G
# ---------------------------------------------------------------------------


def _assemble_cycle(g, edge_set: frozenset[int]) -> HamiltonianCycle:
    ends = {}
    for e in edge_set:
        u, v = g.edge_endpoints(e) if isinstance(g, PlaneGraph) else g.edge_list[e]
        ends.setdefault(u, []).append((e, v))
        ends.setdefault(v, []).append((e, u))
    for v, lst in ends.items():
        if len(lst) != 2:
            raise ConversionError(f"edge set has degree {len(lst)} at vertex {v}")
    start = min(ends)
    vseq = [start]
    eseq = []
    e0, nxt = sorted(ends[start])[0]
    eseq.append(e0)
    vseq.append(nxt)
    while vseq[-1] != start:
        options = [p for p in ends[vseq[-1]] if p[0] != eseq[-1]]
        if len(options) != 1:
            raise ConversionError("edge set is not a single cycle")
        e, w = options[0]
        eseq.append(e)
        vseq.append(w)
    vseq.pop()
    if len(vseq) != g.n:
        raise ConversionError("edge set is not a spanning cycle")
    return HamiltonianCycle(g, tuple(eseq), tuple(vseq))


def pr1_side_conditions(
    g: PlaneGraph,
    q: FacialTwoFactor,
    cmap: ContractionMap,
    h: PlaneGraph,
    hc: HamiltonianCycle,
    ft: Optional[FaceTree] = None,
):
    """The side conditions of the face-tree/hamiltonian-cycle equivalence.

    Sides are taken relative to the external surviving face (the origin of
    the contraction's outer face).  Returns (ok, reason, offending) where
    offending carries the face pair when two edge-sharing surviving faces
    lie inside the cycle.
    """
    external = cmap.face_origin[h.outer_face]
    side = cycle_side_map(g.with_outer_face(external), hc.edge_set)
    if side[external] != OUTSIDE:
        return False, f"external surviving face {external} lies inside", None
    for k, e in enumerate(cmap.edge_origin):
        fa, fb = g.face_of(2 * e), g.face_of(2 * e + 1)
        if side[fa] == INSIDE and side[fb] == INSIDE:
            return False, "two edge-sharing surviving faces inside", (fa, fb)
    if ft is not None:
        for i, f in enumerate(cmap.vertex_origin):
            want = INSIDE if i in ft.u else OUTSIDE
            if side[f] != want:
                return False, f"contracted face {f} on the wrong side", None
        for i, f_origin in enumerate(cmap.face_origin):
            want = INSIDE if i in ft.t else OUTSIDE
            if side[f_origin] != want:
                return False, f"surviving face {f_origin} on the wrong side", None
    return True, "", None


def face_tree_to_ham_cycle(
    g: PlaneGraph,
    q: FacialTwoFactor,
    cmap: ContractionMap,
    ft: FaceTree,
) -> HamiltonianCycle:
    """Expand a quasi spanning tree of faces of H = G/Q into a hamiltonian
    cycle of G with proper contracted faces inside and quasi ones outside.

    The cycle consists of the tree-face edges plus, per trail pinch, the
    boundary arc of the contracted face swept by the pinched corner.
    """
    if not g.is_cubic():
        raise InputError("the equivalence requires a cubic host")
    if not verify_facial_two_factor(g, q):
        raise InputError("invalid facial 2-factor")
    h = ft.host
    check = validate_face_tree(ft)
    if not check:
        raise InputError(f"invalid face tree: {check.reason}")
    seq, pairs = _pinch_walk(h, ft)

    edges = {cmap.edge_origin[d >> 1] for d in seq}
    for z, stop in pairs:
        # sweep the contracted-face boundary arc under the pinched corner
        while True:
            edges.add(cmap.corner_edge[z])
            z = h.sigma(z)
            if z == stop:
                break
    # the cycle is hosted relative to the designated external surviving face
    g_rooted = g.with_outer_face(cmap.face_origin[h.outer_face])
    hc = _assemble_cycle(g_rooted, frozenset(edges))
    res = validate_hamiltonian_cycle(hc)
    if not res:
        raise ConversionError(f"expansion failed: {res.reason}")
    ok, reason, pair = pr1_side_conditions(g, q, cmap, h, hc, ft)
    if not ok:
        raise ConversionError(f"expansion violates side conditions: {reason}")
    return hc


def ham_cycle_to_face_tree(
    g: PlaneGraph,
    q: FacialTwoFactor,
    cmap: ContractionMap,
    h: PlaneGraph,
    hc: HamiltonianCycle,
) -> FaceTree:
    """Recover the quasi spanning tree of faces from a hamiltonian cycle
    satisfying the side conditions (rejected with the offending face pair
    otherwise)."""
    res = validate_hamiltonian_cycle(hc)
    if not res:
        raise InputError(f"not a hamiltonian cycle: {res.reason}")
    external = cmap.face_origin[h.outer_face]
    side = cycle_side_map(g.with_outer_face(external), hc.edge_set)
    for e in cmap.edge_origin:
        fa, fb = g.face_of(2 * e), g.face_of(2 * e + 1)
        if side[fa] == INSIDE and side[fb] == INSIDE:
            raise ConversionError(
                f"surviving faces {fa} and {fb} share an edge and both lie inside"
            )
    t = frozenset(
        i for i, f in enumerate(cmap.face_origin) if side[f] == INSIDE
    )
    u = frozenset(
        i for i, f in enumerate(cmap.vertex_origin) if side[f] == INSIDE
    )
    ft = FaceTree(h, t, u)
    check = validate_face_tree(ft)
    if not check:
        raise ConversionError(f"cycle does not define a face tree: {check.reason}")
    return ft


def pr1_conforming_cycle_exists(
    g: PlaneGraph, q: FacialTwoFactor, cmap: ContractionMap, h: PlaneGraph
) -> bool:
    """Exhaustively decide whether some hamiltonian cycle of the host has
    the form the equivalence requires (a valid face tree recovers from it)."""
    for hc in enumerate_hamiltonian_cycles(g):
        try:
            ham_cycle_to_face_tree(g, q, cmap, h, hc)
            return True
        except ConversionError:
            continue
    return False


# ---------------------------------------------------------------------------
# Theorem PR:3: the four equivalent certificates
# ---------------------------------------------------------------------------


@dataclass
class Pr3Setup:
    """The three contractions of a 3-face-colored cubic bipartite host.

    When a contraction removes the class containing the outer face, the
    host is re-rooted at the least face of the remaining non-tree color
    (so no candidate tree face ever becomes the outer face, and the
    re-rooted exterior is the side the cycle statement assigns to it)."""

    g: PlaneGraph
    coloring: FaceColoring
    tree_color: int
    hosts: dict[int, PlaneGraph]  # color -> re-rooted host
    reduced: dict[int, PlaneGraph]
    cmaps: dict[int, ContractionMap]
    factors: dict[int, FacialTwoFactor]


def pr3_setup(g: PlaneGraph, coloring: FaceColoring, tree_color: int = 1) -> Pr3Setup:
    if coloring.palette != 3:
        raise InputError("need a 3-face-coloring")
    hosts, reduced, cmaps, factors = {}, {}, {}, {}
    outer_color = coloring.color_of(g.outer_face)
    for c in (1, 2, 3):
        q = color_class_factor(g, coloring, c)
        check = verify_facial_two_factor(g, q)
        if not check:
            raise InputError(f"color class {c} is not a facial 2-factor: {check.reason}")
        host = g
        if c == outer_color:
            spare = ({1, 2, 3} - {c, tree_color}).pop()
            other = min(
                f for f in range(len(g.faces)) if coloring.color_of(f) == spare
            )
            host = g.with_outer_face(other)
        hosts[c] = host
        reduced[c], cmaps[c] = contract_factor(host, q)
        factors[c] = q
    return Pr3Setup(g, coloring, tree_color, hosts, reduced, cmaps, factors)


def pr3_statement_i_holds(g: PlaneGraph, coloring: FaceColoring, hc: HamiltonianCycle) -> bool:
    """2-faces inside, 3-faces outside (1-faces on either side)."""
    side = hc.side_map()
    return all(
        (coloring.color_of(f) != 2 or side[f] == INSIDE)
        and (coloring.color_of(f) != 3 or side[f] == OUTSIDE)
        for f in range(len(g.faces))
    )


def cycle_to_reduced_atrail(
    g: PlaneGraph, cmap: ContractionMap, h: PlaneGraph, hc: HamiltonianCycle
) -> ATrail:
    """The closed trail induced in a contraction by a hamiltonian cycle:
    the cycle's surviving edges in cyclic order."""
    edge_image = cmap.edge_image()
    darts = []
    n = len(hc.edge_seq)
    for i, e in enumerate(hc.edge_seq):
        if e not in edge_image:
            continue
        u = hc.vertex_seq[i]
        d = 2 * e if g.tail(2 * e) == u else 2 * e + 1
        k = edge_image[e]
        darts.append(2 * k if cmap.dart_origin[2 * k] == d else 2 * k + 1)
    trail = ATrail(h, tuple(darts))
    res = validate_a_trail(trail)
    if not res:
        raise ConversionError(f"induced trail is not an A-trail: {res.reason}")
    return trail


@dataclass
class Pr3Certificates:
    setup: Pr3Setup
    cycle: HamiltonianCycle  # statement (i)
    trail: ATrail  # statement (ii), on the 1-face contraction
    tree_iii: FaceTree  # spanning tree of 1-faces in the 2-face contraction
    tree_iv: FaceTree  # spanning tree of 1-faces in the 3-face contraction


def _cycle_to_spanning_tree(setup: Pr3Setup, c: int, hc: HamiltonianCycle) -> FaceTree:
    host, h, cmap = setup.hosts[c], setup.reduced[c], setup.cmaps[c]
    hc_local = HamiltonianCycle(host, hc.edge_seq, hc.vertex_seq)
    ft = ham_cycle_to_face_tree(host, setup.factors[c], cmap, h, hc_local)
    if not ft.is_spanning():
        raise ConversionError("recovered tree is not spanning")
    if any(setup.coloring.color_of(cmap.face_origin[f]) != 1 for f in ft.t):
        raise ConversionError("recovered tree uses a face not colored 1")
    return ft


def pr3_convert(g: PlaneGraph, coloring: FaceColoring, source, kind: str) -> Pr3Certificates:
    """Produce all four certificates of the equivalence from any one of them.

    ``kind`` is one of ``cycle_i``, ``atrail_ii``, ``tree_iii``, ``tree_iv``.
    """
    if coloring.color_of(g.outer_face) != 3:
        raise InputError("the outer face must be a 3-face")
    setup = pr3_setup(g, coloring)

    if kind == "cycle_i":
        hc = source
        res = validate_hamiltonian_cycle(hc)
        if not res:
            raise InputError(f"invalid source cycle: {res.reason}")
        if not pr3_statement_i_holds(g, coloring, hc):
            raise InputError("source cycle does not satisfy statement (i)")
    elif kind == "atrail_ii":
        h1 = setup.reduced[1]
        res = validate_a_trail(source)
        if not res:
            raise InputError(f"invalid source trail: {res.reason}")
        ft = atrail_to_face_tree(h1, source, face_2_coloring(h1))
        hc = face_tree_to_ham_cycle(setup.hosts[1], setup.factors[1], setup.cmaps[1], ft)
        hc = HamiltonianCycle(g, hc.edge_seq, hc.vertex_seq)
    elif kind in ("tree_iii", "tree_iv"):
        c = 2 if kind == "tree_iii" else 3
        ft = source
        check = validate_face_tree(ft)
        if not check:
            raise InputError(f"invalid source tree: {check.reason}")
        if not ft.is_spanning():
            raise InputError("source tree must be spanning")
        hc = face_tree_to_ham_cycle(setup.hosts[c], setup.factors[c], setup.cmaps[c], ft)
        hc = HamiltonianCycle(g, hc.edge_seq, hc.vertex_seq)
    else:
        raise InputError(f"unknown source kind {kind!r}")

    if not pr3_statement_i_holds(g, coloring, hc):
        raise ConversionError("converted cycle violates statement (i)")
    trail = cycle_to_reduced_atrail(g, setup.cmaps[1], setup.reduced[1], hc)
    tree_iii = _cycle_to_spanning_tree(setup, 2, hc)
    tree_iv = _cycle_to_spanning_tree(setup, 3, hc)
    return Pr3Certificates(setup, hc, trail, tree_iii, tree_iv)


def pr3_existence(g: PlaneGraph, coloring: FaceColoring) -> dict[str, bool]:
    """The four existence questions answered by independent solvers."""
    if coloring.color_of(g.outer_face) != 3:
        raise InputError("the outer face must be a 3-face")
    setup = pr3_setup(g, coloring)
    out: dict[str, bool] = {}
    out["i"] = any(
        pr3_statement_i_holds(g, coloring, hc)
        for hc in enumerate_hamiltonian_cycles(g)
    )
    out["ii"] = find_a_trail(setup.reduced[1]) is not None
    for key, c in (("iii", 2), ("iv", 3)):
        h, cmap = setup.reduced[c], setup.cmaps[c]
        non1 = [
            f
            for f in range(len(h.faces))
            if f != h.outer_face and coloring.color_of(cmap.face_origin[f]) != 1
        ]
        out[key] = (
            find_face_tree(h, require_spanning=True, must_exclude=non1) is not None
        )
    return out


# ---------------------------------------------------------------------------
# Theorem TH:Herbert: hamiltonian cycles lift to the leapfrog extension
# ---------------------------------------------------------------------------


def herbert_side_check(
    g: PlaneGraph,
    lf: PlaneGraph,
    maps: LeapfrogMaps,
    classes: tuple[set[int], set[int]],
    hc: HamiltonianCycle,
):
    """Conforming form: the per-vertex faces split by bipartition class,
    one class strictly inside, the other strictly outside."""
    side = hc.side_map()
    sides_by_class = []
    for cls in classes:
        s = {side[maps.face_of_vertex[v]] for v in cls}
        if len(s) != 1:
            return False, "a hexagon class straddles the cycle"
        sides_by_class.append(s.pop())
    if sides_by_class[0] == sides_by_class[1]:
        return False, "both hexagon classes on the same side"
    return True, ""


def leapfrog_lift(g: PlaneGraph, c0: HamiltonianCycle):
    """Stitch a hamiltonian cycle of the host into its leapfrog extension.

    Crossing edges of the lifted cycle are the shared per-vertex-face edges
    of the host cycle's edges; between consecutive crossings the cycle runs
    along the shared vertex's face, on sides alternating inside/outside of
    the host cycle.  Returns (lifted cycle, lf, maps).
    """
    from planecert.plane import is_bipartite

    if not g.is_cubic() or is_bipartite(g) is None:
        raise InputError("lift requires a cubic bipartite host")
    res = validate_hamiltonian_cycle(c0)
    if not res:
        raise InputError(f"invalid host cycle: {res.reason}")
    lf, maps = leapfrog_full(g)
    side0 = c0.side_map()
    n = len(c0.vertex_seq)

    def inner_endpoint(e: int, want: str) -> int:
        a, b = lf.edge_endpoints(maps.edge_of_edge[e])
        fa = maps.host_face_of_lf_vertex[a]
        fb = maps.host_face_of_lf_vertex[b]
        if side0[fa] == want:
            return a
        if side0[fb] == want:
            return b
        raise ConversionError("cycle edge without a face on the required side")

    edges: set[int] = set()
    for i in range(n):
        e_cur = c0.edge_seq[i]
        e_nxt = c0.edge_seq[(i + 1) % n]
        shared = c0.vertex_seq[(i + 1) % n]
        want = INSIDE if i % 2 == 0 else OUTSIDE
        edges.add(maps.edge_of_edge[e_cur])
        a = inner_endpoint(e_cur, want)
        b = inner_endpoint(e_nxt, want)
        hexagon = maps.face_of_vertex[shared]
        boundary = lf.faces[hexagon]
        cyc = [lf.tail(d) for d in boundary]
        ia, ib = cyc.index(a), cyc.index(b)
        for arc in (_arc(cyc, ia, ib), _arc(cyc, ib, ia)):
            if all(side0[maps.host_face_of_lf_vertex[w]] == want for w in arc):
                for j in range(len(arc) - 1):
                    edges.add(_face_edge_between(lf, hexagon, arc[j], arc[j + 1]))
                break
        else:
            raise ConversionError("no one-sided arc between crossing endpoints")

    hc = _assemble_cycle(lf, frozenset(edges))
    res = validate_hamiltonian_cycle(hc)
    if not res:
        raise ConversionError(f"lift failed: {res.reason}")
    classes = is_bipartite(g)
    ok, reason = herbert_side_check(g, lf, maps, classes, hc)
    if not ok:
        raise ConversionError(f"lift violates the side conditions: {reason}")
    return hc, lf, maps


def _arc(cyc: list[int], i: int, j: int) -> list[int]:
    if i <= j:
        return cyc[i : j + 1]
    return cyc[i:] + cyc[: j + 1]


def _face_edge_between(g: PlaneGraph, f: int, u: int, w: int) -> int:
    for d in g.faces[f]:
        if {g.tail(d), g.head(d)} == {u, w}:
            return d >> 1
    raise ConversionError(f"no boundary edge of face {f} joins {u} and {w}")


def leapfrog_project(
    g: PlaneGraph, lf: PlaneGraph, maps: LeapfrogMaps, hc: HamiltonianCycle
) -> HamiltonianCycle:
    """Recover the host cycle from a conforming cycle of the leapfrog
    extension (the edges crossing between per-vertex faces)."""
    from planecert.plane import is_bipartite

    res = validate_hamiltonian_cycle(hc)
    if not res:
        raise InputError(f"invalid cycle: {res.reason}")
    classes = is_bipartite(g)
    ok, reason = herbert_side_check(g, lf, maps, classes, hc)
    if not ok:
        raise ConversionError(f"cycle is not of the conforming form: {reason}")
    # a host edge is crossed exactly when the host-face faces flanking it
    # end up on opposite sides of the cycle
    side = hc.side_map()
    crossing = set()
    for e in range(g.num_edges):
        fa = maps.face_of_face[g.face_of(2 * e)]
        fb = maps.face_of_face[g.face_of(2 * e + 1)]
        if side[fa] != side[fb]:
            crossing.add(e)
    c0 = _assemble_cycle(g, frozenset(crossing))
    res = validate_hamiltonian_cycle(c0)
    if not res:
        raise ConversionError(f"projection failed: {res.reason}")
    return c0


def herbert_quasi_trees(g: PlaneGraph, c0: HamiltonianCycle):
    """The two quasi spanning trees of faces of Lf(g)/Q_F defined by a
    lifted cycle: one containing each hexagon class, with the proper and
    quasi roles of the contracted-face vertices swapped."""
    hc, lf, maps = leapfrog_lift(g, c0)
    qf = maps.face_factor()
    h, cmap = contract_factor(lf, qf)
    ft_a = ham_cycle_to_face_tree(lf, qf, cmap, h, hc)

    side = hc.side_map()
    inside_face = next(
        maps.face_of_vertex[v]
        for v in range(g.n)
        if side[maps.face_of_vertex[v]] == INSIDE
    )
    lf_flip = lf.with_outer_face(inside_face)
    h2, cmap2 = contract_factor(lf_flip, qf)
    hc_flip = HamiltonianCycle(lf_flip, hc.edge_seq, hc.vertex_seq)
    ft_b = ham_cycle_to_face_tree(lf_flip, qf, cmap2, h2, hc_flip)
    return (ft_a, h, cmap), (ft_b, h2, cmap2)
