import pytest

from planecert import fixtures as fx
from planecert.plane import FacialTwoFactor, InputError, is_bipartite, same_graph
from planecert.constructions import (
    contract_factor,
    dual,
    dual_full,
    hexagon_adjacency,
    leapfrog,
    leapfrog_full,
    radial,
    restricted_radial,
    superpose_with_radial,
    truncate,
)


def cube_opposite_factor(g):
    top = next(f for f in range(len(g.faces)) if set(g.face_vertices(f)) == {4, 5, 6, 7})
    return FacialTwoFactor([g.outer_face, top])


class TestDual:
    def test_cube_gives_octahedron(self):
        d = dual(fx.cube())
        assert d.n == 6 and d.num_edges == 12 and len(d.faces) == 8
        assert all(len(f) == 3 for f in d.faces)
        assert same_graph(d, fx.octahedron())

    def test_involution_hexagonal_prism(self):
        g = fx.hexagonal_prism()
        assert same_graph(dual(dual(g)), g)

    def test_involution_all_fixtures(self):
        for g in fx.named_fixtures().values():
            assert same_graph(dual(dual(g)), g)

    def test_theta_dual_is_triangle(self):
        d = dual(fx.theta())
        assert d.n == 3 and d.num_edges == 3 and len(d.faces) == 2

    def test_edge_count_preserved(self):
        for g in fx.named_fixtures().values():
            assert dual(g).num_edges == g.num_edges

    def test_dart_correspondence_is_involutive(self):
        g = fx.k4()
        dg, maps = dual_full(g)
        for d in range(g.num_darts):
            assert maps.dart(maps.dart(d)) == d


class TestRadial:
    def test_cube_counts(self):
        r = radial(fx.cube())
        # 8 + 6 nodes, one edge per vertex-face incidence (4 per face)
        assert r.n == 14 and r.num_edges == 24

    def test_digon_radial_is_4_cycle(self):
        r = radial(fx.digon())
        assert r.n == 4 and r.num_edges == 4 and len(r.faces) == 2

    def test_all_faces_quadrilaterals(self):
        for g in [fx.cube(), fx.k4(), fx.octahedron(), fx.hexagonal_prism()]:
            r = radial(g)
            assert all(len(f) == 4 for f in r.faces)
            assert is_bipartite(r) is not None

    def test_rejects_non_2_connected(self):
        with pytest.raises(InputError):
            radial(fx.bowtie())


class TestRestrictedRadial:
    def test_full_minus_outer(self):
        h = fx.cube()
        rr = restricted_radial(h, range(h.n), h.bounded_faces())
        assert rr.num_nodes == 8 + 5
        # every incidence with a bounded face present
        assert len(rr.edges) == sum(h.face_len(f) for f in h.bounded_faces())

    def test_empty_u_single_face(self):
        h = fx.cube()
        f = h.bounded_faces()[0]
        rr = restricted_radial(h, [], [f])
        assert rr.num_nodes == 1 and rr.edges == ()
        assert rr.is_tree()

    def test_outer_face_rejected(self):
        h = fx.cube()
        with pytest.raises(InputError):
            restricted_radial(h, [0], [h.outer_face])

    def test_cube_contraction_digon_is_path(self):
        g = fx.cube()
        h, _ = contract_factor(g, cube_opposite_factor(g))
        dig = h.bounded_faces()[0]
        rr = restricted_radial(h, [0, 1], [dig])
        assert rr.num_nodes == 3 and len(rr.edges) == 2
        assert rr.is_tree()


class TestTruncate:
    def test_truncated_tetrahedron(self):
        t = truncate(fx.k4())
        assert t.n == 12 and t.num_edges == 18 and len(t.faces) == 8
        assert t.is_cubic()
        assert sorted(map(len, t.faces)) == [3, 3, 3, 3, 6, 6, 6, 6]

    def test_truncated_octahedron(self):
        t = truncate(fx.octahedron())
        assert t.n == 24 and t.num_edges == 36 and len(t.faces) == 14
        assert sorted(map(len, t.faces)) == [4] * 6 + [6] * 8

    def test_face_count_formula_cube(self):
        g = fx.cube()
        assert len(truncate(g).faces) == len(g.faces) + g.n

    def test_vertex_count_is_2E(self):
        for g in [fx.k4(), fx.cube(), fx.octahedron()]:
            assert truncate(g).n == 2 * g.num_edges

    def test_degree_2_rejected(self):
        with pytest.raises(InputError):
            truncate(fx.square())


class TestLeapfrog:
    def test_cube_gives_truncated_octahedron(self):
        lf = leapfrog(fx.cube())
        assert lf.n == 24 and lf.num_edges == 36
        assert sorted(map(len, lf.faces)) == [4] * 6 + [6] * 8
        assert same_graph(lf, truncate(fx.octahedron()))

    def test_tetrahedron_gives_truncated_tetrahedron(self):
        lf = leapfrog(fx.k4())
        assert lf.n == 12
        assert same_graph(lf, truncate(fx.k4()))

    def test_vertex_count_3n_for_cubic(self):
        for g in [fx.k4(), fx.cube(), fx.hexagonal_prism()]:
            assert leapfrog(g).n == 3 * g.n

    def test_hexagon_per_vertex(self):
        g = fx.cube()
        lf, maps = leapfrog_full(g)
        assert all(lf.face_len(maps.face_of_vertex[v]) == 6 for v in range(g.n))

    def test_hexagon_adjacency_is_host(self):
        g = fx.cube()
        lf, maps = leapfrog_full(g)
        adj = hexagon_adjacency(g, lf, maps)
        assert sorted(map(tuple, map(sorted, adj.edge_list))) == sorted(
            map(tuple, map(sorted, g.edges()))
        )

    def test_superposition_all_triangles(self):
        g = fx.cube()
        sup = superpose_with_radial(g)
        assert sup.n == g.n + len(g.faces)
        assert sup.num_edges == 3 * g.num_edges
        assert all(len(f) == 3 for f in sup.faces)

    def test_host_face_factor(self):
        from planecert.plane import verify_facial_two_factor

        g = fx.hexagonal_prism()
        lf, maps = leapfrog_full(g)
        assert verify_facial_two_factor(lf, maps.face_factor())


class TestContractFactor:
    def test_cube_two_opposite_faces(self):
        g = fx.cube()
        h, cmap = contract_factor(g, cube_opposite_factor(g))
        assert h.n == 2 and h.num_edges == 4 and len(h.faces) == 4
        assert all(len(f) == 2 for f in h.faces)

    def test_hexagonal_prism_two_hexagons(self):
        g = fx.hexagonal_prism()
        hexes = [f for f in range(len(g.faces)) if g.face_len(f) == 6]
        h, cmap = contract_factor(g, FacialTwoFactor(hexes))
        assert h.n == 2 and h.num_edges == 6 and len(h.faces) == 6

    def test_degree_equals_face_length(self):
        for g, q in [
            (fx.cube(), cube_opposite_factor(fx.cube())),
            (
                fx.hexagonal_prism(),
                FacialTwoFactor(
                    f
                    for f in range(len(fx.hexagonal_prism().faces))
                    if fx.hexagonal_prism().face_len(f) == 6
                ),
            ),
        ]:
            h, cmap = contract_factor(g, q)
            for i, f in enumerate(cmap.vertex_origin):
                assert h.degree(i) == g.face_len(f)

    def test_eulerian_for_cubic_bipartite_host(self):
        g = fx.cube()
        h, _ = contract_factor(g, cube_opposite_factor(g))
        assert h.is_eulerian()

    def test_face_origin_bijects_with_complement(self):
        g = fx.cube()
        q = cube_opposite_factor(g)
        h, cmap = contract_factor(g, q)
        assert sorted(cmap.face_origin) == sorted(q.complement(g))

    def test_outer_face_image(self):
        g = fx.hexagonal_prism()
        hexes = [f for f in range(len(g.faces)) if g.face_len(f) == 6]
        # outer face of the prism is a hexagon, so it is in Q here: the
        # contraction picks the least Q^c face as outer
        h, cmap = contract_factor(g, FacialTwoFactor(hexes))
        assert cmap.face_origin[h.outer_face] == min(
            set(range(len(g.faces))) - set(hexes)
        )

    def test_invalid_factor_rejected(self):
        g = fx.cube()
        with pytest.raises(InputError):
            contract_factor(g, FacialTwoFactor([0, 1]))

    def test_edge_origin_excludes_q_edges(self):
        g = fx.cube()
        q = cube_opposite_factor(g)
        h, cmap = contract_factor(g, q)
        q_edges = set()
        for f in q.faces:
            q_edges.update(g.face_edges(f))
        assert set(cmap.edge_origin) == set(range(g.num_edges)) - q_edges


class TestHerbertIdentity:
    def test_leapfrog_contraction_is_dual(self):
        for name in ["k4", "cube", "hexagonal_prism", "triangular_prism"]:
            g = fx.named_fixtures()[name] if name in fx.named_fixtures() else getattr(fx, name)()
            lf, maps = leapfrog_full(g)
            h, _ = contract_factor(lf, maps.face_factor())
            assert same_graph(h, dual(g)), name

    def test_contracted_output_eulerian(self):
        g = fx.cube()
        lf, maps = leapfrog_full(g)
        h, _ = contract_factor(lf, maps.face_factor())
        assert h.is_eulerian()
