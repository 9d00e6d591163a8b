"""Graph construction, products, and the named families.

networkx is used here only as an independent oracle for isomorphism and for
reference constructions; the package itself never depends on it.
"""

import math

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from distspec.graphs import (Graph, GraphError, barbell, cartesian_product,
                             cocktail_party, complement, complete, cycle,
                             dodecahedron, double_odd, doob, even_subsets,
                             format_edge_list, generalized_barbell,
                             halved_cube, hamming, hypercube,
                             hypercube_with_leaf, icosahedron, johnson,
                             kneser, line_graph, lollipop, make_graph,
                             odd_graph, parse_edge_list, path, petersen,
                             r_subsets, shrikhande, tensor_product)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_list())
    return h


def isomorphic(g: Graph, h) -> bool:
    other = to_nx(h) if isinstance(h, Graph) else h
    return nx.is_isomorphic(to_nx(g), other)


class TestMakeGraph:
    def test_basic(self):
        g = make_graph(3, [(0, 1), (2, 1)])
        assert g.n == 3 and g.m == 2
        assert g.has_edge(1, 2) and g.has_edge(2, 1)
        assert tuple(g.neighbors(1)) == (0, 2)
        assert list(g.degrees()) == [1, 2, 1]

    def test_rejects_tiny_order(self):
        with pytest.raises(GraphError, match="order must be at least 2"):
            make_graph(1, [])

    def test_rejects_loop(self):
        with pytest.raises(GraphError, match="loop at vertex 2"):
            make_graph(3, [(2, 2)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError, match="out of range"):
            make_graph(3, [(0, 3)])

    def test_rejects_duplicate_even_reversed(self):
        with pytest.raises(GraphError, match="duplicate edge"):
            make_graph(3, [(0, 1), (1, 0)])

    def test_adjacency_matrix(self):
        g = path(3)
        assert g.adjacency_matrix() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]


class TestProducts:
    def test_hamming_2_4_is_k4_square(self):
        a = cartesian_product(complete(4), complete(4))
        assert a.edges == hamming(2, 4).edges

    def test_hypercube_is_binary_hamming(self):
        assert hypercube(3).edges == hamming(3, 2).edges

    def test_tensor_k3_k2_is_hexagon(self):
        assert isomorphic(tensor_product(complete(3), path(2)), cycle(6))

    def test_product_edge_count(self):
        g, h = cycle(5), path(4)
        p = cartesian_product(g, h)
        assert p.n == 20
        assert p.m == g.n * h.m + h.n * g.m

    def test_line_graph_of_k5_is_johnson(self):
        assert isomorphic(line_graph(complete(5)), johnson(5, 2))

    def test_line_graph_of_k33_is_hamming(self):
        k33 = make_graph(6, [(u, v) for u in range(3) for v in range(3, 6)])
        assert isomorphic(line_graph(k33), hamming(2, 3))

    def test_line_graph_of_path(self):
        assert line_graph(path(5)).edges == path(4).edges


class TestSubsetHelpers:
    def test_r_subsets_counts(self):
        assert len(r_subsets(5, 2)) == 10
        assert r_subsets(4, 1) == [1, 2, 4, 8]
        assert all(bin(s).count("1") == 3 for s in r_subsets(6, 3))

    def test_even_subsets(self):
        subs = even_subsets(4)
        assert len(subs) == 8
        assert all(bin(s).count("1") % 2 == 0 for s in subs)


class TestFamilies:
    def test_complete_path_cycle_sizes(self):
        assert complete(5).m == 10
        assert path(6).m == 5
        assert cycle(6).m == 6

    def test_cycle_3_is_triangle(self):
        assert cycle(3).edges == complete(3).edges

    def test_shrikhande_is_16_6_2_2(self):
        g = shrikhande()
        assert g.n == 16
        assert set(g.degrees()) == {6}
        common = lambda u, v: len(set(g.neighbors(u)) & set(g.neighbors(v)))
        lam = {common(u, v) for u, v in g.edges}
        mu = {common(u, v) for u in range(16) for v in range(u + 1, 16)
              if not g.has_edge(u, v)}
        assert lam == {2} and mu == {2}

    def test_shrikhande_is_not_the_rook_graph(self):
        # same strongly regular parameters, different graphs
        assert not isomorphic(shrikhande(), hamming(2, 4))

    def test_doob_1_0_is_shrikhande(self):
        assert doob(1, 0).edges == shrikhande().edges

    def test_doob_order_and_degree(self):
        g = doob(1, 1)
        assert g.n == 64
        assert set(g.degrees()) == {9}  # 6 from Shrikhande + 3 from H(1,4)

    def test_johnson_5_2_matches_reference(self):
        ref = nx.convert_node_labels_to_integers(
            nx.line_graph(nx.complete_graph(5)))
        assert isomorphic(johnson(5, 2), ref)
        g = johnson(6, 3)
        assert g.n == 20
        assert set(g.degrees()) == {9}  # r * (n - r)

    def test_kneser_petersen(self):
        assert petersen().edges == kneser(5, 2).edges
        assert isomorphic(petersen(), nx.petersen_graph())

    def test_odd_graph_is_kneser(self):
        assert odd_graph(3).edges == kneser(7, 3).edges

    def test_double_odd_2_is_desargues(self):
        g = double_odd(2)
        assert g.n == 20
        assert set(g.degrees()) == {3}
        assert isomorphic(g, nx.desargues_graph())

    def test_halved_cube_4_is_cocktail_party(self):
        assert isomorphic(halved_cube(4), cocktail_party(4))

    def test_halved_cube_order_and_degree(self):
        g = halved_cube(5)
        assert g.n == 16
        assert set(g.degrees()) == {10}  # C(5,2)

    def test_cocktail_party_structure(self):
        g = cocktail_party(3)
        assert g.n == 6 and g.m == 12
        assert not g.has_edge(2, 3)  # partners stay non-adjacent
        assert isomorphic(g, nx.complete_multipartite_graph(2, 2, 2))

    def test_icosahedron_matches_reference(self):
        g = icosahedron()
        assert g.n == 12 and g.m == 30
        assert isomorphic(g, nx.icosahedral_graph())

    def test_dodecahedron_matches_reference(self):
        g = dodecahedron()
        assert g.n == 20 and g.m == 30
        assert isomorphic(g, nx.dodecahedral_graph())

    def test_lollipop_shape(self):
        g = lollipop(4, 3)
        assert g.n == 7
        assert g.m == 6 + 3
        assert isomorphic(g, nx.lollipop_graph(4, 3))

    def test_lollipop_zero_tail_is_clique(self):
        assert lollipop(5, 0).edges == complete(5).edges

    def test_generalized_barbell_shape(self):
        g = generalized_barbell(3, 4, 2)
        assert g.n == 9
        assert g.m == 3 + 6 + 1 + 2  # K_3, K_4, path edge, two joins

    def test_barbell_is_symmetric_case(self):
        assert barbell(4, 2).edges == generalized_barbell(4, 4, 2).edges
        assert isomorphic(barbell(4, 0), nx.barbell_graph(4, 0))

    def test_barbell_zero_path_joins_cliques(self):
        g = generalized_barbell(3, 3, 0)
        assert g.n == 6
        assert g.has_edge(2, 5)

    def test_hypercube_with_leaf(self):
        g = hypercube_with_leaf(4)
        assert g.n == 17
        assert g.degree(16) == 1
        assert sorted(g.degrees()).count(5) == 1  # the support vertex

    def test_parameter_validation(self):
        with pytest.raises(GraphError):
            johnson(3, 5)
        with pytest.raises(GraphError):
            odd_graph(1)
        with pytest.raises(GraphError):
            lollipop(1, 2)
        with pytest.raises(GraphError):
            generalized_barbell(2, 2, -1)
        with pytest.raises(GraphError):
            hamming(2, 1)


class TestComplement:
    def test_complement_of_complete_is_empty(self):
        assert complement(complete(4)).m == 0

    def test_petersen_complement_is_johnson(self):
        assert isomorphic(complement(petersen()), johnson(5, 2))

    @given(st.integers(2, 8), st.data())
    def test_involution(self, n, data):
        all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = data.draw(st.lists(st.sampled_from(all_pairs), unique=True)) \
            if all_pairs else []
        g = make_graph(n, edges)
        assert complement(complement(g)) == g

    @given(st.integers(2, 8))
    def test_edge_partition(self, n):
        g = cycle(n) if n >= 3 else path(n)
        assert g.m + complement(g).m == n * (n - 1) // 2


class TestEdgeListIO:
    def test_roundtrip(self):
        g = petersen()
        assert parse_edge_list(format_edge_list(g)) == g

    def test_header_mismatch(self):
        with pytest.raises(GraphError, match="promised 2 edges, found 1"):
            parse_edge_list("3 2\n0 1\n")

    def test_bad_line_reported_by_number(self):
        with pytest.raises(GraphError, match="line 3"):
            parse_edge_list("3 2\n0 1\n1 2 9\n")

    def test_non_integer_endpoint(self):
        with pytest.raises(GraphError, match="line 2: endpoints"):
            parse_edge_list("3 1\na b\n")

    def test_bad_header(self):
        with pytest.raises(GraphError, match="line 1"):
            parse_edge_list("3\n")

    def test_invalid_edge_surfaces_context(self):
        with pytest.raises(GraphError, match="invalid edge list"):
            parse_edge_list("3 1\n0 3\n")
