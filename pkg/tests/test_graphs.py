"""Graph engine: matrices, constructions, connectivity, join spectra, export."""

import math

import numpy as np
import pytest

from essgraph.eigen import group_eigenvalues, spectra_close
from essgraph.graphs import (
    LabeledGraph,
    adjacency_matrix,
    complement,
    complete_graph,
    components,
    generalized_join,
    graph_spectrum,
    is_connected,
    join,
    join_laplacian_spectrum,
    laplacian_matrix,
    matrix_for,
    normalized_laplacian_matrix,
    null_graph,
    signless_laplacian_matrix,
    to_dot,
    to_edge_list,
    vertex_connectivity,
    vertex_connectivity_exhaustive,
)

RNG = np.random.default_rng(987654321)


def random_graph(n: int, p: float) -> LabeledGraph:
    adj = np.triu(RNG.random((n, n)) < p, k=1)
    return LabeledGraph.from_adjacency(tuple(range(n)), adj | adj.T)


def path_graph(n: int) -> LabeledGraph:
    return LabeledGraph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> LabeledGraph:
    return LabeledGraph(range(n), [(i, (i + 1) % n) for i in range(n)])


def test_construction_validations():
    with pytest.raises(ValueError):
        LabeledGraph(["a", "a"])
    with pytest.raises(ValueError):
        LabeledGraph(["a", "b"], [("a", "a")])
    with pytest.raises(ValueError):
        LabeledGraph.from_adjacency(["a", "b"], np.array([[0, 1], [0, 0]], dtype=bool))
    with pytest.raises(ValueError):
        LabeledGraph.from_adjacency(["a", "b"], np.eye(2, dtype=bool))


def test_adjacency_is_readonly():
    g = complete_graph("abc")
    with pytest.raises(ValueError):
        g.adjacency()[0, 1] = False


def test_basic_accessors():
    g = LabeledGraph("abcd", [("a", "b"), ("b", "c")])
    assert g.order == 4 and g.size == 2
    assert g.has_edge("a", "b") and not g.has_edge("a", "c")
    assert g.neighbors("b") == ("a", "c")
    assert g.degree("b") == 2 and g.degree("d") == 0
    assert g.edges() == [("a", "b"), ("b", "c")]


def test_adjacency_matrix_examples():
    assert np.array_equal(adjacency_matrix(complete_graph("ab")), [[0, 1], [1, 0]])
    assert np.array_equal(adjacency_matrix(null_graph("abc")), np.zeros((3, 3)))
    spec = graph_spectrum(path_graph(3), "adjacency")
    assert np.allclose(spec.values(), [math.sqrt(2), 0.0, -math.sqrt(2)], atol=1e-10)


def test_laplacian_examples():
    assert np.array_equal(laplacian_matrix(complete_graph("ab")), [[1, -1], [-1, 1]])
    assert graph_spectrum(complete_graph("ab"), "laplacian").entries == ((2.0, 1), (0.0, 1))
    assert graph_spectrum(complete_graph("abc"), "laplacian").entries == ((3.0, 2), (0.0, 1))
    assert graph_spectrum(complete_graph("ab"), "signless").entries == ((2.0, 1), (0.0, 1))
    q = signless_laplacian_matrix(cycle_graph(4))
    assert np.all(q >= 0)


def test_laplacian_zero_row_sums():
    g = random_graph(9, 0.4)
    assert np.allclose(laplacian_matrix(g).sum(axis=1), 0.0)


def test_normalized_laplacian():
    assert graph_spectrum(complete_graph("ab"), "normalized").entries == ((2.0, 1), (0.0, 1))
    # d-regular: normalized Laplacian is I - A/d
    g = cycle_graph(6)
    expected = np.eye(6) - adjacency_matrix(g) / 2.0
    assert np.allclose(normalized_laplacian_matrix(g), expected)
    # isolated vertices keep zero rows, diagonal 1 elsewhere
    g = LabeledGraph("abc", [("a", "b")])
    m = normalized_laplacian_matrix(g)
    assert np.allclose(m[2], 0.0)
    assert m[0, 0] == 1.0 and m[1, 1] == 1.0
    spec = graph_spectrum(g, "normalized")
    assert spec.values().max() <= 2.0 + 1e-12 and spec.values().min() >= -1e-12


def test_matrix_for_rejects_unknown_kind():
    with pytest.raises(ValueError):
        matrix_for(complete_graph("ab"), "weighted")


def test_complement():
    assert complement(complete_graph("abcd")) == null_graph("abcd")
    assert complement(null_graph("abc")) == complete_graph("abc")
    g = random_graph(8, 0.5)
    assert complement(complement(g)) == g


def test_join_examples():
    k2 = join(null_graph("a"), null_graph("b"))
    assert k2 == complete_graph("ab")
    assert join(complete_graph("ab"), complete_graph("cde")) == complete_graph("abcde")
    c4 = join(null_graph("ab"), null_graph("cd"))
    assert c4.size == 4 and all(d == 2 for d in c4.degrees())
    g1, g2 = random_graph(5, 0.5), random_graph(4, 0.5)
    joined = generalized_join(complete_graph("xy"), [g1, LabeledGraph([f"r{i}" for i in range(4)], [])])
    assert joined.size == g1.size + 0 + 5 * 4


def test_generalized_join_examples():
    assert generalized_join(complete_graph("xy"), [null_graph(["a"]), null_graph(["b"])]) == complete_graph("ab")
    # two-class blowup gives a complete bipartite graph
    kb = generalized_join(
        complete_graph("xy"), [null_graph(["a", "b", "c"]), null_graph(["d", "e"])]
    )
    assert kb.size == 6 and not kb.has_edge("a", "b") and kb.has_edge("a", "d")
    host = path_graph(3)
    blown = generalized_join(host, [null_graph(["a"]), null_graph(["b", "c"]), null_graph(["d"])])
    assert blown.size == 1 * 2 + 2 * 1
    with pytest.raises(ValueError):
        generalized_join(host, [null_graph("a")])


def test_components_and_connectivity_predicates():
    assert is_connected(complete_graph("a"))
    assert is_connected(null_graph([]))
    assert not is_connected(null_graph("ab"))
    g = LabeledGraph("abcd", [("a", "b"), ("c", "d")])
    assert components(g) == (("a", "b"), ("c", "d"))


def test_vertex_connectivity_examples():
    assert vertex_connectivity(complete_graph("abcd")) == 3
    assert vertex_connectivity(cycle_graph(4)) == 2
    assert vertex_connectivity(path_graph(5)) == 1
    assert vertex_connectivity(null_graph("ab")) == 0
    assert vertex_connectivity(complete_graph("a")) == 0
    star = LabeledGraph("abcd", [("a", "b"), ("a", "c"), ("a", "d")])
    assert vertex_connectivity(star) == 1


def test_vertex_connectivity_agrees_with_exhaustive_oracle():
    for trial in range(120):
        g = random_graph(int(RNG.integers(2, 9)), float(RNG.uniform(0.15, 0.95)))
        assert vertex_connectivity(g) == vertex_connectivity_exhaustive(g), g.edges()


def test_join_laplacian_spectrum_examples():
    null2 = group_eigenvalues([0.0, 0.0])
    c4 = join_laplacian_spectrum(null2, 2, null2, 2)
    assert np.allclose(c4.values(), [4.0, 2.0, 2.0, 0.0], atol=1e-12)
    k2 = group_eigenvalues([2.0, 0.0])
    res = join_laplacian_spectrum(k2, 2, null2, 2)
    assert np.allclose(res.values(), [4.0, 4.0, 2.0, 0.0], atol=1e-12)
    k1 = group_eigenvalues([0.0])
    assert np.allclose(join_laplacian_spectrum(k1, 1, k1, 1).values(), [2.0, 0.0], atol=1e-12)


def test_join_laplacian_spectrum_rejects_bad_input():
    no_zero = group_eigenvalues([1.0, 2.0])
    with pytest.raises(ValueError):
        join_laplacian_spectrum(no_zero, 2, group_eigenvalues([0.0, 1.0]), 2)
    with pytest.raises(ValueError):
        join_laplacian_spectrum(group_eigenvalues([0.0]), 2, group_eigenvalues([0.0]), 1)


def test_join_laplacian_matches_direct_eigensolve():
    for trial in range(40):
        n1, n2 = int(RNG.integers(1, 8)), int(RNG.integers(1, 8))
        g1 = random_graph(n1, float(RNG.uniform(0.2, 0.9)))
        g2 = random_graph(n2, float(RNG.uniform(0.2, 0.9)))
        g2 = LabeledGraph.from_adjacency([n1 + i for i in range(n2)], g2.adjacency())
        formula = join_laplacian_spectrum(
            graph_spectrum(g1, "laplacian"), n1, graph_spectrum(g2, "laplacian"), n2
        )
        direct = graph_spectrum(join(g1, g2), "laplacian")
        assert spectra_close(formula, direct, tol=1e-8), (g1.edges(), g2.edges())


def test_zero_multiplicity_counts_components():
    for trial in range(30):
        g = random_graph(int(RNG.integers(2, 11)), float(RNG.uniform(0.1, 0.7)))
        spec = graph_spectrum(g, "laplacian")
        assert spec.multiplicity_of(0.0, tol=1e-7) == len(components(g))


def test_trace_identities():
    for trial in range(25):
        g = random_graph(int(RNG.integers(2, 11)), float(RNG.uniform(0.1, 0.9)))
        assert graph_spectrum(g, "adjacency").total() == pytest.approx(0.0, abs=1e-9)
        assert graph_spectrum(g, "laplacian").total() == pytest.approx(2 * g.size, abs=1e-8)
        assert graph_spectrum(g, "signless").total() == pytest.approx(2 * g.size, abs=1e-8)
        non_isolated = int(np.count_nonzero(g.degrees()))
        assert graph_spectrum(g, "normalized").total() == pytest.approx(non_isolated, abs=1e-8)


def test_fiedler_complement_relation():
    # largest Laplacian eigenvalue = order - algebraic connectivity of the complement
    for trial in range(40):
        n = int(RNG.integers(2, 13))
        g = random_graph(n, float(RNG.uniform(0.1, 0.9)))
        b = graph_spectrum(g, "laplacian").largest
        a_comp = graph_spectrum(complement(g), "laplacian").second_smallest()
        assert b == pytest.approx(n - a_comp, abs=1e-8)


def test_induced_subgraph():
    g = LabeledGraph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])
    sub = g.induced(["a", "b", "d"])
    assert sub.labels == ("a", "b", "d")
    assert sub.edges() == [("a", "b"), ("a", "d")]


def test_graph_equality_is_label_based():
    g1 = LabeledGraph("ab", [("a", "b")])
    g2 = LabeledGraph("ba", [("b", "a")])
    assert g1 == g2
    assert g1 != LabeledGraph("ab")


def test_dot_export():
    text = to_dot(complete_graph("ab"), name="K2")
    assert text.startswith("graph K2 {")
    assert 'v0 [label="a"];' in text
    assert "v0 -- v1;" in text
    colored = to_dot(complete_graph("ab"), fillcolor=lambda lab: "red")
    assert 'fillcolor="red"' in colored


def test_edge_list_export():
    text = to_edge_list(path_graph(3))
    assert "# vertices: 3  edges: 2" in text
    assert "0 1" in text and "1 2" in text
