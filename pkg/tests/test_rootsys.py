import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from rootlat.cyclo import make_zeta_plus, sign, two_cos_pi
from rootlat.errors import (
    CapExceeded,
    InadmissibleType,
    InvalidRootPair,
    NonGenericFunctional,
    UnrecognizedDiagram,
)
from rootlat.rootsys import (
    CoxeterType,
    DiagramGraph,
    GramMatrix,
    RootVec,
    block_diagonal,
    catalogue_edges,
    catalogue_types,
    decompose,
    diagram_of,
    diagram_of_type,
    enumerate_roots,
    expected_roots_classical,
    fundamental_system,
    gram_of_type,
    is_totally_positive_definite,
    pair_label,
    pairing_values,
    positive_system,
    recognize_type,
    sorted_roots,
    validate_root_lattice,
    verify_fundamental,
)

T = CoxeterType.parse
CATALOGUE = catalogue_types(8) + [CoxeterType("I2", m) for m in range(5, 31)]
SMALL = [T(s) for s in ("A1", "A2", "A3", "B2", "B3", "D4", "F4", "H3", "I2(5)", "I2(8)", "I2(12)")]


def roots_of(s):
    G = gram_of_type(T(s))
    return G, enumerate_roots(G)


def as_float(roots):
    return {oracles.root_key(r) for r in roots}


def vec(*xs):
    return RootVec(xs)


# ---------------------------------------------------------------- types


def test_type_parsing_and_normalization():
    assert T("E8") == CoxeterType("E", 8)
    assert T("I2(3)") == T("A2")
    assert T("I_2(4)") == T("B2")
    assert str(T("I2(7)")) == "I2(7)"
    assert T("H_3").rank == 3 and T("I2(9)").rank == 2
    for bad in ("E9", "D3", "H5", "F5", "I2(2)", "B1", "X3", "A0"):
        with pytest.raises(InadmissibleType):
            T(bad)


def test_catalogue_contents():
    names = {str(t) for t in catalogue_types(8)}
    assert {"A1", "A8", "B2", "B8", "D4", "E6", "E7", "E8", "F4", "H3", "H4"} <= names
    assert "D3" not in names


def test_catalogue_edges_examples():
    assert catalogue_edges(T("B3")) == [(0, 1, 3), (1, 2, 4)]
    assert (1, 2, 4) in catalogue_edges(T("F4"))
    assert (0, 1, 5) in catalogue_edges(T("H3"))
    assert catalogue_edges(T("I2(7)")) == [(0, 1, 7)]


# ---------------------------------------------------------------- Gram matrices


def test_gram_examples():
    assert gram_of_type(T("A2")).to_rows() == [["2", "-1"], ["-1", "2"]]
    g = oracles.gram_float(gram_of_type(T("B3")))
    assert np.allclose(g, [[2, -1, 0], [-1, 2, -2 ** 0.5], [0, -2 ** 0.5, 2]])
    g = oracles.gram_float(gram_of_type(T("H3")))
    assert np.isclose(g[0, 1], -(1 + 5 ** 0.5) / 2)
    assert gram_of_type(T("H3")).modulus == 5
    assert gram_of_type(T("B4")).modulus == 8
    assert gram_of_type(T("E8")).modulus == 1


@pytest.mark.parametrize("t", CATALOGUE, ids=str)
def test_catalogue_grams_are_totally_positive_definite(t):
    G = gram_of_type(t)
    assert G.is_symmetric()
    assert is_totally_positive_definite(G)
    for u in oracles.coprime_units(G.modulus):
        assert np.linalg.eigvalsh(oracles.gram_float(G, u)).min() > 1e-9


def test_not_totally_positive():
    # positive definite under the fixed embedding, indefinite under the conjugate
    phi = make_zeta_plus(10)
    G = GramMatrix([[2, phi], [phi, 2]])
    assert is_totally_positive_definite(G)
    G = GramMatrix([[2, phi + 1], [phi + 1, 2]])
    assert not is_totally_positive_definite(G)
    assert np.linalg.eigvalsh(oracles.gram_float(G, 2)).min() > 0
    assert np.linalg.eigvalsh(oracles.gram_float(G, 1)).min() < 0


# ---------------------------------------------------------------- enumeration


@pytest.mark.parametrize("t", CATALOGUE, ids=str)
def test_counts(t):
    assert len(enumerate_roots(gram_of_type(t))) == t.expected_size()


@pytest.mark.parametrize("t", SMALL + [T("H4"), T("E6")], ids=str)
def test_roots_match_float_closure(t):
    G = gram_of_type(t)
    assert as_float(enumerate_roots(G)) == oracles.float_roots(G)


@pytest.mark.parametrize("s", ["A1", "A4", "A8", "B2", "B3", "B6", "D4", "D5", "D6"])
def test_classical_sets(s):
    assert enumerate_roots(gram_of_type(T(s))) == expected_roots_classical(T(s))


def test_classical_examples():
    assert len(expected_roots_classical(T("B2"))) == 8
    assert len(expected_roots_classical(T("D4"))) == 24
    assert expected_roots_classical(T("A2")) == {vec(1, 0), vec(0, 1), vec(1, 1), vec(-1, 0), vec(0, -1), vec(-1, -1)}
    with pytest.raises(InadmissibleType):
        expected_roots_classical(T("E6"))


@pytest.mark.parametrize("s", ["A3", "B3", "H3", "F4", "I2(9)"])
def test_closure_soundness(s):
    G, R = roots_of(s)
    assert {-r for r in R} == R
    for r in R:
        gr = G.apply(r.coords)
        for v in R:
            c = sum((a * b for a, b in zip(gr, v.coords)), 0 * gr[0])
            assert RootVec(x - c * y for x, y in zip(v.coords, r.coords)) in R
        assert G.pair(r.coords, r.coords) == 2


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        enumerate_roots(gram_of_type(T("E8")), cap=100)
    # positive semidefinite affine A1: infinitely many vectors of norm 2
    with pytest.raises(CapExceeded):
        enumerate_roots(GramMatrix([[2, -2], [-2, 2]]), cap=500)


# ---------------------------------------------------------------- positive / fundamental systems


def test_positive_system_a2():
    G, R = roots_of("A2")
    plus, minus = positive_system(R, G, [1, -2])
    assert {-r for r in plus} == minus
    assert len(plus) == 3
    with pytest.raises(NonGenericFunctional) as exc:
        positive_system(R, G, [2, 1])
    assert exc.value.root in (vec(0, 1), vec(0, -1))
    with pytest.raises(NonGenericFunctional):
        positive_system(R, G, [0, 0])


def test_positive_system_i2_5():
    G, R = roots_of("I2(5)")
    plus, _ = positive_system(R, G, [3, 1])
    assert len(plus) == 5


def test_fundamental_system_a2_against_brute_force():
    G, R = roots_of("A2")
    g = oracles.gram_float(G)
    floats = [np.array(k) for k in as_float(R)]
    for t in ([1, -2], [1, 0], [3, 1], [-1, 4]):
        delta = fundamental_system(R, G, t)
        assert sorted(oracles.root_key(r) for r in delta) == oracles.brute_simple_roots(floats, g, t)
    assert set(fundamental_system(R, G, [1, -2])) == {vec(1, 0), vec(-1, -1)}
    assert set(fundamental_system(R, G, [1, 0])) == {vec(0, -1), vec(1, 1)}


@pytest.mark.parametrize("t", SMALL, ids=str)
def test_fundamental_system_matches_brute_force(t):
    G = gram_of_type(t)
    R = enumerate_roots(G)
    g = oracles.gram_float(G)
    floats = [np.array(k) for k in as_float(R)]
    rng = random.Random(str(t))
    for _ in range(3):
        w = [rng.randint(-1000, 1000) for _ in range(G.size)]
        try:
            delta = fundamental_system(R, G, w)
        except NonGenericFunctional:
            continue
        assert sorted(oracles.root_key(r) for r in delta) == oracles.brute_simple_roots(floats, g, w)


def test_fundamental_system_i2_5_pairing():
    G, R = roots_of("I2(5)")
    a, b = fundamental_system(R, G, [3, 1])
    assert G.pair(a.coords, b.coords) == -two_cos_pi(1, 5)


def test_verify_fundamental_rejects_non_simple_basis():
    G, R = roots_of("A2")
    from rootlat.errors import VerificationFailure

    with pytest.raises(VerificationFailure):
        verify_fundamental([vec(1, 0), vec(1, 1)], R)  # alpha_2 = (a1+a2) - a1 mixes signs


@pytest.mark.parametrize("t", CATALOGUE, ids=str)
def test_catalogue_round_trip(t):
    G = gram_of_type(t)
    delta = fundamental_system(enumerate_roots(G), G)
    assert recognize_type(diagram_of(delta, G)) == [t]
    for i, a in enumerate(delta):
        for b in delta[i + 1:]:
            assert pair_label(a, b, G) >= 2
            assert sign(G.pair(a.coords, b.coords)) <= 0


def _nx(D):
    g = nx.Graph()
    g.add_nodes_from(range(D.n))
    g.add_edges_from((i, j, {"m": m}) for i, j, m in D.edges)
    return g


@pytest.mark.parametrize("t", [T(s) for s in ("A5", "B4", "D5", "E6", "E7", "F4", "H4", "I2(11)")], ids=str)
def test_random_functionals_give_isomorphic_diagrams(t):
    G = gram_of_type(t)
    R = enumerate_roots(G)
    ref = _nx(diagram_of_type(t))
    rng = random.Random(str(t))
    for _ in range(5):
        w = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(G.size)]
        D = diagram_of(fundamental_system(R, G, w), G)
        assert nx.is_isomorphic(_nx(D), ref, edge_match=lambda a, b: a["m"] == b["m"])


# ---------------------------------------------------------------- diagrams


def test_pair_label_examples():
    G, R = roots_of("A2")
    assert pair_label(vec(1, 0), vec(0, 1), G) == 3
    G = gram_of_type(T("B3"))
    assert pair_label(vec(0, 1, 0), vec(0, 0, 1), G) == 4
    assert pair_label(vec(1, 0, 0), vec(0, 0, 1), G) == 2
    G = gram_of_type(T("H3"))
    assert pair_label(vec(1, 0, 0), vec(0, 1, 0), G) == 5
    with pytest.raises(InvalidRootPair):
        pair_label(vec(1, 0), vec(1, 1), gram_of_type(T("A2")))  # pairing +1


def test_diagram_examples():
    G, R = roots_of("A3")
    D = diagram_of(fundamental_system(R, G), G)
    assert len(D.edges) == 2 and all(m == 3 for _, _, m in D.edges)
    G, R = roots_of("F4")
    D = diagram_of(fundamental_system(R, G), G)
    assert sorted(m for _, _, m in D.edges) == [3, 3, 4]
    G = GramMatrix([[2, 0], [0, 2]])
    D = diagram_of(fundamental_system(enumerate_roots(G), G), G)
    assert D.n == 2 and D.edges == ()


def test_recognize_examples():
    assert recognize_type(DiagramGraph(4, ((0, 1, 3), (1, 2, 3), (2, 3, 3)))) == [T("A4")]
    assert recognize_type(DiagramGraph(2, ())) == [T("A1"), T("A1")]
    assert recognize_type(diagram_of_type(T("E8"))) == [T("E8")]
    # relabelled vertices still recognized
    assert recognize_type(DiagramGraph(4, ((0, 3, 3), (1, 3, 3), (2, 3, 3)))) == [T("D4")]
    assert recognize_type(DiagramGraph(3, ((0, 2, 4), (1, 2, 3)))) == [T("B3")]


@pytest.mark.parametrize("edges, n", [
    (((0, 1, 3), (1, 2, 3), (2, 0, 3)), 3),            # cycle
    (((0, 1, 4), (1, 2, 4)), 3),                      # two labels 4
    (((0, 1, 5), (1, 2, 3), (2, 3, 3), (3, 4, 3)), 5),  # H5
    (((0, 1, 3), (1, 2, 6)), 3),                      # label 6 in rank 3
    (((0, 1, 3), (0, 2, 3), (0, 3, 3), (0, 4, 3)), 5),  # degree 4
    (((0, 1, 3), (1, 2, 3), (1, 3, 3), (3, 4, 3), (4, 5, 3), (2, 6, 3), (6, 7, 3)), 8),  # T(2,3,3)
])
def test_unrecognized_diagrams(edges, n):
    with pytest.raises(UnrecognizedDiagram):
        recognize_type(DiagramGraph(n, edges))


@pytest.mark.parametrize("t", catalogue_types(8), ids=str)
def test_recognition_invariant_under_relabelling(t):
    D = diagram_of_type(t)
    rng = random.Random(str(t))
    perm = list(range(D.n))
    rng.shuffle(perm)
    edges = tuple(sorted((min(perm[i], perm[j]), max(perm[i], perm[j]), m) for i, j, m in D.edges))
    assert recognize_type(DiagramGraph(D.n, edges)) == [t]


def test_dot_rendering():
    dot = diagram_of_type(T("B3")).to_dot()
    assert 'label="4"' in dot and dot.count("--") == 2


# ---------------------------------------------------------------- decomposition and validation


def test_decompose_examples():
    parts = decompose(GramMatrix([[2, 0], [0, 2]]))
    assert [idx for idx, _ in parts] == [(0,), (1,)]
    assert len(decompose(gram_of_type(T("E6")))) == 1
    G = block_diagonal(gram_of_type(T("A2")), gram_of_type(T("B2")))
    parts = decompose(G)
    assert [idx for idx, _ in parts] == [(0, 1), (2, 3)]
    assert parts[1][1] == gram_of_type(T("B2"))


def test_reducible_lattice_round_trip():
    G = block_diagonal(gram_of_type(T("A2")), gram_of_type(T("H3")))
    R = enumerate_roots(G)
    assert len(R) == 6 + 30
    D = diagram_of(fundamental_system(R, G), G)
    assert sorted(recognize_type(D)) == sorted([T("A2"), T("H3")])


def test_validate_examples():
    G, R = roots_of("A2")
    assert validate_root_lattice(G, R).ok
    bad = validate_root_lattice(GramMatrix([[2, 0], [0, 3]]), [vec(1, 0)])
    assert not bad.ok and "diagonal" in bad.failed
    G, R = roots_of("H3")
    rep = validate_root_lattice(G, R)
    assert rep.ok and rep.n_roots == 30
    floats = [np.array(k) for k in as_float(R)]
    g = oracles.gram_float(G)
    distinct = {round(float(a @ g @ b), 6) for a in floats for b in floats}
    assert rep.n_pairing_values == len(distinct)


def test_validate_flags_non_root():
    G, R = roots_of("A2")
    rep = validate_root_lattice(G, list(R) + [vec(1, -1)])
    assert "self_pairing" in rep.failed


def test_pairing_values_match_pairwise():
    G, R = roots_of("B3")
    R = sorted_roots(R)
    table = pairing_values(G, R)
    direct = {G.pair(a.coords, b.coords) for a in R for b in R}
    assert set(table.values()) == direct


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SMALL), st.lists(st.integers(-50, 50), min_size=4, max_size=4))
def test_simple_roots_pair_nonpositively(t, w):
    G = gram_of_type(t)
    R = enumerate_roots(G)
    try:
        delta = fundamental_system(R, G, w[: G.size])
    except NonGenericFunctional:
        return
    assert len(delta) == G.size
    for i, a in enumerate(delta):
        for b in delta[i + 1:]:
            assert sign(G.pair(a.coords, b.coords)) <= 0
