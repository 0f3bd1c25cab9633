import pytest

from conftest import ENVELOPE, ice_graph, tab_graph
from icecrystal.crystal_graph import CrystalGraph, check_axioms_C1_C6, generate
from icecrystal.crystal_ops import Weight, epsilon, phi
from icecrystal.ice_model import Partition
from icecrystal.stembridge import CartanA, local_quantities, path_stats, verify_regular


def _graph(lam, edges, names=None):
    lam = Partition(lam)
    names = names or sorted({x for a, _, b in edges for x in (a, b)})
    zero = Weight((0,) * lam.n)
    return CrystalGraph(lam, {k: zero for k in names}, list(edges))


def test_cartan_a():
    assert CartanA(3).matrix() == [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
    assert CartanA(1).matrix() == [[2]]
    assert CartanA(4).entry(1, 3) == 0


def test_path_stats_on_a_single_edge():
    g = generate((1, 0))
    [top] = g.sources()
    bottom = g.f(top, 1)
    assert path_stats(g, top, 1) == (0, 1)
    assert path_stats(g, bottom, 1) == (1, 0)


def test_path_stats_isolated_node():
    g = _graph((1, 0), [], names=["x"])
    assert path_stats(g, "x", 1) == (0, 0)


def test_path_stats_matches_signature_counts():
    g = generate((2, 1, 0))
    for key, m in g.payload.items():
        for i in (1, 2):
            assert path_stats(g, key, i) == (epsilon(m, i), phi(m, i))


@pytest.mark.parametrize("lam", [(2, 1, 0), (3, 1, 0), (2, 1, 0, 0), (2, 2, 1, 0)], ids=str)
def test_local_quantities_pairing(lam):
    g = generate(lam)
    cartan = CartanA(g.n - 1)
    for b in g.nodes:
        for i in g.colors:
            for j in g.colors:
                q = local_quantities(g, b, i, j)
                if g.e(b, i) is None:
                    assert q.d_phi is None and q.d_eps is None
                    continue
                if i == j:
                    assert (q.d_phi, q.d_eps) == (1, 1)
                else:
                    assert q.d_phi + q.d_eps == cartan.entry(i, j)
                    if abs(i - j) >= 2:
                        assert (q.d_phi, q.d_eps) == (0, 0)


@pytest.mark.parametrize("lam", ENVELOPE, ids=str)
def test_generated_crystals_are_regular(lam):
    report = verify_regular(ice_graph(lam))
    assert report.ok, report.violations[:3]
    assert report.notices == []


@pytest.mark.parametrize("lam", [lam for lam in ENVELOPE if lam.n <= 3], ids=str)
def test_tableau_crystals_are_regular(lam):
    assert verify_regular(tab_graph(lam)).ok


def test_parallel_edges_violate_r2():
    g = _graph((1, 0, 0), [("a", 1, "b"), ("a", 1, "c")])
    report = verify_regular(g)
    assert report.axioms()["R2"] == 1
    assert report.violations[0].node == "a"
    assert report.notices


def test_double_incoming_violates_r2():
    report = verify_regular(_graph((1, 0, 0), [("a", 2, "c"), ("b", 2, "c")]))
    assert set(report.axioms()) == {"R2"}


def test_cycle_violates_r1():
    report = verify_regular(_graph((1, 0), [("a", 1, "b"), ("b", 1, "a")]))
    assert set(report.axioms()) == {"R1"}
    assert report.violations[0].colors == (1,)


def test_two_color_cycle_is_allowed_by_r1():
    report = verify_regular(_graph((1, 0, 0), [("a", 1, "b"), ("b", 2, "a")]))
    assert "R1" not in report.axioms()


def test_wrong_pairing_violates_r3():
    # a square with commuting colors 1 and 2 breaks the -1 Cartan entry
    edges = [("a", 1, "b"), ("a", 2, "c"), ("b", 2, "d"), ("c", 1, "d")]
    report = verify_regular(_graph((1, 0, 0), edges))
    assert "R3" in report.axioms()


def test_verifier_ignores_recorded_e_edges():
    g = generate((2, 1, 0))
    broken = CrystalGraph(g.lam, g.nodes, g.edges[1:], e_edges=g.e_edges)
    assert not verify_regular(broken).ok


def _mutants(g):
    """Single deletions, rewired targets, rewired sources and recolored edges."""
    nodes = sorted(g.nodes)
    for k, (a, i, b) in enumerate(g.edges):
        rest = g.edges[:k] + g.edges[k + 1:]
        yield "delete", rest
        for x in nodes:
            if x != b:
                yield "dst", rest + [(a, i, x)]
            if x != a:
                yield "src", rest + [(x, i, b)]
        for j in g.colors:
            if j != i:
                yield "color", rest + [(a, j, b)]


@pytest.mark.parametrize("lam", [(2, 1, 0), (1, 1, 0), (1, 0, 0), (3, 1, 0), (2, 1, 0, 0)], ids=str)
def test_every_single_edge_mutation_is_detected(lam):
    g = generate(lam)
    missed = [(kind, edges) for kind, edges in _mutants(g)
              if verify_regular(CrystalGraph(g.lam, g.nodes, edges)).ok]
    assert missed == []


def test_rank_one_deletion_stays_regular():
    # splitting a single string leaves two strings; only the weight axiom sees it
    g = generate((2, 0))
    split = CrystalGraph(g.lam, g.nodes, g.edges[1:])
    assert verify_regular(split).ok
    assert {v.clause for v in check_axioms_C1_C6(split)} == {"C1"}
