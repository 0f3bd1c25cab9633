"""Acceptance suite: one test per criterion, summarised as PASS/FAIL lines at the end of the run."""

import time

import pytest

from conftest import ENVELOPE, ice_graph
from icecrystal.crystal_graph import (
    CrystalGraph,
    check_axioms_C1_C6,
    find_highest_weights,
    generate,
    highest_weight_model,
    verify_staircase,
)
from icecrystal.crystal_ops import (
    e_op,
    epsilon,
    f_op,
    phi,
    reduce_signature,
    signature,
)
from icecrystal.ice_model import BRUTE_FORCE_CAP, brute_force_enumerate, brute_force_size, validate
from icecrystal.stembridge import path_stats, verify_regular
from icecrystal.tableau_oracle import crystal_isomorphic, dimension, enumerate_ssyt, tableau_crystal

criterion = pytest.mark.criterion


@criterion(1, "isomorphism with the tableau crystal over the envelope, under 10 s")
def test_isomorphism_over_envelope():
    start = time.perf_counter()
    failures = []
    for lam in ENVELOPE:
        result = crystal_isomorphic(generate(lam), tableau_crystal(lam, lam.n))
        if not result:
            failures.append((str(lam), result.witness))
    elapsed = time.perf_counter() - start
    assert failures == []
    assert elapsed < 10.0, f"took {elapsed:.1f}s"


def _single_edge_mutants(g):
    nodes = sorted(g.nodes)
    for k, (a, i, b) in enumerate(g.edges):
        rest = g.edges[:k] + g.edges[k + 1:]
        yield rest
        for x in nodes:
            if x != b:
                yield rest + [(a, i, x)]
            if x != a:
                yield rest + [(x, i, b)]
        for j in g.colors:
            if j != i:
                yield rest + [(a, j, b)]


@criterion(2, "regularity over the envelope; every single-edge mutation of (2,1,0) is caught")
def test_regularity():
    reports = {str(lam): verify_regular(ice_graph(lam)) for lam in ENVELOPE}
    assert {k: r.violations[:1] for k, r in reports.items() if not r.ok} == {}

    g = generate((2, 1, 0))
    mutants = list(_single_edge_mutants(g))
    assert len(mutants) == 8 + 56 + 56 + 8
    missed = [edges for edges in mutants if verify_regular(CrystalGraph(g.lam, g.nodes, edges)).ok]
    assert missed == []


@criterion(3, "crystal axioms hold; signature eps/phi equal path lengths")
def test_crystal_axioms():
    for lam in ENVELOPE:
        g = ice_graph(lam)
        assert check_axioms_C1_C6(g) == [], str(lam)
        for key, m in g.payload.items():
            for i in g.colors:
                assert (epsilon(m, i), phi(m, i)) == path_stats(g, key, i), (str(lam), key, i)


@criterion(4, "generated = brute force = SSYT = Weyl dimension; anchors 8, 15, 2")
def test_counting():
    brute_checked = 0
    for lam in ENVELOPE:
        g = ice_graph(lam)
        size = len(g.nodes)
        assert size == len(enumerate_ssyt(lam, lam.n)) == dimension(lam, lam.n), str(lam)
        if brute_force_size(lam) <= BRUTE_FORCE_CAP:
            brute = brute_force_enumerate(lam)
            assert {m.key() for m in brute} == set(g.nodes), str(lam)
            brute_checked += 1
    assert brute_checked >= 40
    for lam, count in [((2, 1, 0), 8), ((3, 1, 0), 15), ((1, 0), 2)]:
        assert len(generate(lam).nodes) == len(enumerate_ssyt(lam, len(lam))) == count


@criterion(5, "one source per graph, of weight lambda, passing all staircase clauses")
def test_unique_highest_weight():
    for lam in ENVELOPE:
        g = ice_graph(lam)
        sources = find_highest_weights(g)
        assert len(sources) == 1, str(lam)
        [src] = sources
        assert g.nodes[src] == lam.parts
        report = verify_staircase(g.payload[src])
        assert sorted(report.clauses) == list("abcde")
        assert report.ok, (str(lam), report.failures())
        assert all(e_op(g.payload[src], i) is None for i in g.colors)


def _diff(a, b):
    h = {("h", r, c) for r, row in enumerate(a.h) for c, x in enumerate(row) if b.h[r][c] is not x}
    v = {("v", r, c) for r, row in enumerate(a.v) for c, x in enumerate(row) if b.v[r][c] is not x}
    return h | v


@criterion(6, "operator laws: inverses, box motion, locality, empty first column")
def test_operator_laws():
    for lam in ENVELOPE:
        for m in ice_graph(lam).payload.values():
            assert validate(m) == []
            assert all(q != 1 for _, q in m.boxes)
            for i in range(1, lam.n):
                red = reduce_signature(signature(m, i))
                down = f_op(m, i)
                if down is not None:
                    p, q = red.first_l
                    assert p == i
                    assert e_op(down, i) == m
                    assert down.boxes == (m.boxes - {(i, q)}) | {(i + 1, q - 1)}
                    assert _diff(m, down) == {("h", i - 1, q - 1), ("h", i, q - 1),
                                              ("v", i, q - 2), ("v", i, q - 1)}
                up = e_op(m, i)
                if up is not None:
                    p, q = red.last_r
                    assert p == i + 1
                    assert f_op(up, i) == m
                    assert up.boxes == (m.boxes - {(i + 1, q)}) | {(i, q + 1)}
                    assert _diff(m, up) == {("h", i - 1, q), ("h", i, q),
                                            ("v", i, q - 1), ("v", i, q)}


@criterion(7, "worked example: signatures, vanishing operators, e_1 image")
def test_worked_example(e1_before, e1_after, model_3x5):
    assert e1_before.boxes == {(2, 3), (3, 4), (1, 5)}
    assert [t.kind for t in signature(e1_before, 1)] == ["R", "L"]
    assert [t.kind for t in signature(e1_before, 2)] == ["L", "R"]
    assert f_op(e1_before, 2) is None
    assert e_op(e1_before, 2) is None
    image = e_op(e1_before, 1)
    assert image.boxes == {(1, 4), (3, 4), (1, 5)}
    assert image == e1_after
    assert model_3x5.boxes == {(2, 3), (1, 5), (2, 5)}
    assert f_op(highest_weight_model((2, 1, 0)), 1) == model_3x5
