"""Domination solvers, 2-packing, EOD, and the neighborhood partitions."""

import pytest

from kdmv.bitset import mask_of
from kdmv.chromatic import chi_mu_k_exact
from kdmv.domination import (
    efficient_open_dominating_set,
    gamma_exact,
    gamma_k_exact,
    gamma_t_exact,
    is_total_dominating,
    neighborhood_i2dmv_partition,
    rho2_exact,
    total_dom_partition,
)
from kdmv.errors import DomainError
from kdmv.families import (
    complete_graph,
    corona,
    cycle_graph,
    fig1_tree,
    fig_girth,
    from_spec,
    hypercube,
    path_graph,
    star_graph,
    torus,
)
from kdmv.graph import Graph
from kdmv.visibility import is_kdmv_set

from oracles import (
    oracle_gamma,
    oracle_gamma_k,
    oracle_gamma_t,
    oracle_is_eod,
    oracle_rho2,
)


def test_gamma_paths():
    for n in range(1, 13):
        assert gamma_exact(path_graph(n)).value == -(-n // 3)


def test_gamma_t_examples():
    for n in range(2, 8):
        assert gamma_t_exact(complete_graph(n)).value == 2
    assert gamma_t_exact(fig1_tree(2, 2, 1)).value == 4
    assert gamma_t_exact(fig1_tree(2, 2, 3)).value == 8
    with pytest.raises(DomainError):
        gamma_t_exact(Graph.from_edges(3, [(0, 1)]))


def test_gamma_fig_girth():
    # drawn-figure value; see notes about the caption discrepancy
    assert gamma_exact(fig_girth()).value == 4


def test_hypercube_domination():
    assert gamma_exact(hypercube(3)).value == 2
    assert gamma_exact(hypercube(4)).value == 4


def test_rho2_examples():
    assert rho2_exact(cycle_graph(4)).value == 1
    assert rho2_exact(path_graph(4)).value == 2
    assert rho2_exact(complete_graph(6)).value == 1
    for h in (path_graph(3), cycle_graph(4), complete_graph(3)):
        assert rho2_exact(corona(h)).value == h.n


def test_solvers_match_oracles(connected_upto_6):
    for g in connected_upto_6:
        if g.n > 5:
            continue
        assert gamma_exact(g).value == oracle_gamma(g)
        assert rho2_exact(g).value == oracle_rho2(g)
        assert gamma_k_exact(g, 2).value == oracle_gamma_k(g, 2)
        if g.min_degree() >= 1:
            assert gamma_t_exact(g).value == oracle_gamma_t(g)


def test_witnesses_are_valid_and_sorted():
    g = fig_girth()
    r = gamma_t_exact(g)
    assert list(r.witness) == sorted(r.witness)
    assert is_total_dominating(g, r.witness)


def test_total_dom_partition():
    t = fig1_tree(2, 2, 1)
    gt = gamma_t_exact(t)
    col = total_dom_partition(t, list(gt.witness))
    assert col.num_classes <= gt.value
    for members in col.class_lists():
        assert is_kdmv_set(t, mask_of(members), 2)
    # star: center plus one leaf
    s = star_graph(4)
    col = total_dom_partition(s, [0, 1])
    assert col.num_classes == 2
    with pytest.raises(DomainError):
        total_dom_partition(s, [1, 2])  # not total dominating
    # C6 with an exact gamma_t-set
    c6 = cycle_graph(6)
    gt6 = gamma_t_exact(c6)
    col = total_dom_partition(c6, list(gt6.witness))
    for members in col.class_lists():
        assert is_kdmv_set(c6, mask_of(members), 2)


def test_total_dom_partition_certifies_gammatotal_bound(connected_upto_6):
    for g in connected_upto_6[::6]:
        if g.min_degree() < 1:
            continue
        gt = gamma_t_exact(g)
        col = total_dom_partition(g, list(gt.witness))
        assert chi_mu_k_exact(g, 2).value <= col.num_classes <= gt.value


def test_neighborhood_i2dmv_partition():
    c7 = cycle_graph(7)
    col = neighborhood_i2dmv_partition(c7, list(gamma_t_exact(c7).witness))
    for members in col.class_lists():
        assert is_kdmv_set(c7, mask_of(members), 2)
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                assert not c7.has_edge(u, v)
    t = fig1_tree(2, 2, 3)  # trees qualify, girth infinite
    neighborhood_i2dmv_partition(t, list(gamma_t_exact(t).witness))
    with pytest.raises(DomainError):
        neighborhood_i2dmv_partition(cycle_graph(6), [0, 1, 3, 4])


def test_eod():
    d = efficient_open_dominating_set(cycle_graph(4))
    assert d is not None and oracle_is_eod(cycle_graph(4), d)
    assert efficient_open_dominating_set(complete_graph(3)) is None
    t44 = torus(4, 4)
    d = efficient_open_dominating_set(t44)
    assert d is not None and len(d) == 4 and oracle_is_eod(t44, d)


def test_eod_matches_bruteforce(connected_upto_6):
    from itertools import combinations

    for g in connected_upto_6:
        if g.n > 5:
            continue
        found = efficient_open_dominating_set(g)
        brute = any(
            oracle_is_eod(g, sub)
            for size in range(0, g.n + 1)
            for sub in combinations(range(g.n), size)
        )
        assert (found is not None) == brute
        if found is not None:
            assert oracle_is_eod(g, found)


def test_budgeted_domination_bounds():
    g = torus(6, 6)  # ceil(36/5) = 8 < gamma = 10, so tiny budgets cannot close
    r = gamma_exact(g, budget=2)
    assert r.status == "BoundsOnly" and r.lower <= r.value
