"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Each criterion runs at its stated tolerance (exact equality unless noted) and
within its stated wall-clock budget.  Lines are written straight to the real
stdout so they appear even under pytest capture.

Criterion 2 asserts the published caption values for the Fig. 1 instance as
stated.  The gamma = 5 sub-assertion is expected to fail: the drawn graph has
gamma = 4 (see the repository notes for the exhaustive transcription search
that rules out any 5-valued reading), while its girth, coloring and chi_mu2
claims all verify.  The failure is left red on purpose rather than papered
over.
"""

import math
import random
import sys
import time

from kdmv.bitset import bits_list, mask_of
from kdmv.chromatic import (
    chi_i_mu2_exact,
    chi_mu_k_exact,
    clique_cover_theta,
    verify_kdmv_coloring,
)
from kdmv.constructions import (
    block_graph_coloring,
    color_strong_path_complete,
    formula_chi_mu_k,
    hypercube_neighborhood_coloring,
    product_coloring_strong,
    torus_eod_coloring,
)
from kdmv.domination import gamma_exact, gamma_t_exact
from kdmv.errors import ConditionError
from kdmv.families import (
    cycle_graph,
    dis_g6_counterexample,
    fig5_block_graph,
    fig_girth,
    from_spec,
    hypercube,
    path_graph,
    prop_pr_graph,
    star_graph,
)
from kdmv.gen import block_graphs, connected_graphs, connected_graphs_upto, girth7_graphs
from kdmv.graph import (
    all_pairs_distances,
    exact_distance_graph,
    girth,
    metrics,
    product,
)
from kdmv.visibility import NOT_DIAM2, classify_q_n_diam2_set, max_kdmv

from oracles import oracle_chi_mu_k


def _report(num: int, failures: list, t0: float, limit: float, detail: str = "") -> None:
    elapsed = time.time() - t0
    status = "PASS" if not failures and elapsed < limit else "FAIL"
    line = f"acceptance criterion {num:2d}: {status}  ({elapsed:6.1f}s / limit {limit:.0f}s)  {detail}\n"
    sys.__stdout__.write(line)
    sys.__stdout__.flush()
    assert elapsed < limit, f"criterion {num} exceeded its runtime limit"
    assert not failures, f"criterion {num}: {failures[:4]}"


def test_criterion_01_paths_and_cycles():
    t0 = time.time()
    failures = []
    for n in range(1, 13):
        p = path_graph(n)
        diam = n - 1
        for k in {1, 2, 3, max(diam, 1)}:
            r = chi_mu_k_exact(p, k)
            if not (r.is_exact and r.value == -(-n // 2)):
                failures.append(("path", n, k, r.value))
        if n >= 3:
            c = cycle_graph(n)
            diam = n // 2
            for k in {1, 2, 3, max(diam, 1)}:
                want = -(-n // 3) if n <= 3 * k else -(-n // 2)
                r = chi_mu_k_exact(c, k)
                if not (r.is_exact and r.value == want):
                    failures.append(("cycle", n, k, r.value, want))
    _report(1, failures, t0, 10)


def test_criterion_02_fig1_instance():
    t0 = time.time()
    failures = []
    g = fig_girth()
    if girth(g) != 6:
        failures.append(("girth", girth(g)))
    chi = chi_mu_k_exact(g, 2)
    if not (chi.is_exact and chi.value == 3):
        failures.append(("chi_mu2", chi.value))
    gamma = gamma_exact(g)
    if not (gamma.is_exact and gamma.value == 5):
        failures.append(("gamma", gamma.value, "caption says 5; drawn graph has 4, see notes"))
    _report(2, failures, t0, 30, f"girth={girth(g)} gamma={gamma.value} chi_mu2={chi.value}")


def test_criterion_03_gammatotal_and_girth_lower():
    t0 = time.time()
    failures = []
    count_a = 0
    for n in range(2, 9):
        for g in connected_graphs(n):
            chi = chi_mu_k_exact(g, 2)
            gt = gamma_t_exact(g)
            if not (chi.is_exact and gt.is_exact and chi.value <= gt.value):
                failures.append(("gammatotal", g.adj, chi.value, gt.value))
            count_a += 1
    count_b = 0
    for n in range(2, 11):
        for g in girth7_graphs(n):
            chi = chi_mu_k_exact(g, 2)
            ga = gamma_exact(g)
            if not (chi.is_exact and ga.is_exact and chi.value >= ga.value):
                failures.append(("girthlower", g.adj, chi.value, ga.value))
            count_b += 1
    _report(3, failures, t0, 900, f"{count_a} isolate-free + {count_b} girth>=7 instances")


def test_criterion_04_thm_dis():
    t0 = time.time()
    failures = []
    count = 0
    for n in range(2, 11):
        for g in girth7_graphs(n):
            theta2 = clique_cover_theta(exact_distance_graph(g, 2))
            chii = chi_i_mu2_exact(g)
            gt = gamma_t_exact(g)
            if not (theta2.value == chii.value == gt.value):
                failures.append((g.adj, theta2.value, chii.value, gt.value))
            count += 1
    g6 = dis_g6_counterexample()
    gt = gamma_t_exact(g6)
    th = clique_cover_theta(exact_distance_graph(g6, 2))
    if not (gt.value == 5 and th.value == 4):
        failures.append(("g6-instance", gt.value, th.value))
    _report(4, failures, t0, 900, f"{count} girth>=7 instances; g6 instance gap 5 vs 4")


def test_criterion_05_strong_path_complete():
    t0 = time.time()
    failures = []
    c = color_strong_path_complete(15, 3, 3)
    if c.num_classes != 6:
        failures.append(("fig4", c.num_classes))
    for n, m in ((6, 2), (7, 2), (8, 2)):
        g = from_spec(f"strong(path:{n},complete:{m})")
        want = formula_chi_mu_k(f"strong(path:{n},complete:{m})", 2)
        r = chi_mu_k_exact(g, 2)
        if not (r.is_exact and r.value == want):
            failures.append((n, m, r.value, want))
    _report(5, failures, t0, 300)


def test_criterion_06_strong_product_bound():
    t0 = time.time()
    failures = []
    rnd = random.Random(2024)
    pool = connected_graphs_upto(4)
    for trial in range(20):
        g = rnd.choice(pool)
        h = rnd.choice(pool)
        cg = chi_mu_k_exact(g, 2).witness
        ch = chi_mu_k_exact(h, 2).witness
        coloring = product_coloring_strong(g, h, cg, ch, 2)
        prod = product("strong", g, h)
        if not verify_kdmv_coloring(prod, 2, coloring).ok:
            failures.append(("verify", trial))
        if prod.n <= 16:
            exact = chi_mu_k_exact(prod, 2)
            if not (exact.is_exact and exact.value <= cg.num_classes * ch.num_classes):
                failures.append(("bound", trial, exact.value))
    _report(6, failures, t0, 600)


def test_criterion_07_lexicographic():
    t0 = time.time()
    failures = []
    g = product("lex", star_graph(3), path_graph(2))
    r = chi_mu_k_exact(g, 2)
    if not (r.is_exact and r.value == 2):
        failures.append(("star-lex-p2", r.value))
    from kdmv.constructions import lex_coloring_from_2dmv

    c5 = cycle_graph(5)
    cc5 = chi_mu_k_exact(c5, 2).witness
    for h in (path_graph(3), from_spec("complete:2")):
        c = lex_coloring_from_2dmv(c5, cc5, h)
        if c.num_classes != 2:
            failures.append(("c5-lex", h.name, c.num_classes))
    prod = product("lex", prop_pr_graph(), path_graph(3))
    r = chi_mu_k_exact(prod, 2, budget=10**8)
    if r.is_exact:
        if r.value != 3:
            failures.append(("proppr-lex-p3", r.value))
        mark = ""
    else:
        # runtime-limited fallback: accept only bounds pinned to 3
        if not (r.lower == 3 and r.value == 3):
            failures.append(("proppr-lex-p3-bounds", r.lower, r.value))
        mark = " (runtime-limited)"
    _report(7, failures, t0, 600, f"chi_mu2(proppr o P3) = {r.value}{mark}")


def test_criterion_08_cartesian():
    t0 = time.time()
    failures = []
    p4c4 = product("cartesian", path_graph(4), cycle_graph(4))
    r = chi_mu_k_exact(p4c4, 2)
    if not (r.is_exact and r.value == 4):
        failures.append(("p4c4", r.value))
    for m, n in ((4, 4), (8, 8)):
        coloring = torus_eod_coloring(m, n)
        if coloring.num_classes != m * n // 4:
            failures.append(("torus-classes", m, n, coloring.num_classes))
        g = from_spec(f"torus:{m},{n}")
        mu = max_kdmv(g, 2)
        if not (mu.is_exact and -(-g.n // mu.value) == m * n // 4):
            failures.append(("torus-lb", m, n, mu.value))
    _report(8, failures, t0, 600)


def test_criterion_09_hypercubes():
    t0 = time.time()
    failures = []
    gam3 = gamma_exact(hypercube(3))
    coloring = hypercube_neighborhood_coloring(3, sorted(gam3.witness))
    if coloring.num_classes != 2 or gam3.value != 2:
        failures.append(("q3", coloring.num_classes, gam3.value))
    chi3 = chi_mu_k_exact(hypercube(3), 2)
    equal = chi3.value == gam3.value  # informational probe, never a failure
    for d in range(1, 5):
        q = hypercube(d)
        dm = all_pairs_distances(q)
        for s in range(1 << q.n):
            members = bits_list(s)
            ok = all(
                dm.d[u][v] <= 2 for i, u in enumerate(members) for v in members[i + 1 :]
            )
            cls = classify_q_n_diam2_set(d, s)
            if ok == (cls.kind == NOT_DIAM2):
                failures.append(("classify", d, s, cls.kind))
                break
    _report(9, failures, t0, 300, f"chi_mu2(Q3)={chi3.value} vs gamma={gam3.value} equal={equal}")


def test_criterion_10_block_graphs():
    t0 = time.time()
    failures = []
    count = 0
    for n in range(2, 10):
        for g in block_graphs(n):
            d = all_pairs_distances(g).diameter()
            want = -(-(d + 1) // 2)
            chi_mu = chi_mu_k_exact(g, max(d, 1))
            if not (chi_mu.is_exact and chi_mu.value == want):
                failures.append(("eq-block", g.adj, chi_mu.value, want))
            if d >= 2:
                cond = metrics(g).center_info.deg_star <= want
                chi_dm1 = chi_mu_k_exact(g, d - 1)
                if (chi_dm1.value == want) != cond:
                    failures.append(("iff", g.adj, chi_dm1.value, want, cond))
                if cond:
                    c = block_graph_coloring(g)
                    if c.num_classes != want:
                        failures.append(("builder", g.adj))
                else:
                    try:
                        block_graph_coloring(g)
                        failures.append(("builder-accepted", g.adj))
                    except ConditionError:
                        pass
            count += 1
    fig5 = block_graph_coloring(fig5_block_graph())
    if fig5.num_classes != 3:
        failures.append(("fig5", fig5.num_classes))
    _report(10, failures, t0, 1200, f"{count} block graphs")


def test_criterion_11_oracle_equivalence():
    t0 = time.time()
    failures = []
    count = 0
    for n in range(1, 7):
        for g in connected_graphs(n):
            diam = all_pairs_distances(g).diameter()
            for k in {1, 2, max(diam, 1)}:
                got = chi_mu_k_exact(g, k)
                want = oracle_chi_mu_k(g, k)
                if not (got.is_exact and got.value == want):
                    failures.append((g.adj, k, got.value, want))
                count += 1
    _report(11, failures, t0, 600, f"{count} solver-vs-oracle comparisons")
