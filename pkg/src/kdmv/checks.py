"""Corpus-driven theorem checks, open-problem probes, and the report schema.

Every check carries the hypothesis filter of the theorem it verifies;
instances outside the hypothesis are recorded as skips, never as passes.
Open-problem probes report findings but cannot fail a suite.  Reports are
deterministic: fixed corpus order, fixed check order, sorted JSON keys.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .bitset import bit, bits_list, iter_bits
from .chromatic import (
    chi_i_mu2_exact,
    chi_mu_k_exact,
    clique_cover_theta,
    verify_kdmv_coloring,
)
from .coloring import Coloring
from .constructions import (
    block_graph_coloring,
    color_cycle,
    color_path,
    color_strong_path_complete,
    formula_chi_mu_k,
    torus_eod_coloring,
    tree_half_coloring,
)
from .domination import (
    gamma_exact,
    gamma_k_exact,
    gamma_t_exact,
    neighborhood_i2dmv_partition,
    rho2_exact,
)
from .errors import ConditionError, ParseError
from .families import from_spec, hypercube, parse_spec
from .gen import _isomorphic, _wl_keys, block_graphs, connected_graphs, connected_graphs_upto
from .graph import Graph, all_pairs_distances, exact_distance_graph, girth, product
from .graph6 import parse_graph6, to_graph6
from .visibility import (
    NOT_DIAM2,
    Q3_PARTITE_SET,
    SQUARE,
    WITHIN_CLOSED_NEIGHBORHOOD,
    classify_q_n_diam2_set,
    max_kdmv,
)

DEFAULT_BUDGET = 10**7

PASS = "pass"
FAIL = "fail"
SKIP_HYPOTHESIS = "skip-hypothesis"
SKIP_BUDGET = "skip-budget"
FINDING = "finding"

# Small partners used by the product checks.
_PARTNER_SPECS = ("complete:2", "path:3", "cycle:4")


@dataclass(frozen=True)
class CheckSpec:
    id: str
    budget: int = DEFAULT_BUDGET
    ks: tuple[int, ...] = (2,)
    max_product_order: int = 16

    def __post_init__(self):
        if self.id not in CHECK_IDS:
            raise ValueError(f"unknown check id {self.id!r}")


@dataclass
class CheckOutcome:
    verdict: str
    detail: dict = field(default_factory=dict)


@dataclass
class InstanceRecord:
    id: str
    graph6: str
    n: int
    invariants: dict
    checks: dict
    nodes: int

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "graph6": self.graph6,
            "n": self.n,
            "invariants": self.invariants,
            "checks": self.checks,
            "nodes": self.nodes,
        }


@dataclass
class Report:
    instances: list[InstanceRecord]
    summary: dict

    @property
    def failed(self) -> int:
        return self.summary["failed"]

    def to_json(self) -> str:
        payload = {
            "suite": self.summary,
            "instances": [r.to_json() for r in self.instances],
        }
        return json.dumps(payload, sort_keys=True, indent=2)

    CSV_COLUMNS = (
        "graph6",
        "n",
        "girth",
        "diam",
        "chi_mu2",
        "gamma",
        "gamma_t",
        "theta_nd2",
        "rho2",
    )

    def to_csv(self) -> str:
        check_cols = sorted({c for r in self.instances for c in r.checks})
        header = list(self.CSV_COLUMNS) + [f"check:{c}" for c in check_cols]
        lines = [",".join(header)]
        for r in self.instances:
            row = [r.graph6, str(r.n)]
            for col in self.CSV_COLUMNS[2:]:
                v = r.invariants.get(col)
                row.append("" if v is None else str(v))
            for c in check_cols:
                row.append(r.checks.get(c, {}).get("verdict", ""))
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"


def _jsonable_girth(g: int | float):
    return "inf" if g == math.inf else g


def _exact_or_none(result):
    return result.value if result.is_exact else None


def base_invariants(g: Graph, budget: int) -> tuple[dict, int]:
    """The fixed CSV invariant columns; None marks budget or hypothesis gaps."""
    nodes = 0
    inv: dict = {"girth": _jsonable_girth(girth(g))}
    if g.is_connected() and g.n:
        inv["diam"] = all_pairs_distances(g).diameter()
    else:
        inv["diam"] = None
    if g.n:
        r = chi_mu_k_exact(g, 2, budget)
        nodes += r.nodes
        inv["chi_mu2"] = _exact_or_none(r)
        r = gamma_exact(g, budget)
        nodes += r.nodes
        inv["gamma"] = _exact_or_none(r)
        if g.min_degree() >= 1:
            r = gamma_t_exact(g, budget)
            nodes += r.nodes
            inv["gamma_t"] = _exact_or_none(r)
        else:
            inv["gamma_t"] = None
        r = clique_cover_theta(exact_distance_graph(g, 2), budget)
        nodes += r.nodes
        inv["theta_nd2"] = _exact_or_none(r)
        r = rho2_exact(g, budget)
        nodes += r.nodes
        inv["rho2"] = _exact_or_none(r)
    return inv, nodes


# -- individual checks ----------------------------------------------------------


def _check_obs_chain(g: Graph, spec: CheckSpec, ctx: dict) -> CheckOutcome:
    if not g.is_connected() or g.n < 1:
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "needs a connected graph"})
    diam = all_pairs_distances(g).diameter()
    chain = []
    for k in range(1, max(diam, 1) + 2):
        r = chi_mu_k_exact(g, k, spec.budget)
        if not r.is_exact:
            return CheckOutcome(SKIP_BUDGET, {"k": k})
        chain.append(r.value)
    theta = clique_cover_theta(g, spec.budget)
    if not theta.is_exact:
        return CheckOutcome(SKIP_BUDGET, {"solver": "theta"})
    ok = all(chain[i] >= chain[i + 1] for i in range(len(chain) - 1))
    ok = ok and chain[0] == theta.value
    if diam >= 1:
        ok = ok and chain[diam - 1] == chain[-1]  # chi_mu_diam equals chi_mu
    detail = {"chain": chain, "theta": theta.value, "diam": diam}
    return CheckOutcome(PASS if ok else FAIL, detail)


def _check_order_bound(g: Graph, spec: CheckSpec, ctx: dict) -> CheckOutcome:
    detail = {}
    for k in spec.ks:
        chi = chi_mu_k_exact(g, k, spec.budget)
        mu = max_kdmv(g, k, spec.budget)
        if not (chi.is_exact and mu.is_exact):
            return CheckOutcome(SKIP_BUDGET, {"k": k})
        detail[f"k={k}"] = {"chi": chi.value, "mu": mu.value}
        if mu.value and chi.value < -(-g.n // mu.value):
            return CheckOutcome(FAIL, detail)
    return CheckOutcome(PASS, detail)


def _check_gamma_total_upper(g: Graph, spec: CheckSpec, ctx: dict) -> CheckOutcome:
    if g.n == 0 or g.min_degree() < 1:
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "isolated vertex"})
    chi = chi_mu_k_exact(g, 2, spec.budget)
    gt = gamma_t_exact(g, spec.budget)
    if not (chi.is_exact and gt.is_exact):
        return CheckOutcome(SKIP_BUDGET, {})
    detail = {"chi_mu2": chi.value, "gamma_t": gt.value}
    if chi.value > gt.value:
        return CheckOutcome(FAIL, detail)
    # the constructive side: the neighborhood partition certifies the bound
    partition = ctx_total_partition(g, gt)
    detail["partition_classes"] = partition.num_classes
    if partition.num_classes > gt.value:
        return CheckOutcome(FAIL, detail)
    return CheckOutcome(PASS, detail)


def ctx_total_partition(g: Graph, gt) -> Coloring:
    from .domination import total_dom_partition

    return total_dom_partition(g, sorted(gt.witness))


def _check_girth_gamma_lower(g: Graph, spec: CheckSpec, ctx: dict) -> CheckOutcome:
    if girth(g) < 7 or not g.is_connected():
        detail = {"reason": "needs girth >= 7 and connected", "girth": _jsonable_girth(girth(g))}
        ga = gamma_exact(g, spec.budget)
        chi = chi_mu_k_exact(g, 2, spec.budget)
        if ga.is_exact and chi.is_exact:
            detail["gamma"] = ga.value
            detail["chi_mu2"] = chi.value
        return CheckOutcome(SKIP_HYPOTHESIS, detail)
    chi = chi_mu_k_exact(g, 2, spec.budget)
    ga = gamma_exact(g, spec.budget)
    if not (chi.is_exact and ga.is_exact):
        return CheckOutcome(SKIP_BUDGET, {})
    detail = {"chi_mu2": chi.value, "gamma": ga.value}
    return CheckOutcome(PASS if chi.value >= ga.value else FAIL, detail)


def _check_closed_nbhd_lemma(g: Graph, spec: CheckSpec, ctx: dict) -> CheckOutcome:
    if girth(g) < 7 or not g.is_connected():
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "needs girth >= 7 and connected"})
    chi = chi_mu_k_exact(g, 2, spec.budget)
    if not chi.is_exact:
        return CheckOutcome(SKIP_BUDGET, {})
    detail = {"classes": []}
    for members in chi.witness.class_lists():
        closed = any(
            all(u == v or g.has_edge(u, v) for u in members) for v in range(g.n)
        )
        open_nb = any(
            all(g.has_edge(u, v) for u in members) for v in range(g.n)
        )
        detail["classes"].append({"size": len(members), "closed": closed, "open": open_nb})
        if not closed:
            return CheckOutcome(FAIL, detail)
        if len(members) >= 3 and not open_nb:
            return CheckOutcome(FAIL, detail)
    return CheckOutcome(PASS, detail)


def _check_thm_dis(g: Graph, spec: CheckSpec, ctx: dict) -> CheckOutcome:
    if g.n == 0 or girth(g) < 7 or g.min_degree() < 1:
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "needs girth >= 7 and no isolated vertices"})
    theta2 = clique_cover_theta(exact_distance_graph(g, 2), spec.budget)
    chii = chi_i_mu2_exact(g, spec.budget)
    gt = gamma_t_exact(g, spec.budget)
    if not (theta2.is_exact and chii.is_exact and gt.is_exact):
        return CheckOutcome(SKIP_BUDGET, {})
    detail = {"theta_nd2": theta2.value, "chi_imu2": chii.value, "gamma_t": gt.value}
    if not (theta2.value == chii.value == gt.value):
        return CheckOutcome(FAIL, detail)
    # constructive certificate: neighborhood partition is independent 2DMV
    partition = neighborhood_i2dmv_partition(g, sorted(gt.witness))
    detail["partition_classes"] = partition.num_classes
    return CheckOutcome(PASS if partition.num_classes <= gt.value else FAIL, detail)


def _is_triangle_free(g: Graph) -> bool:
    return girth(g) >= 4


def _check_triangle_free_dis(g: Graph, spec: CheckSpec, ctx: dict) -> CheckOutcome:
    if g.n == 0 or not _is_triangle_free(g) or g.min_degree() < 1:
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "needs triangle-free, no isolated vertices"})
    theta2 = clique_cover_theta(exact_distance_graph(g, 2), spec.budget)
    gt = gamma_t_exact(g, spec.budget)
    if not (theta2.is_exact and gt.is_exact):
        return CheckOutcome(SKIP_BUDGET, {})
    detail = {"theta_nd2": theta2.value, "gamma_t": gt.value}
    return CheckOutcome(PASS if theta2.value <= gt.value else FAIL, detail)


def _partners(g: Graph, cap: int):
    for spec in _PARTNER_SPECS:
        h = from_spec(spec)
        if g.n * h.n <= cap:
            yield spec, h


def _check_lexic_chain(g: Graph, spec: CheckSpec, ctx: dict) -> CheckOutcome:
    if g.n < 2 or not g.is_connected():
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "needs connected G on >= 2 vertices"})
    theta2 = clique_cover_theta(exact_distance_graph(g, 2), spec.budget)
    if not theta2.is_exact:
        return CheckOutcome(SKIP_BUDGET, {})
    detail = {"theta_nd2": theta2.value, "pairs": []}
    applied = False
    for hname, h in _partners(g, spec.max_product_order):
        prod = product("lex", g, h)
        chi = chi_mu_k_exact(prod, 2, spec.budget)
        theta_prod = clique_cover_theta(exact_distance_graph(prod, 2), spec.budget)
        if not (chi.is_exact and theta_prod.is_exact):
            return CheckOutcome(SKIP_BUDGET, {"partner": hname})
        applied = True
        entry = {
            "H": hname,
            "chi_mu2_prod": chi.value,
            "theta_nd2_G": theta2.value,
            "theta_nd2_prod": theta_prod.value,
        }
        detail["pairs"].append(entry)
        if not (chi.value <= theta2.value <= theta_prod.value):
            return CheckOutcome(FAIL, detail)
    if not applied:
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "no partner fits the size cap"})
    return CheckOutcome(PASS, detail)


def _check_thm_con(g: Graph, spec: CheckSpec, ctx: dict) -> CheckOutcome:
    if g.min_degree() < 2 or girth(g) < 5:
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "needs min degree >= 2 and girth >= 5"})
    chi_g = chi_mu_k_exact(g, 2, spec.budget)
    if not chi_g.is_exact:
        return CheckOutcome(SKIP_BUDGET, {})
    detail = {"chi_mu2_G": chi_g.value, "pairs": []}
    applied = False
    for hname, h in _partners(g, spec.max_product_order):
        prod = product("lex", g, h)
        chi_p = chi_mu_k_exact(prod, 2, spec.budget)
        if not chi_p.is_exact:
            return CheckOutcome(SKIP_BUDGET, {"partner": hname})
        applied = True
        detail["pairs"].append({"H": hname, "chi_mu2_prod": chi_p.value})
        if chi_p.value > chi_g.value:
            return CheckOutcome(FAIL, detail)
    if not applied:
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "no partner fits the size cap"})
    return CheckOutcome(PASS, detail)


def _check_strong_product_bound(g: Graph, spec: CheckSpec, ctx: dict) -> CheckOutcome:
    detail = {"pairs": []}
    applied = False
    for hname, h in _partners(g, spec.max_product_order):
        for k in spec.ks:
            chi_g = chi_mu_k_exact(g, k, spec.budget)
            chi_h = chi_mu_k_exact(h, k, spec.budget)
            prod = product("strong", g, h)
            chi_p = chi_mu_k_exact(prod, k, spec.budget)
            if not (chi_g.is_exact and chi_h.is_exact and chi_p.is_exact):
                return CheckOutcome(SKIP_BUDGET, {"partner": hname, "k": k})
            applied = True
            detail["pairs"].append(
                {"H": hname, "k": k, "chi_prod": chi_p.value, "bound": chi_g.value * chi_h.value}
            )
            if chi_p.value > chi_g.value * chi_h.value:
                return CheckOutcome(FAIL, detail)
    if not applied:
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "no partner fits the size cap"})
    return CheckOutcome(PASS, detail)


def _check_cartesian_lower(g: Graph, spec: CheckSpec, ctx: dict) -> CheckOutcome:
    if not g.is_connected() or g.n == 0:
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "needs connected factors"})
    chi_g = chi_mu_k_exact(g, 2, spec.budget)
    rho_g = rho2_exact(g, spec.budget)
    if not (chi_g.is_exact and rho_g.is_exact):
        return CheckOutcome(SKIP_BUDGET, {})
    detail = {"pairs": []}
    applied = False
    for hname, h in _partners(g, spec.max_product_order):
        chi_h = chi_mu_k_exact(h, 2, spec.budget)
        rho_h = rho2_exact(h, spec.budget)
        prod = product("cartesian", g, h)
        chi_p = chi_mu_k_exact(prod, 2, spec.budget)
        if not (chi_h.is_exact and rho_h.is_exact and chi_p.is_exact):
            return CheckOutcome(SKIP_BUDGET, {"partner": hname})
        applied = True
        bound = max(chi_g.value * rho_h.value, chi_h.value * rho_g.value)
        detail["pairs"].append({"H": hname, "chi_prod": chi_p.value, "bound": bound})
        if chi_p.value < bound:
            return CheckOutcome(FAIL, detail)
    if not applied:
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "no partner fits the size cap"})
    return CheckOutcome(PASS, detail)


def _hypercube_dimension(g: Graph) -> int | None:
    if g.n == 0 or g.n & (g.n - 1):
        return None
    d = g.n.bit_length() - 1
    q = hypercube(d)
    if g.edge_count() != q.edge_count():
        return None
    ids1, _ = _wl_keys(g.n, g.adj)
    ids2, _ = _wl_keys(q.n, q.adj)
    return d if _isomorphic(g.n, g.adj, ids1, q.adj, ids2) else None


def _check_qn_structure(g: Graph, spec: CheckSpec, ctx: dict) -> CheckOutcome:
    d = _hypercube_dimension(g)
    if d is None or d > 4:
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "instance is not a hypercube of dimension <= 4"})
    q = hypercube(d)
    dm = all_pairs_distances(q)
    counts = {WITHIN_CLOSED_NEIGHBORHOOD: 0, SQUARE: 0, Q3_PARTITE_SET: 0}
    for s in range(1 << q.n):
        members = bits_list(s)
        ok = all(
            dm.d[u][v] <= 2 for i, u in enumerate(members) for v in members[i + 1 :]
        )
        cls = classify_q_n_diam2_set(d, s)
        if not ok:
            if cls.kind != NOT_DIAM2:
                return CheckOutcome(FAIL, {"set": members, "kind": cls.kind})
            continue
        if cls.kind == NOT_DIAM2:
            return CheckOutcome(FAIL, {"set": members, "kind": cls.kind})
        # exactly-one-shape assertion, each verified from its definition
        in_nbhd = any(
            all(u == v or q.has_edge(u, v) for u in members) for v in range(q.n)
        )
        is_square = (
            len(members) == 4
            and sum(1 for i, u in enumerate(members) for v in members[i + 1 :] if q.has_edge(u, v)) == 4
            and all(sum(1 for v in members if q.has_edge(u, v)) == 2 for u in members)
        )
        shapes = {
            WITHIN_CLOSED_NEIGHBORHOOD: in_nbhd,
            SQUARE: is_square and not in_nbhd,
            Q3_PARTITE_SET: not in_nbhd and not is_square,
        }
        if not shapes[cls.kind]:
            return CheckOutcome(FAIL, {"set": members, "kind": cls.kind})
        counts[cls.kind] += 1
    return CheckOutcome(PASS, {"dimension": d, "counts": counts})


def _check_formula_agreement(g: Graph, spec: CheckSpec, ctx: dict) -> CheckOutcome:
    sp = ctx.get("spec")
    if sp is None:
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "corpus instance has no family spec"})
    detail = {"spec": sp, "ks": {}}
    applied = False
    for k in spec.ks:
        value = formula_chi_mu_k(sp, k)
        if value is None:
            continue
        if g.n > 18:
            return CheckOutcome(SKIP_BUDGET, {"reason": "instance above exact-solver size", "spec": sp})
        r = chi_mu_k_exact(g, k, spec.budget)
        if not r.is_exact:
            return CheckOutcome(SKIP_BUDGET, {"k": k})
        applied = True
        detail["ks"][str(k)] = {"formula": value, "solver": r.value}
        if value != r.value:
            return CheckOutcome(FAIL, detail)
    if not applied:
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "no closed form applies", "spec": sp})
    return CheckOutcome(PASS, detail)


def _check_construction_validity(g: Graph, spec: CheckSpec, ctx: dict) -> CheckOutcome:
    """Run every builder whose hypothesis the instance satisfies; re-verify."""
    sp = ctx.get("spec")
    detail = {"builders": []}
    tree = None
    if sp is not None:
        try:
            tree = parse_spec(sp)
        except ParseError:
            tree = None

    def run(name: str, coloring: Coloring, k: int) -> bool:
        report = verify_kdmv_coloring(g, k, coloring)
        detail["builders"].append(
            {"name": name, "classes": coloring.num_classes, "k": k, "ok": report.ok}
        )
        return report.ok

    ok = True
    if tree is not None:
        head, args = tree
        if head == "path":
            ok &= run("color_path", color_path(args[0], spec.ks[0]), spec.ks[0])
        if head == "cycle":
            ok &= run("color_cycle", color_cycle(args[0], spec.ks[0]), spec.ks[0])
        if head == "strong" and args[0][0] == "path" and args[1][0] == "complete":
            n, m = args[0][1][0], args[1][1][0]
            for k in spec.ks:
                if n >= 4 and m >= 2 and 2 <= k <= n - 2:
                    ok &= run("color_strong_path_complete", color_strong_path_complete(n, m, k), k)
        if head in ("torus", "cartesian"):
            try:
                if head == "torus":
                    m, n = args
                else:
                    m, n = args[0][1][0], args[1][1][0]
                if m % 4 == 0 and n % 4 == 0 and m >= n >= 4:
                    ok &= run("torus_eod_coloring", torus_eod_coloring(m, n), 2)
            except (IndexError, TypeError):
                pass
    if g.is_connected() and g.n >= 1:
        half = tree_half_coloring(g)
        ok &= run("tree_half_coloring", half, 2)
        if half.num_classes > -(-g.n // 2):
            ok = False
        from .graph import blocks as block_decomp

        dm_diam = all_pairs_distances(g).diameter()
        if dm_diam >= 2 and block_decomp(g).is_block_graph:
            try:
                ok &= run("block_graph_coloring", block_graph_coloring(g), dm_diam - 1)
            except ConditionError:
                detail["builders"].append({"name": "block_graph_coloring", "skipped": "deg* condition"})
    if not detail["builders"]:
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "no construction applies"})
    return CheckOutcome(PASS if ok else FAIL, detail)


# -- open-problem probes ----------------------------------------------------------


def _probe_qn_equality(g: Graph, spec: CheckSpec, ctx: dict) -> CheckOutcome:
    d = _hypercube_dimension(g)
    if d is None:
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "not a hypercube"})
    chi = chi_mu_k_exact(g, 2, spec.budget)
    ga = gamma_exact(g, spec.budget)
    if not (chi.is_exact and ga.is_exact):
        return CheckOutcome(SKIP_BUDGET, {})
    detail = {"dimension": d, "chi_mu2": chi.value, "gamma": ga.value, "equal": chi.value == ga.value}
    return CheckOutcome(FINDING, detail)


def _probe_cartesian_gamma(g: Graph, spec: CheckSpec, ctx: dict) -> CheckOutcome:
    if not g.is_connected() or g.n == 0:
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "needs connected factors"})
    chi_g = chi_mu_k_exact(g, 2, spec.budget)
    ga_g = gamma_exact(g, spec.budget)
    if not (chi_g.is_exact and ga_g.is_exact):
        return CheckOutcome(SKIP_BUDGET, {})
    detail = {"pairs": []}
    for hname, h in _partners(g, spec.max_product_order):
        chi_h = chi_mu_k_exact(h, 2, spec.budget)
        ga_h = gamma_exact(h, spec.budget)
        prod = product("cartesian", g, h)
        chi_p = chi_mu_k_exact(prod, 2, spec.budget)
        if not (chi_h.is_exact and ga_h.is_exact and chi_p.is_exact):
            return CheckOutcome(SKIP_BUDGET, {"partner": hname})
        bound = max(chi_g.value * ga_h.value, chi_h.value * ga_g.value)
        detail["pairs"].append(
            {"H": hname, "chi_prod": chi_p.value, "conjectured_bound": bound, "holds": chi_p.value >= bound}
        )
    return CheckOutcome(FINDING, detail)


def _probe_block_theta(g: Graph, spec: CheckSpec, ctx: dict) -> CheckOutcome:
    from .graph import blocks as block_decomp

    if not g.is_connected() or g.n == 0 or not block_decomp(g).is_block_graph:
        return CheckOutcome(SKIP_HYPOTHESIS, {"reason": "not a block graph"})
    chi = chi_mu_k_exact(g, 2, spec.budget)
    theta = clique_cover_theta(g, spec.budget)
    if not (chi.is_exact and theta.is_exact):
        return CheckOutcome(SKIP_BUDGET, {})
    detail = {"chi_mu2": chi.value, "theta": theta.value, "equal": chi.value == theta.value}
    return CheckOutcome(FINDING, detail)


_CHECK_FUNCS = {
    "ObsChain": _check_obs_chain,
    "OrderBound": _check_order_bound,
    "GammaTotalUpper": _check_gamma_total_upper,
    "GirthGammaLower": _check_girth_gamma_lower,
    "ClosedNbhdLemma": _check_closed_nbhd_lemma,
    "ThmDis": _check_thm_dis,
    "TriangleFreeDis": _check_triangle_free_dis,
    "LexicChain": _check_lexic_chain,
    "ThmCon": _check_thm_con,
    "StrongProductBound": _check_strong_product_bound,
    "CartesianLower": _check_cartesian_lower,
    "QnStructure": _check_qn_structure,
    "FormulaAgreement": _check_formula_agreement,
    "ConstructionValidity": _check_construction_validity,
    "OpenQnEquality": _probe_qn_equality,
    "OpenCartesianGamma": _probe_cartesian_gamma,
    "OpenBlockTheta": _probe_block_theta,
}

CHECK_IDS = tuple(_CHECK_FUNCS)
OPEN_CHECKS = ("OpenQnEquality", "OpenCartesianGamma", "OpenBlockTheta")


# -- corpus resolution and the suite runner ----------------------------------------


def resolve_corpus(corpus: str) -> list[tuple[str, Graph, str | None]]:
    """Corpus spec to (id, graph, family-spec-or-None) triples.

    Sources: ``geng:n<=K`` / ``geng:n=K`` (built-in exhaustive connected
    generator), ``file:PATH`` (graph6 lines), or a semicolon-separated list
    of graph specs (semicolon, because specs may contain commas).
    """
    corpus = corpus.strip()
    if corpus.startswith("geng:"):
        expr = corpus[len("geng:") :].replace(" ", "")
        if expr.startswith("n<="):
            upto = int(expr[3:])
            graphs = connected_graphs_upto(upto)
        elif expr.startswith("n="):
            graphs = connected_graphs(int(expr[2:]))
        else:
            raise ParseError(f"unsupported geng corpus {corpus!r}")
        return [(f"{corpus}#{i}", g, None) for i, g in enumerate(graphs)]
    if corpus.startswith("file:"):
        path = corpus[len("file:") :]
        out = []
        with open(path) as fh:
            for i, line in enumerate(fh):
                line = line.strip()
                if line:
                    out.append((f"file#{i}", parse_graph6(line), None))
        return out
    out = []
    for part in corpus.split(";"):
        part = part.strip()
        if part:
            out.append((part, from_spec(part), part))
    return out


def run_suite(corpus, checks: list[CheckSpec], with_invariants: bool = True) -> Report:
    """Run every check on every corpus instance; deterministic report."""
    if isinstance(corpus, str):
        instances = resolve_corpus(corpus)
    else:
        instances = [(getattr(g, "name", None) or f"graph#{i}", g, getattr(g, "name", None)) for i, g in enumerate(corpus)]
    records = []
    passed = failed = skipped = checked = 0
    coverage: dict[str, int] = {c.id: 0 for c in checks}
    for gid, g, famspec in instances:
        ctx = {"spec": famspec}
        nodes = 0
        if with_invariants:
            inv, nodes = base_invariants(g, checks[0].budget if checks else DEFAULT_BUDGET)
        else:
            inv = {}
        results = {}
        for cs in checks:
            outcome = _CHECK_FUNCS[cs.id](g, cs, ctx)
            results[cs.id] = {"verdict": outcome.verdict, "detail": outcome.detail}
            checked += 1
            if outcome.verdict == PASS:
                passed += 1
                coverage[cs.id] += 1
            elif outcome.verdict == FAIL:
                failed += 1
                coverage[cs.id] += 1
            elif outcome.verdict == FINDING:
                coverage[cs.id] += 1
            else:
                skipped += 1
        records.append(InstanceRecord(gid, to_graph6(g), g.n, inv, results, nodes))
    summary = {
        "checked": checked,
        "passed": passed,
        "failed": failed,
        "skipped": skipped,
        "coverage": coverage,
    }
    return Report(records, summary)


def counterexample_search(problem: str, size_limit: int, budget: int = DEFAULT_BUDGET) -> Report:
    """Probe an open problem; findings are informational and never fail."""
    spec = CheckSpec(problem, budget=budget)
    if problem == "OpenQnEquality":
        corpus = [hypercube(d) for d in range(1, size_limit + 1)]
    elif problem == "OpenCartesianGamma":
        gs = connected_graphs_upto(min(size_limit // 2, 8))
        corpus = [g for g in gs if 2 * g.n <= size_limit]
        spec = CheckSpec(problem, budget=budget, max_product_order=size_limit)
    elif problem == "OpenBlockTheta":
        corpus = []
        for n in range(1, size_limit + 1):
            corpus.extend(block_graphs(n))
    else:
        raise ValueError(f"unknown open problem {problem!r}")
    report = run_suite(corpus, [spec], with_invariants=False)
    findings = []
    for rec in report.instances:
        detail = rec.checks[problem]["detail"]
        if rec.checks[problem]["verdict"] != FINDING:
            continue
        if problem == "OpenQnEquality" and not detail.get("equal", True):
            findings.append(rec.id)
        if problem == "OpenCartesianGamma":
            if any(not p["holds"] for p in detail.get("pairs", ())):
                findings.append(rec.id)
        if problem == "OpenBlockTheta" and not detail.get("equal", True):
            findings.append(rec.id)
    report.summary["findings"] = findings
    return report
