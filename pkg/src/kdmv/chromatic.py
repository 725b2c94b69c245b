"""Exact solvers for chi_mu_k, chi_imu2 and the clique cover number.

One backtracking engine serves every partition problem here.  Vertices are
assigned in degree-descending order (index tiebreak); a vertex may open at
most one fresh class (symmetry breaking); a tentative extension is dropped as
soon as the partial class stops being feasible, which is sound because kDMV
sets are hereditary and cliques/independent sets trivially so.

The optimum value is found first; a second, budget-capped pass then extracts
the lexicographically smallest optimal color vector (vertices in index order,
colors tried ascending) so witnesses are stable fixtures.  If that pass runs
out of budget the value is still exact and the best search witness is kept.

Classes cannot span components (distance INF exceeds every k), so chi_mu_k
of a disconnected graph is the sum over components; proper colorings take
the maximum instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import bit, bits_list, iter_bits
from .coloring import Coloring, SolveResult
from .errors import BudgetExceeded, VerificationError
from .graph import Graph, all_pairs_distances, complement, exact_distance_graph
from .visibility import VisibilityOracle, max_kdmv

DEFAULT_BUDGET = 10**7
_POLISH_BUDGET = 500_000

DISTANCE_EXCEEDS_K = "DistanceExceedsK"
NO_AVOIDING_GEODESIC = "NoAvoidingGeodesic"


@dataclass(frozen=True)
class Violation:
    class_index: int
    u: int
    v: int
    reason: str


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()


def verify_kdmv_coloring(g: Graph, k: int, c: Coloring) -> VerificationReport:
    """Check every class of ``c`` is a kDMV set; report first bad pair per class."""
    if c.n != g.n:
        raise ValueError("coloring does not cover the vertex set")
    oracle = VisibilityOracle(g)
    d = oracle.dm.d
    violations = []
    for ci, members in enumerate(c.class_lists()):
        mask = 0
        for v in members:
            mask |= bit(v)
        found = None
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                if d[u][v] > k:
                    found = Violation(ci, u, v, DISTANCE_EXCEEDS_K)
                    break
                if d[u][v] >= 2 and not oracle.avoiding_exists(u, v, mask):
                    found = Violation(ci, u, v, NO_AVOIDING_GEODESIC)
                    break
            if found:
                break
        if found:
            violations.append(found)
    return VerificationReport(not violations, tuple(violations))


def greedy_kdmv_upper(g: Graph, k: int) -> Coloring:
    """First-fit kDMV coloring in vertex index order; verified before return."""
    oracle = VisibilityOracle(g)
    masks: list[int] = []
    members: list[list[int]] = []
    colors = [0] * g.n
    for v in range(g.n):
        for ci in range(len(masks)):
            if oracle.can_join(members[ci], masks[ci], v, k):
                colors[v] = ci
                masks[ci] |= bit(v)
                members[ci].append(v)
                break
        else:
            colors[v] = len(masks)
            masks.append(bit(v))
            members.append([v])
    coloring = Coloring(tuple(colors))
    report = verify_kdmv_coloring(g, k, coloring)
    if not report.ok:
        raise VerificationError(f"greedy produced an invalid coloring: {report.violations[0]}")
    return coloring


# -- partition modes ------------------------------------------------------------


class _KdmvMode:
    """Partition into kDMV sets of ``g``."""

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.oracle = VisibilityOracle(g)

    def can_join(self, members: list[int], mask: int, v: int) -> bool:
        return self.oracle.can_join(members, mask, v, self.k)

    def branch_order(self, verts: list[int]) -> list[int]:
        return sorted(verts, key=lambda v: (-self.g.degree(v), v))

    def far_pairs_order(self, verts: list[int]) -> list[int]:
        ecc = [max(self.oracle.dm.d[v][u] for u in verts) for v in verts]
        by_ecc = dict(zip(verts, ecc))
        return sorted(verts, key=lambda v: (-by_ecc[v], v))

    def must_differ(self, u: int, v: int) -> bool:
        return self.oracle.dm.d[u][v] > self.k


class _ProperMode:
    """Proper coloring of ``h`` (class = independent set)."""

    def __init__(self, h: Graph):
        self.h = h

    def can_join(self, members: list[int], mask: int, v: int) -> bool:
        return not self.h.adj[v] & mask

    def branch_order(self, verts: list[int]) -> list[int]:
        return sorted(verts, key=lambda v: (-self.h.degree(v), v))

    def far_pairs_order(self, verts: list[int]) -> list[int]:
        return self.branch_order(verts)

    def must_differ(self, u: int, v: int) -> bool:
        return self.h.has_edge(u, v)


class _Found(Exception):
    pass


class _Counter:
    __slots__ = ("used", "limit")

    def __init__(self, limit: int, used: int = 0):
        self.used = used
        self.limit = limit

    def charge(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise BudgetExceeded


def _greedy_partition(mode, verts: list[int]) -> list[list[int]]:
    masks: list[int] = []
    members: list[list[int]] = []
    for v in verts:
        for ci in range(len(masks)):
            if mode.can_join(members[ci], masks[ci], v):
                masks[ci] |= bit(v)
                members[ci].append(v)
                break
        else:
            masks.append(bit(v))
            members.append([v])
    return members


def _greedy_far_set(mode, verts: list[int]) -> int:
    chosen: list[int] = []
    for v in mode.far_pairs_order(verts):
        if all(mode.must_differ(v, u) for u in chosen):
            chosen.append(v)
    return len(chosen)


def _search_optimum(mode, verts, lb, ub_classes, counter):
    """Branch and bound below the greedy bound; returns (classes, exact_flag)."""
    best_count = len(ub_classes)
    best_classes = [list(c) for c in ub_classes]
    if lb >= best_count:
        return best_classes, True
    order = mode.branch_order(verts)
    masks: list[int] = []
    members: list[list[int]] = []

    def dfs(i: int) -> None:
        nonlocal best_count, best_classes
        counter.charge()
        used = len(masks)
        if used >= best_count:
            return
        if i == len(order):
            best_count = used
            best_classes = [list(c) for c in members]
            if best_count <= lb:
                raise _Found
            return
        v = order[i]
        for ci in range(used):
            if mode.can_join(members[ci], masks[ci], v):
                members[ci].append(v)
                saved = masks[ci]
                masks[ci] |= bit(v)
                dfs(i + 1)
                masks[ci] = saved
                members[ci].pop()
        if used + 1 < best_count:
            masks.append(bit(v))
            members.append([v])
            dfs(i + 1)
            masks.pop()
            members.pop()

    try:
        dfs(0)
    except _Found:
        pass
    return best_classes, True


def _lexmin_classes(mode, verts: list[int], t_star: int, counter) -> list[list[int]] | None:
    """First t*-partition in index order with ascending color choice."""
    order = sorted(verts)
    masks: list[int] = []
    members: list[list[int]] = []
    out: list[list[int]] | None = None

    def dfs(i: int) -> None:
        nonlocal out
        counter.charge()
        if i == len(order):
            out = [list(c) for c in members]
            raise _Found
        v = order[i]
        for ci in range(len(masks)):
            if mode.can_join(members[ci], masks[ci], v):
                members[ci].append(v)
                saved = masks[ci]
                masks[ci] |= bit(v)
                dfs(i + 1)
                masks[ci] = saved
                members[ci].pop()
        if len(masks) < t_star:
            masks.append(bit(v))
            members.append([v])
            dfs(i + 1)
            masks.pop()
            members.pop()

    try:
        dfs(0)
    except (_Found, BudgetExceeded):
        pass
    return out


def _solve_component(mode, verts, lb_hint, counter):
    """Exact class count and witness classes; raises BudgetExceeded when out."""
    ub_classes = _greedy_partition(mode, sorted(verts))
    lb = max(1 if verts else 0, lb_hint, _greedy_far_set(mode, verts))
    classes, _ = _search_optimum(mode, verts, lb, ub_classes, counter)
    value = len(classes)
    better = _lexmin_classes(mode, verts, value, _Counter(_POLISH_BUDGET))
    if better is not None:
        classes = better
    return value, classes


def _merge_results(n, per_comp_classes) -> Coloring:
    colors = [0] * n
    next_class = 0
    for classes in per_comp_classes:
        for cl in classes:
            for v in cl:
                colors[v] = next_class
            next_class += 1
    return Coloring(tuple(colors))


def chi_mu_k_exact(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Exact k-distance mutual-visibility chromatic number with witness.

    The lower-bound cocktail (ceil(n/mu_k), greedy far set, gamma_k, and
    rho_2 when k = 2) is evaluated per component before the search starts.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if g.n == 0:
        return SolveResult.exact(0, Coloring(()), 0)
    from .domination import gamma_k_exact, rho2_exact

    mode = _KdmvMode(g, k)
    counter = _Counter(budget)
    comps = g.component_masks()
    total = 0
    lower_total = 0
    all_classes = []
    exact_all = True
    for comp in comps:
        verts = bits_list(comp)
        sub = g.induced(verts)
        lb_hint = 1
        ub_quick = len(_greedy_partition(mode, sorted(verts)))
        side_budget = min(200_000, budget)
        if ub_quick > 1:
            mu = max_kdmv(sub, k, budget=side_budget)
            lb_hint = max(lb_hint, -(-sub.n // mu.upper))
            if lb_hint < ub_quick:
                gk = gamma_k_exact(sub, k, budget=side_budget)
                lb_hint = max(lb_hint, gk.lower)
            if k == 2 and lb_hint < ub_quick:
                r2 = rho2_exact(sub, budget=side_budget)
                lb_hint = max(lb_hint, r2.lower)
        try:
            value, classes = _solve_component(mode, verts, lb_hint, counter)
        except BudgetExceeded:
            greedy = _greedy_partition(mode, sorted(verts))
            total += len(greedy)
            lower_total += lb_hint
            all_classes.append(greedy)
            exact_all = False
            continue
        total += value
        lower_total += value
        all_classes.append(classes)
    witness = _merge_results(g.n, all_classes)
    if exact_all:
        return SolveResult.exact(total, witness, counter.used)
    return SolveResult.bounds(total, witness, lower_total, total, counter.used)


def proper_chromatic(h: Graph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Exact proper chromatic number of ``h`` via the shared engine."""
    if h.n == 0:
        return SolveResult.exact(0, Coloring(()), 0)
    mode = _ProperMode(h)
    counter = _Counter(budget)
    per_comp = []
    value = 0
    lower = 0
    exact_all = True
    for comp in h.component_masks():
        verts = bits_list(comp)
        lb_hint = _greedy_far_set(mode, verts)
        try:
            val, classes = _solve_component(mode, verts, lb_hint, counter)
            low = val
        except BudgetExceeded:
            classes = _greedy_partition(mode, sorted(verts))
            val, low = len(classes), lb_hint
            exact_all = False
        per_comp.append(classes)
        value = max(value, val)
        lower = max(lower, low)
    # Classes from different components may share a color in a proper coloring.
    colors = [0] * h.n
    for classes in per_comp:
        for ci, cl in enumerate(classes):
            for v in cl:
                colors[v] = ci
    witness = Coloring(tuple(colors))
    if exact_all:
        return SolveResult.exact(value, witness, counter.used)
    return SolveResult.bounds(value, witness, lower, value, counter.used)


def clique_cover_theta(g: Graph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """theta(g) as the proper chromatic number of the complement graph."""
    return proper_chromatic(complement(g), budget)


def chi_i_mu2_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Minimum partition into independent 2DMV sets.

    A set is independent 2DMV exactly when it is a clique of the exact
    distance-2 graph, so this is theta of that graph.
    """
    return clique_cover_theta(exact_distance_graph(g, 2), budget)
