"""Exact (total / distance-k) domination, 2-packing, efficient open domination,
and the neighborhood partitions built from total dominating sets.

The domination solvers are one branch-and-bound over set covers: pick the
uncovered vertex with the fewest potential coverers, branch on those in index
order, and prune with |D| + ceil(uncovered / max_cover) against the incumbent.
"""

from __future__ import annotations

from .bitset import bit, bits_list, iter_bits
from .coloring import Coloring, SolveResult
from .errors import BudgetExceeded, DomainError, VerificationError
from .graph import INF, Graph, all_pairs_distances, girth
from .visibility import VisibilityOracle, is_kdmv_set

DEFAULT_BUDGET = 10**7


def _min_cover(n: int, cover: list[int], budget: int) -> SolveResult:
    """Minimum set of generators whose cover masks union to the full universe.

    ``cover[w]`` is the vertex mask covered when w joins the set.  Vertices
    with an empty candidate list make the instance infeasible (DomainError is
    raised by callers that can explain why).
    """
    universe = (1 << n) - 1
    if universe == 0:
        return SolveResult.exact(0, (), 0)
    candidates = [[w for w in range(n) if cover[w] & bit(v)] for v in range(n)]
    if any(not c for c in candidates):
        raise DomainError("some vertex cannot be covered by any candidate")
    max_cover = max(m.bit_count() for m in cover if m)
    greedy = _greedy_cover(n, cover, universe)
    best = list(greedy)
    best_len = len(greedy)
    counter = [0]

    def dfs(chosen: list[int], covered: int) -> None:
        nonlocal best, best_len
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExceeded
        if covered == universe:
            if len(chosen) < best_len:
                best_len = len(chosen)
                best = list(chosen)
            return
        missing = (universe & ~covered).bit_count()
        if len(chosen) + -(-missing // max_cover) >= best_len:
            return
        # branch on the uncovered vertex with fewest coverers
        pick = -1
        pick_opts: list[int] = []
        rest = universe & ~covered
        for v in iter_bits(rest):
            opts = candidates[v]
            if pick < 0 or len(opts) < len(pick_opts):
                pick, pick_opts = v, opts
                if len(opts) <= 1:
                    break
        for w in pick_opts:
            chosen.append(w)
            dfs(chosen, covered | cover[w])
            chosen.pop()

    try:
        dfs([], 0)
    except BudgetExceeded:
        lower = max(1, -(-n // max_cover))
        return SolveResult.bounds(best_len, tuple(sorted(best)), lower, best_len, counter[0])
    return SolveResult.exact(best_len, tuple(sorted(best)), counter[0])


def _greedy_cover(n: int, cover: list[int], universe: int) -> list[int]:
    covered = 0
    chosen = []
    while covered != universe:
        w = max(range(n), key=lambda x: ((cover[x] & ~covered).bit_count(), -x))
        chosen.append(w)
        covered |= cover[w]
    return sorted(chosen)


def gamma_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Minimum dominating set (closed neighborhoods cover everything)."""
    cover = [g.adj[v] | bit(v) for v in range(g.n)]
    return _min_cover(g.n, cover, budget)


def gamma_t_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Minimum total dominating set; every vertex needs a neighbor in D."""
    if any(not g.adj[v] for v in range(g.n)):
        raise DomainError("total domination undefined with isolated vertices")
    return _min_cover(g.n, list(g.adj), budget)


def gamma_k_exact(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Minimum distance-k dominating set."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    dm = all_pairs_distances(g)
    cover = []
    for v in range(g.n):
        m = 0
        row = dm.d[v]
        for u in range(g.n):
            if row[u] <= k:
                m |= bit(u)
        cover.append(m)
    return _min_cover(g.n, cover, budget)


def is_dominating(g: Graph, d) -> bool:
    covered = 0
    for v in d:
        covered |= g.adj[v] | bit(v)
    return covered == (1 << g.n) - 1


def is_total_dominating(g: Graph, d) -> bool:
    covered = 0
    for v in d:
        covered |= g.adj[v]
    return covered == (1 << g.n) - 1


def rho2_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Maximum 2-packing: maximum independent set of the closed-neighborhood
    intersection graph."""
    closed = [g.adj[v] | bit(v) for v in range(g.n)]
    conflict = [0] * g.n
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if closed[u] & closed[v]:
                conflict[u] |= bit(v)
                conflict[v] |= bit(u)
    order = sorted(range(g.n), key=lambda v: (conflict[v].bit_count(), v))
    best: list[int] = []
    counter = [0]

    def dfs(chosen: list[int], pool: list[int]) -> None:
        nonlocal best
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExceeded
        if len(chosen) > len(best):
            best = list(chosen)
        if not pool or len(chosen) + len(pool) <= len(best):
            return
        v = pool[0]
        rest = pool[1:]
        dfs(chosen + [v], [w for w in rest if not conflict[v] & bit(w)])
        dfs(chosen, rest)

    try:
        dfs([], order)
    except BudgetExceeded:
        return SolveResult.bounds(len(best), tuple(sorted(best)), len(best), g.n, counter[0])
    return SolveResult.exact(len(best), tuple(sorted(best)), counter[0])


# -- constructive partitions -----------------------------------------------------


def _neighborhood_partition_classes(g: Graph, d: list[int]) -> list[list[int]]:
    """D_i = N(v_i) minus earlier neighborhoods, empties dropped."""
    taken = 0
    classes = []
    for v in d:
        cl = g.adj[v] & ~taken
        if cl:
            classes.append(bits_list(cl))
            taken |= cl
    return classes


def total_dom_partition(g: Graph, d: list[int]) -> Coloring:
    """Partition V into 2DMV classes carved from open neighborhoods of ``d``.

    ``d`` must be a total dominating set (checked); class order follows the
    given order of ``d``.  Every class is verified to be a 2DMV set, which is
    what makes this a chi_mu2(G) <= gamma_t(G) certificate.
    """
    if any(not g.adj[v] for v in range(g.n)):
        raise DomainError("graph has isolated vertices")
    if not is_total_dominating(g, d):
        raise DomainError("given set is not total dominating")
    classes = _neighborhood_partition_classes(g, d)
    coloring = Coloring.from_classes(g.n, classes)
    oracle = VisibilityOracle(g)
    for mask in coloring.class_masks():
        if not is_kdmv_set(g, mask, 2, oracle):
            raise VerificationError("neighborhood class failed the 2DMV check")
    return coloring


def neighborhood_i2dmv_partition(g: Graph, d: list[int]) -> Coloring:
    """Same partition, additionally independent; requires girth >= 7."""
    if girth(g) < 7:
        raise DomainError("independent neighborhood partition needs girth >= 7")
    coloring = total_dom_partition(g, d)
    for members in coloring.class_lists():
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                if g.has_edge(u, v):
                    raise VerificationError(f"class containing {u},{v} is not independent")
    return coloring


def efficient_open_dominating_set(g: Graph) -> tuple[int, ...] | None:
    """A set whose open neighborhoods partition V(G), or None.

    Exact-cover backtracking: branch on the vertex with fewest remaining
    viable dominators; a doubly covered vertex kills the branch immediately.
    """
    n = g.n
    if n == 0:
        return ()
    universe = (1 << n) - 1

    def dfs(covered: int, used: int, chosen: list[int]) -> tuple[int, ...] | None:
        if covered == universe:
            return tuple(sorted(chosen))
        # vertex with fewest viable dominators; a dominator is viable when its
        # whole neighborhood is still uncovered
        pick = -1
        pick_opts: list[int] = []
        for v in iter_bits(universe & ~covered):
            opts = [w for w in iter_bits(g.adj[v]) if not g.adj[w] & covered]
            if pick < 0 or len(opts) < len(pick_opts):
                pick, pick_opts = v, opts
                if not opts:
                    return None
                if len(opts) == 1:
                    break
        for w in pick_opts:
            chosen.append(w)
            found = dfs(covered | g.adj[w], used | bit(w), chosen)
            if found is not None:
                return found
            chosen.pop()
        return None

    return dfs(0, 0, [])
