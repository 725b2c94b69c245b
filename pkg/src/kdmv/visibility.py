"""Geodesic-avoidance primitive, kDMV-set checks, and the exact mu_k solver.

The central question everywhere: does a u,v-geodesic exist whose internal
vertices avoid a forbidden set?  The check restricts attention to vertices on
some u,v-geodesic (d(u,w) + d(w,v) = d(u,v)) and walks the distance layers
from u; every geodesic visits layers 0..d in order, so layer-by-layer
reachability is exact.  Pairs at distance 2 reduce to one bit operation on
the common neighborhood, which is the hot path for k = 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import bit, bits_list, iter_bits, mask_of
from .coloring import SolveResult
from .errors import BudgetExceeded, DistanceError
from .graph import INF, Graph, all_pairs_distances


class VisibilityOracle:
    """Per-graph cache of distances and geodesic layer structure.

    Layer masks are cached per unordered vertex pair within a solver run, as
    the same pairs get re-tested many times during branch and bound.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.dm = all_pairs_distances(g)
        self._layers: dict[tuple[int, int], tuple[int, ...]] = {}

    def dist(self, u: int, v: int) -> int:
        return self.dm.d[u][v]

    def _pair_layers(self, a: int, b: int) -> tuple[int, ...]:
        """Masks of internal on-geodesic vertices by distance from ``a``."""
        key = (a, b)
        cached = self._layers.get(key)
        if cached is not None:
            return cached
        da = self.dm.d[a]
        db = self.dm.d[b]
        d = da[b]
        layers = [0] * (d - 1)
        for w in range(self.g.n):
            dw = da[w]
            if 0 < dw < d and dw + db[w] == d:
                layers[dw - 1] |= bit(w)
        out = tuple(layers)
        self._layers[key] = out
        return out

    def interior_mask(self, u: int, v: int) -> int:
        """All vertices strictly inside some u,v-geodesic."""
        if self.dm.d[u][v] >= INF:
            raise DistanceError(f"vertices {u} and {v} are unreachable")
        a, b = (u, v) if u < v else (v, u)
        mask = 0
        for layer in self._pair_layers(a, b):
            mask |= layer
        return mask

    def avoiding_exists(self, u: int, v: int, forbidden: int) -> bool:
        """True iff some u,v-geodesic has no internal vertex in ``forbidden``.

        u and v themselves are never treated as internal.
        """
        if u == v:
            raise ValueError("geodesic query needs distinct endpoints")
        d = self.dm.d[u][v]
        if d >= INF:
            raise DistanceError(f"vertices {u} and {v} are unreachable")
        adj = self.g.adj
        if d == 1:
            return True
        if d == 2:
            return bool(adj[u] & adj[v] & ~forbidden)
        a, b = (u, v) if u < v else (v, u)
        layers = self._pair_layers(a, b)
        if u != a:
            layers = layers[::-1]
        cur = adj[u] & layers[0] & ~forbidden
        for layer in layers[1:]:
            if not cur:
                return False
            step = 0
            for w in iter_bits(cur):
                step |= adj[w]
            cur = step & layer & ~forbidden
        return bool(cur & adj[v])

    # -- incremental class feasibility ------------------------------------

    def can_join(self, members: list[int], mask: int, v: int, k: int) -> bool:
        """Would members + {v} still be a kDMV set?  ``members`` must be one.

        Checks distance and visibility of v against each member, then
        re-checks member pairs whose geodesics could route through v.
        """
        dv = self.dm.d[v]
        for u in members:
            if dv[u] > k:
                return False
        new_mask = mask | bit(v)
        adj = self.g.adj
        for u in members:
            d = dv[u]
            if d == 1:
                continue
            if d == 2:
                if not adj[u] & adj[v] & ~new_mask:
                    return False
            elif not self.avoiding_exists(u, v, new_mask):
                return False
        for i, u in enumerate(members):
            du = self.dm.d[u]
            dvu = dv[u]
            for w in members[i + 1 :]:
                duw = du[w]
                if duw < 2:
                    continue
                # v can only block this pair if it lies on a u,w-geodesic.
                if dvu + dv[w] != duw:
                    continue
                if duw == 2:
                    if not adj[u] & adj[w] & ~new_mask:
                        return False
                elif not self.avoiding_exists(u, w, new_mask):
                    return False
        return True


def geodesic_avoiding_exists(g: Graph, u: int, v: int, forbidden: int) -> bool:
    """One-shot form of :meth:`VisibilityOracle.avoiding_exists`."""
    return VisibilityOracle(g).avoiding_exists(u, v, forbidden)


def is_kdmv_set(g: Graph, s: int, k: int, oracle: VisibilityOracle | None = None) -> bool:
    """True iff every pair of ``s`` sees each other within distance k.

    The empty set and singletons qualify vacuously.  Pairs in different
    components fail the distance condition (INF > k).
    """
    if oracle is None:
        oracle = VisibilityOracle(g)
    members = bits_list(s)
    d = oracle.dm.d
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            if d[u][v] > k:
                return False
            if d[u][v] >= 2 and not oracle.avoiding_exists(u, v, s):
                return False
    return True


def is_mv_set(g: Graph, s: int, oracle: VisibilityOracle | None = None) -> bool:
    """Mutual visibility without a distance cap (beyond reachability)."""
    return is_kdmv_set(g, s, INF - 1, oracle)


# -- exact maximum kDMV set ---------------------------------------------------


def max_kdmv(g: Graph, k: int, budget: int = 10**7) -> SolveResult:
    """Exact mu_k via branch and bound over degree-descending vertex order.

    Hereditary pruning: subsets of kDMV sets are kDMV, so any vertex whose
    addition breaks the current set can be dropped from the candidate pool of
    the whole branch.  Budget is counted in search nodes; on exhaustion the
    best set found is returned with the trivial upper bound n.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if g.n == 0:
        return SolveResult.exact(0, (), 0)
    oracle = VisibilityOracle(g)
    counter = [0]
    best: list[int] = []
    try:
        for comp in g.component_masks():
            found = _max_kdmv_component(g, oracle, comp, k, counter, budget, len(best))
            if len(found) > len(best):
                best = found
    except BudgetExceeded:
        return SolveResult.bounds(
            len(best), tuple(sorted(best)), len(best), g.n, counter[0]
        )
    return SolveResult.exact(len(best), tuple(sorted(best)), counter[0])


def _max_kdmv_component(
    g: Graph,
    oracle: VisibilityOracle,
    comp: int,
    k: int,
    counter: list[int],
    budget: int,
    initial_best: int,
) -> list[int]:
    order = sorted(iter_bits(comp), key=lambda v: (-g.degree(v), v))
    d = oracle.dm.d
    best: list[int] = []
    best_len = initial_best

    def dfs(chosen: list[int], mask: int, pool: list[int]) -> None:
        nonlocal best, best_len
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExceeded
        if len(chosen) > best_len:
            best_len = len(chosen)
            best = list(chosen)
        if not pool or len(chosen) + len(pool) <= best_len:
            return
        v = pool[0]
        rest = pool[1:]
        # include v
        chosen.append(v)
        mask_v = mask | bit(v)
        dv = d[v]
        new_pool = [
            w
            for w in rest
            if dv[w] <= k and oracle.can_join(chosen, mask_v, w, k)
        ]
        dfs(chosen, mask_v, new_pool)
        chosen.pop()
        # exclude v
        dfs(chosen, mask, rest)

    pool0 = [v for v in order if oracle.can_join([], 0, v, k)]
    dfs([], 0, pool0)
    return best


# -- hypercube diameter-2 structure -------------------------------------------

WITHIN_CLOSED_NEIGHBORHOOD = "WithinClosedNeighborhood"
SQUARE = "Square"
Q3_PARTITE_SET = "Q3PartiteSet"
NOT_DIAM2 = "NotDiam2"


@dataclass(frozen=True)
class QnClassification:
    kind: str
    witness: int | None = None  # center vertex for the closed-neighborhood case


def classify_q_n_diam2_set(n: int, s: int) -> QnClassification:
    """Sort a vertex set of Q_n with pairwise distances <= 2 into its shape.

    Vertices are binary n-tuples; distance is Hamming.  Exactly one of three
    shapes applies: inside a closed neighborhood, an induced square, or a
    partite set of a Q_3 subcube.  Sets with a pair at distance > 2 are
    rejected as NotDiam2.
    """
    verts = bits_list(s)
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            if (u ^ v).bit_count() > 2:
                return QnClassification(NOT_DIAM2)
    for c in range(1 << n):
        if all(u == c or (u ^ c).bit_count() == 1 for u in verts):
            return QnClassification(WITHIN_CLOSED_NEIGHBORHOOD, c)
    if len(verts) == 4:
        dists = sorted(
            (verts[i] ^ verts[j]).bit_count()
            for i in range(4)
            for j in range(i + 1, 4)
        )
        if dists == [1, 1, 1, 1, 2, 2]:
            return QnClassification(SQUARE)
        if dists == [2, 2, 2, 2, 2, 2]:
            base = verts[0]
            support = (verts[1] ^ base) | (verts[2] ^ base) | (verts[3] ^ base)
            if support.bit_count() == 3 and verts[0] ^ verts[1] ^ verts[2] ^ verts[3] == 0:
                return QnClassification(Q3_PARTITE_SET)
    # Unreachable for genuine Q_n subsets per the structure theorem; kept as a
    # loud failure for malformed input.
    raise ValueError("set has pairwise distances <= 2 but matches no known shape")
