"""Immutable bit-vector graph representation and metric queries.

A :class:`Graph` stores one adjacency bitmask per vertex.  Vertices are the
integers ``0..n-1`` and ``n`` is capped at :data:`MAX_N`.  Graphs and distance
matrices never mutate after construction, so they can be shared freely between
concurrent solver runs.

Unreachable pairs carry the sentinel :data:`INF`, chosen far above any
achievable distance or distance threshold so that plain ``<=`` comparisons
treat it as plus infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .bitset import bit, bits_list, full_mask, iter_bits, mask_of
from .errors import ConnectivityError, SizeError

MAX_N = 512

# Strictly larger than any distance and any usable k threshold.  (The vertex
# count itself would not be safe: k may legitimately exceed n.)
INF = 1 << 30


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbor set of ``v`` as an int bitmask.  The adjacency
    is validated to be symmetric, loop-free and confined to the first ``n``
    bits.
    """

    __slots__ = ("n", "adj", "name", "_dm", "_girth")

    def __init__(self, n: int, adj: tuple[int, ...], name: str | None = None):
        if not 0 <= n <= MAX_N:
            raise SizeError(f"vertex count {n} outside 0..{MAX_N}")
        if len(adj) != n:
            raise ValueError("adjacency length does not match vertex count")
        fm = full_mask(n)
        for v, row in enumerate(adj):
            if row & ~fm:
                raise ValueError(f"adjacency of vertex {v} has bits above n-1")
            if row & bit(v):
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(adj):
            for u in iter_bits(row):
                if not adj[u] & bit(v):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = tuple(adj)
        self.name = name
        self._dm: DistanceMatrix | None = None
        self._girth: int | float | None = None

    @classmethod
    def from_edges(cls, n: int, edges, name: str | None = None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= bit(v)
            rows[v] |= bit(u)
        return cls(n, tuple(rows), name)

    # -- elementary queries -------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return bits_list(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & bit(v))

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | bit(v)

    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.adj), default=0)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.edge_count()}>"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    # -- traversal ----------------------------------------------------------

    def bfs_distances(self, source: int) -> list[int]:
        """Distances from ``source``; INF marks unreachable vertices."""
        dist = [INF] * self.n
        dist[source] = 0
        frontier = bit(source)
        seen = frontier
        d = 0
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            nxt &= ~seen
            d += 1
            for v in iter_bits(nxt):
                dist[v] = d
            seen |= nxt
            frontier = nxt
        return dist

    def component_masks(self) -> list[int]:
        """Connected components as bitmasks, ordered by smallest member."""
        remaining = full_mask(self.n)
        comps = []
        while remaining:
            start = (remaining & -remaining).bit_length() - 1
            comp = bit(start)
            frontier = comp
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                nxt &= ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1

    def induced(self, vertices: list[int]) -> "Graph":
        """Subgraph induced by ``vertices``, relabeled 0..len-1 in list order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = [0] * len(vertices)
        for v in vertices:
            for u in iter_bits(self.adj[v]):
                if u in index:
                    rows[index[v]] |= bit(index[u])
        return Graph(len(vertices), tuple(rows))


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest-path lengths with INF across components."""

    n: int
    d: tuple[tuple[int, ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.d[u][v]

    def eccentricity(self, v: int) -> int:
        return max(self.d[v], default=0)

    def diameter(self) -> int:
        return max((self.eccentricity(v) for v in range(self.n)), default=0)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS-exact distance matrix, cached on the (immutable) graph."""
    if g._dm is None:
        rows = tuple(tuple(g.bfs_distances(v)) for v in range(g.n))
        g._dm = DistanceMatrix(g.n, rows)
    return g._dm


# -- products ----------------------------------------------------------------

PRODUCT_KINDS = ("cartesian", "strong", "lex")


def product(kind: str, g: Graph, h: Graph) -> Graph:
    """Cartesian, strong or lexicographic product.

    Vertex (a, b) of the product gets index ``a * h.n + b``, so fiber slices
    are contiguous and constructions elsewhere can address them directly.
    """
    if kind not in PRODUCT_KINDS:
        raise ValueError(f"unknown product kind {kind!r}")
    if g.n < 1 or h.n < 1:
        raise SizeError("product factors must be nonempty")
    if g.n * h.n > MAX_N:
        raise SizeError(f"product order {g.n * h.n} exceeds {MAX_N}")
    n = g.n * h.n
    rows = [0] * n
    for a in range(g.n):
        for b in range(h.n):
            i = a * h.n + b
            row = 0
            if kind == "cartesian":
                row |= _spread(g.adj[a], h.n, b)
                row |= h.adj[b] << (a * h.n)
            elif kind == "strong":
                row |= _spread(g.adj[a], h.n, b)
                row |= h.adj[b] << (a * h.n)
                for a2 in iter_bits(g.adj[a]):
                    row |= h.adj[b] << (a2 * h.n)
            else:  # lex
                block = full_mask(h.n)
                for a2 in iter_bits(g.adj[a]):
                    row |= block << (a2 * h.n)
                row |= h.adj[b] << (a * h.n)
            rows[i] = row
    name = f"{kind}({g.name or '?'},{h.name or '?'})"
    return Graph(n, tuple(rows), name)


def _spread(gmask: int, hn: int, b: int) -> int:
    """Bitmask of (a2, b) over all a2 in gmask."""
    out = 0
    for a2 in iter_bits(gmask):
        out |= 1 << (a2 * hn + b)
    return out


def exact_distance_graph(g: Graph, p: int) -> Graph:
    """Graph on V(g) with edges exactly between pairs at distance p."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    dm = all_pairs_distances(g)
    rows = [0] * g.n
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if dm.d[u][v] == p:
                rows[u] |= bit(v)
                rows[v] |= bit(u)
    return Graph(g.n, tuple(rows), f"exact-dist-{p}({g.name or '?'})")


def complement(g: Graph) -> Graph:
    fm = full_mask(g.n)
    rows = tuple((fm & ~g.adj[v]) & ~bit(v) for v in range(g.n))
    return Graph(g.n, rows, f"complement({g.name or '?'})")


# -- girth, center, blocks ----------------------------------------------------


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; math.inf for forests.

    Per-root BFS: the shortest cycle through the root is found exactly when
    the root lies on a shortest cycle, and the minimum over roots is exact.
    """
    if g._girth is not None:
        return g._girth
    best = INF
    for root in range(g.n):
        dist = [INF] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = [root]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            if 2 * dist[x] >= best - 1:
                break
            for y in iter_bits(g.adj[x]):
                if dist[y] == INF:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x] and parent[y] != x:
                    best = min(best, dist[x] + dist[y] + 1)
    result: int | float = math.inf if best == INF else best
    g._girth = result
    return result


@dataclass(frozen=True)
class CenterInfo:
    """Radius, diameter, center and the branch count deg*(C).

    ``deg_star`` counts the components of G - E(G[C]) (or G - F with F the
    edges at the center vertex when the center is a single vertex) that
    contain a radial vertex.
    """

    radius: int
    diameter: int
    center: int  # bitmask
    radial_vertices: int  # bitmask
    deg_star: int


@dataclass(frozen=True)
class Metrics:
    girth: int | float
    diameter: int
    radius: int
    center_info: CenterInfo


def metrics(g: Graph) -> Metrics:
    """Girth, diameter, radius and CenterInfo of a connected graph."""
    if not g.is_connected():
        raise ConnectivityError("metrics requires a connected graph")
    dm = all_pairs_distances(g)
    ecc = [dm.eccentricity(v) for v in range(g.n)]
    rad = min(ecc)
    diam = max(ecc)
    center = mask_of(v for v in range(g.n) if ecc[v] == rad)
    radial = mask_of(
        u for u in range(g.n) if any(dm.d[u][c] == rad for c in iter_bits(center))
    )
    deg_star = _deg_star(g, center, radial)
    info = CenterInfo(rad, diam, center, radial, deg_star)
    return Metrics(girth(g), diam, rad, info)


def _deg_star(g: Graph, center: int, radial: int) -> int:
    if center.bit_count() >= 2:
        removed = {
            (u, v)
            for u in iter_bits(center)
            for v in iter_bits(g.adj[u] & center)
        }
    else:
        c = center.bit_length() - 1
        removed = {(c, v) for v in iter_bits(g.adj[c])} | {
            (v, c) for v in iter_bits(g.adj[c])
        }
    rows = [g.adj[v] for v in range(g.n)]
    for u, v in removed:
        rows[u] &= ~bit(v)
    stripped = Graph(g.n, tuple(rows))
    return sum(1 for comp in stripped.component_masks() if comp & radial)


@dataclass(frozen=True)
class BlockDecomposition:
    cut_vertices: int  # bitmask
    blocks: list[int] = field(default_factory=list)  # vertex bitmasks
    is_block_graph: bool = False


def blocks(g: Graph) -> BlockDecomposition:
    """Standard block-cut decomposition of a connected graph."""
    if not g.is_connected():
        raise ConnectivityError("block decomposition requires a connected graph")
    if g.n == 0:
        return BlockDecomposition(0, [], True)
    if g.n == 1:
        return BlockDecomposition(0, [1], True)

    disc = [0] * g.n
    low = [0] * g.n
    timer = 1
    cut = 0
    block_edge_sets: list[list[tuple[int, int]]] = []
    edge_stack: list[tuple[int, int]] = []
    # Iterative Hopcroft-Tarjan; neighbor lists fixed in index order.
    nbrs = [g.neighbors(v) for v in range(g.n)]
    stack: list[tuple[int, int, int]] = [(0, -1, 0)]  # (vertex, parent, nbr index)
    root_children = 0
    while stack:
        v, parent, i = stack[-1]
        if i == 0:
            disc[v] = low[v] = timer
            timer += 1
        if i < len(nbrs[v]):
            stack[-1] = (v, parent, i + 1)
            w = nbrs[v][i]
            if disc[w] == 0:
                edge_stack.append((v, w))
                stack.append((w, v, 0))
            elif w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    if p == 0:
                        root_children += 1
                    else:
                        cut |= bit(p)
                    comp = []
                    while edge_stack and edge_stack[-1] != (p, v):
                        comp.append(edge_stack.pop())
                    comp.append(edge_stack.pop())
                    block_edge_sets.append(comp)
    if root_children >= 2:
        cut |= bit(0)

    block_masks = []
    for es in block_edge_sets:
        m = 0
        for u, v in es:
            m |= bit(u) | bit(v)
        block_masks.append(m)
    block_masks.sort(key=lambda m: (m & -m).bit_length())

    is_bg = all(_induces_clique(g, m) for m in block_masks)
    return BlockDecomposition(cut, block_masks, is_bg)


def _induces_clique(g: Graph, mask: int) -> bool:
    for v in iter_bits(mask):
        if mask & ~(g.adj[v] | bit(v)):
            return False
    return True


def is_block_graph(g: Graph) -> bool:
    return blocks(g).is_block_graph


# -- convexity ----------------------------------------------------------------


def is_convex(g: Graph, s: int) -> bool:
    """True iff every geodesic between members of ``s`` stays inside ``s``.

    Sets inducing a disconnected subgraph are not convex by convention; pairs
    in distinct components of g already fail the geodesic condition here
    because no geodesic exists (distance INF).
    """
    members = bits_list(s)
    if not members:
        raise ValueError("convexity is defined for nonempty sets")
    dm = all_pairs_distances(g)
    outside = [w for w in range(g.n) if not s & bit(w)]
    for i, x in enumerate(members):
        for y in members[i + 1 :]:
            dxy = dm.d[x][y]
            if dxy >= INF:
                return False
            for w in outside:
                if dm.d[x][w] + dm.d[w][y] == dxy:
                    return False
    return True
