"""Closed-form values and certified constructive colorings.

Every builder verifies its own output against the target graph before
returning and raises VerificationError otherwise: the underlying theorems
guarantee validity, so a failure here means a transcription or implementation
bug, never bad luck.  Hypothesis violations of the theorems themselves raise
DomainError / ConditionError / SpecError instead.
"""

from __future__ import annotations

import math

from .bitset import bit, bits_list, iter_bits
from .coloring import Coloring
from .errors import (
    ConditionError,
    DomainError,
    SpecError,
    VerificationError,
)
from .families import (
    build_spec_tree,
    complete_graph,
    corona,
    cycle_graph,
    hypercube,
    parse_spec,
    path_graph,
    torus,
)
from .graph import Graph, all_pairs_distances, blocks, girth, metrics, product
from .chromatic import verify_kdmv_coloring
from .domination import is_dominating
from .visibility import VisibilityOracle, is_kdmv_set


def _check(g: Graph, k: int, coloring: Coloring, what: str) -> Coloring:
    report = verify_kdmv_coloring(g, k, coloring)
    if not report.ok:
        raise VerificationError(f"{what}: invalid coloring, first violation {report.violations[0]}")
    return coloring


# -- closed-form values ---------------------------------------------------------


def formula_chi_mu_k(spec: str | tuple, k: int) -> int | None:
    """The paper's closed-form chi_mu_k where one applies, else None.

    Covered: paths and cycles (all k), complete graphs, P_n strong K_m inside
    its hypothesis window, 4|m and 4|n tori at k = 2, block-graph families at
    k >= diam, and the named fixtures at k = 2.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    tree = parse_spec(spec) if isinstance(spec, str) else spec
    head, args = tree

    if head == "path":
        return -(-args[0] // 2)
    if head == "complete":
        return 1
    if head == "cycle":
        n = args[0]
        return -(-n // 3) if n <= 3 * k else -(-n // 2)
    if head == "strong":
        a, b = args
        if a[0] == "path" and b[0] == "complete":
            n, m = a[1][0], b[1][0]
        elif a[0] == "complete" and b[0] == "path":
            m, n = a[1][0], b[1][0]
        else:
            return None
        if n >= 4 and m >= 2 and 2 <= k <= n - 2:
            eta, t = divmod(n, k + 2)
            return 2 * eta + (0 if t == 0 else 1 if t <= 2 else 2)
        return None
    if head in ("cartesian", "torus"):
        if head == "torus":
            m, n = args
        else:
            a, b = args
            if a[0] != "cycle" or b[0] != "cycle":
                return None
            m, n = a[1][0], b[1][0]
        if k == 2 and m >= 4 and n >= 4 and m % 4 == 0 and n % 4 == 0:
            return m * n // 4
        return None
    if head == "fig1tree" and k == 2:
        return args[2] + 2
    if head == "kn1rlexempty" and k == 2:
        return 2
    if head == "sharp" and k == 2:
        return sum(args[1:])
    if head == "named" and k == 2:
        # solver-verified fixture values (figgirth and propprtree match the
        # published captions; proppr is pinned by the solver, see notes)
        fixed = {"figgirth": 3, "proppr": 3, "propprtree": 3}
        if args[0] in fixed:
            return fixed[args[0]]
    if head in ("star", "doublestar", "tree", "fig1tree") or (
        head == "named" and args[0] in ("propprtree", "fig5block")
    ):
        g = build_spec_tree(tree)
        d = all_pairs_distances(g).diameter()
        if k >= d:
            return -(-(d + 1) // 2)
    return None


# -- paths and cycles ------------------------------------------------------------


def color_path(n: int, k: int) -> Coloring:
    """ceil(n/2) classes pairing consecutive path vertices; valid for every k."""
    if n < 1:
        raise SpecError("path needs n >= 1")
    colors = [i // 2 for i in range(n)]
    return _check(path_graph(n), k, Coloring(tuple(colors)), "path coloring")


def color_cycle(n: int, k: int) -> Coloring:
    """The two-branch cycle scheme: wraparound triples when n <= 3k, else pairs."""
    if n < 3:
        raise SpecError("cycle needs n >= 3")
    if n <= 3 * k:
        m = -(-n // 3)
        colors = [i % m for i in range(n)]
    else:
        colors = [i // 2 for i in range(n)]
    return _check(cycle_graph(n), k, Coloring(tuple(colors)), "cycle coloring")


# -- strong products --------------------------------------------------------------


def color_strong_path_complete(n: int, m: int, k: int) -> Coloring:
    """Block scheme for P_n strong K_m: two colors per block of k+2 fibers.

    The first fiber of a block and m-1 vertices of each middle fiber take the
    block's first color; the rest take the second.  A remainder of one or two
    fibers is a clique and takes a single fresh color; longer remainders are
    two-colored like a block.
    """
    if not (n >= 4 and m >= 2 and 2 <= k <= n - 2):
        raise SpecError("hypothesis needs n >= 4, m >= 2 and 2 <= k <= n-2")
    width = k + 2
    eta, t = divmod(n, width)
    colors = [0] * (n * m)

    def paint(first: int, last: int, c1: int, c2: int) -> None:
        for col in range(first, last + 1):
            for j in range(m):
                if col == first:
                    c = c1
                elif col == last:
                    c = c2
                else:
                    c = c2 if j == 0 else c1
                colors[col * m + j] = c

    for b in range(eta):
        paint(b * width, b * width + width - 1, 2 * b, 2 * b + 1)
    if t in (1, 2):
        for col in range(n - t, n):
            for j in range(m):
                colors[col * m + j] = 2 * eta
    elif t >= 3:
        paint(n - t, n - 1, 2 * eta, 2 * eta + 1)
    g = product("strong", path_graph(n), complete_graph(m))
    coloring = _check(g, k, Coloring(tuple(colors)), "strong path x complete coloring")
    expected = formula_chi_mu_k(("strong", [("path", [n]), ("complete", [m])]), k)
    if coloring.num_classes != expected:
        raise VerificationError(
            f"block scheme used {coloring.num_classes} classes, formula says {expected}"
        )
    return coloring


def product_coloring_strong(g: Graph, h: Graph, cg: Coloring, ch: Coloring, k: int) -> Coloring:
    """Product partition V_i x W_j on the strong product, verified kDMV."""
    if not verify_kdmv_coloring(g, k, cg).ok:
        raise DomainError("first factor coloring is not a valid kDMV coloring")
    if not verify_kdmv_coloring(h, k, ch).ok:
        raise DomainError("second factor coloring is not a valid kDMV coloring")
    prod = product("strong", g, h)
    th = ch.num_classes
    colors = [cg.colors[a] * th + ch.colors[b] for a in range(g.n) for b in range(h.n)]
    return _check(prod, k, Coloring(tuple(colors)), "strong product coloring")


# -- lexicographic products --------------------------------------------------------


def _class_masks_of(partition: Coloring | list[list[int]], n: int) -> list[int]:
    if isinstance(partition, Coloring):
        return partition.class_masks()
    coloring = Coloring.from_classes(n, partition)
    return coloring.class_masks()


def lex_coloring_from_i2dmv(g: Graph, partition: Coloring | list[list[int]], h: Graph) -> Coloring:
    """Classes Q_i x V(H) on G o H from an independent 2DMV partition of G."""
    if g.n < 2 or not g.is_connected():
        raise DomainError("needs a connected G on at least two vertices")
    masks = _class_masks_of(partition, g.n)
    oracle = VisibilityOracle(g)
    for mask in masks:
        for v in iter_bits(mask):
            if g.adj[v] & mask:
                raise DomainError("a class of the given partition is not independent")
        if not is_kdmv_set(g, mask, 2, oracle):
            raise DomainError("a class of the given partition is not a 2DMV set")
    gid = [0] * g.n
    for ci, mask in enumerate(masks):
        for v in iter_bits(mask):
            gid[v] = ci
    prod = product("lex", g, h)
    colors = [gid[a] for a in range(g.n) for _ in range(h.n)]
    return _check(prod, 2, Coloring(tuple(colors)), "lex product coloring (I2DMV route)")


def lex_coloring_from_2dmv(g: Graph, cg: Coloring, h: Graph) -> Coloring:
    """Classes A_i x V(H) on G o H; needs min degree >= 2 and girth >= 5."""
    if g.min_degree() < 2:
        raise DomainError("hypothesis needs minimum degree at least 2")
    if girth(g) < 5:
        raise DomainError("hypothesis needs girth at least 5")
    if not verify_kdmv_coloring(g, 2, cg).ok:
        raise DomainError("given coloring of G is not a valid 2DMV coloring")
    prod = product("lex", g, h)
    colors = [cg.colors[a] for a in range(g.n) for _ in range(h.n)]
    return _check(prod, 2, Coloring(tuple(colors)), "lex product coloring (2DMV route)")


# -- block graphs ------------------------------------------------------------------


def block_graph_coloring(g: Graph) -> Coloring:
    """Level coloring of a block graph, a (d-1)DMV certificate.

    Applies when deg*(C) <= ceil((d+1)/2); then the class count matches
    chi_mu = ceil((d+1)/2).  Components of the center-stripped graph are
    processed radial-branches first, ordered by smallest vertex index.
    """
    if not g.is_connected():
        raise DomainError("block coloring needs a connected graph")
    if not blocks(g).is_block_graph:
        raise DomainError("not a block graph")
    mets = metrics(g)
    d = mets.diameter
    if d < 2:
        raise DomainError("level coloring needs diameter at least 2")
    r = mets.radius
    center = mets.center_info.center
    radial = mets.center_info.radial_vertices
    p = mets.center_info.deg_star
    if p > -(-(d + 1) // 2):
        raise ConditionError("deg*(C) exceeds ceil((d+1)/2); equality fails here")

    dm = all_pairs_distances(g)
    dist_c = [min(dm.d[v][c] for c in iter_bits(center)) for v in range(g.n)]

    if center.bit_count() >= 2:
        rows = [g.adj[v] & ~center if bit(v) & center else g.adj[v] for v in range(g.n)]
        stripped = Graph(g.n, tuple(rows))
        comps = stripped.component_masks()
        top = r - 1
        single_center = None
    else:
        c = center.bit_length() - 1
        rows = list(g.adj)
        for w in iter_bits(g.adj[c]):
            rows[w] &= ~bit(c)
        rows[c] = 0
        stripped = Graph(g.n, tuple(rows))
        comps = [m for m in stripped.component_masks() if m != bit(c)]
        top = r
        single_center = c

    comps.sort(key=lambda m: ((m & radial) == 0, (m & -m).bit_length()))
    n_radial = sum(1 for m in comps if m & radial)
    if n_radial != p:
        raise VerificationError("radial component count disagrees with deg*(C)")

    level_of = dist_c
    comp_of = [0] * g.n
    for j, m in enumerate(comps):
        for v in iter_bits(m):
            comp_of[v] = j + 1  # 1-based like the proof

    assigned: dict[int, int] = {}

    def paint(j: int, level: int, color: int, only_new: bool = False) -> None:
        for v in range(g.n):
            if comp_of[v] == j and level_of[v] == level and (single_center is None or v != single_center):
                if only_new and v in assigned:
                    continue
                assigned[v] = color

    ncomps = len(comps)
    if single_center is None:
        for i in range(1, p + 1):
            paint(i, top, i)
        for i in range(1, p + 1):
            for j in range(i + 1, ncomps + 1):
                if top - i >= 0:
                    paint(j, top - i, i)
        for i in range(2, p + 1):
            for j in range(1, i):
                if r - i >= 0:
                    paint(j, r - i, i)
        if p < r:
            for lvl in range(0, r - p):
                for v in range(g.n):
                    if level_of[v] == lvl and v not in assigned:
                        assigned[v] = r - lvl
    else:
        for i in range(1, p + 1):
            paint(i, top, i)
        lim2 = p - 1 if p <= r else p - 2
        for i in range(1, lim2 + 1):
            for j in range(i + 1, ncomps + 1):
                paint(j, r - i, i)
        lim3 = p if p <= r else p - 1
        for i in range(2, lim3 + 1):
            for j in range(1, i):
                paint(j, r - i + 1, i)
        if p == r + 1:
            assigned[single_center] = p
        else:
            for lvl in range(0, r - p + 1):
                for v in range(g.n):
                    if level_of[v] == lvl and v not in assigned:
                        assigned[v] = r - lvl + 1

    if len(assigned) != g.n:
        raise VerificationError("level coloring left vertices unassigned")
    colors = tuple(assigned[v] for v in range(g.n))
    coloring = _check(g, d - 1, Coloring(colors), "block-graph level coloring")
    if coloring.num_classes != -(-(d + 1) // 2):
        raise VerificationError("level coloring class count disagrees with ceil((d+1)/2)")
    return coloring


# -- hypercubes and tori -----------------------------------------------------------


def hypercube_neighborhood_coloring(n: int, d: list[int]) -> Coloring:
    """Assign each Q_n vertex to its first dominator's closed neighborhood."""
    g = hypercube(n)
    if not is_dominating(g, d):
        raise DomainError("given set does not dominate the hypercube")
    colors = [-1] * g.n
    for idx, v in enumerate(d):
        for u in iter_bits(g.adj[v] | bit(v)):
            if colors[u] == -1:
                colors[u] = idx
    return _check(g, 2, Coloring(tuple(colors)), "hypercube neighborhood coloring")


def torus_eod_domino_set(m: int, n: int) -> tuple[int, ...]:
    """Efficient open dominating set of C_m x C_n (Cartesian), both = 0 mod 4.

    Horizontal dominoes on even rows, column offset shifting by two per row:
    {(i, j), (i, j+1)} for even i and j = i (mod 4).  Every vertex then has
    exactly one neighbor in the set.
    """
    out = []
    for i in range(0, m, 2):
        for j in range(i % 4, n, 4):
            out.append(i * n + j)
            out.append(i * n + (j + 1) % n)
    return tuple(sorted(out))


def torus_eod_coloring(m: int, n: int) -> Coloring:
    """mn/4 classes: open neighborhoods of an efficient open dominating set."""
    if m % 4 or n % 4 or not m >= n >= 4:
        raise SpecError("torus scheme needs m >= n >= 4 with 4 | m and 4 | n")
    g = torus(m, n)
    dset = torus_eod_domino_set(m, n)
    colors = [-1] * g.n
    for idx, x in enumerate(dset):
        for u in iter_bits(g.adj[x]):
            if colors[u] != -1:
                raise VerificationError("domino pattern double-covers a vertex")
            colors[u] = idx
    if any(c == -1 for c in colors):
        raise VerificationError("domino pattern left a vertex uncovered")
    return _check(g, 2, Coloring(tuple(colors)), "torus neighborhood coloring")


# -- spanning-tree peeling (order/2 bound) -----------------------------------------


def tree_half_coloring(g: Graph) -> Coloring:
    """2DMV coloring with at most ceil(n/2) classes via leaf-pair peeling.

    A BFS spanning tree from vertex 0 is peeled from a deepest leaf: two leaf
    siblings (or a leaf with its degree-2 parent) get a fresh class.  What
    remains at tree diameter <= 2 is a star: center plus smallest leaf in one
    class, remaining leaves in another.
    """
    if not g.is_connected():
        raise DomainError("needs a connected graph")
    n = g.n
    if n == 0:
        return Coloring(())
    parent = [-1] * n
    order = [0]
    seen = bit(0)
    qi = 0
    while qi < len(order):
        v = order[qi]
        qi += 1
        for u in iter_bits(g.adj[v] & ~seen):
            parent[u] = v
            seen |= bit(u)
            order.append(u)
    tadj: list[set[int]] = [set() for _ in range(n)]
    for v in range(1, n):
        tadj[v].add(parent[v])
        tadj[parent[v]].add(v)

    alive = set(range(n))
    classes: list[list[int]] = []

    def tree_bfs(src: int) -> tuple[int, dict[int, int], dict[int, int]]:
        dist = {src: 0}
        par = {src: -1}
        queue = [src]
        qi = 0
        far = src
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for y in tadj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    par[y] = x
                    queue.append(y)
                    if dist[y] > dist[far] or (dist[y] == dist[far] and y < far):
                        far = y
        return far, dist, par

    def remove(v: int) -> None:
        alive.remove(v)
        for u in tadj[v]:
            tadj[u].discard(v)
        tadj[v].clear()

    while len(alive) > 2:
        start = min(alive)
        r, _, _ = tree_bfs(start)
        v, dist, par = tree_bfs(r)
        if dist[v] <= 2:
            break
        u = par[v]
        leaf_children = sorted(w for w in tadj[u] if w != par[u] and len(tadj[w]) == 1)
        if len(leaf_children) >= 2:
            a, b = leaf_children[0], leaf_children[1]
            classes.append([a, b])
            remove(a)
            remove(b)
        else:
            classes.append([u, v])
            remove(v)
            remove(u)

    rest = sorted(alive)
    if len(rest) <= 2:
        if rest:
            classes.append(rest)
    else:
        center = max(rest, key=lambda v: (len(tadj[v]), -v))
        leaves = [v for v in rest if v != center]
        classes.append([center, leaves[0]])
        classes.append(leaves[1:])

    coloring = Coloring.from_classes(n, classes)
    coloring = _check(g, 2, coloring, "spanning-tree peeling coloring")
    if coloring.num_classes > -(-n // 2):
        raise VerificationError("peeling exceeded the ceil(n/2) class bound")
    return coloring


# -- corona x C4 -------------------------------------------------------------------

# Four-color pattern of the P4 x C4 figure: rows are P4 positions
# (leaf, matched endpoint, matched endpoint, leaf), columns the C4 cycle.
_P4C4_PATTERN = (
    (4, 4, 1, 4),
    (4, 1, 2, 1),
    (3, 2, 1, 2),
    (3, 3, 2, 3),
)


def find_perfect_matching(g: Graph) -> list[tuple[int, int]] | None:
    """Deterministic exact search: match the smallest free vertex first."""
    if g.n % 2:
        return None

    def search(free: int, acc: list[tuple[int, int]]):
        if not free:
            return list(acc)
        u = (free & -free).bit_length() - 1
        for v in iter_bits(g.adj[u] & free):
            acc.append((u, v))
            found = search(free & ~bit(u) & ~bit(v), acc)
            if found is not None:
                return found
            acc.pop()
        return None

    return search((1 << g.n) - 1, [])


def cartesian_corona_c4_coloring(g: Graph, matching: list[tuple[int, int]] | None = None) -> Coloring:
    """2|V(g)| classes on cor(g) x C4: each matched edge spans a P4 x C4 copy
    colored by the four-color figure pattern."""
    if matching is None:
        matching = find_perfect_matching(g)
        if matching is None:
            raise DomainError("graph has no perfect matching")
    else:
        used = 0
        for u, v in matching:
            if not g.has_edge(u, v) or used & (bit(u) | bit(v)):
                raise DomainError("given matching is not a matching of g")
            used |= bit(u) | bit(v)
        if used != (1 << g.n) - 1:
            raise DomainError("given matching is not perfect")
    cg = corona(g)
    prod = product("cartesian", cg, cycle_graph(4))
    colors = [-1] * prod.n
    for copy, (u, v) in enumerate(sorted(matching)):
        fiber = (g.n + u, u, v, g.n + v)
        for row, w in enumerate(fiber):
            for c in range(4):
                colors[w * 4 + c] = 4 * copy + _P4C4_PATTERN[row][c] - 1
    if any(c == -1 for c in colors):
        raise VerificationError("matching copies did not cover the product")
    return _check(prod, 2, Coloring(tuple(colors)), "corona x C4 coloring")
