"""Exact md computation with certificates.

md(G) of a connected graph is the largest color count over edge colorings in
which every vertex pair is separated by deleting one color class.  The solver
decomposes into blocks (md adds over blocks), sandwiches each block between
cheap bounds, and closes the gap with a backtracking search that descends from
the upper bound; by color merging, the first feasible k is the answer.

The search assigns whole edge classes rather than edges: restricted to any
triangle a separating coloring is monochromatic, and restricted to any 4-cycle
it makes opposite edges equal, so the union-closure of those constraints is
monochromatic under every separating coloring.  This refines nothing away and
shrinks the search space a lot on dense or product-shaped inputs.

md_oracle is the independent cross-check: it enumerates raw set partitions of
the edge set, no quotient, no blocks, and shares no pruning with md_exact.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from mdlab.analysis import (
    block_decomposition,
    find_matching_cuts,
    is_closure,
    is_two_connected,
    soft_layer_reduce,
    theta_classes,
)
from mdlab.coloring import EdgeColoring, is_md_coloring, trivial_coloring
from mdlab.graph import Graph, is_connected, min_degree


class SearchBudgetExceeded(RuntimeError):
    """The node or time budget ran out; best-known bounds are attached."""

    def __init__(self, message: str, *, nodes: int = 0,
                 lower: int | None = None, upper: int | None = None):
        super().__init__(message)
        self.nodes = nodes
        self.lower = lower
        self.upper = upper


@dataclass
class SearchConfig:
    """Budgets and bound toggles for the exact solver."""

    node_budget: int = 500_000_000
    time_budget_ms: float | None = None
    use_theta: bool = True
    use_mono: bool = True
    use_closure: bool = True
    use_min_degree: bool = True
    use_soft_layer: bool = True
    use_matching_cut: bool = True
    matching_cut_cap: int = 16
    descend: bool = True

    def __post_init__(self) -> None:
        if self.node_budget <= 0:
            raise ValueError("node budget must be positive")
        if self.time_budget_ms is not None and self.time_budget_ms <= 0:
            raise ValueError("time budget must be positive")


DEFAULT_CONFIG = SearchConfig()


@dataclass(frozen=True)
class MdResult:
    """Exact value plus a verified extremal coloring and the bound trail."""

    value: int
    certificate: EdgeColoring
    bounds_trail: tuple[tuple[str, int], ...]
    stats: dict = field(default_factory=dict)


class _Budget:
    __slots__ = ("node_budget", "deadline", "nodes")

    def __init__(self, cfg: SearchConfig):
        self.node_budget = cfg.node_budget
        self.deadline = (
            time.monotonic() + cfg.time_budget_ms / 1000.0
            if cfg.time_budget_ms is not None
            else None
        )
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise SearchBudgetExceeded(
                f"node budget {self.node_budget} exhausted", nodes=self.nodes
            )
        if self.deadline is not None and self.nodes % 2048 == 0:
            if time.monotonic() > self.deadline:
                raise SearchBudgetExceeded(
                    "time budget exhausted", nodes=self.nodes
                )


# ---------------------------------------------------------------------------
# Forced-monochromatic edge classes


def mono_classes(g: Graph) -> list[tuple[tuple[int, int], ...]]:
    """Edge classes forced monochromatic in every separating coloring.

    Union-closure of: the three edges of each triangle, and each pair of
    opposite edges of each 4-cycle.  (The 4-cycle rule subsumes the K_{2,3}
    bundles: crossing pairs inside a double star chain together.)
    """
    m = g.m
    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    idx = g.edge_index
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    for u, v in g.edges:
        common = masks[u] & masks[v]
        e_uv = idx[(u, v)]
        w = common
        while w:
            wb = w & -w
            x = wb.bit_length() - 1
            w ^= wb
            union(e_uv, idx[(min(u, x), max(u, x))])
            union(e_uv, idx[(min(v, x), max(v, x))])
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = masks[u] & masks[v]
            if common.bit_count() < 2:
                continue
            xs = []
            w = common
            while w:
                wb = w & -w
                xs.append(wb.bit_length() - 1)
                w ^= wb
            for i in range(len(xs)):
                for j in range(i + 1, len(xs)):
                    x, y = xs[i], xs[j]
                    # 4-cycle u-x-v-y: opposite edges share a color.
                    union(idx[(min(u, x), max(u, x))], idx[(min(v, y), max(v, y))])
                    union(idx[(min(v, x), max(v, x))], idx[(min(u, y), max(u, y))])
    groups: dict[int, list[int]] = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(i)
    return [
        tuple(g.edges[i] for i in cls) for cls in sorted(groups.values())
    ]


# ---------------------------------------------------------------------------
# Bounds


def md_upper_bound(g: Graph, cfg: SearchConfig | None = None) -> tuple[int, str]:
    """Smallest applicable upper bound with the name of the rule that won."""
    cfg = cfg or DEFAULT_CONFIG
    if not is_connected(g) or g.n < 2:
        raise ValueError("bounds are defined for connected graphs on >= 2 vertices")
    best, name = g.n - 1, "vertex-bound"
    if is_two_connected(g) and g.n // 2 < best:
        best, name = g.n // 2, "half-order"
    if cfg.use_min_degree and min_degree(g) >= g.n // 2 + 1 and best > 1:
        best, name = 1, "min-degree-one"
    if cfg.use_closure and best > 1 and is_closure(g):
        best, name = 1, "closure-one"
    if cfg.use_theta and best > 1:
        count = len(theta_classes(g).classes)
        if count < best:
            best, name = count, "theta-classes"
    if cfg.use_mono and best > 1:
        count = len(mono_classes(g))
        if count < best:
            best, name = count, "mono-classes"
    if cfg.use_soft_layer and best > 1:
        reduced, seq = soft_layer_reduce(g)
        if seq and reduced.n < g.n:
            try:
                value = md_value(reduced, cfg)
            except SearchBudgetExceeded:
                value = None
            if value is not None and value < best:
                best, name = value, "soft-layer"
    return best, name


def md_lower_bound(g: Graph, cfg: SearchConfig | None = None) -> tuple[int, str]:
    """Largest applicable lower bound with the name of the rule that won."""
    cfg = cfg or DEFAULT_CONFIG
    if not is_connected(g) or g.n < 2:
        raise ValueError("bounds are defined for connected graphs on >= 2 vertices")
    best, name = 1, "one"
    if g.m == g.n - 1 and g.n - 1 > best:
        best, name = g.n - 1, "tree"
    if g.m == g.n and g.n // 2 > best:
        best, name = g.n // 2, "unicyclic-half"
    if (
        cfg.use_matching_cut
        and best < 2
        and g.n <= cfg.matching_cut_cap
        and find_matching_cuts(g, minimal_only=True, max_n=cfg.matching_cut_cap)
    ):
        best, name = 2, "matching-cut"
    return best, name


# ---------------------------------------------------------------------------
# Feasibility search


def _search(g: Graph, k: int, classes: list[tuple[tuple[int, int], ...]],
            budget: _Budget) -> list[int] | None:
    """Assign classes to colors 0..k-1; return per-class colors or None.

    Colors open in order (class may take color c only if 0..c-1 are in use),
    and a branch dies as soon as some vertex pair provably cannot be separated
    in any completion: for each color j the union-find over edges already
    assigned to other colors only ever grows, so a pair connected under every
    such structure (and under all assigned edges, when a fresh color could
    still open) is beyond saving.
    """
    n = g.n
    t = len(classes)
    edge_class = {}
    for ci, cls in enumerate(classes):
        for e in cls:
            edge_class[e] = ci
    pair_info: list[tuple[int, int, int]] = []
    for u in range(n):
        for v in range(u + 1, n):
            pair_info.append((u, v, edge_class.get((u, v), -1)))
    class_endpoints = [tuple(cls) for cls in classes]

    # Union-find per color plus one over all assigned edges (index k); union
    # by size, no path compression, journal for rollback.
    parent = [list(range(n)) for _ in range(k + 1)]
    size = [[1] * n for _ in range(k + 1)]
    journal: list[tuple[int, int, int]] = []
    color_of_class = [-1] * t

    def find(p: list[int], x: int) -> int:
        while p[x] != x:
            x = p[x]
        return x

    def assign(ci: int, color: int) -> int:
        mark = len(journal)
        color_of_class[ci] = color
        for u, v in class_endpoints[ci]:
            for j in range(k + 1):
                if j == color:
                    continue
                p = parent[j]
                ru, rv = find(p, u), find(p, v)
                if ru == rv:
                    continue
                s = size[j]
                if s[ru] < s[rv]:
                    ru, rv = rv, ru
                p[rv] = ru
                s[ru] += s[rv]
                journal.append((j, rv, ru))
        return mark

    def rollback(ci: int, mark: int) -> None:
        color_of_class[ci] = -1
        while len(journal) > mark:
            j, rv, ru = journal.pop()
            parent[j][rv] = rv
            size[j][ru] -= size[j][rv]

    def has_dead_pair(opened: int) -> bool:
        for u, v, ci in pair_info:
            if ci >= 0:
                col = color_of_class[ci]
                if col >= 0:
                    # Adjacent pair: only the edge's own color can separate it.
                    p = parent[col]
                    if find(p, u) == find(p, v):
                        return True
                    continue
            hope = False
            for j in range(opened):
                p = parent[j]
                if find(p, u) != find(p, v):
                    hope = True
                    break
            if not hope and opened < k:
                p = parent[k]
                if find(p, u) != find(p, v):
                    hope = True
            if not hope:
                return True
        return False

    def dfs(i: int, opened: int) -> bool:
        budget.tick()
        if i == t:
            return opened == k
        if t - i < k - opened:
            return False
        for color in range(min(opened + 1, k)):
            mark = assign(i, color)
            new_opened = opened if color < opened else opened + 1
            if not has_dead_pair(new_opened) and dfs(i + 1, new_opened):
                return True
            rollback(i, mark)
        return False

    if dfs(0, 0):
        return list(color_of_class)
    return None


def md_feasible(
    g: Graph, k: int, cfg: SearchConfig | None = None, _budget: _Budget | None = None
) -> EdgeColoring | None:
    """A separating coloring of g with exactly k colors, or None.

    Raises SearchBudgetExceeded instead of returning None when the budget runs
    out, so an unknown outcome is never silently conflated with infeasibility.
    """
    cfg = cfg or DEFAULT_CONFIG
    if not is_connected(g):
        raise ValueError("md is defined for connected graphs")
    if k < 1:
        raise ValueError("color count must be >= 1")
    if k == 1:
        return trivial_coloring(g)
    if k > g.m:
        return None
    classes = mono_classes(g)
    if k > len(classes):
        return None
    classes.sort(key=lambda cls: (-len(cls), g.edge_index[cls[0]]))
    budget = _budget if _budget is not None else _Budget(cfg)
    solution = _search(g, k, classes, budget)
    if solution is None:
        return None
    color_by_edge: dict[tuple[int, int], int] = {}
    for cls, col in zip(classes, solution):
        for e in cls:
            color_by_edge[e] = col + 1
    coloring = EdgeColoring(g, tuple(color_by_edge[e] for e in g.edges))
    ok, _ = is_md_coloring(g, coloring)
    if not ok:
        raise RuntimeError(
            "search accepted a leaf that fails full verification; "
            "this is a solver bug"
        )
    return coloring


def _solve_connected(
    g: Graph, cfg: SearchConfig, budget: _Budget
) -> tuple[int, EdgeColoring, list[tuple[str, int]]]:
    """Exact md of a connected graph on >= 2 vertices, no block splitting."""
    upper, upper_name = md_upper_bound(g, cfg)
    lower, lower_name = md_lower_bound(g, cfg)
    trail = [(upper_name, upper), (lower_name, lower)]
    if cfg.descend:
        for k in range(upper, 0, -1):
            col = md_feasible(g, k, cfg, _budget=budget)
            if col is not None:
                return k, col, trail
        raise AssertionError("the one-color coloring always separates")
    best_k, best_col = 1, trivial_coloring(g)
    start = max(lower, 1)
    if start > 1:
        col = md_feasible(g, start, cfg, _budget=budget)
        if col is None:
            raise AssertionError("lower bound violated by the search")
        best_k, best_col = start, col
    for k in range(best_k + 1, upper + 1):
        col = md_feasible(g, k, cfg, _budget=budget)
        if col is None:
            break
        best_k, best_col = k, col
    return best_k, best_col, trail


def md_exact(g: Graph, cfg: SearchConfig | None = None) -> MdResult:
    """Exact md with a verified extremal coloring.

    Splits into blocks (md adds over blocks, and bridges contribute 1 each),
    solves each non-trivial block by descending feasibility, then assembles a
    whole-graph coloring from the block colorings on disjoint palettes.  The
    assembled certificate is re-verified before returning.
    """
    cfg = cfg or DEFAULT_CONFIG
    if not is_connected(g):
        raise ValueError("md is defined for connected graphs")
    started = time.perf_counter()
    budget = _Budget(cfg)
    if g.n <= 1:
        return MdResult(
            value=0,
            certificate=EdgeColoring(g, ()),
            bounds_trail=(("single-vertex", 0),),
            stats={"nodes": 0, "time_ms": 0.0},
        )
    dec = block_decomposition(g)
    multi = len(dec.blocks) > 1
    total = 0
    offset = 0
    trail: list[tuple[str, int]] = []
    colors = [0] * g.m
    solved: list[int] = []
    for bi, (bg, vmap) in enumerate(dec.block_graphs):
        prefix = f"block{bi}:" if multi else ""
        try:
            if bg.n == 2:
                value, block_col = 1, trivial_coloring(bg)
                block_trail = [("bridge", 1)]
            else:
                value, block_col, block_trail = _solve_connected(bg, cfg, budget)
        except SearchBudgetExceeded as exc:
            done = sum(solved)
            remaining = len(dec.blocks) - len(solved)
            raise SearchBudgetExceeded(
                str(exc),
                nodes=budget.nodes,
                lower=done + remaining,
                upper=done + sum(
                    b.n - 1 for (b, _) in dec.block_graphs[len(solved):]
                ),
            ) from exc
        solved.append(value)
        trail.extend((prefix + name, val) for name, val in block_trail)
        inv = {new: old for old, new in vmap.items()}
        for e_local, c in zip(bg.edges, block_col.colors):
            a, b = inv[e_local[0]], inv[e_local[1]]
            orig = (a, b) if a < b else (b, a)
            colors[g.edge_index[orig]] = c + offset
        offset += value
        total += value
    if multi:
        trail.append(("block-sum", total))
    certificate = EdgeColoring(g, tuple(colors))
    ok, _ = is_md_coloring(g, certificate)
    if not ok or certificate.k != total:
        raise RuntimeError(
            "assembled block certificate failed verification; this is a solver bug"
        )
    elapsed = (time.perf_counter() - started) * 1000.0
    return MdResult(
        value=total,
        certificate=certificate,
        bounds_trail=tuple(trail),
        stats={"nodes": budget.nodes, "time_ms": elapsed},
    )


_MD_VALUE_CACHE: dict[tuple[int, tuple[tuple[int, int], ...]], int] = {}


def md_value(g: Graph, cfg: SearchConfig | None = None) -> int:
    """md_exact's value with an in-process cache keyed by the exact graph."""
    key = (g.n, g.edges)
    hit = _MD_VALUE_CACHE.get(key)
    if hit is not None:
        return hit
    value = md_exact(g, cfg).value
    _MD_VALUE_CACHE[key] = value
    return value


# ---------------------------------------------------------------------------
# Independent oracle


def restricted_growth_strings(m: int):
    """All set partitions of range(m) as restricted growth strings.

    Yields the same list object each time; copy if you keep it.  The count is
    the m-th Bell number.
    """
    if m == 0:
        yield []
        return
    a = [0] * m
    b = [1] * m  # b[i] = 1 + max(a[:i]); a[i] may range over 0..b[i]
    while True:
        yield a
        j = m - 1
        while j > 0 and a[j] == b[j]:
            j -= 1
        if j == 0:
            return
        a[j] += 1
        nb = b[j] + 1 if a[j] == b[j] else b[j]
        for t in range(j + 1, m):
            a[t] = 0
            b[t] = nb


def md_oracle(g: Graph) -> int:
    """Exhaustive md over every set partition of the raw edge set.

    No edge quotient, no block splitting, no shared pruning with md_exact:
    every partition is tested for the separation property, memoizing the
    separated-pair bitmask of each edge subset (partitions that cannot beat
    the best value found are skipped, which cannot change the maximum).
    Capped at 10 edges.
    """
    if not is_connected(g):
        raise ValueError("md is defined for connected graphs")
    if g.m > 10:
        raise ValueError(f"oracle is capped at 10 edges, got {g.m}")
    m = g.m
    if m == 0:
        return 0
    n = g.n
    pair_index: dict[tuple[int, int], int] = {}
    for u in range(n):
        for v in range(u + 1, n):
            pair_index[(u, v)] = len(pair_index)
    full = (1 << len(pair_index)) - 1
    edges = g.edges
    mask_memo: dict[int, int] = {}

    def separation_mask(subset: int) -> int:
        """Bitmask of pairs split by deleting the edges in `subset`."""
        cached = mask_memo.get(subset)
        if cached is not None:
            return cached
        adj = [0] * n
        for i, (u, v) in enumerate(edges):
            if not (subset >> i) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        comp = [-1] * n
        nc = 0
        for s in range(n):
            if comp[s] != -1:
                continue
            frontier = 1 << s
            seen = frontier
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    bit = f & -f
                    f ^= bit
                    nxt |= adj[bit.bit_length() - 1]
                frontier = nxt & ~seen
                seen |= frontier
            w = seen
            while w:
                bit = w & -w
                w ^= bit
                comp[bit.bit_length() - 1] = nc
            nc += 1
        mask = 0
        for (u, v), pi in pair_index.items():
            if comp[u] != comp[v]:
                mask |= 1 << pi
        mask_memo[subset] = mask
        return mask

    best = 0
    for a in restricted_growth_strings(m):
        parts = max(a) + 1
        if parts <= best:
            continue
        subsets = [0] * parts
        for i, c in enumerate(a):
            subsets[c] |= 1 << i
        got = 0
        for s in subsets:
            got |= separation_mask(s)
            if got == full:
                break
        if got == full:
            best = parts
    return best
