"""Brute-force reference implementations the tests trust over the package.

Everything here is deliberately naive — direct path enumeration, exhaustive
coloring sweeps, textbook augmenting paths — and shares no code with the
library beyond the Graph container.
"""

from __future__ import annotations

import itertools
from collections import deque

from properconn.graph import Graph


def nxg(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def simple_paths(g: Graph, u: int, v: int):
    """All simple u->v paths as vertex tuples."""
    out = []

    def dfs(x, seen, path):
        for w in g.adj[x]:
            if w == v:
                out.append(path + (v,))
            elif w not in seen:
                dfs(w, seen | {w}, path + (w,))

    dfs(u, {u}, (u,))
    return out


def path_colors(g: Graph, c, path) -> list[int]:
    return [c.color(a, b) for a, b in zip(path, path[1:])]


def is_proper_seq(colors) -> bool:
    return all(x != y for x, y in zip(colors, colors[1:]))


def proper_paths(g: Graph, c, u: int, v: int):
    return [
        p for p in simple_paths(g, u, v) if is_proper_seq(path_colors(g, c, p))
    ]


def brute_has_proper_path(g: Graph, c, u: int, v: int) -> bool:
    return any(
        is_proper_seq(path_colors(g, c, p)) for p in simple_paths(g, u, v)
    )


def brute_is_pc(g: Graph, c) -> bool:
    return all(
        brute_has_proper_path(g, c, u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
    )


def brute_strong(g: Graph, c) -> bool:
    for u in range(g.n):
        for v in range(u + 1, g.n):
            profs = {
                (cols[0], cols[-1])
                for p in simple_paths(g, u, v)
                if is_proper_seq(cols := path_colors(g, c, p))
            }
            if not any(
                a[0] != b[0] and a[1] != b[1]
                for a, b in itertools.combinations(profs, 2)
            ):
                return False
    return True


# -- fast exhaustive 2-coloring machinery ---------------------------------------
#
# A path is proper under a 2-coloring iff its edge colors alternate, so each
# path admits exactly two colorings of its own edge set. Encoding colorings as
# bitmasks over the edge list turns "this coloring makes this path proper"
# into two mask equalities, and a full 2^m sweep into integer compares.


def path_patterns(g: Graph):
    """Per vertex pair: deduplicated (edge-set mask, one alternating pattern)."""
    eidx = {e: i for i, e in enumerate(g.edges)}
    pats = {}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            entries = set()

            def dfs(x, seen, S, p0, pos):
                for w in g.adj[x]:
                    if w in seen:
                        continue
                    e = eidx[(x, w) if x < w else (w, x)]
                    S2 = S | (1 << e)
                    p2 = p0 | ((1 << e) if pos % 2 == 1 else 0)
                    if w == v:
                        entries.add((S2, p2))
                    elif w != v:
                        dfs(w, seen | {w}, S2, p2, pos + 1)

            dfs(u, {u}, 0, 0, 0)
            pats[(u, v)] = sorted(entries)
    return pats


def mask_is_pc(pats, mask: int) -> bool:
    for plist in pats.values():
        for S, p0 in plist:
            sub = mask & S
            if sub == p0 or sub == S ^ p0:
                break
        else:
            return False
    return True


def brute_exists_pc_2coloring(g: Graph) -> bool:
    pats = path_patterns(g)
    return any(mask_is_pc(pats, mask) for mask in range(1 << g.m))


def brute_pc_exact(g: Graph, k_max: int | None = None) -> int:
    """Minimum palette size by sweeping every coloring in {1..k}^m."""
    if g.n <= 1:
        return 0 if g.n == 0 else 1
    paths = {
        (u, v): simple_paths(g, u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
    }
    if k_max is None:
        k_max = max(g.m, 1)
    for k in range(1, k_max + 1):
        for vec in itertools.product(range(1, k + 1), repeat=g.m):
            colors = dict(zip(g.edges, vec))

            def proper(p):
                cs = [colors[(a, b) if a < b else (b, a)] for a, b in zip(p, p[1:])]
                return is_proper_seq(cs)

            if all(any(proper(p) for p in ps) for ps in paths.values()):
                return k
    raise AssertionError(f"no proper-connecting coloring within {k_max} colors")


# -- flow and structure helpers ---------------------------------------------------


def max_edge_disjoint_to_set(g: Graph, v: int, targets: set[int]) -> int:
    """Maximum number of edge-disjoint paths from v into ``targets``."""
    if v in targets:
        raise ValueError("source inside target set")
    used: set[tuple[int, int]] = set()
    flow = 0
    while True:
        prev = {v: v}
        q = deque([v])
        hit = None
        while q and hit is None:
            x = q.popleft()
            for w in g.adj[x]:
                if (x, w) in used or w in prev:
                    continue
                prev[w] = x
                if w in targets:
                    hit = w
                    break
                q.append(w)
        if hit is None:
            return flow
        w = hit
        while w != v:
            x = prev[w]
            if (w, x) in used:
                used.discard((w, x))
            else:
                used.add((x, w))
            w = x
        flow += 1


def vH_paths(g: Graph, v: int, H: set[int]):
    """Simple paths from v to H with every interior vertex outside H."""
    out = []

    def dfs(x, seen, path):
        for w in g.adj[x]:
            if w in H:
                out.append(path + (w,))
            elif w not in seen:
                dfs(w, seen | {w}, path + (w,))

    dfs(v, {v}, (v,))
    return out


def brute_bridges_and_cuts(g: Graph):
    """Bridges and cut vertices by removal enumeration."""

    def ncomp(h: Graph) -> int:
        seen = [False] * h.n
        comps = 0
        for s in range(h.n):
            if seen[s]:
                continue
            comps += 1
            q = deque([s])
            seen[s] = True
            while q:
                x = q.popleft()
                for w in h.adj[x]:
                    if not seen[w]:
                        seen[w] = True
                        q.append(w)
        return comps

    base = ncomp(g)
    bridges = tuple(
        e for e in g.edges if ncomp(g.without_edges([e])) > base
    )
    # removing a vertex with degree >= 1 drops its own slot and may split its
    # component; the count rises iff the split produced two or more parts
    cut_vertices = []
    for v in range(g.n):
        if g.n <= 1:
            break
        sub, _ = g.induced([u for u in range(g.n) if u != v])
        if ncomp(sub) > base:
            cut_vertices.append(v)
    return bridges, tuple(cut_vertices)
