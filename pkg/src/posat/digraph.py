"""Directed graphs: the auxiliary digraph of a family, transitive-cycle
detection, cycle contraction, and small exhaustive extremal oracles.

A transitive cycle on k >= 3 vertices is a directed path v1..vk plus the
chord edge v1 -> vk.  Double edges (u <-> v) are not transitive cycles.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BadParam, HypothesisFails, NotAnInducedCycle, TooLarge
from .family import SetFamily, elems_of


@dataclass(frozen=True)
class Digraph:
    """Loop-free digraph; at most one edge per ordered pair."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise BadParam(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise BadParam(f"edge ({u}, {v}) out of range")
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise BadParam("label count != vertex count")

    @classmethod
    def of(cls, vertex_count: int, edges, labels=None) -> "Digraph":
        return cls(vertex_count, frozenset(edges), tuple(labels) if labels else None)

    def edge_count(self) -> int:
        return len(self.edges)

    def out_adj(self) -> list[int]:
        """Per-vertex bitmask of out-neighbours."""
        adj = [0] * self.vertex_count
        for u, v in self.edges:
            adj[u] |= 1 << v
        return adj

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def auxiliary_digraph(F: SetFamily) -> Digraph:
    """Digraph on the family members with, for every ground element i, the
    lexicographically smallest member pair (A, B) with A \\ B = {i} as the
    edge A -> B.

    Raises HypothesisFails(i) when some i admits no such pair; that failing i
    is exactly the witness needed for the constant-bound blow-up argument.
    Distinct i always pick distinct pairs, so the result has exactly n edges.
    """
    members = F.members
    k = len(members)
    edges = []
    for i in range(1, F.n + 1):
        bit = 1 << (i - 1)
        found = None
        for a in range(k):
            for b in range(k):
                if a != b and members[a] & ~members[b] == bit:
                    found = (a, b)
                    break
            if found:
                break
        if found is None:
            raise HypothesisFails(i)
        edges.append(found)
    labels = tuple("{" + ",".join(map(str, elems_of(m))) + "}" for m in members)
    return Digraph.of(k, edges, labels)


# -- transitive cycles -------------------------------------------------------

def _bfs_path(adj: list[int], src: int, dst: int) -> list[int] | None:
    """Shortest directed path src -> dst (list of vertices), or None."""
    parent = {src: -1}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        m = adj[u]
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            if v not in parent:
                parent[v] = u
                if v == dst:
                    path = [v]
                    while path[-1] != src:
                        path.append(parent[path[-1]])
                    return path[::-1]
                queue.append(v)
    return None


def has_transitive_cycle(D: Digraph) -> list[int] | None:
    """A transitive-cycle witness [v1, ..., vk] (the path; the chord is
    v1 -> vk), or None.

    For each edge (u, v): any u -> v path in D minus that edge has length
    >= 2, and together with the edge forms a transitive cycle.  Edges are
    scanned in sorted order so the witness is deterministic.
    """
    adj = D.out_adj()
    for u, v in D.sorted_edges():
        adj[u] &= ~(1 << v)
        path = _bfs_path(adj, u, v)
        adj[u] |= 1 << v
        if path is not None:
            return path
    return None


def find_induced_oriented_cycle(D: Digraph) -> list[int] | None:
    """Vertices of a shortest directed cycle (length >= 2), or None.

    A shortest directed cycle has no chord in either direction (a chord
    would close a shorter cycle), so it is automatically induced.
    """
    adj = D.out_adj()
    best: list[int] | None = None
    for u, v in D.sorted_edges():
        # cycle = path v -> u plus the edge u -> v
        path = _bfs_path(adj, v, u)
        if path is not None and (best is None or len(path) < len(best)):
            best = path
    return best


def is_induced_oriented_cycle(D: Digraph, cycle: list[int]) -> bool:
    """Check that the induced subgraph on the listed vertices is exactly the
    oriented cycle in the listed order."""
    k = len(cycle)
    if k < 2 or len(set(cycle)) != k:
        return False
    want = {(cycle[j], cycle[(j + 1) % k]) for j in range(k)}
    cyc = set(cycle)
    have = {(u, v) for u, v in D.edges if u in cyc and v in cyc}
    return have == want


def contract_cycle(D: Digraph, cycle: list[int]) -> Digraph:
    """Contract an induced oriented cycle into a single vertex.

    Surviving vertices keep their relative order and are renumbered
    0..m-1; the contracted vertex is the last one (index m).
    """
    if not is_induced_oriented_cycle(D, cycle):
        raise NotAnInducedCycle(f"{cycle} is not an induced oriented cycle")
    cyc = set(cycle)
    outside = [v for v in range(D.vertex_count) if v not in cyc]
    index = {v: j for j, v in enumerate(outside)}
    c = len(outside)
    edges = set()
    for u, v in D.edges:
        if u in cyc and v in cyc:
            continue
        if u in cyc:
            edges.add((c, index[v]))
        elif v in cyc:
            edges.add((index[u], c))
        else:
            edges.add((index[u], index[v]))
    return Digraph.of(c + 1, edges)


# -- extremal constructions and oracles --------------------------------------

def turan_bipartite(n: int) -> Digraph:
    """All edges from a class of size floor(n/2) to the other ceil(n/2)
    vertices; floor(n^2/4) edges and no transitive cycle."""
    if n < 1:
        raise BadParam("need n >= 1")
    a = n // 2
    edges = [(u, v) for u in range(a) for v in range(a, n)]
    return Digraph.of(n, edges)


def _tc_free_bitset(adj: list[int], edges: list[tuple[int, int]]) -> bool:
    """Exact transitive-cycle-freeness on bitmask adjacency rows."""
    for x, y in edges:
        saved = adj[x]
        adj[x] &= ~(1 << y)
        # reachability x -> y
        seen = adj[x]
        frontier = seen
        hit = False
        while frontier and not hit:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                m ^= low
                nxt |= adj[low.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
            hit = bool(seen >> y & 1)
        adj[x] = saved
        if hit:
            return False
    return True


def max_tc_free_edges_bruteforce(n: int, cap: int = 5) -> tuple[int, Digraph]:
    """Exact maximum edge count of a transitive-cycle-free digraph on n
    vertices, plus the lexicographically smallest maximizer.

    Exhaustive branch-and-bound over edge subsets; capped (default n <= 5).
    Since freeness is closed under taking subgraphs, the search only ever
    extends transitive-cycle-free sets, with a best-so-far bound and, for
    n >= 2, the first edge fixed to (0, 1) by vertex relabelling (the
    lexicographically smallest maximizer must contain it).
    """
    if n > cap:
        raise TooLarge(f"exhaustive search capped at {cap} vertices")
    if n < 1:
        raise BadParam("need n >= 1")
    if n == 1:
        return 0, Digraph.of(1, [])

    all_edges = [(u, v) for u in range(n) for v in range(n) if u != v]
    all_edges.sort()
    ecount = len(all_edges)
    # seed: the bipartite construction's count, witness filled in by search
    best = n * n // 4
    best_edges: list[tuple[int, int]] | None = None

    # reach[x]: vertices reachable from x by a nonempty path
    def try_add(adj, reach, chosen, u, v) -> list[int] | None:
        """New reach rows if chosen + (u,v) stays TC-free, else None."""
        bit_v = 1 << v
        if reach[u] & bit_v:
            return None  # the new edge would chord an existing >=2 path
        # candidate chord (x, y) already present with x ->* u and v ->* y
        suspect = False
        for x, y in chosen:
            x_to_u = x == u or bool(reach[x] >> u & 1)
            v_to_y = v == y or bool(reach[v] >> y & 1)
            if x_to_u and v_to_y:
                suspect = True
                break
        new_adj = adj.copy()
        new_adj[u] |= bit_v
        if suspect and not _tc_free_bitset(new_adj, chosen + [(u, v)]):
            return None
        # incremental closure update
        new_reach = reach.copy()
        add = bit_v | reach[v]
        bit_u = 1 << u
        for x in range(n):
            if x == u or reach[x] & bit_u:
                new_reach[x] |= add
        return new_reach

    def dfs(idx, chosen, adj, reach):
        nonlocal best, best_edges
        count = len(chosen)
        if count > best or (count == best and best_edges is None):
            best = count
            best_edges = list(chosen)
        target = best if best_edges is None else best + 1
        for j in range(idx, ecount):
            if count + (ecount - j) < target:
                break
            u, v = all_edges[j]
            new_reach = try_add(adj, reach, chosen, u, v)
            if new_reach is None:
                continue
            new_adj = adj.copy()
            new_adj[u] |= 1 << v
            dfs(j + 1, chosen + [(u, v)], new_adj, new_reach)

    # force the first edge (0, 1); the empty digraph never beats the seed
    adj0 = [0] * n
    reach0 = [0] * n
    first = try_add(adj0, reach0, [], 0, 1)
    adj0[0] |= 2
    dfs(1, [(0, 1)], adj0, first)

    assert best_edges is not None
    return best, Digraph.of(n, best_edges)


def is_tc_free(D: Digraph) -> bool:
    return has_transitive_cycle(D) is None
