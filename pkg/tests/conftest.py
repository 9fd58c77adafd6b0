"""Shared independent oracles for the test suite.

Everything here is deliberately naive: permutation scans and full
enumeration with no pruning, no bit tricks beyond mask containment, and no
code shared with the library internals.  The library is checked against
these, never the other way around.
"""

from __future__ import annotations

import itertools

from posat import Digraph, Poset


def brute_has_induced_copy(members: tuple[int, ...], P: Poset) -> bool:
    """Scan every injective assignment of poset elements to member masks."""
    for combo in itertools.permutations(range(len(members)), P.size):
        ok = True
        for a in range(P.size):
            for b in range(P.size):
                if a == b:
                    continue
                ma, mb = members[combo[a]], members[combo[b]]
                strictly_below = ma != mb and ma & ~mb == 0
                if P.below(a, b) != strictly_below:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def brute_sat_star_n3(P: Poset) -> int:
    """Smallest maximal induced-P-free family over [3], by checking all
    families in order of size."""
    universe = range(8)
    for k in range(1, 9):
        for members in itertools.combinations(universe, k):
            if brute_has_induced_copy(members, P):
                continue
            if all(
                brute_has_induced_copy(tuple(sorted(members + (s,))), P)
                for s in universe
                if s not in members
            ):
                return k
    return 8


def brute_has_transitive_cycle(D: Digraph) -> bool:
    """Scan every vertex sequence of length >= 3 for a path plus chord."""
    edges = D.edges
    n = D.vertex_count
    for k in range(3, n + 1):
        for seq in itertools.permutations(range(n), k):
            if (seq[0], seq[-1]) in edges and all(
                (seq[j], seq[j + 1]) in edges for j in range(k - 1)
            ):
                return True
    return False


def brute_max_tc_free(n: int) -> int:
    """Maximum edges of a transitive-cycle-free digraph on n vertices by
    checking every edge subset."""
    all_edges = [(u, v) for u in range(n) for v in range(n) if u != v]
    best = 0
    for bits in range(1 << len(all_edges)):
        chosen = [e for j, e in enumerate(all_edges) if bits >> j & 1]
        if len(chosen) <= best:
            continue
        if not brute_has_transitive_cycle(Digraph.of(n, chosen)):
            best = len(chosen)
    return best
