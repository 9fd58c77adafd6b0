"""Bounds and exact values for the minimum induced saturated family size.

The minimum is computed as the smallest size of a maximal induced-free
family in 2^[n], which is the same thing as the smallest induced saturated
family: a free family is saturated exactly when nothing can be added to it.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field

from .errors import BadParam, HypothesisFails, NoLegs, NotSaturated, StartNotFree
from .family import (
    SetFamily,
    blow_up,
    contains_induced_copy,
    is_induced_saturated,
    iter_induced_embeddings,
    singleton_difference_pairs,
)
from .poset import LegsWitness, Poset, dual, has_legs, iter_legs_witnesses


@dataclass(frozen=True)
class SearchConfig:
    size_limit: int | None = None
    time_limit: float | None = None
    ordering: str = "lex"  # lex | by_cardinality | random
    seed: int | None = None
    symmetry_reduction: bool | None = None  # None = auto (on for n >= 4)
    deterministic: bool = True

    def __post_init__(self):
        if self.ordering not in ("lex", "by_cardinality", "random"):
            raise BadParam(f"unknown ordering {self.ordering!r}")
        if self.ordering == "random" and self.deterministic and self.seed is None:
            raise BadParam("deterministic random ordering needs a seed")


@dataclass(frozen=True)
class SatStarResult:
    """Bounds on the minimum saturated family size, with certificates.

    ``lower_kind`` is one of exhaustive, legs, double_legs, digraph, trivial.
    When ``exact`` is true the witness family attains the lower bound.
    """

    n: int
    forbidden: tuple[Poset, ...]
    lower_bound: int
    lower_kind: str
    upper_bound: int
    witness: SetFamily | None
    exact: bool

    def __post_init__(self):
        if self.lower_bound > self.upper_bound:
            raise BadParam("lower bound exceeds upper bound")


class _TimeUp(Exception):
    pass


def _mask_order(n: int, config: SearchConfig) -> list[int]:
    masks = list(range(1 << n))
    if config.ordering == "by_cardinality":
        masks.sort(key=lambda m: (m.bit_count(), m))
    elif config.ordering == "random":
        rng = random.Random(config.seed)
        rng.shuffle(masks)
    return masks


def _check_forbidden(forbidden) -> tuple[Poset, ...]:
    forbidden = tuple(forbidden)
    if not forbidden:
        raise BadParam("forbidden poset list must be non-empty")
    for P in forbidden:
        if P.size < 2:
            raise BadParam("forbidden posets must have at least 2 elements")
    return forbidden


def _free_with(members: list[int], forbidden, new_idx: int) -> bool:
    """No forbidden copy in the members that uses members[new_idx]."""
    mt = tuple(members)
    for P in forbidden:
        for _ in iter_induced_embeddings(mt, P, pinned=new_idx):
            return False
    return True


def greedy_saturate(
    n: int,
    forbidden,
    start: SetFamily | None = None,
    config: SearchConfig | None = None,
) -> SetFamily:
    """Extend the start family to a maximal induced-free one by scanning the
    missing sets in the configured order and adding whenever possible."""
    forbidden = _check_forbidden(forbidden)
    config = config or SearchConfig()
    members = sorted(start.members) if start is not None else []
    mt = tuple(members)
    for P in forbidden:
        if contains_induced_copy(SetFamily.of(n, members), P) is not None:
            raise StartNotFree("start family already contains a forbidden copy")
    have = set(members)
    for s in _mask_order(n, config):
        if s in have:
            continue
        trial = sorted(members + [s])
        if _free_with(trial, forbidden, trial.index(s)):
            members = trial
            have.add(s)
    return SetFamily.of(n, members)


def _perm_tables(n: int) -> list[list[int]]:
    """For each ground-set permutation, the induced map on masks."""
    tables = []
    for perm in itertools.permutations(range(n)):
        table = [0] * (1 << n)
        for m in range(1 << n):
            t = 0
            mm = m
            while mm:
                low = mm & -mm
                mm ^= low
                t |= 1 << perm[low.bit_length() - 1]
            table[m] = t
        tables.append(table)
    return tables


def exact_sat_star(n: int, forbidden, config: SearchConfig | None = None) -> SatStarResult:
    """Smallest maximal induced-free family in 2^[n], by iterative deepening
    on the target size.

    Partial families are extended in ascending mask order; a partial family
    is pruned as soon as it contains a forbidden copy, and (optionally) when
    it is not the lexicographically smallest member of its orbit under
    ground-set permutations.  Leaves are accepted iff nothing can be added.
    On hitting the time limit the result carries the best sound bounds so
    far with ``exact=False``.
    """
    forbidden = _check_forbidden(forbidden)
    config = config or SearchConfig()
    deadline = None
    if config.time_limit is not None:
        deadline = time.monotonic() + config.time_limit

    greedy = greedy_saturate(n, forbidden, config=SearchConfig())
    upper = len(greedy)
    size_cap = config.size_limit if config.size_limit is not None else upper

    use_sym = config.symmetry_reduction
    if use_sym is None:
        use_sym = n >= 4
    tables = _perm_tables(n) if use_sym else []

    total = 1 << n
    found: list[int] | None = None

    def canonical(chosen: tuple[int, ...]) -> bool:
        for table in tables:
            if tuple(sorted(table[m] for m in chosen)) < chosen:
                return False
        return True

    def maximal(chosen: list[int]) -> bool:
        have = set(chosen)
        for s in range(total):
            if s in have:
                continue
            trial = sorted(chosen + [s])
            if _free_with(trial, forbidden, trial.index(s)):
                return False
        return True

    def dfs(chosen: list[int], start: int, k: int) -> bool:
        if deadline is not None and time.monotonic() > deadline:
            raise _TimeUp
        if len(chosen) == k:
            return maximal(chosen)
        need = k - len(chosen)
        for m in range(start, total - need + 1):
            chosen.append(m)
            ok = _free_with(chosen, forbidden, len(chosen) - 1)
            if ok and tables:
                ok = canonical(tuple(chosen))
            if ok and dfs(chosen, m + 1, k):
                return True
            chosen.pop()
        return False

    proven_lower = 1
    try:
        for k in range(1, min(upper, size_cap + 1)):
            chosen: list[int] = []
            if dfs(chosen, 0, k):
                found = list(chosen)
                break
            proven_lower = k + 1
    except _TimeUp:
        return SatStarResult(
            n, forbidden, proven_lower, "exhaustive", upper, greedy, exact=False
        )

    if found is not None:
        fam = SetFamily.of(n, found)
        return SatStarResult(n, forbidden, len(fam), "exhaustive", len(fam), fam, exact=True)
    if size_cap < upper:
        return SatStarResult(n, forbidden, proven_lower, "exhaustive", upper, greedy, exact=False)
    # nothing smaller than the greedy witness exists
    return SatStarResult(n, forbidden, upper, "exhaustive", upper, greedy, exact=True)


# -- certificates ------------------------------------------------------------

@dataclass(frozen=True)
class LegsCertificate:
    """A lower bound on the minimum saturated family size that follows from
    the legs structure alone."""

    bound: int
    kind: str  # "legs" (n+1) or "double_legs" (2n+2)
    witness: LegsWitness
    dual_witness: LegsWitness | None = None


def legs_lower_bound(P: Poset, n: int) -> LegsCertificate | None:
    """n+1 when P has legs; 2n+2 when both P and its dual do; else None."""
    if n < 3:
        raise BadParam("the legs bounds are stated for n >= 3")
    w = has_legs(P)
    if w is None:
        return None
    wd = has_legs(dual(P))
    if wd is not None:
        return LegsCertificate(2 * n + 2, "double_legs", w, wd)
    return LegsCertificate(n + 1, "legs", w)


@dataclass(frozen=True)
class PairCoverReport:
    """Outcome of the singleton-difference hypothesis check.

    If every i in [n] has a member pair (A, B) with A \\ B = {i}, the family
    size is at least 2*sqrt(n-2); otherwise ``failing_i`` is the smallest
    index with no such pair (the constant-bound witness condition).
    """

    hypothesis_holds: bool
    failing_i: int | None
    bound: float


def digraph_lower_bound_check(F: SetFamily) -> PairCoverReport:
    bound = 2.0 * math.sqrt(max(F.n - 2, 0))
    for i in range(1, F.n + 1):
        if not singleton_difference_pairs(F, i):
            return PairCoverReport(False, i, bound)
    # this inequality is a theorem; it can never fail on a real family
    assert len(F) >= bound, (len(F), F.n)
    return PairCoverReport(True, None, bound)


def boundedness_witness_check(F: SetFamily, forbidden) -> tuple[int, int] | None:
    """Smallest i in [n] with no member pair A \\ B = {i}, plus the implied
    constant upper bound len(F) valid for every larger ground set.

    Verifies that F is saturated and that its blow-up at i stays saturated
    over [n+1].  Returns None when every i has a pair.
    """
    forbidden = _check_forbidden(forbidden)
    if not is_induced_saturated(F, list(forbidden)).saturated:
        raise NotSaturated("family is not induced saturated for the given posets")
    for i in range(1, F.n + 1):
        if not singleton_difference_pairs(F, i):
            lifted = blow_up(F, i)
            assert is_induced_saturated(lifted, list(forbidden)).saturated
            return i, len(F)
    return None


def legs_witness_map(F: SetFamily, P: Poset) -> dict[int, int]:
    """The injective map i -> member built from the legs structure: the
    singleton {i} when present, otherwise the hip of a copy of P in
    F + {i} chosen with the largest other leg, then the smallest hip.

    Every chosen hip H' satisfies H' = L' | {i} for its other leg L', the
    map avoids the empty set, and it is injective; all three facts are
    asserted.
    """
    if has_legs(P) is None:
        raise NoLegs("poset has no legs")
    report = is_induced_saturated(F, [P])
    if not report.saturated:
        raise NotSaturated("family is not induced saturated for this poset")
    legs_triples = list(iter_legs_witnesses(P))
    out: dict[int, int] = {}
    members_set = set(F.members)
    for i in range(1, F.n + 1):
        bit = 1 << (i - 1)
        if bit in members_set:
            out[i] = bit
            continue
        extended = tuple(sorted(F.members + (bit,)))
        pin = extended.index(bit)
        best = None  # (-|L'|, |H'|, H', L')
        for w in iter_induced_embeddings(extended, P, pinned=pin):
            for t in legs_triples:
                if w.mapping[t.leg1] == pin:
                    other = t.leg2
                elif w.mapping[t.leg2] == pin:
                    other = t.leg1
                else:
                    continue
                lmask = extended[w.mapping[other]]
                hmask = extended[w.mapping[t.hip]]
                key = (-lmask.bit_count(), hmask.bit_count(), hmask, lmask)
                if best is None or key < best:
                    best = key
        if best is None:
            raise NotSaturated(f"no copy with {{{i}}} as a leg")
        hmask, lmask = best[2], best[3]
        assert hmask == (lmask | bit), (i, lmask, hmask)
        out[i] = hmask
    assert 0 not in out.values()
    assert len(set(out.values())) == F.n
    return out
