"""Families of subsets of [n] as bitmask collections.

A subset of [n] is a plain int bitmask: bit i-1 set iff i is in the subset.
Ground sets are capped at 64 elements; every desk-scale experiment fits in a
single machine word.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import (
    BadIndex,
    BadN,
    BadParam,
    BadParams,
    NotPerfectSquare,
    RequiredNotMember,
)
from .poset import EmbeddingWitness, Poset

MAX_GROUND = 64


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(elems, ) -> int:
    """Bitmask of a collection of 1-based ground elements."""
    m = 0
    for e in elems:
        m |= 1 << (e - 1)
    return m


def elems_of(mask: int) -> list[int]:
    """Ascending 1-based ground elements of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free family over ground set [n], members in ascending
    bitmask order."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_GROUND:
            raise BadN(f"ground-set size must be in 0..{MAX_GROUND}")
        full = full_mask(self.n)
        prev = -1
        for m in self.members:
            if m & ~full:
                raise BadIndex(f"member {m:#x} has bits above position {self.n}")
            if m <= prev:
                raise BadParam("members must be strictly ascending (no duplicates)")
            prev = m

    @classmethod
    def of(cls, n: int, members) -> "SetFamily":
        return cls(n, tuple(sorted(set(members))))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in set(self.members)

    def missing(self):
        """All masks of 2^[n] not in the family, ascending."""
        have = set(self.members)
        return [s for s in range(1 << self.n) if s not in have]


# -- structure ---------------------------------------------------------------

def inclusion_poset(F: SetFamily) -> tuple[Poset, tuple[int, ...]]:
    """Abstract poset of the family under proper inclusion, plus the
    element-index -> member-mask map."""
    k = len(F.members)
    up = [0] * k
    for a, b in itertools.permutations(range(k), 2):
        ma, mb = F.members[a], F.members[b]
        if ma != mb and ma & ~mb == 0:
            up[a] |= 1 << b
    return Poset(k, tuple(up)), F.members


def complement_family(F: SetFamily) -> SetFamily:
    """Replace each member by its complement in [n]; an involution."""
    full = full_mask(F.n)
    return SetFamily.of(F.n, (full ^ m for m in F.members))


def blow_up(F: SetFamily, i: int) -> SetFamily:
    """Lift F from [n] to [n+1]: members containing i also get n+1.

    Preserves size and every pairwise inclusion/incomparability relation.
    """
    if not 1 <= i <= F.n:
        raise BadIndex(f"i must be in 1..{F.n}")
    bit_i = 1 << (i - 1)
    bit_new = 1 << F.n
    return SetFamily.of(F.n + 1, (m | bit_new if m & bit_i else m for m in F.members))


# -- induced copies ----------------------------------------------------------

def _member_relations(members: tuple[int, ...]):
    """For each member index, bitmasks (over indices) of its proper supersets
    and proper subsets within the family."""
    k = len(members)
    up = [0] * k
    down = [0] * k
    for a in range(k):
        for b in range(k):
            if a != b and members[a] & ~members[b] == 0 and members[a] != members[b]:
                up[a] |= 1 << b
                down[b] |= 1 << a
    return up, down


def iter_induced_embeddings(members: tuple[int, ...], P: Poset, pinned: int | None = None):
    """Yield every injective map (as an index tuple) from P into the listed
    member masks that preserves and reflects proper inclusion.

    If ``pinned`` (a member index) is given, only embeddings whose image
    contains it are produced.
    """
    k = len(members)
    if P.size > k:
        return
    up_m, down_m = _member_relations(members)
    p_down = P.down_masks()
    sig_p = []
    for a in range(P.size):
        u = P.up[a].bit_count()
        d = p_down[a].bit_count()
        sig_p.append((u, d, P.size - 1 - u - d))
    sig_m = []
    for j in range(k):
        u = up_m[j].bit_count()
        d = down_m[j].bit_count()
        sig_m.append((u, d, k - 1 - u - d))
    order = sorted(range(P.size), key=lambda a: -(sig_p[a][0] + sig_p[a][1]))
    candidates = [
        [j for j in range(k) if all(sig_m[j][t] >= sig_p[a][t] for t in range(3))]
        for a in range(P.size)
    ]
    mapping = [-1] * P.size
    used = [False] * k

    def consistent(a: int, j: int, upto: int) -> bool:
        for t in range(upto):
            b = order[t]
            jb = mapping[b]
            a_below_b = bool(P.up[a] >> b & 1)
            b_below_a = bool(P.up[b] >> a & 1)
            if a_below_b != bool(up_m[j] >> jb & 1):
                return False
            if b_below_a != bool(up_m[jb] >> j & 1):
                return False
        return True

    def extend(pos: int):
        if pos == P.size:
            if pinned is None or pinned in mapping:
                yield EmbeddingWitness(tuple(mapping))
            return
        a = order[pos]
        # Once only one slot remains, the pinned member must be used now.
        must_pin = pinned is not None and pos == P.size - 1 and pinned not in mapping
        cands = [pinned] if must_pin and pinned in candidates[a] else candidates[a]
        if must_pin and pinned not in candidates[a]:
            return
        for j in cands:
            if used[j]:
                continue
            if consistent(a, j, pos):
                mapping[a] = j
                used[j] = True
                yield from extend(pos + 1)
                used[j] = False
                mapping[a] = -1

    yield from extend(0)


def contains_induced_copy(F: SetFamily, P: Poset, required: int | None = None) -> EmbeddingWitness | None:
    """First induced copy of P in F (as member indices), or None.

    ``required`` pins a member mask that must appear in the image.
    """
    pinned = None
    if required is not None:
        try:
            pinned = F.members.index(required)
        except ValueError:
            raise RequiredNotMember(f"required set {sorted(elems_of(required))} not in family")
    for w in iter_induced_embeddings(F.members, P, pinned):
        return w
    return None


@dataclass(frozen=True)
class SaturationReport:
    """Verdict of the saturation check with a machine-checkable diagnostic.

    On failure exactly one of ``forbidden_copy`` (poset index, member-index
    tuple) or ``addable`` (a freely addable mask) is set.
    """

    saturated: bool
    forbidden_copy: tuple[int, tuple[int, ...]] | None = None
    addable: int | None = None


def is_induced_saturated(F: SetFamily, forbidden: list[Poset]) -> SaturationReport:
    """True iff F is free of every forbidden poset and no set can be added
    without creating a copy of one of them.

    One-element (or empty) forbidden posets are rejected: freeness would force
    the empty family and the notion degenerates.
    """
    if not forbidden:
        raise BadParam("forbidden poset list must be non-empty")
    for P in forbidden:
        if P.size < 2:
            raise BadParam("forbidden posets must have at least 2 elements")
    for idx, P in enumerate(forbidden):
        w = contains_induced_copy(F, P)
        if w is not None:
            return SaturationReport(False, forbidden_copy=(idx, w.mapping))
    # F is free, so any copy in F + S must use S: pin the search on S.
    for s in F.missing():
        extended = SetFamily.of(F.n, F.members + (s,))
        if not any(
            contains_induced_copy(extended, P, required=s) is not None for P in forbidden
        ):
            return SaturationReport(False, addable=s)
    return SaturationReport(True)


# -- explicit constructions --------------------------------------------------

def y_upper_family(n: int) -> SetFamily:
    """The empty set plus all sets of size >= n-1; n+2 members, induced
    Y-saturated."""
    if n < 3:
        raise BadN("construction needs n >= 3")
    members = [0] + _by_min_size(n, n - 1)
    fam = SetFamily.of(n, members)
    assert len(fam) == n + 2
    return fam


def x_upper_family(n: int) -> SetFamily:
    """All sets of size <= 1 or >= n-1; 2n+2 members, induced X-saturated."""
    if n < 3:
        raise BadN("construction needs n >= 3")
    members = [0] + [1 << j for j in range(n)] + _by_min_size(n, n - 1)
    fam = SetFamily.of(n, members)
    assert len(fam) == 2 * n + 2
    return fam


def _by_min_size(n: int, lo: int) -> list[int]:
    return [m for m in range(1 << n) if m.bit_count() >= lo]


def wedge_upper_family(n: int, ell: int) -> SetFamily:
    """Empty set, all singletons, all subsets of [ell], and all proper
    supersets of [n] \\ [ell].

    Has n + 2^(ell+1) - ell - 1 members and is induced saturated for
    wedge(ell+1).
    """
    if not (n - 1 > ell >= 2):
        raise BadParams("need n-1 > ell >= 2")
    low = full_mask(ell)
    high = full_mask(n) ^ low
    members = set()
    members.add(0)
    members.update(1 << j for j in range(n))
    for sub in range(low + 1):
        members.add(sub)
    for sub in range(1, low + 1):
        members.add(high | sub)
    fam = SetFamily.of(n, members)
    assert len(fam) == n + 2 ** (ell + 1) - ell - 1
    return fam


def xell_upper_family(n: int, ell: int) -> SetFamily:
    """The wedge family together with its complement family; has
    2n + 2^(ell+1) - 2*ell members and is closed under complementation.

    The family is free of Xell(ell), but it is not maximal: sets that meet
    both [ell] and its complement without containing either can still be
    added (e.g. {1,3} at n=5, ell=2), so it is not induced saturated for
    Xell(ell).  See the acceptance tests for the full analysis.
    """
    base = wedge_upper_family(n, ell)
    fam = SetFamily.of(n, base.members + complement_family(base).members)
    assert len(fam) == 2 * n + 2 ** (ell + 1) - 2 * ell
    return fam


def unique_pair_family(n: int) -> SetFamily:
    """A 2*sqrt(n)-member family built from sqrt(n) consecutive blocks A_s
    and their transversal complements B_t.

    For n >= 9, every i in [n] lies in exactly one ordered member pair
    (A, B) with A \\ B = {i} (namely a block over a co-transversal).  At
    n = 4 the construction degenerates -- blocks and co-transversals are all
    2-sets and every i has two such pairs.
    """
    r = math.isqrt(n)
    if r * r != n or n < 4:
        raise NotPerfectSquare("n must be a perfect square >= 4")
    members = []
    for s in range(r):
        members.append(mask_of(range(s * r + 1, s * r + r + 1)))
    full = full_mask(n)
    for t in range(1, r + 1):
        members.append(full ^ mask_of(t + j * r for j in range(r)))
    fam = SetFamily.of(n, members)
    assert len(fam) == 2 * r
    return fam


def singleton_difference_pairs(F: SetFamily, i: int) -> list[tuple[int, int]]:
    """All ordered member-index pairs (a, b) with A \\ B = {i} (1-based i),
    in lexicographic index order."""
    bit = 1 << (i - 1)
    out = []
    for a, b in itertools.permutations(range(len(F.members)), 2):
        if F.members[a] & ~F.members[b] == bit:
            out.append((a, b))
    return out
