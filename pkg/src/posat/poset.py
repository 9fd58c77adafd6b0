"""Finite strict partial orders: construction, catalog, transforms, embedding.

Posets are stored abstractly (up to isomorphism) as a relation matrix packed
into per-element bitmasks.  Element indices are 0-based internally; the text
formats and the CLI speak 1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BadParam, CycleInCovers, IndexOutOfRange, UnknownName


@dataclass(frozen=True)
class Poset:
    """A finite strict partial order on elements 0..size-1.

    ``up[a]`` has bit ``b`` set iff ``a < b``.  Instances are immutable and
    validated on construction (irreflexive, antisymmetric, transitive).
    """

    size: int
    up: tuple[int, ...]
    name: str | None = None

    def __post_init__(self):
        p = self.size
        if p < 0 or len(self.up) != p:
            raise BadParam(f"relation rows ({len(self.up)}) != size ({p})")
        full = (1 << p) - 1
        for a, row in enumerate(self.up):
            if row & ~full:
                raise IndexOutOfRange(f"relation row {a} references elements >= {p}")
            if row >> a & 1:
                raise BadParam(f"irreflexivity violated at {a}")
        for a in range(p):
            for b in _bits(self.up[a]):
                if self.up[b] >> a & 1:
                    raise BadParam(f"antisymmetry violated at ({a}, {b})")
                if self.up[b] & ~self.up[a]:
                    raise BadParam(f"transitivity violated at ({a}, {b})")

    # -- relation queries ------------------------------------------------

    def below(self, a: int, b: int) -> bool:
        """True iff a < b."""
        return bool(self.up[a] >> b & 1)

    def comparable(self, a: int, b: int) -> bool:
        return self.below(a, b) or self.below(b, a)

    def down_masks(self) -> tuple[int, ...]:
        """down[b] has bit a set iff a < b."""
        down = [0] * self.size
        for a, row in enumerate(self.up):
            for b in _bits(row):
                down[b] |= 1 << a
        return tuple(down)

    def cover_pairs(self) -> list[tuple[int, int]]:
        """The Hasse diagram: pairs (a, b) with a < b and nothing in between."""
        down = self.down_masks()
        covers = []
        for a in range(self.size):
            for b in _bits(self.up[a]):
                if not (self.up[a] & down[b]):
                    covers.append((a, b))
        return covers

    def relabel(self, perm: tuple[int, ...]) -> "Poset":
        """Poset with element a renamed to perm[a]."""
        up = [0] * self.size
        for a, row in enumerate(self.up):
            for b in _bits(row):
                up[perm[a]] |= 1 << perm[b]
        return Poset(self.size, tuple(up), self.name)


@dataclass(frozen=True)
class LegsWitness:
    """Two incomparable elements below a hip; all other elements above it."""

    leg1: int
    leg2: int
    hip: int


@dataclass(frozen=True)
class EmbeddingWitness:
    """An injective order-preserving-and-reflecting map.

    ``mapping[a]`` is the target index (poset element or family member) that
    source element ``a`` is sent to.
    """

    mapping: tuple[int, ...]

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.mapping)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_cover_relations(p: int, covers: list[tuple[int, int]], name: str | None = None) -> Poset:
    """Build a poset as the transitive closure of cover pairs.

    Raises CycleInCovers if the closure would put an element below itself.
    """
    if p < 0:
        raise BadParam("element count must be >= 0")
    adj = [0] * p
    for a, b in covers:
        if not (0 <= a < p and 0 <= b < p):
            raise IndexOutOfRange(f"cover ({a}, {b}) out of range for {p} elements")
        adj[a] |= 1 << b
    # Warshall closure on bitmask rows.
    for k in range(p):
        row_k = adj[k]
        bit_k = 1 << k
        for a in range(p):
            if adj[a] & bit_k:
                adj[a] |= row_k
    for a in range(p):
        if adj[a] >> a & 1:
            raise CycleInCovers(f"element {a} ends up below itself")
    return Poset(p, tuple(adj), name)


# -- catalog -----------------------------------------------------------------

def catalog(name: str, param: int | None = None) -> Poset:
    """Named posets: chain(k), antichain(k), fork, diamond, N, Y, Yinv, X,
    wedge(l), vee(l), Xell(l)."""
    fixed = {
        "fork": (3, [(0, 1), (0, 2)]),
        "diamond": (4, [(0, 1), (0, 2), (1, 3), (2, 3)]),
        "N": (4, [(0, 2), (1, 2), (1, 3)]),
        "Y": (4, [(0, 1), (1, 2), (1, 3)]),
        "Yinv": (4, [(0, 2), (1, 2), (2, 3)]),
        "X": (5, [(0, 2), (1, 2), (2, 3), (2, 4)]),
    }
    if name in fixed:
        if param is not None:
            raise BadParam(f"{name} takes no parameter")
        p, covers = fixed[name]
        return from_cover_relations(p, covers, name)
    if name in ("chain", "antichain", "wedge", "vee", "Xell"):
        if param is None:
            raise BadParam(f"{name} requires a parameter")
        if param < 1:
            raise BadParam(f"{name} parameter must be >= 1")
        label = f"{name}({param})"
        if name == "chain":
            return from_cover_relations(param, [(i, i + 1) for i in range(param - 1)], label)
        if name == "antichain":
            return from_cover_relations(param, [], label)
        if name == "wedge":
            # legs 0, 1 under the chain 2 < 3 < ... < param+1
            covers = [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, param + 1)]
            return from_cover_relations(param + 2, covers, label)
        if name == "vee":
            return _with_name(dual(catalog("wedge", param)), label)
        # Xell: legs 0, 1 under chain 2..param+1 under incomparable tops.
        covers = [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, param + 1)]
        covers += [(param + 1, param + 2), (param + 1, param + 3)]
        return from_cover_relations(param + 4, covers, label)
    raise UnknownName(f"unknown catalog name: {name!r}")


def _with_name(P: Poset, name: str) -> Poset:
    return Poset(P.size, P.up, name)


def catalog_small(max_size: int = 5) -> list[Poset]:
    """Every catalog poset with at most max_size elements (duplicates kept)."""
    out = []
    for k in range(2, max_size + 1):
        out.append(catalog("chain", k))
        out.append(catalog("antichain", k))
    for name in ("fork", "diamond", "N", "Y", "Yinv", "X"):
        if catalog(name).size <= max_size:
            out.append(catalog(name))
    ell = 1
    while ell + 2 <= max_size:
        out.append(catalog("wedge", ell))
        out.append(catalog("vee", ell))
        ell += 1
    ell = 1
    while ell + 4 <= max_size:
        out.append(catalog("Xell", ell))
        ell += 1
    return out


# -- transforms --------------------------------------------------------------

def dual(P: Poset) -> Poset:
    """Order-reversed poset."""
    down = P.down_masks()
    return Poset(P.size, down, None)


def dot_extension(P: Poset) -> Poset:
    """P plus one new element strictly above every element of P."""
    p = P.size
    top = 1 << p
    up = tuple(row | top for row in P.up) + (0,)
    return Poset(p + 1, up, None)


# -- legs --------------------------------------------------------------------

def iter_legs_witnesses(P: Poset):
    """All (leg1, leg2, hip) triples satisfying the legs definition,
    in lexicographic order with leg1 < leg2."""
    p = P.size
    for l1, l2 in itertools.combinations(range(p), 2):
        if P.comparable(l1, l2):
            continue
        for h in range(p):
            if h in (l1, l2):
                continue
            if not (P.below(l1, h) and P.below(l2, h)):
                continue
            if all(P.below(h, a) for a in range(p) if a not in (l1, l2, h)):
                yield LegsWitness(l1, l2, h)


def has_legs(P: Poset) -> LegsWitness | None:
    """Lexicographically smallest legs witness, or None."""
    for w in iter_legs_witnesses(P):
        return w
    return None


# -- induced embedding between abstract posets -------------------------------

def _degree_signature(P: Poset) -> list[tuple[int, int, int]]:
    down = P.down_masks()
    sig = []
    for a in range(P.size):
        u = P.up[a].bit_count()
        d = down[a].bit_count()
        sig.append((u, d, P.size - 1 - u - d))
    return sig


def is_induced_subposet(P: Poset, Q: Poset) -> EmbeddingWitness | None:
    """An injective map from P into Q preserving and reflecting the strict
    order, or None.  Backtracking with degree-signature pruning."""
    if P.size > Q.size:
        return None
    sig_p = _degree_signature(P)
    sig_q = _degree_signature(Q)
    # Assign most-constrained (most comparable) elements first.
    order = sorted(range(P.size), key=lambda a: -(sig_p[a][0] + sig_p[a][1]))
    candidates = [
        [q for q in range(Q.size) if all(sig_q[q][k] >= sig_p[a][k] for k in range(3))]
        for a in range(P.size)
    ]
    mapping = [-1] * P.size
    used = [False] * Q.size

    def extend(pos: int) -> bool:
        if pos == P.size:
            return True
        a = order[pos]
        for q in candidates[a]:
            if used[q]:
                continue
            ok = True
            for j in range(pos):
                b = order[j]
                if P.below(a, b) != Q.below(q, mapping[b]) or P.below(b, a) != Q.below(mapping[b], q):
                    ok = False
                    break
            if ok:
                mapping[a] = q
                used[q] = True
                if extend(pos + 1):
                    return True
                used[q] = False
                mapping[a] = -1
        return False

    if extend(0):
        return EmbeddingWitness(tuple(mapping))
    return None


def isomorphic(P: Poset, Q: Poset) -> bool:
    """True iff P and Q are isomorphic as abstract posets."""
    return P.size == Q.size and is_induced_subposet(P, Q) is not None
