"""Set families: masks, structure maps, induced copies, saturation,
and the explicit constructions."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posat import (
    SetFamily,
    blow_up,
    catalog,
    complement_family,
    contains_induced_copy,
    inclusion_poset,
    is_induced_saturated,
    unique_pair_family,
    wedge_upper_family,
    x_upper_family,
    xell_upper_family,
    y_upper_family,
)
from posat.errors import (
    BadIndex,
    BadN,
    BadParam,
    BadParams,
    NotPerfectSquare,
    RequiredNotMember,
)
from posat.family import elems_of, full_mask, mask_of, singleton_difference_pairs

from conftest import brute_has_induced_copy


def families(max_n=5, max_members=10):
    return st.integers(2, max_n).flatmap(
        lambda n: st.builds(
            SetFamily.of,
            st.just(n),
            st.sets(st.integers(0, (1 << n) - 1), min_size=1, max_size=max_members),
        )
    )


# -- masks and the dataclass --------------------------------------------------

@given(st.sets(st.integers(1, 12)))
def test_mask_roundtrip(elems):
    assert set(elems_of(mask_of(elems))) == elems


def test_full_mask():
    assert full_mask(3) == 0b111
    assert full_mask(0) == 0


def test_family_validation():
    with pytest.raises(BadN):
        SetFamily.of(65, [0])
    with pytest.raises(BadIndex):
        SetFamily(2, (0b100,))
    with pytest.raises(BadParam):
        SetFamily(2, (1, 1))
    assert len(SetFamily.of(2, [1, 1, 2])) == 2  # .of dedupes


def test_missing_partitions_the_cube():
    F = SetFamily.of(3, [0, 0b101])
    assert sorted(F.missing() + list(F.members)) == list(range(8))


# -- structure maps -----------------------------------------------------------

@given(families())
def test_complement_is_an_involution(F):
    assert complement_family(complement_family(F)) == F
    assert len(complement_family(F)) == len(F)


@given(families(), st.data())
def test_blow_up_preserves_all_relations(F, data):
    i = data.draw(st.integers(1, F.n))
    G = blow_up(F, i)
    assert G.n == F.n + 1
    assert len(G) == len(F)
    # the lift keeps subset order and incomparability pairwise intact
    lift = {}
    bit_i, bit_new = 1 << (i - 1), 1 << F.n
    for m in F.members:
        lift[m] = m | bit_new if m & bit_i else m
    for a, b in itertools.permutations(F.members, 2):
        assert (a & ~b == 0) == (lift[a] & ~lift[b] == 0)


def test_blow_up_index_checked():
    with pytest.raises(BadIndex):
        blow_up(SetFamily.of(2, [1]), 3)


@given(families())
def test_inclusion_poset_matches_subset_order(F):
    P, members = inclusion_poset(F)
    assert members == F.members
    for a, b in itertools.permutations(range(len(members)), 2):
        want = members[a] != members[b] and members[a] & ~members[b] == 0
        assert P.below(a, b) == want


# -- induced copies -----------------------------------------------------------

@settings(max_examples=80, deadline=None)
@given(families(max_n=4, max_members=7), st.sampled_from(["fork", "diamond", "N", "Y", "Yinv", "X"]))
def test_contains_copy_matches_bruteforce(F, name):
    P = catalog(name)
    got = contains_induced_copy(F, P)
    assert (got is not None) == brute_has_induced_copy(F.members, P)
    if got is not None:
        for a, b in itertools.permutations(range(P.size), 2):
            ma, mb = F.members[got.mapping[a]], F.members[got.mapping[b]]
            assert P.below(a, b) == (ma != mb and ma & ~mb == 0)


def test_required_member_is_checked():
    F = SetFamily.of(3, [0, 1, 3])
    with pytest.raises(RequiredNotMember):
        contains_induced_copy(F, catalog("fork"), required=0b100)


def test_required_pins_the_copy():
    # {1} < {1,2}, {1,3} is a fork; pinning each member keeps it findable
    F = SetFamily.of(3, [0b001, 0b011, 0b101])
    for m in F.members:
        w = contains_induced_copy(F, catalog("fork"), required=m)
        assert w is not None and F.members.index(m) in w.mapping


# -- saturation ---------------------------------------------------------------

def test_saturation_rejects_degenerate_inputs():
    F = SetFamily.of(3, [0])
    with pytest.raises(BadParam):
        is_induced_saturated(F, [])
    with pytest.raises(BadParam):
        is_induced_saturated(F, [catalog("chain", 1)])


def test_chain_families_saturate_the_two_antichain():
    # forbidding two incomparable sets, the free families are chains in the
    # subset order and the saturated ones are the maximal chains
    anti = catalog("antichain", 2)
    maximal = SetFamily.of(3, [0, 1, 3, 7])
    assert is_induced_saturated(maximal, [anti]).saturated
    rep = is_induced_saturated(SetFamily.of(3, [0, 1, 7]), [anti])
    assert not rep.saturated and rep.addable in (0b011, 0b101)
    rep = is_induced_saturated(SetFamily.of(3, [1, 2]), [anti])
    assert not rep.saturated and rep.forbidden_copy is not None


def test_two_chain_forbidden_forces_antichains():
    # forbidding the 2-chain, saturated families are the maximal antichains
    two = catalog("chain", 2)
    layer = SetFamily.of(3, [0b011, 0b101, 0b110])
    assert is_induced_saturated(layer, [two]).saturated
    assert not is_induced_saturated(SetFamily.of(3, [0b011, 0b101]), [two]).saturated


def test_multiple_forbidden_posets():
    # with both the 3-chain and the 3-antichain forbidden over [2], the
    # whole cube is not free, but {0, {1}, {1,2}} has a 3-chain
    chain3, anti3 = catalog("chain", 3), catalog("antichain", 3)
    rep = is_induced_saturated(SetFamily.of(2, [0, 1, 3]), [chain3, anti3])
    assert not rep.saturated and rep.forbidden_copy is not None
    rep = is_induced_saturated(SetFamily.of(2, [0, 1]), [chain3, anti3])
    assert rep.saturated or rep.addable is not None


# -- constructions ------------------------------------------------------------

@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_y_upper_family_is_y_saturated(n):
    F = y_upper_family(n)
    assert len(F) == n + 2
    assert 0 in F.members
    assert all(m == 0 or m.bit_count() >= n - 1 for m in F.members)
    assert is_induced_saturated(F, [catalog("Y")]).saturated


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_x_upper_family_is_x_saturated(n):
    F = x_upper_family(n)
    assert len(F) == 2 * n + 2
    assert all(m.bit_count() <= 1 or m.bit_count() >= n - 1 for m in F.members)
    assert is_induced_saturated(F, [catalog("X")]).saturated
    assert complement_family(F) == F


@pytest.mark.parametrize("n,ell", [(5, 2), (6, 2), (7, 3)])
def test_wedge_upper_family_is_wedge_saturated(n, ell):
    F = wedge_upper_family(n, ell)
    assert len(F) == n + 2 ** (ell + 1) - ell - 1
    assert is_induced_saturated(F, [catalog("wedge", ell + 1)]).saturated


def test_wedge_family_parameter_bounds():
    with pytest.raises(BadParams):
        wedge_upper_family(3, 2)
    with pytest.raises(BadParams):
        wedge_upper_family(6, 1)


@pytest.mark.parametrize("n,ell", [(5, 2), (6, 2), (7, 3)])
def test_xell_upper_family_shape(n, ell):
    F = xell_upper_family(n, ell)
    assert len(F) == 2 * n + 2 ** (ell + 1) - 2 * ell
    assert complement_family(F) == F
    base = wedge_upper_family(n, ell)
    assert set(base.members) <= set(F.members)
    # the family is at least free of the target poset
    assert contains_induced_copy(F, catalog("Xell", ell)) is None


def test_unique_pair_family_shape():
    F = unique_pair_family(9)
    assert len(F) == 6
    assert mask_of([1, 2, 3]) in F.members
    assert full_mask(9) ^ mask_of([1, 4, 7]) in F.members
    with pytest.raises(NotPerfectSquare):
        unique_pair_family(8)
    with pytest.raises(NotPerfectSquare):
        unique_pair_family(1)


@pytest.mark.parametrize("n", [9, 16, 25])
def test_unique_pair_family_has_unique_pairs(n):
    F = unique_pair_family(n)
    for i in range(1, n + 1):
        pairs = singleton_difference_pairs(F, i)
        assert len(pairs) == 1
        a, b = pairs[0]
        assert F.members[a] & ~F.members[b] == 1 << (i - 1)


@given(families(max_n=4, max_members=6), st.integers(1, 4))
def test_singleton_difference_pairs_match_definition(F, i):
    if i > F.n:
        return
    bit = 1 << (i - 1)
    want = [
        (a, b)
        for a, b in itertools.permutations(range(len(F.members)), 2)
        if F.members[a] & ~F.members[b] == bit
    ]
    assert singleton_difference_pairs(F, i) == want
