import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gbundles.errors import GroupSpecError
from gbundles.groups import (
    INFINITE,
    FgAbelianGroup,
    canonicalize,
    cardinality,
    direct_sum,
    enumerate_elements,
    ext_group,
    hom_group,
    parse_abelian,
    quotient_by_integer,
)
from gbundles.linalg import IntMatrix, cokernel_invariants
from oracles import brute_hom_profile, count_homs, matrix_ext, matrix_hom, torsion_profile_of

G = FgAbelianGroup
Z = G(1)
TRIV = G()


def cyc(*orders):
    return G(0, orders)


FACTORS = (2, 3, 4, 6, 8)


def finite_groups(max_order=64):
    seen = set()
    for k in range(0, 7):
        for combo in itertools.combinations_with_replacement(FACTORS, k):
            if math.prod(combo) <= max_order:
                seen.add(cyc(*combo))
    return sorted(seen)


def test_canonicalize_examples():
    assert canonicalize([1, 1], 2) == TRIV
    assert canonicalize([2, 3], 2) == cyc(6)
    assert canonicalize([0], 1) == Z
    assert canonicalize([], 3) == G(3)
    with pytest.raises(ValueError):
        canonicalize([-2], 1)


def test_canonicalize_crt_merge_matches_snf():
    for diag in ([2, 3], [4, 6], [2, 2, 3], [12, 18, 8]):
        assert canonicalize(diag, len(diag)) == cokernel_invariants(IntMatrix.diagonal(diag))


def test_constructor_always_canonical():
    g = G(0, (4, 2, 3))
    assert g.invariant_factors == (2, 12)
    assert G(0, (1, 1)) == TRIV
    assert G(0, (0, 5)) == G(1, (5,))


def test_direct_sum_examples():
    assert direct_sum(TRIV, cyc(2, 4)) == cyc(2, 4)
    assert direct_sum(cyc(2), cyc(3)) == cyc(6)
    assert direct_sum(cyc(2), cyc(4)) == cyc(2, 4)


def test_hom_examples():
    pi = G(1, (2,))
    assert hom_group(Z, pi) == pi
    assert hom_group(cyc(4), Z) == TRIV
    assert hom_group(cyc(4), cyc(6)) == cyc(2)


def test_hom_z4_z6_by_enumeration():
    # images of the generator in Z/6 killed by 4
    images = [b for b in range(6) if (4 * b) % 6 == 0]
    assert len(images) == 2
    assert cardinality(hom_group(cyc(4), cyc(6))) == len(images)


def test_ext_examples():
    for b in (TRIV, Z, cyc(6), G(2, (2,))):
        assert ext_group(Z, b) == TRIV
    assert ext_group(cyc(4), Z) == quotient_by_integer(Z, 4) == cyc(4)
    assert ext_group(cyc(4), cyc(6)) == quotient_by_integer(cyc(6), 4) == cyc(2)


def test_quotient_by_integer_examples():
    assert quotient_by_integer(Z, 2) == cyc(2)
    assert quotient_by_integer(cyc(3), 2) == TRIV
    assert quotient_by_integer(cyc(4), 2) == cyc(2)
    with pytest.raises(ValueError):
        quotient_by_integer(Z, 0)


def test_cardinality_and_enumeration():
    assert cardinality(TRIV) == 1
    assert cardinality(cyc(2, 4)) == 8
    assert cardinality(Z) == INFINITE
    assert enumerate_elements(TRIV) == [()]
    assert enumerate_elements(cyc(2)) == [(0,), (1,)]
    elems = enumerate_elements(cyc(2, 2))
    assert len(elems) == 4 and elems[0] == (0, 0)
    with pytest.raises(ValueError):
        enumerate_elements(Z)


@pytest.mark.parametrize("g", finite_groups(), ids=str)
def test_enumeration_length_is_cardinality(g):
    elems = enumerate_elements(g)
    assert len(elems) == cardinality(g)
    assert len(set(elems)) == len(elems)
    assert elems[0] == (0,) * len(g.invariant_factors)


def test_hom_ext_brute_force_all_finite_pairs():
    groups = finite_groups()
    for a in groups:
        for b in groups:
            size, profile = brute_hom_profile(a.invariant_factors, b.invariant_factors)
            h = hom_group(a, b)
            assert cardinality(h) == size == count_homs(a.invariant_factors, b.invariant_factors)
            assert torsion_profile_of(h) == profile, (a, b)
            # Ext(Z/d1 + ..., B) = sum of B/dB
            expected = TRIV
            for d in a.invariant_factors:
                expected = expected + quotient_by_integer(b, d)
            assert ext_group(a, b) == expected


def _small_groups():
    out = []
    for free in (0, 1):
        for k in range(0, 3):
            for combo in itertools.combinations_with_replacement(FACTORS, k):
                out.append(G(free, combo))
    return sorted(set(out))


def test_hom_ext_match_matrix_oracle():
    groups = _small_groups()
    for a in groups:
        for b in groups:
            assert hom_group(a, b) == matrix_hom(a, b), (a, b)
            assert ext_group(a, b) == matrix_ext(a, b), (a, b)


groups_st = st.builds(
    G,
    st.integers(0, 2),
    st.lists(st.sampled_from((1, 2, 3, 4, 5, 6, 8, 9, 12)), max_size=4).map(tuple),
)


@settings(max_examples=200, deadline=None)
@given(groups_st, groups_st, groups_st)
def test_direct_sum_laws(a, b, c):
    assert direct_sum(a, b) == direct_sum(b, a)
    assert direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c))
    assert direct_sum(a, TRIV) == a


@settings(max_examples=200, deadline=None)
@given(groups_st)
def test_canonical_form_idempotent(a):
    assert G(a.free_rank, a.invariant_factors) == a
    assert canonicalize(list(a.invariant_factors), len(a.invariant_factors) + a.free_rank) == a
    fs = a.invariant_factors
    assert all(d >= 2 for d in fs)
    assert all(y % x == 0 for x, y in zip(fs, fs[1:]))


@pytest.mark.parametrize(
    "group, text, ascii_text",
    [
        (TRIV, "0", "0"),
        (Z, "Z", "Z"),
        (cyc(6), "Z/6", "Z/6"),
        (G(1, (2, 4)), "Z ⊕ Z/2 ⊕ Z/4", "Z + Z/2 + Z/4"),
        (G(2), "Z ⊕ Z", "Z + Z"),
    ],
)
def test_render_grammar(group, text, ascii_text):
    assert group.render() == text
    assert group.render(ascii=True) == ascii_text
    assert parse_abelian(text) == group
    assert parse_abelian(ascii_text) == group


def test_parse_abelian_variants():
    assert parse_abelian("Z^2 + Z/2") == G(2, (2,))
    assert parse_abelian('{"free_rank": 1, "factors": [2, 3]}') == G(1, (6,))
    for bad in ("", "Q", "Z/", "Z/0", "{bad json"):
        with pytest.raises(GroupSpecError):
            parse_abelian(bad)


def test_json_round_trip():
    g = G(1, (2, 4))
    assert G.from_json(g.to_json()) == g
    with pytest.raises(GroupSpecError):
        G.from_json({"free_rank": -1, "factors": []})
