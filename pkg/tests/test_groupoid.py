"""Groupoid constructors, validation messages, and the frozen S3 table."""

from itertools import permutations

import pytest

from fusionaudit.errors import GroupoidError, SpecError
from fusionaudit.groupoid import (
    Groupoid, disjoint_union, groupoid_from_spec, make_group,
    make_pair_groupoid,
)

Z2 = [[0, 1], [1, 0]]
# Frozen oracle: permutations of {0,1,2} in lexicographic order (identity
# first), entry [i][j] = index of "apply i, then j".  Recomputed from scratch
# in test_s3_table_matches_permutation_oracle.
S3 = [[0, 1, 2, 3, 4, 5],
      [1, 0, 3, 2, 5, 4],
      [2, 4, 0, 5, 1, 3],
      [3, 5, 1, 4, 0, 2],
      [4, 2, 5, 0, 3, 1],
      [5, 3, 4, 1, 2, 0]]


def test_trivial_group():
    g = make_group([[0]])
    assert g.object_count == 1 and g.morphism_count == 1
    assert g.identity_grades == (0,)
    assert g.pairs_into[0] == ((0, 0),)


def test_z2():
    g = make_group(Z2)
    assert g.compose(1, 1) == 0
    assert g.inverse(1) == 1
    assert g.pairs_into[0] == ((0, 0), (1, 1))
    assert g.pairs_into[1] == ((0, 1), (1, 0))


def test_s3_table_matches_permutation_oracle():
    perms = list(permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    for i in range(6):
        for j in range(6):
            composed = tuple(perms[j][perms[i][x]] for x in range(3))
            assert S3[i][j] == idx[composed]
    g = make_group(S3)
    assert g.morphism_count == 6
    for a in range(6):
        assert g.compose(a, g.inverse(a)) == 0


def test_group_validation_messages():
    with pytest.raises(GroupoidError, match="not a left identity"):
        make_group([[1, 0], [0, 1]])
    with pytest.raises(GroupoidError, match="out of range"):
        make_group([[0, 1], [1, 7]])
    # a non-associative loop with identity at 0 and two-sided inverses
    loop = [[0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0]]
    with pytest.raises(GroupoidError, match="associativity fails on triple"):
        make_group(loop)


def test_pair_groupoid():
    g = make_pair_groupoid(2)
    # index convention i*n + j
    assert g.morphisms == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert g.compose(1, 2) == 0      # 0->1 then 1->0
    assert g.compose(1, 3) == 1      # 0->1 then 1->1
    assert g.compose(1, 1) is None   # targets do not match
    assert g.inverse(1) == 2
    assert g.identity_grades == (0, 3)
    assert g.pairs_into[0] == ((0, 0), (1, 2))


def test_disjoint_union():
    g = disjoint_union(make_group(Z2), make_group(Z2))
    assert g.object_count == 2 and g.morphism_count == 4
    assert g.compose(0, 1) == 1 and g.compose(2, 3) == 3
    assert g.compose(0, 2) is None
    assert g.identity_grades == (0, 2)
    assert g.source(3) == 1 and g.target(3) == 1


def test_specs_round_trip():
    specs = [
        {"kind": "group", "table": Z2},
        {"kind": "pair", "objects": 3},
        {"kind": "union", "parts": [{"kind": "group", "table": Z2},
                                    {"kind": "group", "table": Z2}]},
    ]
    for spec in specs:
        g = groupoid_from_spec(spec)
        again = groupoid_from_spec(g.spec)
        assert g == again
        assert g.fingerprint() == again.fingerprint()
    explicit = groupoid_from_spec(make_pair_groupoid(2).spec)
    viaexp = groupoid_from_spec(
        groupoid_from_spec({"kind": "pair", "objects": 2})._explicit_spec())
    assert explicit == viaexp
    assert explicit.fingerprint() == viaexp.fingerprint()


def test_bad_specs():
    with pytest.raises(SpecError):
        groupoid_from_spec({"table": Z2})
    with pytest.raises(SpecError):
        groupoid_from_spec({"kind": "frobnicate"})
    with pytest.raises(SpecError):
        groupoid_from_spec({"kind": "group"})
    with pytest.raises(SpecError):
        groupoid_from_spec({"kind": "union", "parts": []})


def test_explicit_validation():
    # break associativity data: claim compose(1,1)=1 in Z2
    bad = make_group(Z2)._explicit_spec()
    bad["compose"] = [[0, 1], [1, 1]]
    with pytest.raises(GroupoidError):
        groupoid_from_spec(bad)
    # wrong identity endpoints
    g = make_pair_groupoid(2)._explicit_spec()
    g["identities"] = [0, 1]
    with pytest.raises(GroupoidError, match="identity of object"):
        groupoid_from_spec(g)


def test_groupoid_equality_is_structural():
    assert make_group(Z2) == groupoid_from_spec({"kind": "group", "table": Z2})
    assert make_group(Z2) != make_group([[0]])
    assert hash(make_pair_groupoid(2)) == hash(make_pair_groupoid(2))
