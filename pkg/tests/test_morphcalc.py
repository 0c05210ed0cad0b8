"""Splittings and weak inverses."""

import random

from fusionaudit.corpus import random_morphism, random_object
from fusionaudit.exactlin import Matrix
from fusionaudit.fixtures import load_fixture
from fusionaudit.gvec import (
    GradedMorphism, compose, graded_object, identity_mor, is_epi, is_iso,
    is_mono, zero_mor, zero_object)
from fusionaudit.morphcalc import (
    find_retraction, find_section, inverse, is_regular, is_split_epi,
    is_split_mono, weak_inverse)

Z2 = load_fixture("vec_z2")
P3 = load_fixture("pair3")


def test_weak_inverse_frozen_row():
    v = graded_object(Z2, {0: 2})
    w = graded_object(Z2, {0: 1})
    f = GradedMorphism(v, w, {0: Matrix.from_rows([[1, 1]])})
    g = weak_inverse(f)
    assert g.blocks[0] == Matrix.from_rows([[1], [0]])


def test_weak_inverse_frozen_column():
    v = graded_object(Z2, {0: 1})
    w = graded_object(Z2, {0: 2})
    f = GradedMorphism(v, w, {0: Matrix.from_rows([[1], [1]])})
    g = weak_inverse(f)
    assert g.blocks[0] == Matrix.from_rows([[1, 0]])


def test_split_witnesses_random():
    rng = random.Random(421)
    for cat in (Z2, P3):
        for _ in range(15):
            v = random_object(cat, rng)
            w = random_object(cat, rng)
            f = random_morphism(v, w, rng)
            r = find_retraction(f)
            assert (r is not None) == is_mono(f)
            if r is not None:
                assert compose(r, f) == identity_mor(v)
            s = find_section(f)
            assert (s is not None) == is_epi(f)
            if s is not None:
                assert compose(f, s) == identity_mor(w)


def test_every_morphism_is_regular():
    rng = random.Random(422)
    for cat in (Z2, P3):
        for _ in range(15):
            v = random_object(cat, rng)
            w = random_object(cat, rng)
            f = random_morphism(v, w, rng)
            g = weak_inverse(f)
            assert compose(compose(f, g), f) == f
            assert compose(compose(g, f), g) == g
            assert is_regular(f)


def test_degenerate_endpoints():
    v = graded_object(Z2, {0: 1, 1: 2})
    z = zero_object(Z2)
    to_z = zero_mor(v, z)
    from_z = zero_mor(z, v)
    assert find_retraction(to_z) is None
    assert find_section(from_z) is None
    assert find_section(to_z) is not None
    assert find_retraction(from_z) is not None
    assert weak_inverse(zero_mor(v, v)).is_zero()


def test_inverse():
    rng = random.Random(423)
    v = graded_object(P3, {0: 2, 4: 1})
    found = 0
    for _ in range(60):
        f = random_morphism(v, v, rng, zero_weight=1)
        g = inverse(f)
        assert (g is not None) == is_iso(f)
        if g is not None:
            found += 1
            assert compose(g, f) == identity_mor(v)
            assert compose(f, g) == identity_mor(v)
    assert found > 0
    assert inverse(zero_mor(v, v)) is None


def test_split_mono_epi_flags():
    v = graded_object(Z2, {0: 1})
    w = graded_object(Z2, {0: 2})
    col = GradedMorphism(v, w, {0: Matrix.from_rows([[1], [1]])})
    assert is_split_mono(col) and not is_split_epi(col)
    row = GradedMorphism(w, v, {0: Matrix.from_rows([[1, 1]])})
    assert is_split_epi(row) and not is_split_mono(row)
