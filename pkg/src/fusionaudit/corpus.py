"""Seeded sample streams for audits and property tests.

Everything is driven by random.Random instances owned by the caller, so a
fixed seed reproduces the exact corpus byte for byte.
"""

from fractions import Fraction

from .gvec import GradedMorphism, graded_object
from .exactlin import Matrix

__all__ = ["random_rational", "random_object", "random_morphism",
           "random_endomorphism_invertible",
           "algebra_corpus", "coalgebra_corpus"]


def random_rational(rng, zero_weight=2):
    """Small exact scalar; zero_weight controls sparsity."""
    if rng.randrange(zero_weight + 3) < zero_weight:
        return Fraction(0)
    num = rng.choice([-3, -2, -1, 1, 1, 2, 3])
    den = rng.choice([1, 1, 1, 2, 3])
    return Fraction(num, den)


def random_object(cat, rng, max_total=4, allow_zero=False):
    """Atomic object with bounded total multiplicity."""
    total = rng.randrange(0 if allow_zero else 1, max_total + 1)
    mult = {}
    for _ in range(total):
        g = rng.randrange(cat.morphism_count)
        mult[g] = mult.get(g, 0) + 1
    return graded_object(cat, mult)


def random_morphism(v, w, rng, zero_weight=2):
    blocks = {}
    for g in set(v.mult) & set(w.mult):
        tm, sm = w.mult[g], v.mult[g]
        blocks[g] = Matrix(tm, sm, [random_rational(rng, zero_weight)
                                    for _ in range(tm * sm)])
    return GradedMorphism(v, w, blocks)


def random_endomorphism_invertible(v, rng, tries=50):
    """Invertible endomorphism of v; falls back to the identity."""
    from .gvec import identity_mor, is_iso
    for _ in range(tries):
        f = random_morphism(v, v, rng, zero_weight=1)
        if is_iso(f):
            return f
    return identity_mor(v)


def algebra_corpus(cat, rng, internal_ends=2, sums=2):
    """Nonzero algebras from the fixed recipe: every unit summand, the full
    groupoid algebra plus random sub-object ones, internal endomorphism
    algebras of small random objects, and pairwise direct sums.  The unit
    summands are the decisive witnesses; the rest varies support patterns
    and multiplicities.
    """
    from .internal import (direct_sum_algebra, groupoid_algebra,
                           internal_end, unit_summand_algebra)
    out = [unit_summand_algebra(cat, i) for i in range(cat.object_count)]
    out.append(groupoid_algebra(cat, range(cat.object_count)))
    for _ in range(2):
        k = rng.randrange(1, cat.object_count + 1)
        out.append(groupoid_algebra(cat,
                                    rng.sample(range(cat.object_count), k)))
    for _ in range(internal_ends):
        out.append(internal_end(random_object(cat, rng, max_total=2)))
    for _ in range(sums):
        out.append(direct_sum_algebra(rng.choice(out), rng.choice(out)))
    return out


def coalgebra_corpus(cat, rng, **kwargs):
    """Duals of the algebra corpus, in the same order."""
    from .internal import dualize_algebra
    return [dualize_algebra(a) for a in algebra_corpus(cat, rng, **kwargs)]
