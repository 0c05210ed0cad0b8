"""Grothendieck ring of a category instance.

Simples are indexed by grades and fuse by composition: [X_g][X_h] is
[X_{gh}] when the grades compose and 0 otherwise, and the class of 1 is
the sum over identity grades.  The predicate suite (non-negative basis
ring, based ring, fusion ring) checks the axioms directly on the structure
constants and reports every failing instance, so a mutation is rejected
with the exact triple that breaks.

The involution is not assumed: it is recomputed from left duals of the
simples and checked to be an involutive basis permutation.
"""

from .errors import ConsistencyError, ShapeError
from .gvec import dual_obj, simple_object

__all__ = [
    "BasedRingData", "grothendieck_ring",
    "is_zplus_ring", "is_based_ring", "is_fusion_ring",
    "ring_report", "fusion_iff_separable_check",
]


class BasedRingData:
    """Ring presented by integer structure constants on a finite basis.

    c[i][j][k] is the coefficient of b_k in b_i b_j; unit_coeffs gives the
    decomposition of 1 over the basis; involution is a candidate duality
    permutation of basis indices.
    """

    __slots__ = ("basis_labels", "c", "unit_coeffs", "involution")

    def __init__(self, basis_labels, c, unit_coeffs, involution):
        self.basis_labels = tuple(basis_labels)
        n = len(self.basis_labels)
        try:
            self.c = tuple(tuple(tuple(int(x) for x in row)
                                 for row in plane) for plane in c)
        except TypeError:
            raise ShapeError("structure constants are not a rank^3 array")
        self.unit_coeffs = tuple(int(x) for x in unit_coeffs)
        self.involution = tuple(int(x) for x in involution)
        if len(self.c) != n or any(len(p) != n for p in self.c) \
                or any(len(r) != n for p in self.c for r in p):
            raise ShapeError("structure constants are not rank^3")
        if len(self.unit_coeffs) != n or len(self.involution) != n:
            raise ShapeError("unit or involution length differs from rank")

    @property
    def rank(self):
        return len(self.basis_labels)

    def __eq__(self, other):
        return (isinstance(other, BasedRingData)
                and self.basis_labels == other.basis_labels
                and self.c == other.c
                and self.unit_coeffs == other.unit_coeffs
                and self.involution == other.involution)

    def __hash__(self):
        return hash((self.basis_labels, self.c, self.unit_coeffs,
                     self.involution))


def grothendieck_ring(cat):
    n = cat.morphism_count
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            k = cat.compose(i, j)
            if k is not None:
                c[i][j][k] = 1
    unit = [1 if cat.is_identity(g) else 0 for g in range(n)]
    invol = []
    for g in range(n):
        d = dual_obj(simple_object(cat, g))
        grades = d.grades()
        if len(grades) != 1 or d.m(grades[0]) != 1:
            raise ConsistencyError("dual of a simple is not simple")
        invol.append(grades[0])
    if sorted(invol) != list(range(n)):
        raise ConsistencyError("duality is not a basis permutation")
    for g in range(n):
        if invol[invol[g]] != g:
            raise ConsistencyError("duality permutation is not involutive")
    return BasedRingData(range(n), c, unit, invol)


def _zplus_failures(r):
    n = r.rank
    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if r.c[i][j][k] < 0:
                    out.append({"axiom": "non-negative", "at": [i, j, k]})
    if any(x < 0 for x in r.unit_coeffs):
        out.append({"axiom": "non-negative unit", "at": list(r.unit_coeffs)})
    # associativity via coefficient of b_l in (b_i b_j) b_k vs b_i (b_j b_k)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    lhs = sum(r.c[i][j][m] * r.c[m][k][l] for m in range(n))
                    rhs = sum(r.c[j][k][m] * r.c[i][m][l] for m in range(n))
                    if lhs != rhs:
                        out.append({"axiom": "associativity",
                                    "at": [i, j, k], "basis": l,
                                    "left": lhs, "right": rhs})
    for j in range(n):
        for k in range(n):
            want = 1 if j == k else 0
            left = sum(r.unit_coeffs[i] * r.c[i][j][k] for i in range(n))
            right = sum(r.unit_coeffs[i] * r.c[j][i][k] for i in range(n))
            if left != want:
                out.append({"axiom": "left unit", "at": [j, k],
                            "value": left})
            if right != want:
                out.append({"axiom": "right unit", "at": [j, k],
                            "value": right})
    return out


def _based_failures(r):
    n = r.rank
    out = []
    star = r.involution
    for i in range(n):
        if not 0 <= star[i] < n:
            out.append({"axiom": "involution range", "at": i})
            return out
    if sorted(star) != list(range(n)):
        out.append({"axiom": "involution permutes basis", "at": list(star)})
        return out
    for i in range(n):
        if star[star[i]] != i:
            out.append({"axiom": "involution squares to identity", "at": i})
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if r.c[i][j][k] != r.c[star[j]][star[i]][star[k]]:
                    out.append({"axiom": "anti-automorphism",
                                "at": [i, j, k]})
    # pairing: the unit coefficient of b_i b_j is 1 exactly when j = i*
    for i in range(n):
        for j in range(n):
            tau = sum(r.c[i][j][k] * r.unit_coeffs[k] for k in range(n))
            want = 1 if j == star[i] else 0
            if tau != want:
                out.append({"axiom": "pairing", "at": [i, j], "value": tau})
    return out


def is_zplus_ring(r):
    failures = _zplus_failures(r)
    return {"holds": not failures, "failures": failures}


def is_based_ring(r):
    failures = _zplus_failures(r) + _based_failures(r)
    return {"holds": not failures, "failures": failures}


def is_fusion_ring(r):
    failures = _zplus_failures(r) + _based_failures(r)
    if sum(r.unit_coeffs) != 1 or 1 not in r.unit_coeffs:
        failures = failures + [{"axiom": "unit is a single basis element",
                                "unit_coeffs": list(r.unit_coeffs)}]
    return {"holds": not failures, "failures": failures}


def ring_report(cat):
    r = grothendieck_ring(cat)
    return {
        "rank": r.rank,
        "basis": list(r.basis_labels),
        "structure_constants": [[list(row) for row in plane]
                                for plane in r.c],
        "unit_coeffs": list(r.unit_coeffs),
        "involution": list(r.involution),
        "zplus": is_zplus_ring(r),
        "based": is_based_ring(r),
        "fusion": is_fusion_ring(r),
    }


def fusion_iff_separable_check(cat, corpus):
    """The ring is fusion exactly when every non-zero corpus algebra is
    separable; any disagreement is a defect, not a finding."""
    from .functors import separability_verdict
    fus = is_fusion_ring(grothendieck_ring(cat))["holds"]
    live = [a for a in corpus if not a.is_zero()]
    if not live:
        raise ValueError("corpus contains no non-zero algebra")
    all_sep = all(separability_verdict(a)["separable"] for a in live)
    if fus != all_sep:
        raise ConsistencyError(
            "fusion ring verdict %r disagrees with corpus separability %r"
            % (fus, all_sep))
    return fus
