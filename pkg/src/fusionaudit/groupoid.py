"""Finite groupoids with a fixed global enumeration of morphisms.

A groupoid here is a plain lookup structure: objects 0..n-1, morphisms
0..m-1 with source/target, a partial composition table, identities and
inverses.  compose(g1, g2) means "g1 then g2": it is defined exactly when
target(g1) == source(g2).  Every canonical ordering downstream (tensor slot
order, report ordering) derives from the morphism enumeration, so the
enumeration is part of the data, not an implementation detail.

Constructors validate fully and report the failing element or triple; a
groupoid that constructs is safe to compute with.
"""

import hashlib
import json

from .errors import GroupoidError, SpecError

__all__ = [
    "Groupoid", "make_group", "make_pair_groupoid", "disjoint_union",
    "groupoid_from_spec", "groupoid_to_spec",
]


class Groupoid:
    """Validated finite groupoid; immutable after construction."""

    def __init__(self, object_count, morphisms, identity_of, compose_table,
                 inverse_of, spec=None):
        self.object_count = int(object_count)
        self.morphisms = tuple((int(s), int(t)) for s, t in morphisms)
        self.identity_of = tuple(int(i) for i in identity_of)
        self.compose_table = tuple(
            tuple(None if x is None else int(x) for x in row)
            for row in compose_table)
        self.inverse_of = tuple(int(i) for i in inverse_of)
        self.spec = spec if spec is not None else self._explicit_spec()
        self._validate()
        self.identity_grades = tuple(sorted(self.identity_of))
        # pairs_into[h] = all (g1, g2) with g1 then g2 == h, lexicographic
        pairs = {h: [] for h in range(len(self.morphisms))}
        for g1 in range(len(self.morphisms)):
            for g2 in range(len(self.morphisms)):
                h = self.compose_table[g1][g2]
                if h is not None:
                    pairs[h].append((g1, g2))
        self.pairs_into = {h: tuple(ps) for h, ps in pairs.items()}

    # -- basic lookups ----------------------------------------------------

    @property
    def morphism_count(self):
        return len(self.morphisms)

    def source(self, g):
        return self.morphisms[g][0]

    def target(self, g):
        return self.morphisms[g][1]

    def compose(self, g1, g2):
        """Index of "g1 then g2", or None when not composable."""
        return self.compose_table[g1][g2]

    def identity(self, obj):
        return self.identity_of[obj]

    def inverse(self, g):
        return self.inverse_of[g]

    def is_identity(self, g):
        return self.identity_of[self.source(g)] == g

    # -- identity ----------------------------------------------------------

    def _key(self):
        return (self.object_count, self.morphisms, self.identity_of,
                self.compose_table, self.inverse_of)

    def __eq__(self, other):
        return isinstance(other, Groupoid) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "Groupoid(objects=%d, morphisms=%d)" % (
            self.object_count, len(self.morphisms))

    def _explicit_spec(self):
        return {
            "kind": "explicit",
            "objects": self.object_count,
            "morphisms": [list(st) for st in self.morphisms],
            "identities": list(self.identity_of),
            "inverses": list(self.inverse_of),
            "compose": [list(row) for row in self.compose_table],
        }

    def fingerprint(self):
        """Content hash of the explicit form; stable across spec kinds."""
        doc = json.dumps(self._explicit_spec(), sort_keys=True,
                         separators=(",", ":"))
        return hashlib.sha256(doc.encode()).hexdigest()[:16]

    # -- validation ---------------------------------------------------------

    def _validate(self):
        fail = []
        n, mors = self.object_count, self.morphisms
        m = len(mors)
        if n < 1:
            fail.append("need at least one object")
        if len(self.identity_of) != n:
            fail.append("identity_of has %d entries for %d objects"
                        % (len(self.identity_of), n))
        if len(self.inverse_of) != m or len(self.compose_table) != m \
                or any(len(r) != m for r in self.compose_table):
            fail.append("table sizes do not match morphism count %d" % m)
        if fail:
            raise GroupoidError(fail)
        for g, (s, t) in enumerate(mors):
            if not (0 <= s < n and 0 <= t < n):
                fail.append("morphism %d has endpoints (%d, %d) out of range"
                            % (g, s, t))
        for i, e in enumerate(self.identity_of):
            if not (0 <= e < m) or mors[e] != (i, i):
                fail.append("identity of object %d is morphism %d with "
                            "endpoints %r" % (i, e, mors[e] if 0 <= e < m
                                              else None))
        if fail:
            raise GroupoidError(fail)
        for g1 in range(m):
            for g2 in range(m):
                h = self.compose_table[g1][g2]
                composable = mors[g1][1] == mors[g2][0]
                if composable and h is None:
                    fail.append("compose(%d, %d) undefined but targets match"
                                % (g1, g2))
                elif not composable and h is not None:
                    fail.append("compose(%d, %d) defined across objects"
                                % (g1, g2))
                elif h is not None:
                    if mors[h] != (mors[g1][0], mors[g2][1]):
                        fail.append("compose(%d, %d) = %d has wrong endpoints"
                                    % (g1, g2, h))
        if fail:
            raise GroupoidError(fail[:10])
        for g, (s, t) in enumerate(mors):
            e_s, e_t = self.identity_of[s], self.identity_of[t]
            if self.compose_table[e_s][g] != g:
                fail.append("identity law fails at id(%d) then %d" % (s, g))
            if self.compose_table[g][e_t] != g:
                fail.append("identity law fails at %d then id(%d)" % (g, t))
            inv = self.inverse_of[g]
            if not (0 <= inv < m) or self.compose_table[g][inv] != e_s \
                    or self.compose_table[inv][g] != e_t:
                fail.append("inverse of morphism %d is not %r" % (g, inv))
        if fail:
            raise GroupoidError(fail[:10])
        for g1 in range(m):
            for g2 in range(m):
                h12 = self.compose_table[g1][g2]
                if h12 is None:
                    continue
                for g3 in range(m):
                    h23 = self.compose_table[g2][g3]
                    if h23 is None:
                        continue
                    if self.compose_table[h12][g3] != self.compose_table[g1][h23]:
                        raise GroupoidError(
                            ["associativity fails on triple (%d, %d, %d)"
                             % (g1, g2, g3)])
        if fail:
            raise GroupoidError(fail[:10])


def make_group(table):
    """Groupoid with one object from a multiplication table.

    table[i][j] is the index of "i then j"; index 0 must be the identity.
    """
    m = len(table)
    fail = []
    if m == 0:
        raise GroupoidError(["empty multiplication table"])
    for i, row in enumerate(table):
        if len(row) != m:
            fail.append("row %d has length %d, expected %d" % (i, len(row), m))
        else:
            for j, x in enumerate(row):
                if not (0 <= x < m):
                    fail.append("entry (%d, %d) = %r out of range" % (i, j, x))
    if fail:
        raise GroupoidError(fail[:10])
    for j in range(m):
        if table[0][j] != j:
            fail.append("index 0 is not a left identity at %d" % j)
        if table[j][0] != j:
            fail.append("index 0 is not a right identity at %d" % j)
    if fail:
        raise GroupoidError(fail[:10])
    inverse = [None] * m
    for g in range(m):
        for h in range(m):
            if table[g][h] == 0 and table[h][g] == 0:
                inverse[g] = h
                break
        if inverse[g] is None:
            raise GroupoidError(["element %d has no inverse" % g])
    return Groupoid(
        1, [(0, 0)] * m, [0], [list(row) for row in table], inverse,
        spec={"kind": "group", "table": [list(row) for row in table]})


def make_pair_groupoid(n):
    """Objects 0..n-1, exactly one morphism i -> j for every ordered pair.

    Morphism g_ij gets index i*n + j.
    """
    if n < 1:
        raise GroupoidError(["pair groupoid needs at least one object"])
    mors = [(i, j) for i in range(n) for j in range(n)]
    compose = [[None] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                compose[i * n + j][j * n + k] = i * n + k
    return Groupoid(
        n, mors, [i * n + i for i in range(n)], compose,
        [j * n + i for i in range(n) for j in range(n)],
        spec={"kind": "pair", "objects": n})


def disjoint_union(a, b):
    """Union with a's objects and morphisms first, then b's shifted up."""
    n_a, m_a = a.object_count, a.morphism_count
    mors = list(a.morphisms) + [(s + n_a, t + n_a) for s, t in b.morphisms]
    idents = list(a.identity_of) + [e + m_a for e in b.identity_of]
    invs = list(a.inverse_of) + [e + m_a for e in b.inverse_of]
    m = len(mors)
    compose = [[None] * m for _ in range(m)]
    for g1 in range(m_a):
        for g2 in range(m_a):
            compose[g1][g2] = a.compose_table[g1][g2]
    for g1 in range(b.morphism_count):
        for g2 in range(b.morphism_count):
            h = b.compose_table[g1][g2]
            if h is not None:
                compose[g1 + m_a][g2 + m_a] = h + m_a
    return Groupoid(
        a.object_count + b.object_count, mors, idents, compose, invs,
        spec={"kind": "union", "parts": [a.spec, b.spec]})


def groupoid_from_spec(spec):
    """Build a groupoid from its JSON form (kinds: group, pair, union,
    explicit)."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise SpecError("groupoid spec must be an object with a 'kind'")
    kind = spec["kind"]
    try:
        if kind == "group":
            return make_group(spec["table"])
        if kind == "pair":
            return make_pair_groupoid(int(spec["objects"]))
        if kind == "union":
            parts = [groupoid_from_spec(p) for p in spec["parts"]]
            if not parts:
                raise SpecError("union of zero groupoids")
            out = parts[0]
            for p in parts[1:]:
                out = disjoint_union(out, p)
            return out
        if kind == "explicit":
            return Groupoid(spec["objects"], spec["morphisms"],
                            spec["identities"], spec["compose"],
                            spec["inverses"], spec=spec)
    except GroupoidError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError("bad groupoid spec: %s" % exc) from exc
    raise SpecError("unknown groupoid kind %r" % kind)


def groupoid_to_spec(cat):
    return cat.spec
