"""Algebras and coalgebras internal to a graded category.

Structures are plain carrier/structure-map triples; validation is separate
so that deliberately broken structures can be built for mutation tests.
Strictness makes every axiom a literal matrix equation, checked exactly.

Serialization note: a multiplication block's columns index the slots of
carrier (x) carrier, and that slot order depends on how the carrier was
built.  The JSON form therefore fixes a canonical column order: composable
grade pairs (g1, g2) as enumerated by the groupoid, slot pairs row-major
within each.  For a carrier built atomically from a multiplicity map this
is exactly the in-memory order, so parsing needs no permutation.
"""

from .errors import ConsistencyError, ShapeError, SpecError
from .exactlin import Matrix, parse_rat, rat_str
from .gvec import (
    GradedMorphism, _tensor_slots, compose, dual_morphism, dual_obj,
    direct_sum_with_maps, graded_object, identity_mor, left_dual,
    object_from_spec, object_to_spec, restrict_grades, restriction_inclusion,
    restriction_projection, tensor_mor, tensor_obj, unit_object,
    unit_summand)

__all__ = [
    "InternalAlgebra", "InternalCoalgebra",
    "validate_algebra", "validate_coalgebra",
    "unit_summand_algebra", "unit_summand_coalgebra",
    "groupoid_algebra", "internal_end",
    "dualize_algebra", "dualize_coalgebra",
    "direct_sum_algebra", "restrict_to_J", "restriction_data",
    "support", "grades_within",
    "algebra_to_spec", "algebra_from_spec",
]


class InternalAlgebra:
    """Carrier with multiplication carrier (x) carrier -> carrier and unit
    1 -> carrier; axioms are checked by validate_algebra, not here."""

    __slots__ = ("carrier", "mult", "unit")

    def __init__(self, carrier, mult, unit):
        if mult.source != tensor_obj(carrier, carrier) \
                or mult.target != carrier:
            raise ShapeError("multiplication endpoints do not match carrier")
        if unit.source != unit_object(carrier.cat) or unit.target != carrier:
            raise ShapeError("unit endpoints do not match carrier")
        self.carrier = carrier
        self.mult = mult
        self.unit = unit

    def is_zero(self):
        return self.carrier.is_zero()

    def __eq__(self, other):
        # canonical column order makes this independent of carrier layout
        return (isinstance(other, InternalAlgebra)
                and self.carrier == other.carrier
                and _canonical_pair_blocks(self.carrier, self.mult)
                == _canonical_pair_blocks(other.carrier, other.mult)
                and self.unit.blocks == other.unit.blocks)

    def __hash__(self):
        return hash((self.carrier, self.unit))

    def __repr__(self):
        return "InternalAlgebra(%r)" % (self.carrier,)


class InternalCoalgebra:
    """Carrier with comultiplication carrier -> carrier (x) carrier and
    counit carrier -> 1."""

    __slots__ = ("carrier", "comult", "counit")

    def __init__(self, carrier, comult, counit):
        if comult.target != tensor_obj(carrier, carrier) \
                or comult.source != carrier:
            raise ShapeError(
                "comultiplication endpoints do not match carrier")
        if counit.target != unit_object(carrier.cat) \
                or counit.source != carrier:
            raise ShapeError("counit endpoints do not match carrier")
        self.carrier = carrier
        self.comult = comult
        self.counit = counit

    def is_zero(self):
        return self.carrier.is_zero()

    def __eq__(self, other):
        return (isinstance(other, InternalCoalgebra)
                and self.carrier == other.carrier
                and _canonical_pair_rows(self.carrier, self.comult)
                == _canonical_pair_rows(other.carrier, other.comult)
                and self.counit.blocks == other.counit.blocks)

    def __hash__(self):
        return hash((self.carrier, self.counit))

    def __repr__(self):
        return "InternalCoalgebra(%r)" % (self.carrier,)


# ---------------------------------------------------------------------------
# canonical pair-slot order

def _pair_columns(carrier):
    """Per grade of carrier (x) carrier: the memory position of every slot,
    listed in canonical order (composable grade pairs as the groupoid
    enumerates them, slot pairs row-major)."""
    cat = carrier.cat
    mem = _tensor_slots(carrier, carrier)
    out = {}
    for h, slots in mem.items():
        lookup = {(g1, i, g2, j): p
                  for p, (_, g1, i, g2, j) in enumerate(slots)}
        order = []
        for g1, g2 in cat.pairs_into[h]:
            m1, m2 = carrier.m(g1), carrier.m(g2)
            for i in range(m1):
                for j in range(m2):
                    order.append(lookup[(g1, i, g2, j)])
        out[h] = order
    return out


def _canonical_pair_blocks(carrier, mult):
    cols = _pair_columns(carrier)
    return {g: b.columns(cols[g]) for g, b in mult.blocks.items()}


def _canonical_pair_rows(carrier, comult):
    cols = _pair_columns(carrier)
    return {g: b.transpose().columns(cols[g]).transpose()
            for g, b in comult.blocks.items()}


# ---------------------------------------------------------------------------
# validation

def _mismatch_grades(f, g):
    return sorted((f - g).blocks)


def validate_algebra(a):
    """{"ok", "zero", "failures"}; failures name the equation and grades."""
    failures = []
    ida = identity_mor(a.carrier)
    try:
        lhs = compose(a.mult, tensor_mor(a.mult, ida))
        rhs = compose(a.mult, tensor_mor(ida, a.mult))
        if lhs != rhs:
            failures.append("associativity fails at grades %s"
                            % _mismatch_grades(lhs, rhs))
        left = compose(a.mult, tensor_mor(a.unit, ida))
        if left != ida:
            failures.append("left unit law fails at grades %s"
                            % _mismatch_grades(left, ida))
        right = compose(a.mult, tensor_mor(ida, a.unit))
        if right != ida:
            failures.append("right unit law fails at grades %s"
                            % _mismatch_grades(right, ida))
    except ShapeError as exc:
        failures.append("structural: %s" % exc)
    return {"ok": not failures, "zero": a.is_zero(), "failures": failures}


def validate_coalgebra(c):
    failures = []
    idc = identity_mor(c.carrier)
    try:
        lhs = compose(tensor_mor(c.comult, idc), c.comult)
        rhs = compose(tensor_mor(idc, c.comult), c.comult)
        if lhs != rhs:
            failures.append("coassociativity fails at grades %s"
                            % _mismatch_grades(lhs, rhs))
        left = compose(tensor_mor(c.counit, idc), c.comult)
        if left != idc:
            failures.append("left counit law fails at grades %s"
                            % _mismatch_grades(left, idc))
        right = compose(tensor_mor(idc, c.counit), c.comult)
        if right != idc:
            failures.append("right counit law fails at grades %s"
                            % _mismatch_grades(right, idc))
    except ShapeError as exc:
        failures.append("structural: %s" % exc)
    return {"ok": not failures, "zero": c.is_zero(), "failures": failures}


# ---------------------------------------------------------------------------
# constructors

def unit_summand_algebra(cat, i):
    """1_i with multiplication the identity (1_i (x) 1_i is literally 1_i)
    and unit the coordinate projection of 1."""
    if not 0 <= i < cat.object_count:
        raise IndexError("object index %r out of range" % (i,))
    carrier = unit_summand(cat, {i})
    unit = restriction_projection(unit_object(cat), {cat.identity_of[i]})
    return InternalAlgebra(carrier, identity_mor(carrier), unit)


def unit_summand_coalgebra(cat, i):
    """1_i with comultiplication the identity and counit the coordinate
    inclusion into 1."""
    if not 0 <= i < cat.object_count:
        raise IndexError("object index %r out of range" % (i,))
    carrier = unit_summand(cat, {i})
    counit = restriction_inclusion(unit_object(cat), {cat.identity_of[i]})
    return InternalCoalgebra(carrier, identity_mor(carrier), counit)


def grades_within(cat, objs):
    objs = set(objs)
    return {g for g, (s, t) in enumerate(cat.morphisms)
            if s in objs and t in objs}


def groupoid_algebra(cat, objs):
    """Convolution algebra on the grades with both endpoints in objs:
    multiplicity one everywhere, structure constants all one, unit the sum
    of the identity-grade slots."""
    objs = set(objs)
    if not objs:
        raise ValueError("empty object set")
    if any(not 0 <= i < cat.object_count for i in objs):
        raise IndexError("object index out of range")
    carrier = graded_object(cat, {g: 1 for g in grades_within(cat, objs)})
    cxc = tensor_obj(carrier, carrier)
    mult = GradedMorphism(cxc, carrier, {
        h: Matrix(1, m, [1] * m) for h, m in cxc.mult.items()})
    unit = GradedMorphism(unit_object(cat), carrier, {
        cat.identity_of[i]: Matrix(1, 1, [1]) for i in objs})
    return InternalAlgebra(carrier, mult, unit)


def internal_end(x):
    """x (x) dual(x) with multiplication id (x) ev (x) id and unit coev."""
    if x.is_zero():
        raise ValueError("internal end of the zero object")
    d, ev, coev = left_dual(x)
    carrier = tensor_obj(x, d)
    mult = tensor_mor(tensor_mor(identity_mor(x), ev), identity_mor(d))
    return InternalAlgebra(carrier, mult, coev)


def dualize_algebra(a):
    """Transpose through duality; strictness of dual-of-product makes the
    transposed maps land exactly on dual(carrier) (x) dual(carrier)."""
    return InternalCoalgebra(dual_obj(a.carrier),
                             dual_morphism(a.mult), dual_morphism(a.unit))


def dualize_coalgebra(c):
    return InternalAlgebra(dual_obj(c.carrier),
                           dual_morphism(c.comult), dual_morphism(c.counit))


def direct_sum_algebra(a, b):
    """Product algebra: componentwise multiplication, zero across summands,
    unit the pair of units."""
    s, ia, ib, pa, pb = direct_sum_with_maps(a.carrier, b.carrier)
    mult = compose(ia, compose(a.mult, tensor_mor(pa, pa))) \
        + compose(ib, compose(b.mult, tensor_mor(pb, pb)))
    unit = compose(ia, a.unit) + compose(ib, b.unit)
    return InternalAlgebra(s, mult, unit)


# ---------------------------------------------------------------------------
# support and restriction

def support(a):
    """Object indices i with component (i, i) of the carrier nonzero.

    The support theorem says every carrier grade then has both endpoints in
    the returned set; a violation is an internal inconsistency, not a
    property of the input.
    """
    cat = a.carrier.cat
    j = {cat.morphisms[g][0] for g in a.carrier.mult
         if cat.morphisms[g][0] == cat.morphisms[g][1]}
    for g in a.carrier.mult:
        s, t = cat.morphisms[g]
        if s not in j or t not in j:
            raise ConsistencyError(
                "support theorem violated: carrier grade %d has endpoint "
                "outside %s" % (g, sorted(j)))
    return j


def restriction_data(a, objs):
    """Restriction of a to the full subcategory on objs, with all the maps
    the verification equations mention.

    Returns a dict with the restricted algebra (unit rebased to the ambient
    1 through the summand projection), the carrier inclusion/projection,
    the unit-summand inclusion/projection, and the restricted unit
    1_J -> A_J.  The multiplication equation i m_J = m (i (x) i) is asserted
    unconditionally; the unit equation i u_J p_J = u is asserted whenever
    the ambient unit is supported inside objs, which the support theorem
    guarantees for objs containing the support.
    """
    cat = a.carrier.cat
    objs = set(objs)
    if not objs:
        raise ValueError("empty object set")
    keep = grades_within(cat, objs)
    sub = restrict_grades(a.carrier, keep)
    i_aj = restriction_inclusion(a.carrier, keep)
    p_aj = restriction_projection(a.carrier, keep)
    id_grades = {cat.identity_of[i] for i in objs}
    one = unit_object(cat)
    i_j = restriction_inclusion(one, id_grades)
    p_j = restriction_projection(one, id_grades)
    mult_j = compose(p_aj, compose(a.mult, tensor_mor(i_aj, i_aj)))
    unit_j = compose(p_aj, compose(a.unit, i_j))
    if compose(i_aj, mult_j) != compose(a.mult, tensor_mor(i_aj, i_aj)):
        raise ConsistencyError(
            "restricted multiplication does not include back")
    unit_inside = all(cat.morphisms[g][0] in objs for g in a.unit.blocks)
    if unit_inside and compose(i_aj, compose(unit_j, p_j)) != a.unit:
        raise ConsistencyError("restricted unit does not include back")
    algebra = InternalAlgebra(sub, mult_j, compose(unit_j, p_j))
    return {"algebra": algebra, "carrier_inclusion": i_aj,
            "carrier_projection": p_aj, "unit_inclusion": i_j,
            "unit_projection": p_j, "restricted_unit": unit_j}


def restrict_to_J(a, objs):
    return restriction_data(a, objs)["algebra"]


# ---------------------------------------------------------------------------
# JSON forms

def _blocks_to_json(blocks):
    return {str(g): [[rat_str(x) for x in blocks[g].row(i)]
                     for i in range(blocks[g].rows)]
            for g in sorted(blocks)}


def _blocks_from_json(doc):
    out = {}
    for g, rows in (doc or {}).items():
        out[int(g)] = Matrix.from_rows(
            [[parse_rat(x) for x in row] for row in rows])
    return out


def algebra_to_spec(a):
    """Explicit JSON form; multiplication columns in canonical pair order."""
    return {"carrier": object_to_spec(a.carrier),
            "mult": _blocks_to_json(_canonical_pair_blocks(a.carrier, a.mult)),
            "unit": _blocks_to_json(a.unit.blocks)}


_GENERATORS = ("unit_summand", "groupoid_algebra", "internal_end", "sum")


def algebra_from_spec(cat, doc):
    """Parse the explicit form or a generator form."""
    if not isinstance(doc, dict):
        raise SpecError("algebra spec must be an object")
    if "gen" in doc:
        gen = doc["gen"]
        try:
            if gen == "unit_summand":
                return unit_summand_algebra(
                    cat, int(doc["i"] if "i" in doc else doc["object"]))
            if gen == "groupoid_algebra":
                return groupoid_algebra(cat, [int(i) for i in doc["objects"]])
            if gen == "internal_end":
                return internal_end(object_from_spec(cat, doc["object"]))
            if gen == "sum":
                parts = [algebra_from_spec(cat, p) for p in doc["parts"]]
                if not parts:
                    raise SpecError("empty sum")
                out = parts[0]
                for p in parts[1:]:
                    out = direct_sum_algebra(out, p)
                return out
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise SpecError("bad %r generator spec: %s" % (gen, exc)) from exc
        raise SpecError("unknown generator %r (expected one of %s)"
                        % (gen, ", ".join(_GENERATORS)))
    try:
        carrier = object_from_spec(cat, doc["carrier"])
        cxc = tensor_obj(carrier, carrier)
        mult = GradedMorphism(cxc, carrier,
                              _blocks_from_json(doc.get("mult")))
        unit = GradedMorphism(unit_object(cat), carrier,
                              _blocks_from_json(doc.get("unit")))
        return InternalAlgebra(carrier, mult, unit)
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError("bad algebra spec: %s" % exc) from exc
    except ShapeError as exc:
        raise SpecError("algebra spec shapes: %s" % exc) from exc
