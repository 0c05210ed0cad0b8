"""End-to-end audit of the fifteen-way equivalence.

A run builds the category from a spec, generates the seeded algebra
corpus (and its dual coalgebra corpus), evaluates every condition of the
equivalence, re-proves the structural theorems (support, corner algebras,
inclusion/projection functors, idempotents, ring predicates), and emits a
deterministic JSON report.  Every false condition embeds a witness that
re-verifies when fed back through the library.

The equivalence is a theorem, so all of conditions (2)-(15) must agree
with condition (1); a report where they do not is raised as an internal
consistency error, never returned as a finding.
"""

import itertools
import random

from .corpus import algebra_corpus, random_endomorphism_invertible, random_object, random_morphism
from .errors import ConsistencyError, SpecError
from .functors import (
    check_inclusion_frobenius, check_projection_lax_colax, check_rj_algebra,
    coreflection_checks, coseparability_verdict, frobenius_pair_check,
    idempotent_e, is_faithful_cotensor, is_faithful_tensor,
    reflection_checks, separability_verdict)
from .grothendieck import fusion_iff_separable_check, ring_report
from .groupoid import Groupoid, groupoid_from_spec
from .gvec import (
    cokernel, compose, identity_mor, is_epi, is_mono, kernel,
    morphism_to_spec, tensor_mor, unit_object)
from .internal import (
    algebra_to_spec, dualize_algebra, restriction_data, support,
    unit_summand_algebra, validate_algebra)
from .morphcalc import find_retraction

__all__ = ["CONDITIONS", "run_audit", "render_report",
           "check_algebra_report", "gr_report"]

CONDITIONS = {
    1: "the unit object is simple",
    2: "tensoring by any non-zero algebra is separable",
    3: "tensoring by any non-zero coalgebra is separable",
    4: "tensoring by any non-zero algebra is faithful",
    5: "tensoring by any non-zero coalgebra is faithful",
    6: "tensoring by any non-zero algebra reflects split monos",
    7: "tensoring by any non-zero coalgebra reflects split monos",
    8: "tensoring by any non-zero algebra reflects split epis",
    9: "tensoring by any non-zero coalgebra reflects split epis",
    10: "tensoring by any non-zero algebra reflects isomorphisms",
    11: "tensoring by any non-zero coalgebra reflects isomorphisms",
    12: "the unit of any non-zero algebra is mono",
    13: "the counit of any non-zero coalgebra is epi",
    14: "any non-zero algebra morphism from 1 is mono",
    15: "any non-zero coalgebra morphism to 1 is epi",
}


def _corpus_labels(cat, corpus_size):
    labels = ["unit_summand %d" % i for i in range(cat.object_count)]
    labels.append("groupoid_algebra all")
    labels.extend(["groupoid_algebra sample"] * 2)
    labels.extend(["internal_end sample"] * corpus_size)
    labels.extend(["direct_sum sample"] * corpus_size)
    return labels


def _object_subsets(cat, rng, limit=7):
    """Nonempty object subsets to exercise the inclusion/projection pair:
    all of them for small categories, a seeded sample otherwise."""
    n = cat.object_count
    if 2 ** n - 1 <= limit:
        subs = [set(c) for k in range(1, n + 1)
                for c in itertools.combinations(range(n), k)]
    else:
        subs = [set(range(n))]
        for _ in range(limit - 1):
            k = rng.randrange(1, n + 1)
            subs.append(set(rng.sample(range(n), k)))
    return subs


def _hold(holds, witness=None, method="exact"):
    return {"holds": holds, "witness": witness, "method": method}


def _first_failure(pairs, predicate):
    for idx, item in pairs:
        failed = predicate(idx, item)
        if failed is not None:
            return failed
    return None


def run_audit(category, seed=1, corpus_size=2, samples=6):
    if isinstance(category, dict):
        cat = groupoid_from_spec(category)
    elif isinstance(category, Groupoid):
        cat = category
    else:
        raise SpecError("category must be a groupoid or a spec document")
    if corpus_size < 1:
        raise SpecError("corpus_size must be at least 1")
    if samples < 1:
        raise SpecError("samples must be at least 1")
    rng = random.Random(seed)
    algebras = algebra_corpus(cat, rng,
                              internal_ends=corpus_size, sums=corpus_size)
    coalgebras = [dualize_algebra(a) for a in algebras]
    live = [(i, a) for i, a in enumerate(algebras) if not a.is_zero()]
    live_co = [(i, coalgebras[i]) for i, _ in live]

    unit_simple = cat.object_count == 1
    if (len(cat.identity_grades) == 1) != unit_simple:
        raise ConsistencyError("unit decomposition disagrees with the "
                               "object count")
    conditions = {1: _hold(unit_simple, None if unit_simple else
                           {"kind": "unit_decomposition",
                            "identity_grades": list(cat.identity_grades)})}

    def alg_witness(idx, a, reason, **extra):
        w = {"kind": "algebra", "corpus_index": idx, "reason": reason,
             "spec": algebra_to_spec(a)}
        w.update(extra)
        return w

    def coalg_witness(idx, reason, **extra):
        w = {"kind": "coalgebra", "corpus_index": idx, "reason": reason,
             "dual_of": algebra_to_spec(algebras[idx])}
        w.update(extra)
        return w

    # (2), (3): separability of the tensor functors
    fail = _first_failure(live, lambda i, a: None
                          if separability_verdict(a)["separable"]
                          else alg_witness(i, a, "unit has no retraction"))
    conditions[2] = _hold(fail is None, fail)
    fail = _first_failure(live_co, lambda i, c: None
                          if coseparability_verdict(c)["separable"]
                          else coalg_witness(i, "counit has no section"))
    conditions[3] = _hold(fail is None, fail)

    # (4), (5): faithfulness via the dead-simple criterion
    def faith_fail(i, a):
        rep = is_faithful_tensor(a, rng=rng, samples=samples)
        if rep["faithful"]:
            return None
        return alg_witness(i, a, "simple dies under tensoring",
                           simple_grade=rep["witness"]["simple_grade"],
                           morphism=morphism_to_spec(
                               rep["witness"]["morphism"]))
    fail = _first_failure(live, faith_fail)
    conditions[4] = _hold(fail is None, fail)

    def cofaith_fail(i, c):
        rep = is_faithful_cotensor(c, rng=rng, samples=samples)
        if rep["faithful"]:
            return None
        return coalg_witness(i, "simple dies under tensoring",
                             simple_grade=rep["witness"]["simple_grade"],
                             morphism=morphism_to_spec(
                                 rep["witness"]["morphism"]))
    fail = _first_failure(live_co, cofaith_fail)
    conditions[5] = _hold(fail is None, fail)

    # (6)-(11): the reflection properties, algebra and coalgebra sides
    refl = {i: reflection_checks(a, rng=rng, samples=samples)
            for i, a in live}
    corefl = {i: coreflection_checks(c, rng=rng, samples=samples)
              for i, c in live_co}
    for cond, key in ((6, "maschke"), (8, "dual_maschke"),
                      (10, "conservative")):
        fail = _first_failure(live, lambda i, a, k=key: None
                              if refl[i][k]["holds"]
                              else alg_witness(i, a, "reflection fails",
                                               morphism=morphism_to_spec(
                                                   refl[i][k]["witness"])))
        conditions[cond] = _hold(fail is None, fail)
    for cond, key in ((7, "maschke"), (9, "dual_maschke"),
                      (11, "conservative")):
        fail = _first_failure(live_co, lambda i, c, k=key: None
                              if corefl[i][k]["holds"]
                              else coalg_witness(i, "reflection fails",
                                                 morphism=morphism_to_spec(
                                                     corefl[i][k]["witness"])))
        conditions[cond] = _hold(fail is None, fail)

    # (12), (13): unit mono / counit epi, with (co)kernel evidence
    fail = _first_failure(live, lambda i, a: None if is_mono(a.unit)
                          else alg_witness(i, a, "unit has a kernel",
                                           morphism=morphism_to_spec(a.unit),
                                           kernel=morphism_to_spec(
                                               kernel(a.unit)[1])))
    conditions[12] = _hold(fail is None, fail)
    fail = _first_failure(live_co, lambda i, c: None if is_epi(c.counit)
                          else coalg_witness(i, "counit has a cokernel",
                                             morphism=morphism_to_spec(
                                                 c.counit),
                                             cokernel=morphism_to_spec(
                                                 cokernel(c.counit)[1])))
    conditions[13] = _hold(fail is None, fail)

    # (14), (15): sampled non-zero (co)algebra morphisms through 1
    one = unit_object(cat)

    def unit_mor_fail(i, a):
        cands = [a.unit]
        for _ in range(samples):
            theta = random_endomorphism_invertible(one, rng)
            cands.append(compose(a.unit, theta))
        for f in cands:
            if not f.is_zero() and not is_mono(f):
                return alg_witness(i, a, "non-zero morphism from 1 with "
                                   "kernel", morphism=morphism_to_spec(f),
                                   kernel=morphism_to_spec(kernel(f)[1]))
        return None
    fail = _first_failure(live, unit_mor_fail)
    conditions[14] = _hold(fail is None, fail, method="sampled")

    def counit_mor_fail(i, c):
        cands = [c.counit]
        for _ in range(samples):
            theta = random_endomorphism_invertible(one, rng)
            cands.append(compose(theta, c.counit))
        for f in cands:
            if not f.is_zero() and not is_epi(f):
                return coalg_witness(i, "non-zero morphism to 1 with "
                                     "cokernel", morphism=morphism_to_spec(f),
                                     cokernel=morphism_to_spec(cokernel(f)[1]))
        return None
    fail = _first_failure(live_co, counit_mor_fail)
    conditions[15] = _hold(fail is None, fail, method="sampled")

    structural = _structural_suite(cat, rng, live, samples, unit_simple)

    consistency = all(conditions[c]["holds"] == unit_simple
                      for c in range(2, 16))
    if not consistency:
        bad = [c for c in range(2, 16)
               if conditions[c]["holds"] != unit_simple]
        raise ConsistencyError(
            "conditions %s disagree with unit simplicity" % bad)

    report = {
        "category": {
            "fingerprint": cat.fingerprint(),
            "objects": cat.object_count,
            "morphisms": cat.morphism_count,
            "spec": cat.spec,
        },
        "unit_simple": unit_simple,
        "conditions": {str(k): conditions[k] for k in sorted(conditions)},
        "structural": structural,
        "corpus": {
            "seed": seed,
            "corpus_size": corpus_size,
            "samples": samples,
            "generators": _corpus_labels(cat, corpus_size),
            "algebras": [{"index": i,
                          "zero": a.is_zero(),
                          "support": sorted(support(a)) if not a.is_zero()
                          else [],
                          "total_multiplicity": sum(a.carrier.mult.values())}
                         for i, a in enumerate(algebras)],
        },
        "consistency": consistency,
    }
    return report


def _structural_suite(cat, rng, live, samples, unit_simple):
    summands = []
    for i in range(cat.object_count):
        sep = separability_verdict(unit_summand_algebra(cat, i))["separable"]
        summands.append({"object": i, "separable": sep})
        if sep != unit_simple:
            raise ConsistencyError(
                "unit summand %d separability disagrees with simplicity" % i)

    corner = []
    for idx, a in live:
        j = sorted(support(a))
        data = restriction_data(a, j)
        i_aj = data["carrier_inclusion"]
        aj = data["algebra"]
        eq_mult = compose(i_aj, aj.mult) \
            == compose(a.mult, tensor_mor(i_aj, i_aj))
        eq_unit = compose(i_aj, compose(data["restricted_unit"],
                                        data["unit_projection"])) == a.unit
        mono = is_mono(data["restricted_unit"])
        sep = find_retraction(data["restricted_unit"]) is not None
        ok = eq_mult and eq_unit and mono and sep
        corner.append({"index": idx, "support": j,
                       "inclusion_is_algebra_morphism": eq_mult and eq_unit,
                       "restricted_unit_mono": mono,
                       "restricted_separable": sep})
        if not ok:
            raise ConsistencyError(
                "corner algebra theorems fail for corpus index %d" % idx)

    functors = []
    for objs in _object_subsets(cat, rng):
        entry = {
            "objects": sorted(objs),
            "inclusion_frobenius":
                check_inclusion_frobenius(cat, objs, rng, samples=samples),
            "projection_lax_colax":
                check_projection_lax_colax(cat, objs, rng, samples=samples),
            "frobenius_pair":
                frobenius_pair_check(cat, objs, rng, samples=samples),
        }
        if not all(entry[k] for k in ("inclusion_frobenius",
                                      "projection_lax_colax",
                                      "frobenius_pair")):
            raise ConsistencyError(
                "functor axioms fail on objects %s" % sorted(objs))
        functors.append(entry)

    rj_alg = all(check_rj_algebra(a, support(a)) for _, a in live)
    if not rj_alg:
        raise ConsistencyError("lax image disagrees with corner restriction")

    idem = []
    one = unit_object(cat)
    for idx, a in live:
        sep = separability_verdict(a)["separable"]
        all_id = True
        for k in range(samples):
            m = one if k == 0 else random_object(cat, rng, max_total=3)
            e = idempotent_e(a, m)
            if compose(e, e) != e:
                raise ConsistencyError("e_M is not idempotent")
            m2 = random_object(cat, rng, max_total=3)
            f = random_morphism(m, m2, rng)
            if compose(idempotent_e(a, m2), f) != compose(f, e):
                raise ConsistencyError("e_M is not natural")
            if e != identity_mor(m):
                all_id = False
        if all_id != sep:
            raise ConsistencyError(
                "idempotent triviality disagrees with separability")
        idem.append({"index": idx, "trivial": all_id, "separable": sep})

    ring = ring_report(cat)
    fus = fusion_iff_separable_check(cat, [a for _, a in live])
    if ring["fusion"]["holds"] != unit_simple:
        raise ConsistencyError("fusion ring verdict disagrees with "
                               "unit simplicity")

    return {
        "unit_summands": summands,
        "corner_algebras": corner,
        "subset_functors": functors,
        "lax_image_matches_corner": rj_alg,
        "idempotents": idem,
        "grothendieck": ring,
        "fusion_iff_separable": fus,
    }


def render_report(report):
    """Human-readable table; one line per condition."""
    lines = []
    cat = report["category"]
    lines.append("category: %d object(s), %d morphism(s), fingerprint %s"
                 % (cat["objects"], cat["morphisms"], cat["fingerprint"]))
    lines.append("unit simple: %s" % ("yes" if report["unit_simple"]
                                      else "no"))
    lines.append("")
    for k in range(1, 16):
        cond = report["conditions"][str(k)]
        status = "holds" if cond["holds"] else "fails"
        extra = ""
        if cond["witness"] is not None and "reason" in cond["witness"]:
            extra = "  [%s]" % cond["witness"]["reason"]
        lines.append("(%2d) %-55s %s%s"
                     % (k, CONDITIONS[k], status, extra))
    lines.append("")
    s = report["structural"]
    lines.append("corner algebras checked: %d" % len(s["corner_algebras"]))
    lines.append("object subsets checked:  %d" % len(s["subset_functors"]))
    lines.append("ring: rank %d, based %s, fusion %s"
                 % (s["grothendieck"]["rank"],
                    s["grothendieck"]["based"]["holds"],
                    s["grothendieck"]["fusion"]["holds"]))
    lines.append("consistency: %s" % report["consistency"])
    return "\n".join(lines) + "\n"


def check_algebra_report(cat, algebra_doc):
    """Single-algebra drill-down: validation, support, separability,
    corner restriction."""
    from .internal import algebra_from_spec
    a = algebra_from_spec(cat, algebra_doc)
    validation = validate_algebra(a)
    doc = {"category": {"fingerprint": cat.fingerprint(),
                        "objects": cat.object_count,
                        "morphisms": cat.morphism_count},
           "validation": validation}
    if not validation["ok"] or validation["zero"]:
        return doc
    v = separability_verdict(a)
    j = sorted(support(a))
    data = restriction_data(a, j)
    doc["support"] = j
    doc["separability"] = {
        "separable": v["separable"],
        "naturally_full": v["naturally_full"],
        "semiseparable": v["semiseparable"],
        "idempotent_trivial": v["idempotent_trivial"],
        "retraction": None if v["retraction"] is None
        else morphism_to_spec(v["retraction"]),
        "section": None if v["section"] is None
        else morphism_to_spec(v["section"]),
    }
    doc["unit_mono"] = is_mono(a.unit)
    doc["faithful"] = is_faithful_tensor(a)["faithful"]
    doc["restricted_unit_mono"] = is_mono(data["restricted_unit"])
    doc["restricted_separable"] = \
        find_retraction(data["restricted_unit"]) is not None
    doc["corner_spec"] = algebra_to_spec(data["algebra"])
    return doc


def gr_report(cat, seed=1, corpus_size=2):
    rng = random.Random(seed)
    corpus = algebra_corpus(cat, rng,
                            internal_ends=corpus_size, sums=corpus_size)
    doc = ring_report(cat)
    doc["fusion_iff_separable"] = fusion_iff_separable_check(cat, corpus)
    doc["corpus"] = {"seed": seed, "corpus_size": corpus_size,
                     "generators": _corpus_labels(cat, corpus_size)}
    return doc
