"""Groupoid-graded vector spaces over exact rationals.

An object assigns a finite multiplicity to every morphism (grade) of a fixed
finite groupoid; a morphism is a family of rational matrices, one per grade,
acting slot-wise.  Degreewise sums make the category semisimple abelian with
one simple object per grade; the tensor product is graded by groupoid
composition and left duals come from grade inversion.

Slot words (why tensoring is literally strict).  Multiplicity maps alone do
not determine how the slots of an iterated tensor product interleave inside
one grade, and any fixed pair-major block layout fails to be associative on
matrices.  Each object therefore carries a derived per-grade tuple of slot
words: atomic slots are single letters, tensor slots concatenate the factor
words, the unit's slots carry the empty word, direct-sum slots wrap the
summand word in a side-tagged letter, and dual slots reverse and star the
letters.  Slots within a grade are kept sorted by word.  Concatenation is
associative and word sets ignore parenthesization, so iterated tensor
products agree on the nose, objects and matrices alike, and the unit laws
are identities (empty words vanish under concatenation).  For a single
binary product of atomic objects the sorted order is exactly "composable
pairs (g1, g2) lexicographically by enumeration index, Kronecker
left-factor-major".  Every word in an object has the same length, which
makes concatenation splits unambiguous and keeps slot words distinct.

Object equality is equality of multiplicity maps (words are bookkeeping,
not identity).  Morphism equality is structural equality of normalized
blocks: stored blocks have both dimensions positive and at least one
nonzero entry, absent means zero.
"""

from fractions import Fraction

from .errors import CategoryMismatch, ShapeError
from .exactlin import Matrix, kernel_basis, parse_rat, rat_str, solve_right

__all__ = [
    "GradedObject", "GradedMorphism",
    "graded_object", "zero_object", "simple_object", "unit_object",
    "tensor_obj", "direct_sum_obj", "dual_obj", "component",
    "restrict_grades", "unit_summand", "total_mult",
    "identity_mor", "zero_mor", "compose", "tensor_mor", "tensor_mor_chain",
    "tensor_obj_chain", "direct_sum_mor", "direct_sum_with_maps",
    "restriction_inclusion", "restriction_projection",
    "kernel", "cokernel", "image_factorization", "hom_basis",
    "decompose_simples", "left_dual", "dual_morphism",
    "is_mono", "is_epi", "is_iso",
    "object_to_spec", "object_from_spec",
    "morphism_to_spec", "morphism_from_spec",
]

_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# slot words

def _star_letter(cat, letter):
    if letter[0] == 0:
        return (0, cat.inverse_of[letter[1]], letter[2])
    return (1, letter[1], _star_word(cat, letter[2]))


def _star_word(cat, word):
    return tuple(_star_letter(cat, l) for l in reversed(word))


# ---------------------------------------------------------------------------
# objects

class GradedObject:
    """Multiplicity vector over the grades of a groupoid.

    mult holds only positive entries; layout[g] is the sorted tuple of slot
    words at grade g, one per multiplicity unit.
    """

    __slots__ = ("cat", "mult", "layout", "_hash")

    def __init__(self, cat, mult, layout):
        self.cat = cat
        self.mult = {g: m for g, m in mult.items() if m}
        self.layout = layout
        for g, m in self.mult.items():
            if m < 0:
                raise ShapeError("negative multiplicity at grade %d" % g)
            if not (0 <= g < cat.morphism_count):
                raise ShapeError("grade %d out of range" % g)
            if len(layout[g]) != m:
                raise ShapeError("layout size mismatch at grade %d" % g)
        self._hash = None

    def m(self, g):
        return self.mult.get(g, 0)

    def grades(self):
        return sorted(self.mult)

    def is_zero(self):
        return not self.mult

    def __eq__(self, other):
        return (isinstance(other, GradedObject) and self.cat == other.cat
                and self.mult == other.mult)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.cat, tuple(sorted(self.mult.items()))))
        return self._hash

    def __repr__(self):
        return "GradedObject(%s)" % (
            {g: self.mult[g] for g in self.grades()},)


def graded_object(cat, mult):
    """Atomic object: one single-letter word per slot."""
    mult = {int(g): int(m) for g, m in mult.items() if m}
    layout = {g: tuple(((0, g, a),) for a in range(m))
              for g, m in mult.items()}
    return GradedObject(cat, mult, layout)


def zero_object(cat):
    return GradedObject(cat, {}, {})


def simple_object(cat, g):
    return graded_object(cat, {g: 1})


def unit_object(cat):
    """Multiplicity 1 at every identity grade; slots carry the empty word."""
    mult = {e: 1 for e in cat.identity_grades}
    return GradedObject(cat, mult, {e: ((),) for e in mult})


def total_mult(v):
    return sum(v.mult.values())


def _same_cat(*items):
    cat = items[0].cat
    for x in items[1:]:
        if x.cat != cat:
            raise CategoryMismatch("values graded by different groupoids")
    return cat


def tensor_obj(v, w):
    cat = _same_cat(v, w)
    layout = {}
    for g1 in v.mult:
        ws1 = v.layout[g1]
        row = cat.compose_table[g1]
        for g2 in w.mult:
            h = row[g2]
            if h is None:
                continue
            layout.setdefault(h, []).extend(
                w1 + w2 for w1 in ws1 for w2 in w.layout[g2])
    layout = {h: tuple(sorted(ws)) for h, ws in layout.items()}
    return GradedObject(cat, {h: len(ws) for h, ws in layout.items()}, layout)


def tensor_obj_chain(objs):
    out = objs[0]
    for v in objs[1:]:
        out = tensor_obj(out, v)
    return out


def direct_sum_obj(v, w):
    cat = _same_cat(v, w)
    mult, layout = {}, {}
    for g in set(v.mult) | set(w.mult):
        words = [((1, 0, word),) for word in v.layout.get(g, ())] \
            + [((1, 1, word),) for word in w.layout.get(g, ())]
        layout[g] = tuple(words)  # side tag keeps this sorted
        mult[g] = len(words)
    return GradedObject(cat, mult, layout)


def dual_obj(v):
    cat = v.cat
    inv = cat.inverse_of
    mult = {inv[g]: m for g, m in v.mult.items()}
    layout = {inv[g]: tuple(sorted(_star_word(cat, w) for w in v.layout[g]))
              for g in v.mult}
    return GradedObject(cat, mult, layout)


def restrict_grades(v, grades):
    keep = {g: v.mult[g] for g in v.mult if g in grades}
    return GradedObject(v.cat, keep, {g: v.layout[g] for g in keep})


def component(v, i, j):
    """Summand of v supported on grades i -> j."""
    cat = v.cat
    return restrict_grades(
        v, {g for g in v.mult
            if cat.morphisms[g] == (i, j)})


def unit_summand(cat, objs):
    """The summand 1_J of the unit at a set of objects."""
    objs = set(objs)
    unit = unit_object(cat)
    return restrict_grades(
        unit, {cat.identity_of[i] for i in objs})


# ---------------------------------------------------------------------------
# morphisms

def _normalize_blocks(blocks, source, target):
    out = {}
    for g, mat in blocks.items():
        tm, sm = target.m(g), source.m(g)
        if mat.rows != tm or mat.cols != sm:
            raise ShapeError("block at grade %d is %dx%d, expected %dx%d"
                             % (g, mat.rows, mat.cols, tm, sm))
        if tm and sm and not mat.is_zero():
            out[g] = mat
    return out


class GradedMorphism:
    """Grade-diagonal family of matrices source -> target."""

    __slots__ = ("source", "target", "blocks")

    def __init__(self, source, target, blocks):
        _same_cat(source, target)
        self.source = source
        self.target = target
        self.blocks = _normalize_blocks(blocks, source, target)

    def block(self, g):
        """Stored block, or an explicit zero block; None when either side
        has no slots at g."""
        tm, sm = self.target.m(g), self.source.m(g)
        if tm == 0 or sm == 0:
            return None
        return self.blocks.get(g) or Matrix.zeros(tm, sm)

    def is_zero(self):
        return not self.blocks

    def __eq__(self, other):
        return (isinstance(other, GradedMorphism)
                and self.source == other.source
                and self.target == other.target
                and self.blocks == other.blocks)

    def __hash__(self):
        return hash((self.source, self.target,
                     tuple(sorted(self.blocks.items()))))

    def __repr__(self):
        return "GradedMorphism(%r -> %r, blocks at %s)" % (
            self.source, self.target, sorted(self.blocks))

    # composition: (f @ g) applies g first
    def __matmul__(self, other):
        return compose(self, other)

    def __add__(self, other):
        if self.source != other.source or self.target != other.target:
            raise ShapeError("adding morphisms with different endpoints")
        out = {}
        for g in set(self.blocks) | set(other.blocks):
            out[g] = self.block(g) + other.block(g)
        return GradedMorphism(self.source, self.target, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return GradedMorphism(self.source, self.target,
                              {g: m.scale(c) for g, m in self.blocks.items()})


def identity_mor(v):
    return GradedMorphism(
        v, v, {g: Matrix.identity(m) for g, m in v.mult.items()})


def zero_mor(v, w):
    return GradedMorphism(v, w, {})


def compose(f, g):
    """f after g."""
    if g.target != f.source:
        raise ShapeError("composition endpoint mismatch: %r vs %r"
                         % (g.target, f.source))
    out = {}
    for h in f.blocks:
        if h in g.blocks:
            out[h] = f.blocks[h] @ g.blocks[h]
    return GradedMorphism(g.source, f.target, out)


def _tensor_slots(v, w):
    """Per grade: slot metadata (word, g1, i, g2, j) of v (x) w, in slot
    order (sorted by word)."""
    cat = _same_cat(v, w)
    per = {}
    for g1 in v.mult:
        row = cat.compose_table[g1]
        for g2 in w.mult:
            h = row[g2]
            if h is None:
                continue
            dst = per.setdefault(h, [])
            for i, w1 in enumerate(v.layout[g1]):
                for j, w2 in enumerate(w.layout[g2]):
                    dst.append((w1 + w2, g1, i, g2, j))
    for h in per:
        per[h].sort(key=lambda t: t[0])
    return per


def tensor_mor(f, h):
    src = tensor_obj(f.source, h.source)
    tgt = tensor_obj(f.target, h.target)
    src_slots = _tensor_slots(f.source, h.source)
    tgt_slots = _tensor_slots(f.target, h.target)
    blocks = {}
    for g, rows in tgt_slots.items():
        cols = src_slots.get(g)
        if not cols:
            continue
        # group columns by the factor grades; only matching grades couple
        colclass = {}
        for cpos, (_, g1, i, g2, j) in enumerate(cols):
            colclass.setdefault((g1, g2), []).append((cpos, i, j))
        data = [[Fraction(0)] * len(cols) for _ in range(len(rows))]
        touched = False
        for rpos, (_, g1, i, g2, j) in enumerate(rows):
            fb = f.blocks.get(g1)
            hb = h.blocks.get(g2)
            if fb is None or hb is None:
                continue
            row = data[rpos]
            for cpos, ci, cj in colclass.get((g1, g2), ()):
                x = fb[i, ci] * hb[j, cj]
                if x:
                    row[cpos] = x
                    touched = True
        if touched:
            blocks[g] = Matrix.from_rows(data)
    return GradedMorphism(src, tgt, blocks)


def tensor_mor_chain(mors):
    out = mors[0]
    for f in mors[1:]:
        out = tensor_mor(out, f)
    return out


def direct_sum_mor(f, g):
    src = direct_sum_obj(f.source, g.source)
    tgt = direct_sum_obj(f.target, g.target)
    blocks = {}
    for gr in set(src.mult) & set(tgt.mult):
        ft_m, fs_m = f.target.m(gr), f.source.m(gr)
        gt_m, gs_m = g.target.m(gr), g.source.m(gr)
        fb = f.blocks.get(gr) or Matrix.zeros(ft_m, fs_m)
        gb = g.blocks.get(gr) or Matrix.zeros(gt_m, gs_m)
        data = []
        for i in range(ft_m):
            data.extend(fb.row(i))
            data.extend([Fraction(0)] * gs_m)
        for i in range(gt_m):
            data.extend([Fraction(0)] * fs_m)
            data.extend(gb.row(i))
        blocks[gr] = Matrix(ft_m + gt_m, fs_m + gs_m, data)
    return GradedMorphism(src, tgt, blocks)


def direct_sum_with_maps(v, w):
    """(v (+) w, inj_v, inj_w, proj_v, proj_w); v's slots come first."""
    s = direct_sum_obj(v, w)
    inj_v, inj_w, proj_v, proj_w = {}, {}, {}, {}
    for g in s.mult:
        mv, mw = v.m(g), w.m(g)
        if mv:
            block = Matrix.identity(mv).vstack(Matrix.zeros(mw, mv))
            inj_v[g] = block
            proj_v[g] = block.transpose()
        if mw:
            block = Matrix.zeros(mv, mw).vstack(Matrix.identity(mw))
            inj_w[g] = block
            proj_w[g] = block.transpose()
    return (s,
            GradedMorphism(v, s, inj_v), GradedMorphism(w, s, inj_w),
            GradedMorphism(s, v, proj_v), GradedMorphism(s, w, proj_w))


def restriction_inclusion(v, grades):
    sub = restrict_grades(v, grades)
    return GradedMorphism(
        sub, v, {g: Matrix.identity(sub.mult[g]) for g in sub.mult})


def restriction_projection(v, grades):
    sub = restrict_grades(v, grades)
    return GradedMorphism(
        v, sub, {g: Matrix.identity(sub.mult[g]) for g in sub.mult})


# ---------------------------------------------------------------------------
# abelian structure

def kernel(f):
    """(kernel object, inclusion); canonical basis from the rref."""
    blocks, mult = {}, {}
    for g, m in f.source.mult.items():
        b = f.block(g)
        k = kernel_basis(b) if b is not None else Matrix.identity(m)
        if k.cols:
            mult[g] = k.cols
            blocks[g] = k
    ker = graded_object(f.source.cat, mult)
    return ker, GradedMorphism(ker, f.source, blocks)


def cokernel(f):
    """(cokernel object, projection); rows span the left null space."""
    blocks, mult = {}, {}
    for g, m in f.target.mult.items():
        b = f.block(g)
        if b is None:
            q = Matrix.identity(m)
        else:
            q = kernel_basis(b.transpose()).transpose()
        if q.rows:
            mult[g] = q.rows
            blocks[g] = q
    cok = graded_object(f.target.cat, mult)
    return cok, GradedMorphism(f.target, cok, blocks)


def image_factorization(f):
    """(psi, phi) with f = phi after psi, psi epi onto the image, phi mono.

    Per grade the rank factorization from the rref: B = B[:, pivots] @ R
    where R keeps the nonzero rows of rref(B).
    """
    psi, phi, mult = {}, {}, {}
    for g, b in f.blocks.items():
        r, pivots = b.rref()
        rank = len(pivots)
        if not rank:
            continue
        mult[g] = rank
        phi[g] = b.columns(list(pivots))
        psi[g] = Matrix(rank, b.cols, [x for i in range(rank)
                                       for x in r.row(i)])
    img = graded_object(f.source.cat, mult)
    return (GradedMorphism(f.source, img, psi),
            GradedMorphism(img, f.target, phi))


def hom_basis(v, w):
    """Matrix-unit basis of Hom(v, w), ordered by (grade, row, col)."""
    out = []
    for g in sorted(set(v.mult) & set(w.mult)):
        tm, sm = w.mult[g], v.mult[g]
        for r in range(tm):
            for c in range(sm):
                e = Matrix.zeros(tm, sm).tolist()
                e[r][c] = _ONE
                out.append(GradedMorphism(v, w, {g: Matrix.from_rows(e)}))
    return out


def decompose_simples(v):
    """[(grade, multiplicity)] sorted by grade enumeration."""
    return [(g, v.mult[g]) for g in v.grades()]


def is_mono(f):
    for g, m in f.source.mult.items():
        b = f.block(g)
        if b is None or b.rank() < m:
            return False
    return True


def is_epi(f):
    for g, m in f.target.mult.items():
        b = f.block(g)
        if b is None or b.rank() < m:
            return False
    return True


def is_iso(f):
    if f.source.mult != f.target.mult:
        return False
    return is_mono(f) and is_epi(f)


# ---------------------------------------------------------------------------
# duality

def left_dual(v):
    """(dual object, ev, coev) with ev: dual (x) v -> 1, coev: 1 -> v (x)
    dual; the zig-zag identities hold on the nose."""
    cat = v.cat
    d = dual_obj(v)
    unit = unit_object(cat)
    ev_blocks = {}
    dxv = tensor_obj(d, v)
    slots = _tensor_slots(d, v)
    for e in cat.identity_grades:
        cols = slots.get(e)
        if not cols:
            continue
        row = [Fraction(0)] * len(cols)
        for cpos, (_, g1, i, g2, j) in enumerate(cols):
            if d.layout[g1][i] == _star_word(cat, v.layout[g2][j]):
                row[cpos] = _ONE
        ev_blocks[e] = Matrix(1, len(cols), row)
    ev = GradedMorphism(dxv, unit, ev_blocks)
    vxd = tensor_obj(v, d)
    slots = _tensor_slots(v, d)
    coev_blocks = {}
    for e in cat.identity_grades:
        rows = slots.get(e)
        if not rows:
            continue
        col = [Fraction(0)] * len(rows)
        for rpos, (_, g1, i, g2, j) in enumerate(rows):
            if d.layout[g2][j] == _star_word(cat, v.layout[g1][i]):
                col[rpos] = _ONE
        coev_blocks[e] = Matrix(len(rows), 1, col)
    coev = GradedMorphism(unit, vxd, coev_blocks)
    return d, ev, coev


def dual_morphism(f):
    """Transpose along duality: dual(target) -> dual(source)."""
    cat = f.source.cat
    ds, dt = dual_obj(f.source), dual_obj(f.target)
    inv = cat.inverse_of
    blocks = {}
    for g in ds.mult:
        if dt.m(g) == 0:
            continue
        b = f.block(inv[g])
        if b is None:
            continue
        # row r of the dual block: slot r of dual(source) at g, which is the
        # starred word of some source slot at inv(g); same for columns
        src_pos = {word: i for i, word in enumerate(f.source.layout[inv[g]])}
        tgt_pos = {word: i for i, word in enumerate(f.target.layout[inv[g]])}
        data = []
        for wr in ds.layout[g]:
            orig_r = src_pos[_star_word(cat, wr)]
            row = []
            for wc in dt.layout[g]:
                row.append(b[tgt_pos[_star_word(cat, wc)], orig_r])
            data.append(row)
        blocks[g] = Matrix.from_rows(data)
    return GradedMorphism(dt, ds, blocks)


# ---------------------------------------------------------------------------
# JSON forms

def object_to_spec(v):
    return {"mult": {str(g): v.mult[g] for g in v.grades()}}


def object_from_spec(cat, doc):
    from .errors import SpecError
    try:
        mult = {int(g): int(m) for g, m in doc["mult"].items()}
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise SpecError("bad object spec: %s" % exc) from exc
    if any(m < 0 for m in mult.values()):
        raise SpecError("negative multiplicity")
    if any(not (0 <= g < cat.morphism_count) for g in mult):
        raise SpecError("grade out of range")
    return graded_object(cat, mult)


def morphism_to_spec(f):
    blocks = {}
    for g in sorted(f.blocks):
        blocks[str(g)] = [[rat_str(x) for x in f.blocks[g].row(i)]
                          for i in range(f.blocks[g].rows)]
    return {"source": object_to_spec(f.source),
            "target": object_to_spec(f.target),
            "blocks": blocks}


def morphism_from_spec(cat, doc):
    from .errors import SpecError
    source = object_from_spec(cat, doc["source"])
    target = object_from_spec(cat, doc["target"])
    blocks = {}
    try:
        for g, rows in doc.get("blocks", {}).items():
            g = int(g)
            blocks[g] = Matrix.from_rows(
                [[parse_rat(x) for x in row] for row in rows])
    except (TypeError, ValueError) as exc:
        raise SpecError("bad morphism blocks: %s" % exc) from exc
    try:
        return GradedMorphism(source, target, blocks)
    except ShapeError as exc:
        raise SpecError(str(exc)) from exc
