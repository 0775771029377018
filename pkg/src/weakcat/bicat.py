"""Finite bicategories: representation, exhaustive coherence checking,
weak functors, equivalence 1-cells, and the canonical coherence
isomorphisms between iterated composites.

1-cell and 2-cell identifiers are globally unique (hom-categories
partition them).  ``hcomp_obj[(g, f)]`` is the composite ``g o f`` for
``f: a -> b``, ``g: b -> c``; ``hcomp_arr`` is horizontal composition of
2-cells.  Coherence cells are arrows of the relevant hom-categories.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .report import StructuralError, ValidationReport
from .cat import FiniteCategory, validate_category
from .gset import StrictNCat
from . import trees as tr


@dataclass(frozen=True)
class FiniteBicategory:
    objects: tuple[str, ...]
    hom: dict[tuple[str, str], FiniteCategory]
    ident: dict[str, str]
    hcomp_obj: dict[tuple[str, str], str]
    hcomp_arr: dict[tuple[str, str], str]
    assoc: dict[tuple[str, str, str], str]
    lunit: dict[str, str]
    runit: dict[str, str]

    def __post_init__(self):
        owners_1: dict[str, tuple[str, str]] = {}
        owners_2: dict[str, tuple[str, str]] = {}
        for (a, b), cat in self.hom.items():
            for f in cat.objects:
                if f in owners_1:
                    raise StructuralError(f"1-cell id {f!r} reused across homs")
                owners_1[f] = (a, b)
            for x in cat.arrows:
                if x in owners_2:
                    raise StructuralError(f"2-cell id {x!r} reused across homs")
                owners_2[x] = (a, b)
        object.__setattr__(self, "_owner1", owners_1)
        object.__setattr__(self, "_owner2", owners_2)

    # -- lookups ------------------------------------------------------------

    def endpoints1(self, f: str) -> tuple[str, str]:
        if f not in self._owner1:
            raise StructuralError(f"unknown 1-cell {f!r}")
        return self._owner1[f]

    def endpoints2(self, x: str) -> tuple[str, str]:
        if x not in self._owner2:
            raise StructuralError(f"unknown 2-cell {x!r}")
        return self._owner2[x]

    def hom_of_1cell(self, f: str) -> FiniteCategory:
        return self.hom[self.endpoints1(f)]

    def hom_of_2cell(self, x: str) -> FiniteCategory:
        return self.hom[self.endpoints2(x)]

    def one_cells(self):
        for (a, b), cat in self.hom.items():
            yield from cat.objects

    def two_cells(self):
        for (a, b), cat in self.hom.items():
            yield from cat.arrows

    def src2(self, x: str) -> str:
        return self.hom_of_2cell(x).src[x]

    def tgt2(self, x: str) -> str:
        return self.hom_of_2cell(x).tgt[x]

    def id2(self, f: str) -> str:
        return self.hom_of_1cell(f).ident[f]

    def vcomp(self, beta: str, alpha: str) -> str:
        cat = self.hom_of_2cell(alpha)
        return cat.compose(beta, alpha)

    def vcomp_chain(self, chain: list[str], at_1cell: str | None = None) -> str:
        if not chain:
            if at_1cell is None:
                raise StructuralError("empty vertical chain needs a 1-cell")
            return self.id2(at_1cell)
        out = chain[0]
        for x in chain[1:]:
            out = self.vcomp(x, out)
        return out

    def hcomp1(self, g: str, f: str) -> str:
        if (g, f) not in self.hcomp_obj:
            raise StructuralError(f"horizontal composite undefined on ({g!r},{f!r})")
        return self.hcomp_obj[(g, f)]

    def hcomp2(self, beta: str, alpha: str) -> str:
        if (beta, alpha) not in self.hcomp_arr:
            raise StructuralError(f"horizontal composite undefined on ({beta!r},{alpha!r})")
        return self.hcomp_arr[(beta, alpha)]

    def whisker_l(self, g: str, alpha: str) -> str:
        """1_g * alpha."""
        return self.hcomp2(self.id2(g), alpha)

    def whisker_r(self, beta: str, f: str) -> str:
        """beta * 1_f."""
        return self.hcomp2(beta, self.id2(f))

    def inverse2(self, x: str) -> str | None:
        return self.hom_of_2cell(x).inverse(x)

    def is_iso2(self, x: str) -> bool:
        return self.inverse2(x) is not None


def validate_bicategory(b: FiniteBicategory) -> ValidationReport:
    report = ValidationReport("bicategory")
    # hom categories individually valid
    for (x, y), cat in b.hom.items():
        sub = validate_category(cat)
        for v in sub.violations:
            report.add("hom-category", (x, y) + v.witness, v.clause)
    if not report.ok:
        return report
    for a in b.objects:
        if (a, a) not in b.hom or b.ident.get(a) not in b.hom[(a, a)].objects:
            report.add("structural", (a,), "missing identity 1-cell")
            return report

    pairs = [(g, f) for f in b.one_cells() for g in b.one_cells()
             if b.endpoints1(g)[0] == b.endpoints1(f)[1]]
    for g, f in pairs:
        gf = b.hcomp_obj.get((g, f))
        a, _ = b.endpoints1(f)
        _, c = b.endpoints1(g)
        if gf is None or gf not in b.hom[(a, c)].objects:
            report.add("structural", (g, f), "missing or misplaced composite")
    if not report.ok:
        return report

    def comp2able(beta, alpha):
        fa, fb = b.endpoints2(alpha)
        ga, gb = b.endpoints2(beta)
        return fb == ga

    pairs2 = [(beta, alpha) for alpha in b.two_cells() for beta in b.two_cells()
              if comp2able(beta, alpha)]
    for beta, alpha in pairs2:
        val = b.hcomp_arr.get((beta, alpha))
        if val is None:
            report.add("structural", (beta, alpha), "missing horizontal composite")
            continue
        want_src = b.hcomp_obj[(b.src2(beta), b.src2(alpha))]
        want_tgt = b.hcomp_obj[(b.tgt2(beta), b.tgt2(alpha))]
        if b.src2(val) != want_src or b.tgt2(val) != want_tgt:
            report.add("structural", (beta, alpha, val), "composite endpoints wrong")
    if not report.ok:
        return report

    # functoriality of horizontal composition: identities and interchange
    for g, f in pairs:
        if b.hcomp2(b.id2(g), b.id2(f)) != b.id2(b.hcomp1(g, f)):
            report.add("functoriality-of-hcomp", (g, f), "identity 2-cells")
    for beta, alpha in pairs2:
        cat_a = b.hom_of_2cell(alpha)
        cat_b = b.hom_of_2cell(beta)
        for alpha2 in cat_a.arrows:
            if cat_a.src[alpha2] != cat_a.tgt[alpha]:
                continue
            for beta2 in cat_b.arrows:
                if cat_b.src[beta2] != cat_b.tgt[beta]:
                    continue
                lhs = b.hcomp2(b.vcomp(beta2, beta), b.vcomp(alpha2, alpha))
                rhs = b.vcomp(b.hcomp2(beta2, alpha2), b.hcomp2(beta, alpha))
                if lhs != rhs:
                    report.add("functoriality-of-hcomp",
                               (beta2, beta, alpha2, alpha), "interchange")

    # coherence cells exist, are isos, are correctly typed
    triples = [(h, g, f) for f in b.one_cells() for g in b.one_cells()
               for h in b.one_cells()
               if b.endpoints1(g)[0] == b.endpoints1(f)[1]
               and b.endpoints1(h)[0] == b.endpoints1(g)[1]]
    for h, g, f in triples:
        xi = b.assoc.get((h, g, f))
        lhs = b.hcomp1(b.hcomp1(h, g), f)
        rhs = b.hcomp1(h, b.hcomp1(g, f))
        if xi is None or b.src2(xi) != lhs or b.tgt2(xi) != rhs:
            report.add("structural", (h, g, f), "associator missing or mistyped")
            continue
        if not b.is_iso2(xi):
            report.add("not-iso", (h, g, f), "associator")
    for f in b.one_cells():
        a, c = b.endpoints1(f)
        lam, rho = b.lunit.get(f), b.runit.get(f)
        if lam is None or b.src2(lam) != b.hcomp1(b.ident[c], f) or b.tgt2(lam) != f:
            report.add("structural", (f,), "left unitor missing or mistyped")
        elif not b.is_iso2(lam):
            report.add("not-iso", (f,), "left unitor")
        if rho is None or b.src2(rho) != b.hcomp1(f, b.ident[a]) or b.tgt2(rho) != f:
            report.add("structural", (f,), "right unitor missing or mistyped")
        elif not b.is_iso2(rho):
            report.add("not-iso", (f,), "right unitor")
    if {"structural"} & report.clauses():
        return report

    # naturality
    for h, g, f in triples:
        cat_f, cat_g, cat_h = b.hom_of_1cell(f), b.hom_of_1cell(g), b.hom_of_1cell(h)
        for alpha in cat_f.arrows:
            if cat_f.src[alpha] != f:
                continue
            for beta in cat_g.arrows:
                if cat_g.src[beta] != g:
                    continue
                for gamma in cat_h.arrows:
                    if cat_h.src[gamma] != h:
                        continue
                    f2, g2, h2 = cat_f.tgt[alpha], cat_g.tgt[beta], cat_h.tgt[gamma]
                    lhs = b.vcomp(b.assoc[(h2, g2, f2)],
                                  b.hcomp2(b.hcomp2(gamma, beta), alpha))
                    rhs = b.vcomp(b.hcomp2(gamma, b.hcomp2(beta, alpha)),
                                  b.assoc[(h, g, f)])
                    if lhs != rhs:
                        report.add("naturality", (h, g, f, gamma, beta, alpha),
                                   "associator")
    for f in b.one_cells():
        a, c = b.endpoints1(f)
        cat = b.hom_of_1cell(f)
        for alpha in cat.arrows:
            if cat.src[alpha] != f:
                continue
            f2 = cat.tgt[alpha]
            if b.vcomp(b.lunit[f2], b.whisker_l(b.ident[c], alpha)) != \
                    b.vcomp(alpha, b.lunit[f]):
                report.add("naturality", (f, alpha), "left unitor")
            if b.vcomp(b.runit[f2], b.whisker_r(alpha, b.ident[a])) != \
                    b.vcomp(alpha, b.runit[f]):
                report.add("naturality", (f, alpha), "right unitor")

    # pentagon
    quads = [(k, h, g, f) for (h, g, f) in triples for k in b.one_cells()
             if b.endpoints1(k)[0] == b.endpoints1(h)[1]]
    for k, h, g, f in quads:
        gf = b.hcomp1(g, f)
        kh = b.hcomp1(k, h)
        hg = b.hcomp1(h, g)
        lhs = b.vcomp(b.assoc[(k, h, gf)], b.assoc[(kh, g, f)])
        rhs = b.vcomp_chain([
            b.whisker_r(b.assoc[(k, h, g)], f),
            b.assoc[(k, hg, f)],
            b.whisker_l(k, b.assoc[(h, g, f)]),
        ])
        if lhs != rhs:
            report.add("pentagon", (k, h, g, f))

    # triangle
    for g, f in pairs:
        bmid = b.endpoints1(f)[1]
        lhs = b.whisker_r(b.runit[g], f)
        rhs = b.vcomp(b.whisker_l(g, b.lunit[f]), b.assoc[(g, b.ident[bmid], f)])
        if lhs != rhs:
            report.add("triangle", (g, f))
    return report


def is_equivalence_1cell(b: FiniteBicategory, f: str) -> tuple[bool, str | None]:
    a, c = b.endpoints1(f)
    for g in b.hom[(c, a)].objects:
        gf = b.hcomp1(g, f)
        fg = b.hcomp1(f, g)
        left = any(b.is_iso2(x) for x in _homset_arrows(b, gf, b.ident[a]))
        right = any(b.is_iso2(x) for x in _homset_arrows(b, fg, b.ident[c]))
        if left and right:
            return True, g
    return False, None


def _homset_arrows(b: FiniteBicategory, f: str, g: str):
    cat = b.hom_of_1cell(f)
    return [x for x in cat.arrows if cat.src[x] == f and cat.tgt[x] == g]


# -- iterated composites and coherence isomorphisms --------------------------

def path_objects(b: FiniteBicategory, path: tuple[str, ...], base: str | None) -> list[str]:
    if not path:
        if base is None:
            raise StructuralError("empty path needs a base object")
        return [base]
    objs = [b.endpoints1(path[0])[0]]
    for f in path:
        a, c = b.endpoints1(f)
        if a != objs[-1]:
            raise StructuralError(f"path breaks at {f!r}")
        objs.append(c)
    return objs


def rn_composite(b: FiniteBicategory, path: tuple[str, ...], base: str | None = None) -> str:
    """The canonical right-nested composite f_k o (f_{k-1} o ... o f_1);
    the identity 1-cell for an empty path."""
    objs = path_objects(b, path, base)
    if not path:
        return b.ident[objs[0]]
    out = path[0]
    for f in path[1:]:
        out = b.hcomp1(f, out)
    return out


def rn_composite2(b: FiniteBicategory, cells: tuple[str, ...], base: str | None = None) -> str:
    """Right-nested horizontal composite of 2-cells; identity 2-cell of the
    identity 1-cell for the empty tuple."""
    if not cells:
        return b.id2(b.ident[base])
    out = cells[0]
    for x in cells[1:]:
        out = b.hcomp2(x, out)
    return out


def tree_composite(b: FiniteBicategory, tree, path: tuple[str, ...],
                   base: str | None = None) -> str:
    """Evaluate a planar tree as an iterated composite of the path.

    Leaves consume path entries left to right; an arity-0 vertex inserts
    the identity 1-cell at its position; an arity-r vertex composes its
    children right-nestedly.
    """
    objs = path_objects(b, path, base)

    def go(node, lo: int, hi: int) -> str:
        if tr.is_leaf(node):
            if hi != lo + 1:
                raise StructuralError("leaf does not match one path entry")
            return path[lo]
        vals = []
        pos = lo
        for child in node:
            width = tr.leaves(child)
            vals.append(go(child, pos, pos + width))
            pos += width
        if not vals:
            return b.ident[objs[lo]]
        out = vals[0]
        for v in vals[1:]:
            out = b.hcomp1(v, out)
        return out

    return go(tree, 0, len(path))


def tree_composite2(b: FiniteBicategory, tree, cells: tuple[str, ...],
                    base: str | None = None) -> str:
    """The same tree acting on a tuple of 2-cells (the functor on arrows)."""
    if base is None and cells:
        base = b.endpoints2(cells[0])[0]
    objs = None
    if not cells:
        objs = [base]

    def go(node, lo: int, hi: int) -> str:
        if tr.is_leaf(node):
            return cells[lo]
        vals = []
        pos = lo
        for child in node:
            width = tr.leaves(child)
            vals.append(go(child, pos, pos + width))
            pos += width
        if not vals:
            if cells:
                at = b.endpoints2(cells[lo])[0] if lo < len(cells) else b.endpoints2(cells[lo - 1])[1]
            else:
                at = base
            return b.id2(b.ident[at])
        out = vals[0]
        for v in vals[1:]:
            out = b.hcomp2(v, out)
        return out

    return go(tree, 0, len(cells))


def iso_to_rn(b: FiniteBicategory, tree, path: tuple[str, ...],
              base: str | None = None) -> str:
    """Canonical coherence 2-cell tree_composite -> rn_composite, built
    from associators and unitors.  Identity throughout a strict structure."""
    objs = path_objects(b, path, base)

    def go(node, lo: int, hi: int) -> str:
        segment = path[lo:hi]
        if tr.is_leaf(node):
            return b.id2(path[lo])
        spans = []
        pos = lo
        for child in node:
            width = tr.leaves(child)
            spans.append((child, pos, pos + width))
            pos += width
        child_isos = [go(c, s, e) for (c, s, e) in spans]
        # step 1: normalize the children in place
        if child_isos:
            step1 = child_isos[0]
            for iso in child_isos[1:]:
                step1 = b.hcomp2(iso, step1)
        else:
            step1 = b.id2(b.ident[objs[lo]])
        # step 2: flatten the right-nested composite of blocks
        blocks = [path[s:e] for (_, s, e) in spans]
        block_bases = [objs[s] for (_, s, e) in spans]
        step2 = _flatten_iso(b, blocks, block_bases, objs[lo])
        return b.vcomp(step2, step1)

    return go(tree, 0, len(path))


def _flatten_iso(b: FiniteBicategory, blocks: list[tuple[str, ...]],
                 bases: list[str], base0: str) -> str:
    """Iso rn(rn(B_1), ..., rn(B_r)) -> rn(B_1 ++ ... ++ B_r)."""
    if not blocks:
        # rn of no blocks is 1_a = rn of the empty path
        return b.id2(b.ident[base0])
    if len(blocks) == 1:
        return b.id2(rn_composite(b, blocks[0], bases[0]))
    prefix = blocks[:-1]
    last = blocks[-1]
    rec = _flatten_iso(b, prefix, bases[:-1], base0)
    rn_last = rn_composite(b, last, bases[-1])
    step1 = b.hcomp2(b.id2(rn_last), rec)
    concat_prefix: tuple[str, ...] = ()
    for blk in prefix:
        concat_prefix = concat_prefix + blk
    c_cell = rn_composite(b, concat_prefix, base0)
    step2 = _merge_iso(b, last, bases[-1], c_cell, concat_prefix, base0)
    return b.vcomp(step2, step1)


def _merge_iso(b: FiniteBicategory, block: tuple[str, ...], block_base: str,
               c_cell: str, prefix: tuple[str, ...], base0: str) -> str:
    """Iso rn(block) o C -> rn(prefix ++ block), where C = rn(prefix)."""
    if not block:
        return b.lunit[c_cell]
    if len(block) == 1:
        if not prefix:
            # rn of the singleton drops the identity factor
            return b.runit[block[0]]
        return b.id2(b.hcomp1(block[0], c_cell))
    g_last = block[-1]
    rn_rest = rn_composite(b, block[:-1], block_base)
    xi = b.assoc[(g_last, rn_rest, c_cell)]
    inner = _merge_iso(b, block[:-1], block_base, c_cell, prefix, base0)
    return b.vcomp(b.hcomp2(b.id2(g_last), inner), xi)


def coherence_iso(b: FiniteBicategory, tree_from, tree_to,
                  path: tuple[str, ...], base: str | None = None) -> str:
    """The canonical iso between two tree-composites of one path."""
    down = iso_to_rn(b, tree_from, path, base)
    up = iso_to_rn(b, tree_to, path, base)
    up_inv = b.inverse2(up)
    if up_inv is None:
        raise StructuralError("coherence cell not invertible; structure invalid")
    return b.vcomp(up_inv, down)


def paste_columns(b: FiniteBicategory, heights: tuple[int, ...], columns: tuple,
                  base: str | None = None) -> str:
    """Composite 2-cell of a labelled 2-pasting diagram in column normal
    form: rn(source path) -> rn(target path)."""
    cells = []
    for h, col in zip(heights, columns):
        if h == 0:
            cells.append(b.id2(col))
        else:
            cells.append(b.vcomp_chain(list(col)))
    return rn_composite2(b, tuple(cells), base)


# -- constructions -----------------------------------------------------------

def from_strict_2cat(s: StrictNCat) -> FiniteBicategory:
    """Embed a strict 2-category with identity coherence cells."""
    if s.n != 2:
        raise StructuralError("need a strict 2-category")
    g = s.gset
    homs: dict[tuple[str, str], FiniteCategory] = {}
    for a in g.cells[0]:
        for c in g.cells[0]:
            objs = tuple(f for f in g.cells[1]
                         if g.src[1][f] == a and g.tgt[1][f] == c)
            arrs = tuple(x for x in g.cells[2] if g.src[1][g.src[2][x]] == a
                         and g.tgt[1][g.src[2][x]] == c)
            comp = {(y, x): v for (y, x), v in s.comp[(2, 1)].items() if x in arrs}
            homs[(a, c)] = FiniteCategory(
                objects=objs, arrows=arrs,
                src={x: g.src[2][x] for x in arrs},
                tgt={x: g.tgt[2][x] for x in arrs},
                comp=comp,
                ident={f: s.ids[1][f] for f in objs},
            )
    b = FiniteBicategory(
        objects=tuple(g.cells[0]),
        hom=homs,
        ident=dict(s.ids[0]),
        hcomp_obj=dict(s.comp[(1, 0)]),
        hcomp_arr=dict(s.comp[(2, 0)]),
        assoc={}, lunit={}, runit={},
    )
    assoc = {}
    for f in b.one_cells():
        for gg in b.one_cells():
            if b.endpoints1(gg)[0] != b.endpoints1(f)[1]:
                continue
            for h in b.one_cells():
                if b.endpoints1(h)[0] != b.endpoints1(gg)[1]:
                    continue
                assoc[(h, gg, f)] = b.id2(b.hcomp1(b.hcomp1(h, gg), f))
    lunit = {f: b.id2(f) for f in b.one_cells()}
    runit = {f: b.id2(f) for f in b.one_cells()}
    return FiniteBicategory(b.objects, b.hom, b.ident, b.hcomp_obj,
                            b.hcomp_arr, assoc, lunit, runit)


def strictness_holds(b: FiniteBicategory) -> bool:
    """All coherence cells are identity 2-cells."""
    ok = all(x == b.id2(b.src2(x)) for x in b.assoc.values())
    ok = ok and all(x == b.id2(b.tgt2(x)) for x in b.lunit.values())
    return ok and all(x == b.id2(b.tgt2(x)) for x in b.runit.values())


def to_strict_2cat(b: FiniteBicategory) -> StrictNCat:
    """Read strict 2-category tables off a bicategory whose coherence cells
    are identities."""
    from .gset import FiniteGlobularSet

    if not strictness_holds(b):
        raise StructuralError("coherence cells are not identities")
    ones = tuple(b.one_cells())
    twos = tuple(b.two_cells())
    g = FiniteGlobularSet(
        n=2,
        cells={0: tuple(b.objects), 1: ones, 2: twos},
        src={1: {f: b.endpoints1(f)[0] for f in ones},
             2: {x: b.src2(x) for x in twos}},
        tgt={1: {f: b.endpoints1(f)[1] for f in ones},
             2: {x: b.tgt2(x) for x in twos}},
    )
    comp21 = {}
    for (a, c), cat in b.hom.items():
        comp21.update(cat.comp)
    comp = {(1, 0): dict(b.hcomp_obj), (2, 0): dict(b.hcomp_arr), (2, 1): comp21}
    ids = {0: dict(b.ident), 1: {f: b.id2(f) for f in ones}}
    return StrictNCat(g, comp, ids)


@dataclass(frozen=True)
class WeakFunctorData:
    source: FiniteBicategory
    target: FiniteBicategory
    on_objects: dict[str, str]
    on_1cells: dict[str, str]
    on_2cells: dict[str, str]
    comp_cells: dict[tuple[str, str], str]   # (g, f) -> Fg o Ff -> F(g o f)
    unit_cells: dict[str, str]               # a -> 1_{Fa} -> F(1_a)


def validate_weak_functor(F: WeakFunctorData) -> ValidationReport:
    report = ValidationReport("weak-functor")
    b, d = F.source, F.target
    for f in b.one_cells():
        a, c = b.endpoints1(f)
        ff = F.on_1cells.get(f)
        if ff is None or d.endpoints1(ff) != (F.on_objects[a], F.on_objects[c]):
            report.add("structural", (f,), "1-cell image misplaced")
    for x in b.two_cells():
        xx = F.on_2cells.get(x)
        if xx is None or d.src2(xx) != F.on_1cells[b.src2(x)] \
                or d.tgt2(xx) != F.on_1cells[b.tgt2(x)]:
            report.add("structural", (x,), "2-cell image misplaced")
    if not report.ok:
        return report
    # hom functors
    for f in b.one_cells():
        if F.on_2cells[b.id2(f)] != d.id2(F.on_1cells[f]):
            report.add("hom-functor", (f,), "identity 2-cell not preserved")
    for (a, c), cat in b.hom.items():
        for (y, x), v in cat.comp.items():
            if F.on_2cells[v] != d.vcomp(F.on_2cells[y], F.on_2cells[x]):
                report.add("hom-functor", (y, x), "vertical composition")
    # comparison cells: placement and invertibility
    pairs = [(g, f) for f in b.one_cells() for g in b.one_cells()
             if b.endpoints1(g)[0] == b.endpoints1(f)[1]]
    for g, f in pairs:
        phi = F.comp_cells.get((g, f))
        want_src = d.hcomp1(F.on_1cells[g], F.on_1cells[f])
        want_tgt = F.on_1cells[b.hcomp1(g, f)]
        if phi is None or d.src2(phi) != want_src or d.tgt2(phi) != want_tgt:
            report.add("structural", (g, f), "comparison cell misplaced")
        elif not d.is_iso2(phi):
            report.add("not-iso", (g, f), "comparison cell")
    for a in b.objects:
        phi = F.unit_cells.get(a)
        if phi is None or d.src2(phi) != d.ident[F.on_objects[a]] \
                or d.tgt2(phi) != F.on_1cells[b.ident[a]]:
            report.add("structural", (a,), "unit comparison misplaced")
        elif not d.is_iso2(phi):
            report.add("not-iso", (a,), "unit comparison")
    if report.clauses() & {"structural", "not-iso"}:
        return report
    # naturality of the comparison cells
    for g, f in pairs:
        cat_f, cat_g = b.hom_of_1cell(f), b.hom_of_1cell(g)
        for alpha in cat_f.arrows:
            if cat_f.src[alpha] != f:
                continue
            for beta in cat_g.arrows:
                if cat_g.src[beta] != g:
                    continue
                f2, g2 = cat_f.tgt[alpha], cat_g.tgt[beta]
                lhs = d.vcomp(F.on_2cells[b.hcomp2(beta, alpha)], F.comp_cells[(g, f)])
                rhs = d.vcomp(F.comp_cells[(g2, f2)],
                              d.hcomp2(F.on_2cells[beta], F.on_2cells[alpha]))
                if lhs != rhs:
                    report.add("coherence", (g, f, beta, alpha), "naturality")
    # hexagon
    triples = [(h, g, f) for (g, f) in pairs for h in b.one_cells()
               if b.endpoints1(h)[0] == b.endpoints1(g)[1]]
    for h, g, f in triples:
        Fh, Fg, Ff = F.on_1cells[h], F.on_1cells[g], F.on_1cells[f]
        lhs = d.vcomp_chain([
            d.assoc[(Fh, Fg, Ff)],
            d.hcomp2(d.id2(Fh), F.comp_cells[(g, f)]),
            F.comp_cells[(h, b.hcomp1(g, f))],
        ])
        rhs = d.vcomp_chain([
            d.hcomp2(F.comp_cells[(h, g)], d.id2(Ff)),
            F.comp_cells[(b.hcomp1(h, g), f)],
            F.on_2cells[b.assoc[(h, g, f)]],
        ])
        if lhs != rhs:
            report.add("coherence", (h, g, f), "hexagon")
    # unit squares
    for f in b.one_cells():
        a, c = b.endpoints1(f)
        Ff = F.on_1cells[f]
        lhs = d.vcomp_chain([
            d.hcomp2(F.unit_cells[c], d.id2(Ff)),
            F.comp_cells[(b.ident[c], f)],
            F.on_2cells[b.lunit[f]],
        ])
        if lhs != d.lunit[Ff]:
            report.add("coherence", (f,), "left unit square")
        rhs = d.vcomp_chain([
            d.hcomp2(d.id2(Ff), F.unit_cells[a]),
            F.comp_cells[(f, b.ident[a])],
            F.on_2cells[b.runit[f]],
        ])
        if rhs != d.runit[Ff]:
            report.add("coherence", (f,), "right unit square")
    return report


def identity_weak_functor(b: FiniteBicategory) -> WeakFunctorData:
    pairs = [(g, f) for f in b.one_cells() for g in b.one_cells()
             if b.endpoints1(g)[0] == b.endpoints1(f)[1]]
    return WeakFunctorData(
        source=b, target=b,
        on_objects={a: a for a in b.objects},
        on_1cells={f: f for f in b.one_cells()},
        on_2cells={x: x for x in b.two_cells()},
        comp_cells={(g, f): b.id2(b.hcomp1(g, f)) for g, f in pairs},
        unit_cells={a: b.id2(b.ident[a]) for a in b.objects},
    )


def one_object_monoidal_tables(b: FiniteBicategory):
    """The monoidal-category reading of a one-object bicategory: object
    set, tensor, unit, associator, unitors.  Raises on |B0| != 1."""
    if len(b.objects) != 1:
        raise StructuralError("monoidal reading needs exactly one 0-cell")
    star = b.objects[0]
    cat = b.hom[(star, star)]
    return {
        "objects": cat.objects,
        "tensor_obj": b.hcomp_obj,
        "tensor_arr": b.hcomp_arr,
        "unit": b.ident[star],
        "assoc": b.assoc,
        "lunit": b.lunit,
        "runit": b.runit,
        "hom": cat,
    }


def underlying_reflexive_gset(b: FiniteBicategory):
    """The cells of a bicategory as a reflexive 2-globular set."""
    from .gset import FiniteGlobularSet, ReflexiveGlobularSet

    ones = tuple(b.one_cells())
    twos = tuple(b.two_cells())
    g = FiniteGlobularSet(
        n=2,
        cells={0: tuple(b.objects), 1: ones, 2: twos},
        src={1: {f: b.endpoints1(f)[0] for f in ones},
             2: {x: b.src2(x) for x in twos}},
        tgt={1: {f: b.endpoints1(f)[1] for f in ones},
             2: {x: b.tgt2(x) for x in twos}},
    )
    return ReflexiveGlobularSet(
        g, {0: dict(b.ident), 1: {f: b.id2(f) for f in ones}})
