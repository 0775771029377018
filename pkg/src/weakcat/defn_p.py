"""Two-dimensional magmas, contraction quadruples, the bounded free
construction, and the associated weak-2-category condition.

A magma has all the composition tables of a strict 2-category but only
the endpoint axioms.  A quadruple (M, S, pi, gamma) pairs a magma with a
strict structure along a projection, lifting parallel pairs with equal
image; the free quadruple on a reflexive globular set is built from
formal composition terms.  The weak-2-category condition is phrased on
evaluation maps of bounded terms, where every pair of parallel composite
2-cells with the same projected shape is forced equal (the coherence-
forcing equality one dimension up).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .report import StructuralError, ValidationReport
from .gset import (FiniteGlobularSet, ReflexiveGlobularSet, StrictNCat,
                   validate_reflexive, validate_strict_ncat)
from .bicat import FiniteBicategory, coherence_iso, tree_composite
from . import trees as tr


@dataclass
class OmegaMagma2:
    refl: ReflexiveGlobularSet
    comp: dict[tuple[int, int], dict]   # (1,0), (2,0), (2,1)

    @property
    def gset(self):
        return self.refl.base


def validate_magma(m: OmegaMagma2, allow_partial: bool = False) -> ValidationReport:
    """Endpoint axioms only: sources and targets of composites, identity
    endpoints.  No associativity, units, or interchange."""
    report = validate_reflexive(m.refl)
    report.checker = "omega-magma"
    g = m.gset
    if not report.ok:
        return report
    for (mm, p) in ((1, 0), (2, 0), (2, 1)):
        table = m.comp.get((mm, p), {})
        for b, a in _composable(g, mm, p):
            if (b, a) not in table:
                if not allow_partial:
                    report.add("comp-missing", (mm, p, b, a))
                continue
            x = table[(b, a)]
            if mm == p + 1:
                if g.s(mm, x) != g.s(mm, a) or g.t(mm, x) != g.t(mm, b):
                    report.add("endpoints", (mm, p, b, a, x))
            else:
                sa = m.comp.get((1, 0), {}).get((g.s(mm, b), g.s(mm, a)))
                ta = m.comp.get((1, 0), {}).get((g.t(mm, b), g.t(mm, a)))
                if sa is not None and g.s(mm, x) != sa:
                    report.add("endpoints", (mm, p, b, a, x))
                if ta is not None and g.t(mm, x) != ta:
                    report.add("endpoints", (mm, p, b, a, x))
    return report


def _composable(g: FiniteGlobularSet, m: int, p: int):
    for b, a in product(g.cells[m], g.cells[m]):
        if g.iter_src(m, b, m - p) == g.iter_tgt(m, a, m - p):
            yield b, a


@dataclass
class MagmaMap:
    source: OmegaMagma2
    target: OmegaMagma2
    levels: dict[int, dict]


def validate_magma_map(f: MagmaMap, allow_partial: bool = False) -> ValidationReport:
    report = ValidationReport("magma-map")
    gs, gt = f.source.gset, f.target.gset
    for m in range(3):
        for x in gs.cells[m]:
            if f.levels.get(m, {}).get(x) not in gt.cells[m]:
                report.add("structural", (m, x), "level map dangles")
    if not report.ok:
        return report
    for m in (1, 2):
        for x in gs.cells[m]:
            if gt.s(m, f.levels[m][x]) != f.levels[m - 1][gs.s(m, x)]:
                report.add("boundaries", (m, x))
            if gt.t(m, f.levels[m][x]) != f.levels[m - 1][gs.t(m, x)]:
                report.add("boundaries", (m, x))
    for m in (0, 1):
        for x in gs.cells[m]:
            if f.levels[m + 1][f.source.refl.ids[m][x]] != \
                    f.target.refl.ids[m][f.levels[m][x]]:
                report.add("identities", (m, x))
    for key, table in f.source.comp.items():
        mm = key[0]
        for (b, a), v in table.items():
            img = f.target.comp.get(key, {}).get(
                (f.levels[mm][b], f.levels[mm][a]))
            if img is None:
                if not allow_partial:
                    report.add("composition", (key, b, a), "image undefined")
                continue
            if img != f.levels[mm][v]:
                report.add("composition", (key, b, a))
    return report


@dataclass
class QObject:
    M: OmegaMagma2
    S: StrictNCat
    pi: MagmaMap
    gamma: dict[int, dict]   # gamma[m][(f0, f1)] -> M-cell at m+1, m in {0, 1}


def _v_pairs(m: OmegaMagma2, pi: MagmaMap, level: int):
    g = m.gset
    for f0 in g.cells[level]:
        for f1 in g.cells[level]:
            if level >= 1 and (g.s(level, f0) != g.s(level, f1)
                               or g.t(level, f0) != g.t(level, f1)):
                continue
            if pi.levels[level][f0] == pi.levels[level][f1]:
                yield f0, f1


def validate_q_object(q: QObject, allow_partial: bool = False) -> ValidationReport:
    report = validate_magma(q.M, allow_partial)
    report.checker = "quadruple"
    s_report = validate_strict_ncat(q.S, allow_partial=allow_partial)
    for v in s_report.violations:
        report.add("strict-part", v.witness, v.clause)
    pi_report = validate_magma_map(q.pi, allow_partial)
    for v in pi_report.violations:
        report.add("projection", v.witness, v.clause)
    if not report.ok:
        return report
    g = q.M.gset
    gS = q.S.gset
    for level in (0, 1):
        table = q.gamma.get(level, {})
        for f0, f1 in _v_pairs(q.M, q.pi, level):
            if (f0, f1) not in table:
                report.add("contraction-missing", (level, f0, f1))
                continue
            lift = table[(f0, f1)]
            if g.s(level + 1, lift) != f0 or g.t(level + 1, lift) != f1:
                report.add("contraction-endpoints", (level, f0, f1, lift))
            want = q.S.ids[level][q.pi.levels[level][f0]]
            if q.pi.levels[level + 1][lift] != want:
                report.add("contraction-projection", (level, f0, f1, lift))
            if f0 == f1 and lift != q.M.refl.ids[level][f0]:
                report.add("contraction-diagonal", (level, f0))
        for key in table:
            if key not in set(_v_pairs(q.M, q.pi, level)):
                report.add("contraction-domain", (level,) + key,
                           "lift outside the parallel-pair domain")
    # truncation boundary: parallel top pairs with equal image are equal
    for f0, f1 in _v_pairs(q.M, q.pi, 2):
        if f0 != f1:
            report.add("top-collapse", (f0, f1))
    return report


# ---------------------------------------------------------------------------
# formal composition terms and the bounded free quadruple
# ---------------------------------------------------------------------------

def gen1(f):
    return ("g", f)

def comp_term0(wp, w):
    return ("c0", wp, w)

def gam_term(w0, w1):
    return ("gam", w0, w1)

def gen2(x):
    return ("g2", x)

def comp_term1(xp, x):
    return ("c1", xp, x)

def comp_term00(xp, x):
    return ("c00", xp, x)


def term_depth(t) -> int:
    tag = t[0]
    if tag in ("g", "g2"):
        return 0
    if tag == "gam":
        return max(term_depth(t[1]), term_depth(t[2]))
    return 1 + max(term_depth(t[1]), term_depth(t[2]))


class FreeTerms1:
    """Formal 1-level composites over a reflexive globular set, with the
    flattening projection to paths (identity generators vanish).  Bounded
    by composition-nesting depth and by flattened length."""

    def __init__(self, A: ReflexiveGlobularSet, depth: int, max_len: int = 4):
        self.A = A
        g = A.base
        self.identity_cells = {A.ids[0][a]: a for a in g.cells[0]}
        terms = [gen1(f) for f in g.cells[1]]
        self.src = {gen1(f): g.s(1, f) for f in g.cells[1]}
        self.tgt = {gen1(f): g.t(1, f) for f in g.cells[1]}
        # every generator occupies a slot, identity cells included, so the
        # term space stays small even over monoids whose unit is a cell
        self._len = {gen1(f): 1 for f in g.cells[1]}
        all_terms = list(terms)
        for _ in range(depth):
            new = []
            for wp in all_terms:
                for w in all_terms:
                    if self.src[wp] != self.tgt[w]:
                        continue
                    if self._len[wp] + self._len[w] > max_len:
                        continue
                    t = comp_term0(wp, w)
                    if t in self.src or term_depth(t) > depth:
                        continue
                    self.src[t] = self.src[w]
                    self.tgt[t] = self.tgt[wp]
                    self._len[t] = self._len[wp] + self._len[w]
                    new.append(t)
            if not new:
                break
            all_terms.extend(new)
        self.terms = all_terms

    def flatten(self, t) -> tuple:
        if t[0] == "g":
            return () if t[1] in self.identity_cells else (t[1],)
        return self.flatten(t[2]) + self.flatten(t[1])

    def tree(self, t):
        """The shape of a term as a planar tree over its flattened path:
        identity generators are arity-0 vertices."""
        if t[0] == "g":
            return tr.CAP if t[1] in self.identity_cells else tr.LEAF
        return (self.tree(t[2]), self.tree(t[1]))


def free_p_construction(A: ReflexiveGlobularSet, depth: int = 1):
    """The bounded free quadruple: formal 1-composites over A, the free
    strict structure on flattened paths, the parenthesis-erasing
    projection, and the diagonal contraction at level 0.

    Returns (terms, strict, pi_paths, gamma0) where ``terms`` is the
    FreeTerms1 carrier, ``strict`` maps paths, and ``pi_paths`` sends each
    term to its path."""
    terms = FreeTerms1(A, depth)
    pi_paths = {t: terms.flatten(t) for t in terms.terms}
    gamma0 = {(a, a): gen1(A.ids[0][a]) for a in A.base.cells[0]}
    return terms, pi_paths, gamma0


# ---------------------------------------------------------------------------
# the weak-2-category condition on evaluation maps
# ---------------------------------------------------------------------------

@dataclass
class PCandidate:
    """A reflexive 2-globular set with evaluation maps on bounded formal
    terms over itself.  ``ev1`` evaluates 1-level terms, ``ev2`` evaluates
    2-level data given as (source-term, target-term) lift requests plus
    composites of 2-cells; concretely the candidate provides its binary
    compositions and the comparison cells between parallel 1-composites."""
    A: ReflexiveGlobularSet
    comp10: dict            # (g, f) -> 1-cell
    comp21: dict            # vertical (y, x) -> 2-cell
    comp20: dict            # horizontal (y, x) -> 2-cell
    omega: dict             # (term0, term1) -> 2-cell for parallel pi-equal terms


def pcandidate_from_bicategory(b: FiniteBicategory) -> PCandidate:
    from .bicat import underlying_reflexive_gset

    A = underlying_reflexive_gset(b)
    comp10 = dict(b.hcomp_obj)
    comp21 = {}
    for (x, y), cat in b.hom.items():
        comp21.update(cat.comp)
    comp20 = dict(b.hcomp_arr)
    return PCandidate(A, comp10, comp21, comp20, {})


def check_weak_2cat_p(cand: PCandidate, depth: int = 2,
                      b: FiniteBicategory | None = None) -> ValidationReport:
    """Evaluate bounded formal terms through the candidate tables and
    verify the forced equalities: evaluation respects generators and
    formal composition, comparison cells cocycle, commute with gluing,
    and are natural; vertical laws and interchange are forced as well."""
    report = ValidationReport("magma-contraction n=2")
    A = cand.A
    terms = FreeTerms1(A, depth)

    ev1: dict = {}
    for t in sorted(terms.terms, key=term_depth):
        if t[0] == "g":
            ev1[t] = t[1]
        else:
            key = (ev1[t[1]], ev1[t[2]])
            if key not in cand.comp10:
                report.add("missing-composition", key)
                return report
            ev1[t] = cand.comp10[key]

    def omega(t0, t1):
        if (t0, t1) in cand.omega:
            return cand.omega[(t0, t1)]
        if b is not None:
            path = terms.flatten(t0)
            base = terms.src[t0] if not path else None
            return coherence_iso(b, terms.tree(t0), terms.tree(t1), path, base)
        return None

    g = A.base
    pairs = [(t0, t1) for t0 in terms.terms for t1 in terms.terms
             if terms.src[t0] == terms.src[t1] and terms.tgt[t0] == terms.tgt[t1]
             and terms.flatten(t0) == terms.flatten(t1)]

    def vc(y, x):
        return cand.comp21.get((y, x))

    def hc(y, x):
        return cand.comp20.get((y, x))

    id2 = {f: A.ids[1][f] for f in g.cells[1]}

    # comparison cells exist with the right boundaries and cocycle
    for (t0, t1) in pairs:
        w = omega(t0, t1)
        if w is None:
            report.add("comparison-missing", (t0, t1))
            continue
        if g.s(2, w) != ev1[t0] or g.t(2, w) != ev1[t1]:
            report.add("comparison-endpoints", (t0, t1, w))
    if report.clauses() & {"comparison-missing", "comparison-endpoints"}:
        return report
    for (t0, t1) in pairs:
        if t0 == t1 and omega(t0, t1) != id2[ev1[t0]]:
            report.add("comparison-diagonal", (t0,))
    for (t0, t1) in pairs:
        for (u0, u1) in pairs:
            if u0 == t1:
                lhs = vc(omega(u0, u1), omega(t0, t1))
                rhs = omega(t0, u1)
                if lhs is not None and lhs != rhs:
                    report.add("comparison-cocycle", (t0, t1, u1))
    # comparison cells commute with gluing
    for (t0, t1) in pairs:
        for (u0, u1) in pairs:
            if terms.src[u0] != terms.tgt[t0]:
                continue
            glued0, glued1 = comp_term0(u0, t0), comp_term0(u1, t1)
            if glued0 not in ev1 or glued1 not in ev1:
                continue
            lhs = hc(omega(u0, u1), omega(t0, t1))
            rhs = omega(glued0, glued1)
            if lhs is not None and rhs is not None and lhs != rhs:
                report.add("comparison-gluing", (t0, t1, u0, u1))
    # naturality: conjugating a composite of 2-cells by comparison cells
    two = list(g.cells[2])
    for (t0, t1) in pairs:
        path = terms.flatten(t0)
        if len(path) != 2:
            continue
        f1, f2 = path
        for a1 in two:
            if g.s(2, a1) != f1:
                continue
            for a2 in two:
                if g.s(2, a2) != f2:
                    continue
                tt0 = _replace_leaves(terms, t0, (g.t(2, a1), g.t(2, a2)))
                tt1 = _replace_leaves(terms, t1, (g.t(2, a1), g.t(2, a2)))
                if tt0 not in ev1 or tt1 not in ev1:
                    continue
                src_cell = _tree_apply(cand, terms, t0, (a1, a2), id2)
                tgt_cell = _tree_apply(cand, terms, t1, (a1, a2), id2)
                if src_cell is None or tgt_cell is None:
                    continue
                lhs = vc(omega(tt0, tt1), src_cell)
                rhs = vc(tgt_cell, omega(t0, t1))
                if lhs is not None and rhs is not None and lhs != rhs:
                    report.add("comparison-naturality", (t0, t1, a1, a2))
    # vertical category laws and interchange are forced equalities too
    for x in two:
        fsrc, ftgt = g.s(2, x), g.t(2, x)
        if vc(x, id2[fsrc]) not in (None, x):
            report.add("vertical-unit", (x,))
        if vc(id2[ftgt], x) not in (None, x):
            report.add("vertical-unit", (x,))
    for x in two:
        for y in two:
            if g.s(2, y) != g.t(2, x):
                continue
            for z in two:
                if g.s(2, z) != g.t(2, y):
                    continue
                lhs = vc(z, vc(y, x))
                rhs = vc(vc(z, y), x)
                if lhs is not None and rhs is not None and lhs != rhs:
                    report.add("vertical-associativity", (z, y, x))
    for x in two:
        for y in two:
            if g.s(1, g.s(2, y)) != g.t(1, g.s(2, x)):
                continue
            for xp in two:
                if g.s(2, xp) != g.t(2, x):
                    continue
                for yp in two:
                    if g.s(2, yp) != g.t(2, y):
                        continue
                    lhs = hc(vc(yp, y), vc(xp, x))
                    rhs = vc(hc(yp, xp), hc(y, x))
                    if lhs is not None and rhs is not None and lhs != rhs:
                        report.add("interchange", (yp, y, xp, x))
    return report


def _replace_leaves(terms: FreeTerms1, t, new_path):
    """The term of the same shape over a new list of non-identity cells."""
    it = iter(new_path)

    def go(node):
        if node[0] == "g":
            if node[1] in terms.identity_cells:
                return node
            return gen1(next(it))
        return comp_term0(go(node[1]), go(node[2]))

    return go(t)


def _tree_apply(cand: PCandidate, terms: FreeTerms1, t, alphas, id2):
    """Compose the 2-cells along the shape of the term (identity padding
    on identity generators)."""
    it = iter(alphas)

    def go(node):
        if node[0] == "g":
            if node[1] in terms.identity_cells:
                return id2[node[1]]
            return next(it)
        lo = go(node[2])
        hi = go(node[1])
        if lo is None or hi is None:
            return None
        return cand.comp20.get((hi, lo))

    return go(t)


def check_weak_1cat_p(A: ReflexiveGlobularSet, comp10: dict,
                      depth: int = 3) -> ValidationReport:
    """The one-dimensional collapse: evaluation must factor through the
    flattening projection, which is exactly a category structure."""
    report = ValidationReport("magma-contraction n=1")
    terms = FreeTerms1(A, depth)
    ev: dict = {}
    for t in sorted(terms.terms, key=term_depth):
        if t[0] == "g":
            ev[t] = t[1]
        else:
            key = (ev[t[1]], ev[t[2]])
            if key not in comp10:
                report.add("missing-composition", key)
                return report
            ev[t] = comp10[key]
    groups: dict = {}
    for t in terms.terms:
        key = (terms.src[t], terms.tgt[t], terms.flatten(t))
        groups.setdefault(key, set()).add(ev[t])
    for key, vals in sorted(groups.items(), key=repr):
        if len(vals) > 1:
            report.add("evaluation-not-well-defined",
                       (key[2], tuple(sorted(vals, key=repr))))
    return report
