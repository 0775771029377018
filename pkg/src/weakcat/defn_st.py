"""Simplicial sets with hollowness: alternating subsets, admissible
horns, the hollow-filler conditions at n <= 2, the maximality variant,
and the bicategory conversions.

An instance is a truncated simplicial set together with a set of hollow
elements per positive level.  Simplices of the bicategory nerve are
normalized lax-functor tuples: objects on vertices, 1-cells on edges
(identity on degenerate edges), and comparison 2-cells
``gamma_{uvw}: f_{uw} -> f_{vw} o f_{uv}`` on triangles, with unitors on
degenerate triangles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product, combinations

from .report import StructuralError, ValidationReport
from .cat import FiniteCategory
from .simplicial import (TruncatedSimplicialSet, DeltaMap, all_monotone,
                         enumerate_horns, horn_fillers, nerve)
from .bicat import FiniteBicategory, is_equivalence_1cell


@dataclass
class HollowSimplicialSet:
    simp: TruncatedSimplicialSet
    hollow: dict[int, frozenset]

    def is_hollow(self, m: int, x) -> bool:
        return x in self.hollow.get(m, frozenset())


# ---------------------------------------------------------------------------
# orientation combinatorics
# ---------------------------------------------------------------------------

def is_alternating(values: list[int]) -> bool:
    values = sorted(values)
    return all(values[i] % 2 != values[i + 1] % 2 for i in range(len(values) - 1))


def alternating_subsets(m: int, k: int) -> list[tuple[int, ...]]:
    """All S with k+- inside S and k+- together with the complement of S
    alternating in parity."""
    if not 0 <= k <= m:
        raise StructuralError("need 0 <= k <= m")
    kpm = {v for v in (k - 1, k, k + 1) if 0 <= v <= m}
    rest = [v for v in range(m + 1) if v not in kpm]
    out = []
    for size in range(len(rest) + 1):
        for extra in combinations(rest, size):
            S = sorted(kpm | set(extra))
            if is_alternating(sorted(kpm | (set(range(m + 1)) - set(S)))):
                out.append(tuple(S))
    return sorted(out)


def _injection(m: int, S: tuple[int, ...]) -> DeltaMap:
    return DeltaMap(len(S) - 1, m, tuple(S))


def horn_face(X: TruncatedSimplicialSet, m: int, k: int, horn: dict,
              S: tuple[int, ...]):
    """The S-face of a horn, for S not containing [m] minus {k}."""
    complement = [i for i in range(m + 1) if i not in S]
    choices = [i for i in complement if i != k]
    if not choices:
        raise StructuralError("face is not part of the horn")
    i = min(choices)
    shifted = tuple(s if s < i else s - 1 for s in S)
    return X.act(_injection(m - 1, shifted), horn[i])


def is_admissible(X: TruncatedSimplicialSet, H: dict[int, frozenset],
                  m: int, k: int, horn: dict) -> bool:
    """Every face of the horn over a k-alternating index set is hollow
    (the injective-map reduction of the definition)."""
    full = set(range(m + 1)) - {k}
    for S in alternating_subsets(m, k):
        if full <= set(S):
            continue  # the face is the filler itself, not part of the horn
        face = horn_face(X, m, k, horn, S)
        if face not in H.get(len(S) - 1, frozenset()):
            return False
    return True


# ---------------------------------------------------------------------------
# the checker
# ---------------------------------------------------------------------------

def check_weak_ncat_st(X: TruncatedSimplicialSet, H: dict[int, frozenset],
                       n: int) -> ValidationReport:
    report = ValidationReport(f"hollow-simplicial n={n}")
    for m, hs in H.items():
        extra = hs - set(X.levels.get(m, ()))
        if extra:
            report.add("structural", (m, sorted(extra, key=repr)[0]),
                       "hollow element outside the level")
    if not report.ok:
        return report
    for m in range(1, X.cutoff + 1):
        if m > n and set(H.get(m, frozenset())) != set(X.levels[m]):
            missing = sorted(set(X.levels[m]) - H.get(m, frozenset()), key=repr)
            report.add("hollow-above-n", (m, missing[0]))
    for m in range(1, X.cutoff + 1):
        for x in X.levels[m]:
            if X.is_degenerate(m, x) and not x in H.get(m, frozenset()):
                report.add("degenerate-hollow", (m, x))
    for m in range(1, X.cutoff + 1):
        for k in range(m + 1):
            for horn in enumerate_horns(X, m, k):
                if not is_admissible(X, H, m, k, horn):
                    continue
                fillers = horn_fillers(X, m, k, horn)
                hollow_fillers = [y for y in fillers
                                  if y in H.get(m, frozenset())]
                witness = tuple(sorted(horn.items(), key=repr))
                if not hollow_fillers:
                    report.add("hollow-filler", (m, k, witness))
                if m > n and len(fillers) != 1:
                    report.add("filler-uniqueness", (m, k, witness, len(fillers)))
    for m in range(2, X.cutoff + 1):
        for k in range(m + 1):
            for a in H.get(m, frozenset()):
                others = [X.face(m, i, a) in H.get(m - 1, frozenset())
                          for i in range(m + 1) if i != k]
                if all(others) and X.face(m, k, a) not in H.get(m - 1, frozenset()):
                    report.add("coface-closure", (m, k, a))
    return report


def _coface_closure(X: TruncatedSimplicialSet, H: dict[int, frozenset]) -> dict:
    """Saturate H under the coface-closure clause: whenever all faces but
    one of a hollow cell are hollow, the remaining face is forced in."""
    H = {m: set(hs) for m, hs in H.items()}
    changed = True
    while changed:
        changed = False
        for m in range(2, X.cutoff + 1):
            for a in H.get(m, set()):
                faces = [X.face(m, i, a) for i in range(m + 1)]
                holl = [f in H.get(m - 1, set()) for f in faces]
                if holl.count(False) == 1:
                    i = holl.index(False)
                    H.setdefault(m - 1, set()).add(faces[i])
                    changed = True
    return {m: frozenset(hs) for m, hs in H.items()}


def is_maximal_hollowness(X: TruncatedSimplicialSet, H: dict[int, frozenset],
                          n: int) -> bool:
    """No strict enlargement of H also passes the checker.

    Candidate enlargements are single-element augmentations saturated
    under coface closure (an augmentation that survives the checker must
    contain its own closure, so the search is exact on these instances)."""
    if not check_weak_ncat_st(X, H, n).ok:
        raise StructuralError("input does not satisfy the conditions")
    for m in range(1, min(n, X.cutoff) + 1):
        for x in X.levels[m]:
            if x in H.get(m, frozenset()):
                continue
            H2 = dict(H)
            H2[m] = H.get(m, frozenset()) | {x}
            if check_weak_ncat_st(X, _coface_closure(X, H2), n).ok:
                return False
    return True


def category_to_st(c: FiniteCategory, hollow1: str = "isos",
                   cutoff: int = 3) -> tuple[TruncatedSimplicialSet, dict]:
    """The nerve with H_1 the isomorphisms (or only the identities) and
    everything hollow above level 1."""
    X = nerve(c, cutoff)
    if hollow1 == "isos":
        h1 = frozenset((f,) for f in c.arrows if c.is_iso(f))
    elif hollow1 == "identities":
        h1 = frozenset((c.ident[a],) for a in c.objects)
    else:
        raise StructuralError("hollow1 must be 'isos' or 'identities'")
    H = {1: h1}
    for m in range(2, cutoff + 1):
        H[m] = frozenset(X.levels[m])
    return X, H


# ---------------------------------------------------------------------------
# bicategory -> hollow simplicial set
# ---------------------------------------------------------------------------

def _sx_cell(objs, fs, gammas):
    return (tuple(objs), tuple(sorted(fs.items())), tuple(sorted(gammas.items())))


def _sx_unpack(cell):
    objs, fs, gammas = cell
    return objs, dict(fs), dict(gammas)


def _sx_edge(b: FiniteBicategory, cell, u: int, v: int):
    objs, fs, _ = _sx_unpack(cell)
    if u == v:
        return b.ident[objs[u]]
    return fs[(u, v)]


def _sx_gamma(b: FiniteBicategory, cell, u: int, v: int, w: int):
    """gamma_{uvw}: f_{uw} -> f_{vw} o f_{uv}, unitors on repeats."""
    objs, fs, gammas = _sx_unpack(cell)
    if u < v < w:
        return gammas[(u, v, w)]
    if u == v and v < w:
        return b.inverse2(b.runit[fs[(u, w)]])
    if u < v and v == w:
        return b.inverse2(b.lunit[fs[(u, v)]])
    return b.inverse2(b.lunit[b.ident[objs[u]]])


def _sx_coherent(b: FiniteBicategory, objs, fs, gammas, quads) -> bool:
    for (u, v, w, x) in quads:
        fwx = fs.get((w, x), b.ident[objs[w]] if w == x else None)
        fvw = fs.get((v, w))
        fuv = fs.get((u, v))
        lhs = b.vcomp(b.hcomp2(b.id2(fwx), gammas[(u, v, w)]), gammas[(u, w, x)])
        rhs = b.vcomp_chain([
            gammas[(u, v, x)],
            b.hcomp2(gammas[(v, w, x)], b.id2(fuv)),
            b.assoc[(fwx, fvw, fuv)],
        ])
        if lhs != rhs:
            return False
    return True


def _enumerate_sx_level(b: FiniteBicategory, m: int) -> list:
    pairs = [(u, v) for u in range(m + 1) for v in range(u + 1, m + 1)]
    triples = [(u, v, w) for u in range(m + 1) for v in range(u + 1, m + 1)
               for w in range(v + 1, m + 1)]
    quads = [(u, v, w, x) for u in range(m + 1) for v in range(u + 1, m + 1)
             for w in range(v + 1, m + 1) for x in range(w + 1, m + 1)]
    out = []
    for objs in product(b.objects, repeat=m + 1):
        pools = []
        ok = True
        for (u, v) in pairs:
            cands = b.hom[(objs[u], objs[v])].objects
            if not cands:
                ok = False
                break
            pools.append(cands)
        if not ok:
            continue
        for fvals in product(*pools):
            fs = dict(zip(pairs, fvals))
            gamma_pools = []
            for (u, v, w) in triples:
                cat = b.hom[(objs[u], objs[w])]
                target = b.hcomp1(fs[(v, w)], fs[(u, v)])
                cands = [x for x in cat.arrows
                         if cat.src[x] == fs[(u, w)] and cat.tgt[x] == target]
                gamma_pools.append(cands)
            for gvals in product(*gamma_pools):
                gammas = dict(zip(triples, gvals))
                if _sx_coherent(b, objs, fs, gammas, quads):
                    out.append(_sx_cell(objs, fs, gammas))
    return out


def _sx_act(b: FiniteBicategory, cell, phi: DeltaMap):
    objs, fs, gammas = _sx_unpack(cell)
    mp = phi.dom
    objs2 = tuple(objs[phi(u)] for u in range(mp + 1))
    fs2 = {}
    gammas2 = {}
    for u in range(mp + 1):
        for v in range(u + 1, mp + 1):
            fs2[(u, v)] = _sx_edge(b, cell, phi(u), phi(v))
    for u in range(mp + 1):
        for v in range(u + 1, mp + 1):
            for w in range(v + 1, mp + 1):
                gammas2[(u, v, w)] = _sx_gamma(b, cell, phi(u), phi(v), phi(w))
    return _sx_cell(objs2, fs2, gammas2)


def bicat_to_st(b: FiniteBicategory, cutoff: int = 4):
    """(A, H): the normalized lax nerve with hollow 1-cells the
    equivalences and hollow 2-cells the elements whose comparison cell is
    invertible."""
    levels = {}
    levels[0] = tuple(_sx_cell((a,), {}, {}) for a in b.objects)
    for m in range(1, cutoff + 1):
        levels[m] = tuple(_enumerate_sx_level(b, m))
    faces = {}
    degens = {}
    from .simplicial import delta_face, delta_degen
    for m in range(1, cutoff + 1):
        for i in range(m + 1):
            phi = delta_face(m, i)
            faces[(m, i)] = {c: _sx_act(b, c, phi) for c in levels[m]}
    for m in range(cutoff):
        for i in range(m + 1):
            phi = delta_degen(m, i)
            degens[(m, i)] = {c: _sx_act(b, c, phi) for c in levels[m]}
    X = TruncatedSimplicialSet(cutoff, levels, faces, degens)
    for tables, shift in ((faces, -1), (degens, 1)):
        for (m, i), table in tables.items():
            lvl = set(levels[m + shift])
            for x, y in table.items():
                if y not in lvl:
                    raise StructuralError("nerve action leaves the level")
    h1 = frozenset(c for c in levels[1]
                   if is_equivalence_1cell(b, _sx_edge(b, c, 0, 1))[0])
    h2 = frozenset(c for c in levels[2]
                   if b.is_iso2(_sx_gamma(b, c, 0, 1, 2)))
    H = {1: h1, 2: h2}
    for m in range(3, cutoff + 1):
        H[m] = frozenset(levels[m])
    return X, H


# ---------------------------------------------------------------------------
# hollow simplicial set -> bicategory
# ---------------------------------------------------------------------------

def st_to_bicat(X: TruncatedSimplicialSet, H: dict[int, frozenset]) -> FiniteBicategory:
    """Extract a bicategory: 1-cell composition by the least hollow filler
    of each inner 2-horn, 2-cell operations by unique 3-horn fillers,
    coherence cells from comparison fillers."""
    if X.cutoff < 3:
        raise StructuralError("need cutoff >= 3")

    def fill3(k, facets):
        hits = horn_fillers(X, 3, k, facets)
        if len(hits) != 1:
            raise StructuralError(
                f"expected a unique 3-horn filler, found {len(hits)}")
        return hits[0]

    objs = sorted(X.levels[0], key=repr)
    ones = sorted(X.levels[1], key=repr)
    src1 = {f: X.face(1, 1, f) for f in ones}
    tgt1 = {f: X.face(1, 0, f) for f in ones}
    ident_raw = {a: X.degen(0, 0, a) for a in objs}
    id2_raw = {f: X.degen(1, 0, f) for f in ones}

    twos = sorted((w for w in X.levels[2]
                   if X.face(2, 2, w) == ident_raw[X.face(1, 1, X.face(2, 1, w))]),
                  key=repr)
    src2 = {w: X.face(2, 1, w) for w in twos}
    tgt2 = {w: X.face(2, 0, w) for w in twos}

    def vc(beta, alpha):
        a = src1[src2[alpha]]
        x = fill3(1, {0: beta, 2: alpha,
                      3: X.degen(1, 0, ident_raw[a])})
        return X.face(3, 1, x)

    # chosen hollow compositors
    K = {}
    for f in ones:
        for g in ones:
            if tgt1[f] != src1[g]:
                continue
            horn = {0: g, 2: f}
            cands = sorted((y for y in horn_fillers(X, 2, 1, horn)
                            if y in H.get(2, frozenset())), key=repr)
            if not cands:
                raise StructuralError("no hollow compositor for a 1-cell pair")
            K[(g, f)] = cands[0]
    hcomp_raw = {(g, f): X.face(2, 1, K[(g, f)]) for (g, f) in K}

    def whisk_r(g, alpha):
        f0, f1 = src2[alpha], tgt2[alpha]
        x = fill3(2, {0: K[(g, f1)], 1: K[(g, f0)], 3: alpha})
        return X.face(3, 2, x)

    def whisk_l(beta, f):
        g0, g1 = src2[beta], tgt2[beta]
        x = fill3(1, {0: beta, 2: K[(g0, f)], 3: X.degen(1, 1, f)})
        km = X.face(3, 1, x)
        y = fill3(2, {0: K[(g1, f)], 1: km, 3: X.degen(1, 0, f)})
        return X.face(3, 2, y)

    def hc2(beta, alpha):
        g0 = src2[beta]
        f1 = tgt2[alpha]
        return vc(whisk_l(beta, f1), whisk_r(g0, alpha))

    assoc_raw = {}
    for f in ones:
        for g in ones:
            if tgt1[f] != src1[g]:
                continue
            for h in ones:
                if tgt1[g] != src1[h]:
                    continue
                gf = hcomp_raw[(g, f)]
                hg = hcomp_raw[(h, g)]
                x = fill3(2, {0: K[(h, g)], 1: K[(h, gf)], 3: K[(g, f)]})
                L = X.face(3, 2, x)
                y = fill3(2, {0: L, 1: K[(hg, f)], 3: X.degen(1, 0, f)})
                assoc_raw[(h, g, f)] = X.face(3, 2, y)

    lunit_raw = {}
    runit_raw = {}
    for f in ones:
        a = src1[f]
        y = fill3(2, {0: X.degen(1, 1, f), 1: K[(ident_raw[tgt1[f]], f)],
                      3: X.degen(1, 0, f)})
        lunit_raw[f] = X.face(3, 2, y)
        z = fill3(2, {0: X.degen(1, 0, f), 1: K[(f, ident_raw[a])],
                      3: X.degen(1, 0, ident_raw[a])})
        runit_raw[f] = X.face(3, 2, z)

    oname = {c: f"a{i}" for i, c in enumerate(objs)}
    fname = {c: f"f{i}" for i, c in enumerate(ones)}
    xname = {c: f"x{i}" for i, c in enumerate(twos)}
    homs = {}
    for a in objs:
        for c in objs:
            fset = {f for f in ones if src1[f] == a and tgt1[f] == c}
            arrs = [w for w in twos if src2[w] in fset]
            comp = {}
            for alpha in arrs:
                for beta in arrs:
                    if src2[beta] == tgt2[alpha]:
                        comp[(xname[beta], xname[alpha])] = xname[vc(beta, alpha)]
            homs[(oname[a], oname[c])] = FiniteCategory(
                objects=tuple(fname[f] for f in sorted(fset, key=repr)),
                arrows=tuple(xname[w] for w in arrs),
                src={xname[w]: fname[src2[w]] for w in arrs},
                tgt={xname[w]: fname[tgt2[w]] for w in arrs},
                comp=comp,
                ident={fname[f]: xname[id2_raw[f]] for f in fset},
            )
    return FiniteBicategory(
        objects=tuple(oname[a] for a in objs),
        hom=homs,
        ident={oname[a]: fname[ident_raw[a]] for a in objs},
        hcomp_obj={(fname[g], fname[f]): fname[v] for (g, f), v in hcomp_raw.items()},
        hcomp_arr={(xname[beta], xname[alpha]): xname[hc2(beta, alpha)]
                   for alpha in twos for beta in twos
                   if tgt1[src2[alpha]] == src1[src2[beta]]},
        assoc={(fname[h], fname[g], fname[f]): xname[v]
               for (h, g, f), v in assoc_raw.items()},
        lunit={fname[f]: xname[v] for f, v in lunit_raw.items()},
        runit={fname[f]: xname[v] for f, v in runit_raw.items()},
    )
