"""Two of the simplicial-flavoured weak-n-category conditions (n <= 2):
the strict-lifting variant (surjective Segal slices with on-the-nose
lifts) and the up-to-equivalence variant (Segal slices that are
equivalences), plus both directions of the bicategory comparison via the
two-axis nerve.

The two checkers share one instance type, a two-axis multi-simplicial
set; the strict variant is ``check_weak_ncat_si`` and the lax one is
``check_weak_ncat_ta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .report import StructuralError, ValidationReport
from .cat import FiniteCategory
from .simplicial import (DeltaMap, TruncatedSimplicialSet, delta_face,
                         delta_iota, segal_bijective, segal_map, is_nerve,
                         all_monotone)
from .multisimplicial import (MultiSimplicialSet, from_set, from_truncated,
                              rect_indices)
from .bicat import FiniteBicategory


# ---------------------------------------------------------------------------
# natural transformations of 1-axis functors, Segal data
# ---------------------------------------------------------------------------

@dataclass
class NatTrans1:
    dom: TruncatedSimplicialSet
    cod: TruncatedSimplicialSet
    maps: dict[int, dict]

    def at(self, m: int, x):
        return self.maps[m][x]


def slice_to_truncated(A: MultiSimplicialSet, level: int) -> TruncatedSimplicialSet:
    """A([level], -) as a 1-axis structure over its materialized levels."""
    sl = A.slice0(level)
    cutoff = max(K[0] for K in sl.indices)
    levels = {m: sl.cells[(m,)] for m in range(cutoff + 1)}
    faces = {(K[0], i): t for (axis, K, i), t in sl.faces.items()}
    degens = {(K[0], i): t for (axis, K, i), t in sl.degens.items()}
    return TruncatedSimplicialSet(cutoff, levels, faces, degens)


def outer_matching_tuples(A: MultiSimplicialSet, k: int, j: int) -> list[tuple]:
    """Matching k-tuples of A([1],[j]) over A([0],[j])."""
    if k == 0:
        return [(a,) for a in A.level((0, j))]
    s0 = lambda x: A.face(0, (1, j), 1, x)
    t0 = lambda x: A.face(0, (1, j), 0, x)
    tuples = [(x,) for x in A.level((1, j))]
    for _ in range(k - 1):
        out = []
        for t in tuples:
            tail = t0(t[-1])
            for x in A.level((1, j)):
                if s0(x) == tail:
                    out.append(t + (x,))
        tuples = out
    return tuples


def outer_segal_product(A: MultiSimplicialSet, k: int) -> TruncatedSimplicialSet:
    """The codomain of the k-th outer Segal map as a 1-axis structure:
    levelwise matching tuples with componentwise actions."""
    cutoff = max(K[1] for K in A.indices if K[0] == min(k, 1))
    if k == 0:
        base = slice_to_truncated(A, 0)
        levels = {m: tuple((a,) for a in base.levels[m]) for m in range(base.cutoff + 1)}
        faces = {(m, i): {(a,): (base.face(m, i, a),) for a in base.levels[m]}
                 for m in range(1, base.cutoff + 1) for i in range(m + 1)}
        degens = {(m, i): {(a,): (base.degen(m, i, a),) for a in base.levels[m]}
                  for m in range(base.cutoff) for i in range(m + 1)}
        return TruncatedSimplicialSet(base.cutoff, levels, faces, degens)
    levels = {m: tuple(outer_matching_tuples(A, k, m)) for m in range(cutoff + 1)}
    faces = {}
    degens = {}
    for m in range(1, cutoff + 1):
        for i in range(m + 1):
            faces[(m, i)] = {t: tuple(A.face(1, (1, m), i, x) for x in t)
                             for t in levels[m]}
    for m in range(cutoff):
        for i in range(m + 1):
            degens[(m, i)] = {t: tuple(A.degen(1, (1, m), i, x) for x in t)
                              for t in levels[m]}
    return TruncatedSimplicialSet(cutoff, levels, faces, degens)


def outer_segal_nat(A: MultiSimplicialSet, k: int) -> NatTrans1:
    dom = slice_to_truncated(A, k)
    cod = outer_segal_product(A, k)
    cutoff = min(dom.cutoff, cod.cutoff)
    dom = _truncate(dom, cutoff)
    cod = _truncate(cod, cutoff)
    maps: dict[int, dict] = {}
    for m in range(cutoff + 1):
        table = {}
        for x in dom.levels[m]:
            if k == 0:
                table[x] = (x,)
            else:
                table[x] = tuple(A.act_axis(0, delta_iota(l, k), (k, m), x)
                                 for l in range(1, k + 1))
        maps[m] = table
    return NatTrans1(dom, cod, maps)


def _truncate(X: TruncatedSimplicialSet, cutoff: int) -> TruncatedSimplicialSet:
    if cutoff == X.cutoff:
        return X
    return TruncatedSimplicialSet(
        cutoff,
        {m: X.levels[m] for m in range(cutoff + 1)},
        {(m, i): t for (m, i), t in X.faces.items() if m <= cutoff},
        {(m, i): t for (m, i), t in X.degens.items() if m < cutoff},
    )


# ---------------------------------------------------------------------------
# contractible maps (strict-lifting flavour)
# ---------------------------------------------------------------------------

def is_contractible_map1(phi: NatTrans1):
    """The three lifting bullets for a map of 1-axis functors:
    surjectivity at level 0, on-the-nose lifting of 1-levels between
    parallel pairs, and injectivity on parallel pairs at the top.
    Returns (bool, witness)."""
    dom, cod = phi.dom, phi.cod
    image0 = set(phi.maps[0].values())
    for y in cod.levels[0]:
        if y not in image0:
            return False, ("surjectivity-at-0", y)
    for x in dom.levels[0]:
        for xp in dom.levels[0]:
            for h in cod.levels[1]:
                if cod.face(1, 1, h) != phi.at(0, x):
                    continue
                if cod.face(1, 0, h) != phi.at(0, xp):
                    continue
                if not any(dom.face(1, 1, g) == x and dom.face(1, 0, g) == xp
                           and phi.at(1, g) == h for g in dom.levels[1]):
                    return False, ("lifting", x, xp, h)
    for x in dom.levels[1]:
        for xp in dom.levels[1]:
            if x == xp:
                continue
            if dom.face(1, 1, x) == dom.face(1, 1, xp) and \
                    dom.face(1, 0, x) == dom.face(1, 0, xp) and \
                    phi.at(1, x) == phi.at(1, xp):
                return False, ("injectivity-on-parallel", x, xp)
    return True, None


def is_contractible_si(dom: MultiSimplicialSet, cod: MultiSimplicialSet,
                       maps: dict[tuple[int, ...], dict]):
    """Generic contractibility of a map of r-axis functors; r = 0 means
    bijectivity.  Returns (bool, witness)."""
    r = dom.arity
    if r == 0:
        table = maps[()]
        vals = list(table.values())
        if len(set(vals)) != len(vals):
            dup = next(v for v in vals if vals.count(v) > 1)
            pair = [x for x in table if table[x] == dup]
            return False, ("injectivity", pair[0], pair[1])
        for y in cod.level(()):
            if y not in vals:
                return False, ("surjectivity", y)
        return True, None

    def I(p):
        return (1,) * p + (0,) * (r - p)

    def side(ms, K, which, x):
        # s uses the map [0] -> [1] with value 0 (the face missing 1)
        axis = sum(1 for v in K if v == 1) - 1
        return ms.face(axis, K, 1 if which == "s" else 0, x)

    image0 = set(maps[I(0)].values())
    for y in cod.level(I(0)):
        if y not in image0:
            return False, ("surjectivity-at-I0", y)
    for p in range(r):
        Kp, Kp1 = I(p), I(p + 1)
        for x in dom.level(Kp):
            for xp in dom.level(Kp):
                if p >= 1 and (side(dom, Kp, "s", x) != side(dom, Kp, "s", xp)
                               or side(dom, Kp, "t", x) != side(dom, Kp, "t", xp)):
                    continue
                for h in cod.level(Kp1):
                    if side(cod, Kp1, "s", h) != maps[Kp][x]:
                        continue
                    if side(cod, Kp1, "t", h) != maps[Kp][xp]:
                        continue
                    found = any(
                        side(dom, Kp1, "s", g) == x and side(dom, Kp1, "t", g) == xp
                        and maps[Kp1][g] == h
                        for g in dom.level(Kp1))
                    if not found:
                        return False, ("lifting", p, x, xp, h)
    Kr = I(r)
    for x in dom.level(Kr):
        for xp in dom.level(Kr):
            if x == xp:
                continue
            if side(dom, Kr, "s", x) == side(dom, Kr, "s", xp) and \
                    side(dom, Kr, "t", x) == side(dom, Kr, "t", xp) and \
                    maps[Kr][x] == maps[Kr][xp]:
                return False, ("injectivity-on-parallel", x, xp)
    return True, None


# ---------------------------------------------------------------------------
# the strict-variant checker
# ---------------------------------------------------------------------------

def constancy_violations(X: TruncatedSimplicialSet):
    base = set(X.levels[0])
    out = []
    for m in range(X.cutoff + 1):
        if set(X.levels[m]) != base:
            out.append(("level", m))
    for (m, i), table in X.faces.items():
        for x, y in table.items():
            if x != y:
                out.append(("face", m, i, x))
    for (m, i), table in X.degens.items():
        for x, y in table.items():
            if x != y:
                out.append(("degeneracy", m, i, x))
    return out


def check_weak_ncat_si(A: MultiSimplicialSet, n: int) -> ValidationReport:
    report = ValidationReport(f"si-like n={n}")
    if n == 0:
        if A.arity != 0:
            report.add("arity", (A.arity,), "a weak 0-category is a bare set")
        return report
    if n == 1:
        if A.arity != 1:
            report.add("arity", (A.arity,))
            return report
        X = A.to_truncated()
        for k in range(X.cutoff + 1):
            ok, witness = segal_bijective(X, k)
            if not ok:
                report.add("segal-bijective", (k,) + witness)
        return report
    if n != 2 or A.arity != 2:
        report.add("arity", (A.arity, n))
        return report
    for witness in constancy_violations(slice_to_truncated(A, 0)):
        report.add("constancy", witness)
    max_k = max(K[0] for K in A.indices)
    for k in range(max_k + 1):
        phi = outer_segal_nat(A, k)
        ok, witness = is_contractible_map1(phi)
        if not ok:
            report.add("outer-segal-contractible", (k,) + witness)
    for k1 in range(max_k + 1):
        sl = slice_to_truncated(A, k1)
        for k in range(sl.cutoff + 1):
            ok, witness = segal_bijective(sl, k)
            if not ok:
                report.add("inner-segal-bijective", (k1, k) + witness)
    return report


# ---------------------------------------------------------------------------
# truncatability, Q and pi (lax flavour)
# ---------------------------------------------------------------------------

def _iso_classes(cat: FiniteCategory) -> dict[str, str]:
    """object -> canonical representative of its iso class."""
    reps: dict[str, str] = {}
    for a in sorted(cat.objects, key=str):
        for r in sorted(reps.values(), key=str):
            if cat.isomorphic_objects(a, r):
                reps[a] = r
                break
        else:
            reps[a] = a
    return reps


def truncatable(A: MultiSimplicialSet, r: int):
    """(bool, failing-witness or None).  r must equal A.arity."""
    if A.arity != r:
        raise StructuralError("arity mismatch")
    if r == 0:
        return True, None
    if r == 1:
        ok, witness, _ = is_nerve(A.to_truncated())
        return (True, None) if ok else (False, ("not-a-nerve",) + tuple(witness or ()))
    max0 = max(K[0] for K in A.indices)
    for k in range(max0 + 1):
        sl = slice_to_truncated(A, k)
        if sl.cutoff < 3:
            continue  # level not materialized deep enough to test
        ok, witness, _ = is_nerve(sl)
        if not ok:
            return False, ("slice-not-a-nerve", k) + tuple(witness or ())
    Xhat = _hat_nerve(A)
    if Xhat is None:
        return False, ("hat-action-ill-defined",)
    ok, witness, _ = is_nerve(Xhat)
    if not ok:
        return False, ("hat-not-a-nerve",) + tuple(witness or ())
    return True, None


def _slice_pi(A: MultiSimplicialSet, k: int) -> dict:
    """pi for the nerve A([k],-): object -> iso-class representative."""
    sl = slice_to_truncated(A, k)
    ok, _, cat = is_nerve(sl)
    if not ok:
        raise StructuralError("slice is not a nerve")
    names = {str(x): x for x in sl.levels[0]}
    reps = _iso_classes(cat)
    return {x: names[reps[str(x)]] for x in sl.levels[0]}


def _hat_nerve(A: MultiSimplicialSet) -> TruncatedSimplicialSet | None:
    """[k] -> iso-class representatives of the category of A([k],-),
    with the induced actions; None if an action is not class-stable."""
    max0 = max(K[0] for K in A.indices)
    pis = {k: _slice_pi(A, k) for k in range(max0 + 1)}
    levels = {k: tuple(sorted(set(pis[k].values()), key=str)) for k in range(max0 + 1)}
    faces: dict[tuple[int, int], dict] = {}
    degens: dict[tuple[int, int], dict] = {}
    for k in range(1, max0 + 1):
        for i in range(k + 1):
            table = {}
            for x in A.level((k, 0)):
                val = pis[k - 1][A.face(0, (k, 0), i, x)]
                rep = pis[k][x]
                if table.get(rep, val) != val:
                    return None
                table[rep] = val
            faces[(k, i)] = table
    for k in range(max0):
        for i in range(k + 1):
            table = {}
            for x in A.level((k, 0)):
                val = pis[k + 1][A.degen(0, (k, 0), i, x)]
                rep = pis[k][x]
                if table.get(rep, val) != val:
                    return None
                table[rep] = val
            degens[(k, i)] = table
    return TruncatedSimplicialSet(max0, levels, faces, degens)


def compute_Q(A: MultiSimplicialSet, r: int):
    """The set of equivalence classes at the bottom of a truncatable
    functor, via canonical representatives."""
    ok, witness = truncatable(A, r)
    if not ok:
        raise StructuralError(f"not truncatable: {witness}")
    if r == 0:
        return tuple(A.level(()))
    if r == 1:
        return tuple(sorted(set(_slice_pi_1axis(A).values()), key=str))
    pi = compute_pi(A, r)
    return tuple(sorted(set(pi.values()), key=str))


def _slice_pi_1axis(A: MultiSimplicialSet) -> dict:
    X = A.to_truncated()
    ok, _, cat = is_nerve(X)
    if not ok:
        raise StructuralError("not a nerve")
    names = {str(x): x for x in X.levels[0]}
    reps = _iso_classes(cat)
    return {x: names[reps[str(x)]] for x in X.levels[0]}


def compute_pi(A: MultiSimplicialSet, r: int) -> dict:
    """The quotient map from bottom elements to class representatives."""
    if r == 0:
        return {x: x for x in A.level(())}
    if r == 1:
        return _slice_pi_1axis(A)
    if r != 2:
        raise StructuralError("arity above 2 is out of scope")
    Xhat = _hat_nerve(A)
    if Xhat is None:
        raise StructuralError("hat nerve ill-defined")
    ok, _, hat_cat = is_nerve(Xhat)
    if not ok:
        raise StructuralError("hat is not a nerve")
    hat_names = {str(x): x for x in Xhat.levels[0]}
    hat_reps = _iso_classes(hat_cat)
    pi0 = _slice_pi(A, 0)
    return {x: hat_names[hat_reps[str(pi0[x])]] for x in A.level((0, 0))}


# ---------------------------------------------------------------------------
# internal and external equivalence (lax flavour)
# ---------------------------------------------------------------------------

def nerve_internal_equiv(X: TruncatedSimplicialSet, level: int, x, y) -> bool:
    """For a nerve: level 0 compares iso classes, level 1 is equality on
    parallel elements."""
    if level == 0:
        ok, _, cat = is_nerve(X)
        if not ok:
            raise StructuralError("not a nerve")
        return cat.isomorphic_objects(str(x), str(y))
    if X.face(1, 1, x) != X.face(1, 1, y) or X.face(1, 0, x) != X.face(1, 0, y):
        return False
    return x == y


def is_equivalence_map1(phi: NatTrans1):
    """External equivalence for a map of 1-axis truncatable functors
    (nerves): essential surjectivity with uniqueness up to isomorphism,
    and unique on-the-nose lifting of 1-levels (fullness+faithfulness).
    Returns (bool, witness)."""
    dom, cod = phi.dom, phi.cod
    for X in (dom, cod):
        ok, witness, _ = is_nerve(X)
        if not ok:
            return False, ("not-truncatable", witness)
    for y in cod.levels[0]:
        hits = [x for x in dom.levels[0]
                if nerve_internal_equiv(cod, 0, phi.at(0, x), y)]
        if not hits:
            return False, ("essential-surjectivity", y)
        for x1 in hits:
            for x2 in hits:
                if not nerve_internal_equiv(dom, 0, x1, x2):
                    return False, ("uniqueness-up-to-equivalence", y, x1, x2)
    for x in dom.levels[0]:
        for xp in dom.levels[0]:
            for h in cod.levels[1]:
                if cod.face(1, 1, h) != phi.at(0, x) or cod.face(1, 0, h) != phi.at(0, xp):
                    continue
                lifts = [g for g in dom.levels[1]
                         if dom.face(1, 1, g) == x and dom.face(1, 0, g) == xp
                         and phi.at(1, g) == h]
                if not lifts:
                    return False, ("lifting", x, xp, h)
                if len(lifts) > 1:
                    return False, ("lift-uniqueness", x, xp, h, lifts[0], lifts[1])
    return True, None


def check_weak_ncat_ta(A: MultiSimplicialSet, n: int) -> ValidationReport:
    report = ValidationReport(f"ta-like n={n}")
    if n == 0:
        if A.arity != 0:
            report.add("arity", (A.arity,))
        return report
    if n == 1:
        if A.arity != 1:
            report.add("arity", (A.arity,))
            return report
        ok, witness, _ = is_nerve(A.to_truncated())
        if not ok:
            report.add("truncatable-and-segal", tuple(witness))
        return report
    if n != 2 or A.arity != 2:
        report.add("arity", (A.arity, n))
        return report
    ok, witness = truncatable(A, 2)
    if not ok:
        report.add("truncatable", tuple(witness))
        return report
    for witness in constancy_violations(slice_to_truncated(A, 0)):
        report.add("constancy", witness)
    max_k = max(K[0] for K in A.indices)
    for k in range(max_k + 1):
        phi = outer_segal_nat(A, k)
        if phi.dom.cutoff < 3:
            continue  # slice too shallow to carry the nerve structure
        ok, witness = is_equivalence_map1(phi)
        if not ok:
            report.add("outer-segal-equivalence", (k,) + witness)
    for k1 in range(max_k + 1):
        sl = slice_to_truncated(A, k1)
        for k in range(sl.cutoff + 1):
            ok, witness = segal_bijective(sl, k)
            if not ok:
                report.add("inner-segal-bijective", (k1, k) + witness)
    return report


# ---------------------------------------------------------------------------
# the two-axis nerve of a bicategory
# ---------------------------------------------------------------------------

def _mk_cell(objs, fs, alphas, iotas):
    return (tuple(objs), tuple(sorted(fs.items())), tuple(sorted(alphas.items())),
            tuple(sorted(iotas.items())))


def _unpack(cell):
    objs, fs, alphas, iotas = cell
    return objs, dict(fs), dict(alphas), dict(iotas)


def _hom_chains(b: FiniteBicategory, a, c, k: int):
    """Chains f^0 -> ... -> f^k in hom(a, c): pairs (f-tuple, alpha-tuple)."""
    cat = b.hom[(a, c)]
    chains = [((f,), ()) for f in cat.objects]
    for _ in range(k):
        nxt = []
        for fs, als in chains:
            for al in cat.arrows:
                if cat.src[al] == fs[-1]:
                    nxt.append((fs + (cat.tgt[al],), als + (al,)))
        chains = nxt
    return chains


def _iso_arrows(b: FiniteBicategory, f, g):
    cat = b.hom_of_1cell(f)
    return [x for x in cat.arrows
            if cat.src[x] == f and cat.tgt[x] == g and cat.inverse(x) is not None]


def _enumerate_two_nerve_level(b: FiniteBicategory, j: int, k: int,
                               budget: int) -> list:
    out = []
    idx_pairs = [(u, v) for u in range(j + 1) for v in range(u + 1, j + 1)]
    triples = [(u, v, w) for u in range(j + 1) for v in range(u + 1, j + 1)
               for w in range(v + 1, j + 1)]
    quads = [(u, v, w, x) for u in range(j + 1) for v in range(u + 1, j + 1)
             for w in range(v + 1, j + 1) for x in range(w + 1, j + 1)]
    for objs in product(b.objects, repeat=j + 1):
        pair_chains = {}
        feasible = True
        for (u, v) in idx_pairs:
            chains = _hom_chains(b, objs[u], objs[v], k)
            if not chains:
                feasible = False
                break
            pair_chains[(u, v)] = chains
        if not feasible:
            continue
        for combo in product(*(pair_chains[p] for p in idx_pairs)):
            fs, alphas = {}, {}
            for (u, v), (ftup, altup) in zip(idx_pairs, combo):
                for z in range(k + 1):
                    fs[(u, v, z)] = ftup[z]
                for z in range(1, k + 1):
                    alphas[(u, v, z)] = altup[z - 1]
            families_per_triple = []
            ok = True
            for (u, v, w) in triples:
                families = [()]
                for z in range(k + 1):
                    grown = []
                    cands = _iso_arrows(b, b.hcomp1(fs[(v, w, z)], fs[(u, v, z)]),
                                        fs[(u, w, z)])
                    for fam in families:
                        for iz in cands:
                            if z >= 1:
                                lhs = b.vcomp(iz, b.hcomp2(alphas[(v, w, z)],
                                                           alphas[(u, v, z)]))
                                rhs = b.vcomp(alphas[(u, w, z)], fam[z - 1])
                                if lhs != rhs:
                                    continue
                            grown.append(fam + (iz,))
                    families = grown
                    if not families:
                        break
                if not families:
                    ok = False
                    break
                families_per_triple.append(families)
            if not ok:
                continue
            for iota_combo in product(*families_per_triple):
                iotas = {}
                for (u, v, w), fam in zip(triples, iota_combo):
                    for z in range(k + 1):
                        iotas[(u, v, w, z)] = fam[z]
                good = True
                for (u, v, w, x) in quads:
                    for z in range(k + 1):
                        fwx, fvw, fuv = fs[(w, x, z)], fs[(v, w, z)], fs[(u, v, z)]
                        lhs = b.vcomp_chain([
                            b.assoc[(fwx, fvw, fuv)],
                            b.hcomp2(b.id2(fwx), iotas[(u, v, w, z)]),
                            iotas[(u, w, x, z)],
                        ])
                        rhs = b.vcomp(iotas[(u, v, x, z)],
                                      b.hcomp2(iotas[(v, w, x, z)], b.id2(fuv)))
                        if lhs != rhs:
                            good = False
                            break
                    if not good:
                        break
                if good:
                    out.append(_mk_cell(objs, fs, alphas, iotas))
                    if len(out) > budget:
                        raise StructuralError(
                            f"two-nerve level ({j},{k}) exceeds budget {budget}")
    return out


def _two_nerve_act(b: FiniteBicategory, cell, phi: DeltaMap, psi: DeltaMap):
    """Reindexing along (phi, psi): forget data along injections, insert
    identity cells and unitor comparison cells along surjections."""
    objs, fs, alphas, iotas = _unpack(cell)
    jp, kp = phi.dom, psi.dom
    objs2 = tuple(objs[phi(u)] for u in range(jp + 1))
    fs2, alphas2, iotas2 = {}, {}, {}
    for u in range(jp + 1):
        for v in range(u + 1, jp + 1):
            pu, pv = phi(u), phi(v)
            for z in range(kp + 1):
                if pu == pv:
                    fs2[(u, v, z)] = b.ident[objs[pu]]
                else:
                    fs2[(u, v, z)] = fs[(pu, pv, psi(z))]
            for z in range(1, kp + 1):
                if pu == pv:
                    alphas2[(u, v, z)] = b.id2(b.ident[objs[pu]])
                else:
                    chain = [alphas[(pu, pv, w)]
                             for w in range(psi(z - 1) + 1, psi(z) + 1)]
                    alphas2[(u, v, z)] = b.vcomp_chain(chain, fs[(pu, pv, psi(z))])
    for u in range(jp + 1):
        for v in range(u + 1, jp + 1):
            for w in range(v + 1, jp + 1):
                pu, pv, pw = phi(u), phi(v), phi(w)
                for z in range(kp + 1):
                    if pu < pv < pw:
                        iotas2[(u, v, w, z)] = iotas[(pu, pv, pw, psi(z))]
                    elif pu == pv and pv < pw:
                        iotas2[(u, v, w, z)] = b.runit[fs[(pv, pw, psi(z))]]
                    elif pu < pv and pv == pw:
                        iotas2[(u, v, w, z)] = b.lunit[fs[(pu, pv, psi(z))]]
                    else:
                        iotas2[(u, v, w, z)] = b.lunit[b.ident[objs[pu]]]
    return _mk_cell(objs2, fs2, alphas2, iotas2)


def converter_indices() -> set[tuple[int, int]]:
    """The levels the bicategory extraction needs: all (j, k) with k <= 1,
    plus the vertical-composition levels at j <= 2."""
    out = {(j, k) for j in range(4) for k in range(2)}
    out |= {(0, 2), (1, 2), (2, 2)}
    return out


def bicat_to_2nerve(b: FiniteBicategory, indices=None,
                    budget: int = 120000) -> MultiSimplicialSet:
    """The two-axis nerve.  ``indices`` defaults to the full (3,3)
    rectangle, falling back to the converter skyline when the rectangle
    would blow the cell budget."""
    if indices is None:
        try:
            return bicat_to_2nerve(b, rect_indices((3, 3)), budget)
        except StructuralError:
            return bicat_to_2nerve(b, converter_indices(), budget)
    indices = set(indices)
    cells = {}
    for (j, k) in sorted(indices):
        cells[(j, k)] = tuple(_enumerate_two_nerve_level(b, j, k, budget))
    faces = {}
    degens = {}
    for (j, k) in indices:
        lookup_down0 = (j - 1, k)
        if j >= 1:
            for i in range(j + 1):
                phi, psi = delta_face(j, i), DeltaMap(k, k, tuple(range(k + 1)))
                faces[(0, (j, k), i)] = {
                    c: _two_nerve_act(b, c, phi, psi) for c in cells[(j, k)]}
        if k >= 1:
            for i in range(k + 1):
                phi = DeltaMap(j, j, tuple(range(j + 1)))
                psi = delta_face(k, i)
                faces[(1, (j, k), i)] = {
                    c: _two_nerve_act(b, c, phi, psi) for c in cells[(j, k)]}
        if (j + 1, k) in indices:
            for i in range(j + 1):
                phi = _degen_map(j, i)
                psi = DeltaMap(k, k, tuple(range(k + 1)))
                degens[(0, (j, k), i)] = {
                    c: _two_nerve_act(b, c, phi, psi) for c in cells[(j, k)]}
        if (j, k + 1) in indices:
            for i in range(k + 1):
                phi = DeltaMap(j, j, tuple(range(j + 1)))
                psi = _degen_map(k, i)
                degens[(1, (j, k), i)] = {
                    c: _two_nerve_act(b, c, phi, psi) for c in cells[(j, k)]}
    A = MultiSimplicialSet(2, indices, cells, faces, degens)
    _check_action_closure(A)
    return A


def _degen_map(m: int, i: int) -> DeltaMap:
    # sigma_i as a map [m+1] -> [m]
    vals = list(range(i + 1)) + list(range(i, m + 1))
    return DeltaMap(m + 1, m, tuple(vals))


def _check_action_closure(A: MultiSimplicialSet) -> None:
    for tables, shift in ((A.faces, -1), (A.degens, 1)):
        for (axis, K, i), table in tables.items():
            KT = K[:axis] + (K[axis] + shift,) + K[axis + 1:]
            lvl = set(A.cells[KT])
            for x, y in table.items():
                if y not in lvl:
                    raise StructuralError(
                        f"two-nerve action leaves the enumerated level at {K}->{KT}")


# ---------------------------------------------------------------------------
# two-axis nerve -> bicategory
# ---------------------------------------------------------------------------

def two_nerve_to_bicat(A: MultiSimplicialSet, choice: str = "min") -> FiniteBicategory:
    """Extract a bicategory, choosing pseudo-inverses to the outer Segal
    functors deterministically (``choice`` orders the candidate preimages).

    Preimages are chosen exactly when possible, otherwise up to
    componentwise isomorphism; comparison data is lifted through the
    functor, which makes the chosen equivalences adjoint and the
    resulting associators coherent.
    """
    sel = min if choice == "min" else max

    objs = sorted(A.level((0, 0)), key=repr)
    ones = sorted(A.level((1, 0)), key=repr)
    twos = sorted(A.level((1, 1)), key=repr)
    src1 = {c: A.face(0, (1, 0), 1, c) for c in ones}
    tgt1 = {c: A.face(0, (1, 0), 0, c) for c in ones}
    src2 = {c: A.face(1, (1, 1), 1, c) for c in twos}
    tgt2 = {c: A.face(1, (1, 1), 0, c) for c in twos}
    rid2 = {c: A.degen(1, (1, 0), 0, c) for c in ones}

    seg12 = {}
    for w in A.level((1, 2)):
        t = tuple(A.act_axis(1, delta_iota(l, 2), (1, 2), w) for l in (1, 2))
        if t in seg12:
            raise StructuralError("vertical Segal map not injective")
        seg12[t] = w

    def vc(beta, alpha):
        if src2[beta] != tgt2[alpha]:
            raise StructuralError("vertical composition mismatch")
        w = seg12.get((alpha, beta))
        if w is None:
            raise StructuralError("vertical Segal map not surjective")
        return A.act_axis(1, DeltaMap(1, 2, (0, 2)), (1, 2), w)

    def vc_chain(chain, at=None):
        if not chain:
            return rid2[at]
        out = chain[0]
        for x in chain[1:]:
            out = vc(x, out)
        return out

    def inv(x):
        for y in twos:
            if src2[y] == tgt2[x] and tgt2[y] == src2[x]:
                if vc(y, x) == rid2[src2[x]] and vc(x, y) == rid2[tgt2[x]]:
                    return y
        raise StructuralError("required 2-cell inverse is missing")

    ident_raw = {a: A.degen(0, (0, 0), 0, a) for a in objs}

    def phi_obj(k, x):
        return tuple(A.act_axis(0, delta_iota(l, k), (k, 0), x)
                     for l in range(1, k + 1))

    def phi_arr(k, x):
        return tuple(A.act_axis(0, delta_iota(l, k), (k, 1), x)
                     for l in range(1, k + 1))

    psi_cache: dict = {}

    def psi(k, y):
        key = (k, y)
        if key in psi_cache:
            return psi_cache[key]
        exact = [x for x in A.level((k, 0)) if phi_obj(k, x) == y]
        if exact:
            x = sel(exact, key=repr)
            eps = tuple(rid2[f] for f in y)
        else:
            found = None
            for x in sorted(A.level((k, 0)), key=repr):
                img = phi_obj(k, x)
                comps = []
                good = True
                for l in range(k):
                    isos = sorted(
                        (m for m in twos
                         if src2[m] == img[l] and tgt2[m] == y[l]
                         and _is_inv(m)), key=repr)
                    if not isos:
                        good = False
                        break
                    comps.append(isos[0] if choice == "min" else isos[-1])
                if good:
                    found = (x, tuple(comps))
                    break
            if found is None:
                raise StructuralError("Segal functor is not essentially surjective")
            x, eps = found
        psi_cache[key] = (x, eps)
        return x, eps

    inv_cache: dict = {}

    def _is_inv(m):
        if m not in inv_cache:
            try:
                inv_cache[m] = inv(m) is not None
            except StructuralError:
                inv_cache[m] = False
        return inv_cache[m]

    def lift(k, src_x, tgt_x, image):
        hits = [g for g in A.level((k, 1))
                if A.face(1, (k, 1), 1, g) == src_x
                and A.face(1, (k, 1), 0, g) == tgt_x
                and phi_arr(k, g) == image]
        if len(hits) != 1:
            raise StructuralError(
                f"expected a unique lift at level {k}, found {len(hits)}")
        return hits[0]

    def psi_arr(k, m, y, y2):
        x, eps = psi(k, y)
        x2, eps2 = psi(k, y2)
        image = tuple(vc(inv(eps2[l]), vc(m[l], eps[l])) for l in range(k))
        return lift(k, x, x2, image)

    def can(k, x):
        y = phi_obj(k, x)
        x0, eps = psi(k, y)
        return lift(k, x0, x, eps)

    def c_obj(x):
        return A.act_axis(0, DeltaMap(1, 2, (0, 2)), (2, 0), x)

    def c_arr(x):
        return A.act_axis(0, DeltaMap(1, 2, (0, 2)), (2, 1), x)

    hcomp_raw = {}
    hcomp2_raw = {}
    for f in ones:
        for g in ones:
            if tgt1[f] != src1[g]:
                continue
            hcomp_raw[(g, f)] = c_obj(psi(2, (f, g))[0])
    for alpha in twos:
        for beta in twos:
            if tgt1[src2[alpha]] != src1[src2[beta]]:
                continue
            y = (src2[alpha], src2[beta])
            y2 = (tgt2[alpha], tgt2[beta])
            hcomp2_raw[(beta, alpha)] = c_arr(psi_arr(2, (alpha, beta), y, y2))

    assoc_raw = {}
    for f in ones:
        for g in ones:
            if tgt1[f] != src1[g]:
                continue
            for h in ones:
                if tgt1[g] != src1[h]:
                    continue
                w = psi(3, (f, g, h))[0]
                F3 = A.face(0, (3, 0), 3, w)
                F2 = A.face(0, (3, 0), 2, w)
                F1 = A.face(0, (3, 0), 1, w)
                F0 = A.face(0, (3, 0), 0, w)
                a_cell = A.act_axis(0, DeltaMap(1, 3, (0, 2)), (3, 0), w)
                b_cell = A.act_axis(0, DeltaMap(1, 3, (1, 3)), (3, 0), w)
                p = c_arr(can(2, F3))
                q = c_arr(can(2, F0))
                hg = hcomp_raw[(h, g)]
                gf = hcomp_raw[(g, f)]
                left = vc(c_arr(can(2, F2)),
                          c_arr(psi_arr(2, (rid2[f], q), (f, hg), (f, b_cell))))
                right = vc(c_arr(can(2, F1)),
                           c_arr(psi_arr(2, (p, rid2[h]), (gf, h), (a_cell, h))))
                assoc_raw[(h, g, f)] = vc(inv(right), left)

    lunit_raw = {}
    runit_raw = {}
    for f in ones:
        z1 = A.degen(0, (1, 0), 1, f)
        z0 = A.degen(0, (1, 0), 0, f)
        lunit_raw[f] = c_arr(can(2, z1))
        runit_raw[f] = c_arr(can(2, z0))

    # rename into the output structure
    oname = {c: f"a{i}" for i, c in enumerate(objs)}
    fname = {c: f"f{i}" for i, c in enumerate(ones)}
    xname = {c: f"x{i}" for i, c in enumerate(twos)}
    homs: dict[tuple[str, str], FiniteCategory] = {}
    for a in objs:
        for c in objs:
            fobjs = tuple(fname[f] for f in ones if src1[f] == a and tgt1[f] == c)
            fset = {f for f in ones if src1[f] == a and tgt1[f] == c}
            arrs = tuple(xname[x] for x in twos if src2[x] in fset)
            comp = {}
            for alpha in twos:
                if src2[alpha] not in fset:
                    continue
                for beta in twos:
                    if src2[beta] != tgt2[alpha]:
                        continue
                    comp[(xname[beta], xname[alpha])] = xname[vc(beta, alpha)]
            homs[(oname[a], oname[c])] = FiniteCategory(
                objects=fobjs, arrows=arrs,
                src={xname[x]: fname[src2[x]] for x in twos if src2[x] in fset},
                tgt={xname[x]: fname[tgt2[x]] for x in twos if src2[x] in fset},
                comp=comp,
                ident={fname[f]: xname[rid2[f]] for f in fset},
            )
    return FiniteBicategory(
        objects=tuple(oname[a] for a in objs),
        hom=homs,
        ident={oname[a]: fname[ident_raw[a]] for a in objs},
        hcomp_obj={(fname[g], fname[f]): fname[v]
                   for (g, f), v in hcomp_raw.items()},
        hcomp_arr={(xname[beta], xname[alpha]): xname[v]
                   for (beta, alpha), v in hcomp2_raw.items()},
        assoc={(fname[h], fname[g], fname[f]): xname[v]
               for (h, g, f), v in assoc_raw.items()},
        lunit={fname[f]: xname[v] for f, v in lunit_raw.items()},
        runit={fname[f]: xname[v] for f, v in runit_raw.items()},
    )
