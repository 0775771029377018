"""Truncated simplicial sets: monotone-map combinatorics, nerves, Segal
maps, horns and fillers.

A ``TruncatedSimplicialSet`` stores levels up to a cutoff together with
the generator actions (faces ``d_i`` and degeneracies ``s_i``); the
action of an arbitrary monotone map is computed by factoring it through
the generators.  Horns are represented by their tuple of facet values
(Yoneda collapse), which keeps filler counting finite and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .report import StructuralError, ValidationReport
from .cat import FiniteCategory, validate_category


@dataclass(frozen=True)
class DeltaMap:
    dom: int                 # map [dom] -> [cod]
    cod: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.dom + 1:
            raise StructuralError("value table length disagrees with domain")
        if any(v < 0 or v > self.cod for v in self.values):
            raise StructuralError("value out of range")
        if any(self.values[i] > self.values[i + 1] for i in range(self.dom)):
            raise StructuralError("map is not monotone")

    def __call__(self, i: int) -> int:
        return self.values[i]

    def then(self, other: "DeltaMap") -> "DeltaMap":
        if self.cod != other.dom:
            raise StructuralError("maps not composable")
        return DeltaMap(self.dom, other.cod,
                        tuple(other.values[v] for v in self.values))


def delta_id(k: int) -> DeltaMap:
    return DeltaMap(k, k, tuple(range(k + 1)))


def delta_face(m: int, i: int) -> DeltaMap:
    """The injection [m-1] -> [m] missing i."""
    return DeltaMap(m - 1, m, tuple(v for v in range(m + 1) if v != i))


def delta_degen(m: int, i: int) -> DeltaMap:
    """The surjection [m+1] -> [m] repeating i."""
    vals = list(range(i + 1)) + list(range(i, m + 1))
    return DeltaMap(m + 1, m, tuple(vals))


def delta_iota(j: int, k: int) -> DeltaMap:
    """The embedding [1] -> [k] with 0 -> j-1, 1 -> j."""
    return DeltaMap(1, k, (j - 1, j))


def delta_const(k: int, v: int) -> DeltaMap:
    return DeltaMap(0, k, (v,))


def delta_vertexmap(dom: int, cod: int, values) -> DeltaMap:
    return DeltaMap(dom, cod, tuple(values))


def all_monotone(j: int, k: int) -> list[DeltaMap]:
    out = []

    def build(prefix):
        if len(prefix) == j + 1:
            out.append(DeltaMap(j, k, tuple(prefix)))
            return
        lo = prefix[-1] if prefix else 0
        for v in range(lo, k + 1):
            build(prefix + [v])

    build([])
    return out


def decompose(phi: DeltaMap) -> list[tuple[str, int, int]]:
    """Factor phi into generators: returns tokens ('s', m, i) for
    sigma_i: [m] -> [m-1] and ('d', m, i) for delta_i: [m-1] -> [m],
    composing left to right in diagrammatic order (phi = last o ... o first
    read in function order: first token applies first)."""
    v = list(phi.values)
    j, k = phi.dom, phi.cod
    for l in range(j):
        if v[l] == v[l + 1]:
            rest = DeltaMap(j - 1, k, tuple(v[:l] + v[l + 1:]))
            return [("s", j, l)] + decompose(rest)
    image = set(v)
    missing = [i for i in range(k + 1) if i not in image]
    if missing:
        i = missing[-1]
        shrunk = DeltaMap(j, k - 1, tuple(x if x < i else x - 1 for x in v))
        return decompose(shrunk) + [("d", k, i)]
    return []


@dataclass
class TruncatedSimplicialSet:
    cutoff: int
    levels: dict[int, tuple]
    faces: dict[tuple[int, int], dict]    # (m, i): X[m] -> X[m-1]
    degens: dict[tuple[int, int], dict]   # (m, i): X[m] -> X[m+1]

    def cells(self, m: int) -> tuple:
        return self.levels[m]

    def face(self, m: int, i: int, x):
        return self.faces[(m, i)][x]

    def degen(self, m: int, i: int, x):
        return self.degens[(m, i)][x]

    def act(self, phi: DeltaMap, x):
        """X(phi): X[phi.cod] -> X[phi.dom] applied to x."""
        if phi.cod > self.cutoff or phi.dom > self.cutoff:
            raise StructuralError("map exceeds the cutoff")
        tokens = decompose(phi)
        # contravariance: apply the token that is *last* in composition
        # order first
        for kind, m, i in reversed(tokens):
            if kind == "d":
                x = self.face(m, i, x)
            else:
                x = self.degen(m - 1, i, x)
        return x

    def is_degenerate(self, m: int, x) -> bool:
        """x in the image of some degeneracy from a lower level."""
        if m == 0:
            return False
        for mp in range(m):
            for phi in all_monotone(m, mp):
                if len(set(phi.values)) != mp + 1:
                    continue  # not surjective
                if any(self.act(phi, y) == x for y in self.levels[mp]):
                    return True
        return False


def validate_simplicial(X: TruncatedSimplicialSet) -> ValidationReport:
    """Generator totality plus the simplicial identities within cutoff."""
    report = ValidationReport("simplicial-set")
    M = X.cutoff
    for m in range(1, M + 1):
        for i in range(m + 1):
            table = X.faces.get((m, i))
            if table is None:
                report.add("structural", (m, i), "missing face table")
                continue
            for x in X.levels[m]:
                if x not in table or table[x] not in X.levels[m - 1]:
                    report.add("structural", (m, i, x), "face undefined or dangling")
    for m in range(M):
        for i in range(m + 1):
            table = X.degens.get((m, i))
            if table is None:
                report.add("structural", (m, i), "missing degeneracy table")
                continue
            for x in X.levels[m]:
                if x not in table or table[x] not in X.levels[m + 1]:
                    report.add("structural", (m, i, x), "degeneracy undefined or dangling")
    if not report.ok:
        return report
    for m in range(2, M + 1):
        for j in range(m + 1):
            for i in range(j):
                for x in X.levels[m]:
                    if X.face(m - 1, i, X.face(m, j, x)) != \
                            X.face(m - 1, j - 1, X.face(m, i, x)):
                        report.add("identity-dd", (m, i, j, x))
    for m in range(M - 1):
        for j in range(m + 1):
            for i in range(j + 1):
                for x in X.levels[m]:
                    if X.degen(m + 1, j + 1, X.degen(m, i, x)) != \
                            X.degen(m + 1, i, X.degen(m, j, x)):
                        report.add("identity-ss", (m, i, j, x))
    for m in range(1, M):
        for j in range(m + 1):
            for i in range(m + 2):
                for x in X.levels[m]:
                    lhs = X.face(m + 1, i, X.degen(m, j, x))
                    if i < j:
                        rhs = X.degen(m - 1, j - 1, X.face(m, i, x))
                    elif i in (j, j + 1):
                        rhs = x
                    else:
                        rhs = X.degen(m - 1, j, X.face(m, i - 1, x))
                    if lhs != rhs:
                        report.add("identity-ds", (m, i, j, x))
    return report


# -- nerves ------------------------------------------------------------------

def nerve(c: FiniteCategory, cutoff: int = 3) -> TruncatedSimplicialSet:
    """X[m] = composable m-chains (f_1, ..., f_m); X[0] = objects."""
    levels: dict[int, tuple] = {0: tuple(c.objects)}
    prev = {1: [(f,) for f in c.arrows]}
    levels[1] = tuple(prev[1])
    for m in range(2, cutoff + 1):
        cur = []
        for chain in prev[m - 1]:
            end = c.tgt[chain[-1]]
            for f in c.arrows:
                if c.src[f] == end:
                    cur.append(chain + (f,))
        prev[m] = cur
        levels[m] = tuple(cur)
    faces: dict[tuple[int, int], dict] = {}
    degens: dict[tuple[int, int], dict] = {}
    for i in range(2):
        faces[(1, i)] = {}
    for (f,) in prev[1]:
        faces[(1, 0)][(f,)] = c.tgt[f]
        faces[(1, 1)][(f,)] = c.src[f]
    for m in range(2, cutoff + 1):
        for i in range(m + 1):
            table = {}
            for chain in prev[m]:
                if i == 0:
                    table[chain] = chain[1:]
                elif i == m:
                    table[chain] = chain[:-1]
                else:
                    glued = c.compose(chain[i], chain[i - 1])
                    table[chain] = chain[:i - 1] + (glued,) + chain[i + 1:]
            faces[(m, i)] = table
    degens[(0, 0)] = {a: (c.ident[a],) for a in c.objects}
    for m in range(1, cutoff):
        for i in range(m + 1):
            table = {}
            for chain in prev[m]:
                if i == 0:
                    at = c.src[chain[0]]
                    table[chain] = (c.ident[at],) + chain
                else:
                    at = c.tgt[chain[i - 1]]
                    table[chain] = chain[:i] + (c.ident[at],) + chain[i:]
            degens[(m, i)] = table
    return TruncatedSimplicialSet(cutoff, levels, faces, degens)


def matching_tuples(X: TruncatedSimplicialSet, k: int) -> list[tuple]:
    """X[1] x_{X[0]} ... x_{X[0]} X[1] with k factors; for k = 0 the set
    X[0] itself (composable 0-chains are the vertices)."""
    if k == 0:
        return [(a,) for a in X.levels[0]]
    tuples: list[tuple] = [(x,) for x in X.levels[1]]
    for _ in range(k - 1):
        out = []
        for t in tuples:
            tail = X.face(1, 0, t[-1])
            for x in X.levels[1]:
                if X.face(1, 1, x) == tail:
                    out.append(t + (x,))
        tuples = out
    return tuples


def segal_map(X: TruncatedSimplicialSet, k: int) -> dict:
    """The map X[k] -> X[1] x_{X[0]} ... x_{X[0]} X[1] as an explicit dict.

    k = 0 and k = 1 are degenerate: the target is X[0] resp. X[1] and the
    map is the identity-like evaluation."""
    if k > X.cutoff:
        raise StructuralError("k exceeds cutoff")
    if k == 0:
        return {x: (x,) for x in X.levels[0]}
    out = {}
    for x in X.levels[k]:
        out[x] = tuple(X.act(delta_iota(j, k), x) for j in range(1, k + 1))
    return out


def segal_bijective(X: TruncatedSimplicialSet, k: int):
    """(is_bijective, witness).  Witness is ('not-injective', x, y, tuple)
    or ('not-surjective', tuple)."""
    mapping = segal_map(X, k)
    target = matching_tuples(X, k)
    seen: dict[tuple, object] = {}
    for x, t in mapping.items():
        if t in seen:
            return False, ("not-injective", seen[t], x, t)
        seen[t] = x
    for t in target:
        if t not in seen:
            return False, ("not-surjective", t)
    return True, None


def is_nerve(X: TruncatedSimplicialSet):
    """(bool, witness, extracted FiniteCategory or None).

    Requires cutoff >= 3: composition is read off level 2 and
    associativity off level 3."""
    if X.cutoff < 3:
        raise StructuralError("need cutoff >= 3 to recognize a nerve")
    for k in range(X.cutoff + 1):
        ok, witness = segal_bijective(X, k)
        if not ok:
            return False, (k,) + witness, None
    inv2 = {t: x for x, t in segal_map(X, 2).items()}
    objects = tuple(str(a) for a in X.levels[0])
    names0 = {a: str(a) for a in X.levels[0]}
    names1 = {f: str(f) for f in X.levels[1]}
    comp = {}
    for f in X.levels[1]:
        for g in X.levels[1]:
            if X.face(1, 0, f) == X.face(1, 1, g):
                w = inv2[(f, g)]
                comp[(names1[g], names1[f])] = names1[X.face(2, 1, w)]
    cat = FiniteCategory(
        objects=objects,
        arrows=tuple(names1[f] for f in X.levels[1]),
        src={names1[f]: names0[X.face(1, 1, f)] for f in X.levels[1]},
        tgt={names1[f]: names0[X.face(1, 0, f)] for f in X.levels[1]},
        comp=comp,
        ident={names0[a]: names1[X.degen(0, 0, a)] for a in X.levels[0]},
    )
    rep = validate_category(cat)
    if not rep.ok:
        return False, ("extracted-category-invalid", rep.violations[0].clause), None
    return True, None, cat


# -- horns and fillers --------------------------------------------------------

def enumerate_horns(X: TruncatedSimplicialSet, m: int, k: int) -> list[dict]:
    """All horns Lambda^k_m -> X as dicts {i: facet} for i != k, facets in
    X[m-1] satisfying d_i x_j = d_{j-1} x_i for i < j."""
    if not (0 <= k <= m and 1 <= m <= X.cutoff):
        raise StructuralError("horn indices out of range")
    indices = [i for i in range(m + 1) if i != k]
    horns: list[dict] = [{}]
    for j in indices:
        nxt = []
        for partial in horns:
            for x in X.levels[m - 1]:
                ok = True
                for i in partial:
                    # i < j always (indices ascend)
                    if m >= 2 and X.face(m - 1, i, x) != X.face(m - 1, j - 1, partial[i]):
                        ok = False
                        break
                if ok:
                    cand = dict(partial)
                    cand[j] = x
                    nxt.append(cand)
        horns = nxt
    return horns


def horn_fillers(X: TruncatedSimplicialSet, m: int, k: int, horn: dict) -> list:
    out = []
    for y in X.levels[m]:
        if all(X.face(m, i, y) == horn[i] for i in horn):
            out.append(y)
    return out


def horns_and_fillers(X: TruncatedSimplicialSet, m: int, k: int):
    """Census: list of (horn, fillers) pairs."""
    return [(h, horn_fillers(X, m, k, h)) for h in enumerate_horns(X, m, k)]


def inner_horns_unique(X: TruncatedSimplicialSet):
    """(bool, witness): every inner horn within the cutoff has exactly one
    filler.  The nerve characterization used by the disk-duality checker."""
    for m in range(2, X.cutoff + 1):
        for k in range(1, m):
            for horn, fillers in horns_and_fillers(X, m, k):
                if len(fillers) != 1:
                    return False, (m, k, tuple(sorted(horn.items(), key=str)),
                                   len(fillers))
    return True, None


def constant_simplicial(values: tuple, cutoff: int = 3) -> TruncatedSimplicialSet:
    levels = {m: tuple(values) for m in range(cutoff + 1)}
    faces = {(m, i): {x: x for x in values}
             for m in range(1, cutoff + 1) for i in range(m + 1)}
    degens = {(m, i): {x: x for x in values}
              for m in range(cutoff) for i in range(m + 1)}
    return TruncatedSimplicialSet(cutoff, levels, faces, degens)
