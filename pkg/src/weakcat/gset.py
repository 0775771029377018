"""Finite globular sets and strict n-categories (n <= 3).

Cells are opaque string identifiers, unique within each dimension.
``StrictNCat`` stores its composition tables explicitly; the validator
tags every violation with the axiom group it breaks (1: endpoints of
composites, 2: identity endpoints, 3: associativity/units,
4: interchange and identity functoriality).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .report import StructuralError, ValidationReport
from .cat import FiniteCategory


@dataclass(frozen=True)
class FiniteGlobularSet:
    n: int
    cells: dict[int, tuple[str, ...]]
    src: dict[int, dict[str, str]]   # src[m]: cells[m] -> cells[m-1], 1 <= m <= n
    tgt: dict[int, dict[str, str]]

    def __post_init__(self):
        if not 0 <= self.n <= 3:
            raise StructuralError(f"dimension bound {self.n} outside 0..3")
        for m in range(self.n + 1):
            if m not in self.cells:
                raise StructuralError(f"missing cell list at dimension {m}")
            seen = set(self.cells[m])
            if len(seen) != len(self.cells[m]):
                raise StructuralError(f"duplicate identifiers at dimension {m}")
        for m in range(1, self.n + 1):
            lower = set(self.cells[m - 1])
            for x in self.cells[m]:
                for name, table in (("src", self.src), ("tgt", self.tgt)):
                    if m not in table or x not in table[m]:
                        raise StructuralError(f"{name} undefined on {x!r} (dim {m})")
                    if table[m][x] not in lower:
                        raise StructuralError(
                            f"{name}({x!r}) = {table[m][x]!r} is not a {m-1}-cell")

    def dims(self):
        return range(self.n + 1)

    def s(self, m: int, x: str) -> str:
        return self.src[m][x]

    def t(self, m: int, x: str) -> str:
        return self.tgt[m][x]

    def iter_src(self, m: int, x: str, steps: int) -> str:
        for k in range(steps):
            x = self.src[m - k][x]
        return x

    def iter_tgt(self, m: int, x: str, steps: int) -> str:
        for k in range(steps):
            x = self.tgt[m - k][x]
        return x


def validate_globular_set(g: FiniteGlobularSet) -> ValidationReport:
    """Every globularity violation, as (cell, which equation)."""
    report = ValidationReport("globular-set")
    for m in range(2, g.n + 1):
        for x in g.cells[m]:
            if g.s(m - 1, g.s(m, x)) != g.s(m - 1, g.t(m, x)):
                report.add("globularity-ss-st", (x,), f"dim {m}")
            if g.t(m - 1, g.s(m, x)) != g.t(m - 1, g.t(m, x)):
                report.add("globularity-ts-tt", (x,), f"dim {m}")
    return report


@dataclass(frozen=True)
class ReflexiveGlobularSet:
    base: FiniteGlobularSet
    ids: dict[int, dict[str, str]]   # ids[m]: cells[m] -> cells[m+1], 0 <= m < n

    def __post_init__(self):
        g = self.base
        for m in range(g.n):
            for x in g.cells[m]:
                if m not in self.ids or x not in self.ids[m]:
                    raise StructuralError(f"identity undefined on {x!r} (dim {m})")
                if self.ids[m][x] not in g.cells[m + 1]:
                    raise StructuralError(f"identity of {x!r} is not a {m+1}-cell")

    @property
    def n(self):
        return self.base.n

    def id_of(self, m: int, x: str) -> str:
        return self.ids[m][x]

    def iter_id(self, m: int, x: str, steps: int) -> str:
        for k in range(steps):
            x = self.ids[m + k][x]
        return x


def validate_reflexive(r: ReflexiveGlobularSet) -> ValidationReport:
    report = validate_globular_set(r.base)
    report.checker = "reflexive-globular-set"
    g = r.base
    for m in range(g.n):
        for x in g.cells[m]:
            i = r.ids[m][x]
            if g.s(m + 1, i) != x or g.t(m + 1, i) != x:
                report.add("identity-endpoints", (x, i), f"dim {m}")
    return report


@dataclass(frozen=True)
class StrictNCat:
    gset: FiniteGlobularSet
    # comp[(m, p)][(b, a)] = b o_p a for m > p >= 0; (b, a) composable along p-cells
    comp: dict[tuple[int, int], dict[tuple[str, str], str]]
    ids: dict[int, dict[str, str]]   # ids[m]: cells[m] -> cells[m+1] for m < n

    @property
    def n(self):
        return self.gset.n

    def reflexive(self) -> ReflexiveGlobularSet:
        return ReflexiveGlobularSet(self.gset, self.ids)

    def composable(self, m: int, p: int):
        g = self.gset
        for b, a in product(g.cells[m], g.cells[m]):
            if g.iter_src(m, b, m - p) == g.iter_tgt(m, a, m - p):
                yield b, a

    def compose(self, m: int, p: int, b: str, a: str) -> str:
        table = self.comp.get((m, p), {})
        if (b, a) not in table:
            raise StructuralError(f"comp_{p} undefined on ({b!r},{a!r}) at dim {m}")
        return table[(b, a)]

    def iter_id(self, m: int, x: str, steps: int) -> str:
        for k in range(steps):
            x = self.ids[m + k][x]
        return x


def validate_strict_ncat(c: StrictNCat, *, allow_partial: bool = False) -> ValidationReport:
    """Axioms 1-4 of a strict n-category, with concrete witness tuples.

    ``allow_partial`` skips law instances whose composites fall outside the
    stored tables (used for size-bounded free constructions on graphs with
    loops); on a total table it changes nothing.
    """
    g = c.gset
    report = validate_globular_set(g)
    report.checker = "strict-ncat"
    if not report.ok:
        return report
    n = g.n

    def lookup(m, p, b, a):
        return c.comp.get((m, p), {}).get((b, a))

    # structural: totality of tables on composable pairs
    for m in range(1, n + 1):
        for p in range(m):
            for b, a in c.composable(m, p):
                if lookup(m, p, b, a) is None and not allow_partial:
                    report.add("comp-missing", (m, p, b, a))
    if not allow_partial and "comp-missing" in report.clauses():
        return report

    # axiom 1: source/target of composites
    for m in range(1, n + 1):
        for p in range(m):
            for (b, a), x in c.comp.get((m, p), {}).items():
                if m == p + 1:
                    if g.s(m, x) != g.s(m, a):
                        report.add("axiom1-source", (m, p, b, a, x))
                    if g.t(m, x) != g.t(m, b):
                        report.add("axiom1-target", (m, p, b, a, x))
                else:
                    sa, sb = g.s(m, a), g.s(m, b)
                    ta, tb = g.t(m, a), g.t(m, b)
                    if g.s(m, x) != lookup(m - 1, p, sb, sa) and lookup(m - 1, p, sb, sa) is not None:
                        report.add("axiom1-source", (m, p, b, a, x))
                    if g.t(m, x) != lookup(m - 1, p, tb, ta) and lookup(m - 1, p, tb, ta) is not None:
                        report.add("axiom1-target", (m, p, b, a, x))

    # axiom 2: identity endpoints
    for m in range(n):
        for x in g.cells[m]:
            i = c.ids[m][x]
            if g.s(m + 1, i) != x or g.t(m + 1, i) != x:
                report.add("axiom2-identity-endpoints", (m, x, i))

    # axiom 3: units and associativity
    for m in range(1, n + 1):
        for p in range(m):
            for x in g.cells[m]:
                left = c.iter_id(p, g.iter_tgt(m, x, m - p), m - p)
                right = c.iter_id(p, g.iter_src(m, x, m - p), m - p)
                lu = lookup(m, p, left, x)
                ru = lookup(m, p, x, right)
                if lu is not None and lu != x:
                    report.add("axiom3-left-unit", (m, p, x))
                if ru is not None and ru != x:
                    report.add("axiom3-right-unit", (m, p, x))
            for b, a in c.composable(m, p):
                ba = lookup(m, p, b, a)
                if ba is None:
                    continue
                for z in g.cells[m]:
                    if g.iter_src(m, z, m - p) != g.iter_tgt(m, b, m - p):
                        continue
                    zb = lookup(m, p, z, b)
                    lhs = lookup(m, p, zb, a) if zb is not None else None
                    rhs = lookup(m, p, z, ba)
                    if lhs is None or rhs is None:
                        if not allow_partial and (zb is not None):
                            report.add("axiom3-associativity", (m, p, z, b, a))
                        continue
                    if lhs != rhs:
                        report.add("axiom3-associativity", (m, p, z, b, a))

    # axiom 4: identity functoriality and interchange
    for p in range(1, n):
        for q in range(p):
            for fp, f in c.composable(p, q):
                comp_pq = lookup(p, q, fp, f)
                if comp_pq is None:
                    continue
                lhs = lookup(p + 1, q, c.ids[p][fp], c.ids[p][f])
                if lhs is not None and lhs != c.ids[p][comp_pq]:
                    report.add("axiom4-identity", (p, q, fp, f))
    for m in range(2, n + 1):
        for p in range(1, m):
            for q in range(p):
                cells = g.cells[m]
                for bp, b in c.composable(m, p):
                    for ap, a in c.composable(m, p):
                        if g.iter_src(m, b, m - q) != g.iter_tgt(m, a, m - q):
                            continue
                        if g.iter_src(m, bp, m - q) != g.iter_tgt(m, ap, m - q):
                            continue
                        bpb = lookup(m, p, bp, b)
                        apa = lookup(m, p, ap, a)
                        bpap = lookup(m, q, bp, ap)
                        ba = lookup(m, q, b, a)
                        if None in (bpb, apa, bpap, ba):
                            continue
                        lhs = lookup(m, q, bpb, apa)
                        rhs = lookup(m, p, bpap, ba)
                        if lhs is None or rhs is None:
                            continue
                        if lhs != rhs:
                            report.add("axiom4-interchange", (m, p, q, bp, b, ap, a))
    return report


# -- dimension-1 round trip --------------------------------------------------

def strict_1cat_to_category(c: StrictNCat) -> FiniteCategory:
    if c.n < 1:
        raise StructuralError("need dimension >= 1")
    g = c.gset
    return FiniteCategory(
        objects=tuple(g.cells[0]),
        arrows=tuple(g.cells[1]),
        src=dict(g.src[1]),
        tgt=dict(g.tgt[1]),
        comp=dict(c.comp.get((1, 0), {})),
        ident=dict(c.ids[0]),
    )


def category_to_strict_1cat(cat: FiniteCategory) -> StrictNCat:
    g = FiniteGlobularSet(
        n=1,
        cells={0: tuple(cat.objects), 1: tuple(cat.arrows)},
        src={1: dict(cat.src)},
        tgt={1: dict(cat.tgt)},
    )
    return StrictNCat(g, {(1, 0): dict(cat.comp)}, {0: dict(cat.ident)})


def discrete_strict_2cat(names: list[str]) -> StrictNCat:
    """All cells above dimension 0 are identities."""
    c0 = tuple(names)
    c1 = tuple(f"1_{a}" for a in names)
    c2 = tuple(f"2_{a}" for a in names)
    g = FiniteGlobularSet(
        n=2,
        cells={0: c0, 1: c1, 2: c2},
        src={1: {f"1_{a}": a for a in names}, 2: {f"2_{a}": f"1_{a}" for a in names}},
        tgt={1: {f"1_{a}": a for a in names}, 2: {f"2_{a}": f"1_{a}" for a in names}},
    )
    comp = {
        (1, 0): {(f"1_{a}", f"1_{a}"): f"1_{a}" for a in names},
        (2, 0): {(f"2_{a}", f"2_{a}"): f"2_{a}" for a in names},
        (2, 1): {(f"2_{a}", f"2_{a}"): f"2_{a}" for a in names},
    }
    ids = {
        0: {a: f"1_{a}" for a in names},
        1: {f"1_{a}": f"2_{a}" for a in names},
    }
    return StrictNCat(g, comp, ids)
