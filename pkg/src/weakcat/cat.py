"""Finite categories, functors between them, and equivalence detection.

Everything is table-driven: objects and arrows are opaque strings, and
composition is an explicit dict on composable pairs.  Laws are checked
exhaustively, which doubles as the test oracle for the rest of the
package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .report import StructuralError, ValidationReport


@dataclass(frozen=True)
class FiniteCategory:
    objects: tuple[str, ...]
    arrows: tuple[str, ...]
    src: dict[str, str]
    tgt: dict[str, str]
    # comp[(g, f)] = g after f, defined exactly when tgt[f] == src[g]
    comp: dict[tuple[str, str], str]
    ident: dict[str, str]

    def __post_init__(self):
        for f in self.arrows:
            if f not in self.src or f not in self.tgt:
                raise StructuralError(f"arrow {f!r} missing src/tgt")
            if self.src[f] not in self.objects or self.tgt[f] not in self.objects:
                raise StructuralError(f"arrow {f!r} has dangling endpoint")
        for a in self.objects:
            if a not in self.ident:
                raise StructuralError(f"object {a!r} missing identity")
            if self.ident[a] not in self.arrows:
                raise StructuralError(f"identity of {a!r} is not an arrow")
        for (g, f), h in self.comp.items():
            if g not in self.arrows or f not in self.arrows or h not in self.arrows:
                raise StructuralError(f"composition entry ({g!r},{f!r}) dangles")

    def hom(self, a: str, b: str) -> list[str]:
        return [f for f in self.arrows if self.src[f] == a and self.tgt[f] == b]

    def composable_pairs(self):
        for g, f in product(self.arrows, self.arrows):
            if self.src[g] == self.tgt[f]:
                yield g, f

    def compose(self, g: str, f: str) -> str:
        if (g, f) not in self.comp:
            raise StructuralError(f"composition undefined on ({g!r},{f!r})")
        return self.comp[(g, f)]

    def compose_path(self, path: list[str], at: str | None = None) -> str:
        """Compose a path of arrows listed source-to-target; empty = identity."""
        if not path:
            if at is None:
                raise StructuralError("empty path needs a base object")
            return self.ident[at]
        out = path[0]
        for f in path[1:]:
            out = self.compose(f, out)
        return out

    def is_iso(self, f: str) -> bool:
        return self.inverse(f) is not None

    def inverse(self, f: str) -> str | None:
        a, b = self.src[f], self.tgt[f]
        for g in self.hom(b, a):
            if (
                self.comp.get((g, f)) == self.ident[a]
                and self.comp.get((f, g)) == self.ident[b]
            ):
                return g
        return None

    def isomorphic_objects(self, a: str, b: str) -> bool:
        return a == b or any(self.is_iso(f) for f in self.hom(a, b))


def validate_category(c: FiniteCategory) -> ValidationReport:
    report = ValidationReport("category")
    for g, f in c.composable_pairs():
        if (g, f) not in c.comp:
            report.add("comp-missing", (g, f), "composable pair without entry")
    for (g, f), h in c.comp.items():
        if c.src[g] != c.tgt[f]:
            report.add("comp-extra", (g, f), "entry on non-composable pair")
            continue
        if c.src[h] != c.src[f] or c.tgt[h] != c.tgt[g]:
            report.add("comp-endpoints", (g, f, h))
    for a in c.objects:
        i = c.ident[a]
        if c.src[i] != a or c.tgt[i] != a:
            report.add("identity-endpoints", (a, i))
    for f in c.arrows:
        ia, ib = c.ident[c.src[f]], c.ident[c.tgt[f]]
        if c.comp.get((f, ia)) != f:
            report.add("unit-right", (f,))
        if c.comp.get((ib, f)) != f:
            report.add("unit-left", (f,))
    for h, g in c.composable_pairs():
        for f in c.arrows:
            if c.src[g] == c.tgt[f]:
                lhs = c.comp.get((c.comp.get((h, g)), f))
                rhs = c.comp.get((h, c.comp.get((g, f))))
                if lhs != rhs or lhs is None:
                    report.add("associativity", (h, g, f))
    return report


@dataclass(frozen=True)
class FinFunctor:
    source: FiniteCategory
    target: FiniteCategory
    on_objects: dict[str, str]
    on_arrows: dict[str, str]


def validate_functor(F: FinFunctor) -> ValidationReport:
    report = ValidationReport("functor")
    c, d = F.source, F.target
    for a in c.objects:
        if F.on_objects.get(a) not in d.objects:
            report.add("object-map", (a,))
    for f in c.arrows:
        ff = F.on_arrows.get(f)
        if ff not in d.arrows:
            report.add("arrow-map", (f,))
            continue
        if d.src[ff] != F.on_objects.get(c.src[f]) or d.tgt[ff] != F.on_objects.get(c.tgt[f]):
            report.add("endpoints", (f, ff))
    for a in c.objects:
        if F.on_arrows.get(c.ident[a]) != d.ident.get(F.on_objects.get(a)):
            report.add("identities", (a,))
    for g, f in c.composable_pairs():
        lhs = F.on_arrows.get(c.comp.get((g, f)))
        rhs = d.comp.get((F.on_arrows.get(g), F.on_arrows.get(f)))
        if lhs != rhs:
            report.add("composition", (g, f))
    return report


def is_equivalence_functor(F: FinFunctor) -> tuple[bool, tuple | None]:
    """Full + faithful + essentially surjective, with a witness on failure.

    The witness is ('not-full', a, b, g), ('not-faithful', a, b, f1, f2) or
    ('not-essentially-surjective', d-object).
    """
    fr = validate_functor(F)
    if not fr.ok:
        raise StructuralError(f"not a functor: {fr}")
    c, d = F.source, F.target
    for a, b in product(c.objects, c.objects):
        image = {}
        for f in c.hom(a, b):
            ff = F.on_arrows[f]
            if ff in image:
                return False, ("not-faithful", a, b, image[ff], f)
            image[ff] = f
        for g in d.hom(F.on_objects[a], F.on_objects[b]):
            if g not in image:
                return False, ("not-full", a, b, g)
    for y in d.objects:
        if not any(d.isomorphic_objects(F.on_objects[a], y) for a in c.objects):
            return False, ("not-essentially-surjective", y)
    return True, None


def identity_functor(c: FiniteCategory) -> FinFunctor:
    return FinFunctor(c, c, {a: a for a in c.objects}, {f: f for f in c.arrows})


def categories_isomorphic(c: FiniteCategory, d: FiniteCategory) -> bool:
    """Exhaustive search for an invertible functor.  Desk-scale inputs only."""
    if len(c.objects) != len(d.objects) or len(c.arrows) != len(d.arrows):
        return False
    from itertools import permutations

    for perm in permutations(d.objects):
        omap = dict(zip(c.objects, perm))
        if _extend_to_iso(c, d, omap):
            return True
    return False


def _extend_to_iso(c: FiniteCategory, d: FiniteCategory, omap: dict) -> bool:
    buckets = []
    for a, b in product(c.objects, c.objects):
        hc = c.hom(a, b)
        hd = d.hom(omap[a], omap[b])
        if len(hc) != len(hd):
            return False
        buckets.append((hc, hd))
    from itertools import permutations

    def backtrack(i, amap):
        if i == len(buckets):
            F = FinFunctor(c, d, omap, amap)
            return validate_functor(F).ok
        hc, hd = buckets[i]
        for perm in permutations(hd):
            trial = dict(amap)
            trial.update(zip(hc, perm))
            # early reject: identities must match
            bad = False
            for a in c.objects:
                f = c.ident[a]
                if f in trial and trial[f] != d.ident[omap[a]]:
                    bad = True
                    break
            if not bad and backtrack(i + 1, trial):
                return True
        return False

    return backtrack(0, {})


# -- small constructions used throughout the corpus -------------------------

def discrete_category(names: list[str]) -> FiniteCategory:
    return FiniteCategory(
        objects=tuple(names),
        arrows=tuple(f"id_{a}" for a in names),
        src={f"id_{a}": a for a in names},
        tgt={f"id_{a}": a for a in names},
        comp={(f"id_{a}", f"id_{a}"): f"id_{a}" for a in names},
        ident={a: f"id_{a}" for a in names},
    )


def codiscrete_category(names: list[str]) -> FiniteCategory:
    """Exactly one arrow between every ordered pair of objects."""
    arrows = tuple(f"{a}>{b}" for a in names for b in names)
    comp = {}
    for a in names:
        for b in names:
            for c in names:
                comp[(f"{b}>{c}", f"{a}>{b}")] = f"{a}>{c}"
    return FiniteCategory(
        objects=tuple(names),
        arrows=arrows,
        src={f"{a}>{b}": a for a in names for b in names},
        tgt={f"{a}>{b}": b for a in names for b in names},
        comp=comp,
        ident={a: f"{a}>{a}" for a in names},
    )


def monoid_category(elements: list[str], table: dict[tuple[str, str], str],
                    unit: str, obj: str = "*") -> FiniteCategory:
    """One-object category from a monoid multiplication table."""
    return FiniteCategory(
        objects=(obj,),
        arrows=tuple(elements),
        src={e: obj for e in elements},
        tgt={e: obj for e in elements},
        comp=dict(table),
        ident={obj: unit},
    )


def arrow_category() -> FiniteCategory:
    return FiniteCategory(
        objects=("a", "b"),
        arrows=("id_a", "id_b", "f"),
        src={"id_a": "a", "id_b": "b", "f": "a"},
        tgt={"id_a": "a", "id_b": "b", "f": "b"},
        comp={
            ("id_a", "id_a"): "id_a",
            ("id_b", "id_b"): "id_b",
            ("f", "id_a"): "f",
            ("id_b", "f"): "f",
        },
        ident={"a": "id_a", "b": "id_b"},
    )


def terminal_category() -> FiniteCategory:
    return discrete_category(["*"])


def group_category(n: int) -> FiniteCategory:
    """Z/n as a one-object groupoid, arrows g0..g{n-1}."""
    names = [f"g{i}" for i in range(n)]
    table = {(names[i], names[j]): names[(i + j) % n] for i in range(n) for j in range(n)}
    return monoid_category(names, table, "g0")
