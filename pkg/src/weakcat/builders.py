"""Stock small structures used across the test corpus and the generators."""

from __future__ import annotations

from itertools import product

from .cat import FiniteCategory, codiscrete_category, monoid_category
from .gset import FiniteGlobularSet, StrictNCat
from .bicat import FiniteBicategory, from_strict_2cat
from .report import StructuralError


def monoid_strict_2cat(elements: list[str], table: dict[tuple[str, str], str],
                       unit: str) -> StrictNCat:
    """One-object strict 2-category with the monoid as 1-cells and only
    identity 2-cells."""
    ones = tuple(elements)
    twos = tuple(f"i_{e}" for e in elements)
    g = FiniteGlobularSet(
        n=2,
        cells={0: ("*",), 1: ones, 2: twos},
        src={1: {e: "*" for e in ones}, 2: {f"i_{e}": e for e in elements}},
        tgt={1: {e: "*" for e in ones}, 2: {f"i_{e}": e for e in elements}},
    )
    comp = {
        (1, 0): dict(table),
        (2, 0): {(f"i_{y}", f"i_{x}"): f"i_{table[(y, x)]}"
                 for y, x in product(elements, elements)},
        (2, 1): {(f"i_{e}", f"i_{e}"): f"i_{e}" for e in elements},
    }
    ids = {0: {"*": unit}, 1: {e: f"i_{e}" for e in elements}}
    return StrictNCat(g, comp, ids)


def max_monoid_strict_2cat(n: int = 3) -> StrictNCat:
    """One-object strict 2-category from the monoid ({0..n-1}, max)."""
    elements = [f"m{i}" for i in range(n)]
    table = {(f"m{i}", f"m{j}"): f"m{max(i, j)}" for i in range(n) for j in range(n)}
    return monoid_strict_2cat(elements, table, "m0")


def group_bicategory(n: int) -> FiniteBicategory:
    """Z/n as a one-object bicategory with discrete homs."""
    elements = [f"g{i}" for i in range(n)]
    table = {(elements[i], elements[j]): elements[(i + j) % n]
             for i in range(n) for j in range(n)}
    return from_strict_2cat(monoid_strict_2cat(elements, table, "g0"))


def idempotent_monoid_bicategory() -> FiniteBicategory:
    """The monoid {1, e} with e.e = e, one object, identity 2-cells only.
    e is not an equivalence 1-cell."""
    elements = ["u", "e"]
    table = {("u", "u"): "u", ("u", "e"): "e", ("e", "u"): "e", ("e", "e"): "e"}
    return from_strict_2cat(monoid_strict_2cat(elements, table, "u"))


def codiscrete_hom_bicategory() -> FiniteBicategory:
    """One 0-cell, hom the codiscrete category on {x, y}, composition
    constant at x.  Every 2-cell equation holds because homs are
    codiscrete, so any typing-correct coherence choice is valid."""
    hom = codiscrete_category(["x", "y"])
    star = "*"
    ones = hom.objects

    def arrow(a, b):
        return f"{a}>{b}"

    hcomp_obj = {(g, f): "x" for g in ones for f in ones}
    hcomp_arr = {}
    for beta in hom.arrows:
        for alpha in hom.arrows:
            hcomp_arr[(beta, alpha)] = arrow("x", "x")
    assoc = {(h, g, f): arrow("x", "x") for h in ones for g in ones for f in ones}
    lunit = {f: arrow("x", f) for f in ones}
    runit = {f: arrow("x", f) for f in ones}
    return FiniteBicategory(
        objects=(star,),
        hom={(star, star): hom},
        ident={star: "x"},
        hcomp_obj=hcomp_obj,
        hcomp_arr=hcomp_arr,
        assoc=assoc,
        lunit=lunit,
        runit=runit,
    )


def interval_strict_2cat() -> StrictNCat:
    """Two objects a, b; one non-identity 1-cell f: a -> b; identity
    2-cells only."""
    g = FiniteGlobularSet(
        n=2,
        cells={0: ("a", "b"), 1: ("1a", "1b", "f"), 2: ("i1a", "i1b", "if")},
        src={1: {"1a": "a", "1b": "b", "f": "a"},
             2: {"i1a": "1a", "i1b": "1b", "if": "f"}},
        tgt={1: {"1a": "a", "1b": "b", "f": "b"},
             2: {"i1a": "1a", "i1b": "1b", "if": "f"}},
    )
    comp10 = {("1a", "1a"): "1a", ("1b", "1b"): "1b",
              ("f", "1a"): "f", ("1b", "f"): "f"}
    comp20 = {("i" + y, "i" + x): "i" + v for (y, x), v in comp10.items()}
    comp21 = {("i" + x, "i" + x): "i" + x for x in ("1a", "1b", "f")}
    return StrictNCat(g, {(1, 0): comp10, (2, 0): comp20, (2, 1): comp21},
                      {0: {"a": "1a", "b": "1b"},
                       1: {x: "i" + x for x in ("1a", "1b", "f")}})


def free_loop_strict_2cat(length: int) -> StrictNCat:
    """One object, 1-cells = powers of a generator f truncated at
    f^length (absorbing), identity 2-cells only.  Truncation keeps the
    table total while staying associative: max-composition on exponents
    capped at ``length``."""
    elements = [f"p{i}" for i in range(length + 1)]
    table = {(f"p{i}", f"p{j}"): f"p{min(i + j, length)}"
             for i in range(length + 1) for j in range(length + 1)}
    return monoid_strict_2cat(elements, table, "p0")


def two_parallel_arrows_category() -> FiniteCategory:
    """Objects x, y with two parallel non-identity arrows u, v: x -> y."""
    return FiniteCategory(
        objects=("x", "y"),
        arrows=("id_x", "id_y", "u", "v"),
        src={"id_x": "x", "id_y": "y", "u": "x", "v": "x"},
        tgt={"id_x": "x", "id_y": "y", "u": "y", "v": "y"},
        comp={("id_x", "id_x"): "id_x", ("id_y", "id_y"): "id_y",
              ("u", "id_x"): "u", ("id_y", "u"): "u",
              ("v", "id_x"): "v", ("id_y", "v"): "v"},
        ident={"x": "id_x", "y": "id_y"},
    )


def iso_pair_category() -> FiniteCategory:
    """Objects x, y and an isomorphism between them (the walking iso)."""
    return codiscrete_category(["x", "y"])


def suspension_bicategory(hom: FiniteCategory, tensor_obj, tensor_arr,
                          unit: str, assoc, lunit, runit) -> FiniteBicategory:
    """One-object bicategory from monoidal-category tables."""
    return FiniteBicategory(
        objects=("*",),
        hom={("*", "*"): hom},
        ident={"*": unit},
        hcomp_obj=dict(tensor_obj),
        hcomp_arr=dict(tensor_arr),
        assoc=dict(assoc),
        lunit=dict(lunit),
        runit=dict(runit),
    )


def signed_group_bicategory(n: int) -> FiniteBicategory:
    """Z/n 1-cells with a sign 2-cell group on each: every 1-cell carries
    two parallel endo-2-cells (+, -).  Strict; the richest small instance
    for coherence perturbation tests."""
    ones = [f"g{i}" for i in range(n)]
    twos = [(f, s) for f in ones for s in "+-"]
    name2 = {(f, s): f"{f}{s}" for (f, s) in twos}

    def mul(f, g):
        return f"g{(int(f[1:]) + int(g[1:])) % n}"

    def sgn(s, t):
        return "+" if s == t else "-"

    g = FiniteGlobularSet(
        n=2,
        cells={0: ("*",), 1: tuple(ones), 2: tuple(name2.values())},
        src={1: {f: "*" for f in ones},
             2: {name2[(f, s)]: f for (f, s) in twos}},
        tgt={1: {f: "*" for f in ones},
             2: {name2[(f, s)]: f for (f, s) in twos}},
    )
    comp = {
        (1, 0): {(a, b): mul(a, b) for a in ones for b in ones},
        (2, 0): {(name2[(a, s)], name2[(b, t)]): name2[(mul(a, b), sgn(s, t))]
                 for (a, s) in twos for (b, t) in twos},
        (2, 1): {(name2[(f, s)], name2[(f, t)]): name2[(f, sgn(s, t))]
                 for f in ones for s in "+-" for t in "+-"},
    }
    ids = {0: {"*": "g0"}, 1: {f: name2[(f, "+")] for f in ones}}
    return from_strict_2cat(StrictNCat(g, comp, ids))
