"""Two-dimensional globular operads over pasting shapes: collections,
the two contraction notions, systems of compositions, bounded generation
of the two canonical operads, algebras, and the classical-operad
correspondence.

Elements over 1-shapes are planar trees (arity profile depends on the
operad); elements over 2-shapes are determined by their boundary pair of
trees once parallel top cells are collapsed, so they are stored as
``(shape, source-tree, target-tree)``.  Composition is computed by
grafting rather than stored as a full table; validators enumerate
bounded composites.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .report import StructuralError, ValidationReport
from . import trees as tr
from .pasting import (PastingShape, nu, two_shape, shapes_upto, substitute_shapes,
                      shape_source)
from .bicat import (FiniteBicategory, rn_composite, tree_composite, iso_to_rn,
                    paste_columns, coherence_iso, path_objects)


@dataclass
class TwoCollection:
    c0: tuple
    c1: dict[int, tuple]                      # width -> elements
    c2: dict[tuple[int, ...], tuple]          # heights -> elements
    src1: dict
    tgt1: dict
    src2: dict                                # c2 element -> c1 element
    tgt2: dict

    def widths(self):
        return sorted(self.c1)

    def shapes(self):
        return sorted(self.c2)

    def parallel_pairs_c1(self, k: int):
        for x in self.c1[k]:
            for y in self.c1[k]:
                if self.src1[x] == self.src1[y] and self.tgt1[x] == self.tgt1[y]:
                    yield x, y


def validate_collection(C: TwoCollection) -> ValidationReport:
    report = ValidationReport("two-collection")
    for k, elems in C.c1.items():
        for x in elems:
            if C.src1.get(x) not in C.c0 or C.tgt1.get(x) not in C.c0:
                report.add("structural", (k, x), "dangling 1-boundary")
    for heights, elems in C.c2.items():
        k = len(heights)
        for x in elems:
            s, t = C.src2.get(x), C.tgt2.get(x)
            if s not in C.c1.get(k, ()) or t not in C.c1.get(k, ()):
                report.add("structural", (heights, x), "boundary off the source shape")
                continue
            if C.src1[s] != C.src1[t] or C.tgt1[s] != C.tgt1[t]:
                report.add("globularity", (heights, x))
    return report


@dataclass
class TwoOperad:
    coll: TwoCollection
    unit0: object
    unit1: object
    unit2: object                 # over the one-cell shape (1,)
    comp0: object                 # callable (a, b) -> c0 element or None
    comp1: object                 # callable (theta, ops, base) -> element or None
    comp2: object                 # callable (theta, cols, base) -> element or None
    label: str = ""

    def compose1(self, theta, ops, base=None):
        out = self.comp1(theta, tuple(ops), base)
        if out is None:
            raise StructuralError("1-composite not materialized")
        return out

    def compose2(self, theta, cols, base=None):
        out = self.comp2(theta, tuple(cols), base)
        if out is None:
            raise StructuralError("2-composite not materialized")
        return out


# ---------------------------------------------------------------------------
# contractions and systems of compositions
# ---------------------------------------------------------------------------

def top_dim_collapsed(C: TwoCollection):
    """The truncation precondition: parallel elements over any 2-shape
    coincide."""
    for heights, elems in C.c2.items():
        seen = {}
        for x in elems:
            key = (C.src2[x], C.tgt2[x])
            if key in seen and seen[key] != x:
                return False, (heights, seen[key], x)
            seen[key] = x
    return True, None


def has_contraction_L(C: TwoCollection, n: int = 2):
    """Search for a lifting family against boundary pairs, one function
    per materialized shape of dimension >= 1.  Returns
    (bool, data-or-witness)."""
    ok, witness = top_dim_collapsed(C)
    if not ok:
        return False, ("top-collapse", witness)
    gamma = {}
    for k in C.widths():
        table = {}
        for a in C.c0:
            for b in C.c0:
                hit = next((x for x in C.c1[k]
                            if C.src1[x] == a and C.tgt1[x] == b), None)
                if hit is None:
                    return False, ("missing-lift", ("nu", k, a, b))
                table[(a, b)] = hit
        gamma[("nu", k)] = table
    for heights in C.shapes():
        k = len(heights)
        table = {}
        for t0, t1 in C.parallel_pairs_c1(k):
            hit = next((x for x in C.c2[heights]
                        if C.src2[x] == t0 and C.tgt2[x] == t1), None)
            if hit is None:
                return False, ("missing-lift", (heights, t0, t1))
            table[(t0, t1)] = hit
        gamma[heights] = table
    return True, gamma


def has_contraction_B(C: TwoCollection, n: int = 2):
    """The globe-shaped lifting: pairs over the point lift to the empty
    1-shape, parallel pairs over each 1-shape lift to its identity
    2-shape."""
    ok, witness = top_dim_collapsed(C)
    if not ok:
        return False, ("top-collapse", witness)
    gamma = {}
    table = {}
    for a in C.c0:
        for b in C.c0:
            hit = next((x for x in C.c1.get(0, ())
                        if C.src1[x] == a and C.tgt1[x] == b), None)
            if hit is None:
                return False, ("missing-lift", ("point", a, b))
            table[(a, b)] = hit
    gamma["point"] = table
    for k in C.widths():
        identity_shape = (0,) * k
        if identity_shape not in C.c2:
            continue
        table = {}
        for t0, t1 in C.parallel_pairs_c1(k):
            hit = next((x for x in C.c2[identity_shape]
                        if C.src2[x] == t0 and C.tgt2[x] == t1), None)
            if hit is None:
                return False, ("missing-lift", (identity_shape, t0, t1))
            table[(t0, t1)] = hit
        gamma[("globe", k)] = table
    return True, gamma


def has_system_of_compositions(O: TwoOperad):
    """A binary element in each dimension compatible with the unit."""
    C = O.coll
    binaries = [x for x in C.c1.get(2, ())
                if C.src1[x] == C.src1[O.unit1] and C.tgt1[x] == C.tgt1[O.unit1]]
    for b in sorted(binaries, key=repr):
        vs = [x for x in C.c2.get((2,), ())
              if C.src2[x] == O.unit1 and C.tgt2[x] == O.unit1]
        hs = [x for x in C.c2.get((1, 1), ())
              if C.src2[x] == b and C.tgt2[x] == b]
        if vs and hs:
            return True, {"binary": b, "vertical": vs[0], "horizontal": hs[0]}
    return False, ("no-binary-element",)


def good_operad_check(O: TwoOperad, flavor: str) -> bool:
    if len(O.coll.c0) != 1:
        return False
    if flavor == "B2":
        return has_contraction_B(O.coll)[0] and has_system_of_compositions(O)[0]
    if flavor == "L2":
        return has_contraction_L(O.coll)[0]
    raise StructuralError("flavor must be 'B2' or 'L2'")


# ---------------------------------------------------------------------------
# the two canonical operads, bounded
# ---------------------------------------------------------------------------

def _pair_elem(shape: tuple[int, ...], s, t):
    return ("2", shape, s, t)


def _tree_class_k2(t) -> bool:
    return t == tr.CAP or (tr.arities_ok(t, {0, 2}) and not _has_cap(t))


def _has_cap(t) -> bool:
    if tr.is_leaf(t):
        return False
    if len(t) == 0:
        return True
    return any(_has_cap(c) for c in t)


def _graft_comp1(class_ok):
    def comp1(theta, ops, base=None):
        if tr.leaves(theta) != len(ops):
            return None
        out = tr.graft(theta, list(ops))
        return out if class_ok(out) else None
    return comp1


def _pair_comp2(class_ok, shapes_avail):
    def comp2(theta, cols, base=None):
        _, shape, s_tree, t_tree = theta
        if len(cols) != len(shape):
            return None
        col_shapes = []
        s_ops, t_ops = [], []
        for h, col in zip(shape, cols):
            kind, payload = col
            if h == 0:
                if kind != "e":
                    return None
                col_shapes.append(nu(tr.leaves(payload)))
                s_ops.append(payload)
                t_ops.append(payload)
            else:
                if kind != "c" or len(payload) != h:
                    return None
                widths = {len(x[1]) for x in payload}
                # vertical composability of the chain
                for i in range(h - 1):
                    if payload[i][3] != payload[i + 1][2]:
                        return None
                col_shapes.append([two_shape(x[1]) for x in payload])
                s_ops.append(payload[0][2])
                t_ops.append(payload[-1][3])
        try:
            new_shape = substitute_shapes(
                two_shape(shape),
                [cs if isinstance(cs, list) else cs for cs in col_shapes])
        except StructuralError:
            return None
        if new_shape.heights not in shapes_avail:
            return None
        new_s = tr.graft(s_tree, s_ops) if tr.leaves(s_tree) == len(s_ops) else None
        new_t = tr.graft(t_tree, t_ops) if tr.leaves(t_tree) == len(t_ops) else None
        if new_s is None or new_t is None:
            return None
        if not (class_ok(new_s) and class_ok(new_t)):
            return None
        return _pair_elem(new_shape.heights, new_s, new_t)
    return comp2


def _assemble_tree_operad(label, tree_sets: dict[int, tuple], class_ok,
                          max_width: int, max_height: int,
                          c2_width_cap: int | None = None) -> TwoOperad:
    if c2_width_cap is None:
        c2_width_cap = max_width
    shapes = [s.heights for s in shapes_upto(max_width, max_height)
              if s.width <= c2_width_cap]
    c2 = {}
    src2, tgt2 = {}, {}
    for heights in shapes:
        k = len(heights)
        elems = []
        for s in tree_sets.get(k, ()):
            for t in tree_sets.get(k, ()):
                e = _pair_elem(heights, s, t)
                elems.append(e)
                src2[e], tgt2[e] = s, t
        c2[heights] = tuple(elems)
    coll = TwoCollection(
        c0=("u",),
        c1={k: tuple(v) for k, v in tree_sets.items()},
        c2=c2,
        src1={t: "u" for ts in tree_sets.values() for t in ts},
        tgt1={t: "u" for ts in tree_sets.values() for t in ts},
        src2=src2,
        tgt2=tgt2,
    )
    return TwoOperad(
        coll=coll,
        unit0="u",
        unit1=tr.LEAF,
        unit2=_pair_elem((1,), tr.LEAF, tr.LEAF),
        comp0=lambda a, b: "u",
        comp1=_graft_comp1(class_ok),
        comp2=_pair_comp2(class_ok, set(c2)),
        label=label,
    )


def generate_K2(max_width: int = 4, max_height: int = 2) -> TwoOperad:
    """Bounded model of the initial operad-with-contraction-and-system:
    1-level elements are the 0-or-2-ary census trees (plus the nullary
    generator over the empty shape), 2-level elements are all boundary
    pairs."""
    tree_sets = {k: tr.zero_two_trees(k) for k in range(max_width + 1)}
    return _assemble_tree_operad("K2", tree_sets, _tree_class_k2,
                                 max_width, max_height)


def generate_L2(max_width: int = 4, max_height: int = 2,
                tree_size: int = 2,
                c2_width_cap: int | None = None) -> TwoOperad:
    """Bounded model of the initial operad-with-contraction: 1-level
    elements are all planar trees within the vertex budget.  Pair tables
    over 2-shapes square the 1-level censuses, so shapes wider than
    ``c2_width_cap`` can be left unmaterialized when the budget is raised."""
    tree_sets = {k: tr.all_trees(k, tree_size) for k in range(max_width + 1)}
    class_ok = lambda t: tr.vertices(t) <= tree_size and tr.leaves(t) <= max_width
    return _assemble_tree_operad("L2", tree_sets, class_ok,
                                 max_width, max_height, c2_width_cap)


def terminal_two_operad(max_width: int = 4, max_height: int = 2) -> TwoOperad:
    shapes = [s.heights for s in shapes_upto(max_width, max_height)]
    c1 = {k: (("t1", k),) for k in range(max_width + 1)}
    c2 = {heights: (("t2", heights),) for heights in shapes}
    coll = TwoCollection(
        c0=("t",),
        c1=c1,
        c2=c2,
        src1={("t1", k): "t" for k in c1},
        tgt1={("t1", k): "t" for k in c1},
        src2={("t2", h): ("t1", len(h)) for h in c2},
        tgt2={("t2", h): ("t1", len(h)) for h in c2},
    )
    shapes_avail = set(c2)

    def comp1(theta, ops, base=None):
        k = theta[1]
        widths = [op[1] for op in ops]
        total = sum(widths)
        return ("t1", total) if total <= max_width else None

    def comp2(theta, cols, base=None):
        _, heights = theta
        col_shapes = []
        for h, col in zip(heights, cols):
            kind, payload = col
            if h == 0:
                col_shapes.append(nu(payload[1]))
            else:
                col_shapes.append([two_shape(x[1]) for x in payload])
        try:
            new_shape = substitute_shapes(two_shape(heights), col_shapes)
        except StructuralError:
            return None
        return ("t2", new_shape.heights) if new_shape.heights in shapes_avail else None

    return TwoOperad(coll, "t", ("t1", 1), ("t2", (1,)),
                     lambda a, b: "t", comp1, comp2, label="terminal")


def initial_two_operad() -> TwoOperad:
    """Units only: no binary elements at all."""
    coll = TwoCollection(
        c0=("u",),
        c1={1: (tr.LEAF,)},
        c2={(1,): (_pair_elem((1,), tr.LEAF, tr.LEAF),)},
        src1={tr.LEAF: "u"},
        tgt1={tr.LEAF: "u"},
        src2={_pair_elem((1,), tr.LEAF, tr.LEAF): tr.LEAF},
        tgt2={_pair_elem((1,), tr.LEAF, tr.LEAF): tr.LEAF},
    )
    return TwoOperad(
        coll, "u", tr.LEAF, _pair_elem((1,), tr.LEAF, tr.LEAF),
        lambda a, b: "u",
        _graft_comp1(lambda t: t == tr.LEAF),
        _pair_comp2(lambda t: t == tr.LEAF, {(1,)}),
        label="initial",
    )


def validate_two_operad(O: TwoOperad, sample_width: int = 3) -> ValidationReport:
    """Boundary compatibility plus unit and associativity laws on bounded
    grafting composites."""
    report = validate_collection(O.coll)
    report.checker = "two-operad"
    C = O.coll
    # units
    for k in C.widths():
        for x in C.c1[k]:
            if O.comp1(x, (O.unit1,) * k, None) not in (x, None):
                report.add("unit-inner", (x,))
    for x in C.c1.get(1, ()):
        out = O.comp1(O.unit1, (x,), None)
        if out not in (x, None):
            report.add("unit-outer", (x,))
    # associativity of 1-level grafting on small combos
    small = [x for k in C.widths() if k <= sample_width for x in C.c1[k]]
    for outer in small:
        k = _arity(C, outer)
        if k == 0 or k > 2:
            continue
        for mids in product(small, repeat=k):
            mid = O.comp1(outer, mids, None)
            if mid is None:
                continue
            inner_counts = [_arity(C, m) for m in mids]
            if any(c > 2 for c in inner_counts) or sum(inner_counts) > sample_width:
                continue
            for inners in product(small, repeat=sum(inner_counts)):
                flat = O.comp1(mid, inners, None)
                grouped = []
                pos = 0
                ok = True
                for m, cnt in zip(mids, inner_counts):
                    sub = O.comp1(m, inners[pos:pos + cnt], None)
                    pos += cnt
                    if sub is None:
                        ok = False
                        break
                    grouped.append(sub)
                if not ok:
                    continue
                nested = O.comp1(outer, tuple(grouped), None)
                if flat is not None and nested is not None and flat != nested:
                    report.add("associativity", (outer, mids, inners))
    return report


def _arity(C: TwoCollection, x) -> int:
    for k, elems in C.c1.items():
        if x in elems:
            return k
    raise StructuralError(f"element {x!r} not in the collection")


# ---------------------------------------------------------------------------
# algebras
# ---------------------------------------------------------------------------

def corolla(k: int):
    return tuple([tr.LEAF] * k)


def tree_of_operad_elem(O: TwoOperad, x):
    """The tree interpretation of a 1-level element (identity on tree
    operads, k-corolla on the terminal operad)."""
    if isinstance(x, tuple) and len(x) == 2 and x[0] == "t1":
        return corolla(x[1])
    return x


@dataclass
class OperadAlgebra2:
    operad: TwoOperad
    objects: tuple
    src1c: dict
    tgt1c: dict
    src2c: dict
    tgt2c: dict
    act1: dict     # (theta, path, base) -> 1-cell
    act2: dict     # (theta, (heights, columns, base)) -> 2-cell


def _carrier_paths(one_cells, src1c, tgt1c, objects, max_len: int):
    yield from (((), a) for a in objects)
    frontier = [((f,), None) for f in one_cells]
    for p, _ in frontier:
        yield (p, None)
    current = [p for p, _ in frontier]
    for _ in range(max_len - 1):
        nxt = []
        for p in current:
            for f in one_cells:
                if src1c[f] == tgt1c[p[-1]]:
                    q = p + (f,)
                    nxt.append(q)
                    yield (q, None)
        current = nxt


def _carrier_pastings(b: FiniteBicategory, heights: tuple[int, ...],
                      max_cells: int):
    """Labelled pastings of one shape over a bicategory's cells, columns
    in normal form."""
    cost = sum(h if h else 1 for h in heights)
    if cost > max_cells:
        return
    if not heights:
        for a in b.objects:
            yield ((), a)
        return
    cols_per_height = {}
    for h in set(heights):
        opts = []
        if h == 0:
            for f in b.one_cells():
                opts.append(("e", f, b.endpoints1(f)))
        else:
            chains = [[x] for x in b.two_cells()]
            for _ in range(h - 1):
                chains = [c + [y] for c in chains for y in b.two_cells()
                          if b.src2(y) == b.tgt2(c[-1])]
            for c in chains:
                f = b.src2(c[0])
                opts.append(("c", tuple(c), b.endpoints1(f)))
        cols_per_height[h] = opts
    def build(i, acc, right):
        if i == len(heights):
            yield (tuple(acc), None)
            return
        for kind, payload, (a, c) in cols_per_height[heights[i]]:
            if right is not None and a != right:
                continue
            yield from build(i + 1, acc + [(kind, payload)], c)
    yield from build(0, [], None)


def _pasting_boundaries(b: FiniteBicategory, heights, columns, base):
    if not heights:
        return (), (), base
    srcs, tgts = [], []
    for h, (kind, payload) in zip(heights, columns):
        if kind == "e":
            srcs.append(payload)
            tgts.append(payload)
        else:
            srcs.append(b.src2(payload[0]))
            tgts.append(b.tgt2(payload[-1]))
    return tuple(srcs), tuple(tgts), base


def algebra_from_bicategory(O: TwoOperad, b: FiniteBicategory,
                            max_path: int = 3, max_cells: int = 3) -> OperadAlgebra2:
    """Assemble the canonical algebra: 1-level elements act as iterated
    composites along their trees, 2-level elements paste and then
    reassociate through the canonical coherence cells."""
    ones = tuple(b.one_cells())
    twos = tuple(b.two_cells())
    src1c = {f: b.endpoints1(f)[0] for f in ones}
    tgt1c = {f: b.endpoints1(f)[1] for f in ones}
    act1 = {}
    for k in sorted(O.coll.c1):
        if k > max_path:
            continue
        for theta in O.coll.c1[k]:
            tree = tree_of_operad_elem(O, theta)
            for path, base in _carrier_paths(ones, src1c, tgt1c, b.objects, max_path):
                if len(path) != k:
                    continue
                act1[(theta, path, base)] = tree_composite(b, tree, path, base)
    act2 = {}
    for heights in sorted(O.coll.c2):
        if sum(h if h else 1 for h in heights) > max_cells:
            continue
        for theta in O.coll.c2[heights]:
            s_tree = tree_of_operad_elem(O, O.coll.src2[theta])
            t_tree = tree_of_operad_elem(O, O.coll.tgt2[theta])
            for columns, base in _carrier_pastings(b, heights, max_cells):
                srcs, tgts, base2 = _pasting_boundaries(b, heights, columns, base)
                down = iso_to_rn(b, s_tree, srcs, base)
                up = iso_to_rn(b, t_tree, tgts, base)
                up_inv = b.inverse2(up)
                if up_inv is None:
                    raise StructuralError("coherence cell not invertible")
                raw_cols = tuple(payload for kind, payload in columns)
                mid = paste_columns(b, heights, raw_cols, base)
                act2[(theta, (heights, columns, base))] = \
                    b.vcomp(up_inv, b.vcomp(mid, down))
    return OperadAlgebra2(
        operad=O, objects=tuple(b.objects),
        src1c=src1c, tgt1c=tgt1c,
        src2c={x: b.src2(x) for x in twos},
        tgt2c={x: b.tgt2(x) for x in twos},
        act1=act1, act2=act2,
    )


def validate_algebra(O: TwoOperad, A: OperadAlgebra2) -> ValidationReport:
    """Unit laws, boundary compatibility, and bounded compatibility with
    operad composition."""
    report = ValidationReport("operad-algebra")
    C = O.coll

    def path_ends(path, base):
        if not path:
            return base, base
        return A.src1c[path[0]], A.tgt1c[path[-1]]

    # unit actions
    for (theta, path, base), val in A.act1.items():
        if theta == O.unit1 and path and val != path[0]:
            report.add("unit", (theta, path))
        a, c = path_ends(path, base)
        if A.src1c.get(val, a) != a or A.tgt1c.get(val, c) != c:
            report.add("endpoints", (theta, path, val))
    for (theta, key), val in A.act2.items():
        heights, columns, base = key
        if theta == O.unit2 and heights == (1,) and len(columns[0][1]) == 1:
            if val != columns[0][1][0]:
                report.add("unit", (theta, key))
        srcs, tgts = [], []
        for h, (kind, payload) in zip(heights, columns):
            if kind == "e":
                srcs.append(payload)
                tgts.append(payload)
            else:
                srcs.append(A.src2c[payload[0]])
                tgts.append(A.tgt2c[payload[-1]])
        want_src = A.act1.get((C.src2[theta], tuple(srcs), base))
        want_tgt = A.act1.get((C.tgt2[theta], tuple(tgts), base))
        if want_src is not None and A.src2c.get(val) != want_src:
            report.add("source-compat", (theta, key, val))
        if want_tgt is not None and A.tgt2c.get(val) != want_tgt:
            report.add("target-compat", (theta, key, val))

    # bounded mu-compatibility at level 1
    by_arity = {}
    for (theta, path, base) in A.act1:
        by_arity.setdefault(len(path), set()).add(theta)
    for outer_k, outers in sorted(by_arity.items()):
        if outer_k == 0 or outer_k > 2:
            continue
        for outer in sorted(outers, key=repr):
            for op_ks in product(sorted(by_arity), repeat=outer_k):
                if sum(op_ks) > 3:
                    continue
                op_pools = [sorted(by_arity[k2], key=repr) for k2 in op_ks]
                for ops in product(*op_pools):
                    comp = O.comp1(outer, ops, None)
                    if comp is None:
                        continue
                    for (theta, path, base) in list(A.act1):
                        if theta != comp or len(path) != sum(op_ks):
                            continue
                        pos = 0
                        vals = []
                        usable = True
                        for op, k2 in zip(ops, op_ks):
                            seg = path[pos:pos + k2]
                            segbase = path_ends(path, base)[0] if not seg else None
                            if not seg:
                                segbase = (path_ends(path[:pos], base)[1]
                                           if pos else path_ends((), base)[0])
                                if pos:
                                    segbase = A.tgt1c[path[pos - 1]]
                                elif path:
                                    segbase = A.src1c[path[0]]
                                else:
                                    segbase = base
                            v = A.act1.get((op, seg, segbase if not seg else None))
                            if v is None:
                                usable = False
                                break
                            vals.append(v)
                            pos += k2
                        if not usable:
                            continue
                        lhs = A.act1.get((comp, path, base))
                        rhs = A.act1.get((outer, tuple(vals), None))
                        if rhs is not None and lhs != rhs:
                            report.add("composition-compat-1",
                                       (outer, ops, path))
    # bounded mu-compatibility at level 2: vertical stacking into one column
    for (theta, key), val in list(A.act2.items()):
        heights, columns, base = key
        if heights != (1,):
            continue
        for (theta2, key2), val2 in list(A.act2.items()):
            heights2, columns2, base2 = key2
            if heights2 != (1,):
                continue
            x1 = columns[0][1]
            x2 = columns2[0][1]
            if A.tgt2c[val] != A.src2c[val2]:
                continue
            stackable = A.tgt2c[x1[-1]] == A.src2c[x2[0]] and \
                C.tgt2[theta] == C.src2[theta2]
            if not stackable:
                continue
            vtheta = next((v for v in C.c2.get((2,), ())
                           if C.src2[v] == O.unit1 and C.tgt2[v] == O.unit1), None)
            if vtheta is None:
                continue
            comp = O.comp2(vtheta, (("c", (theta, theta2)),), None)
            if comp is None:
                continue
            flat_key = ((2,), (("c", x1 + x2),), None)
            lhs = A.act2.get((comp, flat_key))
            outer_key = ((2,), (("c", (val, val2)),), None)
            rhs = A.act2.get((vtheta, outer_key))
            if lhs is not None and rhs is not None and lhs != rhs:
                report.add("composition-compat-2", (theta, theta2))
    return report


# ---------------------------------------------------------------------------
# classical operads
# ---------------------------------------------------------------------------

@dataclass
class ClassicalOperad:
    elements: dict[int, tuple]
    identity: object
    comp: object   # callable (outer, ops) -> element or None


def classical_correspondence(O: TwoOperad) -> ClassicalOperad:
    """D(k) = the 1-level elements over the width-k shape, with grafting
    composition.  Refuses operads that are not normalized or have an
    empty materialized arity."""
    if len(O.coll.c0) != 1:
        raise StructuralError("normalization fails: more than one 0-level element")
    for k in O.coll.widths():
        if not O.coll.c1[k]:
            raise StructuralError(f"empty arity {k}: no classical correspondence")

    def comp(outer, ops):
        return O.comp1(outer, tuple(ops), None)

    return ClassicalOperad(
        elements={k: tuple(O.coll.c1[k]) for k in O.coll.widths()},
        identity=O.unit1,
        comp=comp,
    )


def validate_classical(D: ClassicalOperad, sample: int = 3) -> ValidationReport:
    report = ValidationReport("classical-operad")
    for k, elems in D.elements.items():
        for x in elems:
            if D.comp(x, (D.identity,) * k) not in (x, None):
                report.add("unit-inner", (x,))
    for x in D.elements.get(1, ()):
        if D.comp(D.identity, (x,)) not in (x, None):
            report.add("unit-outer", (x,))
    small = [x for k, elems in D.elements.items() if k <= sample for x in elems]
    arity = {x: k for k, elems in D.elements.items() for x in elems}
    for outer in small:
        if arity[outer] != 2:
            continue
        for ops in product(small, repeat=2):
            mid = D.comp(outer, ops)
            if mid is None:
                continue
            ks = [arity[o] for o in ops]
            if sum(ks) > sample:
                continue
            for inners in product(small, repeat=sum(ks)):
                flat = D.comp(mid, inners)
                pos = 0
                grouped = []
                ok = True
                for o, k2 in zip(ops, ks):
                    sub = D.comp(o, inners[pos:pos + k2])
                    pos += k2
                    if sub is None:
                        ok = False
                        break
                    grouped.append(sub)
                if not ok:
                    continue
                nested = D.comp(outer, tuple(grouped))
                if flat is not None and nested is not None and flat != nested:
                    report.add("associativity", (outer, ops, inners))
    return report
