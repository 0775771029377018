"""Pasting shapes and bounded free constructions on globular sets.

A dimension-1 shape is a width ``k`` (a path of k arrows); a dimension-2
shape is a sequence of column heights ``(l_1, ..., l_k)``.  Labelled
2-pasting diagrams are stored in column normal form: a tuple of columns,
each either a bare 1-cell or a vertical chain of 2-cells.  Interchange-
equivalent pastings are identified by this normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .report import StructuralError
from .gset import FiniteGlobularSet, StrictNCat
from .cat import FiniteCategory


@dataclass(frozen=True)
class PastingShape:
    dim: int
    width: int = 0                      # dim 1: the shape nu_k
    heights: tuple[int, ...] = ()       # dim 2: column heights

    def __post_init__(self):
        if self.dim not in (0, 1, 2):
            raise StructuralError(f"shape dimension {self.dim} outside 0..2")
        if self.dim == 2 and self.width != len(self.heights):
            object.__setattr__(self, "width", len(self.heights))

    def __str__(self):
        if self.dim == 0:
            return "pt"
        if self.dim == 1:
            return f"nu_{self.width}"
        return "(" + ",".join(str(h) for h in self.heights) + ")"


POINT = PastingShape(0)


def nu(k: int) -> PastingShape:
    return PastingShape(1, width=k)


def two_shape(heights: tuple[int, ...]) -> PastingShape:
    return PastingShape(2, width=len(heights), heights=tuple(heights))


def shape_source(p: PastingShape) -> PastingShape:
    if p.dim == 0:
        raise StructuralError("a 0-shape has no source")
    if p.dim == 1:
        return POINT
    return nu(p.width)


def shape_target(p: PastingShape) -> PastingShape:
    return shape_source(p)


def shape_identity(p: PastingShape) -> PastingShape:
    """The identity shape one dimension up."""
    if p.dim == 0:
        return nu(0)
    if p.dim == 1:
        return two_shape((0,) * p.width)
    raise StructuralError("no identity shape above dimension 2")


def generator_shape(dim: int) -> PastingShape:
    """The single-cell shape in each dimension (unit of the shape monoid)."""
    return (POINT, nu(1), two_shape((1,)))[dim]


def hglue_shapes(shapes: list[PastingShape]) -> PastingShape:
    """Glue along 0-cells.  Dim-1 widths add; dim-2 sequences concatenate."""
    if all(s.dim == 1 for s in shapes):
        return nu(sum(s.width for s in shapes))
    if all(s.dim == 2 for s in shapes):
        out: tuple[int, ...] = ()
        for s in shapes:
            out = out + s.heights
        return two_shape(out)
    raise StructuralError("mixed dimensions in horizontal gluing")


def vglue_shapes(shapes: list[PastingShape]) -> PastingShape:
    """Glue dim-2 shapes along their common 1-cell boundary."""
    if not shapes:
        raise StructuralError("empty vertical gluing")
    width = shapes[0].width
    if any(s.dim != 2 or s.width != width for s in shapes):
        raise StructuralError("vertical gluing needs equal widths")
    return two_shape(tuple(sum(s.heights[i] for s in shapes) for i in range(width)))


def substitute_shapes(outer: PastingShape, columns: list) -> PastingShape:
    """Shape of an operadic composite.

    ``columns[i]`` is either a list of dim-2 shapes (the shapes of the
    2-operations stacked in column i, all of one width) when the outer
    column has height >= 1, or a single dim-1 shape when it is bare.
    """
    if outer.dim != 2:
        raise StructuralError("substitution implemented for dim-2 outers")
    blocks = []
    for h, col in zip(outer.heights, columns):
        if h == 0:
            shape = col
            if shape.dim != 1:
                raise StructuralError("bare column needs a dim-1 operand")
            blocks.append(two_shape((0,) * shape.width))
        else:
            if len(col) != h:
                raise StructuralError("column operand count differs from height")
            blocks.append(vglue_shapes(list(col)))
    if not blocks:
        return two_shape(())
    return hglue_shapes(blocks)


def shapes_upto(max_width: int, max_height: int) -> list[PastingShape]:
    """All dim-2 shapes with width <= max_width, heights <= max_height."""
    out = []
    for k in range(max_width + 1):
        for heights in product(range(max_height + 1), repeat=k):
            out.append(two_shape(heights))
    return out


# -- labelled pastings -------------------------------------------------------

@dataclass(frozen=True)
class LabelledPasting:
    shape: PastingShape
    # dim 0: labels = (cell,); dim 1: labels = path of 1-cells (src to tgt),
    # plus base for the empty path.  dim 2: labels = columns in normal form.
    labels: tuple
    base: str | None = None

    def src_path(self, g: FiniteGlobularSet) -> tuple:
        if self.shape.dim != 2:
            raise StructuralError("src_path is for dim-2 pastings")
        out = []
        for h, col in zip(self.shape.heights, self.labels):
            out.append(g.src[2][col[0]] if h else col)
        return tuple(out)

    def tgt_path(self, g: FiniteGlobularSet) -> tuple:
        if self.shape.dim != 2:
            raise StructuralError("tgt_path is for dim-2 pastings")
        out = []
        for h, col in zip(self.shape.heights, self.labels):
            out.append(g.tgt[2][col[-1]] if h else col)
        return tuple(out)


def path_endpoints(g: FiniteGlobularSet, path: tuple, base: str | None):
    if not path:
        return base, base
    return g.src[1][path[0]], g.tgt[1][path[-1]]


def valid_path(g: FiniteGlobularSet, path: tuple) -> bool:
    return all(g.tgt[1][path[i]] == g.src[1][path[i + 1]] for i in range(len(path) - 1))


def enumerate_paths(g: FiniteGlobularSet, max_len: int):
    """All composable paths of 1-cells up to the given length, plus the
    empty path at each 0-cell."""
    for a in g.cells[0]:
        yield LabelledPasting(nu(0), (), base=a)
    frontier = [((f,),) for f in g.cells[1]]
    paths = [(f,) for f in g.cells[1]]
    for p in paths:
        yield LabelledPasting(nu(1), p)
    current = paths
    for length in range(2, max_len + 1):
        nxt = []
        for p in current:
            end = g.tgt[1][p[-1]]
            for f in g.cells[1]:
                if g.src[1][f] == end:
                    q = p + (f,)
                    nxt.append(q)
                    yield LabelledPasting(nu(length), q)
        current = nxt


def free_cat(g: FiniteGlobularSet, max_len: int | None = None) -> StrictNCat:
    """Free category on a dimension-1 globular set, as a strict 1-category.

    Arrows are the composable paths; composition is concatenation.  On an
    acyclic graph the construction closes by itself; with loops a
    ``max_len`` must be supplied and the resulting table is partial
    (validate with ``allow_partial=True``).
    """
    if g.n != 1:
        raise StructuralError("free_cat expects a dimension-1 globular set")
    if max_len is None:
        if _has_cycle(g):
            raise StructuralError("graph has a cycle: pass max_len")
        max_len = max(1, len(g.cells[1]))
    names: dict[tuple, str] = {}
    src: dict[str, str] = {}
    tgt: dict[str, str] = {}

    def register(path: tuple, base: str | None) -> str:
        key = path if path else ("@", base)
        if key not in names:
            if not path:
                names[key] = f"id_{base}"
            elif len(path) == 1:
                names[key] = path[0]
            else:
                names[key] = "[" + ".".join(path) + "]"
            a, b = path_endpoints(g, path, base)
            src[names[key]] = a
            tgt[names[key]] = b
        return names[key]

    paths = []
    for lp in enumerate_paths(g, max_len):
        paths.append((lp.labels, lp.base))
        register(lp.labels, lp.base)
    comp: dict[tuple[str, str], str] = {}
    for (p, pb) in paths:
        for (q, qb) in paths:
            a_end = path_endpoints(g, p, pb)[1]
            q_start = path_endpoints(g, q, qb)[0]
            if a_end != q_start:
                continue
            joined = p + q
            if len(joined) > max_len:
                continue
            comp[(register(q, qb), register(p, pb))] = register(
                joined, pb if not joined else None)
    cells1 = tuple(names[k] for k in sorted(names, key=lambda k: (len(k), k)))
    gg = FiniteGlobularSet(
        n=1,
        cells={0: tuple(g.cells[0]), 1: cells1},
        src={1: src},
        tgt={1: tgt},
    )
    ids = {0: {a: f"id_{a}" for a in g.cells[0]}}
    return StrictNCat(gg, {(1, 0): comp}, ids)


def _has_cycle(g: FiniteGlobularSet) -> bool:
    color = {a: 0 for a in g.cells[0]}
    out = {a: [] for a in g.cells[0]}
    for f in g.cells[1]:
        out[g.src[1][f]].append(g.tgt[1][f])

    def visit(a):
        color[a] = 1
        for b in out[a]:
            if color[b] == 1 or (color[b] == 0 and visit(b)):
                return True
        color[a] = 2
        return False

    return any(color[a] == 0 and visit(a) for a in g.cells[0])


def enumerate_columns(g: FiniteGlobularSet, max_height: int):
    """Vertical chains of 2-cells (height >= 1) plus bare 1-cells."""
    for f in g.cells[1]:
        yield (0, f)
    chains = [[x] for x in g.cells[2]]
    for chain in chains:
        yield (1, tuple(chain))
    current = [[x] for x in g.cells[2]]
    for h in range(2, max_height + 1):
        nxt = []
        for chain in current:
            top = g.tgt[2][chain[-1]]
            for x in g.cells[2]:
                if g.src[2][x] == top:
                    c2 = chain + [x]
                    nxt.append(c2)
                    yield (h, tuple(c2))
        current = nxt


def free_2cat_cells(g: FiniteGlobularSet, size_bound: int) -> list[LabelledPasting]:
    """All labelled 1- and 2-pasting diagrams over ``g`` with at most
    ``size_bound`` generating cells, in column normal form."""
    if g.n != 2:
        raise StructuralError("free_2cat_cells expects a dimension-2 globular set")
    out: list[LabelledPasting] = []
    g1 = FiniteGlobularSet(n=1, cells={0: g.cells[0], 1: g.cells[1]},
                           src={1: g.src[1]}, tgt={1: g.tgt[1]})
    for lp in enumerate_paths(g1, size_bound):
        out.append(lp)
    columns = list(enumerate_columns(g, size_bound))

    def col_cost(col):
        h, body = col
        return 1 if h == 0 else h

    def col_left(col):
        h, body = col
        return g.src[1][g.src[2][body[0]]] if h else g.src[1][body]

    def col_right(col):
        h, body = col
        return g.tgt[1][g.src[2][body[0]]] if h else g.tgt[1][body]

    # empty 2-diagram at each 0-cell
    for a in g.cells[0]:
        out.append(LabelledPasting(two_shape(()), (), base=a))
    frontier = [((c,), col_cost(c)) for c in columns if col_cost(c) <= size_bound]
    for cols, cost in frontier:
        out.append(_to_pasting(cols))
    current = frontier
    while current:
        nxt = []
        for cols, cost in current:
            right = col_right(cols[-1])
            for c in columns:
                if col_left(c) != right:
                    continue
                total = cost + col_cost(c)
                if total > size_bound:
                    continue
                item = (cols + (c,), total)
                nxt.append(item)
                out.append(_to_pasting(item[0]))
        current = nxt
    return out


def _to_pasting(cols) -> LabelledPasting:
    heights = tuple(h for h, _ in cols)
    labels = tuple(body for _, body in cols)
    return LabelledPasting(two_shape(heights), labels)


def shape_count_formula(max_width: int, max_height: int) -> int:
    """Independent census: sum over widths k of (H+1)^k."""
    return sum((max_height + 1) ** k for k in range(max_width + 1))


def category_of_paths(c: StrictNCat) -> FiniteCategory:
    from .gset import strict_1cat_to_category

    return strict_1cat_to_category(c)
