"""Multi-simplicial sets: functors on r-fold products of the simplex
category, stored levelwise over a downward-closed set of multi-indices.

Arity 0 is a bare set, arity 1 matches ``TruncatedSimplicialSet``, and
arity 2 is the substrate of the two-axis weak-2-category conditions.
Storing a skyline (rather than a full rectangle) of levels keeps large
instances materializable: every check quantifies over the levels that
are present.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .report import StructuralError, ValidationReport
from .simplicial import (DeltaMap, TruncatedSimplicialSet, all_monotone,
                         decompose, delta_face, delta_degen)


def rect_indices(cutoffs: tuple[int, ...]) -> set[tuple[int, ...]]:
    return set(product(*(range(c + 1) for c in cutoffs)))


@dataclass
class MultiSimplicialSet:
    arity: int
    indices: set[tuple[int, ...]]
    cells: dict[tuple[int, ...], tuple]
    # (axis, K, i) -> dict; faces map cells[K] -> cells[K - e_axis],
    # degeneracies map cells[K] -> cells[K + e_axis]
    faces: dict[tuple[int, tuple[int, ...], int], dict]
    degens: dict[tuple[int, tuple[int, ...], int], dict]

    def __post_init__(self):
        for K in self.indices:
            if len(K) != self.arity:
                raise StructuralError("multi-index arity mismatch")
            if K not in self.cells:
                raise StructuralError(f"missing cells at {K}")
        # downward closure
        for K in self.indices:
            for axis in range(self.arity):
                if K[axis] > 0:
                    below = K[:axis] + (K[axis] - 1,) + K[axis + 1:]
                    if below not in self.indices:
                        raise StructuralError(f"index set not downward closed at {K}")

    def has(self, K: tuple[int, ...]) -> bool:
        return K in self.indices

    def level(self, K: tuple[int, ...]) -> tuple:
        if K not in self.indices:
            raise StructuralError(f"level {K} not materialized")
        return self.cells[K]

    def face(self, axis: int, K: tuple[int, ...], i: int, x):
        return self.faces[(axis, K, i)][x]

    def degen(self, axis: int, K: tuple[int, ...], i: int, x):
        return self.degens[(axis, K, i)][x]

    def act_axis(self, axis: int, phi: DeltaMap, K: tuple[int, ...], x):
        """Action of (id, ..., phi, ..., id) with phi in position ``axis``
        on a cell at level K (where K[axis] == phi.cod)."""
        if K[axis] != phi.cod:
            raise StructuralError("level does not match the map")
        cur = list(K)
        for kind, m, i in reversed(decompose(phi)):
            if kind == "d":
                x = self.face(axis, tuple(cur), i, x)
                cur[axis] -= 1
            else:
                x = self.degen(axis, tuple(cur), i, x)
                cur[axis] += 1
        return x

    def act(self, phis: tuple[DeltaMap, ...], K: tuple[int, ...], x):
        cur = list(K)
        for axis, phi in enumerate(phis):
            x = self.act_axis(axis, phi, tuple(cur), x)
            cur[axis] = phi.dom
        return x

    def slice0(self, level: int) -> "MultiSimplicialSet":
        """Fix the first axis at ``level``; arity drops by one."""
        if self.arity == 0:
            raise StructuralError("cannot slice a 0-axis functor")
        idx = {K[1:] for K in self.indices if K[0] == level}
        cells = {K[1:]: self.cells[K] for K in self.indices if K[0] == level}
        faces = {}
        degens = {}
        for (axis, K, i), table in self.faces.items():
            if axis > 0 and K[0] == level:
                faces[(axis - 1, K[1:], i)] = table
        for (axis, K, i), table in self.degens.items():
            if axis > 0 and K[0] == level:
                degens[(axis - 1, K[1:], i)] = table
        return MultiSimplicialSet(self.arity - 1, idx, cells, faces, degens)

    def to_truncated(self) -> TruncatedSimplicialSet:
        if self.arity != 1:
            raise StructuralError("only 1-axis functors convert")
        cutoff = max(K[0] for K in self.indices)
        if {(m,) for m in range(cutoff + 1)} != self.indices:
            raise StructuralError("ragged 1-axis index set")
        levels = {m: self.cells[(m,)] for m in range(cutoff + 1)}
        faces = {(K[0], i): t for (axis, K, i), t in self.faces.items()}
        degens = {(K[0], i): t for (axis, K, i), t in self.degens.items()}
        return TruncatedSimplicialSet(cutoff, levels, faces, degens)


def from_truncated(X: TruncatedSimplicialSet) -> MultiSimplicialSet:
    idx = {(m,) for m in range(X.cutoff + 1)}
    cells = {(m,): X.levels[m] for m in range(X.cutoff + 1)}
    faces = {(0, (m,), i): t for (m, i), t in X.faces.items()}
    degens = {(0, (m,), i): t for (m, i), t in X.degens.items()}
    return MultiSimplicialSet(1, idx, cells, faces, degens)


def from_set(values: tuple) -> MultiSimplicialSet:
    return MultiSimplicialSet(0, {()}, {(): tuple(values)}, {}, {})


def validate_multisimplicial(A: MultiSimplicialSet) -> ValidationReport:
    """Generator totality, per-axis simplicial identities, and commutation
    of actions on distinct axes, over the materialized levels."""
    report = ValidationReport("multi-simplicial-set")
    for K in A.indices:
        for axis in range(A.arity):
            m = K[axis]
            if m >= 1:
                for i in range(m + 1):
                    table = A.faces.get((axis, K, i))
                    if table is None:
                        report.add("structural", (axis, K, i), "missing face table")
                        continue
                    lower = K[:axis] + (m - 1,) + K[axis + 1:]
                    for x in A.cells[K]:
                        if x not in table or table[x] not in A.cells[lower]:
                            report.add("structural", (axis, K, i, x), "face dangles")
            upper = K[:axis] + (m + 1,) + K[axis + 1:]
            if upper in A.indices:
                for i in range(m + 1):
                    table = A.degens.get((axis, K, i))
                    if table is None:
                        report.add("structural", (axis, K, i), "missing degeneracy")
                        continue
                    for x in A.cells[K]:
                        if x not in table or table[x] not in A.cells[upper]:
                            report.add("structural", (axis, K, i, x), "degeneracy dangles")
    if not report.ok:
        return report

    # per-axis identities via pairs of generators, where levels allow
    for K in A.indices:
        for axis in range(A.arity):
            m = K[axis]
            if m >= 2:
                for j in range(m + 1):
                    for i in range(j):
                        for x in A.cells[K]:
                            K1 = K[:axis] + (m - 1,) + K[axis + 1:]
                            lhs = A.faces[(axis, K1, i)][A.faces[(axis, K, j)][x]]
                            rhs = A.faces[(axis, K1, j - 1)][A.faces[(axis, K, i)][x]]
                            if lhs != rhs:
                                report.add("identity-dd", (axis, K, i, j, x))
            up1 = K[:axis] + (m + 1,) + K[axis + 1:]
            up2 = K[:axis] + (m + 2,) + K[axis + 1:]
            if up1 in A.indices and up2 in A.indices:
                for j in range(m + 1):
                    for i in range(j + 1):
                        for x in A.cells[K]:
                            lhs = A.degens[(axis, up1, j + 1)][A.degens[(axis, K, i)][x]]
                            rhs = A.degens[(axis, up1, i)][A.degens[(axis, K, j)][x]]
                            if lhs != rhs:
                                report.add("identity-ss", (axis, K, i, j, x))
            if up1 in A.indices:
                for j in range(m + 1):
                    for i in range(m + 2):
                        for x in A.cells[K]:
                            lhs = A.faces[(axis, up1, i)][A.degens[(axis, K, j)][x]]
                            if i in (j, j + 1):
                                rhs = x
                            elif i < j:
                                K1 = K[:axis] + (m - 1,) + K[axis + 1:]
                                rhs = A.degens[(axis, K1, j - 1)][A.faces[(axis, K, i)][x]]
                            else:
                                K1 = K[:axis] + (m - 1,) + K[axis + 1:]
                                rhs = A.degens[(axis, K1, j)][A.faces[(axis, K, i - 1)][x]]
                            if lhs != rhs:
                                report.add("identity-ds", (axis, K, i, j, x))

    # cross-axis commutation of generators
    for K in A.indices:
        for a1 in range(A.arity):
            for a2 in range(a1 + 1, A.arity):
                gens1 = _generators_at(A, a1, K)
                for kind1, i1 in gens1:
                    K1 = _shift(K, a1, kind1)
                    if K1 not in A.indices:
                        continue
                    for kind2, i2 in _generators_at(A, a2, K):
                        K2 = _shift(K, a2, kind2)
                        K12 = _shift(K1, a2, kind2)
                        if K2 not in A.indices or K12 not in A.indices:
                            continue
                        for x in A.cells[K]:
                            lhs = _apply_gen(A, a2, kind2, i2, K1,
                                             _apply_gen(A, a1, kind1, i1, K, x))
                            rhs = _apply_gen(A, a1, kind1, i1, K2,
                                             _apply_gen(A, a2, kind2, i2, K, x))
                            if lhs != rhs:
                                report.add("axis-commutation",
                                           (a1, kind1, i1, a2, kind2, i2, K, x))
    return report


def _generators_at(A: MultiSimplicialSet, axis: int, K):
    m = K[axis]
    out = []
    if m >= 1:
        out.extend(("d", i) for i in range(m + 1))
    if _shift(K, axis, "s") in A.indices:
        out.extend(("s", i) for i in range(m + 1))
    return out


def _shift(K, axis, kind):
    delta = -1 if kind == "d" else 1
    return K[:axis] + (K[axis] + delta,) + K[axis + 1:]


def _apply_gen(A, axis, kind, i, K, x):
    if kind == "d":
        return A.faces[(axis, K, i)][x]
    return A.degens[(axis, K, i)][x]


def constant_multisimplicial(values: tuple, arity: int,
                             cutoffs: tuple[int, ...]) -> MultiSimplicialSet:
    idx = rect_indices(cutoffs)
    cells = {K: tuple(values) for K in idx}
    faces = {}
    degens = {}
    for K in idx:
        for axis in range(arity):
            if K[axis] >= 1:
                for i in range(K[axis] + 1):
                    faces[(axis, K, i)] = {v: v for v in values}
            if _shift(K, axis, "s") in idx:
                for i in range(K[axis] + 1):
                    degens[(axis, K, i)] = {v: v for v in values}
    return MultiSimplicialSet(arity, idx, cells, faces, degens)
