"""The intersection graph of (-2)- and (-1)-curves, with automorphisms and canonical forms.

Graphs are symmetric integer matrices plus an optional vertex colouring.
Automorphisms and canonical forms are found by colour refinement followed by
individualisation and backtracking, which is plenty for the <= 64 vertex
graphs that occur here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Hashable, Sequence

from .curves import ConfigurationError, SurfaceConfiguration, enumerate_minus_one_curves
from .picard import ClassKind, DivisorClass, classify, format_label, pair

Matrix = list[list[int]]
Perm = tuple[int, ...]


@dataclass
class Vertex:
    cls: DivisorClass
    kind: ClassKind
    label: str


@dataclass
class IntersectionGraph:
    vertices: list[Vertex]
    gram: Matrix

    @property
    def n(self) -> int:
        return len(self.vertices)

    def colors(self) -> list[Hashable]:
        return [(v.kind.value, self.gram[i][i]) for i, v in enumerate(self.vertices)]

    def index(self, D: DivisorClass) -> int:
        for i, v in enumerate(self.vertices):
            if v.cls == D:
                return i
        raise KeyError(format_label(D))

    def kind_count(self, kind: ClassKind) -> int:
        return sum(1 for v in self.vertices if v.kind is kind)

    def block(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return [[self.gram[i][j] for j in cols] for i in rows]

    def subgraph(self, idx: Sequence[int]) -> "IntersectionGraph":
        return IntersectionGraph([self.vertices[i] for i in idx], self.block(idx, idx))

    def permuted(self, order: Sequence[int]) -> "IntersectionGraph":
        """The graph whose k-th vertex is the old vertex order[k]."""
        return self.subgraph(order)


def graph_from_classes(classes: Sequence[DivisorClass], labels: Sequence[str] | None = None) -> IntersectionGraph:
    verts = []
    for k, D in enumerate(classes):
        verts.append(Vertex(D, classify(D), labels[k] if labels else format_label(D)))
    gram = [[pair(a, b) for b in classes] for a in classes]
    for i in range(len(classes)):
        for j in range(len(classes)):
            if i != j and gram[i][j] < 0:
                raise ConfigurationError(
                    f"{verts[i].label} and {verts[j].label} meet negatively; they cannot both be curves"
                )
    return IntersectionGraph(verts, gram)


def build_graph(
    config: SurfaceConfiguration,
    sections: Sequence[DivisorClass] | None = None,
    degree_bound: int = 5,
) -> IntersectionGraph:
    """(-2)-curves in configuration order, then sections in canonical order."""
    if sections is None:
        sections = enumerate_minus_one_curves(config, degree_bound)
    labels = list(config.labels) + [format_label(s) for s in sections]
    return graph_from_classes(list(config.neg_two_curves) + list(sections), labels)


# -- colour refinement -------------------------------------------------------------


def _rank(values: Sequence[Hashable]) -> list[int]:
    order = sorted(set(values))
    index = {v: k for k, v in enumerate(order)}
    return [index[v] for v in values]


def refine(gram: Matrix, colors: Sequence[int]) -> tuple[list[int], tuple]:
    """Coarsest equitable refinement; also returns a trace that is an isomorphism invariant."""
    n = len(gram)
    col = list(colors)
    trace = []
    while True:
        sigs = []
        for v in range(n):
            row = gram[v]
            nbrs = sorted((col[w], row[w]) for w in range(n) if w != v and row[w])
            sigs.append((col[v], row[v], tuple(nbrs)))
        new = _rank(sigs)
        trace.append(tuple(sorted(sigs)))
        if len(set(new)) == len(set(col)):
            return new, tuple(trace)
        col = new


def _individualize(col: Sequence[int], v: int) -> list[int]:
    out = [2 * c for c in col]
    out[v] += 1
    return out


def _target_cell(col: Sequence[int]) -> list[int] | None:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(col):
        cells.setdefault(c, []).append(v)
    for c in sorted(cells):
        if len(cells[c]) > 1:
            return cells[c]
    return None


def _initial(colors: Sequence[Hashable] | None, n: int) -> list[int]:
    return _rank(list(colors)) if colors is not None else [0] * n


def _is_iso(g1: Matrix, g2: Matrix, perm: Sequence[int]) -> bool:
    n = len(g1)
    return all(g2[perm[i]][perm[j]] == g1[i][j] for i in range(n) for j in range(n))


def _search_iso(g1: Matrix, c1: list[int], g2: Matrix, c2: list[int]) -> Perm | None:
    c1, t1 = refine(g1, c1)
    c2, t2 = refine(g2, c2)
    if t1 != t2 or sorted(c1) != sorted(c2):
        return None
    cell = _target_cell(c1)
    if cell is None:
        where = {c: v for v, c in enumerate(c2)}
        perm = tuple(where[c] for c in c1)
        return perm if _is_iso(g1, g2, perm) else None
    v = cell[0]
    for w in (u for u in range(len(c2)) if c2[u] == c1[v]):
        found = _search_iso(g1, _individualize(c1, v), g2, _individualize(c2, w))
        if found is not None:
            return found
    return None


def find_isomorphism(
    g1: Matrix,
    g2: Matrix,
    colors1: Sequence[Hashable] | None = None,
    colors2: Sequence[Hashable] | None = None,
) -> Perm | None:
    """A bijection p with g2[p[i]][p[j]] == g1[i][j] and matching colours, or None."""
    if len(g1) != len(g2):
        return None
    n = len(g1)
    a = list(colors1) if colors1 is not None else [0] * n
    b = list(colors2) if colors2 is not None else [0] * n
    if sorted(map(repr, a)) != sorted(map(repr, b)):
        return None
    # rank the colours jointly so equal colours get equal integers
    joint = _rank(a + b)
    return _search_iso(g1, joint[:n], g2, joint[n:])


# -- automorphisms -----------------------------------------------------------------


@dataclass
class GraphAutomorphisms:
    generators: list[Perm]
    order: int
    orbit_sizes: list[int]


def _orbit(point: int, gens: Sequence[Perm], allowed: set[int]) -> set[int]:
    orb = {point}
    stack = [point]
    while stack:
        v = stack.pop()
        for g in gens:
            w = g[v]
            if w not in orb and w in allowed:
                orb.add(w)
                stack.append(w)
    return orb


def _automorphisms(gram: Matrix, col: list[int]) -> GraphAutomorphisms:
    gens: list[Perm] = []
    sizes: list[int] = []
    col, _ = refine(gram, col)
    while True:
        cell = _target_cell(col)
        if cell is None:
            break
        base = cell[0]
        fixed = _individualize(col, base)
        # only this level's generators fix every earlier base point
        level_gens: list[Perm] = []
        orbit = {base}
        for w in cell[1:]:
            if w in orbit:
                continue
            g = _search_iso(gram, fixed, gram, _individualize(col, w))
            if g is None:
                continue
            level_gens.append(g)
            orbit = _orbit(base, level_gens, set(cell))
        gens.extend(level_gens)
        sizes.append(len(orbit))
        col, _ = refine(gram, fixed)
    return GraphAutomorphisms(gens, prod(sizes), sizes)


def automorphisms(gram: Matrix, colors: Sequence[Hashable] | None = None) -> GraphAutomorphisms:
    """Generators and order of the colour- and weight-preserving automorphism group."""
    return _automorphisms(gram, _initial(colors, len(gram)))


def graph_automorphisms(G: IntersectionGraph) -> GraphAutomorphisms:
    return automorphisms(G.gram, G.colors())


def is_automorphism(gram: Matrix, perm: Sequence[int], colors: Sequence[Hashable] | None = None) -> bool:
    if colors is not None and any(colors[perm[i]] != colors[i] for i in range(len(perm))):
        return False
    return _is_iso(gram, gram, perm)


# -- canonical form ---------------------------------------------------------------


def _certificate(gram: Matrix, col0: Sequence[int], order: Sequence[int]) -> tuple:
    return (
        tuple(col0[v] for v in order),
        tuple(tuple(gram[v][w] for w in order) for v in order),
    )


def _canon(gram: Matrix, col0: list[int], col: list[int], best: list) -> None:
    col, _ = refine(gram, col)
    cell = _target_cell(col)
    if cell is None:
        order = sorted(range(len(col)), key=lambda v: col[v])
        cert = _certificate(gram, col0, order)
        if best[0] is None or cert < best[0]:
            best[0] = cert
            best[1] = tuple(order)
        return
    # children in one orbit of the current stabiliser give the same leaves
    aut = _automorphisms(gram, list(col))
    seen: set[int] = set()
    for v in cell:
        if v in seen:
            continue
        seen |= _orbit(v, aut.generators, set(cell))
        _canon(gram, col0, _individualize(col, v), best)


def canonical_form(gram: Matrix, colors: Sequence[Hashable] | None = None) -> tuple[tuple, Perm]:
    """Canonical (colours, matrix) certificate and the vertex order producing it.

    order[k] is the original vertex placed at position k.
    """
    col0 = _initial(colors, len(gram))
    if not gram:
        return ((), ()), ()
    best: list = [None, None]
    _canon(gram, col0, list(col0), best)
    return best[0], best[1]


def canonical_matrix(gram: Matrix, colors: Sequence[Hashable] | None = None) -> tuple:
    return canonical_form(gram, colors)[0]


# -- DOT export ---------------------------------------------------------------------


def export_dot(G: IntersectionGraph, name: str = "G") -> str:
    """Filled nodes for (-2)-curves, hollow for (-1)-curves, one edge per intersection."""
    lines = [f'graph "{name}" {{', "  node [shape=circle, label=\"\", width=0.15];"]
    for i, v in enumerate(G.vertices):
        style = "filled" if v.kind is ClassKind.MINUS_TWO else "solid"
        fill = ', fillcolor=black' if style == "filled" else ""
        lines.append(f'  v{i} [xlabel="{v.label}", style={style}{fill}];')
    for i in range(G.n):
        for j in range(i + 1, G.n):
            for _ in range(max(G.gram[i][j], 0)):
                lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
