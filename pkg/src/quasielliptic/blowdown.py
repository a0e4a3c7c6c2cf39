"""Sequences of nine contractions from the surface down to the plane.

Contracting a (-1)-curve R replaces the intersection matrix by r r^T + Gamma,
where r is R's column. After nine contractions the sequence reaches the plane
exactly when no entry is negative.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .curves import SurfaceConfiguration
from .graph import GraphAutomorphisms, IntersectionGraph, graph_automorphisms
from .picard import DivisorClass, canonical_class, format_label, pair

TARGET_CONTRACTIONS = 9
G_DIAG = (1,) + (-1,) * 9


class ContractionError(ValueError):
    pass


class BlowdownConsistencyError(RuntimeError):
    pass


@dataclass
class ContractionState:
    gram: np.ndarray
    contracted: list[int] = field(default_factory=list)
    live: set[int] = field(default_factory=set)

    @classmethod
    def start(cls, G: IntersectionGraph) -> "ContractionState":
        return cls(np.array(G.gram, dtype=np.int64), [], set(range(G.n)))

    def contractible(self) -> list[int]:
        return [v for v in sorted(self.live) if self.gram[v, v] == -1]

    def is_terminal(self) -> bool:
        return len(self.contracted) == TARGET_CONTRACTIONS and bool((self.gram >= 0).all())


def contract(state: ContractionState, r: int) -> ContractionState:
    if r not in state.live:
        raise ContractionError(f"vertex {r} has already been contracted")
    if state.gram[r, r] != -1:
        raise ContractionError(f"vertex {r} has self-intersection {state.gram[r, r]}, not -1")
    col = state.gram[:, r]
    new = state.gram + np.outer(col, col)
    if np.abs(new).max() > 2**40:
        raise OverflowError("intersection numbers out of range")
    return ContractionState(new, state.contracted + [r], state.live - {r})


@dataclass
class BlowdownSequence:
    order: tuple[int, ...]
    final_gram: np.ndarray

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.order)


@dataclass
class BlowdownClass:
    representative: BlowdownSequence
    members: list[frozenset[int]]


def valid_sequences(G: IntersectionGraph) -> dict[frozenset[int], BlowdownSequence]:
    """Every vertex set reachable by nine contractions that ends at the plane.

    The intermediate matrix depends only on the set already contracted, so
    sets are memoised and one contraction order is kept per set.
    """
    found: dict[frozenset[int], BlowdownSequence] = {}
    seen: set[frozenset[int]] = set()

    def dfs(state: ContractionState) -> None:
        key = frozenset(state.contracted)
        if key in seen:
            return
        seen.add(key)
        if len(state.contracted) == TARGET_CONTRACTIONS:
            if state.is_terminal():
                found[key] = BlowdownSequence(tuple(state.contracted), state.gram)
            return
        for v in state.contractible():
            dfs(contract(state, v))

    dfs(ContractionState.start(G))
    return found


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _set_key(G: IntersectionGraph, s: frozenset[int]) -> tuple:
    return tuple(sorted(G.vertices[v].cls.sort_key() for v in s))


def enumerate_blowdowns(
    G: IntersectionGraph, aut: GraphAutomorphisms | None = None
) -> list[BlowdownClass]:
    """Valid blow-downs up to automorphisms of G, as orbits of contracted vertex sets."""
    seqs = valid_sequences(G)
    if not seqs:
        raise BlowdownConsistencyError("no sequence of nine contractions reaches the plane")
    aut = aut or graph_automorphisms(G)
    uf = _UnionFind(seqs)
    for s in seqs:
        for g in aut.generators:
            image = frozenset(g[v] for v in s)
            if image not in seqs:
                raise BlowdownConsistencyError("automorphism image of a valid set is not valid")
            uf.union(s, image)
    groups: dict[frozenset[int], list[frozenset[int]]] = {}
    for s in seqs:
        groups.setdefault(uf.find(s), []).append(s)
    out = []
    for members in groups.values():
        members.sort(key=lambda s: _set_key(G, s))
        out.append(BlowdownClass(seqs[members[0]], members))
    out.sort(key=lambda c: _set_key(G, c.representative.vertex_set))
    return out


def sequence_for_set(G: IntersectionGraph, vertices: set[int] | frozenset[int]) -> BlowdownSequence:
    """A contraction order for a given vertex set, or an error if none exists."""
    target = frozenset(vertices)

    def dfs(state: ContractionState) -> BlowdownSequence | None:
        if len(state.contracted) == len(target):
            if state.is_terminal():
                return BlowdownSequence(tuple(state.contracted), state.gram)
            return None
        for v in state.contractible():
            if v in target:
                done = dfs(contract(state, v))
                if done is not None:
                    return done
        return None

    seq = dfs(ContractionState.start(G))
    if seq is None:
        raise ContractionError("the given curves cannot be contracted to the plane")
    return seq


# -- presentations -------------------------------------------------------------------


@dataclass
class Presentation:
    line_class: DivisorClass
    exceptional: list[DivisorClass]
    matrix_A: list[list[int]]

    def apply(self, D: DivisorClass) -> DivisorClass:
        return apply_matrix(self.matrix_A, D)


class PresentationError(RuntimeError):
    pass


def total_transforms(classes: list[DivisorClass]) -> list[DivisorClass]:
    """Lift the curves in contraction order to orthogonal (-1)-classes."""
    out: list[DivisorClass] = []
    for v in classes:
        E = v
        for F in out:
            E = E + pair(v, F) * F
        out.append(E)
    return out


def presentation_from_exceptionals(fs: list[DivisorClass]) -> Presentation:
    K = canonical_class()
    total = -K
    for f in fs:
        total = total + f
    if total.coeff_l % 3 or any(b % 3 for b in total.coeff_e):
        raise PresentationError("-K + sum f is not divisible by 3")
    line = DivisorClass(total.coeff_l // 3, tuple(b // 3 for b in total.coeff_e))
    fs = sorted(fs, key=DivisorClass.sort_key)
    basis = [line, *fs]
    want = [[G_DIAG[i] if i == j else 0 for j in range(10)] for i in range(10)]
    got = [[pair(a, b) for b in basis] for a in basis]
    if got != want:
        raise PresentationError("lifted classes are not an orthonormal basis")
    # A = P^-1 = G P^T G with P the matrix whose columns are the new basis
    P = [b.signed() for b in basis]  # rows of P^T
    A = [[G_DIAG[i] * P[i][j] * G_DIAG[j] for j in range(10)] for i in range(10)]
    return Presentation(line, fs, A)


def presentation_of(seq: BlowdownSequence, G: IntersectionGraph) -> Presentation:
    fs = total_transforms([G.vertices[v].cls for v in seq.order])
    for a in range(len(fs)):
        for b in range(len(fs)):
            if pair(fs[a], fs[b]) != (-1 if a == b else 0):
                raise PresentationError("total transforms are not orthogonal (-1)-classes")
    return presentation_from_exceptionals(fs)


def preserves_form(A: list[list[int]]) -> bool:
    n = len(A)
    for i in range(n):
        for j in range(n):
            if sum(A[k][i] * G_DIAG[k] * A[k][j] for k in range(n)) != (G_DIAG[i] if i == j else 0):
                return False
    return True


def fixes_canonical(A: list[list[int]]) -> bool:
    k = canonical_class().signed()
    return [sum(r * x for r, x in zip(row, k)) for row in A] == list(k)


def apply_matrix(A, D: DivisorClass) -> DivisorClass:
    a = D.signed()
    return DivisorClass.from_signed([sum(int(r) * x for r, x in zip(row, a)) for row in A])


def match_up_to_f_permutation(A, B) -> tuple[int, ...] | None:
    """sigma with B[sigma[i]] == A[i] for rows 1..9 and equal row 0, if it exists."""
    A = [tuple(int(x) for x in r) for r in A]
    B = [tuple(int(x) for x in r) for r in B]
    if A[0] != B[0] or sorted(A[1:]) != sorted(B[1:]):
        return None
    where = {r: i for i, r in enumerate(B)}
    return tuple(where[r] for r in A)


def relabel_diagram(config: SurfaceConfiguration, pres: Presentation) -> SurfaceConfiguration:
    new = [pres.apply(C) for C in config.neg_two_curves]
    return SurfaceConfiguration(
        characteristic=config.characteristic,
        dynkin_label=config.dynkin_label,
        neg_two_curves=new,
        fibers=[list(f) for f in config.fibers],
        multiplicities=[list(m) for m in config.multiplicities],
        zero_section=pres.apply(config.zero_section),
        name=config.name,
        labels=[format_label(C) for C in new],
    )
