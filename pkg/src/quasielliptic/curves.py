"""Configurations of (-2)-curves, their fibres, sections and Mordell-Weil groups."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import isqrt, prod
from typing import Sequence

from .picard import (
    ClassKind,
    DivisorClass,
    canonical_class,
    classify,
    e,
    format_label,
    pair,
    parse_label,
)
from .snf import integer_kernel, smith_normal_form, smith_with_inverse


class ConfigurationError(ValueError):
    pass


class FiberError(ConfigurationError):
    def __init__(self, fiber: int, residual: DivisorClass):
        super().__init__(f"fibre {fiber}: components sum to -K minus {format_label(residual)}")
        self.fiber = fiber
        self.residual = residual


class SectionCountError(ConfigurationError):
    pass


class NotExtremalError(ConfigurationError):
    pass


@dataclass
class SurfaceConfiguration:
    characteristic: int
    dynkin_label: str
    neg_two_curves: list[DivisorClass]
    fibers: list[list[int]] = field(default_factory=list)
    multiplicities: list[list[int]] = field(default_factory=list)
    zero_section: DivisorClass = field(default_factory=lambda: e(9))
    name: str = ""
    labels: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        for C in self.neg_two_curves:
            if classify(C) is not ClassKind.MINUS_TWO:
                raise ConfigurationError(f"{format_label(C)} is not a (-2)-class")
        if not self.labels:
            self.labels = [format_label(C) for C in self.neg_two_curves]
        if not self.fibers:
            self.fibers = connected_components(self.neg_two_curves)
        if not self.multiplicities:
            self.multiplicities = [fiber_marks([self.neg_two_curves[i] for i in f]) for f in self.fibers]
        if len(self.multiplicities) != len(self.fibers) or any(
            len(m) != len(f) for m, f in zip(self.multiplicities, self.fibers)
        ):
            raise ConfigurationError("fibre multiplicities do not match fibre sizes")

    @classmethod
    def from_labels(
        cls,
        characteristic: int,
        dynkin_label: str,
        labels: Sequence[str],
        zero_section: str = "e9",
        name: str = "",
        fibers: list[list[int]] | None = None,
        multiplicities: list[list[int]] | None = None,
    ) -> "SurfaceConfiguration":
        return cls(
            characteristic=characteristic,
            dynkin_label=dynkin_label,
            neg_two_curves=[parse_label(s) for s in labels],
            fibers=fibers or [],
            multiplicities=multiplicities or [],
            zero_section=parse_label(zero_section),
            name=name or dynkin_label,
            labels=list(labels),
        )


# -- fibres and Dynkin types ---------------------------------------------------------


def connected_components(curves: Sequence[DivisorClass]) -> list[list[int]]:
    n = len(curves)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(n):
                if not seen[w] and w != v and pair(curves[v], curves[w]) > 0:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def fiber_marks(curves: Sequence[DivisorClass]) -> list[int]:
    """Primitive positive kernel vector of the fibre's Gram matrix."""
    G = [[pair(a, b) for b in curves] for a in curves]
    ker = integer_kernel(G)
    if not ker or len(ker[0]) != 1:
        raise ConfigurationError("fibre Gram matrix does not have a one-dimensional kernel")
    v = [row[0] for row in ker]
    if sum(v) < 0:
        v = [-x for x in v]
    if min(v) <= 0:
        raise ConfigurationError("fibre kernel vector is not positive")
    return v


def affine_type(gram: Sequence[Sequence[int]]) -> str:
    """Name the affine Dynkin type of a connected (-2)-configuration."""
    n = len(gram)
    if n == 2 and gram[0][1] == 2:
        return "A1~"
    adj = [[j for j in range(n) if j != i and gram[i][j]] for i in range(n)]
    if any(gram[i][j] > 1 for i in range(n) for j in range(n) if i != j):
        return "unknown"
    edges = sum(len(a) for a in adj) // 2
    deg = [len(a) for a in adj]
    if edges == n and all(d == 2 for d in deg) and n >= 3:
        return f"A{n - 1}~"
    if edges != n - 1:
        return "unknown"
    branch = [i for i in range(n) if deg[i] >= 3]
    if len(branch) == 1 and deg[branch[0]] == 4 and n == 5:
        return "D4~"
    if len(branch) == 2 and all(deg[b] == 3 for b in branch):
        return f"D{n - 1}~"
    if len(branch) == 1 and deg[branch[0]] == 3:
        b = branch[0]
        arms = []
        for start in adj[b]:
            length, prev, cur = 1, b, start
            while deg[cur] == 2:
                nxt = next(w for w in adj[cur] if w != prev)
                prev, cur = cur, nxt
                length += 1
            arms.append(length)
        name = {(2, 2, 2): "E6~", (1, 3, 3): "E7~", (1, 2, 5): "E8~"}.get(tuple(sorted(arms)))
        return name or "unknown"
    return "unknown"


def dynkin_label_of(types: Sequence[str]) -> str:
    counts = Counter(types)

    def key(t: str) -> tuple:
        return (t[0], int(t[1:-1]) if t[1:-1].isdigit() else 99)

    parts = []
    for t in sorted(counts, key=key):
        parts.append(t if counts[t] == 1 else f"{t}^{counts[t]}")
    return "+".join(parts)


@dataclass
class FiberReport:
    index: int
    labels: list[str]
    multiplicities: list[int]
    affine_type: str
    sum_is_minus_k: bool


def check_fibers(config: SurfaceConfiguration) -> list[FiberReport]:
    minus_k = -canonical_class()
    reports = []
    for idx, (fib, mult) in enumerate(zip(config.fibers, config.multiplicities)):
        curves = [config.neg_two_curves[i] for i in fib]
        total = DivisorClass(0, (0,) * 9)
        for m, C in zip(mult, curves):
            total = total + m * C
        if total != minus_k:
            raise FiberError(idx, minus_k - total)
        gram = [[pair(a, b) for b in curves] for a in curves]
        reports.append(
            FiberReport(
                index=idx,
                labels=[format_label(C) for C in curves],
                multiplicities=list(mult),
                affine_type=affine_type(gram),
                sum_is_minus_k=True,
            )
        )
    return reports


def inferred_dynkin_label(config: SurfaceConfiguration) -> str:
    return dynkin_label_of([r.affine_type for r in check_fibers(config)])


# -- sections ------------------------------------------------------------------------


def _vectors(k: int, total: int, sumsq: int):
    """Integer vectors of length k with given sum and sum of squares."""
    if k == 0:
        if total == 0 and sumsq == 0:
            yield ()
        return
    if total * total > k * sumsq or (total - sumsq) % 2:
        return
    r = isqrt(sumsq)
    for b in range(r, -r - 1, -1):
        rest_sq = sumsq - b * b
        rest_total = total - b
        if rest_total * rest_total > (k - 1) * rest_sq:
            continue
        for tail in _vectors(k - 1, rest_total, rest_sq):
            yield (b, *tail)


def candidate_sections(degree_bound: int) -> list[DivisorClass]:
    """All (-1)-classes with 0 <= coeff_l <= degree_bound."""
    out = []
    for l in range(degree_bound + 1):
        for b in _vectors(9, 3 * l - 1, l * l + 1):
            out.append(DivisorClass(l, b))
    return out


def enumerate_minus_one_curves(
    config: SurfaceConfiguration, degree_bound: int = 5, check: bool = True
) -> list[DivisorClass]:
    if degree_bound < 3:
        raise ValueError("degree_bound must be at least 3")
    found = [
        D
        for D in candidate_sections(degree_bound)
        if all(pair(D, C) >= 0 for C in config.neg_two_curves)
    ]
    found.sort(key=DivisorClass.sort_key)
    if check:
        order = mordell_weil(config).order
        if len(found) != order:
            raise SectionCountError(
                f"found {len(found)} sections with coeff_l <= {degree_bound}, but |MW| = {order}"
            )
    return found


# -- Mordell-Weil ----------------------------------------------------------------------


@dataclass(frozen=True)
class MordellWeilGroup:
    invariant_factors: tuple[int, ...]
    order: int

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "trivial"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


def _functional(D: DivisorClass) -> list[int]:
    # coordinates c = (l, b_1..b_9); pair(c, D) = l*D.l - sum b_i D.b_i
    return [D.coeff_l, *(-b for b in D.coeff_e)]


def mordell_weil(config: SurfaceConfiguration, zero_section: DivisorClass | None = None) -> MordellWeilGroup:
    s0 = zero_section if zero_section is not None else config.zero_section
    if classify(s0) is not ClassKind.MINUS_ONE:
        raise ConfigurationError(f"zero section {format_label(s0)} is not a (-1)-class")
    K = canonical_class()
    U = [_functional(K), _functional(s0)]
    D, _, V, Vinv = smith_with_inverse(U)
    rank = sum(1 for i in range(2) if D[i][i])
    if rank != 2:
        raise ConfigurationError("K and the zero section are dependent")
    gens = [C for C in config.neg_two_curves if pair(C, s0) == 0]
    coords = []
    for C in gens:
        if pair(C, K) or pair(C, s0):
            raise ConfigurationError(f"{format_label(C)} is not in the orthogonal complement")
        v = C.vector()
        w = [sum(Vinv[i][j] * v[j] for j in range(10)) for i in range(10)]
        if any(w[:rank]):
            raise ConfigurationError(f"{format_label(C)} is not in the orthogonal complement")
        coords.append(w[rank:])
    dim = 10 - rank
    if not coords:
        raise NotExtremalError("no (-2)-curves disjoint from the zero section")
    X = [[coords[j][i] for j in range(len(coords))] for i in range(dim)]
    S, _, _ = smith_normal_form(X)
    diag = [S[i][i] for i in range(min(dim, len(coords)))]
    if len(diag) < dim or any(d == 0 for d in diag):
        raise NotExtremalError("quotient has positive rank; the configuration is not extremal")
    factors = tuple(d for d in diag if d > 1)
    return MordellWeilGroup(factors, prod(factors))
