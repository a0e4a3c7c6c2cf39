"""Pencils and nets of plane cubics: base loci with infinitely-near points,
fibre types, the generic fibre, and linear conditions imposed on cubics.

Infinitely-near points are handled by explicit blow-ups of local equations.
A node of a base-point tree records the weight w of the system there (the
multiplicity of a general member); the children are the points of the
exceptional line where all strict transforms still vanish. By Noether's
formula the local intersection number of two members equals the sum of w^2
over the tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Any, Sequence

from .fields import GF, field
from .linalg import nullspace, poly_kernel_vector, poly_rank, rank
from .plane import (
    InfiniteMultiplicity,
    Local,
    UnresolvedBaseLocus,
    blow_up,
    common_factor,
    common_zeros,
    exceptional_restriction,
    format_point,
    geometric_factors,
    intersection_multiplicity,
    local_expansion,
    local_order,
    normalize,
    quadratic_discriminant,
    singular_points,
    tangent_cone_type,
    ugcd,
    uroots,
)
from .poly import MultiPoly, PolyMatrix, det, parse_element, parse_poly
from .registry import (
    CUSPIDAL,
    DOUBLE_LINE,
    LINE_CONIC,
    LINE_TANGENT_CONIC,
    NODAL,
    SMOOTH,
    THREE_CONCURRENT,
    THREE_GENERAL,
    TRIPLE_LINE,
)

CUBIC_MONOMIALS = ((3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
                   (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3))
MAX_EXTENSION = 4
MAX_TREE_DEPTH = 12
DISCRIMINANT_DEGREE = 12


class CubicSystemError(ValueError):
    pass


def monomials(F: GF) -> list[MultiPoly]:
    return [MultiPoly.monomial(F, e) for e in CUBIC_MONOMIALS]


def coefficient_vector(f: MultiPoly) -> list[int]:
    return [f.coefficient(e) for e in CUBIC_MONOMIALS]


def cubic_from_vector(v: Sequence[int], F: GF) -> MultiPoly:
    return MultiPoly(F, {e + (0, 0, 0): c for e, c in zip(CUBIC_MONOMIALS, v) if c})


# -- systems ------------------------------------------------------------------------


@dataclass
class CubicSystem:
    generators: tuple[MultiPoly, ...]

    def __post_init__(self) -> None:
        if len(self.generators) not in (2, 3):
            raise CubicSystemError("a pencil has 2 generators and a net 3")
        F = self.generators[0].F
        for g in self.generators:
            if g.F is not F:
                raise CubicSystemError("generators over different fields")
            if g.homogeneous_degree() != 3:
                raise CubicSystemError(f"{g.format()} is not a homogeneous cubic")
        if rank([coefficient_vector(g) for g in self.generators], F, 10) < len(self.generators):
            raise CubicSystemError("generators are linearly dependent")

    @classmethod
    def parse(cls, texts: Sequence[str], F: GF) -> "CubicSystem":
        return cls(tuple(parse_poly(t, F) for t in texts))

    @property
    def F(self) -> GF:
        return self.generators[0].F

    @property
    def characteristic(self) -> int:
        return self.F.p

    @property
    def is_pencil(self) -> bool:
        return len(self.generators) == 2


# -- base-point trees -----------------------------------------------------------------


@dataclass
class BasePointTree:
    """A base point with its weight and infinitely-near children.

    The root carries a projective point; a child carries the direction it
    represents on the exceptional line of its parent: an element c for the
    chart v = u*(v'+c), or None for the remaining direction u = 0.
    """

    field: GF
    weight: int
    point: tuple[int, int, int] | None = None
    direction: int | None = None
    children: list["BasePointTree"] = dc_field(default_factory=list)

    @property
    def multiplicity(self) -> int:
        """Sum of squared weights over the subtree (the local intersection number for a pencil)."""
        return self.weight**2 + sum(c.multiplicity for c in self.children)

    @property
    def point_count(self) -> int:
        return 1 + sum(c.point_count for c in self.children)

    def nodes(self) -> list["BasePointTree"]:
        out = [self]
        for c in self.children:
            out.extend(c.nodes())
        return out

    def depth(self) -> int:
        return 1 + max((c.depth() for c in self.children), default=0)

    def describe(self) -> str:
        head = format_point(self.point, self.field) if self.point is not None else self._dir()
        s = f"{head}x{self.point_count}"
        if any(n.weight != 1 for n in self.nodes()):
            s += "[w=" + ",".join(str(n.weight) for n in self.nodes()) + "]"
        return s

    def _dir(self) -> str:
        return "[1:" + self.field.format(self.direction) + "]" if self.direction is not None else "[0:1]"

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {}
        if self.point is not None:
            out["point"] = [self.field.format(c) for c in self.point]
        else:
            out["direction"] = (["1", self.field.format(self.direction)] if self.direction is not None
                                else ["0", "1"])
        out["mult"] = self.weight
        out["near"] = [c.to_json() for c in self.children]
        return out


def _grow(gens: list[Local], F: GF, depth: int) -> tuple[int, list[BasePointTree]]:
    if depth > MAX_TREE_DEPTH:
        raise UnresolvedBaseLocus("infinitely-near chain too long; the system may have a fixed component")
    live = [g for g in gens if g]
    w = min(local_order(g) for g in live)
    children: list[BasePointTree] = []
    # directions [1:c]
    g: list[int] = []
    for h in live:
        r = exceptional_restriction(blow_up(h, w, 0, F))
        if not r:
            continue
        u = [r.get(j, 0) for j in range(max(r) + 1)]
        g = ugcd(g, u, F) if g else u
    roots = uroots(g, F) if g else list(range(F.q))
    for c in roots:
        sub = [blow_up(h, w, c, F) for h in live]
        if all(not s.get((0, 0), 0) for s in sub):
            cw, cc = _grow(sub, F, depth + 1)
            children.append(BasePointTree(F, cw, None, c, cc))
    # direction [0:1]
    sub = [blow_up(h, w, None, F) for h in live]
    if all(not s.get((0, 0), 0) for s in sub):
        cw, cc = _grow(sub, F, depth + 1)
        children.append(BasePointTree(F, cw, None, None, cc))
    return w, children


def point_tree(gens: Sequence[MultiPoly], point: Sequence[int]) -> BasePointTree:
    F = gens[0].F
    w, children = _grow([local_expansion(g, point) for g in gens], F, 0)
    return BasePointTree(F, w, tuple(point), None, children)  # type: ignore[arg-type]


@dataclass
class BaseLocus:
    trees: list[BasePointTree]
    field: GF
    intersection_numbers: list[int]

    @property
    def total(self) -> int:
        return sum(t.multiplicity for t in self.trees)

    @property
    def point_count(self) -> int:
        return sum(t.point_count for t in self.trees)

    def multiset(self) -> list[tuple[tuple[int, int, int], int]]:
        return sorted((t.point, t.point_count) for t in self.trees)  # type: ignore[misc]


def _trees_over(gens: Sequence[MultiPoly], E: GF) -> list[BasePointTree]:
    gens = [g.embed(E) for g in gens]
    return [point_tree(gens, p) for p in common_zeros(gens, E)]


def pencil_base_locus(F_: MultiPoly, G_: MultiPoly, max_extension: int = MAX_EXTENSION) -> BaseLocus:
    """Base locus of a pencil over the smallest extension where the multiplicities reach 9.

    Each tree's multiplicity is certified against the Fulton intersection number.
    """
    F = F_.F
    shared = common_factor(F_, G_)
    if shared is not None:
        raise InfiniteMultiplicity(f"common component {shared.format()}")
    for e in range(1, max_extension + 1):
        E = field(F.p, F.n * e)
        f, g = F_.embed(E), G_.embed(E)
        pts = common_zeros([f, g], E)
        nums = [intersection_multiplicity(f, g, p) for p in pts]
        if sum(nums) < 9:
            continue
        if sum(nums) > 9:
            raise InfiniteMultiplicity("intersection numbers exceed Bezout; common component?")
        trees = [point_tree([f, g], p) for p in pts]
        for t, n in zip(trees, nums):
            if t.multiplicity != n:
                raise UnresolvedBaseLocus(
                    f"tree at {format_point(t.point, E)} has multiplicity {t.multiplicity}, "
                    f"intersection number {n}"
                )
        return BaseLocus(trees, E, nums)
    raise UnresolvedBaseLocus(f"base points not found over GF({F.p}^{F.n * max_extension})")


def _member_pairs(gens: Sequence[MultiPoly]):
    """Pairs of net members, over the base field and then its quadratic extension."""
    F = gens[0].F
    for E in (F, field(F.p, 2 * F.n)):
        gs = [g.embed(E) for g in gens]
        members = []
        for a, b, c in product(range(E.q), repeat=3):
            if (a, b, c) != (0, 0, 0) and normalize((a, b, c), E) == (a, b, c):
                members.append(gs[0].scale(a) + gs[1].scale(b) + gs[2].scale(c))
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                if common_factor(members[i], members[j]) is None:
                    yield members[i], members[j]


def base_locus(system: CubicSystem) -> BaseLocus:
    gens = list(system.generators)
    if system.is_pencil:
        return pencil_base_locus(gens[0], gens[1])
    # a net: its base points lie in the base locus of any member pencil
    last: Exception | None = None
    for a, b in _member_pairs(gens):
        try:
            pen = pencil_base_locus(a, b)
        except (InfiniteMultiplicity, UnresolvedBaseLocus) as exc:
            last = exc
            continue
        trees = _trees_over(gens, pen.field)
        return BaseLocus(trees, pen.field, [])
    raise UnresolvedBaseLocus(f"no member pencil without a common component ({last})")


# -- fibre types --------------------------------------------------------------------


@dataclass
class FiberType:
    kind: str
    factors: list[tuple[str, int]]
    field: GF
    singular_points: list[str]

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "factors": [[f, m] for f, m in self.factors],
            "field": repr(self.field),
            "singular_points": self.singular_points,
        }


def _points_on_line(L: MultiPoly) -> tuple[tuple[int, ...], tuple[int, ...]]:
    F = L.F
    coeffs = [L.coefficient(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    a, b = nullspace([coeffs], F, 3)
    return tuple(a), tuple(b)


def line_tangent_to_conic(L: MultiPoly, Q: MultiPoly) -> bool:
    F = L.F
    P1, P2 = _points_on_line(L)
    alpha = Q.at(P1)
    gamma = Q.at(P2)
    beta = F.sub(F.sub(Q.at(tuple(F.add(a, b) for a, b in zip(P1, P2))), alpha), gamma)
    return quadratic_discriminant(alpha, beta, gamma, F) == 0


def lines_concurrent(lines: Sequence[MultiPoly]) -> bool:
    F = lines[0].F
    rows = [[L.coefficient(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))] for L in lines]
    return rank(rows, F, 3) < 3


def fiber_type(f: MultiPoly) -> FiberType:
    if f.is_zero():
        raise ValueError("zero cubic")
    if f.homogeneous_degree() != 3:
        raise ValueError("expected a homogeneous cubic")
    E, facs = geometric_factors(f)
    shown = [(g.format(), m) for g, m in facs]
    sing = [format_point(p, E) for p in singular_points(f.embed(E), E)]
    degs = sorted(g.degree() for g, m in facs for _ in range(m))
    mults = sorted((m for _, m in facs), reverse=True)
    if degs == [1, 1, 1]:
        if mults[0] == 3:
            kind = TRIPLE_LINE
        elif mults[0] == 2:
            kind = DOUBLE_LINE
        else:
            kind = THREE_CONCURRENT if lines_concurrent([g for g, _ in facs]) else THREE_GENERAL
    elif degs == [1, 2]:
        L = next(g for g, _ in facs if g.degree() == 1)
        Q = next(g for g, _ in facs if g.degree() == 2)
        kind = LINE_TANGENT_CONIC if line_tangent_to_conic(L, Q) else LINE_CONIC
    else:
        pts = singular_points(f)
        if not pts:
            kind = SMOOTH
        else:
            cone = tangent_cone_type(f, pts[0])
            kind = CUSPIDAL if cone == "cusp" else NODAL
    return FiberType(kind, shown, E, sing)


# -- the generic fibre ----------------------------------------------------------------


@dataclass
class GenericFiber:
    field: GF
    fibers_checked: int
    singular_fibers: int
    generically_singular: bool
    moving_singularity: bool
    all_cuspidal: bool | None
    quasi_elliptic: bool
    singular_points: dict[str, list[str]]

    def to_json(self) -> dict[str, Any]:
        return {
            "field": repr(self.field),
            "fibers_checked": self.fibers_checked,
            "singular_fibers": self.singular_fibers,
            "generically_singular": self.generically_singular,
            "moving_singularity": self.moving_singularity,
            "all_singular_fibers_cuspidal": self.all_cuspidal,
            "quasi_elliptic": self.quasi_elliptic,
        }


def analysis_extension(F: GF) -> GF:
    """Smallest extension with more than the discriminant degree plus the fibres to spare (q^e >= 27)."""
    e = 1
    while F.q**e < 27:
        e += 1
    return field(F.p, F.n * e)


def generic_fiber_analysis(F_: MultiPoly, G_: MultiPoly, E: GF | None = None) -> GenericFiber:
    """Specialise F + tG at every t of the extension and at t = infinity.

    A pencil of cubics whose discriminant in t vanishes at more than 12
    values vanishes identically, so the general member is singular.
    """
    E = E or analysis_extension(F_.F)
    if E.q + 1 <= DISCRIMINANT_DEGREE:
        raise ValueError(f"{E!r} is too small to certify; use a larger extension")
    f, g = F_.embed(E), G_.embed(E)
    members = [("inf", g)] + [(E.format(t), f + g.scale(t)) for t in range(E.q)]
    sing: dict[str, list[tuple[int, int, int]]] = {}
    for name, h in members:
        pts = singular_points(h, E)
        if pts:
            sing[name] = pts
    generic = len(sing) > DISCRIMINANT_DEGREE
    # reducible fibres have extra singular points; only isolated ones can track the moving point
    isolated = {pts[0] for pts in sing.values() if len(pts) == 1}
    moving = generic and len(isolated) > 1
    all_cusp: bool | None = None
    if generic and not moving:
        all_cusp = all(fiber_type(h).kind == CUSPIDAL for name, h in members if name in sing)
    qe = generic and (moving or bool(all_cusp))
    return GenericFiber(
        E, len(members), len(sing), generic, moving, all_cusp, qe,
        {k: [format_point(p, E) for p in v] for k, v in sing.items()},
    )


# -- linear conditions on cubics ----------------------------------------------------


@dataclass
class Conditions:
    field: GF
    numeric: list[list[int]]
    symbolic: list[list[MultiPoly]]

    def as_poly_matrix(self) -> PolyMatrix:
        F = self.field
        rows = [[MultiPoly.const(F, c) for c in r] for r in self.numeric] + self.symbolic
        return PolyMatrix(F, rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.numeric) + len(self.symbolic), 10)


def _tree_rows(tree: BasePointTree, local: list[Local], out: list[list[int]]) -> None:
    w = tree.weight
    for i in range(w):
        for j in range(w - i):
            out.append([m.get((i, j), 0) for m in local])
    for child in tree.children:
        _tree_rows(child, [blow_up(m, w, child.direction, tree.field, strict=False) for m in local], out)


def point_rows(trees: Sequence[BasePointTree], E: GF) -> list[list[int]]:
    """Conditions for a cubic to have weight w at every node of the trees."""
    mons = monomials(E)
    rows: list[list[int]] = []
    for t in trees:
        if t.field is not E:
            raise ValueError("points over different fields")
        _tree_rows(t, [local_expansion(m, t.point) for m in mons], rows)
    return rows


def double_point_rows(E: GF) -> list[list[MultiPoly]]:
    """Value, d/dx and d/dy of each cubic monomial at the symbolic point (A, B, 1)."""
    A = MultiPoly.var(E, "A")
    B = MultiPoly.var(E, "B")
    x, y = MultiPoly.var(E, "x"), MultiPoly.var(E, "y")
    rows: list[list[MultiPoly]] = [[], [], []]
    for m in monomials(E):
        shifted = m.subs({"x": x + A, "y": y + B, "z": 1}).coefficients_in("xy")
        zero = MultiPoly(E, {})
        for r, key in enumerate(((0, 0), (1, 0), (0, 1))):
            rows[r].append(shifted.get(key, zero))
    return rows


def _common_field(trees: Sequence[BasePointTree], default: GF | None) -> GF:
    fields = {id(t.field): t.field for t in trees}
    if len(fields) > 1:
        raise ValueError("points over different fields")
    if fields:
        return next(iter(fields.values()))
    if default is None:
        raise ValueError("no points and no field given")
    return default


def conditions_matrix(trees: Sequence[BasePointTree], extra: bool = False, F: GF | None = None) -> Conditions:
    E = _common_field(trees, F)
    return Conditions(E, point_rows(trees, E), double_point_rows(E) if extra else [])


def linear_system_dim(trees: Sequence[BasePointTree], extra: bool = False, F: GF | None = None) -> int:
    """10 minus the rank of the conditions, over GF(q)(A, B) when the double point is present."""
    C = conditions_matrix(trees, extra, F)
    kernel = nullspace(C.numeric, C.field, 10)
    if not extra:
        return len(kernel)
    M = restricted_matrix(C.symbolic, kernel, C.field)
    return len(kernel) - poly_rank(M)[0]


def restricted_matrix(symbolic: list[list[MultiPoly]], basis: Sequence[Sequence[int]], E: GF) -> PolyMatrix:
    """The symbolic rows applied to each basis cubic: a 3 x k matrix over GF(q)[A, B]."""
    rows = []
    for srow in symbolic:
        row = []
        for v in basis:
            acc = MultiPoly(E, {})
            for p, c in zip(srow, v):
                if c and not p.is_zero():
                    acc = acc + p.scale(c)
            row.append(acc)
        rows.append(row)
    return PolyMatrix(E, rows)


# -- the unexpected-cubic test --------------------------------------------------------


@dataclass
class UnexpectedReport:
    h0_Z: int
    h0_Z_plus_2P: int
    expected: int
    is_unexpected: bool
    determinant: MultiPoly | None
    matrix: PolyMatrix
    witness_cubic: MultiPoly | None
    singularity_type: str
    notes: list[str]

    def to_json(self) -> dict[str, Any]:
        return {
            "h0_Z": self.h0_Z,
            "h0_Z_plus_2P": self.h0_Z_plus_2P,
            "expected": self.expected,
            "is_unexpected": self.is_unexpected,
            "determinant": self.determinant.format() if self.determinant is not None else None,
            "matrix": self.matrix.format(),
            "witness_cubic": self.witness_cubic.format() if self.witness_cubic is not None else None,
            "singularity_type": self.singularity_type,
            "notes": self.notes,
        }


def _shifted_parts(C: MultiPoly) -> dict[tuple[int, ...], MultiPoly]:
    E = C.F
    x, y = MultiPoly.var(E, "x"), MultiPoly.var(E, "y")
    A, B = MultiPoly.var(E, "A"), MultiPoly.var(E, "B")
    return C.subs({"x": x + A, "y": y + B, "z": 1}).coefficients_in("xy")


def classify_double_point(C: MultiPoly) -> str:
    """Singularity of C at (A, B, 1): cusp, node or other; raises if C is not singular there."""
    E = C.F
    parts = _shifted_parts(C)
    if any(not parts.get(k, MultiPoly(E, {})).is_zero() for k in ((0, 0), (1, 0), (0, 1))):
        raise ValueError("witness cubic is not singular at the general point")
    zero = MultiPoly(E, {})
    a, b, c = (parts.get(k, zero) for k in ((2, 0), (1, 1), (0, 2)))
    if a.is_zero() and b.is_zero() and c.is_zero():
        return "other"
    disc = b * b - (a * c).scale(E.from_int(4))
    return "cusp" if disc.is_zero() else "node"


def unexpected_test(
    trees: Sequence[BasePointTree],
    F: GF | None = None,
    basis: Sequence[MultiPoly] | None = None,
) -> UnexpectedReport:
    """Compare h0(I_{Z+2P}(3)) at a general point P = (A, B, 1) with its expected value.

    `basis` fixes the column order of the 3 x k matrix; it must be a basis of
    the cubics through Z.
    """
    C = conditions_matrix(trees, True, F)
    E = C.field
    notes = ["general point taken in the affine chart z = 1"]
    kernel = nullspace(C.numeric, E, 10)
    if basis is not None:
        vecs = [coefficient_vector(b.embed(E)) for b in basis]
        for b, v in zip(basis, vecs):
            if any(_dot(row, v, E) for row in C.numeric):
                raise ValueError(f"{b.format()} does not satisfy the point conditions")
        if len(vecs) != len(kernel) or rank(vecs, E, 10) != len(kernel):
            raise ValueError("given cubics are not a basis of the cubics through the points")
        kernel = vecs
    h0 = len(kernel)
    if h0 > 3:
        notes.append(f"degenerate point set: h0 = {h0} > 3")
    M = restricted_matrix(C.symbolic, kernel, E)
    r = poly_rank(M)[0]
    h2 = h0 - r
    expected = max(0, h0 - 3)
    determinant = det(M) if h0 == 3 else None
    witness = None
    sing = "none"
    if h2 > 0:
        v = poly_kernel_vector(M)
        assert v is not None
        witness = MultiPoly(E, {})
        for coeff, vec in zip(v, kernel):
            if not coeff.is_zero():
                witness = witness + coeff * cubic_from_vector(vec, E)
        sing = classify_double_point(witness)
    return UnexpectedReport(h0, h2, expected, h2 > expected, determinant, M, witness, sing, notes)


def _dot(row: Sequence[int], v: Sequence[int], E: GF) -> int:
    acc = 0
    for a, b in zip(row, v):
        acc = E.add(acc, E.mul(a, b))
    return acc


# -- point files ----------------------------------------------------------------------


def _parse_coord(value: Any, E: GF) -> int:
    return parse_element(str(value), E)


def _node_from_json(obj: dict[str, Any], E: GF, root: bool) -> BasePointTree:
    w = int(obj.get("mult", 1))
    if w < 1:
        raise ValueError("multiplicities must be positive")
    children = [_node_from_json(c, E, False) for c in obj.get("near", [])]
    if root:
        pt = [_parse_coord(c, E) for c in obj["point"]]
        if len(pt) != 3:
            raise ValueError("points need three coordinates")
        return BasePointTree(E, w, normalize(pt, E), None, children)
    a, b = (_parse_coord(c, E) for c in obj["direction"])
    if a == 0 and b == 0:
        raise ValueError("zero direction")
    d = None if a == 0 else E.div(b, a)
    return BasePointTree(E, w, None, d, children)


def load_points(data: Any, p: int | None = None) -> list[BasePointTree]:
    """Read a point list: entries {"point": [a, b, c], "mult": m, "near": [...]}.

    The list may be wrapped as {"characteristic": p, "extension": n, "points": [...]}.
    Children use {"direction": [a, b], "mult": m, "near": [...]}.
    """
    n = 1
    entries = data
    if isinstance(data, dict):
        p = int(data.get("characteristic", p or 0)) or p
        n = int(data.get("extension", 1))
        entries = data["points"]
    if p is None:
        raise ValueError("characteristic not given")
    if n == 1 and "phi" in repr(entries):
        n = 2
    E = field(p, n)
    return [_node_from_json(e, E, True) for e in entries]


def dump_points(trees: Sequence[BasePointTree]) -> dict[str, Any]:
    if not trees:
        return {"points": []}
    E = trees[0].field
    return {"characteristic": E.p, "extension": E.n, "points": [t.to_json() for t in trees]}


def simple_points(points: Sequence[Sequence[int]], E: GF) -> list[BasePointTree]:
    return [BasePointTree(E, 1, normalize(p, E)) for p in points]
