"""Plane curves over finite fields: points, local expansions, intersection
numbers, singular points and factorisation of forms of degree <= 3."""

from __future__ import annotations

from itertools import product
from math import comb
from typing import Iterable, Sequence

from .fields import GF
from .poly import MultiPoly, exact_divide

Point = tuple[int, int, int]
# bivariate polynomial in local coordinates (u, v): {(i, j): coeff}
Local = dict[tuple[int, int], int]


class InfiniteMultiplicity(ArithmeticError):
    """The curves share a component through the point."""


class UnresolvedBaseLocus(RuntimeError):
    pass


# -- points -------------------------------------------------------------------------


def normalize(point: Sequence[int], F: GF) -> Point:
    """Scale so the last nonzero coordinate is 1."""
    for k in (2, 1, 0):
        if point[k]:
            inv = F.inv(point[k])
            return tuple(F.mul(c, inv) for c in point)  # type: ignore[return-value]
    raise ValueError("the zero vector is not a projective point")


def projective_points(F: GF) -> Iterable[Point]:
    for x, y in product(range(F.q), repeat=2):
        yield (x, y, 1)
    for x in range(F.q):
        yield (x, 1, 0)
    yield (1, 0, 0)


def format_point(point: Sequence[int], F: GF) -> str:
    return "(" + ",".join(F.format(c) for c in point) + ")"


# -- univariate helpers (coefficient lists, lowest degree first) ----------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _univariate(f: MultiPoly, x0: int, z0: int) -> list[int]:
    g = f.evaluate({"x": x0, "z": z0})
    out = [0] * (max((e[1] for e in g.terms), default=-1) + 1)
    for e, c in g.terms.items():
        out[e[1]] = c
    return _trim(out)


def ugcd(a: list[int], b: list[int], F: GF) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        # a mod b
        inv = F.inv(b[-1])
        while len(a) >= len(b):
            c = F.mul(a[-1], inv)
            shift = len(a) - len(b)
            for i, bc in enumerate(b):
                a[i + shift] = F.sub(a[i + shift], F.mul(c, bc))
            _trim(a)
            if not a:
                break
        a, b = b, a
    return a


def ueval(a: Sequence[int], t: int, F: GF) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, t), c)
    return acc


def uroots(a: Sequence[int], F: GF) -> list[int]:
    return [t for t in range(F.q) if ueval(a, t, F) == 0]


def common_zeros(polys: Sequence[MultiPoly], F: GF | None = None) -> list[Point]:
    """Points of P^2(F) where all the given forms vanish (F defaults to their field)."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        raise ValueError("no nonzero forms")
    F = F or polys[0].F
    polys = [p.embed(F) for p in polys]
    out: list[Point] = []
    for x0 in range(F.q):
        g: list[int] = []
        for p in polys:
            u = _univariate(p, x0, 1)
            g = ugcd(g, u, F) if g else u
        out.extend((x0, y, 1) for y in (range(F.q) if not g else uroots(g, F)))
    for x0 in range(F.q):
        if all(p.at((x0, 1, 0)) == 0 for p in polys):
            out.append((x0, 1, 0))
    if all(p.at((1, 0, 0)) == 0 for p in polys):
        out.append((1, 0, 0))
    return out


# -- local coordinates ----------------------------------------------------------------


def chart_of(point: Sequence[int]) -> int:
    """Index of the first nonzero coordinate; the chart sets it to 1."""
    return next(k for k in range(3) if point[k])


def local_expansion(f: MultiPoly, point: Sequence[int]) -> Local:
    """f in affine coordinates (u, v) centred at the point.

    The chart is the first nonzero coordinate of the point; u and v are the
    remaining coordinates, in order, minus the point's values.
    """
    F = f.F
    k = chart_of(point)
    inv = F.inv(point[k])
    p = [F.mul(c, inv) for c in point]
    names = "xyz"
    a, b = [i for i in range(3) if i != k]
    U = MultiPoly.var(F, "x") + MultiPoly.const(F, p[a])
    V = MultiPoly.var(F, "y") + MultiPoly.const(F, p[b])
    g = f.subs({names[k]: 1, names[a]: U, names[b]: V})
    return {(e[0], e[1]): c for e, c in g.terms.items()}


def local_order(f: Local) -> int:
    return min((i + j for i, j in f), default=-1)


def local_form(f: Local, d: int) -> Local:
    return {ij: c for ij, c in f.items() if sum(ij) == d}


def local_from_poly(f: MultiPoly) -> Local:
    return {(e[0], e[1]): c for e, c in f.terms.items()}


def _add_into(out: Local, key: tuple[int, int], c: int, F: GF) -> None:
    s = F.add(out.get(key, 0), c)
    if s:
        out[key] = s
    else:
        out.pop(key, None)


def blow_up(f: Local, w: int, direction: int | None, F: GF, strict: bool = True) -> Local:
    """Transform under the blow-up of the origin, divided by the w-th power of the exceptional equation.

    direction c gives the point (0, c) of the chart v = u*(v' + c), with new
    coordinates (u, v'); direction None gives the origin of the chart
    u = v*u', with new coordinates (v, u'). Terms of degree < w are dropped
    when strict is False; otherwise they must be absent.
    """
    out: Local = {}
    p = F.p
    for (i, j), c in f.items():
        d = i + j - w
        if d < 0:
            if strict:
                raise ValueError("transform is not divisible by the exceptional equation")
            continue
        if direction is None:
            _add_into(out, (d, i), c, F)
            continue
        # u^(i+j-w) (v' + c0)^j
        for k in range(j + 1):
            bc = comb(j, k) % p
            if not bc:
                continue
            coef = F.mul(c, F.mul(F.from_int(bc), F.pow(direction, j - k)))
            if coef:
                _add_into(out, (d, k), coef, F)
    return out


def exceptional_restriction(f: Local) -> dict[int, int]:
    """Restriction of a chart-1 transform to the exceptional line u = 0, as {power of v': coeff}."""
    return {j: c for (i, j), c in f.items() if i == 0}


# -- intersection multiplicity (Fulton) ---------------------------------------------


def _lead_x(f: Local) -> tuple[int, int] | None:
    """Degree and leading coefficient of f(x, 0)."""
    terms = [(i, c) for (i, j), c in f.items() if j == 0]
    if not terms:
        return None
    return max(terms)


def _x_order(f: Local) -> int:
    return min(i for (i, j) in f if j == 0)


def _combine(a: Local, ca: int, b: Local, cb: int, shift: int, F: GF) -> Local:
    """ca*a - cb*x^shift*b."""
    out = {k: F.mul(ca, c) for k, c in a.items() if F.mul(ca, c)}
    for (i, j), c in b.items():
        _add_into(out, (i + shift, j), F.neg(F.mul(cb, c)), F)
    return out


def local_intersection(f: Local, g: Local, F: GF, limit: int = 10000) -> int:
    """I_0(f, g) by Fulton's algorithm."""
    total = 0
    stack = [(f, g)]
    steps = 0
    while stack:
        a, b = stack.pop()
        steps += 1
        if steps > limit:
            raise InfiniteMultiplicity("intersection recursion did not terminate")
        if not a or not b:
            raise InfiniteMultiplicity("a curve is identically zero")
        if a.get((0, 0), 0) or b.get((0, 0), 0):
            continue
        la, lb = _lead_x(a), _lead_x(b)
        if la is None and lb is None:
            raise InfiniteMultiplicity("y = 0 is a common component")
        if la is None or lb is None:
            # one of them is y*h: I(y*h, g) = ord_x g(x, 0) + I(h, g)
            if la is None:
                a, b = b, a
            # now b(x, 0) == 0
            h = {(i, j - 1): c for (i, j), c in b.items()}
            total += _x_order(a)
            stack.append((a, h))
            continue
        (r, ca), (s, cb) = la, lb
        if r > s:
            a, b, r, s, ca, cb = b, a, s, r, cb, ca
        stack.append((a, _combine(b, ca, a, cb, s - r, F)))
    return total


def intersection_multiplicity(f: MultiPoly, g: MultiPoly, point: Sequence[int]) -> int:
    """Local intersection number of two plane curves at a projective point."""
    F = f.F
    if g.F is not F:
        raise ValueError("forms over different fields")
    return local_intersection(local_expansion(f, point), local_expansion(g, point), F)


# -- factorisation --------------------------------------------------------------------


def lines(F: GF) -> list[MultiPoly]:
    """All lines ax+by+cz over F, scaled so the first nonzero coefficient is 1."""
    x, y, z = (MultiPoly.var(F, v) for v in "xyz")
    out = []
    for b, c in product(range(F.q), repeat=2):
        out.append(x + y.scale(b) + z.scale(c))
    for c in range(F.q):
        out.append(y + z.scale(c))
    out.append(z)
    return out


def factor_form(f: MultiPoly) -> list[tuple[MultiPoly, int]]:
    """Factor a form of degree <= 3 into F-irreducible monic factors with multiplicities."""
    if f.is_zero():
        raise ValueError("cannot factor the zero form")
    deg = f.homogeneous_degree()
    if deg is None or deg > 3:
        raise ValueError("factor_form needs a form of degree at most 3")
    factors: dict[MultiPoly, int] = {}
    rest = f
    found = True
    while found and rest.degree() >= 1:
        found = False
        for L in lines(f.F):
            q = exact_divide(rest, L)
            if q is not None:
                factors[L] = factors.get(L, 0) + 1
                rest = q
                found = True
                break
    if rest.degree() >= 1:
        r = rest.monic()
        factors[r] = factors.get(r, 0) + 1
    return sorted(factors.items(), key=lambda fm: (fm[0].degree(), fm[0].format()))


def common_factor(f: MultiPoly, g: MultiPoly) -> MultiPoly | None:
    """A shared irreducible factor of two forms of degree <= 3, if any."""
    fs = {h for h, _ in factor_form(f)}
    for h, _ in factor_form(g):
        if h in fs:
            return h
    return None


def factor_cubic(f: MultiPoly) -> list[tuple[MultiPoly, int]]:
    if f.homogeneous_degree() != 3:
        raise ValueError("expected a homogeneous cubic")
    return factor_form(f)


def geometric_factors(f: MultiPoly) -> tuple[GF, list[tuple[MultiPoly, int]]]:
    """Factorisation over an extension large enough to split into absolutely irreducible factors."""
    from .fields import field

    F = f.F
    base = factor_form(f)
    degs = [g.degree() for g, _ in base]
    if 2 in degs:
        E = field(F.p, 2 * F.n)
    elif 3 in degs:
        E = field(F.p, 3 * F.n)
    else:
        return F, base
    return E, factor_form(f.embed(E))


def singular_points(f: MultiPoly, F: GF | None = None) -> list[Point]:
    return common_zeros([f, f.diff("x"), f.diff("y"), f.diff("z")], F)


def quadratic_discriminant(a: int, b: int, c: int, F: GF) -> int:
    return F.sub(F.mul(b, b), F.mul(F.from_int(4), F.mul(a, c)))


def tangent_cone_type(f: MultiPoly, point: Sequence[int]) -> str:
    """'cusp', 'node' or 'other' for a point of multiplicity 2; 'smooth' if multiplicity 1."""
    F = f.F
    loc = local_expansion(f, point)
    m = local_order(loc)
    if m <= 0:
        return "smooth" if m == 1 else "none"
    if m == 1:
        return "smooth"
    if m > 2:
        return "other"
    q = local_form(loc, 2)
    disc = quadratic_discriminant(q.get((2, 0), 0), q.get((1, 1), 0), q.get((0, 2), 0), F)
    return "cusp" if disc == 0 else "node"
