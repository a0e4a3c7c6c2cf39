"""Sparse multivariate polynomials over GF(p^n), a small parser, and
polynomial matrices with exact determinants."""

from __future__ import annotations

import re
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .fields import GF, FieldError

VARS = ("x", "y", "z", "A", "B", "t")
NVARS = len(VARS)
_INDEX = {v: i for i, v in enumerate(VARS)}

Exps = tuple[int, int, int, int, int, int]


def _grlex_key(e: Exps) -> tuple:
    return (sum(e), e)


def _unit(i: int, k: int = 1) -> Exps:
    e = [0] * NVARS
    e[i] = k
    return tuple(e)  # type: ignore[return-value]


ZERO_EXP: Exps = (0,) * NVARS  # type: ignore[assignment]


class MultiPoly:
    """Polynomial in x, y, z, A, B, t with coefficients in a finite field.

    Terms live in a dict from exponent tuples to nonzero int-encoded
    coefficients. Instances are treated as immutable.
    """

    __slots__ = ("F", "terms")

    def __init__(self, F: GF, terms: Mapping[Exps, int] | None = None):
        self.F = F
        self.terms: dict[Exps, int] = {e: c for e, c in (terms or {}).items() if c}

    # -- constructors --------------------------------------------------------

    @classmethod
    def const(cls, F: GF, c: int) -> "MultiPoly":
        return cls(F, {ZERO_EXP: c})

    @classmethod
    def var(cls, F: GF, name: str, power: int = 1) -> "MultiPoly":
        if name not in _INDEX:
            raise ValueError(f"unknown variable {name!r}")
        return cls(F, {_unit(_INDEX[name], power): 1})

    @classmethod
    def monomial(cls, F: GF, exps: Sequence[int], c: int = 1) -> "MultiPoly":
        e = tuple(exps) + (0,) * (NVARS - len(exps))
        return cls(F, {e: c})  # type: ignore[dict-item]

    # -- ring operations -----------------------------------------------------

    def _check(self, other: "MultiPoly") -> None:
        if other.F is not self.F:
            raise FieldError(f"polynomials over {self.F} and {other.F}")

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return MultiPoly.const(self.F, self.F.from_int(other))
        return NotImplemented

    def __add__(self, other) -> "MultiPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        add = self.F.add
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = add(out.get(e, 0), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(self.F, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        neg = self.F.neg
        return MultiPoly(self.F, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        F = self.F
        add, mul = F.add, F.mul
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = add(out.get(e, 0), mul(c1, c2))
        return MultiPoly(F, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "MultiPoly":
        if c == 0:
            return MultiPoly(self.F)
        mul = self.F.mul
        return MultiPoly(self.F, {e: mul(v, c) for e, v in self.terms.items()})

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.F, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(self.F, self.F.from_int(other))
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.F is other.F and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.F.q, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- structure -----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exps, int]]:
        return sorted(self.terms.items(), key=lambda ec: _grlex_key(ec[0]), reverse=True)

    def leading(self) -> tuple[Exps, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms.items(), key=lambda ec: _grlex_key(ec[0]))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = _INDEX[name]
        return max((e[i] for e in self.terms), default=-1)

    def homogeneous_degree(self, names: str = "xyz") -> int | None:
        """Common total degree in the given variables, or None if mixed."""
        idx = [_INDEX[v] for v in names]
        degs = {sum(e[i] for i in idx) for e in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None if degs else -1

    def variables(self) -> set[str]:
        return {VARS[i] for e in self.terms for i in range(NVARS) if e[i]}

    def monic(self) -> "MultiPoly":
        """Scale so the grlex-leading coefficient is 1."""
        if not self.terms:
            return self
        return self.scale(self.F.inv(self.leading()[1]))

    def coefficient(self, exps: Sequence[int]) -> int:
        e = tuple(exps) + (0,) * (NVARS - len(exps))
        return self.terms.get(e, 0)  # type: ignore[arg-type]

    def coefficients_in(self, names: str) -> dict[tuple[int, ...], "MultiPoly"]:
        """Group terms by exponents of `names`; values are polynomials in the rest."""
        idx = [_INDEX[v] for v in names]
        out: dict[tuple[int, ...], dict] = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in idx)
            rest = list(e)
            for i in idx:
                rest[i] = 0
            out.setdefault(key, {})[tuple(rest)] = c
        return {k: MultiPoly(self.F, v) for k, v in out.items()}

    def homogeneous_part(self, k: int, names: str = "xy") -> "MultiPoly":
        idx = [_INDEX[v] for v in names]
        return MultiPoly(self.F, {e: c for e, c in self.terms.items() if sum(e[i] for i in idx) == k})

    def order(self, names: str = "xy") -> int:
        """Lowest total degree in `names` among the terms (-1 for zero)."""
        idx = [_INDEX[v] for v in names]
        return min((sum(e[i] for i in idx) for e in self.terms), default=-1)

    # -- calculus ------------------------------------------------------------

    def diff(self, name: str) -> "MultiPoly":
        i = _INDEX[name]
        F = self.F
        out: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            if k == 0:
                continue
            coef = F.mul(c, F.from_int(k))
            if coef:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = coef
        return MultiPoly(F, out)

    def subs(self, mapping: Mapping[str, "MultiPoly | int"]) -> "MultiPoly":
        """Simultaneously substitute polynomials (or field ints) for variables."""
        F = self.F
        idx = {}
        for name, val in mapping.items():
            if isinstance(val, int):
                val = MultiPoly.const(F, val)
            self._check(val)
            idx[_INDEX[name]] = val
        powers: dict[tuple[int, int], MultiPoly] = {}

        def power(i: int, k: int) -> MultiPoly:
            key = (i, k)
            if key not in powers:
                powers[key] = idx[i] ** k
            return powers[key]

        acc: dict = {}
        for e, c in self.terms.items():
            rest = list(e)
            factors = []
            for i, val in idx.items():
                if e[i]:
                    factors.append(power(i, e[i]))
                    rest[i] = 0
            term = MultiPoly(F, {tuple(rest): c})
            for f in factors:
                term = term * f
            for te, tc in term.terms.items():
                acc[te] = F.add(acc.get(te, 0), tc)
        return MultiPoly(F, acc)

    def evaluate(self, values: Mapping[str, int]) -> "MultiPoly":
        """Substitute field constants; returns a polynomial in the remaining variables."""
        F = self.F
        idx = [(_INDEX[k], v) for k, v in values.items()]
        acc: dict = {}
        for e, c in self.terms.items():
            val = c
            rest = list(e)
            for i, v in idx:
                if e[i]:
                    val = F.mul(val, F.pow(v, e[i]))
                    rest[i] = 0
            if val:
                key = tuple(rest)
                acc[key] = F.add(acc.get(key, 0), val)
        return MultiPoly(F, acc)

    def at(self, point: Sequence[int], names: str = "xyz") -> int:
        """Value at a point whose coordinates fill `names`; all variables must be covered."""
        if len(point) != len(names):
            raise ValueError(f"expected {len(names)} coordinates, got {len(point)}")
        v = self.evaluate(dict(zip(names, point)))
        if v.variables():
            raise ValueError(f"variables {sorted(v.variables())} left unevaluated")
        return v.terms.get(ZERO_EXP, 0)

    def dehomogenize(self, name: str = "z") -> "MultiPoly":
        return self.evaluate({name: 1})

    def shift(self, shifts: Mapping[str, "MultiPoly | int"]) -> "MultiPoly":
        """Substitute v -> v + shift[v]."""
        F = self.F
        mapping = {}
        for name, s in shifts.items():
            if isinstance(s, int):
                s = MultiPoly.const(F, s)
            mapping[name] = MultiPoly.var(F, name) + s
        return self.subs(mapping)

    def map_coefficients(self, table: Sequence[int], target: GF) -> "MultiPoly":
        """Push coefficients through a field embedding table."""
        return MultiPoly(target, {e: table[c] for e, c in self.terms.items()})

    def embed(self, target: GF) -> "MultiPoly":
        if target is self.F:
            return self
        return self.map_coefficients(target.embedding(self.F), target)

    # -- formatting ----------------------------------------------------------

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "".join(
                VARS[i] + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            cs = self.F.format(c)
            if not mono:
                parts.append(cs if "+" not in cs else f"({cs})")
            elif c == 1:
                parts.append(mono)
            elif "+" in cs:
                parts.append(f"({cs}){mono}")
            else:
                parts.append(f"{cs}{mono}")
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self.format()!r} over {self.F})"

    __str__ = format


def exact_divide(f: MultiPoly, g: MultiPoly) -> MultiPoly | None:
    """Return f/g if g divides f exactly, else None (grlex long division)."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    F = f.F
    ge, gc = g.leading()
    ginv = F.inv(gc)
    rem = dict(f.terms)
    quot: dict = {}
    while rem:
        re_, rc = max(rem.items(), key=lambda ec: _grlex_key(ec[0]))
        diff = tuple(a - b for a, b in zip(re_, ge))
        if min(diff) < 0:
            return None
        qc = F.mul(rc, ginv)
        quot[diff] = qc
        for e, c in g.terms.items():
            key = tuple(a + b for a, b in zip(e, diff))
            v = F.sub(rem.get(key, 0), F.mul(qc, c))
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return MultiPoly(F, quot)


# -- parser ------------------------------------------------------------------


class PolyParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|(phi)|([xyzABtg])|(\^)|(\+)|(-|−)|(\()|(\)))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolyParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        kinds = ("int", "phi", "name", "^", "+", "-", "(", ")")
        tokens.append((kinds[m.lastindex - 1], m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, F: GF):
        self.tokens = _tokenize(text)
        self.i = 0
        self.F = F
        self.phi: int | None = None
        if F.p == 2 and F.n % 2 == 0:
            from .fields import field

            self.phi = F.embedding(field(2, 2))[2]

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self) -> MultiPoly:
        F = self.F
        kind, _, _ = self.peek()
        sign = 1
        if kind in ("+", "-"):
            self.take()
            sign = -1 if kind == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek()[0] in ("+", "-"):
            kind, _, _ = self.take()
            t = self.term()
            acc = acc + t if kind == "+" else acc - t
        return acc if acc is not None else MultiPoly(F)

    def term(self) -> MultiPoly:
        kind, _, pos = self.peek()
        if kind not in ("int", "phi", "name", "("):
            raise PolyParseError(f"expected a factor, found {self.peek()[1] or 'end of input'!r}", pos)
        acc = self.factor()
        while self.peek()[0] in ("int", "phi", "name", "("):
            acc = acc * self.factor()
        return acc

    def factor(self) -> MultiPoly:
        F = self.F
        kind, val, pos = self.take()
        if kind == "int":
            base = MultiPoly.const(F, F.from_int(int(val)))
        elif kind == "phi":
            if self.phi is None:
                raise PolyParseError(f"coefficient 'phi' is not in {F}", pos)
            base = MultiPoly.const(F, self.phi)
        elif kind == "name" and val == "g":
            if F.n == 1:
                raise PolyParseError(f"coefficient 'g' is not in {F}", pos)
            base = MultiPoly.const(F, F.gen)
        elif kind == "name":
            base = MultiPoly.var(F, val)
        elif kind == "(":
            base = self.expr()
            k2, v2, p2 = self.take()
            if k2 != ")":
                raise PolyParseError(f"expected ')', found {v2 or 'end of input'!r}", p2)
        else:
            raise PolyParseError(f"unexpected token {val!r}", pos)
        if self.peek()[0] == "^":
            self.take()
            k2, v2, p2 = self.take()
            if k2 != "int":
                raise PolyParseError("expected an exponent", p2)
            base = base ** int(v2)
        return base


def parse_poly(text: str, F: GF) -> MultiPoly:
    """Parse a polynomial; juxtaposition is multiplication, '^' takes an int."""
    parser = _Parser(text, F)
    if parser.peek()[0] == "end":
        raise PolyParseError("empty expression", 0)
    result = parser.expr()
    kind, val, pos = parser.peek()
    if kind != "end":
        raise PolyParseError(f"unexpected token {val!r}", pos)
    return result


def parse_element(text: str, F: GF) -> int:
    """Parse a field constant written in the polynomial grammar."""
    p = parse_poly(text, F)
    if p.variables():
        raise PolyParseError(f"{text!r} is not a constant", 0)
    return p.terms.get(ZERO_EXP, 0)


# -- polynomial matrices -------------------------------------------------------


class PolyMatrix:
    """Rectangular grid of polynomials over one field."""

    def __init__(self, F: GF, rows: Iterable[Iterable[MultiPoly]]):
        self.F = F
        self.rows = [list(r) for r in rows]
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged polynomial matrix")
        for r in self.rows:
            for p in r:
                if p.F is not F:
                    raise FieldError("matrix entries over different fields")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij: tuple[int, int]) -> MultiPoly:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.F is other.F and self.rows == other.rows

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(self.F, [[self.rows[i][j] for j in cols] for i in rows])

    def format(self) -> list[list[str]]:
        return [[p.format() for p in r] for r in self.rows]


def det(M: PolyMatrix) -> MultiPoly:
    """Determinant by Laplace expansion along rows, memoized on column subsets."""
    n, m = M.shape
    if n != m:
        raise ValueError(f"determinant of a non-square {n}x{m} matrix")
    F = M.F
    if n == 0:
        return MultiPoly.const(F, 1)
    memo: dict[tuple[int, ...], MultiPoly] = {}

    def minor(row: int, cols: tuple[int, ...]) -> MultiPoly:
        if row == n:
            return MultiPoly.const(F, 1)
        if cols in memo:
            return memo[cols]
        acc = MultiPoly(F)
        for k, c in enumerate(cols):
            entry = M.rows[row][c]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:k] + cols[k + 1 :])
            term = entry * sub
            acc = acc - term if k % 2 else acc + term
        memo[cols] = acc
        return acc

    return minor(0, tuple(range(n)))


def det_by_permutations(M: PolyMatrix) -> MultiPoly:
    """Leibniz expansion; slow reference used as a test oracle."""
    n, m = M.shape
    if n != m:
        raise ValueError("non-square")
    F = M.F
    acc = MultiPoly(F)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = MultiPoly.const(F, 1)
        for i, j in enumerate(perm):
            term = term * M.rows[i][j]
        acc = acc - term if inversions % 2 else acc + term
    return acc
