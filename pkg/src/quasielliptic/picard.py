"""The Picard lattice of the plane blown up in nine points.

A class is stored as (coeff_l; b_1..b_9) and stands for coeff_l*l - sum b_i e_i,
so effective curves written the usual way have mostly nonnegative entries.
The intersection form is diag(1, -1, ..., -1) in the basis (l, e_1..e_9).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

RANK = 10


@dataclass(frozen=True)
class DivisorClass:
    coeff_l: int
    coeff_e: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeff_e) != 9:
            raise ValueError(f"need 9 exceptional coefficients, got {len(self.coeff_e)}")
        if not all(isinstance(b, int) for b in (self.coeff_l, *self.coeff_e)):
            raise TypeError("coordinates must be integers")

    @classmethod
    def from_vector(cls, v: Sequence[int]) -> "DivisorClass":
        return cls(int(v[0]), tuple(int(b) for b in v[1:]))

    @classmethod
    def from_signed(cls, a: Sequence[int]) -> "DivisorClass":
        """Build a0*l + sum a_i e_i."""
        return cls(int(a[0]), tuple(-int(x) for x in a[1:]))

    def vector(self) -> tuple[int, ...]:
        return (self.coeff_l, *self.coeff_e)

    def signed(self) -> tuple[int, ...]:
        """Coordinates (a0; a1..a9) with the class equal to a0*l + sum a_i e_i."""
        return (self.coeff_l, *(-b for b in self.coeff_e))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(
            self.coeff_l + other.coeff_l,
            tuple(a + b for a, b in zip(self.coeff_e, other.coeff_e)),
        )

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.coeff_l, tuple(-b for b in self.coeff_e))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(k * self.coeff_l, tuple(k * b for b in self.coeff_e))

    def sort_key(self) -> tuple[int, ...]:
        return self.vector()

    def __str__(self) -> str:
        return format_label(self)


ZERO = DivisorClass(0, (0,) * 9)
L = DivisorClass(1, (0,) * 9)


def e(i: int) -> DivisorClass:
    if not 1 <= i <= 9:
        raise ValueError(f"exceptional index {i} outside 1..9")
    b = [0] * 9
    b[i - 1] = -1
    return DivisorClass(0, tuple(b))


def pair(D: DivisorClass, E: DivisorClass) -> int:
    return D.coeff_l * E.coeff_l - sum(a * b for a, b in zip(D.coeff_e, E.coeff_e))


def canonical_class() -> DivisorClass:
    return DivisorClass(-3, (-1,) * 9)


def gram_matrix() -> list[list[int]]:
    return [[(1 if i == 0 else -1) if i == j else 0 for j in range(RANK)] for i in range(RANK)]


class ClassKind(enum.Enum):
    MINUS_ONE = "MinusOneCurveCandidate"
    MINUS_TWO = "MinusTwoCurveCandidate"
    OTHER = "Other"


def classify(D: DivisorClass) -> ClassKind:
    K = canonical_class()
    sq, dk = pair(D, D), pair(D, K)
    if sq == -1 and dk == -1:
        return ClassKind.MINUS_ONE
    if sq == -2 and dk == 0:
        return ClassKind.MINUS_TWO
    return ClassKind.OTHER


# -- labels ----------------------------------------------------------------------


class LabelError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _normalize(text: str) -> str:
    return text.replace("ℓ", "l").replace("−", "-").strip()


def parse_label(text: str) -> DivisorClass:
    s = _normalize(text)
    if not s:
        raise LabelError("empty label", 0)
    if s == "0":
        return ZERO
    if s.startswith("-K"):
        return _parse_minus_k(s)
    head = 0
    coef = 1
    if s[0].isdigit() and len(s) > 1 and s[1] == "l":
        if s[0] in "01":
            raise LabelError(f"coefficient {s[0]!r} not allowed before 'l-' shorthand", 0)
        coef, head = int(s[0]), 1
    if s[head:head + 2] == "l-" and head + 2 < len(s) and "e" not in s[head + 2:]:
        return _parse_shorthand(s, head + 2, coef)
    return _parse_longform(s)


def _parse_shorthand(s: str, start: int, coef: int) -> DivisorClass:
    b = [0] * 9
    for pos in range(start, len(s)):
        ch = s[pos]
        if not ch.isdigit() or ch == "0":
            raise LabelError(f"expected an index 1..9, found {ch!r}", pos)
        i = int(ch)
        if b[i - 1]:
            raise LabelError(f"repeated index {i}", pos)
        b[i - 1] = 1
    return DivisorClass(coef, tuple(b))


def _read_index(s: str, pos: int) -> int:
    if pos >= len(s) or s[pos] != "e":
        raise LabelError("expected 'e'", pos)
    if pos + 1 >= len(s) or not s[pos + 1].isdigit() or s[pos + 1] == "0":
        raise LabelError("expected an index 1..9", pos + 1)
    return int(s[pos + 1])


def _parse_minus_k(s: str) -> DivisorClass:
    D = -canonical_class()
    pos = 2
    used: set[int] = set()
    for sign in ("-", "+"):
        if pos < len(s) and s[pos] == sign:
            i = _read_index(s, pos + 1)
            if i in used:
                raise LabelError(f"repeated index {i}", pos + 2)
            used.add(i)
            D = D - e(i) if sign == "-" else D + e(i)
            pos += 3
    if pos != len(s):
        raise LabelError(f"unexpected {s[pos]!r}", pos)
    return D


def _parse_longform(s: str) -> DivisorClass:
    pos = 0
    total = ZERO
    seen: set[str] = set()
    first = True
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            raise LabelError(f"expected '+' or '-', found {s[pos]!r}", pos)
        first = False
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        coef = int(s[start:pos]) if pos > start else 1
        if pos > start and coef == 0:
            raise LabelError("zero coefficient", start)
        if pos >= len(s):
            raise LabelError("expected 'l' or 'e'", pos)
        if s[pos] == "l":
            sym, basis, width = "l", L, 1
        elif s[pos] == "e":
            i = _read_index(s, pos)
            sym, basis, width = f"e{i}", e(i), 2
        else:
            raise LabelError(f"expected 'l' or 'e', found {s[pos]!r}", pos)
        if sym in seen:
            raise LabelError(f"repeated term {sym}", pos)
        seen.add(sym)
        total = total + (sign * coef) * basis
        pos += width
    return total


def _shorthand(D: DivisorClass) -> str | None:
    c = D.coeff_l
    if not 1 <= c <= 9 or any(b not in (0, 1) for b in D.coeff_e) or not any(D.coeff_e):
        return None
    idx = "".join(str(i + 1) for i, b in enumerate(D.coeff_e) if b)
    return ("" if c == 1 else str(c)) + "l-" + idx


def _single_e(D: DivisorClass) -> str | None:
    if D.coeff_l != 0:
        return None
    nz = [(i + 1, b) for i, b in enumerate(D.coeff_e) if b]
    if len(nz) == 1 and nz[0][1] == -1:
        return f"e{nz[0][0]}"
    return None


def _e_difference(D: DivisorClass) -> str | None:
    if D.coeff_l != 0:
        return None
    nz = [(i + 1, b) for i, b in enumerate(D.coeff_e) if b]
    if len(nz) == 2:
        (i, bi), (j, bj) = nz
        if bi == -1 and bj == 1:
            return f"e{i}-e{j}"
        if bi == 1 and bj == -1:
            return f"e{j}-e{i}"
    return None


def _minus_k(D: DivisorClass) -> str | None:
    R = D - (-canonical_class())  # = D + K, must be -e_i + e_j, -e_i, e_j or 0
    if R.coeff_l != 0:
        return None
    minus = [i + 1 for i, b in enumerate(R.coeff_e) if b == 1]
    plus = [i + 1 for i, b in enumerate(R.coeff_e) if b == -1]
    if len(minus) + len(plus) != sum(1 for b in R.coeff_e if b) or len(minus) > 1 or len(plus) > 1:
        return None
    return "-K" + "".join(f"-e{i}" for i in minus) + "".join(f"+e{j}" for j in plus)


def _longform(D: DivisorClass) -> str:
    parts: list[str] = []

    def term(c: int, sym: str) -> None:
        mag = "" if abs(c) == 1 else str(abs(c))
        if not parts:
            parts.append(("-" if c < 0 else "") + mag + sym)
        else:
            parts.append(("-" if c < 0 else "+") + mag + sym)

    if D.coeff_l:
        term(D.coeff_l, "l")
    for i, b in enumerate(D.coeff_e):
        if b:
            term(-b, f"e{i + 1}")
    return "".join(parts) if parts else "0"


def label_candidates(D: DivisorClass) -> list[str]:
    """All supported spellings of D, in tie-break order."""
    out = []
    for fn in (_shorthand, _single_e, _e_difference, _minus_k):
        s = fn(D)
        if s is not None:
            out.append(s)
    out.append(_longform(D))
    return out


def format_label(D: DivisorClass) -> str:
    cands = label_candidates(D)
    best = min(range(len(cands)), key=lambda k: (len(cands[k]), k))
    return cands[best]


def pretty(label: str) -> str:
    """Typeset an ASCII label with the script l and a true minus sign."""
    return label.replace("l", "ℓ").replace("-", "−")


def classes(labels: Iterable[str]) -> list[DivisorClass]:
    return [parse_label(s) for s in labels]
