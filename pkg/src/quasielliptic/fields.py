"""Finite fields GF(p^n) for small p, with elements encoded as plain ints.

An element of GF(p^n) is stored as the integer sum(c_i * p**i), where
c_0 + c_1 t + ... + c_{n-1} t^{n-1} is its residue modulo the field's fixed
modulus. Prime fields use ordinary residues. Multiplication goes through
log/antilog tables and addition in odd characteristic through Zech logs.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

# Fixed moduli, lowest coefficient first.  Each one is primitive, which the
# test suite re-checks.
FIXED_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),  # t^2+t+1
    (2, 3): (1, 1, 0, 1),  # t^3+t+1
    (2, 4): (1, 1, 0, 0, 1),  # t^4+t+1
    (2, 6): (1, 1, 0, 0, 0, 0, 1),  # t^6+t+1
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),  # t^8+t^4+t^3+t^2+1
    (3, 2): (2, 2, 1),  # t^2-t-1
    (3, 3): (1, 2, 0, 1),  # t^3-t+1
    (3, 4): (2, 0, 0, 2, 1),  # t^4-t^3-1
}


class FieldError(ArithmeticError):
    pass


def _digits(a: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        a, r = divmod(a, p)
        out.append(r)
    return out


def _undigits(ds: list[int], p: int) -> int:
    a = 0
    for d in reversed(ds):
        a = a * p + d
    return a


def _times_t(a: int, p: int, n: int, modulus: tuple[int, ...]) -> int:
    ds = [0] + _digits(a, p, n)
    top = ds.pop()
    if top:
        for i in range(n):
            ds[i] = (ds[i] - top * modulus[i]) % p
    return _undigits(ds, p)


def _is_primitive(p: int, n: int, modulus: tuple[int, ...]) -> bool:
    q = p**n
    a, k = 1, 0
    while True:
        a = _times_t(a, p, n, modulus)
        k += 1
        if a == 1:
            return k == q - 1
        if a == 0 or k >= q:
            return False


def _search_modulus(p: int, n: int) -> tuple[int, ...]:
    # First primitive monic polynomial in lexicographic order of coefficients.
    for code in range(p**n):
        low = tuple(_digits(code, p, n))
        if low[0] == 0:
            continue
        modulus = low + (1,)
        if _is_primitive(p, n, modulus):
            return modulus
    raise FieldError(f"no primitive modulus for GF({p}^{n})")


class GF:
    """The finite field with p**n elements."""

    def __init__(self, p: int, n: int = 1):
        if p not in (2, 3, 5, 7) or n < 1:
            raise FieldError(f"unsupported field GF({p}^{n})")
        self.p = p
        self.n = n
        self.q = p**n
        self.zero = 0
        self.one = 1
        if n == 1:
            self.modulus = (0, 1)
            self.gen = self._prime_generator()
        else:
            self.modulus = FIXED_MODULI.get((p, n)) or _search_modulus(p, n)
            self.gen = p  # the residue class of t
        self._build_tables()

    def _prime_generator(self) -> int:
        for g in range(2, self.p):
            if len({pow(g, k, self.p) for k in range(self.p - 1)}) == self.p - 1:
                return g
        return 1

    def _build_tables(self) -> None:
        q = self.q
        exp = [0] * (2 * (q - 1))
        log = [-1] * q
        a = 1
        for k in range(q - 1):
            exp[k] = a
            if log[a] != -1:
                raise FieldError(f"modulus {self.modulus} of GF({self.p}^{self.n}) is not primitive")
            log[a] = k
            if self.n == 1:
                a = (a * self.gen) % self.p
            else:
                a = _times_t(a, self.p, self.n, self.modulus)
        if a != 1:
            raise FieldError("generator order mismatch")
        for k in range(q - 1, 2 * (q - 1)):
            exp[k] = exp[k - q + 1]
        self._exp = exp
        self._log = log
        self._zech: list[int] | None = None
        if self.p != 2 and self.n > 1:
            # zech[k] = log(1 + g^k), or -1 when 1 + g^k = 0
            zech = [-1] * (q - 1)
            p = self.p
            for k in range(q - 1):
                b = exp[k]
                s = b - b % p + (b % p + 1) % p
                zech[k] = log[s] if s else -1
            self._zech = zech

    # -- basic arithmetic on int encodings ---------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.n == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % (self.q - 1)]
        if z < 0:
            return 0
        return self._exp[la + z]

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        if self.n == 1:
            return self.p - a
        return self._exp[self._log[a] + (self.q - 1) // 2]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.n == 1:
            return (a * b) % self.p
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero in finite field")
        if self.n == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        if a == 0:
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def log(self, a: int) -> int:
        if a == 0:
            raise FieldError("log of zero")
        return self._log[a]

    def exp(self, k: int) -> int:
        return self._exp[k % (self.q - 1)]

    def from_int(self, k: int) -> int:
        return k % self.p

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def sqrt(self, a: int) -> int | None:
        """A square root of a, or None if a is not a square."""
        if a == 0:
            return 0
        la = self._log[a]
        if self.p == 2:
            half = la if la % 2 == 0 else la + self.q - 1
            return self._exp[(half // 2) % (self.q - 1)]
        if la % 2:
            return None
        return self._exp[la // 2]

    # -- formatting --------------------------------------------------------

    @property
    def gen_name(self) -> str:
        return "phi" if (self.p, self.n) == (2, 2) else "g"

    def format(self, a: int) -> str:
        if self.n == 1:
            return str(a)
        ds = _digits(a, self.p, self.n)
        name = self.gen_name
        parts = []
        for i in range(self.n - 1, -1, -1):
            c = ds[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
                continue
            mono = name if i == 1 else f"{name}^{i}"
            parts.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.n == 1 else f"GF({self.p}^{self.n})"

    def __reduce__(self):
        return (field, (self.p, self.n))

    # -- subfields and embeddings -------------------------------------------

    def contains(self, other: "GF") -> bool:
        return other.p == self.p and self.n % other.n == 0

    def embedding(self, sub: "GF") -> list[int]:
        """Table mapping each element of `sub` to its image in this field."""
        return _embedding_table(sub.p, sub.n, self.n)

    def element(self, a: int) -> "FieldElement":
        return FieldElement(self, a)


def field(p: int, n: int = 1) -> GF:
    """Return the cached field GF(p^n)."""
    # normalise first so field(3) and field(3, 1) share one instance
    return _field(int(p), int(n))


@lru_cache(maxsize=None)
def _field(p: int, n: int) -> GF:
    return GF(p, n)


def field_of_order(q: int) -> GF:
    for p in (2, 3, 5, 7):
        n, r = 0, q
        while r % p == 0:
            r //= p
            n += 1
        if r == 1 and n:
            return field(p, n)
    raise FieldError(f"no supported field of order {q}")


@lru_cache(maxsize=None)
def _embedding_table(p: int, k: int, n: int) -> list[int]:
    if n % k:
        raise FieldError(f"GF({p}^{k}) is not a subfield of GF({p}^{n})")
    small, big = field(p, k), field(p, n)
    if k == 1:
        return list(range(p))
    if k == n:
        return list(range(big.q))
    # image of the generator: the smallest root of the small modulus inside
    # the unique subfield of order p^k
    step = (big.q - 1) // (small.q - 1)
    roots = []
    for j in range(small.q - 1):
        r = big.exp(j * step)
        acc = 0
        for c in reversed(small.modulus):
            acc = big.add(big.mul(acc, r), c)
        if acc == 0:
            roots.append(r)
    if not roots:
        raise FieldError("embedding root not found")
    r = min(roots)
    table = []
    for a in range(small.q):
        ds = _digits(a, p, k)
        acc = 0
        for c in reversed(ds):
            acc = big.add(big.mul(acc, r), c)
        table.append(acc)
    return table


class FieldElement:
    """Value wrapper around an int encoding, for interactive use."""

    __slots__ = ("F", "v")

    def __init__(self, F: GF, v: int):
        self.F = F
        self.v = v

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.F is not self.F:
                raise FieldError("elements of different fields")
            return other.v
        if isinstance(other, int):
            return self.F.from_int(other)
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.F, self.F.add(self.v, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.F, self.F.sub(self.v, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.F, self.F.sub(self._coerce(other), self.v))

    def __neg__(self):
        return FieldElement(self.F, self.F.neg(self.v))

    def __mul__(self, other):
        return FieldElement(self.F, self.F.mul(self.v, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.F, self.F.div(self.v, self._coerce(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.F, self.F.div(self._coerce(other), self.v))

    def __pow__(self, k: int):
        return FieldElement(self.F, self.F.pow(self.v, k))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.F is other.F and self.v == other.v
        if isinstance(other, int):
            return self.v == self.F.from_int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.F.q, self.v))

    def __bool__(self) -> bool:
        return self.v != 0

    def frobenius(self) -> "FieldElement":
        return FieldElement(self.F, self.F.frobenius(self.v))

    def __repr__(self) -> str:
        return self.F.format(self.v)
