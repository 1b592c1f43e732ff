"""Finite fields F_q, q = p^e, with exact table-driven arithmetic.

Elements are stored as integers 0 <= value < q whose base-p digits are the
coordinates in the polynomial basis 1, x, ..., x^(e-1) of F_p[x]/(f), where
f is the lexicographically smallest monic irreducible of degree e.
Coordinate 0 (the coefficient of 1) is the most significant position for
the canonical ordering used by normal forms.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

MAX_ORDER = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    # coefficient lists, index = degree; f monic
    a = a[:]
    df = len(f) - 1
    for k in range(len(a) - 1, df - 1, -1):
        c = a[k] % p
        if c:
            for j in range(df + 1):
                a[k - df + j] = (a[k - df + j] - c * f[j]) % p
    return [c % p for c in a[:df]]


def _is_irreducible(f: list[int], p: int) -> bool:
    e = len(f) - 1
    if e == 1:
        return True
    for d in range(1, e // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]
            if not any(_poly_mod(f, g, p)):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the least monic irreducible of degree e."""
    if e == 1:
        return (0, 1)
    # lexicographic order on (c_{e-1}, ..., c_0) read as a base-p number
    for idx in range(p ** e):
        low = [(idx // p ** i) % p for i in range(e)]
        f = low + [1]
        if f[0] and _is_irreducible(f, p):
            return tuple(f)
    raise ValueError(f"no irreducible polynomial of degree {e} over F_{p}")


class GF:
    """The field F_{p^e}.  Use :func:`get_field` to obtain cached instances."""

    def __init__(self, p: int, e: int = 1):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        q = p ** e
        if q > MAX_ORDER:
            raise ValueError(f"field order {q} exceeds supported maximum {MAX_ORDER}")
        self.p = p
        self.e = e
        self.q = q
        self.modulus = smallest_irreducible(p, e)
        self._build_tables()
        self._trace_of_basis = tuple(self._trace_value(p ** i) for i in range(e))

    def __repr__(self):
        return f"GF({self.p}^{self.e})"

    def __reduce__(self):
        return (get_field, (self.p, self.e))

    # -- integer encoding -------------------------------------------------
    def to_coords(self, value: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.e):
            value, r = divmod(value, p)
            out.append(r)
        return tuple(out)

    def from_coords(self, coords) -> int:
        coords = list(coords)
        if len(coords) > self.e:
            if any(c % self.p for c in coords[self.e:]):
                raise ValueError(f"too many coordinates for {self!r}: {coords}")
            coords = coords[: self.e]
        v = 0
        for c in reversed(coords):
            v = v * self.p + (int(c) % self.p)
        return v

    def _build_tables(self):
        p, e, q = self.p, self.e, self.q
        f = list(self.modulus)

        def times(a: list[int], b: list[int]) -> list[int]:
            prod = [0] * (2 * e - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        prod[i + j] += x * y
            red = _poly_mod(prod, f, p)
            return red + [0] * (e - len(red))

        order = q - 1
        for g in range(1, q):
            gc = list(self.to_coords(g))
            exp, cur = [], [1] + [0] * (e - 1)
            while True:
                exp.append(self.from_coords(cur))
                cur = times(cur, gc)
                if self.from_coords(cur) == 1:
                    break
            if len(exp) == order:
                break
        self._exp = exp + exp
        self._log = [0] * q
        for k in range(order):
            self._log[exp[k]] = k
        self._add = None
        if p != 2 and q <= 256:
            self._add = [[self.from_coords(a + b for a, b in zip(self.to_coords(x), self.to_coords(y)))
                          for y in range(q)] for x in range(q)]
        self._neg = [self.from_coords(-c for c in self.to_coords(x)) for x in range(q)]

    def _trace_value(self, value: int) -> int:
        acc, x = 0, value
        for _ in range(self.e):
            acc = self.add(acc, x)
            x = self.pow(x, self.p)
        return self.to_coords(acc)[0]

    # -- raw arithmetic on encoded values --------------------------------
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add is not None:
            return self._add[a][b]
        return self.from_coords(x + y for x, y in zip(self.to_coords(a), self.to_coords(b)))

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in finite field")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def scalar(self, n: int) -> int:
        """Image of the integer n in the prime field."""
        return n % self.p

    # -- element constructors ---------------------------------------------
    def __call__(self, value=0) -> "FqElem":
        if isinstance(value, FqElem):
            if value.field is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (list, tuple)):
            return FqElem(self, self.from_coords(value))
        return FqElem(self, int(value) % self.p)

    def element(self, value: int) -> "FqElem":
        return FqElem(self, value)

    def zero(self) -> "FqElem":
        return FqElem(self, 0)

    def one(self) -> "FqElem":
        return FqElem(self, 1)

    def elements(self):
        """All elements, ordered by their coordinate tuples (coordinate 0 first)."""
        return sorted((FqElem(self, v) for v in range(self.q)), key=FqElem.sort_key)

    @property
    def trace_of_basis(self) -> tuple[int, ...]:
        return self._trace_of_basis


@lru_cache(maxsize=None)
def get_field(p: int, e: int = 1) -> GF:
    return GF(p, e)


class FqElem:
    """An element of a finite field; immutable."""

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FqElem is immutable")

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def e(self) -> int:
        return self.field.e

    @property
    def coords(self) -> tuple[int, ...]:
        return self.field.to_coords(self.value)

    def sort_key(self) -> tuple[int, ...]:
        return self.coords

    def _coerce(self, other) -> int:
        if isinstance(other, FqElem):
            if other.field is not self.field:
                raise ValueError("mixing elements of different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.sub(o, self.value))

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.mul(self.value, self.field.inv(o)))

    def __pow__(self, n: int):
        return FqElem(self.field, self.field.pow(self.value, n))

    def inverse(self) -> "FqElem":
        return FqElem(self.field, self.field.inv(self.value))

    def frobenius(self, times: int = 1) -> "FqElem":
        """x -> x^(p^times)."""
        f = self.field
        return FqElem(f, f.pow(self.value, f.p ** (times % f.e)))

    def pth_root(self) -> "FqElem":
        return self.frobenius(self.field.e - 1)

    def trace(self) -> int:
        """Absolute trace to F_p, as an integer in [0, p)."""
        f = self.field
        return sum(c * t for c, t in zip(self.coords, f.trace_of_basis)) % f.p

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p and self.value < self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.e, self.value))

    def __lt__(self, other: "FqElem"):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        if self.field.e == 1:
            return f"F{self.field.p}({self.value})"
        return f"F{self.field.q}({list(self.coords)})"


# -- Artin-Schreier theory over the residue field --------------------------

def _solve_mod_p(rows: list[list[int]], rhs: list[int], p: int):
    """One solution of rows * y = rhs over F_p, or None."""
    n = len(rows[0]) if rows else 0
    m = [r[:] + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                fac = m[i][c]
                m[i] = [(x - fac * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    if any(row[n] % p for row in m[r:]):
        return None
    y = [0] * n
    for i, c in enumerate(pivots):
        y[c] = m[i][n]
    return y


@lru_cache(maxsize=None)
def _as_matrix(field: GF) -> tuple[tuple[int, ...], ...]:
    # column j = coords of (x^j)^p - x^j
    cols = []
    for j in range(field.e):
        b = FqElem(field, field.p ** j)
        cols.append((b ** field.p - b).coords)
    return tuple(tuple(cols[j][i] for j in range(field.e)) for i in range(field.e))


@lru_cache(maxsize=None)
def _solve_cached(field: GF, value: int):
    rows = [list(r) for r in _as_matrix(field)]
    y = _solve_mod_p(rows, list(field.to_coords(value)), field.p)
    if y is None:
        return None
    y[0] = 0  # solutions differ by F_p = multiples of 1; pick coordinate 0 = 0
    return field.from_coords(y)


def fq_solve_artin_schreier(b: FqElem) -> FqElem | None:
    """Return the canonical y with y^p - y = b, or None when Tr(b) != 0.

    Solutions form a coset of F_p; the canonical one is the least in
    coordinate order, i.e. the one whose constant coordinate is 0.
    """
    v = _solve_cached(b.field, b.value)
    return None if v is None else FqElem(b.field, v)


def coker_representative(c: FqElem) -> FqElem:
    """Least element (coordinate order) of the coset c + (F - 1)F_q.

    The image of F - 1 is the kernel of the absolute trace, so the coset is
    determined by Tr(c); its least element is supported on the last basis
    vector of nonzero trace.
    """
    f = c.field
    t = c.trace()
    if t == 0:
        return f.zero()
    tb = f.trace_of_basis
    j = max(i for i, ti in enumerate(tb) if ti)
    coords = [0] * f.e
    coords[j] = (t * pow(tb[j], -1, f.p)) % f.p
    return FqElem(f, f.from_coords(coords))


def coker_constant_representatives(field: GF) -> list[FqElem]:
    """The p canonical representatives of coker(F - 1, F_q), ordered by trace."""
    reps = []
    tb = field.trace_of_basis
    j = max(i for i, ti in enumerate(tb) if ti)
    for t in range(field.p):
        coords = [0] * field.e
        coords[j] = (t * pow(tb[j], -1, field.p)) % field.p
        reps.append(FqElem(field, field.from_coords(coords)))
    return reps
