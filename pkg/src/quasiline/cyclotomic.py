"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored as the unique representative of degree < phi(N) modulo
the N-th cyclotomic polynomial, with integer numerators over one positive
common denominator.  No floating point is used anywhere.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "CycNum",
    "CyclotomicField",
    "field",
    "root_of_unity",
    "mult_order",
    "q_binom",
    "cyclotomic_polynomial",
    "lift",
]


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, den monic; coefficients low degree first
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


_PHI_CACHE: dict[int, tuple[int, ...]] = {}
_PHI_LOCK = threading.RLock()


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Computed as (X^n - 1) divided by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError("conductor must be positive")
    cached = _PHI_CACHE.get(n)
    if cached is not None:
        return cached
    with _PHI_LOCK:
        cached = _PHI_CACHE.get(n)
        if cached is not None:
            return cached
        poly = [-1] + [0] * (n - 1) + [1]
        for d in range(1, n):
            if n % d == 0:
                poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
        result = tuple(poly)
        _PHI_CACHE[n] = result
        return result


class CyclotomicField:
    """Q(zeta_N) with precomputed reduction data.  Use :func:`field` to obtain one."""

    def __init__(self, conductor: int):
        self.conductor = conductor
        self.phi_poly = cyclotomic_polynomial(conductor)
        self.degree = len(self.phi_poly) - 1
        # X^degree = -sum(low[j] X^j)
        self._low = [(j, c) for j, c in enumerate(self.phi_poly[:-1]) if c]
        self._zero = CycNum._make(self, (0,) * self.degree, 1)
        self._one = CycNum._make(self, (1,) + (0,) * (self.degree - 1), 1)
        self._roots: dict[int, CycNum] = {}
        self._inv_cache: dict[CycNum, CycNum] = {}

    def __repr__(self) -> str:
        return f"CyclotomicField({self.conductor})"

    def __reduce__(self):
        return (field, (self.conductor,))

    @property
    def zero(self) -> CycNum:
        return self._zero

    @property
    def one(self) -> CycNum:
        return self._one

    def _reduce(self, coeffs: list[int]) -> list[int]:
        deg = self.degree
        low = self._low
        for k in range(len(coeffs) - 1, deg - 1, -1):
            t = coeffs[k]
            if t:
                base = k - deg
                for j, c in low:
                    coeffs[base + j] -= t * c
        del coeffs[deg:]
        return coeffs

    def from_poly(self, coeffs: Sequence, denom: int = 1) -> CycNum:
        """Element represented by sum coeffs[k] X^k (any length, rational entries allowed)."""
        fr = [Fraction(c) for c in coeffs]
        if denom != 1:
            fr = [c / denom for c in fr]
        common = 1
        for c in fr:
            common = common * c.denominator // gcd(common, c.denominator)
        ints = [int(c * common) for c in fr]
        if len(ints) < self.degree:
            ints += [0] * (self.degree - len(ints))
        ints = self._reduce(ints)
        return CycNum._normalized(self, ints, common)

    def __call__(self, value) -> CycNum:
        if isinstance(value, CycNum):
            if value.field is self:
                return value
            return lift(value, self.conductor)
        if isinstance(value, (int, Fraction)):
            v = Fraction(value)
            return CycNum._normalized(self, [v.numerator] + [0] * (self.degree - 1), v.denominator)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    def root(self, k: int) -> CycNum:
        """zeta_N ** k."""
        k %= self.conductor
        r = self._roots.get(k)
        if r is None:
            coeffs = [0] * max(k + 1, self.degree)
            coeffs[k] = 1
            r = CycNum._normalized(self, self._reduce(coeffs), 1)
            self._roots[k] = r
        return r

    def roots_of_unity(self, order: int) -> list[CycNum]:
        """All elements x with x**order == 1 (order must divide the conductor)."""
        if self.conductor % order:
            raise ValueError(f"order {order} does not divide conductor {self.conductor}")
        step = self.conductor // order
        return [self.root(step * k) for k in range(order)]


_FIELDS: dict[int, CyclotomicField] = {}
_FIELD_LOCK = threading.Lock()


def field(conductor: int) -> CyclotomicField:
    """The (cached, shared) field Q(zeta_conductor)."""
    f = _FIELDS.get(conductor)
    if f is None:
        with _FIELD_LOCK:
            f = _FIELDS.get(conductor)
            if f is None:
                f = CyclotomicField(conductor)
                _FIELDS[conductor] = f
    return f


class CycNum:
    """An element of Q(zeta_N); immutable and hashable."""

    __slots__ = ("field", "coeffs", "denom", "_hash")

    field: CyclotomicField
    coeffs: tuple[int, ...]
    denom: int

    def __init__(self, conductor: int, coeffs: Iterable = (0,)):
        F = field(conductor)
        other = F.from_poly(list(coeffs))
        object.__setattr__(self, "field", F)
        object.__setattr__(self, "coeffs", other.coeffs)
        object.__setattr__(self, "denom", other.denom)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _make(cls, F: CyclotomicField, coeffs: tuple, denom: int) -> CycNum:
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", F)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "denom", denom)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def _normalized(cls, F: CyclotomicField, coeffs: list[int], denom: int) -> CycNum:
        if denom != 1:
            g = denom
            for c in coeffs:
                if c:
                    g = gcd(g, c)
                    if g == 1:
                        break
            if g != 1:
                coeffs = [c // g for c in coeffs]
                denom //= g
            if not any(coeffs):
                denom = 1
        return cls._make(F, tuple(coeffs), denom)

    def __setattr__(self, name, value):
        raise AttributeError("CycNum is immutable")

    def __reduce__(self):
        return (_rebuild, (self.field.conductor, self.coeffs, self.denom))

    # -- inspection -------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self.field.conductor

    def rational_coeffs(self) -> list[Fraction]:
        return [Fraction(c, self.denom) for c in self.coeffs]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.denom == 1 and self.coeffs == self.field._one.coeffs

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, CycNum):
            if other.field is not self.field:
                return _common(self, other)[0] == _common(self, other)[1]
            return self.denom == other.denom and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.field.conductor, self.coeffs, self.denom))
            object.__setattr__(self, "_hash", h)
        return h

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> CycNum:
        if isinstance(other, CycNum):
            if other.field is self.field:
                return other
            raise _Mixed(other)
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        raise TypeError(f"unsupported operand {type(other).__name__}")

    def __add__(self, other) -> CycNum:
        try:
            o = self._coerce(other)
        except _Mixed:
            a, b = _common(self, other)
            return a + b
        except TypeError:
            return NotImplemented
        if self.denom == o.denom:
            d = self.denom
            c = [x + y for x, y in zip(self.coeffs, o.coeffs)]
        else:
            d = self.denom * o.denom
            c = [x * o.denom + y * self.denom for x, y in zip(self.coeffs, o.coeffs)]
        return CycNum._normalized(self.field, c, d)

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum._make(self.field, tuple(-x for x in self.coeffs), self.denom)

    def __sub__(self, other) -> CycNum:
        try:
            o = self._coerce(other)
        except _Mixed:
            a, b = _common(self, other)
            return a - b
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> CycNum:
        return (-self) + other

    def __mul__(self, other) -> CycNum:
        try:
            o = self._coerce(other)
        except _Mixed:
            a, b = _common(self, other)
            return a * b
        except TypeError:
            return NotImplemented
        F = self.field
        a = self.coeffs
        b = o.coeffs
        deg = F.degree
        if deg == 1:
            return CycNum._normalized(F, [a[0] * b[0]], self.denom * o.denom)
        prod = [0] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycNum._normalized(F, F._reduce(prod), self.denom * o.denom)

    __rmul__ = __mul__

    def inv(self) -> CycNum:
        """Multiplicative inverse via the extended Euclidean algorithm modulo Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        F = self.field
        cached = F._inv_cache.get(self)
        if cached is not None:
            return cached
        a = [Fraction(c, self.denom) for c in self.coeffs]
        s = _poly_inverse_mod(a, [Fraction(c) for c in F.phi_poly])
        result = F.from_poly(s)
        if len(F._inv_cache) < 100000:
            F._inv_cache[self] = result
        return result

    def __truediv__(self, other) -> CycNum:
        try:
            o = self._coerce(other)
        except _Mixed:
            a, b = _common(self, other)
            return a / b
        except TypeError:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other) -> CycNum:
        return self.inv() * other

    def __pow__(self, e: int) -> CycNum:
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inv() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- display / serialization -----------------------------------------

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [_frac_str(c) for c in self.rational_coeffs()]}

    @classmethod
    def from_json(cls, obj: dict) -> CycNum:
        F = field(int(obj["conductor"]))
        return F.from_poly([Fraction(s) for s in obj["coeffs"]])

    def __repr__(self) -> str:
        return f"CycNum({self.conductor}, {[_frac_str(c) for c in self.rational_coeffs()]})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.rational_coeffs()):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(str(c) + ("*" + mono if mono else ""))
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


class _Mixed(Exception):
    pass


def _rebuild(conductor: int, coeffs: tuple, denom: int) -> CycNum:
    return CycNum._make(field(conductor), tuple(coeffs), denom)


def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_poly_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
        a.pop()
    return q, a


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_inverse_mod(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    # s with s*a == 1 mod m; m irreducible so gcd is a nonzero constant
    r0, r1 = _poly_trim(list(m)), _poly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, _poly_trim(r)
        s0, s1 = s1, _poly_trim(_poly_sub(s0, _poly_mul(q, s1)))
    if not r1:
        raise ZeroDivisionError("element not invertible")
    c = r1[0]
    return [x / c for x in s1]


def _common(a: CycNum, b: CycNum) -> tuple[CycNum, CycNum]:
    n, m = a.conductor, b.conductor
    lcm = n * m // gcd(n, m)
    return lift(a, lcm), lift(b, lcm)


def lift(x: CycNum, conductor: int) -> CycNum:
    """Embed x from Q(zeta_N) into Q(zeta_M) with N | M, sending zeta_N to zeta_M^(M/N)."""
    n = x.conductor
    if conductor % n:
        raise ValueError(f"cannot embed Q(zeta_{n}) into Q(zeta_{conductor})")
    if conductor == n:
        return x
    F = field(conductor)
    step = conductor // n
    coeffs = [0] * max(step * (len(x.coeffs) - 1) + 1, F.degree)
    for k, c in enumerate(x.coeffs):
        coeffs[k * step] = c
    # X^M - 1 reduction first keeps the list short for large steps
    return CycNum._normalized(F, F._reduce(coeffs), x.denom)


def root_of_unity(conductor: int, k: int) -> CycNum:
    """zeta_N ** k in Q(zeta_N)."""
    if conductor < 1:
        raise ValueError("conductor must be positive")
    return field(conductor).root(k)


def mult_order(x: CycNum) -> int | None:
    """Least t >= 1 with x**t == 1, or None when x is not a root of unity."""
    if x.is_zero():
        raise ValueError("zero has no multiplicative order")
    one = x.field.one
    # every root of unity in Q(zeta_N) has order dividing lcm(N, 2) <= 2N
    bound = 2 * x.conductor
    y = x
    for t in range(1, bound + 1):
        if y == one:
            return t
        y = y * x
    return None


def q_binom(n: int, i: int, q: CycNum) -> CycNum:
    """Gaussian binomial [n choose i]_q via the q-Pascal rule."""
    if n < 0 or i < 0:
        raise ValueError("q_binom needs nonnegative arguments")
    if i > n:
        raise ValueError(f"q_binom({n}, {i}): i exceeds n")
    one = q.field.one
    zero = q.field.zero
    qpow = [one]
    for _ in range(i):
        qpow.append(qpow[-1] * q)
    # row[k] = [m choose k]_q for the current m
    row = [one] + [zero] * i
    for m in range(1, n + 1):
        for k in range(min(m, i), 0, -1):
            row[k] = row[k - 1] + qpow[k] * row[k]
    return row[i]
