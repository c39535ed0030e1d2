"""Exact arithmetic in finite fields GF(p^m) at desk scale.

Elements are stored as integers in [0, q): for m = 1 the residue itself, for
m > 1 the base-p packing of the residue polynomial (digit i is the
coefficient of x^i).  All operations are pure and a FieldSpec is immutable,
so field objects can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatchError, FieldTooLargeError, NonPrimeError

MAX_CARDINALITY = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- polynomials over F_p used only for modulus search/validation ------------
# Coefficient tuples in ascending degree.

def _poly_mul_p(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_mod_p(num, den, p):
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            f = c * inv_lead % p
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - f * den[j]) % p
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num


def _is_irreducible(coeffs, p: int) -> bool:
    """Brute-force test: no monic factor of degree 1..deg/2 divides coeffs."""
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] != 1:
        return False
    for d in range(1, m // 2 + 1):
        for t in range(p ** d):
            div = _digits(t, p, d) + (1,)
            rem = _poly_mod_p(coeffs, div, p)
            if len(rem) == 1 and rem[0] == 0:
                return False
    return True


def _digits(rep: int, p: int, m: int) -> tuple:
    out = []
    for _ in range(m):
        rep, r = divmod(rep, p)
        out.append(r)
    return tuple(out)


def _pack(digits, p: int) -> int:
    rep = 0
    for d in reversed(digits):
        rep = rep * p + d
    return rep


def smallest_irreducible(p: int, m: int) -> tuple:
    """Monic irreducible of degree m over F_p with smallest packed lower part."""
    for t in range(p ** m):
        cand = _digits(t, p, m) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    """A finite field GF(p^m) with a fixed monic irreducible modulus.

    The modulus tuple lists coefficients in ascending degree and is present
    iff m > 1; it defaults to the canonical (smallest packed) irreducible so
    that independent runs agree bit for bit.
    """

    p: int
    m: int = 1
    modulus: tuple = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise NonPrimeError(f"{self.p} is not prime")
        if self.m < 1:
            raise ValueError("extension degree must be >= 1")
        if self.p ** self.m > MAX_CARDINALITY:
            raise FieldTooLargeError(f"{self.p}^{self.m} exceeds 2^20")
        if self.m == 1:
            if self.modulus is not None:
                raise ValueError("prime fields carry no modulus")
        else:
            if self.modulus is None:
                object.__setattr__(self, "modulus", smallest_irreducible(self.p, self.m))
            else:
                mod = tuple(int(c) % self.p for c in self.modulus)
                if len(mod) != self.m + 1 or mod[-1] != 1:
                    raise ValueError("modulus must be monic of degree m")
                if not _is_irreducible(mod, self.p):
                    raise ValueError("modulus is reducible")
                object.__setattr__(self, "modulus", mod)

    @property
    def q(self) -> int:
        return self.p ** self.m

    # -- element operations on integer reps ----------------------------------

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"rep {a} outside [0, {self.q})")
        return a

    def from_int(self, n: int) -> int:
        """Embed an integer constant via the prime subfield (n mod p)."""
        return n % self.p

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        return _pack([(x + y) % p for x, y in zip(_digits(a, p, self.m), _digits(b, p, self.m))], p)

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        p = self.p
        return _pack([(x - y) % p for x, y in zip(_digits(a, p, self.m), _digits(b, p, self.m))], p)

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        return _pack([(-x) % p for x in _digits(a, p, self.m)], p)

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        p, m = self.p, self.m
        prod = _poly_mul_p(_digits(a, p, m), _digits(b, p, m), p)
        red = _poly_mod_p(prod, self.modulus, p)
        return _pack(red + [0] * (m - len(red)), p)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow_(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow_(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow_(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def elements(self):
        return range(self.q)

    def element(self, rep: int) -> "FqElement":
        return FqElement(self.check(rep), self)


def make_field(p: int, m: int = 1) -> FieldSpec:
    """Construct GF(p^m) with the canonical modulus (errors on bad input)."""
    return FieldSpec(p, m)


def field_from_order(q: int) -> FieldSpec:
    """Factor q = p^m and build the field; q must be a prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            r = q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1:
                raise NonPrimeError(f"{q} is not a prime power")
            return make_field(p, m)
    raise NonPrimeError(f"{q} is not a prime power")


@dataclass(frozen=True)
class FqElement:
    """A field element: integer rep plus its field, with operator support."""

    rep: int
    field: FieldSpec

    def _coerce(self, other) -> int:
        if isinstance(other, FqElement):
            if other.field != self.field:
                raise FieldMismatchError("elements from different fields")
            return other.rep
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        return FqElement(self.field.add(self.rep, b), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return FqElement(self.field.sub(self.rep, b), self.field)

    def __rsub__(self, other):
        b = self._coerce(other)
        return FqElement(self.field.sub(b, self.rep), self.field)

    def __mul__(self, other):
        b = self._coerce(other)
        return FqElement(self.field.mul(self.rep, b), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        return FqElement(self.field.div(self.rep, b), self.field)

    def __neg__(self):
        return FqElement(self.field.neg(self.rep), self.field)

    def __pow__(self, e: int):
        return FqElement(self.field.pow_(self.rep, e), self.field)

    def __bool__(self):
        return self.rep != 0


_OPS = {"add", "sub", "mul", "neg", "inv", "pow"}


def arith(field: FieldSpec, op: str, a: FqElement, b=None) -> FqElement:
    """Single-entry arithmetic dispatch over reps wrapped as FqElements."""
    if op not in _OPS:
        raise ValueError(f"unknown op {op!r}")
    if a.field != field:
        raise FieldMismatchError("first operand not in the given field")
    if op == "neg":
        return FqElement(field.neg(a.rep), field)
    if op == "inv":
        return FqElement(field.inv(a.rep), field)
    if op == "pow":
        if not isinstance(b, int):
            raise ValueError("pow takes an integer exponent")
        return FqElement(field.pow_(a.rep, b), field)
    if not isinstance(b, FqElement) or b.field != field:
        raise FieldMismatchError("second operand not in the given field")
    fn = {"add": field.add, "sub": field.sub, "mul": field.mul}[op]
    return FqElement(fn(a.rep, b.rep), field)
