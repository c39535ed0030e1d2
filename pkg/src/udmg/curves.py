"""Genus-0 and genus-1 machinery over finite fields.

Covers short Weierstrass curves s^2 = r^3 + a r + b (characteristic outside
{2, 3}), exhaustive rational-point enumeration, exact function-field
arithmetic in the canonical form (A(r) + s B(r)) / C(r), local power-series
expansions, Riemann-Roch bases for divisors of the shape n*O + (h),
increasing zero bases, and the evaluation-code matrix construction together
with its genus-0 (projective line) counterpart.

Local uniformizers are fixed once and for all so that independent runs agree:
t = r - x(P) at an affine point with s(P) != 0, t = s at an affine point with
s(P) = 0, and t = r/s at the point at infinity O.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .core import Udmg, _verify_fast
from .errors import (
    BadCharacteristicError,
    DependentBasisError,
    DuplicatePointsError,
    HasseWeilViolationError,
    InvalidInputError,
    PointInSupportError,
    PoleAtSupportError,
    PrecisionExhaustedError,
    SingularCurveError,
    SupportCollisionError,
    TooFewSectionsError,
    TooManyPointsError,
    UnsupportedDivisorError,
)
from .fields import FieldSpec
from .linalg import FqMatrix, inverse
from .polys import Poly


class _Infinity:
    """Point at infinity marker, shared by curves and the projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "O"


INFINITY = _Infinity()


@dataclass(frozen=True)
class WeierstrassCurve:
    """Nonsingular short Weierstrass curve s^2 = r^3 + a r + b (genus 1)."""

    field: FieldSpec
    a: int
    b: int

    def __post_init__(self):
        if self.field.p in (2, 3):
            raise BadCharacteristicError("short Weierstrass form needs characteristic > 3")
        f = self.field
        f.check(self.a)
        f.check(self.b)
        four_a3 = f.mul(f.from_int(4), f.pow_(self.a, 3))
        disc = f.mul(f.neg(f.from_int(16)),
                     f.add(four_a3, f.mul(f.from_int(27), f.mul(self.b, self.b))))
        if disc == 0:
            raise SingularCurveError("discriminant vanishes")

    def rhs(self, x: int) -> int:
        f = self.field
        return f.add(f.add(f.pow_(x, 3), f.mul(self.a, x)), self.b)

    def contains(self, P) -> bool:
        if P is INFINITY:
            return True
        x, y = P
        return self.field.mul(y, y) == self.rhs(x)

    def relation_poly(self) -> Poly:
        """r^3 + a r + b, used to reduce s^2."""
        return Poly.make(self.field, (self.b, self.a, 0, 1))


def curve_new(field: FieldSpec, a: int, b: int) -> WeierstrassCurve:
    return WeierstrassCurve(field, a, b)


def enumerate_points(curve: WeierstrassCurve):
    """All rational points: O first, affine points in (x, y) lexicographic order.

    The count is checked against the Hasse-Weil-Serre interval for genus 1; a
    violation means the arithmetic itself is broken.
    """
    f = curve.field
    pts = [INFINITY]
    for x in f.elements():
        rhs = curve.rhs(x)
        for y in f.elements():
            if f.mul(y, y) == rhs:
                pts.append((x, y))
    q = f.q
    slack = math.isqrt(4 * q)
    lo, hi = q + 1 - slack, q + 1 + slack
    if not lo <= len(pts) <= hi:
        raise HasseWeilViolationError(f"{len(pts)} points outside [{lo}, {hi}]")
    return pts


# -- function field elements ---------------------------------------------------

@dataclass(frozen=True)
class FnElement:
    """Element of the function field in canonical form (A + s*B)/C.

    C is monic and gcd(gcd(A, B), C) = 1; the zero element is (0 + s*0)/1.
    Equality of canonical forms is structural equality.
    """

    curve: WeierstrassCurve
    A: Poly
    B: Poly
    C: Poly

    def __post_init__(self):
        if self.C.is_zero:
            raise ZeroDivisionError("denominator is zero")
        A, B, C = self.A, self.B, self.C
        if A.is_zero and B.is_zero:
            C = Poly.const(self.curve.field, 1)
        else:
            g = A.gcd(B).gcd(C)
            if g.degree > 0:
                A, B, C = A // g, B // g, C // g
            if C.leading != 1:
                u = self.curve.field.inv(C.leading)
                A, B, C = A.scale(u), B.scale(u), C.scale(u)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "C", C)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, curve) -> "FnElement":
        z = Poly.zero(curve.field)
        return cls(curve, z, z, Poly.const(curve.field, 1))

    @classmethod
    def const(cls, curve, c: int) -> "FnElement":
        z = Poly.zero(curve.field)
        return cls(curve, Poly.const(curve.field, c), z, Poly.const(curve.field, 1))

    @classmethod
    def from_poly(cls, curve, poly: Poly) -> "FnElement":
        z = Poly.zero(curve.field)
        return cls(curve, poly, z, Poly.const(curve.field, 1))

    @classmethod
    def r(cls, curve) -> "FnElement":
        return cls.from_poly(curve, Poly.x(curve.field))

    @classmethod
    def s(cls, curve) -> "FnElement":
        z = Poly.zero(curve.field)
        return cls(curve, z, Poly.const(curve.field, 1), Poly.const(curve.field, 1))

    # -- predicates and helpers ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.A.is_zero and self.B.is_zero

    def _coerce(self, other) -> "FnElement":
        if isinstance(other, FnElement):
            if other.curve != self.curve:
                raise InvalidInputError("elements of different function fields")
            return other
        if isinstance(other, int):
            return FnElement.const(self.curve, self.curve.field.from_int(other))
        return NotImplemented

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        A = self.A * o.C + o.A * self.C
        B = self.B * o.C + o.B * self.C
        return FnElement(self.curve, A, B, self.C * o.C)

    __radd__ = __add__

    def __neg__(self):
        return FnElement(self.curve, -self.A, -self.B, self.C)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        F = self.curve.relation_poly()
        A = self.A * o.A + F * (self.B * o.B)
        B = self.A * o.B + o.A * self.B
        return FnElement(self.curve, A, B, self.C * o.C)

    __rmul__ = __mul__

    def inv(self) -> "FnElement":
        if self.is_zero:
            raise ZeroDivisionError("inverse of the zero function")
        F = self.curve.relation_poly()
        norm = self.A * self.A - F * (self.B * self.B)
        return FnElement(self.curve, self.C * self.A, -(self.C * self.B), norm)

    def __truediv__(self, other):
        return self * self._coerce(other).inv()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        out = FnElement.const(self.curve, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __str__(self):
        num_a = self.A.render("r")
        if self.B.is_zero:
            num = num_a
        else:
            num = f"{num_a} + s*({self.B.render('r')})" if not self.A.is_zero \
                else f"s*({self.B.render('r')})"
        if self.C.degree == 0 and self.C.leading == 1:
            return num
        return f"({num})/({self.C.render('r')})"


def ff_arith(curve: WeierstrassCurve, op: str, f: FnElement, g: FnElement = None) -> FnElement:
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    if op == "neg":
        return -f
    raise ValueError(f"unknown op {op!r}")


# -- truncated Laurent series --------------------------------------------------

class Series:
    """sum(coef[i] * t^(val+i)) + O(t^(val+len(coef))); empty coef means zero
    to precision O(t^val)."""

    __slots__ = ("field", "val", "coef")

    def __init__(self, field, val, coef):
        i = 0
        n = len(coef)
        while i < n and coef[i] == 0:
            i += 1
        self.field = field
        self.val = val + i
        self.coef = list(coef[i:])

    @property
    def abs_prec(self):
        return self.val + len(self.coef)

    @property
    def is_zero_to_prec(self):
        return not self.coef

    def add(self, other):
        hi = min(self.abs_prec, other.abs_prec)
        lo = min(self.val, other.val)
        if lo >= hi:
            return Series(self.field, hi, [])
        out = [0] * (hi - lo)
        f = self.field
        for i, c in enumerate(self.coef):
            k = self.val + i - lo
            if 0 <= k < len(out):
                out[k] = c
        for i, c in enumerate(other.coef):
            k = other.val + i - lo
            if 0 <= k < len(out):
                out[k] = f.add(out[k], c)
        return Series(f, lo, out)

    def neg(self):
        f = self.field
        return Series(f, self.val, [f.neg(c) for c in self.coef])

    def scale(self, c):
        f = self.field
        if c == 0:
            return Series(f, self.abs_prec, [])
        return Series(f, self.val, [f.mul(c, x) for x in self.coef])

    def mul(self, other):
        f = self.field
        if self.is_zero_to_prec or other.is_zero_to_prec:
            bound = min(self.val + other.abs_prec, other.val + self.abs_prec)
            return Series(f, bound, [])
        n = min(len(self.coef), len(other.coef))
        out = [0] * n
        for i, a in enumerate(self.coef[:n]):
            if a:
                for j, b in enumerate(other.coef[:n - i]):
                    if b:
                        out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Series(f, self.val + other.val, out)

    def inv(self):
        if self.is_zero_to_prec:
            raise PrecisionExhaustedError("cannot invert a series that is zero to precision")
        f = self.field
        n = len(self.coef)
        a0_inv = f.inv(self.coef[0])
        out = [a0_inv] + [0] * (n - 1)
        for k in range(1, n):
            acc = 0
            for j in range(1, k + 1):
                aj = self.coef[j] if j < n else 0
                if aj and out[k - j]:
                    acc = f.add(acc, f.mul(aj, out[k - j]))
            out[k] = f.neg(f.mul(a0_inv, acc))
        return Series(f, -self.val, out)

    def eq_to_prec(self, other):
        return self.val == other.val and self.coef == other.coef

    def poly_eval(self, poly: Poly, const_len: int):
        """Horner evaluation of an exact polynomial at this series."""
        f = self.field
        acc = Series(f, const_len, [])
        for c in reversed(poly.coeffs):
            acc = acc.mul(self)
            acc = acc.add(Series(f, 0, [c] + [0] * (const_len - 1)))
        return acc


@lru_cache(maxsize=None)
def _expand_coordinates(curve: WeierstrassCurve, P, length: int):
    """Series for (r, s) in the fixed uniformizer at P, to relative length."""
    f = curve.field
    if P is INFINITY:
        # z = r/s, w = 1/s solve w = z^3 + a z w^2 + b w^3.
        z = Series(f, 1, [1] + [0] * (length - 1))
        z3 = z.mul(z).mul(z)
        w = Series(f, 3, [1] + [0] * (length - 1))
        for _ in range(length + 4):
            w2 = w.mul(w)
            nxt = z3.add(z.mul(w2).scale(curve.a)).add(w2.mul(w).scale(curve.b))
            if nxt.eq_to_prec(w):
                break
            w = nxt
        s = w.inv()
        r = z.mul(s)
        return r, s
    x0, y0 = P
    if y0 != 0:
        # t = r - x0; solve s(t) coefficient by coefficient from s^2 = f(r).
        rhs = [curve.rhs(x0),
               f.add(f.mul(3, f.mul(x0, x0)), curve.a),
               f.mul(3, x0),
               1]
        s_coef = [y0] + [0] * (length - 1)
        inv2y = f.inv(f.mul(2, y0))
        for n in range(1, length):
            acc = rhs[n] if n < 4 else 0
            for i in range(1, n):
                if s_coef[i] and s_coef[n - i]:
                    acc = f.sub(acc, f.mul(s_coef[i], s_coef[n - i]))
            s_coef[n] = f.mul(acc, inv2y)
        r = Series(f, 0, [x0, 1] + [0] * (length - 2))
        s = Series(f, 0, s_coef)
        return r, s
    # Two-torsion point: t = s; solve r(t) from t^2 = f(r), pivot f'(x0) != 0.
    pivot = f.add(f.mul(3, f.mul(x0, x0)), curve.a)
    inv_pivot = f.inv(pivot)
    r_coef = [x0] + [0] * (length - 1)
    sq = [f.mul(x0, x0)] + [0] * (length - 1)  # square of the known prefix
    for n in range(1, length):
        cube_n = 0
        for i in range(n + 1):
            if sq[i] and r_coef[n - i]:
                cube_n = f.add(cube_n, f.mul(sq[i], r_coef[n - i]))
        target = 1 if n == 2 else 0
        known = f.add(cube_n, f.mul(curve.a, r_coef[n]))  # r_coef[n] is still 0
        r_coef[n] = f.mul(f.sub(target, known), inv_pivot)
        rn = r_coef[n]
        if rn:
            for m in range(n, length):
                j = m - n
                if j < n and r_coef[j]:
                    sq[m] = f.add(sq[m], f.mul(2, f.mul(rn, r_coef[j])))
            if 2 * n < length:
                sq[2 * n] = f.add(sq[2 * n], f.mul(rn, rn))
    r = Series(f, 0, r_coef)
    s = Series(f, 1, [1] + [0] * (length - 1))
    return r, s


@dataclass(frozen=True)
class LocalExpansion:
    """f = t^valuation * (coeffs[0] + coeffs[1] t + ...) + O(t^(valuation+prec))."""

    valuation: int
    coeffs: tuple

    @property
    def prec(self) -> int:
        return len(self.coeffs)


def local_expand(curve: WeierstrassCurve, fn: FnElement, P, prec: int) -> LocalExpansion:
    """Expand fn at P to relative precision prec in the fixed uniformizer.

    Raises PrecisionExhausted when fn vanishes to order >= the working
    precision, including the case fn = 0 exactly.
    """
    if prec < 1:
        raise ValueError("prec must be >= 1")
    if fn.is_zero:
        raise PrecisionExhaustedError("the zero function has no finite order")
    maxd = max(fn.A.degree, fn.B.degree, fn.C.degree, 1)
    length = prec + 4 * maxd + 12
    for _ in range(3):  # regrow if cancellations ate into the target window
        r, s = _expand_coordinates(curve, P, length)
        num = r.poly_eval(fn.A, length).add(s.mul(r.poly_eval(fn.B, length)))
        den = r.poly_eval(fn.C, length)
        if den.is_zero_to_prec:
            raise PrecisionExhaustedError("denominator vanishes to working precision")
        out = num.mul(den.inv())
        if not out.is_zero_to_prec and len(out.coef) >= prec:
            return LocalExpansion(out.val, tuple(out.coef[:prec]))
        length *= 2
    if out.is_zero_to_prec:
        raise PrecisionExhaustedError(
            f"function vanishes at {P!r} to order >= {out.abs_prec}")
    return LocalExpansion(out.val, tuple(out.coef[:prec]))


def function_valuation(curve: WeierstrassCurve, fn: FnElement, P, prec: int = 8) -> int:
    """Order of fn at P, growing the precision up to 8x before giving up."""
    attempt = prec
    while True:
        try:
            return local_expand(curve, fn, P, attempt).valuation
        except PrecisionExhaustedError:
            if fn.is_zero or attempt >= 8 * prec:
                raise
            attempt *= 2


def evaluate(curve: WeierstrassCurve, fn: FnElement, P) -> int:
    """Finite value of fn at P; PoleAtSupport if fn has a pole there."""
    f = curve.field
    if fn.is_zero:
        return 0
    if P is not INFINITY:
        x0, y0 = P
        c = fn.C(x0)
        if c != 0:
            num = f.add(fn.A(x0), f.mul(y0, fn.B(x0)))
            return f.mul(num, f.inv(c))
    try:
        v = function_valuation(curve, fn, P, prec=4)
    except PrecisionExhaustedError:
        return 0  # vanishing certified to an order far beyond any pole bound
    if v < 0:
        raise PoleAtSupportError(f"pole of order {-v} at {P!r}")
    if v > 0:
        return 0
    return local_expand(curve, fn, P, 1).coeffs[0]


# -- divisors and Riemann-Roch bases -------------------------------------------

@dataclass(frozen=True)
class DivisorSpec:
    """D = n*O + (h); h = None encodes h = 1.  deg D = n."""

    n: int
    h: FnElement = None

    def __post_init__(self):
        if self.n < 0:
            raise UnsupportedDivisorError("multiplicity at O must be non-negative")


def divisor_coefficient(curve: WeierstrassCurve, D: DivisorSpec, P) -> int:
    """Multiplicity of P in D (integer, possibly negative)."""
    base = D.n if P is INFINITY else 0
    if D.h is None or D.h.is_zero:
        return base
    return base + function_valuation(curve, D.h, P, prec=max(D.n + 3, 8))


def rr_basis(curve: WeierstrassCurve, D: DivisorSpec):
    """Ordered basis of L(D) for D = n*O + (h): monomials over h.

    The monomials 1, r, s, r^2, rs, r^3, ... have pole orders 0, 2, 3, 4, 5,
    6, ... at O, so those with pole order at most n give the n = deg D
    elements (genus 1 has the single gap at order 1).
    """
    if D.n < 1:
        raise UnsupportedDivisorError("need deg D >= 1")
    f = curve.field
    one = Poly.const(f, 1)
    monomials = []
    for order in range(D.n + 1):
        if order == 0:
            monomials.append(FnElement.from_poly(curve, one))
        elif order == 1:
            continue
        elif order % 2 == 0:
            monomials.append(FnElement.from_poly(curve, one.shift(order // 2)))
        else:
            z = Poly.zero(f)
            monomials.append(FnElement(curve, z, one.shift((order - 3) // 2),
                                       Poly.const(f, 1)))
    if D.h is None:
        return monomials
    h_inv = D.h.inv()
    return [m * h_inv for m in monomials]


# -- increasing zero bases -------------------------------------------------------

class IzbResult(NamedTuple):
    elements: tuple
    valuations: tuple
    transform: FqMatrix  # rows express the output in the input basis


def _eliminate_increasing(field, rows, width, k):
    """Forward Gaussian elimination by leading position.

    rows are [series coefficients (length width) | transform coords (length k)].
    Returns pivot row indices in pivot-column order plus their pivot columns,
    and the list of row indices that never received a pivot.
    """
    used = []
    pivots = []
    remaining = list(range(len(rows)))
    for col in range(width):
        hit = None
        for idx in remaining:
            if rows[idx][col]:
                hit = idx
                break
        if hit is None:
            continue
        remaining.remove(hit)
        row = rows[hit]
        lead = row[col]
        if lead != 1:
            s = field.inv(lead)
            for j in range(col, width + k):
                if row[j]:
                    row[j] = field.mul(s, row[j])
        for idx in remaining:
            other = rows[idx]
            c = other[col]
            if c:
                for j in range(col, width + k):
                    if row[j]:
                        other[j] = field.sub(other[j], field.mul(c, row[j]))
        used.append(hit)
        pivots.append(col)
        if not remaining:
            break
    return used, pivots, remaining


def increasing_zero_basis(curve, basis, P, prec: int = None) -> IzbResult:
    """Reorder/combine basis so valuations at P strictly increase from 0.

    Works for function-field elements on a genus-1 curve (curve given) and for
    polynomials on the line (curve = None, P a field element).  Every output
    element is normalized to leading local coefficient 1.
    """
    if curve is None:
        return _increasing_zero_basis_poly(basis, P)
    k = len(basis)
    base = prec if prec is not None else k + 4
    attempt = base
    while True:
        try:
            return _izb_once(curve, basis, P, attempt)
        except PrecisionExhaustedError:
            if attempt >= 8 * base:
                raise
            attempt *= 2


def _izb_once(curve, basis, P, prec) -> IzbResult:
    field = curve.field
    k = len(basis)
    rows = []
    for i, fn in enumerate(basis):
        exp = local_expand(curve, fn, P, prec)
        if exp.valuation < 0:
            raise PointInSupportError(f"basis element {i} has a pole at {P!r}")
        coeffs = [0] * prec
        for j, c in enumerate(exp.coeffs):
            pos = exp.valuation + j
            if pos < prec:
                coeffs[pos] = c
        rows.append(coeffs + [1 if t == i else 0 for t in range(k)])
    used, pivots, remaining = _eliminate_increasing(field, rows, prec, k)
    if remaining:
        for idx in remaining:
            combo = FnElement.zero(curve)
            for t in range(k):
                c = rows[idx][prec + t]
                if c:
                    combo = combo + FnElement.const(curve, c) * basis[t]
            if combo.is_zero:
                raise DependentBasisError("input functions are linearly dependent")
        raise PrecisionExhaustedError("valuations not separated at this precision")
    elements = []
    transform_rows = []
    for idx in used:
        coords = rows[idx][prec:]
        combo = FnElement.zero(curve)
        for t in range(k):
            if coords[t]:
                combo = combo + FnElement.const(curve, coords[t]) * basis[t]
        elements.append(combo)
        transform_rows.append(coords)
    return IzbResult(tuple(elements), tuple(pivots),
                     FqMatrix.from_rows(field, transform_rows))


def _taylor_coeffs(poly: Poly, x0: int, width: int):
    """Coefficients of poly(x0 + t) as a list of the given width."""
    f = poly.field
    shifted = Poly.const(f, 0)
    lin = Poly.make(f, (x0, 1))
    for c in reversed(poly.coeffs):
        shifted = shifted * lin + Poly.const(f, c)
    return [shifted.coeff(i) for i in range(width)]


def _increasing_zero_basis_poly(basis, x0) -> IzbResult:
    if x0 is INFINITY:
        raise PointInSupportError("the point at infinity supports the line divisor")
    field = basis[0].field
    k = len(basis)
    width = max(p.degree for p in basis) + 1
    rows = [_taylor_coeffs(p, x0, width) + [1 if t == i else 0 for t in range(k)]
            for i, p in enumerate(basis)]
    used, pivots, remaining = _eliminate_increasing(field, rows, width, k)
    if remaining:
        raise DependentBasisError("input polynomials are linearly dependent")
    elements = []
    transform_rows = []
    for idx in used:
        coords = rows[idx][width:]
        combo = Poly.zero(field)
        for t in range(k):
            if coords[t]:
                combo = combo + basis[t].scale(coords[t])
        elements.append(combo)
        transform_rows.append(coords)
    return IzbResult(tuple(elements), tuple(pivots),
                     FqMatrix.from_rows(field, transform_rows))


# -- the Goppa matrix-set construction ------------------------------------------

@dataclass(frozen=True)
class GoppaConstruction:
    """All artifacts of one construction run.

    basis0 is the reference ordered basis of L(D) (the increasing zero basis
    at the first point); point_bases[i] is the increasing zero basis at point
    i with valuations point_valuations[i]; matrices[i] is the change of basis
    with matrices[i] * B_i = B_0 in L(D) coordinates.
    """

    field: FieldSpec
    curve: WeierstrassCurve
    genus: int
    points: tuple
    divisor: DivisorSpec
    basis0: tuple
    point_bases: tuple
    point_valuations: tuple
    matrices: tuple
    udmg: Udmg
    generator: FqMatrix


def _point_key(P):
    if P is INFINITY:
        return ("inf",)
    return (P,) if isinstance(P, int) else tuple(P)


def _eval_element(curve, K: int, element, P) -> int:
    if curve is not None:
        return evaluate(curve, element, P)
    if P is INFINITY:
        # Standard extension of polynomial evaluation to infinity.
        return element.coeff(K - 1)
    return element(P)


def _build_generator(field, curve, K, points, basis0, matrices) -> FqMatrix:
    cols = [M.col(0) for M in matrices]
    for j, P in enumerate(points):
        evals = tuple(_eval_element(curve, K, basis0[i], P) for i in range(K))
        if evals != cols[j]:
            raise AssertionError(
                f"first column of matrix {j} disagrees with basis evaluation at {P!r}")
    return FqMatrix.from_rows(field, [[cols[j][i] for j in range(len(cols))]
                                      for i in range(K)])


def goppa_generator(gc: GoppaConstruction) -> FqMatrix:
    """K x L matrix of the first columns, which evaluates the reference basis.

    Column j must equal (B_01(P_j), ..., B_0K(P_j)); both routes are computed
    and compared, so a disagreement flags a construction bug.
    """
    return _build_generator(gc.field, gc.curve, gc.udmg.K, gc.points,
                            gc.basis0, gc.matrices)


def goppa_udmg(curve: WeierstrassCurve, points, D: DivisorSpec) -> GoppaConstruction:
    """Genus-1 construction: one K x K matrix per point, K = deg D."""
    points = tuple(points)
    if len(set(map(_point_key, points))) != len(points):
        raise DuplicatePointsError("points must be pairwise distinct")
    for P in points:
        if not curve.contains(P):
            raise InvalidInputError(f"{P!r} is not a rational point of the curve")
    K = D.n  # l(D) = deg D for genus 1 once deg D >= 1
    if K < 1:
        raise TooFewSectionsError("deg D must be at least 1")
    for P in points:
        if divisor_coefficient(curve, D, P) != 0:
            raise SupportCollisionError(f"{P!r} lies in the support of the divisor")
    canonical = rr_basis(curve, D)
    prec = K + 1 + 2
    results = [increasing_zero_basis(curve, canonical, P, prec=prec) for P in points]
    t0 = results[0].transform
    matrices = tuple(t0.matmul(inverse(res.transform)) for res in results)
    u = Udmg(curve.field, K, 1, matrices)
    if not _verify_fast(u):
        raise AssertionError("construction output failed verification")
    generator = _build_generator(curve.field, curve, K, points,
                                 results[0].elements, matrices)
    return GoppaConstruction(
        field=curve.field, curve=curve, genus=1, points=points, divisor=D,
        basis0=results[0].elements,
        point_bases=tuple(res.elements for res in results),
        point_valuations=tuple(res.valuations for res in results),
        matrices=matrices, udmg=u, generator=generator)


def genus0_udmg(field: FieldSpec, points, K: int) -> GoppaConstruction:
    """Projective-line construction for D = (K-1)*infinity.

    L(D) is spanned by 1, x, ..., x^(K-1); the increasing zero basis at a
    finite point x0 is (x - x0)^j, and at infinity the reversed monomials
    (valuations -(K-1), ..., 0 in the uniformizer 1/x).
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    points = tuple(points)
    if len(points) > field.q + 1:
        raise TooManyPointsError(f"at most {field.q + 1} points on the line")
    if len(set(map(_point_key, points))) != len(points):
        raise DuplicatePointsError("points must be pairwise distinct")
    monomials = [Poly.const(field, 1).shift(j) for j in range(K)]

    def izb_at(P):
        if P is INFINITY:
            elements = tuple(monomials[K - 1 - j] for j in range(K))
            vals = tuple(range(-(K - 1), 1))
            rows = [[1 if t == K - 1 - j else 0 for t in range(K)] for j in range(K)]
            return IzbResult(elements, vals, FqMatrix.from_rows(field, rows))
        field.check(P)
        return increasing_zero_basis(None, monomials, P)

    results = [izb_at(P) for P in points]
    t0 = results[0].transform
    matrices = tuple(t0.matmul(inverse(res.transform)) for res in results)
    u = Udmg(field, K, 0, matrices)
    if not _verify_fast(u):
        raise AssertionError("construction output failed verification")
    generator = _build_generator(field, None, K, points, results[0].elements, matrices)
    return GoppaConstruction(
        field=field, curve=None, genus=0, points=points,
        divisor=DivisorSpec(K - 1, None),
        basis0=results[0].elements,
        point_bases=tuple(res.elements for res in results),
        point_valuations=tuple(res.valuations for res in results),
        matrices=matrices, udmg=u, generator=generator)
