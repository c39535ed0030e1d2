"""Gapped PAM modulation and square-matrix-set coding schemes, audited exactly.

All modulation arithmetic is exact: public values are Fractions, and the
exhaustive audits run on the integer rescaling 2qN * mu0, which is always an
integer, so no inequality can be blurred by rounding.

Orientation note: a message row vector v is encoded per subchannel as v * M_i
(vector times matrix).  With that orientation, two distinct messages whose
encodings agree in long prefixes would exhibit an allowable column set of the
matrix family that fails to span, so validity of the matrix set caps the
total agreement sum at N + g - 1.  That cap is what the product-distance
audit leans on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Udmg, verify
from .errors import (
    EqualInputsError,
    HypothesisUnmetError,
    InvalidInputError,
    NotSquareError,
    SymbolOutOfRangeError,
    TooLargeError,
)
from .linalg import Subspace, complement, kernel_basis, subspace_sum

MAX_MESSAGES = 1 << 22
MAX_PAIR_SQUARE = 1 << 24


@dataclass(frozen=True)
class Modulator:
    """Weighted q^N-PAM over symbol vectors in {0, ..., q-1}^N.

    Weight i (1-based symbol position) is 1 + ((q-1)(N+1-i)+1)/(qN), which
    always lies in [1, 2]; the weights open a gap of more than q^(N-m-1)/N
    between modulated vectors that agree in exactly their first m symbols.
    """

    q: int
    N: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("alphabet needs q >= 2")
        if self.N < 1:
            raise ValueError("block length needs N >= 1")

    @property
    def weights(self) -> tuple:
        q, N = self.q, self.N
        w = tuple(1 + Fraction((q - 1) * (N + 1 - i) + 1, q * N)
                  for i in range(1, N + 1))
        assert all(1 <= wi <= 2 for wi in w)
        return w

    def scaled_weights(self) -> tuple:
        """Integer weights W_i = 2qN * w_i / 2 = qN + (q-1)(N+1-i) + 1."""
        q, N = self.q, self.N
        return tuple(q * N + (q - 1) * (N + 1 - i) + 1 for i in range(1, N + 1))

    def check_symbols(self, a) -> tuple:
        a = tuple(a)
        if len(a) != self.N:
            raise SymbolOutOfRangeError(f"expected {self.N} symbols")
        for x in a:
            if not 0 <= x < self.q:
                raise SymbolOutOfRangeError(f"symbol {x} outside [0, {self.q})")
        return a


def mu0(mod: Modulator, a) -> Fraction:
    """Exact gapped-PAM value of one symbol vector."""
    a = mod.check_symbols(a)
    q, N = mod.q, mod.N
    w = mod.weights
    total = Fraction(0)
    for i, ai in enumerate(a, start=1):
        total += (ai - Fraction(q - 1, 2)) * q ** (N - i) * w[i - 1]
    return total


def mu0_scaled(mod: Modulator, a) -> int:
    """2qN * mu0(a), always an integer; used by the exhaustive audits."""
    q, N = mod.q, mod.N
    W = mod.scaled_weights()
    total = 0
    for i, ai in enumerate(a, start=1):
        total += (2 * ai - (q - 1)) * q ** (N - i) * W[i - 1]
    return total


@dataclass(frozen=True)
class GapCheck:
    agreement: int       # length of the common prefix
    gap: Fraction        # |mu0(a) - mu0(b)|
    floor: Fraction      # q^(N-m-1)/N
    passed: bool


def _common_prefix(a, b) -> int:
    m = 0
    for x, y in zip(a, b):
        if x != y:
            break
        m += 1
    return m


def gap_check(mod: Modulator, a, b) -> GapCheck:
    """Exact comparison of one pair against its gap floor (a theorem; a
    failure would flag an implementation bug)."""
    a = mod.check_symbols(a)
    b = mod.check_symbols(b)
    if a == b:
        raise EqualInputsError("gap check needs two distinct vectors")
    m = _common_prefix(a, b)
    gap = abs(mu0(mod, a) - mu0(mod, b))
    floor = Fraction(mod.q ** (mod.N - m - 1), mod.N)
    return GapCheck(m, gap, floor, gap > floor)


@dataclass(frozen=True)
class GapAudit:
    pairs_checked: int
    all_passed: bool
    min_gap_by_prefix: dict  # m -> exact minimum gap over pairs agreeing in m


def gap_audit_exhaustive(mod: Modulator) -> GapAudit:
    """Check every unordered pair of symbol vectors, in scaled integers."""
    from itertools import product

    q, N = mod.q, mod.N
    if q ** (2 * N) > MAX_PAIR_SQUARE:
        raise TooLargeError("symbol space too large for the exhaustive audit")
    vecs = list(product(range(q), repeat=N))
    scaled = [mu0_scaled(mod, v) for v in vecs]
    floors = [2 * q * q ** (N - m - 1) for m in range(N)]  # 2qN * q^(N-m-1)/N
    min_by_m = {}
    ok = True
    pairs = 0
    for i in range(len(vecs)):
        vi, si = vecs[i], scaled[i]
        for j in range(i + 1, len(vecs)):
            pairs += 1
            m = _common_prefix(vi, vecs[j])
            diff = abs(si - scaled[j])
            if diff <= floors[m]:
                ok = False
            if m not in min_by_m or diff < min_by_m[m]:
                min_by_m[m] = diff
    denom = 2 * q * N
    return GapAudit(pairs, ok,
                    {m: Fraction(v, denom) for m, v in sorted(min_by_m.items())})


# -- coding schemes --------------------------------------------------------------

@dataclass(frozen=True)
class CodeScheme:
    """Square-matrix-set scheme: messages live in a complement of the kernels.

    Encoding sends a message row vector v to (v M_1, ..., v M_L); each map is
    injective on the message space because the kernel span was quotiented
    away.  The rate is (N - delta) log2 q bits per timeslot.
    """

    udmg: Udmg
    modulator: Modulator
    kernels: tuple
    kernel_span: Subspace
    delta: int
    message_space: Subspace

    @property
    def N(self) -> int:
        return self.udmg.K

    @property
    def L(self) -> int:
        return self.udmg.L

    @property
    def rate_symbols(self) -> int:
        return self.N - self.delta

    @property
    def rate_bits(self) -> float:
        return self.rate_symbols * math.log2(self.udmg.field.q)

    def messages(self):
        return self.message_space.enumerate_vectors()

    def encode(self, v) -> list:
        """The L symbol vectors v * M_i."""
        return [M.vecmat(v) for M in self.udmg.matrices]


def build_scheme(u: Udmg) -> CodeScheme:
    """Check the square hypotheses, split off the kernel span, fix messages."""
    if not u.is_square:
        raise NotSquareError("scheme needs eta-regular square matrices with eta = K")
    N = u.K
    if u.L * (N - u.g) < N:
        raise HypothesisUnmetError(
            f"need L(N - g) >= N, have {u.L}*({N}-{u.g}) < {N}")
    if not verify(u).valid:
        raise InvalidInputError("matrix set fails verification at its genus")
    kernels = tuple(kernel_basis(M.transpose()) for M in u.matrices)
    for ker in kernels:
        if ker.dim > u.g:
            raise AssertionError("kernel dimension exceeded the genus")
    span = subspace_sum(kernels)
    if span.dim > u.g * u.L:
        raise AssertionError("kernel span exceeded g*L")
    W = complement(span)
    return CodeScheme(u, Modulator(u.field.q, N), kernels, span, span.dim, W)


@dataclass(frozen=True)
class ModulationBounds:
    alpha: Fraction
    beta: Fraction


def modulation_bounds(q: int, g: int, L: int) -> ModulationBounds:
    if q % 2 == 1:
        alpha = Fraction(L, 6 * q ** (2 * g * L + 2))
    else:
        alpha = Fraction(L, 2 * q ** (g * L + 4))
    return ModulationBounds(alpha, Fraction(L * q ** (L * g)))


@dataclass(frozen=True)
class SnrReport:
    snr: Fraction
    bounds: ModulationBounds
    lower: Fraction
    upper: Fraction
    within: bool


def snr(scheme: CodeScheme) -> SnrReport:
    """Exact average power over the message space, with its sandwich bounds."""
    q, N, L = scheme.modulator.q, scheme.N, scheme.L
    size = q ** scheme.message_space.dim
    if size > MAX_MESSAGES:
        raise TooLargeError("message space too large for the exact sum")
    mod = scheme.modulator
    total = 0  # sum of (2qN mu0)^2 over all rows and channels
    for v in scheme.messages():
        for sym in scheme.encode(v):
            t = mu0_scaled(mod, sym)
            total += t * t
    value = Fraction(total, size * (2 * q * N) ** 2)
    b = modulation_bounds(q, scheme.udmg.g, L)
    lower = b.alpha * q ** (2 * N) / N ** 2
    upper = b.beta * q ** (2 * N)
    return SnrReport(value, b, lower, upper, lower <= value <= upper)


@dataclass(frozen=True)
class AuditReport:
    pairs_checked: int
    min_product: Fraction
    floor: Fraction
    passed: bool
    worst_pair: tuple
    max_agreement: int
    vacuous: bool


def audit_product_distance(scheme: CodeScheme) -> AuditReport:
    """Exact product-distance floor over every distinct message pair.

    For each pair the per-channel agreement lengths must sum to at most
    N + g - 1 (the matrix-set property in row orientation) and the product of
    squared modulated differences must clear q^(2(LN-(N+g-1)-L))/N^(2L).
    """
    q, N, L, g = scheme.modulator.q, scheme.N, scheme.L, scheme.udmg.g
    msgs = scheme.messages()
    if len(msgs) ** 2 > MAX_PAIR_SQUARE:
        raise TooLargeError("message pair count exceeds the audit guard")
    if len(msgs) < 2:
        return AuditReport(0, Fraction(0), Fraction(0), True, (), 0, True)
    mod = scheme.modulator
    encoded = []
    for v in msgs:
        syms = scheme.encode(v)
        encoded.append((v, syms, [mu0_scaled(mod, s) for s in syms]))
    scale = (2 * q * N) ** (2 * L)  # converts scaled integer products to mu0 units
    agreement_cap = N + g - 1
    # Integer floors: product over channels of (2qN)^2 q^(2(N-lam_i-1))/N^2.
    floor_pow = (2 * q) ** (2 * L)
    ok = True
    pairs = 0
    min_scaled = None
    worst = ()
    max_agree = 0
    for i in range(len(encoded)):
        vi, symi, ti = encoded[i]
        for j in range(i + 1, len(encoded)):
            vj, symj, tj = encoded[j]
            pairs += 1
            lam_sum = 0
            prod = 1
            for c in range(L):
                lam_sum += _common_prefix(symi[c], symj[c])
                diff = ti[c] - tj[c]
                prod *= diff * diff
            if lam_sum > agreement_cap:
                raise AssertionError(
                    f"agreement sum {lam_sum} exceeded N+g-1 for {vi} vs {vj}")
            if lam_sum > max_agree:
                max_agree = lam_sum
            pair_floor = floor_pow * q ** (2 * (L * N - lam_sum - L))
            if prod < pair_floor:
                ok = False
            if min_scaled is None or prod < min_scaled:
                min_scaled = prod
                worst = (vi, vj)
    floor = Fraction(q ** (2 * (L * N - (N + g - 1) - L)), N ** (2 * L))
    min_product = Fraction(min_scaled, scale)
    passed = ok and min_product >= floor
    return AuditReport(pairs, min_product, floor, passed, worst, max_agree, False)


@dataclass(frozen=True)
class ComplexifiedScheme:
    """Pairing (W x W, kappa x kappa, C x C, mu x 0 + 0 x i mu).

    Real and imaginary legs are independent copies, so the average power and
    the rate both double exactly; the doubling is computed from the paired
    sum, not assumed.
    """

    base: CodeScheme
    snr: Fraction
    base_snr: Fraction
    rate_symbols: int
    message_count: int


def complexify(scheme: CodeScheme) -> ComplexifiedScheme:
    base = snr(scheme).snr
    size = scheme.udmg.field.q ** scheme.message_space.dim
    # sum over (x, y) of (|mu(x)|^2 + |mu(y)|^2) = 2 * size * sum over x.
    paired_total = 2 * size * (base * size)
    paired = Fraction(paired_total, size * size)
    if paired != 2 * base:
        raise AssertionError("complexified power failed to double exactly")
    return ComplexifiedScheme(scheme, paired, base,
                              2 * scheme.rate_symbols, size * size)
