"""Matrix sets with the genus-g universal decodability property.

A set of L matrices over F_q, each with K rows, is universally decodable of
genus g when every allowable choice of initial-column prefixes (lambda_i
columns from matrix i, 0 <= lambda_i <= N_i, sum = K + g) spans F_q^K.
This module holds the data model, exhaustive verification, minimal-genus
search, truncation, the subspace-chain realization, and chain quotients.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import (
    InvalidInputError,
    LengthMismatchError,
    NotProperSubError,
)
from .fields import FieldSpec
from .linalg import (
    FqMatrix,
    Subspace,
    image_subspace,
    quotient_map,
    rref_rows,
    subspace_sum,
)


@dataclass(frozen=True)
class Udmg:
    """An ordered set of K-row matrices over one field with a declared genus.

    The declared genus is a claim, not necessarily minimal; verify() checks it.
    """

    field: FieldSpec
    K: int
    g: int
    matrices: tuple

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("genus must be non-negative")
        for M in self.matrices:
            if M.rows != self.K:
                raise LengthMismatchError("matrix height differs from K")
            if M.field != self.field:
                raise LengthMismatchError("matrix over the wrong field")

    @property
    def L(self) -> int:
        return len(self.matrices)

    @property
    def lengths(self) -> tuple:
        return tuple(M.cols for M in self.matrices)

    @property
    def total_length(self) -> int:
        return sum(self.lengths)

    @property
    def is_square(self) -> bool:
        return all(n == self.K for n in self.lengths)

    @property
    def is_nondegenerate(self) -> bool:
        bound = self.K + self.g
        return (self.total_length >= bound
                and all(n <= bound for n in self.lengths)
                and self.K >= 2)

    def with_genus(self, g: int) -> "Udmg":
        return Udmg(self.field, self.K, g, self.matrices)


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    witness: tuple | None
    checked: int
    vacuous: bool = False


def allowable_vectors(lengths, K: int, g: int):
    """Capped compositions of K + g, in lexicographic order."""
    total = K + g
    L = len(lengths)

    def rec(i, remaining, prefix):
        if i == L:
            if remaining == 0:
                yield tuple(prefix)
            return
        tail_cap = sum(lengths[i + 1:])
        lo = max(0, remaining - tail_cap)
        hi = min(lengths[i], remaining)
        for v in range(lo, hi + 1):
            prefix.append(v)
            yield from rec(i + 1, remaining - v, prefix)
            prefix.pop()

    if total < 0:
        return iter(())
    return rec(0, total, [])


def _prefix_rows(u: Udmg, lam) -> list:
    """Rows of the transposed concatenation of the chosen column prefixes.

    Rank is transpose-invariant, so ranking the chosen columns as rows avoids
    building column-major intermediates.
    """
    rows = []
    for M, k in zip(u.matrices, lam):
        for j in range(k):
            rows.append(list(M.col(j)))
    return rows


def _spans(u: Udmg, lam) -> bool:
    rows = _prefix_rows(u, lam)
    return rref_rows(u.field, rows)[0] == u.K


def verify(u: Udmg, threads: int = 1) -> VerifyReport:
    """Exhaustive check over allowable vectors.

    Every vector is examined (no short circuit), so the checked count and the
    reported witness, the lexicographic minimum of all failures, do not depend
    on the thread count.
    """
    lams = list(allowable_vectors(u.lengths, u.K, u.g))
    if not lams:
        return VerifyReport(True, None, 0, vacuous=True)

    def scan(chunk):
        fails = [lam for lam in chunk if not _spans(u, lam)]
        return fails[0] if fails else None

    if threads > 1 and len(lams) > 64:
        size = (len(lams) + threads - 1) // threads
        chunks = [lams[i:i + size] for i in range(0, len(lams), size)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(scan, chunks))
        failures = [w for w in results if w is not None]
    else:
        failures = [lam for lam in lams if not _spans(u, lam)]
    if failures:
        return VerifyReport(False, min(failures), len(lams))
    return VerifyReport(True, None, len(lams))


def _verify_fast(u: Udmg) -> bool:
    for lam in allowable_vectors(u.lengths, u.K, u.g):
        if not _spans(u, lam):
            return False
    return True


def verify_naive(u: Udmg) -> VerifyReport:
    """Oracle variant: checks every capped vector with sum >= K + g.

    Column supersets cannot lose rank, so this must agree with verify(); the
    equivalence of the two enumerations is asserted by tests, not assumed.
    """
    lengths = u.lengths
    total = u.total_length
    target = u.K + u.g
    checked = 0
    failures = []
    for s in range(target, total + 1):
        for lam in allowable_vectors(lengths, s, 0):
            checked += 1
            if not _spans(u, lam):
                failures.append(lam)
    if total < target:
        return VerifyReport(True, None, 0, vacuous=True)
    if failures:
        return VerifyReport(False, min(failures), checked)
    return VerifyReport(True, None, checked)


def minimal_genus(u: Udmg) -> tuple:
    """Least genus at which the matrices verify, plus a vacuity flag.

    The declared genus of u is ignored.  Validity is monotone in the genus,
    and once K + g exceeds the total length the check is vacuous, so the scan
    terminates.
    """
    total = u.total_length
    g = 0
    while True:
        if _verify_fast(u.with_genus(g)):
            return g, u.K + g > total
        g += 1


def truncate(u: Udmg, new_lengths) -> Udmg:
    """Keep the first N'_i columns of each matrix, dropping emptied matrices."""
    new_lengths = tuple(new_lengths)
    if len(new_lengths) != u.L:
        raise LengthMismatchError("truncation vector has wrong length")
    for n, old in zip(new_lengths, u.lengths):
        if not 0 <= n <= old:
            raise LengthMismatchError(f"cannot keep {n} of {old} columns")
    kept = tuple(M.prefix_cols(n) for M, n in zip(u.matrices, new_lengths) if n > 0)
    return Udmg(u.field, u.K, u.g, kept)


# -- vector space realization -------------------------------------------------

@dataclass(frozen=True)
class Chain:
    """Ordered nested subspaces V_1 <= ... <= V_N of one ambient space."""

    subspaces: tuple

    def __post_init__(self):
        if not self.subspaces:
            raise ValueError("a chain has at least one subspace")

    @property
    def length(self) -> int:
        return len(self.subspaces)

    @property
    def ambient_dim(self) -> int:
        return self.subspaces[0].ambient_dim

    @property
    def dims(self) -> tuple:
        return tuple(V.dim for V in self.subspaces)

    def is_closely_nested(self) -> bool:
        dims = self.dims
        if dims[0] > 1:
            return False
        for a, b in zip(dims, dims[1:]):
            if not 0 <= b - a <= 1:
                return False
        return all(b.contains(a) for a, b in zip(self.subspaces, self.subspaces[1:]))


@dataclass(frozen=True)
class Udvsg:
    """Coordinate-free form: one closely nested chain per matrix."""

    field: FieldSpec
    K: int
    g: int
    chains: tuple

    @property
    def L(self) -> int:
        return len(self.chains)

    @property
    def lengths(self) -> tuple:
        return tuple(c.length for c in self.chains)


def realize(u: Udmg) -> Udvsg:
    """Chains of spans of column prefixes, one per matrix."""
    chains = []
    for M in u.matrices:
        cols = [M.col(j) for j in range(M.cols)]
        subs = []
        for j in range(1, M.cols + 1):
            subs.append(Subspace.from_vectors(u.field, u.K, cols[:j]))
        chains.append(Chain(tuple(subs)))
    return Udvsg(u.field, u.K, u.g, tuple(chains))


def prune(chain: Chain, mode: str = "reduced") -> Chain:
    """Drop leading zero subspaces; irredundant mode also drops repeats."""
    if mode not in ("reduced", "irredundant"):
        raise ValueError("mode is 'reduced' or 'irredundant'")
    subs = [V for V in chain.subspaces if V.dim > 0]
    if mode == "irredundant":
        out = []
        for V in subs:
            if not out or V != out[-1]:
                out.append(V)
        subs = out
    if not subs:
        subs = [chain.subspaces[-1]]  # all-zero chain reduces to its last entry
    return Chain(tuple(subs))


def verify_chains(v: Udvsg) -> VerifyReport:
    """UDVSG check: allowable partial sums of chain subspaces fill F_q^K."""
    lams = list(allowable_vectors(v.lengths, v.K, v.g))
    if not lams:
        return VerifyReport(True, None, 0, vacuous=True)
    failures = []
    for lam in lams:
        rows = []
        for chain, k in zip(v.chains, lam):
            if k > 0:
                rows.extend(list(r) for r in chain.subspaces[k - 1].vectors)
        if rref_rows(v.field, rows)[0] != v.K:
            failures.append(lam)
    if failures:
        return VerifyReport(False, min(failures), len(lams))
    return VerifyReport(True, None, len(lams))


@dataclass(frozen=True)
class QuotientResult:
    quotient: Udvsg
    d: int
    r: int
    B_dim: int


def quotient(v: Udvsg, truncation, check: bool = True) -> QuotientResult:
    """Quotient of a chain collection by the proper sub-collection at truncation.

    B is the sum of the truncated heads V^i_{N'_i}; every chain is pushed to
    F_q^K / B and the first N'_i entries are dropped, giving a collection with
    parameters (L, N - N', d + r, q, g - d) where dim B = (K - r) - d.
    """
    truncation = tuple(truncation)
    if len(truncation) != v.L:
        raise NotProperSubError("truncation vector has wrong length")
    for n, old in zip(truncation, v.lengths):
        if not 0 <= n < old:
            raise NotProperSubError("each truncated length must stay below the original")
    if check and not verify_chains(v).valid:
        raise InvalidInputError("input fails verification at its declared genus")

    heads = []
    for chain, n in zip(v.chains, truncation):
        if n > 0:
            heads.append(chain.subspaces[n - 1])
    if heads:
        B = subspace_sum(heads)
    else:
        B = Subspace.trivial(v.field, v.K)
    r = max(v.K - sum(truncation), 0)
    d = (v.K - r) - B.dim
    Q = quotient_map(B)
    new_chains = []
    for chain, n in zip(v.chains, truncation):
        subs = [image_subspace(Q, V) for V in chain.subspaces[n:]]
        new_chains.append(Chain(tuple(subs)))
    out = Udvsg(v.field, d + r, v.g - d, tuple(new_chains))
    if check:
        if not (0 <= d <= min(v.K - r, v.g)):
            raise AssertionError("quotient defect outside the guaranteed range")
        if not verify_chains(out).valid:
            raise AssertionError("quotient failed re-verification")
    return QuotientResult(out, d, r, B.dim)


def chain_matrix(chain: Chain, field: FieldSpec) -> FqMatrix:
    """A matrix whose column-prefix spans realize the chain.

    Dimension jumps contribute the first canonical basis vector of the larger
    space outside the smaller one; repeats contribute a zero column, which
    lies in the current space as required.
    """
    K = chain.ambient_dim
    cols = []
    prev = Subspace.trivial(field, K)
    for V in chain.subspaces:
        if V.dim == prev.dim:
            cols.append((0,) * K)
        else:
            vec = next(r for r in V.vectors if not prev.contains_vector(r))
            cols.append(tuple(vec))
        prev = V
    entries = tuple(c[i] for i in range(K) for c in cols)
    return FqMatrix(field, K, len(cols), entries)


def matrices_from_chains(v: Udvsg) -> Udmg:
    """Any matrix-set realization of the chain collection (up to isomorphism)."""
    mats = tuple(chain_matrix(c, v.field) for c in v.chains)
    return Udmg(v.field, v.K, v.g, mats)
