"""End-to-end acceptance checks, one test per criterion.

Each test is exact (integer or rational arithmetic throughout), pins its
stated runtime budget where one applies, and prints one line into the
terminal summary (see pytest_terminal_summary in conftest).
"""

import random
import time
from fractions import Fraction
from itertools import product

from udmg import reference
from udmg.codes import bounds, duplicated, first_column_code
from udmg.core import (
    Udmg,
    minimal_genus,
    quotient,
    realize,
    verify,
    verify_chains,
    verify_naive,
)
from udmg.curves import (
    INFINITY,
    DivisorSpec,
    curve_new,
    enumerate_points,
    evaluate,
    genus0_udmg,
    goppa_udmg,
)
from udmg.fields import make_field
from udmg.linalg import FqMatrix, rank, rref
from udmg.waveform import (
    Modulator,
    audit_product_distance,
    build_scheme,
    complexify,
    gap_audit_exhaustive,
    snr,
)

F2, F3, F5, F7 = make_field(2), make_field(3), make_field(5), make_field(7)


def full_line(field, K):
    return genus0_udmg(field, list(range(field.q)) + [INFINITY], K)


def test_criterion_01_fixture_validity(ref_udmg):
    start = time.perf_counter()
    rep = verify(ref_udmg)
    assert rep.valid and not rep.vacuous
    rep0 = verify(ref_udmg.with_genus(0))
    assert not rep0.valid
    assert rep0.witness == (0, 0, 0, 0, 0, 0, 1, 1, 1)
    induced = [ref_udmg.matrices[i].col(0) for i, k in enumerate(rep0.witness) if k]
    assert rank(FqMatrix.from_rows(F5, induced)) == 2
    assert time.perf_counter() - start < 1.0


def test_criterion_02_point_census():
    curve = reference.curve()
    pts = enumerate_points(curve)
    expected = {INFINITY, (0, 1), (4, 2), (3, 4), (0, 4), (4, 3), (3, 1), (2, 1), (2, 4)}
    assert set(pts) == expected and len(pts) == 9
    assert 2 <= len(pts) <= 10  # Hasse-Weil-Serre at q = 5, genus 1


def test_criterion_03_construction_reproduction(ref_udmg):
    start = time.perf_counter()
    gc = goppa_udmg(reference.curve(), reference.POINTS, reference.divisor())
    assert gc.udmg.K == 3 and gc.udmg.g == 1 and gc.udmg.L == 9
    assert gc.udmg.lengths == (3,) * 9
    assert verify(gc.udmg).valid
    constructed = rref(gc.generator).matrix
    golden = rref(reference.evaluation_generator()).matrix
    assert constructed.to_rows() == golden.to_rows()  # equal row spaces
    assert time.perf_counter() - start < 5.0


def test_criterion_04_generator_identity():
    constructions = []
    for q in (2, 3, 5, 7):
        field = make_field(q)
        for K in (2, 3, 4):
            constructions.append(full_line(field, K))
    constructions.append(goppa_udmg(reference.curve(), reference.POINTS,
                                    reference.divisor()))
    for (a, b) in [(1, 1), (2, 3)]:
        curve = curve_new(F7, a, b)
        pts = [P for P in enumerate_points(curve) if P is not INFINITY]
        constructions.append(goppa_udmg(curve, pts, DivisorSpec(3, None)))
    for gc in constructions:
        K = gc.udmg.K
        for j, P in enumerate(gc.points):
            col = gc.matrices[j].col(0)
            if gc.curve is None:
                evals = tuple(gc.basis0[i].coeff(K - 1) if P is INFINITY
                              else gc.basis0[i](P) for i in range(K))
            else:
                evals = tuple(evaluate(gc.curve, gc.basis0[i], P) for i in range(K))
            assert col == evals


def test_criterion_05_code_parameters(ref_udmg):
    code = first_column_code(ref_udmg)
    assert (code.n, code.k) == (9, 3)
    assert 5 ** 3 - 1 == 124  # exhaustive scan size
    assert 6 <= code.d <= 7
    assert code.defect <= 1
    for q in (2, 3, 5, 7):
        field = make_field(q)
        for K in (2, 3, 4):
            gc = full_line(field, K)
            if gc.udmg.L < K:
                continue
            c = first_column_code(gc.udmg)
            assert c.defect == 0
            assert c.d == c.n - c.k + 1


def test_criterion_06_bounds_reproduction():
    import math

    rep = bounds(4, 2, 2, lengths=(4, 4, 4, 4))
    assert rep.code_class == 1
    assert rep.class1_bound == 9
    assert rep.partition_bound == 8
    assert math.comb(10, 3) == 120
    assert math.comb(5, 3) * (2 ** 4 - 1) == 150
    assert math.comb(11, 3) == 165


def test_criterion_07_sharpness_witness():
    start = time.perf_counter()
    for q in (2, 3, 5):
        field = make_field(q)
        base = full_line(field, 2).udmg  # (q+1, 2, 2, q, 0)
        assert base.L == q + 1
        for g in (0, 1, 2):
            dup = duplicated(base, g)
            assert dup.L == (g + 1) * (q + 1)
            assert dup.lengths == (2,) * dup.L
            rep = verify(dup)
            assert rep.valid and not rep.vacuous
            assert dup.L == bounds(2, q, g, lengths=dup.lengths).class1_bound
    assert time.perf_counter() - start < 30.0


def _random_udmg(rng, field, K, lengths, g):
    mats = tuple(
        FqMatrix(field, K, n, tuple(rng.randrange(field.q) for _ in range(K * n)))
        for n in lengths)
    return Udmg(field, K, g, mats)


def test_criterion_08_quotient_law():
    rng = random.Random(20240817)
    instances = 0
    quotients = 0
    while instances < 200:
        field = rng.choice([F2, F3, F5])
        K = rng.randint(2, 4)
        L = rng.randint(1, 4)
        lengths = tuple(rng.randint(1, 4) for _ in range(L))
        u = _random_udmg(rng, field, K, lengths, 0)
        g_min, vacuous = minimal_genus(u)
        if vacuous:
            continue
        g = g_min if rng.random() < 0.8 or K + g_min + 1 > sum(lengths) else g_min + 1
        v = realize(u.with_genus(g))
        assert verify_chains(v).valid
        instances += 1
        for trunc in product(*(range(n) for n in lengths)):
            res = quotient(v, trunc, check=False)
            quotients += 1
            assert 0 <= res.d <= min(K - res.r, g)
            assert res.B_dim == (K - res.r) - res.d
            out = res.quotient
            assert out.K == res.d + res.r
            assert out.g == g - res.d
            assert out.lengths == tuple(n - t for n, t in zip(lengths, trunc))
            assert verify_chains(out).valid
    assert instances >= 200 and quotients >= 200


def test_criterion_09_oracle_equivalence():
    rng = random.Random(8128)
    agreements = 0
    for _ in range(520):
        field = rng.choice([F2, F3])
        K = rng.randint(1, 3)
        L = rng.randint(1, 3)
        lengths = tuple(rng.randint(1, 3) for _ in range(L))
        g = rng.randint(0, 2)
        u = _random_udmg(rng, field, K, lengths, g)
        fast = verify(u)
        naive = verify_naive(u)
        assert fast.valid == naive.valid
        agreements += 1
    assert agreements >= 500


def _scheme_corpus(ref_udmg):
    schemes = [
        ("reference", build_scheme(ref_udmg)),
        ("line-q2-K2", build_scheme(full_line(F2, 2).udmg)),
        ("line-q3-K2", build_scheme(full_line(F3, 2).udmg)),
        ("line-q5-K3", build_scheme(full_line(F5, 3).udmg)),
        ("dup-q3-g1", build_scheme(duplicated(full_line(F3, 2).udmg, 1))),
        ("dup-q2-g1", build_scheme(duplicated(full_line(F2, 2).udmg, 1))),
    ]
    return schemes


def test_criterion_10_modulation_inequalities(ref_udmg):
    start = time.perf_counter()
    for q in (2, 3, 5):
        for N in range(1, 5):
            audit = gap_audit_exhaustive(Modulator(q, N))
            assert audit.all_passed
            for m, gap in audit.min_gap_by_prefix.items():
                assert gap > Fraction(q ** (N - m - 1), N)
    schemes = _scheme_corpus(ref_udmg)
    for name, scheme in schemes:
        size = scheme.udmg.field.q ** scheme.message_space.dim
        assert size <= 1 << 16
        assert snr(scheme).within, name
    for name in ("reference", "line-q2-K2", "line-q3-K2", "line-q5-K3"):
        scheme = dict(schemes)[name]
        rep = audit_product_distance(scheme)
        assert rep.passed and not rep.vacuous, name
        assert rep.min_product >= rep.floor
        N, L, g = scheme.N, scheme.L, scheme.udmg.g
        assert rep.floor == Fraction(
            scheme.udmg.field.q ** (2 * (L * N - (N + g - 1) - L)), N ** (2 * L))
        assert rep.max_agreement <= N + g - 1
    assert time.perf_counter() - start < 120.0


def test_criterion_11_complexified_doubling(ref_udmg):
    for name, scheme in _scheme_corpus(ref_udmg):
        c = complexify(scheme)
        assert c.snr == 2 * c.base_snr, name
        assert c.rate_symbols == 2 * scheme.rate_symbols, name
