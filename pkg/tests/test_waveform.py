from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from udmg.codes import duplicated
from udmg.core import Udmg
from udmg.curves import INFINITY, genus0_udmg
from udmg.errors import EqualInputsError, HypothesisUnmetError, NotSquareError
from udmg.fields import make_field
from udmg.linalg import FqMatrix
from udmg.waveform import (
    Modulator,
    audit_product_distance,
    build_scheme,
    complexify,
    gap_audit_exhaustive,
    gap_check,
    modulation_bounds,
    mu0,
    mu0_scaled,
    snr,
)

F2, F3, F5 = make_field(2), make_field(3), make_field(5)


def test_weights_worked_out():
    assert Modulator(5, 1).weights == (Fraction(2),)
    # hand evaluation of the weight formula at q = 2, N = 2
    assert Modulator(2, 2).weights == (Fraction(7, 4), Fraction(3, 2))
    w = Modulator(5, 3).weights
    assert w == (Fraction(28, 15), Fraction(8, 5), Fraction(4, 3))


def test_weight_bounds_exhaustive():
    for q in range(2, 10):
        for N in range(1, 9):
            assert all(1 <= w <= 2 for w in Modulator(q, N).weights)


def test_mu0_values():
    assert mu0(Modulator(5, 1), (2,)) == 0  # centered symbol, odd q
    assert mu0(Modulator(5, 1), (3,)) == 2
    # hand evaluation: (1 - 1/2)*2*(7/4) + (1 - 1/2)*(3/2)
    assert mu0(Modulator(2, 2), (1, 1)) == Fraction(5, 2)


def test_mu0_scaled_agrees():
    for q, N in [(2, 3), (3, 2), (5, 2)]:
        mod = Modulator(q, N)
        for a in product(range(q), repeat=N):
            assert Fraction(mu0_scaled(mod, a), 2 * q * N) == mu0(mod, a)


def test_pam_symmetry():
    for q, N in [(2, 3), (3, 2), (5, 2)]:
        mod = Modulator(q, N)
        for a in product(range(q), repeat=N):
            flipped = tuple(q - 1 - x for x in a)
            assert mu0(mod, flipped) == -mu0(mod, a)


def test_gap_check_extremal_pattern():
    mod = Modulator(5, 3)
    res = gap_check(mod, (1, 0, 0), (0, 4, 4))
    assert res.agreement == 0
    assert res.floor == Fraction(25, 3)
    assert res.gap == Fraction(28, 3)  # the minimized difference 1 + q^(N-1)/N
    assert res.passed


def test_gap_check_last_symbol():
    mod = Modulator(5, 3)
    res = gap_check(mod, (1, 2, 3), (1, 2, 4))
    assert res.agreement == 2
    assert res.floor == Fraction(1, 3)
    assert res.passed


def test_gap_check_equal_inputs():
    with pytest.raises(EqualInputsError):
        gap_check(Modulator(2, 2), (0, 1), (0, 1))


@given(st.integers(2, 7), st.integers(1, 5), st.data())
@settings(max_examples=200, deadline=None)
def test_gap_check_property(q, N, data):
    mod = Modulator(q, N)
    a = tuple(data.draw(st.integers(0, q - 1)) for _ in range(N))
    b = tuple(data.draw(st.integers(0, q - 1)) for _ in range(N))
    if a == b:
        return
    res = gap_check(mod, a, b)
    assert res.passed
    assert res.gap == abs(mu0(mod, a) - mu0(mod, b))


@pytest.mark.parametrize("q,N", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_gap_audit_exhaustive(q, N):
    audit = gap_audit_exhaustive(Modulator(q, N))
    assert audit.all_passed
    assert audit.pairs_checked == q ** N * (q ** N - 1) // 2
    # the proof's minimizer is exact: min gap at prefix m is 1 + q^(N-m-1)/N
    for m, gap in audit.min_gap_by_prefix.items():
        assert gap == 1 + Fraction(q ** (N - m - 1), N)


def scheme_f2():
    return build_scheme(genus0_udmg(F2, [0, 1, INFINITY], 2).udmg)


def test_build_scheme_genus0():
    s = scheme_f2()
    assert s.delta == 0 and s.rate_symbols == 2
    assert all(k.dim == 0 for k in s.kernels)
    assert len(s.messages()) == 4


def test_build_scheme_reference(ref_udmg):
    s = build_scheme(ref_udmg)
    assert s.delta <= ref_udmg.g * ref_udmg.L
    assert s.delta == 0  # every member is invertible here
    assert s.rate_symbols == 3


def test_build_scheme_rejections(ref_udmg):
    wide = Udmg(F2, 2, 0, (FqMatrix.from_rows(F2, [(1, 0, 1), (0, 1, 1)]),))
    with pytest.raises(NotSquareError):
        build_scheme(wide)
    dup = duplicated(genus0_udmg(F2, [0, 1, INFINITY], 2).udmg, 2)
    with pytest.raises(HypothesisUnmetError):
        build_scheme(dup)  # N - g = 0 kills the rate hypothesis


def test_snr_single_channel_identity():
    u = Udmg(F5, 1, 0, (FqMatrix.identity(F5, 1),))
    s = build_scheme(u)
    rep = snr(s)
    assert rep.snr == 8  # (16+4+0+4+16)/5
    assert rep.within
    c = complexify(s)
    assert c.snr == 16 and c.rate_symbols == 2


def test_modulation_bounds_parity():
    odd = modulation_bounds(5, 1, 9)
    assert odd.alpha == Fraction(9, 6 * 5 ** 20)
    assert odd.beta == 9 * 5 ** 9
    even = modulation_bounds(2, 1, 3)
    assert even.alpha == Fraction(3, 2 * 2 ** 7)
    assert even.beta == 3 * 2 ** 3


def test_snr_schemes_within_bounds(ref_udmg):
    for scheme in [scheme_f2(),
                   build_scheme(genus0_udmg(F3, [0, 1, 2, INFINITY], 2).udmg),
                   build_scheme(ref_udmg)]:
        rep = snr(scheme)
        assert rep.snr > 0
        assert rep.within


def test_audit_genus0_exhaustive():
    rep = audit_product_distance(scheme_f2())
    assert rep.pairs_checked == 6
    assert rep.passed and not rep.vacuous
    assert rep.max_agreement <= 1  # N + g - 1


def test_audit_duplication_scheme():
    dup = duplicated(genus0_udmg(F3, [0, 1, 2, INFINITY], 2).udmg, 1)
    rep = audit_product_distance(build_scheme(dup))
    assert rep.passed
    assert rep.max_agreement <= 2


def test_audit_degenerate_single_message():
    # rank-1 members whose left kernels jointly fill the plane: one message
    m1 = FqMatrix.from_rows(F2, [(1, 0), (0, 0)])
    m2 = FqMatrix.from_rows(F2, [(0, 0), (1, 0)])
    s = build_scheme(Udmg(F2, 2, 1, (m1, m2)))
    assert s.delta == 2 and len(s.messages()) == 1
    rep = audit_product_distance(s)
    assert rep.vacuous and rep.passed and rep.pairs_checked == 0


def test_complexify_doubles_all(ref_udmg):
    for scheme in [scheme_f2(), build_scheme(ref_udmg)]:
        c = complexify(scheme)
        assert c.snr == 2 * c.base_snr
        assert c.rate_symbols == 2 * scheme.rate_symbols
        assert c.message_count == len(scheme.messages()) ** 2
