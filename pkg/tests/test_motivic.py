"""chi-normalization, degree shift and the reflected Betti/Hodge tables."""

import pytest

from sheafbetti import (
    F0,
    F1,
    P2,
    DivisorClass,
    InapplicableError,
    chi_agreement,
    hypothesis_report,
    motivic_shift,
    normalize_chi,
    virtual_betti_table,
)

H = DivisorClass.of

STABLE = [1, 0, 2, 0, 6, 0, 13, 0, 29, 0, 57, 0, 113, 0]

# (d, chi) -> chi0, fixed before the implementation existed
PLANE_CHI0 = {
    (8, 1): -7,
    (8, 0): -8,
    (8, -1): -7,
    (8, -3): -11,
    (8, -7): -7,
    (4, -5): -3,
    (7, 1): -6,
}


def _norm(surface, L, chi):
    rep = hypothesis_report(surface, L, chi)
    return normalize_chi(surface, L, chi, rep.support_codim)


def test_plane_normalizations_frozen():
    for (d, chi), chi0 in PLANE_CHI0.items():
        norm = _norm(P2, H(d), chi)
        assert norm.chi0 == chi0, (d, chi)
        assert norm.modulus == d


def test_normalization_window():
    norm = _norm(P2, H(7), 1)
    assert norm.chi0 == -6 and norm.window == 6
    norm = _norm(P2, H(8), -7)
    assert norm.chi0 == -7 and norm.window == 7


def test_candidates_in_range():
    norm = _norm(P2, H(8), -3)
    KL = -24
    assert all(KL <= c < 0 for c in norm.candidates)
    assert all((c - (-3)) % 8 == 0 or (c + (-3)) % 8 == 0 for c in norm.candidates)
    assert norm.chi0 in norm.candidates


def test_shift_identities():
    norm = _norm(P2, H(8), -7)
    shift = motivic_shift(P2, H(8), norm)
    assert shift.colength == 27
    assert shift.exponent == 11
    assert shift.top_degree == 130
    norm = _norm(P2, H(8), 0)
    shift = motivic_shift(P2, H(8), norm)
    assert shift.colength == 28 and shift.exponent == 9
    # 2 m + 4 dtilde = 2 (L^2 + 1) on a mixed grid
    for surface, L, chi in ((P2, H(5), 1), (P2, H(9), -2), (F0, H(3, 4), -1),
                            (F1, H(2, 3), -2), (F1, H(3, 3), -1)):
        norm = _norm(surface, L, chi)
        shift = motivic_shift(surface, L, norm)
        Lsq = surface.self_intersection(L)
        assert 2 * shift.exponent + 4 * shift.colength == 2 * (Lsq + 1)
        assert shift.top_degree == 2 * (Lsq + 1)


def test_virtual_table_d8():
    rv = virtual_betti_table(P2, H(8), -7)
    assert rv.raw_high[130] == 1
    assert rv.raw_high[130 - 2] == 2
    assert [rv.reflected_low[i] for i in range(14)] == STABLE
    assert rv.hodge_diag[0] == 1 and rv.hodge_diag[6] == 113
    assert rv.fine_moduli is True
    assert rv.smoothness_assumed is True


def test_reflection_is_an_involution():
    rv = virtual_betti_table(P2, H(8), -7)
    top = rv.shift.top_degree
    for i, v in rv.raw_high.items():
        assert rv.reflected_low[top - i] == v


def test_odd_degrees_zero():
    for surface, L, chi in ((P2, H(7), 1), (F0, H(3, 4), -1), (F1, H(3, 3), -1)):
        rv = virtual_betti_table(surface, L, chi)
        assert all(v == 0 for i, v in rv.reflected_low.items() if i % 2)


def test_chi0_override_agreement():
    # any candidate chi0 gives the same table on the shared valid window
    ok, diff = chi_agreement(P2, H(8), -1, -7)
    assert ok, diff
    ok, diff = chi_agreement(P2, H(9), -1, -3)
    assert ok, diff
    ok, diff = chi_agreement(P2, H(5), 1, 2)
    assert ok, diff
    assert chi_agreement(P2, H(7), 1, 1) == (True, None)


def test_agreement_in_raw_degrees():
    # d = 8: chi = -7 and -5 normalize differently (chi0 -7 vs -11) but
    # both windows reach 7, so the raw tables coincide on degrees >= 117
    a = virtual_betti_table(P2, H(8), -7)
    b = virtual_betti_table(P2, H(8), -5)
    assert a.normalization.chi0 == -7
    assert b.normalization.chi0 == -11
    assert a.shift.min_controlled_degree == b.shift.min_controlled_degree == 117
    for i in range(117, 131):
        assert a.raw_high[i] == b.raw_high[i], i


def test_chi0_override_validated():
    norm = _norm(P2, H(8), -7)
    assert -17 in norm.candidates
    rv = virtual_betti_table(P2, H(8), -7, chi0=-17)
    assert rv.normalization.chi0 == -17
    with pytest.raises(InapplicableError):
        virtual_betti_table(P2, H(8), -7, chi0=-5)  # not a candidate


def test_window_shrinks_with_chi0():
    # d = 11, chi = -7: the best candidate is -15 (window 10); forcing
    # -7 shrinks the window to 7 without changing the shared values
    base = virtual_betti_table(P2, H(11), -7)
    assert base.normalization.chi0 == -15
    assert base.normalization.window == 10
    moved = virtual_betti_table(P2, H(11), -7, chi0=-7)
    assert moved.normalization.window == 7
    wmax = 2 * moved.normalization.window - 1
    for i in range(wmax + 1):
        assert moved.reflected_low[i] == base.reflected_low[i]


def test_inapplicable_is_refused():
    with pytest.raises(InapplicableError):
        virtual_betti_table(F0, H(2, 0), -1)


def test_ruled_tables_low_degrees():
    # low-degree values equal the ruled Hilbert stable values b_0=1, b_2=3
    rv = virtual_betti_table(F0, H(3, 4), -1)
    assert rv.reflected_low[0] == 1
    assert rv.reflected_low[2] == 3
    rv = virtual_betti_table(F1, H(4, 6), -1)
    assert rv.reflected_low[0] == 1
    assert rv.reflected_low[2] == 3


def test_window_capped_by_support_codim():
    # F_1 (3,3) has support codimension 1: only degrees 0 and 1 are
    # controlled, and asking for degree 2 is a KeyError by design
    rv = virtual_betti_table(F1, H(3, 3), -1)
    assert rv.normalization.window == 1
    assert sorted(rv.reflected_low)[:2] == [0, 1]
    assert rv.reflected_max_degree == 1
    assert 2 not in rv.reflected_low
