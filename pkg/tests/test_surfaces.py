"""Lattice arithmetic: pairings, Euler characteristics, genus, cones."""

import pytest

from sheafbetti import (
    F0,
    F1,
    P2,
    DivisorClass,
    LatticeError,
    Surface,
    UnsupportedSurfaceError,
    hirzebruch,
    surface_by_name,
)

H = DivisorClass.of


def test_surface_identities():
    assert P2.name == "p2" and P2.picard_rank == 1
    assert F0.name == "f0" and F1.name == "f1"
    assert F0.picard_rank == F1.picard_rank == 2
    assert P2.euler_number == 3
    assert F0.euler_number == F1.euler_number == 4
    assert P2.betti == (1, 1, 1)
    assert F0.betti == (1, 2, 1)


def test_unsupported_surface():
    with pytest.raises(UnsupportedSurfaceError):
        hirzebruch(2)
    with pytest.raises(UnsupportedSurfaceError):
        Surface("fe", -1)
    with pytest.raises(UnsupportedSurfaceError):
        surface_by_name("f2")


def test_dimension_mismatch():
    with pytest.raises(LatticeError):
        P2.intersect(H(1, 2), H(1))
    with pytest.raises(LatticeError):
        F0.self_intersection(H(3))


def test_plane_pairing():
    assert P2.intersect(H(2), H(3)) == 6
    assert P2.self_intersection(H(8)) == 64
    assert P2.canonical == H(-3)


def test_ruled_pairing():
    # sigma^2 = -e, sigma.f = 1, f^2 = 0
    sigma, f = H(1, 0), H(0, 1)
    for surface in (F0, F1):
        assert surface.self_intersection(sigma) == -surface.e
        assert surface.intersect(sigma, f) == 1
        assert surface.self_intersection(f) == 0
        assert surface.canonical == H(-2, -(surface.e + 2))
    assert F1.self_intersection(H(2, 3)) == -4 + 12
    assert F0.self_intersection(H(2, 3)) == 12
    assert F0.intersect(H(1, 2), H(3, 1)) == 7


def test_pairing_bilinear_symmetric():
    classes = [H(1, 0), H(0, 1), H(2, 3), H(-1, 4)]
    for surface in (F0, F1):
        for A in classes:
            for B in classes:
                assert surface.intersect(A, B) == surface.intersect(B, A)
                assert surface.intersect(A + B, A) == (
                    surface.self_intersection(A) + surface.intersect(B, A)
                )


def test_euler_char_plane():
    # chi(dH) = d(d+3)/2 + 1
    for d in range(0, 12):
        assert P2.euler_char(H(d)) == d * (d + 3) // 2 + 1
    assert P2.euler_char(H(8)) == 45
    assert F1.euler_char(H(1, 1)) == 3


def test_euler_char_serre_symmetry():
    # chi(L) = chi(K - L) for the canonical pairing form
    for surface, mk in ((P2, lambda: [H(d) for d in range(-3, 7)]),
                        (F0, lambda: [H(a, b) for a in range(-2, 5) for b in range(-2, 5)]),
                        (F1, lambda: [H(a, b) for a in range(-2, 5) for b in range(-2, 5)])):
        K = surface.canonical
        for L in mk():
            assert surface.euler_char(L) == surface.euler_char(K - L)


def test_genus():
    assert P2.genus(H(1)) == 0
    assert P2.genus(H(3)) == 1
    assert P2.genus(H(4)) == 3
    assert P2.genus(H(8)) == 21
    assert F0.genus(H(0, 1)) == 0
    assert F1.genus(H(0, 1)) == 0
    assert F0.genus(H(1, 1)) == 0
    assert F0.genus(H(2, 3)) == 2
    assert F1.genus(H(1, 1)) == 0
    assert F1.genus(H(2, 2)) == 0
    # adjunction consistency: chi(L) = h0 model and g = 1 + (L^2 + K.L)/2
    for surface in (P2, F0, F1):
        K = surface.canonical
        for _, L in [(0, H(*c)) for c in ([(4,)] if surface is P2 else [(3, 4)])]:
            lhs = surface.genus(L)
            assert lhs == 1 + (surface.self_intersection(L) + surface.intersect(K, L)) // 2


def test_effective_cone():
    assert P2.is_effective(H(0)) and P2.is_effective(H(5))
    assert not P2.is_effective(H(-1))
    for surface in (F0, F1):
        assert surface.is_effective(H(0, 0))
        assert surface.is_effective(H(2, 0)) and surface.is_effective(H(0, 2))
        assert not surface.is_effective(H(-1, 3))
        assert not surface.is_effective(H(3, -1))


def test_sub_effective_classes():
    subs = list(P2.sub_effective_classes(H(3)))
    assert subs == [H(1), H(2), H(3)]
    subs = set(F1.sub_effective_classes(H(1, 1)))
    assert subs == {H(0, 1), H(1, 0), H(1, 1)}
    subs = set(F1.sub_effective_classes(H(2, 1)))
    assert subs == {H(0, 1), H(1, 0), H(1, 1), H(2, 0), H(2, 1)}


def test_primitive_part():
    assert P2.primitive_part(H(8)) == (8, H(1))
    assert P2.primitive_part(H(7)) == (7, H(1))
    assert F0.primitive_part(H(4, 6)) == (2, H(2, 3))
    assert F1.primitive_part(H(3, 3)) == (3, H(1, 1))
    assert F1.primitive_part(H(0, 5)) == (5, H(0, 1))
    assert P2.is_primitive(H(1)) and not P2.is_primitive(H(6))


def test_integral_member_criterion():
    assert not P2.has_integral_member(H(0))
    assert all(P2.has_integral_member(H(d)) for d in range(1, 10))
    # F_e: the pencils, the (1, b) family, and a >= 2 with b >= ae, b >= 1
    assert F0.has_integral_member(H(0, 1))
    assert F0.has_integral_member(H(1, 0))  # second ruling on F_0
    assert F1.has_integral_member(H(0, 1))
    assert F1.has_integral_member(H(1, 0))  # the section sigma itself
    assert F1.has_integral_member(H(1, 5))
    assert F1.has_integral_member(H(2, 2))
    assert F1.has_integral_member(H(2, 3))
    assert F1.is_primitive(H(2, 5))
    assert not F1.has_integral_member(H(2, 1))  # b < ae
    assert not F0.has_integral_member(H(2, 0))  # b = 0, a >= 2
    assert not F0.has_integral_member(H(0, 2))  # multiple of the fibre
    assert F0.has_integral_member(H(2, 2))


def test_all_members_integral():
    assert P2.all_members_integral(H(1))
    assert not P2.all_members_integral(H(2))
    assert F0.all_members_integral(H(0, 1))
    assert F0.all_members_integral(H(1, 0))
    assert F1.all_members_integral(H(0, 1))
    assert not F1.all_members_integral(H(1, 0))  # |sigma| is a point, not a pencil
    assert not F0.all_members_integral(H(1, 1))


def test_canonical_negative():
    assert P2.is_canonical_negative(H(5))
    assert F0.is_canonical_negative(H(3, 4))
    assert F1.is_canonical_negative(H(3, 3))
    # every effective nonzero class on these three surfaces qualifies
    for surface in (F0, F1):
        for a in range(0, 5):
            for b in range(0, 5):
                if a == b == 0:
                    continue
                assert surface.is_canonical_negative(H(a, b))


def test_h0_model():
    assert P2.h0(H(2)) == 6
    assert P2.h0(H(-1)) == 0
    assert F0.h0(H(1, 1)) == 4
    assert F1.h0(H(0, 1)) == 2


def test_format_and_parse():
    assert P2.format_class(H(8)) == "8H"
    assert F0.format_class(H(2, 3)) == "2s+3f"
    assert F1.format_class(H(0, -1)) == "0s-1f"
    assert str(H(2, 3)) == "2,3"


def test_divisor_arithmetic():
    assert H(1, 2) + H(3, 4) == H(4, 6)
    assert H(3, 4) - H(1, 2) == H(2, 2)
    assert 3 * H(1, 2) == H(3, 6) == H(1, 2) * 3
    assert -H(1, -2) == H(-1, 2)
    assert H(0, 0).is_zero and not H(0, 1).is_zero
