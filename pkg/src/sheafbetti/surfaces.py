"""Exact Picard-lattice arithmetic for the plane and Hirzebruch surfaces.

Two families are supported:

* ``P2``, the projective plane.  Picard rank 1 with hyperplane basis H,
  H^2 = 1 and canonical class K = -3H.  Classes are written as a single
  integer d, meaning dH.
* ``F_e`` for e in {0, 1}, the Hirzebruch surface P(O + O(-e)) over P1.
  Picard rank 2 with basis (sigma, f) where sigma is the section with
  sigma^2 = -e, f the fibre with f^2 = 0 and sigma.f = 1.  The canonical
  class is -2 sigma - (e+2) f.  Classes are pairs (a, b) = a sigma + b f.

Everything here is integer arithmetic on coordinates: intersection
numbers, Riemann-Roch Euler characteristics chi(L) = 1 + (L^2 - K.L)/2,
arithmetic genus 1 + (L^2 + K.L)/2, effectivity (the effective cone is
generated by the basis in both families), primitivity, and the question
of whether the linear system |L| contains an integral (reduced and
irreducible) curve.

The construction accepts general e but anything outside {0, 1} raises
``UnsupportedSurfaceError``: the integral-member rules and the downstream
codimension tables are only established in this range, and extrapolating
them silently would be worse than refusing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    EffectivityError,
    LatticeError,
    UnsupportedSurfaceError,
    ZeroClassError,
)

__all__ = [
    "DivisorClass",
    "Surface",
    "P2",
    "F0",
    "F1",
    "projective_plane",
    "hirzebruch",
    "surface_by_name",
]


@dataclass(frozen=True)
class DivisorClass:
    """Integer coordinate vector in the Picard basis of a surface.

    The class is surface-agnostic: pairing, effectivity and so on live on
    ``Surface``, which checks that the coordinate length matches its rank.
    """

    coords: tuple[int, ...]

    def __post_init__(self):
        if not self.coords or not all(isinstance(c, int) for c in self.coords):
            raise LatticeError(f"bad divisor coordinates {self.coords!r}")

    @classmethod
    def of(cls, *coords: int) -> "DivisorClass":
        return cls(tuple(coords))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._match(other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._match(other)
        return DivisorClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coords))

    def __mul__(self, n: int) -> "DivisorClass":
        if not isinstance(n, int):
            return NotImplemented
        return DivisorClass(tuple(n * a for a in self.coords))

    __rmul__ = __mul__

    def _match(self, other: "DivisorClass") -> None:
        if len(self.coords) != len(other.coords):
            raise LatticeError(
                f"rank mismatch: {self.coords} versus {other.coords}"
            )

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)


@dataclass(frozen=True)
class Surface:
    """A supported rational surface together with its lattice data.

    ``kind`` is "p2" or "fe"; ``e`` is the Hirzebruch parameter and is 0
    for the plane.  Use the module constants ``P2``, ``F0``, ``F1`` or the
    factories below rather than constructing directly.
    """

    kind: str
    e: int = 0

    def __post_init__(self):
        if self.kind == "p2":
            if self.e != 0:
                raise UnsupportedSurfaceError("the plane carries no parameter e")
        elif self.kind == "fe":
            if self.e not in (0, 1):
                raise UnsupportedSurfaceError(
                    f"unsupported surface F_{self.e}: only e in {{0, 1}} is implemented"
                )
        else:
            raise UnsupportedSurfaceError(f"unknown surface kind {self.kind!r}")

    # -- basic lattice data ------------------------------------------------

    @property
    def name(self) -> str:
        return "p2" if self.kind == "p2" else f"f{self.e}"

    @property
    def picard_rank(self) -> int:
        return 1 if self.kind == "p2" else 2

    @property
    def betti(self) -> tuple[int, int, int]:
        """(b0, b2, b4) of the surface; odd Betti numbers vanish."""
        return (1, self.picard_rank, 1)

    @property
    def euler_number(self) -> int:
        return sum(self.betti)

    @property
    def canonical(self) -> DivisorClass:
        if self.kind == "p2":
            return DivisorClass.of(-3)
        return DivisorClass.of(-2, -(self.e + 2))

    def basis(self) -> tuple[DivisorClass, ...]:
        """Picard basis: (H,) on the plane, (sigma, f) on F_e."""
        if self.kind == "p2":
            return (DivisorClass.of(1),)
        return (DivisorClass.of(1, 0), DivisorClass.of(0, 1))

    def check(self, L: DivisorClass) -> DivisorClass:
        if len(L.coords) != self.picard_rank:
            raise LatticeError(
                f"class {L} has {len(L.coords)} coordinates, "
                f"surface {self.name} has rank {self.picard_rank}"
            )
        return L

    # -- intersection theory ----------------------------------------------

    def intersect(self, L1: DivisorClass, L2: DivisorClass) -> int:
        """Intersection number L1.L2."""
        self.check(L1)
        self.check(L2)
        if self.kind == "p2":
            return L1.coords[0] * L2.coords[0]
        a1, b1 = L1.coords
        a2, b2 = L2.coords
        return -self.e * a1 * a2 + a1 * b2 + a2 * b1

    def self_intersection(self, L: DivisorClass) -> int:
        return self.intersect(L, L)

    def euler_char(self, L: DivisorClass) -> int:
        """Riemann-Roch: chi(L) = 1 + (L^2 - K.L)/2, an integer by adjunction."""
        num = self.self_intersection(L) - self.intersect(self.canonical, L)
        if num % 2:
            raise LatticeError(f"parity failure in chi({L}); lattice data corrupt")
        return 1 + num // 2

    def genus(self, L: DivisorClass) -> int:
        """Arithmetic genus 1 + (L^2 + K.L)/2 of curves in |L|."""
        num = self.self_intersection(L) + self.intersect(self.canonical, L)
        if num % 2:
            raise LatticeError(f"parity failure in genus({L})")
        return 1 + num // 2

    def h0(self, L: DivisorClass) -> int:
        """Sections of O(L) in this model: chi(L) for effective L, else 0.

        On these surfaces every effective class is K-negative, so higher
        cohomology of effective line bundles vanishes and h^0 = chi.
        """
        return self.euler_char(L) if self.is_effective(L) else 0

    # -- cone and order ----------------------------------------------------

    def is_effective(self, L: DivisorClass) -> bool:
        """Membership in the effective cone (generated by the basis)."""
        self.check(L)
        return all(c >= 0 for c in L.coords)

    def leq(self, L1: DivisorClass, L2: DivisorClass) -> bool:
        """Partial order: L1 <= L2 iff L2 - L1 is effective."""
        return self.is_effective(L2 - L1)

    def sub_effective_classes(self, L: DivisorClass) -> list[DivisorClass]:
        """All L' with 0 < L' <= L, in ascending lexicographic order.

        Includes L itself.  Requires L effective.
        """
        if not self.is_effective(L):
            raise EffectivityError(f"{L} is not effective on {self.name}")
        if self.kind == "p2":
            return [DivisorClass.of(d) for d in range(1, L.coords[0] + 1)]
        a, b = L.coords
        out = [
            DivisorClass.of(x, y)
            for x in range(a + 1)
            for y in range(b + 1)
            if (x, y) != (0, 0)
        ]
        return out

    # -- multiplicity ------------------------------------------------------

    def primitive_part(self, L: DivisorClass) -> tuple[int, DivisorClass]:
        """Write L = n L' with L' primitive; returns (n, L')."""
        self.check(L)
        if L.is_zero:
            raise ZeroClassError("the zero class has no primitive part")
        n = math.gcd(*(abs(c) for c in L.coords))
        return n, DivisorClass(tuple(c // n for c in L.coords))

    def is_primitive(self, L: DivisorClass) -> bool:
        return self.primitive_part(L)[0] == 1

    # -- geometry flags ----------------------------------------------------

    def has_integral_member(self, L: DivisorClass) -> bool:
        """Does |L| contain an integral (reduced irreducible) curve?

        Plane: any d >= 1 works (a smooth plane curve of degree d).

        F_e: the fibre class (0, 1) and the section classes (1, b), b >= 0,
        are integral; (0, b) with b >= 2 moves only in unions of fibres;
        for a >= 2 an integral member exists iff b >= a e (otherwise
        sigma.L < 0 forces sigma as a component of every member), plus
        b >= 1 when e = 0 (on P1 x P1 the class (a, 0) moves only in
        unions of rulings).
        """
        self.check(L)
        if not self.is_effective(L) or L.is_zero:
            return False
        if self.kind == "p2":
            return L.coords[0] >= 1
        a, b = L.coords
        if a == 0:
            return b == 1
        if a == 1:
            return True
        return b >= a * self.e and b >= 1

    def all_members_integral(self, L: DivisorClass) -> bool:
        """True when every divisor in |L| is integral.

        Only the ruling pencils qualify: |f| on F_e, and additionally
        |sigma| on F_0, plus |H| on the plane.  Used to recognise classes
        whose non-integral locus is empty.
        """
        self.check(L)
        if self.kind == "p2":
            return L.coords == (1,)
        a, b = L.coords
        return (a, b) == (0, 1) or (self.e == 0 and (a, b) == (1, 0))

    def is_canonical_negative(self, L: DivisorClass) -> bool:
        """K-negativity: K.L' < 0 for every 0 < L' <= L."""
        K = self.canonical
        return all(
            self.intersect(K, Lp) < 0 for Lp in self.sub_effective_classes(L)
        )

    def format_class(self, L: DivisorClass) -> str:
        self.check(L)
        if self.kind == "p2":
            return f"{L.coords[0]}H"
        a, b = L.coords
        sign = "-" if b < 0 else "+"
        return f"{a}s{sign}{abs(b)}f"


P2 = Surface("p2")
F0 = Surface("fe", 0)
F1 = Surface("fe", 1)

_BY_NAME = {"p2": P2, "f0": F0, "f1": F1}


def projective_plane() -> Surface:
    return P2


def hirzebruch(e: int) -> Surface:
    return Surface("fe", e)


def surface_by_name(name: str) -> Surface:
    try:
        return _BY_NAME[name.lower()]
    except KeyError:
        raise UnsupportedSurfaceError(
            f"unknown surface {name!r}: expected one of p2, f0, f1"
        ) from None
