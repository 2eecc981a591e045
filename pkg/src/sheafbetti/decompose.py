"""Decompositions of a divisor class and the minimal cross term.

A decomposition of an effective class L is a multiset {L_1, ..., L_r},
r >= 2, of effective nonzero classes with sum L.  The quantity minimised
here is the cross term of the expansion of L^2,

    sum_{i<j} L_i . L_j  =  (L^2 - sum_k L_k^2) / 2,

whose minimum over all decompositions controls the codimension of the
locus of decomposable support curves.  Classes admitting no decomposition
at all (the primitive cone generators) get the value ``INFINITE``, which
is absorbing in every downstream minimum.

Enumeration is exhaustive but canonical: parts are emitted in descending
lexicographic order, so each multiset appears exactly once, and each part
leaves an effective remainder, which bounds the recursion depth by the
coordinate sum of L.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import EffectivityError, InvariantViolation, ZeroClassError
from .surfaces import DivisorClass, Surface

__all__ = [
    "INFINITE",
    "CrossTermMin",
    "decompositions",
    "cross_term",
    "min_cross_term",
    "min_cross_term_integral",
    "cross_term_positive",
]

INFINITE = float("inf")

Parts = tuple[DivisorClass, ...]


@dataclass(frozen=True)
class CrossTermMin:
    """Minimal cross term together with one optimal decomposition.

    ``value`` is an integer, or ``INFINITE`` when no decomposition exists
    (then ``witness`` is None).  The witness is the first optimum in
    canonical enumeration order, so reports are deterministic.
    """

    value: int | float
    witness: Parts | None

    @property
    def is_infinite(self) -> bool:
        return self.value == INFINITE

    def json_value(self) -> int | str:
        return "infinite" if self.is_infinite else int(self.value)


def _parts_descending(
    surface: Surface, box: DivisorClass, bound: tuple[int, ...]
) -> Iterator[DivisorClass]:
    # nonzero effective p <= box componentwise, p <= bound lexicographically,
    # yielded in descending lexicographic order
    if surface.kind == "p2":
        top = min(box.coords[0], bound[0])
        for d in range(top, 0, -1):
            yield DivisorClass.of(d)
        return
    amax, bmax = box.coords
    for a in range(min(amax, bound[0]), -1, -1):
        btop = bmax if a < bound[0] else min(bmax, bound[1])
        for b in range(btop, -1, -1):
            if (a, b) != (0, 0):
                yield DivisorClass.of(a, b)


def decompositions(
    surface: Surface,
    L: DivisorClass,
    parts_filter: Callable[[DivisorClass], bool] | None = None,
) -> Iterator[Parts]:
    """Stream every decomposition of L exactly once.

    Parts come sorted in descending lexicographic order.  An optional
    ``parts_filter`` prunes each candidate part during the recursion; only
    decompositions all of whose parts pass the filter are emitted.
    """
    if L.is_zero:
        raise ZeroClassError("cannot decompose the zero class")
    if not surface.is_effective(L):
        raise EffectivityError(f"{L} is not effective on {surface.name}")

    def rec(remaining: DivisorClass, bound: tuple[int, ...], acc: list[DivisorClass]):
        if remaining.is_zero:
            if len(acc) >= 2:
                yield tuple(acc)
            return
        for p in _parts_descending(surface, remaining, bound):
            if parts_filter is not None and not parts_filter(p):
                continue
            acc.append(p)
            yield from rec(remaining - p, p.coords, acc)
            acc.pop()

    yield from rec(L, L.coords, [])


def cross_term(surface: Surface, parts: Parts) -> int:
    """sum_{i<j} L_i . L_j, checked against (L^2 - sum L_k^2)/2."""
    total = sum(parts[1:], parts[0])
    direct = 0
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            direct += surface.intersect(parts[i], parts[j])
    via_squares = surface.self_intersection(total) - sum(
        surface.self_intersection(p) for p in parts
    )
    if via_squares != 2 * direct:
        raise InvariantViolation(
            f"cross-term identity failed on {tuple(map(str, parts))}: "
            f"{direct} versus {via_squares}/2"
        )
    return direct


def min_cross_term(
    surface: Surface,
    L: DivisorClass,
    parts_filter: Callable[[DivisorClass], bool] | None = None,
) -> CrossTermMin:
    """Minimise the cross term over all decompositions of L."""
    best: int | float = INFINITE
    witness: Parts | None = None
    for parts in decompositions(surface, L, parts_filter):
        value = cross_term(surface, parts)
        if value < best:
            best, witness = value, parts
    return CrossTermMin(best, witness)


def min_cross_term_integral(surface: Surface, L: DivisorClass) -> CrossTermMin:
    """Minimal cross term over decompositions into integral-member parts.

    On the supported surfaces h^0 = chi on every effective class with an
    integral member, and under that hypothesis restricting the parts does
    not change the minimum: a part without integral members can be split
    further without lowering the sum of squares.  The equality is asserted
    here; a mismatch would mean the lattice model is wrong.
    """
    restricted = min_cross_term(surface, L, surface.has_integral_member)
    unrestricted = min_cross_term(surface, L)
    if restricted.value != unrestricted.value:
        raise InvariantViolation(
            f"restricted minimum {restricted.value} differs from "
            f"unrestricted {unrestricted.value} for {L} on {surface.name}"
        )
    return restricted


def cross_term_positive(surface: Surface, L: DivisorClass) -> bool:
    """Is the minimal cross term positive?

    Requires |L| to contain an integral member; on the supported surfaces
    the answer is then always True, and a False return indicates a model
    bug rather than an interesting input.
    """
    if not surface.has_integral_member(L):
        raise EffectivityError(
            f"positivity check needs an integral member in |{L}| on {surface.name}"
        )
    return min_cross_term(surface, L).value > 0
