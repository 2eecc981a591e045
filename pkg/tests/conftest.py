"""Shared grids and helpers for the test suite.

The grids are small enough that every brute-force oracle finishes in
seconds, and large enough to cover the published special cases: primes,
twice-primes, perfect powers, pencil classes, boundary classes b = a e.
"""

import pytest

from sheafbetti import F0, F1, P2, DivisorClass


def plane_class(d: int) -> DivisorClass:
    return DivisorClass.of(d)


def ruled_class(a: int, b: int) -> DivisorClass:
    return DivisorClass.of(a, b)


def plane_grid(dmax: int):
    """(surface, L) for all degrees 1..dmax."""
    return [(P2, plane_class(d)) for d in range(1, dmax + 1)]


def ruled_grid(total: int):
    """(surface, L) for all effective nonzero classes with a + b <= total
    on both Hirzebruch surfaces."""
    out = []
    for surface in (F0, F1):
        for a in range(0, total + 1):
            for b in range(0, total + 1 - a):
                if a == b == 0:
                    continue
                out.append((surface, ruled_class(a, b)))
    return out


@pytest.fixture(scope="session")
def small_grid():
    return plane_grid(8) + ruled_grid(6)


@pytest.fixture(scope="session")
def wide_grid():
    return plane_grid(12) + ruled_grid(10)
