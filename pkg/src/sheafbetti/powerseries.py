"""Truncated bivariate power series over the integers.

Series live in Z[[z, t]] truncated at fixed orders (trunc_z, trunc_t) and
are stored as one dense integer row per z-degree, so coefficients stay
exact Python integers at any size.  The only operations needed upstream
are ring arithmetic and multiplication by geometric factors

    (1 - z^k t^u)^(-c),

implemented as c forward passes of the running-sum recurrence
B[n] = A[n] + B[n - k] t^u, which is exact under truncation.

Instances are treated as immutable after construction: every public
operation returns a fresh series.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SeriesError

__all__ = ["BiSeries", "one", "monomial", "add", "mul", "mul_geometric", "coefficient"]


@dataclass
class BiSeries:
    trunc_z: int
    trunc_t: int
    slices: list[list[int]]  # slices[n][j] = coefficient of z^n t^j

    def copy(self) -> "BiSeries":
        return BiSeries(self.trunc_z, self.trunc_t, [row[:] for row in self.slices])

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (
            self.trunc_z == other.trunc_z
            and self.trunc_t == other.trunc_t
            and self.slices == other.slices
        )


def _check_trunc(tz: int, tt: int) -> None:
    if tz < 0 or tt < 0:
        raise SeriesError(f"negative truncation order ({tz}, {tt})")


def one(trunc_z: int, trunc_t: int) -> BiSeries:
    """The multiplicative unit at the given truncation orders."""
    _check_trunc(trunc_z, trunc_t)
    slices = [[0] * (trunc_t + 1) for _ in range(trunc_z + 1)]
    slices[0][0] = 1
    return BiSeries(trunc_z, trunc_t, slices)


def monomial(trunc_z: int, trunc_t: int, zk: int, tj: int, c: int = 1) -> BiSeries:
    """c * z^zk * t^tj, mostly a convenience for tests."""
    _check_trunc(trunc_z, trunc_t)
    if not (0 <= zk <= trunc_z and 0 <= tj <= trunc_t):
        raise SeriesError(f"monomial z^{zk} t^{tj} outside truncation")
    s = one(trunc_z, trunc_t)
    s.slices[0][0] = 0
    s.slices[zk][tj] = c
    return s


def _same_trunc(A: BiSeries, B: BiSeries) -> None:
    if A.trunc_z != B.trunc_z or A.trunc_t != B.trunc_t:
        raise SeriesError(
            f"truncation mismatch: ({A.trunc_z},{A.trunc_t}) versus "
            f"({B.trunc_z},{B.trunc_t})"
        )


def add(A: BiSeries, B: BiSeries) -> BiSeries:
    _same_trunc(A, B)
    return BiSeries(
        A.trunc_z,
        A.trunc_t,
        [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(A.slices, B.slices)],
    )


def mul(A: BiSeries, B: BiSeries) -> BiSeries:
    """Full truncated product; quadratic, fine for the small test series."""
    _same_trunc(A, B)
    tz, tt = A.trunc_z, A.trunc_t
    out = [[0] * (tt + 1) for _ in range(tz + 1)]
    for za, rowa in enumerate(A.slices):
        for ta, ca in enumerate(rowa):
            if ca == 0:
                continue
            for zb in range(tz - za + 1):
                rowb = B.slices[zb]
                orow = out[za + zb]
                for tb in range(tt - ta + 1):
                    cb = rowb[tb]
                    if cb:
                        orow[ta + tb] += ca * cb
    return BiSeries(tz, tt, out)


def mul_geometric(A: BiSeries, k: int, u: int, c: int = 1) -> BiSeries:
    """Multiply by (1 - z^k t^u)^(-c) exactly under truncation.

    Preconditions: k >= 1, u >= 0, c >= 1.
    """
    if k < 1 or u < 0 or c < 1:
        raise SeriesError(f"bad geometric factor (k={k}, u={u}, c={c})")
    out = A.copy()
    tz, tt = out.trunc_z, out.trunc_t
    for _ in range(c):
        for n in range(k, tz + 1):
            prev = out.slices[n - k]
            row = out.slices[n]
            for j in range(u, tt + 1):
                row[j] += prev[j - u]
    return out


def coefficient(A: BiSeries, zk: int) -> list[int]:
    """The z^zk slice as a t-coefficient vector (a copy)."""
    if not (0 <= zk <= A.trunc_z):
        raise SeriesError(f"z^{zk} outside truncation order {A.trunc_z}")
    return A.slices[zk][:]
