"""Betti and Hodge numbers of Hilbert schemes of points.

For a smooth projective surface X with odd cohomology zero and Betti
numbers (1, b2, 1), the Poincare polynomials of the Hilbert schemes
X^[n] of n points are generated by the product

    sum_n P(X^[n], t) z^n =
        prod_{k>=1} (1 - z^k t^(2k-2))^(-1)
                    (1 - z^k t^(2k))^(-b2)
                    (1 - z^k t^(2k+2))^(-1),

expanded exactly over the integers.  Specialising t = 1 gives Euler
numbers via prod (1 - z^k)^(-e(X)).  The Hodge structure is diagonal, so
h^{p,q}(X^[n]) = b_{2p} delta_{p,q}.

The z-truncation needed for X^[n] is n and the t-truncation 4n (the real
dimension of X^[n] is 4n).  Requests are capped (default ``DEFAULT_CAP``,
override per call or with the SHEAFBETTI_HILB_CAP environment variable)
to bound memory; the cap is a resource guard, not a mathematical limit.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from . import powerseries as ps
from .errors import InvariantViolation, SeriesError
from .surfaces import Surface

__all__ = [
    "DEFAULT_CAP",
    "PoincarePolynomial",
    "hilbert_poincare",
    "hilbert_euler",
    "hilbert_hodge_diagonal",
]

DEFAULT_CAP = 64
_ENV_CAP = "SHEAFBETTI_HILB_CAP"


@dataclass(frozen=True)
class PoincarePolynomial:
    """Betti numbers of a single Hilbert scheme, coeffs[i] = b_i."""

    coeffs: tuple[int, ...]
    dim: int  # complex dimension, so len(coeffs) == 2*dim + 1

    def __post_init__(self):
        if len(self.coeffs) != 2 * self.dim + 1:
            raise InvariantViolation(
                f"Poincare vector length {len(self.coeffs)} for dimension {self.dim}"
            )

    def betti(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def euler(self) -> int:
        return sum(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]


def resolve_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(_ENV_CAP)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise SeriesError(f"{_ENV_CAP}={env!r} is not an integer") from None
    return DEFAULT_CAP


# One expanded product per b2, kept at the largest n built so far.  A
# slice z^m of the product built to order n >= m is already exact, so
# smaller requests reuse the cache.  Entries are replaced wholesale,
# which keeps concurrent readers consistent.
_CACHE: dict[int, tuple[int, ps.BiSeries]] = {}


def _product_series(b2: int, n: int) -> ps.BiSeries:
    cached = _CACHE.get(b2)
    if cached is not None and cached[0] >= n:
        return cached[1]
    series = ps.one(n, 4 * n)
    for k in range(1, n + 1):
        series = ps.mul_geometric(series, k, 2 * k - 2, 1)
        series = ps.mul_geometric(series, k, 2 * k, b2)
        series = ps.mul_geometric(series, k, 2 * k + 2, 1)
    _CACHE[b2] = (n, series)
    return series


def hilbert_poincare(surface: Surface, n: int, cap: int | None = None) -> PoincarePolynomial:
    """Poincare polynomial of the Hilbert scheme of n points on the surface."""
    if n < 0:
        raise SeriesError(f"negative point count {n}")
    limit = resolve_cap(cap)
    if n > limit:
        raise SeriesError(
            f"Hilbert scheme of {n} points exceeds the truncation cap {limit}; "
            f"raise it via {_ENV_CAP} or the cap argument"
        )
    if n == 0:
        return PoincarePolynomial((1,), 0)
    b2 = surface.betti[1]
    series = _product_series(b2, n)
    row = ps.coefficient(series, n)
    if any(row[4 * n + 1 :]):
        raise InvariantViolation(f"z^{n} slice exceeds t-degree {4 * n}")
    return PoincarePolynomial(tuple(row[: 4 * n + 1]), 2 * n)


def hilbert_euler(surface: Surface, n: int) -> int:
    """Topological Euler number of the Hilbert scheme of n points.

    Computed from the univariate specialisation prod (1-z^k)^(-e(X));
    always equal to the alternating (here: plain) sum of the Betti
    numbers, which the test suite checks against the bivariate route.
    """
    if n < 0:
        raise SeriesError(f"negative point count {n}")
    e = surface.euler_number
    coeff = [0] * (n + 1)
    coeff[0] = 1
    for k in range(1, n + 1):
        for _ in range(e):
            for i in range(k, n + 1):
                coeff[i] += coeff[i - k]
    return coeff[n]


def hilbert_hodge_diagonal(surface: Surface, n: int, cap: int | None = None) -> dict[int, int]:
    """Diagonal Hodge numbers {p: h^{p,p}} of X^[n]; off-diagonal ones vanish."""
    poly = hilbert_poincare(surface, n, cap)
    return {p: poly.betti(2 * p) for p in range(0, 2 * n + 1)}
