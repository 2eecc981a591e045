"""Virtual Betti and Hodge tables of the moduli spaces M(L, chi).

Within its window of validity the motivic class of M(L, chi) agrees with
a Tate shift of that of a Hilbert scheme of points, which turns into
integer statements about Betti numbers:

    b^v_i(M) = b_{i - 2 m}(X^[dtilde])   for even i >= the minimal
                                         controlled degree, odd i give 0,

with the colength dtilde = L.(L+K)/2 - chi0, the shift exponent
m = -K.L + 1 + 2 chi0, and the normalised chi0 chosen in [K.L, 0) among
residues +-chi mod the divisibility of L (the gcd of its pairings with
the Picard basis).  The window is controlled through

    window = min(support_codim, -chi0, chi0 - K.L),

degrees i >= 1 + 2 (L^2 + 1 - window) are valid, and the top degree is
2 (L^2 + 1) = 2 m + 4 dtilde (an identity that is asserted on every
run).  Reflecting the valid high degrees through the middle yields a
low-degree table, which equals the actual Betti numbers when M is smooth
projective; the ``smoothness_assumed`` flag records whether the
fine-moduli criterion justifies that reading.  Degrees below the window
are uncontrolled, never zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InapplicableError, InvariantViolation
from .hilbert import hilbert_poincare
from .hypotheses import HypothesisReport, hypothesis_report, require_applicable
from .surfaces import DivisorClass, Surface

__all__ = [
    "ChiNormalization",
    "MotivicShift",
    "VirtualBettiReport",
    "normalize_chi",
    "motivic_shift",
    "virtual_betti_table",
    "chi_agreement",
]


@dataclass(frozen=True)
class ChiNormalization:
    """Choice of chi0 equivalent to the input chi.

    ``candidates`` lists every chi' in [K.L, 0) with chi' = +-chi modulo
    the divisibility of L, ascending.  ``chi0`` is the candidate with the
    largest window, ties broken towards the largest chi0, so the choice
    is deterministic.
    """

    chi: int
    modulus: int
    candidates: tuple[int, ...]
    chi0: int
    window: int


@dataclass(frozen=True)
class MotivicShift:
    colength: int  # dtilde, points on the Hilbert-scheme side
    exponent: int  # m, the Tate/Betti degree shift is 2m
    top_degree: int  # 2(L^2 + 1)
    controlled_codim: int  # L^2 + 1 - window
    min_controlled_degree: int  # 1 + 2 * controlled_codim


def normalize_chi(
    surface: Surface, L: DivisorClass, chi: int, support_codim: int
) -> ChiNormalization:
    """Pick the window-maximising representative chi0 of +-chi."""
    KL = surface.intersect(surface.canonical, L)
    if KL >= 0:
        raise InapplicableError("normalize_chi", f"K.L = {KL} is not negative")
    modulus = math.gcd(*(abs(surface.intersect(L, B)) for B in surface.basis()))
    if modulus == 0:
        raise InapplicableError("normalize_chi", "zero class has no normalisation")
    candidates = tuple(
        c for c in range(KL, 0) if (c - chi) % modulus == 0 or (c + chi) % modulus == 0
    )
    if not candidates:
        raise InapplicableError(
            "normalize_chi",
            f"no residue of +-{chi} mod {modulus} lies in [{KL}, 0)",
        )

    def window(c: int) -> int:
        return min(support_codim, -c, c - KL)

    chi0 = max(candidates, key=lambda c: (window(c), c))
    return ChiNormalization(chi, modulus, candidates, chi0, window(chi0))


def motivic_shift(surface: Surface, L: DivisorClass, norm: ChiNormalization) -> MotivicShift:
    KL = surface.intersect(surface.canonical, L)
    Lsq = surface.self_intersection(L)
    half = surface.intersect(L, L + surface.canonical)
    if half % 2:
        raise InvariantViolation(f"odd L.(L+K) = {half} for {L}")
    colength = half // 2 - norm.chi0
    exponent = -KL + 1 + 2 * norm.chi0
    top = 2 * (Lsq + 1)
    if 2 * exponent + 4 * colength != top:
        raise InvariantViolation(
            f"top-degree identity failed: 2*{exponent} + 4*{colength} != {top}"
        )
    codim = Lsq + 1 - norm.window
    return MotivicShift(colength, exponent, top, codim, 1 + 2 * codim)


@dataclass(frozen=True)
class VirtualBettiReport:
    """The full output for one (surface, L, chi).

    ``raw_high`` maps each controlled degree i (min_controlled_degree up
    to top_degree) to b^v_i(M).  ``reflected_low`` is the same data
    reflected through the middle, indexed 0 upwards; it reads as actual
    low-degree Betti numbers only under the smoothness flag.
    ``hodge_diag`` gives h^{p,p} in the reflected presentation;
    off-diagonal Hodge numbers vanish in the window.
    """

    surface: Surface
    L: DivisorClass
    chi: int
    hypotheses: HypothesisReport
    normalization: ChiNormalization
    shift: MotivicShift
    raw_high: dict[int, int]
    reflected_low: dict[int, int]
    hodge_diag: dict[int, int]
    fine_moduli: bool | None
    smoothness_assumed: bool
    strictly_semistable_note: bool

    @property
    def reflected_max_degree(self) -> int:
        return self.shift.top_degree - self.shift.min_controlled_degree


def virtual_betti_table(
    surface: Surface,
    L: DivisorClass,
    chi: int,
    cap: int | None = None,
    chi0: int | None = None,
) -> VirtualBettiReport:
    """Run the whole pipeline for one input.

    ``chi0`` overrides the automatic normalisation (it must be one of the
    valid candidates); the reports for different overrides agree on the
    overlap of their windows, which the test suite exercises.
    """
    report = hypothesis_report(surface, L, chi)
    require_applicable(report)
    norm = normalize_chi(surface, L, chi, report.support_codim)
    if chi0 is not None:
        if chi0 not in norm.candidates:
            raise InapplicableError(
                "normalize_chi", f"chi0 = {chi0} is not among {norm.candidates}"
            )
        w = min(report.support_codim, -chi0, chi0 - surface.intersect(surface.canonical, L))
        norm = ChiNormalization(chi, norm.modulus, norm.candidates, chi0, w)
    shift = motivic_shift(surface, L, norm)

    hilb = hilbert_poincare(surface, shift.colength, cap)
    raw_high: dict[int, int] = {}
    for i in range(shift.min_controlled_degree, shift.top_degree + 1):
        raw_high[i] = hilb.betti(i - 2 * shift.exponent)
    if any(v for i, v in raw_high.items() if i % 2):
        raise InvariantViolation("odd virtual Betti number in the controlled window")

    reflected = {shift.top_degree - i: v for i, v in raw_high.items()}
    hodge = {p: reflected[2 * p] for p in range(0, len(reflected)) if 2 * p in reflected}

    return VirtualBettiReport(
        surface=surface,
        L=L,
        chi=chi,
        hypotheses=report,
        normalization=norm,
        shift=shift,
        raw_high=raw_high,
        reflected_low=reflected,
        hodge_diag=hodge,
        fine_moduli=report.fine_moduli,
        smoothness_assumed=report.fine_moduli is True,
        strictly_semistable_note=report.strictly_semistable_note,
    )


def chi_agreement(
    surface: Surface, L: DivisorClass, chi1: int, chi2: int, cap: int | None = None
) -> tuple[bool, int | None]:
    """Do the reflected tables for chi1 and chi2 agree on the common window?

    Returns (True, None) on agreement, otherwise (False, first degree
    that differs).
    """
    r1 = virtual_betti_table(surface, L, chi1, cap)
    r2 = virtual_betti_table(surface, L, chi2, cap)
    top = min(r1.reflected_max_degree, r2.reflected_max_degree)
    for i in range(0, top + 1):
        if r1.reflected_low[i] != r2.reflected_low[i]:
            return False, i
    return True, None
