"""Applicability checks for the moduli-of-sheaves pipeline.

Fix a surface X, an effective class L and an Euler characteristic chi,
and write L = n L' with L' primitive.  M(L, chi) denotes the moduli space
of semistable one-dimensional sheaves with support class L.  This module
decides, by pure lattice arithmetic, which of the published criteria
apply to (L, chi):

* the codimension criterion for the locus of sheaves with non-integral
  support, which requires L to be K-negative with |L| containing an
  integral curve and L^2 >= 0, plus one of four conditions on n and the
  primitive part (small multiplicity, prime multiplicity with a genus-0
  or memberless primitive part, twice-prime multiplicity, or an ample
  class pairing non-positively below L);
* the guaranteed codimension ``support_codim`` of that locus, from the
  published tables: on the plane d-1 when d is prime or twice a prime
  and 7 otherwise; on F_e with a > 0, b > a e the value
  min{b - (a-1)e, a}, capped by 7 unless a is prime or gcd(a, b) <= 2;
* irreducibility of M(L, chi) (separate criteria for primitive and
  non-primitive L);
* the side condition on the adjoint class L + K needed by the motivic
  comparison: either L + K <= 0 or L + K effective with a non-negative
  minimal cross term;
* fine moduli (plane only: gcd(d, chi) = 1) and rationality flags.

Everything geometric is surfaced as a flag with the arithmetic evidence
that triggered it; nothing here verifies the geometry itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .decompose import INFINITE, CrossTermMin, min_cross_term
from .errors import EffectivityError, InapplicableError, InvariantViolation
from .surfaces import DivisorClass, Surface

__all__ = [
    "HypothesisReport",
    "codim_condition",
    "nonintegral_support_codim",
    "irreducibility",
    "fine_moduli",
    "rationality",
    "hypothesis_report",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % k for k in range(2, int(math.isqrt(n)) + 1))


def ample_pairing_criterion(surface: Surface, L: DivisorClass) -> bool:
    """Existence of an ample A with (A + K).L'' <= 0 for all 0 < L'' <= L
    and (A + K).L < 0.

    Decided from the published example list: on the plane A = H works for
    every effective L; on F_e the criterion holds for a >= 0, b > 0.
    """
    if surface.kind == "p2":
        return surface.is_effective(L) and not L.is_zero
    a, b = L.coords
    return a >= 0 and b > 0


def codim_condition(surface: Surface, L: DivisorClass) -> tuple[int | None, str]:
    """First matching applicability condition (1..4) for the codimension
    criterion, or (None, reason) naming the failed hypothesis.

    The geometric side used by conditions (2) and (3) for a class M is
    "|M| has no integral member, or the arithmetic genus of M is 0".
    """
    if not surface.is_effective(L) or L.is_zero:
        return None, "L is not effective and nonzero"
    if not surface.is_canonical_negative(L):
        return None, "L is not K-negative"
    if not surface.has_integral_member(L):
        return None, "|L| has no integral member"
    if surface.self_intersection(L) < 0:
        return None, "L^2 < 0"

    n, L0 = surface.primitive_part(L)

    def geometric_side(M: DivisorClass) -> bool:
        return not surface.has_integral_member(M) or surface.genus(M) == 0

    if n <= 2:
        return 1, f"multiplicity n = {n}"
    if _is_prime(n) and geometric_side(L0):
        return 2, f"n = {n} prime and the primitive part has genus 0 or no integral member"
    if n % 2 == 0 and _is_prime(n // 2) and geometric_side(L0) and geometric_side(2 * L0):
        return 3, f"n = 2*{n // 2} with both L' and 2L' of genus 0 or memberless"
    if ample_pairing_criterion(surface, L):
        return 4, "ample pairing criterion holds"
    return None, "no applicability condition matched"


def nonintegral_support_codim(surface: Surface, L: DivisorClass) -> int:
    """Guaranteed codimension of the non-integral-support locus in M(L, chi).

    Defined exactly when ``codim_condition`` matches.  The published F_e
    table assumes a > 0 and b > a e; the classes that pass the hypotheses
    outside that range are the ruling pencils (every member of |L| is
    integral, so the locus is empty and we report the generic cap 7) and
    the boundary b = a e on F_1, where the same formula stays positive
    and is used unchanged.
    """
    cond, reason = codim_condition(surface, L)
    if cond is None:
        raise InapplicableError("codim_condition", reason)
    if surface.kind == "p2":
        d = L.coords[0]
        if _is_prime(d) or (d % 2 == 0 and _is_prime(d // 2)):
            return d - 1
        return 7
    a, b = L.coords
    e = surface.e
    if surface.all_members_integral(L):
        return 7
    first = min(b - (a - 1) * e, a)
    if _is_prime(a) or math.gcd(a, b) in (1, 2):
        value = first
    else:
        value = min(7, first)
    if value <= 0:
        raise InvariantViolation(f"non-positive support codimension {value} for {L}")
    return value


def irreducibility(surface: Surface, L: DivisorClass) -> tuple[str, str]:
    """Is M(L, chi) guaranteed irreducible?  -> (verdict, evidence).

    Verdicts: "primitive" (criterion for primitive classes), "multiple"
    (criteria for n >= 2: n = 2, or n prime with a genus-0 or memberless
    primitive part, or n = 2p with both L' and 2L' on the geometric
    side), or "unknown".  The flag reports which criterion fired, not a
    proof.
    """
    if not surface.is_effective(L) or L.is_zero:
        return "unknown", "L is not effective and nonzero"
    if not surface.is_canonical_negative(L):
        return "unknown", "L is not K-negative"
    if not surface.has_integral_member(L):
        return "unknown", "|L| has no integral member"
    n, L0 = surface.primitive_part(L)
    if n == 1:
        return "primitive", "L is primitive"
    if surface.self_intersection(L) < 0:
        return "unknown", "L^2 < 0"

    def geometric_side(M: DivisorClass) -> bool:
        return not surface.has_integral_member(M) or surface.genus(M) == 0

    if n == 2:
        return "multiple", "multiplicity n = 2"
    if _is_prime(n) and geometric_side(L0):
        return "multiple", f"n = {n} prime with genus-0 or memberless primitive part"
    if n % 2 == 0 and _is_prime(n // 2) and geometric_side(L0) and geometric_side(2 * L0):
        return "multiple", f"n = 2*{n // 2} with both L' and 2L' on the geometric side"
    return "unknown", "no irreducibility criterion matched"


def fine_moduli(surface: Surface, L: DivisorClass, chi: int) -> bool | None:
    """Plane: gcd(d, chi) = 1 decides fine moduli.  Elsewhere: None
    (no criterion available, not a negative answer)."""
    surface.check(L)
    if surface.kind != "p2":
        return None
    return math.gcd(L.coords[0], abs(chi)) == 1


def rationality(surface: Surface, L: DivisorClass, chi: int) -> str:
    """"rational" on the plane when chi is congruent to +-1 mod d,
    "stably_rational" when the fine-moduli criterion holds, else
    "unknown"."""
    if surface.kind == "p2":
        d = L.coords[0]
        if d >= 1 and ((chi - 1) % d == 0 or (chi + 1) % d == 0):
            return "rational"
    if fine_moduli(surface, L, chi) is True:
        return "stably_rational"
    return "unknown"


@dataclass(frozen=True)
class HypothesisReport:
    """Everything the pipeline needs to know about (surface, L, chi).

    ``support_codim`` is present exactly when ``condition`` is, and
    ``motivic_applicable`` additionally requires the adjoint side
    condition.  ``moduli_empty`` records the one situation where the
    moduli space itself is empty: L^2 < 0 with L non-primitive (for
    primitive L of negative square the space is fine, merely outside the
    scope of the codimension criterion).
    """

    surface: Surface
    L: DivisorClass
    chi: int | None
    effective: bool
    kx_negative: bool
    has_integral: bool
    self_intersection: int
    multiplicity: int | None
    primitive_part: DivisorClass | None
    cross_min: CrossTermMin | None
    adjoint: DivisorClass
    adjoint_nonpositive: bool
    cross_min_adjoint: CrossTermMin | None
    condition: int | None
    condition_evidence: str
    support_codim: int | None
    moduli_empty: bool
    motivic_applicable: bool
    irreducible: str
    irreducible_evidence: str
    fine_moduli: bool | None
    rationality: str
    strictly_semistable_note: bool


def hypothesis_report(
    surface: Surface, L: DivisorClass, chi: int | None = None
) -> HypothesisReport:
    """Assemble the full report.  chi may be omitted; the chi-dependent
    flags then stay undecided."""
    surface.check(L)
    effective = surface.is_effective(L) and not L.is_zero
    if effective:
        kx_negative = surface.is_canonical_negative(L)
        has_integral = surface.has_integral_member(L)
        cross = min_cross_term(surface, L)
        n, L0 = surface.primitive_part(L)
    else:
        kx_negative = False
        has_integral = False
        cross = None
        n, L0 = (None, None)
    Lsq = surface.self_intersection(L)

    K = surface.canonical
    adjoint = L + K
    adjoint_nonpositive = surface.is_effective(-adjoint)
    if surface.is_effective(adjoint) and not adjoint.is_zero:
        cross_adj = min_cross_term(surface, adjoint)
    else:
        cross_adj = None

    cond, evidence = codim_condition(surface, L)
    codim = nonintegral_support_codim(surface, L) if cond is not None else None

    # adjoint side condition of the motivic comparison: L + K <= 0, or
    # L + K effective with non-negative minimal cross term (an infinite
    # minimum counts as non-negative)
    if adjoint_nonpositive:
        adjoint_ok = True
    elif surface.is_effective(adjoint):
        adjoint_ok = adjoint.is_zero or cross_adj.value >= 0
    else:
        adjoint_ok = False

    irr, irr_evidence = irreducibility(surface, L)
    if chi is not None:
        fine = fine_moduli(surface, L, chi)
        rat = rationality(surface, L, chi)
        ss_note = surface.kind == "p2" and fine is False
    else:
        fine, rat, ss_note = None, "unknown", False

    return HypothesisReport(
        surface=surface,
        L=L,
        chi=chi,
        effective=effective,
        kx_negative=kx_negative,
        has_integral=has_integral,
        self_intersection=Lsq,
        multiplicity=n,
        primitive_part=L0,
        cross_min=cross,
        adjoint=adjoint,
        adjoint_nonpositive=adjoint_nonpositive,
        cross_min_adjoint=cross_adj,
        condition=cond,
        condition_evidence=evidence,
        support_codim=codim,
        moduli_empty=effective and Lsq < 0 and n is not None and n >= 2,
        motivic_applicable=cond is not None and adjoint_ok,
        irreducible=irr,
        irreducible_evidence=irr_evidence,
        fine_moduli=fine,
        rationality=rat,
        strictly_semistable_note=ss_note,
    )


def require_applicable(report: HypothesisReport) -> None:
    """Raise a structured refusal naming the first failed hypothesis."""
    if report.motivic_applicable:
        return
    if report.condition is None:
        raise InapplicableError("codim_condition", report.condition_evidence)
    raise InapplicableError(
        "adjoint_side",
        f"adjoint class {report.adjoint} is neither <= 0 nor effective "
        "with non-negative minimal cross term",
    )
