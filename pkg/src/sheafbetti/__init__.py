"""Exact invariants of moduli of one-dimensional sheaves on rational surfaces.

The package computes, over the projective plane and the Hirzebruch
surfaces F_0 and F_1, everything needed to write down the virtual Betti
and Hodge numbers of the moduli space of semistable one-dimensional
sheaves with support class L and Euler characteristic chi:

* lattice arithmetic on the Picard group (``surfaces``),
* minimal cross terms of effective decompositions (``decompose``),
* applicability checks for the codimension and adjoint-side hypotheses
  (``hypotheses``),
* Betti numbers of Hilbert schemes of points via an exact two-variable
  product expansion (``powerseries``, ``hilbert``),
* the chi-normalization, degree shift and reflected tables of the
  moduli space itself (``motivic``),
* dimension bounds on the excluded strata and an audit that the claimed
  codimension is consistent with them (``bounds``).

All arithmetic is exact integer arithmetic.  Every geometric statement
surfaced here (irreducibility, fineness, rationality, emptiness) is the
outcome of a lattice-arithmetic criterion, not a verification of the
geometry itself.
"""

from .bounds import (
    BoundEntry,
    BoundReport,
    audit_codimension,
    hilbert_strata_bounds,
    strata_bounds,
)
from .decompose import (
    INFINITE,
    CrossTermMin,
    cross_term,
    cross_term_positive,
    decompositions,
    min_cross_term,
    min_cross_term_integral,
)
from .errors import (
    EffectivityError,
    InapplicableError,
    InvariantViolation,
    LatticeError,
    SeriesError,
    SheafBettiError,
    UnsupportedSurfaceError,
    ZeroClassError,
)
from .hilbert import (
    DEFAULT_CAP,
    PoincarePolynomial,
    hilbert_euler,
    hilbert_hodge_diagonal,
    hilbert_poincare,
    resolve_cap,
)
from .hypotheses import (
    HypothesisReport,
    ample_pairing_criterion,
    codim_condition,
    fine_moduli,
    hypothesis_report,
    irreducibility,
    nonintegral_support_codim,
    rationality,
    require_applicable,
)
from .motivic import (
    ChiNormalization,
    MotivicShift,
    VirtualBettiReport,
    chi_agreement,
    motivic_shift,
    normalize_chi,
    virtual_betti_table,
)
from .surfaces import (
    F0,
    F1,
    P2,
    DivisorClass,
    Surface,
    hirzebruch,
    projective_plane,
    surface_by_name,
)

__version__ = "0.1.0"

__all__ = [
    "BoundEntry",
    "BoundReport",
    "ChiNormalization",
    "CrossTermMin",
    "DEFAULT_CAP",
    "DivisorClass",
    "EffectivityError",
    "F0",
    "F1",
    "HypothesisReport",
    "INFINITE",
    "InapplicableError",
    "InvariantViolation",
    "LatticeError",
    "MotivicShift",
    "P2",
    "PoincarePolynomial",
    "SeriesError",
    "SheafBettiError",
    "Surface",
    "UnsupportedSurfaceError",
    "VirtualBettiReport",
    "ZeroClassError",
    "ample_pairing_criterion",
    "audit_codimension",
    "chi_agreement",
    "codim_condition",
    "cross_term",
    "cross_term_positive",
    "decompositions",
    "fine_moduli",
    "hilbert_euler",
    "hilbert_hodge_diagonal",
    "hilbert_poincare",
    "hilbert_strata_bounds",
    "hirzebruch",
    "hypothesis_report",
    "irreducibility",
    "min_cross_term",
    "min_cross_term_integral",
    "motivic_shift",
    "nonintegral_support_codim",
    "normalize_chi",
    "projective_plane",
    "rationality",
    "require_applicable",
    "resolve_cap",
    "strata_bounds",
    "surface_by_name",
    "virtual_betti_table",
    "__version__",
]
