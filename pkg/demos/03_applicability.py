"""
Which hypotheses hold where
===========================

The codimension criterion for the non-integral-support locus needs L to
be K-negative with an integral member and L^2 >= 0, plus one of four
conditions on the multiplicity.  The motivic comparison adds a side
condition on L + K.  This sweep shows the dispatch in action.
"""

from sheafbetti import F0, F1, P2, DivisorClass, hypothesis_report

H = DivisorClass.of

print("plane, d = 1..12: condition fired, guaranteed codimension, adjoint side")
for d in range(1, 13):
    rep = hypothesis_report(P2, H(d), -1)
    print(f"  d={d:2d}: condition {rep.condition},"
          f" rho = {rep.support_codim},"
          f" applicable = {rep.motivic_applicable}"
          f"   [{rep.condition_evidence}]")

# the four plane conditions in order: n <= 2 at d = 2, twice-a-prime at
# d = 4, prime-with-rational-part at d = 5, ample pairing at d = 9

print("ruled classes: some pass, some are refused with a reason")
probes = [
    (F0, (1, 1)), (F0, (0, 1)), (F0, (2, 0)),
    (F1, (2, 2)), (F1, (4, 4)), (F1, (2, 1)), (F1, (1, 0)),
]
for surface, coords in probes:
    rep = hypothesis_report(surface, H(*coords), -1)
    tag = f"rho = {rep.support_codim}" if rep.support_codim is not None else "refused"
    print(f"  {surface.format_class(rep.L):>7s} on {surface.name}: {tag}"
          f"   [{rep.condition_evidence}]")

# flags that depend on chi: fineness and rationality on the plane
print("d = 8 across chi:")
for chi in (1, 0, -3, -6, -7):
    rep = hypothesis_report(P2, H(8), chi)
    print(f"  chi={chi:3d}: fine = {rep.fine_moduli},"
          f" rationality = {rep.rationality},"
          f" strictly-semistable note = {rep.strictly_semistable_note}")
