"""
Auditing the claimed codimension
================================

Every published stratum bound, evaluated and compared against the
claimed codimension of the bad locus.  Bounds that cover no stratum for
the given class are reported but kept out of the verdict.
"""

from sheafbetti import P2, DivisorClass, hilbert_strata_bounds, strata_bounds

H = DivisorClass.of

for d in (4, 7, 9, 10, 12):
    rep = strata_bounds(P2, H(d))
    print(f"d = {d}: ambient stack {rep.ambient_stack}, claimed <= {rep.claimed}")
    for e in rep.entries:
        value = "empty" if e.value is None else e.value
        tag = "needed" if e.needed else ("info" if e.applicable else "off")
        print(f"   {e.name:30s} {value!s:>6s}  [{tag}]")
    print("   verdict:", "PASS" if rep.passed else "FAIL")

# the d = 10 case is the instructive one: the crude rank-3 fibre bound
# evaluates above the claim, but no positive-genus stratum with k >= 3
# exists, so nothing relies on it

# the Hilbert-scheme side of the comparison for the reference case
rep = hilbert_strata_bounds(P2, H(8), chi0=-7, support_codim=7)
print("hilbert side, d = 8, chi0 = -7:")
for e in rep.entries:
    print(f"   {e.name:30s} {e.value!s:>6s}  applicable={e.applicable}")
