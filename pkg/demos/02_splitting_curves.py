"""
Minimal cross terms of curve splittings
=======================================

How cheaply can a class break into effective pieces?  The minimum of
sum_{i<j} L_i . L_j over all splittings controls the codimension of the
locus of sheaves with reducible or non-reduced support.
"""

from sheafbetti import F0, F1, P2, DivisorClass, decompositions, min_cross_term

H = DivisorClass.of

# on the plane the answer is d - 1, achieved by peeling off one line
for d in range(2, 9):
    m = min_cross_term(P2, H(d))
    witness = " + ".join(P2.format_class(p) for p in m.witness)
    print(f"s({d}H) = {m.value}   via {witness}")

# a class with no splitting at all: the minimum is infinite
m = min_cross_term(P2, H(1))
print("s(1H) =", m.json_value())

# every splitting of 4H, with its cross term
print("all splittings of 4H:")
for parts in decompositions(P2, H(4)):
    degs = sorted((p.coords[0] for p in parts), reverse=True)
    total = sum(a * b for i, a in enumerate(degs) for b in degs[i + 1:])
    print("  4 =", " + ".join(map(str, degs)), "  cross term", total)

# ruled surfaces: the minimum is min{e + (b - ae), a} on the published
# range, and can go negative when two copies of the section split off
for surface, coords in ((F0, (2, 4)), (F0, (3, 3)), (F1, (2, 2)),
                        (F1, (4, 6)), (F1, (2, 0))):
    L = H(*coords)
    m = min_cross_term(surface, L)
    witness = " + ".join(surface.format_class(p) for p in m.witness)
    print(f"s({surface.format_class(L)}) on {surface.name} = {m.value}   via {witness}")
