"""
Picard lattices of the three surfaces
=====================================

Pairings, Euler characteristics and genus formulas on the plane and the
two Hirzebruch surfaces, straight from the intersection form.
"""

from sheafbetti import F0, F1, P2, DivisorClass

H = DivisorClass.of

# the plane: rank-1 lattice generated by the line class
print("P2: K =", P2.canonical, " e(X) =", P2.euler_number)
for d in range(1, 6):
    L = H(d)
    print(f"  L = {P2.format_class(L)}: L^2 = {P2.self_intersection(L)},"
          f" chi = {P2.euler_char(L)}, genus = {P2.genus(L)}")

# ruled surfaces: basis sigma (section) and f (fibre), sigma^2 = -e
for surface in (F0, F1):
    print(f"{surface.name}: K = {surface.canonical}, sigma^2 = {-surface.e}")
    for coords in ((1, 0), (0, 1), (1, 1), (2, 3)):
        L = H(*coords)
        print(f"  L = {surface.format_class(L)}: L^2 = {surface.self_intersection(L)},"
              f" chi = {surface.euler_char(L)}, genus = {surface.genus(L)}")

# the genus drops to 0 exactly on the rational classes
print("rational classes on F1 with a + b <= 4:")
for a in range(0, 5):
    for b in range(0, 5 - a):
        L = H(a, b)
        if not L.is_zero and F1.genus(L) == 0:
            print(" ", F1.format_class(L))

# integral members: which systems contain an irreducible curve
probes = [(F0, (2, 0)), (F0, (2, 2)), (F1, (2, 1)), (F1, (2, 2)), (F1, (1, 7))]
for surface, coords in probes:
    L = H(*coords)
    print(f"|{surface.format_class(L)}| on {surface.name} has integral member:",
          surface.has_integral_member(L))
