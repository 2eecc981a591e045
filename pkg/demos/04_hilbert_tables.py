"""
Betti numbers of Hilbert schemes of points
==========================================

The two-variable product expansion gives every Betti table at once; each
column stabilises once the number of points is large enough.
"""

from sheafbetti import F0, P2, hilbert_euler, hilbert_poincare

# tables for the plane up to 6 points
print("Hilb^n(P2):")
for n in range(7):
    print(f"  n={n}:", hilbert_poincare(P2, n).coeffs)

# the even columns b_0, b_2, b_4, ... down the n axis: constant once
# n >= 2i (and one short of the limit at n = 2i - 1)
print("column b_{2i}(Hilb^n(P2)) for i = 0..5, n = 0..12:")
for i in range(6):
    col = [hilbert_poincare(P2, n).betti(2 * i) for n in range(13)]
    print(f"  i={i}:", col)

# Euler numbers against the classical partition-style count
print("e(Hilb^n), n = 0..10:")
print("  P2 :", [hilbert_euler(P2, n) for n in range(11)])
print("  F_e:", [hilbert_euler(F0, n) for n in range(11)])

# duality check: the table reads the same from both ends
poly = hilbert_poincare(F0, 4)
print("Hilb^4(F0) palindromic:", poly.is_palindromic())
print("  table:", poly.coeffs)
