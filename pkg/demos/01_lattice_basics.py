"""
The Picard lattice ZL + ZE
==========================

A surface model is fixed by a genus g and a pencil degree d. Everything else
is integer arithmetic with the Gram matrix [[2(g-1), d], [d, 0]].
"""

from k3clifford import DivisorClass, E_CLASS, L_CLASS, chi, make_surface, pair, self_int

S = make_surface(7, 4)
print("Gram matrix:", S.gram)
print("determinant:", S.determinant, "(hyperbolic, signature (1,1))")

# classes are coordinate pairs in the basis (L, E)
LmE = L_CLASS - E_CLASS
print("(L-E)^2 =", self_int(S, LmE))
print("(L-E).L =", pair(S, LmE, L_CLASS))

# Riemann-Roch on a K3 surface: chi(D) = D^2/2 + 2
print("chi(L-E) =", chi(S, LmE), "= g + 1 - d =", S.genus + 1 - S.degree)

# multiples of the elliptic class all have chi = 2
for y in range(1, 5):
    print(f"chi({y}E) =", chi(S, DivisorClass(0, y)))

# the imported geometric facts travel with the model
for a in S.assumptions:
    print("assumed:", a)
