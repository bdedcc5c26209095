"""
Roots, nefness and base points
==============================

(-2)-classes and isotropic classes are solved exactly by factoring the
quadratic form 2x((g-1)x + dy). No search radius is involved.
"""

from k3clifford import (
    DivisorClass,
    E_CLASS,
    check_L_bpf,
    check_L_nef,
    h_profile,
    isotropic_rays,
    make_surface,
    restriction_profile,
    root_classes,
)

# roots exist exactly when d divides g
for g, d in [(6, 3), (5, 3), (12, 4)]:
    S = make_surface(g, d)
    print(f"g={g}, d={d}: roots {[str(B) for B in root_classes(S)]}")

S = make_surface(6, 3)
nef = check_L_nef(S)
print("L nef:", nef.holds, "evidence (root, side, B.L, B.E):", nef.evidence)

bpf = check_L_bpf(S)
print("L base point free:", bpf.holds)
for line in bpf.branches:
    print("   ", line)

print("isotropic rays:", [str(B) for B in isotropic_rays(S)])

#############################################################################
# The cohomology ledger states only what its rules force.

S = make_surface(9, 4)
for D in [DivisorClass(0, 0), DivisorClass(0, 3), DivisorClass(1, 0), DivisorClass(1, -1), DivisorClass(-1, 1)]:
    p = h_profile(S, D)
    print(f"{D}: h0 {p.h0}, h1 {p.h1}, h2 {p.h2}   [{p.rule}]")

rp = restriction_profile(S, E_CLASS)
print("O_C(E): h0", rp.h0, "h1", rp.h1, "degree", rp.degree)
for r in rp.rules:
    print("   ", r)
