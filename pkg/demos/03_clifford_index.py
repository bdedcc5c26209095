"""
Clifford index by elimination and by brute force
================================================

The candidate set comes from a short elimination. The brute-force oracle
scans a box and keeps only classes the cohomology ledger certifies. The two
must agree.
"""

from k3clifford import brute_force_cliff, candidate_classes, make_surface, min_cliff, safe_radius

S = make_surface(9, 4)
print("candidates:", [str(D) for D in candidate_classes(S)])

cert = min_cliff(S)
print("Cliff C =", cert.min_cliff, " gon C =", cert.gonality)
print("witnesses:", [str(D) for D in cert.witnesses])
for line in cert.checks:
    print("   ", line)

xs, ys = safe_radius(S)
for scale in (1, 2, 4):
    res = brute_force_cliff(S, scale * xs, scale * ys)
    print(f"box x{scale}: min {res.minimum}, survivors {[str(D) for D in res.survivors]}, {res.census}")

# genus 3 is handled by convention, not by the minimum
for d in (2, 3):
    c = min_cliff(make_surface(3, d))
    print(f"g=3, d={d}: Cliff {c.min_cliff} ({c.convention_branch}), gonality {c.gonality}")
