"""Tour of the Picard-lattice primitives.

Build divisor classes on blown-up projective spaces, pair them, and watch
the two faces of the virtual dimension (binomial count of interpolation
conditions vs. the surface quadratic form) agree on the nose.
"""

from fatpoints import (
    BlowupContext, DivisorClass, arithmetic_genus, canonical_class,
    hyperplane, minus_k, pair, vdim, vdim_quadratic,
)

surface = BlowupContext(2, 10)
D = DivisorClass(surface, 10, (3,) * 10)
K = canonical_class(surface)

print(f"On {surface}: D = {D.text()}")
print(f"  D^2   = {pair(D, D)}")
print(f"  D.K   = {pair(D, K)}")
print(f"  -K_10 = {minus_k(surface).text()},  genus {arithmetic_genus(minus_k(surface))}")

print("\nVirtual dimension two ways (multiples of D):")
for n in range(1, 5):
    nd = n * D
    print(f"  v({n}D): binomial {vdim(nd):>3}   quadratic {vdim_quadratic(nd)}")

fourfold = BlowupContext(4, 14)
Q = DivisorClass(fourfold, 2, (1,) * 14)
print(f"\nOn {fourfold}: quadric class {Q.text()[:28]}...")
print("  vdim of mQ for m = 1..4:", [vdim(m * Q) for m in range(1, 5)])

print("\nH on two points: positive cone membership and genus budget")
two = BlowupContext(2, 2)
H = hyperplane(two)
print(f"  H^2 = {pair(H, H)},  genus of H = {arithmetic_genus(H)}")
print(f"  genus of H - E1 - E2 = "
      f"{arithmetic_genus(DivisorClass(two, 1, (1, 1)))}")
