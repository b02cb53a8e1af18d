"""Position-induced speciality on ten points of a plane cubic.

Put ten points on a smooth cubic so that D = 10H - 3 sum(E_i) restricts to
a nontrivial 2-torsion class on the curve.  Then h^1(nD) alternates with
the parity of n: the cubic sits in the base locus of the odd multiples and
frees itself from the even ones.  At general (unconstrained) points the
same class has h^1 = 0 for every n -- the speciality is entirely a
position phenomenon.
"""

from fatpoints import (
    BlowupContext, DivisorClass, linear_system_dimension,
    sample_cubic_torsion, torsion_parity_table,
)

rows = torsion_parity_table(prime=65537, curve_seeds=(1, 2), n_max=4)
print(f"{'seed':>4} {'curve':>16} {'n':>2} {'vdim':>4} {'h0':>4} {'h1':>3}")
for row in rows:
    print(f"{row['curve_seed']:>4} {str(row['curve']):>16} {row['n']:>2} "
          f"{row['vdim']:>4} {row['h0']:>4} {row['h1']:>3}")
assert [r["h1"] for r in rows] == [0, 1, 0, 1] * 2
print("parity verified over two distinct curves")

ctx = BlowupContext(2, 10)
D = DivisorClass(ctx, 10, (3,) * 10)
torsion = linear_system_dimension(2 * D, config=sample_cubic_torsion(65537, seed=1))
general = linear_system_dimension(2 * D, prime=65537, seeds=(1, 2))
print(f"\nh0(2D): {torsion.h0} on the cubic vs {general.h0} at general points")
assert torsion.h0 > general.h0
