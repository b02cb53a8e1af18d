"""Null classes on ten points with quadratic-irrational multiplicities.

Any 8-point class B with 2 B^2 > (B.K)^2 extends to a class on ten points
with D^2 = D.K = 0, at the price of multiplicities a +- sqrt(b) living in
a real quadratic field.  The identities hold symbolically in Q(sqrt(b));
when b is a perfect square the family degenerates to an integer class,
which then clears the nef screening.
"""

from fractions import Fraction

from fatpoints import BlowupContext, DivisorClass, null_class_extension, screen_nef_surface

ctx = BlowupContext(2, 8)

B = DivisorClass(ctx, 6, (2,) * 8)
report = null_class_extension(B)
print(f"B = {B.text()}")
print(f"  a = {report.shift}, b = {report.radicand}")
print(f"  extra multiplicities: {report.coefficient_plus} and {report.coefficient_minus}")
print(f"  D^2  = {report.self_intersection}")
print(f"  D.K  = {report.canonical_pairing}")
print(f"  integer degenerate instance: {report.integer_class.text()}")
print("  nef screen at bound 10:",
      screen_nef_surface(report.integer_class, 10).passed)

B = DivisorClass(ctx, 8, (3, 3, 3, 3, 3, 2, 2, 2))
report = null_class_extension(B)
print(f"\nB = {B.text()}")
print(f"  a = {report.shift}, b = {report.radicand} (irrational sqrt)")
print(f"  D^2 = {report.self_intersection}, D.K = {report.canonical_pairing}")

B = DivisorClass(ctx, Fraction(19, 2), (3,) * 8)
report = null_class_extension(B)
print(f"\nB = {B.text()}")
print(f"  a = {report.shift}, b = {report.radicand}")
print(f"  D^2 = {report.self_intersection}, D.K = {report.canonical_pairing}")
