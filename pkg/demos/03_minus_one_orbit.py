"""The orbit of the exceptional classes.

Every class in the Weyl orbit of E_r satisfies C^2 = C.K = -1; up to a
degree bound the orbit is finite and matches the classical counts
(exceptional classes, lines through two points, conics through five,
degree-3 classes with a double point, ...).
"""

from collections import Counter

from fatpoints import BlowupContext, canonical_class, minus_one_orbit, pair

for r in (3, 6, 9):
    ctx = BlowupContext(2, r)
    K = canonical_class(ctx)
    orbit = minus_one_orbit(ctx, degree_bound=3)
    assert all(pair(C, C) == -1 and pair(C, K) == -1 for C in orbit)
    by_degree = Counter(int(C.d) for C in orbit)
    print(f"r = {r}: {len(orbit):4d} classes of degree <= 3, "
          f"by degree {dict(sorted(by_degree.items()))}")

ctx = BlowupContext(2, 9)
orbit = minus_one_orbit(ctx, degree_bound=5)
print(f"\nr = 9, degree <= 5: {len(orbit)} classes")
print("a degree-3 member:",
      next(C.text() for C in orbit if C.d == 3))
print("a degree-5 member:",
      next(C.text() for C in orbit if C.d == 5))
