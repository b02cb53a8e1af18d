"""Weyl reduction in action.

Reduce a few classes to pseudostandard form (sorted multiplicities,
d >= m1+m2+m3), replay the recorded reflection trace, and classify the
standard classes caught in the nonpositive region: they are all multiples
of H - E1 or of 3H - E1 - ... - E9.
"""

from fatpoints import (
    BlowupContext, DivisorClass, canonical_class, pair,
    reduce_class, standard_class_kind,
)

ctx = BlowupContext(2, 9)

examples = [
    DivisorClass(ctx, 2, (1, 1, 1, 0, 0, 0, 0, 0, 0)),
    DivisorClass(ctx, 5, (3, 2, 2, 2, 1, 0, 0, 0, 0)),
    DivisorClass(ctx, 1, (1, 1, 1, 1, 0, 0, 0, 0, 0)),   # degree goes negative
    DivisorClass(ctx, 7, (3, 3, 3, 2, 2, 1, 1, 1, 0)),
]

for D in examples:
    rep = reduce_class(D)
    assert rep.replay() == rep.result, "trace must reproduce the result"
    print(f"{D.text()}")
    print(f"  -> {rep.result.text()}")
    print(f"     status {rep.status.value}, {len(rep.trace)} reflections\n")

print("Standard classes with D^2 <= 0 and D.K <= 0 (small scan):")
K = canonical_class(ctx)
found = []
for d in range(0, 7):
    for top in range(0, d + 1):
        for n_nine in (0, 1):
            m = (top,) + (0,) * 8 if not n_nine else (d // 3,) * 9
            try:
                D = DivisorClass(ctx, d, m)
                if pair(D, D) <= 0 and pair(D, K) <= 0 and sorted(m, reverse=True) == list(m):
                    kind = standard_class_kind(D)
                    found.append((D.text(), kind.value))
            except ValueError:
                pass
unique = sorted(set(found))
for text, kind in unique[:12]:
    print(f"  {kind:24} {text}")
