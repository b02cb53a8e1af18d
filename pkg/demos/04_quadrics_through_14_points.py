"""Multiples of the quadric through 14 general points of P^4.

The class D = 2H - sum(E_i) has exactly one section (the quadric through
the points).  Its square and cube survive although the virtual dimension
is -1 -- the systems 2D and 3D are special -- while 4D is non-special of
dimension 4 and all later multiples stay non-special.  The table is
computed by exact interpolation ranks over F_65537 at random points.
"""

from fatpoints import p4_quadric_table

rows = p4_quadric_table(prime=65537, seeds=(1, 2, 3), m_max=6)

print(f"{'m':>2} {'vdim':>5} {'edim':>5} {'h0':>4} {'dim|mD|':>8} {'special':>8}")
for row in rows:
    dim = row["h0"] - 1
    print(f"{row['m']:>2} {row['vdim']:>5} {row['edim']:>5} {row['h0']:>4} "
          f"{dim:>8} {str(row['special']):>8}")

assert [r["vdim"] for r in rows] == [0, -1, -1, 4, 20, 55]
assert rows[0]["h0"] == 1 and rows[3]["h0"] == 5
assert [r["special"] for r in rows] == [False, True, True, False, False, False]
print("\ntable verified")
