"""
Upper vs. lower bounds for acyclic sets by digirth
==================================================

All arithmetic is exact rationals. The proved ceiling (attained by the
construction) is compared with the cited lower bounds per digirth; at
digirth 8 the lower bound already clears 3n/5 everywhere.
"""

from fractions import Fraction

from planacyclic import construct, gr_bound, table1_bound, theorem_bound

print(f"{'n':>4} {'g':>3} {'lower':>8} {'upper':>6}")
for g in (3, 4, 5, 6, 8):
    for n in (g, 12, 30, 100):
        low = table1_bound(n, g)
        up = theorem_bound(n, g)
        assert low <= up
        print(f"{n:>4} {g:>3} {str(low):>8} {up:>6}")

# The two-part digirth bound, and the 3n/5 comparison at g = 8.
print("\ngr_bound(n, 8) vs 3n/5:")
for n in (8, 40, 1000, 10 ** 6):
    value = gr_bound(n, 8)
    assert value >= Fraction(3 * n, 5)
    print(f"  n={n}: {value} >= {Fraction(3 * n, 5)}")

# The constructions sit exactly on the upper bound.
for g, f in [(3, 5), (4, 3), (6, 2)]:
    cert = construct(g, f)
    print(f"construct(g={g}, f={f}): n={cert.digraph.n}, "
          f"MAS claim {cert.claimed_max_acyclic} "
          f"= theorem_bound {theorem_bound(cert.digraph.n, g)}")
